use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context as _, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use genassoc::cluster::{
    f_polynomial, polynomials_to_json, separation_specialize, tropical_f,
};
use genassoc::geometry::linalg::{parse_q, Q};
use genassoc::geometry::{polytope_from_clusters, section};
use genassoc::verify::{
    check_compatibility, check_degenerate, check_oracle, check_separation, check_theorem_one,
    check_theorem_two, check_universal, run_kind, Ceilings, CheckKind, Context, Report, Status,
};
use genassoc::{CTuple, DynkinQuiver, DynkinType, IceQuiver, Index, TranslationWindow, VPolytope};

#[derive(Parser)]
#[command(name = "genassoc", version, about = "Generalized associahedra from deformed mesh relations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dump the translation window: indices, dimension vectors, g-vectors, slices.
    Arq(Common),
    /// Print the g-vector of every index.
    Gvectors(Common),
    /// Vertices of the projected polytope for a parameter tuple.
    Polytope(PolytopeArgs),
    /// F-polynomials computed by mutation with principal coefficients.
    Fpoly(Common),
    /// Universal F-polynomials.
    Universal(Common),
    /// Cluster variables for an ice quiver via the separation formula.
    Separation(Common),
    /// Run theorem checks and emit one JSON report per line.
    Verify(VerifyArgs),
}

#[derive(Args, Clone)]
struct Common {
    /// Quiver as arrows ("1->2; 3->2"), JSON, a type name ("D4") or a file path.
    #[arg(long, conflicts_with = "dynkin")]
    quiver: Option<String>,
    /// Standard bipartite quiver of a Dynkin type, e.g. A3.
    #[arg(long = "type", value_name = "TYPE")]
    dynkin: Option<String>,
    /// Restrict output to one index "i,j".
    #[arg(long)]
    alpha: Option<String>,
    /// Ice quiver JSON (or file) for `separation`; principal coefficients by default.
    #[arg(long)]
    ice: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Refuse quivers of larger rank.
    #[arg(long)]
    max_rank: Option<usize>,
}

#[derive(Args)]
struct PolytopeArgs {
    #[command(flatten)]
    common: Common,
    /// "ones", a comma list in I+ order, a JSON object keyed by index, or @file.
    #[arg(long, conflicts_with = "alpha")]
    c: Option<String>,
    /// Also print the full index-coordinate point of every vertex.
    #[arg(long)]
    full: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: Common,
    /// Parameter tuple for th1 and degenerate checks (see `polytope --c`).
    #[arg(long)]
    c: Option<String>,
    /// Checks to run: th1, th2, universal, degenerate, separation, compat, oracle.
    #[arg(long = "check", value_delimiter = ',')]
    checks: Vec<String>,
    /// Run every check over the default parameter grid.
    #[arg(long)]
    all: bool,
    /// Seed for randomized parameter tuples.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random parameter tuples for th1.
    #[arg(long, default_value_t = 5)]
    random: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Off,
}

/// Errors caused by the invocation rather than by a computation.
#[derive(Debug)]
struct InputError(anyhow::Error);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:#}", self.0)
    }
}

impl std::error::Error for InputError {}

fn input<T>(r: Result<T>) -> Result<T> {
    r.map_err(|e| InputError(e).into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<InputError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn dispatch(cmd: Command) -> Result<bool> {
    match cmd {
        Command::Arq(a) => emit_json(&a, cmd_arq(&a)?),
        Command::Gvectors(a) => emit_json(&a, cmd_gvectors(&a)?),
        Command::Polytope(a) => cmd_polytope(&a),
        Command::Fpoly(a) => emit_json(&a, cmd_fpoly(&a, false)?),
        Command::Universal(a) => emit_json(&a, cmd_fpoly(&a, true)?),
        Command::Separation(a) => emit_json(&a, cmd_separation(&a)?),
        Command::Verify(a) => cmd_verify(&a),
    }
}

fn read_arg(text: &str) -> Result<String> {
    if let Some(path) = text.strip_prefix('@') {
        return fs::read_to_string(path).with_context(|| format!("reading {path}"));
    }
    let path = Path::new(text);
    if !text.contains("->") && !text.trim_start().starts_with('{') && path.is_file() {
        return fs::read_to_string(path).with_context(|| format!("reading {text}"));
    }
    Ok(text.to_string())
}

fn load_quiver(a: &Common) -> Result<DynkinQuiver> {
    let q = input((|| {
        let text = match (&a.quiver, &a.dynkin) {
            (Some(q), _) => read_arg(q)?,
            (None, Some(t)) => t.clone(),
            (None, None) => bail!("one of --quiver or --type is required"),
        };
        if let Ok(t) = text.trim().parse::<DynkinType>() {
            return Ok(t.standard_quiver());
        }
        Ok(DynkinQuiver::parse(&text)?)
    })())?;
    if let Some(max) = a.max_rank {
        if q.n() > max {
            return input(Err(anyhow!("rank {} exceeds --max-rank {max}", q.n())));
        }
    }
    Ok(q)
}

fn context(a: &Common) -> Result<Context> {
    let q = load_quiver(a)?;
    let ceilings = match a.max_rank {
        Some(r) => Ceilings::default().capped(r),
        None => Ceilings::default(),
    };
    Ok(Context::new(&q, ceilings)?)
}

fn parse_alpha(w: &TranslationWindow, text: &str) -> Result<usize> {
    input((|| {
        let idx: Index = text.parse().map_err(|e: String| anyhow!(e))?;
        w.position(idx).ok_or_else(|| anyhow!("{idx} is not an index of the window"))
    })())
}

fn parse_iplus_alpha(w: &TranslationWindow, text: &str) -> Result<usize> {
    let p = parse_alpha(w, text)?;
    if !w.is_iplus(p) {
        return input(Err(anyhow!("{} is not in I+", w.index(p))));
    }
    Ok(p)
}

fn parse_c(w: &TranslationWindow, text: &str) -> Result<CTuple> {
    input((|| {
        let text = read_arg(text)?;
        let t = text.trim();
        match t {
            "ones" | "1" => return Ok(CTuple::ones(w)),
            "zeros" | "0" => return Ok(CTuple::zeros(w)),
            _ => {}
        }
        if let Some(rest) = t.strip_prefix("unit:") {
            return Ok(CTuple::unit(w, parse_iplus_alpha(w, rest)?)?);
        }
        if t.starts_with('{') {
            let v: Value = serde_json::from_str(t)?;
            return Ok(CTuple::from_json(w, &v, &Q::from_integer(1.into()))?);
        }
        let values: Vec<Q> = t
            .trim_matches(|c| c == '[' || c == ']')
            .split(',')
            .map(|s| parse_q(s.trim().trim_matches('"')).ok_or_else(|| anyhow!("bad value {s:?}")))
            .collect::<Result<_>>()?;
        if values.len() != w.iplus().len() {
            bail!("expected {} values, got {}", w.iplus().len(), values.len());
        }
        Ok(CTuple::new(w, values)?)
    })())
}

fn write_out(a: &Common, text: &str) -> Result<()> {
    match &a.out {
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
        Some(path) => {
            let tmp = path.with_extension("tmp~");
            fs::write(&tmp, text).with_context(|| format!("writing {}", tmp.display()))?;
            fs::rename(&tmp, path).with_context(|| format!("writing {}", path.display()))?;
        }
    }
    Ok(())
}

fn emit_json(a: &Common, v: Value) -> Result<bool> {
    if a.format == Format::Off {
        return input(Err(anyhow!("OFF output is only available for `polytope`")));
    }
    write_out(a, &format!("{}\n", serde_json::to_string_pretty(&v)?))?;
    Ok(true)
}

fn keyed<T: Into<Value>>(w: &TranslationWindow, f: impl Fn(usize) -> T) -> Value {
    let map: Map<String, Value> = (0..w.len()).map(|p| (w.index(p).to_string(), f(p).into())).collect();
    Value::Object(map)
}

fn cmd_arq(a: &Common) -> Result<Value> {
    let q = load_quiver(a)?;
    let w = TranslationWindow::build(&q)?;
    let mut v = w.to_json();
    let slices: Vec<Vec<String>> = w
        .slices()
        .iter()
        .map(|s| s.iter().map(|&p| w.index(p).to_string()).collect())
        .collect();
    v["slices"] = json!(slices);
    if let Some(alpha) = &a.alpha {
        let p = parse_alpha(&w, alpha)?;
        return Ok(json!({
            "index": w.index(p).to_string(),
            "dim": w.dim(p),
            "gvec": w.gvec(p),
            "iplus": w.is_iplus(p),
        }));
    }
    Ok(v)
}

fn cmd_gvectors(a: &Common) -> Result<Value> {
    let q = load_quiver(a)?;
    let w = TranslationWindow::build(&q)?;
    if let Some(alpha) = &a.alpha {
        let p = parse_alpha(&w, alpha)?;
        return Ok(json!({ w.index(p).to_string(): w.gvec(p) }));
    }
    Ok(keyed(&w, |p| json!(w.gvec(p))))
}

fn cmd_polytope(a: &PolytopeArgs) -> Result<bool> {
    let ctx = context(&a.common)?;
    let w = &ctx.window;
    let c = match (&a.c, &a.common.alpha) {
        (Some(text), _) => parse_c(w, text)?,
        (None, Some(alpha)) => CTuple::unit(w, parse_iplus_alpha(w, alpha)?)?,
        (None, None) => CTuple::ones(w),
    };
    let clusters = ctx.compatible_clusters().to_vec();
    let (poly, full) = polytope_from_clusters(w, &ctx.hom, &ctx.compat, &c, &clusters)?;
    if a.common.format == Format::Off {
        let off = input(poly.to_off().map_err(|e| anyhow!("{e}: OFF needs a three-dimensional polytope")))?;
        write_out(&a.common, &off)?;
        return Ok(true);
    }
    let mut v = poly.to_json();
    v["c"] = c.to_json(w);
    if a.full {
        let full = VPolytope::new(w.len(), full);
        let sections: Vec<Vec<String>> = poly
            .vertices()
            .iter()
            .map(|x| section(w, &c, x).iter().map(genassoc::geometry::linalg::fmt_q).collect())
            .collect();
        v["indices"] = json!((0..w.len()).map(|p| w.index(p).to_string()).collect::<Vec<_>>());
        v["full_vertices"] = json!(sections);
        v["full_extreme_count"] = json!(full.vertices().len());
    }
    write_out(&a.common, &format!("{}\n", serde_json::to_string_pretty(&v)?))?;
    Ok(true)
}

fn cmd_fpoly(a: &Common, universal: bool) -> Result<Value> {
    let ctx = context(a)?;
    let w = &ctx.window;
    let polys = if universal {
        ctx.universal_f()?.to_vec()
    } else {
        let atlas = ctx.atlas()?;
        (0..w.len()).map(|p| f_polynomial(atlas, p)).collect::<Result<Vec<_>, _>>()?
    };
    if let Some(alpha) = &a.alpha {
        let p = parse_alpha(w, alpha)?;
        return Ok(json!({ w.index(p).to_string(): polys[p].to_string() }));
    }
    Ok(polynomials_to_json(w, &polys))
}

fn load_ice(a: &Common, q: &DynkinQuiver) -> Result<IceQuiver> {
    match &a.ice {
        None => Ok(q.framed()),
        Some(text) => {
            let ice = input(read_arg(text).and_then(|t| Ok(IceQuiver::parse(&t)?)))?;
            if ice.base() != q {
                return input(Err(anyhow!("the ice quiver is built on a different quiver")));
            }
            Ok(ice)
        }
    }
}

fn cmd_separation(a: &Common) -> Result<Value> {
    let ctx = context(a)?;
    let w = &ctx.window;
    let ice = load_ice(a, w.quiver())?;
    let prin = &ctx.atlas()?.variables;
    let positions: Vec<usize> = match &a.alpha {
        Some(alpha) => vec![parse_alpha(w, alpha)?],
        None => (0..w.len()).collect(),
    };
    let mut vars = Map::new();
    let mut trop = Map::new();
    for p in positions {
        let key = w.index(p).to_string();
        vars.insert(key.clone(), json!(separation_specialize(&prin[p], &ice)?.to_string()));
        trop.insert(key, json!(tropical_f(&prin[p], &ice)?.to_string()));
    }
    Ok(json!({"ice": ice.to_json(), "variables": vars, "f_trop": trop}))
}

fn cmd_verify(a: &VerifyArgs) -> Result<bool> {
    let ctx = context(&a.common)?;
    let w = &ctx.window;
    let mut kinds: Vec<CheckKind> = a
        .checks
        .iter()
        .map(|s| s.parse().map_err(|e: String| anyhow!(e)))
        .collect::<Result<_>>()
        .map_err(InputError)?;
    if a.all {
        kinds = CheckKind::ALL.to_vec();
    }
    if kinds.is_empty() {
        return input(Err(anyhow!("pass --all or at least one --check")));
    }
    let alpha = match &a.common.alpha {
        Some(t) => Some(parse_iplus_alpha(w, t)?),
        None => None,
    };
    let c = match &a.c {
        Some(t) => Some(parse_c(w, t)?),
        None => None,
    };
    let ice = match &a.common.ice {
        Some(_) => Some(load_ice(&a.common, w.quiver())?),
        None => None,
    };

    let mut reports: Vec<Report> = Vec::new();
    for kind in kinds {
        match (kind, alpha, &c, &ice) {
            (CheckKind::TheoremTwo, Some(p), _, _) => reports.push(check_theorem_two(&ctx, p)),
            (CheckKind::Universal, Some(p), _, _) => reports.push(check_universal(&ctx, p)),
            (CheckKind::Oracle, Some(p), _, _) => reports.push(check_oracle(&ctx, p)),
            (CheckKind::TheoremOne, _, Some(c), _) => reports.push(check_theorem_one(&ctx, c)),
            (CheckKind::Degenerate, _, Some(c), _) => reports.push(check_degenerate(&ctx, c)),
            (CheckKind::Separation, _, _, Some(ice)) => reports.push(check_separation(&ctx, ice)),
            (CheckKind::Compatibility, ..) => reports.push(check_compatibility(&ctx)),
            _ => reports.extend(run_kind(&ctx, kind, a.random, a.seed)),
        }
    }

    let mut lines = String::new();
    for r in &reports {
        lines.push_str(&r.outcome().to_string());
        lines.push('\n');
    }
    write_out(&a.common, &lines)?;
    print_summary(&reports);
    Ok(reports.iter().all(|r| r.status != Status::Fail))
}

fn print_summary(reports: &[Report]) {
    let mut rows: Vec<(String, usize, usize, usize, u128)> = Vec::new();
    for r in reports {
        let name = format!("{} {}", r.check_name, r.dynkin_type);
        if rows.last().is_none_or(|row| row.0 != name) {
            rows.push((name, 0, 0, 0, 0));
        }
        let row = rows.last_mut().expect("just pushed");
        match r.status {
            Status::Pass => row.1 += 1,
            Status::Fail => row.2 += 1,
            Status::Skipped => row.3 += 1,
        }
        row.4 += r.elapsed_ms;
    }
    eprintln!("{:<24} {:>6} {:>6} {:>8} {:>10}", "check", "pass", "fail", "skipped", "ms");
    for (name, p, f, s, ms) in rows {
        eprintln!("{name:<24} {p:>6} {f:>6} {s:>8} {ms:>10}");
    }
}
