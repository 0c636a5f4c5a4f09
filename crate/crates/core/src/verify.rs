//! Executable checks that compare the polytope pipeline with the
//! cluster-algebra pipeline and report structured pass/fail results.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::OnceLock;
use std::time::Instant;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::arq::{CompatibilityTable, HomTable, Index, TranslationWindow};
use crate::cluster::{
    enumerate_atlas, f_polynomial, separation_specialize, slice_variables, tropical_f,
    universal_f_polynomials, ClusterAtlas, SourcePolicy,
};
use crate::geometry::linalg::{affine_rank, fmt_q, q_vec, rank, Q};
use crate::geometry::{
    enumerate_vertices, mesh_violations, outer_normal_check, point_vanishing_on, polytope_equal,
    project_pi, section, section_by_gvectors, v_point, vertex_for_cluster, CTuple, VPolytope,
};
use crate::laurent::LaurentPoly;
use crate::oracle_rep_a::interval_of;
use crate::quiver::{DynkinQuiver, DynkinType, IceQuiver};
use crate::Error;

const MAX_WITNESSES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// Outcome of one check. A failing report always carries witnesses.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub check_name: String,
    pub dynkin_type: DynkinType,
    pub params: Value,
    pub status: Status,
    pub witnesses: Vec<Value>,
    pub details: Value,
    pub elapsed_ms: u128,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> Value {
        json!({
            "check": self.check_name,
            "type": self.dynkin_type.to_string(),
            "rank": self.dynkin_type.rank(),
            "params": self.params,
            "status": self.status.to_string(),
            "witnesses": self.witnesses,
            "details": self.details,
            "elapsed_ms": self.elapsed_ms,
        })
    }

    /// The report without its timing, for reproducibility comparisons.
    pub fn outcome(&self) -> Value {
        let mut v = self.to_json();
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    }
}

/// Largest rank per family for which a class of checks runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TypeLimits {
    pub a: usize,
    pub d: usize,
    pub e: usize,
}

impl TypeLimits {
    pub fn allows(&self, t: DynkinType) -> bool {
        match t {
            DynkinType::A(n) => n <= self.a,
            DynkinType::D(n) => n <= self.d,
            DynkinType::E(n) => n <= self.e,
        }
    }

    pub fn capped(&self, max_rank: usize) -> Self {
        TypeLimits {
            a: self.a.min(max_rank),
            d: self.d.min(max_rank),
            e: self.e.min(max_rank),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ceilings {
    /// Checks that compute cluster variables or F-polynomials.
    pub polynomial: TypeLimits,
    /// Checks that only touch the polytope side.
    pub geometry: TypeLimits,
    /// Brute-force enumeration over all `n`-subsets of the index set.
    pub brute_force: TypeLimits,
}

impl Default for Ceilings {
    fn default() -> Self {
        Ceilings {
            polynomial: TypeLimits { a: 7, d: 6, e: 6 },
            geometry: TypeLimits { a: 8, d: 8, e: 8 },
            brute_force: TypeLimits { a: 5, d: 4, e: 0 },
        }
    }
}

impl Ceilings {
    pub fn capped(&self, max_rank: usize) -> Self {
        Ceilings {
            polynomial: self.polynomial.capped(max_rank),
            geometry: self.geometry.capped(max_rank),
            brute_force: self.brute_force.capped(max_rank),
        }
    }
}

/// Everything computed once per quiver and shared by the checks.
pub struct Context {
    pub window: TranslationWindow,
    pub hom: HomTable,
    pub compat: CompatibilityTable,
    pub ceilings: Ceilings,
    atlas: OnceLock<Result<ClusterAtlas, Error>>,
    cliques: OnceLock<Vec<Vec<usize>>>,
    universal: OnceLock<Result<Vec<LaurentPoly>, Error>>,
}

impl Context {
    pub fn new(q: &DynkinQuiver, ceilings: Ceilings) -> Result<Self, Error> {
        let window = TranslationWindow::build(q)?;
        let hom = HomTable::build(&window)?;
        let compat = CompatibilityTable::build(&window, &hom);
        Ok(Context {
            window,
            hom,
            compat,
            ceilings,
            atlas: OnceLock::new(),
            cliques: OnceLock::new(),
            universal: OnceLock::new(),
        })
    }

    pub fn dynkin_type(&self) -> DynkinType {
        self.window.quiver().dynkin_type()
    }

    /// Exchange graph found by mutation with principal coefficients.
    pub fn atlas(&self) -> Result<&ClusterAtlas, Error> {
        self.atlas
            .get_or_init(|| enumerate_atlas(&self.window).map_err(Error::from))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Maximal pairwise-compatible sets according to the Ext table.
    pub fn compatible_clusters(&self) -> &[Vec<usize>] {
        self.cliques
            .get_or_init(|| self.compat.maximal_compatible_sets(self.window.n()))
    }

    pub fn universal_f(&self) -> Result<&[LaurentPoly], Error> {
        self.universal
            .get_or_init(|| universal_f_polynomials(&self.window).map_err(Error::from))
            .as_deref()
            .map_err(Clone::clone)
    }

    /// Clusters from mutation when polynomial work is allowed, otherwise from
    /// the compatibility table.
    fn clusters(&self) -> Result<Vec<Vec<usize>>, Error> {
        if self.ceilings.polynomial.allows(self.dynkin_type()) {
            Ok(self.atlas()?.clusters.clone())
        } else {
            Ok(self.compatible_clusters().to_vec())
        }
    }

    fn key(&self, p: usize) -> String {
        self.window.index(p).to_string()
    }

    fn keys(&self, set: &[usize]) -> Vec<String> {
        set.iter().map(|&p| self.key(p)).collect()
    }

    /// Position of `(i + 1, j)` for the element `(i, j)` at `p`.
    fn successor(&self, p: usize) -> usize {
        let idx = self.window.index(p);
        self.window
            .position(Index::new(idx.i + 1, idx.j))
            .expect("elements of I+ have a successor in their column")
    }
}

struct Checker {
    name: &'static str,
    params: Value,
    start: Instant,
    witnesses: Vec<Value>,
    failed: bool,
}

impl Checker {
    fn new(name: &'static str, params: Value) -> Self {
        Checker {
            name,
            params,
            start: Instant::now(),
            witnesses: Vec::new(),
            failed: false,
        }
    }

    fn fail(&mut self, sub: &str, witness: Value) {
        self.failed = true;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(json!({"check": sub, "witness": witness}));
        }
    }

    fn expect(&mut self, ok: bool, sub: &str, witness: impl FnOnce() -> Value) {
        if !ok {
            self.fail(sub, witness());
        }
    }

    fn finish(self, ctx: &Context, details: Value) -> Report {
        Report {
            check_name: self.name.to_string(),
            dynkin_type: ctx.dynkin_type(),
            params: self.params,
            status: if self.failed { Status::Fail } else { Status::Pass },
            witnesses: self.witnesses,
            details,
            elapsed_ms: self.start.elapsed().as_millis(),
        }
    }

    fn skip(self, ctx: &Context, reason: &str) -> Report {
        Report {
            check_name: self.name.to_string(),
            dynkin_type: ctx.dynkin_type(),
            params: self.params,
            status: Status::Skipped,
            witnesses: Vec::new(),
            details: json!({"reason": reason}),
            elapsed_ms: 0,
        }
    }
}

fn points_json(points: &[Vec<Q>]) -> Value {
    json!(points
        .iter()
        .map(|p| p.iter().map(fmt_q).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

/// Positive integer parameters drawn uniformly from `1..=10`.
pub fn random_c(w: &TranslationWindow, seed: u64) -> CTuple {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let values: Vec<i64> = (0..w.iplus().len()).map(|_| rng.random_range(1..=10)).collect();
    CTuple::from_integers(w, &values).expect("positive values")
}

fn zero_set(p: &[Q]) -> Vec<usize> {
    (0..p.len()).filter(|&k| p[k].is_zero()).collect()
}

/// Facet structure, vertices, normals and the projection for strictly
/// positive `c`.
pub fn check_theorem_one(ctx: &Context, c: &CTuple) -> Report {
    let w = &ctx.window;
    let n = w.n();
    let t = ctx.dynkin_type();
    let mut ck = Checker::new("theorem_one", json!({"c": c.to_json(w)}));
    if !ctx.ceilings.geometry.allows(t) {
        return ck.skip(ctx, "type exceeds the geometry ceiling");
    }
    if !c.is_strictly_positive() {
        ck.fail("precondition", json!("c must be strictly positive"));
        return ck.finish(ctx, json!({}));
    }
    let walk = match enumerate_vertices(w, &ctx.hom, &ctx.compat, c) {
        Ok(walk) => walk,
        Err(e) => {
            ck.fail("edge_walk", json!(e.to_string()));
            return ck.finish(ctx, json!({}));
        }
    };
    let catalan = t.catalan_number();
    ck.expect(walk.vertices.len() as u128 == catalan, "vertex_count", || {
        json!({"vertices": walk.vertices.len(), "catalan": catalan.to_string()})
    });

    let use_atlas = ctx.ceilings.polynomial.allows(t);
    let clusters = match ctx.clusters() {
        Ok(cl) => cl,
        Err(e) => {
            ck.fail("exchange_graph", json!(e.to_string()));
            return ck.finish(ctx, json!({}));
        }
    };
    let walked: Vec<Vec<usize>> = walk.vertices.keys().cloned().collect();
    if walked != clusters {
        let a: BTreeSet<_> = walked.iter().collect();
        let b: BTreeSet<_> = clusters.iter().collect();
        let extra: Vec<_> = a.difference(&b).map(|s| ctx.keys(s)).take(5).collect();
        let missing: Vec<_> = b.difference(&a).map(|s| ctx.keys(s)).take(5).collect();
        ck.fail(
            "vertices_are_clusters",
            json!({"walk_only": extra, "clusters_only": missing}),
        );
    }

    let v = v_point(w, &ctx.hom, c);
    for (cluster, p) in &walk.vertices {
        if let Some(k) = (0..p.len()).find(|&k| p[k].is_negative()) {
            ck.fail(
                "nonnegative",
                json!({"cluster": ctx.keys(cluster), "coordinate": ctx.key(k), "value": fmt_q(&p[k])}),
            );
        }
        let bad = mesh_violations(w, c, p);
        ck.expect(bad.is_empty(), "mesh_relations", || {
            json!({"cluster": ctx.keys(cluster), "meshes": bad.iter().map(ToString::to_string).collect::<Vec<_>>()})
        });
        let zeros = zero_set(p);
        ck.expect(&zeros == cluster, "zero_set", || {
            json!({"cluster": ctx.keys(cluster), "zero_set": ctx.keys(&zeros)})
        });
        match vertex_for_cluster(w, &ctx.compat, &v, cluster) {
            Ok(solved) => ck.expect(&solved == p, "cluster_solve", || {
                json!({"cluster": ctx.keys(cluster), "walk": points_json(&[p.clone()]), "solve": points_json(&[solved.clone()])})
            }),
            Err(e) => ck.fail("cluster_solve", json!(e.to_string())),
        }
        let back = section(w, c, &project_pi(w, p));
        ck.expect(&back == p, "section_round_trip", || json!({"cluster": ctx.keys(cluster)}));
        let gs: Vec<Vec<Q>> = cluster.iter().map(|&a| q_vec(w.gvec(a))).collect();
        ck.expect(rank(&gs) == n, "gvector_basis", || json!({"cluster": ctx.keys(cluster)}));
    }

    if use_atlas {
        if let Ok(atlas) = ctx.atlas() {
            let mut exchange: Vec<(Vec<usize>, Vec<usize>)> = atlas
                .edges
                .iter()
                .map(|&(a, b)| (atlas.clusters[a].clone(), atlas.clusters[b].clone()))
                .collect();
            exchange.sort();
            ck.expect(exchange == walk.edges, "edges_are_mutations", || {
                json!({"walk_edges": walk.edges.len(), "exchange_edges": exchange.len()})
            });
        }
    } else {
        let regular = walk.edges.len() * 2 == n * walk.vertices.len();
        let single_swaps = walk.edges.iter().all(|(a, b)| {
            a.iter().filter(|x| !b.contains(x)).count() == 1
        });
        ck.expect(regular && single_swaps, "edges_are_mutations", || {
            json!({"walk_edges": walk.edges.len()})
        });
    }

    // facets: vertices on each coordinate hyperplane span a hyperplane
    let projected: Vec<(Vec<usize>, Vec<Q>)> = walk
        .vertices
        .iter()
        .map(|(t, p)| (t.clone(), project_pi(w, p)))
        .collect();
    for alpha in 0..w.len() {
        let on: Vec<Vec<Q>> = projected
            .iter()
            .filter(|(t, _)| t.contains(&alpha))
            .map(|(_, x)| x.clone())
            .collect();
        let r = affine_rank(&on);
        ck.expect(r == Some(n - 1), "facet_dimension", || {
            json!({"coordinate": ctx.key(alpha), "affine_rank": r})
        });
    }

    for witness in face_lattice_witnesses(ctx, &walked) {
        ck.fail("faces_are_compatible_sets", witness);
    }

    // random points of the solution space project and lift consistently
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ec7);
    for _ in 0..3 {
        let x: Vec<Q> = (0..n)
            .map(|_| Q::new(rng.random_range(-15i64..=15).into(), rng.random_range(1i64..=4).into()))
            .collect();
        let s = section(w, c, &x);
        let ok = project_pi(w, &s) == x
            && s == section_by_gvectors(w, &v, &x)
            && mesh_violations(w, c, &s).is_empty();
        ck.expect(ok, "projection_bijective", || points_json(&[x.clone()]));
    }

    // outer normals; every vertex is the unique maximizer of the sum of its
    // cluster's g-vectors because it satisfies all inequalities and is the
    // only point where the n independent ones are tight
    let polytope = VPolytope::from_certified_vertices(n, projected.iter().map(|(_, x)| x.clone()).collect());
    for alpha in 0..w.len() {
        let expected: Vec<Vec<Q>> = projected
            .iter()
            .filter(|(t, _)| t.contains(&alpha))
            .map(|(_, x)| x.clone())
            .collect();
        let g = q_vec(w.gvec(alpha));
        ck.expect(outer_normal_check(&polytope, &g, &expected), "outer_normals", || {
            json!({"coordinate": ctx.key(alpha), "gvector": w.gvec(alpha)})
        });
    }

    ck.finish(
        ctx,
        json!({
            "vertices": walk.vertices.len(),
            "edges": walk.edges.len(),
            "catalan": catalan.to_string(),
            "cluster_source": if use_atlas { "mutation" } else { "compatibility" },
        }),
    )
}

/// For every compatible set `S`: some cluster contains it, and the clusters
/// containing it have intersection exactly `S`.
fn face_lattice_witnesses(ctx: &Context, clusters: &[Vec<usize>]) -> Vec<Value> {
    let len = ctx.window.len();
    let n = ctx.window.n();
    let mut out = Vec::new();
    let all: Vec<usize> = (0..clusters.len()).collect();
    let mut set = Vec::new();
    let mut counts = vec![0usize; len];
    face_rec(ctx, clusters, n, &mut set, &all, 0, &mut counts, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn face_rec(
    ctx: &Context,
    clusters: &[Vec<usize>],
    n: usize,
    set: &mut Vec<usize>,
    containing: &[usize],
    start: usize,
    counts: &mut Vec<usize>,
    out: &mut Vec<Value>,
) {
    if out.len() >= MAX_WITNESSES {
        return;
    }
    if containing.is_empty() {
        out.push(json!({"compatible_set": ctx.keys(set), "problem": "lies in no cluster"}));
        return;
    }
    for &c in containing {
        for &a in &clusters[c] {
            counts[a] += 1;
        }
    }
    let forced: Vec<usize> = (0..counts.len())
        .filter(|&a| counts[a] == containing.len() && !set.contains(&a))
        .collect();
    for &c in containing {
        for &a in &clusters[c] {
            counts[a] = 0;
        }
    }
    if !forced.is_empty() {
        out.push(json!({"compatible_set": ctx.keys(set), "also_vanishing": ctx.keys(&forced)}));
    }
    if set.len() == n {
        return;
    }
    for b in start..ctx.window.len() {
        if set.iter().all(|&a| ctx.compat.compatible(a, b)) {
            let next: Vec<usize> = containing
                .iter()
                .copied()
                .filter(|&c| clusters[c].binary_search(&b).is_ok())
                .collect();
            set.push(b);
            face_rec(ctx, clusters, n, set, &next, b + 1, counts, out);
            set.pop();
        }
    }
}

/// The projected polytope for `c` computed cluster by cluster.
fn associahedron(ctx: &Context, c: &CTuple, clusters: &[Vec<usize>]) -> Result<(VPolytope, Vec<Vec<Q>>), Error> {
    Ok(crate::geometry::polytope_from_clusters(
        &ctx.window,
        &ctx.hom,
        &ctx.compat,
        c,
        clusters,
    )?)
}

fn newton_polytope(dim: usize, exponents: &[Vec<i32>]) -> VPolytope {
    let pts: Vec<Vec<i64>> = exponents
        .iter()
        .map(|e| e.iter().map(|&x| i64::from(x)).collect())
        .collect();
    VPolytope::from_integer_points(dim, &pts)
}

fn y_names(n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("y{k}")).collect()
}

fn check_alpha(ck: &mut Checker, ctx: &Context, alpha: usize) -> bool {
    if alpha >= ctx.window.len() || !ctx.window.is_iplus(alpha) {
        ck.fail("precondition", json!("alpha must lie in I+"));
        return false;
    }
    true
}

/// The polytope for `c = e_alpha` against the Newton polytope of
/// `F_(i+1, j)`.
pub fn check_theorem_two(ctx: &Context, alpha: usize) -> Report {
    let w = &ctx.window;
    let n = w.n();
    let params = json!({"alpha": alpha_key(w, alpha)});
    let mut ck = Checker::new("theorem_two", params);
    if !ctx.ceilings.polynomial.allows(ctx.dynkin_type()) {
        return ck.skip(ctx, "type exceeds the polynomial ceiling");
    }
    if !check_alpha(&mut ck, ctx, alpha) {
        return ck.finish(ctx, json!({}));
    }
    let result = (|| -> Result<(VPolytope, VPolytope, LaurentPoly), Error> {
        let atlas = ctx.atlas()?;
        let c = CTuple::unit(w, alpha)?;
        let (geom, _) = associahedron(ctx, &c, &atlas.clusters)?;
        let f = f_polynomial(atlas, ctx.successor(alpha))?;
        let names = y_names(n);
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let pts = f.newton_points(&refs)?;
        Ok((geom, newton_polytope(n, &pts), f))
    })();
    let (geom, newton, f) = match result {
        Ok(r) => r,
        Err(e) => {
            ck.fail("computation", json!(e.to_string()));
            return ck.finish(ctx, json!({}));
        }
    };
    let dims = w.dim(alpha);
    let in_box = f.terms().all(|(e, _)| e.iter().zip(dims).all(|(&x, &d)| 0 <= x && i64::from(x) <= d));
    ck.expect(in_box, "exponents_below_dimension_vector", || json!(f.to_string()));
    let constant = f.coefficient(&vec![0; n]);
    ck.expect(f.has_positive_coefficients() && constant == 1.into(), "positivity", || {
        json!(f.to_string())
    });
    ck.expect(polytope_equal(&geom, &newton).unwrap_or(false), "newton_polytope", || {
        json!({"polytope": points_json(geom.vertices()), "newton": points_json(newton.vertices())})
    });
    ck.finish(
        ctx,
        json!({"vertices": geom.vertices().len(), "f_terms": f.num_terms()}),
    )
}

fn alpha_key(w: &TranslationWindow, alpha: usize) -> String {
    if alpha < w.len() {
        w.index(alpha).to_string()
    } else {
        format!("position {alpha}")
    }
}

/// The full-coordinate polytope for `c = e_alpha` against the Newton
/// polytope of the universal F-polynomial at `(i+1, j)`.
pub fn check_universal(ctx: &Context, alpha: usize) -> Report {
    let w = &ctx.window;
    let mut ck = Checker::new("universal", json!({"alpha": alpha_key(w, alpha)}));
    if !ctx.ceilings.polynomial.allows(ctx.dynkin_type()) {
        return ck.skip(ctx, "type exceeds the polynomial ceiling");
    }
    if !check_alpha(&mut ck, ctx, alpha) {
        return ck.finish(ctx, json!({}));
    }
    let result = (|| -> Result<(VPolytope, VPolytope), Error> {
        let clusters = ctx.clusters()?;
        let c = CTuple::unit(w, alpha)?;
        let (_, full) = associahedron(ctx, &c, &clusters)?;
        let f = &ctx.universal_f()?[ctx.successor(alpha)];
        let names: Vec<String> = f.vars().names().to_vec();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let pts = f.newton_points(&refs)?;
        Ok((
            VPolytope::new(w.len(), full),
            newton_polytope(w.len(), &pts),
        ))
    })();
    match result {
        Ok((geom, newton)) => {
            ck.expect(polytope_equal(&geom, &newton).unwrap_or(false), "newton_polytope", || {
                json!({"polytope": points_json(geom.vertices()), "newton": points_json(newton.vertices())})
            });
            ck.finish(ctx, json!({"vertices": geom.vertices().len()}))
        }
        Err(e) => {
            ck.fail("computation", json!(e.to_string()));
            ck.finish(ctx, json!({}))
        }
    }
}

/// For `c` with zero entries: vertex zero sets are unions of clusters and
/// every facet is cut out by a g-vector.
pub fn check_degenerate(ctx: &Context, c: &CTuple) -> Report {
    let w = &ctx.window;
    let n = w.n();
    let mut ck = Checker::new("degenerate", json!({"c": c.to_json(w)}));
    if !ctx.ceilings.brute_force.allows(ctx.dynkin_type()) {
        return ck.skip(ctx, "type exceeds the brute-force ceiling");
    }
    let v = v_point(w, &ctx.hom, c);
    if c.values().iter().all(Zero::is_zero) {
        ck.expect(v.iter().all(Zero::is_zero), "zero_parameters", || points_json(&[v.clone()]));
        return ck.finish(ctx, json!({"vertices": 1}));
    }
    let clusters = ctx.compatible_clusters().to_vec();

    // all points where n independent coordinates vanish and none is negative
    let mut vertices: BTreeSet<Vec<Q>> = BTreeSet::new();
    for_each_subset(w.len(), n, &mut |set| {
        if let Some(p) = point_vanishing_on(w, &v, set) {
            if !p.iter().any(Signed::is_negative) {
                vertices.insert(p);
            }
        }
    });
    for p in &vertices {
        let zeros = zero_set(p);
        let covered: HashSet<usize> = clusters
            .iter()
            .filter(|t| t.iter().all(|a| zeros.binary_search(a).is_ok()))
            .flatten()
            .copied()
            .collect();
        ck.expect(
            !covered.is_empty() && zeros.iter().all(|a| covered.contains(a)),
            "zero_sets_are_unions_of_clusters",
            || json!({"point": points_json(&[p.clone()]), "zero_set": ctx.keys(&zeros)}),
        );
        ck.expect(mesh_violations(w, c, p).is_empty(), "mesh_relations", || {
            points_json(&[p.clone()])
        });
    }
    for t in &clusters {
        match point_vanishing_on(w, &v, t) {
            Some(p) => ck.expect(vertices.contains(&p), "cluster_vertices", || {
                json!({"cluster": ctx.keys(t)})
            }),
            None => ck.fail("cluster_vertices", json!({"cluster": ctx.keys(t), "problem": "singular"})),
        }
    }
    let projected: Vec<Vec<Q>> = vertices.iter().map(|p| project_pi(w, p)).collect();
    let polytope = VPolytope::new(n, projected);
    ck.expect(
        polytope.vertices().len() == vertices.len(),
        "vertices_are_extreme",
        || json!({"points": vertices.len(), "extreme": polytope.vertices().len()}),
    );
    let facets = polytope.facets();
    for f in &facets {
        let face: Vec<Vec<Q>> = f.vertices.iter().map(|&k| polytope.vertices()[k].clone()).collect();
        let normal = (0..w.len()).find(|&a| outer_normal_check(&polytope, &q_vec(w.gvec(a)), &face));
        ck.expect(normal.is_some(), "facet_normals_are_gvectors", || points_json(&face));
    }
    ck.finish(
        ctx,
        json!({"vertices": vertices.len(), "facets": facets.len()}),
    )
}

fn for_each_subset(len: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k > len {
        return;
    }
    let mut combo: Vec<usize> = (0..k).collect();
    loop {
        f(&combo);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if combo[i] < len - k + i {
                combo[i] += 1;
                for j in i + 1..k {
                    combo[j] = combo[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Coefficients of `ice` recovered from principal coefficients agree with
/// direct mutation in `ice`.
pub fn check_separation(ctx: &Context, ice: &IceQuiver) -> Report {
    let w = &ctx.window;
    let mut ck = Checker::new("separation", json!({"ice": ice.to_json()}));
    if !ctx.ceilings.polynomial.allows(ctx.dynkin_type()) {
        return ck.skip(ctx, "type exceeds the polynomial ceiling");
    }
    let result = (|| -> Result<Vec<Value>, Error> {
        let prin = &ctx.atlas()?.variables;
        let direct = slice_variables(w, ice, SourcePolicy::FirstSource)?;
        let mut trop = Vec::new();
        for p in 0..w.len() {
            let sep = separation_specialize(&prin[p], ice)?;
            if sep != direct.variables[p] {
                ck.fail(
                    "separation_formula",
                    json!({"index": ctx.key(p), "specialized": sep.to_string(), "mutated": direct.variables[p].to_string()}),
                );
            }
            trop.push(json!([ctx.key(p), tropical_f(&prin[p], ice)?.to_string()]));
        }
        Ok(trop)
    })();
    match result {
        Ok(trop) => ck.finish(ctx, json!({"f_trop": trop})),
        Err(e) => {
            ck.fail("computation", json!(e.to_string()));
            ck.finish(ctx, json!({}))
        }
    }
}

/// The Ext-based compatibility table against co-occurrence in clusters
/// found by mutation; also checks that slices are clusters and that the
/// slice assignment does not depend on the order of mutations.
pub fn check_compatibility(ctx: &Context) -> Report {
    let w = &ctx.window;
    let mut ck = Checker::new("compatibility", json!({}));
    if !ctx.ceilings.polynomial.allows(ctx.dynkin_type()) {
        return ck.skip(ctx, "type exceeds the polynomial ceiling");
    }
    let atlas = match ctx.atlas() {
        Ok(a) => a,
        Err(e) => {
            ck.fail("exchange_graph", json!(e.to_string()));
            return ck.finish(ctx, json!({}));
        }
    };
    let co = atlas.co_occurrence();
    for a in 0..w.len() {
        for b in a..w.len() {
            ck.expect(ctx.compat.compatible(a, b) == co[a][b], "ext_vs_cooccurrence", || {
                json!({"pair": [ctx.key(a), ctx.key(b)], "ext_compatible": ctx.compat.compatible(a, b), "co_occur": co[a][b]})
            });
        }
    }
    let cliques = ctx.compatible_clusters();
    ck.expect(cliques == atlas.clusters.as_slice(), "maximal_compatible_sets", || {
        json!({"cliques": cliques.len(), "clusters": atlas.clusters.len()})
    });
    let catalan = ctx.dynkin_type().catalan_number();
    ck.expect(atlas.clusters.len() as u128 == catalan, "cluster_count", || {
        json!({"clusters": atlas.clusters.len(), "catalan": catalan.to_string()})
    });
    let slices = w.slices();
    for s in &slices {
        let mut sorted = s.clone();
        sorted.sort_unstable();
        ck.expect(atlas.cluster_index(&sorted).is_some(), "slices_are_clusters", || {
            json!(ctx.keys(s))
        });
    }
    match (
        slice_variables(w, &w.quiver().framed(), SourcePolicy::FirstSource),
        slice_variables(w, &w.quiver().framed(), SourcePolicy::LastSource),
    ) {
        (Ok(a), Ok(b)) => ck.expect(a == b, "source_independence", || json!({})),
        (Err(e), _) | (_, Err(e)) => ck.fail("source_independence", json!(e.to_string())),
    }
    ck.finish(
        ctx,
        json!({"clusters": atlas.clusters.len(), "edges": atlas.edges.len(), "slices": slices.len()}),
    )
}

/// Submodule polytopes of interval modules against both other pipelines.
pub fn check_oracle(ctx: &Context, alpha: usize) -> Report {
    let w = &ctx.window;
    let n = w.n();
    let mut ck = Checker::new("oracle", json!({"alpha": alpha_key(w, alpha)}));
    if !matches!(ctx.dynkin_type(), DynkinType::A(_)) {
        return ck.skip(ctx, "the module oracle covers type A only");
    }
    if !ctx.ceilings.polynomial.allows(ctx.dynkin_type()) {
        return ck.skip(ctx, "type exceeds the polynomial ceiling");
    }
    if !check_alpha(&mut ck, ctx, alpha) {
        return ck.finish(ctx, json!({}));
    }
    let result = (|| -> Result<(), Error> {
        let module = interval_of(w, alpha)?;
        let sub = module.submodule_polytope();
        let atlas = ctx.atlas()?;
        let (geom, _) = associahedron(ctx, &CTuple::unit(w, alpha)?, &atlas.clusters)?;
        let f = f_polynomial(atlas, ctx.successor(alpha))?;
        let names = y_names(n);
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let newton = newton_polytope(n, &f.newton_points(&refs)?);
        ck.expect(polytope_equal(&sub, &geom)?, "submodules_vs_polytope", || {
            json!({"submodules": points_json(sub.vertices()), "polytope": points_json(geom.vertices())})
        });
        ck.expect(polytope_equal(&sub, &newton)?, "submodules_vs_newton", || {
            json!({"submodules": points_json(sub.vertices()), "newton": points_json(newton.vertices())})
        });
        for vtx in sub.vertices() {
            let e: Vec<i64> = vtx
                .iter()
                .map(|x| i64::try_from(x.to_integer()).expect("0/1 entries"))
                .collect();
            let count = module.submodule_count(&e);
            ck.expect(count == 1, "unique_vertex_submodule", || json!({"dims": e, "count": count}));
        }
        Ok(())
    })();
    if let Err(e) = result {
        ck.fail("computation", json!(e.to_string()));
    }
    ck.finish(ctx, json!({}))
}

/// Which checks a batch run includes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    TheoremOne,
    TheoremTwo,
    Universal,
    Degenerate,
    Separation,
    Compatibility,
    Oracle,
}

impl CheckKind {
    pub const ALL: [CheckKind; 7] = [
        CheckKind::Compatibility,
        CheckKind::TheoremOne,
        CheckKind::TheoremTwo,
        CheckKind::Universal,
        CheckKind::Degenerate,
        CheckKind::Separation,
        CheckKind::Oracle,
    ];
}

impl std::str::FromStr for CheckKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "th1" | "theorem_one" => CheckKind::TheoremOne,
            "th2" | "theorem_two" => CheckKind::TheoremTwo,
            "universal" => CheckKind::Universal,
            "degenerate" => CheckKind::Degenerate,
            "separation" => CheckKind::Separation,
            "compat" | "compatibility" => CheckKind::Compatibility,
            "oracle" => CheckKind::Oracle,
            _ => return Err(format!("unknown check {s:?}")),
        })
    }
}

/// Parameter tuples with exactly one zero entry and all others one.
pub fn one_zero_patterns(w: &TranslationWindow) -> Vec<CTuple> {
    (0..w.iplus().len())
        .map(|r| {
            let mut vals = vec![1i64; w.iplus().len()];
            vals[r] = 0;
            CTuple::from_integers(w, &vals).expect("non-negative")
        })
        .collect()
}

/// Runs the standard grid for one check kind: all-ones plus `random` seeded
/// parameter tuples, every alpha, and the usual ice quivers.
pub fn run_kind(ctx: &Context, kind: CheckKind, random: usize, seed: u64) -> Vec<Report> {
    let w = &ctx.window;
    let iplus = w.iplus().to_vec();
    match kind {
        CheckKind::TheoremOne => {
            let mut cs = vec![CTuple::ones(w)];
            cs.extend((0..random as u64).map(|k| random_c(w, seed.wrapping_add(k))));
            cs.iter().map(|c| check_theorem_one(ctx, c)).collect()
        }
        CheckKind::TheoremTwo => iplus.iter().map(|&a| check_theorem_two(ctx, a)).collect(),
        CheckKind::Universal => iplus.iter().map(|&a| check_universal(ctx, a)).collect(),
        CheckKind::Oracle => iplus.iter().map(|&a| check_oracle(ctx, a)).collect(),
        CheckKind::Degenerate => one_zero_patterns(w)
            .iter()
            .map(|c| check_degenerate(ctx, c))
            .collect(),
        CheckKind::Separation => {
            let q = w.quiver();
            let mut ices = vec![q.framed(), IceQuiver::trivial(q.clone())];
            if let Ok(u) = crate::cluster::universal_ice(w) {
                ices.push(u);
            }
            ices.iter().map(|ice| check_separation(ctx, ice)).collect()
        }
        CheckKind::Compatibility => vec![check_compatibility(ctx)],
    }
}

/// All points of `U_c` for `c = e_alpha`; exposed for the CLI and tests.
pub fn unit_polytope(ctx: &Context, alpha: usize) -> Result<VPolytope, Error> {
    let c = CTuple::unit(&ctx.window, alpha)?;
    let clusters = ctx.clusters()?;
    Ok(associahedron(ctx, &c, &clusters)?.0)
}
