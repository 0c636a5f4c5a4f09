//! Polytopes given by finitely many rational points.

use std::collections::HashSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::linalg::{affine_rank, dot, fmt_q, nullspace, q, rref, Q};
use super::GeometryError;

/// Convex hull of a finite point set, with its extreme points computed exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VPolytope {
    dim: usize,
    points: Vec<Vec<Q>>,
    extreme: Vec<Vec<Q>>,
}

impl VPolytope {
    /// Panics if some point does not have `dim` coordinates.
    pub fn new(dim: usize, points: Vec<Vec<Q>>) -> Self {
        assert!(points.iter().all(|p| p.len() == dim), "point dimension");
        let extreme = extreme_points(&points);
        VPolytope {
            dim,
            points,
            extreme,
        }
    }

    /// Wraps points already known to be pairwise distinct extreme points,
    /// skipping the hull computation.
    pub fn from_certified_vertices(dim: usize, mut vertices: Vec<Vec<Q>>) -> Self {
        assert!(vertices.iter().all(|p| p.len() == dim), "point dimension");
        vertices.sort();
        VPolytope {
            dim,
            points: vertices.clone(),
            extreme: vertices,
        }
    }

    pub fn from_integer_points(dim: usize, points: &[Vec<i64>]) -> Self {
        Self::new(
            dim,
            points
                .iter()
                .map(|p| p.iter().map(|&x| q(x)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<Q>] {
        &self.points
    }

    /// Extreme points in lexicographic order.
    pub fn vertices(&self) -> &[Vec<Q>] {
        &self.extreme
    }

    pub fn is_empty(&self) -> bool {
        self.extreme.is_empty()
    }

    pub fn affine_dimension(&self) -> Option<usize> {
        affine_rank(&self.extreme)
    }

    /// Extreme points maximizing `<direction, .>`.
    pub fn maximizers(&self, direction: &[Q]) -> Vec<Vec<Q>> {
        let values: Vec<Q> = self.extreme.iter().map(|p| dot(direction, p)).collect();
        let Some(best) = values.iter().max() else {
            return Vec::new();
        };
        self.extreme
            .iter()
            .zip(&values)
            .filter(|(_, v)| *v == best)
            .map(|(p, _)| p.clone())
            .collect()
    }

    pub fn support(&self, direction: &[Q]) -> Option<Q> {
        self.extreme.iter().map(|p| dot(direction, p)).max()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "dim": self.dim,
            "vertices": self
                .extreme
                .iter()
                .map(|p| p.iter().map(fmt_q).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }

    /// Facets of the polytope inside its affine hull, each given by the
    /// indices of its vertices in [`VPolytope::vertices`].
    pub fn facets(&self) -> Vec<Facet> {
        facets(&self.extreme)
    }

    /// OFF export; only defined for full-dimensional polytopes in 3-space.
    pub fn to_off(&self) -> Result<String, GeometryError> {
        if self.dim != 3 || self.affine_dimension() != Some(3) {
            return Err(GeometryError::NotThreeDimensional);
        }
        let facets = self.facets();
        let mut out = String::from("OFF\n");
        writeln!(out, "{} {} 0", self.extreme.len(), facets.len()).unwrap();
        for p in &self.extreme {
            let coords: Vec<String> = p.iter().map(|x| fmt_decimal(x, 12)).collect();
            writeln!(out, "{}", coords.join(" ")).unwrap();
        }
        for f in &facets {
            let cycle = cyclic_order(&self.extreme, &f.vertices, &f.normal);
            let ids: Vec<String> = cycle.iter().map(usize::to_string).collect();
            writeln!(out, "{} {}", cycle.len(), ids.join(" ")).unwrap();
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub vertices: Vec<usize>,
    /// Outward normal; for lower-dimensional polytopes it is expressed in
    /// the coordinates that parametrize the affine hull, padded with zeros.
    pub normal: Vec<Q>,
}

pub fn polytope_equal(a: &VPolytope, b: &VPolytope) -> Result<bool, GeometryError> {
    if a.dim != b.dim {
        return Err(GeometryError::DimensionMismatch {
            left: a.dim,
            right: b.dim,
        });
    }
    Ok(a.extreme == b.extreme)
}

pub fn minkowski_sum(a: &VPolytope, b: &VPolytope) -> Result<VPolytope, GeometryError> {
    if a.dim != b.dim {
        return Err(GeometryError::DimensionMismatch {
            left: a.dim,
            right: b.dim,
        });
    }
    let mut pts = Vec::with_capacity(a.extreme.len() * b.extreme.len());
    for x in &a.extreme {
        for y in &b.extreme {
            pts.push(x.iter().zip(y).map(|(s, t)| s + t).collect());
        }
    }
    Ok(VPolytope::new(a.dim, pts))
}

/// True iff the maximizers of `<direction, .>` over the vertices of `p` are
/// exactly `expected` (as a set).
pub fn outer_normal_check(p: &VPolytope, direction: &[Q], expected: &[Vec<Q>]) -> bool {
    let mut got = p.maximizers(direction);
    let mut want = expected.to_vec();
    got.sort();
    want.sort();
    want.dedup();
    got == want
}

/// Minimal subset with the same convex hull, sorted lexicographically.
pub fn extreme_points(points: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    // extremality is affine invariant, so work in a chart of the affine hull
    let (_, ys) = chart_coordinates(&pts);
    let keep = extreme_flags(&ys);
    pts.into_iter().zip(keep).filter(|(_, k)| *k).map(|(p, _)| p).collect()
}

fn extreme_flags(pts: &[Vec<Q>]) -> Vec<bool> {
    let d = pts[0].len();
    if d == 0 {
        return vec![true];
    }
    let mut certified = vec![false; pts.len()];
    let mut directions: Vec<Vec<Q>> = Vec::new();
    for i in 0..d {
        for s in [1, -1] {
            let mut v = vec![Q::zero(); d];
            v[i] = q(s);
            directions.push(v);
        }
    }
    for seed in 1..=4i64 {
        for s in [1, -1] {
            directions.push((0..d as i64).map(|i| q(s * ((seed * (i + 1)) % 7 + 1))).collect());
        }
    }
    for dir in &directions {
        let values: Vec<Q> = pts.iter().map(|p| dot(dir, p)).collect();
        let best = values.iter().max().unwrap();
        let winners: Vec<usize> = (0..pts.len()).filter(|&k| &values[k] == best).collect();
        if let [only] = winners[..] {
            certified[only] = true;
        }
    }
    if let Some(ints) = scaled_integers(&pts) {
        certify_by_centroid(&ints, &mut certified);
    }
    // the largest point in lexicographic order is always a vertex
    certified[pts.len() - 1] = true;
    let mut known: Vec<usize> = (0..pts.len()).filter(|&k| certified[k]).collect();
    for k in 0..pts.len() {
        while !certified[k] {
            let hull: Vec<&Vec<Q>> = known.iter().map(|&i| &pts[i]).collect();
            let Some(u) = hull_separation(&pts[k], &hull) else {
                break;
            };
            // the lexicographically largest maximizer of a separating
            // direction is a vertex outside the known hull
            let values: Vec<Q> = pts.iter().map(|p| dot(&u, p)).collect();
            let best = values.iter().max().unwrap();
            let j = (0..pts.len()).rev().find(|&i| &values[i] == best).unwrap();
            certified[j] = true;
            known.push(j);
        }
    }
    certified
}

/// The points times a common denominator, when the result fits comfortably
/// in machine integers.
fn scaled_integers(pts: &[Vec<Q>]) -> Option<Vec<Vec<i128>>> {
    let mut lcm = BigInt::one();
    for x in pts.iter().flatten() {
        lcm = num_integer::Integer::lcm(&lcm, x.denom());
    }
    let bound = BigInt::from(1i64 << 40);
    pts.iter()
        .map(|p| {
            p.iter()
                .map(|x| {
                    let v = x.numer() * (&lcm / x.denom());
                    if v.abs() > bound {
                        None
                    } else {
                        i128::try_from(v).ok()
                    }
                })
                .collect()
        })
        .collect()
}

/// Marks every point that is the unique maximizer of the direction from the
/// centroid to itself.
fn certify_by_centroid(pts: &[Vec<i128>], certified: &mut [bool]) {
    let m = pts.len() as i128;
    let d = pts[0].len();
    let sum: Vec<i128> = (0..d).map(|c| pts.iter().map(|p| p[c]).sum()).collect();
    for k in 0..pts.len() {
        if certified[k] {
            continue;
        }
        let u: Vec<i128> = (0..d).map(|c| m * pts[k][c] - sum[c]).collect();
        let value = |p: &[i128]| -> i128 { p.iter().zip(&u).map(|(x, y)| x * y).sum() };
        let own = value(&pts[k]);
        if (0..pts.len()).all(|i| i == k || value(&pts[i]) < own) {
            certified[k] = true;
        }
    }
}

/// Exact test whether `p` is a convex combination of `others`, by a phase-one
/// simplex with Bland's rule.
pub fn in_convex_hull(p: &[Q], others: &[&Vec<Q>]) -> bool {
    hull_separation(p, others).is_none()
}

/// A direction `u` with `<u, p>` larger than `<u, x>` for every `x` in
/// `others`, or `None` when `p` lies in their convex hull.
pub fn hull_separation(p: &[Q], others: &[&Vec<Q>]) -> Option<Vec<Q>> {
    let k = others.len();
    let d = p.len();
    if k == 0 {
        return Some(vec![Q::zero(); d]);
    }
    let rows = d + 1;
    // columns: k convex weights, `rows` artificials, right-hand side
    let width = k + rows + 1;
    let mut t: Vec<Vec<Q>> = Vec::with_capacity(rows);
    let mut flips = Vec::with_capacity(rows);
    for r in 0..rows {
        let mut row = vec![Q::zero(); width];
        let rhs = if r < d { p[r].clone() } else { Q::one() };
        let flip = rhs.is_negative();
        flips.push(flip);
        for (c, x) in others.iter().enumerate() {
            let coeff = if r < d { x[r].clone() } else { Q::one() };
            row[c] = if flip { -coeff } else { coeff };
        }
        row[k + r] = Q::one();
        row[width - 1] = if flip { -rhs } else { rhs };
        t.push(row);
    }
    let mut basis: Vec<usize> = (k..k + rows).collect();
    // reduced costs for minimizing the sum of artificials
    let mut cost = vec![Q::zero(); width];
    for row in &t {
        for c in 0..width {
            if c < k || c == width - 1 {
                cost[c] -= &row[c];
            }
        }
    }
    loop {
        let Some(enter) = (0..width - 1).find(|&c| cost[c].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Q)> = None;
        for r in 0..rows {
            if t[r][enter].is_positive() {
                let ratio = &t[r][width - 1] / &t[r][enter];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let Some((lr, _)) = leave else {
            // cannot happen for a bounded phase-one problem
            break;
        };
        let inv = t[lr][enter].recip();
        for x in t[lr].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = t[lr].clone();
        for (r, row) in t.iter_mut().enumerate() {
            if r != lr && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        let f = cost[enter].clone();
        for (x, y) in cost.iter_mut().zip(&pivot_row) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
        basis[lr] = enter;
    }
    // the objective row holds minus the remaining infeasibility
    if cost[width - 1].is_zero() {
        return None;
    }
    // phase-one duals y_r = 1 - (reduced cost of artificial r) satisfy
    // y.A <= 0 < y.b, so their coordinate part separates
    Some(
        (0..d)
            .map(|r| {
                let y = Q::one() - &cost[k + r];
                if flips[r] { -y } else { y }
            })
            .collect(),
    )
}

/// Facets by gift wrapping inside a chart of the affine hull.
fn facets(vertices: &[Vec<Q>]) -> Vec<Facet> {
    let Some(r) = affine_rank(vertices) else {
        return Vec::new();
    };
    if r == 0 {
        return Vec::new();
    }
    let d = vertices[0].len();
    let (chart, ys) = chart_coordinates(vertices);
    let mut found: Vec<Facet> = hull_facets(&ys)
        .into_iter()
        .map(|(on, a)| {
            let mut normal = vec![Q::zero(); d];
            for (x, &c) in a.iter().zip(&chart) {
                normal[c] = x.clone();
            }
            Facet { vertices: on, normal }
        })
        .collect();
    found.sort_by(|x, y| x.vertices.cmp(&y.vertices));
    found
}

/// Coordinates that parametrize the affine hull of `points` injectively,
/// and the points expressed in them.
fn chart_coordinates(points: &[Vec<Q>]) -> (Vec<usize>, Vec<Vec<Q>>) {
    let mut diffs: Vec<Vec<Q>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(&points[0]).map(|(a, b)| a - b).collect())
        .collect();
    let chart = rref(&mut diffs);
    let ys = points
        .iter()
        .map(|p| chart.iter().map(|&c| p[c].clone()).collect())
        .collect();
    (chart, ys)
}

type RawFacet = (Vec<usize>, Vec<Q>);

/// Facets of a full-dimensional point configuration: sorted indices of the
/// points on each facet and an outer normal.
fn hull_facets(pts: &[Vec<Q>]) -> Vec<RawFacet> {
    let r = pts[0].len();
    if r == 1 {
        let lo = pts.iter().map(|p| &p[0]).min().unwrap();
        let hi = pts.iter().map(|p| &p[0]).max().unwrap();
        let on = |v: &Q| (0..pts.len()).filter(|&k| &pts[k][0] == v).collect::<Vec<_>>();
        return vec![(on(lo), vec![-Q::one()]), (on(hi), vec![Q::one()])];
    }
    let first = initial_facet(pts);
    let mut seen: HashSet<Vec<usize>> = HashSet::from([first.0.clone()]);
    let mut queue = vec![first];
    let mut out = Vec::new();
    while let Some((on, a)) = queue.pop() {
        let sub: Vec<Vec<Q>> = on.iter().map(|&k| pts[k].clone()).collect();
        let (chart, ys) = chart_coordinates(&sub);
        for (ridge_local, b_local) in hull_facets(&ys) {
            let ridge: Vec<usize> = ridge_local.iter().map(|&k| on[k]).collect();
            let mut beta = vec![Q::zero(); r];
            for (x, &c) in b_local.iter().zip(&chart) {
                beta[c] = x.clone();
            }
            let next = rotate(pts, &ridge, &a, &beta);
            if seen.insert(next.0.clone()) {
                queue.push(next);
            }
        }
        out.push((on, a));
    }
    out
}

/// Some facet, found from a facet of the projection that forgets the last
/// coordinate.
fn initial_facet(pts: &[Vec<Q>]) -> RawFacet {
    let r = pts[0].len();
    if r == 1 {
        let hi = pts.iter().map(|p| &p[0]).max().unwrap();
        return ((0..pts.len()).filter(|&k| &pts[k][0] == hi).collect(), vec![Q::one()]);
    }
    let proj: Vec<Vec<Q>> = pts.iter().map(|p| p[..r - 1].to_vec()).collect();
    let (on, b) = initial_facet(&proj);
    let mut a = b;
    a.push(Q::zero());
    let face: Vec<Vec<Q>> = on.iter().map(|&k| pts[k].clone()).collect();
    if affine_rank(&face) == Some(r - 1) {
        return (on, a);
    }
    // the face has codimension two: rotate around it
    let base = &face[0];
    let diffs: Vec<Vec<Q>> = face[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(x, y)| x - y).collect())
        .collect();
    let beta = nullspace(&diffs, r)
        .into_iter()
        .find(|n| super::linalg::rank(&[a.clone(), n.clone()]) == 2)
        .expect("annihilator of a codimension-two face has rank two");
    rotate(pts, &on, &a, &beta)
}

/// Tilts the supporting hyperplane with normal `a` around the face `ridge`
/// in the direction `beta` (a functional constant on `ridge`) until it meets
/// another point.
fn rotate(pts: &[Vec<Q>], ridge: &[usize], a: &[Q], beta: &[Q]) -> RawFacet {
    let g0 = &pts[ridge[0]];
    let rel = |v: &Vec<Q>| -> Vec<Q> { v.iter().zip(g0).map(|(x, y)| x - y).collect() };
    let mut lambda: Option<Q> = None;
    for v in pts {
        let u = rel(v);
        let av = dot(a, &u);
        if av.is_negative() {
            let t = dot(beta, &u) / -av;
            if lambda.as_ref().is_none_or(|l| t > *l) {
                lambda = Some(t);
            }
        }
    }
    let lambda = lambda.expect("full-dimensional configuration has points below every facet");
    let normal: Vec<Q> = beta.iter().zip(a).map(|(b, x)| b + &lambda * x).collect();
    let on = (0..pts.len())
        .filter(|&k| dot(&normal, &rel(&pts[k])).is_zero())
        .collect();
    (on, normal)
}

/// Orders the vertices of a 3-dimensional facet counter-clockwise when seen
/// from outside.
fn cyclic_order(vertices: &[Vec<Q>], ids: &[usize], normal: &[Q]) -> Vec<usize> {
    let k = Q::from_integer(BigInt::from(ids.len()));
    let centroid: Vec<Q> = (0..3)
        .map(|c| ids.iter().map(|&i| vertices[i][c].clone()).sum::<Q>() / &k)
        .collect();
    let rel = |i: usize| -> Vec<Q> {
        vertices[i]
            .iter()
            .zip(&centroid)
            .map(|(a, b)| a - b)
            .collect()
    };
    let cross = |a: &[Q], b: &[Q]| -> Vec<Q> {
        vec![
            &a[1] * &b[2] - &a[2] * &b[1],
            &a[2] * &b[0] - &a[0] * &b[2],
            &a[0] * &b[1] - &a[1] * &b[0],
        ]
    };
    let r = rel(ids[0]);
    let s = cross(normal, &r);
    // (x, y) coordinates in the plane spanned by r and s
    let mut keyed: Vec<(Q, Q, usize)> = ids
        .iter()
        .map(|&i| {
            let u = rel(i);
            (dot(&u, &r), dot(&u, &s), i)
        })
        .collect();
    let half = |x: &Q, y: &Q| -> u8 {
        if y.is_positive() || (y.is_zero() && x.is_positive()) {
            0
        } else {
            1
        }
    };
    keyed.sort_by(|a, b| {
        half(&a.0, &a.1).cmp(&half(&b.0, &b.1)).then_with(|| {
            // a before b when b lies counter-clockwise of a
            let c = &a.0 * &b.1 - &a.1 * &b.0;
            Q::zero().cmp(&c)
        })
    });
    keyed.into_iter().map(|(_, _, i)| i).collect()
}

/// Decimal rendering with at most `digits` fractional digits, computed
/// from the exact value.
pub fn fmt_decimal(x: &Q, digits: usize) -> String {
    if x.is_integer() {
        return x.numer().to_string();
    }
    let neg = x.is_negative();
    let a = x.abs();
    let int = a.numer() / a.denom();
    let mut rem = a.numer() % a.denom();
    let mut frac = String::new();
    for _ in 0..digits {
        if rem.is_zero() {
            break;
        }
        rem *= 10;
        frac.push_str(&(&rem / a.denom()).to_string());
        rem %= a.denom();
    }
    format!("{}{}.{}", if neg { "-" } else { "" }, int, frac)
}
