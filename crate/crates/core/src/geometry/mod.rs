//! The affine space of solutions of the deformed mesh relations, its
//! non-negative part, and the projection onto the final slice.

pub mod linalg;
pub mod polytope;

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_traits::{Signed, Zero};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::arq::{CompatibilityTable, HomTable, Index, TranslationWindow};
use linalg::{dot_int, fmt_q, parse_q, q, solve_integer, Q};
pub use polytope::{
    extreme_points, minkowski_sum, outer_normal_check, polytope_equal, Facet, VPolytope,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("ambient dimensions differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("OFF export needs a full-dimensional polytope in 3-space")]
    NotThreeDimensional,
    #[error("the set {0:?} is not pairwise compatible")]
    IncompatibleSet(Vec<Index>),
    #[error("the coordinate system for {0:?} is singular")]
    SingularSystem(Vec<Index>),
    #[error("the ray leaving {from:?} along {along} is unbounded")]
    UnboundedRay { from: Vec<Index>, along: Index },
    #[error("walking from {from:?} along {along} hit {hit}, which is not compatible with the rest")]
    WrongHitIndex {
        from: Vec<Index>,
        along: Index,
        hit: Index,
    },
    #[error("walking from {from:?} along {along} is degenerate")]
    DegenerateWalk { from: Vec<Index>, along: Index },
    #[error("edge walking needs strictly positive parameters")]
    NotStrictlyPositive,
    #[error("bad parameter tuple: {0}")]
    BadCTuple(String),
}

/// Deformation parameters `c_alpha >= 0`, one per element of `I+` in the
/// window's order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CTuple {
    values: Vec<Q>,
}

impl CTuple {
    pub fn new(w: &TranslationWindow, values: Vec<Q>) -> Result<Self, GeometryError> {
        if values.len() != w.iplus().len() {
            return Err(GeometryError::BadCTuple(format!(
                "expected {} entries, got {}",
                w.iplus().len(),
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|v| v.is_negative()) {
            return Err(GeometryError::BadCTuple(format!("negative entry {}", fmt_q(v))));
        }
        Ok(CTuple { values })
    }

    pub fn from_integers(w: &TranslationWindow, values: &[i64]) -> Result<Self, GeometryError> {
        Self::new(w, values.iter().map(|&x| q(x)).collect())
    }

    pub fn ones(w: &TranslationWindow) -> Self {
        CTuple {
            values: vec![q(1); w.iplus().len()],
        }
    }

    pub fn zeros(w: &TranslationWindow) -> Self {
        CTuple {
            values: vec![Q::zero(); w.iplus().len()],
        }
    }

    /// The indicator of the `I+` element at window position `p`.
    pub fn unit(w: &TranslationWindow, p: usize) -> Result<Self, GeometryError> {
        let r = w.iplus_rank(p).ok_or_else(|| {
            GeometryError::BadCTuple(format!("{} is not in I+", w.index(p)))
        })?;
        let mut c = Self::zeros(w);
        c.values[r] = q(1);
        Ok(c)
    }

    /// Parses `{"(i,j)": "num/den", ...}`; missing keys default to `default`.
    pub fn from_json(w: &TranslationWindow, v: &Value, default: &Q) -> Result<Self, GeometryError> {
        let obj = v
            .as_object()
            .ok_or_else(|| GeometryError::BadCTuple("expected a JSON object".into()))?;
        let mut values = vec![default.clone(); w.iplus().len()];
        for (k, val) in obj {
            let idx: Index = k.parse().map_err(GeometryError::BadCTuple)?;
            let p = w
                .position(idx)
                .and_then(|p| w.iplus_rank(p))
                .ok_or_else(|| GeometryError::BadCTuple(format!("{idx} is not in I+")))?;
            let text = match val {
                Value::String(s) => s.clone(),
                Value::Number(n) => n.to_string(),
                _ => return Err(GeometryError::BadCTuple(format!("bad value for {idx}"))),
            };
            values[p] = parse_q(&text)
                .ok_or_else(|| GeometryError::BadCTuple(format!("bad value {text:?}")))?;
        }
        Self::new(w, values)
    }

    pub fn to_json(&self, w: &TranslationWindow) -> Value {
        let map: Map<String, Value> = w
            .iplus()
            .iter()
            .zip(&self.values)
            .map(|(&p, v)| (w.index(p).to_string(), json!(fmt_q(v))))
            .collect();
        Value::Object(map)
    }

    pub fn values(&self) -> &[Q] {
        &self.values
    }

    /// The parameter attached to window position `p` (zero outside `I+`).
    pub fn at(&self, w: &TranslationWindow, p: usize) -> Q {
        w.iplus_rank(p)
            .map_or_else(Q::zero, |r| self.values[r].clone())
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.values.iter().all(Signed::is_positive)
    }

    pub fn add(&self, other: &CTuple) -> CTuple {
        CTuple {
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        }
    }
}

/// A point of the coordinate space on the index set, in window order.
pub type PointI = Vec<Q>;

/// `v_alpha = sum_beta c_beta dim Hom(W_alpha, W_beta)`.
pub fn v_point(w: &TranslationWindow, h: &HomTable, c: &CTuple) -> PointI {
    (0..w.len())
        .map(|a| {
            h.rows()[a]
                .iter()
                .zip(c.values())
                .filter(|(x, _)| **x != 0)
                .map(|(&x, cv)| q(x) * cv)
                .sum()
        })
        .collect()
}

/// Deformed mesh relations violated by `p`, as the indices where they start.
pub fn mesh_violations(w: &TranslationWindow, c: &CTuple, p: &[Q]) -> Vec<Index> {
    w.meshes()
        .iter()
        .filter(|m| {
            let mid: Q = m.middle.iter().map(|&x| p[x].clone()).sum();
            &p[m.start] + &p[m.end] - mid != c.at(w, m.start)
        })
        .map(|m| w.index(m.start))
        .collect()
}

/// The point of the solution space whose projection is `final_values`,
/// obtained by solving the mesh relations from right to left.
pub fn section(w: &TranslationWindow, c: &CTuple, final_values: &[Q]) -> PointI {
    let mut p = vec![Q::zero(); w.len()];
    for k in 1..=w.n() {
        p[w.shifted_projective(k)] = final_values[k - 1].clone();
    }
    for m in w.meshes().iter().rev() {
        let mid: Q = m.middle.iter().map(|&x| p[x].clone()).sum();
        p[m.start] = c.at(w, m.start) + mid - &p[m.end];
    }
    p
}

/// Reads coordinate `k` off the final element with g-vector `-e_k`.
pub fn project_pi(w: &TranslationWindow, p: &[Q]) -> Vec<Q> {
    (1..=w.n()).map(|k| p[w.shifted_projective(k)].clone()).collect()
}

fn indices_of(w: &TranslationWindow, set: &[usize]) -> Vec<Index> {
    set.iter().map(|&p| w.index(p)).collect()
}

/// Solves `<dim(alpha), m> = rhs_alpha` for `alpha` in `set`.
fn solve_in_dims(w: &TranslationWindow, set: &[usize], rhs: &[Q]) -> Option<Vec<Q>> {
    let a: Vec<Vec<i64>> = set.iter().map(|&p| w.dim(p).to_vec()).collect();
    solve_integer(&a, rhs)
}

/// The element of the direction space `{alpha -> <dim(alpha), m>}` given `m`.
fn direction_point(w: &TranslationWindow, m: &[Q]) -> PointI {
    (0..w.len()).map(|p| dot_int(w.dim(p), m)).collect()
}

/// The unique point of the solution space vanishing on the `n` elements of `t`.
pub fn vertex_for_cluster(
    w: &TranslationWindow,
    compat: &CompatibilityTable,
    v: &[Q],
    t: &[usize],
) -> Result<PointI, GeometryError> {
    if t.len() != w.n() || !compat.is_compatible_set(t) {
        return Err(GeometryError::IncompatibleSet(indices_of(w, t)));
    }
    point_vanishing_on(w, v, t).ok_or_else(|| GeometryError::SingularSystem(indices_of(w, t)))
}

/// The point of the solution space through `v` vanishing on the `n`
/// positions in `set`, if those coordinates are independent.
pub fn point_vanishing_on(w: &TranslationWindow, v: &[Q], set: &[usize]) -> Option<PointI> {
    let rhs: Vec<Q> = set.iter().map(|&p| -v[p].clone()).collect();
    let m = solve_in_dims(w, set, &rhs)?;
    let d = direction_point(w, &m);
    Some(v.iter().zip(d).map(|(a, b)| a + b).collect())
}

/// Vertices found by walking the edges of the non-negative part.
#[derive(Debug, Clone)]
pub struct VertexWalk {
    /// Vertex per cluster (sorted window positions).
    pub vertices: BTreeMap<Vec<usize>, PointI>,
    /// Edges between clusters, each pair sorted; the list is sorted.
    pub edges: Vec<(Vec<usize>, Vec<usize>)>,
}

impl VertexWalk {
    pub fn to_json(&self, w: &TranslationWindow) -> Value {
        json!(self
            .vertices
            .iter()
            .map(|(t, p)| json!({
                "cluster": t.iter().map(|&x| w.index(x).to_string()).collect::<Vec<_>>(),
                "point": p.iter().map(fmt_q).collect::<Vec<_>>(),
            }))
            .collect::<Vec<_>>())
    }
}

/// Enumerates vertices by moving along edges, starting from the final slice
/// where the vertex is `v_c` itself.
pub fn enumerate_vertices(
    w: &TranslationWindow,
    h: &HomTable,
    compat: &CompatibilityTable,
    c: &CTuple,
) -> Result<VertexWalk, GeometryError> {
    if !c.is_strictly_positive() {
        return Err(GeometryError::NotStrictlyPositive);
    }
    let n = w.n();
    let start = w.final_slice();
    let v = v_point(w, h, c);
    let mut vertices: BTreeMap<Vec<usize>, PointI> = BTreeMap::new();
    let mut faces: HashMap<Vec<usize>, Vec<Vec<usize>>> = HashMap::new();
    let mut queue = VecDeque::new();
    vertices.insert(start.clone(), v.clone());
    queue.push_back(start);
    while let Some(t) = queue.pop_front() {
        let point = vertices[&t].clone();
        for slot in 0..n {
            let mut face = t.clone();
            let alpha = face.remove(slot);
            if faces.get(&face).is_some_and(|f| f.len() >= 2) {
                continue;
            }
            let rhs: Vec<Q> = t.iter().map(|&p| if p == alpha { q(1) } else { Q::zero() }).collect();
            let m = solve_in_dims(w, &t, &rhs)
                .ok_or_else(|| GeometryError::SingularSystem(indices_of(w, &t)))?;
            let u = direction_point(w, &m);
            let mut best: Option<Q> = None;
            let mut hits: Vec<usize> = Vec::new();
            for g in 0..w.len() {
                if t.contains(&g) || !u[g].is_negative() {
                    continue;
                }
                let ratio = -&point[g] / &u[g];
                match &best {
                    Some(b) if ratio > *b => {}
                    Some(b) if ratio == *b => hits.push(g),
                    _ => {
                        best = Some(ratio);
                        hits = vec![g];
                    }
                }
            }
            let from = || indices_of(w, &t);
            let Some(step) = best else {
                return Err(GeometryError::UnboundedRay {
                    from: from(),
                    along: w.index(alpha),
                });
            };
            if hits.len() != 1 || !step.is_positive() {
                return Err(GeometryError::DegenerateWalk {
                    from: from(),
                    along: w.index(alpha),
                });
            }
            let hit = hits[0];
            if face.iter().any(|&b| !compat.compatible(b, hit)) {
                return Err(GeometryError::WrongHitIndex {
                    from: from(),
                    along: w.index(alpha),
                    hit: w.index(hit),
                });
            }
            let mut next = face.clone();
            next.push(hit);
            next.sort_unstable();
            if !vertices.contains_key(&next) {
                let np: PointI = point.iter().zip(&u).map(|(a, b)| a + &step * b).collect();
                vertices.insert(next.clone(), np);
                queue.push_back(next.clone());
            }
            let entry = faces.entry(face).or_default();
            for x in [t.clone(), next] {
                if !entry.contains(&x) {
                    entry.push(x);
                }
            }
        }
    }
    let mut edges: Vec<(Vec<usize>, Vec<usize>)> = faces
        .into_values()
        .filter(|f| f.len() == 2)
        .map(|mut f| {
            f.sort();
            let b = f.pop().unwrap();
            let a = f.pop().unwrap();
            (a, b)
        })
        .collect();
    edges.sort();
    Ok(VertexWalk { vertices, edges })
}

/// Evaluates `sigma(x)_alpha = v_alpha - <g(alpha), x>`, the inverse of the
/// projection written in g-vector coordinates.
pub fn section_by_gvectors(w: &TranslationWindow, v: &[Q], x: &[Q]) -> PointI {
    (0..w.len()).map(|p| &v[p] - dot_int(w.gvec(p), x)).collect()
}

/// Projected vertex set of `U_c` computed cluster by cluster.
pub fn polytope_from_clusters(
    w: &TranslationWindow,
    h: &HomTable,
    compat: &CompatibilityTable,
    c: &CTuple,
    clusters: &[Vec<usize>],
) -> Result<(VPolytope, Vec<PointI>), GeometryError> {
    let v = v_point(w, h, c);
    let full = clusters
        .iter()
        .map(|t| vertex_for_cluster(w, compat, &v, t))
        .collect::<Result<Vec<_>, _>>()?;
    let projected = full.iter().map(|p| project_pi(w, p)).collect();
    Ok((VPolytope::new(w.n(), projected), full))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::DynkinQuiver;

    fn setup() -> (TranslationWindow, HomTable, CompatibilityTable) {
        let w = TranslationWindow::build(&DynkinQuiver::parse("1->2; 3->2").unwrap()).unwrap();
        let h = HomTable::build(&w).unwrap();
        let c = CompatibilityTable::build(&w, &h);
        (w, h, c)
    }

    fn ints(p: &[Q]) -> Vec<i64> {
        p.iter()
            .map(|x| {
                assert!(x.is_integer());
                i64::try_from(x.to_integer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn v_point_of_running_example() {
        let (w, h, _) = setup();
        let v = v_point(&w, &h, &CTuple::ones(&w));
        assert_eq!(ints(&v[..3]), vec![3, 4, 3]);
        assert!(v[6..].iter().all(Zero::is_zero));
        assert!(mesh_violations(&w, &CTuple::ones(&w), &v).is_empty());
        let e02 = CTuple::unit(&w, w.position(Index::new(0, 2)).unwrap()).unwrap();
        assert_eq!(ints(&v_point(&w, &h, &e02)[..3]), vec![1, 1, 1]);
        assert!(v_point(&w, &h, &CTuple::zeros(&w)).iter().all(Zero::is_zero));
    }

    #[test]
    fn section_and_projection() {
        let (w, h, _) = setup();
        let c = CTuple::ones(&w);
        let p = section(&w, &c, &[q(3), q(4), q(3)]);
        assert_eq!(ints(&p), vec![0, 0, 0, 1, 3, 1, 3, 4, 3]);
        assert_eq!(project_pi(&w, &p), vec![q(3), q(4), q(3)]);
        let v = v_point(&w, &h, &c);
        assert_eq!(section_by_gvectors(&w, &v, &[q(3), q(4), q(3)]), p);
        assert!(section(&w, &CTuple::zeros(&w), &[q(0), q(0), q(0)])
            .iter()
            .all(Zero::is_zero));
    }

    #[test]
    fn walk_finds_fourteen_vertices() {
        let (w, h, compat) = setup();
        let walk = enumerate_vertices(&w, &h, &compat, &CTuple::ones(&w)).unwrap();
        assert_eq!(walk.vertices.len(), 14);
        assert_eq!(walk.edges.len(), 21);
        let v = v_point(&w, &h, &CTuple::ones(&w));
        for (t, p) in &walk.vertices {
            assert_eq!(&vertex_for_cluster(&w, &compat, &v, t).unwrap(), p);
        }
        assert_eq!(
            enumerate_vertices(&w, &h, &compat, &CTuple::zeros(&w)).unwrap_err(),
            GeometryError::NotStrictlyPositive
        );
    }

    #[test]
    fn incompatible_sets_are_rejected() {
        let (w, h, compat) = setup();
        let v = v_point(&w, &h, &CTuple::ones(&w));
        let p = |i, j| w.position(Index::new(i, j)).unwrap();
        let bad = vec![p(0, 1), p(1, 1), p(0, 3)];
        assert!(matches!(
            vertex_for_cluster(&w, &compat, &v, &bad),
            Err(GeometryError::IncompatibleSet(_))
        ));
    }

    #[test]
    fn a1_segment() {
        let w = TranslationWindow::build(&DynkinQuiver::parse("1").unwrap()).unwrap();
        let h = HomTable::build(&w).unwrap();
        let compat = CompatibilityTable::build(&w, &h);
        let walk = enumerate_vertices(&w, &h, &compat, &CTuple::ones(&w)).unwrap();
        let pts: Vec<Vec<i64>> = walk.vertices.values().map(|p| ints(p)).collect();
        assert_eq!(pts, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn c_tuple_json() {
        let (w, _, _) = setup();
        let c = CTuple::from_json(&w, &serde_json::json!({"(0,2)": "3/2"}), &q(1)).unwrap();
        assert_eq!(c.values()[1], Q::new(3.into(), 2.into()));
        assert_eq!(CTuple::from_json(&w, &c.to_json(&w), &q(0)).unwrap(), c);
        assert!(CTuple::from_json(&w, &serde_json::json!({"(2,2)": 1}), &q(1)).is_err());
    }
}
