//! Seed mutation, slice-by-slice assignment of cluster variables to the
//! window, exchange-graph enumeration, F-polynomials and coefficient
//! specialization.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::arq::TranslationWindow;
use crate::laurent::{LaurentError, LaurentPoly, VarSet};
use crate::quiver::{IceQuiver, QuiverError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClusterError {
    #[error("exchange relation failed: {0}")]
    InternalExchangeError(LaurentError),
    #[error("mutated variable {0} is not Laurent in the initial cluster")]
    LaurentViolation(String),
    #[error("mutation produced {0}, which matches no element of the index set")]
    UnmatchedVariable(String),
    #[error("mutation vertex {0} is not a mutable vertex")]
    BadVertex(usize),
    #[error("ice quiver is not built over the window's quiver")]
    BaseMismatch,
    #[error("exchange graph invariant violated: {0}")]
    InternalAtlas(String),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}

impl From<LaurentError> for ClusterError {
    fn from(e: LaurentError) -> Self {
        ClusterError::InternalExchangeError(e)
    }
}

/// A seed: extended exchange matrix, `n` mutable cluster variables and `m`
/// frozen variables, all inside one Laurent ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seed {
    matrix: Vec<Vec<i64>>,
    vars: Vec<LaurentPoly>,
    frozen: Vec<LaurentPoly>,
    ring: VarSet,
}

impl Seed {
    /// The seed `(x_1, ..., x_n)` with the frozen variables of `ice`.
    pub fn initial(ice: &IceQuiver) -> Result<Self, ClusterError> {
        let n = ice.n();
        let ring = VarSet::numbered("x", n).concat(&VarSet::new(ice.names().iter().cloned())?)?;
        let vars = ring.names()[..n]
            .iter()
            .map(|name| LaurentPoly::var(&ring, name))
            .collect::<Result<Vec<_>, _>>()?;
        let frozen = ring.names()[n..]
            .iter()
            .map(|name| LaurentPoly::var(&ring, name))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Seed {
            matrix: ice.extended_matrix(),
            vars,
            frozen,
            ring,
        })
    }

    pub fn n(&self) -> usize {
        self.vars.len()
    }

    pub fn ring(&self) -> &VarSet {
        &self.ring
    }

    /// The `(n+m) x n` extended exchange matrix.
    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    /// Cluster variable in slot `k` (1-based).
    pub fn var(&self, k: usize) -> &LaurentPoly {
        &self.vars[k - 1]
    }

    pub fn vars(&self) -> &[LaurentPoly] {
        &self.vars
    }

    /// Mutation at the mutable vertex `k` (1-based).
    pub fn mutate(&self, k: usize) -> Result<Seed, ClusterError> {
        let n = self.n();
        if k == 0 || k > n {
            return Err(ClusterError::BadVertex(k));
        }
        let kk = k - 1;
        let b = &self.matrix;
        let mut plus = LaurentPoly::one(&self.ring);
        let mut minus = LaurentPoly::one(&self.ring);
        for (row, entries) in b.iter().enumerate() {
            let e = entries[kk];
            if e == 0 {
                continue;
            }
            let v = if row < n {
                &self.vars[row]
            } else {
                &self.frozen[row - n]
            };
            let power = v.pow(e.unsigned_abs() as u32);
            if e > 0 {
                plus = &plus * &power;
            } else {
                minus = &minus * &power;
            }
        }
        let exchanged = (&plus + &minus).div_exact(&self.vars[kk])?;
        let frozen_names: Vec<&str> = self.ring.names()[n..].iter().map(String::as_str).collect();
        if !exchanged.is_polynomial_in(&frozen_names)? {
            return Err(ClusterError::LaurentViolation(exchanged.to_string()));
        }
        let matrix = mutate_matrix(b, kk);
        let mut vars = self.vars.clone();
        vars[kk] = exchanged;
        Ok(Seed {
            matrix,
            vars,
            frozen: self.frozen.clone(),
            ring: self.ring.clone(),
        })
    }
}

/// Matrix mutation at the 0-based column `k`.
pub fn mutate_matrix(b: &[Vec<i64>], k: usize) -> Vec<Vec<i64>> {
    b.iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, &bij)| {
                    if i == k || j == k {
                        -bij
                    } else {
                        let bik = row[k];
                        let bkj = b[k][j];
                        bij + bik.signum() * (bik * bkj).max(0)
                    }
                })
                .collect()
        })
        .collect()
}

/// Which source of the current slice to advance first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SourcePolicy {
    FirstSource,
    LastSource,
}

/// Cluster variables indexed by window position, over one Laurent ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceVariables {
    pub ring: VarSet,
    pub variables: Vec<LaurentPoly>,
}

/// Assigns a cluster variable to every element of the window by advancing
/// slices from the initial one, mutating at a source each time.
pub fn slice_variables(
    w: &TranslationWindow,
    ice: &IceQuiver,
    policy: SourcePolicy,
) -> Result<SliceVariables, ClusterError> {
    if ice.base() != w.quiver() {
        return Err(ClusterError::BaseMismatch);
    }
    let q = w.quiver();
    let n = q.n();
    let mut seed = Seed::initial(ice)?;
    let mut variables: Vec<Option<LaurentPoly>> = vec![None; w.len()];
    let mut cur = vec![0usize; n];
    for j in 1..=n {
        variables[w.initial_slice()[j - 1]] = Some(seed.var(j).clone());
    }
    loop {
        let is_source = |j: usize| {
            cur[j - 1] <= w.column_bound(j)
                && q.successors(j).all(|k| cur[k - 1] == cur[j - 1])
                && q.predecessors(j).all(|k| cur[k - 1] == cur[j - 1] + 1)
        };
        let mut sources = (1..=n).filter(|&j| is_source(j));
        let pick = match policy {
            SourcePolicy::FirstSource => sources.next(),
            SourcePolicy::LastSource => sources.last(),
        };
        let Some(j) = pick else { break };
        seed = seed.mutate(j)?;
        cur[j - 1] += 1;
        let p = w
            .position(crate::arq::Index::new(cur[j - 1], j))
            .expect("advanced slice stays in the window");
        variables[p] = Some(seed.var(j).clone());
    }
    if let Some(j) = (1..=n).find(|&j| cur[j - 1] != w.column_bound(j) + 1) {
        return Err(ClusterError::InternalAtlas(format!(
            "slice advance stalled in column {j}"
        )));
    }
    Ok(SliceVariables {
        ring: seed.ring().clone(),
        variables: variables
            .into_iter()
            .map(|v| v.expect("every element reached"))
            .collect(),
    })
}

/// Clusters and exchange edges, with principal-coefficient variables.
#[derive(Debug, Clone)]
pub struct ClusterAtlas {
    pub ring: VarSet,
    /// Principal-coefficient cluster variable per window position.
    pub variables: Vec<LaurentPoly>,
    /// Each cluster as sorted window positions; the list itself is sorted.
    pub clusters: Vec<Vec<usize>>,
    /// Pairs of cluster indices related by one mutation, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl ClusterAtlas {
    pub fn cluster_index(&self, cluster: &[usize]) -> Option<usize> {
        self.clusters
            .binary_search_by(|c| c.as_slice().cmp(cluster))
            .ok()
    }

    /// Whether two positions occur together in some cluster.
    pub fn co_occurrence(&self) -> Vec<Vec<bool>> {
        let len = self.variables.len();
        let mut m = vec![vec![false; len]; len];
        for c in &self.clusters {
            for &a in c {
                for &b in c {
                    m[a][b] = true;
                }
            }
        }
        m
    }

    pub fn to_json(&self, w: &TranslationWindow) -> Value {
        let key = |p: usize| w.index(p).to_string();
        let variables: Map<String, Value> = self
            .variables
            .iter()
            .enumerate()
            .map(|(p, v)| (key(p), json!(v.to_string())))
            .collect();
        json!({
            "variables": variables,
            "clusters": self
                .clusters
                .iter()
                .map(|c| c.iter().map(|&p| key(p)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

/// Breadth-first closure of the principal seed under mutation.
pub fn enumerate_atlas(w: &TranslationWindow) -> Result<ClusterAtlas, ClusterError> {
    let n = w.n();
    let framed = w.quiver().framed();
    let labelled = slice_variables(w, &framed, SourcePolicy::FirstSource)?;
    let lookup: HashMap<&LaurentPoly, usize> = labelled
        .variables
        .iter()
        .enumerate()
        .map(|(p, v)| (v, p))
        .collect();
    let locate = |v: &LaurentPoly| {
        lookup
            .get(v)
            .copied()
            .ok_or_else(|| ClusterError::UnmatchedVariable(v.to_string()))
    };

    let start = Seed::initial(&framed)?;
    let start_slots: Vec<usize> = start.vars().iter().map(locate).collect::<Result<_, _>>()?;
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut faces: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    let mut queue = VecDeque::new();
    let sorted = |slots: &[usize]| {
        let mut s = slots.to_vec();
        s.sort_unstable();
        s
    };
    ids.insert(sorted(&start_slots), 0);
    found.push(sorted(&start_slots));
    queue.push_back((start, start_slots));

    while let Some((seed, slots)) = queue.pop_front() {
        let id = ids[&sorted(&slots)];
        for k in 1..=n {
            let mut face: Vec<usize> = slots.clone();
            face.remove(k - 1);
            face.sort_unstable();
            if faces.get(&face).is_some_and(|v| v.len() >= 2) {
                continue;
            }
            let next = seed.mutate(k)?;
            let mut next_slots = slots.clone();
            next_slots[k - 1] = locate(next.var(k))?;
            let key = sorted(&next_slots);
            let next_id = match ids.get(&key) {
                Some(&existing) => existing,
                None => {
                    let fresh = found.len();
                    ids.insert(key.clone(), fresh);
                    found.push(key);
                    queue.push_back((next, next_slots));
                    fresh
                }
            };
            let entry = faces.entry(face).or_default();
            for c in [id, next_id] {
                if !entry.contains(&c) {
                    entry.push(c);
                }
            }
        }
    }

    // relabel clusters in sorted order
    let mut order: Vec<usize> = (0..found.len()).collect();
    order.sort_by(|&a, &b| found[a].cmp(&found[b]));
    let mut rank = vec![0; found.len()];
    for (r, &c) in order.iter().enumerate() {
        rank[c] = r;
    }
    let clusters: Vec<Vec<usize>> = order.iter().map(|&c| found[c].clone()).collect();
    let mut edges = Vec::new();
    for (face, members) in &faces {
        if members.len() != 2 {
            return Err(ClusterError::InternalAtlas(format!(
                "face {face:?} lies in {} clusters",
                members.len()
            )));
        }
        let (a, b) = (rank[members[0]], rank[members[1]]);
        edges.push((a.min(b), a.max(b)));
    }
    edges.sort_unstable();
    let mut degree = vec![0usize; clusters.len()];
    for &(a, b) in &edges {
        degree[a] += 1;
        degree[b] += 1;
    }
    if let Some(c) = degree.iter().position(|&d| d != n) {
        return Err(ClusterError::InternalAtlas(format!(
            "cluster {:?} has degree {} in the exchange graph",
            clusters[c], degree[c]
        )));
    }
    Ok(ClusterAtlas {
        ring: labelled.ring,
        variables: labelled.variables,
        clusters,
        edges,
    })
}

fn x_names(n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("x{k}")).collect()
}

/// Sets the initial cluster variables `x_1..x_n` to one.
pub fn evaluate_x_at_one(f: &LaurentPoly, n: usize) -> Result<LaurentPoly, ClusterError> {
    let names = x_names(n);
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    Ok(f.set_vars_to_one(&refs)?)
}

/// F-polynomial of the element at window position `p`, in `y1..yn`.
pub fn f_polynomial(atlas: &ClusterAtlas, p: usize) -> Result<LaurentPoly, ClusterError> {
    let n = atlas.ring.len() / 2;
    evaluate_x_at_one(&atlas.variables[p], n)
}

/// Name of the universal coefficient attached to window position `p`.
pub fn universal_name(w: &TranslationWindow, p: usize) -> String {
    let idx = w.index(p);
    format!("z{}_{}", idx.i, idx.j)
}

/// The ice quiver whose frozen row for each window element is minus its g-vector.
pub fn universal_ice(w: &TranslationWindow) -> Result<IceQuiver, ClusterError> {
    let rows = (0..w.len())
        .map(|p| w.gvec(p).iter().map(|x| -x).collect())
        .collect();
    let names = (0..w.len()).map(|p| universal_name(w, p)).collect();
    Ok(IceQuiver::new(w.quiver().clone(), rows, names)?)
}

/// Universal F-polynomials for every window position, in the `z` variables.
pub fn universal_f_polynomials(w: &TranslationWindow) -> Result<Vec<LaurentPoly>, ClusterError> {
    let ice = universal_ice(w)?;
    let vars = slice_variables(w, &ice, SourcePolicy::FirstSource)?;
    vars.variables
        .iter()
        .map(|f| evaluate_x_at_one(f, w.n()))
        .collect()
}

/// Recovers the cluster variable with coefficients from `ice` out of the
/// principal-coefficient variable `f_prin`. The result lives in the ring of
/// [`Seed::initial`] for `ice`.
pub fn separation_specialize(
    f_prin: &LaurentPoly,
    ice: &IceQuiver,
) -> Result<LaurentPoly, ClusterError> {
    let n = ice.n();
    let target = Seed::initial(ice)?.ring().clone();
    let mut images = HashMap::new();
    for i in 0..n {
        let mut e = vec![0i32; target.len()];
        for (j, row) in ice.frozen_rows().iter().enumerate() {
            e[n + j] = i32::try_from(row[i]).expect("small matrix entry");
        }
        images.insert(
            format!("y{}", i + 1),
            LaurentPoly::monomial(&target, e, BigInt::one()),
        );
    }
    let substituted = f_prin.substitute(&target, &images)?;
    let trop = tropical_f(f_prin, ice)?.with_vars(&target)?;
    Ok(substituted.div_exact(&trop)?)
}

/// `F^trop` of the principal variable `f_prin` under the coefficients of `ice`.
pub fn tropical_f(f_prin: &LaurentPoly, ice: &IceQuiver) -> Result<LaurentPoly, ClusterError> {
    let n = ice.n();
    let z = VarSet::new(ice.names().iter().cloned())?;
    let mut images = HashMap::new();
    for i in 0..n {
        let e = ice
            .frozen_rows()
            .iter()
            .map(|row| i32::try_from(row[i]).expect("small matrix entry"))
            .collect();
        images.insert(format!("y{}", i + 1), LaurentPoly::monomial(&z, e, BigInt::one()));
    }
    let f = evaluate_x_at_one(f_prin, n)?.with_vars(&VarSet::numbered("y", n))?;
    let observed: Vec<&str> = ice.names().iter().map(String::as_str).collect();
    Ok(f.substitute(&z, &images)?.tropical_eval(&observed)?)
}

/// F-polynomial dump keyed by index.
pub fn polynomials_to_json(w: &TranslationWindow, polys: &[LaurentPoly]) -> Value {
    let map: BTreeMap<_, _> = polys
        .iter()
        .enumerate()
        .map(|(p, f)| (w.index(p), f.to_string()))
        .collect();
    let obj: Map<String, Value> = map
        .into_iter()
        .map(|(k, v)| (k.to_string(), json!(v)))
        .collect();
    Value::Object(obj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arq::Index;
    use crate::quiver::DynkinQuiver;

    fn a3() -> TranslationWindow {
        TranslationWindow::build(&DynkinQuiver::parse("1->2; 3->2").unwrap()).unwrap()
    }

    fn at(w: &TranslationWindow, vars: &SliceVariables, i: usize, j: usize) -> LaurentPoly {
        vars.variables[w.position(Index::new(i, j)).unwrap()].clone()
    }

    #[test]
    fn matrix_mutation_is_involutive() {
        let b = DynkinQuiver::parse("1->2; 3->2").unwrap().framed().extended_matrix();
        for k in 0..3 {
            assert_eq!(mutate_matrix(&mutate_matrix(&b, k), k), b);
        }
    }

    #[test]
    fn principal_mutation_at_one() {
        let q = DynkinQuiver::parse("1->2; 3->2").unwrap();
        let s = Seed::initial(&q.framed()).unwrap();
        let m = s.mutate(1).unwrap();
        assert_eq!(m.var(1), &LaurentPoly::parse(s.ring(), "(x2 + y1)/x1").unwrap());
        assert_eq!(m.mutate(1).unwrap(), s);
        assert_eq!(s.mutate(4), Err(ClusterError::BadVertex(4)));
    }

    #[test]
    fn trivial_coefficients() {
        let w = a3();
        let v = slice_variables(&w, &IceQuiver::trivial(w.quiver().clone()), SourcePolicy::FirstSource)
            .unwrap();
        let r = &v.ring;
        let p = |s| LaurentPoly::parse(r, s).unwrap();
        assert_eq!(at(&w, &v, 1, 1), p("(x2 + 1)/x1"));
        assert_eq!(at(&w, &v, 1, 2), p("(x2^2 + 2*x2 + x1*x3 + 1)/(x1*x2*x3)"));
        assert_eq!(at(&w, &v, 2, 2), p("(x1*x3 + 1)/x2"));
    }

    #[test]
    fn source_policy_does_not_matter() {
        let w = a3();
        let f = w.quiver().framed();
        assert_eq!(
            slice_variables(&w, &f, SourcePolicy::FirstSource).unwrap(),
            slice_variables(&w, &f, SourcePolicy::LastSource).unwrap()
        );
    }

    #[test]
    fn atlas_of_a2_and_a3() {
        let w2 = TranslationWindow::build(&DynkinQuiver::parse("1->2").unwrap()).unwrap();
        let a2 = enumerate_atlas(&w2).unwrap();
        assert_eq!(a2.clusters.len(), 5);
        assert_eq!(a2.edges.len(), 5);
        let a3 = enumerate_atlas(&a3()).unwrap();
        assert_eq!(a3.clusters.len(), 14);
        assert_eq!(a3.edges.len(), 21);
    }

    #[test]
    fn f_polynomials_of_a3() {
        let w = a3();
        let atlas = enumerate_atlas(&w).unwrap();
        let y = VarSet::numbered("y", 3);
        let p = |i, j| f_polynomial(&atlas, w.position(Index::new(i, j)).unwrap()).unwrap();
        assert_eq!(p(1, 1), LaurentPoly::parse(&y, "1 + y1").unwrap());
        assert_eq!(p(1, 2).to_string(), "y1*y2*y3 + y1*y3 + y1 + y3 + 1");
        assert!(p(0, 2).is_one());
    }

    #[test]
    fn universal_rows_and_polynomials() {
        let w = a3();
        let ice = universal_ice(&w).unwrap();
        assert_eq!(ice.m(), 9);
        assert_eq!(ice.frozen_rows()[4], vec![1, -1, 1]);
        assert_eq!(ice.frozen_rows()[0], vec![-1, 0, 0]);
        let f = universal_f_polynomials(&w).unwrap();
        assert_eq!(f[3].to_string(), "z0_1 + z1_1*z1_2*z2_3");
        assert!(f[1].is_one());
    }

    #[test]
    fn separation_for_principal_and_trivial_ice() {
        let w = a3();
        let q = w.quiver().clone();
        let prin = slice_variables(&w, &q.framed(), SourcePolicy::FirstSource).unwrap();
        let triv = slice_variables(&w, &IceQuiver::trivial(q.clone()), SourcePolicy::FirstSource)
            .unwrap();
        for p in 0..w.len() {
            let f = &prin.variables[p];
            assert_eq!(&separation_specialize(f, &q.framed()).unwrap(), f);
            assert_eq!(
                separation_specialize(f, &IceQuiver::trivial(q.clone())).unwrap(),
                triv.variables[p]
            );
        }
    }
}
