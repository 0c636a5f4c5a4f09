//! Type A cross-check: indecomposables as interval modules over `Q^op`,
//! with submodules enumerated by brute force.

use thiserror::Error;

use crate::arq::{Index, TranslationWindow};
use crate::geometry::VPolytope;
use crate::quiver::{DynkinQuiver, DynkinType};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("the quiver has type {0}, not type A")]
    NotTypeA(DynkinType),
    #[error("{0} is not an indecomposable module of the window")]
    NotInIPlus(Index),
    #[error("dimension vector {0:?} is not the indicator of a connected support")]
    NotInterval(Vec<i64>),
}

/// An indecomposable representation of `Q^op` with one-dimensional spaces on
/// a connected support and identity maps along every arrow inside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalModule {
    quiver: DynkinQuiver,
    support: Vec<usize>,
    dims: Vec<i64>,
}

impl IntervalModule {
    pub fn new(quiver: &DynkinQuiver, dims: Vec<i64>) -> Result<Self, OracleError> {
        let t = quiver.dynkin_type();
        if !matches!(t, DynkinType::A(_)) {
            return Err(OracleError::NotTypeA(t));
        }
        if dims.len() != quiver.n() || dims.iter().any(|&d| d != 0 && d != 1) {
            return Err(OracleError::NotInterval(dims));
        }
        let support: Vec<usize> = (1..=quiver.n()).filter(|&j| dims[j - 1] == 1).collect();
        if !support.is_empty() && !connected(quiver, &support) {
            return Err(OracleError::NotInterval(dims));
        }
        Ok(IntervalModule {
            quiver: quiver.clone(),
            support,
            dims,
        })
    }

    pub fn zero(quiver: &DynkinQuiver) -> Result<Self, OracleError> {
        Self::new(quiver, vec![0; quiver.n()])
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    /// Smallest and largest vertex of the support.
    pub fn interval(&self) -> Option<(usize, usize)> {
        Some((*self.support.first()?, *self.support.last()?))
    }

    pub fn dims(&self) -> &[i64] {
        &self.dims
    }

    /// Arrows of `Q^op` with both ends in the support.
    fn internal_arrows(&self) -> Vec<(usize, usize)> {
        self.quiver
            .opposite()
            .arrows()
            .iter()
            .copied()
            .filter(|(u, v)| self.support.contains(u) && self.support.contains(v))
            .collect()
    }

    fn is_closed(&self, arrows: &[(usize, usize)], e: &[i64]) -> bool {
        arrows.iter().all(|&(u, v)| e[u - 1] == 0 || e[v - 1] == 1)
    }

    fn sub_vectors(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        let s = self.support.len();
        (0u64..1 << s).map(move |mask| {
            let mut e = vec![0i64; self.quiver.n()];
            for (bit, &v) in self.support.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    e[v - 1] = 1;
                }
            }
            e
        })
    }

    /// Dimension vectors of all subrepresentations, sorted.
    pub fn submodule_dim_vectors(&self) -> Vec<Vec<i64>> {
        let arrows = self.internal_arrows();
        let mut out: Vec<Vec<i64>> = self
            .sub_vectors()
            .filter(|e| self.is_closed(&arrows, e))
            .collect();
        out.sort();
        out
    }

    /// Number of subrepresentations with dimension vector `e`. Every space is a
    /// line, so a subrepresentation is determined by which lines it contains.
    pub fn submodule_count(&self, e: &[i64]) -> usize {
        let arrows = self.internal_arrows();
        self.sub_vectors()
            .filter(|s| s.as_slice() == e && self.is_closed(&arrows, s))
            .count()
    }

    pub fn submodule_polytope(&self) -> VPolytope {
        VPolytope::from_integer_points(self.quiver.n(), &self.submodule_dim_vectors())
    }
}

fn connected(q: &DynkinQuiver, support: &[usize]) -> bool {
    let mut seen = vec![support[0]];
    let mut stack = vec![support[0]];
    while let Some(u) = stack.pop() {
        for v in q.neighbours(u) {
            if support.contains(&v) && !seen.contains(&v) {
                seen.push(v);
                stack.push(v);
            }
        }
    }
    seen.len() == support.len()
}

/// The interval module whose dimension vector is that of the window element at `p`.
pub fn interval_of(w: &TranslationWindow, p: usize) -> Result<IntervalModule, OracleError> {
    let t = w.quiver().dynkin_type();
    if !matches!(t, DynkinType::A(_)) {
        return Err(OracleError::NotTypeA(t));
    }
    if !w.is_iplus(p) {
        return Err(OracleError::NotInIPlus(w.index(p)));
    }
    IntervalModule::new(w.quiver(), w.dim(p).to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3() -> TranslationWindow {
        TranslationWindow::build(&DynkinQuiver::parse("1->2; 3->2").unwrap()).unwrap()
    }

    #[test]
    fn intervals_of_running_example() {
        let w = a3();
        let m = interval_of(&w, w.position(Index::new(0, 2)).unwrap()).unwrap();
        assert_eq!(m.interval(), Some((1, 3)));
        let m = interval_of(&w, w.position(Index::new(1, 3)).unwrap()).unwrap();
        assert_eq!(m.interval(), Some((1, 2)));
        let m = interval_of(&w, w.position(Index::new(1, 2)).unwrap()).unwrap();
        assert_eq!(m.interval(), Some((2, 2)));
        assert!(matches!(
            interval_of(&w, w.position(Index::new(2, 2)).unwrap()),
            Err(OracleError::NotInIPlus(_))
        ));
    }

    #[test]
    fn submodules_of_projective_cover() {
        let w = a3();
        let m = interval_of(&w, w.position(Index::new(0, 2)).unwrap()).unwrap();
        assert_eq!(
            m.submodule_dim_vectors(),
            vec![vec![0, 0, 0], vec![0, 0, 1], vec![1, 0, 0], vec![1, 0, 1], vec![1, 1, 1]]
        );
        assert_eq!(m.submodule_polytope().vertices().len(), 5);
        assert_eq!(m.submodule_count(&[1, 0, 1]), 1);
        assert_eq!(m.submodule_count(&[0, 1, 0]), 0);
    }

    #[test]
    fn simple_and_zero_modules() {
        let q = DynkinQuiver::parse("1->2; 3->2").unwrap();
        let s = IntervalModule::new(&q, vec![0, 1, 0]).unwrap();
        assert_eq!(s.submodule_dim_vectors(), vec![vec![0, 0, 0], vec![0, 1, 0]]);
        assert_eq!(s.submodule_polytope().vertices().len(), 2);
        let z = IntervalModule::zero(&q).unwrap();
        assert_eq!(z.submodule_dim_vectors(), vec![vec![0, 0, 0]]);
        assert!(IntervalModule::new(&q, vec![1, 0, 1]).is_err());
        let d4 = "D4".parse::<DynkinType>().unwrap().standard_quiver();
        assert!(matches!(
            IntervalModule::new(&d4, vec![1, 0, 0, 0]),
            Err(OracleError::NotTypeA(_))
        ));
    }
}
