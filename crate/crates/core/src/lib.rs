//! Generalized associahedra for simply-laced Dynkin quivers, built from
//! deformed mesh relations and checked against cluster-algebra data
//! computed by mutation.

pub mod arq;
pub mod cluster;
pub mod geometry;
pub mod laurent;
pub mod oracle_rep_a;
pub mod quiver;
pub mod verify;

use thiserror::Error;

pub use arq::{CompatibilityTable, HomTable, Index, TranslationWindow};
pub use cluster::{ClusterAtlas, Seed};
pub use geometry::{CTuple, VPolytope};
pub use laurent::{LaurentPoly, VarSet};
pub use quiver::{DynkinQuiver, DynkinType, IceQuiver};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Quiver(#[from] quiver::QuiverError),
    #[error(transparent)]
    Arq(#[from] arq::ArqError),
    #[error(transparent)]
    Laurent(#[from] laurent::LaurentError),
    #[error(transparent)]
    Cluster(#[from] cluster::ClusterError),
    #[error(transparent)]
    Geometry(#[from] geometry::GeometryError),
    #[error(transparent)]
    Oracle(#[from] oracle_rep_a::OracleError),
}
