//! Exact computations for cluster algebras and their categorification.
//!
//! The crate covers quiver mutation and mutation classes ([`quiver`]),
//! Laurent polynomial arithmetic ([`laurent`]), seeds and exchange graphs
//! ([`seed`]), representations of Dynkin quivers ([`repn`]), the cluster
//! category of a Dynkin quiver ([`clustercat`]), the polygon model of type A
//! ([`polygon`]) and quivers with potential ([`qp`]).
//!
//! All arithmetic is exact. Vertices are 0-indexed in the Rust API; the JSON
//! formats and variable names (`x1`, `x2`, ...) are 1-indexed.

pub mod clustercat;
pub mod laurent;
pub mod linalg;
pub mod polygon;
pub mod qp;
pub mod quiver;
pub mod repn;
pub mod seed;

pub use clustercat::{CCObject, ClusterCategory, ClusterTilting, CtGraph};
pub use laurent::{LaurentError, LaurentPoly, ReducedForm};
pub use linalg::{Field, Fp, Matrix};
pub use polygon::{Diagonal, Triangulation};
pub use qp::{ArrowQuiver, Potential, QP};
pub use quiver::{DiagramClass, DynkinType, ExtendedType, Finiteness, MutationClass, Quiver, QuiverError};
pub use repn::{ARQuiver, DimVector, Representation};
pub use seed::{ExchangeGraph, GraphResult, Seed, SeedError};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
