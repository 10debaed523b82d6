//! Snake and band graph expansions of cluster variables for cluster algebras
//! from unpunctured orbifolds, with a small calculus for checking identities
//! between expansions.

pub mod calculus;
pub mod cli;
pub mod cluster;
pub mod fixtures;
pub mod laurent;
pub mod modp;
pub mod orbifold;
pub mod snakegraph;

pub use laurent::{LaurentPoly, Poly, VarTable};
pub use modp::Fp;
pub use snakegraph::{BandGraph, Graph, SnakeGraph};
