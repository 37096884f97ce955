//! Inverse K-Chevalley expansions for semi-infinite flag manifolds of
//! simply-laced type.
//!
//! The crate enumerates decorated quantum walks over alcove paths and sums
//! their contributions into formal `Z[q, q^-1]`-combinations of twisted
//! Schubert class symbols. Independent drivers check path independence,
//! additivity in the weight, agreement with the minuscule formula and the
//! local lemmas about the quantum Bruhat graph.

pub mod alcove;
pub mod chevalley;
pub mod cli;
pub mod error;
pub mod golden;
pub mod kexpr;
pub mod lattice;
pub mod qbg;
pub mod walks;
pub mod weyl;

pub use error::{Error, Result};
pub use lattice::{CartanType, Family, Root, RootSystem, Weight};
pub use weyl::{AffineWeylElement, WeylElement};
