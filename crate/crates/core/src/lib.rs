//! Cayley graphs of symmetric groups generated by transpositions.
//!
//! Builds `Cay(S_n, S)` for a transposition set `S`, computes its full
//! automorphism group and the stabilizers of the identity vertex, and checks
//! the normality statements relating them to the transposition graph `T(S)`.

pub mod autosearch;
pub mod cli;
pub mod cayley;
pub mod error;
pub mod graph;
pub mod limits;
pub mod perm;
pub mod permgroup;
pub mod tgraph;
pub mod theory;
pub mod verify;

pub use error::{Error, Result};
