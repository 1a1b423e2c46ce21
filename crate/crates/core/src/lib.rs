//! Exact computation with class transpositions of the integers.
//!
//! A class transposition `τ_{r1(m1), r2(m2)}` swaps `r1 + m1*k` with
//! `r2 + m2*k` for every integer `k`. This crate builds and applies them,
//! multiplies them, and computes orders and cycle structures of products of
//! two of them, both through a finite reduction (horizontal pairs) and
//! through the product graph. A Schreier–Sims engine handles the
//! permutation groups generated by the images of `CT_k`.
//!
//! Products act left to right: in `t1·t2`, `t1` is applied first.

pub mod cli;
pub mod error;
pub mod graph;
pub mod group;
pub mod order;
pub mod perm;
pub mod rcwa;
pub mod residue;
pub mod search;
pub mod trace;
pub mod transposition;

pub use error::{Error, Result};
pub use graph::{ComponentKind, CycleLength, GraphComponent, Letter, ProductGraph, Vertex};
pub use group::{GeneratorSet, StabilizerChain};
pub use order::{Method, OrderReport, OrderStatus};
pub use perm::{CycleStructure, FinitePermutation};
pub use rcwa::{AffinePiece, RcwaMapping};
pub use residue::ResidueClass;
pub use transposition::{ClassTransposition, Orientation};
