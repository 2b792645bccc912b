//! Alternating sign matrices under strong and weak Bruhat order, with
//! Grothendieck and Schubert polynomials of ASM varieties and of unions of
//! matrix Schubert varieties.
//!
//! Indices are 1-based throughout. Permutations compose as functions,
//! `(v * w)(i) = v(w(i))`, and `pi_i(w) = w s_i` on a descent.

pub mod antichain;
pub mod asm;
pub mod error;
pub mod fixtures;
pub mod groth;
pub mod order;
pub mod poly;
pub mod poset;
pub mod verify;
pub mod weak;

pub use antichain::Antichain;
pub use asm::{Asm, BigrassTriple, Cell, Permutation, RankMatrix};
pub use error::{Error, Result};
pub use groth::{Family, PolyCache, Variant};
pub use order::AsmSet;
pub use poly::MultiPoly;
pub use poset::PosetGraph;
pub use verify::VerifyReport;
pub use weak::ChainWord;
