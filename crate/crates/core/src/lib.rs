//! Exact computation of upper bounds on the resolvent degree of the
//! finite simple groups PSU(2,q) and PSU(3,q).
//!
//! The pipeline: class data for the Schur covers SL(2,q) and SU(3,q)
//! (symbolic for all q, brute-force enumerated at small q as an oracle),
//! Molien coefficients of the smallest nontrivial projective representation
//! via the symmetric-power character recursion, and an exhaustive
//! invariant-degree selection subject to the two premises
//! `d_1 ... d_r < mu(G)` and `RD(d_1 ... d_r) <= dim V - 1 - r`.
//!
//! All arithmetic is exact: rationals are arbitrary precision and character
//! values live in cyclotomic fields.

pub mod engine;
pub mod exact;
pub mod ffield;
pub mod molien;
pub mod oracle;
pub mod psu3_data;
pub mod psu3_reps;
pub mod rd_core;
pub mod sl2_chars;

pub use exact::{CycNumber, Rational};
