//! Exact computations in cyclotomic Hecke algebras of type G(m,1,n), their
//! signed permutation modules and the associated cyclotomic q-Schur
//! superalgebras.
//!
//! Conventions shared by every module:
//! * permutations are stored in one-line notation and composed left to
//!   right, `(wv)(i) = v(w(i))`, so `T_w T_v = T_{wv}` whenever lengths add;
//! * the symmetric group acts on tableaux on the right by replacing each
//!   entry `i` with `w(i)`;
//! * the quadratic relation is `T_i^2 = (q-1) T_i + q`.

pub mod combin;
pub mod error;
pub mod golden;
pub mod hecke;
pub mod ring;
pub mod schur;
pub mod supermod;
pub mod supertab;
pub mod symm;

pub use error::{Error, Result};
