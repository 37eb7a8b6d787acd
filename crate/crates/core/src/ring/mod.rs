//! Ground ring `Z[q, q^-1, Q_1, ..., Q_m]`, its fraction field and
//! specializations.

pub mod bareiss;
pub mod field;
pub mod poly;
pub mod ratfunc;

pub use bareiss::{fraction_solve, nullspace as poly_nullspace, rank as poly_rank, Solution};
pub use field::{rank_at, Field, FieldValue, NumberFieldElem, PrimeFieldElem, SpecializationTarget};
pub use poly::{LaurentPolynomial, Monomial, MAX_PARAMS};
pub use ratfunc::RationalFunction;
