//! Exact refined enumerations of alternating sign matrices.
//!
//! The crate is layered bottom-up:
//!
//! - [`exact_algebra`]: big rationals, the quadratic field ℚ(√−3), Laurent
//!   polynomials in `x` and dense polynomials in `t`.
//! - [`hyper`]: generalized binomials, Pochhammer symbols and terminating
//!   hypergeometric series.
//! - [`tq_solutions`]: the polynomial solutions of the T-Q equation
//!   `y(x) + y(q²x) + y(q⁻²x) = 0` at `q = exp(iπ/3)` and every identity
//!   relating them.
//! - [`asm_numbers`]: closed forms for `A(n)`, `A(n,r)`, `A(n;3)`,
//!   `A(n,r;3)`, the coefficients `b(m,α)` and the generating functions.
//! - [`oracle`]: two independent brute-force enumerations of `A(n,r;x)`.
//!
//! All arithmetic is exact. Nothing in the crate uses floating point.

pub mod asm_numbers;
pub mod combinat;
pub mod error;
pub mod exact_algebra;
pub mod hyper;
pub mod oracle;
pub mod report;
pub mod tq_solutions;

pub use error::{Error, Result};
pub use exact_algebra::{DensePoly, LaurentPoly, QsElem, Rational};
pub use report::{CheckEntry, CheckReport};
