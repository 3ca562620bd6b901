//! Enumeration numbers and generating functions of alternating sign matrices.
//!
//! - `A(n)`, `A(n,r)`: total and refined counts;
//! - `A(n;3)`, `A(n,r;3)`: 3-enumeration, through the coefficients `b(m,α)`
//!   of `B_{2m}(t)`;
//! - `A(n,r;2)/A(n;2) = C(n−1, r−1)/2^{n−1}`;
//! - `H_n^{(1)}`, `H_n^{(3)}`: normalized generating functions in `t`.

mod bcoeff;
mod closed;
mod generating;
mod recurrence;
mod scan;

pub use bcoeff::{b_coeff, b_coeff_4f3, BCoeffs};
pub use closed::{
    formula_table, refined_asm, refined_asm2_ratio, refined_asm3, refined_row3, total_asm,
    total_asm2, total_asm3,
};
pub use generating::{h1_poly, h3_poly};
pub use recurrence::recurrence_check;
pub use scan::{concentration_scan, concentration_scan_for, in_window};

use num_traits::Zero;

use crate::exact_algebra::Rational;

/// Where the numbers in an [`EnumTable`] came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// Product formulas for `x = 1, 2`.
    ClosedForm,
    /// The `b(m,α)` formula for `x = 3`.
    Theorem,
    /// Column-state dynamic programming.
    OracleDP,
    /// Monotone-triangle recursion.
    OracleMT,
}

/// Refined `x`-enumeration `A(n, r; x)` for `r = 1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumTable {
    pub n: usize,
    pub weight_x: Rational,
    /// `counts[r − 1] = A(n, r; x)`.
    pub counts: Vec<Rational>,
    pub provenance: Provenance,
}

impl EnumTable {
    /// `A(n, r; x)` with 1-based `r`.
    pub fn count(&self, r: usize) -> &Rational {
        &self.counts[r - 1]
    }

    pub fn total(&self) -> Rational {
        self.counts.iter().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// `A(n, r; x) = A(n, n+1−r; x)`.
    pub fn is_symmetric(&self) -> bool {
        self.counts.iter().eq(self.counts.iter().rev())
    }

    /// Same numbers, regardless of provenance.
    pub fn same_counts(&self, other: &EnumTable) -> bool {
        self.n == other.n && self.weight_x == other.weight_x && self.counts == other.counts
    }

    /// `A(n, r; x) / A(n; x)` for each `r`.
    pub fn ratios(&self) -> Vec<Rational> {
        let total = self.total();
        self.counts.iter().map(|c| c / &total).collect()
    }
}
