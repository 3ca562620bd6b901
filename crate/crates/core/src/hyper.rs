//! Generalized binomials, Pochhammer symbols and terminating hypergeometric
//! series, all evaluated exactly.
//!
//! A terminating series `pFq(a₁..a_p; b₁..b_q; z)` is summed as
//!
//! ```text
//! Σ_{j=0}^{N} (a₁)_j ⋯ (a_p)_j / ((b₁)_j ⋯ (b_q)_j) · z^j / j!
//! ```
//!
//! where `N = −a` for the most negative nonpositive-integer upper parameter.
//! No limit is ever taken: a lower factor vanishing inside the summation
//! range is reported as [`Error::DegenerateParameters`].

use std::fmt;

use num_traits::{One, Zero};

use crate::exact_algebra::{as_integer, int, Rational, Scalar};
use crate::{Error, Result};

/// `r(r−1)⋯(r−k+1)/k!` for any rational `r`.
pub fn gen_binomial(r: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * (r - int(i as i64)) / int(i as i64 + 1);
    }
    acc
}

/// Rising factorial `(a)_j = a(a+1)⋯(a+j−1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &Rational, j: u32) -> Rational {
    let mut acc = Rational::one();
    for i in 0..j {
        acc *= a + int(i as i64);
    }
    acc
}

/// Parameters of a terminating `pFq` series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypSpec {
    pub upper: Vec<Rational>,
    pub lower: Vec<Rational>,
}

impl HypSpec {
    pub fn new(upper: Vec<Rational>, lower: Vec<Rational>) -> Self {
        Self { upper, lower }
    }

    /// `₂F₁(a, b; c; ·)`.
    pub fn gauss(a: Rational, b: Rational, c: Rational) -> Self {
        Self::new(vec![a, b], vec![c])
    }

    /// Index of the last term, from the most negative integer upper parameter.
    pub fn termination_order(&self) -> Option<u64> {
        self.upper
            .iter()
            .filter_map(as_integer)
            .filter_map(|a| (-a).try_into().ok())
            .max()
    }

    /// Term coefficients `c_j`, so that the series is `Σ c_j z^j`.
    ///
    /// The list stops early when a numerator factor vanishes; trailing terms
    /// are then zero.
    pub fn coefficients(&self) -> Result<Vec<Rational>> {
        let n = self
            .termination_order()
            .ok_or_else(|| Error::DegenerateParameters(format!("{self} does not terminate")))?;
        let mut coeffs = vec![Rational::one()];
        for j in 1..=n {
            let shift = int(j as i64 - 1);
            let num = self
                .upper
                .iter()
                .fold(Rational::one(), |acc, a| acc * (a + &shift));
            let den = self
                .lower
                .iter()
                .fold(Rational::one(), |acc, b| acc * (b + &shift));
            if den.is_zero() {
                let kind = if num.is_zero() {
                    "0/0"
                } else {
                    "division by zero"
                };
                return Err(Error::DegenerateParameters(format!(
                    "{self}: {kind} in term {j}"
                )));
            }
            if num.is_zero() {
                break;
            }
            let prev = coeffs.last().expect("nonempty");
            let next = prev * num / (den * int(j as i64));
            coeffs.push(next);
        }
        Ok(coeffs)
    }
}

impl fmt::Display for HypSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Rational]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        write!(
            f,
            "{}F{}({}; {})",
            self.upper.len(),
            self.lower.len(),
            join(&self.upper),
            join(&self.lower)
        )
    }
}

/// Exact value of a terminating series at `z`, over ℚ or ℚ(s).
pub fn hyp_terminating<F: Scalar>(spec: &HypSpec, z: &F) -> Result<F> {
    let coeffs = spec.coefficients()?;
    let mut acc = F::zero();
    for c in coeffs.iter().rev() {
        acc = acc * z.clone() + F::from(c.clone());
    }
    Ok(acc)
}

/// Checks `₂F₁(−m, b; c; 1) = (c−b)_m / (c)_m`.
pub fn chu_vandermonde_check(m: u32, b: &Rational, c: &Rational) -> Result<bool> {
    let spec = HypSpec::gauss(-int(m as i64), b.clone(), c.clone());
    let lhs = hyp_terminating(&spec, &Rational::one())?;
    let den = pochhammer(c, m);
    if den.is_zero() {
        return Err(Error::DegenerateParameters(format!(
            "(c)_m = 0 for c = {c}"
        )));
    }
    Ok(lhs == pochhammer(&(c - b), m) / den)
}
