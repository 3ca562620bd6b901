use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Rational, Scalar};

/// Polynomial in `t` with rational coefficients, lowest power first, trailing
/// zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DensePoly {
    coeffs: Vec<Rational>,
}

impl DensePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// `a + b·t`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::from_coeffs(vec![a, b])
    }

    /// `c·t^k`.
    pub fn monomial(k: usize, c: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Horner evaluation over any coefficient field containing ℚ.
    pub fn eval<F: Scalar>(&self, t: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t.clone() + F::from(c.clone());
        }
        acc
    }

    /// `t^d · p(1/t)`, i.e. the coefficient list of length `d + 1` reversed.
    /// Requires `d ≥ deg p`.
    pub fn reciprocal(&self, d: usize) -> Self {
        assert!(self.degree().is_none_or(|deg| deg <= d));
        let rev = (0..=d).rev().map(|k| self.coeff(k)).collect();
        Self::from_coeffs(rev)
    }

    /// Sum of all coefficients, i.e. `p(1)`.
    pub fn coeff_sum(&self) -> Rational {
        self.coeffs.iter().fold(Rational::zero(), |acc, c| acc + c)
    }
}

impl<'b> Add<&'b DensePoly> for &DensePoly {
    type Output = DensePoly;
    fn add(self, rhs: &'b DensePoly) -> DensePoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        DensePoly::from_coeffs((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'b> Sub<&'b DensePoly> for &DensePoly {
    type Output = DensePoly;
    fn sub(self, rhs: &'b DensePoly) -> DensePoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        DensePoly::from_coeffs((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'b> Mul<&'b DensePoly> for &DensePoly {
    type Output = DensePoly;
    fn mul(self, rhs: &'b DensePoly) -> DensePoly {
        if self.is_zero() || rhs.is_zero() {
            return DensePoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        DensePoly::from_coeffs(out)
    }
}

forward_ref_binop!(DensePoly, Add, add);
forward_ref_binop!(DensePoly, Sub, sub);
forward_ref_binop!(DensePoly, Mul, mul);

impl Neg for &DensePoly {
    type Output = DensePoly;
    fn neg(self) -> DensePoly {
        DensePoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for DensePoly {
    type Output = DensePoly;
    fn neg(self) -> DensePoly {
        -&self
    }
}

impl fmt::Display for DensePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                _ => write!(f, "{c}*t^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::{int, rat, QsElem};

    #[test]
    fn trims_trailing_zeros() {
        let p = DensePoly::from_coeffs(vec![int(1), int(0), int(0)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(DensePoly::from_coeffs(vec![int(0)]).degree(), None);
    }

    #[test]
    fn evaluation() {
        assert_eq!(DensePoly::one().eval(&int(7)), int(1));
        let p = DensePoly::from_coeffs(vec![rat(1, 5), rat(3, 5), rat(1, 5)]);
        assert_eq!(p.eval(&int(1)), int(1));
        // 1/5 + 3/5·ω + 1/5·ω² = 1/5·(1 + ω + ω²) + 2/5·ω = 2/5·ω
        let w = QsElem::omega();
        assert_eq!(p.eval(&w), &w * &QsElem::from(rat(2, 5)));
    }

    #[test]
    fn product_and_reciprocal() {
        let a = DensePoly::linear(int(1), int(2));
        let b = DensePoly::linear(int(2), int(1));
        let ab = &a * &b;
        assert_eq!(ab.coeffs(), &[int(2), int(5), int(2)]);
        assert_eq!(ab.reciprocal(2), ab);
        assert_eq!(a.reciprocal(1), b);
        assert_eq!(a.reciprocal(2).coeffs(), &[int(0), int(2), int(1)]);
    }

    #[test]
    fn coefficient_sum_is_value_at_one() {
        let p = DensePoly::from_coeffs(vec![int(3), int(-1), rat(1, 2)]);
        assert_eq!(p.coeff_sum(), p.eval(&int(1)));
    }
}
