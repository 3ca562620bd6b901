use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{int, rat, Rational};

/// Element `ra + sb·s` of ℚ(s), where `s² = −3`.
///
/// `q = exp(iπ/3) = (1+s)/2` and `ω = q²` live here, which is all the
/// field the T-Q identities need.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QsElem {
    ra: Rational,
    sb: Rational,
}

impl QsElem {
    pub fn new(ra: Rational, sb: Rational) -> Self {
        Self { ra, sb }
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(int(n), Rational::zero())
    }

    /// The generator `s = √−3`.
    pub fn s() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    /// `q = (1+s)/2`, a primitive sixth root of unity.
    pub fn q() -> Self {
        Self::new(rat(1, 2), rat(1, 2))
    }

    /// `q⁻¹ = (1−s)/2`.
    pub fn q_inv() -> Self {
        Self::new(rat(1, 2), rat(-1, 2))
    }

    /// `ω = q² = (−1+s)/2`, a primitive cube root of unity.
    pub fn omega() -> Self {
        Self::new(rat(-1, 2), rat(1, 2))
    }

    pub fn ra(&self) -> &Rational {
        &self.ra
    }

    pub fn sb(&self) -> &Rational {
        &self.sb
    }

    pub fn is_rational(&self) -> bool {
        self.sb.is_zero()
    }

    /// The rational value, if the `s`-component vanishes.
    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.ra.clone())
    }

    /// Galois conjugate `s ↦ −s` (complex conjugation).
    pub fn conj(&self) -> Self {
        Self::new(self.ra.clone(), -&self.sb)
    }

    /// Field norm `ra² + 3·sb²`; zero only for zero.
    pub fn norm(&self) -> Rational {
        &self.ra * &self.ra + int(3) * &self.sb * &self.sb
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(Self::new(&self.ra / &n, -(&self.sb / &n)))
    }

    /// Integer power; negative exponents invert. Panics on `0^k`, `k < 0`.
    pub fn pow(&self, exp: i64) -> Self {
        let base = if exp < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }
}

impl From<Rational> for QsElem {
    fn from(r: Rational) -> Self {
        Self::new(r, Rational::zero())
    }
}

impl Zero for QsElem {
    fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.ra.is_zero() && self.sb.is_zero()
    }
}

impl One for QsElem {
    fn one() -> Self {
        Self::new(Rational::one(), Rational::zero())
    }
}

impl<'b> Add<&'b QsElem> for &QsElem {
    type Output = QsElem;
    fn add(self, rhs: &'b QsElem) -> QsElem {
        QsElem::new(&self.ra + &rhs.ra, &self.sb + &rhs.sb)
    }
}

impl<'b> Sub<&'b QsElem> for &QsElem {
    type Output = QsElem;
    fn sub(self, rhs: &'b QsElem) -> QsElem {
        QsElem::new(&self.ra - &rhs.ra, &self.sb - &rhs.sb)
    }
}

impl<'b> Mul<&'b QsElem> for &QsElem {
    type Output = QsElem;
    fn mul(self, rhs: &'b QsElem) -> QsElem {
        if self.sb.is_zero() && rhs.sb.is_zero() {
            return QsElem::from(&self.ra * &rhs.ra);
        }
        let ra = &self.ra * &rhs.ra - int(3) * &self.sb * &rhs.sb;
        let sb = &self.ra * &rhs.sb + &self.sb * &rhs.ra;
        QsElem::new(ra, sb)
    }
}

impl<'b> Div<&'b QsElem> for &QsElem {
    type Output = QsElem;
    /// Panics on division by zero, like the rational division it extends.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &'b QsElem) -> QsElem {
        self * &rhs.inv().expect("division by zero in Q(s)")
    }
}

forward_ref_binop!(QsElem, Add, add);
forward_ref_binop!(QsElem, Sub, sub);
forward_ref_binop!(QsElem, Mul, mul);
forward_ref_binop!(QsElem, Div, div);

impl Neg for QsElem {
    type Output = QsElem;
    fn neg(self) -> QsElem {
        QsElem::new(-self.ra, -self.sb)
    }
}

impl Neg for &QsElem {
    type Output = QsElem;
    fn neg(self) -> QsElem {
        QsElem::new(-&self.ra, -&self.sb)
    }
}

impl fmt::Display for QsElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.ra.is_zero(), self.sb.is_zero()) {
            (_, true) => write!(f, "{}", self.ra),
            (true, false) => write!(f, "{}*s", self.sb),
            (false, false) => {
                let sign = if self.sb.is_negative() { '-' } else { '+' };
                write!(f, "({} {} {}*s)", self.ra, sign, self.sb.abs())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_squared_is_minus_three() {
        assert_eq!(QsElem::s() * QsElem::s(), QsElem::from_int(-3));
    }

    #[test]
    fn q_times_q_inverse_is_one() {
        assert_eq!(QsElem::q() * QsElem::q_inv(), QsElem::one());
        assert_eq!(QsElem::q().inv().unwrap(), QsElem::q_inv());
    }

    #[test]
    fn q_is_a_sixth_root_of_unity() {
        let q = QsElem::q();
        let mut acc = QsElem::one();
        for k in 1..=6 {
            acc = &acc * &q;
            assert_eq!(acc.is_one(), k == 6, "q^{k}");
        }
        assert_eq!(q.pow(6), QsElem::one());
        assert_eq!(q.pow(-6), QsElem::one());
        assert_eq!(q.pow(2), QsElem::omega());
    }

    #[test]
    fn q_minus_q_inverse_is_s() {
        assert_eq!(QsElem::q() - QsElem::q_inv(), QsElem::s());
    }

    #[test]
    fn omega_sums() {
        let w = QsElem::omega();
        assert!((QsElem::one() + &w + w.pow(2)).is_zero());
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(QsElem::zero().inv().is_none());
    }

    #[test]
    fn display() {
        assert_eq!(QsElem::q().to_string(), "(1/2 + 1/2*s)");
        assert_eq!(QsElem::s().to_string(), "1*s");
        assert_eq!(QsElem::from_int(-3).to_string(), "-3");
    }
}
