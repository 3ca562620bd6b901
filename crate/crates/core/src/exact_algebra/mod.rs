//! Exact arithmetic: big rationals, ℚ(s) with s² = −3, Laurent polynomials
//! in `x` over ℚ(s), and dense polynomials in `t` over ℚ.

use std::fmt::Debug;
use std::ops::{Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Derives the owned/borrowed operator variants from the `&T op &T` impl.
macro_rules! forward_ref_binop {
    ($t:ty, $tr:ident, $m:ident) => {
        impl std::ops::$tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                std::ops::$tr::$m(&self, &rhs)
            }
        }
        impl<'a> std::ops::$tr<&'a $t> for $t {
            type Output = $t;
            fn $m(self, rhs: &'a $t) -> $t {
                std::ops::$tr::$m(&self, rhs)
            }
        }
        impl<'a> std::ops::$tr<$t> for &'a $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                std::ops::$tr::$m(self, &rhs)
            }
        }
    };
}

mod dense;
mod laurent;
mod qs;

pub use dense::DensePoly;
pub use laurent::LaurentPoly;
pub use qs::QsElem;

/// Coefficient fields the generic routines (series, evaluation) work over.
pub trait Scalar:
    Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self> + From<Rational>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Neg<Output = Self>
        + Sub<Output = Self>
        + From<Rational>
{
}

/// `n / d` as a reduced rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn big(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Integer part of an exact rational, if it is an integer.
pub fn as_integer(r: &Rational) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}
