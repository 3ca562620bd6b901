//! Memoized factorials and exact binomials.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact_algebra::Rational;

fn table() -> &'static RwLock<Vec<BigInt>> {
    static TABLE: OnceLock<RwLock<Vec<BigInt>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![BigInt::one()]))
}

/// `n!`, cached process-wide.
pub fn factorial(n: usize) -> BigInt {
    if let Some(v) = table().read().expect("factorial cache poisoned").get(n) {
        return v.clone();
    }
    let mut t = table().write().expect("factorial cache poisoned");
    while t.len() <= n {
        let k = t.len();
        let next = &t[k - 1] * BigInt::from(k);
        t.push(next);
    }
    t[n].clone()
}

/// `n!` as a rational.
pub fn fact(n: usize) -> Rational {
    Rational::from_integer(factorial(n))
}

/// `C(n, k)` for integers; zero when `k < 0` or `k > n`, and for `n < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let (n, k) = (n as usize, k as usize);
    factorial(n) / (factorial(k) * factorial(n - k))
}

pub fn binom_q(n: i64, k: i64) -> Rational {
    Rational::from_integer(binomial(n, k))
}

/// `3^k` as a rational.
pub fn pow3(k: usize) -> Rational {
    Rational::from_integer(BigInt::from(3).pow(k as u32))
}
