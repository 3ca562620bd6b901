use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinat::{binom_q, binomial, fact, pow3};
use crate::exact_algebra::{int, rat, Rational};
use crate::hyper::{hyp_terminating, HypSpec};
use crate::tq_solutions::e_poly;
use crate::{Error, Result};

/// `b(m, α)` as a one-fold sum over `ℓ = max(0, α−m) ..= ⌊α/2⌋`:
///
/// ```text
/// (2m+1)! m! / (3^m (3m+2)!) · Σ_ℓ (2m+2−α+2ℓ) C(3m+3, α−2ℓ)
///                                 · C(2m+ℓ−α+1, m+1) C(m+ℓ+1, m+1) 2^{α−2ℓ}
/// ```
///
/// Zero for `α` outside `0..=2m`.
pub fn b_coeff(m: u32, alpha: i64) -> Rational {
    let mi = m as i64;
    if alpha < 0 || alpha > 2 * mi {
        return Rational::zero();
    }
    let mut sum = BigInt::zero();
    for l in (alpha - mi).max(0)..=alpha / 2 {
        let free = alpha - 2 * l;
        let term = BigInt::from(2 * mi + 2 - alpha + 2 * l)
            * binomial(3 * mi + 3, free)
            * binomial(2 * mi + l - alpha + 1, mi + 1)
            * binomial(mi + l + 1, mi + 1)
            * (BigInt::one() << free as usize);
        sum += term;
    }
    let mu = m as usize;
    fact(2 * mu + 1) * fact(mu) / (pow3(mu) * fact(3 * mu + 2)) * Rational::from_integer(sum)
}

/// `b(m, α)` through two terminating ₄F₃ series at argument 1/4.
///
/// Valid directly for `0 ≤ α ≤ m`; larger `α` use `α → 2m − α`.
pub fn b_coeff_4f3(m: u32, alpha: i64) -> Result<Rational> {
    let mi = m as i64;
    if alpha < 0 || alpha > 2 * mi {
        return Err(Error::OutOfRange(format!("alpha = {alpha} for m = {m}")));
    }
    let a = if alpha > mi { 2 * mi - alpha } else { alpha };

    let pref = Rational::from_integer(BigInt::one() << a as usize)
        * binom_q(3 * mi + 3, a)
        * binom_q(2 * mi + 1 - a, mi + 1)
        / (pow3(m as usize) * binom_q(3 * mi + 2, mi + 1));

    let lower = vec![
        rat(3 * mi + 4 - a, 2),
        rat(3 * mi + 5 - a, 2),
        int(mi - a + 1),
    ];
    let quarter = rat(1, 4);
    let first = HypSpec::new(
        vec![rat(1 - a, 2), rat(-a, 2), int(mi + 2), int(2 * mi + 2 - a)],
        lower.clone(),
    );
    let mut bracket = int(2) * hyp_terminating(&first, &quarter)?;
    // The second series carries a factor α and does not terminate at α = 0.
    if a > 0 {
        let second = HypSpec::new(
            vec![
                rat(1 - a, 2),
                rat(2 - a, 2),
                int(mi + 2),
                int(2 * mi + 2 - a),
            ],
            lower,
        );
        bracket -= rat(a, mi + 1) * hyp_terminating(&second, &quarter)?;
    }
    Ok(pref * bracket)
}

/// All coefficients `b(m, 0..=2m)` of `B_{2m}(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BCoeffs {
    pub m: u32,
    pub values: Vec<Rational>,
}

impl BCoeffs {
    pub fn from_sum(m: u32) -> Self {
        let values = (0..=2 * m as i64).map(|a| b_coeff(m, a)).collect();
        Self { m, values }
    }

    pub fn from_4f3(m: u32) -> Result<Self> {
        let values = (0..=2 * m as i64)
            .map(|a| b_coeff_4f3(m, a))
            .collect::<Result<_>>()?;
        Ok(Self { m, values })
    }

    /// Coefficients read off the cleared-denominator expansion of `B_{2m}`.
    pub fn from_e_poly(m: u32) -> Self {
        let b = e_poly(m);
        let values = (0..=2 * m as usize).map(|a| b.coeff(a)).collect();
        Self { m, values }
    }

    /// `b(m, α)` with zero outside `0..=2m`.
    pub fn get(&self, alpha: i64) -> Rational {
        usize::try_from(alpha)
            .ok()
            .and_then(|a| self.values.get(a).cloned())
            .unwrap_or_else(Rational::zero)
    }

    /// Reflection symmetry and `Σ_α b(m, α) = 1`.
    pub fn invariants_hold(&self) -> bool {
        let sum = self.values.iter().fold(Rational::zero(), |acc, v| acc + v);
        self.values.iter().eq(self.values.iter().rev()) && sum.is_one()
    }
}
