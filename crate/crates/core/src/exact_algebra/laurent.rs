use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{int, QsElem, Rational};
use crate::{Error, Result};

/// Finitely supported Laurent polynomial `Σ c_k x^k` with coefficients in ℚ(s).
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, QsElem>,
}

fn add_exp(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("Laurent exponent overflow")
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(QsElem::one())
    }

    pub fn constant(c: QsElem) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exp: i64, coeff: QsElem) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(1, QsElem::one())
    }

    /// Sums `(exponent, coefficient)` pairs; repeated exponents accumulate.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, QsElem)>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn from_rational_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        Self::from_terms(terms.into_iter().map(|(e, c)| (e, QsElem::from(c))))
    }

    /// Integer-coefficient shorthand, e.g. `[(3, 1), (0, 2), (-3, 1)]` for `x³ + 2 + x⁻³`.
    pub fn from_int_terms(terms: &[(i64, i64)]) -> Self {
        Self::from_rational_terms(terms.iter().map(|&(e, c)| (e, int(c))))
    }

    /// `x^k − x^{−k}`.
    pub fn odd_binomial(k: i64) -> Self {
        Self::from_int_terms(&[(k, 1), (-k, -1)])
    }

    /// `x^k + x^{−k}` (for `k = 0` this is `2`).
    pub fn even_binomial(k: i64) -> Self {
        Self::from_int_terms(&[(k, 1), (-k, 1)])
    }

    fn add_term(&mut self, exp: i64, coeff: QsElem) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &QsElem)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> QsElem {
        self.terms.get(&exp).cloned().unwrap_or_else(QsElem::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True when every coefficient lies in ℚ.
    pub fn is_rational(&self) -> bool {
        self.terms.values().all(QsElem::is_rational)
    }

    /// `p(x) = p(x⁻¹)`.
    pub fn is_symmetric(&self) -> bool {
        self.invert_x() == *self
    }

    /// `p(x) = −p(x⁻¹)`.
    pub fn is_antisymmetric(&self) -> bool {
        self.invert_x() == -self
    }

    pub fn scale(&self, c: &QsElem) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        self.scale(&QsElem::from(c.clone()))
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, v)| (add_exp(e, k), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// `p(c·x)`: the coefficient at `x^k` is multiplied by `c^k`.
    ///
    /// Panics if `c` is zero and `p` has a negative exponent.
    pub fn substitute_scale(&self, c: &QsElem) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, v)| (e, v * &c.pow(e))))
    }

    /// `p(x⁻¹)`.
    pub fn invert_x(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, v)| (-e, v.clone())).collect(),
        }
    }

    /// Euler operator `x·d/dx`.
    pub fn euler_derivative(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(&e, v)| (e, v * &QsElem::from_int(e))),
        )
    }

    pub fn eval(&self, x0: &QsElem) -> Result<QsElem> {
        if x0.is_zero() {
            return Err(Error::EvalAtZero);
        }
        let inv = x0.inv().expect("nonzero");
        let mut acc = QsElem::zero();
        for (&e, c) in &self.terms {
            let xe = if e >= 0 { x0.pow(e) } else { inv.pow(-e) };
            acc = acc + c * &xe;
        }
        Ok(acc)
    }

    /// Quotient `q` with `self = den·q` exactly.
    ///
    /// Long division from the top degree; the quotient's support must lie in
    /// `[min(self) − min(den), max(self) − max(den)]`, otherwise a remainder
    /// is certain.
    pub fn divide_exact(&self, den: &LaurentPoly) -> Result<LaurentPoly> {
        let (Some(dlo), Some(dhi)) = (den.min_exp(), den.max_exp()) else {
            return Err(Error::DivisionByZero);
        };
        let Some(nlo) = self.min_exp() else {
            return Ok(Self::zero());
        };
        let lead_inv = den
            .coeff(dhi)
            .inv()
            .expect("stored coefficients are nonzero");
        let floor = nlo - dlo;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(top) = rem.max_exp() {
            let e = top - dhi;
            if e < floor {
                return Err(Error::NonExactDivision);
            }
            let c = &rem.coeff(top) * &lead_inv;
            rem = &rem - &den.shift(e).scale(&c);
            quot.add_term(e, c);
        }
        Ok(quot)
    }

    /// Coefficients of a symmetric polynomial expanded in `u = x + x⁻¹`,
    /// lowest power first. `None` if the polynomial is not symmetric.
    pub fn u_expansion(&self) -> Option<Vec<QsElem>> {
        let top = self.max_exp().unwrap_or(0);
        if top < 0 {
            return None;
        }
        let u = Self::even_binomial(1);
        let mut powers = vec![Self::one()];
        for k in 1..=top as usize {
            powers.push(&powers[k - 1] * &u);
        }
        let mut coeffs = vec![QsElem::zero(); top as usize + 1];
        let mut rem = self.clone();
        while let Some(d) = rem.max_exp() {
            if d < 0 {
                return None;
            }
            let c = rem.coeff(d);
            rem = &rem - &powers[d as usize].scale(&c);
            coeffs[d as usize] = c;
        }
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Some(coeffs)
    }
}

impl<'b> Add<&'b LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'b LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<'b> Sub<&'b LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'b LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl<'b> Mul<&'b LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'b LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.add_term(add_exp(ea, eb), ca * cb);
            }
        }
        out
    }
}

forward_ref_binop!(LaurentPoly, Add, add);
forward_ref_binop!(LaurentPoly, Sub, sub);
forward_ref_binop!(LaurentPoly, Mul, mul);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match *e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{e}")?,
            }
        }
        Ok(())
    }
}
