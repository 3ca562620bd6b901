use num_traits::Zero;

use crate::exact_algebra::{int, LaurentPoly, QsElem};
use crate::hyper::HypSpec;
use crate::Result;

/// `Φ_m^{(k)}(x)`, a symmetric Laurent polynomial with rational coefficients,
/// of degree `m` in `u = x + x⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiPoly {
    pub m: u32,
    pub k: i64,
    pub value: LaurentPoly,
}

impl PhiPoly {
    /// Rational coefficients and `x ↔ x⁻¹` symmetry.
    pub fn invariants_hold(&self) -> bool {
        self.value.is_rational() && self.value.is_symmetric()
    }

    /// Degree in `u`, or `None` if the value is not symmetric.
    pub fn u_degree(&self) -> Option<usize> {
        let coeffs = self.value.u_expansion()?;
        if coeffs.iter().all(Zero::is_zero) {
            return None;
        }
        Some(coeffs.len() - 1)
    }
}

/// Builds `Φ_m^{(k)}` from the cleared form
///
/// ```text
/// Σ_j [(−m)_j (k+1)_j / ((−m−k)_j j!)] (q x⁻¹ − q⁻¹ x)^{m−j} (q x − q⁻¹ x⁻¹)^j / s^m
/// ```
///
/// using `q − q⁻¹ = s`. Fails with `DegenerateParameters` when the series
/// hits a vanishing lower factor (e.g. `(m, k) = (1, −1)`).
pub fn phi(m: u32, k: i64) -> Result<PhiPoly> {
    let mi = m as i64;
    let spec = HypSpec::gauss(int(-mi), int(k + 1), int(-mi - k));
    let coeffs = spec.coefficients()?;

    let q = QsElem::q();
    let q_inv = QsElem::q_inv();
    let left = LaurentPoly::from_terms([(-1, q.clone()), (1, -&q_inv)]);
    let right = LaurentPoly::from_terms([(1, q), (-1, -q_inv)]);

    let mut left_pows = vec![LaurentPoly::one()];
    let mut right_pows = vec![LaurentPoly::one()];
    for j in 1..=m as usize {
        left_pows.push(&left_pows[j - 1] * &left);
        right_pows.push(&right_pows[j - 1] * &right);
    }

    let mut sum = LaurentPoly::zero();
    for (j, c) in coeffs.iter().enumerate() {
        let term = &left_pows[m as usize - j] * &right_pows[j];
        sum = sum + term.scale_rational(c);
    }
    let s_inv = QsElem::s().inv().expect("nonzero").pow(mi);
    let value = sum.scale(&s_inv);

    let out = PhiPoly { m, k, value };
    debug_assert!(out.invariants_hold(), "Phi_{m}^({k}) breaks its invariants");
    Ok(out)
}
