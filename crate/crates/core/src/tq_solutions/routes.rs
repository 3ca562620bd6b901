use crate::combinat::{fact, pow3};
use crate::exact_algebra::{int, rat, DensePoly, LaurentPoly, Rational};
use crate::hyper::HypSpec;
use crate::Result;

use super::{c_m, f_poly, g_poly, h_poly, phi};

/// `(x − x⁻¹)^{2m+1}`.
pub(crate) fn odd_power(m: u32) -> LaurentPoly {
    LaurentPoly::odd_binomial(1).pow(2 * m + 1)
}

/// `x + c + x⁻¹`.
pub(crate) fn u_plus(c: i64) -> LaurentPoly {
    LaurentPoly::from_int_terms(&[(1, 1), (0, c), (-1, 1)])
}

/// `Q_m = (2m)!/(3^m (m!)²) Φ_m^{(m)}`.
pub fn q_poly(m: u32) -> LaurentPoly {
    let mu = m as usize;
    let norm = fact(2 * mu) / (pow3(mu) * fact(mu) * fact(mu));
    let phi_mm = phi(m, m as i64).expect("Phi_m^(m) is never degenerate");
    phi_mm.value.scale_rational(&norm)
}

/// `Q_m = f_m / (x − x⁻¹)^{2m+1}`.
pub fn q_poly_by_division(m: u32) -> Result<LaurentPoly> {
    f_poly(m).divide_exact(&odd_power(m))
}

/// Constructions of `P_{m+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PRoute {
    /// `g_m / (x − x⁻¹)^{2m+1}`; valid for all `m`.
    Division,
    /// `(2m)!/(3^m m! (m+1)!) [(3m+2) Φ_{m+1}^{(m−1)} − (2m+1) Φ_{m+1}^{(m)}]`;
    /// degenerate at `m = 0`.
    Closed,
}

pub fn p_poly(m: u32, route: PRoute) -> Result<LaurentPoly> {
    match route {
        PRoute::Division => g_poly(m).divide_exact(&odd_power(m)),
        PRoute::Closed => {
            let mu = m as usize;
            let mi = m as i64;
            let norm = fact(2 * mu) / (pow3(mu) * fact(mu) * fact(mu + 1));
            let a = phi(m + 1, mi - 1)?.value.scale_rational(&int(3 * mi + 2));
            let b = phi(m + 1, mi)?.value.scale_rational(&int(2 * mi + 1));
            Ok((a - b).scale_rational(&norm))
        }
    }
}

/// Constructions of `V_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VRoute {
    /// `h_m / ((x − x⁻¹)^{2m+1} (x + 2 + x⁻¹))`.
    Division,
    /// From `Q_m`, `Q_{m+1}`:
    /// `c_m (3m+2)/(2(3m+1)) [(x−1+x⁻¹)² Q_m − (3m+3)/(3m+2) (x−2+x⁻¹) Q_{m+1}]`.
    FromQ,
    /// `(2m)!(2m+2)!/((m+1)!(3m+2)!) [(2m+1) Φ_m^{(m+1)} − m (x−1+x⁻¹) Φ_{m−1}^{(m+1)}]`.
    Closed,
}

pub fn v_poly(m: u32, route: VRoute) -> Result<LaurentPoly> {
    let mi = m as i64;
    let mu = m as usize;
    match route {
        VRoute::Division => h_poly(m).divide_exact(&(odd_power(m) * u_plus(2))),
        VRoute::FromQ => {
            let q_m = q_poly_by_division(m)?;
            let q_next = q_poly_by_division(m + 1)?;
            let first = u_plus(-1).pow(2) * q_m;
            let second = (u_plus(-2) * q_next).scale_rational(&rat(3 * mi + 3, 3 * mi + 2));
            let norm = c_m(m) * rat(3 * mi + 2, 2 * (3 * mi + 1));
            Ok((first - second).scale_rational(&norm))
        }
        VRoute::Closed => {
            let norm = fact(2 * mu) * fact(2 * mu + 2) / (fact(mu + 1) * fact(3 * mu + 2));
            let mut bracket = phi(m, mi + 1)?.value.scale_rational(&int(2 * mi + 1));
            if m > 0 {
                let lower = phi(m - 1, mi + 1)?.value;
                bracket = bracket - (u_plus(-1) * lower).scale_rational(&int(mi));
            }
            Ok(bracket.scale_rational(&norm))
        }
    }
}

/// `B_{2m}(t) = t^m E_m(t)` with denominators cleared:
///
/// ```text
/// pref · [(2m+1) Σ_j c_j (1+2t)^j t^{m−j} (t+2)^{m−j}
///         − 3m Σ_j c'_j (1+2t)^j t^{m−j} (t+2)^{m−1−j}]
/// ```
///
/// where `c_j`, `c'_j` are the terms of ₂F₁(−m, m+2; −2m−1) and
/// ₂F₁(−m+1, m+2; −2m), and `pref = (2m)!(2m+2)!/(3^m (m+1)!(3m+2)!)`.
pub fn e_poly(m: u32) -> DensePoly {
    let mi = m as i64;
    let mu = m as usize;
    let pref = fact(2 * mu) * fact(2 * mu + 2) / (pow3(mu) * fact(mu + 1) * fact(3 * mu + 2));

    let one_two_t = DensePoly::linear(int(1), int(2));
    let t = DensePoly::linear(int(0), int(1));
    let t_two = DensePoly::linear(int(2), int(1));
    let powers = |p: &DensePoly| {
        let mut v = vec![DensePoly::one()];
        for j in 1..=mu {
            v.push(&v[j - 1] * p);
        }
        v
    };
    let a_pows = powers(&one_two_t);
    let t_pows = powers(&t);
    let s_pows = powers(&t_two);

    let first_spec = HypSpec::gauss(int(-mi), int(mi + 2), int(-2 * mi - 1));
    let first_coeffs = first_spec
        .coefficients()
        .expect("lower factors stay below zero");
    let mut first = DensePoly::zero();
    for (j, c) in first_coeffs.iter().enumerate() {
        let term = &(&a_pows[j] * &t_pows[mu - j]) * &s_pows[mu - j];
        first = first + term.scale(c);
    }
    let mut total = first.scale(&int(2 * mi + 1));

    if m > 0 {
        let second_spec = HypSpec::gauss(int(1 - mi), int(mi + 2), int(-2 * mi));
        let second_coeffs = second_spec
            .coefficients()
            .expect("lower factors stay below zero");
        let mut second = DensePoly::zero();
        for (j, c) in second_coeffs.iter().enumerate() {
            let term = &(&a_pows[j] * &t_pows[mu - j]) * &s_pows[mu - 1 - j];
            second = second + term.scale(c);
        }
        total = total - second.scale(&int(3 * mi));
    }
    total.scale(&pref)
}

/// `B_{2m}(0) = (2m+1)!(2m+2)!/(3^m (m+1)!(3m+2)!)`.
pub(crate) fn b_zero_closed(m: u32) -> Rational {
    let mu = m as usize;
    fact(2 * mu + 1) * fact(2 * mu + 2) / (pow3(mu) * fact(mu + 1) * fact(3 * mu + 2))
}
