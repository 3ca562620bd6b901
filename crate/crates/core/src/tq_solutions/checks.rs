//! Identity checks among the T-Q constructions. Every check is an exact
//! Laurent-polynomial (or ℚ(s)) equality.

use num_traits::{One, Zero};

use crate::asm_numbers::h1_poly;
use crate::exact_algebra::{int, rat, LaurentPoly, QsElem, Rational};
use crate::report::CheckReport;
use crate::{Error, Result};

use super::routes::{odd_power, u_plus};
use super::{
    c_m, e_poly, f_poly, fg_2f1_check, g_poly, h_poly, p_poly, phi, q_poly, q_poly_by_division,
    tq_check, v_poly, PRoute, VRoute,
};

fn x3_sum(middle: i64) -> LaurentPoly {
    LaurentPoly::from_int_terms(&[(3, 1), (0, middle), (-3, 1)])
}

/// `(x³−x⁻³) D²f − 6m (x³+x⁻³) Df + (3m+1)(3m−1) (x³−x⁻³) f = 0`, `D = x d/dx`.
pub fn ode_check_f(m: u32) -> bool {
    let mi = m as i64;
    let f = f_poly(m);
    let df = f.euler_derivative();
    let ddf = df.euler_derivative();
    let sin3 = LaurentPoly::odd_binomial(3);
    let lhs = &sin3 * &ddf - (x3_sum(0) * df).scale_rational(&int(6 * mi))
        + (&sin3 * &f).scale_rational(&int((3 * mi + 1) * (3 * mi - 1)));
    lhs.is_zero()
}

/// `(x³−x⁻³) D²h − 3[(2m+1)(x³+x⁻³) − 2] Dh + (3m+1)(3m+2) (x³−x⁻³) h = 0`.
pub fn ode_check_h(m: u32) -> bool {
    let mi = m as i64;
    let h = h_poly(m);
    let dh = h.euler_derivative();
    let ddh = dh.euler_derivative();
    let sin3 = LaurentPoly::odd_binomial(3);
    let first_order =
        x3_sum(0).scale_rational(&int(2 * mi + 1)) - LaurentPoly::from_int_terms(&[(0, 2)]);
    let lhs = &sin3 * &ddh - (first_order * dh).scale_rational(&int(3))
        + (&sin3 * &h).scale_rational(&int((3 * mi + 1) * (3 * mi + 2)));
    lhs.is_zero()
}

fn gff(m: u32) -> bool {
    let mi = m as i64;
    let rhs = (x3_sum(0) * f_poly(m)).scale_rational(&rat(3 * mi + 2, 2 * (3 * mi + 1)))
        - f_poly(m + 1).scale_rational(&rat(3 * (mi + 1), 2 * (3 * mi + 1)));
    rhs == g_poly(m)
}

fn hff(m: u32) -> bool {
    let mi = m as i64;
    let bracket =
        x3_sum(2) * f_poly(m) - f_poly(m + 1).scale_rational(&rat(3 * mi + 3, 3 * mi + 2));
    let rhs = bracket.scale_rational(&(c_m(m) * rat(3 * mi + 2, 2 * (3 * mi + 1))));
    rhs == h_poly(m)
}

fn pqq(m: u32) -> Result<bool> {
    let mi = m as i64;
    let q_m = q_poly_by_division(m)?;
    let q_next = q_poly_by_division(m + 1)?;
    let sq = LaurentPoly::odd_binomial(1).pow(2);
    let rhs = (x3_sum(0) * q_m).scale_rational(&rat(3 * mi + 2, 2 * (3 * mi + 1)))
        - (sq * q_next).scale_rational(&rat(3 * (mi + 1), 2 * (3 * mi + 1)));
    Ok(rhs == p_poly(m, PRoute::Division)?)
}

/// `Φ_{m+1}^{(k)} = u Φ_m^{(k)} − m(m+2k+1)/(3(m+k+1)(m+k)) (x²+1+x⁻²) Φ_{m−1}^{(k)}`.
fn pdec(m: u32, k: i64) -> Result<bool> {
    let mi = m as i64;
    let u = LaurentPoly::even_binomial(1);
    let w = LaurentPoly::from_int_terms(&[(2, 1), (0, 1), (-2, 1)]);
    let coeff = rat(mi * (mi + 2 * k + 1), 3 * (mi + k + 1) * (mi + k));
    let rhs = u * phi(m, k)?.value - (w * phi(m - 1, k)?.value).scale_rational(&coeff);
    Ok(rhs == phi(m + 1, k)?.value)
}

/// `Φ_m^{(k+1)} = (m+2k+2)/(2(m+k+1)) Φ_m^{(k)} + m/(2(m+k+1)) u Φ_{m−1}^{(k+1)}`.
fn pmix(m: u32, k: i64) -> Result<bool> {
    let mi = m as i64;
    let u = LaurentPoly::even_binomial(1);
    let rhs = phi(m, k)?
        .value
        .scale_rational(&rat(mi + 2 * k + 2, 2 * (mi + k + 1)))
        + (u * phi(m - 1, k + 1)?.value).scale_rational(&rat(mi, 2 * (mi + k + 1)));
    Ok(rhs == phi(m, k + 1)?.value)
}

/// Range of `k` over which the Φ relations are checked at index `m`.
fn k_range(m: u32) -> std::ops::RangeInclusive<i64> {
    0..=(m as i64 + 1)
}

/// Three-term relations: gff, hff, PQQ, VQQ and, for `m ≥ 1`, Pdec/Pmix
/// over `k = 0..=m+1`.
pub fn gauss_relation_checks(m: u32) -> CheckReport {
    let mut report = CheckReport::new();
    let at_m = format!("m={m}");
    report.record("gff", at_m.clone(), gff(m));
    report.record("hff", at_m.clone(), hff(m));
    report.record_result("PQQ", at_m.clone(), pqq(m));
    report.record_result(
        "VQQ",
        at_m,
        (|| Ok(v_poly(m, VRoute::FromQ)? == v_poly(m, VRoute::Division)?))(),
    );
    if m >= 1 {
        for k in k_range(m) {
            report.record_result("Pdec", format!("m={m} k={k}"), pdec(m, k));
            report.record_result("Pmix", format!("m={m} k={k}"), pmix(m, k));
        }
    }
    report
}

/// Multi-route agreement for `Q_m` (QF), `P_{m+1}` (Pfinal, `m ≥ 1`),
/// `V_m` (three routes) plus the factorization and normalization facts.
pub fn route_checks(m: u32) -> CheckReport {
    let mut report = CheckReport::new();
    let at_m = format!("m={m}");

    report.record_result(
        "QF",
        at_m.clone(),
        q_poly_by_division(m).map(|q| q == q_poly(m)),
    );
    if m >= 1 {
        report.record_result(
            "Pfinal",
            at_m.clone(),
            (|| Ok(p_poly(m, PRoute::Closed)? == p_poly(m, PRoute::Division)?))(),
        );
    }
    report.record_result(
        "P-symmetric-degree",
        at_m.clone(),
        p_poly(m, PRoute::Division).map(|p| {
            p.is_symmetric() && p.u_expansion().is_some_and(|c| c.len() == m as usize + 2)
        }),
    );
    report.record_result(
        "Vfinal",
        at_m.clone(),
        (|| {
            let a = v_poly(m, VRoute::Division)?;
            Ok(a == v_poly(m, VRoute::FromQ)? && a == v_poly(m, VRoute::Closed)?)
        })(),
    );
    report.record_result(
        "V-normalized",
        at_m.clone(),
        (|| {
            let v = v_poly(m, VRoute::Division)?;
            Ok(v.is_symmetric() && v.eval(&QsElem::one())? == QsElem::from_int(1))
        })(),
    );
    report.record_result(
        "FviaV",
        at_m.clone(),
        v_poly(m, VRoute::Division).map(|v| odd_power(m) * u_plus(2) * v == h_poly(m)),
    );
    let b = e_poly(m);
    let palindromic = b.reciprocal(2 * m as usize) == b && b.degree() == Some(2 * m as usize);
    report.record("B-palindromic", at_m.clone(), palindromic);
    report.record("B-normalized", at_m, b.coeff_sum() == int(1));
    report
}

/// Everything checkable at a single index `m`.
pub fn identity_suite(m: u32) -> CheckReport {
    let mut report = CheckReport::new();
    let at_m = format!("m={m}");
    report.record("TQ-f", at_m.clone(), tq_check(&f_poly(m)));
    report.record("TQ-g", at_m.clone(), tq_check(&g_poly(m)));
    report.record("TQ-h", at_m.clone(), tq_check(&h_poly(m)));
    report.record("ODE-f", at_m.clone(), ode_check_f(m));
    report.record("ODE-h", at_m.clone(), ode_check_h(m));
    report.record("fg-2F1", at_m.clone(), fg_2f1_check(m));
    // At k = 0 the u-degree drops below m whenever m ≡ 5 (mod 6).
    let phis_ok = k_range(m).all(|k| {
        phi(m, k).is_ok_and(|p| p.invariants_hold() && (k == 0 || p.u_degree() == Some(m as usize)))
    });
    report.record("Phi-invariants", at_m, phis_ok);
    report.extend(gauss_relation_checks(m));
    report.extend(route_checks(m));
    report
}

fn qs(r: &Rational) -> QsElem {
    QsElem::from(r.clone())
}

fn nonzero(v: QsElem, x: &Rational) -> Result<QsElem> {
    if v.is_zero() {
        Err(Error::PoleAtSample(x.to_string()))
    } else {
        Ok(v)
    }
}

/// `E_m(t)·(x−1+x⁻¹)^m = V_m(x)` with `t = −(x−q)/(qx−1)`, at one rational `x`.
pub fn et_check(m: u32, x: &Rational) -> Result<bool> {
    let x0 = nonzero(qs(x), x)?;
    let q = QsElem::q();
    let den = nonzero(&q * &x0 - QsElem::from_int(1), x)?;
    let t = nonzero(-(&x0 - &q) / den, x)?;
    let b = e_poly(m).eval(&t);
    let e = b * t.pow(-(m as i64));
    let lhs = e * u_plus(-1).eval(&x0)?.pow(m as i64);
    Ok(lhs == v_poly(m, VRoute::Division)?.eval(&x0)?)
}

/// `H_n^{(1)}(t)·(qx − q⁻¹x⁻¹)^{n−1} = const·Q_{n−1}(x)` with
/// `t = (qx⁻¹ − q⁻¹x)/(qx − q⁻¹x⁻¹)`: the constant is fixed at the first
/// sample where `Q_{n−1}` is nonzero and must fit every other sample.
pub fn hq_check(n: u32, samples: &[Rational]) -> Result<bool> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    let h1 = h1_poly(n as usize)?;
    let q_prev = q_poly(n - 1);
    let q = QsElem::q();
    let q_inv = QsElem::q_inv();
    let mut pairs = Vec::with_capacity(samples.len());
    for x in samples {
        let x0 = nonzero(qs(x), x)?;
        let x_inv = x0.inv().expect("nonzero");
        let den = nonzero(&q * &x0 - &q_inv * &x_inv, x)?;
        let t = (&q * &x_inv - &q_inv * &x0) / &den;
        let lhs = h1.eval(&t) * den.pow(n as i64 - 1);
        pairs.push((lhs, q_prev.eval(&x0)?));
    }
    let constant = pairs
        .iter()
        .find(|(_, rhs)| !rhs.is_zero())
        .map(|(lhs, rhs)| lhs / rhs);
    Ok(match constant {
        Some(c) => pairs.iter().all(|(lhs, rhs)| *lhs == &c * rhs),
        None => pairs.iter().all(|(lhs, _)| lhs.is_zero()),
    })
}

/// Et at index `m` for each sample, and HQ at `n = m + 1` over all samples.
pub fn transform_checks(m: u32, samples: &[Rational]) -> Result<CheckReport> {
    let mut report = CheckReport::new();
    for x in samples {
        report.record("Et", format!("m={m} x={x}"), et_check(m, x)?);
    }
    let xs = samples
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",");
    report.record(
        "HQ",
        format!("n={} x={{{xs}}}", m + 1),
        hq_check(m + 1, samples)?,
    );
    Ok(report)
}
