//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion
//! and exits non-zero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use asm3_core::asm_numbers::{
    b_coeff, b_coeff_4f3, concentration_scan, h1_poly, h3_poly, recurrence_check, refined_asm,
    refined_asm2_ratio, refined_asm3, refined_row3, total_asm, total_asm3, BCoeffs,
};
use asm3_core::exact_algebra::{big, int, rat};
use asm3_core::oracle::{dp_refined_enum, mt_refined_enum};
use asm3_core::tq_solutions::{
    e_poly, et_check, f_poly, fg_2f1_check, g_poly, gauss_relation_checks, h_poly, hq_check,
    ode_check_f, ode_check_h, p_poly, phi, route_checks, tq_check, PRoute,
};
use asm3_core::{Error, LaurentPoly, Rational, Result};

type Outcome = Result<(bool, String)>;
type Criterion = (&'static str, fn() -> Outcome);

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&k| BigInt::from(k)).collect()
}

fn all_ok<T: Send>(items: Vec<T>, check: impl Fn(T) -> Result<bool> + Sync + Send) -> Result<bool> {
    let results: Vec<Result<bool>> = items.into_par_iter().map(check).collect();
    let mut ok = true;
    for r in results {
        ok &= r?;
    }
    Ok(ok)
}

fn oracle_equivalence() -> Outcome {
    let ok = all_ok((1..=10).collect(), |n| {
        let row: Vec<Rational> = (1..=n)
            .map(|r| refined_asm3(n, r).map(big))
            .collect::<Result<_>>()?;
        let mut ok = dp_refined_enum(n, &int(3))?.counts == row;
        if n <= 8 {
            ok &= mt_refined_enum(n, &int(3))?.counts == row;
        }
        Ok(ok)
    })?;
    Ok((ok, "n <= 10 (dp), n <= 8 (triangles)".into()))
}

fn classical_closed_forms() -> Outcome {
    let x1 = all_ok((1..=8).collect(), |n| {
        let row: Vec<Rational> = (1..=n)
            .map(|r| refined_asm(n, r).map(big))
            .collect::<Result<_>>()?;
        let dp = dp_refined_enum(n, &int(1))?;
        let mt = mt_refined_enum(n, &int(1))?;
        Ok(dp.counts == row && mt.counts == row && dp.total() == big(total_asm(n)?))
    })?;
    let x2 = all_ok((1..=10).collect(), |n| {
        let expected = (1..=n)
            .map(|r| refined_asm2_ratio(n, r))
            .collect::<Result<Vec<_>>>()?;
        Ok(dp_refined_enum(n, &int(2))?.ratios() == expected)
    })?;
    let a7 = total_asm(7)? == BigInt::from(218_348);
    Ok((
        x1 && x2 && a7,
        format!("x=1 n<=8 {x1}, x=2 n<=10 {x2}, A(7)=218348 {a7}"),
    ))
}

fn triple_route_b() -> Outcome {
    let ok = all_ok((0..=30u32).collect(), |m| {
        let b = e_poly(m);
        for alpha in 0..=2 * m as i64 {
            let v = b_coeff(m, alpha);
            if v != b_coeff_4f3(m, alpha)? || v != b.coeff(alpha as usize) {
                return Ok(false);
            }
        }
        Ok(true)
    })?;
    Ok((ok, "m <= 30, all alpha".into()))
}

fn anchors() -> Outcome {
    let totals = total_asm3(1)? == BigInt::one() && total_asm3(2)? == BigInt::from(2);
    let rows = [
        (3, ints(&[2, 5, 2])),
        (4, ints(&[9, 36, 36, 9])),
        (5, ints(&[90, 495, 855, 495, 90])),
    ];
    let mut ok = totals;
    for (n, row) in &rows {
        let as_rat: Vec<Rational> = row.iter().cloned().map(big).collect();
        ok &= refined_row3(*n)? == *row;
        ok &= dp_refined_enum(*n, &int(3))?.counts == as_rat;
        ok &= mt_refined_enum(*n, &int(3))?.counts == as_rat;
    }
    Ok((ok, "A(1;3), A(2;3), rows n = 3, 4, 5".into()))
}

fn tq_suite() -> Outcome {
    let through_20 = all_ok((0..=20u32).collect(), |m| {
        Ok(tq_check(&f_poly(m))
            && tq_check(&g_poly(m))
            && tq_check(&h_poly(m))
            && ode_check_f(m)
            && ode_check_h(m))
    })?;
    let through_15 = all_ok((0..=15u32).collect(), |m| {
        let mut report = gauss_relation_checks(m);
        report.extend(route_checks(m));
        Ok(fg_2f1_check(m) && report.all_passed())
    })?;
    Ok((
        through_20 && through_15,
        format!("TQ/ODE m<=20 {through_20}, relations and routes m<=15 {through_15}"),
    ))
}

fn transformations() -> Outcome {
    let samples = [int(2), int(3), rat(5, 7)];
    let et = all_ok((0..=10u32).collect(), |m| {
        for x in &samples {
            if !et_check(m, x)? {
                return Ok(false);
            }
        }
        Ok(true)
    })?;
    let hq = all_ok((1..=10u32).collect(), |n| hq_check(n, &samples))?;
    Ok((et && hq, format!("Et m<=10 {et}, HQ n<=10 {hq}")))
}

fn recurrences() -> Outcome {
    let report = recurrence_check(30);
    Ok((
        report.all_passed(),
        format!("{} checks, m <= 30", report.len()),
    ))
}

fn structural_invariants() -> Outcome {
    let b_ok = all_ok((0..=30u32).collect(), |m| {
        let b = e_poly(m);
        let palindromic = b.reciprocal(2 * m as usize) == b;
        let coeffs = BCoeffs::from_sum(m);
        Ok(palindromic && coeffs.invariants_hold())
    })?;
    let rows_ok = all_ok((1..=62usize).collect(), |n| {
        // refined_row3 fails with NotIntegral on a non-integer entry.
        let row = refined_row3(n)?;
        Ok(row.iter().all(|v| *v > BigInt::zero()) && row.iter().eq(row.iter().rev()))
    })?;
    let h_ok = all_ok((1..=40usize).collect(), |n| {
        let h1 = h1_poly(n)?;
        let mut ok = h1.reciprocal(n - 1) == h1 && h1.coeff_sum().is_one();
        if n >= 2 {
            let h3 = h3_poly(n)?;
            ok &= h3.reciprocal(n - 1) == h3 && h3.coeff_sum().is_one();
        }
        Ok(ok)
    })?;
    Ok((
        b_ok && rows_ok && h_ok,
        format!("B m<=30 {b_ok}, rows n<=62 {rows_ok}, H n<=40 {h_ok}"),
    ))
}

/// `⌊10⁶ v⌋ / 10⁶` for `0 ≤ v < 1`.
fn six_digits(v: &Rational) -> String {
    let scaled = (v * big(1_000_000)).floor().to_integer();
    format!("0.{scaled:0>6}")
}

fn concentration() -> Outcome {
    let masses = concentration_scan(&[40, 80, 160, 320], &rat(1, 10))?;
    let increasing = masses.windows(2).all(|w| w[0].1 < w[1].1);
    let detail = masses
        .iter()
        .map(|(n, m)| format!("n={n}: {m} ~ {}", six_digits(m)))
        .collect::<Vec<_>>()
        .join("; ");
    Ok((increasing && masses[3].1 > masses[0].1, detail))
}

fn degeneracy_guard() -> Outcome {
    let phi_err = matches!(phi(1, -1), Err(Error::DegenerateParameters(_)));
    let pfinal_err = matches!(
        p_poly(0, PRoute::Closed),
        Err(Error::DegenerateParameters(_))
    );
    let p1 = p_poly(0, PRoute::Division)? == LaurentPoly::even_binomial(1);
    Ok((
        phi_err && pfinal_err && p1,
        format!("phi(1,-1) {phi_err}, Pfinal m=0 {pfinal_err}, P1 {p1}"),
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("oracle equivalence, x = 3", oracle_equivalence),
        ("classical closed forms", classical_closed_forms),
        ("triple-route b coefficients", triple_route_b),
        ("specific anchors", anchors),
        ("T-Q identity suite", tq_suite),
        ("transformation spot checks", transformations),
        ("recurrences", recurrences),
        ("structural invariants", structural_invariants),
        ("concentration scan", concentration),
        ("degeneracy guard", degeneracy_guard),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (passed, detail) = match check() {
            Ok(outcome) => outcome,
            Err(e) => (false, format!("error: {e}")),
        };
        let status = if passed { "PASS" } else { "FAIL" };
        println!(
            "{status} criterion {:>2}: {name} [{detail}] ({:.1}s)",
            i + 1,
            start.elapsed().as_secs_f64()
        );
        failed += usize::from(!passed);
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
