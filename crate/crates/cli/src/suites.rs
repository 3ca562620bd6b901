//! Verification suites behind `asm3 verify`.

use clap::ValueEnum;
use num_traits::{One, Zero};
use rayon::prelude::*;

use asm3_core::asm_numbers::{
    h1_poly, h3_poly, recurrence_check, refined_asm, refined_asm2_ratio, refined_row3, total_asm,
    total_asm3, BCoeffs,
};
use asm3_core::exact_algebra::{big, int, rat};
use asm3_core::oracle::{dp_refined_enum, mt_refined_enum, DP_LIMIT, MT_LIMIT};
use asm3_core::tq_solutions::{identity_suite, p_poly, phi, transform_checks, PRoute};
use asm3_core::{CheckReport, Error, LaurentPoly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    ClosedForms,
    TqIdentities,
    Oracle,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::ClosedForms => "closed-forms",
            Suite::TqIdentities => "tq-identities",
            Suite::Oracle => "oracle",
            Suite::All => "all",
        }
    }
}

/// Sample points for the `x`-space transformation checks.
pub fn samples() -> Vec<Rational> {
    vec![int(2), int(3), rat(5, 7)]
}

fn merge(reports: Vec<CheckReport>) -> CheckReport {
    let mut out = CheckReport::new();
    for r in reports {
        out.extend(r);
    }
    out
}

/// Rows, `b(m, α)` routes, generating functions and recurrences.
pub fn closed_forms(max_m: u32, max_n: usize) -> CheckReport {
    let mut report = CheckReport::new();
    let per_n: Vec<CheckReport> = (1..=max_n)
        .into_par_iter()
        .map(|n| {
            let mut r = CheckReport::new();
            let at = format!("n={n}");
            r.record_result(
                "sum-A(n,r)",
                at.clone(),
                (|| {
                    let sum = (1..=n)
                        .map(|k| refined_asm(n, k))
                        .sum::<asm3_core::Result<num_bigint::BigInt>>()?;
                    Ok::<_, Error>(sum == total_asm(n)?)
                })(),
            );
            r.record_result(
                "row3",
                at.clone(),
                (|| {
                    let row = refined_row3(n)?;
                    let sum: num_bigint::BigInt = row.iter().sum();
                    let boundary = n == 1 || row[0] == total_asm3(n - 1)?;
                    Ok::<_, Error>(
                        sum == total_asm3(n)?
                            && boundary
                            && row.iter().eq(row.iter().rev())
                            && row.iter().all(|v| *v > Zero::zero()),
                    )
                })(),
            );
            r.record_result(
                "ratio2-normalized",
                at.clone(),
                (|| {
                    let sum = (1..=n)
                        .map(|k| refined_asm2_ratio(n, k))
                        .sum::<asm3_core::Result<Rational>>()?;
                    Ok::<_, Error>(sum.is_one())
                })(),
            );
            r.record_result(
                "H1-reciprocity",
                at.clone(),
                h1_poly(n).map(|h| h.reciprocal(n - 1) == h && h.coeff_sum().is_one()),
            );
            if n >= 2 {
                r.record_result(
                    "H3-reciprocity",
                    at,
                    h3_poly(n).map(|h| h.reciprocal(n - 1) == h && h.coeff_sum().is_one()),
                );
            }
            r
        })
        .collect();
    report.extend(merge(per_n));

    let per_m: Vec<CheckReport> = (0..=max_m)
        .into_par_iter()
        .map(|m| {
            let mut r = CheckReport::new();
            let sum = BCoeffs::from_sum(m);
            r.record("b-invariants", format!("m={m}"), sum.invariants_hold());
            r.record_result(
                "b-three-routes",
                format!("m={m}"),
                BCoeffs::from_4f3(m).map(|f| f == sum && BCoeffs::from_e_poly(m) == sum),
            );
            r
        })
        .collect();
    report.extend(merge(per_m));
    report.extend(recurrence_check(max_m));
    report
}

/// The T-Q identities and the `x`-space transformations for `m ≤ max_m`.
pub fn tq_identities(max_m: u32) -> CheckReport {
    let mut report = CheckReport::new();
    let degenerate = matches!(phi(1, -1), Err(Error::DegenerateParameters(_)))
        && matches!(
            p_poly(0, PRoute::Closed),
            Err(Error::DegenerateParameters(_))
        );
    let p1 = LaurentPoly::even_binomial(1);
    report.record("degenerate-guard", "m=0", degenerate);
    report.record_result(
        "P1-division",
        "m=0",
        p_poly(0, PRoute::Division).map(|p| p == p1),
    );
    let per_m: Vec<CheckReport> = (0..=max_m)
        .into_par_iter()
        .map(|m| {
            let mut r = identity_suite(m);
            match transform_checks(m, &samples()) {
                Ok(t) => r.extend(t),
                Err(e) => r.record_result("transforms", format!("m={m}"), Err(e)),
            }
            r
        })
        .collect();
    report.extend(merge(per_m));
    report
}

/// Closed forms against both brute-force oracles for `n ≤ max_n`.
pub fn oracle(max_n: usize) -> CheckReport {
    let per_n: Vec<CheckReport> = (1..=max_n)
        .into_par_iter()
        .map(|n| {
            let mut r = CheckReport::new();
            let at = format!("n={n}");
            r.record_result(
                "oracle-x3",
                at.clone(),
                (|| {
                    let row: Vec<Rational> = refined_row3(n)?.into_iter().map(big).collect();
                    let dp = dp_refined_enum(n, &int(3))?;
                    let mut ok = dp.counts == row && dp.is_symmetric();
                    if n <= MT_LIMIT {
                        ok &= mt_refined_enum(n, &int(3))?.counts == row;
                    }
                    Ok::<_, Error>(ok)
                })(),
            );
            r.record_result(
                "oracle-x1",
                at.clone(),
                (|| {
                    let row = (1..=n)
                        .map(|k| refined_asm(n, k).map(big))
                        .collect::<asm3_core::Result<Vec<_>>>()?;
                    let dp = dp_refined_enum(n, &int(1))?;
                    let mut ok = dp.counts == row && dp.total() == big(total_asm(n)?);
                    if n <= MT_LIMIT {
                        ok &= mt_refined_enum(n, &int(1))?.counts == row;
                    }
                    Ok::<_, Error>(ok)
                })(),
            );
            r.record_result(
                "oracle-x2",
                at,
                (|| {
                    let dp = dp_refined_enum(n, &int(2))?;
                    let expected = (1..=n)
                        .map(|k| refined_asm2_ratio(n, k))
                        .collect::<asm3_core::Result<Vec<_>>>()?;
                    let mut ok = dp.ratios() == expected;
                    if n <= MT_LIMIT {
                        ok &= mt_refined_enum(n, &int(2))?.counts == dp.counts;
                    }
                    Ok::<_, Error>(ok)
                })(),
            );
            r
        })
        .collect();
    merge(per_n)
}

/// Validates suite limits before any work starts.
pub fn validate(suite: Suite, max_n: usize) -> Result<(), String> {
    let needs_oracle = matches!(suite, Suite::Oracle | Suite::All);
    if needs_oracle && max_n > DP_LIMIT {
        return Err(format!(
            "--max-n {max_n} exceeds the oracle limit {DP_LIMIT}"
        ));
    }
    if max_n == 0 {
        return Err("--max-n must be at least 1".into());
    }
    Ok(())
}

pub fn run(suite: Suite, max_m: u32, max_n: usize) -> CheckReport {
    match suite {
        Suite::ClosedForms => closed_forms(max_m, max_n),
        Suite::TqIdentities => tq_identities(max_m),
        Suite::Oracle => oracle(max_n),
        Suite::All => {
            let mut r = closed_forms(max_m, max_n);
            r.extend(tq_identities(max_m));
            r.extend(oracle(max_n));
            r
        }
    }
}
