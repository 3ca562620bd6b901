use num_bigint::BigInt;

use crate::combinat::fact;
use crate::exact_algebra::{big, int, Rational};
use crate::report::CheckReport;
use crate::tq_solutions::{b_zero_closed, e_poly};

use super::{h1_poly, total_asm, total_asm3};

/// Rebuilds `A(n;3)` from `A(1;3) = 1`, `A(2;3) = 2` and `B_{2m}(0)`, and
/// `A(n)` from `A(1) = 1` and `A(n−1)/A(n) = H_n^{(1)}(0)`, comparing every
/// step against the product formulas for `n ≤ 2·max_m + 3`.
pub fn recurrence_check(max_m: u32) -> CheckReport {
    let mut report = CheckReport::new();
    let exact3 = |n: usize| big(total_asm3(n).expect("n >= 1"));

    report.record("A(1;3)=1", "", exact3(1) == int(1));
    report.record("A(2;3)=2", "", exact3(2) == int(2));

    let b0: Vec<Rational> = (0..=max_m).map(b_zero_closed).collect();
    let mut chain: Vec<Rational> = vec![int(0), int(1), int(2)];
    for m in 0..=max_m as usize {
        report.record(
            "Bzero",
            format!("m={m}"),
            e_poly(m as u32).coeff(0) == b0[m],
        );
        // A(2m+2;3) for m ≥ 1, then A(2m+3;3).
        if m >= 1 {
            let even = int(9) / (&b0[m] * &b0[m - 1]) * &chain[2 * m];
            chain.push(even);
            let n = 2 * m + 2;
            report.record("Aeven", format!("n={n}"), chain[n] == exact3(n));
        }
        let odd = int(9) / (&b0[m] * &b0[m]) * &chain[2 * m + 1];
        chain.push(odd);
        let n = 2 * m + 3;
        report.record("Aodd", format!("n={n}"), chain[n] == exact3(n));
    }

    let top = 2 * max_m as usize + 3;
    let mut a_prev = BigInt::from(1);
    report.record("A(1)=1", "", total_asm(1).expect("n >= 1") == a_prev);
    for n in 2..=top {
        let ratio = fact(2 * n - 1) * fact(2 * n - 2) / (fact(3 * n - 2) * fact(n - 1));
        let h0 = h1_poly(n).expect("n >= 1").coeff(0);
        let next = big(a_prev.clone()) / &ratio;
        let exact = total_asm(n).expect("n >= 1");
        report.record(
            "A(n-1)/A(n)",
            format!("n={n}"),
            h0 == ratio && next == big(exact.clone()),
        );
        a_prev = exact;
    }
    report
}
