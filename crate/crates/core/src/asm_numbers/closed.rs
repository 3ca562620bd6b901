use num_bigint::BigInt;
use num_traits::One;

use crate::combinat::{binom_q, fact, pow3};
use crate::exact_algebra::{as_integer, big, int, Rational};
use crate::{Error, Result};

use super::bcoeff::BCoeffs;
use super::{EnumTable, Provenance};

fn integral(value: Rational, what: impl FnOnce() -> String) -> Result<BigInt> {
    as_integer(&value).ok_or_else(|| Error::NotIntegral(format!("{} = {value}", what())))
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    Ok(())
}

fn check_r(n: usize, r: usize) -> Result<()> {
    check_n(n)?;
    if r == 0 || r > n {
        return Err(Error::OutOfRange(format!("r = {r} not in 1..={n}")));
    }
    Ok(())
}

/// `A(n) = Π_{k=1}^{n} (3k−2)! / (2n−k)!`.
pub fn total_asm(n: usize) -> Result<BigInt> {
    check_n(n)?;
    let value = (1..=n).fold(Rational::one(), |acc, k| {
        acc * fact(3 * k - 2) / fact(2 * n - k)
    });
    integral(value, || format!("A({n})"))
}

/// `A(n, r) = C(n+r−2, n−1) C(2n−1−r, n−1) / C(3n−2, n−1) · A(n)`.
pub fn refined_asm(n: usize, r: usize) -> Result<BigInt> {
    check_r(n, r)?;
    let (ni, ri) = (n as i64, r as i64);
    let ratio = binom_q(ni + ri - 2, ni - 1) * binom_q(2 * ni - 1 - ri, ni - 1)
        / binom_q(3 * ni - 2, ni - 1);
    integral(ratio * big(total_asm(n)?), || format!("A({n},{r})"))
}

/// `A(n; 2) = 2^{n(n−1)/2}`.
pub fn total_asm2(n: usize) -> Result<BigInt> {
    check_n(n)?;
    Ok(BigInt::one() << (n * (n - 1) / 2))
}

/// `A(n, r; 2) / A(n; 2) = C(n−1, r−1) / 2^{n−1}`.
pub fn refined_asm2_ratio(n: usize, r: usize) -> Result<Rational> {
    check_r(n, r)?;
    Ok(binom_q(n as i64 - 1, r as i64 - 1) / big(BigInt::one() << (n - 1)))
}

/// `A(2m+1; 3) = 3^{m(m+1)} Π_{k=1}^{m} [(3k−1)!/(m+k)!]²` and
/// `A(2m+2; 3) = 3^m (3m+2)! m! / ((2m+1)!)² · A(2m+1; 3)`.
pub fn total_asm3(n: usize) -> Result<BigInt> {
    check_n(n)?;
    let m = (n - 1) / 2;
    let mut odd = pow3(m * (m + 1));
    for k in 1..=m {
        let ratio = fact(3 * k - 1) / fact(m + k);
        odd *= &ratio * &ratio;
    }
    let value = if n % 2 == 1 {
        odd
    } else {
        let two_m_one = fact(2 * m + 1);
        pow3(m) * fact(3 * m + 2) * fact(m) / (&two_m_one * &two_m_one) * odd
    };
    integral(value, || format!("A({n};3)"))
}

/// Ratio `A(n, r; 3) / A(n; 3)` from the coefficients of `B_{2m}`.
fn ratio3(n: usize, r: usize, b: &BCoeffs) -> Rational {
    let r = r as i64;
    if n.is_multiple_of(2) {
        (b.get(r - 1) + b.get(r - 2)) / int(2)
    } else {
        (int(2) * b.get(r - 1) + int(5) * b.get(r - 2) + int(2) * b.get(r - 3)) / int(9)
    }
}

fn half_index(n: usize) -> u32 {
    ((n - 2) / 2) as u32
}

/// `A(n, r; 3)`: for `n = 2m+2`, `(b(m,r−1) + b(m,r−2))/2 · A(n;3)`; for
/// `n = 2m+3`, `(2b(m,r−1) + 5b(m,r−2) + 2b(m,r−3))/9 · A(n;3)`.
///
/// Fails with `NotIntegral` if the result is not an integer, which would
/// mean the formula is wrong.
pub fn refined_asm3(n: usize, r: usize) -> Result<BigInt> {
    check_r(n, r)?;
    if n == 1 {
        return Ok(BigInt::one());
    }
    let b = BCoeffs::from_sum(half_index(n));
    integral(ratio3(n, r, &b) * big(total_asm3(n)?), || {
        format!("A({n},{r};3)")
    })
}

/// The full row `A(n, 1..=n; 3)`, sharing one set of `b(m, ·)`.
pub fn refined_row3(n: usize) -> Result<Vec<BigInt>> {
    check_n(n)?;
    if n == 1 {
        return Ok(vec![BigInt::one()]);
    }
    let b = BCoeffs::from_sum(half_index(n));
    let total = big(total_asm3(n)?);
    (1..=n)
        .map(|r| integral(ratio3(n, r, &b) * &total, || format!("A({n},{r};3)")))
        .collect()
}

/// Closed-form row for `x ∈ {1, 2, 3}`.
pub fn formula_table(n: usize, x: u32) -> Result<EnumTable> {
    check_n(n)?;
    let (counts, provenance) = match x {
        1 => (
            (1..=n)
                .map(|r| refined_asm(n, r).map(big))
                .collect::<Result<Vec<_>>>()?,
            Provenance::ClosedForm,
        ),
        2 => {
            let total = big(total_asm2(n)?);
            (
                (1..=n)
                    .map(|r| refined_asm2_ratio(n, r).map(|q| q * &total))
                    .collect::<Result<Vec<_>>>()?,
                Provenance::ClosedForm,
            )
        }
        3 => (
            refined_row3(n)?.into_iter().map(big).collect(),
            Provenance::Theorem,
        ),
        _ => {
            return Err(Error::OutOfRange(format!(
                "closed forms exist for x = 1, 2, 3 only, got {x}"
            )))
        }
    };
    Ok(EnumTable {
        n,
        weight_x: int(x as i64),
        counts,
        provenance,
    })
}
