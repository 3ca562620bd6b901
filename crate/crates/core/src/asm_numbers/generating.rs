use crate::combinat::fact;
use crate::exact_algebra::{int, rat, DensePoly};
use crate::hyper::HypSpec;
use crate::tq_solutions::e_poly;
use crate::{Error, Result};

/// `H_n^{(1)}(t) = (2n−1)!(2n−2)!/((3n−2)!(n−1)!) · ₂F₁(−n+1, n; −2n+2; t)`.
pub fn h1_poly(n: usize) -> Result<DensePoly> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    if n == 1 {
        return Ok(DensePoly::one());
    }
    let ni = n as i64;
    let pref = fact(2 * n - 1) * fact(2 * n - 2) / (fact(3 * n - 2) * fact(n - 1));
    let spec = HypSpec::gauss(int(1 - ni), int(ni), int(2 - 2 * ni));
    let coeffs = spec.coefficients()?;
    Ok(DensePoly::from_coeffs(
        coeffs.into_iter().map(|c| c * &pref).collect(),
    ))
}

/// `H_n^{(3)}(t)`: `(t+1)/2 · B_{2m}(t)` for `n = 2m+2`,
/// `(2t+1)(t+2)/9 · B_{2m}(t)` for `n = 2m+3`.
pub fn h3_poly(n: usize) -> Result<DensePoly> {
    if n < 2 {
        return Err(Error::OutOfRange("H^(3) needs n >= 2".into()));
    }
    let b = e_poly(((n - 2) / 2) as u32);
    let factor = if n.is_multiple_of(2) {
        DensePoly::linear(rat(1, 2), rat(1, 2))
    } else {
        DensePoly::from_coeffs(vec![rat(2, 9), rat(5, 9), rat(2, 9)])
    };
    Ok(&factor * &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asm_numbers::{refined_asm, refined_row3, total_asm, total_asm3};
    use crate::exact_algebra::{big, Rational};
    use num_traits::One;

    #[test]
    fn h1_at_four() {
        let h = h1_poly(4).unwrap();
        let expected: Vec<Rational> = [7, 14, 14, 7].iter().map(|&v| rat(v, 42)).collect();
        assert_eq!(h.coeffs(), expected.as_slice());
    }

    #[test]
    fn h3_small() {
        assert_eq!(h3_poly(2).unwrap().coeffs(), &[rat(1, 2), rat(1, 2)]);
        assert!(h3_poly(5).unwrap().coeff_sum().is_one());
        assert!(h3_poly(1).is_err());
    }

    #[test]
    fn coefficients_reproduce_counts() {
        for n in 1..=12usize {
            let h = h1_poly(n).unwrap();
            let total = big(total_asm(n).unwrap());
            for r in 1..=n {
                assert_eq!(h.coeff(r - 1) * &total, big(refined_asm(n, r).unwrap()));
            }
            assert_eq!(h.reciprocal(n - 1), h, "n = {n}");
            assert!(h.coeff_sum().is_one());
        }
        for n in 2..=16usize {
            let h = h3_poly(n).unwrap();
            let total = big(total_asm3(n).unwrap());
            let row = refined_row3(n).unwrap();
            for (r, v) in row.into_iter().enumerate() {
                assert_eq!(h.coeff(r) * &total, big(v), "n = {n}, r = {}", r + 1);
            }
            assert_eq!(h.reciprocal(n - 1), h, "n = {n}");
            assert!(h.coeff_sum().is_one());
        }
    }
}
