use num_traits::Zero;
use rayon::prelude::*;

use crate::exact_algebra::{rat, Rational};
use crate::{Error, Result};

use super::{refined_asm, refined_asm2_ratio, refined_row3, total_asm};

/// Whether row position `r` of an `n`-row lies in the central window
/// `|ξ − 1/2| < ε` with `ξ = (r−1)/(n−1)`.
pub fn in_window(n: usize, r: usize, eps: &Rational) -> bool {
    let xi = rat(r as i64 - 1, n as i64 - 1);
    let d = xi - rat(1, 2);
    let d = if d < Rational::zero() { -d } else { d };
    d < *eps
}

fn validate(n_list: &[usize], eps: &Rational) -> Result<()> {
    if *eps <= Rational::zero() || *eps >= rat(1, 2) {
        return Err(Error::OutOfRange(format!(
            "epsilon = {eps} not in (0, 1/2)"
        )));
    }
    if let Some(n) = n_list.iter().find(|&&n| n < 2) {
        return Err(Error::OutOfRange(format!("scan needs n >= 2, got {n}")));
    }
    Ok(())
}

fn central_mass(n: usize, eps: &Rational, weights: &[Rational]) -> Rational {
    let total = weights.iter().fold(Rational::zero(), |acc, w| acc + w);
    let inside = weights
        .iter()
        .enumerate()
        .filter(|(i, _)| in_window(n, i + 1, eps))
        .fold(Rational::zero(), |acc, (_, w)| acc + w);
    inside / total
}

/// Exact central mass `Σ_{|ξ−1/2|<ε} A(n,r;x)/A(n;x)` for `x ∈ {1, 2, 3}`,
/// ordered by `n`.
pub fn concentration_scan_for(
    x: u32,
    n_list: &[usize],
    eps: &Rational,
) -> Result<Vec<(usize, Rational)>> {
    validate(n_list, eps)?;
    let mut ns = n_list.to_vec();
    ns.sort_unstable();
    ns.dedup();
    ns.par_iter()
        .map(|&n| {
            let weights: Vec<Rational> = match x {
                1 => {
                    let total = Rational::from_integer(total_asm(n)?);
                    (1..=n)
                        .map(|r| Ok(Rational::from_integer(refined_asm(n, r)?) / &total))
                        .collect::<Result<_>>()?
                }
                2 => (1..=n)
                    .map(|r| refined_asm2_ratio(n, r))
                    .collect::<Result<_>>()?,
                3 => refined_row3(n)?
                    .into_iter()
                    .map(Rational::from_integer)
                    .collect(),
                _ => {
                    return Err(Error::OutOfRange(format!(
                        "scan supports x = 1, 2, 3, got {x}"
                    )))
                }
            };
            Ok((n, central_mass(n, eps, &weights)))
        })
        .collect()
}

/// Central mass of the refined 3-enumeration.
pub fn concentration_scan(n_list: &[usize], eps: &Rational) -> Result<Vec<(usize, Rational)>> {
    concentration_scan_for(3, n_list, eps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::int;

    #[test]
    fn small_masses() {
        assert_eq!(
            concentration_scan(&[3], &rat(2, 5)).unwrap(),
            vec![(3, rat(5, 9))]
        );
        assert_eq!(
            concentration_scan(&[4], &rat(3, 10)).unwrap(),
            vec![(4, rat(4, 5))]
        );
    }

    #[test]
    fn sorted_output() {
        let out = concentration_scan(&[12, 6, 9], &rat(1, 4)).unwrap();
        let ns: Vec<usize> = out.iter().map(|(n, _)| *n).collect();
        assert_eq!(ns, vec![6, 9, 12]);
    }

    #[test]
    fn invalid_inputs() {
        assert!(concentration_scan(&[4], &rat(1, 2)).is_err());
        assert!(concentration_scan(&[4], &int(0)).is_err());
        assert!(concentration_scan(&[1], &rat(1, 4)).is_err());
        assert!(concentration_scan_for(5, &[4], &rat(1, 4)).is_err());
    }

    #[test]
    fn window_is_symmetric() {
        for n in 2..30 {
            for r in 1..=n {
                assert_eq!(
                    in_window(n, r, &rat(1, 7)),
                    in_window(n, n + 1 - r, &rat(1, 7))
                );
            }
        }
    }

    #[test]
    fn other_weights_concentrate() {
        for x in [1, 2] {
            let out = concentration_scan_for(x, &[20, 40, 80], &rat(1, 5)).unwrap();
            assert!(out.windows(2).all(|w| w[0].1 < w[1].1), "x = {x}: {out:?}");
        }
    }
}
