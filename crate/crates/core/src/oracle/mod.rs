//! Brute-force refined `x`-enumerations for small `n`, used as ground truth.
//!
//! The two algorithms share no code: [`dp_refined_enum`] runs a transfer over
//! column partial-sum states, [`mt_refined_enum`] walks monotone triangles.

mod dp;
mod triangles;

pub use dp::dp_refined_enum;
pub use triangles::mt_refined_enum;

use num_traits::{One, Zero};

use crate::exact_algebra::Rational;
use crate::{Error, Result};

/// Largest `n` accepted by [`dp_refined_enum`].
pub const DP_LIMIT: usize = 14;
/// Largest `n` accepted by [`mt_refined_enum`].
pub const MT_LIMIT: usize = 8;

fn check_size(n: usize, limit: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    if n > limit {
        return Err(Error::SizeLimitExceeded { n, limit });
    }
    Ok(())
}

/// `Σ_k hist[k] x^k`.
fn weigh(hist: &[u128], x: &Rational) -> Rational {
    let mut power = Rational::one();
    let mut total = Rational::zero();
    for &c in hist {
        if c != 0 {
            total += Rational::from_integer(c.into()) * &power;
        }
        power *= x;
    }
    total
}

/// Both oracles agree entrywise.
pub fn oracle_cross_check(n: usize, x: &Rational) -> Result<bool> {
    Ok(dp_refined_enum(n, x)?.same_counts(&mt_refined_enum(n, x)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::{int, rat};

    /// Explicit `{−1, 0, 1}` matrices built row by row.
    fn matrix_enum(n: usize, x: &Rational) -> Vec<Rational> {
        fn rows(n: usize) -> Vec<Vec<i8>> {
            let mut out = vec![];
            let mut cur = vec![0i8; n];
            fn go(j: usize, expect: i8, cur: &mut Vec<i8>, out: &mut Vec<Vec<i8>>) {
                if j == cur.len() {
                    if expect == -1 {
                        out.push(cur.clone());
                    }
                    return;
                }
                cur[j] = 0;
                go(j + 1, expect, cur, out);
                cur[j] = expect;
                go(j + 1, -expect, cur, out);
                cur[j] = 0;
            }
            go(0, 1, &mut cur, &mut out);
            out
        }
        let all = rows(n);
        let mut counts = vec![Rational::zero(); n];
        fn place(
            k: usize,
            sums: &mut Vec<i8>,
            first: usize,
            minus: usize,
            all: &[Vec<i8>],
            x: &Rational,
            counts: &mut [Rational],
        ) {
            let n = sums.len();
            if k == n {
                if sums.iter().all(|&s| s == 1) {
                    counts[first] += x.pow(minus as i32);
                }
                return;
            }
            for row in all {
                if k == 0 && row.iter().any(|&v| v < 0) {
                    continue;
                }
                if sums
                    .iter()
                    .zip(row)
                    .all(|(&s, &v)| (0..=1).contains(&(s + v)))
                {
                    for (s, &v) in sums.iter_mut().zip(row) {
                        *s += v;
                    }
                    let f = if k == 0 {
                        row.iter().position(|&v| v == 1).unwrap()
                    } else {
                        first
                    };
                    let mm = minus + row.iter().filter(|&&v| v < 0).count();
                    place(k + 1, sums, f, mm, all, x, counts);
                    for (s, &v) in sums.iter_mut().zip(row) {
                        *s -= v;
                    }
                }
            }
        }
        place(0, &mut vec![0; n], 0, 0, &all, x, &mut counts);
        counts
    }

    #[test]
    fn both_oracles_match_matrices() {
        for n in 1..=4 {
            for x in [int(1), int(2), int(3), rat(-1, 2)] {
                let direct = matrix_enum(n, &x);
                assert_eq!(
                    dp_refined_enum(n, &x).unwrap().counts,
                    direct,
                    "n = {n}, x = {x}"
                );
                assert_eq!(
                    mt_refined_enum(n, &x).unwrap().counts,
                    direct,
                    "n = {n}, x = {x}"
                );
            }
        }
    }

    #[test]
    fn cross_checks() {
        assert!(oracle_cross_check(5, &int(3)).unwrap());
        assert!(oracle_cross_check(6, &int(1)).unwrap());
        assert_eq!(dp_refined_enum(6, &int(1)).unwrap().total(), int(7436));
        assert!(oracle_cross_check(4, &int(2)).unwrap());
        assert_eq!(mt_refined_enum(4, &int(2)).unwrap().total(), int(64));
        assert!(oracle_cross_check(5, &rat(7, 3)).unwrap());
    }

    #[test]
    fn size_limits() {
        assert_eq!(
            dp_refined_enum(DP_LIMIT + 1, &int(1)),
            Err(Error::SizeLimitExceeded {
                n: DP_LIMIT + 1,
                limit: DP_LIMIT
            })
        );
        assert!(matches!(
            mt_refined_enum(MT_LIMIT + 1, &int(1)),
            Err(Error::SizeLimitExceeded { .. })
        ));
        assert!(matches!(
            dp_refined_enum(0, &int(1)),
            Err(Error::OutOfRange(_))
        ));
        assert!(matches!(
            mt_refined_enum(0, &int(1)),
            Err(Error::OutOfRange(_))
        ));
    }
}
