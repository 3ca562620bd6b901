use crate::asm_numbers::{EnumTable, Provenance};
use crate::exact_algebra::Rational;
use crate::Result;

use super::{check_size, weigh, MT_LIMIT};

/// Enumerates every row of length `below.len() − 1` interlacing `below`,
/// descending to the top of the triangle.
fn descend(below: &[usize], minus: usize, hist: &mut [Vec<u128>]) {
    let k = below.len() - 1;
    if k == 0 {
        return;
    }
    let mut row = vec![0usize; k];
    choose(0, below, &mut row, minus, hist);
}

fn choose(i: usize, below: &[usize], row: &mut Vec<usize>, minus: usize, hist: &mut [Vec<u128>]) {
    let k = row.len();
    if i == k {
        // Columns whose partial sum drops from 1 to 0 carry a −1.
        let minus = minus + row.iter().filter(|v| !below.contains(v)).count();
        if k == 1 {
            let top = row[0] - 1;
            if hist[top].len() <= minus {
                hist[top].resize(minus + 1, 0);
            }
            hist[top][minus] += 1;
        } else {
            let snapshot = row.clone();
            descend(&snapshot, minus, hist);
        }
        return;
    }
    let lo = if i == 0 {
        below[0]
    } else {
        below[i].max(row[i - 1] + 1)
    };
    for v in lo..=below[i + 1] {
        row[i] = v;
        choose(i + 1, below, row, minus, hist);
    }
}

/// `A(n, r; x)` for `r = 1..=n` by enumerating monotone triangles with
/// bottom row `1..n`.
pub fn mt_refined_enum(n: usize, x: &Rational) -> Result<EnumTable> {
    check_size(n, MT_LIMIT)?;
    let mut hist = vec![Vec::new(); n];
    if n == 1 {
        hist[0].push(1);
    } else {
        let bottom: Vec<usize> = (1..=n).collect();
        descend(&bottom, 0, &mut hist);
    }
    let counts = hist.iter().map(|h| weigh(h, x)).collect();
    Ok(EnumTable {
        n,
        weight_x: x.clone(),
        counts,
        provenance: Provenance::OracleMT,
    })
}
