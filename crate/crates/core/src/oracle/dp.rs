use std::collections::HashMap;

use rayon::prelude::*;

use crate::asm_numbers::{EnumTable, Provenance};
use crate::exact_algebra::Rational;
use crate::Result;

use super::{check_size, weigh, DP_LIMIT};

/// Column partial sums after some number of rows: bit `j` set iff column `j`
/// has sum 1.
type State = u32;

/// `(next state, number of −1 entries in the row)`.
type Successor = (State, u8);

/// All rows compatible with `state`: the entry vector `d = S' − S` must have
/// prefix sums in `{0, 1}` ending at 1.
fn successors(n: usize, state: State) -> Vec<Successor> {
    fn go(
        n: usize,
        j: usize,
        state: State,
        prefix: bool,
        next: State,
        plus: u8,
        out: &mut Vec<Successor>,
    ) {
        if j == n {
            if prefix {
                out.push((next, plus - 1));
            }
            return;
        }
        let bit = 1 << j;
        let set = state & bit != 0;
        go(n, j + 1, state, prefix, next | (state & bit), plus, out);
        if set && prefix {
            go(n, j + 1, state, false, next, plus, out);
        }
        if !set && !prefix {
            go(n, j + 1, state, true, next | bit, plus + 1, out);
        }
    }
    let mut out = Vec::new();
    go(n, 0, state, false, 0, 0, &mut out);
    out
}

/// Histogram by number of `−1` entries; `hist[k]` counts matrices with `k`.
type Hist = Vec<u128>;

fn add_shifted(into: &mut Hist, from: &Hist, shift: usize) {
    if into.len() < from.len() + shift {
        into.resize(from.len() + shift, 0);
    }
    for (i, &c) in from.iter().enumerate() {
        into[i + shift] += c;
    }
}

fn run_from(n: usize, first: State, table: &[Vec<Successor>]) -> Hist {
    let mut layer: HashMap<State, Hist> = HashMap::from([(first, vec![1])]);
    for row in 2..=n {
        let mut next: HashMap<State, Hist> = HashMap::new();
        for (state, hist) in &layer {
            for &(succ, minus) in &table[*state as usize] {
                add_shifted(next.entry(succ).or_default(), hist, minus as usize);
            }
        }
        debug_assert!(next.keys().all(|s| s.count_ones() as usize == row));
        layer = next;
    }
    let full: State = (1 << n) - 1;
    layer.remove(&full).unwrap_or_default()
}

/// `A(n, r; x)` for `r = 1..=n` by dynamic programming over column states.
pub fn dp_refined_enum(n: usize, x: &Rational) -> Result<EnumTable> {
    check_size(n, DP_LIMIT)?;
    // Only states with at least one bit are ever expanded.
    let table: Vec<Vec<Successor>> = (0..1u32 << n)
        .into_par_iter()
        .map(|s| {
            if s == 0 || s.count_ones() as usize == n {
                Vec::new()
            } else {
                successors(n, s)
            }
        })
        .collect();
    let counts = (0..n)
        .into_par_iter()
        .map(|r| weigh(&run_from(n, 1 << r, &table), x))
        .collect();
    Ok(EnumTable {
        n,
        weight_x: x.clone(),
        counts,
        provenance: Provenance::OracleDP,
    })
}
