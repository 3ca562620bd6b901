//! Value parsers for command-line arguments.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use asm3_core::Rational;

/// Most fractional digits accepted in a decimal literal.
pub const MAX_DECIMAL_DIGITS: usize = 18;

/// Parses `p/q`, an integer, or a decimal literal such as `0.125`, exactly.
pub fn rational(text: &str) -> Result<Rational, String> {
    let text = text.trim();
    if let Some((p, q)) = text.split_once('/') {
        let p: BigInt = p
            .trim()
            .parse()
            .map_err(|_| format!("bad numerator in `{text}`"))?;
        let q: BigInt = q
            .trim()
            .parse()
            .map_err(|_| format!("bad denominator in `{text}`"))?;
        if q.is_zero() {
            return Err(format!("zero denominator in `{text}`"));
        }
        return Ok(Rational::new(p, q));
    }
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.strip_prefix('+').unwrap_or(text)),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    let digits_ok = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    if (whole.is_empty() && frac.is_empty()) || !digits_ok(whole) || !digits_ok(frac) {
        return Err(format!("`{text}` is not a rational number"));
    }
    if frac.len() > MAX_DECIMAL_DIGITS {
        return Err(format!(
            "`{text}` has more than {MAX_DECIMAL_DIGITS} fractional digits"
        ));
    }
    let numer: BigInt = format!("{whole}{frac}")
        .parse()
        .unwrap_or_else(|_| BigInt::zero());
    let denom = num_traits::pow(BigInt::from(10), frac.len());
    let value = Rational::new(numer, denom);
    Ok(if negative { -value } else { value })
}

/// Sorted, deduplicated list of matrix sizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sizes(pub Vec<usize>);

/// Parses a comma-separated list of sizes and inclusive ranges `a..b`,
/// e.g. `4`, `40,80,160` or `2..10`.
pub fn sizes(text: &str) -> Result<Sizes, String> {
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim) {
        let num = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{s}` is not a nonnegative integer"))
        };
        match part.split_once("..") {
            Some((lo, hi)) => {
                let (lo, hi) = (num(lo)?, num(hi.trim_start_matches('='))?);
                if lo > hi {
                    return Err(format!("empty range `{part}`"));
                }
                out.extend(lo..=hi);
            }
            None => out.push(num(part)?),
        }
    }
    out.sort_unstable();
    out.dedup();
    if out.is_empty() {
        return Err("no sizes given".into());
    }
    Ok(Sizes(out))
}

/// Decimal expansion of `value` rounded half away from zero to `digits`
/// fractional digits.
pub fn decimal(value: &Rational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = value.abs() * Rational::from_integer(scale.clone());
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let rounded = (scaled + half).floor().to_integer();
    let whole = &rounded / &scale;
    let frac = &rounded % &scale;
    let sign = if *value < Rational::zero() && !rounded.is_zero() {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{frac:0>digits$}", frac = frac.to_string())
    }
}
