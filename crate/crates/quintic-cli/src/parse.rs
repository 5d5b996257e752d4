//! Exact coefficient parsing: integers, decimals, and rationals "p/q" all
//! land in arbitrary-precision rationals, so resolvent construction stays
//! exact no matter how the input was written. Decimals are expanded
//! digit-for-digit (2.5 → 25/10), never routed through floating point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

/// Parse one coefficient token. Accepted forms: `-12`, `3.25`, `-7/4`.
pub fn parse_rational(token: &str) -> Result<BigRational, String> {
    let bad = || format!("'{token}' is not an integer, decimal, or rational p/q");
    let s = token.trim();
    if s.is_empty() {
        return Err(bad());
    }

    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.parse().map_err(|_| bad())?;
        let d: BigInt = den.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(format!("'{token}' has a zero denominator"));
        }
        if den.starts_with(['+', '-']) {
            return Err(format!("'{token}': sign the numerator, not the denominator"));
        }
        return Ok(BigRational::new(n, d));
    }

    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = format!("{int_part}{frac_part}");
        let n: BigInt = digits.parse().map_err(|_| bad())?;
        let d = BigInt::from(10u32).pow(frac_part.len() as u32);
        return Ok(BigRational::new(n, d));
    }

    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(n))
}

/// Parse a complex argument "RE" or "RE,IM", each part in coefficient syntax.
pub fn parse_complex(token: &str) -> Result<num_complex::Complex64, String> {
    let (re, im) = match token.split_once(',') {
        Some((re, im)) => (re, im),
        None => (token, "0"),
    };
    let to_f64 = |part: &str| -> Result<f64, String> {
        parse_rational(part)?
            .to_f64()
            .ok_or_else(|| format!("'{part}' does not fit a double"))
    };
    Ok(num_complex::Complex64::new(to_f64(re)?, to_f64(im)?))
}
