//! Exact rational scalars, univariate polynomials, rational symmetric
//! linear algebra and Sturm-sequence root isolation.
//!
//! Every operation in this crate goes through the types defined here;
//! there is no floating point anywhere in the library.

pub mod matrix;
pub mod poly;
pub mod roots;

pub use matrix::{LinAlgError, PsdVerdict, RatMatrix};
pub use poly::UniPoly;
pub use roots::{cauchy_bound, isolate_max_root, sturm_count, RootError, SturmChain};

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};
use std::str::FromStr;

/// Exact rational scalar. `BigRational` keeps values in lowest terms with a
/// positive denominator, which is exactly the normalization we rely on.
pub type Rat = BigRational;

/// Shorthand for a small rational `n/d`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for a small integer as a rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parse `p`, `p/q` or `-p/q`.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    match s.split_once('/') {
        None => BigInt::from_str(s)
            .map(Rat::from_integer)
            .map_err(|e| format!("bad integer {s:?}: {e}")),
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|e| format!("bad numerator {p:?}: {e}"))?;
            let q =
                BigInt::from_str(q.trim()).map_err(|e| format!("bad denominator {q:?}: {e}"))?;
            if q.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(Rat::new(p, q))
        }
    }
}

/// Render an exact rational as a fixed-point decimal with `digits` places,
/// rounding half-up at the last digit. Computed by exact long division so
/// output is byte-stable.
pub fn to_decimal(r: &Rat, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    // half-up: round(x) = floor(x + 1/2) on the scaled value
    let scaled = r * Rat::from_integer(scale.clone()) + Rat::new(BigInt::one(), BigInt::from(2));
    let rounded = scaled.floor().to_integer();
    let neg = rounded.sign() == Sign::Minus;
    let mag = rounded.magnitude().to_string();
    let mag = if mag.len() <= digits {
        format!("{}{}", "0".repeat(digits + 1 - mag.len()), mag)
    } else {
        mag
    };
    let (ip, fp) = mag.split_at(mag.len() - digits);
    let body = if digits == 0 {
        ip.to_string()
    } else {
        format!("{ip}.{fp}")
    };
    if neg && !body.chars().all(|c| c == '0' || c == '.') {
        format!("-{body}")
    } else {
        body
    }
}

/// Floor of a rational as a `BigInt`.
pub fn floor_int(r: &Rat) -> BigInt {
    r.floor().to_integer()
}

/// Sign of a rational as -1, 0, or 1.
pub fn sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        assert_eq!(parse_rat("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rat("-5").unwrap(), int(-5));
        assert_eq!(parse_rat(" 7 / -2 ").unwrap(), rat(-7, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn decimal_half_up() {
        assert_eq!(to_decimal(&rat(1, 2), 0), "1");
        assert_eq!(to_decimal(&rat(1, 3), 2), "0.33");
        assert_eq!(to_decimal(&rat(2, 3), 2), "0.67");
        assert_eq!(to_decimal(&rat(-1, 3), 2), "-0.33");
        assert_eq!(to_decimal(&rat(1445, 100), 1), "14.5"); // 14.45 -> 14.5
        assert_eq!(to_decimal(&int(14), 2), "14.00");
        assert_eq!(to_decimal(&rat(-1, 1000), 2), "0.00");
    }
}
