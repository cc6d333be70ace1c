//! Exact rational scalars.
//!
//! The coefficient field for every algebraic identity in this crate is the
//! field of arbitrary-precision rationals, backed by [`num_rational::BigRational`].
//! The backing type maintains the invariants we need: the denominator is
//! positive and gcd(numerator, denominator) = 1 after every operation, and
//! arithmetic never rounds.

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar used for all polynomial coefficients and parameters.
pub type Rat = BigRational;

/// `n` as an exact scalar.
pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` as an exact scalar. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Integer power with negative exponents allowed. Panics on `0^k` for `k < 0`.
pub fn pow_i(x: &Rat, k: i64) -> Rat {
    if k >= 0 {
        num_traits::pow::pow(x.clone(), k as usize)
    } else {
        assert!(!x.is_zero(), "negative power of zero");
        num_traits::pow::pow(x.clone(), (-k) as usize).recip()
    }
}

/// Parse a rational from an `integer` or `integer/integer` string.
///
/// Decimal notation is rejected on purpose: exact suites must not accept
/// silently rounded input.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = |m: &str| Error::InvalidParameters(format!("cannot parse {s:?} as a rational: {m}"));
    if s.contains('.') {
        return Err(bad("decimal notation is not exact; use p/q"));
    }
    match s.split_once('/') {
        None => {
            let n: BigInt = s.parse().map_err(|_| bad("not an integer"))?;
            Ok(Rat::from_integer(n))
        }
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad("bad numerator"))?;
            let q: BigInt = q.trim().parse().map_err(|_| bad("bad denominator"))?;
            if q.is_zero() {
                return Err(bad("zero denominator"));
            }
            Ok(Rat::new(p, q))
        }
    }
}

/// Exact square root, when the argument is a square of a rational.
pub fn sqrt_exact(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(Rat::zero());
    }
    let ns = x.numer().sqrt();
    let ds = x.denom().sqrt();
    if &(&ns * &ns) == x.numer() && &(&ds * &ds) == x.denom() {
        Some(Rat::new(ns, ds))
    } else {
        None
    }
}

/// Lossy conversion to `f64` for the float backends and report output.
pub fn to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // fall back to a quotient of leading digits when the big integers
        // individually overflow f64
        let n = x.numer();
        let d = x.denom();
        let shift = (n.bits().max(d.bits()) as i64 - 900).max(0) as usize;
        let nf = (n >> shift).to_f64().unwrap_or(f64::NAN);
        let df = (d >> shift).to_f64().unwrap_or(f64::NAN);
        nf / df
    })
}

/// Render as `p/q` (or `p` when the denominator is 1).
pub fn rat_string(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_form_invariants() {
        let x = rat(6, -4);
        assert_eq!(x, rat(-3, 2));
        assert!(x.denom() > &BigInt::zero());
        let y = rat(1, 3) + rat(1, 6);
        assert_eq!(y, rat(1, 2));
    }

    #[test]
    fn integer_powers() {
        assert_eq!(pow_i(&rat(2, 3), 2), rat(4, 9));
        assert_eq!(pow_i(&rat(2, 3), -2), rat(9, 4));
        assert_eq!(pow_i(&rat(5, 7), 0), rat_i(1));
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_rat("1/3").unwrap(), rat(1, 3));
        assert_eq!(parse_rat("-1/4").unwrap(), rat(-1, 4));
        assert_eq!(parse_rat(" 7 ").unwrap(), rat_i(7));
        assert!(parse_rat("0.5").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn exact_sqrt() {
        assert_eq!(sqrt_exact(&rat(1, 4)), Some(rat(1, 2)));
        assert_eq!(sqrt_exact(&rat(4, 9)), Some(rat(2, 3)));
        assert_eq!(sqrt_exact(&rat(1, 2)), None);
        assert_eq!(sqrt_exact(&rat(-1, 4)), None);
        assert_eq!(sqrt_exact(&Rat::zero()), Some(Rat::zero()));
    }
}
