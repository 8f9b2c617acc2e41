//! Exact rational scalars and the factorial-type primitives built on them.
//!
//! Everything in this crate computes over [`Rat`]; there is no floating
//! point anywhere. Values print as `p/q` with the `/q` omitted when the
//! denominator is one.

use alloc::string::ToString;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rat = num_rational::BigRational;

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The fraction `n/d` as a rational. Panics on `d == 0`; intended for literals.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator in rational literal");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `"p/q"` or `"p"`. Zero denominators and malformed input are rejected.
pub fn parse_rat(text: &str) -> Result<Rat> {
    let t = text.trim();
    let (ns, ds) = match t.split_once('/') {
        Some((a, b)) => (a, b),
        None => (t, "1"),
    };
    let bad = || Error::BadRational(text.to_string());
    let num = BigInt::from_str(ns.trim()).map_err(|_| bad())?;
    let den = BigInt::from_str(ds.trim()).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(num, den))
}

/// Falling factorial `x(x-1)...(x-d+1)` for `d > 0`, and `1` for `d <= 0`.
pub fn falling_factorial(x: &Rat, d: i64) -> Rat {
    let mut acc = Rat::one();
    for j in 0..d.max(0) {
        acc *= x - rat_int(j);
    }
    acc
}

/// Rising factorial `x(x+1)...(x+d-1)`; the empty product for `d = 0`.
pub fn pochhammer(x: &Rat, d: i64) -> Rat {
    assert!(d >= 0, "pochhammer wants a nonnegative depth");
    let mut acc = Rat::one();
    for j in 0..d {
        acc *= x + rat_int(j);
    }
    acc
}

/// `k!` as a rational.
pub fn factorial(k: i64) -> Rat {
    assert!(k >= 0);
    let mut acc = Rat::one();
    for j in 2..=k {
        acc *= rat_int(j);
    }
    acc
}

/// Binomial coefficient with rational top: `[x (falling) k] / k!`; zero for `k < 0`.
pub fn binomial(x: &Rat, k: i64) -> Rat {
    if k < 0 {
        return Rat::zero();
    }
    falling_factorial(x, k) / factorial(k)
}

/// `(-1)^k`.
pub fn sign(k: i64) -> Rat {
    if k.rem_euclid(2) == 0 {
        Rat::one()
    } else {
        -Rat::one()
    }
}

/// Is `x` a (rational representation of an) integer?
pub fn in_z(x: &Rat) -> bool {
    x.is_integer()
}

/// Is `x` a negative integer?
pub fn in_z_neg(x: &Rat) -> bool {
    x.is_integer() && x.is_negative()
}

/// Is `x` a nonpositive integer?
pub fn in_z_nonpos(x: &Rat) -> bool {
    x.is_integer() && !x.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn falling_factorial_basics() {
        assert_eq!(falling_factorial(&rat_int(5), 2), rat_int(20));
        assert_eq!(falling_factorial(&rat(9, 4), 0), rat_int(1));
        assert_eq!(falling_factorial(&rat(7, 2), -3), rat_int(1));
    }

    #[test]
    fn pochhammer_basics() {
        assert_eq!(pochhammer(&rat_int(2), 3), rat_int(24));
        assert_eq!(pochhammer(&rat(-13, 3), 0), rat_int(1));
        assert_eq!(pochhammer(&rat(1, 2), 2), rat(3, 4));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(&rat_int(4), 2), rat_int(6));
        assert_eq!(binomial(&rat(1, 2), 2), rat(-1, 8));
        assert_eq!(binomial(&rat_int(3), -1), rat_int(0));
        assert_eq!(binomial(&rat_int(3), 0), rat_int(1));
    }

    #[test]
    fn parse_and_print_round_trip() {
        for text in ["3/4", "-3/4", "17", "0", "-22/7"] {
            let v = parse_rat(text).unwrap();
            assert_eq!(alloc::format!("{v}"), text);
        }
        assert_eq!(parse_rat("4/6").unwrap(), rat(2, 3));
        assert_eq!(parse_rat("1/-2").unwrap(), rat(-1, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("").is_err());
        assert!(parse_rat("0.5").is_err());
        assert!(parse_rat("a/b").is_err());
    }

    proptest! {
        #[test]
        fn falling_matches_shifted_pochhammer(n in -60i64..60, d in 1i64..8, den in 1i64..12) {
            let x = rat(n, den);
            let shifted = &x - rat_int(d - 1);
            prop_assert_eq!(falling_factorial(&x, d), pochhammer(&shifted, d));
        }
    }
}
