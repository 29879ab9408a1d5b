//! Exact rational scalars. `Rat` is the only coefficient type in the crate;
//! over the rationals, involution acts trivially on scalars.

use alloc::string::String;
use core::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

pub fn rat_frac(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn is_one(r: &Rat) -> bool {
    r.is_one()
}

pub fn is_minus_one(r: &Rat) -> bool {
    r.is_negative() && r.abs().is_one()
}

/// Canonical form: reduced, `p` when the denominator is one, else `p/q` with q > 0.
pub fn rat_to_string(r: &Rat) -> String {
    let mut s = String::new();
    if r.denom().is_one() {
        let _ = write!(s, "{}", r.numer());
    } else {
        let _ = write!(s, "{}/{}", r.numer(), r.denom());
    }
    s
}

/// Accepts `p` or `p/q` with optional sign; rejects q = 0.
pub fn rat_from_string(s: &str) -> Option<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rat::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_round_trip() {
        for (n, d, s) in [(1, 2, "1/2"), (-3, 2, "-3/2"), (4, 1, "4"), (0, 5, "0"), (2, -4, "-1/2")] {
            let r = rat_frac(n, d);
            assert_eq!(rat_to_string(&r), s);
            assert_eq!(rat_from_string(s).unwrap(), r);
        }
        assert_eq!(rat_from_string("6/4").unwrap(), rat_frac(3, 2));
        assert!(rat_from_string("1/0").is_none());
        assert!(rat_from_string("x").is_none());
    }
}
