//! Exact rational scalars and the integer combinatorics used by the
//! coefficient engines.
//!
//! Every number in this crate is a [`Rat`]; there is no floating point
//! anywhere. `BigRational` keeps values in lowest terms with a positive
//! denominator, which is exactly the canonical form we rely on for
//! equality tests.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar.
pub type Rat = BigRational;

/// `p/q` as an exact rational. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Integer `p` as a rational.
pub fn int(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

/// `k!` as a big integer.
pub fn fact(k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= BigInt::from(i);
    }
    acc
}

/// Binomial coefficient `C(n, k)`.
pub fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    fact(n) / (fact(k) * fact(n - k))
}

/// `2^k` for signed `k` (so `pow2(-3) = 1/8`).
pub fn pow2(k: i64) -> Rat {
    let two = int(2);
    let mut acc = Rat::one();
    for _ in 0..k.unsigned_abs() {
        acc *= &two;
    }
    if k < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Renders a rational the way the surface syntax reads it back:
/// `p` when the denominator is one, `p/q` otherwise.
pub fn rat_string(r: &Rat) -> String {
    r.to_string()
}

/// True when `r` is a negative number (used by pretty printers).
pub fn is_negative(r: &Rat) -> bool {
    r.is_negative()
}

/// Joins pre-rendered terms into `a + b - c` form, each term given as
/// (coefficient, body); a unit coefficient is suppressed unless the body
/// is empty.
pub fn join_signed_terms<'a>(terms: impl Iterator<Item = (&'a Rat, String)>) -> String {
    let mut out = String::new();
    for (c, body) in terms {
        let neg = c.is_negative();
        let mag = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if body.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&body);
        } else {
            out.push_str(&format!("{mag} * {body}"));
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn factorials_and_binomials() {
        assert_eq!(fact(0), BigInt::one());
        assert_eq!(fact(5), BigInt::from(120));
        assert_eq!(binom(4, 2), BigInt::from(6));
        assert_eq!(binom(3, 5), BigInt::zero());
    }

    #[test]
    fn pow2_handles_negative_exponents() {
        assert_eq!(pow2(3), int(8));
        assert_eq!(pow2(-2), rat(1, 4));
        assert_eq!(pow2(0), int(1));
    }

    #[test]
    fn display_is_p_over_q() {
        assert_eq!(rat_string(&rat(4, 6)), "2/3");
        assert_eq!(rat_string(&rat(-3, 1)), "-3");
        assert_eq!(rat_string(&rat(3, -6)), "-1/2");
    }

    proptest! {
        // Exactness: (p/q + r/s) - r/s recovers p/q bit for bit.
        #[test]
        fn add_sub_roundtrip(p in -1000i64..1000, q in 1i64..1000, r in -1000i64..1000, s in 1i64..1000) {
            let a = rat(p, q);
            let b = rat(r, s);
            prop_assert_eq!(&(&a + &b) - &b, a);
        }

        #[test]
        fn stored_in_lowest_terms(p in -1000i64..1000, q in 1i64..1000) {
            let a = rat(p, q);
            prop_assert!(a.denom() > &BigInt::zero());
            let g = num_integer::Integer::gcd(a.numer(), a.denom());
            if !a.numer().is_zero() {
                prop_assert_eq!(g, BigInt::one());
            }
        }
    }
}
