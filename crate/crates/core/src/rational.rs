//! Shared exact-arithmetic helpers.
//!
//! `Rational` is `num_rational::BigRational`: always reduced, denominator
//! always positive, so equality and hashing are structural.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// Convenience integer constructor.
pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

/// Convenience rational constructor from an integer pair. Panics on d == 0.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(int(n), int(d))
}

/// Rational from a single integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from(int(n))
}

/// Exact integer square root: `Some(s)` iff `n == s²` with `s >= 0`.
pub fn sqrt_int_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    if &(&s * &s) == n {
        Some(s)
    } else {
        None
    }
}

/// Exact rational square root: `Some(s)` iff `r == s²` with `s >= 0`.
///
/// Since `r` is stored reduced, `r` is a perfect square exactly when its
/// numerator and denominator both are.
pub fn sqrt_exact(r: &Rational) -> Option<Rational> {
    let n = sqrt_int_exact(r.numer())?;
    let d = sqrt_int_exact(r.denom())?;
    Some(Rational::new(n, d))
}

/// Largest square divisor split: `n = f²·g` with `g` squarefree, `f, g >= 1`.
///
/// Trial division; intended for the modest parameter ranges of the
/// enumeration routines, not for cryptographic-size inputs.
pub fn square_free_split(n: &BigInt) -> (BigInt, BigInt) {
    assert!(n.is_positive(), "square_free_split requires n >= 1");
    let mut rest = n.clone();
    let mut f = BigInt::one();
    let mut g = BigInt::one();
    let mut p = int(2);
    while &(&p * &p) <= &rest {
        if rest.is_multiple_of(&p) {
            let mut exp = 0u32;
            while rest.is_multiple_of(&p) {
                rest /= &p;
                exp += 1;
            }
            for _ in 0..exp / 2 {
                f *= &p;
            }
            if exp % 2 == 1 {
                g *= &p;
            }
        }
        p += 1;
    }
    if !rest.is_one() {
        g *= rest; // leftover prime factor, multiplicity 1
    }
    (f, g)
}

/// All divisor pairs `(u, v)` of `n` with `u <= v`, ascending in `u`.
pub fn divisor_pairs(n: &BigInt) -> Vec<(BigInt, BigInt)> {
    assert!(n.is_positive(), "divisor_pairs requires n >= 1");
    let mut out = Vec::new();
    let mut u = BigInt::one();
    while &(&u * &u) <= n {
        if n.is_multiple_of(&u) {
            out.push((u.clone(), n / &u));
        }
        u += 1;
    }
    out
}

/// Parse "p/q" or "p" into a reduced rational. Rejects zero denominators.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    match s.split_once('/') {
        Some((num, den)) => {
            let n: BigInt = num
                .trim()
                .parse()
                .map_err(|_| format!("invalid numerator in {s:?}"))?;
            let d: BigInt = den
                .trim()
                .parse()
                .map_err(|_| format!("invalid denominator in {s:?}"))?;
            if d.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(Rational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| format!("invalid integer {s:?}"))?;
            Ok(Rational::from(n))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_exact_detects_perfect_squares() {
        assert_eq!(sqrt_exact(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(sqrt_exact(&rat(2, 1)), None);
        assert_eq!(sqrt_exact(&rat(1, 3)), None);
        assert_eq!(sqrt_exact(&rat(0, 1)), Some(rat(0, 1)));
        assert_eq!(sqrt_exact(&rat(-4, 1)), None);
    }

    #[test]
    fn square_free_split_examples() {
        // 18 = 3²·2, 2 = 1²·2, 8 = 2²·2, 1 = 1²·1
        assert_eq!(square_free_split(&int(18)), (int(3), int(2)));
        assert_eq!(square_free_split(&int(2)), (int(1), int(2)));
        assert_eq!(square_free_split(&int(8)), (int(2), int(2)));
        assert_eq!(square_free_split(&int(1)), (int(1), int(1)));
        assert_eq!(square_free_split(&int(360)), (int(6), int(10)));
    }

    #[test]
    fn divisor_pairs_of_18() {
        let pairs = divisor_pairs(&int(18));
        let expect: Vec<(BigInt, BigInt)> = vec![
            (int(1), int(18)),
            (int(2), int(9)),
            (int(3), int(6)),
        ];
        assert_eq!(pairs, expect);
    }

    #[test]
    fn divisor_pairs_of_perfect_square_includes_root_once() {
        let pairs = divisor_pairs(&int(36));
        assert!(pairs.contains(&(int(6), int(6))));
        assert_eq!(pairs.len(), 5);
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-5").unwrap(), rat(-5, 1));
        assert_eq!(parse_rational("6/-4").unwrap(), rat(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
