//! Exact integer and rational helpers, plus Hirzebruch–Jung continued
//! fractions `[e1, ..., es] = e1 - 1/(e2 - 1/(... - 1/es))`.
//!
//! Nothing in this crate touches floating point. Integers are [`BigInt`]
//! and rationals are [`BigRational`], which keeps itself in lowest terms
//! with a positive denominator after every operation.

use alloc::vec::Vec;
use core::ops::Deref;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn to_rational(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

/// Greatest common divisor of two nonnegative integers (signs are ignored).
pub fn gcd(a: &BigInt, b: &BigInt) -> Result<BigInt> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    Ok(a.gcd(b))
}

/// The unique `x` in `(0, modulus)` with `b * x ≡ target (mod modulus)`.
pub fn modular_inverse_solve(b: &BigInt, target: &BigInt, modulus: &BigInt) -> Result<BigInt> {
    if *modulus < int(2) {
        return Err(Error::ModulusTooSmall(modulus.clone()));
    }
    let ext = b.mod_floor(modulus).extended_gcd(modulus);
    if !ext.gcd.is_one() {
        return Err(Error::NotInvertible {
            value: b.clone(),
            modulus: modulus.clone(),
        });
    }
    let x = (ext.x * target).mod_floor(modulus);
    if x.is_zero() {
        return Err(Error::ZeroResidue(modulus.clone()));
    }
    Ok(x)
}

/// Entries of a Hirzebruch–Jung continued fraction, each at least 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HjExpansion(Vec<BigInt>);

impl HjExpansion {
    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.0
    }
}

impl Deref for HjExpansion {
    type Target = [BigInt];

    fn deref(&self) -> &[BigInt] {
        &self.0
    }
}

/// Expands `num/den` (coprime, `num > den >= 1`) by repeatedly taking the
/// ceiling and inverting the remainder.
pub fn hj_expand(num: &BigInt, den: &BigInt) -> Result<HjExpansion> {
    let bad = || Error::BadFraction {
        num: num.clone(),
        den: den.clone(),
    };
    if !den.is_positive() || num <= den || !num.gcd(den).is_one() {
        return Err(bad());
    }
    let (mut n, mut d) = (num.clone(), den.clone());
    let mut entries = Vec::new();
    while !d.is_zero() {
        let e = n.div_ceil(&d);
        let next = &e * &d - &n;
        entries.push(e);
        n = d;
        d = next;
    }
    Ok(HjExpansion(entries))
}

/// Exact value of `[e1, ..., es]`. Any integer list is accepted; lists with
/// entries below 2 may run into a zero tail.
pub fn hj_eval(entries: &[BigInt]) -> Result<Rational> {
    let (last, rest) = entries.split_last().ok_or(Error::EmptyExpansion)?;
    let mut value = to_rational(last);
    for e in rest.iter().rev() {
        if value.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        value = to_rational(e) - value.recip();
    }
    Ok(value)
}

/// Numerator of `[e1, ..., es]` computed without division, via the
/// three-term recurrence `N_k = e_k N_{k+1} - N_{k+2}` from the tail.
/// This equals the determinant of the negated bamboo matrix.
pub fn hj_numerator(entries: &[BigInt]) -> BigInt {
    let (mut next, mut after) = (BigInt::one(), BigInt::zero());
    for e in entries.iter().rev() {
        let cur = e * &next - &after;
        after = next;
        next = cur;
    }
    next
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&int(10), &int(4)).unwrap(), int(2));
        assert_eq!(gcd(&int(7), &int(1)).unwrap(), int(1));
        assert_eq!(gcd(&int(10), &int(5)).unwrap(), int(5));
        assert_eq!(gcd(&int(0), &int(9)).unwrap(), int(9));
        assert_eq!(gcd(&int(0), &int(0)), Err(Error::GcdOfZeros));
    }

    #[test]
    fn modular_solve_examples() {
        assert_eq!(modular_inverse_solve(&int(1), &int(-1), &int(9)).unwrap(), int(8));
        assert_eq!(modular_inverse_solve(&int(7), &int(-1), &int(10)).unwrap(), int(7));
        assert_eq!(modular_inverse_solve(&int(7), &int(1), &int(2)).unwrap(), int(1));
    }

    #[test]
    fn modular_solve_errors() {
        assert!(matches!(
            modular_inverse_solve(&int(4), &int(-1), &int(10)),
            Err(Error::NotInvertible { .. })
        ));
        assert!(matches!(
            modular_inverse_solve(&int(3), &int(1), &int(1)),
            Err(Error::ModulusTooSmall(_))
        ));
        assert!(matches!(
            modular_inverse_solve(&int(3), &int(10), &int(5)),
            Err(Error::ZeroResidue(_))
        ));
    }

    #[test]
    fn expand_examples() {
        assert_eq!(hj_expand(&int(2), &int(1)).unwrap().entries(), &ints(&[2])[..]);
        assert_eq!(hj_expand(&int(3), &int(2)).unwrap().entries(), &ints(&[2, 2])[..]);
        assert_eq!(hj_expand(&int(10), &int(3)).unwrap().entries(), &ints(&[4, 2, 2])[..]);
        assert_eq!(hj_expand(&int(12), &int(7)).unwrap().entries(), &ints(&[2, 4, 2])[..]);
    }

    #[test]
    fn expand_rejects_bad_input() {
        for (n, d) in [(4, 2), (3, 3), (2, 5), (5, 0), (5, -1)] {
            assert!(
                matches!(hj_expand(&int(n), &int(d)), Err(Error::BadFraction { .. })),
                "{n}/{d}"
            );
        }
    }

    #[test]
    fn eval_examples() {
        assert_eq!(hj_eval(&ints(&[6])).unwrap(), ratio(6, 1));
        assert_eq!(hj_eval(&ints(&[2, 2, 2, 2])).unwrap(), ratio(5, 4));
        assert_eq!(hj_eval(&ints(&[4, 2, 2])).unwrap(), ratio(10, 3));
        assert_eq!(hj_eval(&[]), Err(Error::EmptyExpansion));
        // 1 - 1/(1 - 1/1): tail 1 - 1 = 0
        assert_eq!(hj_eval(&ints(&[1, 1, 1])), Err(Error::ZeroDenominator));
    }

    #[test]
    fn numerator_matches_eval() {
        for entries in [vec![2], vec![4, 2, 2], vec![2, 4, 2], vec![3, 5, 2, 7]] {
            let e = ints(&entries);
            assert_eq!(hj_numerator(&e), hj_eval(&e).unwrap().numer().clone());
        }
    }
}
