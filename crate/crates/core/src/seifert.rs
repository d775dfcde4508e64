//! Seifert invariants of the link of `conj(xy)(x^p + y^q) + z^r`, and of the
//! complex germ `xy(x^p + y^q) + z^2` it is compared against.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exact::{gcd, int, modular_inverse_solve, Rational};

/// Exponents `(p, q, r)` together with `delta = gcd(r, pq - p - q)`,
/// `a = r / delta` and `b = (pq - p - q) / delta`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    pub p: BigInt,
    pub q: BigInt,
    pub r: BigInt,
    pub delta: BigInt,
    pub a: BigInt,
    pub b: BigInt,
}

impl FamilyParams {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>, r: impl Into<BigInt>) -> Result<Self> {
        family_params(&p.into(), &q.into(), &r.into())
    }

    /// `pq - p - q`, odd for every coprime pair.
    pub fn curve_defect(&self) -> BigInt {
        curve_defect(&self.p, &self.q)
    }
}

fn curve_defect(p: &BigInt, q: &BigInt) -> BigInt {
    p * q - p - q
}

fn check_exponent(name: &'static str, value: &BigInt) -> Result<()> {
    if *value < int(2) {
        return Err(Error::ExponentTooSmall {
            name,
            value: value.clone(),
        });
    }
    Ok(())
}

fn check_curve_exponents(p: &BigInt, q: &BigInt) -> Result<()> {
    check_exponent("p", p)?;
    check_exponent("q", q)?;
    if !gcd(p, q)?.is_one() {
        return Err(Error::NotCoprime);
    }
    Ok(())
}

pub fn family_params(p: &BigInt, q: &BigInt, r: &BigInt) -> Result<FamilyParams> {
    check_curve_exponents(p, q)?;
    check_exponent("r", r)?;
    let defect = curve_defect(p, q);
    let delta = gcd(r, &defect)?;
    Ok(FamilyParams {
        p: p.clone(),
        q: q.clone(),
        r: r.clone(),
        a: r / &delta,
        b: defect / &delta,
        delta,
    })
}

/// One exceptional orbit `(alpha, beta)` with `0 < beta < alpha`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeifertPair {
    pub alpha: BigInt,
    pub beta: BigInt,
}

impl SeifertPair {
    pub fn new(alpha: impl Into<BigInt>, beta: impl Into<BigInt>) -> Self {
        SeifertPair {
            alpha: alpha.into(),
            beta: beta.into(),
        }
    }
}

/// Unnormalized Seifert invariants `(g; e0; (alpha_1, beta_1), ...)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeifertData {
    pub genus: BigInt,
    pub e0: Rational,
    pub pairs: Vec<SeifertPair>,
}

fn solved_pair(b: &BigInt, target: i64, alpha: BigInt) -> Result<SeifertPair> {
    let beta = modular_inverse_solve(b, &int(target), &alpha)?;
    Ok(SeifertPair { alpha, beta })
}

/// Seifert invariants of the link of the real germ.
///
/// For `a > 1` the pairs are `(aq, b1), (ap, b2), (a, b3)` with
/// `b*b1 ≡ -1 (mod aq)`, `b*b2 ≡ -1 (mod ap)`, `b*b3 ≡ 1 (mod a)`. For
/// `a = 1` the third orbit is regular and only `(q, b1), (p, b2)` remain.
pub fn seifert_data(fp: &FamilyParams) -> Result<SeifertData> {
    let (a, b) = (&fp.a, &fp.b);
    let mut pairs = vec![solved_pair(b, -1, a * &fp.q)?, solved_pair(b, -1, a * &fp.p)?];
    if !a.is_one() {
        pairs.push(solved_pair(b, 1, a.clone())?);
    }
    if !fp.delta.is_odd() {
        return Err(Error::Internal(alloc::format!(
            "delta = {} is even for coprime p, q",
            fp.delta
        )));
    }
    Ok(SeifertData {
        genus: (&fp.delta - 1) / 2,
        e0: -Rational::new(fp.delta.clone(), a * &fp.p * &fp.q),
        pairs,
    })
}

/// Seifert invariants of the link of the complex germ `xy(x^p + y^q) + z^2`:
/// genus 0, `e0 = -1/(2pq)`, pairs `(2q, b1), (2p, b2), (2, 1)` with
/// `b'*bi ≡ 1` and `b' = pq + p + q`.
pub fn seifert_data_complex(p: &BigInt, q: &BigInt) -> Result<SeifertData> {
    check_curve_exponents(p, q)?;
    let b_prime = p * q + p + q;
    let two = int(2);
    let pairs = vec![
        solved_pair(&b_prime, 1, &two * q)?,
        solved_pair(&b_prime, 1, &two * p)?,
        solved_pair(&b_prime, 1, two.clone())?,
    ];
    Ok(SeifertData {
        genus: int(0),
        e0: -Rational::new(int(1), &two * p * q),
        pairs,
    })
}

impl SeifertData {
    /// Checks `0 < beta < alpha`, `gcd(alpha, beta) = 1`, `alpha >= 2`, `e0 < 0`.
    pub fn is_normalized(&self) -> bool {
        self.e0.is_negative()
            && !self.genus.is_negative()
            && self.pairs.iter().all(|pair| {
                pair.alpha >= int(2)
                    && pair.beta.is_positive()
                    && pair.beta < pair.alpha
                    && pair.alpha.gcd(&pair.beta).is_one()
            })
    }
}
