//! Euler characteristics of Milnor fibres and the mod-12 smoothing
//! obstruction `chi(resolution) + K^2 - chi(fibre) ≡ 0 (mod 12)`.

use alloc::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::{gcd, int, Rational};
use crate::seifert::FamilyParams;

/// Euler characteristic `p + q - pq` of the Milnor fibre of `conj(xy)(x^p + y^q)`.
pub fn chi_fibre_curve(p: &BigInt, q: &BigInt) -> Result<BigInt> {
    for (name, value) in [("p", p), ("q", q)] {
        if *value < int(2) {
            return Err(Error::ExponentTooSmall {
                name,
                value: value.clone(),
            });
        }
    }
    if gcd(p, q)? != int(1) {
        return Err(Error::NotCoprime);
    }
    Ok(p + q - p * q)
}

/// Euler characteristic of the Milnor fibre of the join with `z^r`:
/// `1 + (r - 1)(1 - chi(F_f))`.
pub fn chi_fibre(fp: &FamilyParams) -> BigInt {
    let curve = &fp.p + &fp.q - &fp.p * &fp.q;
    int(1) + (&fp.r - 1) * (int(1) - curve)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceReport {
    pub p: BigInt,
    pub q: BigInt,
    pub r: BigInt,
    pub chi_resolution: BigInt,
    pub k_squared: Rational,
    pub chi_fibre: BigInt,
    /// Residue in `[0, 12)`; `None` when the congruence does not apply.
    pub value: Option<u8>,
    pub obstructed: bool,
    pub applicable: bool,
}

/// Evaluates the congruence. It only applies when `a = 2` and `K` is
/// integral; otherwise the report carries `applicable = false` and no value.
pub fn congruence(
    fp: &FamilyParams,
    chi_resolution: &BigInt,
    k_squared: &Rational,
    k_integral: bool,
    chi_fibre: &BigInt,
) -> CongruenceReport {
    let applicable = fp.a == int(2) && k_integral && k_squared.is_integer();
    let value = applicable.then(|| residue12(&(chi_resolution + k_squared.to_integer() - chi_fibre)));
    CongruenceReport {
        p: fp.p.clone(),
        q: fp.q.clone(),
        r: fp.r.clone(),
        chi_resolution: chi_resolution.clone(),
        k_squared: k_squared.clone(),
        chi_fibre: chi_fibre.clone(),
        obstructed: value.is_some_and(|v| v != 0),
        value,
        applicable,
    }
}

fn residue12(n: &BigInt) -> u8 {
    n.mod_floor(&int(12)).to_u8().expect("residue below 12")
}

/// `11 - 2p - 2q - delta(2 delta + 1) mod 12` with `delta = pq - p - q`:
/// the congruence value for `a = 2`, `b = 1` (that is, `r = 2(pq - p - q)`).
pub fn a2_b1_closed_form(p: &BigInt, q: &BigInt) -> u8 {
    let delta = p * q - p - q;
    let two = int(2);
    residue12(&(int(11) - &two * p - &two * q - &delta * (&two * &delta + 1)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Census {
    AlwaysZero,
    NeverZero,
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueCell {
    pub samples: u64,
    pub zeros: u64,
    /// First coprime `(p, q)` seen in this class, with its value.
    pub witness: (u64, u64, u8),
}

impl ResidueCell {
    pub fn census(&self) -> Census {
        if self.zeros == self.samples {
            Census::AlwaysZero
        } else if self.zeros == 0 {
            Census::NeverZero
        } else {
            Census::Mixed
        }
    }
}

/// Residue pairs `(p mod 12, q mod 12)` mapped to their census over every
/// coprime `2 <= p <= max_p`, `2 <= q <= max_q`. Classes without a coprime
/// sample (both residues even, or sharing a factor 3) are absent.
pub fn residue_table(max_p: u64, max_q: u64) -> Result<BTreeMap<(u8, u8), ResidueCell>> {
    for (name, bound) in [("max_p", max_p), ("max_q", max_q)] {
        if bound < 14 {
            return Err(Error::ScanBoundTooSmall { name, value: bound });
        }
    }
    let mut table: BTreeMap<(u8, u8), ResidueCell> = BTreeMap::new();
    for p in 2..=max_p {
        for q in 2..=max_q {
            if p.gcd(&q) != 1 {
                continue;
            }
            let value = a2_b1_closed_form(&BigInt::from(p), &BigInt::from(q));
            let key = ((p % 12) as u8, (q % 12) as u8);
            let cell = table.entry(key).or_insert(ResidueCell {
                samples: 0,
                zeros: 0,
                witness: (p, q, value),
            });
            cell.samples += 1;
            cell.zeros += u64::from(value == 0);
        }
    }
    Ok(table)
}

/// Residue pairs for which the congruence vanishes identically.
pub const PROPOSITION_ZERO_SET: [(u8, u8); 8] = [(1, 4), (1, 10), (2, 5), (4, 1), (5, 2), (5, 8), (8, 5), (10, 1)];
