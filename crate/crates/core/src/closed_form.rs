//! Closed-form predictions for the star graph of the family, used to
//! cross-check the values computed from determinants and linear solves.
//!
//! Some of these only hold on part of the parameter range (for example the
//! leaf weights `a(p-1)`, `a(q-1)` need `b = 1` in general); callers decide
//! which ones are hard requirements.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::canonical::Subcase;
use crate::exact::{int, Rational};
use crate::seifert::FamilyParams;

/// Predicted weights at the leaf end of each arm:
/// `a(p-1), a(q-1), br + apq` for `a > 1`, and `p-1, q-1` for `a = 1`.
pub fn leaf_weights(fp: &FamilyParams) -> Vec<BigInt> {
    let (p, q, a) = (&fp.p, &fp.q, &fp.a);
    if a.is_one() {
        vec![p - 1, q - 1]
    } else {
        vec![a * (p - 1), a * (q - 1), &fp.b * &fp.r + a * p * q]
    }
}

/// Leaf-end weight of arm 3 when `a = 2`: `2 delta + 2pq`.
pub fn a2_leaf3_weight(fp: &FamilyParams) -> Option<BigInt> {
    (fp.a == int(2)).then(|| int(2) * &fp.delta + int(2) * &fp.p * &fp.q)
}

/// `d` at the node for `a > 1`: `((a-1)pq - p - q) / delta`.
pub fn d_node(fp: &FamilyParams) -> Option<Rational> {
    (fp.a > int(1)).then(|| {
        let (p, q) = (&fp.p, &fp.q);
        Rational::new((&fp.a - 1) * p * q - p - q, fp.delta.clone())
    })
}

/// Predicted `d` at the arm leaves, by subcase: `-p/delta, -q/delta` when
/// `a = 1`; `cp/a, cq/a` with `a = c delta + 2` when `a ≡ 2 (mod delta)`;
/// `0, 0, (b-1)/2` when `a = 2`. Nothing is predicted otherwise.
pub fn leaf_d(fp: &FamilyParams) -> Option<Vec<Rational>> {
    let (p, q, a, delta) = (&fp.p, &fp.q, &fp.a, &fp.delta);
    match Subcase::of(fp) {
        Subcase::AOne => Some(vec![Rational::new(-p, delta.clone()), Rational::new(-q, delta.clone())]),
        Subcase::CongruentTwo => {
            let c = (a - 2) / delta;
            Some(vec![Rational::new(&c * p, a.clone()), Rational::new(&c * q, a.clone())])
        }
        Subcase::ATwo => Some(vec![
            Rational::zero(),
            Rational::zero(),
            Rational::new(&fp.b - 1, int(2)),
        ]),
        Subcase::NotCongruentTwo => None,
    }
}

/// Order of `H_1` of the link: `a^2 delta`.
pub fn homology_order(fp: &FamilyParams) -> BigInt {
    &fp.a * &fp.a * &fp.delta
}

/// `|e0| = delta / (apq)`.
pub fn abs_euler_number(fp: &FamilyParams) -> Rational {
    Rational::new(fp.delta.clone(), &fp.a * &fp.p * &fp.q)
}
