//! Canonical class of the resolution and the numerically Gorenstein test.
//!
//! With `D = -K - E = sum d_i E_i`, adjunction turns into the linear system
//! `A d = chi` where `chi_j = chi(E_j) - valence_j`, and `k_i = -d_i - 1`.
//! The system is solved twice: by exact elimination on `A`, and through the
//! splice-diagram expression of `(-A)^{-1}`, giving `d_i = -sum_j l_ij chi_j`.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, to_rational, Rational};
use crate::plumbing::{intersection_matrix, ChiConvention, PlumbingGraph, VertexId};
use crate::seifert::FamilyParams;
use crate::splice::{inverse_row, SpliceDiagram};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiVector {
    pub values: Vec<BigInt>,
    pub convention: ChiConvention,
}

pub fn chi_vector(g: &PlumbingGraph, convention: ChiConvention) -> ChiVector {
    let values = g
        .ids()
        .map(|v| {
            let curve = match convention {
                ChiConvention::Paper => int(2),
                ChiConvention::Genus => int(2) - int(2) * &g.vertex(v).genus,
            };
            curve - int(g.valence(v) as i64)
        })
        .collect();
    ChiVector { values, convention }
}

/// `d` from `A d = chi` by fraction-free elimination.
pub fn solve_d(g: &PlumbingGraph, chi: &ChiVector) -> Result<Vec<Rational>> {
    intersection_matrix(g).solve(&chi.values)
}

/// `d_i = -sum_j l_ij chi_j` with `l = (-A)^{-1}` read off the splice
/// diagram. Only vertices with `chi_j != 0` contribute, and `l` is
/// symmetric, so one path-product row per such vertex suffices.
pub fn splice_d(sd: &SpliceDiagram<'_>, chi: &ChiVector) -> Result<Vec<Rational>> {
    let g = sd.graph();
    if chi.values.len() != g.len() {
        return Err(Error::DimensionMismatch {
            expected: g.len(),
            got: chi.values.len(),
        });
    }
    let mut d = alloc::vec![Rational::zero(); g.len()];
    for (j, c) in chi.values.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let row = inverse_row(sd, VertexId(j));
        let c = to_rational(c);
        for (di, l) in d.iter_mut().zip(row) {
            *di -= l * &c;
        }
    }
    Ok(d)
}

/// `A x`, read straight off the tree.
pub fn apply_intersection_form(g: &PlumbingGraph, x: &[Rational]) -> Vec<Rational> {
    let mut out: Vec<Rational> = g
        .vertices()
        .iter()
        .zip(x)
        .map(|(v, xi)| to_rational(&v.weight) * xi)
        .collect();
    for &(u, v) in g.edges() {
        out[u.0] += &x[v.0];
        out[v.0] += &x[u.0];
    }
    out
}

/// `x^T A x`, read straight off the tree.
pub fn intersection_square(g: &PlumbingGraph, x: &[Rational]) -> Rational {
    let diagonal: Rational = g
        .vertices()
        .iter()
        .zip(x)
        .map(|(v, xi)| to_rational(&v.weight) * xi * xi)
        .sum();
    let edges: Rational = g.edges().iter().map(|&(u, v)| &x[u.0] * &x[v.0]).sum();
    diagonal + edges * Rational::from_integer(int(2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    NumericallyGorenstein,
    NotNumericallyGorenstein,
}

/// Which computation produced the report's `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Solve,
    Splice,
    BothAgree,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalReport {
    pub d: Vec<Rational>,
    pub k: Vec<Rational>,
    pub k_squared: Rational,
    pub integral: bool,
    pub classification: Classification,
    pub convention: ChiConvention,
    pub method: Method,
}

/// Runs both computations of `d`, insists they agree exactly, and derives
/// `k`, `K^2 = k^T A k` and the integrality verdict.
pub fn canonical_class(g: &PlumbingGraph, sd: &SpliceDiagram<'_>, chi: &ChiVector) -> Result<CanonicalReport> {
    let solved = solve_d(g, chi)?;
    let spliced = splice_d(sd, chi)?;
    if solved != spliced {
        let at = solved.iter().zip(&spliced).position(|(a, b)| a != b).unwrap_or(0);
        return Err(Error::Internal(format!(
            "d disagrees at vertex {at}: elimination {} vs splice {}",
            solved[at], spliced[at]
        )));
    }
    if apply_intersection_form(g, &solved) != chi.values.iter().map(to_rational).collect::<Vec<_>>() {
        return Err(Error::Internal("A d != chi".into()));
    }
    let k: Vec<Rational> = solved.iter().map(|d| -d - Rational::one()).collect();
    let k_squared = intersection_square(g, &k);
    let integral = k.iter().all(Rational::is_integer);
    Ok(CanonicalReport {
        d: solved,
        k,
        k_squared,
        integral,
        classification: if integral {
            Classification::NumericallyGorenstein
        } else {
            Classification::NotNumericallyGorenstein
        },
        convention: chi.convention,
        method: Method::BothAgree,
    })
}

/// Case split of the integrality theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Subcase {
    /// `a = 1`
    AOne,
    /// `a != 2` and `a ≢ 2 (mod delta)`
    NotCongruentTwo,
    /// `a != 2` and `a ≡ 2 (mod delta)`
    CongruentTwo,
    /// `a = 2`
    ATwo,
}

impl Subcase {
    pub fn of(fp: &FamilyParams) -> Subcase {
        if fp.a.is_one() {
            Subcase::AOne
        } else if fp.a == int(2) {
            Subcase::ATwo
        } else if (&fp.a - int(2)).is_multiple_of(&fp.delta) {
            Subcase::CongruentTwo
        } else {
            Subcase::NotCongruentTwo
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Subcase::AOne => "a=1",
            Subcase::NotCongruentTwo => "a!=2 mod delta",
            Subcase::CongruentTwo => "a=2 mod delta, a!=2",
            Subcase::ATwo => "a=2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Verdict {
    pub computed_integral: bool,
    pub predicted_integral: bool,
    pub agree: bool,
    pub subcase: Subcase,
}

/// Compares the computed integrality with the prediction "integral iff a = 2".
pub fn classify(fp: &FamilyParams, report: &CanonicalReport) -> Verdict {
    let predicted = fp.a == int(2);
    Verdict {
        computed_integral: report.integral,
        predicted_integral: predicted,
        agree: predicted == report.integral,
        subcase: Subcase::of(fp),
    }
}
