//! Serializable view of an [`Analysis`].
//!
//! Big integers travel as decimal strings and rationals as
//! `{"den": "..", "num": ".."}`. Keys come out sorted because documents are
//! routed through `serde_json::Value`, whose map is ordered.

use realsing_core::{
    Analysis, CanonicalReport, ChiConvention, Classification, CongruenceReport, Method, Rational, VertexRole,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fraction {
    pub num: String,
    pub den: String,
}

impl From<&Rational> for Fraction {
    fn from(x: &Rational) -> Self {
        Fraction {
            num: x.numer().to_string(),
            den: x.denom().to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsRecord {
    pub p: String,
    pub q: String,
    pub r: String,
    pub delta: String,
    pub a: String,
    pub b: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub alpha: String,
    pub beta: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertRecord {
    pub genus: String,
    pub e0: Fraction,
    pub pairs: Vec<PairRecord>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RoleRecord {
    Node,
    Arm { arm: usize, position: usize },
    Leaf { arm: usize, position: usize },
}

impl From<VertexRole> for RoleRecord {
    fn from(role: VertexRole) -> Self {
        match role {
            VertexRole::Node => RoleRecord::Node,
            VertexRole::Arm { arm, position } => RoleRecord::Arm { arm, position },
            VertexRole::Leaf { arm, position } => RoleRecord::Leaf { arm, position },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub id: usize,
    pub weight: String,
    pub genus: String,
    pub role: RoleRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlumbingRecord {
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpliceEdgeRecord {
    pub ends: [usize; 2],
    /// Weight at each end, in the order of `ends`.
    pub weights: [String; 2],
    pub edge_determinant: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalRecord {
    pub convention: String,
    pub d: Vec<Fraction>,
    pub k: Vec<Fraction>,
    pub k_squared: Fraction,
    pub integral: bool,
    pub classification: String,
    pub method: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub computed_integral: bool,
    pub predicted_integral: bool,
    pub agree: bool,
    pub subcase: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceRecord {
    pub applicable: bool,
    pub chi_resolution: String,
    pub chi_fibre: String,
    pub k_squared: Fraction,
    pub value: Option<u8>,
    pub obstructed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisRecord {
    pub params: ParamsRecord,
    pub seifert: SeifertRecord,
    pub plumbing: PlumbingRecord,
    pub determinant: String,
    pub splice: Vec<SpliceEdgeRecord>,
    pub canonical: CanonicalRecord,
    /// Present when `canonical` uses the genus convention.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub canonical_paper: Option<CanonicalRecord>,
    pub verdict: VerdictRecord,
    pub congruence: CongruenceRecord,
}

pub fn convention_name(c: ChiConvention) -> &'static str {
    match c {
        ChiConvention::Paper => "paper",
        ChiConvention::Genus => "genus",
    }
}

fn fractions(xs: &[Rational]) -> Vec<Fraction> {
    xs.iter().map(Fraction::from).collect()
}

impl From<&CanonicalReport> for CanonicalRecord {
    fn from(c: &CanonicalReport) -> Self {
        CanonicalRecord {
            convention: convention_name(c.convention).to_owned(),
            d: fractions(&c.d),
            k: fractions(&c.k),
            k_squared: (&c.k_squared).into(),
            integral: c.integral,
            classification: match c.classification {
                Classification::NumericallyGorenstein => "numerically_gorenstein",
                Classification::NotNumericallyGorenstein => "not_numerically_gorenstein",
            }
            .to_owned(),
            method: match c.method {
                Method::Solve => "solve",
                Method::Splice => "splice",
                Method::BothAgree => "both_agree",
            }
            .to_owned(),
        }
    }
}

impl From<&CongruenceReport> for CongruenceRecord {
    fn from(c: &CongruenceReport) -> Self {
        CongruenceRecord {
            applicable: c.applicable,
            chi_resolution: c.chi_resolution.to_string(),
            chi_fibre: c.chi_fibre.to_string(),
            k_squared: (&c.k_squared).into(),
            value: c.value,
            obstructed: c.obstructed,
        }
    }
}

impl From<&Analysis> for AnalysisRecord {
    fn from(run: &Analysis) -> Self {
        let fp = &run.params;
        let g = &run.graph;
        let vertices = g
            .ids()
            .map(|v| {
                let vx = g.vertex(v);
                VertexRecord {
                    id: v.0,
                    weight: vx.weight.to_string(),
                    genus: vx.genus.to_string(),
                    role: vx.role.into(),
                }
            })
            .collect();
        let edges: Vec<[usize; 2]> = g.edges().iter().map(|&(u, v)| [u.0, v.0]).collect();
        let splice = edges
            .iter()
            .zip(&run.splice_ends)
            .zip(&run.edge_determinants)
            .map(|((&ends, [w0, w1]), det)| SpliceEdgeRecord {
                ends,
                weights: [w0.to_string(), w1.to_string()],
                edge_determinant: det.to_string(),
            })
            .collect();
        AnalysisRecord {
            params: ParamsRecord {
                p: fp.p.to_string(),
                q: fp.q.to_string(),
                r: fp.r.to_string(),
                delta: fp.delta.to_string(),
                a: fp.a.to_string(),
                b: fp.b.to_string(),
            },
            seifert: SeifertRecord {
                genus: run.seifert.genus.to_string(),
                e0: (&run.seifert.e0).into(),
                pairs: run
                    .seifert
                    .pairs
                    .iter()
                    .map(|s| PairRecord {
                        alpha: s.alpha.to_string(),
                        beta: s.beta.to_string(),
                    })
                    .collect(),
            },
            plumbing: PlumbingRecord { vertices, edges },
            determinant: run.determinant.to_string(),
            splice,
            canonical: (&run.canonical).into(),
            canonical_paper: (run.canonical.convention != ChiConvention::Paper).then(|| (&run.canonical_paper).into()),
            verdict: VerdictRecord {
                computed_integral: run.verdict.computed_integral,
                predicted_integral: run.verdict.predicted_integral,
                agree: run.verdict.agree,
                subcase: run.verdict.subcase.tag().to_owned(),
            },
            congruence: (&run.congruence).into(),
        }
    }
}

impl AnalysisRecord {
    /// Pretty-printed JSON with sorted keys and a trailing newline.
    pub fn to_json(&self) -> serde_json::Result<String> {
        let value = serde_json::to_value(self)?;
        let mut out = serde_json::to_string_pretty(&value)?;
        out.push('\n');
        Ok(out)
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use realsing_core::{analyze, FamilyParams};

    fn record(p: i64, q: i64, r: i64, c: ChiConvention) -> AnalysisRecord {
        (&analyze(FamilyParams::new(p, q, r).unwrap(), c).unwrap()).into()
    }

    #[test]
    fn k_entries_are_string_fractions() {
        let json = record(2, 3, 3, ChiConvention::Paper).to_json().unwrap();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        let k = v["canonical"]["k"].as_array().unwrap();
        assert!(k.contains(&serde_json::json!({"num": "-5", "den": "3"})));
        assert_eq!(v["determinant"], "9");
    }

    #[test]
    fn round_trip_is_identity() {
        for c in [ChiConvention::Paper, ChiConvention::Genus] {
            let rec = record(3, 4, 10, c);
            let json = rec.to_json().unwrap();
            let back = AnalysisRecord::from_json(&json).unwrap();
            assert_eq!(back, rec);
            assert_eq!(back.to_json().unwrap(), json);
            let value: serde_json::Value = serde_json::from_str(&json).unwrap();
            assert_eq!(serde_json::to_string_pretty(&value).unwrap() + "\n", json);
        }
    }

    #[test]
    fn keys_are_sorted() {
        let json = record(3, 4, 10, ChiConvention::Paper).to_json().unwrap();
        let top: Vec<&str> = json
            .lines()
            .filter(|l| l.starts_with("  \""))
            .map(|l| l.trim().split('"').nth(1).unwrap())
            .collect();
        let mut sorted = top.clone();
        sorted.sort_unstable();
        assert_eq!(top, sorted);
        assert!(json.contains("\"subcase\": \"a=2\""));
    }

    #[test]
    fn genus_convention_keeps_paper_report() {
        let rec = record(3, 4, 10, ChiConvention::Genus);
        assert_eq!(rec.canonical.convention, "genus");
        assert_eq!(rec.canonical_paper.unwrap().convention, "paper");
        assert!(record(3, 4, 10, ChiConvention::Paper).canonical_paper.is_none());
    }
}
