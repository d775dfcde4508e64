//! The full pipeline for one `(p, q, r)`, with owned results.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::canonical::{canonical_class, chi_vector, classify, CanonicalReport, Verdict};
use crate::error::Result;
use crate::milnor::{chi_fibre, congruence, CongruenceReport};
use crate::plumbing::{build_star_graph, chi_resolution, graph_determinant, ChiConvention, PlumbingGraph};
use crate::seifert::{seifert_data, FamilyParams, SeifertData};
use crate::splice::{edge_determinants, splice_weights};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Analysis {
    pub params: FamilyParams,
    pub seifert: SeifertData,
    pub graph: PlumbingGraph,
    pub determinant: BigInt,
    /// Splice weights per edge, `[at first endpoint, at second endpoint]`.
    pub splice_ends: Vec<[BigInt; 2]>,
    pub edge_determinants: Vec<BigInt>,
    /// Canonical class under the requested convention.
    pub canonical: CanonicalReport,
    /// Canonical class under the paper convention, which the verdict and
    /// the congruence always use.
    pub canonical_paper: CanonicalReport,
    pub verdict: Verdict,
    pub congruence: CongruenceReport,
}

pub fn analyze(params: FamilyParams, convention: ChiConvention) -> Result<Analysis> {
    let seifert = seifert_data(&params)?;
    let graph = build_star_graph(&seifert)?;
    let determinant = graph_determinant(&graph);
    let diagram = splice_weights(&graph);
    let canonical_paper = canonical_class(&graph, &diagram, &chi_vector(&graph, ChiConvention::Paper))?;
    let canonical = match convention {
        ChiConvention::Paper => canonical_paper.clone(),
        ChiConvention::Genus => canonical_class(&graph, &diagram, &chi_vector(&graph, convention))?,
    };
    let verdict = classify(&params, &canonical_paper);
    let congruence = congruence(
        &params,
        &chi_resolution(&graph, ChiConvention::Paper),
        &canonical_paper.k_squared,
        canonical_paper.integral,
        &chi_fibre(&params),
    );
    let splice_ends = diagram.edge_ends().to_vec();
    let edge_determinants = edge_determinants(&diagram);
    Ok(Analysis {
        params,
        seifert,
        determinant,
        splice_ends,
        edge_determinants,
        canonical,
        canonical_paper,
        verdict,
        congruence,
        graph,
    })
}
