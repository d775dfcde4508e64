//! Exact topological invariants of the real singularities
//! `F(x, y, z) = conj(xy)(x^p + y^q) + z^r`.
//!
//! Starting from `(p, q, r)` the crate derives the Seifert invariants of the
//! link, the star-shaped plumbing graph and its intersection form, the
//! maximal splice diagram, the canonical class (by two independent routes),
//! the numerically Gorenstein verdict, and the mod-12 smoothing congruence.
//! Everything is computed with arbitrary-precision integers and rationals.
//!
//! ```
//! use realsing_core::{analyze, ChiConvention, FamilyParams};
//!
//! let run = analyze(FamilyParams::new(3, 4, 10).unwrap(), ChiConvention::Paper).unwrap();
//! assert_eq!(run.determinant, 20.into());
//! assert!(run.canonical.integral);
//! assert_eq!(run.congruence.value, Some(2));
//! ```
#![no_std]

extern crate alloc;

pub mod analysis;
pub mod canonical;
pub mod closed_form;
pub mod error;
pub mod exact;
pub mod linalg;
pub mod milnor;
pub mod plumbing;
pub mod seifert;
pub mod splice;

pub use analysis::{analyze, Analysis};
pub use canonical::{
    canonical_class, chi_vector, classify, solve_d, splice_d, CanonicalReport, ChiVector, Classification, Method,
    Subcase, Verdict,
};
pub use error::{Error, Result};
pub use exact::{gcd, hj_eval, hj_expand, modular_inverse_solve, HjExpansion, Rational};
pub use linalg::IntMatrix;
pub use milnor::{chi_fibre, chi_fibre_curve, congruence, residue_table, Census, CongruenceReport, ResidueCell};
pub use plumbing::{
    build_star_graph, chi_resolution, graph_determinant, intersection_matrix, is_negative_definite, ChiConvention,
    EdgeId, PlumbingGraph, Vertex, VertexId, VertexRole,
};
pub use seifert::{family_params, seifert_data, seifert_data_complex, FamilyParams, SeifertData, SeifertPair};
pub use splice::{edge_determinants, inverse_entry, inverse_row, path_product_matrix, splice_weights, SpliceDiagram};

pub use num_bigint::BigInt;
