//! Graphviz output. Vertices are emitted in the graph's frozen order and
//! edges in insertion order, so the text is byte-reproducible.

use std::fmt::Write;

use num_traits::Zero;
use realsing_core::{PlumbingGraph, SpliceDiagram, VertexRole};

fn vertex_label(g: &PlumbingGraph, i: usize) -> String {
    let v = &g.vertices()[i];
    if v.genus.is_zero() {
        v.weight.to_string()
    } else {
        format!("{} [{}]", v.weight, v.genus)
    }
}

fn shape(role: VertexRole) -> &'static str {
    match role {
        VertexRole::Node => "box",
        _ => "circle",
    }
}

/// Plumbing graph with each vertex labelled by its weight, plus the genus in
/// brackets when it is positive.
pub fn plumbing_dot(g: &PlumbingGraph) -> String {
    let mut out = String::from("graph plumbing {\n");
    for (i, v) in g.vertices().iter().enumerate() {
        let _ = writeln!(
            out,
            "  v{i} [label=\"{}\", shape={}];",
            vertex_label(g, i),
            shape(v.role)
        );
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "  v{} -- v{};", u.0, v.0);
    }
    out.push_str("}\n");
    out
}

/// Splice diagram: the plumbing tree with the weight at each end of an edge
/// drawn next to that end.
pub fn splice_dot(d: &SpliceDiagram<'_>) -> String {
    let g = d.graph();
    let mut out = String::from("graph splice {\n");
    for (i, v) in g.vertices().iter().enumerate() {
        let _ = writeln!(
            out,
            "  v{i} [label=\"{}\", shape={}];",
            vertex_label(g, i),
            shape(v.role)
        );
    }
    for (&(u, v), [wu, wv]) in g.edges().iter().zip(d.edge_ends()) {
        let _ = writeln!(out, "  v{} -- v{} [taillabel=\"{wu}\", headlabel=\"{wv}\"];", u.0, v.0);
    }
    out.push_str("}\n");
    out
}
