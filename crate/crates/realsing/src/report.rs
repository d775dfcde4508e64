//! Plain-text rendering of an [`Analysis`].

use std::fmt::Write;

use realsing_core::{Analysis, CanonicalReport, Rational};

use crate::record::convention_name;

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn canonical_lines(out: &mut String, c: &CanonicalReport) {
    let _ = writeln!(out, "canonical class ({} chi):", convention_name(c.convention));
    let _ = writeln!(out, "  d = {}", join(&c.d));
    let _ = writeln!(out, "  K = {}", join(&c.k));
    let _ = writeln!(out, "  K^2 = {}", c.k_squared);
    let _ = writeln!(out, "  K integral: {}", yes_no(c.integral));
}

pub fn text_report(run: &Analysis) -> String {
    let fp = &run.params;
    let sd = &run.seifert;
    let g = &run.graph;
    let mut out = String::new();
    let _ = writeln!(out, "F = conj(xy)(x^{} + y^{}) + z^{}", fp.p, fp.q, fp.r);
    let _ = writeln!(
        out,
        "parameters: p={} q={} r={} delta={} a={} b={}",
        fp.p, fp.q, fp.r, fp.delta, fp.a, fp.b
    );
    let pairs = join(sd.pairs.iter().map(|s| format!("({},{})", s.alpha, s.beta)));
    let _ = writeln!(out, "seifert: genus={} e0={} pairs={}", sd.genus, sd.e0, pairs);

    let node = &g.vertices()[0];
    let _ = writeln!(out, "plumbing: node {} (genus {})", node.weight, node.genus);
    for arm in 1..=g.arm_count() {
        let weights = join(g.arm(arm).iter().map(|&v| &g.vertex(v).weight));
        let _ = writeln!(out, "  arm {arm}: {weights}");
    }
    let alphas: Rational = sd
        .pairs
        .iter()
        .map(|s| Rational::from_integer(s.alpha.clone()))
        .product();
    let _ = writeln!(
        out,
        "det={} (det/prod(alpha) = {})",
        run.determinant,
        Rational::from_integer(run.determinant.clone()) / alphas
    );

    let _ = writeln!(out, "splice edges:");
    for ((&(u, v), [wu, wv]), det) in g.edges().iter().zip(&run.splice_ends).zip(&run.edge_determinants) {
        let _ = writeln!(out, "  {} -- {}: {wu} / {wv} (edge det {det})", u.0, v.0);
    }

    canonical_lines(&mut out, &run.canonical);
    if run.canonical.convention != run.canonical_paper.convention {
        canonical_lines(&mut out, &run.canonical_paper);
    }
    let vd = &run.verdict;
    let _ = writeln!(
        out,
        "prediction ({}): K integral: {}; agrees: {}",
        vd.subcase.tag(),
        yes_no(vd.predicted_integral),
        yes_no(vd.agree)
    );

    let cg = &run.congruence;
    let _ = writeln!(out, "chi(resolution)={} chi(fibre)={}", cg.chi_resolution, cg.chi_fibre);
    match cg.value {
        Some(v) => {
            let state = if cg.obstructed { "obstructed" } else { "not obstructed" };
            let _ = writeln!(out, "congruence value: {v} ({state})");
        }
        None => {
            let _ = writeln!(out, "congruence: not applicable (needs a=2 and integral K)");
        }
    }
    out
}
