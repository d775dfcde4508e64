//! Reference computations that share no code with the crate's fast paths.
#![allow(dead_code)]

use realsing_core::{BigInt, PlumbingGraph, Rational, Vertex, VertexId, VertexRole};

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(int(n), int(d))
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    match n {
        0 => int(1),
        1 => m[0][0].clone(),
        _ => {
            let mut total = int(0);
            for (j, a) in m[0].iter().enumerate() {
                if *a == int(0) {
                    continue;
                }
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = a * cofactor_det(&minor);
                if j % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            total
        }
    }
}

/// Solves `m x = rhs` by Cramer's rule over cofactor determinants.
pub fn cramer_solve(m: &[Vec<BigInt>], rhs: &[BigInt]) -> Vec<Rational> {
    let det = cofactor_det(m);
    (0..m.len())
        .map(|col| {
            let replaced: Vec<Vec<BigInt>> = m
                .iter()
                .zip(rhs)
                .map(|(row, b)| {
                    let mut row = row.clone();
                    row[col] = b.clone();
                    row
                })
                .collect();
            Rational::new(cofactor_det(&replaced), det.clone())
        })
        .collect()
}

/// Dense `A` built from the graph, independent of `intersection_matrix`.
pub fn dense_matrix(g: &PlumbingGraph) -> Vec<Vec<BigInt>> {
    let n = g.len();
    let mut m = vec![vec![int(0); n]; n];
    for (i, v) in g.vertices().iter().enumerate() {
        m[i][i] = v.weight.clone();
    }
    for &(u, v) in g.edges() {
        m[u.0][v.0] = int(1);
        m[v.0][u.0] = int(1);
    }
    m
}

pub fn negate(m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    m.iter().map(|row| row.iter().map(|x| -x).collect()).collect()
}

/// Vertices reachable from `start` without crossing the edge `{start, blocked}`.
pub fn component_avoiding(g: &PlumbingGraph, start: VertexId, blocked: VertexId) -> Vec<usize> {
    let mut seen = vec![false; g.len()];
    seen[start.0] = true;
    seen[blocked.0] = true;
    let mut stack = vec![start];
    let mut out = vec![start.0];
    while let Some(v) = stack.pop() {
        for &(u, _) in g.neighbors(v) {
            if !seen[u.0] {
                seen[u.0] = true;
                out.push(u.0);
                stack.push(u);
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn principal(m: &[Vec<BigInt>], idx: &[usize]) -> Vec<Vec<BigInt>> {
    idx.iter()
        .map(|&i| idx.iter().map(|&j| m[i][j].clone()).collect())
        .collect()
}

/// Tree from a parent list (`parents[i]` is the parent of vertex `i + 1`)
/// with weights `-(valence + 1 + extra)`, which keeps `-A` diagonally
/// dominant and hence positive definite.
pub fn dominant_tree(parents: &[usize], extra: &[u8]) -> PlumbingGraph {
    let n = parents.len() + 1;
    let mut valence = vec![0i64; n];
    let edges: Vec<(VertexId, VertexId)> = parents
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let p = p % (i + 1);
            valence[p] += 1;
            valence[i + 1] += 1;
            (VertexId(p), VertexId(i + 1))
        })
        .collect();
    let vertices = (0..n)
        .map(|i| {
            Vertex::new(
                -(valence[i] + 1 + i64::from(extra[i % extra.len()])),
                0,
                VertexRole::Node,
            )
        })
        .collect();
    PlumbingGraph::new(vertices, edges).unwrap()
}
