//! Maximal splice diagrams of plumbing trees.
//!
//! The weight at the end of edge `e` at vertex `v` is `det(-A)` of the
//! component cut off from `v` by `e`. All ends are filled in, including the
//! ends at leaves and at valence-2 vertices.
//!
//! For a tree, `(-A)^{-1}` has the closed form used in [`inverse_entry`]:
//! the `(i, j)` entry is the product of the weights hanging off the path
//! from `i` to `j` (adjacent to it but not on it), divided by `det(-A)`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::exact::Rational;
use crate::plumbing::{rooted_order, EdgeId, PlumbingGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpliceDiagram<'g> {
    graph: &'g PlumbingGraph,
    /// `ends[k] = [weight at edges[k].0, weight at edges[k].1]`
    ends: Vec<[BigInt; 2]>,
    determinant: BigInt,
}

fn end_index(g: &PlumbingGraph, v: VertexId, e: EdgeId) -> usize {
    let (a, b) = g.edge(e);
    debug_assert!(a == v || b == v, "vertex {v:?} is not on edge {e:?}");
    usize::from(a != v)
}

/// Fills in every edge-end weight by rerooting dynamic programming: one
/// pass from the leaves towards vertex 0 for the ends facing the root,
/// then one pass back out for the ends facing away from it.
pub fn splice_weights(g: &PlumbingGraph) -> SpliceDiagram<'_> {
    let mut ends: Vec<[Option<BigInt>; 2]> = vec![[None, None]; g.edges().len()];
    let (order, parent) = rooted_order(g, VertexId(0));

    // cut(v -> u): det(-A) of the component containing u once edge vu is cut.
    // Stored at the v end of the edge.
    let cut = |ends: &Vec<[Option<BigInt>; 2]>, v: VertexId, e: EdgeId| -> BigInt {
        ends[e.0][end_index(g, v, e)]
            .clone()
            .expect("cut weight computed out of order")
    };
    let component = |ends: &Vec<[Option<BigInt>; 2]>, u: VertexId, skip: Option<EdgeId>| -> BigInt {
        // det(-A) of the subtree through u avoiding `skip`:
        // (-w_u) * prod N_y - sum_y P_y * prod_{y' != y} N_y'
        let branches: Vec<(BigInt, BigInt)> = g
            .neighbors(u)
            .iter()
            .filter(|&&(_, e)| Some(e) != skip)
            .map(|&(y, e)| {
                let n = cut(ends, u, e);
                let p = g
                    .neighbors(y)
                    .iter()
                    .filter(|&&(_, f)| f != e)
                    .map(|&(_, f)| cut(ends, y, f))
                    .product::<BigInt>();
                (n, p)
            })
            .collect();
        let all: BigInt = branches.iter().map(|(n, _)| n.clone()).product();
        let mut det = -&g.vertex(u).weight * &all;
        for (i, (_, p)) in branches.iter().enumerate() {
            let others: BigInt = branches
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, (n, _))| n.clone())
                .product();
            det -= p * others;
        }
        det
    };

    for &child in order.iter().rev() {
        if let Some(par) = parent[child.0] {
            let e = edge_between(g, par, child);
            let value = component(&ends, child, Some(e));
            ends[e.0][end_index(g, par, e)] = Some(value);
        }
    }
    for &v in &order {
        if let Some(par) = parent[v.0] {
            let e = edge_between(g, par, v);
            let value = component(&ends, par, Some(e));
            ends[e.0][end_index(g, v, e)] = Some(value);
        }
    }
    let determinant = component(&ends, VertexId(0), None);
    SpliceDiagram {
        graph: g,
        ends: ends
            .into_iter()
            .map(|[a, b]| [a.expect("every end is reached"), b.expect("every end is reached")])
            .collect(),
        determinant,
    }
}

fn edge_between(g: &PlumbingGraph, u: VertexId, v: VertexId) -> EdgeId {
    g.neighbors(u)
        .iter()
        .find(|&&(w, _)| w == v)
        .map(|&(_, e)| e)
        .expect("vertices are adjacent")
}

impl<'g> SpliceDiagram<'g> {
    pub fn graph(&self) -> &'g PlumbingGraph {
        self.graph
    }

    /// Weight at the end of `e` sitting at `v`.
    pub fn weight(&self, v: VertexId, e: EdgeId) -> &BigInt {
        &self.ends[e.0][end_index(self.graph, v, e)]
    }

    /// `[weight at first endpoint, weight at second endpoint]` of each edge.
    pub fn edge_ends(&self) -> &[[BigInt; 2]] {
        &self.ends
    }

    /// Weights around `v`, in the order of [`PlumbingGraph::neighbors`].
    pub fn weights_at(&self, v: VertexId) -> Vec<BigInt> {
        self.graph
            .neighbors(v)
            .iter()
            .map(|&(_, e)| self.weight(v, e).clone())
            .collect()
    }

    /// `det(-A)` of the whole graph, assembled from the weights at vertex 0.
    pub fn determinant(&self) -> &BigInt {
        &self.determinant
    }

    fn product_at_except(&self, v: VertexId, skip: &[EdgeId]) -> BigInt {
        self.graph
            .neighbors(v)
            .iter()
            .filter(|(_, e)| !skip.contains(e))
            .map(|&(_, e)| self.weight(v, e).clone())
            .product()
    }

    pub fn all_weights_positive(&self) -> bool {
        self.ends.iter().flatten().all(Signed::is_positive)
    }
}

/// `det(e) = w(v,e) w(v',e) - (weights at v off e) * (weights at v' off e)`
/// for every edge, indexed like [`PlumbingGraph::edges`].
pub fn edge_determinants(d: &SpliceDiagram<'_>) -> Vec<BigInt> {
    let g = d.graph;
    g.edges()
        .iter()
        .enumerate()
        .map(|(k, &(u, v))| {
            let e = EdgeId(k);
            let [wu, wv] = &d.ends[k];
            wu * wv - d.product_at_except(u, &[e]) * d.product_at_except(v, &[e])
        })
        .collect()
}

/// Entry `(i, j)` of `(-A)^{-1}` from the path-product formula.
pub fn inverse_entry(d: &SpliceDiagram<'_>, i: VertexId, j: VertexId) -> Rational {
    let g = d.graph;
    if i == j {
        return Rational::new(d.product_at_except(i, &[]), d.determinant.clone());
    }
    let (_, parent) = rooted_order(g, j);
    // walk from i up to the root j, collecting off-path weights
    let mut numer = BigInt::one();
    let mut incoming: Option<EdgeId> = None;
    let mut v = i;
    while let Some(next) = parent[v.0] {
        let e = edge_between(g, v, next);
        let skip: Vec<EdgeId> = incoming.into_iter().chain([e]).collect();
        numer *= d.product_at_except(v, &skip);
        incoming = Some(e);
        v = next;
    }
    numer *= d.product_at_except(j, &incoming.into_iter().collect::<Vec<_>>());
    Rational::new(numer, d.determinant.clone())
}

/// Row `i` of `(-A)^{-1}` by the path-product formula, extending paths
/// outwards from `i` so the whole row costs one traversal.
pub fn inverse_row(d: &SpliceDiagram<'_>, i: VertexId) -> Vec<Rational> {
    let g = d.graph;
    let (order, parent) = rooted_order(g, i);
    // interior[x]: product of off-path weights at the path vertices strictly
    // before x; in_edge[x]: edge through which the path enters x
    let mut interior: Vec<BigInt> = vec![BigInt::one(); g.len()];
    let mut in_edge: Vec<Option<EdgeId>> = vec![None; g.len()];
    let mut row = vec![Rational::new(BigInt::one(), BigInt::one()); g.len()];
    for &x in &order {
        if let Some(u) = parent[x.0] {
            let e = edge_between(g, u, x);
            let skip: Vec<EdgeId> = in_edge[u.0].into_iter().chain([e]).collect();
            interior[x.0] = &interior[u.0] * d.product_at_except(u, &skip);
            in_edge[x.0] = Some(e);
        }
        let tail = d.product_at_except(x, &in_edge[x.0].into_iter().collect::<Vec<_>>());
        row[x.0] = Rational::new(&interior[x.0] * tail, d.determinant.clone());
    }
    row
}

/// All of `(-A)^{-1}` by the path-product formula.
pub fn path_product_matrix(d: &SpliceDiagram<'_>) -> Vec<Vec<Rational>> {
    d.graph.ids().map(|i| inverse_row(d, i)).collect()
}
