//! Plumbing trees, their intersection matrices and determinants.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{hj_expand, int, to_rational, Rational};
use crate::linalg::IntMatrix;
use crate::seifert::SeifertData;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

/// Where a vertex sits in a star-shaped graph. Arms and positions count
/// from 1; position 1 is adjacent to the node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexRole {
    Node,
    Arm { arm: usize, position: usize },
    Leaf { arm: usize, position: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub weight: BigInt,
    pub genus: BigInt,
    pub role: VertexRole,
}

impl Vertex {
    pub fn new(weight: impl Into<BigInt>, genus: impl Into<BigInt>, role: VertexRole) -> Self {
        Vertex {
            weight: weight.into(),
            genus: genus.into(),
            role,
        }
    }
}

/// Which Euler characteristic to use for an exceptional curve: `Paper`
/// treats every curve as a sphere, `Genus` uses `2 - 2g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ChiConvention {
    #[default]
    Paper,
    Genus,
}

/// A decorated tree. Vertex order is part of the contract: for star graphs
/// it is the node, then each arm from the node outwards, arms in pair order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlumbingGraph {
    vertices: Vec<Vertex>,
    edges: Vec<(VertexId, VertexId)>,
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
}

impl PlumbingGraph {
    pub fn new(vertices: Vec<Vertex>, edges: Vec<(VertexId, VertexId)>) -> Result<Self> {
        let n = vertices.len();
        if n == 0 {
            return Err(Error::NotATree("no vertices".into()));
        }
        if edges.len() + 1 != n {
            return Err(Error::NotATree(format!("{} vertices but {} edges", n, edges.len())));
        }
        let mut adjacency = vec![Vec::new(); n];
        for (k, &(u, v)) in edges.iter().enumerate() {
            if u.0 >= n || v.0 >= n {
                return Err(Error::NotATree(format!("edge {k} has an unknown endpoint")));
            }
            if u == v {
                return Err(Error::NotATree(format!("edge {k} is a loop")));
            }
            adjacency[u.0].push((v, EdgeId(k)));
            adjacency[v.0].push((u, EdgeId(k)));
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &(v, _) in &adjacency[u] {
                if !seen[v.0] {
                    seen[v.0] = true;
                    stack.push(v.0);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::NotATree("graph is disconnected".into()));
        }
        Ok(PlumbingGraph {
            vertices,
            edges,
            adjacency,
        })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, v: VertexId) -> &Vertex {
        &self.vertices[v.0]
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e.0]
    }

    /// Neighbours of `v` with the connecting edge, in edge insertion order.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[v.0]
    }

    pub fn valence(&self, v: VertexId) -> usize {
        self.adjacency[v.0].len()
    }

    pub fn ids(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertices.len()).map(VertexId)
    }

    /// Vertex ids of arm `arm` (1-based), ordered from the node outwards.
    pub fn arm(&self, arm: usize) -> Vec<VertexId> {
        self.ids()
            .filter(|&v| match self.vertex(v).role {
                VertexRole::Arm { arm: a, .. } | VertexRole::Leaf { arm: a, .. } => a == arm,
                VertexRole::Node => false,
            })
            .collect()
    }

    pub fn arm_count(&self) -> usize {
        self.vertices
            .iter()
            .filter(|v| matches!(v.role, VertexRole::Leaf { .. }))
            .count()
    }
}

/// Builds the star-shaped plumbing graph of a Seifert fibration.
///
/// The node gets weight `e0 + sum(beta_i/alpha_i) - s` and arm `i` is the
/// bamboo `-e_{i,1}, ..., -e_{i,s_i}` with
/// `alpha_i/(alpha_i - beta_i) = [e_{i,1}, ..., e_{i,s_i}]`.
pub fn build_star_graph(sd: &SeifertData) -> Result<PlumbingGraph> {
    let node_weight = sd.pairs.iter().fold(sd.e0.clone(), |acc, pair| {
        acc + Rational::new(pair.beta.clone(), pair.alpha.clone())
    }) - to_rational(&int(sd.pairs.len() as i64));
    if !node_weight.is_integer() {
        return Err(Error::Internal(format!("node weight {node_weight} is not an integer")));
    }
    let mut vertices = vec![Vertex::new(
        node_weight.to_integer(),
        sd.genus.clone(),
        VertexRole::Node,
    )];
    let mut edges = Vec::new();
    for (i, pair) in sd.pairs.iter().enumerate() {
        let arm = i + 1;
        let expansion = hj_expand(&pair.alpha, &(&pair.alpha - &pair.beta))?;
        let len = expansion.len();
        let mut prev = VertexId(0);
        for (j, e) in expansion.iter().enumerate() {
            let position = j + 1;
            let role = if position == len {
                VertexRole::Leaf { arm, position }
            } else {
                VertexRole::Arm { arm, position }
            };
            let id = VertexId(vertices.len());
            vertices.push(Vertex::new(-e, 0, role));
            edges.push((prev, id));
            prev = id;
        }
    }
    PlumbingGraph::new(vertices, edges)
}

/// Symmetric matrix with the weights on the diagonal and a 1 for each edge.
pub fn intersection_matrix(g: &PlumbingGraph) -> IntMatrix {
    let mut m = IntMatrix::zeros(g.len());
    for (i, v) in g.vertices.iter().enumerate() {
        m.set(i, i, v.weight.clone());
    }
    for &(u, v) in &g.edges {
        m.set(u.0, v.0, BigInt::one());
        m.set(v.0, u.0, BigInt::one());
    }
    m
}

/// `det(-A)` by peeling leaves towards vertex 0: each vertex contributes
/// `-w - sum(1/c)` over its already-peeled children `c`, and the
/// determinant is the product of the contributions. Falls back to Bareiss
/// elimination if a contribution vanishes.
pub fn graph_determinant(g: &PlumbingGraph) -> BigInt {
    let (order, parent) = rooted_order(g, VertexId(0));
    let mut contribution: Vec<Rational> = vec![Rational::zero(); g.len()];
    let mut det = Rational::one();
    for &v in order.iter().rev() {
        let mut c = to_rational(&-&g.vertex(v).weight);
        for &(u, _) in g.neighbors(v) {
            if parent[u.0] == Some(v) {
                c -= contribution[u.0].recip();
            }
        }
        if c.is_zero() {
            return intersection_matrix(g).negated().bareiss_determinant();
        }
        det *= &c;
        contribution[v.0] = c;
    }
    debug_assert!(det.is_integer());
    det.to_integer()
}

/// Breadth-first order from `root` and each vertex's parent.
pub(crate) fn rooted_order(g: &PlumbingGraph, root: VertexId) -> (Vec<VertexId>, Vec<Option<VertexId>>) {
    let mut parent = vec![None; g.len()];
    let mut order = vec![root];
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &(u, _) in g.neighbors(v) {
            if u != root && parent[u.0].is_none() {
                parent[u.0] = Some(v);
                order.push(u);
            }
        }
    }
    (order, parent)
}

/// True iff `m` is negative definite, i.e. every leading principal minor
/// of `-m` is positive.
pub fn is_negative_definite(m: &IntMatrix) -> bool {
    m.negated().is_positive_definite()
}

/// Euler characteristic of the plumbed 4-manifold: `sum chi(E_i) - #edges`.
pub fn chi_resolution(g: &PlumbingGraph, convention: ChiConvention) -> BigInt {
    let curves: BigInt = g
        .vertices
        .iter()
        .map(|v| match convention {
            ChiConvention::Paper => int(2),
            ChiConvention::Genus => int(2) - int(2) * &v.genus,
        })
        .sum();
    curves - int(g.edges.len() as i64)
}

/// Checks the weight bounds a star graph from valid data must satisfy.
pub fn has_star_weight_bounds(g: &PlumbingGraph) -> bool {
    g.vertices.iter().all(|v| match v.role {
        VertexRole::Node => v.weight <= int(-1) && !v.genus.is_negative(),
        _ => v.weight <= int(-2) && v.genus.is_zero(),
    })
}
