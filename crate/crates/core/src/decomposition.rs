//! Gallai–Edmonds and Dulmage–Mendelsohn decompositions.

use alloc::vec;
use alloc::vec::Vec;

use crate::blossom::{self, Label, NONE};
use crate::digraph::Condensation;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::Vertex;

/// The Gallai–Edmonds partition `(D(G), A(G), C(G))`.
///
/// `D(G)` holds the vertices missed by some maximum matching, `A(G)` is its
/// neighborhood and `C(G)` the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GallaiEdmonds {
    pub d_set: VertexSet,
    pub a_set: VertexSet,
    pub c_set: VertexSet,
}

impl GallaiEdmonds {
    pub(crate) fn from_labels(labels: &[Label], skip: &[Vertex]) -> GallaiEdmonds {
        let n = labels.len();
        let mut d_set = VertexSet::new(n);
        let mut a_set = VertexSet::new(n);
        let mut c_set = VertexSet::new(n);
        for (v, &l) in labels.iter().enumerate() {
            if skip.contains(&v) {
                continue;
            }
            match l {
                Label::Even => d_set.insert(v),
                Label::Odd => a_set.insert(v),
                Label::Free => c_set.insert(v),
            };
        }
        GallaiEdmonds { d_set, a_set, c_set }
    }
}

/// Gallai–Edmonds decomposition from one alternating forest grown from all
/// exposed vertices of a maximum matching.
pub fn gallai_edmonds(g: &Graph) -> GallaiEdmonds {
    let mate = blossom::maximum_mate(g, &[]);
    GallaiEdmonds::from_labels(&blossom::gallai_edmonds_labels(g, mate, &[]), &[])
}

/// `A(G - u)` computed from a perfect matching of `G` (given as a mate array):
/// dropping `u`'s matched edge leaves a maximum matching of `G - u`.
pub(crate) fn barrier_set_after_deleting(g: &Graph, perfect: &[Vertex], u: Vertex) -> VertexSet {
    let mut mate = perfect.to_vec();
    let partner = mate[u];
    mate[u] = NONE;
    mate[partner] = NONE;
    let labels = blossom::gallai_edmonds_labels(g, mate, &[u]);
    let mut a = VertexSet::new(g.n());
    for (v, &l) in labels.iter().enumerate() {
        if l == Label::Odd {
            a.insert(v);
        }
    }
    a
}

/// Dulmage–Mendelsohn decomposition of a bipartite factorizable graph with
/// respect to one color class.
///
/// Components are the factor-components. In the order `⪯_A`, an edge joining
/// `B ∩ G_j` to `A ∩ G_i` yields `G_j ⪯_A G_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DmDecomposition {
    side_a: VertexSet,
    order: Condensation,
}

impl DmDecomposition {
    pub fn side_a(&self) -> &VertexSet {
        &self.side_a
    }

    pub fn components(&self) -> &[VertexSet] {
        self.order.members()
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn component_of(&self, v: Vertex) -> usize {
        self.order.component_of(v)
    }

    /// `G_i ⪯_A G_j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.order.leq(i, j)
    }

    pub fn order(&self) -> &Condensation {
        &self.order
    }
}

/// `G_i ⪯_A G_j` on a decomposition.
pub fn dm_order_leq(d: &DmDecomposition, i: usize, j: usize) -> bool {
    d.leq(i, j)
}

/// Dulmage–Mendelsohn decomposition with respect to `side_a`.
///
/// Matched edges point both ways and the other edges `B → A`; the strongly
/// connected components of that digraph are the DM-components and
/// reachability between them is `⪯_A`.
pub fn dm_decompose(g: &Graph, side_a: &VertexSet) -> Result<DmDecomposition> {
    g.check_set(side_a)?;
    if g.bipartition().is_none() {
        return Err(Error::NotBipartite);
    }
    if g.edges().any(|(u, v)| side_a.contains(u) == side_a.contains(v)) {
        return Err(Error::NotColorClass);
    }
    let mate = blossom::maximum_mate(g, &[]);
    if mate.contains(&NONE) {
        return Err(Error::NotFactorizable);
    }
    Ok(dm_with_perfect_matching(g, side_a, &mate))
}

/// DM decomposition given a perfect matching; preconditions are the caller's.
pub(crate) fn dm_with_perfect_matching(g: &Graph, side_a: &VertexSet, mate: &[Vertex]) -> DmDecomposition {
    let n = g.n();
    let mut succ = vec![Vec::new(); n];
    for v in 0..n {
        if side_a.contains(v) {
            succ[v].push(mate[v]);
        } else {
            succ[v].extend_from_slice(g.neighbors(v));
        }
    }
    DmDecomposition {
        side_a: side_a.clone(),
        order: Condensation::new(&succ),
    }
}
