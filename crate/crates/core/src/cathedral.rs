//! The cathedral structure of a factorizable graph: factor-components, the
//! partial order `⪯` on them, the generalized canonical partition, and the
//! assignment of strict upper bounds to canonical classes.
//!
//! [`algorithm1`] computes all of it in one sweep. Each round picks the
//! smallest vertex `u` not yet classified, forms the odd-maximal barrier
//! `X = A(G - u) ∪ {u}`, and DM-decomposes the bipartite graph `H_X(G)`.
//! Every DM-component contributes a canonical class `S = X ∩ V(D)` and arcs
//! from `S` to the non-barrier vertices of its expansion. The strongly
//! connected components of the resulting auxiliary digraph are the
//! factor-components and its reachability order is `⪯`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::barrier::HxGraph;
use crate::blossom::{self, NONE};
use crate::decomposition::{barrier_set_after_deleting, dm_with_perfect_matching};
use crate::digraph::Condensation;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::Vertex;

/// The generalized canonical partition, classes ordered by smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalPartition {
    classes: Vec<VertexSet>,
    class_of: Vec<usize>,
}

impl CanonicalPartition {
    /// Builds a partition from classes, sorting them by smallest vertex.
    /// Returns `None` unless the classes are nonempty and partition `0..n`.
    pub fn from_classes(n: usize, mut classes: Vec<VertexSet>) -> Option<CanonicalPartition> {
        if classes.iter().any(|c| c.is_empty() || c.universe() != n) {
            return None;
        }
        classes.sort_by_key(|c| c.first());
        let mut class_of = vec![usize::MAX; n];
        for (i, c) in classes.iter().enumerate() {
            for v in c {
                if class_of[v] != usize::MAX {
                    return None;
                }
                class_of[v] = i;
            }
        }
        if class_of.contains(&usize::MAX) {
            return None;
        }
        Some(CanonicalPartition { classes, class_of })
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn class_of(&self, v: Vertex) -> usize {
        self.class_of[v]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// The auxiliary digraph built by [`algorithm1`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxDigraph {
    succ: Vec<Vec<Vertex>>,
}

impl AuxDigraph {
    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.succ[v]
    }

    pub fn arc_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(x, ys)| ys.iter().map(move |&y| (x, y)))
    }

    pub fn has_arc(&self, x: Vertex, y: Vertex) -> bool {
        self.succ[x].binary_search(&y).is_ok()
    }
}

/// Output of [`algorithm1`].
///
/// Component ids are a topological order of `⪯` (minimal components first,
/// ties broken by smallest vertex); class ids follow the partition order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CathedralStructure {
    partition: CanonicalPartition,
    poset: Condensation,
    class_component: Vec<usize>,
    class_upset: Vec<Vec<usize>>,
    aux: AuxDigraph,
}

impl CathedralStructure {
    pub fn vertex_count(&self) -> usize {
        self.partition.class_of.len()
    }

    pub fn partition(&self) -> &CanonicalPartition {
        &self.partition
    }

    /// Factor-components as vertex sets.
    pub fn components(&self) -> &[VertexSet] {
        self.poset.members()
    }

    pub fn component_of(&self, v: Vertex) -> usize {
        self.poset.component_of(v)
    }

    pub fn poset(&self) -> &Condensation {
        &self.poset
    }

    /// `H_i ⪯ H_j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.poset.leq(i, j)
    }

    pub fn cover_edges(&self) -> Vec<(usize, usize)> {
        self.poset.cover_edges()
    }

    /// Component containing canonical class `class`.
    pub fn class_component(&self, class: usize) -> usize {
        self.class_component[class]
    }

    /// Classes contained in component `h`.
    pub fn classes_of_component(&self, h: usize) -> Vec<usize> {
        (0..self.partition.len())
            .filter(|&c| self.class_component[c] == h)
            .collect()
    }

    /// Strict upper bounds of the class's component assigned to the class.
    pub fn class_upset(&self, class: usize) -> &[usize] {
        &self.class_upset[class]
    }

    pub fn aux(&self) -> &AuxDigraph {
        &self.aux
    }

    /// Vertices of all upper bounds of `h`, `h` included.
    pub fn upstar_vertices(&self, h: usize) -> VertexSet {
        let mut out = VertexSet::new(self.vertex_count());
        for j in self.poset.upper(h) {
            out.union_with(&self.components()[j]);
        }
        out
    }

    /// The class itself together with the vertices of its assigned components.
    pub fn class_upstar_vertices(&self, class: usize) -> VertexSet {
        let mut out = self.partition.classes[class].clone();
        for &j in &self.class_upset[class] {
            out.union_with(&self.components()[j]);
        }
        out
    }

    pub fn is_elementary(&self) -> bool {
        self.components().len() == 1
    }

    #[doc(hidden)]
    pub fn toggle_order_for_testing(&mut self, i: usize, j: usize) {
        self.poset.toggle_order_for_testing(i, j);
    }
}

pub fn upstar_vertices(s: &CathedralStructure, h: usize) -> VertexSet {
    s.upstar_vertices(h)
}

pub fn class_upstar_vertices(s: &CathedralStructure, class: usize) -> VertexSet {
    s.class_upstar_vertices(class)
}

pub fn is_elementary(s: &CathedralStructure) -> bool {
    s.is_elementary()
}

/// Computes the canonical partition, the factor-components and their partial
/// order for a factorizable graph.
pub fn algorithm1(g: &Graph) -> Result<CathedralStructure> {
    let n = g.n();
    let mate = blossom::maximum_mate(g, &[]);
    if mate.contains(&NONE) {
        return Err(Error::NotFactorizable);
    }

    let mut unprocessed = vec![true; n];
    let mut flag = vec![false; n];
    let mut succ: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut classes = Vec::new();

    let mut u = 0;
    while u < n {
        if !unprocessed[u] {
            u += 1;
            continue;
        }
        let mut x = barrier_set_after_deleting(g, &mate, u);
        x.insert(u);
        let odd = g.odd_components(&x);
        if odd.q() != x.len() {
            return Err(Error::Inconsistency(format!(
                "A(G - {u}) + {u} is not a barrier: q = {}, |X| = {}",
                odd.q(),
                x.len()
            )));
        }
        let hx = HxGraph::from_odd_components(g, &x, odd.odd);
        let hx_mate = hx
            .project_matching(&mate)
            .ok_or_else(|| Error::Inconsistency(format!("perfect matching does not project onto H_X for u = {u}")))?;
        let dm = dm_with_perfect_matching(hx.graph(), hx.side_x(), &hx_mate);

        for comp in dm.components() {
            let class = hx.expand_barrier_part(comp);
            let expansion = hx.expand(comp);
            let first = class.first().expect("DM-component without barrier vertex");
            let seen = flag[first];
            if class.iter().any(|v| flag[v] != seen) {
                return Err(Error::Inconsistency(format!(
                    "class {:?} is partly processed",
                    class.to_vec()
                )));
            }
            if seen {
                continue;
            }
            let targets = expansion.difference(&x);
            for s in &class {
                succ[s].extend(targets.iter());
                unprocessed[s] = false;
                flag[s] = true;
            }
            classes.push(class);
        }
        if unprocessed[u] {
            return Err(Error::Inconsistency(format!("vertex {u} left unclassified")));
        }
    }

    let aux = AuxDigraph { succ };
    let poset = Condensation::new(&aux.succ);
    let partition = CanonicalPartition::from_classes(n, classes)
        .ok_or_else(|| Error::Inconsistency("classes do not partition the vertices".into()))?;

    let mut class_component = Vec::with_capacity(partition.len());
    for class in partition.classes() {
        let h = poset.component_of(class.first().unwrap());
        if class.iter().any(|v| poset.component_of(v) != h) {
            return Err(Error::Inconsistency(format!(
                "class {:?} spans several components",
                class.to_vec()
            )));
        }
        class_component.push(h);
    }

    let class_upset = assign_upper_bounds(g, &partition, &poset, &class_component)?;
    Ok(CathedralStructure {
        partition,
        poset,
        class_component,
        class_upset,
        aux,
    })
}

/// For each component `H`, splits the strict upper bounds of `H` among the
/// classes of `H`: a connected piece `K` of `G[strict upper vertices]` goes to
/// the unique class containing `Γ(K) ∩ V(H)`.
fn assign_upper_bounds(
    g: &Graph,
    partition: &CanonicalPartition,
    poset: &Condensation,
    class_component: &[usize],
) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    let mut class_upset = vec![Vec::new(); partition.len()];
    for h in 0..poset.len() {
        let mut strict_upper = VertexSet::new(n);
        for j in poset.upper(h) {
            if j != h {
                strict_upper.union_with(&poset.members()[j]);
            }
        }
        if strict_upper.is_empty() {
            continue;
        }
        let hv = &poset.members()[h];
        for piece in g.components_avoiding(&strict_upper.complement()) {
            let mut owner = None;
            for &v in &piece {
                for &w in g.neighbors(v) {
                    if !hv.contains(w) {
                        continue;
                    }
                    let c = partition.class_of(w);
                    match owner {
                        None => owner = Some(c),
                        Some(o) if o != c => {
                            return Err(Error::Inconsistency(format!(
                                "piece {piece:?} above component {h} touches classes {o} and {c}"
                            )));
                        }
                        _ => {}
                    }
                }
            }
            let owner = owner.ok_or_else(|| {
                Error::Inconsistency(format!("piece {piece:?} above component {h} does not touch it"))
            })?;
            debug_assert_eq!(class_component[owner], h);
            let mut ids: Vec<usize> = piece.iter().map(|&v| poset.component_of(v)).collect();
            ids.sort_unstable();
            ids.dedup();
            class_upset[owner].extend(ids);
        }
    }
    for list in &mut class_upset {
        list.sort_unstable();
    }
    Ok(class_upset)
}
