//! Barriers, odd-maximal barriers, the bipartite contraction `H_X(G)`, and the
//! decomposition of an odd-maximal barrier into canonical classes.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::blossom::NONE;
use crate::cathedral::{algorithm1, CathedralStructure};
use crate::decomposition::{dm_with_perfect_matching, gallai_edmonds, DmDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, VertexSet};
use crate::matching::{is_factor_critical, maximum_matching, Matching};
use crate::Vertex;

/// Largest graph [`enumerate_odd_maximal_barriers`] accepts by default.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 14;

/// Everything the Berge formula says about one vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarrierReport {
    pub x: VertexSet,
    /// `q_G(X) - |X| = |V| - 2ν(G)`.
    pub is_barrier: bool,
    /// A barrier whose odd components are all factor-critical.
    pub is_odd_maximal: bool,
    /// Odd components `K_1, ..., K_l` of `G - X`, ordered by smallest vertex.
    pub odd_components: Vec<VertexSet>,
    pub d_x: VertexSet,
    pub c_x: VertexSet,
    /// `q_G(X) - |X|`.
    pub surplus: isize,
    /// `|V| - 2ν(G)`.
    pub deficiency: usize,
}

impl BarrierReport {
    pub fn q(&self) -> usize {
        self.odd_components.len()
    }
}

/// Barrier status of `x` in `g`.
pub fn barrier_report(g: &Graph, x: &VertexSet) -> Result<BarrierReport> {
    let nu = maximum_matching(g).size();
    barrier_report_with_nu(g, x, nu)
}

pub(crate) fn barrier_report_with_nu(g: &Graph, x: &VertexSet, nu: usize) -> Result<BarrierReport> {
    g.check_set(x)?;
    let oc = g.odd_components(x);
    let surplus = oc.q() as isize - x.len() as isize;
    let deficiency = g.n() - 2 * nu;
    let is_barrier = surplus == deficiency as isize;
    let is_odd_maximal = is_barrier && oc.odd.iter().all(|k| is_factor_critical(&g.induced_subgraph(k).0));
    Ok(BarrierReport {
        x: x.clone(),
        is_barrier,
        is_odd_maximal,
        odd_components: oc.odd,
        d_x: oc.d_x,
        c_x: oc.c_x,
        surplus,
        deficiency,
    })
}

/// `H_X(G)`: delete the even components of `G - X` and the edges inside `X`,
/// then contract every odd component to a single vertex.
///
/// Vertices `0..|X|` are the members of `X` in ascending order; vertex
/// `|X| + i` is the contracted `i`-th odd component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HxGraph {
    graph: Graph,
    side_x: VertexSet,
    barrier: Vec<Vertex>,
    odd: Vec<VertexSet>,
    host_n: usize,
}

impl HxGraph {
    pub(crate) fn from_odd_components(g: &Graph, x: &VertexSet, odd: Vec<VertexSet>) -> HxGraph {
        let barrier = x.to_vec();
        let k = barrier.len();
        let mut hx_id = vec![NONE; g.n()];
        for (i, &v) in barrier.iter().enumerate() {
            hx_id[v] = i;
        }
        for (j, comp) in odd.iter().enumerate() {
            for v in comp {
                hx_id[v] = k + j;
            }
        }
        let mut b = GraphBuilder::new(k + odd.len());
        for (i, &v) in barrier.iter().enumerate() {
            for &w in g.neighbors(v) {
                let t = hx_id[w];
                if t != NONE && t >= k {
                    b.add_edge(i, t).expect("ids in range");
                }
            }
        }
        let side_x = VertexSet::from_vertices(k + odd.len(), 0..k);
        HxGraph {
            graph: b.build(),
            side_x,
            barrier,
            odd,
            host_n: g.n(),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// The `X` side, in `H_X` ids.
    pub fn side_x(&self) -> &VertexSet {
        &self.side_x
    }

    /// Host vertex of barrier-side vertex `i`.
    pub fn barrier_vertex(&self, i: usize) -> Vertex {
        self.barrier[i]
    }

    pub fn barrier_vertices(&self) -> &[Vertex] {
        &self.barrier
    }

    /// Host odd components, indexed by contracted vertex minus `|X|`.
    pub fn odd_components(&self) -> &[VertexSet] {
        &self.odd
    }

    /// The odd component behind an `H_X` vertex, if it is a contracted one.
    pub fn component_of_contracted(&self, hv: Vertex) -> Option<&VertexSet> {
        hv.checked_sub(self.barrier.len()).and_then(|j| self.odd.get(j))
    }

    /// `H_X` id of a host vertex in `X ∪ D_X`.
    pub fn hx_vertex(&self, host: Vertex) -> Option<Vertex> {
        if let Ok(i) = self.barrier.binary_search(&host) {
            return Some(i);
        }
        self.odd
            .iter()
            .position(|k| k.contains(host))
            .map(|j| self.barrier.len() + j)
    }

    /// Host vertices of `set ∩ X` (the barrier side of an `H_X` vertex set).
    pub fn expand_barrier_part(&self, set: &VertexSet) -> VertexSet {
        VertexSet::from_vertices(
            self.host_n,
            set.iter().filter(|&v| v < self.barrier.len()).map(|v| self.barrier[v]),
        )
    }

    /// Expansion of an `H_X` vertex set: its barrier vertices together with
    /// every vertex of its contracted odd components.
    pub fn expand(&self, set: &VertexSet) -> VertexSet {
        let mut out = self.expand_barrier_part(set);
        for v in set {
            if let Some(k) = self.component_of_contracted(v) {
                out.union_with(k);
            }
        }
        out
    }

    /// Projects a perfect matching of the host (as a mate array) onto `H_X`:
    /// each barrier vertex is matched to the component holding its partner.
    /// `None` when the result is not a perfect matching of `H_X`.
    pub(crate) fn project_matching(&self, host_mate: &[Vertex]) -> Option<Vec<Vertex>> {
        let k = self.barrier.len();
        let total = k + self.odd.len();
        if total != 2 * k {
            return None;
        }
        let mut mate = vec![NONE; total];
        for (i, &v) in self.barrier.iter().enumerate() {
            let partner = host_mate[v];
            if partner == NONE {
                return None;
            }
            let j = self.odd.iter().position(|c| c.contains(partner))?;
            if mate[k + j] != NONE {
                return None;
            }
            mate[i] = k + j;
            mate[k + j] = i;
        }
        Some(mate)
    }

    /// [`Matching`] form of the projection of a host perfect matching.
    pub fn project(&self, m: &Matching) -> Option<Matching> {
        self.project_matching(&m.to_mate_array())
            .map(|mate| Matching::from_mate_array(&mate))
    }

    /// DM decomposition of `H_X` with respect to the barrier side.
    pub fn dm_decomposition(&self) -> Option<DmDecomposition> {
        let host_pm = maximum_matching(&self.graph);
        if !host_pm.is_perfect() {
            return None;
        }
        Some(dm_with_perfect_matching(
            &self.graph,
            &self.side_x,
            &host_pm.to_mate_array(),
        ))
    }
}

fn require_odd_maximal_barrier(g: &Graph, x: &VertexSet) -> Result<BarrierReport> {
    let report = barrier_report(g, x)?;
    if report.deficiency != 0 {
        return Err(Error::NotFactorizable);
    }
    if !report.is_odd_maximal {
        return Err(Error::NotOddMaximalBarrier);
    }
    Ok(report)
}

/// `H_X(G)` for an odd-maximal barrier `x` of a factorizable graph.
pub fn build_hx(g: &Graph, x: &VertexSet) -> Result<HxGraph> {
    let report = require_odd_maximal_barrier(g, x)?;
    Ok(HxGraph::from_odd_components(g, x, report.odd_components))
}

/// One DM-component of `H_X(G)` seen in the host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarrierPart {
    /// `S_i = X ∩ V̂_i`, a canonical class.
    pub class: VertexSet,
    /// Id of `S_i` in the canonical partition.
    pub class_id: usize,
    /// Factor-component `H_i` containing `S_i`.
    pub component: usize,
    /// Vertex set `V̂_i` of the expansion.
    pub expansion: VertexSet,
    /// `V̂_i \ S_i`, the part of `D_X` belonging to this class.
    pub odd_part: VertexSet,
}

/// An odd-maximal barrier split into canonical classes, with the matching
/// split of `D_X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MainTheoremDecomposition {
    pub x: VertexSet,
    pub d_x: VertexSet,
    pub parts: Vec<BarrierPart>,
}

/// Decomposes an odd-maximal barrier of a factorizable graph through the DM
/// decomposition of `H_X(G)` and checks every part against the cathedral
/// structure: `S_i` must be a canonical class and `V̂_i \ S_i` must equal the
/// upper vertices of `H_i` not assigned to `S_i`.
pub fn decompose_odd_maximal_barrier(g: &Graph, x: &VertexSet) -> Result<MainTheoremDecomposition> {
    require_odd_maximal_barrier(g, x)?;
    let s = algorithm1(g)?;
    decompose_with_structure(g, x, &s)
}

/// [`decompose_odd_maximal_barrier`] against a precomputed structure.
pub fn decompose_with_structure(g: &Graph, x: &VertexSet, s: &CathedralStructure) -> Result<MainTheoremDecomposition> {
    let report = require_odd_maximal_barrier(g, x)?;
    let d_x = report.d_x.clone();
    let hx = HxGraph::from_odd_components(g, x, report.odd_components);
    let host_pm = maximum_matching(g);
    let hx_mate = hx
        .project_matching(&host_pm.to_mate_array())
        .ok_or_else(|| Error::Inconsistency("perfect matching does not project onto H_X".into()))?;
    let dm = dm_with_perfect_matching(hx.graph(), hx.side_x(), &hx_mate);

    let mut parts = Vec::with_capacity(dm.len());
    let mut covered = VertexSet::new(g.n());
    for comp in dm.components() {
        let class = hx.expand_barrier_part(comp);
        let expansion = hx.expand(comp);
        let odd_part = expansion.difference(&class);
        let first = class
            .first()
            .ok_or_else(|| Error::Inconsistency("DM-component without barrier vertex".into()))?;
        let class_id = s.partition().class_of(first);
        if s.partition().classes()[class_id] != class {
            return Err(Error::Inconsistency(format!(
                "barrier part {:?} is not a canonical class",
                class.to_vec()
            )));
        }
        let component = s.class_component(class_id);
        let predicted = s
            .upstar_vertices(component)
            .difference(&s.class_upstar_vertices(class_id));
        if predicted != odd_part {
            return Err(Error::Inconsistency(format!(
                "odd part {:?} of class {:?} differs from predicted {:?}",
                odd_part.to_vec(),
                class.to_vec(),
                predicted.to_vec()
            )));
        }
        if !covered.is_disjoint(&expansion) {
            return Err(Error::Inconsistency("expansions overlap".into()));
        }
        covered.union_with(&expansion);
        parts.push(BarrierPart {
            class,
            class_id,
            component,
            expansion,
            odd_part,
        });
    }
    if covered != x.union(&d_x) {
        return Err(Error::Inconsistency("expansions do not cover X and D_X".into()));
    }
    Ok(MainTheoremDecomposition {
        x: x.clone(),
        d_x,
        parts,
    })
}

/// All odd-maximal barriers of `g`, by subset enumeration in increasing
/// bit-mask order. Refuses graphs with more than `limit_n` vertices.
pub fn enumerate_odd_maximal_barriers(g: &Graph, limit_n: usize) -> Result<Vec<VertexSet>> {
    let n = g.n();
    if n > limit_n || n > 63 {
        return Err(Error::TooLarge {
            n,
            limit: limit_n.min(63),
        });
    }
    odd_maximal_barriers_in_range(g, 0..1u64 << n)
}

/// Odd-maximal barriers whose bit masks fall in `masks`; lets callers split
/// the subset space into chunks.
pub fn odd_maximal_barriers_in_range(g: &Graph, masks: Range<u64>) -> Result<Vec<VertexSet>> {
    let n = g.n();
    if n > 63 {
        return Err(Error::TooLarge { n, limit: 63 });
    }
    let nu = maximum_matching(g).size();
    let end = masks.end.min(1u64 << n);
    let mut out = Vec::new();
    for mask in masks.start..end {
        let x = VertexSet::from_mask(n, mask);
        let oc = g.odd_components(&x);
        if oc.q() as isize - x.len() as isize != (n - 2 * nu) as isize {
            continue;
        }
        if oc.odd.iter().all(|k| is_factor_critical(&g.induced_subgraph(k).0)) {
            out.push(x);
        }
    }
    Ok(out)
}

/// `A(G)` and the canonical classes of the factorizable graph `G[C(G)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralAtoms {
    pub a_set: VertexSet,
    /// Classes in host vertex ids, ordered by smallest vertex.
    pub classes: Vec<VertexSet>,
}

/// Building blocks of the odd-maximal barriers of an arbitrary graph.
pub fn general_graph_atoms(g: &Graph) -> Result<GeneralAtoms> {
    let ge = gallai_edmonds(g);
    let (core, relabel) = g.induced_subgraph(&ge.c_set);
    let s = algorithm1(&core)?;
    let classes = s.partition().classes().iter().map(|c| relabel.lift(c)).collect();
    Ok(GeneralAtoms {
        a_set: ge.a_set,
        classes,
    })
}
