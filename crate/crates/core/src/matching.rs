//! Maximum matching and the matchability predicates built on it.

use alloc::vec::Vec;

use crate::blossom::{self, NONE};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::Vertex;

/// A matching of a host graph, stored as a partner array.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    mate: Vec<Option<Vertex>>,
    size: usize,
}

impl core::fmt::Debug for Matching {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_list().entries(self.edges()).finish()
    }
}

impl Matching {
    /// Builds a matching from vertex pairs, checking that each pair is an edge
    /// of `g` and that no vertex is used twice.
    pub fn from_edges<I>(g: &Graph, edges: I) -> Result<Matching>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut mate = alloc::vec![None; g.n()];
        let mut size = 0;
        for (u, v) in edges {
            if !g.has_edge(u, v) {
                return Err(Error::InvalidParameters(alloc::format!("{{{u}, {v}}} is not an edge")));
            }
            if mate[u].is_some() || mate[v].is_some() {
                return Err(Error::InvalidParameters(alloc::format!(
                    "vertex of {{{u}, {v}}} matched twice"
                )));
            }
            mate[u] = Some(v);
            mate[v] = Some(u);
            size += 1;
        }
        Ok(Matching { mate, size })
    }

    pub(crate) fn from_mate_array(mate: &[Vertex]) -> Matching {
        let mate: Vec<Option<Vertex>> = mate.iter().map(|&m| if m == NONE { None } else { Some(m) }).collect();
        let size = mate.iter().filter(|m| m.is_some()).count() / 2;
        Matching { mate, size }
    }

    pub(crate) fn to_mate_array(&self) -> Vec<Vertex> {
        self.mate.iter().map(|m| m.unwrap_or(NONE)).collect()
    }

    /// Number of matched edges.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn mate(&self, v: Vertex) -> Option<Vertex> {
        self.mate[v]
    }

    pub fn is_covered(&self, v: Vertex) -> bool {
        self.mate[v].is_some()
    }

    pub fn contains_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.mate[u] == Some(v)
    }

    /// Vertices left unmatched.
    pub fn exposed(&self) -> VertexSet {
        VertexSet::from_vertices(
            self.mate.len(),
            (0..self.mate.len()).filter(|&v| self.mate[v].is_none()),
        )
    }

    pub fn is_perfect(&self) -> bool {
        self.mate.iter().all(Option::is_some)
    }

    /// Matched pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| v > u).map(|v| (u, v)))
    }

    /// Checks the involution property and that every pair is an edge of `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.mate.len() == g.n()
            && (0..g.n()).all(|u| match self.mate[u] {
                None => true,
                Some(v) => v != u && self.mate[v] == Some(u) && g.has_edge(u, v),
            })
    }
}

/// A maximum matching of `g` (Edmonds' blossom algorithm).
///
/// The search order is ascending by vertex id, so the result is deterministic.
pub fn maximum_matching(g: &Graph) -> Matching {
    Matching::from_mate_array(&blossom::maximum_mate(g, &[]))
}

/// `ν(G - deleted)`.
pub(crate) fn matching_number_without(g: &Graph, deleted: &[Vertex]) -> usize {
    blossom::maximum_mate(g, deleted).iter().filter(|&&m| m != NONE).count() / 2
}

pub fn is_factorizable(g: &Graph) -> bool {
    g.n().is_multiple_of(2) && maximum_matching(g).size() * 2 == g.n()
}

/// Whether `G - v` is factorizable (or empty) for every vertex `v`.
///
/// A graph on an even number of vertices, including the empty graph, is never
/// factor-critical.
pub fn is_factor_critical(g: &Graph) -> bool {
    let n = g.n();
    if n.is_multiple_of(2) {
        return false;
    }
    let mate = blossom::maximum_mate(g, &[]);
    if mate.iter().filter(|&&m| m != NONE).count() != n - 1 {
        return false;
    }
    blossom::gallai_edmonds_labels(g, mate, &[])
        .iter()
        .all(|&l| l == blossom::Label::Even)
}

/// A matching of size `(n-1)/2` leaving only `v` exposed.
pub fn near_perfect_matching_exposing(g: &Graph, v: Vertex) -> Result<Matching> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let mate = blossom::maximum_mate(g, &[v]);
    let m = Matching::from_mate_array(&mate);
    if 2 * m.size() + 1 != g.n() {
        return Err(Error::NotDeletable(v));
    }
    Ok(m)
}

/// Whether `G` has an `M`-saturated path between `u` and `v` for a perfect
/// matching `M`, decided through the equivalent condition that `G - u - v` is
/// factorizable.
pub fn saturated_path_exists(g: &Graph, u: Vertex, v: Vertex) -> Result<bool> {
    for w in [u, v] {
        if w >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: w, n: g.n() });
        }
    }
    if u == v {
        return Err(Error::SameVertex(u));
    }
    if !is_factorizable(g) {
        return Err(Error::NotFactorizable);
    }
    Ok(2 * matching_number_without(g, &[u, v]) + 2 == g.n())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    #[test]
    fn small_matching_numbers() {
        let m = maximum_matching(&k2());
        assert_eq!(m.size(), 1);
        assert!(m.is_perfect());

        let m = maximum_matching(&p4());
        assert_eq!(m.edges().collect::<Vec<_>>(), [(A, B), (C, D)]);

        let m = maximum_matching(&cycle(5));
        assert_eq!(m.size(), 2);
        assert_eq!(m.exposed().len(), 1);
        assert!(m.is_valid_for(&cycle(5)));
    }

    #[test]
    fn greedy_start_needs_blossom_augmentation() {
        // Triangle 0-1-2 with tails 0-3 and 2-4... greedy picks 0-1, blocking 3.
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (2, 4), (4, 5), (1, 5)]).unwrap();
        let m = maximum_matching(&g);
        assert_eq!(m.size(), 3);
        assert!(m.is_valid_for(&g));
        // Flower: augmenting path must pass through a blossom.
        let g = Graph::from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (3, 6), (6, 7)]).unwrap();
        assert_eq!(maximum_matching(&g).size(), 4);
    }

    #[test]
    fn factorizability() {
        assert!(is_factorizable(&p4()));
        assert!(!is_factorizable(&path(3)));
        assert!(is_factorizable(&Graph::empty(0)));
    }

    #[test]
    fn factor_criticality() {
        assert!(is_factor_critical(&cycle(5)));
        assert!(!is_factor_critical(&path(3)));
        assert!(!is_factor_critical(&k4()));
        assert!(is_factor_critical(&Graph::empty(1)));
        assert!(!is_factor_critical(&Graph::empty(3)));
        assert!(!is_factor_critical(&Graph::empty(0)));
    }

    #[test]
    fn near_perfect_matchings() {
        for v in 0..5 {
            let m = near_perfect_matching_exposing(&cycle(5), v).unwrap();
            assert_eq!(m.size(), 2);
            assert_eq!(m.exposed().to_vec(), [v]);
        }
        let m = near_perfect_matching_exposing(&complete(3), 0).unwrap();
        assert_eq!(m.edges().collect::<Vec<_>>(), [(1, 2)]);
        assert_eq!(near_perfect_matching_exposing(&path(3), 1), Err(Error::NotDeletable(1)));
    }

    #[test]
    fn near_perfect_in_contracted_paw() {
        let paw = paw();
        let block = VertexSet::from_vertices(4, [A, D]);
        let (k3, map) = paw.contract(&[block]).unwrap();
        let w = map.block_vertex(0);
        let m = near_perfect_matching_exposing(&k3, w).unwrap();
        assert_eq!(m.edges().collect::<Vec<_>>(), [(map.image(B), map.image(C))]);
    }

    #[test]
    fn saturated_paths() {
        assert_eq!(saturated_path_exists(&p4(), A, B), Ok(true));
        assert_eq!(saturated_path_exists(&p4(), A, C), Ok(false));
        assert_eq!(saturated_path_exists(&paw(), B, C), Ok(true));
        assert_eq!(saturated_path_exists(&p4(), A, A), Err(Error::SameVertex(A)));
        assert_eq!(saturated_path_exists(&path(3), 0, 1), Err(Error::NotFactorizable));
    }

    #[test]
    fn matching_from_edges_validates() {
        let g = p4();
        assert!(Matching::from_edges(&g, [(A, B), (B, C)]).is_err());
        assert!(Matching::from_edges(&g, [(A, C)]).is_err());
        assert!(Matching::from_edges(&g, [(A, B), (C, D)]).unwrap().is_perfect());
    }
}
