//! Simple undirected graphs, vertex sets, and the elementary structural
//! operations: components, odd components, contraction, induced subgraphs.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::Vertex;

/// A subset of `0..universe`, stored as a bitset.
///
/// Iteration is always in ascending vertex order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::new(universe);
        for v in 0..universe {
            s.insert(v);
        }
        s
    }

    /// Builds a set from ids; panics on an id `>= universe`.
    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(universe: usize, it: I) -> Self {
        let mut s = Self::new(universe);
        for v in it {
            s.insert(v);
        }
        s
    }

    /// Builds a set from ids, rejecting out-of-range ids.
    pub fn try_from_vertices<I: IntoIterator<Item = Vertex>>(universe: usize, it: I) -> Result<Self> {
        let mut s = Self::new(universe);
        for v in it {
            if v >= universe {
                return Err(Error::VertexOutOfRange { vertex: v, n: universe });
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// The set whose members are the set bits of `mask` (universe at most 64).
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= 64);
        let mut s = Self::new(universe);
        if universe > 0 {
            s.words[0] = mask;
        }
        s
    }

    /// Bit mask of a set over a universe of at most 64 vertices.
    pub fn mask(&self) -> u64 {
        assert!(self.universe <= 64);
        self.words.first().copied().unwrap_or(0)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        let (w, b) = (v / 64, v % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        if v >= self.universe {
            return false;
        }
        let (w, b) = (v / 64, v % 64);
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        present
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        v < self.universe && self.words[v / 64] & (1 << (v % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first(&self) -> Option<Vertex> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet::full(self.universe).difference(self)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.check_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.check_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    fn check_universe(&self, other: &VertexSet) {
        assert_eq!(self.universe, other.universe, "vertex sets over different universes");
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = Vertex;
    type IntoIter = Iter<'a>;
    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are sorted ascending; the graph is immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n())?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}

/// Accumulates edges before freezing them into a [`Graph`].
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    n: usize,
    edges: BTreeSet<(Vertex, Vertex)>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            n,
            edges: BTreeSet::new(),
        }
    }

    /// Adds `{u, v}`; repeated edges collapse.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<&mut Self> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.edges.insert((u.min(v), u.max(v)));
        Ok(self)
    }

    pub fn contains(&self, u: Vertex, v: Vertex) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn build(self) -> Graph {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            adj,
            m: self.edges.len(),
        }
    }
}

/// The odd and even components of `G - X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddComponents {
    /// Odd components, ordered by smallest vertex.
    pub odd: Vec<VertexSet>,
    /// Even components, ordered by smallest vertex.
    pub even: Vec<VertexSet>,
    /// Vertices of the odd components (`D_X`).
    pub d_x: VertexSet,
    /// Remaining vertices outside `X` (`C_X`).
    pub c_x: VertexSet,
}

impl OddComponents {
    /// Number of odd components, `q_G(X)`.
    pub fn q(&self) -> usize {
        self.odd.len()
    }
}

/// Vertex correspondence between a graph and one derived from a vertex subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    to_old: Vec<Vertex>,
    to_new: Vec<Option<Vertex>>,
}

impl Relabeling {
    pub fn old(&self, new: Vertex) -> Vertex {
        self.to_old[new]
    }

    pub fn new_id(&self, old: Vertex) -> Option<Vertex> {
        self.to_new[old]
    }

    /// Old ids of all new vertices, in new-id order.
    pub fn old_ids(&self) -> &[Vertex] {
        &self.to_old
    }

    pub fn lift(&self, set: &VertexSet) -> VertexSet {
        VertexSet::from_vertices(self.to_new.len(), set.iter().map(|v| self.to_old[v]))
    }
}

/// Result of contracting disjoint vertex blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionMap {
    image: Vec<Vertex>,
    blocks: Vec<VertexSet>,
    block_vertex: Vec<Vertex>,
    new_n: usize,
}

impl ContractionMap {
    /// New id of an old vertex.
    pub fn image(&self, old: Vertex) -> Vertex {
        self.image[old]
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    /// New id of the vertex a block was contracted into.
    pub fn block_vertex(&self, block: usize) -> Vertex {
        self.block_vertex[block]
    }

    /// Old vertices mapped onto `new`.
    pub fn preimage(&self, new: Vertex) -> VertexSet {
        VertexSet::from_vertices(
            self.image.len(),
            (0..self.image.len()).filter(|&v| self.image[v] == new),
        )
    }

    pub fn new_vertex_count(&self) -> usize {
        self.new_n
    }
}

impl Graph {
    /// Graph with no edges.
    pub fn empty(n: usize) -> Graph {
        GraphBuilder::new(n).build()
    }

    /// Builds a graph from an edge list; duplicates collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn check_set(&self, x: &VertexSet) -> Result<()> {
        if x.universe() != self.n() {
            return Err(Error::InvalidParameters(alloc::format!(
                "vertex set over {} vertices used with a graph on {}",
                x.universe(),
                self.n()
            )));
        }
        Ok(())
    }

    /// `Γ(X)`: vertices outside `X` adjacent to `X`.
    pub fn neighborhood(&self, x: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n());
        for v in x {
            for &w in self.neighbors(v) {
                if !x.contains(w) {
                    out.insert(w);
                }
            }
        }
        out
    }

    /// Connected components of `G - removed`, each as a sorted vertex list,
    /// ordered by smallest vertex.
    pub fn components_avoiding(&self, removed: &VertexSet) -> Vec<Vec<Vertex>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] || removed.contains(s) {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in self.neighbors(v) {
                    if !seen[w] && !removed.contains(w) {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Connected components of the whole graph.
    pub fn components(&self) -> Vec<VertexSet> {
        let none = VertexSet::new(self.n());
        self.components_avoiding(&none)
            .into_iter()
            .map(|c| VertexSet::from_vertices(self.n(), c))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// The components of `G - X`, split by parity, with `D_X` and `C_X`.
    pub fn odd_components(&self, x: &VertexSet) -> OddComponents {
        let n = self.n();
        let mut odd = Vec::new();
        let mut even = Vec::new();
        let mut d_x = VertexSet::new(n);
        let mut c_x = VertexSet::new(n);
        for comp in self.components_avoiding(x) {
            let set = VertexSet::from_vertices(n, comp.iter().copied());
            if comp.len() % 2 == 1 {
                d_x.union_with(&set);
                odd.push(set);
            } else {
                c_x.union_with(&set);
                even.push(set);
            }
        }
        OddComponents { odd, even, d_x, c_x }
    }

    /// `G[X]` together with the vertex correspondence (ascending ids kept in order).
    pub fn induced_subgraph(&self, x: &VertexSet) -> (Graph, Relabeling) {
        let to_old: Vec<Vertex> = x.iter().filter(|&v| v < self.n()).collect();
        let mut to_new = vec![None; self.n()];
        for (i, &v) in to_old.iter().enumerate() {
            to_new[v] = Some(i);
        }
        let mut adj = vec![Vec::new(); to_old.len()];
        let mut m = 0;
        for (i, &v) in to_old.iter().enumerate() {
            for &w in self.neighbors(v) {
                if let Some(j) = to_new[w] {
                    adj[i].push(j);
                    if j > i {
                        m += 1;
                    }
                }
            }
        }
        (Graph { adj, m }, Relabeling { to_old, to_new })
    }

    /// `G - X`.
    pub fn remove_vertices(&self, x: &VertexSet) -> (Graph, Relabeling) {
        self.induced_subgraph(&x.complement())
    }

    /// Contracts each block into a single vertex, keeping the result simple.
    ///
    /// New ids follow the order of each class's smallest old vertex, so
    /// uncontracted vertices keep their relative order.
    pub fn contract(&self, blocks: &[VertexSet]) -> Result<(Graph, ContractionMap)> {
        let n = self.n();
        let mut block_of = vec![usize::MAX; n];
        for (i, b) in blocks.iter().enumerate() {
            self.check_set(b)?;
            for v in b {
                if block_of[v] != usize::MAX {
                    return Err(Error::OverlappingBlocks(v));
                }
                block_of[v] = i;
            }
        }
        let mut image = vec![usize::MAX; n];
        let mut block_vertex = vec![usize::MAX; blocks.len()];
        let mut next = 0;
        for v in 0..n {
            let b = block_of[v];
            if b == usize::MAX {
                image[v] = next;
                next += 1;
            } else {
                if block_vertex[b] == usize::MAX {
                    block_vertex[b] = next;
                    next += 1;
                }
                image[v] = block_vertex[b];
            }
        }
        let mut builder = GraphBuilder::new(next);
        for (u, v) in self.edges() {
            let (a, b) = (image[u], image[v]);
            if a != b {
                builder.add_edge(a, b)?;
            }
        }
        let map = ContractionMap {
            image,
            blocks: blocks.to_vec(),
            block_vertex,
            new_n: next,
        };
        Ok((builder.build(), map))
    }

    /// Two-coloring of the graph, if it is bipartite; `true` marks the side of
    /// the smallest vertex of each component.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.n();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut stack = Vec::new();
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(true);
            stack.push(s);
            while let Some(v) = stack.pop() {
                let c = color[v].unwrap();
                for &w in self.neighbors(v) {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            stack.push(w);
                        }
                        Some(cw) if cw == c => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }
}
