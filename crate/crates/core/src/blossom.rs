//! Alternating forest with blossom shrinking.
//!
//! One engine serves both maximum matching (grow until an augmenting path
//! shows up, augment, repeat) and the Gallai–Edmonds labeling (grow a single
//! forest from every exposed vertex of a maximum matching; even vertices are
//! `D(G)`, odd ones `A(G)`, unreached ones `C(G)`).
//!
//! Blossoms are kept implicitly: a union-find over vertices whose
//! representative records the blossom base. Odd vertices absorbed into a
//! blossom remember the bridge edge that closed it, which is enough to
//! rebuild alternating paths to the root.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::Vertex;

pub(crate) const NONE: usize = usize::MAX;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Label {
    Free,
    Even,
    Odd,
}

pub(crate) struct Forest<'g> {
    g: &'g Graph,
    alive: Vec<bool>,
    pub(crate) mate: Vec<Vertex>,
    pub(crate) label: Vec<Label>,
    parent: Vec<Vertex>,
    bridge: Vec<(Vertex, Vertex)>,
    root: Vec<Vertex>,
    uf: Vec<usize>,
    base: Vec<Vertex>,
    mark: Vec<u32>,
    stamp: u32,
    queue: VecDeque<Vertex>,
}

impl<'g> Forest<'g> {
    /// `deleted` vertices are treated as absent from the graph; they must be
    /// unmatched in `mate`.
    pub(crate) fn new(g: &'g Graph, mate: Vec<Vertex>, deleted: &[Vertex]) -> Self {
        let n = g.n();
        let mut alive = vec![true; n];
        for &v in deleted {
            alive[v] = false;
            debug_assert_eq!(mate[v], NONE);
        }
        Forest {
            g,
            alive,
            mate,
            label: vec![Label::Free; n],
            parent: vec![NONE; n],
            bridge: vec![(NONE, NONE); n],
            root: vec![NONE; n],
            uf: (0..n).collect(),
            base: (0..n).collect(),
            mark: vec![0; n],
            stamp: 0,
            queue: VecDeque::new(),
        }
    }

    fn reset(&mut self) {
        for v in 0..self.g.n() {
            self.label[v] = Label::Free;
            self.parent[v] = NONE;
            self.bridge[v] = (NONE, NONE);
            self.root[v] = NONE;
            self.uf[v] = v;
            self.base[v] = v;
        }
        self.queue.clear();
    }

    fn rep(&mut self, mut v: usize) -> usize {
        while self.uf[v] != v {
            self.uf[v] = self.uf[self.uf[v]];
            v = self.uf[v];
        }
        v
    }

    fn base_of(&mut self, v: Vertex) -> Vertex {
        let r = self.rep(v);
        self.base[r]
    }

    fn merge_into(&mut self, v: Vertex, lca: Vertex) {
        let a = self.rep(v);
        let b = self.rep(lca);
        if a != b {
            self.uf[a] = b;
        }
        self.base[b] = lca;
    }

    /// Grows the forest from all exposed vertices. Returns an edge joining two
    /// even vertices of different trees when one appears.
    pub(crate) fn grow(&mut self) -> Option<(Vertex, Vertex)> {
        self.reset();
        let g = self.g;
        for v in 0..g.n() {
            if self.alive[v] && self.mate[v] == NONE {
                self.label[v] = Label::Even;
                self.root[v] = v;
                self.queue.push_back(v);
            }
        }
        while let Some(v) = self.queue.pop_front() {
            for &w in g.neighbors(v) {
                if !self.alive[w] {
                    continue;
                }
                match self.label[w] {
                    Label::Free => {
                        let x = self.mate[w];
                        debug_assert_ne!(x, NONE);
                        self.label[w] = Label::Odd;
                        self.parent[w] = v;
                        self.root[w] = self.root[v];
                        self.label[x] = Label::Even;
                        self.root[x] = self.root[v];
                        self.queue.push_back(x);
                    }
                    Label::Odd => {}
                    Label::Even => {
                        if self.root[v] != self.root[w] {
                            return Some((v, w));
                        }
                        let (bv, bw) = (self.base_of(v), self.base_of(w));
                        if bv != bw {
                            self.shrink(v, w, bv, bw);
                        }
                    }
                }
            }
        }
        None
    }

    fn next_base(&mut self, b: Vertex) -> Vertex {
        let m = self.mate[b];
        if m == NONE {
            NONE
        } else {
            let p = self.parent[m];
            self.base_of(p)
        }
    }

    fn lca(&mut self, mut a: Vertex, mut b: Vertex) -> Vertex {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.mark.iter_mut().for_each(|m| *m = 0);
            self.stamp = 1;
        }
        loop {
            if a != NONE {
                if self.mark[a] == self.stamp {
                    return a;
                }
                self.mark[a] = self.stamp;
                a = self.next_base(a);
            }
            core::mem::swap(&mut a, &mut b);
        }
    }

    fn shrink(&mut self, v: Vertex, w: Vertex, bv: Vertex, bw: Vertex) {
        let lca = self.lca(bv, bw);
        self.shrink_side(v, w, lca);
        self.shrink_side(w, v, lca);
    }

    fn shrink_side(&mut self, x: Vertex, y: Vertex, lca: Vertex) {
        let mut b = self.base_of(x);
        while b != lca {
            let m = self.mate[b];
            self.merge_into(b, lca);
            self.merge_into(m, lca);
            self.bridge[m] = (x, y);
            self.label[m] = Label::Even;
            self.queue.push_back(m);
            let p = self.parent[m];
            b = self.base_of(p);
        }
    }

    /// Alternating path from even vertex `v` towards its root, stopping at `stop`
    /// (or at the root when `stop` is `NONE`).
    fn trace(&self, mut v: Vertex, stop: Vertex, out: &mut Vec<Vertex>) {
        loop {
            out.push(v);
            if v == stop {
                return;
            }
            let (x, y) = self.bridge[v];
            if x == NONE {
                let m = self.mate[v];
                if m == NONE {
                    return;
                }
                out.push(m);
                if m == stop {
                    return;
                }
                v = self.parent[m];
            } else {
                let mut seg = Vec::new();
                self.trace(x, self.mate[v], &mut seg);
                seg.reverse();
                out.extend(seg);
                if out.last() == Some(&stop) {
                    return;
                }
                v = y;
            }
        }
    }

    /// Flips the augmenting path through the even-even edge `(v, w)`.
    pub(crate) fn augment(&mut self, v: Vertex, w: Vertex) {
        let mut left = Vec::new();
        self.trace(v, NONE, &mut left);
        let mut right = Vec::new();
        self.trace(w, NONE, &mut right);
        left.reverse();
        left.extend(right);
        debug_assert!(left.len() % 2 == 0);
        for pair in left.chunks(2) {
            let (a, b) = (pair[0], pair[1]);
            debug_assert!(self.g.has_edge(a, b));
            self.mate[a] = b;
            self.mate[b] = a;
        }
    }
}

/// Greedy initial matching in ascending vertex order over live vertices.
pub(crate) fn greedy(g: &Graph, deleted: &[Vertex]) -> Vec<Vertex> {
    let n = g.n();
    let mut alive = vec![true; n];
    for &v in deleted {
        alive[v] = false;
    }
    let mut mate = vec![NONE; n];
    for u in 0..n {
        if !alive[u] || mate[u] != NONE {
            continue;
        }
        if let Some(&v) = g.neighbors(u).iter().find(|&&v| alive[v] && mate[v] == NONE) {
            mate[u] = v;
            mate[v] = u;
        }
    }
    mate
}

/// Maximum matching of `G - deleted` as a mate array.
pub(crate) fn maximum_mate(g: &Graph, deleted: &[Vertex]) -> Vec<Vertex> {
    let mate = greedy(g, deleted);
    let mut forest = Forest::new(g, mate, deleted);
    while let Some((v, w)) = forest.grow() {
        forest.augment(v, w);
    }
    forest.mate
}

/// Gallai–Edmonds labels of `G - deleted`, given a maximum matching of it.
pub(crate) fn gallai_edmonds_labels(g: &Graph, mate: Vec<Vertex>, deleted: &[Vertex]) -> Vec<Label> {
    let mut forest = Forest::new(g, mate, deleted);
    let found = forest.grow();
    assert!(
        found.is_none(),
        "matching passed to the Gallai-Edmonds labeling is not maximum"
    );
    let mut labels = forest.label;
    for &v in deleted {
        labels[v] = Label::Free;
    }
    labels
}
