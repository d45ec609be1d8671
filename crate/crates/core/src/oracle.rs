//! Definition-level reference implementations for cross-validation.
//!
//! Everything here is deliberately slow and written straight from the
//! definitions. The only production routine used is the matching number,
//! which is itself checked against [`brute_maximum_matching_size`].

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::cathedral::CanonicalPartition;
use crate::decomposition::GallaiEdmonds;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, VertexSet};
use crate::matching::{matching_number_without, Matching};
use crate::Vertex;

/// Default size cap for exhaustive enumerations.
pub const DEFAULT_CAP: usize = 14;

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    if g.n() > cap || g.n() > 63 {
        Err(Error::TooLarge {
            n: g.n(),
            limit: cap.min(63),
        })
    } else {
        Ok(())
    }
}

fn nu_without(g: &Graph, deleted: &[Vertex]) -> usize {
    matching_number_without(g, deleted)
}

/// `G - deleted` has a perfect matching.
fn factorizable_without(g: &Graph, deleted: &[Vertex]) -> bool {
    let rest = g.n() - deleted.len();
    rest.is_multiple_of(2) && 2 * nu_without(g, deleted) == rest
}

/// All perfect matchings, by backtracking on the lowest uncovered vertex.
pub fn brute_perfect_matchings(g: &Graph, cap_n: usize) -> Result<Vec<Matching>> {
    check_cap(g, cap_n)?;
    let mut out = Vec::new();
    if g.n() % 2 == 1 {
        return Ok(out);
    }
    let mut mate = vec![usize::MAX; g.n()];
    fn rec(g: &Graph, mate: &mut Vec<usize>, out: &mut Vec<Matching>) {
        let Some(u) = (0..g.n()).find(|&v| mate[v] == usize::MAX) else {
            let pairs: Vec<_> = (0..g.n()).filter(|&v| mate[v] > v).map(|v| (v, mate[v])).collect();
            out.push(Matching::from_edges(g, pairs).unwrap());
            return;
        };
        for &v in g.neighbors(u) {
            if mate[v] == usize::MAX {
                mate[u] = v;
                mate[v] = u;
                rec(g, mate, out);
                mate[u] = usize::MAX;
                mate[v] = usize::MAX;
            }
        }
    }
    rec(g, &mut mate, &mut out);
    Ok(out)
}

/// Maximum matching size by exhaustive search: the lowest undecided vertex is
/// either left exposed or matched to a later undecided neighbor.
pub fn brute_maximum_matching_size(g: &Graph) -> usize {
    fn rec(g: &Graph, from: usize, used: &mut Vec<bool>) -> usize {
        let Some(u) = (from..g.n()).find(|&v| !used[v]) else {
            return 0;
        };
        used[u] = true;
        let mut best = rec(g, u + 1, used);
        for &v in g.neighbors(u) {
            if !used[v] {
                used[v] = true;
                best = best.max(1 + rec(g, u + 1, used));
                used[v] = false;
            }
        }
        used[u] = false;
        best
    }
    rec(g, 0, &mut vec![false; g.n()])
}

/// `max_X (q_G(X) - |X|)` over all vertex subsets.
pub fn brute_berge_max(g: &Graph, cap_n: usize) -> Result<isize> {
    check_cap(g, cap_n)?;
    let n = g.n();
    let mut best = isize::MIN;
    for mask in 0..1u64 << n {
        let x = VertexSet::from_mask(n, mask);
        let q = g.odd_components(&x).q() as isize;
        best = best.max(q - x.len() as isize);
    }
    Ok(best)
}

/// Factor-criticality straight from the definition.
pub fn brute_is_factor_critical(g: &Graph) -> bool {
    g.n() % 2 == 1 && (0..g.n()).all(|v| factorizable_without(g, &[v]))
}

/// Allowed edges `uv` (those with `G - u - v` factorizable).
pub fn brute_allowed_edges(g: &Graph) -> Result<Vec<(Vertex, Vertex)>> {
    if !factorizable_without(g, &[]) {
        return Err(Error::NotFactorizable);
    }
    Ok(g.edges().filter(|&(u, v)| factorizable_without(g, &[u, v])).collect())
}

/// Factor-components: connected pieces of the allowed-edge subgraph,
/// ordered by smallest vertex.
pub fn brute_factor_components(g: &Graph) -> Result<Vec<VertexSet>> {
    let allowed = Graph::from_edges(g.n(), brute_allowed_edges(g)?)?;
    Ok(allowed.components())
}

/// Classes of `u ~ v` (same factor-component and `G - u - v` not
/// factorizable), with transitivity checked over all triples.
pub fn brute_canonical_partition(g: &Graph) -> Result<CanonicalPartition> {
    let n = g.n();
    let comps = brute_factor_components(g)?;
    let mut comp_of = vec![0; n];
    for (i, c) in comps.iter().enumerate() {
        for v in c {
            comp_of[v] = i;
        }
    }
    let mut rel = vec![vec![false; n]; n];
    for u in 0..n {
        rel[u][u] = true;
        for v in u + 1..n {
            let r = comp_of[u] == comp_of[v] && !factorizable_without(g, &[u, v]);
            rel[u][v] = r;
            rel[v][u] = r;
        }
    }
    for u in 0..n {
        for v in 0..n {
            if !rel[u][v] {
                continue;
            }
            if let Some(w) = (0..n).find(|&w| rel[v][w] && !rel[u][w]) {
                return Err(Error::TransitivityViolation { u, v, w });
            }
        }
    }
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for u in 0..n {
        if assigned[u] {
            continue;
        }
        let class = VertexSet::from_vertices(n, (u..n).filter(|&v| rel[u][v]));
        for v in &class {
            assigned[v] = true;
        }
        classes.push(class);
    }
    CanonicalPartition::from_classes(n, classes)
        .ok_or_else(|| Error::Inconsistency("brute classes do not partition".into()))
}

/// The order on factor-components from critical-inducing sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrutePoset {
    pub components: Vec<VertexSet>,
    /// `leq[i][j]`: some critical-inducing set exists for `components[i]`
    /// to `components[j]`.
    pub leq: Vec<Vec<bool>>,
}

impl BrutePoset {
    pub fn component_of(&self, v: Vertex) -> usize {
        self.components.iter().position(|c| c.contains(v)).unwrap()
    }
}

/// `G_i ⪯ G_j` iff some union `X` of factor-components containing both has
/// `G[X] / G_i` factor-critical. Separating sets are enumerated as unions of
/// components, so the search is over `2^k` component subsets.
pub fn brute_poset(g: &Graph) -> Result<BrutePoset> {
    let components = brute_factor_components(g)?;
    let k = components.len();
    if k > 20 {
        return Err(Error::TooLarge { n: k, limit: 20 });
    }
    let mut leq = vec![vec![false; k]; k];
    for i in 0..k {
        leq[i][i] = true;
        for j in 0..k {
            if i == j {
                continue;
            }
            let others: Vec<usize> = (0..k).filter(|&t| t != i && t != j).collect();
            leq[i][j] = (0..1u64 << others.len()).any(|sub| {
                let mut x = components[i].union(&components[j]);
                for (b, &t) in others.iter().enumerate() {
                    if sub >> b & 1 == 1 {
                        x.union_with(&components[t]);
                    }
                }
                let (gx, relabel) = g.induced_subgraph(&x);
                let block = relabel_set(&components[i], &relabel, gx.n());
                let (contracted, _) = gx.contract(&[block]).unwrap();
                brute_is_factor_critical(&contracted)
            });
        }
    }
    Ok(BrutePoset { components, leq })
}

fn relabel_set(set: &VertexSet, relabel: &crate::graph::Relabeling, n: usize) -> VertexSet {
    VertexSet::from_vertices(n, set.iter().filter_map(|v| relabel.new_id(v)))
}

/// Bit mask of every barrier, indexed by vertex-subset mask.
fn barrier_table(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let deficiency = (n - 2 * nu_without(g, &[])) as isize;
    (0..1u64 << n)
        .map(|mask| {
            let x = VertexSet::from_mask(n, mask);
            g.odd_components(&x).q() as isize - x.len() as isize == deficiency
        })
        .collect()
}

/// All barriers, in increasing bit-mask order.
pub fn brute_barriers(g: &Graph, cap_n: usize) -> Result<Vec<VertexSet>> {
    check_cap(g, cap_n)?;
    let table = barrier_table(g);
    Ok((0..table.len() as u64)
        .filter(|&m| table[m as usize])
        .map(|m| VertexSet::from_mask(g.n(), m))
        .collect())
}

/// Inclusion-maximal barriers.
pub fn brute_maximal_barriers(g: &Graph, cap_n: usize) -> Result<Vec<VertexSet>> {
    check_cap(g, cap_n)?;
    let n = g.n();
    let table = barrier_table(g);
    // `above[m]`: some superset of `m`, `m` included, is a barrier.
    let mut above = table.clone();
    for m in (0..table.len()).rev() {
        above[m] |= (0..n).any(|v| m >> v & 1 == 0 && above[m | 1 << v]);
    }
    Ok((0..table.len())
        .filter(|&m| table[m] && (0..n).all(|v| m >> v & 1 == 1 || !above[m | 1 << v]))
        .map(|m| VertexSet::from_mask(n, m as u64))
        .collect())
}

/// Odd-maximal barriers from the definition: barriers `X` such that no
/// nonempty `Y ⊆ D_X` makes `X ∪ Y` a barrier.
pub fn brute_odd_maximal_barriers(g: &Graph, cap_n: usize) -> Result<Vec<VertexSet>> {
    check_cap(g, cap_n)?;
    let n = g.n();
    let table = barrier_table(g);
    let mut out = Vec::new();
    for mask in 0..table.len() as u64 {
        if !table[mask as usize] {
            continue;
        }
        let x = VertexSet::from_mask(n, mask);
        let d = g.odd_components(&x).d_x.mask();
        let mut sub = d;
        let mut extendable = false;
        while sub != 0 {
            if table[(mask | sub) as usize] {
                extendable = true;
                break;
            }
            sub = (sub - 1) & d;
        }
        if !extendable {
            out.push(x);
        }
    }
    Ok(out)
}

/// Gallai–Edmonds sets from per-vertex exposability: `D = {v : ν(G - v) = ν(G)}`.
pub fn brute_gallai_edmonds(g: &Graph) -> GallaiEdmonds {
    let n = g.n();
    let nu = nu_without(g, &[]);
    let d_set = VertexSet::from_vertices(n, (0..n).filter(|&v| nu_without(g, &[v]) == nu));
    let a_set = g.neighborhood(&d_set);
    let c_set = d_set.union(&a_set).complement();
    GallaiEdmonds { d_set, a_set, c_set }
}

/// End vertices reachable from `u` by alternating simple paths that start
/// with the matched edge at `u`: `(balanced, saturated)` where `balanced`
/// collects ends of even-length paths (including `u` itself) and `saturated`
/// ends of odd-length paths whose last edge is matched.
pub fn brute_alternating_ends(g: &Graph, m: &Matching, u: Vertex) -> (VertexSet, VertexSet) {
    let n = g.n();
    let mut balanced = VertexSet::new(n);
    let mut saturated = VertexSet::new(n);
    let mut on_path = vec![false; n];
    fn rec(
        g: &Graph,
        m: &Matching,
        v: Vertex,
        on_path: &mut Vec<bool>,
        balanced: &mut VertexSet,
        saturated: &mut VertexSet,
    ) {
        // `v` ends an even-length prefix; the next edge must be matched.
        balanced.insert(v);
        let Some(w) = m.mate(v) else { return };
        if on_path[w] {
            return;
        }
        on_path[w] = true;
        saturated.insert(w);
        for &x in g.neighbors(w) {
            if x != v && !on_path[x] {
                on_path[x] = true;
                rec(g, m, x, on_path, balanced, saturated);
                on_path[x] = false;
            }
        }
        on_path[w] = false;
    }
    on_path[u] = true;
    rec(g, m, u, &mut on_path, &mut balanced, &mut saturated);
    (balanced, saturated)
}

/// All connected graphs on `n` vertices up to isomorphism.
///
/// Every connected graph has a vertex whose removal leaves it connected, so
/// each one arises from a connected graph on `n - 1` vertices by adding a
/// vertex with a nonempty neighborhood; duplicates are removed by a
/// canonical form.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 10, "canonical enumeration is only meant for tiny graphs");
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    let mut level: BTreeSet<u64> = BTreeSet::new();
    level.insert(0);
    for k in 2..=n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let g = decode(k - 1, code);
            for nb in 1..1u64 << (k - 1) {
                let mut b = GraphBuilder::new(k);
                for (u, v) in g.edges() {
                    b.add_edge(u, v).unwrap();
                }
                for v in 0..k - 1 {
                    if nb >> v & 1 == 1 {
                        b.add_edge(v, k - 1).unwrap();
                    }
                }
                next.insert(canonical_code(&b.build()));
            }
        }
        level = next;
    }
    level.into_iter().map(|c| decode(n, c)).collect()
}

fn pair_bit(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = (u.min(v), u.max(v));
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

fn encode(n: usize, g: &Graph, perm: &[usize]) -> u64 {
    let mut code = 0u64;
    for (u, v) in g.edges() {
        code |= 1 << pair_bit(n, perm[u], perm[v]);
    }
    code
}

fn decode(n: usize, code: u64) -> Graph {
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if code >> pair_bit(n, u, v) & 1 == 1 {
                b.add_edge(u, v).unwrap();
            }
        }
    }
    b.build()
}

/// Stable color refinement; colors are ranks of isomorphism-invariant
/// signatures.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut s: Vec<usize> = g.neighbors(v).iter().map(|&w| color[w]).collect();
                s.sort_unstable();
                (color[v], s)
            })
            .collect();
        let mut distinct: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| distinct.binary_search(&s).unwrap()).collect();
        let before = color.iter().collect::<BTreeSet<_>>().len();
        if distinct.len() == before {
            return next;
        }
        color = next;
    }
}

/// Smallest edge code over all labelings that list vertices by refined color.
fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    let color = refine(g);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let k = color.iter().max().map_or(0, |&c| c + 1);
    for c in 0..k {
        let cell: Vec<usize> = (0..n).filter(|&v| color[v] == c).collect();
        if !cell.is_empty() {
            cells.push(cell);
        }
    }
    let mut best = u64::MAX;
    let mut perm = vec![0; n];
    fn place(
        g: &Graph,
        cells: &[Vec<usize>],
        cell: usize,
        used: &mut Vec<bool>,
        next_label: usize,
        perm: &mut Vec<usize>,
        best: &mut u64,
    ) {
        if cell == cells.len() {
            *best = (*best).min(encode(g.n(), g, perm));
            return;
        }
        let members = &cells[cell];
        let placed = members.iter().filter(|&&v| used[v]).count();
        if placed == members.len() {
            place(g, cells, cell + 1, used, next_label, perm, best);
            return;
        }
        for &v in members {
            if !used[v] {
                used[v] = true;
                perm[v] = next_label;
                place(g, cells, cell, used, next_label + 1, perm, best);
                used[v] = false;
            }
        }
    }
    place(g, &cells, 0, &mut vec![false; n], 0, &mut perm, &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    fn set(n: usize, vs: &[Vertex]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    #[test]
    fn perfect_matchings() {
        let pms = brute_perfect_matchings(&p4(), 14).unwrap();
        assert_eq!(pms.len(), 1);
        assert_eq!(pms[0].edges().collect::<Vec<_>>(), [(A, B), (C, D)]);
        assert_eq!(brute_perfect_matchings(&cycle(4), 14).unwrap().len(), 2);
        assert!(brute_perfect_matchings(&cycle(5), 14).unwrap().is_empty());
        assert_eq!(brute_perfect_matchings(&complete(6), 14).unwrap().len(), 15);
        assert!(brute_perfect_matchings(&cycle(16), 14).is_err());
    }

    #[test]
    fn maximal_barriers_need_not_extend_by_one_vertex() {
        // In K_{3,3}, {0} is a barrier and {0, 1} is not, but {0, 1, 2} is.
        let mut b = GraphBuilder::new(6);
        for u in 0..3 {
            for v in 3..6 {
                b.add_edge(u, v).unwrap();
            }
        }
        let g = b.build();
        assert_eq!(
            brute_maximal_barriers(&g, 14).unwrap(),
            [set(6, &[0, 1, 2]), set(6, &[3, 4, 5])]
        );
    }

    #[test]
    fn factor_components() {
        assert_eq!(
            brute_factor_components(&p4()).unwrap(),
            [set(4, &[A, B]), set(4, &[C, D])]
        );
        assert_eq!(
            brute_factor_components(&paw()).unwrap(),
            [set(4, &[A, D]), set(4, &[B, C])]
        );
        assert_eq!(brute_factor_components(&k2()).unwrap(), [set(2, &[0, 1])]);
        assert!(brute_factor_components(&path(3)).is_err());
    }

    #[test]
    fn canonical_partitions() {
        let p = brute_canonical_partition(&paw()).unwrap();
        assert_eq!(p.len(), 4);
        let p = brute_canonical_partition(&cycle(6)).unwrap();
        assert_eq!(p.classes(), [set(6, &[0, 2, 4]), set(6, &[1, 3, 5])]);
        let p = brute_canonical_partition(&k2()).unwrap();
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn posets() {
        let p = brute_poset(&paw()).unwrap();
        let (h1, h2) = (p.component_of(A), p.component_of(B));
        assert!(p.leq[h1][h2] && !p.leq[h2][h1]);
        let p = brute_poset(&p4()).unwrap();
        assert!(!p.leq[0][1] && !p.leq[1][0]);
        let p = brute_poset(&cycle(6)).unwrap();
        assert_eq!(p.leq, vec![vec![true]]);
    }

    #[test]
    fn barriers() {
        let b = brute_barriers(&cycle(6), 14).unwrap();
        assert!(b.contains(&set(6, &[0, 2, 4])) && b.contains(&set(6, &[1, 3, 5])));
        assert_eq!(
            brute_barriers(&k2(), 14).unwrap(),
            [set(2, &[]), set(2, &[0]), set(2, &[1])]
        );
        let b = brute_barriers(&k4(), 14).unwrap();
        assert_eq!(b.len(), 5);
        assert!(b.contains(&set(4, &[])));
    }

    #[test]
    fn definitional_odd_maximal() {
        let got = brute_odd_maximal_barriers(&paw(), 14).unwrap();
        assert!(got.contains(&set(4, &[A])));
        assert!(!got.contains(&set(4, &[B])));
    }

    #[test]
    fn matching_size_and_berge() {
        assert_eq!(brute_maximum_matching_size(&cycle(7)), 3);
        assert_eq!(brute_maximum_matching_size(&complete(5)), 2);
        assert_eq!(brute_berge_max(&path(3), 14).unwrap(), 1);
        assert_eq!(brute_berge_max(&p4(), 14).unwrap(), 0);
    }

    #[test]
    fn brute_ge_of_p5() {
        let ge = brute_gallai_edmonds(&path(5));
        assert_eq!(ge.d_set, set(5, &[0, 2, 4]));
        assert_eq!(ge.a_set, set(5, &[1, 3]));
    }

    #[test]
    fn alternating_ends_on_p4() {
        let g = p4();
        let m = Matching::from_edges(&g, [(A, B), (C, D)]).unwrap();
        let (bal, sat) = brute_alternating_ends(&g, &m, A);
        assert_eq!(bal, set(4, &[A, C]));
        assert_eq!(sat, set(4, &[B, D]));
        let (bal, sat) = brute_alternating_ends(&g, &m, C);
        assert_eq!(bal, set(4, &[C]));
        assert_eq!(sat, set(4, &[D]));
    }

    #[test]
    fn connected_graph_counts() {
        // OEIS A001349.
        let counts: Vec<usize> = (1..=7).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 6, 21, 112, 853]);
    }
}
