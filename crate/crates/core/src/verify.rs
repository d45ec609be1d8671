//! Cross-validation of the production algorithms against the oracles.
//!
//! Each `check_*` function inspects one graph and returns the discrepancies it
//! found; an empty list means agreement. The instance generators produce the
//! exhaustive and randomized corpora the CLI `verify` command and the
//! acceptance suite run over.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::Rng;

use crate::barrier::{decompose_with_structure, enumerate_odd_maximal_barriers, general_graph_atoms};
use crate::cathedral::{algorithm1, CathedralStructure};
use crate::decomposition::{dm_decompose, gallai_edmonds};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::matching::{is_factorizable, maximum_matching};
use crate::oracle;
use crate::random::{random_bipartite_factorizable, random_factorizable, random_graph, rng_from_seed};

/// One disagreement between a production result and its oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub check: &'static str,
    pub graph: Graph,
    pub detail: String,
}

/// Function under test for the cathedral structure.
pub type StructureFn<'a> = &'a (dyn Fn(&Graph) -> Result<CathedralStructure> + Sync);

struct Log<'g> {
    graph: &'g Graph,
    found: Vec<Discrepancy>,
}

impl Log<'_> {
    fn fail(&mut self, check: &'static str, detail: String) {
        self.found.push(Discrepancy {
            check,
            graph: self.graph.clone(),
            detail,
        });
    }

    fn expect(&mut self, ok: bool, check: &'static str, detail: impl FnOnce() -> String) {
        if !ok {
            self.fail(check, detail());
        }
    }
}

fn sorted(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by_key(|s| s.to_vec());
    sets
}

/// Structure checks for a factorizable graph: partition, components, poset
/// and upper-bound assignment against the oracles, followed by the barrier
/// decomposition of every odd-maximal barrier.
pub fn check_factorizable(g: &Graph, algo: StructureFn<'_>) -> Vec<Discrepancy> {
    let mut log = Log {
        graph: g,
        found: Vec::new(),
    };
    let s = match algo(g) {
        Ok(s) => s,
        Err(e) => {
            log.fail("algorithm1", format!("{e}"));
            return log.found;
        }
    };
    check_structure(g, &s, &mut log);
    check_barriers(g, &s, &mut log);
    log.found
}

fn check_structure(g: &Graph, s: &CathedralStructure, log: &mut Log<'_>) {
    match oracle::brute_canonical_partition(g) {
        Ok(p) => log.expect(p.classes() == s.partition().classes(), "partition", || {
            format!("oracle {:?} vs algorithm {:?}", p.classes(), s.partition().classes())
        }),
        Err(e) => log.fail("partition", format!("oracle failed: {e}")),
    }
    let brute = match oracle::brute_poset(g) {
        Ok(p) => p,
        Err(e) => return log.fail("poset", format!("oracle failed: {e}")),
    };
    let ours = sorted(s.components().to_vec());
    log.expect(sorted(brute.components.clone()) == ours, "components", || {
        format!("oracle {:?} vs algorithm {:?}", brute.components, s.components())
    });
    if log.found.iter().any(|d| d.check == "components") {
        return;
    }
    let id: Vec<usize> = brute
        .components
        .iter()
        .map(|c| s.component_of(c.first().unwrap()))
        .collect();
    for i in 0..brute.components.len() {
        for j in 0..brute.components.len() {
            log.expect(brute.leq[i][j] == s.leq(id[i], id[j]), "poset", || {
                format!(
                    "{:?} <= {:?}: oracle {} vs algorithm {}",
                    brute.components[i], brute.components[j], brute.leq[i][j], !brute.leq[i][j]
                )
            });
        }
    }
    // Arcs of the auxiliary digraph point upwards in the order.
    for (x, y) in s.aux().arcs() {
        let (cx, cy) = (brute.component_of(x), brute.component_of(y));
        log.expect(brute.leq[cx][cy], "aux-arc", || {
            format!("arc ({x}, {y}) goes against the order")
        });
    }
    for h in 0..s.components().len() {
        let up = s.upstar_vertices(h);
        let (sub, relabel) = g.induced_subgraph(&up);
        let block = VertexSet::from_vertices(sub.n(), s.components()[h].iter().filter_map(|v| relabel.new_id(v)));
        let (contracted, _) = sub.contract(&[block]).unwrap();
        log.expect(
            oracle::brute_is_factor_critical(&contracted),
            "upper-bounds-critical",
            || format!("G[upstar(H{h})]/H{h} is not factor-critical"),
        );
        // The assigned upper bounds of the classes of H split the strict upper bounds.
        let mut seen = VertexSet::new(s.components().len());
        let mut disjoint = true;
        for c in s.classes_of_component(h) {
            for &j in s.class_upset(c) {
                disjoint &= seen.insert(j);
            }
        }
        let mut strict = s.poset().upper(h).clone();
        strict.remove(h);
        log.expect(disjoint && seen == strict, "class-upsets", || {
            format!(
                "class upsets of H{h} cover {:?}, strict upper bounds {:?}",
                seen, strict
            )
        });
    }
    for (c, class) in s.partition().classes().iter().enumerate() {
        let up = s.class_upstar_vertices(c);
        let (sub, relabel) = g.induced_subgraph(&up);
        let block = VertexSet::from_vertices(sub.n(), class.iter().filter_map(|v| relabel.new_id(v)));
        let (contracted, _) = sub.contract(&[block]).unwrap();
        log.expect(
            oracle::brute_is_factor_critical(&contracted),
            "class-upset-critical",
            || format!("G[class_upstar({class:?})]/S is not factor-critical"),
        );
    }
}

/// For every odd-maximal barrier `X`: `X` is a union of canonical classes and
/// `D_X` is the union over those classes `S` of the upper vertices of `S`'s
/// component not assigned to `S`.
pub fn barrier_splits_into_classes(s: &CathedralStructure, x: &VertexSet, d_x: &VertexSet) -> bool {
    let mut classes = Vec::new();
    for v in x {
        let c = s.partition().class_of(v);
        if !classes.contains(&c) {
            classes.push(c);
        }
    }
    if classes.iter().any(|&c| !s.partition().classes()[c].is_subset(x)) {
        return false;
    }
    let mut predicted = VertexSet::new(x.universe());
    for &c in &classes {
        let part = s
            .upstar_vertices(s.class_component(c))
            .difference(&s.class_upstar_vertices(c));
        if !predicted.is_disjoint(&part) {
            return false;
        }
        predicted.union_with(&part);
    }
    &predicted == d_x
}

fn check_barriers(g: &Graph, s: &CathedralStructure, log: &mut Log<'_>) {
    let Ok(odd_maximal) = enumerate_odd_maximal_barriers(g, oracle::DEFAULT_CAP) else {
        return;
    };
    match oracle::brute_odd_maximal_barriers(g, oracle::DEFAULT_CAP) {
        Ok(brute) => log.expect(brute == odd_maximal, "odd-maximal-definition", || {
            format!("definition {:?} vs factor-critical criterion {:?}", brute, odd_maximal)
        }),
        Err(e) => log.fail("odd-maximal-definition", format!("{e}")),
    }
    for x in &odd_maximal {
        let d_x = g.odd_components(x).d_x;
        log.expect(barrier_splits_into_classes(s, x, &d_x), "barrier-classes", || {
            format!("X = {:?}, D_X = {:?}", x, d_x)
        });
        if let Err(e) = decompose_with_structure(g, x, s) {
            log.fail("barrier-decomposition", format!("X = {x:?}: {e}"));
        }
    }
    if s.is_elementary() {
        match oracle::brute_maximal_barriers(g, oracle::DEFAULT_CAP) {
            Ok(maximal) => {
                log.expect(
                    sorted(maximal.clone()) == sorted(s.partition().classes().to_vec()),
                    "elementary-partition",
                    || {
                        format!(
                            "maximal barriers {:?} vs classes {:?}",
                            maximal,
                            s.partition().classes()
                        )
                    },
                );
                // The empty set is vacuously odd-maximal but never maximal.
                let nonempty: Vec<VertexSet> = odd_maximal.iter().filter(|x| !x.is_empty()).cloned().collect();
                log.expect(maximal == nonempty, "elementary-odd-maximal", || {
                    format!("maximal {:?} vs odd-maximal {:?}", maximal, nonempty)
                });
            }
            Err(e) => log.fail("elementary-partition", format!("{e}")),
        }
    }
}

/// Checks that hold for any graph: blossom size against brute force and the
/// Berge formula, Gallai–Edmonds sets against per-vertex exposability, the
/// intersection of odd-maximal barriers, and the reduction of odd-maximal
/// barriers to the factorizable core `G[C(G)]`.
pub fn check_general(g: &Graph) -> Vec<Discrepancy> {
    let mut log = Log {
        graph: g,
        found: Vec::new(),
    };
    let n = g.n();
    let m = maximum_matching(g);
    log.expect(m.is_valid_for(g), "matching-valid", || format!("{m:?}"));
    let nu = m.size();
    if n <= 10 {
        let brute = oracle::brute_maximum_matching_size(g);
        log.expect(brute == nu, "matching-size", || {
            format!("brute {brute} vs blossom {nu}")
        });
    }
    match oracle::brute_berge_max(g, oracle::DEFAULT_CAP) {
        Ok(best) => log.expect(best == (n - 2 * nu) as isize, "berge", || {
            format!("max q(X)-|X| = {best}, n - 2nu = {}", n - 2 * nu)
        }),
        Err(e) => log.fail("berge", format!("{e}")),
    }
    let ge = gallai_edmonds(g);
    let brute_ge = oracle::brute_gallai_edmonds(g);
    log.expect(ge == brute_ge, "gallai-edmonds", || {
        format!("{ge:?} vs oracle {brute_ge:?}")
    });

    let Ok(odd_maximal) = enumerate_odd_maximal_barriers(g, oracle::DEFAULT_CAP) else {
        return log.found;
    };
    let mut meet = VertexSet::full(n);
    for x in &odd_maximal {
        meet.intersect_with(x);
    }
    log.expect(!odd_maximal.is_empty() && meet == ge.a_set, "intersection", || {
        format!("intersection {:?} vs A(G) {:?}", meet, ge.a_set)
    });

    // Odd-maximal barriers of G are exactly A(G) plus those of G[C(G)].
    let (core, relabel) = g.induced_subgraph(&ge.c_set);
    match enumerate_odd_maximal_barriers(&core, oracle::DEFAULT_CAP) {
        Ok(core_barriers) => {
            let lifted: Vec<VertexSet> = core_barriers.iter().map(|y| relabel.lift(y).union(&ge.a_set)).collect();
            log.expect(sorted(lifted) == sorted(odd_maximal.clone()), "reduction", || {
                format!("lifted core barriers differ from {:?}", odd_maximal)
            });
        }
        Err(e) => log.fail("reduction", format!("{e}")),
    }
    match general_graph_atoms(g) {
        Ok(atoms) => {
            for x in &odd_maximal {
                let rest = x.difference(&atoms.a_set);
                let union_of_atoms = atoms.a_set.is_subset(x)
                    && rest
                        .iter()
                        .all(|v| atoms.classes.iter().any(|c| c.contains(v) && c.is_subset(&rest)));
                log.expect(union_of_atoms, "atoms", || format!("{x:?} is not a union of atoms"));
            }
        }
        Err(e) => log.fail("atoms", format!("{e}")),
    }
    log.found
}

/// DM reachability on a bipartite factorizable graph: for `u` in side `A`,
/// exhaustive alternating-path search must find an `M`-balanced path to
/// `v ∈ A` and an `M`-saturated path to `w ∈ B` exactly when the component of
/// `u` is below the target's component.
pub fn check_dm(g: &Graph, side_a: &VertexSet) -> Vec<Discrepancy> {
    let mut log = Log {
        graph: g,
        found: Vec::new(),
    };
    let d = match dm_decompose(g, side_a) {
        Ok(d) => d,
        Err(e) => {
            log.fail("dm", format!("{e}"));
            return log.found;
        }
    };
    match oracle::brute_factor_components(g) {
        Ok(comps) => log.expect(
            sorted(comps.clone()) == sorted(d.components().to_vec()),
            "dm-components",
            || format!("oracle {:?} vs DM {:?}", comps, d.components()),
        ),
        Err(e) => log.fail("dm-components", format!("{e}")),
    }
    let m = maximum_matching(g);
    for u in side_a {
        let (balanced, saturated) = oracle::brute_alternating_ends(g, &m, u);
        let cu = d.component_of(u);
        for t in 0..g.n() {
            let expected = d.leq(cu, d.component_of(t));
            let found = if side_a.contains(t) {
                balanced.contains(t)
            } else {
                saturated.contains(t)
            };
            log.expect(found == expected, "dm-reachability", || {
                format!("u = {u}, target = {t}: path {found}, order {expected}")
            });
        }
    }
    log.found
}

/// Runs every applicable check on one graph.
pub fn check_instance(g: &Graph, algo: StructureFn<'_>) -> Vec<Discrepancy> {
    let mut found = check_general(g);
    if is_factorizable(g) {
        found.extend(check_factorizable(g, algo));
    }
    found
}

/// The production [`algorithm1`] as a [`StructureFn`].
pub fn production(g: &Graph) -> Result<CathedralStructure> {
    algorithm1(g)
}

/// All connected graphs with `2 <= n <= max_n` vertices, up to isomorphism.
pub fn exhaustive_instances(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(oracle::connected_graphs).collect()
}

/// Connected factorizable graphs among [`exhaustive_instances`].
pub fn exhaustive_factorizable(max_n: usize) -> Vec<Graph> {
    (2..=max_n)
        .step_by(2)
        .flat_map(oracle::connected_graphs)
        .filter(is_factorizable)
        .collect()
}

/// Seeded random factorizable graphs with `n <= max_n` (even) and
/// `n/2 <= m <= max_m` edges.
pub fn random_factorizable_instances(samples: usize, max_n: usize, max_m: usize, seed: u64) -> Vec<Graph> {
    let mut rng = rng_from_seed(seed);
    (0..samples)
        .map(|_| {
            let n = 2 * rng.gen_range(1..=max_n / 2);
            let hi = max_m.min(n * (n - 1) / 2).max(n / 2);
            let m = rng.gen_range(n / 2..=hi);
            random_factorizable(n, m, &mut rng).expect("parameters in range")
        })
        .collect()
}

/// Seeded random graphs, factorizable or not, with `1 <= n <= max_n`.
pub fn random_general_instances(samples: usize, max_n: usize, max_m: usize, seed: u64) -> Vec<Graph> {
    let mut rng = rng_from_seed(seed);
    (0..samples)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let m = rng.gen_range(0..=max_m.min(n * (n - 1) / 2));
            random_graph(n, m, &mut rng).expect("parameters in range")
        })
        .collect()
}

/// Seeded random bipartite factorizable graphs with `2 <= n <= max_n`.
pub fn random_bipartite_instances(samples: usize, max_n: usize, seed: u64) -> Vec<(Graph, VertexSet)> {
    let mut rng = rng_from_seed(seed);
    (0..samples)
        .map(|_| {
            let half = rng.gen_range(1..=max_n / 2);
            let m = rng.gen_range(half..=half * half);
            random_bipartite_factorizable(half, m, &mut rng).expect("parameters in range")
        })
        .collect()
}

/// Summary of a verification run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub graphs_checked: usize,
    pub factorizable_checked: usize,
    pub discrepancies: Vec<Discrepancy>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty()
    }

    pub fn absorb(&mut self, g: &Graph, found: Vec<Discrepancy>) {
        self.graphs_checked += 1;
        if is_factorizable(g) {
            self.factorizable_checked += 1;
        }
        self.discrepancies.extend(found);
    }
}

/// Sequential verification over the exhaustive corpus up to `max_n` and
/// `samples` random factorizable plus `samples` random general graphs.
pub fn run(max_n: usize, samples: usize, seed: u64, algo: StructureFn<'_>) -> VerifyReport {
    let mut report = VerifyReport::default();
    let mut corpus = exhaustive_instances(max_n);
    corpus.extend(random_factorizable_instances(samples, 12, 30, seed));
    corpus.extend(random_general_instances(samples, 12, 30, seed.wrapping_add(1)));
    for g in &corpus {
        let found = check_instance(g, algo);
        report.absorb(g, found);
    }
    report
}
