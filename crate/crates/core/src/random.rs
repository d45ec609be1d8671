//! Seeded random instances.

use alloc::format;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, VertexSet};

/// The generator every seeded entry point uses.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn max_edges(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn fill_edges<R: Rng>(b: &mut GraphBuilder, n: usize, m: usize, rng: &mut R) {
    while b.edge_count() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            b.add_edge(u, v).expect("ids in range");
        }
    }
}

/// A graph on `n` vertices and `m` edges that contains a perfect matching:
/// a uniformly random perfect matching plus `m - n/2` further random edges.
pub fn random_factorizable<R: Rng>(n: usize, m: usize, rng: &mut R) -> Result<Graph> {
    if n % 2 == 1 {
        return Err(Error::InvalidParameters(format!("n = {n} is odd")));
    }
    if m < n / 2 || m > max_edges(n) {
        return Err(Error::InvalidParameters(format!(
            "m = {m} outside [{}, {}] for n = {n}",
            n / 2,
            max_edges(n)
        )));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut b = GraphBuilder::new(n);
    for pair in order.chunks(2) {
        b.add_edge(pair[0], pair[1]).expect("ids in range");
    }
    fill_edges(&mut b, n, m, rng);
    Ok(b.build())
}

/// [`random_factorizable`] driven by a seeded ChaCha generator.
pub fn random_factorizable_seeded(n: usize, m: usize, seed: u64) -> Result<Graph> {
    random_factorizable(n, m, &mut rng_from_seed(seed))
}

/// A uniformly random simple graph with `n` vertices and `m` edges.
pub fn random_graph<R: Rng>(n: usize, m: usize, rng: &mut R) -> Result<Graph> {
    if m > max_edges(n) {
        return Err(Error::InvalidParameters(format!("m = {m} exceeds {}", max_edges(n))));
    }
    let mut b = GraphBuilder::new(n);
    fill_edges(&mut b, n, m, rng);
    Ok(b.build())
}

/// A bipartite graph with sides `0..half` and `half..2*half`, containing a
/// random perfect matching, with `m` edges in total. Returns the graph and
/// its first side.
pub fn random_bipartite_factorizable<R: Rng>(half: usize, m: usize, rng: &mut R) -> Result<(Graph, VertexSet)> {
    if m < half || m > half * half {
        return Err(Error::InvalidParameters(format!(
            "m = {m} outside [{half}, {}]",
            half * half
        )));
    }
    let mut right: Vec<usize> = (half..2 * half).collect();
    right.shuffle(rng);
    let mut b = GraphBuilder::new(2 * half);
    for (a, &r) in right.iter().enumerate() {
        b.add_edge(a, r).expect("ids in range");
    }
    while b.edge_count() < m {
        let a = rng.gen_range(0..half);
        let r = rng.gen_range(half..2 * half);
        b.add_edge(a, r).expect("ids in range");
    }
    Ok((b.build(), VertexSet::from_vertices(2 * half, 0..half)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::is_factorizable;

    #[test]
    fn factorizable_by_construction() {
        for seed in 0..20 {
            let g = random_factorizable_seeded(4, 3, seed).unwrap();
            assert_eq!((g.n(), g.m()), (4, 3));
            assert!(is_factorizable(&g));
        }
    }

    #[test]
    fn seeded_output_is_reproducible() {
        let a = random_factorizable_seeded(30, 60, 7).unwrap();
        let b = random_factorizable_seeded(30, 60, 7).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, random_factorizable_seeded(30, 60, 8).unwrap());
    }

    #[test]
    fn rejects_impossible_parameters() {
        assert!(random_factorizable_seeded(5, 4, 1).is_err());
        assert!(random_factorizable_seeded(4, 1, 1).is_err());
        assert!(random_factorizable_seeded(4, 7, 1).is_err());
    }

    #[test]
    fn bipartite_instances() {
        let mut rng = rng_from_seed(3);
        let (g, side) = random_bipartite_factorizable(5, 9, &mut rng).unwrap();
        assert_eq!(g.m(), 9);
        assert!(is_factorizable(&g));
        assert!(g.edges().all(|(u, v)| side.contains(u) != side.contains(v)));
    }
}
