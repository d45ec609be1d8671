//! Parallel verification runs over the exhaustive and random corpora.

use std::fmt::Write as _;

use rayon::prelude::*;

use cathedral::verify::{self, Discrepancy, StructureFn, VerifyReport};
use cathedral::Graph;

use crate::formats::write_edge_list;

/// Largest vertex count of the random corpora.
pub const RANDOM_MAX_N: usize = 12;
/// Largest edge count of the random corpora.
pub const RANDOM_MAX_M: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_n: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_n: 8,
            samples: 1000,
            seed: 0,
        }
    }
}

/// Runs every check on all connected graphs up to `max_n` vertices and on
/// `samples` random factorizable, general and bipartite graphs each.
/// Results are in corpus order regardless of scheduling.
pub fn run(opts: VerifyOptions, algo: StructureFn<'_>) -> VerifyReport {
    let mut corpus = verify::exhaustive_instances(opts.max_n);
    corpus.extend(verify::random_factorizable_instances(
        opts.samples,
        RANDOM_MAX_N,
        RANDOM_MAX_M,
        opts.seed,
    ));
    corpus.extend(verify::random_general_instances(
        opts.samples,
        RANDOM_MAX_N,
        RANDOM_MAX_M,
        opts.seed.wrapping_add(1),
    ));
    let bipartite = verify::random_bipartite_instances(opts.samples, RANDOM_MAX_N, opts.seed.wrapping_add(2));

    let mut results: Vec<(Graph, Vec<Discrepancy>)> = corpus
        .into_par_iter()
        .map(|g| {
            let found = verify::check_instance(&g, algo);
            (g, found)
        })
        .collect();
    results.extend(
        bipartite
            .into_par_iter()
            .map(|(g, side)| {
                let found = verify::check_dm(&g, &side);
                (g, found)
            })
            .collect::<Vec<_>>(),
    );

    let mut report = VerifyReport::default();
    for (g, found) in results {
        report.absorb(&g, found);
    }
    report
}

/// Summary line, then up to `max_witnesses` discrepancies with their graphs
/// in edge-list form.
pub fn render(report: &VerifyReport, max_witnesses: usize) -> String {
    let mut out = String::new();
    let verdict = if report.passed() { "PASS" } else { "FAIL" };
    writeln!(
        out,
        "{verdict}, {} discrepancies ({} graphs checked, {} factorizable)",
        report.discrepancies.len(),
        report.graphs_checked,
        report.factorizable_checked
    )
    .unwrap();
    for d in report.discrepancies.iter().take(max_witnesses) {
        writeln!(out, "[{}] {}", d.check, d.detail).unwrap();
        out.push_str("witness:\n");
        out.push_str(&write_edge_list(&d.graph));
    }
    if report.discrepancies.len() > max_witnesses {
        writeln!(out, "... {} more", report.discrepancies.len() - max_witnesses).unwrap();
    }
    out
}
