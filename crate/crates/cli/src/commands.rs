//! The subcommands as text-in, text-out functions.

use cathedral::random::random_factorizable_seeded;
use cathedral::{algorithm1, build_hx, general_graph_atoms, is_factorizable, Graph, VertexSet};

use crate::error::CliError;
use crate::formats::{self, parse_vertex_list, Format};
use crate::report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum DotTarget {
    Condensation,
    Partition,
    Hx,
}

fn barrier_ids(g: &Graph, barrier: Option<&str>) -> Result<Option<Vec<usize>>, CliError> {
    barrier.map(|b| parse_vertex_list(b, g.n())).transpose()
}

pub fn analyze(input: &str, format: Format, json: bool, barrier: Option<&str>) -> Result<String, CliError> {
    let g = formats::parse(input, format)?;
    let x = barrier_ids(&g, barrier)?;
    let r = report::analyze(&g, x.as_deref())?;
    Ok(if json { report::to_json(&r) } else { report::to_text(&r) })
}

pub fn random(n: usize, m: usize, seed: u64, format: Format) -> Result<String, CliError> {
    let g = random_factorizable_seeded(n, m, seed)?;
    Ok(formats::write(&g, format))
}

pub fn export_dot(input: &str, format: Format, target: DotTarget, barrier: Option<&str>) -> Result<String, CliError> {
    let g = formats::parse(input, format)?;
    let x = barrier_ids(&g, barrier)?;
    match target {
        DotTarget::Condensation => {
            if !is_factorizable(&g) {
                return Err(CliError::Precondition(
                    "the cathedral order needs a factorizable graph".into(),
                ));
            }
            Ok(crate::dot::condensation(&algorithm1(&g)?))
        }
        DotTarget::Partition => {
            if is_factorizable(&g) {
                let s = algorithm1(&g)?;
                let titles = (0..s.partition().len()).map(|i| format!("S{i}")).collect::<Vec<_>>();
                Ok(crate::dot::partition(&g, s.partition().classes(), &titles))
            } else {
                let atoms = general_graph_atoms(&g)?;
                let mut classes = vec![atoms.a_set.clone()];
                classes.extend(atoms.classes.iter().cloned());
                let mut titles = vec!["A(G)".to_string()];
                titles.extend((0..atoms.classes.len()).map(|i| format!("S{i}")));
                Ok(crate::dot::partition(&g, &classes, &titles))
            }
        }
        DotTarget::Hx => {
            let x = x.ok_or_else(|| CliError::Usage("the hx target requires --barrier".into()))?;
            let x = VertexSet::from_vertices(g.n(), x);
            Ok(crate::dot::hx(&build_hx(&g, &x)?))
        }
    }
}
