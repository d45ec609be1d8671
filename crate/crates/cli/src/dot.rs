//! Graphviz output.

use std::fmt::Write as _;

use cathedral::{CathedralStructure, Graph, HxGraph, VertexSet};

const PALETTE: [&str; 8] = [
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5",
];

fn label(s: &VertexSet) -> String {
    let ids: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    ids.join(",")
}

/// The cathedral order as a DAG of its cover relation, one node per
/// factor-component labeled by its vertices.
pub fn condensation(s: &CathedralStructure) -> String {
    let mut out = String::from("digraph condensation {\n  node [shape=box];\n");
    for (i, c) in s.components().iter().enumerate() {
        writeln!(out, "  h{i} [label=\"H{i}: {}\"];", label(c)).unwrap();
    }
    for (i, j) in s.cover_edges() {
        writeln!(out, "  h{i} -> h{j};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// `g` with each class drawn as a filled cluster. Vertices outside every
/// class are drawn plainly.
pub fn partition(g: &Graph, classes: &[VertexSet], titles: &[String]) -> String {
    let mut out = String::from("graph partition {\n  node [shape=circle, style=filled, fillcolor=white];\n");
    for (i, c) in classes.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        writeln!(out, "  subgraph cluster_{i} {{").unwrap();
        writeln!(out, "    label=\"{}\";", titles[i]).unwrap();
        writeln!(out, "    style=filled; color=\"{color}\";").unwrap();
        for v in c {
            writeln!(out, "    {v} [fillcolor=\"{color}\"];").unwrap();
        }
        out.push_str("  }\n");
    }
    for v in 0..g.n() {
        if !classes.iter().any(|c| c.contains(v)) {
            writeln!(out, "  {v};").unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// The bipartite graph `H_X(G)`: barrier vertices on one rank, contracted odd
/// components on the other.
pub fn hx(h: &HxGraph) -> String {
    let g = h.graph();
    let mut out = String::from("graph hx {\n  rankdir=TB;\n");
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for v in 0..g.n() {
        if h.side_x().contains(v) {
            writeln!(out, "  v{v} [shape=circle, label=\"{}\"];", h.barrier_vertex(v)).unwrap();
            top.push(format!("v{v}"));
        } else {
            let comp = h
                .component_of_contracted(v)
                .expect("non-barrier vertex is a contracted component");
            writeln!(out, "  v{v} [shape=box, label=\"{}\"];", label(comp)).unwrap();
            bottom.push(format!("v{v}"));
        }
    }
    for side in [&top, &bottom] {
        if !side.is_empty() {
            writeln!(out, "  {{ rank=same; {}; }}", side.join("; ")).unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  v{u} -- v{v};").unwrap();
    }
    out.push_str("}\n");
    out
}
