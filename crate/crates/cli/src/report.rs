//! The analysis report behind `cathedral analyze`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use cathedral::barrier::decompose_with_structure;
use cathedral::{
    algorithm1, barrier_report, gallai_edmonds, general_graph_atoms, maximum_matching, CathedralStructure, Graph,
    VertexSet,
};

use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

pub const NOT_FACTORIZABLE_NOTE: &str = "not factorizable; atoms = A(G) ∪ P(G[C])";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub n: usize,
    pub m: usize,
    pub nu: usize,
    pub matching: Vec<[usize; 2]>,
    pub factorizable: bool,
    pub gallai_edmonds: GallaiEdmondsSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure: Option<StructureSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub atoms: Option<AtomsSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub barrier: Option<BarrierSection>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GallaiEdmondsSection {
    pub d: Vec<usize>,
    pub a: Vec<usize>,
    pub c: Vec<usize>,
}

/// Canonical partition and cathedral order of a factorizable graph.
/// Components and classes are indexed as listed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureSection {
    pub elementary: bool,
    pub components: Vec<Vec<usize>>,
    pub partition: Vec<Vec<usize>>,
    /// Component holding each class.
    pub class_component: Vec<usize>,
    pub poset_cover_edges: Vec<[usize; 2]>,
    /// Strict upper bounds of a class's component assigned to that class.
    pub class_upsets: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomsSection {
    pub note: String,
    pub a_set: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BarrierSection {
    pub x: Vec<usize>,
    pub is_barrier: bool,
    pub is_odd_maximal: bool,
    pub q: usize,
    pub surplus: i64,
    pub deficiency: usize,
    pub odd_components: Vec<Vec<usize>>,
    pub d_x: Vec<usize>,
    pub c_x: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<Vec<BarrierPartSection>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BarrierPartSection {
    pub class: Vec<usize>,
    pub class_id: usize,
    pub component: usize,
    pub expansion: Vec<usize>,
    pub odd_part: Vec<usize>,
}

fn ids(s: &VertexSet) -> Vec<usize> {
    s.to_vec()
}

fn all_ids(sets: &[VertexSet]) -> Vec<Vec<usize>> {
    sets.iter().map(ids).collect()
}

fn structure_section(s: &CathedralStructure) -> StructureSection {
    let classes = s.partition().classes();
    StructureSection {
        elementary: s.is_elementary(),
        components: all_ids(s.components()),
        partition: all_ids(classes),
        class_component: (0..classes.len()).map(|c| s.class_component(c)).collect(),
        poset_cover_edges: s.cover_edges().into_iter().map(|(i, j)| [i, j]).collect(),
        class_upsets: (0..classes.len()).map(|c| s.class_upset(c).to_vec()).collect(),
    }
}

fn barrier_section(g: &Graph, x: &VertexSet, s: Option<&CathedralStructure>) -> Result<BarrierSection, CliError> {
    let r = barrier_report(g, x)?;
    let (decomposition, note) = match (r.is_barrier, r.is_odd_maximal, s) {
        (false, _, _) => (None, Some("not a barrier".to_string())),
        (true, false, _) => (None, Some("barrier is not odd-maximal".to_string())),
        (true, true, None) => (
            None,
            Some("graph is not factorizable; no class decomposition".to_string()),
        ),
        (true, true, Some(s)) => {
            let d = decompose_with_structure(g, x, s)?;
            let parts = d
                .parts
                .iter()
                .map(|p| BarrierPartSection {
                    class: ids(&p.class),
                    class_id: p.class_id,
                    component: p.component,
                    expansion: ids(&p.expansion),
                    odd_part: ids(&p.odd_part),
                })
                .collect();
            (Some(parts), None)
        }
    };
    Ok(BarrierSection {
        x: ids(&r.x),
        is_barrier: r.is_barrier,
        is_odd_maximal: r.is_odd_maximal,
        q: r.q(),
        surplus: r.surplus as i64,
        deficiency: r.deficiency,
        odd_components: all_ids(&r.odd_components),
        d_x: ids(&r.d_x),
        c_x: ids(&r.c_x),
        decomposition,
        note,
    })
}

/// Full analysis of `g`, with a barrier section when `barrier` is given.
/// Non-factorizable graphs get the atom decomposition instead of the
/// cathedral structure.
pub fn analyze(g: &Graph, barrier: Option<&[usize]>) -> Result<AnalysisReport, CliError> {
    let m = maximum_matching(g);
    let ge = gallai_edmonds(g);
    let factorizable = m.is_perfect();
    let structure = if factorizable { Some(algorithm1(g)?) } else { None };
    let atoms = if factorizable {
        None
    } else {
        let a = general_graph_atoms(g)?;
        Some(AtomsSection {
            note: NOT_FACTORIZABLE_NOTE.to_string(),
            a_set: ids(&a.a_set),
            classes: all_ids(&a.classes),
        })
    };
    let barrier = match barrier {
        Some(vs) => {
            let x = VertexSet::try_from_vertices(g.n(), vs.iter().copied())?;
            Some(barrier_section(g, &x, structure.as_ref())?)
        }
        None => None,
    };
    Ok(AnalysisReport {
        schema: SCHEMA_VERSION,
        n: g.n(),
        m: g.m(),
        nu: m.size(),
        matching: m.edges().map(|(u, v)| [u, v]).collect(),
        factorizable,
        gallai_edmonds: GallaiEdmondsSection {
            d: ids(&ge.d_set),
            a: ids(&ge.a_set),
            c: ids(&ge.c_set),
        },
        structure: structure.as_ref().map(structure_section),
        atoms,
        barrier,
    })
}

pub fn to_json(r: &AnalysisReport) -> String {
    let mut s = serde_json::to_string_pretty(r).expect("report serializes");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> serde_json::Result<AnalysisReport> {
    serde_json::from_str(text)
}

fn list(v: &[usize]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", inner.join(", "))
}

/// Human-readable rendering; the JSON form is the stable interface.
pub fn to_text(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let w = &mut out;
    writeln!(w, "graph: n = {}, m = {}", r.n, r.m).unwrap();
    writeln!(
        w,
        "maximum matching: {} edges{}",
        r.nu,
        if r.factorizable { " (perfect)" } else { "" }
    )
    .unwrap();
    let ge = &r.gallai_edmonds;
    writeln!(
        w,
        "Gallai-Edmonds: D = {}, A = {}, C = {}",
        list(&ge.d),
        list(&ge.a),
        list(&ge.c)
    )
    .unwrap();
    if let Some(s) = &r.structure {
        writeln!(
            w,
            "factor-components: {}{}",
            s.components.len(),
            if s.elementary { " (elementary)" } else { "" }
        )
        .unwrap();
        for (i, c) in s.components.iter().enumerate() {
            writeln!(w, "  H{i} = {}", list(c)).unwrap();
        }
        writeln!(w, "canonical partition:").unwrap();
        for (i, c) in s.partition.iter().enumerate() {
            let up: Vec<String> = s.class_upsets[i].iter().map(|h| format!("H{h}")).collect();
            writeln!(
                w,
                "  S{i} = {} in H{}, upper bounds [{}]",
                list(c),
                s.class_component[i],
                up.join(", ")
            )
            .unwrap();
        }
        let covers: Vec<String> = s
            .poset_cover_edges
            .iter()
            .map(|[i, j]| format!("H{i} < H{j}"))
            .collect();
        writeln!(
            w,
            "order covers: {}",
            if covers.is_empty() {
                "none".to_string()
            } else {
                covers.join(", ")
            }
        )
        .unwrap();
    }
    if let Some(a) = &r.atoms {
        writeln!(w, "note: {}", a.note).unwrap();
        writeln!(w, "A(G) = {}", list(&a.a_set)).unwrap();
        let cls: Vec<String> = a.classes.iter().map(|c| list(c)).collect();
        writeln!(w, "classes of G[C]: {}", cls.join(" ")).unwrap();
    }
    if let Some(b) = &r.barrier {
        writeln!(
            w,
            "X = {}: barrier {}, odd-maximal {}, q = {}, D_X = {}, C_X = {}",
            list(&b.x),
            b.is_barrier,
            b.is_odd_maximal,
            b.q,
            list(&b.d_x),
            list(&b.c_x)
        )
        .unwrap();
        for p in b.decomposition.iter().flatten() {
            writeln!(
                w,
                "  S{} = {} in H{}: expansion {}, odd part {}",
                p.class_id,
                list(&p.class),
                p.component,
                list(&p.expansion),
                list(&p.odd_part)
            )
            .unwrap();
        }
        if let Some(note) = &b.note {
            writeln!(w, "  note: {note}").unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use cathedral::fixtures::{self, A, B, C, D};

    #[test]
    fn paw_report() {
        let r = analyze(&fixtures::paw(), None).unwrap();
        let s = r.structure.as_ref().unwrap();
        assert_eq!(s.components, [vec![A, D], vec![B, C]]);
        assert_eq!(s.poset_cover_edges, [[0, 1]]);
        assert_eq!(s.class_upsets[A], [1]);
        assert!(s.class_upsets[D].is_empty());
        assert!(r.atoms.is_none());
    }

    #[test]
    fn p3_falls_back_to_atoms() {
        let r = analyze(&fixtures::path(3), None).unwrap();
        assert!(!r.factorizable && r.structure.is_none());
        assert_eq!(
            (r.gallai_edmonds.d.clone(), r.gallai_edmonds.a.clone()),
            (vec![0, 2], vec![1])
        );
        assert_eq!(r.atoms.unwrap().note, NOT_FACTORIZABLE_NOTE);
    }

    #[test]
    fn empty_graph_is_trivial() {
        let r = analyze(&Graph::empty(0), None).unwrap();
        assert_eq!((r.n, r.nu), (0, 0));
        assert!(r.factorizable);
        assert!(r.structure.unwrap().components.is_empty());
    }

    #[test]
    fn barrier_sections() {
        let g = fixtures::paw();
        let r = analyze(&g, Some(&[A, B])).unwrap();
        let b = r.barrier.unwrap();
        let parts = b.decomposition.unwrap();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|p| p.odd_part.len() == 1));
        let b = analyze(&g, Some(&[B])).unwrap().barrier.unwrap();
        assert!(b.is_barrier && !b.is_odd_maximal && b.decomposition.is_none());
        let b = analyze(&g, Some(&[B, C])).unwrap().barrier.unwrap();
        assert!(!b.is_barrier);
    }

    #[test]
    fn json_round_trips() {
        for g in [fixtures::paw(), fixtures::path(5), fixtures::cycle(6), Graph::empty(0)] {
            let r = analyze(&g, Some(&[0])).unwrap_or_else(|_| analyze(&g, None).unwrap());
            let text = to_json(&r);
            assert!(text.contains("\"schema\": 1"));
            assert_eq!(from_json(&text).unwrap(), r);
        }
    }

    #[test]
    fn text_mentions_the_pieces() {
        let t = to_text(&analyze(&fixtures::paw(), Some(&[A])).unwrap());
        assert!(t.contains("H0 < H1"), "{t}");
        assert!(t.contains("odd-maximal true"), "{t}");
    }
}
