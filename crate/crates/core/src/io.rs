//! Poset JSON files and Graphviz export.
//!
//! A poset file is `{"n": N, "covers": [[i, j], …], "names": […], "realizer":
//! {"ext1": […], "ext2": […]}}` where `names` and `realizer` are optional.
//! Readers accept any acyclic pair list and close it; writers emit the
//! transitive reduction in lexicographic order, compactly on one line, so a
//! file written by [`write_poset`] reads back and writes out byte for byte.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::graphdual::Realizer;
use crate::{Error, Poset, Result};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PosetFile {
    n: usize,
    covers: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    realizer: Option<Realizer>,
}

/// Parses a poset file, relabelling into topological order.
///
/// Names and the realizer, if present, follow their elements to the new labels.
pub fn read_poset(json: &str) -> Result<(Poset, Option<Realizer>)> {
    let file: PosetFile = serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
    let covers: Vec<(usize, usize)> = file.covers.iter().map(|&[a, b]| (a, b)).collect();
    let (mut p, map) = Poset::from_covers(file.n, &covers)?;
    if let Some(names) = file.names {
        if names.len() != file.n {
            return Err(Error::NameCount {
                expected: file.n,
                got: names.len(),
            });
        }
        let mut relabelled = vec![String::new(); file.n];
        for (old, name) in names.into_iter().enumerate() {
            relabelled[map[old]] = name;
        }
        p = p.with_names(relabelled)?;
    }
    let realizer = match file.realizer {
        Some(r) => {
            if r.ext1.iter().chain(&r.ext2).any(|&x| x >= file.n) {
                return Err(Error::InvalidRealizer("element out of range".into()));
            }
            Some(r.relabel(&map))
        }
        None => None,
    };
    Ok((p, realizer))
}

pub fn write_poset(p: &Poset, realizer: Option<&Realizer>) -> String {
    let file = PosetFile {
        n: p.n(),
        covers: p
            .cover_relations()
            .into_iter()
            .map(|(a, b)| [a, b])
            .collect(),
        names: p.names().map(<[String]>::to_vec),
        realizer: realizer.cloned(),
    };
    let mut out = serde_json::to_string(&file).expect("poset files always serialize");
    out.push('\n');
    out
}

/// Graphviz digraph of the cover relations, drawn bottom to top, with
/// rank classes on common rows when the poset is ranked.
pub fn export_dot(p: &Poset) -> String {
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n");
    for x in 0..p.n() {
        let label = p.name(x).replace('\\', "\\\\").replace('"', "\\\"");
        writeln!(out, "  {x} [label=\"{label}\"];").unwrap();
    }
    if let Some(ranks) = p.ranks() {
        for class in ranks.iter().filter(|c| c.len() > 1) {
            let members: Vec<String> = class.iter().map(usize::to_string).collect();
            writeln!(out, "  {{ rank=same; {}; }}", members.join("; ")).unwrap();
        }
    }
    for (a, b) in p.cover_relations() {
        writeln!(out, "  {a} -> {b};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::build_pj;
    use crate::graphdual::pj_realizer;

    fn edges(dot: &str) -> usize {
        dot.lines().filter(|l| l.contains("->")).count()
    }

    #[test]
    fn dot_edges() {
        assert_eq!(edges(&export_dot(&Poset::chain(3))), 2);
        assert_eq!(edges(&export_dot(&Poset::antichain(2))), 0);
        let dot = export_dot(&build_pj(1).0);
        assert_eq!(edges(&dot), 2);
        for name in ["\"u\"", "\"s1\"", "\"r1\""] {
            assert!(dot.contains(name));
        }
    }

    #[test]
    fn canonical_round_trip() {
        let (p, _) = build_pj(3);
        let text = write_poset(&p, Some(&pj_realizer(3)));
        let (q, r) = read_poset(&text).unwrap();
        assert_eq!(q, p);
        assert_eq!(write_poset(&q, r.as_ref()), text);
    }

    #[test]
    fn reads_unsorted_labels() {
        let (p, r) = read_poset(
            r#"{"n":3,"covers":[[2,1],[1,0]],"names":["top","mid","bot"],
                "realizer":{"ext1":[2,1,0],"ext2":[2,1,0]}}"#,
        )
        .unwrap();
        assert_eq!(p.names().unwrap(), &["bot", "mid", "top"]);
        assert_eq!(r.unwrap().ext1, vec![0, 1, 2]);
        assert_eq!(
            write_poset(&p, None),
            "{\"n\":3,\"covers\":[[0,1],[1,2]],\"names\":[\"bot\",\"mid\",\"top\"]}\n"
        );
    }

    #[test]
    fn rejects_bad_files() {
        assert!(matches!(read_poset("{"), Err(Error::Parse(_))));
        assert!(matches!(
            read_poset(r#"{"n":2,"covers":[[0,1],[1,0]]}"#),
            Err(Error::CycleDetected)
        ));
        assert!(matches!(
            read_poset(r#"{"n":2,"covers":[],"names":["a"]}"#),
            Err(Error::NameCount { .. })
        ));
        assert!(read_poset(r#"{"n":2,"covers":[],"extra":1}"#).is_err());
    }
}
