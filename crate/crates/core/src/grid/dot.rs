//! Graphviz rendering of the orbit graph, one rank per bundle level.

use crate::algebra::rational::{fmt as rfmt, Rational};
use crate::grid::model::GridData;
use std::collections::BTreeMap;
use std::fmt::Write;

fn mu_text(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(rfmt).collect();
    if parts.len() == 1 {
        parts[0].clone()
    } else {
        format!("({})", parts.join(","))
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT text. Components are sorted by `(mu, label, id)`, so the output does
/// not depend on the order of components or edges in the input.
pub fn to_dot(g: &GridData, bundle: &str) -> String {
    let key = |id: &str| {
        let c = g.component(id);
        (
            c.and_then(|c| c.mu_of(bundle))
                .map(<[Rational]>::to_vec)
                .unwrap_or_default(),
            c.map(|c| c.label.clone()).unwrap_or_default(),
            id.to_string(),
        )
    };
    let mut comps: Vec<_> = g.components.iter().collect();
    comps.sort_by_key(|c| key(&c.id));

    let mut levels: BTreeMap<Vec<Rational>, Vec<&str>> = BTreeMap::new();
    for c in &comps {
        levels
            .entry(
                c.mu_of(bundle)
                    .map(<[Rational]>::to_vec)
                    .unwrap_or_default(),
            )
            .or_default()
            .push(&c.id);
    }

    let mut out = String::new();
    writeln!(out, "digraph grid {{").unwrap();
    writeln!(out, "  rankdir=LR;").unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    for (i, (mu, ids)) in levels.iter().enumerate() {
        writeln!(out, "  subgraph level_{i} {{").unwrap();
        writeln!(out, "    rank=same;").unwrap();
        for id in ids {
            let c = g.component(id).unwrap();
            writeln!(
                out,
                "    \"{}\" [label=\"{}\\n{}\\n{}={}\"];",
                escape(id),
                escape(id),
                escape(&c.label),
                escape(bundle),
                mu_text(mu)
            )
            .unwrap();
        }
        writeln!(out, "  }}").unwrap();
    }
    let mut edges: Vec<_> = g.edges.iter().collect();
    edges.sort_by(|a, b| {
        (key(&a.src), key(&a.dst), &a.tags, a.delta).cmp(&(
            key(&b.src),
            key(&b.dst),
            &b.tags,
            b.delta,
        ))
    });
    for e in edges {
        let tags: Vec<String> = e.tags.iter().map(|t| t.to_string()).collect();
        let mut label = tags.join(",");
        if e.delta != 1 {
            if !label.is_empty() {
                label.push(' ');
            }
            write!(label, "delta={}", e.delta).unwrap();
        }
        writeln!(
            out,
            "  \"{}\" -> \"{}\" [label=\"{}\"];",
            escape(&e.src),
            escape(&e.dst),
            label
        )
        .unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}
