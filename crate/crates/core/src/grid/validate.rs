//! Structural checks on grid data. Violations are returned as data.

use crate::grid::model::GridData;
use crate::grid::ops::{sinks, sources, successors};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationKind {
    Schema,
    DuplicateId,
    DanglingEdge,
    ZeroDelta,
    Cycle,
    WeightRank,
    ZeroWeight,
    CodimensionMismatch,
    SourceNotUnique,
    SinkNotUnique,
    NotEqualizedWeight,
    EqualizedDelta,
    SplitRank,
    IntersectionDimension,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {}", self.kind, self.message)
    }
}

fn push(out: &mut Vec<Violation>, kind: ViolationKind, message: String) {
    out.push(Violation { kind, message });
}

/// All structural violations; empty iff the grid is consistent.
///
/// Components whose compass is unspecified are skipped by the compass
/// checks.
pub fn validate(g: &GridData) -> Vec<Violation> {
    use ViolationKind::*;
    let mut out = Vec::new();
    if g.schema != crate::grid::model::SCHEMA {
        push(&mut out, Schema, format!("unknown schema {:?}", g.schema));
    }

    let mut ids = BTreeSet::new();
    for c in &g.components {
        if !ids.insert(c.id.as_str()) {
            push(
                &mut out,
                DuplicateId,
                format!("component id `{}` repeated", c.id),
            );
        }
    }
    let mut edges_ok = true;
    for e in &g.edges {
        for end in [&e.src, &e.dst] {
            if !ids.contains(end.as_str()) {
                edges_ok = false;
                push(
                    &mut out,
                    DanglingEdge,
                    format!("edge {} -> {} references unknown `{end}`", e.src, e.dst),
                );
            }
        }
        if e.delta == 0 {
            push(
                &mut out,
                ZeroDelta,
                format!("edge {} -> {} has delta 0", e.src, e.dst),
            );
        }
        if g.rank == 1 && g.flags.equalized && e.delta != 1 {
            push(
                &mut out,
                EqualizedDelta,
                format!(
                    "edge {} -> {} has delta {} in an equalized grid",
                    e.src, e.dst, e.delta
                ),
            );
        }
    }

    for c in &g.components {
        for (b, v) in &c.mu {
            if v.len() != g.rank {
                push(
                    &mut out,
                    WeightRank,
                    format!(
                        "`{}`: bundle `{b}` has {} coordinates, rank is {}",
                        c.id,
                        v.len(),
                        g.rank
                    ),
                );
            }
        }
        let Some(cp) = c.compass() else { continue };
        for (w, _) in cp.iter() {
            if w.rank() != g.rank {
                push(
                    &mut out,
                    WeightRank,
                    format!("`{}`: compass weight {w} has wrong rank", c.id),
                );
            }
            if w.is_zero() {
                push(
                    &mut out,
                    ZeroWeight,
                    format!("`{}`: zero weight in compass", c.id),
                );
            }
            if g.rank == 1 && g.flags.equalized && w.0[0].abs() != 1 {
                push(
                    &mut out,
                    NotEqualizedWeight,
                    format!("`{}`: weight {w} in an equalized grid", c.id),
                );
            }
        }
        let codim = i64::from(g.n) - i64::from(c.dim);
        if i64::from(cp.len()) != codim {
            push(
                &mut out,
                CodimensionMismatch,
                format!(
                    "`{}`: compass has {} entries, codimension is {codim}",
                    c.id,
                    cp.len()
                ),
            );
        }
        if let (Some(split), 1) = (&c.split, g.rank) {
            for sign in [1i64, -1] {
                let part: Vec<_> = split
                    .iter()
                    .filter(|s| s.weight.leading_sign() == sign)
                    .collect();
                if part.is_empty() {
                    continue;
                }
                let total: u32 = part.iter().map(|s| s.rank).sum();
                let rk: u32 = cp
                    .iter()
                    .filter(|(w, _)| w.leading_sign() == sign)
                    .map(|(_, k)| k)
                    .sum();
                if total != rk {
                    push(
                        &mut out,
                        SplitRank,
                        format!(
                            "`{}`: split ranks of sign {sign} sum to {total}, compass has {rk}",
                            c.id
                        ),
                    );
                }
            }
        }
    }

    if g.rank == 1 && edges_ok {
        if let Some(cyc) = find_cycle(g) {
            push(&mut out, Cycle, format!("directed cycle through `{cyc}`"));
        }
        if g.flags.edges_complete {
            let so = sources(g);
            if so.len() != 1 {
                push(
                    &mut out,
                    SourceNotUnique,
                    format!("components without incoming edges: {so:?}"),
                );
            }
            let si = sinks(g);
            if si.len() != 1 {
                push(
                    &mut out,
                    SinkNotUnique,
                    format!("components without outgoing edges: {si:?}"),
                );
            }
        }
        intersection_dimension(g, &mut out);
    }
    out
}

/// Two distinct components whose only successor is the same point must have
/// dimensions summing to at most `n - 2`.
fn intersection_dimension(g: &GridData, out: &mut Vec<Violation>) {
    let succ = successors(g);
    let mut by_point: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for (id, s) in &succ {
        if s.len() == 1 {
            let y = s.iter().next().unwrap();
            if g.component(y).is_some_and(|c| c.dim == 0) {
                by_point.entry(y.as_str()).or_default().push(id.as_str());
            }
        }
    }
    for (y, preds) in by_point {
        for (i, a) in preds.iter().enumerate() {
            for b in &preds[i + 1..] {
                let da = g.component(a).map_or(0, |c| c.dim);
                let db = g.component(b).map_or(0, |c| c.dim);
                if i64::from(da + db) > i64::from(g.n) - 2 {
                    push(
                        out,
                        ViolationKind::IntersectionDimension,
                        format!("`{a}` (dim {da}) and `{b}` (dim {db}) both lead only to point `{y}`, but {da}+{db} > n-2"),
                    );
                }
            }
        }
    }
}

fn find_cycle(g: &GridData) -> Option<String> {
    let succ = successors(g);
    // 0 = unvisited, 1 = on stack, 2 = done
    let mut state: BTreeMap<&str, u8> = BTreeMap::new();
    fn dfs<'a>(
        v: &'a str,
        succ: &'a BTreeMap<String, BTreeSet<String>>,
        state: &mut BTreeMap<&'a str, u8>,
    ) -> Option<String> {
        state.insert(v, 1);
        if let Some(nx) = succ.get(v) {
            for w in nx {
                match state.get(w.as_str()).copied().unwrap_or(0) {
                    1 => return Some(w.clone()),
                    0 => {
                        if let Some(c) = dfs(w, succ, state) {
                            return Some(c);
                        }
                    }
                    _ => {}
                }
            }
        }
        state.insert(v, 2);
        None
    }
    for c in &g.components {
        if state.get(c.id.as_str()).copied().unwrap_or(0) == 0 {
            if let Some(x) = dfs(&c.id, &succ, &mut state) {
                return Some(x);
            }
        }
    }
    None
}
