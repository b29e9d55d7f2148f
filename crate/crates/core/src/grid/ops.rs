//! Numerical operations on rank-1 grids: normal ranks, AM-FM degrees,
//! bandwidth, normalization, nef tests and the canonical/adjoint bundles.

use crate::algebra::rational::{int, Rational};
use crate::error::{Error, Result};
use crate::grid::model::{
    FixedComponent, GridData, OrbitEdge, BUNDLE_ADJOINT, BUNDLE_L, BUNDLE_MINUS_K,
};
use num_traits::Signed;
use std::collections::{BTreeMap, BTreeSet};

fn require_rank_one(g: &GridData) -> Result<()> {
    if g.rank == 1 {
        Ok(())
    } else {
        Err(Error::NotRankOne(g.rank))
    }
}

fn known_compass(c: &FixedComponent) -> Result<&crate::grid::model::Compass> {
    c.compass()
        .ok_or_else(|| Error::UnspecifiedCompass(c.id.clone()))
}

/// Number of positive compass entries (with multiplicity).
pub fn rk_plus(g: &GridData, c: &FixedComponent) -> Result<u32> {
    require_rank_one(g)?;
    Ok(known_compass(c)?
        .iter()
        .filter(|(w, _)| w.0[0] > 0)
        .map(|(_, k)| k)
        .sum())
}

/// Number of negative compass entries (with multiplicity).
pub fn rk_minus(g: &GridData, c: &FixedComponent) -> Result<u32> {
    require_rank_one(g)?;
    Ok(known_compass(c)?
        .iter()
        .filter(|(w, _)| w.0[0] < 0)
        .map(|(_, k)| k)
        .sum())
}

/// Scalar value of a rank-1 bundle on a component.
pub fn mu_scalar(g: &GridData, id: &str, bundle: &str) -> Result<Rational> {
    require_rank_one(g)?;
    let c = g
        .component(id)
        .ok_or_else(|| Error::UnknownComponent(id.to_string()))?;
    c.mu_of(bundle)
        .and_then(|v| v.first().cloned())
        .ok_or_else(|| Error::MissingBundle {
            component: id.to_string(),
            bundle: bundle.to_string(),
        })
}

/// Drop `mu(src) - mu(dst)` of a bundle along an edge.
pub fn mu_drop(g: &GridData, e: &OrbitEdge, bundle: &str) -> Result<Rational> {
    Ok(mu_scalar(g, &e.src, bundle)? - mu_scalar(g, &e.dst, bundle)?)
}

/// Degree of the bundle on the orbit closure: `(mu(src) - mu(dst)) / delta`.
pub fn amfm_degree(g: &GridData, e: &OrbitEdge, bundle: &str) -> Result<Rational> {
    if e.delta == 0 {
        return Err(Error::InvalidArgument(format!(
            "edge {} -> {} has delta 0",
            e.src, e.dst
        )));
    }
    Ok(mu_drop(g, e, bundle)? / int(i64::from(e.delta)))
}

/// `max mu - min mu` over all components.
pub fn bandwidth(g: &GridData, bundle: &str) -> Result<Rational> {
    require_rank_one(g)?;
    if g.components.is_empty() {
        return Err(Error::Empty("grid components"));
    }
    let vals = g
        .components
        .iter()
        .map(|c| mu_scalar(g, &c.id, bundle))
        .collect::<Result<Vec<_>>>()?;
    let max = vals.iter().max().unwrap();
    let min = vals.iter().min().unwrap();
    Ok(max - min)
}

/// Components with no incoming edge.
pub fn sources(g: &GridData) -> Vec<String> {
    let targets: BTreeSet<&str> = g.edges.iter().map(|e| e.dst.as_str()).collect();
    g.components
        .iter()
        .filter(|c| !targets.contains(c.id.as_str()))
        .map(|c| c.id.clone())
        .collect()
}

/// Components with no outgoing edge.
pub fn sinks(g: &GridData) -> Vec<String> {
    let origins: BTreeSet<&str> = g.edges.iter().map(|e| e.src.as_str()).collect();
    g.components
        .iter()
        .filter(|c| !origins.contains(c.id.as_str()))
        .map(|c| c.id.clone())
        .collect()
}

/// Distinct successors of every component.
pub fn successors(g: &GridData) -> BTreeMap<String, BTreeSet<String>> {
    let mut out: BTreeMap<String, BTreeSet<String>> = g
        .components
        .iter()
        .map(|c| (c.id.clone(), BTreeSet::new()))
        .collect();
    for e in &g.edges {
        out.entry(e.src.clone()).or_default().insert(e.dst.clone());
    }
    out
}

/// The sink: the unique component without outgoing edges, or, for a grid
/// without edges, the unique minimizer of the bundle.
pub fn find_sink(g: &GridData, bundle: &str) -> Result<String> {
    require_rank_one(g)?;
    let cands = if g.edges.is_empty() {
        let vals = g
            .components
            .iter()
            .map(|c| Ok((c.id.clone(), mu_scalar(g, &c.id, bundle)?)))
            .collect::<Result<Vec<_>>>()?;
        let min = vals
            .iter()
            .map(|(_, v)| v.clone())
            .min()
            .ok_or(Error::Empty("grid components"))?;
        vals.into_iter()
            .filter(|(_, v)| *v == min)
            .map(|(id, _)| id)
            .collect::<Vec<_>>()
    } else {
        sinks(g)
    };
    match cands.as_slice() {
        [one] => Ok(one.clone()),
        _ => Err(Error::AmbiguousSink(cands)),
    }
}

/// The source, determined the same way as [`find_sink`].
pub fn find_source(g: &GridData, bundle: &str) -> Result<String> {
    require_rank_one(g)?;
    let cands = if g.edges.is_empty() {
        let vals = g
            .components
            .iter()
            .map(|c| Ok((c.id.clone(), mu_scalar(g, &c.id, bundle)?)))
            .collect::<Result<Vec<_>>>()?;
        let max = vals
            .iter()
            .map(|(_, v)| v.clone())
            .max()
            .ok_or(Error::Empty("grid components"))?;
        vals.into_iter()
            .filter(|(_, v)| *v == max)
            .map(|(id, _)| id)
            .collect::<Vec<_>>()
    } else {
        sources(g)
    };
    match cands.as_slice() {
        [one] => Ok(one.clone()),
        _ => Err(Error::Precondition(format!("ambiguous source: {cands:?}"))),
    }
}

/// Shift the bundle so that its value at the sink is 0.
pub fn normalize_linearization(g: &GridData, bundle: &str) -> Result<GridData> {
    let sink = find_sink(g, bundle)?;
    let s = mu_scalar(g, &sink, bundle)?;
    let mut out = g.clone();
    for c in &mut out.components {
        if let Some(v) = c.mu.get_mut(bundle) {
            v[0] -= &s;
        }
    }
    Ok(out)
}

/// `mu(src) >= mu(dst)` on every edge. Refuses unless the edge set is
/// flagged complete.
pub fn is_nef(g: &GridData, bundle: &str) -> Result<bool> {
    require_rank_one(g)?;
    if !g.flags.edges_complete {
        return Err(Error::EdgesIncomplete);
    }
    nef_on_edges(g, &g.edges, bundle)
}

/// Nef test restricted to the given edges.
pub fn nef_on_edges(g: &GridData, edges: &[OrbitEdge], bundle: &str) -> Result<bool> {
    for e in edges {
        if mu_drop(g, e, bundle)?.is_negative() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Edges `(u, v)` admitting no other directed path `u -> ... -> v` of
/// length at least two.
pub fn minimal_edges(g: &GridData) -> Vec<OrbitEdge> {
    let succ = successors(g);
    let reach = |from: &str, to: &str, skip_direct: bool| -> bool {
        let mut stack: Vec<String> = succ
            .get(from)
            .map(|s| {
                s.iter()
                    .filter(|x| !(skip_direct && x.as_str() == to))
                    .cloned()
                    .collect()
            })
            .unwrap_or_default();
        let mut seen: BTreeSet<String> = BTreeSet::new();
        while let Some(x) = stack.pop() {
            if x == to {
                return true;
            }
            if !seen.insert(x.clone()) {
                continue;
            }
            if let Some(nx) = succ.get(&x) {
                stack.extend(nx.iter().cloned());
            }
        }
        false
    };
    g.edges
        .iter()
        .filter(|e| !reach(&e.src, &e.dst, true))
        .cloned()
        .collect()
}

/// Add the anticanonical bundle `-K` with `mu = rk+ - rk-`.
pub fn mu_canonical(g: &GridData) -> Result<GridData> {
    require_rank_one(g)?;
    if !g.flags.equalized {
        return Err(Error::NotEqualized);
    }
    let mut out = g.clone();
    for c in &mut out.components {
        let v = i64::from(rk_plus(g, c)?) - i64::from(rk_minus(g, c)?);
        c.mu.insert(BUNDLE_MINUS_K.to_string(), vec![int(v)]);
    }
    Ok(out)
}

/// Add `K + tau L` with `mu = -mu(-K) + tau * mu(L)`.
pub fn mu_adjoint(g: &GridData, tau: &Rational) -> Result<GridData> {
    require_rank_one(g)?;
    let mut out = g.clone();
    for c in &mut out.components {
        let mk = c
            .mu_of(BUNDLE_MINUS_K)
            .and_then(|v| v.first().cloned())
            .ok_or_else(|| Error::MissingBundle {
                component: c.id.clone(),
                bundle: BUNDLE_MINUS_K.into(),
            })?;
        let l = c
            .mu_of(BUNDLE_L)
            .and_then(|v| v.first().cloned())
            .ok_or_else(|| Error::MissingBundle {
                component: c.id.clone(),
                bundle: BUNDLE_L.into(),
            })?;
        c.mu.insert(BUNDLE_ADJOINT.to_string(), vec![-mk + tau * l]);
    }
    Ok(out)
}

/// Sum of two bundles as a new named bundle.
pub fn add_bundles(g: &GridData, a: &str, b: &str, name: &str) -> Result<GridData> {
    let mut out = g.clone();
    for c in &mut out.components {
        let va = c.mu_of(a).ok_or_else(|| Error::MissingBundle {
            component: c.id.clone(),
            bundle: a.into(),
        })?;
        let vb = c.mu_of(b).ok_or_else(|| Error::MissingBundle {
            component: c.id.clone(),
            bundle: b.into(),
        })?;
        if va.len() != vb.len() {
            return Err(Error::RankMismatch {
                expected: va.len(),
                got: vb.len(),
            });
        }
        let s: Vec<Rational> = va.iter().zip(vb).map(|(x, y)| x + y).collect();
        c.mu.insert(name.to_string(), s);
    }
    Ok(out)
}

/// Compass invariant under negation, multiplicities included.
pub fn is_compass_symmetric(c: &FixedComponent) -> bool {
    match c.compass() {
        Some(cp) => cp.iter().all(|(w, k)| cp.multiplicity(&-w) == k),
        None => false,
    }
}

/// Components grouped by the value of a rank-1 bundle.
pub fn levels(g: &GridData, bundle: &str) -> Result<BTreeMap<Rational, Vec<String>>> {
    let mut out: BTreeMap<Rational, Vec<String>> = BTreeMap::new();
    for c in &g.components {
        out.entry(mu_scalar(g, &c.id, bundle)?)
            .or_default()
            .push(c.id.clone());
    }
    Ok(out)
}

/// The same variety under the inverse action: compass and split weights
/// and every `mu` are negated, and edges reversed.
pub fn reverse_action(g: &GridData) -> GridData {
    let mut out = g.clone();
    for c in &mut out.components {
        if let crate::grid::model::CompassData::Known(cp) = &c.compass {
            c.compass = crate::grid::model::CompassData::Known(cp.negated());
        }
        for v in c.mu.values_mut() {
            for x in v.iter_mut() {
                *x = -x.clone();
            }
        }
        if let Some(s) = &mut c.split {
            for e in s.iter_mut() {
                e.weight = -&e.weight;
            }
            s.sort_by(|a, b| a.weight.cmp(&b.weight));
        }
    }
    for e in &mut out.edges {
        std::mem::swap(&mut e.src, &mut e.dst);
    }
    out
}
