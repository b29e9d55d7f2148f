//! Restriction of a torus action to a subtorus, acting on weights by a
//! lattice projection.

use crate::algebra::lattice::{project, Projection, Weight};
use crate::algebra::rational::Rational;
use crate::error::{Error, Result};
use crate::grid::model::{Compass, FixedComponent, GridData, OrbitEdge, SplitEntry, BUNDLE_L};
use num_integer::Integer;
use std::collections::{BTreeMap, BTreeSet};

/// How components with equal projected `mu_L` are grouped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Merge {
    /// One group per projected value of `mu_L`.
    ByLevel,
    /// Every component stays on its own.
    Singletons,
    /// Explicit groups `(id, label, members)`; every component appears in
    /// exactly one group.
    Groups(Vec<(String, String, Vec<String>)>),
}

struct Projected {
    mu: BTreeMap<String, Vec<Rational>>,
    compass: Compass,
    absorbed: u32,
}

fn project_component(c: &FixedComponent, p: &Projection) -> Result<Projected> {
    let mut mu = BTreeMap::new();
    for (b, v) in &c.mu {
        mu.insert(b.clone(), p.apply_rational(v)?);
    }
    let cp = c
        .compass()
        .ok_or_else(|| Error::UnspecifiedCompass(c.id.clone()))?;
    let mut compass = Compass::new();
    let mut absorbed = 0;
    for (w, k) in cp.iter() {
        let pw = project(w, p)?;
        if pw.is_zero() {
            absorbed += k;
        } else {
            compass.add(pw, k);
        }
    }
    Ok(Projected {
        mu,
        compass,
        absorbed,
    })
}

fn project_split(
    split: &Option<Vec<SplitEntry>>,
    p: &Projection,
) -> Result<Option<Vec<SplitEntry>>> {
    let Some(s) = split else { return Ok(None) };
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for e in s {
        let w = project(&e.weight, p)?;
        if w.is_zero() || !seen.insert(w.clone()) {
            return Ok(None);
        }
        out.push(SplitEntry {
            weight: w,
            rank: e.rank,
            bundle: e.bundle.clone(),
        });
    }
    out.sort_by(|a, b| a.weight.cmp(&b.weight));
    Ok(Some(out))
}

/// Downgrade along `p`.
///
/// The new `mu` is `p . mu` for every bundle. A merged group takes its data
/// from a representative: compass entries projecting to zero become tangent
/// directions of the merged component, so its dimension is the
/// representative's dimension plus the absorbed count; all members must
/// yield the same projected compass and dimension. Edges are projected,
/// oriented by the drop of `mu_L` and deduplicated; edges inside a group
/// disappear. The stabilizer order of a projected edge is the image of the
/// primitive edge direction.
pub fn downgrade(g: &GridData, p: &Projection, merge: &Merge) -> Result<GridData> {
    if p.source_rank() != g.rank {
        return Err(Error::RankMismatch {
            expected: g.rank,
            got: p.source_rank(),
        });
    }
    let projected: Vec<Projected> = g
        .components
        .iter()
        .map(|c| project_component(c, p))
        .collect::<Result<_>>()?;
    let level = |i: usize| -> Result<Vec<Rational>> {
        projected[i]
            .mu
            .get(BUNDLE_L)
            .cloned()
            .ok_or_else(|| Error::MissingBundle {
                component: g.components[i].id.clone(),
                bundle: BUNDLE_L.to_string(),
            })
    };

    let groups: Vec<(String, Option<String>, Vec<usize>)> = match merge {
        Merge::Singletons => (0..g.components.len())
            .map(|i| (g.components[i].id.clone(), None, vec![i]))
            .collect(),
        Merge::ByLevel => {
            let mut by: BTreeMap<Vec<Rational>, Vec<usize>> = BTreeMap::new();
            for i in 0..g.components.len() {
                by.entry(level(i)?).or_default().push(i);
            }
            let mut out: Vec<_> = by
                .into_values()
                .map(|ix| {
                    let id = if ix.len() == 1 {
                        g.components[ix[0]].id.clone()
                    } else {
                        ix.iter()
                            .map(|&i| g.components[i].id.as_str())
                            .collect::<Vec<_>>()
                            .join("+")
                    };
                    (id, None, ix)
                })
                .collect();
            out.sort_by_key(|x| x.2[0]);
            out
        }
        Merge::Groups(gs) => {
            let mut used = BTreeSet::new();
            let mut out = Vec::new();
            for (id, label, members) in gs {
                let mut ix = Vec::new();
                for m in members {
                    let i = g
                        .index_of(m)
                        .ok_or_else(|| Error::UnknownComponent(m.clone()))?;
                    if !used.insert(i) {
                        return Err(Error::Merge(format!("component `{m}` listed twice")));
                    }
                    ix.push(i);
                }
                if ix.is_empty() {
                    return Err(Error::Merge(format!("group `{id}` is empty")));
                }
                out.push((id.clone(), Some(label.clone()), ix));
            }
            if used.len() != g.components.len() {
                let missing: Vec<_> = (0..g.components.len())
                    .filter(|i| !used.contains(i))
                    .map(|i| g.components[i].id.clone())
                    .collect();
                return Err(Error::Merge(format!(
                    "components not covered by any group: {missing:?}"
                )));
            }
            out
        }
    };

    let mut out = GridData::new(p.target_rank(), g.n);
    out.flags.contact = g.flags.contact;
    out.meta = g.meta.clone();
    let mut owner: BTreeMap<usize, String> = BTreeMap::new();
    for (id, label, ix) in &groups {
        let rep = ix[0];
        let mu0 = level(rep)?;
        for &i in ix {
            if level(i)? != mu0 {
                return Err(Error::Merge(format!(
                    "group `{id}` mixes projected weights of `{}` and `{}`",
                    g.components[rep].id, g.components[i].id
                )));
            }
            let a = &projected[i];
            let r = &projected[rep];
            if a.compass != r.compass
                || a.absorbed + g.components[i].dim != r.absorbed + g.components[rep].dim
            {
                return Err(Error::Merge(format!(
                    "members `{}` and `{}` of group `{id}` disagree on the projected compass",
                    g.components[rep].id, g.components[i].id
                )));
            }
            owner.insert(i, id.clone());
        }
        let c = &g.components[rep];
        let pr = &projected[rep];
        let label = label.clone().unwrap_or_else(|| c.label.clone());
        let mut fc =
            FixedComponent::new(id.clone(), label, c.dim + pr.absorbed, pr.compass.clone());
        fc.mu = pr.mu.clone();
        fc.absorbed = c.absorbed + pr.absorbed;
        fc.split = if ix.len() == 1 {
            project_split(&c.split, p)?
        } else {
            None
        };
        out.components.push(fc);
    }

    let mut edges: BTreeSet<OrbitEdge> = BTreeSet::new();
    let mut dropped = false;
    for e in &g.edges {
        let (Some(a), Some(b)) = (g.index_of(&e.src), g.index_of(&e.dst)) else {
            return Err(Error::UnknownComponent(format!("{} -> {}", e.src, e.dst)));
        };
        if owner[&a] == owner[&b] {
            dropped = true;
            continue;
        }
        let wa = g.components[a].mu_of(BUNDLE_L);
        let wb = g.components[b].mu_of(BUNDLE_L);
        let (Some(wa), Some(wb)) = (wa, wb) else {
            return Err(Error::MissingBundle {
                component: e.src.clone(),
                bundle: BUNDLE_L.into(),
            });
        };
        let diff: Vec<i64> = wa
            .iter()
            .zip(wb)
            .map(|(x, y)| {
                crate::algebra::rational::to_i64(&(x - y))
                    .ok_or_else(|| Error::NonIntegral(e.src.clone()))
            })
            .collect::<Result<_>>()?;
        let gcd = diff.iter().fold(0i64, |acc, x| acc.gcd(x));
        if gcd == 0 {
            return Err(Error::InvalidArgument(format!(
                "edge {} -> {} joins equal weights",
                e.src, e.dst
            )));
        }
        let u = Weight(diff.iter().map(|x| x / gcd).collect());
        let pu = project(&u, p)?;
        if pu.is_zero() {
            return Err(Error::Merge(format!(
                "edge {} -> {} is fixed by the subtorus but its ends are in different groups",
                e.src, e.dst
            )));
        }
        let delta = pu.content() as u32;
        let (la, lb) = (level(a)?, level(b)?);
        let (src, dst) = if la > lb {
            (owner[&a].clone(), owner[&b].clone())
        } else {
            (owner[&b].clone(), owner[&a].clone())
        };
        let mut ne = OrbitEdge::new(src, dst).with_delta(delta);
        if p.target_rank() == 1 && g.rank == 1 {
            ne.tags = e.tags.clone();
        }
        edges.insert(ne);
    }
    out.edges = edges.into_iter().collect();
    out.flags.edges_complete = g.flags.edges_complete && g.rank == 1 && !dropped;
    out.flags.equalized = out.rank == 1
        && out.components.iter().all(|c| {
            c.compass()
                .is_some_and(|cp| cp.iter().all(|(w, _)| w.0[0].abs() == 1))
        })
        && out.edges.iter().all(|e| e.delta == 1);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::bw3::{build_cube_torus, build_p1cubed, build_scroll, ScrollSplit};
    use crate::grid::validate;

    #[test]
    fn identity_is_noop() {
        let g = build_scroll(4, ScrollSplit::One3).unwrap();
        let d = downgrade(&g, &Projection::identity(1), &Merge::Singletons).unwrap();
        let mut a = g.edges.clone();
        a.sort();
        assert_eq!(d.components, g.components);
        assert_eq!(d.edges, a);
        assert!(d.flags.edges_complete && d.flags.equalized);
    }

    #[test]
    fn cube_diagonal_matches_p1cubed() {
        let p = Projection::new(vec![vec![1, 1, 1]]).unwrap();
        let d = downgrade(&build_cube_torus(), &p, &Merge::Singletons).unwrap();
        let c = build_p1cubed();
        for comp in &c.components {
            let x = d.component(&comp.id).unwrap();
            assert_eq!(
                (x.dim, &x.mu, &x.compass),
                (comp.dim, &comp.mu, &comp.compass)
            );
        }
        assert_eq!(d.edges.len(), 12);
        for e in &d.edges {
            assert!(c.edges.iter().any(|f| f.src == e.src && f.dst == e.dst));
        }
        assert!(validate(&d).is_empty());
    }

    #[test]
    fn mixed_group_rejected() {
        let p = Projection::new(vec![vec![1, 1, 1]]).unwrap();
        let groups = Merge::Groups(vec![
            ("a".into(), "x".into(), vec!["y000".into(), "y100".into()]),
            (
                "b".into(),
                "x".into(),
                vec![
                    "y010".into(),
                    "y001".into(),
                    "y110".into(),
                    "y101".into(),
                    "y011".into(),
                    "y111".into(),
                ],
            ),
        ]);
        assert!(matches!(
            downgrade(&build_cube_torus(), &p, &groups),
            Err(Error::Merge(_))
        ));
    }
}
