//! Projective space with a diagonal one-parameter subgroup.

use crate::algebra::lattice::Weight;
use crate::error::{Error, Result};
use crate::families::projective_label;
use crate::grid::model::{Compass, FixedComponent, GridData, OrbitEdge, BUNDLE_L};
use std::collections::BTreeSet;

/// `P(C^d)` with weight `a_i` on a block of `d_i` coordinates.
///
/// Each block gives a component `P^{d_i - 1}` with `mu_L = -a_i`; there is an
/// orbit edge `i -> j` whenever `a_i < a_j`, with stabilizer order
/// `a_j - a_i`. Weights may be given in any order but must be distinct.
pub fn build_projective_space(weights: &[(i64, u32)]) -> Result<GridData> {
    if weights.is_empty() {
        return Err(Error::Empty("weights"));
    }
    let mut seen = BTreeSet::new();
    for &(a, d) in weights {
        if d == 0 {
            return Err(Error::InvalidArgument(format!(
                "block of weight {a} has size 0"
            )));
        }
        if !seen.insert(a) {
            return Err(Error::InvalidArgument(format!("weight {a} repeated")));
        }
    }
    let total: u32 = weights.iter().map(|w| w.1).sum();
    let mut g = GridData::new(1, total - 1);
    for (i, &(a, d)) in weights.iter().enumerate() {
        let mut cp = Compass::new();
        for (j, &(b, e)) in weights.iter().enumerate() {
            if j != i {
                cp.add(Weight::scalar(b - a), e);
            }
        }
        g.components.push(
            FixedComponent::new(format!("y{i}"), projective_label(d - 1), d - 1, cp)
                .with_mu(BUNDLE_L, Weight::scalar(-a)),
        );
    }
    for (i, &(a, _)) in weights.iter().enumerate() {
        for (j, &(b, _)) in weights.iter().enumerate() {
            if a < b {
                g.edges.push(
                    OrbitEdge::new(format!("y{i}"), format!("y{j}")).with_delta((b - a) as u32),
                );
            }
        }
    }
    g.flags.edges_complete = true;
    g.flags.equalized = weights
        .iter()
        .all(|&(a, _)| weights.iter().all(|&(b, _)| (a - b).abs() <= 1));
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;
    use crate::grid::{bandwidth, validate};

    #[test]
    fn three_points() {
        let g = build_projective_space(&[(0, 1), (1, 1), (2, 1)]).unwrap();
        assert_eq!(g.components.len(), 3);
        assert_eq!(bandwidth(&g, BUNDLE_L).unwrap(), int(2));
        assert!(!g.flags.equalized);
        assert!(validate(&g).is_empty());
        let long = g
            .edges
            .iter()
            .find(|e| e.src == "y0" && e.dst == "y2")
            .unwrap();
        assert_eq!(long.delta, 2);
    }

    #[test]
    fn one_block() {
        let g = build_projective_space(&[(4, 3)]).unwrap();
        assert_eq!(g.components[0].label, "P^2");
        assert!(g.edges.is_empty());
        assert!(validate(&g).is_empty());
    }

    #[test]
    fn one_pointed_end() {
        let g = build_projective_space(&[(1, 1), (0, 5)]).unwrap();
        assert_eq!(g.n, 5);
        assert_eq!(bandwidth(&g, BUNDLE_L).unwrap(), int(1));
        assert!(g.flags.equalized);
        assert!(validate(&g).is_empty());
    }

    #[test]
    fn repeated_weight_rejected() {
        assert!(build_projective_space(&[(1, 1), (1, 2)]).is_err());
        assert!(build_projective_space(&[]).is_err());
    }
}
