//! Smooth quadric `Q^n` under a maximal torus of `SO_{n+2}`.

use crate::algebra::lattice::{Projection, Weight};
use crate::error::{Error, Result};
use crate::families::downgrade::{downgrade, Merge};
use crate::families::{projective_label, quadric_label};
use crate::grid::model::{Compass, FixedComponent, GridData, OrbitEdge, BUNDLE_L};

fn pid(sign: i64, i: usize) -> String {
    format!("{}e{}", if sign > 0 { "+" } else { "-" }, i + 1)
}

/// `Q^n` with its `2r` fixed points `+-e_i`, `r = floor((n+2)/2)`; the
/// polytope is the cross polytope. Orbit edges join `e_i` to `+-e_j` for
/// `j != i`, and, for odd `n`, `e_i` to `-e_i` along a conic.
pub fn build_quadric_full_torus(n: u32) -> Result<GridData> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("quadric needs n >= 3, got {n}")));
    }
    let r = ((n + 2) / 2) as usize;
    let odd = n % 2 == 1;
    let mut g = GridData::new(r, n);
    for sign in [1i64, -1] {
        for i in 0..r {
            let ei = Weight::unit(r, i).scale(sign);
            let mut cp = Compass::new();
            for j in 0..r {
                if j != i {
                    let ej = Weight::unit(r, j);
                    cp.add(&ei - &ej, 1);
                    cp.add(&ei + &ej, 1);
                }
            }
            if odd {
                cp.add(ei.clone(), 1);
            }
            g.components
                .push(FixedComponent::new(pid(sign, i), "point", 0, cp).with_mu(BUNDLE_L, ei));
        }
    }
    for i in 0..r {
        for j in i + 1..r {
            for s in [1i64, -1] {
                for t in [1i64, -1] {
                    g.edges.push(OrbitEdge::new(pid(s, i), pid(t, j)));
                }
            }
        }
        if odd {
            g.edges.push(OrbitEdge::new(pid(1, i), pid(-1, i)));
        }
    }
    g.meta.insert("family".into(), format!("quadric Q^{n}"));
    Ok(g)
}

/// Downgrade along the first coordinate: two points and `Q^{n-2}` between
/// them.
pub fn downgrade_quadric_e1(n: u32) -> Result<GridData> {
    let g = build_quadric_full_torus(n)?;
    let r = g.rank;
    let p = Projection::coordinate(r, 0);
    let middle: Vec<String> = (1..r).flat_map(|i| [pid(1, i), pid(-1, i)]).collect();
    let merge = Merge::Groups(vec![
        (pid(1, 0), "point".into(), vec![pid(1, 0)]),
        ("Q".into(), quadric_label(n - 2), middle),
        (pid(-1, 0), "point".into(), vec![pid(-1, 0)]),
    ]);
    downgrade(&g, &p, &merge)
}

/// Downgrade along `(1, ..., 1)`: two components `P^{floor(n/2)}`.
pub fn downgrade_quadric_diagonal(n: u32) -> Result<GridData> {
    let g = build_quadric_full_torus(n)?;
    let r = g.rank;
    let p = Projection::new(vec![vec![1; r]])?;
    let label = projective_label(n / 2);
    let merge = Merge::Groups(vec![
        (
            "plus".into(),
            label.clone(),
            (0..r).map(|i| pid(1, i)).collect(),
        ),
        ("minus".into(), label, (0..r).map(|i| pid(-1, i)).collect()),
    ]);
    downgrade(&g, &p, &merge)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::polytope::{is_centrally_symmetric, vertices, LatticePolytope};
    use crate::algebra::rational::int;
    use crate::grid::{bandwidth, validate};

    #[test]
    fn full_torus() {
        for n in 3..9 {
            let g = build_quadric_full_torus(n).unwrap();
            assert!(validate(&g).is_empty(), "{n}: {:?}", validate(&g));
            let poly = LatticePolytope::new(g.components.iter().map(|c| {
                Weight::new(
                    c.mu_of(BUNDLE_L)
                        .unwrap()
                        .iter()
                        .map(|x| crate::algebra::rational::to_i64(x).unwrap())
                        .collect(),
                )
            }))
            .unwrap();
            assert_eq!(vertices(&poly).unwrap().len(), 2 * g.rank);
            assert!(is_centrally_symmetric(&poly));
        }
    }

    #[test]
    fn e1_downgrade() {
        for n in 3..9 {
            let d = downgrade_quadric_e1(n).unwrap();
            assert_eq!(d.components.len(), 3);
            let q = d.component("Q").unwrap();
            assert_eq!(q.dim, n - 2);
            assert_eq!(q.compass().unwrap(), &Compass::signs(1, 1));
            assert_eq!(bandwidth(&d, BUNDLE_L).unwrap(), int(2));
            assert!(validate(&d).is_empty(), "{n}: {:?}", validate(&d));
        }
    }

    #[test]
    fn diagonal_downgrade() {
        for n in 3..9 {
            let d = downgrade_quadric_diagonal(n).unwrap();
            assert_eq!(d.components.len(), 2);
            for c in &d.components {
                assert_eq!(c.dim, n / 2);
            }
            assert!(validate(&d).is_empty(), "{n}: {:?}", validate(&d));
        }
    }
}
