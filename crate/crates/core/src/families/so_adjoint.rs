//! Fixed components of the rank-2 torus of `SL_3 ⊂ SO_m` acting on the
//! adjoint variety `G(1, Q^{m-2})`, and its bandwidth-3 slices.

use crate::algebra::lattice::{project, Weight};
use crate::error::{Error, Result};
use crate::families::contact::{contact_compasses, restrict_compass, ContactHexagonData};
use crate::families::quadric_label;
use crate::grid::model::{Compass, CompassData, FixedComponent, GridData, BUNDLE_L};

/// Rank-2 grid of `G(1, Q^{m-2})`, of dimension `2m - 7`, for `m >= 6`.
///
/// Components are named by weight and ordinal: `a{i}_0` over `alpha_i`,
/// `b{i}_k` over `beta_i` and `z_k` over the origin. Stored compasses are
/// `self - neighbor`, the negation of [`contact_compasses`]. No orbit edges
/// are recorded.
pub fn build_so_adjoint(m: u32) -> Result<GridData> {
    if m < 6 {
        return Err(Error::OutOfRange(format!(
            "SO_m adjoint needs m >= 6, got {m}"
        )));
    }
    let n = m - 4;
    let h = ContactHexagonData::new(n);
    let mut g = GridData::new(2, 2 * m - 7);
    g.flags.contact = true;
    for i in 0..6i64 {
        let (ca, _) = contact_compasses(&h, i + 1, 0)?;
        g.components.push(
            FixedComponent::new(format!("a{i}_0"), "point", 0, ca.negated())
                .with_mu(BUNDLE_L, h.alpha(i).clone()),
        );
    }
    for i in 0..6i64 {
        let beta = h.beta(i).clone();
        let (_, c0) = contact_compasses(&h, i, 0)?;
        g.components.push(
            FixedComponent::new(format!("b{i}_0"), "point", 0, c0.negated())
                .with_mu(BUNDLE_L, beta.clone()),
        );
        if m >= 8 {
            let d = m - 8;
            let (_, cd) = contact_compasses(&h, i, d)?;
            if d == 0 {
                for k in 1..=2 {
                    g.components.push(
                        FixedComponent::new(format!("b{i}_{k}"), "point", 0, cd.negated())
                            .with_mu(BUNDLE_L, beta.clone()),
                    );
                }
            } else {
                g.components.push(
                    FixedComponent::new(format!("b{i}_1"), quadric_label(d), d, cd.negated())
                        .with_mu(BUNDLE_L, beta.clone()),
                );
            }
        }
    }
    let origin = Weight::zero(2);
    if m == 10 {
        let mut cz = Compass::new();
        for i in 0..6 {
            cz.add(h.beta(i).clone(), 2);
        }
        for k in 0..2 {
            g.components.push(
                FixedComponent::new(format!("z_{k}"), "P^1", 1, cz.clone())
                    .with_mu(BUNDLE_L, origin.clone()),
            );
        }
    } else if m >= 11 {
        let label = if m == 11 {
            "P^3".to_string()
        } else {
            format!("G(1,Q^{})", m - 8)
        };
        let mut z =
            FixedComponent::new("z_0", label, 2 * m - 19, Compass::new()).with_mu(BUNDLE_L, origin);
        z.compass = CompassData::Unspecified;
        g.components.push(z);
    }
    g.meta.insert("family".into(), format!("SO_{m} adjoint"));
    g.meta.insert("contact-pairing".into(), "unverified".into());
    Ok(g)
}

/// The bandwidth-3 variety `X_i`: components over weights with
/// `pi_i = 1`, with `mu_L = k` where `mu = alpha_{i-1} + k g` and `g`
/// generates `ker pi_i`, and compasses restricted to `ker pi_i`.
pub fn so_slice(m: u32, i: i64) -> Result<GridData> {
    let full = build_so_adjoint(m)?;
    let h = ContactHexagonData::new(m - 4);
    let p = h.pi(i);
    let row = p.rows()[0].clone();
    let gen = [-row[1], row[0]];
    let base = h.alpha(i - 1).clone();
    let mut g = GridData::new(1, m - 5);
    g.flags.equalized = true;
    for c in &full.components {
        let w = Weight::new(
            c.mu_of(BUNDLE_L)
                .unwrap()
                .iter()
                .map(|x| crate::algebra::rational::to_i64(x).expect("integral weights"))
                .collect(),
        );
        if project(&w, &p)? != Weight::scalar(1) {
            continue;
        }
        let off = &w - &base;
        let k = if gen[0] != 0 {
            off.0[0] / gen[0]
        } else {
            off.0[1] / gen[1]
        };
        let cp = c
            .compass()
            .ok_or_else(|| Error::UnspecifiedCompass(c.id.clone()))?;
        let rc = restrict_compass(cp, &p)?;
        g.components.push(
            FixedComponent::new(c.id.clone(), c.label.clone(), c.dim, rc)
                .with_mu(BUNDLE_L, Weight::scalar(k)),
        );
    }
    g.meta.insert(
        "family".into(),
        format!("SO_{m} slice X_{}", i.rem_euclid(6)),
    );
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;
    use crate::grid::{bandwidth, is_compass_symmetric, validate};

    #[test]
    fn grids_validate() {
        for m in 6..14 {
            let g = build_so_adjoint(m).unwrap();
            assert!(validate(&g).is_empty(), "m = {m}: {:?}", validate(&g));
            for c in &g.components {
                if let Some(cp) = c.compass() {
                    assert_eq!(cp.len(), 2 * m - 7 - c.dim);
                }
            }
        }
        assert!(build_so_adjoint(5).is_err());
    }

    #[test]
    fn central_components() {
        let g = build_so_adjoint(10).unwrap();
        let z: Vec<_> = g
            .components
            .iter()
            .filter(|c| c.id.starts_with('z'))
            .collect();
        assert_eq!(z.len(), 2);
        assert!(z
            .iter()
            .all(|c| c.label == "P^1" && is_compass_symmetric(c)));
        let g = build_so_adjoint(12).unwrap();
        assert_eq!(
            g.component("z_0").unwrap().compass,
            CompassData::Unspecified
        );
    }

    #[test]
    fn slices() {
        for m in 6..14 {
            for i in 0..6 {
                let s = so_slice(m, i).unwrap();
                assert!(
                    validate(&s).is_empty(),
                    "m = {m}, i = {i}: {:?}",
                    validate(&s)
                );
                assert_eq!(bandwidth(&s, BUNDLE_L).unwrap(), int(3));
            }
        }
    }
}
