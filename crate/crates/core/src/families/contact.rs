//! Hexagon of weights of an `SL_3`-action on a contact manifold and the
//! compasses of its fixed components.

use crate::algebra::lattice::{project, Projection, Weight};
use crate::error::{Error, Result};
use crate::grid::model::Compass;
use std::collections::BTreeMap;

/// Weights of the hexagon in the `A_2` lattice `Z^2`: the long roots
/// `alpha_i = beta_i + beta_{i+1}` and the short points `beta_i`, indices
/// mod 6, for a contact manifold of dimension `2n + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContactHexagonData {
    pub alpha: [Weight; 6],
    pub beta: [Weight; 6],
    pub n: u32,
    /// Dimensions of the components sitting over each `beta_i`.
    pub inner_dims: BTreeMap<usize, Vec<u32>>,
}

const BETA: [[i64; 2]; 6] = [[1, 0], [0, 1], [-1, 1], [-1, 0], [0, -1], [1, -1]];

fn m6(i: i64) -> usize {
    i.rem_euclid(6) as usize
}

impl ContactHexagonData {
    pub fn new(n: u32) -> Self {
        let beta: [Weight; 6] = std::array::from_fn(|i| Weight::new(BETA[i].to_vec()));
        let alpha: [Weight; 6] = std::array::from_fn(|i| &beta[i] + &beta[(i + 1) % 6]);
        ContactHexagonData {
            alpha,
            beta,
            n,
            inner_dims: BTreeMap::new(),
        }
    }

    pub fn alpha(&self, i: i64) -> &Weight {
        &self.alpha[m6(i)]
    }

    pub fn beta(&self, i: i64) -> &Weight {
        &self.beta[m6(i)]
    }

    /// The functional `pi_i` with `pi_i(beta_i) = pi_i(beta_{i+1}) = 1`.
    pub fn pi(&self, i: i64) -> Projection {
        let (a, b) = (self.beta(i), self.beta(i + 1));
        let det = a.0[0] * b.0[1] - a.0[1] * b.0[0];
        // Solve [a; b] p = (1, 1) with Cramer's rule; det is +-1.
        let p0 = (b.0[1] - a.0[1]) / det;
        let p1 = (a.0[0] - b.0[0]) / det;
        Projection::new(vec![vec![p0, p1]]).expect("adjacent hexagon points form a basis")
    }
}

/// Compasses at `y_{alpha_{i-1}}` and at a component of dimension `d` over
/// `beta_i`, written as `neighbor - self`:
///
/// * `alpha_i - alpha_{i-1}`, `alpha_{i-2} - alpha_{i-1}`, `-alpha_{i-1}`,
///   `(beta_i - alpha_{i-1})^{n-1}`, `(beta_{i-1} - alpha_{i-1})^{n-1}`;
/// * `alpha_i - beta_i`, `alpha_{i-1} - beta_i`, `beta_{i+2} - beta_i`,
///   `beta_{i-2} - beta_i`, `(-beta_i)^{d+1}`, `(beta_{i+1} - beta_i)^{n-d-2}`,
///   `(beta_{i-1} - beta_i)^{n-d-2}`.
pub fn contact_compasses(h: &ContactHexagonData, i: i64, d: u32) -> Result<(Compass, Compass)> {
    let n = h.n;
    if n < 2 || d + 2 > n {
        return Err(Error::OutOfRange(format!(
            "need n >= 2 and d <= n - 2, got n = {n}, d = {d}"
        )));
    }
    let a0 = h.alpha(i - 1);
    let mut ca = Compass::new();
    ca.add(h.alpha(i) - a0, 1);
    ca.add(h.alpha(i - 2) - a0, 1);
    ca.add(-a0, 1);
    ca.add(h.beta(i) - a0, n - 1);
    ca.add(h.beta(i - 1) - a0, n - 1);

    let b0 = h.beta(i);
    let mut cb = Compass::new();
    cb.add(h.alpha(i) - b0, 1);
    cb.add(h.alpha(i - 1) - b0, 1);
    cb.add(h.beta(i + 2) - b0, 1);
    cb.add(h.beta(i - 2) - b0, 1);
    cb.add(-b0, d + 1);
    let k = n.saturating_sub(d + 2);
    cb.add(h.beta(i + 1) - b0, k);
    cb.add(h.beta(i - 1) - b0, k);
    Ok((ca, cb))
}

/// Entries of `c` in the kernel of the rank-1 projection `p` on `Z^2`,
/// written in the generator `(-p_2, p_1)` of the kernel.
pub fn restrict_compass(c: &Compass, p: &Projection) -> Result<Compass> {
    if p.source_rank() != 2 || p.target_rank() != 1 {
        return Err(Error::Unsupported(format!(
            "compass restriction needs a projection Z^2 -> Z, got Z^{} -> Z^{}",
            p.source_rank(),
            p.target_rank()
        )));
    }
    let row = &p.rows()[0];
    let (g0, g1) = (-row[1], row[0]);
    let mut out = Compass::new();
    for (w, k) in c.iter() {
        if !project(w, p)?.is_zero() {
            continue;
        }
        let coef = if g0 != 0 { w.0[0] / g0 } else { w.0[1] / g1 };
        out.add(Weight::scalar(coef), k);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_values() {
        let h = ContactHexagonData::new(5);
        for i in 0..6 {
            let p = h.pi(i);
            assert_eq!(project(h.beta(i), &p).unwrap(), Weight::scalar(1));
            assert_eq!(project(h.beta(i + 1), &p).unwrap(), Weight::scalar(1));
        }
        assert_eq!(h.pi(0).rows()[0], vec![1, 1]);
        assert_eq!(h.alpha(1), &Weight::new(vec![-1, 2]));
    }

    #[test]
    fn restricted_shapes() {
        for n in [5u32, 6] {
            let h = ContactHexagonData::new(n);
            for i in 0..6 {
                for d in 0..=n - 2 {
                    let (ca, cb) = contact_compasses(&h, i, d).unwrap();
                    assert_eq!(ca.len(), 2 * n + 1);
                    assert_eq!(cb.len(), 2 * n + 1 - d);
                    let p = h.pi(i);
                    assert_eq!(restrict_compass(&ca, &p).unwrap(), Compass::signs(n - 1, 0));
                    assert_eq!(
                        restrict_compass(&cb, &p).unwrap(),
                        Compass::signs(n - d - 2, 1)
                    );
                }
            }
        }
    }

    #[test]
    fn restriction_needs_rank_two() {
        let c = Compass::signs(1, 1);
        assert!(restrict_compass(&c, &Projection::identity(1)).is_err());
        assert!(
            restrict_compass(&Compass::new(), &ContactHexagonData::new(3).pi(0))
                .unwrap()
                .is_empty()
        );
    }
}
