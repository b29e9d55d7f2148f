//! Lattice polytopes given by a finite point set.
//!
//! Vertices are found by testing each point for membership in the convex
//! hull of the remaining points. Membership is a linear feasibility problem
//! (`sum l_j q_j = p`, `sum l_j = 1`, `l >= 0`) solved by a phase-one simplex
//! over exact rationals with Bland's pivoting rule, so the test works in any
//! rank and never cycles.

use crate::algebra::lattice::{project, Projection, Weight};
use crate::algebra::rational::{int, Rational};
use crate::error::{Error, Result};
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePolytope {
    points: Vec<Weight>,
}

impl LatticePolytope {
    /// Deduplicates; all points must share one rank.
    pub fn new(points: impl IntoIterator<Item = Weight>) -> Result<Self> {
        let set: BTreeSet<Weight> = points.into_iter().collect();
        let points: Vec<Weight> = set.into_iter().collect();
        if let Some(first) = points.first() {
            let r = first.rank();
            if let Some(bad) = points.iter().find(|p| p.rank() != r) {
                return Err(Error::RankMismatch {
                    expected: r,
                    got: bad.rank(),
                });
            }
        }
        Ok(LatticePolytope { points })
    }

    pub fn points(&self) -> &[Weight] {
        &self.points
    }

    pub fn project(&self, p: &Projection) -> Result<LatticePolytope> {
        let pts = self
            .points
            .iter()
            .map(|w| project(w, p))
            .collect::<Result<Vec<_>>>()?;
        LatticePolytope::new(pts)
    }
}

/// Extreme points of the convex hull, in sorted order.
pub fn vertices(poly: &LatticePolytope) -> Result<Vec<Weight>> {
    let pts = poly.points();
    if pts.is_empty() {
        return Err(Error::Empty("polytope point set"));
    }
    let mut out = Vec::new();
    for (i, p) in pts.iter().enumerate() {
        let others: Vec<&Weight> = pts
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, q)| q)
            .collect();
        if !in_convex_hull(p, &others) {
            out.push(p.clone());
        }
    }
    Ok(out)
}

/// True iff the vertex set is invariant under the point reflection through
/// the vertex centroid. The empty polytope counts as symmetric.
pub fn is_centrally_symmetric(poly: &LatticePolytope) -> bool {
    let verts = match vertices(poly) {
        Ok(v) => v,
        Err(_) => return true,
    };
    let k = verts.len() as i64;
    let rank = verts[0].rank();
    let sum: Vec<i64> = (0..rank)
        .map(|c| verts.iter().map(|v| v.0[c]).sum())
        .collect();
    // Scale everything by k so the centroid stays integral: k*v -> 2*sum - k*v.
    let scaled: BTreeSet<Vec<i64>> = verts
        .iter()
        .map(|v| v.0.iter().map(|x| x * k).collect())
        .collect();
    verts.iter().all(|v| {
        let image: Vec<i64> = (0..rank).map(|c| 2 * sum[c] - k * v.0[c]).collect();
        scaled.contains(&image)
    })
}

/// Exact test of `p in conv(qs)`.
pub fn in_convex_hull(p: &Weight, qs: &[&Weight]) -> bool {
    if qs.is_empty() {
        return false;
    }
    let r = p.rank();
    let m = r + 1;
    let n = qs.len();
    // Row i < r: sum_j q_j[i] l_j = p[i]; row r: sum_j l_j = 1.
    let mut a: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut b: Vec<Rational> = Vec::with_capacity(m);
    for i in 0..r {
        a.push(qs.iter().map(|q| int(q.0[i])).collect());
        b.push(int(p.0[i]));
    }
    a.push(vec![int(1); n]);
    b.push(int(1));
    phase_one_feasible(a, b)
}

/// Is `{x >= 0 : A x = b}` nonempty? Dense tableau, Bland's rule.
fn phase_one_feasible(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> bool {
    let m = a.len();
    let n = a[0].len();
    for i in 0..m {
        if b[i].is_negative() {
            b[i] = -b[i].clone();
            for x in a[i].iter_mut() {
                *x = -x.clone();
            }
        }
    }
    // Columns: n structural, then m artificial.
    let cols = n + m;
    let mut t: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut row = a[i].clone();
            row.extend((0..m).map(|k| int(i64::from(k == i))));
            row.push(b[i].clone());
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..cols).collect();
    // Reduced costs of minimizing the artificial sum.
    let mut cost: Vec<Rational> = vec![Rational::zero(); cols + 1];
    for row in &t {
        for j in 0..n {
            cost[j] -= &row[j];
        }
        cost[cols] -= &row[cols];
    }
    while let Some(entering) = (0..cols).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if t[i][entering].is_positive() {
                let ratio = &t[i][cols] / &t[i][entering];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((pr, _)) = leave else {
            // Unbounded direction cannot occur for a bounded-below phase one.
            break;
        };
        let piv = t[pr][entering].clone();
        for x in t[pr].iter_mut() {
            *x = &*x / &piv;
        }
        let prow = t[pr].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != pr && !row[entering].is_zero() {
                let f = row[entering].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &f * y;
                }
            }
        }
        let f = cost[entering].clone();
        for (x, y) in cost.iter_mut().zip(&prow) {
            *x -= &f * y;
        }
        basis[pr] = entering;
    }
    cost[cols].is_zero()
}
