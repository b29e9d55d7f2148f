//! Bandwidth-3 grids with two pointed ends: scrolls over P^1, quadric
//! bundles, (P^1)^3 and the Lagrangian Grassmannian of Sp_6.

use crate::algebra::lattice::Weight;
use crate::error::{Error, Result};
use crate::families::{projective_label, quadric_label};
use crate::grid::model::{
    Compass, EdgeTag, FixedComponent, GridData, OrbitEdge, SplitEntry, BUNDLE_L,
};
use std::fmt;
use std::str::FromStr;

use EdgeTag::{A, B, C, E};

/// Splitting type of the rank-`n` bundle on P^1 defining the scroll.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScrollSplit {
    /// `O(1)^{n-1} + O(3)`
    One3,
    /// `O(1)^{n-2} + O(2)^2`
    TwoTwo,
}

impl ScrollSplit {
    pub fn degrees(&self, n: u32) -> Vec<u32> {
        let (ones, tail) = match self {
            ScrollSplit::One3 => (n - 1, vec![3]),
            ScrollSplit::TwoTwo => (n - 2, vec![2, 2]),
        };
        let mut v = vec![1; ones as usize];
        v.extend(tail);
        v
    }

    /// Recognize a degree list such as `1,1,1,1,3`; returns `n` as well.
    pub fn parse_degrees(s: &str) -> Result<(u32, ScrollSplit)> {
        let mut ds: Vec<u32> = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidArgument(format!("bad degree `{x}`")))
            })
            .collect::<Result<_>>()?;
        ds.sort_unstable();
        let n = ds.len() as u32;
        for sp in [ScrollSplit::One3, ScrollSplit::TwoTwo] {
            if n >= 2 && ds == sp.degrees(n) {
                return Ok((n, sp));
            }
        }
        Err(Error::InvalidArgument(format!(
            "splitting `{s}` is neither 1^(n-1),3 nor 1^(n-2),2,2"
        )))
    }
}

impl fmt::Display for ScrollSplit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScrollSplit::One3 => "1^(n-1),3",
            ScrollSplit::TwoTwo => "1^(n-2),2,2",
        })
    }
}

impl FromStr for ScrollSplit {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "one3" | "1,3" => Ok(ScrollSplit::One3),
            "twotwo" | "2,2" => Ok(ScrollSplit::TwoTwo),
            _ => ScrollSplit::parse_degrees(s).map(|x| x.1),
        }
    }
}

fn point(id: &str, mu: i64, plus: u32, minus: u32) -> FixedComponent {
    FixedComponent::new(id, "point", 0, Compass::signs(plus, minus))
        .with_mu(BUNDLE_L, Weight::scalar(mu))
}

fn split(plus: (u32, &str), minus: (u32, &str)) -> Vec<SplitEntry> {
    vec![
        SplitEntry {
            weight: Weight::scalar(1),
            rank: plus.0,
            bundle: plus.1.to_string(),
        },
        SplitEntry {
            weight: Weight::scalar(-1),
            rank: minus.0,
            bundle: minus.1.to_string(),
        },
    ]
}

fn finish(mut g: GridData, edges: &[(&str, &str, EdgeTag)]) -> GridData {
    g.edges = edges
        .iter()
        .map(|&(s, d, t)| OrbitEdge::tagged(s, d, t))
        .collect();
    g.flags.equalized = true;
    g.flags.edges_complete = true;
    g
}

/// `P(O(1)^{n-1} + O(3))` or `P(O(1)^{n-2} + O(2)^2)` over P^1 with its
/// tautological bundle.
pub fn build_scroll(n: u32, sp: ScrollSplit) -> Result<GridData> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("scroll needs n >= 2, got {n}")));
    }
    let mut g = GridData::new(1, n);
    let inner = projective_label(n - 2);
    g.components = vec![
        point("y3", 3, n, 0),
        FixedComponent::new("Y2", inner.clone(), n - 2, Compass::signs(1, 1))
            .with_mu(BUNDLE_L, Weight::scalar(2))
            .with_split(split((1, "O"), (1, "O(1)"))),
        FixedComponent::new("Y1", inner, n - 2, Compass::signs(1, 1))
            .with_mu(BUNDLE_L, Weight::scalar(1))
            .with_split(split((1, "O(1)"), (1, "O"))),
        point("y0", 0, 0, n),
    ];
    g.meta.insert("family".into(), "scroll".into());
    g.meta.insert(
        "split".into(),
        sp.degrees(n)
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(","),
    );
    let mut edges = vec![("Y1", "y0", A), ("y3", "Y2", A)];
    match sp {
        ScrollSplit::One3 => edges.push(("Y2", "Y1", C)),
        ScrollSplit::TwoTwo => {
            edges.push(("Y2", "y0", B));
            edges.push(("y3", "Y1", B));
            if n >= 3 {
                edges.push(("Y2", "Y1", C));
            }
        }
    }
    edges.push(("y3", "y0", E));
    Ok(finish(g, &edges))
}

/// Quadric bundle over P^1 (for instance `P^1 x Q^{n-1}`), `n >= 4`.
pub fn build_quadric_bundle(n: u32) -> Result<GridData> {
    if n < 4 {
        return Err(Error::OutOfRange(format!(
            "quadric bundle needs n >= 4, got {n}; use build_p1cubed for n = 3"
        )));
    }
    let mut g = GridData::new(1, n);
    let q = quadric_label(n - 3);
    g.components = vec![
        point("y0", 0, 0, n),
        point("p1", 1, 1, n - 1),
        FixedComponent::new("Q1", q.clone(), n - 3, Compass::signs(1, 2))
            .with_mu(BUNDLE_L, Weight::scalar(1))
            .with_split(split((1, "O(1)"), (2, "O(1)+O"))),
        point("p2", 2, n - 1, 1),
        FixedComponent::new("Q2", q, n - 3, Compass::signs(2, 1))
            .with_mu(BUNDLE_L, Weight::scalar(2))
            .with_split(split((2, "O(1)+O"), (1, "O(1)"))),
        point("y3", 3, n, 0),
    ];
    g.meta.insert("family".into(), "quadric-bundle".into());
    if n == 4 {
        g.meta
            .insert("inner-restriction".into(), "L|P^1 = O(2)".into());
    }
    let edges = [
        ("p1", "y0", A),
        ("Q1", "y0", A),
        ("y3", "p2", A),
        ("y3", "Q2", A),
        ("Q2", "Q1", C),
        ("p2", "Q1", C),
        ("Q2", "p1", C),
        ("p2", "y0", B),
        ("Q2", "y0", B),
        ("y3", "Q1", B),
        ("y3", "p1", B),
        ("y3", "y0", E),
    ];
    Ok(finish(g, &edges))
}

fn cube_id(e: u8) -> String {
    format!("y{}{}{}", e & 1, (e >> 1) & 1, (e >> 2) & 1)
}

/// `(P^1)^3` with `O(1,1,1)` under the diagonal one-parameter subgroup.
pub fn build_p1cubed() -> GridData {
    let mut g = GridData::new(1, 3);
    for e in 0u8..8 {
        let k = e.count_ones();
        g.components
            .push(point(&cube_id(e), i64::from(k), k, 3 - k));
    }
    let mut edges = Vec::new();
    for s in 0u8..8 {
        for d in 0u8..8 {
            if s != d && s & d == d {
                let tag = match (s.count_ones(), d.count_ones()) {
                    (1, 0) | (3, 2) => A,
                    (2, 1) => C,
                    (2, 0) | (3, 1) => B,
                    _ => E,
                };
                edges.push((cube_id(s), cube_id(d), tag));
            }
        }
    }
    g.edges = edges
        .into_iter()
        .map(|(s, d, t)| OrbitEdge::tagged(s, d, t))
        .collect();
    g.flags.equalized = true;
    g.flags.edges_complete = true;
    g.meta.insert("family".into(), "p1cubed".into());
    g
}

/// `(P^1)^3` with `O(1,1,1)` under its full rank-3 torus: the cube.
pub fn build_cube_torus() -> GridData {
    let mut g = GridData::new(3, 3);
    for e in 0u8..8 {
        let eps: Vec<i64> = (0..3).map(|i| i64::from((e >> i) & 1)).collect();
        let cp = Compass::from_weights((0..3).map(|i| {
            if eps[i] == 1 {
                Weight::unit(3, i)
            } else {
                Weight::unit(3, i).scale(-1)
            }
        }));
        g.components
            .push(FixedComponent::new(cube_id(e), "point", 0, cp).with_mu(BUNDLE_L, Weight(eps)));
    }
    for s in 0u8..8 {
        for i in 0..3 {
            if (s >> i) & 1 == 1 {
                g.edges
                    .push(OrbitEdge::new(cube_id(s), cube_id(s & !(1 << i))));
            }
        }
    }
    g.flags.edges_complete = true;
    g.meta.insert("family".into(), "cube-torus".into());
    g
}

/// Lagrangian Grassmannian `LG(3,6)` with `O(1)`: two points and two `P^2`.
pub fn build_sp6() -> GridData {
    let mut g = GridData::new(1, 6);
    g.components = vec![
        point("y3", 3, 6, 0),
        FixedComponent::new("Y2", "P^2", 2, Compass::signs(3, 1))
            .with_mu(BUNDLE_L, Weight::scalar(2)),
        FixedComponent::new("Y1", "P^2", 2, Compass::signs(1, 3))
            .with_mu(BUNDLE_L, Weight::scalar(1)),
        point("y0", 0, 0, 6),
    ];
    g.meta.insert("family".into(), "sp6".into());
    finish(
        g,
        &[
            ("Y1", "y0", A),
            ("y3", "Y2", A),
            ("Y2", "y0", B),
            ("y3", "Y1", B),
            ("Y2", "Y1", C),
            ("y3", "y0", E),
        ],
    )
}

/// Synthetic bandwidth-3 grid with one inner component of dimension `d` on
/// each level, shaped like [`build_sp6`].
pub fn bw3_single_inner_grid(n: u32, d: u32) -> Result<GridData> {
    if n < 2 || d > n - 2 {
        return Err(Error::OutOfRange(format!(
            "need 0 <= d <= n-2, got n = {n}, d = {d}"
        )));
    }
    let mut g = GridData::new(1, n);
    let label = format!("Y(dim {d})");
    g.components = vec![
        point("y3", 3, n, 0),
        FixedComponent::new("Y2", label.clone(), d, Compass::signs(n - d - 1, 1))
            .with_mu(BUNDLE_L, Weight::scalar(2)),
        FixedComponent::new("Y1", label, d, Compass::signs(1, n - d - 1))
            .with_mu(BUNDLE_L, Weight::scalar(1)),
        point("y0", 0, 0, n),
    ];
    Ok(finish(
        g,
        &[
            ("Y1", "y0", A),
            ("y3", "Y2", A),
            ("Y2", "y0", B),
            ("y3", "Y1", B),
            ("Y2", "Y1", C),
            ("y3", "y0", E),
        ],
    ))
}
