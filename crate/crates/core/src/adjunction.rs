//! Intersection numbers of the invariant curves of a bandwidth-3 action,
//! lower bounds for the nef value, and the resulting classification filter.

use crate::algebra::rational::{int, Rational};
use crate::error::{Error, Result};
use crate::grid::model::{EdgeTag, GridData, BUNDLE_L, BUNDLE_MINUS_K};
use crate::grid::ops::{
    bandwidth, levels, mu_canonical, mu_drop, normalize_linearization, rk_minus, rk_plus,
};
use crate::grid::validate::validate;
use num_traits::Zero;
use std::fmt;

/// Degrees of `L` and `-K` on a curve of the given type and the bound
/// `tau >= deg(-K) / deg(L)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitRow {
    pub tag: EdgeTag,
    pub deg_l: i64,
    pub deg_minus_k: i64,
    pub tau_bound: Rational,
}

fn row(n: u32, tag: EdgeTag, d: u32, d1: u32, d2: u32) -> OrbitRow {
    let n = i64::from(n);
    let (deg_l, deg_minus_k) = match tag {
        EdgeTag::A => (1, i64::from(d) + 2),
        EdgeTag::B => (2, 2 * n - i64::from(d) - 2),
        EdgeTag::C => (1, 2 * n - 4 - i64::from(d1) - i64::from(d2)),
        EdgeTag::E => (3, 2 * n),
    };
    OrbitRow {
        tag,
        deg_l,
        deg_minus_k,
        tau_bound: Rational::new(deg_minus_k.into(), deg_l.into()),
    }
}

/// Rows A, B, C, E for inner dimensions `d_star` (A and B) and `d1`, `d2`
/// (the two ends of C).
pub fn orbit_table(n: u32, d_star: u32, d1: u32, d2: u32) -> Result<Vec<OrbitRow>> {
    if n < 3 {
        return Err(Error::OutOfRange(format!(
            "orbit table needs n >= 3, got {n}"
        )));
    }
    if [d_star, d1, d2].iter().any(|&d| d > n - 2) {
        return Err(Error::OutOfRange(format!(
            "dimensions must lie in 0..={}, got {d_star}, {d1}, {d2}",
            n - 2
        )));
    }
    Ok([EdgeTag::A, EdgeTag::B, EdgeTag::C, EdgeTag::E]
        .into_iter()
        .map(|t| row(n, t, d_star, d1, d2))
        .collect())
}

/// The row instantiated for one edge of a grid. For A and B the inner
/// dimension is the larger of the two endpoint dimensions; for C, `d1` is
/// the dimension of `dst` and `d2` that of `src`.
pub fn edge_row(g: &GridData, src: &str, dst: &str, tag: EdgeTag) -> Result<OrbitRow> {
    let ds = g
        .component(src)
        .ok_or_else(|| Error::UnknownComponent(src.to_string()))?
        .dim;
    let dd = g
        .component(dst)
        .ok_or_else(|| Error::UnknownComponent(dst.to_string()))?
        .dim;
    Ok(row(g.n, tag, ds.max(dd), dd, ds))
}

/// Maximum of the bounds over the edges present.
pub fn tau_lower_bound(g: &GridData) -> Result<Rational> {
    if g.rank != 1 {
        return Err(Error::NotRankOne(g.rank));
    }
    let mut best: Option<Rational> = None;
    for e in &g.edges {
        let tag = e
            .tag()
            .ok_or_else(|| Error::UntaggedEdge(e.src.clone(), e.dst.clone()))?;
        let b = edge_row(g, &e.src, &e.dst, tag)?.tau_bound;
        if best.as_ref().is_none_or(|x| b > *x) {
            best = Some(b);
        }
    }
    best.ok_or(Error::Empty("grid edges"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TauStatus {
    Allowed,
    Forbidden,
    Exceptional,
}

impl fmt::Display for TauStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TauStatus::Allowed => "allowed",
            TauStatus::Forbidden => "forbidden",
            TauStatus::Exceptional => "exceptional",
        })
    }
}

/// Pairs `(variety, bundle, n)` where the nef value may be fractional.
pub const EXCEPTIONAL_PAIRS: [(&str, &str, u32); 3] =
    [("P^4", "O(2)", 4), ("P^3", "O(3)", 3), ("Q^3", "O(2)", 3)];

/// Whether a nef value `tau > n - 2` is possible for a polarized `n`-fold.
/// `pair` names the variety and bundle when known; a listed exceptional
/// pair is reported as such.
pub fn tau_integrality(n: u32, tau: &Rational, pair: Option<(&str, &str)>) -> Result<TauStatus> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("n must be at least 3, got {n}")));
    }
    if *tau <= int(i64::from(n) - 2) {
        return Err(Error::Precondition(format!(
            "tau must exceed n - 2 = {}",
            n - 2
        )));
    }
    if let Some((x, l)) = pair {
        let norm = |s: &str| s.replace(['{', '}', ' '], "");
        if EXCEPTIONAL_PAIRS
            .iter()
            .any(|&(a, b, k)| norm(x) == a && norm(l) == b && k == n)
        {
            return Ok(TauStatus::Exceptional);
        }
    }
    let n = i64::from(n);
    if tau.is_integer()
        && (n - 1..=n + 1).contains(&tau.to_integer().try_into().unwrap_or(i64::MIN))
    {
        Ok(TauStatus::Allowed)
    } else {
        Ok(TauStatus::Forbidden)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Case {
    Scroll,
    QuadricBundle,
    FanoRhoOne,
    Inconsistent,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationOutcome {
    pub case: Case,
    pub detail: String,
    /// Constraints that were checked and hold.
    pub certificates: Vec<String>,
}

impl ClassificationOutcome {
    fn inconsistent(detail: impl Into<String>, certificates: Vec<String>) -> Self {
        ClassificationOutcome {
            case: Case::Inconsistent,
            detail: detail.into(),
            certificates,
        }
    }
}

impl fmt::Display for ClassificationOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "case: {}", self.case)?;
        writeln!(f, "detail: {}", self.detail)?;
        for c in &self.certificates {
            writeln!(f, "  checked: {c}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceCase {
    /// `(P^1 x P^1, O(1,2))`
    P1xP1O12,
    /// `(P(O(1) + O(3)), O(1))`, the Hirzebruch surface `F_2`
    HirzebruchF2,
}

impl fmt::Display for SurfaceCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SurfaceCase::P1xP1O12 => "P1xP1_O12",
            SurfaceCase::HirzebruchF2 => "Hirzebruch_F2",
        })
    }
}

/// Bandwidth-3 surfaces with four isolated fixed points, told apart by their
/// orbits: curves joining levels 2 and 1 (type C) exist only on `F_2`,
/// curves of `L`-degree 2 (type B) only on `P^1 x P^1`.
pub fn surface_bw3(g: &GridData) -> Result<SurfaceCase> {
    if g.rank != 1 || g.n != 2 {
        return Err(Error::Precondition(
            "surface case needs a rank-1 grid with n = 2".into(),
        ));
    }
    let g = normalize_linearization(g, BUNDLE_L)?;
    let lv = levels(&g, BUNDLE_L)?;
    let shape: Vec<(Rational, usize)> = lv.iter().map(|(k, v)| (k.clone(), v.len())).collect();
    if shape != (0..4).map(|k| (int(k), 1)).collect::<Vec<_>>()
        || g.components.iter().any(|c| c.dim != 0)
    {
        return Err(Error::Precondition(
            "expected four isolated fixed points with mu = 0, 1, 2, 3".into(),
        ));
    }
    let mu = |id: &str| {
        lv.iter()
            .find(|(_, v)| v.iter().any(|x| x == id))
            .map(|(k, _)| k.clone())
            .unwrap()
    };
    let mut has_b = false;
    let mut has_c = false;
    for e in &g.edges {
        let (a, b) = (mu(&e.src), mu(&e.dst));
        has_c |= a == int(2) && b == int(1);
        has_b |= &a - &b == int(2);
    }
    match (has_b, has_c) {
        (true, false) => Ok(SurfaceCase::P1xP1O12),
        (false, true) => Ok(SurfaceCase::HirzebruchF2),
        _ => Err(Error::Precondition(format!(
            "orbit pattern (B present: {has_b}, C present: {has_c}) matches neither surface"
        ))),
    }
}

/// Classification filter for bandwidth-3 actions with isolated extremal
/// fixed points. Only necessary combinatorial conditions are checked; every
/// positive answer lists what was verified.
pub fn classify_bw3(g: &GridData) -> ClassificationOutcome {
    match classify_inner(g) {
        Ok(o) => o,
        Err(e) => {
            ClassificationOutcome::inconsistent(format!("precondition failed: {e}"), Vec::new())
        }
    }
}

fn classify_inner(g: &GridData) -> Result<ClassificationOutcome> {
    let mut cert = Vec::new();
    let v = validate(g);
    if !v.is_empty() {
        let list: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        return Ok(ClassificationOutcome::inconsistent(
            format!("grid fails validation: {}", list.join("; ")),
            cert,
        ));
    }
    cert.push("grid validates".to_string());
    if g.rank != 1 {
        return Err(Error::NotRankOne(g.rank));
    }
    if !g.flags.equalized {
        return Err(Error::NotEqualized);
    }
    let g = normalize_linearization(g, BUNDLE_L)?;
    let bw = bandwidth(&g, BUNDLE_L)?;
    if bw != int(3) {
        return Ok(ClassificationOutcome::inconsistent(
            format!("bandwidth is {bw}, not 3"),
            cert,
        ));
    }
    cert.push("bandwidth 3".to_string());
    let lv = levels(&g, BUNDLE_L)?;
    if let Some(k) = lv.keys().find(|k| !k.is_integer()) {
        return Ok(ClassificationOutcome::inconsistent(
            format!("non-integral level {k}"),
            cert,
        ));
    }
    let level = |k: i64| -> Vec<&crate::grid::model::FixedComponent> {
        lv.get(&int(k))
            .map(|ids| ids.iter().map(|id| g.component(id).unwrap()).collect())
            .unwrap_or_default()
    };
    for k in [0, 3] {
        let ends = level(k);
        if ends.len() != 1 || ends[0].dim != 0 {
            return Ok(ClassificationOutcome::inconsistent(
                format!("level {k} must be a single point (two pointed ends)"),
                cert,
            ));
        }
    }
    cert.push("two pointed ends".to_string());

    if g.n == 2 {
        let s = surface_bw3(&g)?;
        cert.push(format!("surface orbit pattern {s}"));
        let case = match s {
            SurfaceCase::P1xP1O12 => Case::QuadricBundle,
            SurfaceCase::HirzebruchF2 => Case::Scroll,
        };
        return Ok(ClassificationOutcome {
            case,
            detail: format!("surface {s}"),
            certificates: cert,
        });
    }

    let (l1, l2) = (level(1), level(2));
    if l1.is_empty() || l2.is_empty() {
        return Ok(ClassificationOutcome::inconsistent(
            "both inner levels must be nonempty",
            cert,
        ));
    }
    cert.push("inner levels nonempty".to_string());
    let n = g.n;
    let tau_cert = |cert: &mut Vec<String>| -> Result<()> {
        if !g.edges.is_empty() && g.edges.iter().all(|e| e.tag().is_some()) {
            cert.push(format!(
                "tau lower bound from orbits = {}",
                crate::algebra::rational::fmt(&tau_lower_bound(&g)?)
            ));
        }
        Ok(())
    };

    if l1.iter().chain(&l2).any(|c| c.dim + 2 == n) {
        let ok = l1.len() == 1 && l2.len() == 1 && l1[0].dim + 2 == n && l2[0].dim + 2 == n;
        if !ok {
            return Ok(ClassificationOutcome::inconsistent(
                "a codimension-2 inner component forces tau >= n and exactly one P^{n-2} on each inner level",
                cert,
            ));
        }
        if rk_plus(&g, l1[0])? != 1 || rk_minus(&g, l2[0])? != 1 {
            return Ok(ClassificationOutcome::inconsistent(
                "rk+(Y1) = 1 = rk-(Y2) fails",
                cert,
            ));
        }
        cert.push(format!("inner components of dimension n-2 = {}", n - 2));
        cert.push("rk+(Y1) = 1 = rk-(Y2)".to_string());
        cert.push("A-row with d = n-2 gives tau >= n".to_string());
        tau_cert(&mut cert)?;
        return Ok(ClassificationOutcome {
            case: Case::Scroll,
            detail: "scroll over P^1".into(),
            certificates: cert,
        });
    }

    let pair_level = |lv: &[&crate::grid::model::FixedComponent]| {
        lv.len() == 2 && lv.iter().any(|c| c.dim == 0) && lv.iter().any(|c| c.dim + 3 == n)
    };
    if n >= 4 && pair_level(&l1) && pair_level(&l2) {
        cert.push(format!(
            "each inner level is a point and a component of dimension n-3 = {}",
            n - 3
        ));
        tau_cert(&mut cert)?;
        return Ok(ClassificationOutcome {
            case: Case::QuadricBundle,
            detail: "quadric bundle over P^1".into(),
            certificates: cert,
        });
    }
    if n == 3 && l1.len() == 3 && l2.len() == 3 && l1.iter().chain(&l2).all(|c| c.dim == 0) {
        cert.push("each inner level consists of three points".to_string());
        tau_cert(&mut cert)?;
        return Ok(ClassificationOutcome {
            case: Case::QuadricBundle,
            detail: "rho=3 product case P1xP1xP1 (tau = 2n/3 = n-1)".into(),
            certificates: cert,
        });
    }

    if l1.len() == 1 && l2.len() == 1 {
        let (d1, d2) = (l1[0].dim, l2[0].dim);
        if n % 3 != 0 || n < 6 {
            return Ok(ClassificationOutcome::inconsistent(
                format!("a single inner component per level requires n divisible by 3 and n >= 6 (n = {n})"),
                cert,
            ));
        }
        let want = 2 * n / 3 - 2;
        if d1 != want || d2 != want {
            return Ok(ClassificationOutcome::inconsistent(
                format!("inner dimension must equal 2n/3-2 = {want} (got {d1} and {d2})"),
                cert,
            ));
        }
        cert.push(format!("n = {n} divisible by 3, n >= 6"));
        cert.push(format!("inner dimension 2n/3-2 = {want}"));
        let k = mu_canonical(&g)?;
        let idx = Rational::new((2 * i64::from(n)).into(), 3.into());
        for c in &k.components {
            let l = &c.mu_of(BUNDLE_L).unwrap()[0];
            let mk = &c.mu_of(BUNDLE_MINUS_K).unwrap()[0];
            if *mk != &idx * l - int(i64::from(n)) {
                return Ok(ClassificationOutcome::inconsistent(
                    format!("-K is not (2n/3) L on `{}`", c.id),
                    cert,
                ));
            }
        }
        cert.push("-K = (2n/3) L on all fixed components".to_string());
        tau_cert(&mut cert)?;
        return Ok(ClassificationOutcome {
            case: Case::FanoRhoOne,
            detail: "Fano manifold of Picard number one with -K = (2n/3) L".into(),
            certificates: cert,
        });
    }

    let desc = |lv: &[&crate::grid::model::FixedComponent]| {
        lv.iter()
            .map(|c| c.dim.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    Ok(ClassificationOutcome::inconsistent(
        format!(
            "inner dimensions [{}] / [{}] fit none of the three cases",
            desc(&l1),
            desc(&l2)
        ),
        cert,
    ))
}

/// Whether the drop of `bundle` is zero exactly on the edges of the given
/// type.
pub fn zero_drop_exactly_on(g: &GridData, bundle: &str, tag: EdgeTag) -> Result<bool> {
    for e in &g.edges {
        let z = mu_drop(g, e, bundle)?.is_zero();
        if z != e.tags.contains(&tag) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;
    use crate::families::bw3::*;
    use crate::grid::ops::reverse_action;

    #[test]
    fn table_rows() {
        let r = orbit_table(5, 3, 1, 2).unwrap();
        assert_eq!(
            (r[0].deg_l, r[0].deg_minus_k, r[0].tau_bound.clone()),
            (1, 5, int(5))
        );
        assert_eq!(
            (r[1].deg_l, r[1].deg_minus_k, r[1].tau_bound.clone()),
            (2, 5, rat(5, 2))
        );
        assert_eq!((r[2].deg_l, r[2].deg_minus_k), (1, 3));
        assert_eq!(
            (r[3].deg_l, r[3].deg_minus_k, r[3].tau_bound.clone()),
            (3, 10, rat(10, 3))
        );
        assert!(orbit_table(5, 4, 0, 0).is_err());
        assert!(orbit_table(2, 0, 0, 0).is_err());
    }

    #[test]
    fn tau_bounds() {
        for n in 3..8 {
            assert_eq!(
                tau_lower_bound(&build_scroll(n, ScrollSplit::One3).unwrap()).unwrap(),
                int(n.into())
            );
        }
        for n in 4..8 {
            assert_eq!(
                tau_lower_bound(&build_quadric_bundle(n).unwrap()).unwrap(),
                int(i64::from(n) - 1)
            );
        }
        assert_eq!(tau_lower_bound(&build_sp6()).unwrap(), int(4));
        let mut g = build_sp6();
        g.edges[0].tags.clear();
        assert!(matches!(tau_lower_bound(&g), Err(Error::UntaggedEdge(..))));
    }

    #[test]
    fn integrality() {
        assert_eq!(
            tau_integrality(5, &rat(9, 2), None).unwrap(),
            TauStatus::Forbidden
        );
        assert_eq!(
            tau_integrality(5, &int(6), None).unwrap(),
            TauStatus::Allowed
        );
        assert_eq!(
            tau_integrality(3, &int(2), Some(("Q^3", "O(2)"))).unwrap(),
            TauStatus::Exceptional
        );
        assert_eq!(
            tau_integrality(3, &int(2), None).unwrap(),
            TauStatus::Allowed
        );
        assert!(tau_integrality(5, &int(3), None).is_err());
    }

    #[test]
    fn classification() {
        for n in 3..8 {
            for sp in [ScrollSplit::One3, ScrollSplit::TwoTwo] {
                assert_eq!(
                    classify_bw3(&build_scroll(n, sp).unwrap()).case,
                    Case::Scroll
                );
            }
        }
        for n in 4..8 {
            assert_eq!(
                classify_bw3(&build_quadric_bundle(n).unwrap()).case,
                Case::QuadricBundle
            );
        }
        assert_eq!(classify_bw3(&build_sp6()).case, Case::FanoRhoOne);
        let p = classify_bw3(&build_p1cubed());
        assert_eq!(p.case, Case::QuadricBundle);
        assert!(p.detail.contains("rho=3"));
        let off = classify_bw3(&bw3_single_inner_grid(6, 3).unwrap());
        assert_eq!(off.case, Case::Inconsistent);
        assert!(off.detail.contains("2n/3-2"), "{}", off.detail);
        let bad_n = classify_bw3(&bw3_single_inner_grid(7, 2).unwrap());
        assert!(bad_n.detail.contains("divisible by 3"), "{}", bad_n.detail);
    }

    #[test]
    fn surfaces() {
        assert_eq!(
            surface_bw3(&build_scroll(2, ScrollSplit::TwoTwo).unwrap()).unwrap(),
            SurfaceCase::P1xP1O12
        );
        assert_eq!(
            surface_bw3(&build_scroll(2, ScrollSplit::One3).unwrap()).unwrap(),
            SurfaceCase::HirzebruchF2
        );
        let mut all = build_scroll(2, ScrollSplit::One3).unwrap();
        all.edges.push(crate::grid::model::OrbitEdge::tagged(
            "Y2",
            "y0",
            EdgeTag::B,
        ));
        assert!(surface_bw3(&all).is_err());
    }

    #[test]
    fn reversal_invariant() {
        for g in [
            build_scroll(4, ScrollSplit::One3).unwrap(),
            build_quadric_bundle(5).unwrap(),
            build_sp6(),
            build_p1cubed(),
        ] {
            assert_eq!(
                classify_bw3(&g).case,
                classify_bw3(&reverse_action(&g)).case
            );
        }
    }
}
