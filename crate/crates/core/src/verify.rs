//! The acceptance checks, runnable from the command line.

use crate::adjunction::{
    classify_bw3, edge_row, orbit_table, tau_lower_bound, zero_drop_exactly_on, Case,
};
use crate::algebra::lattice::{Projection, Weight};
use crate::algebra::rational::{binomial, int, rat, Rational};
use crate::families::*;
use crate::grid::model::{EdgeTag, GridData, BUNDLE_ADJOINT, BUNDLE_L, BUNDLE_MINUS_K};
use crate::grid::ops::{is_nef, minimal_edges, mu_adjoint, mu_canonical, mu_drop, nef_on_edges};
use crate::grid::validate::validate;
use crate::localization::*;
use std::collections::BTreeMap;

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

pub type Check = std::result::Result<String, String>;
pub type Criterion = (u8, &'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s<T>(r: crate::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Rank-1 builder grids with tagged edges, two pointed ends and bandwidth 3.
pub fn bw3_builders() -> Vec<(String, GridData)> {
    let mut v = Vec::new();
    for n in 2..=7 {
        for sp in [ScrollSplit::One3, ScrollSplit::TwoTwo] {
            v.push((
                format!("scroll n={n} {sp}"),
                build_scroll(n, sp).expect("n >= 2"),
            ));
        }
    }
    for n in 4..=8 {
        v.push((
            format!("quadric bundle n={n}"),
            build_quadric_bundle(n).expect("n >= 4"),
        ));
    }
    v.push(("p1cubed".into(), build_p1cubed()));
    v.push(("sp6".into(), build_sp6()));
    v
}

fn c1() -> Check {
    ensure(solve_bw3_a(2) == Some(1), || {
        format!("solve_bw3_a(2) = {:?}", solve_bw3_a(2))
    })?;
    ensure(solve_bw3_a(3) == Some(3), || {
        format!("solve_bw3_a(3) = {:?}", solve_bw3_a(3))
    })?;
    for n in 4..=12 {
        ensure(solve_bw3_a(n).is_none(), || {
            format!("solve_bw3_a({n}) = {:?}", solve_bw3_a(n))
        })?;
    }
    for n in 2..=12 {
        let s = solve_bw3_a(n);
        for a in 0..=50 {
            ensure(verify_bw3_identity(n, a) == (s == Some(a)), || {
                format!("identity disagrees at n={n}, a={a}")
            })?;
        }
    }
    Ok("a = 1 (n=2), a = 3 (n=3), none for n=4..12; 561 identity checks agree".into())
}

fn isolated_family_grids() -> Vec<(String, GridData)> {
    let mut v = Vec::new();
    for n in 1..=5i64 {
        let w: Vec<(i64, u32)> = (0..=n).map(|a| (a, 1)).collect();
        v.push((
            format!("P^{n}"),
            build_projective_space(&w).expect("distinct weights"),
        ));
    }
    v.push((
        "scroll n=2 split 1".into(),
        build_scroll(2, ScrollSplit::One3).expect("n = 2"),
    ));
    v.push((
        "scroll n=2 split 2".into(),
        build_scroll(2, ScrollSplit::TwoTwo).expect("n = 2"),
    ));
    v.push(("p1cubed".into(), build_p1cubed()));
    v.push(("cube torus".into(), build_cube_torus()));
    for n in 3..=6 {
        v.push((
            format!("Q^{n} full torus"),
            build_quadric_full_torus(n).expect("n >= 3"),
        ));
    }
    for m in 6..=8 {
        v.push((
            format!("SO_{m} adjoint"),
            build_so_adjoint(m).expect("m >= 6"),
        ));
    }
    v
}

fn c2() -> Check {
    for n in 1..=5i64 {
        let w: Vec<(i64, u32)> = (0..=n).map(|a| (a, 1)).collect();
        let g = e2s(build_projective_space(&w))?;
        for k in 1..=5u32 {
            let chi = e2s(euler_char_poly(&g, BUNDLE_L, k))?;
            let v = chi.coefficient_sum();
            let want = binomial((n + i64::from(k)) as u64, n as u64);
            ensure(v == want, || {
                format!("chi(P^{n}, O({k})) = {v}, expected {want}")
            })?;
        }
    }
    let grids = isolated_family_grids();
    for (name, g) in &grids {
        let chi = e2s(euler_char_torus(g, BUNDLE_L, 0))?;
        let p = chi
            .as_laurent_polynomial()
            .ok_or_else(|| format!("{name}: residual denominator"))?;
        ensure(
            p == crate::algebra::laurent::LaurentPoly::one(g.rank),
            || format!("{name}: chi(O) = {p}"),
        )?;
    }
    Ok(format!(
        "25 binomial values; chi(O) = 1 on {} isolated-point grids",
        grids.len()
    ))
}

fn c3() -> Check {
    let g = build_p1cubed();
    let chi = e2s(euler_char(&g, BUNDLE_L, 1))?;
    let p = chi.as_laurent_polynomial().ok_or("residual denominator")?;
    ensure(p.coefficient_sum() == int(8), || {
        format!("coefficient sum {}", p.coefficient_sum())
    })?;
    let ones = g
        .components
        .iter()
        .filter(|c| c.mu_of(BUNDLE_L) == Some(&[int(1)][..]))
        .count();
    ensure(Some(ones as u64) == solve_bw3_a(3), || {
        format!("{ones} weight-1 points")
    })?;
    Ok(format!("chi = {p}; 3 weight-1 points = solve_bw3_a(3)"))
}

fn c4() -> Check {
    let f4 = chi_fano4(625, 250);
    ensure(eval_at(&f4, &int(1)) == int(126), || {
        format!("chi4(1) = {}", eval_at(&f4, &int(1)))
    })?;
    let f5 = e2s(chi_fano5(7776, 3240, Some((rat(5, 36), rat(8, 36))), None))?;
    ensure(f5.chi1 == int(462), || format!("chi5(1) = {}", f5.chi1))?;
    ensure(f5.factorization_check == Some(true), || {
        "factorization check failed".into()
    })?;
    let refl = e2s(f5.poly.compose_affine(&int(-1), &int(-1)))?;
    ensure(refl == f5.poly.neg(), || format!("chi(-1-t) = {refl}"))?;
    Ok("chi4(1) = 126, chi5(1) = 462, d a1 a2 = 240, Serre antisymmetry exact".into())
}

fn c5() -> Check {
    let mut count = 0;
    for n in [5u32, 6, 7] {
        let ni = i64::from(n);
        for d in 0..=n - 2 {
            for d1 in 0..=n - 2 {
                for d2 in 0..=n - 2 {
                    let rows = e2s(orbit_table(n, d, d1, d2))?;
                    let (d, d1, d2) = (i64::from(d), i64::from(d1), i64::from(d2));
                    let want = [
                        (1, d + 2, int(d + 2)),
                        (2, 2 * ni - d - 2, int(ni - 1) - rat(d, 2)),
                        (1, 2 * ni - 4 - d1 - d2, int(2 * ni - 4 - d1 - d2)),
                        (3, 2 * ni, rat(2 * ni, 3)),
                    ];
                    for (r, w) in rows.iter().zip(&want) {
                        ensure(
                            (r.deg_l, r.deg_minus_k, &r.tau_bound) == (w.0, w.1, &w.2),
                            || format!("n={n} d={d} d1={d1} d2={d2} row {}: {:?}", r.tag, r),
                        )?;
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{count} rows match"))
}

fn c6() -> Check {
    for n in 3..=7 {
        let o = classify_bw3(&e2s(build_scroll(n, ScrollSplit::One3))?);
        ensure(o.case == Case::Scroll, || {
            format!("scroll n={n}: {}", o.detail)
        })?;
    }
    for n in 4..=8 {
        let o = classify_bw3(&e2s(build_quadric_bundle(n))?);
        ensure(o.case == Case::QuadricBundle, || {
            format!("quadric bundle n={n}: {}", o.detail)
        })?;
    }
    let o = classify_bw3(&build_sp6());
    ensure(o.case == Case::FanoRhoOne, || format!("sp6: {}", o.detail))?;
    let perturbed = [
        (e2s(bw3_single_inner_grid(6, 3))?, "2n/3-2"),
        (e2s(bw3_single_inner_grid(6, 1))?, "2n/3-2"),
        (e2s(bw3_single_inner_grid(7, 2))?, "divisible by 3"),
        (e2s(bw3_single_inner_grid(8, 3))?, "divisible by 3"),
    ];
    for (g, key) in &perturbed {
        let o = classify_bw3(g);
        ensure(
            o.case == Case::Inconsistent && o.detail.contains(key),
            || format!("perturbed n={}: {}", g.n, o.detail),
        )?;
    }
    Ok(
        "Scroll, QuadricBundle, FanoRhoOne reproduced; 4 perturbations rejected with reasons"
            .into(),
    )
}

fn with_bundles(g: &GridData) -> std::result::Result<(GridData, Rational), String> {
    let tau = e2s(tau_lower_bound(g))?;
    let k = e2s(mu_canonical(g))?;
    Ok((e2s(mu_adjoint(&k, &tau))?, tau))
}

fn c7() -> Check {
    let mut edges = 0;
    for (name, g) in bw3_builders() {
        let (h, tau) = with_bundles(&g)?;
        for e in &h.edges {
            let tag = e.tag().ok_or_else(|| format!("{name}: untagged edge"))?;
            let row = e2s(edge_row(&h, &e.src, &e.dst, tag))?;
            let dl = e2s(mu_drop(&h, e, BUNDLE_L))?;
            let dk = e2s(mu_drop(&h, e, BUNDLE_MINUS_K))?;
            let da = e2s(mu_drop(&h, e, BUNDLE_ADJOINT))?;
            let delta = int(i64::from(e.delta));
            ensure(dl == &delta * int(row.deg_l), || {
                format!("{name} {}->{}: L drop {dl}", e.src, e.dst)
            })?;
            ensure(dk == &delta * int(row.deg_minus_k), || {
                format!("{name} {}->{}: -K drop {dk}", e.src, e.dst)
            })?;
            let want = &delta * (-int(row.deg_minus_k) + &tau * int(row.deg_l));
            ensure(da == want, || {
                format!("{name} {}->{}: K+tauL drop {da}", e.src, e.dst)
            })?;
            if tag == EdgeTag::E {
                ensure(dk == int(2 * i64::from(h.n)), || {
                    format!("{name}: -K drop across E is {dk}")
                })?;
            }
            edges += 1;
        }
    }
    Ok(format!("{edges} edges consistent for L, -K, K+tauL"))
}

fn c8() -> Check {
    for n in 2..=7 {
        for sp in [ScrollSplit::One3, ScrollSplit::TwoTwo] {
            let g = e2s(build_scroll(n, sp))?;
            let k = e2s(mu_canonical(&g))?;
            let a = e2s(mu_adjoint(&k, &int(n.into())))?;
            ensure(e2s(is_nef(&a, BUNDLE_ADJOINT))?, || {
                format!("K+nL not nef on scroll n={n}")
            })?;
            ensure(
                e2s(zero_drop_exactly_on(&a, BUNDLE_ADJOINT, EdgeTag::A))?,
                || format!("scroll n={n}: zero drops off A"),
            )?;
        }
    }
    let mut grids = bw3_builders();
    for n in 1..=5i64 {
        let w: Vec<(i64, u32)> = (0..=n).map(|a| (a, 1)).collect();
        grids.push((format!("P^{n}"), e2s(build_projective_space(&w))?));
    }
    grids.push((
        "P^5 blocks".into(),
        e2s(build_projective_space(&[(3, 2), (0, 1), (1, 3)]))?,
    ));
    let mut checks = 0;
    for (name, g) in &grids {
        for e in &g.edges {
            ensure(e2s(mu_drop(g, e, BUNDLE_L))? > int(0), || {
                format!("{name}: L not decreasing on {}->{}", e.src, e.dst)
            })?;
        }
        let mut h = e2s(mu_canonical(g)).unwrap_or_else(|_| g.clone());
        let bundles: Vec<String> = if h.has_bundle(BUNDLE_MINUS_K) {
            let mut out = vec![BUNDLE_L.to_string(), BUNDLE_MINUS_K.to_string()];
            for t in 0..=8 {
                h = e2s(mu_adjoint(&h, &rat(t, 2)))?;
                let nm = format!("K+{t}/2L");
                for c in &mut h.components {
                    let v = c.mu[BUNDLE_ADJOINT].clone();
                    c.mu.insert(nm.clone(), v);
                }
                out.push(nm);
            }
            out
        } else {
            vec![BUNDLE_L.to_string()]
        };
        let min = minimal_edges(&h);
        for b in &bundles {
            let full = e2s(is_nef(&h, b))?;
            let part = e2s(nef_on_edges(&h, &min, b))?;
            ensure(full == part, || {
                format!("{name}: minimal-edge verdict differs for {b}")
            })?;
            checks += 1;
        }
    }
    Ok(format!(
        "K+nL nef on scrolls with zero drop on A only; {checks} minimal-edge verdicts agree"
    ))
}

fn c9() -> Check {
    for m in 7..=12 {
        let built = e2s(so_table_from_builder(m))?;
        let row = e2s(adjoint_table_row(GroupFamily::SO, m - 4))?;
        ensure(built == row, || {
            format!("m={m}: built {built} vs table {row}")
        })?;
        let g = e2s(build_so_adjoint(m))?;
        ensure(validate(&g).is_empty(), || {
            format!("m={m}: grid fails validation")
        })?;
        for c in &g.components {
            if let Some(cp) = c.compass() {
                ensure(cp.len() == 2 * m - 7 - c.dim, || {
                    format!("m={m}, {}: compass size {}", c.id, cp.len())
                })?;
            }
        }
    }
    let g = e2s(build_so_adjoint(10))?;
    let h = ContactHexagonData::new(6);
    let want: BTreeMap<Weight, u32> = (0..6).map(|i| (h.beta(i).clone(), 2)).collect();
    let central: Vec<_> = g
        .components
        .iter()
        .filter(|c| {
            c.mu_of(BUNDLE_L)
                .is_some_and(|v| v.iter().all(|x| *x == int(0)))
        })
        .collect();
    ensure(central.len() == 2, || {
        format!("{} central components at m=10", central.len())
    })?;
    for c in central {
        let cp = c.compass().ok_or("central compass unspecified")?;
        ensure(cp.entries() == &want, || format!("central compass {cp}"))?;
    }
    Ok("rows m=7..12 match; compass sizes 2m-7-dim; central compass {±β}×2".into())
}

fn c10() -> Check {
    let h = ContactHexagonData::new(5);
    let mut want: BTreeMap<Weight, u32> = BTreeMap::new();
    for i in 0..6 {
        want.insert(h.alpha(i).clone(), 1);
        want.insert(h.beta(i).clone(), 1);
    }
    let a3 = e2s(root_system(RootKind::A, 3))?;
    let pa = e2s(Projection::new(vec![vec![1, -1, 0, 0], vec![0, 1, -1, 0]]))?;
    ensure(e2s(project_roots(&a3, &pa))? == want, || {
        "A3 image differs".into()
    })?;
    let d3 = e2s(root_system(RootKind::D, 3))?;
    let pd = e2s(Projection::new(vec![vec![1, -1, 0], vec![0, 1, -1]]))?;
    ensure(e2s(project_roots(&d3, &pd))? == want, || {
        "D3 image differs".into()
    })?;
    let mut count = 0;
    for n in [5u32, 6] {
        let h = ContactHexagonData::new(n);
        for i in 0..6 {
            let p = h.pi(i);
            for d in 0..=n - 2 {
                let (ca, cb) = e2s(contact_compasses(&h, i, d))?;
                let ra = e2s(restrict_compass(&ca, &p))?;
                let rb = e2s(restrict_compass(&cb, &p))?;
                ensure(ra == crate::grid::model::Compass::signs(n - 1, 0), || {
                    format!("n={n} i={i}: alpha restricts to {ra}")
                })?;
                ensure(
                    rb == crate::grid::model::Compass::signs(n - d - 2, 1),
                    || format!("n={n} i={i} d={d}: inner restricts to {rb}"),
                )?;
                count += 1;
            }
        }
    }
    Ok(format!(
        "A3 and D3 images equal 6 alpha + 6 beta; {count} restrictions match"
    ))
}

pub const CRITERIA: [Criterion; 10] = [
    (1, "bandwidth-3 identity", c1),
    (2, "localization oracle", c2),
    (3, "P1xP1xP1", c3),
    (4, "Fano Hilbert polynomials", c4),
    (5, "orbit table", c5),
    (6, "classification filter", c6),
    (7, "AM-FM consistency", c7),
    (8, "nef test", c8),
    (9, "adjoint table reproduction", c9),
    (10, "root projection", c10),
];

pub fn run_all() -> Vec<CriterionResult> {
    CRITERIA
        .iter()
        .map(|&(id, name, f)| {
            let r = f();
            CriterionResult {
                id,
                name,
                passed: r.is_ok(),
                detail: r.unwrap_or_else(|e| e),
            }
        })
        .collect()
}
