use grid_torus::adjunction::{classify_bw3, Case};
use grid_torus::algebra::lattice::{Projection, Weight};
use grid_torus::algebra::rational::int;
use grid_torus::families::*;
use grid_torus::grid::{bandwidth, is_nef, validate, GridData, BUNDLE_L};
use grid_torus::localization::euler_char_torus;
use grid_torus::Error;
use std::collections::BTreeMap;

fn character(g: &GridData, m: u32) -> BTreeMap<Weight, i64> {
    let chi = euler_char_torus(g, BUNDLE_L, m).unwrap();
    let p = chi
        .as_laurent_polynomial()
        .expect("localization sum is a Laurent polynomial");
    p.terms()
        .iter()
        .map(|(e, c)| {
            (
                Weight::new(e.clone()),
                grid_torus::algebra::rational::to_i64(c).expect("integral"),
            )
        })
        .collect()
}

fn negate(m: &BTreeMap<Weight, u32>) -> BTreeMap<Weight, i64> {
    m.iter().map(|(w, k)| (-w, i64::from(*k))).collect()
}

#[test]
fn adjoint_sections_are_the_adjoint_representation() {
    // h^0(L) on G(1, Q^{m-2}) is the adjoint representation of SO_m; under
    // SL_3 its weights are the projected roots plus the Cartan part.
    let cases = [
        (
            6,
            RootKind::A,
            3,
            vec![vec![1, -1, 0, 0], vec![0, 1, -1, 0]],
        ),
        (7, RootKind::B, 3, vec![vec![1, -1, 0], vec![0, 1, -1]]),
        (
            8,
            RootKind::D,
            4,
            vec![vec![1, -1, 0, 0], vec![0, 1, -1, 0]],
        ),
    ];
    for (m, kind, rank, rows) in cases {
        let g = build_so_adjoint(m).unwrap();
        let rs = root_system(kind, rank).unwrap();
        let p = Projection::non_primitive(rows).unwrap();
        let adj = project_adjoint(&rs, &p).unwrap();
        let chi = character(&g, 1);
        assert_eq!(
            chi.values().sum::<i64>(),
            i64::from(adj.values().sum::<u32>()),
            "m = {m}"
        );
        assert_eq!(chi, negate(&adj), "m = {m}");
    }
}

#[test]
fn cube_torus_character_is_a_product() {
    let g = build_cube_torus();
    for m in 0..=3u32 {
        let chi = character(&g, m);
        assert_eq!(chi.len() as u32, (m + 1).pow(3));
        assert!(chi.values().all(|c| *c == 1));
        for axis in 0..3 {
            let mut vals: Vec<i64> = chi.keys().map(|w| w.0[axis]).collect();
            vals.sort();
            vals.dedup();
            assert_eq!(vals.len() as u32, m + 1);
        }
    }
}

#[test]
fn cube_diagonal_downgrade_matches_p1cubed() {
    let cube = build_cube_torus();
    let p = Projection::new(vec![vec![1, 1, 1]]).unwrap();
    let d = downgrade(&cube, &p, &Merge::Singletons).unwrap();
    let target = build_p1cubed();
    assert_eq!(d.components.len(), target.components.len());
    assert_eq!(bandwidth(&d, BUNDLE_L).unwrap(), int(3));
    for c in &d.components {
        let t = target
            .components
            .iter()
            .find(|t| t.mu == c.mu && t.compass == c.compass);
        assert!(t.is_some(), "{} has no counterpart", c.id);
    }
}

#[test]
fn quadric_downgrades() {
    for n in 3..=7 {
        let g = downgrade_quadric_e1(n).unwrap();
        assert!(validate(&g).is_empty());
        assert_eq!(g.components.len(), 3);
        assert_eq!(bandwidth(&g, BUNDLE_L).unwrap(), int(2));
        let mid = g
            .components
            .iter()
            .find(|c| c.mu[BUNDLE_L][0] == int(0))
            .unwrap();
        assert_eq!(mid.dim, n - 2);
        assert_eq!(mid.label, quadric_label(n - 2));
    }
    for n in [4, 6] {
        let g = downgrade_quadric_diagonal(n).unwrap();
        assert!(validate(&g).is_empty());
        assert_eq!(g.components.len(), 2);
        assert!(g.components.iter().all(|c| c.dim == n / 2));
    }
}

#[test]
fn so_slices_classify() {
    for m in [10, 11, 12] {
        for i in 0..6 {
            let s = so_slice(m, i).unwrap();
            let o = classify_bw3(&s);
            assert_eq!(o.case, Case::QuadricBundle, "m = {m}, i = {i}: {o}");
        }
    }
}

#[test]
fn nef_refuses_incomplete_edges() {
    let g = build_so_adjoint(8).unwrap();
    assert!(!g.flags.edges_complete);
    let s = so_slice(8, 0).unwrap();
    assert_eq!(is_nef(&s, BUNDLE_L), Err(Error::EdgesIncomplete));
}

#[test]
fn projective_spaces() {
    let g = build_projective_space(&[(0, 1), (1, 1), (2, 1)]).unwrap();
    assert!(g.flags.edges_complete && !g.flags.equalized);
    assert_eq!(g.edges.len(), 3);
    let g = build_projective_space(&[(0, 2), (1, 3)]).unwrap();
    assert!(g.flags.equalized);
    assert_eq!(g.n, 4);
    assert!(build_projective_space(&[(0, 1), (0, 1)]).is_err());
    assert!(build_projective_space(&[]).is_err());
}
