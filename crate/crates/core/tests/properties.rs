use grid_torus::adjunction::classify_bw3;
use grid_torus::algebra::lattice::{project, Projection, Weight};
use grid_torus::algebra::laurent::{lr_add, lr_mul, lr_sub, LaurentPoly, LaurentRational};
use grid_torus::algebra::rational::{binomial, int};
use grid_torus::families::*;
use grid_torus::grid::dot::to_dot;
use grid_torus::grid::{normalize_linearization, reverse_action, validate, GridData, BUNDLE_L};
use grid_torus::localization::{euler_char, solve_bw3_a, verify_bw3_identity};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, -5i64..=5), 0..5)
        .prop_map(|ts| LaurentPoly::univariate(ts.into_iter().map(|(e, c)| (e, int(c)))))
}

/// Products of `1 - t^k` factors and a monomial, the denominators that
/// localization produces.
fn denominator() -> impl Strategy<Value = LaurentPoly> {
    (
        prop::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3], 0..3),
        -2i64..=2,
    )
        .prop_map(|(ks, s)| {
            ks.into_iter()
                .fold(LaurentPoly::univariate([(s, int(1))]), |acc, k| {
                    acc.mul(&LaurentPoly::univariate([(0, int(1)), (k, int(-1))]))
                })
        })
}

fn rational_fn() -> impl Strategy<Value = LaurentRational> {
    (poly(), denominator())
        .prop_map(|(n, d)| LaurentRational::new(n, d).expect("nonzero denominator"))
}

fn distinct_weights() -> impl Strategy<Value = Vec<(i64, u32)>> {
    prop::collection::btree_map(-6i64..=6, 1u32..=3, 1..5)
        .prop_filter("positive dimension", |m| m.values().sum::<u32>() >= 2)
        .prop_map(|m| m.into_iter().collect())
}

fn shuffled(g: &GridData, seed: u64) -> GridData {
    let mut h = g.clone();
    let k = h.components.len();
    for i in (1..k).rev() {
        let j = (seed
            .wrapping_mul(6364136223846793005)
            .wrapping_add(i as u64)
            >> 33) as usize
            % (i + 1);
        h.components.swap(i, j);
    }
    h.edges.reverse();
    h
}

fn builders() -> Vec<GridData> {
    let mut v = vec![build_p1cubed(), build_sp6(), build_cube_torus()];
    for n in 2..=6 {
        v.push(build_scroll(n, ScrollSplit::One3).unwrap());
        v.push(build_scroll(n, ScrollSplit::TwoTwo).unwrap());
    }
    for n in 4..=7 {
        v.push(build_quadric_bundle(n).unwrap());
    }
    for n in 3..=6 {
        v.push(build_quadric_full_torus(n).unwrap());
        v.push(downgrade_quadric_e1(n).unwrap());
    }
    for m in 6..=12 {
        v.push(build_so_adjoint(m).unwrap());
        v.push(so_slice(m, m as i64 % 6).unwrap());
    }
    v
}

proptest! {
    #[test]
    fn projection_is_additive(
        rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 1..=3),
        a in prop::collection::vec(-9i64..=9, 3),
        b in prop::collection::vec(-9i64..=9, 3),
    ) {
        let p = Projection::non_primitive(rows).unwrap();
        let (a, b) = (Weight::new(a), Weight::new(b));
        let lhs = project(&(&a + &b), &p).unwrap();
        let rhs = &project(&a, &p).unwrap() + &project(&b, &p).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert!(project(&Weight::zero(3), &p).unwrap().is_zero());
    }

    #[test]
    fn rational_sum_is_commutative_and_associative(a in rational_fn(), b in rational_fn(), c in rational_fn()) {
        prop_assert_eq!(lr_add(&a, &b).unwrap(), lr_add(&b, &a).unwrap());
        let left = lr_add(&lr_add(&a, &b).unwrap(), &c).unwrap();
        let right = lr_add(&a, &lr_add(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert!(lr_sub(&a, &a).unwrap().is_zero());
        prop_assert_eq!(lr_mul(&a, &b).unwrap(), lr_mul(&b, &a).unwrap());
    }

    #[test]
    fn polynomial_plus_negation_is_zero(p in poly()) {
        prop_assert!(p.add(&p.neg()).is_zero());
        prop_assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn odd_weight_factor_is_finite_at_minus_one(k in 0i64..6, sign in prop::bool::ANY) {
        let nu = if sign { 2 * k + 1 } else { -(2 * k + 1) };
        let den = LaurentPoly::univariate([(0, int(1)), (-nu, int(-1))]);
        let f = LaurentRational::new(LaurentPoly::one(1), den).unwrap();
        prop_assert_eq!(f.eval(&[int(-1)]).unwrap(), grid_torus::algebra::rational::rat(1, 2));
    }

    #[test]
    fn normalization_is_idempotent(w in distinct_weights()) {
        let g = build_projective_space(&w).unwrap();
        let once = normalize_linearization(&g, BUNDLE_L).unwrap();
        let twice = normalize_linearization(&once, BUNDLE_L).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn projective_chi_is_binomial_for_any_weights(w in prop::collection::btree_set(-6i64..=6, 2..6), k in 0u32..=4) {
        let w: Vec<(i64, u32)> = w.into_iter().map(|a| (a, 1)).collect();
        let g = build_projective_space(&w).unwrap();
        prop_assert!(validate(&g).is_empty());
        let n = u64::from(g.n);
        let chi = euler_char(&g, BUNDLE_L, k).unwrap().eval_at_one().unwrap();
        prop_assert_eq!(chi, binomial(n + u64::from(k), n));
    }

    #[test]
    fn solve_agrees_with_verify(n in 2u32..=12, a in 0u64..=60) {
        prop_assert_eq!(verify_bw3_identity(n, a), solve_bw3_a(n) == Some(a));
    }

    #[test]
    fn dot_is_stable_under_reordering(i in 0usize..40, seed in any::<u64>()) {
        let all = builders();
        let g = &all[i % all.len()];
        if g.rank == 1 {
            prop_assert_eq!(to_dot(g, BUNDLE_L), to_dot(&shuffled(g, seed), BUNDLE_L));
        }
    }
}

#[test]
fn builders_validate() {
    for g in builders() {
        assert!(
            validate(&g).is_empty(),
            "{:?}: {:?}",
            g.meta.get("family"),
            validate(&g)
        );
    }
}

#[test]
fn json_round_trip_is_byte_identical() {
    for g in builders() {
        let s = g.to_json();
        let h = GridData::from_json(&s).unwrap();
        assert_eq!(h, g);
        assert_eq!(h.to_json(), s);
    }
}

#[test]
fn classification_is_invariant_under_reversal() {
    for g in builders()
        .into_iter()
        .filter(|g| g.rank == 1 && g.flags.equalized)
    {
        let a = classify_bw3(&g);
        let b = classify_bw3(&reverse_action(&g));
        assert_eq!(a.case, b.case, "{:?}", g.meta.get("family"));
    }
}
