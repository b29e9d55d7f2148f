//! Equivariant Euler characteristics by localization at isolated fixed
//! points, the bandwidth-3 Laurent identity, and Hilbert polynomials of Fano
//! 4- and 5-folds in terms of Chern numbers.

use crate::algebra::lattice::Weight;
use crate::algebra::laurent::{LaurentPoly, LaurentRational};
use crate::algebra::rational::{int, to_i64, Rational};
use crate::error::{Error, Result};
use crate::grid::model::GridData;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// `1 - t^{-nu}` in `nu.rank()` variables.
fn one_minus_inv(nu: &Weight) -> LaurentPoly {
    let r = nu.rank();
    LaurentPoly::one(r).sub(&LaurentPoly::character(&-nu))
}

/// One localization term `sign * t^shift / prod_k (1 - t^{-k})^{c_k}` with
/// every `k` of positive leading sign.
struct Term {
    sign: i64,
    shift: Vec<i64>,
    factors: BTreeMap<Weight, u32>,
}

fn term(mu: &[i64], m: u32, compass: &[(Weight, u32)]) -> Term {
    let mut sign = 1i64;
    let mut shift: Vec<i64> = mu.iter().map(|x| x * i64::from(m)).collect();
    let mut factors = BTreeMap::new();
    for (nu, k) in compass {
        if nu.leading_sign() > 0 {
            *factors.entry(nu.clone()).or_insert(0) += k;
        } else {
            // 1/(1 - t^{-nu}) = -t^{nu}/(1 - t^{nu}) with -nu positive.
            let pos = -nu;
            for _ in 0..*k {
                sign = -sign;
                for (s, x) in shift.iter_mut().zip(&nu.0) {
                    *s += x;
                }
            }
            *factors.entry(pos).or_insert(0) += k;
        }
    }
    Term {
        sign,
        shift,
        factors,
    }
}

/// Sum of localization terms over all components of any rank.
///
/// Every component must be a point with integral `mu` and a known compass.
/// The result is normalized; for a consistent grid it is a Laurent
/// polynomial.
pub fn euler_char_torus(g: &GridData, bundle: &str, m: u32) -> Result<LaurentRational> {
    if g.components.is_empty() {
        return Err(Error::Empty("grid components"));
    }
    let mut terms = Vec::with_capacity(g.components.len());
    for c in &g.components {
        if c.dim != 0 {
            return Err(Error::NonIsolated(c.id.clone()));
        }
        let mu = c.mu_of(bundle).ok_or_else(|| Error::MissingBundle {
            component: c.id.clone(),
            bundle: bundle.to_string(),
        })?;
        if mu.len() != g.rank {
            return Err(Error::RankMismatch {
                expected: g.rank,
                got: mu.len(),
            });
        }
        let mu: Vec<i64> = mu
            .iter()
            .map(|x| to_i64(x).ok_or_else(|| Error::NonIntegral(c.id.clone())))
            .collect::<Result<_>>()?;
        let cp = c
            .compass()
            .ok_or_else(|| Error::UnspecifiedCompass(c.id.clone()))?;
        let entries: Vec<(Weight, u32)> = cp.iter().map(|(w, k)| (w.clone(), k)).collect();
        terms.push(term(&mu, m, &entries));
    }

    let mut common: BTreeMap<Weight, u32> = BTreeMap::new();
    for t in &terms {
        for (w, k) in &t.factors {
            let e = common.entry(w.clone()).or_insert(0);
            *e = (*e).max(*k);
        }
    }
    let r = g.rank;
    let mut num = LaurentPoly::zero(r);
    for t in &terms {
        let mut p = LaurentPoly::monomial(t.shift.clone(), int(t.sign));
        for (w, k) in &common {
            let missing = k - t.factors.get(w).copied().unwrap_or(0);
            if missing > 0 {
                p = p.mul(&one_minus_inv(w).pow(missing));
            }
        }
        num = num.add(&p);
    }
    let mut den = LaurentPoly::one(r);
    for (w, k) in &common {
        den = den.mul(&one_minus_inv(w).pow(*k));
    }
    match num.exact_div(&den) {
        Some(q) => Ok(LaurentRational::from_poly(q)),
        None => LaurentRational::new(num, den),
    }
}

/// `chi(X, L^m)` as a character of a one-dimensional torus.
pub fn euler_char(g: &GridData, bundle: &str, m: u32) -> Result<LaurentRational> {
    if g.rank != 1 {
        return Err(Error::NotRankOne(g.rank));
    }
    euler_char_torus(g, bundle, m)
}

/// Like [`euler_char`] but a residual denominator is an error.
pub fn euler_char_poly(g: &GridData, bundle: &str, m: u32) -> Result<LaurentPoly> {
    let r = euler_char(g, bundle, m)?;
    r.as_laurent_polynomial()
        .ok_or_else(|| Error::ResidualDenominator(r.to_string()))
}

fn t_pow(k: i64) -> LaurentPoly {
    LaurentPoly::univariate([(k, int(1))])
}

/// The two sides of
/// `(1-t)^n + (1-t^-1)^n + a(2-t-t^-1)((1-t^-1)^{n-2} + (1-t)^{n-2}) = (2-t-t^-1)^n`.
pub fn bw3_sides(n: u32, a: &Rational) -> (LaurentPoly, LaurentPoly) {
    let one = LaurentPoly::one(1);
    let u = one.sub(&t_pow(1));
    let v = one.sub(&t_pow(-1));
    let w = LaurentPoly::univariate([(0, int(2)), (1, int(-1)), (-1, int(-1))]);
    let mut lhs = u.pow(n).add(&v.pow(n));
    if n >= 2 {
        let mid = v.pow(n - 2).add(&u.pow(n - 2));
        lhs = lhs.add(&w.mul(&mid).scale(a));
    }
    (lhs, w.pow(n))
}

/// Exact check of the bandwidth-3 identity for given `n` and `a`.
pub fn verify_bw3_identity(n: u32, a: u64) -> bool {
    if n < 2 {
        return false;
    }
    let (l, r) = bw3_sides(n, &Rational::from_integer(a.into()));
    l == r
}

/// The unique `a >= 0` satisfying the identity, if any.
///
/// The left side is affine in `a`, `P + a Q`; a solution must make
/// `P + a Q - RHS` vanish coefficientwise.
pub fn solve_bw3_a(n: u32) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let (l0, r) = bw3_sides(n, &Rational::zero());
    let (l1, _) = bw3_sides(n, &Rational::one());
    let p = l0.sub(&r);
    let q = l1.sub(&l0);
    let mut a: Option<Rational> = None;
    for (e, qc) in q.terms() {
        if qc.is_zero() {
            continue;
        }
        let cand = -p.coeff(e) / qc;
        match &a {
            None => a = Some(cand),
            Some(x) if *x != cand => return None,
            _ => {}
        }
    }
    let a = a?;
    if !p.add(&q.scale(&a)).is_zero() || !a.is_integer() || a < Rational::zero() {
        return None;
    }
    to_i64(&a).map(|x| x as u64)
}

/// Hilbert polynomial of a Fano 4-fold from `c1^4` and `c1^2 c2`.
pub fn chi_fano4(c1_4: i64, c1_2c2: i64) -> LaurentPoly {
    let d = int(c1_4);
    let e = int(c1_2c2);
    LaurentPoly::univariate([
        (4, &d / int(24)),
        (3, &d / int(12)),
        (2, (&e + &d) / int(24)),
        (1, &e / int(24)),
        (0, int(1)),
    ])
}

/// Value of a univariate polynomial at a rational point.
pub fn eval_at(p: &LaurentPoly, t: &Rational) -> Rational {
    p.eval(std::slice::from_ref(t))
        .expect("evaluation of a polynomial at a rational point")
}

/// `c1^{k-2} c2 >= (k-1)/(2k) c1^k` for a stable tangent bundle of rank `k`.
pub fn bogomolov_holds(k: u32, c1_k: i64, c1_km2c2: i64) -> bool {
    let k = i64::from(k);
    int(c1_km2c2) >= Rational::new((k - 1).into(), (2 * k).into()) * int(c1_k)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fano5 {
    pub poly: LaurentPoly,
    pub chi1: Rational,
    pub chi_half: Rational,
    /// `d a1 a2 = 240` and `c1^3 c2 = d/5 (3 a1 + 3 a2 + 1)`, when `(a1, a2)` is given.
    pub factorization_check: Option<bool>,
    /// `d b2 (b2 - b1 + 1) = 240` and `c1^3 c2 = d/5 (6 b2 - 3 b1^2 + 3 b1 + 1)`, when `(b1, b2)` is given.
    pub b_check: Option<bool>,
}

/// Hilbert polynomial of a Fano 5-fold from `d = c1^5` and `c1^3 c2`.
///
/// The linear coefficient is fixed by `chi(0) = 1` and Serre duality
/// `chi(-1) = -chi(0)`.
pub fn chi_fano5(
    c1_5: i64,
    c1_3c2: i64,
    a: Option<(Rational, Rational)>,
    b: Option<(Rational, Rational)>,
) -> Result<Fano5> {
    if c1_5 == 0 {
        return Err(Error::InvalidArgument("c1^5 must be nonzero".into()));
    }
    let d = int(c1_5);
    let e = int(c1_3c2);
    let a5 = &d / int(120);
    let a4 = &d / int(48);
    let a3 = (&e + &d) / int(72);
    let a2 = &e / int(48);
    let a1 = int(2) - &a5 + &a4 - &a3 + &a2;
    let poly = LaurentPoly::univariate([(5, a5), (4, a4), (3, a3), (2, a2), (1, a1), (0, int(1))]);
    let chi1 = eval_at(&poly, &int(1));
    let chi_half = eval_at(&poly, &Rational::new(1.into(), 2.into()));
    let five = int(5);
    let factorization_check = a.map(|(a1, a2)| {
        &d * &a1 * &a2 == int(240) && e == &d / &five * (int(3) * &a1 + int(3) * &a2 + int(1))
    });
    let b_check = b.map(|(b1, b2)| {
        &d * &b2 * (&b2 - &b1 + int(1)) == int(240)
            && e == &d / &five * (int(6) * &b2 - int(3) * &b1 * &b1 + int(3) * &b1 + int(1))
    });
    Ok(Fano5 {
        poly,
        chi1,
        chi_half,
        factorization_check,
        b_check,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{binomial, rat};
    use crate::grid::model::{Compass, FixedComponent, BUNDLE_L};

    fn p1() -> GridData {
        let mut g = GridData::new(1, 1);
        g.components.push(
            FixedComponent::new("y1", "point", 0, Compass::signs(1, 0))
                .with_mu(BUNDLE_L, Weight::scalar(1)),
        );
        g.components.push(
            FixedComponent::new("y0", "point", 0, Compass::signs(0, 1))
                .with_mu(BUNDLE_L, Weight::scalar(0)),
        );
        g
    }

    #[test]
    fn p1_sections() {
        let chi = euler_char_poly(&p1(), BUNDLE_L, 1).unwrap();
        assert_eq!(chi, LaurentPoly::univariate([(0, int(1)), (1, int(1))]));
        assert_eq!(
            euler_char_poly(&p1(), BUNDLE_L, 0).unwrap(),
            LaurentPoly::one(1)
        );
        for m in 0..6u32 {
            let v = euler_char(&p1(), BUNDLE_L, m)
                .unwrap()
                .eval_at_one()
                .unwrap();
            assert_eq!(v, int(i64::from(m) + 1));
        }
    }

    #[test]
    fn residual_denominator_reported() {
        let mut g = p1();
        g.components.pop();
        assert!(matches!(
            euler_char_poly(&g, BUNDLE_L, 1),
            Err(Error::ResidualDenominator(_))
        ));
    }

    #[test]
    fn positive_dim_refused() {
        let mut g = p1();
        g.components[0].dim = 1;
        assert!(matches!(
            euler_char(&g, BUNDLE_L, 1),
            Err(Error::NonIsolated(_))
        ));
    }

    #[test]
    fn bw3_solutions() {
        assert_eq!(solve_bw3_a(2), Some(1));
        assert_eq!(solve_bw3_a(3), Some(3));
        for n in 4..=12 {
            assert_eq!(solve_bw3_a(n), None);
        }
        assert!(verify_bw3_identity(2, 1));
        assert!(verify_bw3_identity(3, 3));
        assert!(!verify_bw3_identity(3, 2));
    }

    #[test]
    fn fano4_projective_space() {
        let p = chi_fano4(625, 250);
        for t in 0..6i64 {
            assert_eq!(eval_at(&p, &int(t)), binomial((5 * t + 4) as u64, 4));
        }
        assert_eq!(eval_at(&chi_fano4(0, 0), &int(1)), int(1));
        assert!(bogomolov_holds(4, 625, 250));
    }

    #[test]
    fn fano5_projective_space() {
        let r = chi_fano5(7776, 3240, Some((rat(5, 36), rat(8, 36))), None).unwrap();
        assert_eq!(r.chi1, int(462));
        assert_eq!(r.factorization_check, Some(true));
        assert_eq!(r.chi_half, int(2) + rat(3240, 96) + rat(7776, 384));
        for t in 0..5i64 {
            assert_eq!(eval_at(&r.poly, &int(t)), binomial((6 * t + 5) as u64, 5));
        }
        assert!(chi_fano5(0, 1, None, None).is_err());
    }
}
