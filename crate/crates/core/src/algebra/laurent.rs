//! Laurent polynomials and rational functions with rational coefficients.
//!
//! A [`LaurentRational`] is kept in a canonical form:
//! * one variable: numerator and denominator are coprime, the denominator
//!   has lowest exponent 0 and leading coefficient 1;
//! * several variables: if the denominator divides the numerator the result
//!   is a Laurent polynomial over `1`; otherwise both parts are shifted so the
//!   lexicographically smallest exponent of the denominator is zero, and
//!   scaled so its lexicographically largest coefficient is 1.
//!
//! Equality compares cross products, so it is correct even where the
//! multivariate form is not unique.

use crate::algebra::lattice::{project, Projection, Weight};
use crate::algebra::rational::{self, int, Rational};
use crate::error::{Error, Result};
use num_traits::{One, Signed, Zero};
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

pub type Exponent = Vec<i64>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, Rational>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, int(1))
    }

    pub fn monomial(exp: Exponent, c: Rational) -> Self {
        let nvars = exp.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { nvars, terms }
    }

    /// Univariate `sum c_k t^k` from `(k, c_k)` pairs.
    pub fn univariate(coeffs: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let mut p = Self::zero(1);
        for (k, c) in coeffs {
            p.add_term(vec![k], c);
        }
        p
    }

    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Exponent, Rational)>,
    ) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::ArityMismatch(nvars, e.len()));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// `t^w` for a lattice weight.
    pub fn character(w: &Weight) -> Self {
        Self::monomial(w.0.clone(), int(1))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, Rational> {
        &self.terms
    }

    pub fn coeff(&self, e: &[i64]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, e: Exponent, c: Rational) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiply by the monomial `t^s`.
    pub fn shift(&self, s: &[i64]) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(s).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Componentwise minimum exponent (zeros for the zero polynomial).
    pub fn min_exponents(&self) -> Exponent {
        let mut m: Option<Exponent> = None;
        for e in self.terms.keys() {
            m = Some(match m {
                None => e.clone(),
                Some(cur) => cur.iter().zip(e).map(|(a, b)| *a.min(b)).collect(),
            });
        }
        m.unwrap_or_else(|| vec![0; self.nvars])
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
            || (self.terms.len() == 1 && self.terms.keys().next().unwrap().iter().all(|&x| x == 0))
    }

    /// Sum of coefficients, i.e. the value at `t = (1, ..., 1)`.
    pub fn coefficient_sum(&self) -> Rational {
        self.terms.values().sum()
    }

    /// Evaluate; `None` when a negative power of zero appears.
    pub fn eval(&self, point: &[Rational]) -> Option<Rational> {
        assert_eq!(point.len(), self.nvars);
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k < 0 && x.is_zero() {
                    return None;
                }
                let base = if k < 0 { x.recip() } else { x.clone() };
                for _ in 0..k.unsigned_abs() {
                    term *= &base;
                }
            }
            total += term;
        }
        Some(total)
    }

    /// Substitute `t^e -> s^{P e}` for a lattice homomorphism `P`.
    pub fn project(&self, p: &Projection) -> Result<Self> {
        let mut out = Self::zero(p.target_rank());
        for (e, c) in &self.terms {
            let img = project(&Weight(e.clone()), p)?;
            out.add_term(img.0, c.clone());
        }
        Ok(out)
    }

    /// Univariate composition `p(a t + b)`; all exponents must be nonnegative.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Result<Self> {
        if self.nvars != 1 {
            return Err(Error::ArityMismatch(1, self.nvars));
        }
        if self.terms.keys().any(|e| e[0] < 0) {
            return Err(Error::InvalidArgument(
                "composition needs a polynomial".into(),
            ));
        }
        let lin = LaurentPoly::univariate([(1, a.clone()), (0, b.clone())]);
        let mut out = Self::zero(1);
        for (e, c) in &self.terms {
            out = out.add(&lin.pow(e[0] as u32).scale(c));
        }
        Ok(out)
    }

    fn lex_leading(&self) -> Option<(&Exponent, &Rational)> {
        self.terms.iter().next_back()
    }

    fn lex_trailing(&self) -> Option<(&Exponent, &Rational)> {
        self.terms.iter().next()
    }

    /// Exact quotient in the Laurent ring, or `None` if `d` does not divide.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.nvars));
        }
        let dm = d.min_exponents();
        let nm = self.min_exponents();
        let neg = |v: &[i64]| -> Vec<i64> { v.iter().map(|x| -x).collect() };
        let dd = d.shift(&neg(&dm));
        let mut r = self.shift(&neg(&nm));
        let (lead_e, lead_c) = {
            let (e, c) = dd.lex_leading().unwrap();
            (e.clone(), c.clone())
        };
        let mut q = Self::zero(self.nvars);
        while let Some((e, c)) = r.lex_leading() {
            let diff: Vec<i64> = e.iter().zip(&lead_e).map(|(a, b)| a - b).collect();
            if diff.iter().any(|&x| x < 0) {
                return None;
            }
            let coef = c / &lead_c;
            let t = LaurentPoly::monomial(diff, coef);
            r = r.sub(&t.mul(&dd));
            q = q.add(&t);
        }
        let s: Vec<i64> = nm.iter().zip(&dm).map(|(a, b)| a - b).collect();
        Some(q.shift(&s))
    }

    // ---- univariate dense helpers ----

    fn to_dense(&self) -> (i64, Vec<Rational>) {
        debug_assert_eq!(self.nvars, 1);
        if self.is_zero() {
            return (0, Vec::new());
        }
        let lo = *self.terms.keys().next().unwrap().first().unwrap();
        let hi = *self.terms.keys().next_back().unwrap().first().unwrap();
        let mut v = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e[0] - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    fn from_dense(shift: i64, v: &[Rational]) -> Self {
        Self::univariate(
            v.iter()
                .enumerate()
                .map(|(k, c)| (shift + k as i64, c.clone())),
        )
    }
}

fn dense_trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn dense_rem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = a.to_vec();
    dense_trim(&mut r);
    let db = b.len() - 1;
    let lb = b[db].clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let c = r.last().unwrap() / &lb;
        for (i, bc) in b.iter().enumerate() {
            r[k + i] -= &c * bc;
        }
        q[k] = c;
        r.pop();
        dense_trim(&mut r);
    }
    (q, r)
}

fn dense_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    dense_trim(&mut x);
    dense_trim(&mut y);
    while !y.is_empty() {
        let (_, r) = dense_rem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(l) = x.last().cloned() {
        for c in x.iter_mut() {
            *c = &*c / &l;
        }
    }
    x
}

impl fmt::Display for LaurentPoly {
    /// Terms in increasing exponent order, e.g. `1 + 3*t - 1/2*t^-2` style.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mono = monomial_text(e);
            if mono.is_empty() {
                write!(f, "{}", rational::fmt(&mag))?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", rational::fmt(&mag))?;
            }
        }
        Ok(())
    }
}

fn monomial_text(e: &[i64]) -> String {
    let names: Vec<String> = if e.len() == 1 {
        vec!["t".into()]
    } else {
        (1..=e.len()).map(|i| format!("t{i}")).collect()
    };
    let parts: Vec<String> = e
        .iter()
        .zip(names)
        .filter(|(k, _)| **k != 0)
        .map(|(k, n)| if *k == 1 { n } else { format!("{n}^{k}") })
        .collect();
    parts.join("*")
}

/// Quotient of Laurent polynomials in canonical form.
#[derive(Debug, Clone)]
pub struct LaurentRational {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl LaurentRational {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if num.nvars() != den.nvars() {
            return Err(Error::ArityMismatch(num.nvars(), den.nvars()));
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(lr_normalize(&LaurentRational { num, den }))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let n = p.nvars();
        LaurentRational {
            num: p,
            den: LaurentPoly::one(n),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_poly(LaurentPoly::zero(nvars))
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the denominator has cancelled completely.
    pub fn is_laurent_polynomial(&self) -> bool {
        self.den.is_monomial() && self.den.is_constant()
    }

    pub fn as_laurent_polynomial(&self) -> Option<LaurentPoly> {
        if self.is_laurent_polynomial() {
            let c = self.den.coeff(&vec![0; self.nvars()]);
            Some(self.num.scale(&c.recip()))
        } else {
            None
        }
    }

    pub fn neg(&self) -> Self {
        LaurentRational {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(lr_normalize(&LaurentRational {
            num: self.den.clone(),
            den: self.num.clone(),
        }))
    }

    /// Value at a point, after canonical simplification.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        let d = self.den.eval(point).ok_or(Error::Pole)?;
        if d.is_zero() {
            return Err(Error::Pole);
        }
        let n = self.num.eval(point).ok_or(Error::Pole)?;
        Ok(n / d)
    }

    /// Value at `t = (1, ..., 1)`.
    pub fn eval_at_one(&self) -> Result<Rational> {
        self.eval(&vec![int(1); self.nvars()])
    }
}

impl PartialEq for LaurentRational {
    fn eq(&self, o: &Self) -> bool {
        self.nvars() == o.nvars() && self.num.mul(&o.den) == o.num.mul(&self.den)
    }
}

impl fmt::Display for LaurentRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = self.as_laurent_polynomial() {
            write!(f, "{p}")
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

pub fn lr_add(a: &LaurentRational, b: &LaurentRational) -> Result<LaurentRational> {
    if a.nvars() != b.nvars() {
        return Err(Error::ArityMismatch(a.nvars(), b.nvars()));
    }
    let (num, den) = if a.den == b.den {
        (a.num.add(&b.num), a.den.clone())
    } else {
        (a.num.mul(&b.den).add(&b.num.mul(&a.den)), a.den.mul(&b.den))
    };
    Ok(lr_normalize(&LaurentRational { num, den }))
}

pub fn lr_mul(a: &LaurentRational, b: &LaurentRational) -> Result<LaurentRational> {
    if a.nvars() != b.nvars() {
        return Err(Error::ArityMismatch(a.nvars(), b.nvars()));
    }
    Ok(lr_normalize(&LaurentRational {
        num: a.num.mul(&b.num),
        den: a.den.mul(&b.den),
    }))
}

pub fn lr_sub(a: &LaurentRational, b: &LaurentRational) -> Result<LaurentRational> {
    lr_add(a, &b.neg())
}

pub fn lr_div(a: &LaurentRational, b: &LaurentRational) -> Result<LaurentRational> {
    lr_mul(a, &b.recip()?)
}

/// Canonical form; see the module documentation.
pub fn lr_normalize(a: &LaurentRational) -> LaurentRational {
    let nv = a.nvars();
    if a.num.is_zero() {
        return LaurentRational {
            num: LaurentPoly::zero(nv),
            den: LaurentPoly::one(nv),
        };
    }
    if nv == 1 {
        let (ns, nd) = a.num.to_dense();
        let (ds, dd) = a.den.to_dense();
        let g = dense_gcd(&nd, &dd);
        let (nq, _) = dense_rem(&nd, &g);
        let (dq, _) = dense_rem(&dd, &g);
        let lead = dq.last().cloned().expect("nonzero denominator");
        let nq: Vec<Rational> = nq.iter().map(|c| c / &lead).collect();
        let dq: Vec<Rational> = dq.iter().map(|c| c / &lead).collect();
        // Denominator gets lowest exponent 0; the monomial moves to the numerator.
        let num = LaurentPoly::from_dense(ns - ds, &nq);
        let den = LaurentPoly::from_dense(0, &dq);
        return LaurentRational { num, den };
    }
    if let Some(q) = a.num.exact_div(&a.den) {
        return LaurentRational {
            num: q,
            den: LaurentPoly::one(nv),
        };
    }
    let (lo, _) = a.den.lex_trailing().expect("nonzero denominator");
    let s: Vec<i64> = lo.iter().map(|x| -x).collect();
    let num = a.num.shift(&s);
    let den = a.den.shift(&s);
    let lead = den.lex_leading().unwrap().1.recip();
    LaurentRational {
        num: num.scale(&lead),
        den: den.scale(&lead),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(k: i64) -> LaurentPoly {
        LaurentPoly::univariate([(k, int(1))])
    }

    fn one_minus(k: i64) -> LaurentPoly {
        LaurentPoly::one(1).sub(&t(k))
    }

    fn frac(n: LaurentPoly, d: LaurentPoly) -> LaurentRational {
        LaurentRational::new(n, d).unwrap()
    }

    #[test]
    fn p1_structure_sheaf() {
        let a = frac(LaurentPoly::one(1), one_minus(1));
        let b = frac(LaurentPoly::one(1), one_minus(-1));
        let s = lr_add(&a, &b).unwrap();
        assert!(s.is_laurent_polynomial());
        assert_eq!(s.as_laurent_polynomial().unwrap(), LaurentPoly::one(1));
    }

    #[test]
    fn p1_hyperplane() {
        let a = frac(t(1), one_minus(-1));
        let b = frac(LaurentPoly::one(1), one_minus(1));
        let s = lr_add(&a, &b).unwrap();
        assert_eq!(
            s.as_laurent_polynomial().unwrap(),
            t(1).add(&LaurentPoly::one(1))
        );
        assert_eq!(s.eval_at_one().unwrap(), int(2));
    }

    #[test]
    fn cancel_product() {
        let a = LaurentRational::from_poly(one_minus(1));
        let b = frac(LaurentPoly::one(1), one_minus(1));
        assert_eq!(
            lr_mul(&a, &b).unwrap().as_laurent_polynomial().unwrap(),
            LaurentPoly::one(1)
        );
    }

    #[test]
    fn canonical_denominator() {
        // t / (2t^3 - 2t^2) = (1/2) t^-1 / (t - 1)
        let n = t(1);
        let d = t(3).scale(&int(2)).sub(&t(2).scale(&int(2)));
        let r = frac(n, d);
        assert_eq!(
            r.denominator(),
            &LaurentPoly::univariate([(0, int(-1)), (1, int(1))])
        );
        assert_eq!(
            r.numerator(),
            &LaurentPoly::univariate([(-1, rational::rat(1, 2))])
        );
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(
            LaurentRational::new(LaurentPoly::one(1), LaurentPoly::zero(1)).unwrap_err(),
            Error::DivisionByZero
        );
        assert!(LaurentRational::zero(1).recip().is_err());
    }

    #[test]
    fn multivariate_exact_division() {
        // (1 - t1^2 t2^2) / (1 - t1 t2) = 1 + t1 t2
        let n = LaurentPoly::from_terms(2, [(vec![0, 0], int(1)), (vec![2, 2], int(-1))]).unwrap();
        let d = LaurentPoly::from_terms(2, [(vec![0, 0], int(1)), (vec![1, 1], int(-1))]).unwrap();
        let r = frac(n, d);
        assert!(r.is_laurent_polynomial());
        let expect =
            LaurentPoly::from_terms(2, [(vec![0, 0], int(1)), (vec![1, 1], int(1))]).unwrap();
        assert_eq!(r.as_laurent_polynomial().unwrap(), expect);
    }

    #[test]
    fn multivariate_noncancelling_form() {
        let n = LaurentPoly::from_terms(2, [(vec![1, 0], int(3))]).unwrap();
        let d = LaurentPoly::from_terms(2, [(vec![-1, 0], int(2)), (vec![0, 1], int(4))]).unwrap();
        let r = frac(n, d);
        assert!(!r.is_laurent_polynomial());
        let (lo, _) = r.denominator().lex_trailing().unwrap();
        assert_eq!(lo, &vec![0, 0]);
        assert_eq!(r.denominator().lex_leading().unwrap().1, &int(1));
    }

    #[test]
    fn affine_composition() {
        let p = LaurentPoly::univariate([(2, int(1)), (0, int(1))]);
        let q = p.compose_affine(&int(-1), &int(-1)).unwrap();
        assert_eq!(
            q,
            LaurentPoly::univariate([(2, int(1)), (1, int(2)), (0, int(2))])
        );
    }

    #[test]
    fn display() {
        let p = LaurentPoly::univariate([(-1, int(-2)), (0, int(1)), (2, rational::rat(1, 2))]);
        assert_eq!(p.to_string(), "-2*t^-1 + 1 + 1/2*t^2");
    }
}
