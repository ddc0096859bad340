//! Normal forms on the standard-monomial basis and the ring product.
//!
//! Every element is stored as `Σ r_α x^α` with coefficients on the left and
//! `x^α = x_1^{α_1} ⋯ x_n^{α_n}`. The product is built from one memoized
//! primitive, `x_i · x^β`, which is expanded recursively with the
//! commutation rules; recursion is on total degree.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use smallvec::SmallVec;

use crate::presentation::Presentation;
use crate::scalars::{Scalar, ScalarMap};

/// Exponent vector of a standard monomial, ordered degree-lexicographically
/// with `x_1 < x_2 < ... < x_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(SmallVec<[u32; 4]>);

impl Mono {
    pub fn one(n: usize) -> Self {
        Mono(SmallVec::from_elem(0, n))
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.0[i] = 1;
        m
    }

    pub fn from_exps(e: &[u32]) -> Self {
        Mono(SmallVec::from_slice(e))
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(o.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, o: &Mono) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming `self` divides `o`.
    pub fn cofactor(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(o.0.iter()).map(|(a, b)| b - a).collect())
    }

    pub fn lcm(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(o.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    fn min_var(&self) -> Option<usize> {
        self.0.iter().position(|&e| e > 0)
    }

    fn max_var(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e > 0)
    }

    fn with(&self, i: usize, delta: i64) -> Mono {
        let mut m = self.clone();
        m.0[i] = (m.0[i] as i64 + delta) as u32;
        m
    }

    /// All monomials of total degree exactly `p` in `n` variables, ascending.
    pub fn of_degree(n: usize, p: u32) -> Vec<Mono> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; n];
        fn rec(k: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Mono>) {
            let n = cur.len();
            if k == 0 {
                if n > 0 {
                    cur[0] = left;
                    out.push(Mono::from_exps(cur));
                } else if left == 0 {
                    out.push(Mono::from_exps(cur));
                }
                return;
            }
            for e in 0..=left {
                cur[k] = e;
                rec(k - 1, left - e, cur, out);
            }
            cur[k] = 0;
        }
        if n == 0 {
            if p == 0 {
                out.push(Mono::one(0));
            }
            return out;
        }
        rec(n - 1, p, &mut cur, &mut out);
        out.sort();
        out
    }

    /// All monomials of degree ≤ `d`, ascending.
    pub fn up_to_degree(n: usize, d: u32) -> Vec<Mono> {
        (0..=d).flat_map(|p| Self::of_degree(n, p)).collect()
    }
}

impl Ord for Mono {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree()
            .cmp(&o.degree())
            .then_with(|| self.0.iter().rev().cmp(o.0.iter().rev()))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// An element of `A` in normal form. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn term(m: Mono, c: Scalar) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono, Scalar)>>(it: I) -> Self {
        let mut p = Poly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> Option<&Scalar> {
        self.terms.get(m)
    }

    pub fn lead(&self) -> Option<(&Mono, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn lead_mono(&self) -> Option<&Mono> {
        self.terms.keys().next_back()
    }

    /// Total degree; `None` stands for the degree −∞ of zero.
    pub fn degree(&self) -> Option<u32> {
        self.lead_mono().map(Mono::degree)
    }

    pub fn constant_term(&self) -> Scalar {
        self.terms
            .iter()
            .next()
            .filter(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Scalar::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Mono::is_one)
    }

    pub fn add_term(&mut self, m: Mono, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_assign_scaled(&mut self, k: &Scalar, o: &Poly) {
        if k.is_zero() {
            return;
        }
        for (m, c) in &o.terms {
            self.add_term(m.clone(), k.mul(c));
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.neg());
        }
        r
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    /// Left multiplication by a scalar.
    pub fn scale(&self, k: &Scalar) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), k.mul(c))).collect(),
        }
    }

    /// The semi-graded component of degree `p`.
    pub fn component(&self, p: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == p)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn map_coeffs<F: FnMut(&Scalar) -> Scalar>(&self, mut f: F) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }
}

/// A presentation together with the memoized multiplication tables.
pub struct Ring {
    pres: Presentation,
    central: bool,
    var_cache: RwLock<HashMap<(usize, Mono), Arc<Poly>>>,
    mono_cache: RwLock<HashMap<(Mono, Mono), Arc<Poly>>>,
    sigma_inv: Vec<Option<ScalarMap>>,
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({})", self.pres.name)
    }
}

impl Ring {
    /// Wraps a presentation without validating it; see `Presentation::validated`.
    pub fn new(pres: Presentation) -> Self {
        let central = pres.coefficients_central();
        let sigma_inv = pres.sigma.iter().map(|s| s.inverse().ok()).collect();
        Ring {
            pres,
            central,
            var_cache: RwLock::new(HashMap::new()),
            mono_cache: RwLock::new(HashMap::new()),
            sigma_inv,
        }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn name(&self) -> &str {
        &self.pres.name
    }

    pub fn n(&self) -> usize {
        self.pres.n()
    }

    pub fn central(&self) -> bool {
        self.central
    }

    pub fn one(&self) -> Poly {
        self.constant(Scalar::one())
    }

    pub fn constant(&self, c: Scalar) -> Poly {
        Poly::term(Mono::one(self.n()), c)
    }

    pub fn var_mono(&self, i: usize) -> Mono {
        Mono::var(self.n(), i)
    }

    pub fn var(&self, i: usize) -> Poly {
        Poly::term(self.var_mono(i), Scalar::one())
    }

    pub fn monomial(&self, m: Mono) -> Poly {
        Poly::term(m, Scalar::one())
    }

    pub fn sigma(&self, i: usize, r: &Scalar) -> Scalar {
        self.pres.sigma[i].apply(r).expect("sigma defined on K")
    }

    pub fn sigma_inv(&self, i: usize, r: &Scalar) -> Option<Scalar> {
        self.sigma_inv[i].as_ref().map(|m| m.apply(r).expect("sigma inverse defined on K"))
    }

    /// The twist picked up by a scalar moved left past `x^m`:
    /// `x^m r = σ^m(r) x^m + lower`, with `σ^m = σ_1^{m_1} ∘ ⋯ ∘ σ_n^{m_n}`.
    pub fn sigma_along(&self, m: &Mono, r: &Scalar) -> Scalar {
        if self.central {
            return r.clone();
        }
        let mut s = r.clone();
        for v in (0..self.n()).rev() {
            for _ in 0..m.exps()[v] {
                s = self.sigma(v, &s);
            }
        }
        s
    }

    /// Inverse of `sigma_along`; `None` when some σ_i has no inverse.
    pub fn sigma_inv_along(&self, m: &Mono, r: &Scalar) -> Option<Scalar> {
        if self.central {
            return Some(r.clone());
        }
        let mut s = r.clone();
        for v in 0..self.n() {
            for _ in 0..m.exps()[v] {
                s = self.sigma_inv(v, &s)?;
            }
        }
        Some(s)
    }

    pub fn delta(&self, i: usize, r: &Scalar) -> Scalar {
        match &self.pres.delta[i] {
            None => Scalar::zero(),
            Some(d) => d.apply(r).expect("delta defined on K"),
        }
    }

    /// `x_i r = σ_i(r) x_i + δ_i(r)`.
    pub fn move_coefficient(&self, i: usize, r: &Scalar) -> Poly {
        let mut p = Poly::term(self.var_mono(i), self.sigma(i, r));
        p.add_term(Mono::one(self.n()), self.delta(i, r));
        p
    }

    /// Normal form of the word `x_j x_i` for `j > i`.
    pub fn swap_adjacent(&self, j: usize, i: usize) -> Poly {
        assert!(j > i, "swap_adjacent needs j > i");
        let c = self.pres.comm(j, i);
        let n = self.n();
        let mut p = Poly::term(Mono::var(n, i).mul(&Mono::var(n, j)), c.c.clone());
        for (k, a) in c.a.iter().enumerate() {
            p.add_term(Mono::var(n, k), a.clone());
        }
        p.add_term(Mono::one(n), c.d.clone());
        p
    }

    /// `x_i · x^β`.
    pub fn var_mul(&self, i: usize, beta: &Mono) -> Arc<Poly> {
        let m = match beta.min_var() {
            None => return Arc::new(self.var(i)),
            Some(m) if i <= m => return Arc::new(self.monomial(beta.with(i, 1))),
            Some(m) => m,
        };
        let key = (i, beta.clone());
        if let Some(p) = self.var_cache.read().unwrap().get(&key) {
            return p.clone();
        }
        // x_i x_m = c x_m x_i + Σ a_k x_k + d, then recurse on x^{β - e_m}
        let rest = beta.with(m, -1);
        let c = self.pres.comm(i, m);
        let mut res = self.left_mul_var(m, &self.var_mul(i, &rest)).scale(&c.c);
        for (k, a) in c.a.iter().enumerate() {
            if !a.is_zero() {
                res.add_assign_scaled(a, &self.var_mul(k, &rest));
            }
        }
        if !c.d.is_zero() {
            res.add_term(rest, c.d.clone());
        }
        let res = Arc::new(res);
        self.var_cache.write().unwrap().insert(key, res.clone());
        res
    }

    /// `x_i · f`.
    pub fn left_mul_var(&self, i: usize, f: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, s) in f.terms() {
            let sig = self.sigma(i, s);
            out.add_assign_scaled(&sig, &self.var_mul(i, m));
            out.add_term(m.clone(), self.delta(i, s));
        }
        out
    }

    /// `x^α · x^β`, only meaningful (and cached) for central coefficients.
    fn mono_mul(&self, a: &Mono, b: &Mono) -> Arc<Poly> {
        let v = match a.max_var() {
            None => return Arc::new(self.monomial(b.clone())),
            Some(v) => v,
        };
        if b.min_var().is_none_or(|m| v <= m) {
            return Arc::new(self.monomial(a.mul(b)));
        }
        let key = (a.clone(), b.clone());
        if let Some(p) = self.mono_cache.read().unwrap().get(&key) {
            return p.clone();
        }
        let rest = a.with(v, -1);
        let inner = self.var_mul(v, b);
        let mut res = Poly::zero();
        for (m, s) in inner.terms() {
            res.add_assign_scaled(s, &self.mono_mul(&rest, m));
        }
        let res = Arc::new(res);
        self.mono_cache.write().unwrap().insert(key, res.clone());
        res
    }

    /// `x^α · g`.
    pub fn mono_times(&self, a: &Mono, g: &Poly) -> Poly {
        if self.central {
            let mut out = Poly::zero();
            for (m, s) in g.terms() {
                out.add_assign_scaled(s, &self.mono_mul(a, m));
            }
            return out;
        }
        let mut p = g.clone();
        for v in (0..self.n()).rev() {
            for _ in 0..a.exps()[v] {
                p = self.left_mul_var(v, &p);
            }
        }
        p
    }

    pub fn mul(&self, f: &Poly, g: &Poly) -> Poly {
        let mut out = Poly::zero();
        if f.is_zero() || g.is_zero() {
            return out;
        }
        for (a, r) in f.terms() {
            out.add_assign_scaled(r, &self.mono_times(a, g));
        }
        out
    }

    /// `f · r` for a scalar `r` on the right.
    pub fn mul_scalar_right(&self, f: &Poly, r: &Scalar) -> Poly {
        if self.central {
            return f.scale(r);
        }
        self.mul(f, &self.constant(r.clone()))
    }

    pub fn pow(&self, f: &Poly, k: u32) -> Poly {
        let mut r = self.one();
        for _ in 0..k {
            r = self.mul(&r, f);
        }
        r
    }

    /// Product of a word of variables, evaluated left to right.
    pub fn word(&self, vars: &[usize]) -> Poly {
        let mut p = self.one();
        for &v in vars.iter().rev() {
            p = self.left_mul_var(v, &p);
        }
        p
    }

    pub fn fmt(&self, f: &Poly) -> String {
        format_poly(&self.pres, f)
    }
}

/// Normal-form text, highest monomial first.
pub fn format_poly(pres: &Presentation, f: &Poly) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (k, (m, c)) in f.terms().rev().enumerate() {
        let mono = mono_string(&pres.vars, m);
        let coeff = c.to_string_with(&pres.params);
        let simple = c.numer().is_monomial() && c.is_polynomial();
        let (neg, body) = if !simple {
            (false, format!("({})", coeff))
        } else if let Some(rest) = coeff.strip_prefix('-') {
            (true, rest.to_string())
        } else {
            (false, coeff)
        };
        if k == 0 {
            if neg {
                s.push('-');
            }
        } else if neg {
            s.push_str(" - ");
        } else {
            s.push_str(" + ");
        }
        if mono.is_empty() {
            s.push_str(&body);
        } else if body == "1" {
            s.push_str(&mono);
        } else {
            s.push_str(&body);
            s.push('*');
            s.push_str(&mono);
        }
    }
    s
}

fn mono_string(names: &[String], m: &Mono) -> String {
    let mut parts = Vec::new();
    for (k, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[k].clone()),
            _ => parts.push(format!("{}^{}", names[k], e)),
        }
    }
    parts.join("*")
}

/// `dim_K A_p` for the semi-graded component of degree `p`.
pub fn component_dim(n: usize, p: u32) -> u128 {
    if n == 0 {
        return (p == 0) as u128;
    }
    binomial(p as u128 + n as u128 - 1, n as u128 - 1)
}

/// `dim_K F_m = Σ_{p ≤ m} dim A_p`.
pub fn filtration_dim(n: usize, m: u32) -> u128 {
    if n == 0 {
        return 1;
    }
    binomial(m as u128 + n as u128, n as u128)
}

fn binomial(a: u128, b: u128) -> u128 {
    let b = b.min(a - b);
    let mut r: u128 = 1;
    for k in 0..b {
        r = r * (a - k) / (k + 1);
    }
    r
}

pub fn hilbert_series_truncated(n: usize, big_n: u32) -> Vec<u128> {
    (0..=big_n).map(|p| component_dim(n, p)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GkEstimate {
    /// Least-squares slope of `log dim F_m` against `log m` over `m ∈ [M/2, M]`.
    pub tail_slope: f64,
    /// Same slope over `m = 2..M`.
    pub full_slope: f64,
    /// `log dim F_M / log M`.
    pub log_ratio: f64,
}

impl GkEstimate {
    pub fn estimate(&self) -> f64 {
        self.tail_slope
    }
}

pub fn gk_estimate(n: usize, big_m: u32) -> GkEstimate {
    assert!(big_m >= 4, "gk_estimate needs M >= 4");
    let slope = |lo: u32| {
        let pts: Vec<(f64, f64)> = (lo..=big_m)
            .map(|m| ((m as f64).ln(), (filtration_dim(n, m) as f64).ln()))
            .collect();
        let k = pts.len() as f64;
        let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
        let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
        let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
        sxy / sxx
    };
    GkEstimate {
        tail_slope: slope((big_m / 2).max(2)),
        full_slope: slope(2),
        log_ratio: (filtration_dim(n, big_m) as f64).ln() / (big_m as f64).ln(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::preset;

    fn ring(name: &str) -> Ring {
        Ring::new(preset(name).unwrap())
    }

    #[test]
    fn deglex_order() {
        let a = Mono::from_exps(&[2, 0, 0]);
        let b = Mono::from_exps(&[1, 1, 0]);
        let c = Mono::from_exps(&[0, 0, 1]);
        assert!(a < b);
        assert!(c < a);
        assert_eq!(Mono::of_degree(3, 2).len(), 6);
        assert_eq!(Mono::up_to_degree(2, 3).len(), 10);
    }

    #[test]
    fn ore_coefficient_moves() {
        let r = ring("ore_idempotent");
        let p = r.presentation();
        let t = Scalar::param(p.param_index("t").unwrap());
        let q = Scalar::param(p.param_index("q").unwrap());
        let got = r.move_coefficient(0, &t);
        let mut want = r.var(0).scale(&q.mul(&t));
        want.add_term(Mono::one(1), Scalar::one());
        assert_eq!(got, want);
        assert_eq!(r.move_coefficient(0, &Scalar::one()), r.var(0));
        let k3 = ring("commutative");
        assert_eq!(k3.move_coefficient(1, &Scalar::from_int(5)), k3.var(1).scale(&Scalar::from_int(5)));
    }

    #[test]
    fn dispin_swaps() {
        let r = ring("dispin");
        assert_eq!(r.swap_adjacent(1, 0), r.mul(&r.var(0), &r.var(1)).sub(&r.var(0)));
        let want = r.mul(&r.var(0), &r.var(2)).neg().add(&r.var(1));
        assert_eq!(r.swap_adjacent(2, 0), want);
        let k = ring("commutative");
        assert_eq!(k.swap_adjacent(2, 1), k.monomial(Mono::from_exps(&[0, 1, 1])));
    }

    #[test]
    fn products_from_relations() {
        let qw = ring("qweyl");
        let q = Scalar::param(0);
        let want = qw.monomial(Mono::from_exps(&[1, 1])).scale(&q).add(&qw.one());
        assert_eq!(qw.mul(&qw.var(1), &qw.var(0)), want);

        let d = ring("dispin");
        let x1sq = d.monomial(Mono::from_exps(&[2, 0, 0]));
        let want = d.monomial(Mono::from_exps(&[2, 0, 1])).sub(&d.var(0));
        assert_eq!(d.mul(&d.var(2), &x1sq), want);
        assert_eq!(d.fmt(&want), "x1^2*x3 - x1");

        let sum = d.mul(&d.var(1), &d.var(0)).add(&d.var(0));
        assert_eq!(sum, d.monomial(Mono::from_exps(&[1, 1, 0])));
        let k = ring("commutative");
        assert_eq!(k.mul(&k.var(1), &k.var(0)), k.monomial(Mono::from_exps(&[1, 1, 0])));
    }

    #[test]
    fn additive_basics() {
        let k = ring("commutative");
        let f = k.var(0).add(&k.var(1));
        assert_eq!(f.add(&Poly::zero()), f);
        assert_eq!(f.sub(&k.var(1)), k.var(0));
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn components_and_dimensions() {
        assert_eq!(component_dim(3, 2), 6);
        assert_eq!(filtration_dim(3, 1), 4);
        assert_eq!(filtration_dim(2, 3), 10);
        assert_eq!(hilbert_series_truncated(3, 3), vec![1, 3, 6, 10]);
        assert_eq!(hilbert_series_truncated(1, 4), vec![1, 1, 1, 1, 1]);
        assert_eq!(hilbert_series_truncated(2, 2), vec![1, 2, 3]);
        let d = ring("dispin");
        let f = d.mul(&d.var(2), &d.monomial(Mono::from_exps(&[2, 0, 0])));
        assert_eq!(f.component(3), d.monomial(Mono::from_exps(&[2, 0, 1])));
        assert_eq!(f.component(1), d.var(0).neg());
    }

    #[test]
    fn gk_estimates() {
        assert!((gk_estimate(3, 50).estimate() - 3.0).abs() < 0.2);
        assert!((gk_estimate(2, 50).estimate() - 2.0).abs() < 0.2);
        assert!((gk_estimate(1, 50).estimate() - 1.0).abs() < 0.1);
    }

    #[test]
    fn formatting() {
        let r = ring("ore_idempotent");
        let p = r.presentation();
        let t = Scalar::param(p.param_index("t").unwrap());
        let q = Scalar::param(p.param_index("q").unwrap());
        let f = r.move_coefficient(0, &t.mul(&t));
        // x t^2 = q^2 t^2 x + δ(t^2), δ(t^2) = (q+1) t
        assert_eq!(f.coeff(&Mono::one(1)).unwrap(), &q.add(&Scalar::one()).mul(&t));
        let s = r.fmt(&f);
        assert!(s.starts_with("q^2*t^2*x"), "{}", s);
    }
}
