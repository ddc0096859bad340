//! Sparse multivariate polynomials over Q in the declared parameters.
//!
//! Terms are kept sorted by descending lexicographic order of exponent
//! vectors (parameter 0 most significant). Exponent vectors carry no
//! trailing zeros, so the derived `Vec` ordering coincides with padded lex
//! order and equal monomials have equal representations.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

pub type Exps = SmallVec<[u32; 4]>;

fn trim(mut e: Exps) -> Exps {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

fn exps_mul(a: &Exps, b: &Exps) -> Exps {
    let n = a.len().max(b.len());
    let mut out: Exps = SmallVec::with_capacity(n);
    for k in 0..n {
        out.push(a.get(k).copied().unwrap_or(0) + b.get(k).copied().unwrap_or(0));
    }
    out
}

fn exps_divides(d: &Exps, e: &Exps) -> bool {
    d.len() <= e.len() && d.iter().zip(e.iter()).all(|(x, y)| x <= y)
}

fn exps_div(e: &Exps, d: &Exps) -> Exps {
    let mut out: Exps = e.clone();
    for (k, v) in d.iter().enumerate() {
        out[k] -= v;
    }
    trim(out)
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MPoly {
    terms: Vec<(Exps, BigRational)>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            MPoly {
                terms: vec![(SmallVec::new(), c)],
            }
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(n)))
    }

    /// The parameter with index `i`.
    pub fn var(i: usize) -> Self {
        let mut e: Exps = SmallVec::from_elem(0, i + 1);
        e[i] = 1;
        MPoly {
            terms: vec![(e, BigRational::one())],
        }
    }

    pub fn monomial(exps: Exps, c: BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MPoly {
            terms: vec![(trim(exps), c)],
        }
    }

    /// Builds from arbitrary (possibly duplicate, unsorted) terms.
    pub fn from_terms<I: IntoIterator<Item = (Exps, BigRational)>>(it: I) -> Self {
        let mut acc: HashMap<Exps, BigRational> = HashMap::new();
        for (e, c) in it {
            if c.is_zero() {
                continue;
            }
            *acc.entry(trim(e)).or_insert_with(BigRational::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        MPoly { terms }
    }

    pub fn terms(&self) -> &[(Exps, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_empty())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_empty() && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Value of a constant polynomial.
    pub fn constant_value(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 if self.terms[0].0.is_empty() => Some(self.terms[0].1.clone()),
            _ => None,
        }
    }

    /// Constant term (the coefficient of the empty monomial).
    pub fn constant_term(&self) -> BigRational {
        match self.terms.last() {
            Some((e, c)) if e.is_empty() => c.clone(),
            _ => BigRational::zero(),
        }
    }

    pub fn lead(&self) -> Option<(&Exps, &BigRational)> {
        self.terms.first().map(|(e, c)| (e, c))
    }

    pub fn lead_coeff(&self) -> BigRational {
        self.terms
            .first()
            .map(|t| t.1.clone())
            .unwrap_or_else(BigRational::zero)
    }

    /// One past the largest parameter index that occurs.
    pub fn nvars(&self) -> usize {
        self.terms.iter().map(|(e, _)| e.len()).max().unwrap_or(0)
    }

    pub fn has_var(&self, v: usize) -> bool {
        self.terms.iter().any(|(e, _)| e.get(v).copied().unwrap_or(0) > 0)
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms
            .iter()
            .map(|(e, _)| e.get(v).copied().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(e, _)| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub fn neg(&self) -> Self {
        MPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        MPoly { terms: out }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some(c) = self.constant_value() {
            return other.scale(&c);
        }
        if let Some(c) = other.constant_value() {
            return self.scale(&c);
        }
        let mut acc: HashMap<Exps, BigRational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = exps_mul(ea, eb);
                let c = ca * cb;
                match acc.get_mut(&e) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(e, c);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        MPoly { terms }
    }

    pub fn mul_term(&self, e: &Exps, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(ea, ca)| (exps_mul(ea, e), ca * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if let Some(c) = d.constant_value() {
            return Some(self.scale(&c.recip()));
        }
        let (dl, dc) = d.lead().unwrap();
        let (dl, dc) = (dl.clone(), dc.clone());
        let mut r = self.clone();
        let mut q: Vec<(Exps, BigRational)> = Vec::new();
        while let Some((rl, rc)) = r.lead() {
            if !exps_divides(&dl, rl) {
                return None;
            }
            let e = exps_div(rl, &dl);
            let c = rc / &dc;
            r = r.sub(&d.mul_term(&e, &c));
            q.push((e, c));
        }
        // quotient terms were produced in descending order
        Some(MPoly { terms: q })
    }

    /// Divides by the lex-leading coefficient.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => Self::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Coefficients with respect to parameter `v`, indexed by degree.
    fn coeffs_in(&self, v: usize) -> Vec<MPoly> {
        let deg = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Exps, BigRational)>> = vec![Vec::new(); deg + 1];
        for (e, c) in &self.terms {
            let k = e.get(v).copied().unwrap_or(0) as usize;
            let mut e2 = e.clone();
            if v < e2.len() {
                e2[v] = 0;
            }
            buckets[k].push((trim(e2), c.clone()));
        }
        buckets.into_iter().map(MPoly::from_terms).collect()
    }

    fn from_coeffs_in(v: usize, coeffs: &[MPoly]) -> Self {
        let mut terms = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            for (e, x) in &c.terms {
                let mut e2 = e.clone();
                if k > 0 {
                    if e2.len() <= v {
                        e2.resize(v + 1, 0);
                    }
                    e2[v] += k as u32;
                }
                terms.push((e2, x.clone()));
            }
        }
        MPoly::from_terms(terms)
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        if a.is_constant() || b.is_constant() {
            return Self::one();
        }
        if a == b {
            return a.monic();
        }
        if a.is_monomial() || b.is_monomial() {
            let (m, other) = if a.is_monomial() { (a, b) } else { (b, a) };
            let mut e = m.terms[0].0.clone();
            for (oe, _) in &other.terms {
                for k in 0..e.len() {
                    e[k] = e[k].min(oe.get(k).copied().unwrap_or(0));
                }
            }
            return Self::monomial(e, BigRational::one());
        }
        let n = a.nvars().max(b.nvars());
        // variables the gcd can involve, screened by univariate images
        let live: Vec<usize> = (0..n)
            .filter(|&v| a.has_var(v) && b.has_var(v) && !coprime_image(a, b, v))
            .collect();
        if live.is_empty() {
            return Self::one();
        }
        if let Some(g) = heuristic_gcd(&integer_primitive(a), &integer_primitive(b)) {
            return g.monic();
        }
        let v = *live
            .iter()
            .min_by_key(|&&v| a.degree_in(v).max(b.degree_in(v)))
            .unwrap();
        let ac = a.coeffs_in(v);
        let bc = b.coeffs_in(v);
        let ca = content(&ac);
        let cb = content(&bc);
        let pa: Vec<MPoly> = ac.iter().map(|c| c.div_exact(&ca).unwrap()).collect();
        let pb: Vec<MPoly> = bc.iter().map(|c| c.div_exact(&cb).unwrap()).collect();
        let g = Self::gcd(&ca, &cb);
        let h = subresultant_gcd(pa, pb);
        Self::from_coeffs_in(v, &h).mul(&g).monic()
    }

    /// Value at `pts` of every parameter except `v`, as a dense polynomial in `v`.
    fn image_in(&self, v: usize, pts: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.degree_in(v) as usize + 1];
        for (e, c) in &self.terms {
            let mut x = c.clone();
            for (k, &p) in e.iter().enumerate() {
                if k != v && p > 0 {
                    x *= num_traits::pow(pts[k].clone(), p as usize);
                }
            }
            out[e.get(v).copied().unwrap_or(0) as usize] += x;
        }
        out
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else if neg {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            let mono = mono_string(e, names);
            if mono.is_empty() {
                let _ = write!(s, "{}", abs);
            } else if abs.is_one() {
                s.push_str(&mono);
            } else {
                let _ = write!(s, "{}*{}", abs, mono);
            }
        }
        s
    }
}

fn mono_string(e: &Exps, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (k, &p) in e.iter().enumerate() {
        if p == 0 {
            continue;
        }
        let name = names.get(k).cloned().unwrap_or_else(|| format!("p{}", k));
        if p == 1 {
            parts.push(name);
        } else {
            parts.push(format!("{}^{}", name, p));
        }
    }
    parts.join("*")
}

fn content(coeffs: &[MPoly]) -> MPoly {
    let mut g = MPoly::zero();
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        g = MPoly::gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn trim_top(mut p: Vec<MPoly>) -> Vec<MPoly> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b` of univariate
/// polynomials with polynomial coefficients.
fn prem(a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut steps = a.len().saturating_sub(db);
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: Vec<MPoly> = r.iter().map(|c| c.mul(lb)).collect();
        for (k, bc) in b.iter().enumerate() {
            next[k + shift] = next[k + shift].sub(&bc.mul(&lr));
        }
        next.pop();
        r = trim_top(next);
        steps -= 1;
    }
    if steps > 0 {
        let k = lb.pow(steps as u32);
        r = r.iter().map(|c| c.mul(&k)).collect();
    }
    r
}

fn primitive_part(p: Vec<MPoly>) -> Vec<MPoly> {
    let c = content(&p);
    if c.is_one() {
        return p;
    }
    p.iter().map(|x| x.div_exact(&c).unwrap()).collect()
}

/// Gcd of two primitive polynomials via the subresultant remainder sequence.
fn subresultant_gcd(a: Vec<MPoly>, b: Vec<MPoly>) -> Vec<MPoly> {
    let (mut a, mut b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut g = MPoly::one();
    let mut h = MPoly::one();
    loop {
        let d = (a.len() - b.len()) as u32;
        let r = prem(&a, &b);
        if r.is_empty() {
            return primitive_part(b);
        }
        if r.len() == 1 {
            return vec![MPoly::one()];
        }
        let div = g.mul(&h.pow(d));
        a = b;
        b = r.iter().map(|c| c.div_exact(&div).expect("subresultant division")).collect();
        g = a.last().unwrap().clone();
        h = if d == 0 {
            h
        } else {
            g.pow(d).div_exact(&h.pow(d - 1)).expect("subresultant division")
        };
    }
}

/// The associate of `p` with coprime integer coefficients.
fn integer_primitive(p: &MPoly) -> MPoly {
    let l = p.terms.iter().fold(BigInt::one(), |l, (_, c)| l.lcm(c.denom()));
    let nums: Vec<BigInt> = p.terms.iter().map(|(_, c)| (c * &l).to_integer()).collect();
    let g = nums.iter().fold(BigInt::zero(), |g, n| g.gcd(n));
    let terms = p
        .terms
        .iter()
        .zip(nums)
        .map(|((e, _), n)| (e.clone(), BigRational::from_integer(n / &g)))
        .collect();
    MPoly { terms }
}

fn integer_content(p: &MPoly) -> BigInt {
    p.terms.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c.numer()))
}

fn max_norm(p: &MPoly) -> BigInt {
    p.terms.iter().map(|(_, c)| c.numer().abs()).max().unwrap_or_default()
}

/// `p` with parameter `v` set to the integer `xi`.
fn eval_at(p: &MPoly, v: usize, xi: &BigInt) -> MPoly {
    let mut pows: Vec<BigInt> = vec![BigInt::one()];
    MPoly::from_terms(p.terms.iter().map(|(e, c)| {
        let k = e.get(v).copied().unwrap_or(0) as usize;
        while pows.len() <= k {
            let next = pows.last().unwrap() * xi;
            pows.push(next);
        }
        let mut e2 = e.clone();
        if v < e2.len() {
            e2[v] = 0;
        }
        (e2, c * BigRational::from_integer(pows[k].clone()))
    }))
}

/// Reads the coefficients of `v^i` off the balanced base-`xi` digits of `gamma`.
fn xi_adic(gamma: &MPoly, v: usize, xi: &BigInt) -> MPoly {
    let half = xi / 2;
    let mut rest: Vec<(Exps, BigInt)> = gamma.terms.iter().map(|(e, c)| (e.clone(), c.to_integer())).collect();
    let mut terms = Vec::new();
    let mut i = 0u32;
    while !rest.is_empty() {
        for (e, c) in rest.iter_mut() {
            let mut r = c.mod_floor(xi);
            if r > half {
                r -= xi;
            }
            *c = (&*c - &r) / xi;
            if !r.is_zero() {
                let mut e2 = e.clone();
                if i > 0 {
                    if e2.len() <= v {
                        e2.resize(v + 1, 0);
                    }
                    e2[v] += i;
                }
                terms.push((e2, BigRational::from_integer(r)));
            }
        }
        rest.retain(|(_, c)| !c.is_zero());
        i += 1;
    }
    MPoly::from_terms(terms)
}

/// Heuristic gcd of integer polynomials: evaluate one parameter at a large
/// integer, recurse, rebuild from the balanced digits and confirm by trial
/// division. A confirmed candidate is the gcd; `None` means give up.
fn heuristic_gcd(a: &MPoly, b: &MPoly) -> Option<MPoly> {
    let (ca, cb) = (integer_content(a), integer_content(b));
    let c = BigRational::from_integer(ca.gcd(&cb));
    let a = a.scale(&BigRational::from_integer(ca).recip());
    let b = b.scale(&BigRational::from_integer(cb).recip());
    if a.is_constant() || b.is_constant() {
        return Some(MPoly::constant(c));
    }
    let n = a.nvars().max(b.nvars());
    let v = (0..n).rev().find(|&v| a.has_var(v) || b.has_var(v))?;
    let mut xi: BigInt = max_norm(&a).min(max_norm(&b)) * 2 + 29;
    for _ in 0..6 {
        // images grow like xi^deg; beyond this the fallback is cheaper
        if xi.bits() * u64::from(a.degree_in(v).max(b.degree_in(v))) > 20_000 {
            return None;
        }
        let (ga, gb) = (eval_at(&a, v, &xi), eval_at(&b, v, &xi));
        if !ga.is_zero() && !gb.is_zero() {
            if let Some(gamma) = heuristic_gcd(&ga, &gb) {
                let g = xi_adic(&gamma, v, &xi);
                if !g.is_zero() {
                    let g = g.scale(&BigRational::from_integer(integer_content(&g)).recip());
                    if a.div_exact(&g).is_some() && b.div_exact(&g).is_some() {
                        return Some(g.scale(&c));
                    }
                }
            }
        }
        xi = xi * 73794 / 27011;
    }
    None
}

/// True when the images of `a` and `b` in `Q[v]` at a fixed point are
/// coprime with leading coefficients intact, which rules `v` out of the gcd.
fn coprime_image(a: &MPoly, b: &MPoly, v: usize) -> bool {
    let n = a.nvars().max(b.nvars());
    for attempt in 0..2i64 {
        let pts: Vec<BigRational> = (0..n)
            .map(|k| BigRational::from_integer(BigInt::from(3 + 7 * k as i64 + 13 * attempt)))
            .collect();
        let ia = a.image_in(v, &pts);
        let ib = b.image_in(v, &pts);
        if ia.last().unwrap().is_zero() || ib.last().unwrap().is_zero() {
            continue;
        }
        return univariate_gcd_degree(ia, ib) == 0;
    }
    false
}

fn univariate_gcd_degree(mut a: Vec<BigRational>, mut b: Vec<BigRational>) -> usize {
    let trim = |p: &mut Vec<BigRational>| {
        while p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        // a mod b
        while a.len() >= b.len() {
            let q = a.last().unwrap() / b.last().unwrap();
            let shift = a.len() - b.len();
            for (k, c) in b.iter().enumerate() {
                let t = &q * c;
                a[k + shift] -= t;
            }
            a.pop();
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}
