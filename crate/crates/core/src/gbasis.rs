//! One-sided ideals of a skew PBW extension: division, degree-bounded
//! Buchberger completion and membership with checked certificates.
//!
//! Left ideals are sums `Σ q_k g_k`, right ideals `Σ g_k q_k`. Leading
//! monomials multiply exactly (`lm(x^μ g) = x^μ lm(g)`), but leading
//! coefficients are twisted by σ and the `c_ij`, so every cancellation step
//! reads the coefficient off the actual product.

use std::fmt;

use serde_json::{json, Value};

use crate::matring::Side;
use crate::polyarith::{Mono, Poly, Ring};
use crate::presentation::Augmentation;
use crate::scalars::Scalar;
use crate::{Error, Result};

/// `x^μ g` on the left, `g x^μ` on the right.
fn shift(ring: &Ring, side: Side, mu: &Mono, g: &Poly) -> Poly {
    match side {
        Side::Left => ring.mono_times(mu, g),
        Side::Right => ring.mul(g, &ring.monomial(mu.clone())),
    }
}

/// `k·p` on the left, `p·k` on the right.
fn side_scale(ring: &Ring, side: Side, k: &Scalar, p: &Poly) -> Poly {
    match side {
        Side::Left => p.scale(k),
        Side::Right => ring.mul_scalar_right(p, k),
    }
}

/// The scalar `k` with `lc(side_scale(k, p)) = target`.
fn matching_scalar(ring: &Ring, side: Side, p: &Poly, target: &Scalar) -> Result<Scalar> {
    let (m, c) = p.lead().ok_or(Error::ZeroGenerator)?;
    let k = target.div(c)?;
    match side {
        Side::Left => Ok(k),
        Side::Right => ring.sigma_inv_along(m, &k).ok_or(Error::NotInvertible),
    }
}

/// The quotient term `k·x^μ` (left) or `x^μ·k` (right).
fn quotient_term(ring: &Ring, side: Side, mu: &Mono, k: &Scalar) -> Poly {
    match side {
        Side::Left => Poly::term(mu.clone(), k.clone()),
        Side::Right => ring.mul(&ring.monomial(mu.clone()), &ring.constant(k.clone())),
    }
}

/// `q·g` (left) or `g·q` (right).
pub fn act(ring: &Ring, side: Side, q: &Poly, g: &Poly) -> Poly {
    match side {
        Side::Left => ring.mul(q, g),
        Side::Right => ring.mul(g, q),
    }
}

/// Composes a quotient with a representation: the coefficients of
/// `q·(Σ h_k g_k)` or `(Σ g_k h_k)·q` in terms of the `g_k`.
fn compose(ring: &Ring, side: Side, q: &Poly, rep: &[Poly]) -> Vec<Poly> {
    rep.iter()
        .map(|h| match side {
            Side::Left => ring.mul(q, h),
            Side::Right => ring.mul(h, q),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct Division {
    pub remainder: Poly,
    pub quotients: Vec<Poly>,
}

/// Full reduction of `f` modulo `basis`: the remainder has no term whose
/// monomial is divisible by a leading monomial of the basis, and
/// `f = Σ q_k·g_k + rem` (left) or `f = Σ g_k·q_k + rem` (right).
pub fn reduce(ring: &Ring, side: Side, f: &Poly, basis: &[Poly]) -> Result<Division> {
    if basis.iter().any(|g| g.is_zero()) {
        return Err(Error::ZeroGenerator);
    }
    let mut quotients = vec![Poly::zero(); basis.len()];
    let mut rem = Poly::zero();
    let mut p = f.clone();
    while let Some((m, c)) = p.lead() {
        let (m, c) = (m.clone(), c.clone());
        let Some(k) = basis.iter().position(|g| g.lead_mono().unwrap().divides(&m)) else {
            rem.add_term(m.clone(), c.clone());
            p.add_term(m, c.neg());
            continue;
        };
        let g = &basis[k];
        let mu = g.lead_mono().unwrap().cofactor(&m);
        let shifted = shift(ring, side, &mu, g);
        let s = matching_scalar(ring, side, &shifted, &c)?;
        p = p.sub(&side_scale(ring, side, &s, &shifted));
        if p.coeff(&m).is_some() {
            return Err(Error::Verification(format!(
                "division step failed to cancel {}",
                ring.fmt(&Poly::term(m, c))
            )));
        }
        // q·(x^μ g) with q a scalar is (q x^μ)·g, and (g x^μ)·q is g·(x^μ q)
        let q = quotient_term(ring, side, &mu, &s);
        quotients[k] = quotients[k].add(&q);
    }
    Ok(Division { remainder: rem, quotients })
}

/// A one-sided ideal with the basis found so far. Every basis element
/// carries its representation in terms of the original generators.
#[derive(Clone, Debug)]
pub struct IdealBasis {
    pub side: Side,
    pub generators: Vec<Poly>,
    pub basis: Vec<Poly>,
    reps: Vec<Vec<Poly>>,
    /// Degree bound the completion ran to, if any.
    pub completed_to: Option<u32>,
    /// True when no S-pair was skipped, so `basis` is a Gröbner basis.
    pub exhaustive: bool,
}

impl IdealBasis {
    pub fn new(ring: &Ring, side: Side, generators: Vec<Poly>) -> Result<Self> {
        if generators.iter().any(|g| g.is_zero()) {
            return Err(Error::ZeroGenerator);
        }
        let s = generators.len();
        let reps = (0..s)
            .map(|i| (0..s).map(|j| if i == j { ring.one() } else { Poly::zero() }).collect())
            .collect();
        Ok(IdealBasis {
            side,
            basis: generators.clone(),
            generators,
            reps,
            completed_to: None,
            exhaustive: false,
        })
    }

    pub fn leading_monomials(&self) -> Vec<Mono> {
        self.basis.iter().map(|g| g.lead_mono().unwrap().clone()).collect()
    }

    /// Representation of `basis[k]` over the original generators.
    pub fn representation(&self, k: usize) -> &[Poly] {
        &self.reps[k]
    }

    fn max_degree(&self) -> u32 {
        self.generators.iter().filter_map(|g| g.degree()).max().unwrap_or(0)
    }

    /// Default completion bound: twice the largest input degree plus 4.
    pub fn default_bound(&self) -> u32 {
        2 * self.max_degree() + 4
    }

    /// Reduces `f` and translates the quotients back to the generators.
    pub fn divide(&self, ring: &Ring, f: &Poly) -> Result<(Poly, Vec<Poly>)> {
        let div = reduce(ring, self.side, f, &self.basis)?;
        let mut cert = vec![Poly::zero(); self.generators.len()];
        for (q, rep) in div.quotients.iter().zip(&self.reps) {
            if q.is_zero() {
                continue;
            }
            for (c, h) in cert.iter_mut().zip(compose(ring, self.side, q, rep)) {
                *c = c.add(&h);
            }
        }
        Ok((div.remainder, cert))
    }

    fn push(&mut self, ring: &Ring, g: Poly, rep: Vec<Poly>) -> Result<()> {
        // normalize to leading coefficient 1
        let k = matching_scalar(ring, self.side, &g, &Scalar::one())?;
        let g = side_scale(ring, self.side, &k, &g);
        let unit = ring.constant(k);
        let rep = rep
            .iter()
            .map(|h| match self.side {
                Side::Left => ring.mul(&unit, h),
                Side::Right => ring.mul(h, &unit),
            })
            .collect();
        self.basis.push(g);
        self.reps.push(rep);
        Ok(())
    }

    /// The S-polynomial of basis elements `a` and `b`, with its representation.
    fn s_poly(&self, ring: &Ring, a: usize, b: usize) -> Result<(Poly, Vec<Poly>)> {
        let (ma, mb) = (self.basis[a].lead_mono().unwrap(), self.basis[b].lead_mono().unwrap());
        let l = ma.lcm(mb);
        let mut out = Poly::zero();
        let mut rep = vec![Poly::zero(); self.generators.len()];
        for (k, sign) in [(a, Scalar::one()), (b, Scalar::from_int(-1))] {
            let g = &self.basis[k];
            let mu = g.lead_mono().unwrap().cofactor(&l);
            let shifted = shift(ring, self.side, &mu, g);
            let s = matching_scalar(ring, self.side, &shifted, &sign)?;
            out = out.add(&side_scale(ring, self.side, &s, &shifted));
            let q = quotient_term(ring, self.side, &mu, &s);
            for (c, h) in rep.iter_mut().zip(compose(ring, self.side, &q, &self.reps[k])) {
                *c = c.add(&h);
            }
        }
        Ok((out, rep))
    }

    /// Bounded Buchberger completion: every S-pair whose lcm has degree at
    /// most `bound` reduces to zero afterwards. The result is interreduced.
    pub fn complete(&mut self, ring: &Ring, bound: u32) -> Result<()> {
        // start from monic generators
        let gens = std::mem::take(&mut self.basis);
        let reps = std::mem::take(&mut self.reps);
        for (g, r) in gens.into_iter().zip(reps) {
            self.push(ring, g, r)?;
        }
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for b in 1..self.basis.len() {
            for a in 0..b {
                pairs.push((a, b));
            }
        }
        let mut skipped = false;
        while let Some((a, b)) = pairs.pop() {
            let l = self.basis[a].lead_mono().unwrap().lcm(self.basis[b].lead_mono().unwrap());
            if l.degree() > bound {
                skipped = true;
                continue;
            }
            let (s, rep) = self.s_poly(ring, a, b)?;
            let div = reduce(ring, self.side, &s, &self.basis)?;
            if div.remainder.is_zero() {
                continue;
            }
            let mut rep = rep;
            for (q, r) in div.quotients.iter().zip(&self.reps) {
                if q.is_zero() {
                    continue;
                }
                for (c, h) in rep.iter_mut().zip(compose(ring, self.side, q, r)) {
                    *c = c.sub(&h);
                }
            }
            let new = self.basis.len();
            self.push(ring, div.remainder, rep)?;
            for a in 0..new {
                pairs.push((a, new));
            }
        }
        self.interreduce(ring)?;
        self.completed_to = Some(bound);
        self.exhaustive = !skipped;
        Ok(())
    }

    /// Drops elements with a redundant leading monomial and reduces the
    /// tails of the rest.
    fn interreduce(&mut self, ring: &Ring) -> Result<()> {
        let lms = self.leading_monomials();
        let keep: Vec<usize> = (0..lms.len())
            .filter(|&i| {
                !(0..lms.len()).any(|j| j != i && lms[j].divides(&lms[i]) && (lms[j] != lms[i] || j < i))
            })
            .collect();
        let basis: Vec<Poly> = keep.iter().map(|&i| self.basis[i].clone()).collect();
        let reps: Vec<Vec<Poly>> = keep.iter().map(|&i| self.reps[i].clone()).collect();
        let mut out_basis = Vec::with_capacity(basis.len());
        let mut out_reps = Vec::with_capacity(basis.len());
        for i in 0..basis.len() {
            let (m, c) = basis[i].lead().unwrap();
            let tail = basis[i].sub(&Poly::term(m.clone(), c.clone()));
            let others: Vec<Poly> = (0..basis.len()).filter(|&j| j != i).map(|j| basis[j].clone()).collect();
            let div = reduce(ring, self.side, &tail, &others)?;
            let g = Poly::term(m.clone(), c.clone()).add(&div.remainder);
            let mut rep = reps[i].clone();
            let idx: Vec<usize> = (0..basis.len()).filter(|&j| j != i).collect();
            for (q, &j) in div.quotients.iter().zip(&idx) {
                if q.is_zero() {
                    continue;
                }
                for (c, h) in rep.iter_mut().zip(compose(ring, self.side, q, &reps[j])) {
                    *c = c.sub(&h);
                }
            }
            out_basis.push(g);
            out_reps.push(rep);
        }
        let mut order: Vec<usize> = (0..out_basis.len()).collect();
        order.sort_by(|&a, &b| out_basis[a].lead_mono().cmp(&out_basis[b].lead_mono()));
        self.basis = order.iter().map(|&i| out_basis[i].clone()).collect();
        self.reps = order.iter().map(|&i| out_reps[i].clone()).collect();
        Ok(())
    }

    /// Checks that every basis element equals its recorded combination.
    pub fn representations_hold(&self, ring: &Ring) -> bool {
        self.basis.iter().zip(&self.reps).all(|(b, rep)| {
            let mut sum = Poly::zero();
            for (h, g) in rep.iter().zip(&self.generators) {
                sum = sum.add(&act(ring, self.side, h, g));
            }
            sum == *b
        })
    }
}

/// Quotients expressing a member in terms of the generators.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub side: Side,
    pub quotients: Vec<Poly>,
}

impl Certificate {
    pub fn recombine(&self, ring: &Ring, generators: &[Poly]) -> Poly {
        let mut sum = Poly::zero();
        for (q, g) in self.quotients.iter().zip(generators) {
            sum = sum.add(&act(ring, self.side, q, g));
        }
        sum
    }

    pub fn verify(&self, ring: &Ring, generators: &[Poly], f: &Poly) -> bool {
        self.recombine(ring, generators) == *f
    }

    pub fn to_json(&self, ring: &Ring) -> Value {
        json!(self.quotients.iter().map(|q| ring.fmt(q)).collect::<Vec<_>>())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum NonMembership {
    /// The completion ran without skipping pairs, so the basis is Gröbner.
    GroebnerBasis,
    /// `ε(f) ≠ 0` while every generator lies in `ker ε`.
    Augmentation(Scalar),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Membership {
    Member(Certificate),
    NotMember(NonMembership),
    /// Nonzero remainder against a basis completed only up to this degree.
    NotMemberUpTo(u32),
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Membership::Member(_) => "member",
            Membership::NotMember(_) => "not member",
            Membership::NotMemberUpTo(_) => "not member up to bound",
        }
    }
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Membership::NotMemberUpTo(d) => write!(f, "{} {}", self.label(), d),
            _ => f.write_str(self.label()),
        }
    }
}

/// Whether `f` lies in the ideal generated by `ideal.generators`, completing
/// the basis to `bound` if it has not been completed that far yet. Member
/// certificates are re-multiplied before they are returned.
pub fn member(ring: &Ring, f: &Poly, ideal: &mut IdealBasis, bound: u32) -> Result<Membership> {
    if f.is_zero() {
        return Ok(Membership::Member(Certificate {
            side: ideal.side,
            quotients: vec![Poly::zero(); ideal.generators.len()],
        }));
    }
    // ε gives an exact answer before any completion work
    let eps = f.constant_term();
    if !eps.is_zero()
        && ring.central()
        && ring.presentation().augmentation()? == Augmentation::Ok
        && ideal.generators.iter().all(|g| g.constant_term().is_zero())
    {
        return Ok(Membership::NotMember(NonMembership::Augmentation(eps)));
    }
    if ideal.completed_to.is_none_or(|d| d < bound) && !ideal.exhaustive {
        ideal.complete(ring, bound)?;
    }
    let (rem, quotients) = ideal.divide(ring, f)?;
    if rem.is_zero() {
        let cert = Certificate {
            side: ideal.side,
            quotients,
        };
        if !cert.verify(ring, &ideal.generators, f) {
            return Err(Error::Verification(format!(
                "membership certificate for {} does not re-multiply",
                ring.fmt(f)
            )));
        }
        return Ok(Membership::Member(cert));
    }
    if ideal.exhaustive {
        Ok(Membership::NotMember(NonMembership::GroebnerBasis))
    } else {
        Ok(Membership::NotMemberUpTo(ideal.completed_to.unwrap_or(bound)))
    }
}
