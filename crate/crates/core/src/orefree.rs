//! Euclidean division, tracked Hermite reduction and freeness certificates
//! for idempotent matrices over a univariate Ore ring `K[x; σ, δ]`.
//!
//! Rows are left-module elements, so row operations multiply from the left
//! and the accumulated transform satisfies `V·M = H`.

use serde_json::json;

use crate::gbasis;
use crate::matring::{is_idempotent, mat_mul, Mat, Side};
use crate::polyarith::{Poly, Ring};
use crate::report::Report;
use crate::{Error, Result};

fn check_ore(ring: &Ring) -> Result<()> {
    if ring.n() != 1 {
        return Err(Error::NotUnivariate);
    }
    if !ring.presentation().sigma[0].is_bijective() {
        return Err(Error::NotInvertible);
    }
    Ok(())
}

fn deg(p: &Poly) -> Option<u32> {
    p.degree()
}

fn divide(ring: &Ring, side: Side, f: &Poly, g: &Poly) -> Result<(Poly, Poly)> {
    check_ore(ring)?;
    if g.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    let div = gbasis::reduce(ring, side, f, std::slice::from_ref(g))?;
    let q = div.quotients.into_iter().next().unwrap();
    let r = div.remainder;
    let back = gbasis::act(ring, side, &q, g).add(&r);
    if back != *f || deg(&r).is_some_and(|d| Some(d) >= deg(g)) {
        return Err(Error::Verification(format!(
            "division of {} by {} does not re-multiply",
            ring.fmt(f),
            ring.fmt(g)
        )));
    }
    Ok((q, r))
}

/// `f = q·g + r` with `deg r < deg g`. Each quotient term is
/// `(lc f / σ^d(lc g))·x^d`.
pub fn left_divide(ring: &Ring, f: &Poly, g: &Poly) -> Result<(Poly, Poly)> {
    divide(ring, Side::Left, f, g)
}

/// `f = g·q + r` with `deg r < deg g`, using σ⁻¹ to place the quotient
/// coefficients to the right of `x^d`.
pub fn right_divide(ring: &Ring, f: &Poly, g: &Poly) -> Result<(Poly, Poly)> {
    divide(ring, Side::Right, f, g)
}

/// A row reduction `V·M = H` together with `V⁻¹`.
#[derive(Clone, Debug, PartialEq)]
pub struct TrackedReduction {
    pub v: Mat,
    pub v_inv: Mat,
    pub h: Mat,
}

impl TrackedReduction {
    /// Number of nonzero rows of `H`; they come first.
    pub fn rank(&self) -> usize {
        (0..self.h.rows()).take_while(|&i| self.h.row(i).iter().any(|p| !p.is_zero())).count()
    }

    /// `r_k ← r_k − q·r_p`.
    fn subtract(&mut self, ring: &Ring, k: usize, p: usize, q: &Poly) {
        for m in [&mut self.h, &mut self.v] {
            for j in 0..m.cols() {
                let e = m.get(k, j).sub(&ring.mul(q, m.get(p, j)));
                m.set(k, j, e);
            }
        }
        // V⁻¹ gains the inverse operation on the right: column p += (column k)·q
        for i in 0..self.v_inv.rows() {
            let e = self.v_inv.get(i, p).add(&ring.mul(self.v_inv.get(i, k), q));
            self.v_inv.set(i, p, e);
        }
    }

    fn swap(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for m in [&mut self.h, &mut self.v] {
            for j in 0..m.cols() {
                let x = m.get(a, j).clone();
                let y = m.get(b, j).clone();
                m.set(a, j, y);
                m.set(b, j, x);
            }
        }
        for i in 0..self.v_inv.rows() {
            let x = self.v_inv.get(i, a).clone();
            let y = self.v_inv.get(i, b).clone();
            self.v_inv.set(i, a, y);
            self.v_inv.set(i, b, x);
        }
    }
}

/// Row echelon form by left division: in each column the pivot is an entry
/// of least degree among the remaining rows and everything below it is
/// cleared. `V` and `V⁻¹` follow every elementary operation.
pub fn hermite_rows(ring: &Ring, m: &Mat) -> Result<TrackedReduction> {
    check_ore(ring)?;
    let s = m.rows();
    let mut t = TrackedReduction {
        v: Mat::identity(ring, s),
        v_inv: Mat::identity(ring, s),
        h: m.clone(),
    };
    let mut top = 0;
    for col in 0..m.cols() {
        if top == s {
            break;
        }
        loop {
            let pivot = (top..s)
                .filter(|&i| !t.h.get(i, col).is_zero())
                .min_by_key(|&i| (deg(t.h.get(i, col)), i));
            let Some(p) = pivot else { break };
            t.swap(top, p);
            let mut done = true;
            for k in top + 1..s {
                if t.h.get(k, col).is_zero() {
                    continue;
                }
                let (q, r) = left_divide(ring, t.h.get(k, col), t.h.get(top, col))?;
                t.subtract(ring, k, top, &q);
                if !r.is_zero() {
                    done = false;
                }
            }
            if done {
                top += 1;
                break;
            }
        }
    }
    Ok(t)
}

/// `U·F·U⁻¹ = diag(0_{s−r}, I_r)`; the last `r` rows of `U` are a basis of
/// the row space of `F`.
#[derive(Clone, Debug, PartialEq)]
pub struct FreenessCertificate {
    pub u: Mat,
    pub u_inv: Mat,
    pub r: usize,
    pub basis: Vec<Vec<Poly>>,
}

pub fn block_target(ring: &Ring, s: usize, r: usize) -> Mat {
    let mut d = Mat::zero(s, s);
    for i in s - r..s {
        d.set(i, i, ring.one());
    }
    d
}

/// Builds `U` from echelon bases of the row spaces of `I − F` (the kernel of
/// `v ↦ vF`) and of `F` (its image), reads `U⁻¹` off the two inverse
/// transforms, and verifies the result before returning it.
pub fn qs_diagonalize(ring: &Ring, f: &Mat) -> Result<FreenessCertificate> {
    check_ore(ring)?;
    if !is_idempotent(ring, f)? {
        return Err(Error::NotIdempotent);
    }
    let s = f.rows();
    let id = Mat::identity(ring, s);
    let complement = id.sub(f)?;
    let (ker, img) = rayon::join(|| hermite_rows(ring, &complement), || hermite_rows(ring, f));
    let (ker, img) = (ker?, img?);
    let (k, r) = (ker.rank(), img.rank());
    if k + r != s {
        return Err(Error::Verification(format!(
            "kernel rank {} and image rank {} do not add up to {}",
            k, r, s
        )));
    }
    // e_i = e_i(I−F) + e_iF, and row i of M is Σ_j V⁻¹[i][j]·H[j]
    let mut u_rows = Vec::with_capacity(s);
    for i in 0..k {
        u_rows.push(ker.h.row(i).to_vec());
    }
    for i in 0..r {
        u_rows.push(img.h.row(i).to_vec());
    }
    let u_inv_rows: Vec<Vec<Poly>> = (0..s)
        .map(|i| {
            let mut row: Vec<Poly> = (0..k).map(|j| ker.v_inv.get(i, j).clone()).collect();
            row.extend((0..r).map(|j| img.v_inv.get(i, j).clone()));
            row
        })
        .collect();
    let u = Mat::from_rows(u_rows)?;
    let u_inv = Mat::from_rows(u_inv_rows)?;
    let cert = FreenessCertificate {
        basis: (k..s).map(|i| u.row(i).to_vec()).collect(),
        u,
        u_inv,
        r,
    };
    let rep = verify_certificate(ring, f, &cert)?;
    if !rep.passed() {
        return Err(Error::Verification(rep.render_text()));
    }
    Ok(cert)
}

fn residual(ring: &Ring, got: &Mat, want: &Mat) -> serde_json::Value {
    match got.sub(want) {
        Ok(d) if d.is_zero() => json!(null),
        Ok(d) => json!(d.to_text(ring)),
        Err(e) => json!(e.to_string()),
    }
}

/// Re-checks every identity of a certificate by exact multiplication.
pub fn verify_certificate(ring: &Ring, f: &Mat, cert: &FreenessCertificate) -> Result<Report> {
    let s = f.rows();
    let mut rep = Report::new("verify-certificate", Some(ring.name()));
    if cert.u.rows() != s || cert.u.cols() != s || cert.u_inv.rows() != s || cert.u_inv.cols() != s || cert.r > s {
        return Err(Error::DimensionMismatch("certificate shape does not match F".into()));
    }
    let id = Mat::identity(ring, s);
    let uu = mat_mul(ring, &cert.u, &cert.u_inv)?;
    rep.pass_if("U*Uinv = I", uu == id, residual(ring, &uu, &id));
    let uu2 = mat_mul(ring, &cert.u_inv, &cert.u)?;
    rep.pass_if("Uinv*U = I", uu2 == id, residual(ring, &uu2, &id));
    let target = block_target(ring, s, cert.r);
    let conj = mat_mul(ring, &mat_mul(ring, &cert.u, f)?, &cert.u_inv)?;
    rep.pass_if("U*F*Uinv = diag(0, I_r)", conj == target, residual(ring, &conj, &target));
    let last_rows: Vec<Vec<Poly>> = (s - cert.r..s).map(|i| cert.u.row(i).to_vec()).collect();
    rep.pass_if("basis = last r rows of U", last_rows == cert.basis, json!(null));
    // each row of F is an explicit combination of the basis: F = (F·U⁻¹)·U
    // and the first s − r columns of F·U⁻¹ vanish when the block identity holds
    let fu = mat_mul(ring, f, &cert.u_inv)?;
    let lead_zero = (0..s).all(|i| (0..s - cert.r).all(|j| fu.get(i, j).is_zero()));
    let mut spans = lead_zero;
    if lead_zero && cert.r > 0 {
        let coeffs = Mat::from_rows((0..s).map(|i| fu.row(i)[s - cert.r..].to_vec()).collect())?;
        let basis = Mat::from_rows(cert.basis.clone())?;
        spans = mat_mul(ring, &coeffs, &basis)? == *f;
    } else if lead_zero {
        spans = f.is_zero();
    }
    rep.pass_if("rows of F lie in the span of the basis", spans, json!(null));
    rep.value("r", cert.r);
    Ok(rep)
}
