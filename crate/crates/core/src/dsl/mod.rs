//! The `.spbw` text format: ring, matrix and complex declarations.
//!
//! ```text
//! ring qweyl params (q) {
//!   vars x y;
//!   rel y*x = q*x*y + 1;
//! }
//! matrix m over qweyl = [[x, y], [1, 0]];
//! complex c over qweyl side left = (m, m);
//! ```
//!
//! Inside expressions `*` is the (noncommutative) ring product. Relations are
//! checked syntactically: the right-hand side of `xj*xi` may only contain
//! `c*xi*xj`, linear terms and a constant, all coefficients written first.

mod syntax;

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use syntax::Pos;
use syntax::{lex, Cursor, Expr, Tok};

use crate::matring::{Complex, Mat, Side};
use crate::polyarith::{format_poly, Poly, Ring};
use crate::presentation::{Commutation, Gld, Presentation};
use crate::scalars::{Scalar, ScalarMap};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct MatDecl {
    pub name: String,
    pub ring: String,
    pub mat: Mat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexDecl {
    pub name: String,
    pub ring: String,
    pub side: Side,
    pub maps: Vec<String>,
}

#[derive(Clone, Debug)]
enum Item {
    Ring(usize),
    Matrix(usize),
    Complex(usize),
}

#[derive(Clone, Debug, Default)]
pub struct Document {
    rings: Vec<Arc<Ring>>,
    matrices: Vec<MatDecl>,
    complexes: Vec<ComplexDecl>,
    order: Vec<Item>,
}

impl PartialEq for Document {
    fn eq(&self, o: &Self) -> bool {
        self.rings.len() == o.rings.len()
            && self
                .rings
                .iter()
                .zip(&o.rings)
                .all(|(a, b)| a.presentation() == b.presentation())
            && self.matrices.len() == o.matrices.len()
            && self
                .matrices
                .iter()
                .zip(&o.matrices)
                .all(|(a, b)| a.name == b.name && a.ring == b.ring && a.mat == b.mat)
            && self.complexes == o.complexes
    }
}

impl Document {
    pub fn parse(src: &str) -> Result<Document> {
        let mut doc = Document::default();
        let mut cur = Cursor::new(lex(src)?);
        let mut names: HashMap<String, Pos> = HashMap::new();
        while !cur.at_eof() {
            let pos = cur.pos();
            let (kw, _) = cur.ident()?;
            let (name, npos) = cur.ident()?;
            if names.insert(name.clone(), npos).is_some() {
                return Err(npos.err(format!("duplicate declaration `{}`", name)));
            }
            match kw.as_str() {
                "ring" => {
                    let pres = parse_ring(&mut cur, name)?;
                    doc.order.push(Item::Ring(doc.rings.len()));
                    doc.rings.push(Arc::new(Ring::new(pres)));
                }
                "matrix" => {
                    cur.expect_kw("over")?;
                    let ring = doc.ring_at(&mut cur)?;
                    cur.expect_sym("=")?;
                    let mat = parse_matrix(&mut cur, &ring)?;
                    cur.expect_sym(";")?;
                    doc.order.push(Item::Matrix(doc.matrices.len()));
                    doc.matrices.push(MatDecl {
                        name,
                        ring: ring.name().to_string(),
                        mat,
                    });
                }
                "complex" => {
                    cur.expect_kw("over")?;
                    let ring = doc.ring_at(&mut cur)?;
                    cur.expect_kw("side")?;
                    let (s, spos) = cur.ident()?;
                    let side = match s.as_str() {
                        "left" => Side::Left,
                        "right" => Side::Right,
                        _ => return Err(spos.err("side must be `left` or `right`")),
                    };
                    cur.expect_sym("=")?;
                    cur.expect_sym("(")?;
                    let mut maps = Vec::new();
                    loop {
                        let (m, mpos) = cur.ident()?;
                        match doc.matrices.iter().find(|d| d.name == m) {
                            None => return Err(mpos.err(format!("unknown matrix `{}`", m))),
                            Some(d) if d.ring != ring.name() => {
                                return Err(mpos.err(format!("matrix `{}` is over another ring", m)))
                            }
                            Some(_) => maps.push(m),
                        }
                        if !cur.eat_sym(",") {
                            break;
                        }
                    }
                    cur.expect_sym(")")?;
                    cur.expect_sym(";")?;
                    let decl = ComplexDecl {
                        name,
                        ring: ring.name().to_string(),
                        side,
                        maps,
                    };
                    doc.build_complex(&decl).map_err(|e| pos.err(e.to_string()))?;
                    doc.order.push(Item::Complex(doc.complexes.len()));
                    doc.complexes.push(decl);
                }
                _ => return Err(pos.err(format!("expected `ring`, `matrix` or `complex`, found `{}`", kw))),
            }
        }
        Ok(doc)
    }

    fn ring_at(&self, cur: &mut Cursor) -> Result<Arc<Ring>> {
        let (r, rpos) = cur.ident()?;
        self.ring(&r)
            .cloned()
            .ok_or_else(|| rpos.err(format!("unknown ring `{}`", r)))
    }

    pub fn from_presentation(pres: Presentation) -> Document {
        Document {
            rings: vec![Arc::new(Ring::new(pres))],
            matrices: vec![],
            complexes: vec![],
            order: vec![Item::Ring(0)],
        }
    }

    pub fn rings(&self) -> &[Arc<Ring>] {
        &self.rings
    }

    pub fn ring(&self, name: &str) -> Option<&Arc<Ring>> {
        self.rings.iter().find(|r| r.name() == name)
    }

    pub fn matrices(&self) -> &[MatDecl] {
        &self.matrices
    }

    pub fn complexes(&self) -> &[ComplexDecl] {
        &self.complexes
    }

    pub fn matrix(&self, name: &str) -> Option<&Mat> {
        self.matrices.iter().find(|m| m.name == name).map(|m| &m.mat)
    }

    pub fn complex(&self, name: &str) -> Option<Complex> {
        let d = self.complexes.iter().find(|c| c.name == name)?;
        self.build_complex(d).ok()
    }

    fn build_complex(&self, d: &ComplexDecl) -> Result<Complex> {
        let maps = d
            .maps
            .iter()
            .map(|m| self.matrix(m).cloned().expect("checked at parse"))
            .collect();
        Complex::new(d.side, maps, d.maps.clone())
    }

    pub fn add_matrix(&mut self, name: &str, ring: &str, mat: Mat) {
        self.order.push(Item::Matrix(self.matrices.len()));
        self.matrices.push(MatDecl {
            name: name.to_string(),
            ring: ring.to_string(),
            mat,
        });
    }

    /// Parses a polynomial expression in the named ring.
    pub fn parse_poly(&self, ring: &str, src: &str) -> Result<Poly> {
        let r = self
            .ring(ring)
            .ok_or_else(|| Error::Usage(format!("unknown ring `{}`", ring)))?;
        parse_poly(r, src)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for item in &self.order {
            match item {
                Item::Ring(k) => out.push_str(&print_ring(self.rings[*k].presentation())),
                Item::Matrix(k) => {
                    let m = &self.matrices[*k];
                    let ring = self.ring(&m.ring).expect("declared ring");
                    out.push_str(&format!("matrix {} over {} = {};\n", m.name, m.ring, m.mat.to_text(ring)));
                }
                Item::Complex(k) => {
                    let c = &self.complexes[*k];
                    out.push_str(&format!(
                        "complex {} over {} side {} = ({});\n",
                        c.name,
                        c.ring,
                        c.side.as_str(),
                        c.maps.join(", ")
                    ));
                }
            }
        }
        out
    }
}

/// Parses a standalone polynomial expression in `ring`.
pub fn parse_poly(ring: &Ring, src: &str) -> Result<Poly> {
    let mut cur = Cursor::new(lex(src)?);
    let e = cur.expr()?;
    if !cur.at_eof() {
        return Err(cur.unexpected("end of expression"));
    }
    eval_poly(ring, &e)
}

/// Parses a scalar expression over the given parameters.
pub fn parse_scalar(params: &[String], src: &str) -> Result<Scalar> {
    let mut cur = Cursor::new(lex(src)?);
    let e = cur.expr()?;
    if !cur.at_eof() {
        return Err(cur.unexpected("end of expression"));
    }
    eval_scalar(params, &e)
}

fn parse_ring(cur: &mut Cursor, name: String) -> Result<Presentation> {
    cur.expect_kw("params")?;
    cur.expect_sym("(")?;
    let mut params = Vec::new();
    while !cur.is_sym(")") {
        let (p, ppos) = cur.ident()?;
        if params.contains(&p) {
            return Err(ppos.err(format!("duplicate parameter `{}`", p)));
        }
        params.push(p);
        cur.eat_sym(",");
    }
    cur.bump();
    cur.expect_sym("{")?;
    cur.expect_kw("vars")?;
    let mut vars: Vec<String> = Vec::new();
    while !cur.is_sym(";") {
        let (v, vpos) = cur.ident()?;
        if vars.contains(&v) || params.contains(&v) {
            return Err(vpos.err(format!("duplicate name `{}`", v)));
        }
        vars.push(v);
        cur.eat_sym(",");
    }
    cur.bump();
    if vars.is_empty() {
        return Err(cur.pos().err("a ring needs at least one variable"));
    }
    let mut pres = Presentation::commutative(&name, params, vars);
    let n = pres.n();
    let mut sigma_images: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); n];
    let mut seen_rel = Vec::new();
    loop {
        if cur.eat_sym("}") {
            break;
        }
        let pos = cur.pos();
        let (kw, _) = cur.ident()?;
        match kw.as_str() {
            "gld" => {
                let upper = cur.eat_sym("<=");
                let d = match cur.peek().clone() {
                    Tok::Int(d) => {
                        cur.bump();
                        u32::try_from(d).map_err(|_| pos.err("gld out of range"))?
                    }
                    _ => return Err(cur.unexpected("an integer")),
                };
                pres.gld = Some(if upper { Gld::AtMost(d) } else { Gld::Exact(d) });
            }
            "rel" => {
                let (vj, jpos) = cur.ident()?;
                cur.expect_sym("*")?;
                let (vi, ipos) = cur.ident()?;
                let j = pres.var_index(&vj).ok_or_else(|| jpos.err(format!("unknown variable `{}`", vj)))?;
                let i = pres.var_index(&vi).ok_or_else(|| ipos.err(format!("unknown variable `{}`", vi)))?;
                if j <= i {
                    return Err(jpos.err(format!(
                        "relation must be written as xj*xi with j > i; got {}*{}",
                        vj, vi
                    )));
                }
                if seen_rel.contains(&(j, i)) {
                    return Err(jpos.err(format!("duplicate relation for {}*{}", vj, vi)));
                }
                seen_rel.push((j, i));
                cur.expect_sym("=")?;
                let rpos = cur.pos();
                let rhs = cur.expr()?;
                let comm = relation_data(&pres, j, i, &rhs).map_err(|e| match e {
                    Error::Shape(m) => rpos.err(format!("relation shape: {}", m)),
                    e => e,
                })?;
                pres.set_comm(j, i, comm);
            }
            "sigma" => {
                let (v, vpos) = cur.ident()?;
                let k = pres.var_index(&v).ok_or_else(|| vpos.err(format!("unknown variable `{}`", v)))?;
                cur.expect_sym(":")?;
                let (p, ppos) = cur.ident()?;
                let pi = pres.param_index(&p).ok_or_else(|| ppos.err(format!("unknown parameter `{}`", p)))?;
                cur.expect_sym("->")?;
                let e = cur.expr()?;
                let img = eval_scalar(&pres.params, &e)?;
                sigma_images[k].insert(pi, img);
            }
            "delta" => {
                let (v, vpos) = cur.ident()?;
                let k = pres.var_index(&v).ok_or_else(|| vpos.err(format!("unknown variable `{}`", v)))?;
                cur.expect_sym(":")?;
                cur.expect_sym("(")?;
                cur.expect_kw("sigma")?;
                cur.expect_sym("-")?;
                cur.expect_kw("id")?;
                cur.expect_sym(")")?;
                cur.expect_sym("/")?;
                let dpos = cur.pos();
                let e = cur.expr()?;
                let den = eval_scalar(&pres.params, &e)?;
                if den.is_zero() {
                    return Err(dpos.err("difference quotient denominator is zero"));
                }
                // σ is attached once the whole block has been read
                pres.delta[k] = Some(ScalarMap::DifferenceQuotient {
                    sigma: Box::new(ScalarMap::Identity),
                    denom: den,
                });
            }
            _ => return Err(pos.err(format!("expected gld, rel, sigma or delta, found `{}`", kw))),
        }
        cur.expect_sym(";")?;
    }
    for (k, images) in sigma_images.into_iter().enumerate() {
        if !images.is_empty() {
            pres.sigma[k] = ScalarMap::substitution(images);
        }
        if let Some(ScalarMap::DifferenceQuotient { sigma, .. }) = &mut pres.delta[k] {
            **sigma = pres.sigma[k].clone();
        }
    }
    Ok(pres)
}

fn parse_matrix(cur: &mut Cursor, ring: &Ring) -> Result<Mat> {
    let pos = cur.pos();
    cur.expect_sym("[")?;
    let mut rows = Vec::new();
    loop {
        cur.expect_sym("[")?;
        let mut row = Vec::new();
        loop {
            let e = cur.expr()?;
            row.push(eval_poly(ring, &e)?);
            if !cur.eat_sym(",") {
                break;
            }
        }
        cur.expect_sym("]")?;
        rows.push(row);
        if !cur.eat_sym(",") {
            break;
        }
    }
    cur.expect_sym("]")?;
    Mat::from_rows(rows).map_err(|e| pos.err(e.to_string()))
}

fn int(n: &BigInt) -> Scalar {
    Scalar::from_rational(BigRational::from_integer(n.clone()))
}

fn eval_scalar(params: &[String], e: &Expr) -> Result<Scalar> {
    Ok(match e {
        Expr::Num(n) => int(n),
        Expr::Name(s, pos) => match params.iter().position(|p| p == s) {
            Some(k) => Scalar::param(k),
            None => return Err(pos.err(format!("`{}` is not a parameter", s))),
        },
        Expr::Neg(a) => eval_scalar(params, a)?.neg(),
        Expr::Add(a, b) => eval_scalar(params, a)?.add(&eval_scalar(params, b)?),
        Expr::Sub(a, b) => eval_scalar(params, a)?.sub(&eval_scalar(params, b)?),
        Expr::Mul(a, b) => eval_scalar(params, a)?.mul(&eval_scalar(params, b)?),
        Expr::Div(a, b, pos) => eval_scalar(params, a)?
            .div(&eval_scalar(params, b)?)
            .map_err(|_| pos.err("division by zero"))?,
        Expr::Pow(a, k, pos) => eval_scalar(params, a)?
            .pow(*k)
            .map_err(|_| pos.err("zero to a negative power"))?,
    })
}

fn eval_poly(ring: &Ring, e: &Expr) -> Result<Poly> {
    let pres = ring.presentation();
    Ok(match e {
        Expr::Num(n) => ring.constant(int(n)),
        Expr::Name(s, pos) => {
            if let Some(k) = pres.var_index(s) {
                ring.var(k)
            } else if let Some(k) = pres.param_index(s) {
                ring.constant(Scalar::param(k))
            } else {
                return Err(pos.err(format!("unknown name `{}`", s)));
            }
        }
        Expr::Neg(a) => eval_poly(ring, a)?.neg(),
        Expr::Add(a, b) => eval_poly(ring, a)?.add(&eval_poly(ring, b)?),
        Expr::Sub(a, b) => eval_poly(ring, a)?.sub(&eval_poly(ring, b)?),
        Expr::Mul(a, b) => ring.mul(&eval_poly(ring, a)?, &eval_poly(ring, b)?),
        Expr::Div(a, b, pos) => {
            let d = eval_poly(ring, b)?;
            if !d.is_constant() || d.is_zero() {
                return Err(pos.err("can only divide by a nonzero scalar"));
            }
            let inv = d.constant_term().inv()?;
            ring.mul_scalar_right(&eval_poly(ring, a)?, &inv)
        }
        Expr::Pow(a, k, pos) => {
            let base = eval_poly(ring, a)?;
            if *k >= 0 {
                ring.pow(&base, *k as u32)
            } else if base.is_constant() && !base.is_zero() {
                ring.constant(base.constant_term().pow(*k)?)
            } else {
                return Err(pos.err("negative powers only apply to scalars"));
            }
        }
    })
}

/// A word of the free algebra on scalars and variables: a leading scalar
/// followed by atoms.
#[derive(Clone, Debug)]
enum Atom {
    S(Scalar),
    V(usize),
}

type FreePoly = Vec<Vec<Atom>>;

fn free_mul(a: &FreePoly, b: &FreePoly) -> FreePoly {
    let mut out = Vec::new();
    for x in a {
        for y in b {
            let mut w = x.clone();
            for atom in y {
                let has_vars = w.iter().any(|a| matches!(a, Atom::V(_)));
                match atom {
                    // scalars commute with scalars, so anything ahead of the
                    // first variable folds into the leading coefficient
                    Atom::S(t) if !has_vars => match &mut w[0] {
                        Atom::S(s) => *s = s.mul(t),
                        Atom::V(_) => unreachable!("words start with a scalar"),
                    },
                    Atom::S(t) if t.is_one() => {}
                    Atom::S(t) => match w.last_mut() {
                        Some(Atom::S(s)) => *s = s.mul(t),
                        _ => w.push(atom.clone()),
                    },
                    Atom::V(_) => w.push(atom.clone()),
                }
            }
            out.push(w);
        }
    }
    out
}

fn free_expand(pres: &Presentation, e: &Expr) -> Result<FreePoly> {
    let scalar = |s: Scalar| vec![vec![Atom::S(s)]];
    Ok(match e {
        Expr::Num(n) => scalar(int(n)),
        Expr::Name(s, pos) => {
            if let Some(k) = pres.var_index(s) {
                vec![vec![Atom::S(Scalar::one()), Atom::V(k)]]
            } else if let Some(k) = pres.param_index(s) {
                scalar(Scalar::param(k))
            } else {
                return Err(pos.err(format!("unknown name `{}`", s)));
            }
        }
        Expr::Neg(a) => free_mul(&scalar(Scalar::from_int(-1)), &free_expand(pres, a)?),
        Expr::Add(a, b) => {
            let mut x = free_expand(pres, a)?;
            x.extend(free_expand(pres, b)?);
            x
        }
        Expr::Sub(a, b) => {
            let mut x = free_expand(pres, a)?;
            x.extend(free_mul(&scalar(Scalar::from_int(-1)), &free_expand(pres, b)?));
            x
        }
        Expr::Mul(a, b) => free_mul(&free_expand(pres, a)?, &free_expand(pres, b)?),
        Expr::Div(a, b, pos) => {
            let d = eval_scalar(&pres.params, b).map_err(|_| pos.err("can only divide by a scalar"))?;
            let inv = d.inv().map_err(|_| pos.err("division by zero"))?;
            free_mul(&free_expand(pres, a)?, &scalar(inv))
        }
        Expr::Pow(a, k, pos) => {
            if *k < 0 {
                let s = eval_scalar(&pres.params, a).map_err(|_| pos.err("negative powers only apply to scalars"))?;
                scalar(s.pow(*k).map_err(|_| pos.err("zero to a negative power"))?)
            } else {
                let base = free_expand(pres, a)?;
                let mut acc = scalar(Scalar::one());
                for _ in 0..*k {
                    acc = free_mul(&acc, &base);
                }
                acc
            }
        }
    })
}

/// Reads `c, a, d` off the right-hand side of `x_j x_i = ...`.
fn relation_data(pres: &Presentation, j: usize, i: usize, rhs: &Expr) -> Result<Commutation> {
    let n = pres.n();
    let mut comm = Commutation {
        c: Scalar::zero(),
        a: vec![Scalar::zero(); n],
        d: Scalar::zero(),
    };
    for word in free_expand(pres, rhs)? {
        let mut coeff = Scalar::one();
        let mut vars = Vec::new();
        for atom in &word {
            match atom {
                Atom::S(s) if vars.is_empty() => coeff = coeff.mul(s),
                Atom::S(s) if s.is_zero() => {}
                Atom::S(_) => {
                    return Err(Error::Shape("coefficients must be written to the left of variables".into()));
                }
                Atom::V(v) => vars.push(*v),
            }
        }
        match vars.as_slice() {
            [] => comm.d = comm.d.add(&coeff),
            [k] => comm.a[*k] = comm.a[*k].add(&coeff),
            [a, b] if *a == i && *b == j => comm.c = comm.c.add(&coeff),
            _ => {
                let w: Vec<&str> = vars.iter().map(|v| pres.vars[*v].as_str()).collect();
                return Err(Error::Shape(format!(
                    "term {} is not allowed in {}*{}; expected c*{}*{} + linear terms + constant",
                    w.join("*"),
                    pres.vars[j],
                    pres.vars[i],
                    pres.vars[i],
                    pres.vars[j]
                )));
            }
        }
    }
    Ok(comm)
}

/// Source text of a ring declaration.
pub fn print_ring(p: &Presentation) -> String {
    let mut out = format!("ring {} params ({}) {{\n", p.name, p.params.join(" "));
    out.push_str(&format!("  vars {};\n", p.vars.join(" ")));
    match p.gld {
        Some(Gld::Exact(d)) => out.push_str(&format!("  gld {};\n", d)),
        Some(Gld::AtMost(d)) => out.push_str(&format!("  gld <= {};\n", d)),
        None => {}
    }
    let n = p.n();
    for j in 0..n {
        for i in 0..j {
            let c = p.comm(j, i);
            if *c == Commutation::commuting(n) {
                continue;
            }
            // x_i x_j is already standard, so this is exactly c·x_i x_j + ...
            let rhs = rhs_poly(p, c, i, j);
            out.push_str(&format!(
                "  rel {}*{} = {};\n",
                p.vars[j],
                p.vars[i],
                format_poly(p, &rhs)
            ));
        }
    }
    for (k, s) in p.sigma.iter().enumerate() {
        if let ScalarMap::Substitution { images, .. } = s {
            for (pi, img) in images {
                out.push_str(&format!(
                    "  sigma {}: {} -> {};\n",
                    p.vars[k],
                    p.params[*pi],
                    img.to_string_with(&p.params)
                ));
            }
        }
    }
    for (k, d) in p.delta.iter().enumerate() {
        if let Some(ScalarMap::DifferenceQuotient { denom, .. }) = d {
            out.push_str(&format!(
                "  delta {}: (sigma - id)/({});\n",
                p.vars[k],
                denom.to_string_with(&p.params)
            ));
        }
    }
    out.push_str("}\n");
    out
}

fn rhs_poly(p: &Presentation, c: &Commutation, i: usize, j: usize) -> Poly {
    use crate::polyarith::Mono;
    let n = p.n();
    let mut f = Poly::term(Mono::var(n, i).mul(&Mono::var(n, j)), c.c.clone());
    for (k, a) in c.a.iter().enumerate() {
        f.add_term(Mono::var(n, k), a.clone());
    }
    f.add_term(Mono::one(n), c.d.clone());
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    const DISPIN: &str = "
ring dispin params () {
  vars x1 x2 x3;
  rel x2*x1 = x1*x2 - x1;
  rel x3*x1 = -x1*x3 + x2;
  rel x3*x2 = x2*x3 - x3;
}";

    #[test]
    fn dispin_relations_parse() {
        let doc = Document::parse(DISPIN).unwrap();
        let p = doc.rings()[0].presentation();
        let n = 3;
        let mut c21 = Commutation::commuting(n);
        c21.a[0] = Scalar::from_int(-1);
        let mut c31 = Commutation::scaling(n, Scalar::from_int(-1));
        c31.a[1] = Scalar::one();
        let mut c32 = Commutation::commuting(n);
        c32.a[2] = Scalar::from_int(-1);
        assert_eq!(p.comm(1, 0), &c21);
        assert_eq!(p.comm(2, 0), &c31);
        assert_eq!(p.comm(2, 1), &c32);
        let mut cat = catalog::preset("dispin").unwrap();
        cat.gld = None;
        assert_eq!(p, &cat);
    }

    #[test]
    fn qweyl_relation() {
        let doc = Document::parse("ring w params (q) { vars x1 x2; rel x2*x1 = q*x1*x2 + 1; }").unwrap();
        let p = doc.rings()[0].presentation();
        let c = p.comm(1, 0);
        assert_eq!(c.c, Scalar::param(0));
        assert_eq!(c.d, Scalar::one());
        assert!(c.a.iter().all(Scalar::is_zero));
    }

    #[test]
    fn bad_shapes_are_rejected() {
        let cases = [
            "rel x2*x1 = x1*x2 + x1*x3;",
            "rel x2*x1 = x2*x1;",
            "rel x2*x1 = x1*x2*2;",
            "rel x2*x1 = x1^2;",
        ];
        for rel in cases {
            let src = format!("ring r params () {{ vars x1 x2 x3; {} }}", rel);
            match Document::parse(&src) {
                Err(Error::Parse { msg, .. }) => assert!(msg.contains("relation shape"), "{}", msg),
                other => panic!("{} accepted: {:?}", rel, other.map(|_| ())),
            }
        }
        let e = Document::parse("ring r params () { vars x1 x2; rel x1*x2 = x1*x2; }").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn errors_carry_positions() {
        let e = Document::parse("ring r params () {\n  vars x y;\n  rel y*x = x*y +;\n}").unwrap_err();
        match e {
            Error::Parse { line, col, .. } => assert_eq!((line, col), (3, 18)),
            e => panic!("{:?}", e),
        }
        let e = Document::parse("matrix m over nowhere = [[1]];").unwrap_err();
        assert!(e.to_string().contains("unknown ring"));
    }

    #[test]
    fn ore_ring_with_sigma_and_delta() {
        let src = "ring o params (q t a) { vars x; sigma x: t -> q*t; delta x: (sigma - id)/(t*(q - 1)); }";
        let doc = Document::parse(src).unwrap();
        let ring = &doc.rings()[0];
        let f = parse_poly(ring, "x*t").unwrap();
        let g = parse_poly(ring, "q*t*x + 1").unwrap();
        assert_eq!(f, g);
        let back = Document::parse(&doc.to_text()).unwrap();
        assert_eq!(back, doc);
    }

    #[test]
    fn matrices_and_complexes_round_trip() {
        let src = format!(
            "{}\nmatrix a over dispin = [[-x3, x2, x1]];\nmatrix b over dispin = [[1 + x2, -x1, 0], [x3, -1, x1], [0, x3, 1 - x2]];\nmatrix c over dispin = [[x1], [x2], [x3]];\ncomplex res over dispin side left = (a, b, c);\n",
            DISPIN
        );
        let doc = Document::parse(&src).unwrap();
        let text = doc.to_text();
        let back = Document::parse(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_text(), text);
        assert_eq!(doc.complex("res").unwrap().len(), 3);
        let bad = format!("{}\nmatrix a over dispin = [[x1, x2]];\ncomplex c over dispin side left = (a, a);", DISPIN);
        assert!(Document::parse(&bad).is_err());
    }
}
