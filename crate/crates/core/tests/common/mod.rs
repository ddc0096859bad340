//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use skewpbw::{Mono, Poly, Presentation, Ring, Scalar};

#[derive(Clone, Debug)]
pub enum Atom {
    Var(usize),
    Coef(Scalar),
}

/// One rewriting step on the leftmost redex, or `None` when the word is a
/// scalar followed by variables in ascending order.
fn step(p: &Presentation, word: &[Atom]) -> Option<Vec<(Scalar, Vec<Atom>)>> {
    for k in 0..word.len().saturating_sub(1) {
        let (pre, post) = (&word[..k], &word[k + 2..]);
        let splice = |mid: Vec<Atom>| [pre.to_vec(), mid, post.to_vec()].concat();
        match (&word[k], &word[k + 1]) {
            (Atom::Coef(a), Atom::Coef(b)) => return Some(vec![(Scalar::one(), splice(vec![Atom::Coef(a.mul(b))]))]),
            (Atom::Var(i), Atom::Coef(r)) => {
                let s = p.sigma[*i].apply(r).unwrap();
                let mut out = vec![(Scalar::one(), splice(vec![Atom::Coef(s), Atom::Var(*i)]))];
                if let Some(d) = &p.delta[*i] {
                    out.push((Scalar::one(), splice(vec![Atom::Coef(d.apply(r).unwrap())])));
                }
                return Some(out);
            }
            (Atom::Var(j), Atom::Var(i)) if j > i => {
                let c = p.comm(*j, *i);
                let mut out = vec![(c.c.clone(), splice(vec![Atom::Var(*i), Atom::Var(*j)]))];
                for (m, a) in c.a.iter().enumerate() {
                    if !a.is_zero() {
                        out.push((a.clone(), splice(vec![Atom::Var(m)])));
                    }
                }
                if !c.d.is_zero() {
                    out.push((c.d.clone(), splice(vec![])));
                }
                return Some(out);
            }
            _ => {}
        }
    }
    None
}

/// Scalars float left only by the rules above, so a normal word is
/// `[Coef]? Var*` with ascending variables.
pub fn oracle(p: &Presentation, word: Vec<Atom>) -> Poly {
    let mut todo = vec![(Scalar::one(), word)];
    let mut out = Poly::zero();
    while let Some((k, w)) = todo.pop() {
        if k.is_zero() {
            continue;
        }
        match step(p, &w) {
            Some(next) => todo.extend(next.into_iter().map(|(c, w)| (k.mul(&c), w))),
            None => {
                let mut e = vec![0u32; p.n()];
                let mut coef = k;
                for a in w {
                    match a {
                        Atom::Coef(r) => coef = coef.mul(&r),
                        Atom::Var(i) => e[i] += 1,
                    }
                }
                out.add_term(Mono::from_exps(&e), coef);
            }
        }
    }
    out
}

pub fn engine(ring: &Ring, word: &[Atom]) -> Poly {
    word.iter().fold(ring.one(), |acc, a| {
        let f = match a {
            Atom::Var(i) => ring.var(*i),
            Atom::Coef(r) => ring.constant(r.clone()),
        };
        ring.mul(&acc, &f)
    })
}

/// `f·g` by rewriting the concatenated words of every term pair.
pub fn oracle_mul(p: &Presentation, f: &Poly, g: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (ma, a) in f.terms() {
        for (mb, b) in g.terms() {
            let mut w = vec![Atom::Coef(a.clone())];
            w.extend(word_of(ma));
            w.push(Atom::Coef(b.clone()));
            w.extend(word_of(mb));
            out = out.add(&oracle(p, w));
        }
    }
    out
}

fn word_of(m: &Mono) -> Vec<Atom> {
    m.exps()
        .iter()
        .enumerate()
        .flat_map(|(i, &e)| std::iter::repeat_n(Atom::Var(i), e as usize))
        .collect()
}

/// Rank of a dense matrix over `K` by plain Gaussian elimination.
pub fn dense_rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
        rows.swap(rank, p);
        let inv = rows[rank][c].inv().unwrap();
        let pivot: Vec<Scalar> = rows[rank].iter().map(|x| x.mul(&inv)).collect();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let k = rows[r][c].clone();
                for (x, y) in rows[r].iter_mut().zip(&pivot) {
                    *x = x.sub(&k.mul(y));
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}
