//! Sparse exact linear algebra over `K`: incremental row echelon forms,
//! ranks and nullspaces.

use std::collections::BTreeMap;

use crate::scalars::Scalar;

pub type SparseVec = BTreeMap<usize, Scalar>;

/// `v -= k·w`, dropping cancelled entries.
fn sub_scaled(v: &mut SparseVec, k: &Scalar, w: &SparseVec) {
    for (c, x) in w {
        let t = k.mul(x);
        match v.get_mut(c) {
            Some(y) => {
                *y = y.sub(&t);
                if y.is_zero() {
                    v.remove(c);
                }
            }
            None => {
                v.insert(*c, t.neg());
            }
        }
    }
}

/// Rows in echelon form with unit pivots, grown one vector at a time.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<SparseVec>,
    pivots: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = &usize> {
        self.pivots.keys()
    }

    /// Reduces `v` against the pivots, left to right.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut from = 0usize;
        loop {
            let next = v.range(from..).map(|(c, _)| *c).find(|c| self.pivots.contains_key(c));
            let Some(c) = next else { return v };
            let k = v[&c].clone();
            sub_scaled(&mut v, &k, &self.rows[self.pivots[&c]]);
            from = c + 1;
        }
    }

    /// Adds `v` to the span; returns whether it was independent.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut v = self.reduce(v);
        let Some((&c, lead)) = v.iter().next() else { return false };
        let inv = lead.inv().expect("nonzero pivot");
        for x in v.values_mut() {
            *x = x.mul(&inv);
        }
        self.pivots.insert(c, self.rows.len());
        self.rows.push(v);
        true
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Reduced row echelon form: each pivot column is zero outside its row.
    pub fn into_reduced(mut self) -> Vec<(usize, SparseVec)> {
        let order: Vec<(usize, usize)> = self.pivots.iter().rev().map(|(c, r)| (*c, *r)).collect();
        for (k, &(c, r)) in order.iter().enumerate() {
            let row = self.rows[r].clone();
            for &(_, r2) in &order[k + 1..] {
                if let Some(x) = self.rows[r2].get(&c).cloned() {
                    sub_scaled(&mut self.rows[r2], &x, &row);
                }
            }
        }
        let mut out: Vec<(usize, SparseVec)> = self.pivots.iter().map(|(c, r)| (*c, self.rows[*r].clone())).collect();
        out.sort_by_key(|(c, _)| *c);
        out
    }
}

pub fn rank(vectors: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Basis of `{x : Σ_c row[c]·x[c] = 0 for every row}` in `K^ncols`.
pub fn nullspace(rows: impl IntoIterator<Item = SparseVec>, ncols: usize) -> Vec<SparseVec> {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    let reduced = e.into_reduced();
    let pivot_cols: std::collections::BTreeSet<usize> = reduced.iter().map(|(c, _)| *c).collect();
    (0..ncols)
        .filter(|f| !pivot_cols.contains(f))
        .map(|f| {
            let mut x = SparseVec::new();
            x.insert(f, Scalar::one());
            for (c, row) in &reduced {
                if let Some(v) = row.get(&f) {
                    x.insert(*c, v.neg());
                }
            }
            x
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(c, x)| (c, Scalar::from_int(x))).collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![v(&[(0, 1), (1, 2)]), v(&[(0, 2), (1, 4)]), v(&[(1, 1), (2, 1)])];
        assert_eq!(rank(rows), 2);
        assert_eq!(rank(Vec::<SparseVec>::new()), 0);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let q = Scalar::param(0);
        let rows = vec![
            [(0, Scalar::one()), (1, q.clone()), (3, Scalar::from_int(-1))].into_iter().collect::<SparseVec>(),
            [(1, Scalar::one()), (2, q.clone())].into_iter().collect(),
        ];
        let ns = nullspace(rows.clone(), 4);
        assert_eq!(ns.len(), 2);
        for x in &ns {
            for r in &rows {
                let dot = r
                    .iter()
                    .fold(Scalar::zero(), |acc, (c, a)| acc.add(&a.mul(x.get(c).unwrap_or(&Scalar::zero()))));
                assert!(dot.is_zero());
            }
        }
        assert_eq!(rank(ns), 2);
    }

    #[test]
    fn membership_in_span() {
        let mut e = Echelon::new();
        assert!(e.insert(v(&[(0, 1), (2, 1)])));
        assert!(e.insert(v(&[(1, 3)])));
        assert!(!e.insert(v(&[(0, 2), (1, 6), (2, 2)])));
        assert!(e.contains(v(&[(1, 1)])));
        assert!(!e.contains(v(&[(2, 1)])));
    }
}
