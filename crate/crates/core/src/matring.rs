//! Matrices over `A` and chain complexes with an explicit side convention.
//!
//! Left modules use rows: a map `B^m → B^k` is an `m×k` matrix acting by
//! `v ↦ v·M`, so "f then g" is `M_f·M_g`. Right modules use columns: the map
//! is `k×m` acting by `v ↦ M·v`, so "f then g" is `M_g·M_f`.

use rayon::prelude::*;
use serde_json::json;

use crate::polyarith::{Poly, Ring};
use crate::report::Report;
use crate::scalars::Scalar;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            entries: vec![Poly::zero(); rows * cols],
        }
    }

    pub fn identity(ring: &Ring, s: usize) -> Self {
        let mut m = Self::zero(s, s);
        for i in 0..s {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(Error::DimensionMismatch("empty matrix".into()));
        }
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Mat {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> &[Poly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Poly>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.entries.iter().filter_map(Poly::degree).max()
    }

    pub fn add(&self, o: &Mat) -> Result<Mat> {
        self.same_shape(o)?;
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn sub(&self, o: &Mat) -> Result<Mat> {
        self.same_shape(o)?;
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a.sub(b)).collect(),
        })
    }

    fn same_shape(&self, o: &Mat) -> Result<()> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(())
    }

    /// Rows `[lo, hi)` as a new matrix.
    pub fn row_block(&self, lo: usize, hi: usize) -> Mat {
        Mat {
            rows: hi - lo,
            cols: self.cols,
            entries: self.entries[lo * self.cols..hi * self.cols].to_vec(),
        }
    }

    pub fn stack(&self, o: &Mat) -> Result<Mat> {
        if self.cols != o.cols {
            return Err(Error::DimensionMismatch("stack with different widths".into()));
        }
        let mut entries = self.entries.clone();
        entries.extend(o.entries.iter().cloned());
        Ok(Mat {
            rows: self.rows + o.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Entry `(i, j)` replaced by `f(i, j, entry)`.
    pub fn map<F: Fn(usize, usize, &Poly) -> Poly>(&self, f: F) -> Mat {
        let mut m = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = f(i, j, self.get(i, j));
                m.set(i, j, e);
            }
        }
        m
    }

    pub fn to_text(&self, ring: &Ring) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let es: Vec<String> = self.row(i).iter().map(|p| ring.fmt(p)).collect();
                format!("[{}]", es.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }
}

/// `M·N`; entries of `M` multiply from the left.
pub fn mat_mul(ring: &Ring, m: &Mat, n: &Mat) -> Result<Mat> {
    if m.cols != n.rows {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} times {}x{}",
            m.rows, m.cols, n.rows, n.cols
        )));
    }
    let entries: Vec<Poly> = (0..m.rows * n.cols)
        .into_par_iter()
        .map(|idx| {
            let (i, k) = (idx / n.cols, idx % n.cols);
            let mut acc = Poly::zero();
            for j in 0..m.cols {
                let (a, b) = (m.get(i, j), n.get(j, k));
                if !a.is_zero() && !b.is_zero() {
                    acc.add_assign_scaled(&Scalar::one(), &ring.mul(a, b));
                }
            }
            acc
        })
        .collect();
    Ok(Mat {
        rows: m.rows,
        cols: n.cols,
        entries,
    })
}

/// Row vector times matrix.
pub fn vec_mul(ring: &Ring, v: &[Poly], m: &Mat) -> Result<Vec<Poly>> {
    let row = Mat::from_rows(vec![v.to_vec()])?;
    Ok(mat_mul(ring, &row, m)?.row(0).to_vec())
}

pub fn is_idempotent(ring: &Ring, f: &Mat) -> Result<bool> {
    if !f.is_square() {
        return Err(Error::DimensionMismatch("idempotency needs a square matrix".into()));
    }
    Ok(mat_mul(ring, f, f)? == *f)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

/// A chain of free modules in arrow order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    pub side: Side,
    pub maps: Vec<Mat>,
    pub labels: Vec<String>,
}

impl Complex {
    pub fn new(side: Side, maps: Vec<Mat>, labels: Vec<String>) -> Result<Self> {
        let c = Complex { side, maps, labels };
        c.check_composable()?;
        Ok(c)
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    fn check_composable(&self) -> Result<()> {
        for k in 0..self.maps.len().saturating_sub(1) {
            let (f, g) = (&self.maps[k], &self.maps[k + 1]);
            let ok = match self.side {
                Side::Left => f.cols() == g.rows(),
                Side::Right => g.cols() == f.rows(),
            };
            if !ok {
                return Err(Error::DimensionMismatch(format!(
                    "maps {} and {} do not compose on the {} side",
                    k,
                    k + 1,
                    self.side.as_str()
                )));
            }
        }
        Ok(())
    }

    /// The matrix of "map k then map k+1".
    pub fn composite(&self, ring: &Ring, k: usize) -> Result<Mat> {
        let (f, g) = (&self.maps[k], &self.maps[k + 1]);
        match self.side {
            Side::Left => mat_mul(ring, f, g),
            Side::Right => mat_mul(ring, g, f),
        }
    }

    /// `Hom(-, B)`: same matrices, reversed arrows, other side.
    pub fn dualize(&self) -> Complex {
        Complex {
            side: self.side.flip(),
            maps: self.maps.iter().rev().cloned().collect(),
            labels: self
                .labels
                .iter()
                .rev()
                .map(|l| match l.strip_suffix('*') {
                    Some(base) => base.to_string(),
                    None => format!("{}*", l),
                })
                .collect(),
        }
    }

    /// Rank of the free module at position `k` (0 = source of the first map).
    pub fn rank_at(&self, k: usize) -> usize {
        let src = |m: &Mat| match self.side {
            Side::Left => m.rows(),
            Side::Right => m.cols(),
        };
        let dst = |m: &Mat| match self.side {
            Side::Left => m.cols(),
            Side::Right => m.rows(),
        };
        if k < self.maps.len() {
            src(&self.maps[k])
        } else {
            dst(&self.maps[self.maps.len() - 1])
        }
    }
}

pub fn is_complex(ring: &Ring, c: &Complex) -> Result<Report> {
    c.check_composable()?;
    let mut rep = Report::new("is-complex", Some(ring.name()));
    for k in 0..c.maps.len().saturating_sub(1) {
        let comp = c.composite(ring, k)?;
        let name = match (c.labels.get(k), c.labels.get(k + 1)) {
            (Some(a), Some(b)) => format!("{} then {}", a, b),
            _ => format!("map {} then map {}", k, k + 1),
        };
        let ev = if comp.is_zero() {
            json!("zero composite")
        } else {
            json!(comp.to_text(ring))
        };
        rep.pass_if(name, comp.is_zero(), ev);
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn identity_is_neutral_and_idempotent() {
        let ring = Ring::new(catalog::preset("dispin").unwrap());
        let m = Mat::from_rows(vec![
            vec![ring.var(0), ring.var(1)],
            vec![ring.one(), ring.var(2)],
        ])
        .unwrap();
        let i = Mat::identity(&ring, 2);
        assert_eq!(mat_mul(&ring, &m, &i).unwrap(), m);
        assert_eq!(mat_mul(&ring, &i, &m).unwrap(), m);
        assert!(is_idempotent(&ring, &i).unwrap());
        assert!(is_idempotent(&ring, &Mat::zero(2, 2)).unwrap());
        let mut d = Mat::zero(2, 2);
        d.set(0, 0, ring.one());
        assert!(is_idempotent(&ring, &d).unwrap());
        assert!(is_idempotent(&ring, &Mat::zero(2, 3)).is_err());
        assert!(mat_mul(&ring, &Mat::zero(2, 3), &Mat::zero(2, 3)).is_err());
    }

    #[test]
    fn dispin_first_row_kills_generators() {
        let ring = Ring::new(catalog::preset("dispin").unwrap());
        let row = Mat::from_rows(vec![vec![ring.one().add(&ring.var(1)), ring.var(0).neg(), Poly::zero()]]).unwrap();
        let col = Mat::from_rows(vec![vec![ring.var(0)], vec![ring.var(1)], vec![ring.var(2)]]).unwrap();
        assert!(mat_mul(&ring, &row, &col).unwrap().is_zero());
    }

    #[test]
    fn zero_chain_and_dual_involution() {
        let ring = Ring::new(catalog::preset("commutative").unwrap());
        let c = Complex::new(
            Side::Left,
            vec![Mat::zero(1, 2), Mat::zero(2, 1)],
            vec!["a".into(), "b".into()],
        )
        .unwrap();
        assert!(is_complex(&ring, &c).unwrap().passed());
        let d = c.dualize();
        assert_eq!(d.side, Side::Right);
        assert!(d.maps.iter().all(Mat::is_zero));
        assert!(is_complex(&ring, &d).unwrap().passed());
        assert_eq!(d.dualize(), c);
        assert_eq!(c.rank_at(0), 1);
        assert_eq!(c.rank_at(2), 1);
        assert_eq!(d.rank_at(1), 2);
    }

    #[test]
    fn side_mismatch_is_rejected() {
        for side in [Side::Left, Side::Right] {
            assert!(Complex::new(side, vec![Mat::zero(2, 3), Mat::zero(2, 3)], vec![]).is_err());
        }
        assert!(Complex::new(Side::Right, vec![Mat::zero(3, 1), Mat::zero(1, 3)], vec![]).is_ok());
    }
}
