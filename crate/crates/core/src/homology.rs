//! Free resolutions of the trivial module `K`, their duals, the top Ext
//! group, bounded exactness probes, the SAS verdict and centers.

use std::collections::HashMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::gbasis::{member, IdealBasis, Membership, NonMembership};
use crate::linalg::{self, Echelon, SparseVec};
use crate::matring::{is_complex, Complex, Mat, Side};
use crate::polyarith::{filtration_dim, Mono, Poly, Ring};
use crate::presentation::Augmentation;
use crate::report::{Report, Status};
use crate::scalars::Scalar;
use crate::{Error, Result};

/// Default degree bound for exactness probes.
pub const DEFAULT_PROBE_BOUND: u32 = 6;

pub const CANCELLATIVITY_HINT: &str =
    "Z∩F_D = K·1 — if this persists at all degrees, Theorem 20.2.1 applies";

/// Standard monomials of degree at most `d`, with their positions.
#[derive(Clone, Debug)]
pub struct SliceBasis {
    pub bound: u32,
    pub monos: Vec<Mono>,
    index: HashMap<Mono, usize>,
}

impl SliceBasis {
    pub fn new(n: usize, bound: u32) -> Self {
        let monos = Mono::up_to_degree(n, bound);
        let index = monos.iter().enumerate().map(|(k, m)| (m.clone(), k)).collect();
        SliceBasis { bound, monos, index }
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn position(&self, m: &Mono) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinates of a vector of polynomials in `F_bound^k`.
    fn coords(&self, v: &[Poly]) -> Result<SparseVec> {
        let mut out = SparseVec::new();
        for (comp, p) in v.iter().enumerate() {
            for (m, c) in p.terms() {
                let k = self.position(m).ok_or(Error::BoundTooSmall)?;
                out.insert(comp * self.len() + k, c.clone());
            }
        }
        Ok(out)
    }
}

fn ranks(side: Side, m: &Mat) -> (usize, usize) {
    match side {
        Side::Left => (m.rows(), m.cols()),
        Side::Right => (m.cols(), m.rows()),
    }
}

/// Images of the K-basis `{x^μ e_c : |μ| ≤ src_bound}` of the source slice.
fn image_vectors(ring: &Ring, side: Side, m: &Mat, src_bound: u32, target: &SliceBasis) -> Result<Vec<SparseVec>> {
    let (src, dst) = ranks(side, m);
    let monos = Mono::up_to_degree(ring.n(), src_bound);
    let jobs: Vec<(usize, &Mono)> = (0..src).flat_map(|c| monos.iter().map(move |mu| (c, mu))).collect();
    jobs.par_iter()
        .map(|&(c, mu)| {
            let img: Vec<Poly> = (0..dst)
                .map(|j| match side {
                    Side::Left => ring.mono_times(mu, m.get(c, j)),
                    Side::Right => ring.mul(m.get(j, c), &ring.monomial(mu.clone())),
                })
                .collect();
            target.coords(&img)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Probe {
    pub dim_ker: usize,
    pub dim_img: usize,
    pub defect: usize,
}

/// Finite-degree homology at `position` (0 = source of the first map):
/// the kernel of the outgoing map on `F_D^m` against the image of
/// `F_{D−d}^k` under the incoming map, `d` its largest entry degree.
/// A zero defect is evidence of exactness up to `D`, nothing more.
pub fn bounded_exactness_probe(ring: &Ring, c: &Complex, position: usize, bound: u32) -> Result<Probe> {
    if position > c.len() {
        return Err(Error::DimensionMismatch(format!(
            "position {} outside a complex of length {}",
            position,
            c.len()
        )));
    }
    let max_deg = c.maps.iter().filter_map(Mat::max_degree).max().unwrap_or(0);
    if bound < max_deg {
        return Err(Error::BoundTooSmall);
    }
    let m = c.rank_at(position);
    let here = SliceBasis::new(ring.n(), bound);
    let dim_ker = match c.maps.get(position) {
        None => m * here.len(),
        Some(out) => {
            let d = out.max_degree().unwrap_or(0);
            let target = SliceBasis::new(ring.n(), bound + d);
            m * here.len() - linalg::rank(image_vectors(ring, c.side, out, bound, &target)?)
        }
    };
    let dim_img = match position.checked_sub(1).map(|k| &c.maps[k]) {
        None => 0,
        Some(inc) => {
            let d = inc.max_degree().unwrap_or(0);
            linalg::rank(image_vectors(ring, c.side, inc, bound - d, &here)?)
        }
    };
    Ok(Probe {
        dim_ker,
        dim_img,
        defect: dim_ker.saturating_sub(dim_img),
    })
}

/// The `x_i` as a list of polynomials.
fn variables(ring: &Ring) -> Vec<Poly> {
    (0..ring.n()).map(|i| ring.var(i)).collect()
}

fn membership_evidence(ring: &Ring, f: &Poly, m: &Membership) -> serde_json::Value {
    match m {
        Membership::Member(cert) => json!({"element": ring.fmt(f), "certificate": cert.to_json(ring)}),
        Membership::NotMember(NonMembership::Augmentation(e)) => {
            json!({"element": ring.fmt(f), "epsilon": e.to_string_with(&ring.presentation().params)})
        }
        other => json!({"element": ring.fmt(f), "verdict": other.to_string()}),
    }
}

/// Checks that a left complex `φ_{d−1}, …, φ_0` resolves `K`: consecutive
/// composites vanish, `φ_0` lands in `ker ε` and its entries generate it,
/// and the first map is injective.
pub fn resolution_check(ring: &Ring, c: &Complex) -> Result<Report> {
    if c.side != Side::Left {
        return Err(Error::DimensionMismatch("a resolution is a left complex".into()));
    }
    let mut rep = Report::new("resolution-verify", Some(ring.name()));
    rep.extend("complex", is_complex(ring, c)?);
    let aug = ring.presentation().augmentation()?;
    rep.value("augmentation", if aug == Augmentation::Ok { "ok" } else { "collapses" });
    if let (Augmentation::Ok, Some(last)) = (aug, c.maps.last()) {
        let entries: Vec<Poly> = (0..last.rows()).flat_map(|i| last.row(i).to_vec()).filter(|p| !p.is_zero()).collect();
        let eps_zero = last.cols() == 1 && entries.iter().all(|p| p.constant_term().is_zero());
        rep.pass_if("augmentation kills the last map", eps_zero, json!(last.to_text(ring)));
        if entries.is_empty() {
            rep.pass_if("last map generates ker ε", false, json!("zero map"));
        } else {
            let mut ideal = IdealBasis::new(ring, Side::Left, entries)?;
            let bound = ideal.default_bound();
            let mut ev = Vec::new();
            let mut worst = Status::Pass;
            for x in variables(ring) {
                let m = member(ring, &x, &mut ideal, bound)?;
                let st = match &m {
                    Membership::Member(_) => Status::Pass,
                    Membership::NotMember(_) => Status::Fail,
                    Membership::NotMemberUpTo(_) => Status::Inconclusive,
                };
                if st == Status::Fail || worst == Status::Pass {
                    worst = st;
                }
                ev.push(membership_evidence(ring, &x, &m));
            }
            rep.check("last map generates ker ε", worst, json!(ev));
        }
    }
    match c.maps.first() {
        Some(first) if first.rows() == 1 => {
            let nonzero = first.row(0).iter().any(|p| !p.is_zero());
            rep.pass_if("first map injective", nonzero, json!("left multiplication by a nonzero entry in a domain"));
        }
        Some(first) => rep.check(
            "first map injective",
            Status::Inconclusive,
            json!(format!("first map has {} rows; only single-row maps are certified", first.rows())),
        ),
        None => rep.pass_if("first map injective", false, json!("empty complex")),
    }
    Ok(rep)
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExtTop {
    /// `B/I ≅ K`: every generator is in `ker ε` and every `x_k` lies in `I`.
    TrivialK,
    /// Some generator has `ε(g) ≠ 0`, so no module map `B/I → K` is onto.
    NotK { generator: usize, epsilon: Scalar },
    /// `1 ∈ I`, so `B/I = 0`.
    QuotientZero,
    Inconclusive(u32),
}

impl fmt::Display for ExtTop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtTop::TrivialK => f.write_str("trivial K"),
            ExtTop::NotK { generator, epsilon } => {
                write!(f, "not K (ε of generator {} is {})", generator + 1, epsilon)
            }
            ExtTop::QuotientZero => f.write_str("quotient is zero"),
            ExtTop::Inconclusive(d) => write!(f, "inconclusive up to degree {}", d),
        }
    }
}

/// Classifies `B/I` for the right ideal `I` generated by the entries of a
/// single-row map.
pub fn ext_top_type(ring: &Ring, top: &Mat, bound: Option<u32>) -> Result<(ExtTop, Report)> {
    if top.rows() != 1 {
        return Err(Error::DimensionMismatch("the top dual map must have one row".into()));
    }
    let mut rep = Report::new("ext-top", Some(ring.name()));
    let gens: Vec<Poly> = top.row(0).iter().filter(|p| !p.is_zero()).cloned().collect();
    if gens.is_empty() {
        rep.check("ext-top", Status::Inconclusive, json!("zero map"));
        return Ok((ExtTop::Inconclusive(0), rep));
    }
    let mut ideal = IdealBasis::new(ring, Side::Right, gens.clone())?;
    let bound = bound.unwrap_or_else(|| ideal.default_bound());
    let one = member(ring, &ring.one(), &mut ideal, bound)?;
    rep.value("one in ideal", membership_evidence(ring, &ring.one(), &one));
    if one.is_member() {
        rep.pass_if("ext-top", false, json!("1 lies in the image"));
        return Ok((ExtTop::QuotientZero, rep));
    }
    let eps: Vec<Scalar> = gens.iter().map(Poly::constant_term).collect();
    rep.value(
        "epsilon of generators",
        json!(eps.iter().map(|e| e.to_string_with(&ring.presentation().params)).collect::<Vec<_>>()),
    );
    if let Some(k) = eps.iter().position(|e| !e.is_zero()) {
        let verdict = ExtTop::NotK {
            generator: k,
            epsilon: eps[k].clone(),
        };
        rep.pass_if("ext-top", false, json!(verdict.to_string()));
        return Ok((verdict, rep));
    }
    let mut ev = Vec::new();
    let mut all = true;
    for x in variables(ring) {
        let m = member(ring, &x, &mut ideal, bound)?;
        all &= m.is_member();
        ev.push(membership_evidence(ring, &x, &m));
    }
    rep.value("generators in image", json!(ev));
    if all {
        rep.pass_if("ext-top", true, json!("B/I = B/B_{≥1} ≅ K"));
        Ok((ExtTop::TrivialK, rep))
    } else {
        rep.check("ext-top", Status::Inconclusive, json!(format!("bound {}", bound)));
        Ok((ExtTop::Inconclusive(bound), rep))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum SasVerdict {
    /// `B_{≥1} = B`, so the Ext conditions hold vacuously.
    Trivial,
    Verified,
    NotSas(String),
    Inconclusive(u32),
}

impl SasVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            SasVerdict::Trivial => "SAS_Trivial",
            SasVerdict::Verified => "SAS_Verified",
            SasVerdict::NotSas(_) => "NotSAS",
            SasVerdict::Inconclusive(_) => "Inconclusive",
        }
    }

    pub fn status(&self) -> Status {
        match self {
            SasVerdict::Trivial | SasVerdict::Verified => Status::Pass,
            SasVerdict::NotSas(_) => Status::Fail,
            SasVerdict::Inconclusive(_) => Status::Inconclusive,
        }
    }
}

/// SAS verdict from a declared resolution of `K` of length `gld`.
pub fn sas_check(ring: &Ring, c: Option<&Complex>, gld: Option<u32>, probe_bound: u32) -> Result<(SasVerdict, Report)> {
    let mut rep = Report::new("sas-check", Some(ring.name()));
    let aug = ring.presentation().augmentation()?;
    if aug == Augmentation::Collapses {
        let why = "some relation constant d_ij is nonzero, so 1 ∈ B_{≥1} and B/B_{≥1} = 0";
        rep.pass_if("augmentation collapses", true, json!(why));
        rep.value("verdict", SasVerdict::Trivial.label());
        return Ok((SasVerdict::Trivial, rep));
    }
    let c = c.ok_or_else(|| Error::Usage("a resolution is needed when the augmentation exists".into()))?;
    if let Some(d) = gld {
        if c.len() != d as usize {
            return Err(Error::DimensionMismatch(format!(
                "resolution has {} maps but the global dimension is {}",
                c.len(),
                d
            )));
        }
    }
    rep.extend("resolution", resolution_check(ring, c)?);
    let dual = c.dualize();
    rep.extend("dual", is_complex(ring, &dual)?);
    let probes: Vec<(usize, Result<Probe>)> = (1..dual.len())
        .into_par_iter()
        .map(|pos| (pos, bounded_exactness_probe(ring, &dual, pos, probe_bound)))
        .collect();
    for (pos, p) in probes {
        let p = p?;
        let st = if p.defect == 0 { Status::Pass } else { Status::Inconclusive };
        rep.check(
            format!("dual exactness at position {} up to degree {}", pos, probe_bound),
            st,
            json!({"dim_ker": p.dim_ker, "dim_img": p.dim_img, "defect": p.defect}),
        );
    }
    match dual.maps.first() {
        Some(first) if first.cols() == 1 => {
            let nonzero = (0..first.rows()).any(|i| !first.get(i, 0).is_zero());
            rep.pass_if("first dual map injective", nonzero, json!("Hom(K, B) = 0 in a domain"));
        }
        _ => rep.check("first dual map injective", Status::Inconclusive, json!("not a single column")),
    }
    let top = dual.maps.last().ok_or_else(|| Error::DimensionMismatch("empty resolution".into()))?;
    let (ext, ext_rep) = ext_top_type(ring, top, None)?;
    rep.extend("ext-top", ext_rep);
    rep.value("ext_top", ext.to_string());
    let verdict = match &ext {
        ExtTop::NotK { .. } | ExtTop::QuotientZero => SasVerdict::NotSas(ext.to_string()),
        ExtTop::TrivialK if rep.status() == Status::Pass => SasVerdict::Verified,
        ExtTop::TrivialK => {
            if !rep.failures().is_empty() {
                SasVerdict::NotSas("resolution checks failed".into())
            } else {
                SasVerdict::Inconclusive(probe_bound)
            }
        }
        ExtTop::Inconclusive(d) => SasVerdict::Inconclusive(*d),
    };
    rep.value("verdict", verdict.label());
    Ok((verdict, rep))
}

#[derive(Clone, Debug)]
pub struct Center {
    pub bound: u32,
    pub basis: Vec<Poly>,
}

impl Center {
    pub fn is_trivial(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }
}

/// A K-basis of `Z(A) ∩ F_D`, from the linear system `[x_i, c] = 0`.
pub fn center_up_to_degree(ring: &Ring, bound: u32) -> Result<(Center, Report)> {
    if !ring.central() {
        return Err(Error::Usage("center computation needs a central coefficient field".into()));
    }
    let n = ring.n();
    let slice = SliceBasis::new(n, bound);
    let target = SliceBasis::new(n, bound + 1);
    // column for each candidate monomial: coordinates of [x_i, m] for all i
    let columns: Vec<SparseVec> = slice
        .monos
        .par_iter()
        .map(|m| {
            let mut col = SparseVec::new();
            let mono = ring.monomial(m.clone());
            for i in 0..n {
                let x = ring.var(i);
                let comm = ring.mul(&x, &mono).sub(&ring.mul(&mono, &x));
                for (k, c) in target.coords(&[comm])? {
                    col.insert(i * target.len() + k, c);
                }
            }
            Ok(col)
        })
        .collect::<Result<_>>()?;
    let mut rows: std::collections::BTreeMap<usize, SparseVec> = Default::default();
    for (j, col) in columns.iter().enumerate() {
        for (r, c) in col {
            rows.entry(*r).or_default().insert(j, c.clone());
        }
    }
    let sols = linalg::nullspace(rows.into_values(), slice.len());
    let basis: Vec<Poly> = sols
        .iter()
        .map(|x| Poly::from_terms(x.iter().map(|(j, c)| (slice.monos[*j].clone(), c.clone()))))
        .collect();
    let center = Center { bound, basis };

    let mut rep = Report::new("center", Some(ring.name()));
    rep.value("degree_bound", bound);
    rep.value("dimension", center.basis.len());
    rep.value("basis", json!(center.basis.iter().map(|p| ring.fmt(p)).collect::<Vec<_>>()));
    let with_gens = center
        .basis
        .iter()
        .all(|z| variables(ring).iter().all(|x| ring.mul(x, z) == ring.mul(z, x)));
    rep.pass_if("basis commutes with generators", with_gens, json!(null));
    let mut rng = ChaCha8Rng::seed_from_u64(0xce47e5);
    let probes: Vec<Poly> = (0..10).map(|_| random_element(ring, &mut rng, 2)).collect();
    let with_random = center
        .basis
        .iter()
        .all(|z| probes.iter().all(|g| ring.mul(g, z) == ring.mul(z, g)));
    rep.pass_if("basis commutes with 10 random elements of degree ≤ 2", with_random, json!(null));
    rep.pass_if(
        "contains 1",
        center_contains_one(&center, &slice),
        json!(null),
    );
    if center.is_trivial() {
        rep.value("hint", CANCELLATIVITY_HINT);
    }
    Ok((center, rep))
}

fn center_contains_one(c: &Center, slice: &SliceBasis) -> bool {
    let mut e = Echelon::new();
    let coords = |p: &Poly| slice.coords(std::slice::from_ref(p)).expect("within slice");
    for p in &c.basis {
        e.insert(coords(p));
    }
    let one = Poly::term(slice.monos[0].clone(), Scalar::one());
    e.contains(coords(&one))
}

/// A random element with small integer coefficients and degree ≤ `d`.
pub fn random_element<R: Rng>(ring: &Ring, rng: &mut R, d: u32) -> Poly {
    let mut out = Poly::zero();
    for m in Mono::up_to_degree(ring.n(), d) {
        if rng.gen_bool(0.5) {
            out.add_term(m, Scalar::from_int(rng.gen_range(-3..=3)));
        }
    }
    out
}

/// `dim F_D`, the size of a slice.
pub fn slice_dim(n: usize, bound: u32) -> usize {
    filtration_dim(n, bound) as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::dsl::parse_poly;

    fn setup(name: &str) -> (std::sync::Arc<Ring>, Option<Complex>) {
        let doc = catalog::document(name).unwrap();
        (doc.rings()[0].clone(), doc.complex("resolution"))
    }

    fn mat(ring: &Ring, rows: &[&[&str]]) -> Mat {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|s| parse_poly(ring, s).unwrap()).collect()).collect()).unwrap()
    }

    #[test]
    fn slice_sizes() {
        assert_eq!(SliceBasis::new(3, 2).len(), 10);
        assert_eq!(SliceBasis::new(2, 3).len(), slice_dim(2, 3));
    }

    #[test]
    fn dispin_resolution_and_probe() {
        let (ring, c) = setup("dispin");
        let c = c.unwrap();
        let rep = resolution_check(&ring, &c).unwrap();
        assert!(rep.passed(), "{}", rep.render_text());
        let p = bounded_exactness_probe(&ring, &c, 1, 4).unwrap();
        assert_eq!(p.defect, 0, "{:?}", p);
        let p = bounded_exactness_probe(&ring, &c.dualize(), 2, 4).unwrap();
        assert_eq!(p.defect, 0, "{:?}", p);
    }

    #[test]
    fn broken_resolution_fails() {
        let (ring, c) = setup("dispin");
        let mut c = c.unwrap();
        // (1 + x2) -> x2 in the middle map
        let one = ring.one();
        let m = c.maps[1].map(|_, _, p| if p.constant_term().is_one() { p.sub(&one) } else { p.clone() });
        assert_ne!(m, c.maps[1]);
        c.maps[1] = m;
        assert!(!resolution_check(&ring, &c).unwrap().passed());
    }

    #[test]
    fn zero_complex_probe() {
        let (ring, _) = setup("commutative");
        let c = Complex::new(Side::Left, vec![Mat::zero(1, 1), Mat::zero(1, 1)], vec![]).unwrap();
        let p = bounded_exactness_probe(&ring, &c, 1, 2).unwrap();
        assert_eq!(p, Probe { dim_ker: 10, dim_img: 0, defect: 10 });
    }

    #[test]
    fn koszul_is_exact() {
        let (ring, _) = setup("commutative");
        let right = Complex::new(
            Side::Right,
            vec![mat(&ring, &[&["x2"], &["-x1"]]), mat(&ring, &[&["x1", "x2"]])],
            vec![],
        )
        .unwrap();
        let p = bounded_exactness_probe(&ring, &right, 1, 4).unwrap();
        assert_eq!(p.defect, 0, "{:?}", p);
        assert!(p.dim_ker > 0);
        let left = Complex::new(
            Side::Left,
            vec![mat(&ring, &[&["x1", "x2"]]), mat(&ring, &[&["x2"], &["-x1"]])],
            vec![],
        )
        .unwrap();
        assert_eq!(bounded_exactness_probe(&ring, &left, 1, 4).unwrap().defect, 0);
        assert_eq!(bounded_exactness_probe(&ring, &left, 1, 0).unwrap_err(), Error::BoundTooSmall);
    }

    #[test]
    fn ext_top_rules() {
        let (ring, _) = setup("dispin");
        let (e, _) = ext_top_type(&ring, &mat(&ring, &[&["-x3", "x2", "x1"]]), None).unwrap();
        assert_eq!(e, ExtTop::TrivialK);
        let (e, _) = ext_top_type(&ring, &mat(&ring, &[&["1"]]), None).unwrap();
        assert_eq!(e, ExtTop::QuotientZero);
        let (ring, _) = setup("commutative");
        let (e, _) = ext_top_type(&ring, &mat(&ring, &[&["x1", "x2 - 1"]]), None).unwrap();
        assert!(matches!(e, ExtTop::NotK { generator: 1, .. }), "{:?}", e);
    }

    #[test]
    fn dispin_is_sas_and_weyl_trivially() {
        let (ring, c) = setup("dispin");
        let (v, rep) = sas_check(&ring, c.as_ref(), Some(3), 3).unwrap();
        assert_eq!(v, SasVerdict::Verified, "{}", rep.render_text());
        let (ring, c) = setup("weyl");
        assert_eq!(sas_check(&ring, c.as_ref(), None, 3).unwrap().0, SasVerdict::Trivial);
    }

    #[test]
    fn centers() {
        let (ring, _) = setup("commutative");
        let (z, _) = center_up_to_degree(&ring, 2).unwrap();
        assert_eq!(z.basis.len(), 10);
        let (ring, _) = setup("dispin");
        let (z, rep) = center_up_to_degree(&ring, 1).unwrap();
        assert!(z.is_trivial(), "{:?}", z.basis);
        assert!(rep.passed());
        assert_eq!(rep.values["hint"], json!(CANCELLATIVITY_HINT));
    }
}
