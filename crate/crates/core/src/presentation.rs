//! Commutation data of a skew PBW extension and its consistency checks.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::polyarith::{Poly, Ring};
use crate::report::{Report, Status};
use crate::scalars::{random_scalar, Scalar, ScalarMap};
use crate::{Error, Result};

/// `x_j x_i = c·x_i x_j + Σ_k a[k]·x_k + d` for a pair `j > i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Commutation {
    pub c: Scalar,
    pub a: Vec<Scalar>,
    pub d: Scalar,
}

impl Commutation {
    pub fn commuting(n: usize) -> Self {
        Commutation {
            c: Scalar::one(),
            a: vec![Scalar::zero(); n],
            d: Scalar::zero(),
        }
    }

    pub fn scaling(n: usize, c: Scalar) -> Self {
        Commutation {
            c,
            ..Self::commuting(n)
        }
    }
}

/// Global dimension as quoted from the literature; never computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gld {
    Exact(u32),
    AtMost(u32),
}

impl Gld {
    pub fn value(self) -> u32 {
        match self {
            Gld::Exact(d) | Gld::AtMost(d) => d,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub name: String,
    pub params: Vec<String>,
    pub vars: Vec<String>,
    pub sigma: Vec<ScalarMap>,
    /// `None` is the zero derivation.
    pub delta: Vec<Option<ScalarMap>>,
    /// Keyed by `(j, i)` with `j > i`; every pair is present.
    pub comm: BTreeMap<(usize, usize), Commutation>,
    pub gld: Option<Gld>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub quasi_commutative: bool,
    pub bijective: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Augmentation {
    /// All `d_ij = 0`: `x_i ↦ 0` defines an algebra map onto `K`.
    Ok,
    /// Some `d_ij ≠ 0`, so `1` lies in the ideal generated by the variables.
    Collapses,
}

impl Presentation {
    /// The commutative polynomial ring in the given variables.
    pub fn commutative(name: &str, params: Vec<String>, vars: Vec<String>) -> Self {
        let n = vars.len();
        let mut comm = BTreeMap::new();
        for j in 0..n {
            for i in 0..j {
                comm.insert((j, i), Commutation::commuting(n));
            }
        }
        Presentation {
            name: name.to_string(),
            params,
            vars,
            sigma: vec![ScalarMap::Identity; n],
            delta: vec![None; n],
            comm,
            gld: None,
        }
    }

    pub fn n(&self) -> usize {
        self.vars.len()
    }

    pub fn nparams(&self) -> usize {
        self.params.len()
    }

    pub fn comm(&self, j: usize, i: usize) -> &Commutation {
        &self.comm[&(j, i)]
    }

    pub fn set_comm(&mut self, j: usize, i: usize, c: Commutation) {
        assert!(j > i);
        self.comm.insert((j, i), c);
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn param_index(&self, name: &str) -> Option<usize> {
        self.params.iter().position(|v| v == name)
    }

    pub fn coefficients_central(&self) -> bool {
        self.sigma.iter().all(ScalarMap::is_identity) && self.delta.iter().all(Option::is_none)
    }

    pub fn classify(&self) -> Classification {
        let quasi_commutative = self.delta.iter().all(Option::is_none)
            && self
                .comm
                .values()
                .all(|c| c.d.is_zero() && c.a.iter().all(Scalar::is_zero));
        let bijective = self.sigma.iter().all(ScalarMap::is_bijective)
            && self.comm.values().all(|c| !c.c.is_zero());
        Classification {
            quasi_commutative,
            bijective,
        }
    }

    pub fn augmentation(&self) -> Result<Augmentation> {
        if !self.coefficients_central() {
            return Err(Error::AugmentationRequiresCentral);
        }
        if self.comm.values().any(|c| !c.d.is_zero()) {
            Ok(Augmentation::Collapses)
        } else {
            Ok(Augmentation::Ok)
        }
    }

    fn pair_name(&self, j: usize, i: usize) -> String {
        format!("{}*{}", self.vars[j], self.vars[i])
    }

    /// Consistency report: shape, σ-derivation law, variable-triple
    /// diamonds and coefficient-move diamonds.
    pub fn validate(&self) -> Report {
        let mut rep = Report::new("validate", Some(&self.name));
        let n = self.n();
        let mut shape_bad = Vec::new();
        if self.sigma.len() != n || self.delta.len() != n {
            shape_bad.push("sigma/delta count differs from variable count".to_string());
        }
        for j in 0..n {
            for i in 0..j {
                match self.comm.get(&(j, i)) {
                    None => shape_bad.push(format!("missing relation for {}", self.pair_name(j, i))),
                    Some(c) => {
                        if c.c.is_zero() {
                            shape_bad.push(format!("c = 0 for {}", self.pair_name(j, i)));
                        }
                        if c.a.len() != n {
                            shape_bad.push(format!("linear part of {} has wrong length", self.pair_name(j, i)));
                        }
                    }
                }
            }
        }
        let np = self.nparams();
        let all_scalars = self
            .comm
            .values()
            .flat_map(|c| std::iter::once(&c.c).chain(c.a.iter()).chain(std::iter::once(&c.d)));
        if all_scalars.into_iter().any(|s| s.nvars() > np) {
            shape_bad.push("coefficient uses an undeclared parameter".to_string());
        }
        if shape_bad.is_empty() {
            rep.pass_if("shape", true, json!(null));
        } else {
            rep.pass_if("shape", false, json!(shape_bad.join("; ")));
            return rep;
        }

        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut law_bad = Vec::new();
        for i in 0..n {
            let Some(delta) = &self.delta[i] else { continue };
            for _ in 0..20 {
                let a = random_scalar(&mut rng, np);
                let b = random_scalar(&mut rng, np);
                let lhs = delta.apply(&a.mul(&b));
                let rhs = (|| -> Result<Scalar> {
                    Ok(self.sigma[i].apply(&a)?.mul(&delta.apply(&b)?).add(&delta.apply(&a)?.mul(&b)))
                })();
                match (lhs, rhs) {
                    (Ok(l), Ok(r)) if l == r => {}
                    _ => {
                        law_bad.push(format!("{} at ({}, {})", self.vars[i], a, b));
                        break;
                    }
                }
            }
        }
        rep.pass_if("sigma-derivation law", law_bad.is_empty(), json!(law_bad.join("; ")));
        if !law_bad.is_empty() {
            return rep;
        }

        let ring = Ring::new(self.clone());
        let mut diamond_bad = Vec::new();
        for k in 0..n {
            for j in 0..k {
                for i in 0..j {
                    let left = ring.mul(&ring.swap_adjacent(k, j), &ring.var(i));
                    let right = ring.mul(&ring.var(k), &ring.swap_adjacent(j, i));
                    if left != right {
                        diamond_bad.push(format!(
                            "{}*{}*{}: {} vs {}",
                            self.vars[k],
                            self.vars[j],
                            self.vars[i],
                            ring.fmt(&left),
                            ring.fmt(&right)
                        ));
                    }
                }
            }
        }
        rep.pass_if("associativity diamonds", diamond_bad.is_empty(), json!(diamond_bad.join("; ")));

        let mut move_bad = Vec::new();
        for i in 0..n {
            for _ in 0..20 {
                let r = random_scalar(&mut rng, np);
                let via_rule = ring.move_coefficient(i, &r);
                let via_mul = ring.mul(&ring.var(i), &ring.constant(r.clone()));
                let deg_ok = match via_rule.degree() {
                    None => r.is_zero(),
                    Some(d) => d == 1 && via_rule.coeff(&ring.var_mono(i)).is_some(),
                };
                if via_rule != via_mul || !deg_ok {
                    move_bad.push(format!("{} with {}", self.vars[i], r));
                    break;
                }
                for j in i + 1..n {
                    // (x_j x_i) r against x_j (x_i r)
                    let left = ring.mul(&ring.swap_adjacent(j, i), &ring.constant(r.clone()));
                    let right = ring.mul(&ring.var(j), &via_rule);
                    if left != right {
                        move_bad.push(format!("{} with {}", self.pair_name(j, i), r));
                    }
                }
            }
        }
        move_bad.dedup();
        rep.pass_if("coefficient moves", move_bad.is_empty(), json!(move_bad.join("; ")));
        let cl = self.classify();
        rep.value("quasi_commutative", cl.quasi_commutative);
        rep.value("bijective", cl.bijective);
        rep
    }

    /// Runs `validate` and returns an error naming the first failing check.
    pub fn validated(self) -> Result<Self> {
        let rep = self.validate();
        if rep.status() == Status::Pass {
            Ok(self)
        } else {
            let why = rep
                .failures()
                .iter()
                .map(|c| format!("{} ({})", c.name, c.evidence))
                .collect::<Vec<_>>()
                .join("; ");
            Err(Error::Rejected(why))
        }
    }

    /// `ε(f)`, the constant term, valid when the augmentation exists.
    pub fn augment(&self, f: &Poly) -> Scalar {
        f.constant_term()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn commutative_validates() {
        let p = Presentation::commutative("k3", vec![], vec!["x1".into(), "x2".into(), "x3".into()]);
        assert!(p.validate().passed());
        let cl = p.classify();
        assert!(cl.quasi_commutative && cl.bijective);
        assert_eq!(p.augmentation().unwrap(), Augmentation::Ok);
    }

    #[test]
    fn dispin_validates_and_classifies() {
        let p = catalog::preset("dispin").unwrap();
        assert!(p.validate().passed(), "{}", p.validate().render_text());
        assert_eq!(
            p.classify(),
            Classification {
                quasi_commutative: false,
                bijective: true
            }
        );
        assert_eq!(p.augmentation().unwrap(), Augmentation::Ok);
    }

    #[test]
    fn zero_commutation_constant_is_rejected_at_shape() {
        let mut p = catalog::preset("dispin").unwrap();
        p.comm.get_mut(&(2, 0)).unwrap().c = Scalar::zero();
        let rep = p.validate();
        assert_eq!(rep.checks[0].name, "shape");
        assert_eq!(rep.checks[0].status, Status::Fail);
        assert!(p.validated().is_err());
    }

    #[test]
    fn inconsistent_triple_is_rejected() {
        // x2 x1 = 2 x1 x2 with the other pairs commuting is consistent;
        // adding x3 x1 = x1 x3 + x2 breaks the x3*x2*x1 diamond.
        let mut p = catalog::preset("commutative").unwrap();
        let two = Scalar::from_int(2);
        p.set_comm(1, 0, Commutation::scaling(3, two));
        assert!(p.validate().passed());
        let mut c = Commutation::commuting(3);
        c.a[1] = Scalar::one();
        p.set_comm(2, 0, c);
        let rep = p.validate();
        assert_eq!(rep.status(), Status::Fail);
        assert!(rep.failures()[0].name.contains("diamond"));
    }

    #[test]
    fn broken_sigma_derivation_pair_is_rejected() {
        // δ = (σ − id)/e is always a σ-derivation, so break the pair by
        // pairing δ with a different σ.
        let mut p = catalog::preset("ore_idempotent").unwrap();
        let t = p.param_index("t").unwrap();
        p.sigma[0] = ScalarMap::substitution([(t, Scalar::param(t).mul(&Scalar::from_int(2)))].into_iter().collect());
        let rep = p.validate();
        assert_eq!(rep.status(), Status::Fail);
        assert_eq!(rep.failures()[0].name, "sigma-derivation law");
    }

    #[test]
    fn weyl_collapses_and_qspace_is_quasi_commutative() {
        let w = catalog::preset("weyl").unwrap();
        assert_eq!(w.augmentation().unwrap(), Augmentation::Collapses);
        let q = catalog::preset("qspace3").unwrap();
        assert_eq!(
            q.classify(),
            Classification {
                quasi_commutative: true,
                bijective: true
            }
        );
        let ore = catalog::preset("ore_idempotent").unwrap();
        assert_eq!(ore.augmentation(), Err(Error::AugmentationRequiresCentral));
    }
}
