use std::collections::BTreeMap;

use super::mpoly::MPoly;
use super::scalar::Scalar;
use crate::{Error, Result};

/// A coefficient endomorphism `σ` or a `σ`-derivation `δ` acting on scalars.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ScalarMap {
    Identity,
    /// Simultaneous substitution of parameters; parameters absent from
    /// `images` are fixed. `inverse` is the witness of bijectivity.
    Substitution {
        images: BTreeMap<usize, Scalar>,
        inverse: Option<BTreeMap<usize, Scalar>>,
    },
    /// `δ(f) = (σ(f) - f) / denom`.
    DifferenceQuotient { sigma: Box<ScalarMap>, denom: Scalar },
}

impl ScalarMap {
    /// Substitution with an inverse computed when every image has the form
    /// `c·p + b` with `c`, `b` free of substituted parameters.
    pub fn substitution(images: BTreeMap<usize, Scalar>) -> Self {
        let inverse = affine_inverse(&images);
        ScalarMap::Substitution { images, inverse }
    }

    pub fn substitution_with_inverse(
        images: BTreeMap<usize, Scalar>,
        inverse: BTreeMap<usize, Scalar>,
    ) -> Result<Self> {
        let m = ScalarMap::Substitution {
            images: images.clone(),
            inverse: Some(inverse.clone()),
        };
        // both compositions must fix every substituted generator
        let fwd = ScalarMap::Substitution {
            images: images.clone(),
            inverse: None,
        };
        let bwd = ScalarMap::Substitution {
            images: inverse.clone(),
            inverse: None,
        };
        for &p in images.keys().chain(inverse.keys()) {
            let g = Scalar::param(p);
            if bwd.apply(&fwd.apply(&g)?)? != g || fwd.apply(&bwd.apply(&g)?)? != g {
                return Err(Error::NotInvertible);
            }
        }
        Ok(m)
    }

    pub fn difference_quotient(sigma: ScalarMap, denom: Scalar) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(ScalarMap::DifferenceQuotient {
            sigma: Box::new(sigma),
            denom,
        })
    }

    pub fn is_identity(&self) -> bool {
        match self {
            ScalarMap::Identity => true,
            ScalarMap::Substitution { images, .. } => images
                .iter()
                .all(|(&p, s)| *s == Scalar::param(p)),
            ScalarMap::DifferenceQuotient { .. } => false,
        }
    }

    pub fn is_bijective(&self) -> bool {
        match self {
            ScalarMap::Identity => true,
            ScalarMap::Substitution { inverse, .. } => inverse.is_some(),
            ScalarMap::DifferenceQuotient { .. } => false,
        }
    }

    pub fn apply(&self, a: &Scalar) -> Result<Scalar> {
        match self {
            ScalarMap::Identity => Ok(a.clone()),
            ScalarMap::Substitution { images, .. } => substitute(images, a),
            ScalarMap::DifferenceQuotient { sigma, denom } => {
                if a.is_rational() {
                    return Ok(Scalar::zero());
                }
                let s = sigma.apply(a)?;
                s.sub(a).div(denom)
            }
        }
    }

    pub fn inverse(&self) -> Result<ScalarMap> {
        match self {
            ScalarMap::Identity => Ok(ScalarMap::Identity),
            ScalarMap::Substitution {
                images,
                inverse: Some(inv),
            } => Ok(ScalarMap::Substitution {
                images: inv.clone(),
                inverse: Some(images.clone()),
            }),
            _ => Err(Error::NotInvertible),
        }
    }
}

/// Evaluates `a` under the substitution, clearing denominators of the images
/// so that only one normalization happens at the end.
fn substitute(images: &BTreeMap<usize, Scalar>, a: &Scalar) -> Result<Scalar> {
    if a.is_rational() {
        return Ok(a.clone());
    }
    let n = eval_poly(images, a.numer());
    let d = eval_poly(images, a.denom());
    let (nn, nd) = n;
    let (dn, dd) = d;
    if dn.is_zero() {
        return Err(Error::SingularSubstitution);
    }
    // (nn/nd) / (dn/dd) = nn*dd / (nd*dn)
    Scalar::from_fraction(nn.mul(&dd), nd.mul(&dn)).map_err(|_| Error::SingularSubstitution)
}

/// Returns `(N, D)` with `p(images) = N / D` as polynomials.
fn eval_poly(images: &BTreeMap<usize, Scalar>, p: &MPoly) -> (MPoly, MPoly) {
    if p.is_constant() {
        return (p.clone(), MPoly::one());
    }
    let nv = p.nvars();
    let maxdeg: Vec<u32> = (0..nv).map(|v| p.degree_in(v)).collect();
    // per substituted parameter: powers of numerator and denominator
    let mut num_pows: Vec<Vec<MPoly>> = vec![Vec::new(); nv];
    let mut den_pows: Vec<Vec<MPoly>> = vec![Vec::new(); nv];
    for v in 0..nv {
        let (n, d) = match images.get(&v) {
            Some(s) => (s.numer().clone(), s.denom().clone()),
            None => (MPoly::var(v), MPoly::one()),
        };
        let mut np = vec![MPoly::one()];
        let mut dp = vec![MPoly::one()];
        for k in 1..=maxdeg[v] as usize {
            np.push(np[k - 1].mul(&n));
            dp.push(dp[k - 1].mul(&d));
        }
        num_pows[v] = np;
        den_pows[v] = dp;
    }
    let mut total = MPoly::zero();
    for (e, c) in p.terms() {
        let mut t = MPoly::constant(c.clone());
        for v in 0..nv {
            let k = e.get(v).copied().unwrap_or(0);
            if k > 0 {
                t = t.mul(&num_pows[v][k as usize]);
            }
            let rest = maxdeg[v] - k;
            if rest > 0 && !den_pows[v][1].is_one() {
                t = t.mul(&den_pows[v][rest as usize]);
            }
        }
        total = total.add(&t);
    }
    let mut den = MPoly::one();
    for v in 0..nv {
        if maxdeg[v] > 0 && !den_pows[v][1].is_one() {
            den = den.mul(&den_pows[v][maxdeg[v] as usize]);
        }
    }
    (total, den)
}

fn affine_inverse(images: &BTreeMap<usize, Scalar>) -> Option<BTreeMap<usize, Scalar>> {
    let mut inv = BTreeMap::new();
    for (&p, img) in images {
        // img = c*p + b, c and b free of every substituted parameter
        let n = img.numer();
        let d = img.denom();
        if images.keys().any(|&k| d.has_var(k)) {
            return None;
        }
        if n.degree_in(p) != 1 {
            return None;
        }
        let mut c_terms = Vec::new();
        let mut b_terms = Vec::new();
        for (e, coef) in n.terms() {
            if e.get(p).copied().unwrap_or(0) == 1 {
                let mut e2 = e.clone();
                e2[p] = 0;
                c_terms.push((e2, coef.clone()));
            } else {
                b_terms.push((e.clone(), coef.clone()));
            }
        }
        let c = MPoly::from_terms(c_terms);
        let b = MPoly::from_terms(b_terms);
        if images.keys().any(|&k| c.has_var(k) || b.has_var(k)) || c.is_zero() {
            return None;
        }
        let c = Scalar::from_fraction(c, d.clone()).ok()?;
        let b = Scalar::from_fraction(b, d.clone()).ok()?;
        // p = (img - b) / c
        let pre = Scalar::param(p).sub(&b).div(&c).ok()?;
        inv.insert(p, pre);
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    // parameters: q = 0, t = 1
    fn q() -> Scalar {
        Scalar::param(0)
    }
    fn t() -> Scalar {
        Scalar::param(1)
    }

    fn sigma() -> ScalarMap {
        ScalarMap::substitution(BTreeMap::from([(1, q().mul(&t()))]))
    }

    fn delta() -> ScalarMap {
        let e = t().mul(&q().sub(&Scalar::one()));
        ScalarMap::difference_quotient(sigma(), e).unwrap()
    }

    #[test]
    fn sigma_on_t_and_t_squared() {
        assert_eq!(sigma().apply(&t()).unwrap(), q().mul(&t()));
        let t2 = t().mul(&t());
        assert_eq!(sigma().apply(&t2).unwrap(), q().mul(&q()).mul(&t2));
    }

    #[test]
    fn delta_of_t_is_one() {
        assert_eq!(delta().apply(&t()).unwrap(), Scalar::one());
        assert!(delta().apply(&Scalar::from_int(7)).unwrap().is_zero());
    }

    #[test]
    fn inverse_of_q_scaling() {
        let inv = sigma().inverse().unwrap();
        assert_eq!(inv.apply(&t()).unwrap(), t().div(&q()).unwrap());
        let t3 = t().pow(3).unwrap();
        assert_eq!(inv.apply(&sigma().apply(&t3).unwrap()).unwrap(), t3);
        assert_eq!(ScalarMap::Identity.inverse().unwrap(), ScalarMap::Identity);
    }

    #[test]
    fn difference_quotient_has_no_inverse() {
        assert_eq!(delta().inverse(), Err(Error::NotInvertible));
    }

    #[test]
    fn singular_substitution() {
        // t -> 0 sends 1/t to a zero denominator
        let m = ScalarMap::substitution(BTreeMap::from([(1, Scalar::zero())]));
        let a = t().inv().unwrap();
        assert_eq!(m.apply(&a), Err(Error::SingularSubstitution));
    }

    #[test]
    fn rational_images_apply() {
        let m = ScalarMap::substitution(BTreeMap::from([(1, t().div(&q()).unwrap())]));
        let a = t().add(&Scalar::one()).inv().unwrap();
        let expect = q().div(&t().add(&q())).unwrap();
        assert_eq!(m.apply(&a).unwrap(), expect);
    }
}
