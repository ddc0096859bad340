//! The coefficient field `K = Q(p_1, ..., p_m)` and maps acting on it.

mod map;
mod mpoly;
mod scalar;

pub use map::ScalarMap;
pub use mpoly::{Exps, MPoly};
pub use scalar::Scalar;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

/// A random scalar in `nparams` parameters: a ratio of small polynomials,
/// used by sampling-based checks.
pub fn random_scalar<R: Rng>(rng: &mut R, nparams: usize) -> Scalar {
    let num = random_poly(rng, nparams, 2, 3);
    if nparams == 0 || rng.gen_bool(0.5) {
        return Scalar::from_poly(num);
    }
    let mut den = random_poly(rng, nparams, 1, 2);
    while den.is_zero() {
        den = random_poly(rng, nparams, 1, 2);
    }
    Scalar::from_fraction(num, den).expect("nonzero denominator")
}

fn random_poly<R: Rng>(rng: &mut R, nparams: usize, maxdeg: u32, nterms: usize) -> MPoly {
    let terms = (0..nterms).map(|_| {
        let e: Exps = (0..nparams).map(|_| rng.gen_range(0..=maxdeg)).collect();
        let c = BigRational::new(
            BigInt::from(rng.gen_range(-5i64..=5)),
            BigInt::from(rng.gen_range(1i64..=3)),
        );
        (e, c)
    });
    MPoly::from_terms(terms)
}
