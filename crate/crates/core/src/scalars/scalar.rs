use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::mpoly::MPoly;
use crate::{Error, Result};

/// An element of the coefficient field Q(p_1, ..., p_m).
///
/// Kept as `num / den` with `gcd(num, den) = 1` and `den` monic under lex
/// order, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    num: MPoly,
    den: MPoly,
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: MPoly::zero(),
            den: MPoly::one(),
        }
    }

    pub fn one() -> Self {
        Scalar {
            num: MPoly::one(),
            den: MPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar {
            num: MPoly::from_int(n),
            den: MPoly::one(),
        }
    }

    pub fn from_ratio(n: i64, d: i64) -> Result<Self> {
        if d == 0 {
            return Err(Error::ZeroDivisor);
        }
        Ok(Self::from_rational(BigRational::new(
            BigInt::from(n),
            BigInt::from(d),
        )))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Scalar {
            num: MPoly::constant(c),
            den: MPoly::one(),
        }
    }

    pub fn param(i: usize) -> Self {
        Scalar {
            num: MPoly::var(i),
            den: MPoly::one(),
        }
    }

    pub fn from_poly(p: MPoly) -> Self {
        Scalar {
            num: p,
            den: MPoly::one(),
        }
    }

    /// `num / den`, reduced and normalized.
    pub fn from_fraction(num: MPoly, den: MPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = MPoly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: MPoly, den: MPoly) -> Self {
        let lc = den.lead_coeff();
        if lc.is_one() {
            Scalar { num, den }
        } else {
            let k = lc.recip();
            Scalar {
                num: num.scale(&k),
                den: den.scale(&k),
            }
        }
    }

    pub fn numer(&self) -> &MPoly {
        &self.num
    }

    pub fn denom(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when no parameter occurs.
    pub fn is_rational(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars().max(self.den.nvars())
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return Scalar::from_poly(self.num.add(&o.num));
        }
        if self.den == o.den {
            let n = self.num.add(&o.num);
            return Scalar::from_fraction(n, self.den.clone()).unwrap();
        }
        let g = MPoly::gcd(&self.den, &o.den);
        let d1 = self.den.div_exact(&g).unwrap();
        let d2 = o.den.div_exact(&g).unwrap();
        let n = self.num.mul(&d2).add(&o.num.mul(&d1));
        if n.is_zero() {
            return Scalar::zero();
        }
        // only factors of g can cancel
        let h = MPoly::gcd(&n, &g);
        let (n, g) = if h.is_one() {
            (n, g)
        } else {
            (n.div_exact(&h).unwrap(), g.div_exact(&h).unwrap())
        };
        Scalar::normalized(n, d1.mul(&d2).mul(&g))
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return Scalar::from_poly(self.num.mul(&o.num));
        }
        let g1 = MPoly::gcd(&self.num, &o.den);
        let g2 = MPoly::gcd(&o.num, &self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = o.den.div_exact(&g1).unwrap();
        let n2 = o.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        Scalar::normalized(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(Scalar::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Scalar) -> Result<Scalar> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, k: i64) -> Result<Scalar> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let k = k as u32;
        Ok(Scalar {
            num: self.num.pow(k),
            den: self.den.pow(k),
        })
    }

    /// Text form in the DSL scalar syntax.
    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.den.is_one() {
            return self.num.to_string_with(names);
        }
        let n = self.num.to_string_with(names);
        let d = self.den.to_string_with(names);
        let n = if self.num.is_monomial() && !n.starts_with('-') {
            n
        } else {
            format!("({})", n)
        };
        let d = if self.den.is_monomial() && !d.contains('/') && !d.contains('*') {
            d
        } else {
            format!("({})", d)
        };
        format!("{}/{}", n, d)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&[]))
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        Scalar::add(&self, &o)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        Scalar::add(self, o)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        Scalar::sub(&self, &o)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        Scalar::sub(self, o)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        Scalar::mul(&self, &o)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        Scalar::mul(self, o)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(&self)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}
