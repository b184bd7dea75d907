//! Reduced rational functions in `z, E` over ℚ(ν, a, b, c, d).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed};

use super::gcd::gcd;
use super::poly::{MPoly, Rational, Var};
use crate::error::{Error, Result};

/// `num/den` with `gcd(num, den) = 1` and `den` a primitive integer polynomial
/// with positive leading coefficient. Equality of canonical forms is equality
/// of rational functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: MPoly,
    den: MPoly,
}

/// A rational function free of `z` and `E`.
pub type CoeffField = RatFun;

impl Default for RatFun {
    fn default() -> Self {
        RatFun::zero()
    }
}

impl RatFun {
    pub fn zero() -> RatFun {
        RatFun { num: MPoly::zero(), den: MPoly::one() }
    }

    pub fn one() -> RatFun {
        RatFun::from_poly(MPoly::one())
    }

    pub fn from_poly(p: MPoly) -> RatFun {
        RatFun { num: p, den: MPoly::one() }
    }

    pub fn constant(c: Rational) -> RatFun {
        RatFun::from_poly(MPoly::constant(c))
    }

    pub fn int(n: i64) -> RatFun {
        RatFun::from_poly(MPoly::int(n))
    }

    pub fn var(v: Var) -> RatFun {
        RatFun::from_poly(MPoly::var(v))
    }

    pub fn z() -> RatFun {
        RatFun::var(Var::Z)
    }

    pub fn e() -> RatFun {
        RatFun::var(Var::E)
    }

    pub fn nu() -> RatFun {
        RatFun::var(Var::Nu)
    }

    /// Reduces `num/den` to canonical form.
    pub fn new(num: MPoly, den: MPoly) -> Result<RatFun> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        Ok(RatFun::from_coprime(num, den))
    }

    /// Canonicalizes the scalar normalization of an already coprime pair.
    fn from_coprime(num: MPoly, den: MPoly) -> RatFun {
        if num.is_zero() {
            return RatFun::zero();
        }
        let (c, den) = den.primitive_int();
        let num = if c.is_one() { num } else { num.scale(&c.recip()) };
        RatFun { num, den }
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.is_constant()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn contains(&self, v: Var) -> bool {
        self.num.contains(v) || self.den.contains(v)
    }

    pub fn var_mask(&self) -> u8 {
        self.num.var_mask() | self.den.var_mask()
    }

    /// True when free of `z` and `E`, i.e. an element of the coefficient field.
    pub fn is_coefficient(&self) -> bool {
        !self.contains(Var::Z) && !self.contains(Var::E)
    }

    pub fn inv(&self) -> Result<RatFun> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RatFun::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: i32) -> RatFun {
        if e < 0 {
            return self.inv().expect("negative power of zero").pow(-e);
        }
        let e = e as u32;
        RatFun::from_coprime(self.num.pow(e), self.den.pow(e))
    }

    pub fn scale(&self, c: &Rational) -> RatFun {
        RatFun { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn derivative(&self, v: Var) -> RatFun {
        if !self.contains(v) {
            return RatFun::zero();
        }
        if self.den.is_one() {
            return RatFun::from_poly(self.num.derivative(v));
        }
        // (n/d)' = (n'd - nd')/d²; dividing by g = gcd(d, d') keeps sizes down.
        let dd = self.den.derivative(v);
        let g = gcd(&self.den, &dd);
        let d_g = self.den.div_exact(&g).unwrap();
        let dd_g = dd.div_exact(&g).unwrap();
        let num = &(&self.num.derivative(v) * &d_g) - &(&self.num * &dd_g);
        let den = &self.den * &d_g;
        RatFun::new(num, den).unwrap()
    }

    /// Substitutes a rational value for `v` after cancellation; errors on a
    /// genuine pole.
    pub fn subs(&self, v: Var, value: &Rational) -> Result<RatFun> {
        if !self.contains(v) {
            return Ok(self.clone());
        }
        let den = self.den.subs(v, value);
        if den.is_zero() {
            return Err(Error::PoleAtPoint(format!("{} = {}", v.name(), value)));
        }
        RatFun::new(self.num.subs(v, value), den)
    }

    /// Substitutes a rational function for `v`.
    pub fn compose(&self, v: Var, value: &RatFun) -> Result<RatFun> {
        if !self.contains(v) {
            return Ok(self.clone());
        }
        // Homogenize: p(n/d) = P(n, d)/d^deg.
        let hom = |p: &MPoly, deg: u32| -> MPoly {
            let cs = p.coeffs_in(v);
            let mut acc = MPoly::zero();
            for (i, c) in cs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let t = &(c * &value.num.pow(i as u32)) * &value.den.pow(deg - i as u32);
                acc = &acc + &t;
            }
            acc
        };
        let dn = self.num.degree(v);
        let dd = self.den.degree(v);
        let n = hom(&self.num, dn);
        let d = hom(&self.den, dd);
        let (n, d) = if dn >= dd {
            (n, &d * &value.den.pow(dn - dd))
        } else {
            (&n * &value.den.pow(dd - dn), d)
        };
        if d.is_zero() {
            return Err(Error::PoleAtPoint(format!("{} = {}", v.name(), value)));
        }
        RatFun::new(n, d)
    }

    /// Evaluates `ν = ν₀` after full cancellation.
    pub fn eval_nu(&self, nu0: &Rational) -> Result<RatFun> {
        self.subs(Var::Nu, nu0)
    }

    pub fn degree_num(&self, v: Var) -> u32 {
        self.num.degree(v)
    }

    pub fn degree_den(&self, v: Var) -> u32 {
        self.den.degree(v)
    }

    pub fn eval_f64(&self, point: &[f64; 8]) -> f64 {
        self.num.eval_f64(point) / self.den.eval_f64(point)
    }

    pub fn numer_sign_negative(&self) -> bool {
        self.num.lc().is_negative()
    }

    pub fn try_div(&self, o: &RatFun) -> Result<RatFun> {
        Ok(self * &o.inv()?)
    }
}

impl<'a> Add<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn add(self, o: &RatFun) -> RatFun {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            let num = &self.num + &o.num;
            if self.den.is_one() {
                return RatFun::from_poly(num);
            }
            return RatFun::new(num, self.den.clone()).unwrap();
        }
        let g = gcd(&self.den, &o.den);
        let b = self.den.div_exact(&g).unwrap();
        let d = o.den.div_exact(&g).unwrap();
        let num = &(&self.num * &d) + &(&o.num * &b);
        let den = &self.den * &d;
        if g.is_one() {
            // num is coprime to b·d already.
            return RatFun::from_coprime(num, den);
        }
        let g2 = gcd(&num, &g);
        if g2.is_one() {
            RatFun::from_coprime(num, den)
        } else {
            RatFun::from_coprime(num.div_exact(&g2).unwrap(), den.div_exact(&g2).unwrap())
        }
    }
}

impl<'a> Neg for &'a RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

impl<'a> Sub<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn sub(self, o: &RatFun) -> RatFun {
        self + &(-o)
    }
}

impl<'a> Mul<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn mul(self, o: &RatFun) -> RatFun {
        if self.is_zero() || o.is_zero() {
            return RatFun::zero();
        }
        if let Some(c) = self.constant_value() {
            return o.scale(&c);
        }
        if let Some(c) = o.constant_value() {
            return self.scale(&c);
        }
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let a = self.num.div_exact(&g1).unwrap();
        let d = o.den.div_exact(&g1).unwrap();
        let c = o.num.div_exact(&g2).unwrap();
        let b = self.den.div_exact(&g2).unwrap();
        RatFun::from_coprime(&a * &c, &b * &d)
    }
}

impl<'a> Div<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn div(self, o: &RatFun) -> RatFun {
        self.try_div(o).expect("division by zero rational function")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<RatFun> for RatFun {
            type Output = RatFun;
            fn $f(self, o: RatFun) -> RatFun {
                (&self).$f(&o)
            }
        }
        impl<'a> $tr<&'a RatFun> for RatFun {
            type Output = RatFun;
            fn $f(self, o: &RatFun) -> RatFun {
                (&self).$f(o)
            }
        }
        impl<'a> $tr<RatFun> for &'a RatFun {
            type Output = RatFun;
            fn $f(self, o: RatFun) -> RatFun {
                self.$f(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl From<MPoly> for RatFun {
    fn from(p: MPoly) -> RatFun {
        RatFun::from_poly(p)
    }
}

impl From<Rational> for RatFun {
    fn from(c: Rational) -> RatFun {
        RatFun::constant(c)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let n = if self.num.len() > 1 { format!("({})", self.num) } else { self.num.to_string() };
        let d = self.den.to_string();
        let d = if self.den.len() > 1 || d.contains('*') { format!("({})", d) } else { d };
        write!(f, "{}/{}", n, d)
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::{int, rat};

    fn z() -> RatFun {
        RatFun::z()
    }

    #[test]
    fn normalize_examples() {
        let two = RatFun::int(2);
        let f = (&(&two * &z().pow(2)) + &two) / (&two * &z());
        assert_eq!(f, (&z().pow(2) + &RatFun::one()) / z());
        let g = (&z().pow(2) - &RatFun::one()) / (&z() - &RatFun::one());
        assert_eq!(g, &z() + &RatFun::one());
        let e3 = &RatFun::e() - &RatFun::int(3);
        assert_eq!(&(&e3 * &z().pow(2)) / &e3, z().pow(2));
    }

    #[test]
    fn eval_nu_removable_and_pole() {
        let nu = RatFun::nu();
        let f = (&nu.pow(2) - &RatFun::constant(rat(1, 4))) / (&nu + &RatFun::constant(rat(1, 2)));
        assert_eq!(f.eval_nu(&rat(-1, 2)).unwrap(), RatFun::int(-1));
        let g = (&nu.scale(&int(2)) + &RatFun::one()).inv().unwrap();
        assert!(matches!(g.eval_nu(&rat(-1, 2)), Err(Error::PoleAtPoint(_))));
    }

    #[test]
    fn derivative_and_compose() {
        let f = &z().inv().unwrap() + &z();
        assert_eq!(f.derivative(Var::Z), &RatFun::one() - &z().pow(-2));
        let g = f.compose(Var::Z, &z().pow(2)).unwrap();
        assert_eq!(g, &z().pow(-2) + &z().pow(2));
    }
}
