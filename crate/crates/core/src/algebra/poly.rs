//! Sparse multivariate polynomials over ℚ in the fixed variable set
//! `z, E, ν, a, b, c, d, t`.
//!
//! Monomials are packed into a `u128` with 16 bits per variable, `z` in the
//! most significant slot, so the integer order of the packed value is the lex
//! order `z > E > ν > a > b > c > d > t`. Terms are kept sorted in descending
//! order with no zero coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar. `BigRational` keeps `gcd(num, den) = 1` and `den > 0`.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Z,
    E,
    Nu,
    A,
    B,
    C,
    D,
    T,
}

impl Var {
    pub const ALL: [Var; 8] = [Var::Z, Var::E, Var::Nu, Var::A, Var::B, Var::C, Var::D, Var::T];
    /// Coefficient-level symbols (everything that is neither `z` nor `E`).
    pub const PARAMS: [Var; 6] = [Var::Nu, Var::A, Var::B, Var::C, Var::D, Var::T];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Z => "z",
            Var::E => "E",
            Var::Nu => "nu",
            Var::A => "a",
            Var::B => "b",
            Var::C => "c",
            Var::D => "d",
            Var::T => "t",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == s)
    }

    fn shift(self) -> u32 {
        (7 - self as u32) * 16
    }

    fn bit(self) -> u8 {
        1 << (self as u8)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Monomial(u128);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn var(v: Var, e: u32) -> Monomial {
        assert!(e < 1 << 16, "exponent overflow");
        Monomial((e as u128) << v.shift())
    }

    pub fn from_exponents(exps: &[(Var, u32)]) -> Monomial {
        exps.iter().fold(Monomial::ONE, |m, &(v, e)| m.mul(Monomial::var(v, e)))
    }

    pub fn exp(self, v: Var) -> u32 {
        ((self.0 >> v.shift()) & 0xffff) as u32
    }

    pub fn mul(self, o: Monomial) -> Monomial {
        debug_assert!(Var::ALL.iter().all(|&v| self.exp(v) + o.exp(v) < 1 << 16));
        Monomial(self.0 + o.0)
    }

    pub fn divides(self, o: Monomial) -> bool {
        Var::ALL.iter().all(|&v| self.exp(v) <= o.exp(v))
    }

    pub fn div(self, o: Monomial) -> Option<Monomial> {
        if o.divides(self) {
            Some(Monomial(self.0 - o.0))
        } else {
            None
        }
    }

    pub fn without(self, v: Var) -> Monomial {
        Monomial(self.0 & !(0xffffu128 << v.shift()))
    }

    pub fn total_degree(self) -> u32 {
        Var::ALL.iter().map(|&v| self.exp(v)).sum()
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    pub fn var_mask(self) -> u8 {
        Var::ALL.iter().filter(|&&v| self.exp(v) > 0).fold(0, |m, v| m | v.bit())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: Vec<(Monomial, Rational)>,
}

impl MPoly {
    pub fn zero() -> MPoly {
        MPoly { terms: Vec::new() }
    }

    pub fn one() -> MPoly {
        MPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> MPoly {
        if c.is_zero() {
            MPoly::zero()
        } else {
            MPoly { terms: vec![(Monomial::ONE, c)] }
        }
    }

    pub fn int(n: i64) -> MPoly {
        MPoly::constant(int(n))
    }

    pub fn var(v: Var) -> MPoly {
        MPoly::monomial(Monomial::var(v, 1), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> MPoly {
        if c.is_zero() {
            MPoly::zero()
        } else {
            MPoly { terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(it: I) -> MPoly {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in it {
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        MPoly::from_map(acc)
    }

    fn from_map(acc: HashMap<Monomial, Rational>) -> MPoly {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MPoly { terms }
    }

    /// Univariate polynomial in `v` from ascending coefficients.
    pub fn univariate(v: Var, coeffs: &[Rational]) -> MPoly {
        MPoly::from_terms(
            coeffs.iter().enumerate().map(|(i, c)| (Monomial::var(v, i as u32), c.clone())),
        )
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> Rational {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Rational::zero(),
        }
    }

    /// Leading term in lex order.
    pub fn lt(&self) -> Option<(Monomial, &Rational)> {
        self.terms.first().map(|(m, c)| (*m, c))
    }

    pub fn lc(&self) -> Rational {
        self.terms.first().map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero)
    }

    pub fn coeff(&self, m: Monomial) -> Rational {
        match self.terms.binary_search_by(|(t, _)| m.cmp(t)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// Degree in `v`; the zero polynomial has degree 0.
    pub fn degree(&self, v: Var) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(v)).max().unwrap_or(0)
    }

    /// Lowest exponent of `v` over all terms (0 for the zero polynomial).
    pub fn low_degree(&self, v: Var) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(v)).min().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.total_degree()).max().unwrap_or(0)
    }

    pub fn var_mask(&self) -> u8 {
        self.terms.iter().fold(0, |m, (t, _)| m | t.var_mask())
    }

    pub fn contains(&self, v: Var) -> bool {
        self.var_mask() & v.bit() != 0
    }

    pub fn vars(&self) -> Vec<Var> {
        let mask = self.var_mask();
        Var::ALL.iter().copied().filter(|v| mask & v.bit() != 0).collect()
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect() }
    }

    pub fn mul_monomial(&self, m: Monomial) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(t, k)| (t.mul(m), k.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut result = MPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn derivative(&self, v: Var) -> MPoly {
        let one = Monomial::var(v, 1);
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(v) > 0)
            .map(|(m, c)| (m.div(one).unwrap(), c * int(m.exp(v) as i64)));
        // Descending order is preserved by lowering one exponent uniformly.
        MPoly { terms: terms.collect() }
    }

    /// Coefficients with respect to `v`: `self = Σ coeffs[i]·vⁱ`.
    pub fn coeffs_in(&self, v: Var) -> Vec<MPoly> {
        let deg = self.degree(v) as usize;
        let mut buckets: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            buckets[m.exp(v) as usize].push((m.without(v), c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut t| {
                t.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                MPoly { terms: t }
            })
            .collect()
    }

    pub fn from_coeffs_in(v: Var, coeffs: &[MPoly]) -> MPoly {
        MPoly::from_terms(coeffs.iter().enumerate().flat_map(|(i, c)| {
            let m = Monomial::var(v, i as u32);
            c.terms.iter().map(move |(t, k)| (t.mul(m), k.clone()))
        }))
    }

    /// Leading coefficient with respect to `v`.
    pub fn lc_in(&self, v: Var) -> MPoly {
        self.coeffs_in(v).pop().unwrap_or_default()
    }

    pub fn subs(&self, v: Var, value: &Rational) -> MPoly {
        if !self.contains(v) {
            return self.clone();
        }
        let mut powers: Vec<Rational> = vec![Rational::one()];
        MPoly::from_terms(self.terms.iter().map(|(m, c)| {
            let e = m.exp(v) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            (m.without(v), c * &powers[e])
        }))
    }

    pub fn subs_poly(&self, v: Var, value: &MPoly) -> MPoly {
        if !self.contains(v) {
            return self.clone();
        }
        let coeffs = self.coeffs_in(v);
        let mut acc = MPoly::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    pub fn eval_f64(&self, point: &[f64; 8]) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut x = c.to_f64().unwrap_or(f64::NAN);
                for v in Var::ALL {
                    let e = m.exp(v);
                    if e > 0 {
                        x *= point[v.index()].powi(e as i32);
                    }
                }
                x
            })
            .sum()
    }

    pub fn map_coeffs<F: Fn(&Rational) -> Rational>(&self, f: F) -> MPoly {
        MPoly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integer())
    }

    /// Splits `self = content · primitive` where `primitive` has coprime integer
    /// coefficients and a positive leading coefficient.
    pub fn primitive_int(&self) -> (Rational, MPoly) {
        if self.is_zero() {
            return (Rational::zero(), MPoly::zero());
        }
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for (_, c) in &self.terms {
            den_lcm = den_lcm.lcm(c.denom());
            num_gcd = num_gcd.gcd(c.numer());
        }
        let mut content = Rational::new(num_gcd, den_lcm);
        if self.lc().is_negative() {
            content = -content;
        }
        let inv = content.recip();
        (content, self.scale(&inv))
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(MPoly::zero());
        }
        if let Some(c) = d.constant_value() {
            return Some(self.scale(&c.recip()));
        }
        let (dm, dc) = d.lt().map(|(m, c)| (m, c.clone())).unwrap();
        // Quick degree screens.
        for v in d.vars() {
            if d.degree(v) > self.degree(v) {
                return None;
            }
        }
        let mut rem: BTreeMap<Monomial, Rational> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(Monomial, Rational)> = Vec::new();
        while let Some((&m, c)) = rem.iter().next_back() {
            let qm = m.div(dm)?;
            let qc = c / &dc;
            for (tm, tc) in &d.terms {
                let key = tm.mul(qm);
                let val = tc * &qc;
                match rem.get_mut(&key) {
                    Some(x) => {
                        *x -= val;
                        if x.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -val);
                    }
                }
            }
            quot.push((qm, qc));
        }
        // Quotient monomials were produced in strictly decreasing order.
        Some(MPoly { terms: quot })
    }

    /// Evaluates `v = value` for an integer value (used by the heuristic gcd).
    pub(crate) fn eval_int(&self, v: Var, value: &BigInt) -> MPoly {
        self.subs(v, &Rational::from_integer(value.clone()))
    }

    pub fn max_abs_coeff(&self) -> Rational {
        self.terms.iter().map(|(_, c)| c.abs()).max().unwrap_or_else(Rational::zero)
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, o: &MPoly) -> MPoly {
        let mut terms = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < o.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &o.terms[j];
            match ma.cmp(mb) {
                std::cmp::Ordering::Greater => {
                    terms.push((*ma, ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    terms.push((*mb, cb.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = ca + cb;
                    if !s.is_zero() {
                        terms.push((*ma, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend_from_slice(&o.terms[j..]);
        MPoly { terms }
    }
}

impl<'a> Neg for &'a MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, o: &MPoly) -> MPoly {
        self + &(-o)
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, o: &MPoly) -> MPoly {
        if self.is_zero() || o.is_zero() {
            return MPoly::zero();
        }
        if let Some(c) = self.constant_value() {
            return o.scale(&c);
        }
        if let Some(c) = o.constant_value() {
            return self.scale(&c);
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * o.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let p = ca * cb;
                acc.entry(ma.mul(*mb)).and_modify(|x| *x += &p).or_insert(p);
            }
        }
        MPoly::from_map(acc)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $f(self, o: MPoly) -> MPoly {
                (&self).$f(&o)
            }
        }
        impl<'a> $tr<&'a MPoly> for MPoly {
            type Output = MPoly;
            fn $f(self, o: &MPoly) -> MPoly {
                (&self).$f(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Plain-text rendering in the canonical expression grammar.
impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            let a = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !a.is_one() || m.is_one() {
                factors.push(a.to_string());
            }
            for v in Var::ALL {
                match m.exp(v) {
                    0 => {}
                    1 => factors.push(v.name().to_string()),
                    e => factors.push(format!("{}^{}", v.name(), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> MPoly {
        MPoly::var(Var::Z)
    }
    fn e() -> MPoly {
        MPoly::var(Var::E)
    }

    #[test]
    fn monomial_order_is_lex_with_z_first() {
        let z1 = Monomial::var(Var::Z, 1);
        let e5 = Monomial::var(Var::E, 5);
        assert!(z1 > e5);
        assert!(Monomial::var(Var::E, 1) > Monomial::var(Var::Nu, 9));
    }

    #[test]
    fn arithmetic_and_division() {
        let p = &(&z() + &e()) * &(&z() - &e());
        let q = &(&z() * &z()) - &(&e() * &e());
        assert_eq!(p, q);
        assert_eq!(q.div_exact(&(&z() - &e())), Some(&z() + &e()));
        assert_eq!(q.div_exact(&(&z() + &MPoly::int(1))), None);
    }

    #[test]
    fn coefficients_and_substitution() {
        let p = &(&z().pow(3) * &e()) + &MPoly::int(2);
        let cs = p.coeffs_in(Var::Z);
        assert_eq!(cs.len(), 4);
        assert_eq!(cs[3], e());
        assert_eq!(MPoly::from_coeffs_in(Var::Z, &cs), p);
        assert_eq!(p.subs(Var::E, &int(0)), MPoly::int(2));
        assert_eq!(p.subs_poly(Var::E, &z()), &z().pow(4) + &MPoly::int(2));
        assert_eq!(p.derivative(Var::Z), &z().pow(2) * &e().scale(&int(3)));
    }

    #[test]
    fn primitive_part() {
        let p = &z().scale(&rat(-4, 3)) + &MPoly::constant(rat(2, 9));
        let (c, pp) = p.primitive_int();
        assert_eq!(c, rat(-2, 9));
        assert_eq!(pp, &z().scale(&int(6)) - &MPoly::int(1));
    }

    #[test]
    fn display() {
        let p = &(&z().pow(2).scale(&int(2)) - &e()) + &MPoly::int(1);
        assert_eq!(p.to_string(), "2*z^2-E+1");
    }
}
