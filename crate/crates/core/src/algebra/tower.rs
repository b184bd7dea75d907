//! A differential tower over [`RatFun`] adjoining `ln z`, `√z`, `γ` (`γ² = −E`),
//! `s` (`s² = z + E`), `i` (`i² = −1`) and one exponential carrier `e^q`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::poly::{int, MPoly, Rational, Var};
use super::ratfun::RatFun;
use crate::error::{Error, Result};

/// Generator monomial `ln(z)^log · r^r · γ^gamma · s^s · i^i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Gens {
    pub log: u32,
    pub r: bool,
    pub gamma: bool,
    pub s: bool,
    pub i: bool,
}

impl Gens {
    pub const ONE: Gens = Gens { log: 0, r: false, gamma: false, s: false, i: false };
    pub const R: Gens = Gens { log: 0, r: true, gamma: false, s: false, i: false };
    pub const GAMMA: Gens = Gens { log: 0, r: false, gamma: true, s: false, i: false };
    pub const S: Gens = Gens { log: 0, r: false, gamma: false, s: true, i: false };
    pub const I: Gens = Gens { log: 0, r: false, gamma: false, s: false, i: true };

    pub fn log(k: u32) -> Gens {
        Gens { log: k, ..Gens::ONE }
    }

    /// Product of two generator monomials with the reduction factor produced
    /// by the algebraic relations.
    fn mul(self, o: Gens) -> (Gens, RatFun) {
        let mut factor = RatFun::one();
        if self.r && o.r {
            factor = &factor * &RatFun::z();
        }
        if self.gamma && o.gamma {
            factor = -&(&factor * &RatFun::e());
        }
        if self.s && o.s {
            factor = &factor * &(&RatFun::z() + &RatFun::e());
        }
        if self.i && o.i {
            factor = -factor;
        }
        let g = Gens {
            log: self.log + o.log,
            r: self.r ^ o.r,
            gamma: self.gamma ^ o.gamma,
            s: self.s ^ o.s,
            i: self.i ^ o.i,
        };
        (g, factor)
    }

    fn is_algebraic_free(&self) -> bool {
        !self.r && !self.gamma && !self.s && !self.i
    }
}

/// Finite sum `e^q · Σ c_g · g` with coefficients in [`RatFun`].
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TowerElem {
    terms: BTreeMap<Gens, RatFun>,
    carrier: Option<RatFun>,
}

impl TowerElem {
    pub fn zero() -> TowerElem {
        TowerElem::default()
    }

    pub fn one() -> TowerElem {
        TowerElem::from_ratfun(RatFun::one())
    }

    pub fn from_ratfun(c: RatFun) -> TowerElem {
        TowerElem::term(Gens::ONE, c)
    }

    pub fn term(g: Gens, c: RatFun) -> TowerElem {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(g, c);
        }
        TowerElem { terms, carrier: None }
    }

    pub fn gen(g: Gens) -> TowerElem {
        TowerElem::term(g, RatFun::one())
    }

    /// `e^q`.
    pub fn exp(q: RatFun) -> TowerElem {
        TowerElem::one().with_carrier(q)
    }

    pub fn with_carrier(mut self, q: RatFun) -> TowerElem {
        self.carrier = if q.is_zero() { None } else { Some(q) };
        self
    }

    pub fn carrier(&self) -> Option<&RatFun> {
        self.carrier.as_ref()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Gens, &RatFun)> {
        self.terms.iter()
    }

    pub fn coeff(&self, g: Gens) -> RatFun {
        self.terms.get(&g).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The underlying rational function when no generator or carrier occurs.
    pub fn as_ratfun(&self) -> Option<RatFun> {
        if self.carrier.is_some() && !self.is_zero() {
            return None;
        }
        match self.terms.len() {
            0 => Some(RatFun::zero()),
            1 => self.terms.get(&Gens::ONE).cloned(),
            _ => None,
        }
    }

    pub fn has_log(&self) -> bool {
        self.terms.keys().any(|g| g.log > 0)
    }

    pub fn map_coeffs<F: Fn(&RatFun) -> Result<RatFun>>(&self, f: F) -> Result<TowerElem> {
        let mut out = TowerElem { terms: BTreeMap::new(), carrier: None };
        for (g, c) in &self.terms {
            let v = f(c)?;
            if !v.is_zero() {
                out.terms.insert(*g, v);
            }
        }
        out.carrier = match &self.carrier {
            Some(q) => Some(f(q)?),
            None => None,
        };
        Ok(out)
    }

    pub fn scale(&self, c: &RatFun) -> TowerElem {
        if c.is_zero() {
            return TowerElem::zero();
        }
        TowerElem {
            terms: self.terms.iter().map(|(g, k)| (*g, k * c)).collect(),
            carrier: self.carrier.clone(),
        }
    }

    fn carriers_match(&self, o: &TowerElem) -> Result<Option<RatFun>> {
        if self.is_zero() {
            return Ok(o.carrier.clone());
        }
        if o.is_zero() {
            return Ok(self.carrier.clone());
        }
        if self.carrier == o.carrier {
            Ok(self.carrier.clone())
        } else {
            Err(Error::CarrierMismatch)
        }
    }

    pub fn try_add(&self, o: &TowerElem) -> Result<TowerElem> {
        let carrier = self.carriers_match(o)?;
        let mut terms = self.terms.clone();
        for (g, c) in &o.terms {
            let v = match terms.get(g) {
                Some(x) => x + c,
                None => c.clone(),
            };
            if v.is_zero() {
                terms.remove(g);
            } else {
                terms.insert(*g, v);
            }
        }
        let carrier = if terms.is_empty() { None } else { carrier };
        Ok(TowerElem { terms, carrier })
    }

    pub fn try_sub(&self, o: &TowerElem) -> Result<TowerElem> {
        self.try_add(&-o)
    }

    pub fn pow(&self, e: u32) -> TowerElem {
        let mut acc = TowerElem::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Derivation with respect to `z` or `E`.
    pub fn derivative(&self, v: Var) -> TowerElem {
        assert!(v == Var::Z || v == Var::E, "tower derivation is in z or E");
        let z = RatFun::z();
        let ze = &z + &RatFun::e();
        let mut out: BTreeMap<Gens, RatFun> = BTreeMap::new();
        let push = |out: &mut BTreeMap<Gens, RatFun>, g: Gens, c: RatFun| {
            if c.is_zero() {
                return;
            }
            let v = match out.get(&g) {
                Some(x) => x + &c,
                None => c,
            };
            if v.is_zero() {
                out.remove(&g);
            } else {
                out.insert(g, v);
            }
        };
        for (g, c) in &self.terms {
            push(&mut out, *g, c.derivative(v));
            // Logarithmic derivative of the algebraic part.
            let mut ld = RatFun::zero();
            if v == Var::Z {
                if g.r {
                    ld = &ld + &(&z.scale(&int(2))).inv().unwrap();
                }
                if g.log > 0 {
                    let lower = Gens { log: g.log - 1, ..*g };
                    push(&mut out, lower, &c.scale(&int(g.log as i64)) / &z);
                }
            } else if g.gamma {
                ld = &ld + &RatFun::e().scale(&int(2)).inv().unwrap();
            }
            if g.s {
                ld = &ld + &ze.scale(&int(2)).inv().unwrap();
            }
            if !ld.is_zero() {
                push(&mut out, *g, c * &ld);
            }
            if let Some(q) = &self.carrier {
                push(&mut out, *g, c * &q.derivative(v));
            }
        }
        let carrier = if out.is_empty() { None } else { self.carrier.clone() };
        TowerElem { terms: out, carrier }
    }

    /// Flips the sign of every term odd in the chosen algebraic generator.
    fn conjugate(&self, pick: fn(&Gens) -> bool) -> TowerElem {
        TowerElem {
            terms: self
                .terms
                .iter()
                .map(|(g, c)| (*g, if pick(g) { -c } else { c.clone() }))
                .collect(),
            carrier: self.carrier.clone(),
        }
    }

    /// Multiplicative inverse of a log-free element.
    pub fn inv(&self) -> Result<TowerElem> {
        if self.is_zero() {
            return Err(Error::NotInvertible("zero".into()));
        }
        if self.has_log() {
            return Err(Error::NotInvertible("element involves ln z".into()));
        }
        let picks: [fn(&Gens) -> bool; 4] = [|g| g.r, |g| g.gamma, |g| g.s, |g| g.i];
        let mut x = TowerElem { terms: self.terms.clone(), carrier: None };
        let mut num = TowerElem::one();
        for pick in picks {
            if x.terms.keys().any(pick) {
                let c = x.conjugate(pick);
                num = &num * &c;
                x = &x * &c;
            }
        }
        debug_assert!(x.terms.keys().all(|g| g.is_algebraic_free()));
        let base = x.as_ratfun().ok_or_else(|| Error::NotInvertible("norm".into()))?;
        let mut out = num.scale(&base.inv()?);
        out.carrier = self.carrier.as_ref().map(|q| -q);
        Ok(out)
    }

    pub fn try_div(&self, o: &TowerElem) -> Result<TowerElem> {
        Ok(self * &o.inv()?)
    }

    /// Logarithmic derivative `x'/x` in `v`.
    pub fn log_derivative(&self, v: Var) -> Result<TowerElem> {
        self.derivative(v).try_div(self)
    }

    pub fn eval_nu(&self, nu0: &Rational) -> Result<TowerElem> {
        self.map_coeffs(|c| c.eval_nu(nu0))
    }

    pub fn subs(&self, v: Var, value: &Rational) -> Result<TowerElem> {
        self.map_coeffs(|c| c.subs(v, value))
    }
}

impl<'a> Add<&'a TowerElem> for &'a TowerElem {
    type Output = TowerElem;
    /// Panics on a carrier mismatch; see [`TowerElem::try_add`].
    fn add(self, o: &TowerElem) -> TowerElem {
        self.try_add(o).expect("carrier mismatch")
    }
}

impl<'a> Sub<&'a TowerElem> for &'a TowerElem {
    type Output = TowerElem;
    fn sub(self, o: &TowerElem) -> TowerElem {
        self.try_sub(o).expect("carrier mismatch")
    }
}

impl<'a> Neg for &'a TowerElem {
    type Output = TowerElem;
    fn neg(self) -> TowerElem {
        TowerElem {
            terms: self.terms.iter().map(|(g, c)| (*g, -c)).collect(),
            carrier: self.carrier.clone(),
        }
    }
}

impl<'a> Mul<&'a TowerElem> for &'a TowerElem {
    type Output = TowerElem;
    fn mul(self, o: &TowerElem) -> TowerElem {
        if self.is_zero() || o.is_zero() {
            return TowerElem::zero();
        }
        let mut terms: BTreeMap<Gens, RatFun> = BTreeMap::new();
        for (ga, ca) in &self.terms {
            for (gb, cb) in &o.terms {
                let (g, f) = ga.mul(*gb);
                let c = &(ca * cb) * &f;
                let v = match terms.get(&g) {
                    Some(x) => x + &c,
                    None => c,
                };
                if v.is_zero() {
                    terms.remove(&g);
                } else {
                    terms.insert(g, v);
                }
            }
        }
        let carrier = match (&self.carrier, &o.carrier) {
            (None, None) => None,
            (Some(q), None) | (None, Some(q)) => Some(q.clone()),
            (Some(p), Some(q)) => Some(p + q).filter(|s| !s.is_zero()),
        };
        let carrier = if terms.is_empty() { None } else { carrier };
        TowerElem { terms, carrier }
    }
}

impl From<RatFun> for TowerElem {
    fn from(c: RatFun) -> TowerElem {
        TowerElem::from_ratfun(c)
    }
}

impl From<MPoly> for TowerElem {
    fn from(p: MPoly) -> TowerElem {
        TowerElem::from_ratfun(RatFun::from_poly(p))
    }
}

impl fmt::Display for TowerElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (g, c) in self.terms.iter().rev() {
            let mut factors = vec![format!("({})", c)];
            if g.log == 1 {
                factors.push("ln(z)".into());
            } else if g.log > 1 {
                factors.push(format!("ln(z)^{}", g.log));
            }
            if g.r {
                factors.push("sqrt(z)".into());
            }
            if g.gamma {
                factors.push("gamma".into());
            }
            if g.s {
                factors.push("s".into());
            }
            if g.i {
                factors.push("i".into());
            }
            parts.push(factors.join("*"));
        }
        let body = parts.join("+");
        match &self.carrier {
            Some(q) => write!(f, "exp({})*({})", q, body),
            None => write!(f, "{}", body),
        }
    }
}

impl fmt::Debug for TowerElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TowerElem({})", self)
    }
}
