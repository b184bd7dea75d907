//! Gauge transformations of Whittaker functions: `H`, the potential `V`, the
//! structure of `H`, and the exact Schrödinger residual.
//!
//! An eigenfunction is `ψ = P·(a·W(f) + b·W′(f))` where `W` solves
//! `y″ = (1/4 − μ/x − (1/4 − ν²)/x²)·y`. Derivatives are taken coordinate-wise
//! on `(a, b)`, with `ℓ = P′/P`.

use std::fmt;

use num_traits::Zero;

use crate::algebra::gcd::content_in;
use crate::algebra::{int, rat, Gens, MPoly, RatFun, Rational, TowerElem, UPoly, Var};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    C1,
    C2,
    C3,
    C4,
}

impl CaseTag {
    pub fn number(self) -> u8 {
        match self {
            CaseTag::C1 => 1,
            CaseTag::C2 => 2,
            CaseTag::C3 => 3,
            CaseTag::C4 => 4,
        }
    }

    pub fn from_number(n: u8) -> Option<CaseTag> {
        match n {
            1 => Some(CaseTag::C1),
            2 => Some(CaseTag::C2),
            3 => Some(CaseTag::C3),
            4 => Some(CaseTag::C4),
            _ => None,
        }
    }
}

/// One of the four eigenfunction shapes, with its index `ν`.
#[derive(Clone, Debug, PartialEq)]
pub struct GaugeCase {
    pub tag: CaseTag,
    pub nu: RatFun,
}

/// A gauge function, or the distinguished value `∞`.
#[derive(Clone, Debug, PartialEq)]
pub enum Gauge {
    Finite(RatFun),
    Infinite,
}

impl fmt::Display for Gauge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gauge::Finite(m) => write!(f, "{}", m),
            Gauge::Infinite => write!(f, "oo"),
        }
    }
}

/// `a·W + b·W′`.
#[derive(Clone, Debug, PartialEq)]
pub struct WPair {
    pub a: TowerElem,
    pub b: TowerElem,
}

fn t(x: RatFun) -> TowerElem {
    TowerElem::from(x)
}

fn z() -> RatFun {
    RatFun::z()
}

fn e() -> RatFun {
    RatFun::e()
}

fn ze() -> RatFun {
    &z() + &e()
}

impl GaugeCase {
    pub fn new(tag: CaseTag, nu: RatFun) -> GaugeCase {
        let nu = if tag == CaseTag::C4 { RatFun::constant(rat(1, 3)) } else { nu };
        GaugeCase { tag, nu }
    }

    fn alpha(&self) -> RatFun {
        &RatFun::constant(rat(1, 4)) - &self.nu.pow(2)
    }

    /// The pullback `f`.
    pub fn pullback(&self) -> TowerElem {
        match self.tag {
            CaseTag::C1 => t(z().pow(2)),
            CaseTag::C2 | CaseTag::C3 => TowerElem::term(Gens::GAMMA, z().scale(&int(2))),
            CaseTag::C4 => {
                // (4i/3)s³ = (4i/3)(z+E)s
                let g = Gens { s: true, i: true, ..Gens::ONE };
                TowerElem::term(g, ze().scale(&rat(4, 3)))
            }
        }
    }

    /// `μ` as a tower element.
    pub fn mu(&self) -> TowerElem {
        match self.tag {
            CaseTag::C1 => t(e().scale(&rat(1, 4))),
            // 1/(2γ) = −γ/(2E)
            CaseTag::C2 => TowerElem::term(Gens::GAMMA, -(e().scale(&int(2))).inv().unwrap()),
            CaseTag::C3 | CaseTag::C4 => TowerElem::zero(),
        }
    }

    /// `f′·(1/4 − μ/f − (1/4 − ν²)/f²)`.
    fn fprime_r(&self) -> TowerElem {
        let quarter = RatFun::constant(rat(1, 4));
        match self.tag {
            CaseTag::C1 => {
                let r = &(&quarter - &(&e() / &z().pow(2).scale(&int(4))))
                    - &(&self.alpha() / &z().pow(4));
                t(&z().scale(&int(2)) * &r)
            }
            CaseTag::C2 | CaseTag::C3 => {
                let four_ez = &e() * &z().scale(&int(4));
                let mut r = &quarter + &(&self.alpha() / &(&four_ez * &z()));
                if self.tag == CaseTag::C2 {
                    r = &r + &four_ez.inv().unwrap();
                }
                TowerElem::term(Gens::GAMMA, r.scale(&int(2)))
            }
            CaseTag::C4 => {
                let r = &quarter + &ze().pow(-3).scale(&rat(5, 64));
                TowerElem::term(Gens { s: true, i: true, ..Gens::ONE }, r.scale(&int(2)))
            }
        }
    }

    fn fprime(&self) -> TowerElem {
        self.pullback().derivative(Var::Z)
    }

    /// Prefactor log-derivative and coordinates before dividing by `√H`.
    fn shape(&self, m: &Gauge) -> (RatFun, WPair) {
        match m {
            Gauge::Infinite => {
                let l = match self.tag {
                    CaseTag::C1 => -(z().scale(&int(2))).inv().unwrap(),
                    CaseTag::C2 | CaseTag::C3 => RatFun::zero(),
                    CaseTag::C4 => -(ze().scale(&int(4))).inv().unwrap(),
                };
                (l, WPair { a: TowerElem::one(), b: TowerElem::zero() })
            }
            Gauge::Finite(m) => match self.tag {
                CaseTag::C1 => {
                    let l = z().scale(&rat(2, 3)).inv().unwrap();
                    (l, WPair { a: t(m / &z().scale(&int(2))), b: TowerElem::one() })
                }
                CaseTag::C2 | CaseTag::C3 => {
                    let a = TowerElem::term(Gens::GAMMA, -(m / &e().scale(&int(2))));
                    (z().inv().unwrap(), WPair { a, b: TowerElem::one() })
                }
                CaseTag::C4 => {
                    let inner = &(m * &ze()).scale(&rat(-1, 2)) + &RatFun::constant(rat(1, 8));
                    let a = TowerElem::term(
                        Gens { s: true, i: true, ..Gens::ONE },
                        &inner / &ze().pow(2),
                    );
                    (ze().scale(&int(4)).inv().unwrap(), WPair { a, b: TowerElem::one() })
                }
            },
        }
    }

    /// Derivative of `P·(a, b)` divided by `P`.
    fn step(&self, ell: &TowerElem, p: &WPair) -> WPair {
        let fr = self.fprime_r();
        let fp = self.fprime();
        WPair {
            a: &(&p.a.derivative(Var::Z) + &(ell * &p.a)) + &(&p.b * &fr),
            b: &(&p.b.derivative(Var::Z) + &(ell * &p.b)) + &(&p.a * &fp),
        }
    }
}

/// The expression under the square root.
pub fn h_of(case: &GaugeCase, m: &RatFun) -> RatFun {
    let dm = m.derivative(Var::Z);
    let z = z();
    let z2 = z.pow(2);
    let four_nu2 = case.nu.pow(2).scale(&int(4));
    let one = RatFun::one();
    match case.tag {
        CaseTag::C1 => {
            let s = &(&(&(&m.pow(2) * &z2) + &(m * &z)) - &(&dm * &z2)) - &z2.pow(2);
            &(&(&s + &(&z2 * &e())) - &four_nu2) + &one
        }
        CaseTag::C2 | CaseTag::C3 => {
            let s = &(&(&m.pow(2) + &e()) - &dm) * &z2.scale(&int(4));
            let s = &(&s - &four_nu2) + &one;
            if case.tag == CaseTag::C2 {
                &s + &z.scale(&int(4))
            } else {
                s
            }
        }
        CaseTag::C4 => &(&(&m.pow(2) + &e()) - &dm) + &z,
    }
}

/// `H′/H`, dropping any factor constant in `z` first.
fn h_log_derivative(h: &RatFun) -> RatFun {
    let strip = |p: &MPoly| -> RatFun {
        let c = content_in(p, Var::Z);
        let q = if c.is_zero() { p.clone() } else { p.div_exact(&c).unwrap() };
        let q = RatFun::from_poly(q);
        &q.derivative(Var::Z) / &q
    };
    &strip(h.num()) - &strip(h.den())
}

/// The coordinates of `ψ` and `ℓ = (prefactor)′/(prefactor)`.
pub fn psi_coordinates(case: &GaugeCase, m: &Gauge) -> Result<(TowerElem, WPair)> {
    let (l0, pair) = case.shape(m);
    let ell = match m {
        Gauge::Infinite => l0,
        Gauge::Finite(mm) => {
            let h = h_of(case, mm);
            if h.is_zero() {
                return Err(Error::Invalid("H vanishes identically".into()));
            }
            &l0 - &h_log_derivative(&h).scale(&rat(1, 2))
        }
    };
    Ok((t(ell), pair))
}

/// `ψ″ = P·(second derivative coordinates)`.
pub fn second_derivative(case: &GaugeCase, m: &Gauge) -> Result<(WPair, WPair)> {
    let (ell, pair) = psi_coordinates(case, m)?;
    let d1 = case.step(&ell, &pair);
    let d2 = case.step(&ell, &d1);
    Ok((pair, d2))
}

/// Reconstructs `V` from `−ψ″/ψ − E`; it must be free of `E` and of the
/// algebraic generators.
pub fn v_of(case: &GaugeCase, m: &Gauge) -> Result<RatFun> {
    let (pair, d2) = second_derivative(case, m)?;
    if &d2.a * &pair.b != &d2.b * &pair.a {
        return Err(Error::InconsistentRatio);
    }
    let ratio = if !pair.a.is_zero() { d2.a.try_div(&pair.a)? } else { d2.b.try_div(&pair.b)? };
    let ve = ratio
        .as_ratfun()
        .ok_or_else(|| Error::EDependentPotential(format!("{}", ratio)))?;
    let v = -&(&ve + &e());
    if v.contains(Var::E) {
        return Err(Error::EDependentPotential(v.to_string()));
    }
    Ok(v)
}

/// `ψ″ + (V + E)ψ` in coordinates; `None` when identically zero, else the
/// first nonzero coordinate.
pub fn ode_residual_generic(case: &GaugeCase, m: &Gauge, v: &RatFun) -> Result<Option<TowerElem>> {
    let (pair, d2) = second_derivative(case, m)?;
    let k = t(v + &e());
    let ra = &d2.a + &(&k * &pair.a);
    if !ra.is_zero() {
        return Ok(Some(ra));
    }
    let rb = &d2.b + &(&k * &pair.b);
    if !rb.is_zero() {
        return Ok(Some(rb));
    }
    Ok(None)
}

/// Factorization `H = w(E)·P(z)/Q(z, E)` with the roots of `w`.
#[derive(Clone, Debug, PartialEq)]
pub struct HStructure {
    pub w: MPoly,
    pub p: MPoly,
    pub q: MPoly,
    pub roots: Vec<(RatFun, usize)>,
    /// Factor of `w` left after extracting the roots found.
    pub leftover: MPoly,
}

impl HStructure {
    pub fn w_degree(&self) -> usize {
        self.w.degree(Var::E) as usize
    }
}

/// Splits the numerator of `H` and checks the degree bound against `M`.
pub fn check_h_structure(h: &RatFun, m: &RatFun, hints: &[RatFun]) -> Result<HStructure> {
    let n = h.num();
    let w = content_in(n, Var::Z);
    let n1 = n.div_exact(&w).unwrap();
    let p = content_in(&n1, Var::E);
    let rest = n1.div_exact(&p).unwrap();
    if rest.contains(Var::Z) || rest.contains(Var::E) {
        return Err(Error::MixedFactor(rest.to_string()));
    }
    // Fold the scalar left over into P.
    let p = &p * &rest;
    let wdeg = w.degree(Var::E) as usize;
    let bound = (m.num().degree(Var::E) + m.den().degree(Var::E)) as usize + 1;
    if wdeg < bound {
        return Err(Error::DegreeBoundViolated { w: wdeg, bound });
    }
    let (roots, leftover) = roots_in_e(&w, hints);
    Ok(HStructure { w, p, q: h.den().clone(), roots, leftover })
}

/// Roots of `w` in `E` over the coefficient field, found among the hints, as
/// the root of a linear leftover, or by a rational root search.
pub fn roots_in_e(w: &MPoly, hints: &[RatFun]) -> (Vec<(RatFun, usize)>, MPoly) {
    let mut poly = UPoly::from_mpoly(w, Var::E);
    let mut roots: Vec<(RatFun, usize)> = Vec::new();
    let push = |roots: &mut Vec<(RatFun, usize)>, r: RatFun| {
        if let Some(x) = roots.iter_mut().find(|(x, _)| *x == r) {
            x.1 += 1;
        } else {
            roots.push((r, 1));
        }
    };
    let mut candidates: Vec<RatFun> = hints.to_vec();
    candidates.push(RatFun::zero());
    let divide_out = |poly: &mut UPoly<RatFun>, r: &RatFun| -> bool {
        if poly.degree() == 0 || !poly.eval(r).is_zero() {
            return false;
        }
        let lin = UPoly::new(vec![-r, RatFun::one()]);
        *poly = poly.div_rem(&lin).0;
        true
    };
    for c in &candidates {
        while divide_out(&mut poly, c) {
            push(&mut roots, c.clone());
        }
    }
    loop {
        if poly.degree() == 1 {
            let c = poly.coeffs();
            let r = -(&c[0] / &c[1]);
            poly = UPoly::constant(c[1].clone());
            push(&mut roots, r);
            break;
        }
        match rational_root(&poly) {
            Some(r) => {
                while divide_out(&mut poly, &r) {
                    push(&mut roots, r.clone());
                }
            }
            None => break,
        }
    }
    let leftover = poly.to_ratfun(Var::E);
    let leftover = (&leftover * &RatFun::from_poly(leftover.den().clone())).num().clone();
    (roots, leftover)
}

fn rational_root(poly: &UPoly<RatFun>) -> Option<RatFun> {
    if poly.degree() < 1 {
        return None;
    }
    let c: Vec<Rational> = poly.coeffs().iter().map(|x| x.constant_value()).collect::<Option<_>>()?;
    let lcm = c.iter().fold(num_bigint::BigInt::from(1), |acc, x| {
        num_integer::Integer::lcm(&acc, x.denom())
    });
    let ints: Vec<num_bigint::BigInt> =
        c.iter().map(|x| (x * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let low = ints.iter().position(|x| !x.is_zero())?;
    if low > 0 {
        return Some(RatFun::zero());
    }
    let a0 = ints[0].clone();
    let an = ints.last().unwrap().clone();
    let limit = num_bigint::BigInt::from(1_000_000_000_000i64);
    if num_traits::Signed::abs(&a0) > limit || num_traits::Signed::abs(&an) > limit {
        return None;
    }
    let divisors = |n: &num_bigint::BigInt| -> Vec<num_bigint::BigInt> {
        let n = num_traits::Signed::abs(n);
        let mut out = Vec::new();
        let mut d = num_bigint::BigInt::from(1);
        while &d * &d <= n {
            if (&n % &d).is_zero() {
                out.push(d.clone());
                out.push(&n / &d);
            }
            d += 1;
        }
        out
    };
    for p in divisors(&a0) {
        for q in divisors(&an) {
            for s in [1i64, -1] {
                let r = Rational::new(&p * s, q.clone());
                let x = RatFun::constant(r);
                if poly.eval(&x).is_zero() {
                    return Some(x);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singular_potentials() {
        let nu = RatFun::nu();
        let alpha = &RatFun::constant(rat(1, 4)) - &nu.pow(2);
        let c3 = GaugeCase::new(CaseTag::C3, nu.clone());
        assert_eq!(v_of(&c3, &Gauge::Infinite).unwrap(), &alpha / &z().pow(2));
        let c2 = GaugeCase::new(CaseTag::C2, nu.clone());
        assert_eq!(
            v_of(&c2, &Gauge::Infinite).unwrap(),
            &z().inv().unwrap() + &(&alpha / &z().pow(2))
        );
        let c1 = GaugeCase::new(CaseTag::C1, nu.clone());
        let expected = &(-z().pow(2))
            + &(&(&RatFun::constant(rat(1, 4)) - &nu.pow(2).scale(&int(4))) / &z().pow(2));
        assert_eq!(v_of(&c1, &Gauge::Infinite).unwrap(), expected);
        let c4 = GaugeCase::new(CaseTag::C4, nu);
        assert_eq!(v_of(&c4, &Gauge::Infinite).unwrap(), z());
    }

    #[test]
    fn continuous_log_example() {
        let b = RatFun::var(Var::B);
        let m = &(&(&(&e() * &z().pow(2)).scale(&int(2)) + &(&e() * &b)) - &RatFun::int(2))
            / &z().scale(&int(4));
        let case = GaugeCase::new(CaseTag::C3, RatFun::zero());
        let h = h_of(&case, &m);
        let expected = (&e().pow(2) * &(&z().pow(2).scale(&int(2)) + &b).pow(2)).scale(&rat(1, 4));
        assert_eq!(h, expected);
        let v = v_of(&case, &Gauge::Finite(m.clone())).unwrap();
        let q = &z().pow(2).scale(&int(2)) + &b;
        let expected_v = &(&z().pow(2).scale(&int(4)).inv().unwrap() - &(&RatFun::int(8) / &q))
            + &(&b.scale(&int(16)) / &q.pow(2));
        assert_eq!(v, expected_v);
        assert_eq!(ode_residual_generic(&case, &Gauge::Finite(m.clone()), &v).unwrap(), None);
        let bad = &v + &z().inv().unwrap();
        assert!(ode_residual_generic(&case, &Gauge::Finite(m), &bad).unwrap().is_some());
    }

    #[test]
    fn roots_with_hints() {
        let e = MPoly::var(Var::E);
        let w = &(&e - &MPoly::int(3)) * &(&e.scale(&int(4)) + &MPoly::int(1)).pow(2);
        let (roots, left) = roots_in_e(&w, &[]);
        assert!(left.is_constant());
        assert!(roots.contains(&(RatFun::int(3), 1)));
        assert!(roots.contains(&(RatFun::constant(rat(-1, 4)), 2)));
    }
}
