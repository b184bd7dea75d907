//! Candidate energies, closed-form eigenfunctions `e^q·z^g·N/S`, and square
//! integrability on ℝ, ℝ⁺, ℝ⁻.

use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::gcd::content_in;
use crate::algebra::linalg::nullspace;
use crate::algebra::{int, rat, Gens, MPoly, RatFun, Rational, TowerElem, UPoly, Var};
use crate::error::{Error, Result};
use crate::families::{Family, PotentialResult};
use crate::gauge::{psi_coordinates, CaseTag, Gauge};
use crate::seeds::{NodeSpec1, NodeSpec2, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Interval {
    R,
    RPlus,
    RMinus,
}

impl Interval {
    pub fn parse(s: &str) -> Option<Interval> {
        match s {
            "R" => Some(Interval::R),
            "R+" => Some(Interval::RPlus),
            "R-" => Some(Interval::RMinus),
            _ => None,
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Interval::R => "R",
            Interval::RPlus => "R+",
            Interval::RMinus => "R-",
        })
    }
}

/// A candidate energy with the node labels producing it.
#[derive(Clone, Debug, PartialEq)]
pub struct Candidate {
    pub e0: Rational,
    pub sources: Vec<String>,
    /// `E₀` is a root of `w`, where the gauge formula degenerates.
    pub degenerate: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct L2Flags {
    pub real_line: bool,
    pub positive: bool,
    pub negative: bool,
}

impl L2Flags {
    pub fn get(&self, i: Interval) -> bool {
        match i {
            Interval::R => self.real_line,
            Interval::RPlus => self.positive,
            Interval::RMinus => self.negative,
        }
    }
}

/// `ψ = e^q · z^g · r` with `ψ″ + (V + E₀)ψ = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenPair {
    pub e0: Rational,
    pub q: RatFun,
    pub g: Rational,
    pub r: RatFun,
    pub l2: L2Flags,
}

impl EigenPair {
    /// `ψ` as a tower element when `g` is a half-integer.
    pub fn psi(&self) -> Option<TowerElem> {
        let two_g = &self.g * int(2);
        if !two_g.is_integer() {
            return None;
        }
        let half = !(&self.g).is_integer();
        let whole = if half { &self.g - rat(1, 2) } else { self.g.clone() }.to_integer().to_i32()?;
        let mut y = TowerElem::from(&self.r * &RatFun::z().pow(whole));
        if half {
            y = &y * &TowerElem::gen(Gens::R);
        }
        Some(y.with_carrier(self.q.clone()))
    }

    pub fn psi_string(&self) -> String {
        let mut parts = Vec::new();
        if !self.q.is_zero() {
            parts.push(format!("exp({})", self.q));
        }
        if !self.g.is_zero() {
            if self.g.is_integer() {
                parts.push(format!("z^{}", self.g));
            } else {
                parts.push(format!("z^({})", self.g));
            }
        }
        parts.push(format!("({})", self.r));
        parts.join("*")
    }
}

pub fn numeric_nu(result: &PotentialResult) -> Result<Rational> {
    result.nu().constant_value().ok_or(Error::SymbolicNu)
}

/// Node energies with `k ≤ bound`, sorted and merged.
pub fn enumerate_candidates(result: &PotentialResult, bound: u32) -> Result<Vec<Candidate>> {
    let nu = numeric_nu(result)?;
    let mut raw: Vec<(Rational, String)> = Vec::new();
    match result.family {
        Family::F1 | Family::Singular(CaseTag::C1) => {
            for k in 0..=bound {
                for eps1 in Sign::both() {
                    for eps2 in Sign::both() {
                        let e = int(eps1.value() * (4 * k as i64 + 2)) + int(4 * eps2.value()) * &nu;
                        raw.push((e, NodeSpec1 { k, eps1, eps2 }.to_string()));
                    }
                }
            }
        }
        Family::F2 | Family::Singular(CaseTag::C2) => {
            for k in 0..=bound {
                for eps in Sign::both() {
                    let m = int(2 * eps.value()) * &nu + int(2 * k as i64 + 1);
                    if m.is_zero() {
                        continue;
                    }
                    raw.push((-(m.clone() * m).recip(), NodeSpec2 { k, eps }.to_string()));
                }
            }
        }
        _ => return Err(Error::Invalid("potential has no discrete candidate set".into())),
    }
    raw.sort_by(|a, b| a.0.cmp(&b.0));
    let w = result.structure.as_ref().map(|s| s.w.clone());
    let mut out: Vec<Candidate> = Vec::new();
    for (e, src) in raw {
        match out.last_mut() {
            Some(c) if c.e0 == e => c.sources.push(src),
            _ => {
                let degenerate = w.as_ref().is_some_and(|w| w.subs(Var::E, &e).is_zero());
                out.push(Candidate { e0: e, sources: vec![src], degenerate });
            }
        }
    }
    Ok(out)
}

fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

fn upoly_q(p: &MPoly) -> Result<UPoly<Rational>> {
    UPoly::from_mpoly_rational(p, Var::Z)
        .ok_or_else(|| Error::Invalid(format!("{} has symbolic coefficients", p)))
}

fn mpoly_from(p: &UPoly<Rational>) -> MPoly {
    MPoly::univariate(Var::Z, p.coeffs())
}

/// Roots of `ρ² − ρ + c`, larger first.
fn exponents(c: &Rational) -> Option<(Rational, Rational)> {
    let s = rational_sqrt(&(int(1) - int(4) * c))?;
    let half = rat(1, 2);
    Some((&half * (int(1) + &s), &half * (int(1) - &s)))
}

/// Local data of `V`: exponents at 0 and the fixed denominator `S`.
struct PoleData {
    g_choices: Vec<Rational>,
    s: MPoly,
}

fn pole_data(v: &RatFun) -> Result<Option<PoleData>> {
    let vn = upoly_q(v.num())?;
    let vd_m = v.den();
    let m0 = vd_m.low_degree(Var::Z);
    if m0 > 2 {
        return Ok(None);
    }
    let shifted = MPoly::from_terms(
        vd_m.terms().iter().map(|(m, c)| (m.div(crate::algebra::Monomial::var(Var::Z, m0)).unwrap(), c.clone())),
    );
    let rest = upoly_q(&shifted)?;
    let alpha0 = if m0 == 2 { vn.eval(&int(0)) / rest.eval(&int(0)) } else { Rational::zero() };
    let Some((rp, rm)) = exponents(&alpha0) else { return Ok(None) };
    let g_choices = if (&rp - &rm).is_integer() { vec![rm] } else { vec![rp, rm] };

    let zm0 = UPoly::new(vec![Rational::zero(), Rational::one()]).pow(m0 as usize);
    let mut s = MPoly::one();
    for (f, mult) in rest.squarefree() {
        match mult {
            1 => {}
            2 => {
                // c ≡ Vn / (z^{m0}·f′²·t) mod f where den = z^{m0}·f²·t.
                let t = rest.div_rem(&f.pow(2)).0;
                let df = f.derivative();
                let d = zm0.mul(&df).mul(&df).mul(&t);
                let (g, inv, _) = d.ext_gcd(&f);
                if g.degree() != 0 {
                    return Ok(None);
                }
                let c = vn.mul(&inv).rem(&f);
                if c.degree() > 0 {
                    return Ok(None);
                }
                let c = c.coeffs().first().cloned().unwrap_or_default();
                let Some((_, low)) = exponents(&c) else { return Ok(None) };
                if !low.is_integer() {
                    return Ok(None);
                }
                if low.is_negative() {
                    let e = (-low).to_integer().to_u32().unwrap();
                    s = &s * &mpoly_from(&f).pow(e);
                }
            }
            _ => return Ok(None),
        }
    }
    let s = s.primitive_int().1;
    Ok(Some(PoleData { g_choices, s }))
}

fn coeff_vec(p: &MPoly) -> Vec<Rational> {
    p.coeffs_in(Var::Z).into_iter().map(|c| c.constant_value().unwrap()).collect()
}

/// Polynomial `N` solving `A N″ + B N′ + C N = 0`, searching degrees up to `cap`.
fn polynomial_solution(a: &MPoly, b: &MPoly, c: &MPoly, cap: usize) -> Result<Option<MPoly>> {
    let av = coeff_vec(a);
    let bv = coeff_vec(b);
    let cv = coeff_vec(c);
    let deg = |v: &[Rational], p: &MPoly, shift: i64| -> i64 {
        if p.is_zero() {
            i64::MIN / 4
        } else {
            v.len() as i64 - 1 - shift
        }
    };
    let delta = deg(&av, a, 2).max(deg(&bv, b, 1)).max(deg(&cv, c, 0));
    let at = |v: &[Rational], i: i64| -> Rational {
        if i < 0 {
            Rational::zero()
        } else {
            v.get(i as usize).cloned().unwrap_or_default()
        }
    };
    // Leading balance: A_{δ+2} d(d−1) + B_{δ+1} d + C_δ = 0.
    let k2 = at(&av, delta + 2);
    let k1 = &at(&bv, delta + 1) - &k2;
    let k0 = at(&cv, delta);
    let top = UPoly::new(vec![k0, k1, k2]);
    let dmax = if top.is_zero() {
        cap
    } else {
        let mut best: Option<usize> = None;
        let upper = cap.max(64) * 4;
        for d in 0..=upper {
            if top.eval(&int(d as i64)).is_zero() {
                best = Some(d);
            }
        }
        match best {
            None => return Ok(None),
            Some(d) if d > cap => return Err(Error::DegreeCapExceeded { needed: d, cap }),
            Some(d) => d,
        }
    };
    let z = MPoly::var(Var::Z);
    let images: Vec<MPoly> = (0..=dmax)
        .map(|j| {
            let n = z.pow(j as u32);
            let n1 = n.derivative(Var::Z);
            let n2 = n1.derivative(Var::Z);
            &(&(a * &n2) + &(b * &n1)) + &(c * &n)
        })
        .collect();
    let rows_n = images.iter().map(|p| p.degree(Var::Z) as usize + 1).max().unwrap_or(1);
    let rows: Vec<Vec<Rational>> = (0..rows_n)
        .map(|i| images.iter().map(|p| p.coeff(crate::algebra::Monomial::var(Var::Z, i as u32))).collect())
        .collect();
    let ns = nullspace(&rows, dmax + 1);
    Ok(ns.first().map(|v| MPoly::univariate(Var::Z, v)))
}

/// Exact check of `ψ″ + (V + E₀)ψ = 0` for a stored pair.
pub fn verify_eigenpair(v: &RatFun, pair: &EigenPair) -> bool {
    !pair.r.is_zero() && check_eigen(v, &pair.e0, &pair.q, &pair.g, &pair.r)
}

fn check_eigen(v: &RatFun, e0: &Rational, q: &RatFun, g: &Rational, r: &RatFun) -> bool {
    let z = RatFun::z();
    let lam = &(&q.derivative(Var::Z) + &(&RatFun::constant(g.clone()) / &z))
        + &(&r.derivative(Var::Z) / r);
    let lhs = &(&(&lam.derivative(Var::Z) + &(&lam * &lam)) + v) + &RatFun::constant(e0.clone());
    lhs.is_zero()
}

/// Exponential factors to try, decaying ones first.
fn carriers(result: &PotentialResult, e0: &Rational) -> Vec<RatFun> {
    let z = RatFun::z();
    match result.family {
        Family::F1 | Family::Singular(CaseTag::C1) => {
            let q = z.pow(2).scale(&rat(1, 2));
            vec![-&q, q]
        }
        Family::F2 | Family::Singular(CaseTag::C2) => match rational_sqrt(&-e0.clone()) {
            Some(k) if !k.is_zero() => vec![z.scale(&-k.clone()), z.scale(&k)],
            _ => vec![],
        },
        _ => vec![],
    }
}

/// Searches a closed-form eigenfunction at `E₀` with numerator degree ≤ `cap`.
pub fn liouvillian_eigenfunction(result: &PotentialResult, e0: &Rational, cap: usize) -> Result<EigenPair> {
    numeric_nu(result)?;
    let v = &result.v;
    let Some(poles) = pole_data(v)? else {
        return Err(Error::NoSolution(e0.to_string()));
    };
    let z = RatFun::z();
    let s = RatFun::from_poly(poles.s.clone());
    let mut cap_error: Option<Error> = None;
    for q in carriers(result, e0) {
        for g in &poles.g_choices {
            let phi = &(&q.derivative(Var::Z) + &(&RatFun::constant(g.clone()) / &z))
                - &(&s.derivative(Var::Z) / &s);
            let k = &(&(&phi.derivative(Var::Z) + &(&phi * &phi)) + v) + &RatFun::constant(e0.clone());
            let l = crate::algebra::lcm(phi.den(), k.den());
            let lr = RatFun::from_poly(l.clone());
            let b = (&phi.scale(&int(2)) * &lr).num().clone();
            let c = (&k * &lr).num().clone();
            match polynomial_solution(&l, &b, &c, cap) {
                Ok(Some(n)) => {
                    let (_, n) = n.primitive_int();
                    let r = &RatFun::from_poly(n) / &s;
                    if !check_eigen(v, e0, &q, g, &r) {
                        return Err(Error::Invalid("eigenfunction check failed".into()));
                    }
                    let mut pair = EigenPair { e0: e0.clone(), q: q.clone(), g: g.clone(), r, l2: L2Flags::default() };
                    pair.l2 = L2Flags {
                        real_line: square_integrable(&pair, Interval::R)?,
                        positive: square_integrable(&pair, Interval::RPlus)?,
                        negative: square_integrable(&pair, Interval::RMinus)?,
                    };
                    return Ok(pair);
                }
                Ok(None) => {}
                Err(e @ Error::DegreeCapExceeded { .. }) => cap_error = Some(e),
                Err(e) => return Err(e),
            }
        }
    }
    Err(cap_error.unwrap_or_else(|| Error::NoSolution(e0.to_string())))
}

/// Decides `∫|ψ|² < ∞` on the interval from the closed form.
pub fn square_integrable(psi: &EigenPair, interval: Interval) -> Result<bool> {
    let qn = upoly_q(psi.q.num())?;
    if !psi.q.den().is_constant() {
        return Err(Error::Invalid("exponential factor must be polynomial".into()));
    }
    let qd = psi.q.den().constant_value().unwrap();
    let deg_q = qn.degree();
    let lead = qn.lc() / &qd;
    let decays = |plus: bool| -> bool {
        if deg_q == 0 || qn.is_zero() {
            // Algebraic decay: total degree below −1/2.
            let d = &psi.g + int(psi.r.num().degree(Var::Z) as i64) - int(psi.r.den().degree(Var::Z) as i64);
            return d < rat(-1, 2);
        }
        let sign = if plus || deg_q % 2 == 0 { lead.clone() } else { -lead.clone() };
        sign.is_negative()
    };
    let (left, right) = match interval {
        Interval::R => (true, true),
        Interval::RPlus => (false, true),
        Interval::RMinus => (true, false),
    };
    if (right && !decays(true)) || (left && !decays(false)) {
        return Ok(false);
    }
    // Real poles of r away from 0.
    let den = psi.r.den();
    let z0 = den.low_degree(Var::Z);
    let den_nz = MPoly::from_terms(
        den.terms().iter().map(|(m, c)| (m.div(crate::algebra::Monomial::var(Var::Z, z0)).unwrap(), c.clone())),
    );
    let d = upoly_q(&den_nz)?;
    let zero = int(0);
    let poles = match interval {
        Interval::R => d.count_real_roots(None, None),
        Interval::RPlus => d.count_real_roots(Some(&zero), None),
        Interval::RMinus => d.count_real_roots(None, Some(&zero)),
    };
    if poles > 0 {
        return Ok(false);
    }
    let ord0 = int(psi.r.num().low_degree(Var::Z) as i64) - int(z0 as i64);
    Ok(int(2) * (&psi.g + ord0) > int(-1))
}

/// Outcome of a spectrum computation.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumReport {
    pub candidates: Vec<Candidate>,
    /// Closed-form solutions square integrable on `interval`.
    pub eigenpairs: Vec<EigenPair>,
    /// Closed-form solutions that are not.
    pub non_normalizable: Vec<EigenPair>,
    pub failures: Vec<(Rational, String)>,
    /// Set for continuous-type potentials, where no enumeration happens.
    pub continuous: bool,
    pub interval: Interval,
}

pub const CONTINUOUS_NOTE: &str =
    "isomonodromic in E; any natural boundary condition yields an empty or full spectrum";

pub fn default_cap(bound: u32) -> usize {
    2 * bound as usize + 8
}

pub fn compute_spectrum(result: &PotentialResult, bound: u32, interval: Interval) -> Result<SpectrumReport> {
    let mut report = SpectrumReport {
        candidates: vec![],
        eigenpairs: vec![],
        non_normalizable: vec![],
        failures: vec![],
        continuous: !result.family.is_discrete(),
        interval,
    };
    if report.continuous {
        return Ok(report);
    }
    let candidates = enumerate_candidates(result, bound)?;
    let cap = default_cap(bound);
    for c in &candidates {
        match liouvillian_eigenfunction(result, &c.e0, cap) {
            Ok(p) if p.l2.get(interval) => report.eigenpairs.push(p),
            Ok(p) => report.non_normalizable.push(p),
            Err(e @ (Error::NoSolution(_) | Error::DegreeCapExceeded { .. })) => {
                report.failures.push((c.e0.clone(), e.to_string()))
            }
            Err(e) => return Err(e),
        }
    }
    report.candidates = candidates;
    Ok(report)
}

/// Square root of the `z`-dependent part of `p`, when every factor has even
/// multiplicity.
fn sqrt_z_part(p: &MPoly) -> Option<MPoly> {
    let c = content_in(p, Var::Z);
    let p = p.div_exact(&c).unwrap();
    if !p.contains(Var::Z) {
        return Some(MPoly::one());
    }
    let u = UPoly::from_mpoly(&p, Var::Z);
    let mut out = RatFun::one();
    for (f, m) in u.squarefree() {
        if m % 2 == 1 {
            return None;
        }
        out = &out * &f.to_ratfun(Var::Z).pow((m / 2) as i32);
    }
    let out = &out * &RatFun::from_poly(out.den().clone());
    Some(out.num().primitive_int().1)
}

/// For the polynomial family, the eigenfunction at generic `E` is
/// `e^{γz}·u` with `γ² = −E`; returns `u` up to a factor constant in `z`.
pub fn continuous_eigenfunction(result: &PotentialResult) -> Result<TowerElem> {
    if result.family != Family::F3Poly {
        return Err(Error::Invalid("closed-form generic eigenfunctions exist for the polynomial family".into()));
    }
    let Gauge::Finite(_) = &result.m else {
        return Err(Error::Invalid("finite gauge expected".into()));
    };
    let h = result.h.as_ref().unwrap();
    let (_, pair) = psi_coordinates(&result.case, &result.m)?;
    let sn = sqrt_z_part(h.num()).ok_or_else(|| Error::NoSolution("sqrt H".into()))?;
    let sd = sqrt_z_part(h.den()).ok_or_else(|| Error::NoSolution("sqrt H".into()))?;
    let pref = &(&RatFun::z() * &RatFun::from_poly(sd)) / &RatFun::from_poly(sn);
    // W(x) = e^{x/2}: W′ = W/2.
    let combo = &pair.a + &pair.b.scale(&rat(1, 2).into());
    let u = combo.scale(&pref);
    let gamma = TowerElem::gen(Gens::GAMMA);
    let du = u.derivative(Var::Z);
    let res = &(&du.derivative(Var::Z) + &(&gamma * &du).scale(&RatFun::int(2)))
        + &u.scale(&result.v);
    if !res.is_zero() {
        return Err(Error::Invalid("generic eigenfunction check failed".into()));
    }
    Ok(u)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_family1, gen_family2};

    fn anharmonic() -> PotentialResult {
        let node = NodeSpec1 { k: 1, eps1: Sign::Plus, eps2: Sign::Plus };
        gen_family1(&[node], &RatFun::nu()).unwrap().eval_nu(&rat(-3, 4)).unwrap()
    }

    fn zpoly(c: &[i64]) -> RatFun {
        RatFun::from_poly(MPoly::univariate(Var::Z, &c.iter().map(|&x| int(x)).collect::<Vec<_>>()))
    }

    #[test]
    fn anharmonic_spectrum() {
        let r = anharmonic();
        let rep = compute_spectrum(&r, 3, Interval::R).unwrap();
        let s = zpoly(&[1, 0, 2]);
        let table: Vec<(i64, RatFun)> = vec![
            (-1, RatFun::one()),
            (5, zpoly(&[0, 3, 0, 2])),
            (7, zpoly(&[-1, 0, 4, 0, 4])),
            (9, zpoly(&[0, -5, 0, 0, 0, 4])),
            (11, zpoly(&[3, 0, -18, 0, -12, 0, 8])),
            (13, zpoly(&[0, 21, 0, -14, 0, -28, 0, 8])),
        ];
        for (e, n) in table {
            let p = rep.eigenpairs.iter().find(|p| p.e0 == int(e)).expect("missing eigenpair");
            assert_eq!(p.q, RatFun::z().pow(2).scale(&rat(-1, 2)));
            assert!(p.g.is_zero());
            assert_eq!(p.r, &n / &s);
            assert!(p.l2.real_line);
        }
        for e in [1, 3] {
            assert!(!rep.eigenpairs.iter().any(|p| p.e0 == int(e)));
        }
        let c3 = rep.candidates.iter().find(|c| c.e0 == int(3)).unwrap();
        assert!(c3.degenerate);
    }

    #[test]
    fn fusion_spectrum() {
        let nodes = [NodeSpec2 { k: 0, eps: Sign::Minus }, NodeSpec2 { k: 1, eps: Sign::Plus }];
        let r = gen_family2(&nodes, &RatFun::nu()).unwrap().eval_nu(&rat(-1, 2)).unwrap();
        let rep = compute_spectrum(&r, 4, Interval::RPlus).unwrap();
        let all: Vec<EigenPair> = rep.eigenpairs.iter().chain(&rep.non_normalizable).cloned().collect();
        let get = |e: Rational| all.iter().find(|p| p.e0 == e).cloned().unwrap();
        let s = zpoly(&[2, 2, 1]);
        let p = get(rat(-1, 4));
        assert_eq!(p.r, &RatFun::z() / &s);
        assert_eq!(p.l2, L2Flags { real_line: false, positive: false, negative: true });
        let expect = [
            (16, zpoly(&[0, 24, 18, 6, 1])),
            (36, zpoly(&[0, -216, -144, -40, -4, 1])),
            (64, zpoly(&[0, 5120, 3200, 800, 50, -30, 1])),
        ];
        for (d, n) in expect {
            let p = get(rat(-1, d));
            assert_eq!(p.r, &n / &s);
            assert_eq!(p.l2, L2Flags { real_line: false, positive: true, negative: false });
        }
        assert!(!rep.eigenpairs.iter().any(|p| p.e0 == rat(-1, 4)));
        let on_r = compute_spectrum(&r, 4, Interval::R).unwrap();
        assert!(on_r.eigenpairs.is_empty());
    }

    #[test]
    fn symbolic_nu_rejected() {
        let node = NodeSpec1 { k: 0, eps1: Sign::Plus, eps2: Sign::Plus };
        let r = gen_family1(&[node], &RatFun::nu()).unwrap();
        assert!(matches!(enumerate_candidates(&r, 1), Err(Error::SymbolicNu)));
    }

    #[test]
    fn polynomial_family_generic_eigenfunction() {
        let zp = MPoly::var(Var::Z);
        let f = &(&(&(&zp.pow(4) + &(&MPoly::var(Var::A) * &zp.pow(3)))
            + &(&MPoly::var(Var::B) * &zp.pow(2)))
            + &(&MPoly::var(Var::C) * &zp))
            + &MPoly::var(Var::D);
        let r = crate::families::gen_family3_poly(&f).unwrap();
        let u = continuous_eigenfunction(&r).unwrap();
        let (a, b, c) = (RatFun::var(Var::A), RatFun::var(Var::B), RatFun::var(Var::C));
        let z = RatFun::z();
        let s = &(&(&(&(&a.pow(2) * &z).scale(&int(3)) + &(&a * &z.pow(2)).scale(&int(12)))
            + &z.pow(3).scale(&int(16)))
            + &(&a * &b))
            - &c.scale(&int(2));
        let rest = &(&s * &RatFun::e()) - &(&a.scale(&int(12)) + &z.scale(&int(48)));
        let quad = (&a + &z.scale(&int(4))).pow(2).scale(&int(3));
        let expected = &(&TowerElem::from(&rest / &s)
            + &(&TowerElem::gen(Gens::GAMMA) * &TowerElem::from(&quad / &s)))
;
        let ratio = u.try_div(expected).unwrap();
        assert!(ratio.derivative(Var::Z).is_zero());
        assert!(!ratio.is_zero());
    }
}
