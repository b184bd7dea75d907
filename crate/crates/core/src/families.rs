//! Generators of integrable potentials from interpolation nodes, from
//! nilpotent series, and the singular `M = ∞` potentials.

use std::fmt;


use crate::algebra::{int, rat, series_log_derivative, ESeries, Gens, MPoly, RatFun, Rational, TowerElem, Var};
use crate::error::{Error, Result};
use crate::gauge::{
    check_h_structure, h_of, ode_residual_generic, v_of, CaseTag, Gauge, GaugeCase, HStructure,
};
use crate::interp::{pade_from_series, rat_interpolate, DegreeSpec, InterpNode};
use crate::seeds::{seed_case1, seed_case2, NodeSpec1, NodeSpec2};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    F1,
    F2,
    F3Log,
    F3Poly,
    F4,
    Singular(CaseTag),
}

impl Family {
    pub fn tag(&self) -> String {
        match self {
            Family::F1 => "1".into(),
            Family::F2 => "2".into(),
            Family::F3Log => "3log".into(),
            Family::F3Poly => "3poly".into(),
            Family::F4 => "4".into(),
            Family::Singular(c) => format!("singular{}", c.number()),
        }
    }

    pub fn from_tag(s: &str) -> Option<Family> {
        match s {
            "1" => Some(Family::F1),
            "2" => Some(Family::F2),
            "3log" => Some(Family::F3Log),
            "3poly" => Some(Family::F3Poly),
            "4" => Some(Family::F4),
            _ => s
                .strip_prefix("singular")
                .and_then(|n| n.parse::<u8>().ok())
                .and_then(CaseTag::from_number)
                .map(Family::Singular),
        }
    }

    /// Whether the potential can carry a discrete spectrum.
    pub fn is_discrete(&self) -> bool {
        matches!(self, Family::F1 | Family::F2 | Family::Singular(CaseTag::C1 | CaseTag::C2))
    }
}

/// What a potential was generated from.
#[derive(Clone, Debug, PartialEq)]
pub enum Provenance {
    Nodes1(Vec<NodeSpec1>),
    Nodes2(Vec<NodeSpec2>),
    LogPair { p1: MPoly, p2: MPoly },
    Poly(MPoly),
    Singular,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: Vec<String>| v.join(";");
        match self {
            Provenance::Nodes1(n) => write!(f, "{}", join(n.iter().map(|x| x.to_string()).collect())),
            Provenance::Nodes2(n) => write!(f, "{}", join(n.iter().map(|x| x.to_string()).collect())),
            Provenance::LogPair { p1, p2 } => write!(f, "P1={}, P2={}", p1, p2),
            Provenance::Poly(p) => write!(f, "F={}", p),
            Provenance::Singular => write!(f, "M=oo"),
        }
    }
}

/// A verified potential with its gauge data.
#[derive(Clone, Debug, PartialEq)]
pub struct PotentialResult {
    pub family: Family,
    pub case: GaugeCase,
    pub m: Gauge,
    pub h: Option<RatFun>,
    pub structure: Option<HStructure>,
    pub v: RatFun,
    pub provenance: Provenance,
    /// Energies used as root hints (node energies).
    pub hints: Vec<RatFun>,
}

impl PotentialResult {
    pub fn nu(&self) -> &RatFun {
        &self.case.nu
    }

    pub fn w_roots(&self) -> &[(RatFun, usize)] {
        self.structure.as_ref().map(|s| s.roots.as_slice()).unwrap_or(&[])
    }

    /// Substitutes `ν = ν₀` after cancellation and re-verifies everything.
    pub fn eval_nu(&self, nu0: &Rational) -> Result<PotentialResult> {
        let nu = self.case.nu.eval_nu(nu0)?;
        let case = GaugeCase::new(self.case.tag, nu);
        let m = match &self.m {
            Gauge::Finite(m) => Gauge::Finite(m.eval_nu(nu0)?),
            Gauge::Infinite => Gauge::Infinite,
        };
        let hints = self.hints.iter().map(|h| h.eval_nu(nu0)).collect::<Result<Vec<_>>>()?;
        let out = finalize(self.family, case, m, self.provenance.clone(), hints)?;
        if out.v != self.v.eval_nu(nu0)? {
            return Err(Error::Invalid("ν-substitution does not commute with V".into()));
        }
        Ok(out)
    }
}

/// Computes `H`, `V`, the structure of `H` and checks the residual.
pub fn finalize(
    family: Family,
    case: GaugeCase,
    m: Gauge,
    provenance: Provenance,
    hints: Vec<RatFun>,
) -> Result<PotentialResult> {
    let v = v_of(&case, &m)?;
    if let Some(w) = ode_residual_generic(&case, &m, &v)? {
        return Err(Error::Invalid(format!("nonzero residual {}", w)));
    }
    let (h, structure) = match &m {
        Gauge::Finite(mm) => {
            let h = h_of(&case, mm);
            let s = check_h_structure(&h, mm, &hints)?;
            (Some(h), Some(s))
        }
        Gauge::Infinite => (None, None),
    };
    Ok(PotentialResult { family, case, m, h, structure, v, provenance, hints })
}

fn check_distinct(energies: &[RatFun]) -> Result<()> {
    for (i, a) in energies.iter().enumerate() {
        if energies[..i].contains(a) {
            return Err(Error::DuplicateNode(a.to_string()));
        }
    }
    Ok(())
}

pub fn gen_family1(nodes: &[NodeSpec1], nu: &RatFun) -> Result<PotentialResult> {
    if nodes.is_empty() {
        return singular_potential(CaseTag::C1, nu);
    }
    let seeds = nodes.iter().map(|n| seed_case1(*n, nu)).collect::<Result<Vec<_>>>()?;
    let energies: Vec<RatFun> = seeds.iter().map(|s| s.energy.clone()).collect();
    check_distinct(&energies)?;
    let interp: Vec<InterpNode> =
        seeds.into_iter().map(|s| InterpNode { energy: s.energy, value: s.m }).collect();
    let m = rat_interpolate(&interp)?;
    finalize(
        Family::F1,
        GaugeCase::new(CaseTag::C1, nu.clone()),
        Gauge::Finite(m),
        Provenance::Nodes1(nodes.to_vec()),
        energies,
    )
}

pub fn gen_family2(nodes: &[NodeSpec2], nu: &RatFun) -> Result<PotentialResult> {
    if nodes.is_empty() {
        return singular_potential(CaseTag::C2, nu);
    }
    let seeds = nodes.iter().map(|n| seed_case2(*n, nu)).collect::<Result<Vec<_>>>()?;
    let energies: Vec<RatFun> = seeds.iter().map(|s| s.energy.clone()).collect();
    check_distinct(&energies)?;
    let interp: Vec<InterpNode> =
        seeds.into_iter().map(|s| InterpNode { energy: s.energy, value: s.m }).collect();
    let m = rat_interpolate(&interp)?;
    finalize(
        Family::F2,
        GaugeCase::new(CaseTag::C2, nu.clone()),
        Gauge::Finite(m),
        Provenance::Nodes2(nodes.to_vec()),
        energies,
    )
}

fn t_coeffs(p: &MPoly) -> Result<Vec<RatFun>> {
    if p.contains(Var::Z) || p.contains(Var::E) {
        return Err(Error::DegreeMismatch(format!("{} must be a polynomial in t", p)));
    }
    Ok(p.coeffs_in(Var::T).into_iter().map(RatFun::from_poly).collect())
}

fn from_t_coeffs(c: &[RatFun]) -> MPoly {
    let t = RatFun::var(Var::T);
    let r = c.iter().rev().fold(RatFun::zero(), |acc, x| &(&acc * &t) + x);
    (&r * &RatFun::from_poly(r.den().clone())).num().scale(&r.den().lc().recip())
}

/// `D = −∂² − 1/(4z²)` on `√z·(P1(z²) + ln z·P2(z²))`, acting on `(P1, P2)`.
pub fn d_log(p1: &MPoly, p2: &MPoly) -> Result<(MPoly, MPoly)> {
    let a = t_coeffs(p1)?;
    let b = t_coeffs(p2)?;
    let n = a.len().max(b.len());
    let get = |v: &[RatFun], j: usize| v.get(j).cloned().unwrap_or_default();
    let mut na = Vec::new();
    let mut nb = Vec::new();
    for j in 1..n {
        let jj = int(j as i64);
        let j2 = &jj * &jj * int(-4);
        na.push(&get(&a, j).scale(&j2) - &get(&b, j).scale(&(&jj * int(4))));
        nb.push(get(&b, j).scale(&j2));
    }
    Ok((from_t_coeffs(&na), from_t_coeffs(&nb)))
}

/// `√z·(P1(z²) + ln z·P2(z²))` as a tower element.
pub fn log_pair_element(p1: &MPoly, p2: &MPoly) -> TowerElem {
    let z2 = MPoly::var(Var::Z).pow(2);
    let a = p1.subs_poly(Var::T, &z2);
    let b = p2.subs_poly(Var::T, &z2);
    &TowerElem::term(Gens::R, RatFun::from_poly(a))
        + &TowerElem::term(Gens { log: 1, r: true, ..Gens::ONE }, RatFun::from_poly(b))
}

/// Coefficients `D^{n−1−j}F` of `E^j` for `j < n`, with `n = deg P1 + 1`.
pub fn family3_log_series(p1: &MPoly, p2: &MPoly) -> Result<(Vec<TowerElem>, usize)> {
    if p1.is_zero() {
        return Err(Error::DegreeMismatch("P1 must be nonzero".into()));
    }
    let n = p1.degree(Var::T) as usize + 1;
    let mut iterates = vec![(p1.clone(), p2.clone())];
    for _ in 1..n {
        let (a, b) = iterates.last().unwrap();
        iterates.push(d_log(a, b)?);
    }
    let coeffs = (0..n).map(|j| {
        let (a, b) = &iterates[n - 1 - j];
        log_pair_element(a, b)
    });
    Ok((coeffs.collect(), n))
}

pub fn gen_family3_log(p1: &MPoly, p2: &MPoly) -> Result<PotentialResult> {
    let (coeffs, n) = family3_log_series(p1, p2)?;
    let m_series = series_log_derivative(&ESeries::new(coeffs, n))?;
    let (m, _) = pade_from_series(&m_series, DegreeSpec::for_count(n))?;
    finalize(
        Family::F3Log,
        GaugeCase::new(CaseTag::C3, RatFun::zero()),
        Gauge::Finite(m),
        Provenance::LogPair { p1: p1.clone(), p2: p2.clone() },
        vec![],
    )
}

/// Coefficients `(−1)^{n−1−j} F^{(2(n−1−j))}` of `E^j`, with `n = ⌊deg F/2⌋ + 1`.
pub fn family3_poly_series(f: &MPoly) -> Result<(Vec<RatFun>, usize)> {
    if f.is_zero() || f.contains(Var::E) || f.contains(Var::T) {
        return Err(Error::DegreeMismatch(format!("F = {} must be a nonzero polynomial in z", f)));
    }
    let n = f.degree(Var::Z) as usize / 2 + 1;
    let mut derivs = vec![f.clone()];
    for _ in 1..n {
        let d = derivs.last().unwrap().derivative(Var::Z).derivative(Var::Z);
        derivs.push(-d);
    }
    Ok(((0..n).map(|j| RatFun::from_poly(derivs[n - 1 - j].clone())).collect(), n))
}

pub fn gen_family3_poly(f: &MPoly) -> Result<PotentialResult> {
    let (coeffs, n) = family3_poly_series(f)?;
    let m_series = series_log_derivative(&ESeries::from_ratfuns(&coeffs))?;
    let (m, _) = pade_from_series(&m_series, DegreeSpec::for_count(n))?;
    finalize(
        Family::F3Poly,
        GaugeCase::new(CaseTag::C3, RatFun::constant(rat(1, 2))),
        Gauge::Finite(m),
        Provenance::Poly(f.clone()),
        vec![],
    )
}

pub fn gen_family4() -> Result<PotentialResult> {
    let mut r = singular_potential(CaseTag::C4, &RatFun::constant(rat(1, 3)))?;
    r.family = Family::F4;
    Ok(r)
}

pub fn singular_potential(tag: CaseTag, nu: &RatFun) -> Result<PotentialResult> {
    finalize(
        Family::Singular(tag),
        GaugeCase::new(tag, nu.clone()),
        Gauge::Infinite,
        Provenance::Singular,
        vec![],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seeds::Sign;

    fn z() -> RatFun {
        RatFun::z()
    }

    #[test]
    fn anharmonic() {
        let node = NodeSpec1 { k: 1, eps1: Sign::Plus, eps2: Sign::Plus };
        let r = gen_family1(&[node], &RatFun::nu()).unwrap();
        let r = r.eval_nu(&rat(-3, 4)).unwrap();
        let q = &z().pow(2).scale(&int(2)) + &RatFun::one();
        let expected = &(&(&(-z().pow(2)) - &RatFun::int(2)) - &(&RatFun::int(8) / &q))
            + &(&RatFun::int(16) / &q.pow(2));
        assert_eq!(r.v, expected);
        assert_eq!(r.h.unwrap(), &(&RatFun::e() - &RatFun::int(3)) * &z().pow(2));
    }

    #[test]
    fn d_operator_on_pairs() {
        let t = MPoly::var(Var::T);
        let (a, b) = d_log(&t, &MPoly::zero()).unwrap();
        assert_eq!(a, MPoly::int(-4));
        assert!(b.is_zero());
    }

    #[test]
    fn family3_poly_small() {
        let f = &MPoly::var(Var::Z).pow(3) + &MPoly::int(1);
        let r = gen_family3_poly(&f).unwrap();
        let s = r.structure.unwrap();
        assert_eq!(s.w.degree(Var::E), 2);
    }
    #[test]
    fn fusion() {
        let nodes = [
            NodeSpec2 { k: 0, eps: Sign::Minus },
            NodeSpec2 { k: 1, eps: Sign::Plus },
        ];
        let r = gen_family2(&nodes, &RatFun::nu()).unwrap();
        let nu = RatFun::nu();
        let e = RatFun::e();
        let c = |n: i64| RatFun::int(n);
        let zz = z();
        let poly = |terms: &[(i64, &RatFun)]| {
            terms.iter().fold(RatFun::zero(), |acc, (k, t)| &acc + &t.scale(&int(*k)))
        };
        let n2 = nu.pow(2);
        let n3 = nu.pow(3);
        let n4 = nu.pow(4);
        let a = poly(&[
            (8, &n4), (20, &n3), (-8, &(&n2 * &zz)), (6, &n2), (-12, &(&nu * &zz)),
            (2, &zz.pow(2)), (-9, &nu),
        ]);
        let b = &poly(&[
            (-8, &n4), (-20, &n3), (8, &(&n2 * &zz)), (-30, &n2), (12, &(&nu * &zz)),
            (-2, &zz.pow(2)), (-31, &nu), (16, &zz),
        ]) - &c(6);
        let pre = &(&(&(&nu.scale(&int(2)) + &c(3)) * &(&nu.scale(&int(2)) - &c(1))) * &a) * &e;
        let den = &zz.scale(&int(4)) * &poly(&[(4, &n2), (8, &nu), (-2, &zz), (3, &RatFun::one())]);
        let m = &(&(-pre) + &b) / &den;
        match &r.m {
            crate::gauge::Gauge::Finite(x) => assert_eq!(x, &m),
            _ => panic!("infinite gauge"),
        }
        let r = r.eval_nu(&rat(-1, 2)).unwrap();
        let q = &(&zz.pow(2) + &zz.scale(&int(2))) + &c(2);
        let h = &(&q.pow(2) * &(&e.scale(&int(4)) + &c(1)).pow(2)) / &zz.pow(2).scale(&int(4));
        assert_eq!(r.h.unwrap(), h);
    }

    #[test]
    fn family3_log_example() {
        let p1 = &MPoly::var(Var::A) + &MPoly::var(Var::T);
        let p2 = MPoly::var(Var::B);
        let r = gen_family3_log(&p1, &p2).unwrap();
        let b = RatFun::var(Var::B);
        let q = &z().pow(2).scale(&int(2)) + &b;
        let v = &(&(&RatFun::one() / &z().pow(2).scale(&int(4))) - &(&RatFun::int(8) / &q))
            + &(&b.scale(&int(16)) / &q.pow(2));
        assert_eq!(r.v, v);
        let h = &RatFun::e().pow(2) * &q.pow(2);
        assert_eq!(r.h.unwrap(), h.scale(&rat(1, 4)));
    }

    #[test]
    fn family3_poly_symbolic() {
        let zp = MPoly::var(Var::Z);
        let f = &(&(&(&zp.pow(4) + &(&MPoly::var(Var::A) * &zp.pow(3)))
            + &(&MPoly::var(Var::B) * &zp.pow(2)))
            + &(&MPoly::var(Var::C) * &zp))
            + &MPoly::var(Var::D);
        let r = gen_family3_poly(&f).unwrap();
        let (a, b, c) = (RatFun::var(Var::A), RatFun::var(Var::B), RatFun::var(Var::C));
        let zz = z();
        let s = &(&(&(&(&a.pow(2) * &zz).scale(&int(3)) + &(&a * &zz.pow(2)).scale(&int(12)))
            + &zz.pow(3).scale(&int(16)))
            + &(&a * &b))
            - &c.scale(&int(2));
        let lin = &a.scale(&int(24)) + &zz.scale(&int(96));
        let quad = &(&(&(&a.pow(4).scale(&int(18)) + &(&a.pow(3) * &zz).scale(&int(72)))
            - &(&a.pow(2) * &b).scale(&int(72)))
            - &(&(&a * &b) * &zz).scale(&int(288)))
            + &(&(&a * &c).scale(&int(144)) + &(&c * &zz).scale(&int(576)));
        let v = &(&(-lin) / &s) - &(&quad / &s.pow(2));
        assert_eq!(r.v, v);
        let e = RatFun::e();
        let lin48 = &a.scale(&int(12)) + &zz.scale(&int(48));
        let m = &(&(&a + &zz.scale(&int(4))).pow(2) * &e).scale(&int(-3)) / &(&(&s * &e) - &lin48);
        match &r.m {
            crate::gauge::Gauge::Finite(x) => assert_eq!(x, &m),
            _ => panic!("infinite gauge"),
        }
        assert_eq!(r.structure.unwrap().w, MPoly::var(Var::E).pow(3));
    }
}
