//! Hyperexponential solutions of the degenerate equations, the gauge values
//! they induce, and the integration identities attached to them.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::linalg::solve;
use crate::algebra::{int, rat, MPoly, RatFun, Rational, TowerElem, Var};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn both() -> [Sign; 2] {
        [Sign::Plus, Sign::Minus]
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Node of the first family: `E₀ = ε₁(4k+2) + 4ε₂ν`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeSpec1 {
    pub k: u32,
    pub eps1: Sign,
    pub eps2: Sign,
}

/// Node of the second family: `E₀ = −1/(2εν+2k+1)²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeSpec2 {
    pub k: u32,
    pub eps: Sign,
}

impl fmt::Display for NodeSpec1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.k, self.eps1, self.eps2)
    }
}

impl fmt::Display for NodeSpec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k, self.eps)
    }
}

/// `Y(z) = z^g · e^{q(z)} · poly(z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HyperexpSeed {
    pub g: RatFun,
    pub q: RatFun,
    pub poly: RatFun,
}

impl HyperexpSeed {
    /// `Y′/Y`.
    pub fn log_derivative(&self) -> RatFun {
        let z = RatFun::z();
        &(&(&self.g / &z) + &self.q.derivative(Var::Z))
            + &(&self.poly.derivative(Var::Z) / &self.poly)
    }

    /// `Y″/Y`.
    pub fn second_ratio(&self) -> RatFun {
        let l = self.log_derivative();
        &l.derivative(Var::Z) + &(&l * &l)
    }

    /// As a tower element when `g` is a half-integer constant.
    pub fn to_tower(&self) -> Option<TowerElem> {
        let g = self.g.constant_value()?;
        let two_g = &g * int(2);
        if !two_g.is_integer() {
            return None;
        }
        let n = two_g.to_integer();
        let half = n.is_odd();
        let whole: i32 = ((&g - if half { rat(1, 2) } else { int(0) }).to_integer()).try_into().ok()?;
        let mut y = TowerElem::from(&self.poly * &RatFun::z().pow(whole));
        if half {
            y = &y * &TowerElem::gen(crate::algebra::Gens::R);
        }
        Some(y.with_carrier(self.q.clone()))
    }
}

/// A gauge value at one energy.
#[derive(Clone, Debug, PartialEq)]
pub struct Seed {
    pub energy: RatFun,
    pub m: RatFun,
    pub y: HyperexpSeed,
}

fn pochhammer(x: &RatFun, n: u32) -> RatFun {
    (0..n).fold(RatFun::one(), |acc, j| &acc * &(x + &RatFun::int(j as i64)))
}

/// `Σ_{j≤k} (−k)_j/((b)_j j!) x^j`, regularized by `(b)_k` when some `(b)_j`
/// vanishes. The second value is the power of `x` factored out of the
/// regularized polynomial.
pub fn f1f1(k: u32, b: &RatFun, x: &RatFun) -> Result<(RatFun, u32)> {
    let singular = (0..k).any(|j| (b + &RatFun::int(j as i64)).is_zero());
    let mut terms: Vec<RatFun> = Vec::with_capacity(k as usize + 1);
    let mut fact = Rational::one();
    for j in 0..=k {
        if j > 0 {
            fact *= int(j as i64);
        }
        let mk = pochhammer(&RatFun::int(-(k as i64)), j);
        let c = if singular {
            // (b)_k/(b)_j = (b+j)_{k−j}
            &mk * &pochhammer(&(b + &RatFun::int(j as i64)), k - j)
        } else {
            &mk / &pochhammer(b, j)
        };
        terms.push(c.scale(&fact.recip()));
    }
    let low = terms.iter().position(|c| !c.is_zero()).ok_or_else(|| {
        Error::SingularParameter(format!("1F1(-{}, {}, x) degenerates", k, b))
    })?;
    let mut acc = RatFun::zero();
    for c in terms[low..].iter().rev() {
        acc = &(&acc * x) + c;
    }
    if singular {
        let lc = terms[low].clone();
        acc = &acc / &lc;
    }
    Ok((acc, low as u32))
}

/// The terminating ₁F₁ in `scale·z²`.
pub fn f1f1_poly(k: u32, b: &RatFun, scale: i64) -> Result<RatFun> {
    let x = RatFun::z().pow(2).scale(&int(scale));
    Ok(f1f1(k, b, &x)?.0)
}

fn residual_case1(y: &HyperexpSeed, e0: &RatFun, nu: &RatFun) -> RatFun {
    let z = RatFun::z();
    let z2 = z.pow(2);
    let four_nu2 = nu.pow(2).scale(&int(4));
    let poly = &(&(&z2.pow(2) - &(e0 * &z2)) + &four_nu2) - &RatFun::one();
    &(&(&z2 * &y.second_ratio()) - &(&z * &y.log_derivative())) - &poly
}

fn residual_case2(y: &HyperexpSeed, e0: &RatFun, nu: &RatFun) -> RatFun {
    let z = RatFun::z();
    let z2 = z.pow(2);
    let four = int(4);
    let rest = &(&(&(e0 * &z2).scale(&four) + &z.scale(&four)) - &nu.pow(2).scale(&four))
        + &RatFun::one();
    &(&z2.scale(&four) * &y.second_ratio()) + &rest
}

/// Seed of the first family.
pub fn seed_case1(node: NodeSpec1, nu: &RatFun) -> Result<Seed> {
    let e1 = node.eps1.value();
    let e2 = node.eps2.value();
    let k = node.k as i64;
    let energy = &RatFun::int(e1 * (4 * k + 2)) + &nu.scale(&int(4 * e2));
    let b = &nu.scale(&int(2 * e1 * e2)) + &RatFun::one();
    let x = RatFun::z().pow(2).scale(&int(e1));
    let (poly, shift) = f1f1(node.k, &b, &x)?;
    let g = &b + &RatFun::int(2 * shift as i64);
    let q = RatFun::z().pow(2).scale(&rat(-e1, 2));
    let y = HyperexpSeed { g, q, poly };
    if !residual_case1(&y, &energy, nu).is_zero() {
        return Err(Error::Invalid(format!("seed {} fails its equation", node)));
    }
    Ok(Seed { energy, m: -y.log_derivative(), y })
}

/// Seed of the second family.
pub fn seed_case2(node: NodeSpec2, nu: &RatFun) -> Result<Seed> {
    let e = node.eps.value();
    let m = &nu.scale(&int(2 * e)) + &RatFun::int(2 * node.k as i64 + 1);
    if m.is_zero() {
        return Err(Error::SingularParameter(format!("2εν+2k+1 vanishes at node {}", node)));
    }
    let energy = -m.pow(-2);
    let b = &nu.scale(&int(2 * e)) + &RatFun::one();
    let x = &RatFun::z().scale(&int(2)) / &m;
    let (poly, shift) = f1f1(node.k, &b, &x)?;
    let g = &(&nu.scale(&int(e)) + &RatFun::constant(rat(1, 2))) + &RatFun::int(shift as i64);
    let q = -(&RatFun::z() / &m);
    let y = HyperexpSeed { g, q, poly };
    if !residual_case2(&y, &energy, nu).is_zero() {
        return Err(Error::Invalid(format!("seed {} fails its equation", node)));
    }
    Ok(Seed { energy, m: -y.log_derivative(), y })
}

#[derive(Clone, Debug, PartialEq)]
pub enum Antiderivative {
    /// `R` with `(R·z^a·e^q)′` equal to the integrand.
    Closed(RatFun),
    NonElementary,
}

fn pole_order_at_zero(f: &RatFun) -> u32 {
    if f.is_zero() {
        return 0;
    }
    f.den().low_degree(Var::Z)
}

/// Searches `R = N/(z^m·den(p))` with `R′ + (a/z + q′)R = p`.
pub fn hyperexp_integrate(p: &RatFun, q: &RatFun, a: &RatFun) -> Antiderivative {
    if p.is_zero() {
        return Antiderivative::Closed(RatFun::zero());
    }
    let z = RatFun::z();
    let dq = q.derivative(Var::Z);
    let shift = &(a / &z) + &dq;
    let a_int = a.constant_value().filter(|x| x.is_integer()).map(|x| x.abs().to_integer());
    let extra: u32 = a_int.and_then(|x| u32::try_from(x).ok()).unwrap_or(0);
    let base_den = p.den().clone();
    let max_m = pole_order_at_zero(p) + pole_order_at_zero(&dq) + extra + 2;
    let deg_p = p.num().degree(Var::Z) as i64 - p.den().degree(Var::Z) as i64;
    let deg_dq = dq.num().degree(Var::Z) as i64 - dq.den().degree(Var::Z) as i64;
    for m in 0..=max_m {
        let den = &RatFun::from_poly(base_den.clone()) * &z.pow(m as i32);
        let den_deg = den.num().degree(Var::Z) as i64;
        let top = (deg_p - deg_dq.max(-1) + den_deg + 1).max(0) as usize;
        let basis: Vec<RatFun> = (0..=top).map(|j| &z.pow(j as i32) / &den).collect();
        let images: Vec<RatFun> =
            basis.iter().map(|b| &b.derivative(Var::Z) + &(&shift * b)).collect();
        if let Some(r) = solve_linear_combination(&basis, &images, p) {
            return Antiderivative::Closed(r);
        }
    }
    Antiderivative::NonElementary
}

/// Finds constants `c` (free of `z`) with `Σ cⱼ·images[j] = target`, returning
/// `Σ cⱼ·basis[j]`.
fn solve_linear_combination(basis: &[RatFun], images: &[RatFun], target: &RatFun) -> Option<RatFun> {
    let mut common = target.den().clone();
    for im in images {
        common = crate::algebra::lcm(&common, im.den());
    }
    let common = RatFun::from_poly(common);
    let to_poly = |f: &RatFun| -> MPoly {
        let x = f * &common;
        debug_assert!(x.is_poly());
        x.num().clone()
    };
    let rhs = to_poly(target);
    let cols: Vec<Vec<RatFun>> = images
        .iter()
        .map(|im| to_poly(im).coeffs_in(Var::Z).into_iter().map(RatFun::from_poly).collect())
        .collect();
    let rhs_c: Vec<RatFun> = rhs.coeffs_in(Var::Z).into_iter().map(RatFun::from_poly).collect();
    let nrows = cols.iter().map(|c| c.len()).max().unwrap_or(0).max(rhs_c.len());
    let rows: Vec<Vec<RatFun>> = (0..nrows)
        .map(|i| cols.iter().map(|c| c.get(i).cloned().unwrap_or_default()).collect())
        .collect();
    let b: Vec<RatFun> = (0..nrows).map(|i| rhs_c.get(i).cloned().unwrap_or_default()).collect();
    let x = solve(&rows, &b)?;
    Some(basis.iter().zip(&x).fold(RatFun::zero(), |acc, (bj, c)| &acc + &(bj * c)))
}

/// The rational function `(z/Y²)∫(Y²/z)dz` for the seed of `node`, when the
/// antiderivative is hyperexponential.
pub fn hermite_m1(node: NodeSpec1, nu: &RatFun) -> Result<Option<RatFun>> {
    let seed = seed_case1(node, nu)?;
    let y = &seed.y;
    let a = &y.g.scale(&int(2)) - &RatFun::one();
    let q = y.q.scale(&int(2));
    let p = y.poly.pow(2);
    Ok(match hyperexp_integrate(&p, &q, &a) {
        Antiderivative::Closed(r) => Some(&r / &p),
        Antiderivative::NonElementary => None,
    })
}

/// `LHS − RHS` of the Γ-ratio identity attached to a double root, summed in
/// absolute value over the four sign choices.
pub fn gamma_sum_check(k: u32, nu: &Rational) -> Result<Rational> {
    if (nu * int(2)).is_integer() {
        return Err(Error::SingularParameter(format!("2ν = {} is an integer", nu * int(2))));
    }
    let mut total = Rational::zero();
    for e1 in Sign::both() {
        for e2 in Sign::both() {
            total += gamma_sum_difference(k, nu, e1, e2)?.abs();
        }
    }
    Ok(total)
}

pub fn gamma_sum_difference(k: u32, nu: &Rational, eps1: Sign, eps2: Sign) -> Result<Rational> {
    let s = int(eps1.value() * eps2.value());
    let bp = &s * int(2) * nu;
    let b = RatFun::constant(&bp + int(1));
    let x = RatFun::z().scale(&int(eps1.value()));
    let (f, shift) = f1f1(k, &b, &x)?;
    if shift != 0 {
        return Err(Error::SingularParameter(format!("ν = {}", nu)));
    }
    let sq = f.pow(2);
    let coeffs = sq.num().coeffs_in(Var::Z);
    let rising = |x: &Rational, n: usize| -> Rational {
        (0..n).fold(Rational::one(), |acc, j| acc * (x + int(j as i64)))
    };
    let mut lhs = Rational::zero();
    for (n, c) in coeffs.iter().enumerate() {
        let v = c.constant_value().unwrap() / sq.den().constant_value().unwrap();
        let sign = if eps1 == Sign::Minus && n % 2 == 1 { int(-1) } else { int(1) };
        lhs += v * sign * rising(&bp, n + 1);
    }
    let kf = rising(&int(1), k as usize);
    let rhs = &s * int(2) * nu * kf / rising(&(&bp + int(1)), k as usize);
    Ok(lhs - rhs)
}

/// Closed form `Γ(k+1)Γ(p+1−k)²/(4Γ(p+1))`; the regularized branch `p < k`
/// gives 0.
pub fn residue_closed_form(p: u32, k: u32) -> Rational {
    if p < k {
        return Rational::zero();
    }
    let fact = |n: u32| -> Rational { (1..=n).fold(Rational::one(), |acc, j| acc * int(j as i64)) };
    fact(k) * fact(p - k).pow(2) / (int(4) * fact(p))
}

/// Residue at 0 of `(z/Y²)(∫Y²/z)²` for `Y = z^β e^{−z²/2} ₁F₁(−k, β, z²)`,
/// `β = p − k + 1`, by Laurent expansion.
pub fn residue_pairing(p: u32, k: u32) -> Result<Rational> {
    if p < k {
        return Ok(Rational::zero());
    }
    let beta = (p - k + 1) as i64;
    let b = RatFun::int(beta);
    let (f, _) = f1f1(k, &b, &RatFun::z().pow(2))?;
    let a = RatFun::int(2 * beta - 1);
    let q = RatFun::z().pow(2).scale(&int(-1));
    let r = match hyperexp_integrate(&f.pow(2), &q, &a) {
        Antiderivative::Closed(r) => r,
        Antiderivative::NonElementary => {
            return Err(Error::Invalid("antiderivative is not hyperexponential".into()))
        }
    };
    // R²·z^{2β−1}·e^{−z²}/F², expanded at 0.
    let lead = &r.pow(2) * &RatFun::z().pow(2 * beta as i32 - 1);
    let v = pole_order_at_zero(&lead) as usize;
    let need = v + 1;
    let laurent = LaurentSeries::from_ratfun(&lead, need)?;
    let exp = LaurentSeries::exp_neg_z2(need);
    let finv = LaurentSeries::from_ratfun(&f.pow(2).inv()?, need)?;
    let prod = laurent.mul(&exp).mul(&finv);
    Ok(prod.coeff(-1))
}

/// Truncated Laurent series `Σ_{j ≥ val} c_j z^j` over ℚ.
struct LaurentSeries {
    val: i64,
    c: Vec<Rational>,
}

impl LaurentSeries {
    /// Expansion with `len` coefficients beyond the valuation.
    fn from_ratfun(f: &RatFun, len: usize) -> Result<LaurentSeries> {
        let to_vec = |p: &MPoly| -> Result<Vec<Rational>> {
            p.coeffs_in(Var::Z)
                .into_iter()
                .map(|c| c.constant_value().ok_or(Error::Invalid("non-numeric series".into())))
                .collect()
        };
        let n = to_vec(f.num())?;
        let d = to_vec(f.den())?;
        let nv = n.iter().position(|x| !x.is_zero()).unwrap_or(0);
        let dv = d.iter().position(|x| !x.is_zero()).unwrap_or(0);
        let n = &n[nv..];
        let d = &d[dv..];
        let mut out: Vec<Rational> = Vec::with_capacity(len);
        for j in 0..len {
            let mut acc = n.get(j).cloned().unwrap_or_default();
            for i in 1..=j.min(d.len().saturating_sub(1)) {
                acc -= &d[i] * &out[j - i];
            }
            out.push(acc / &d[0]);
        }
        Ok(LaurentSeries { val: nv as i64 - dv as i64, c: out })
    }

    fn exp_neg_z2(len: usize) -> LaurentSeries {
        let mut c = vec![Rational::zero(); len];
        let mut term = Rational::one();
        let mut j = 0;
        while 2 * j < len {
            c[2 * j] = term.clone();
            j += 1;
            term = -term / int(j as i64);
        }
        LaurentSeries { val: 0, c }
    }

    fn mul(&self, o: &LaurentSeries) -> LaurentSeries {
        let len = self.c.len().min(o.c.len());
        let mut c = vec![Rational::zero(); len];
        for i in 0..len {
            for j in 0..len - i {
                c[i + j] += &self.c[i] * &o.c[j];
            }
        }
        LaurentSeries { val: self.val + o.val, c }
    }

    fn coeff(&self, j: i64) -> Rational {
        let idx = j - self.val;
        if idx < 0 {
            return Rational::zero();
        }
        self.c.get(idx as usize).cloned().unwrap_or_default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nu() -> RatFun {
        RatFun::nu()
    }

    #[test]
    fn f1f1_examples() {
        let b = &nu().scale(&int(2)) + &RatFun::one();
        assert_eq!(f1f1_poly(0, &b, 1).unwrap(), RatFun::one());
        let z2 = RatFun::z().pow(2);
        assert_eq!(f1f1_poly(1, &b, 1).unwrap(), &RatFun::one() - &(&z2 / &b));
        let bb = RatFun::var(Var::B);
        let expected = &(&RatFun::one() - &(&z2.scale(&int(2)) / &bb))
            + &(&z2.pow(2) / &(&bb * &(&bb + &RatFun::one())));
        assert_eq!(f1f1_poly(2, &bb, 1).unwrap(), expected);
    }

    #[test]
    fn first_family_seeds() {
        let z = RatFun::z();
        let s = seed_case1(NodeSpec1 { k: 0, eps1: Sign::Plus, eps2: Sign::Plus }, &nu()).unwrap();
        assert_eq!(s.energy, &nu().scale(&int(4)) + &RatFun::int(2));
        assert_eq!(s.m, &z - &(&(&nu().scale(&int(2)) + &RatFun::one()) / &z));
        let s = seed_case1(NodeSpec1 { k: 1, eps1: Sign::Plus, eps2: Sign::Plus }, &nu()).unwrap();
        let b = &nu().scale(&int(2)) + &RatFun::one();
        let num = &(&(-z.pow(4)) + &(&z.pow(2) * &(&nu().scale(&int(4)) + &RatFun::int(4))))
            - &b.pow(2);
        let den = &z * &(&b - &z.pow(2));
        assert_eq!(s.m, &num / &den);
    }

    #[test]
    fn second_family_seed() {
        let z = RatFun::z();
        let s = seed_case2(NodeSpec2 { k: 0, eps: Sign::Plus }, &nu()).unwrap();
        let m = &nu().scale(&int(2)) + &RatFun::one();
        assert_eq!(s.energy, -m.pow(-2));
        let expected =
            &(-(&(&nu() + &RatFun::constant(rat(1, 2))) / &z)) + &m.inv().unwrap();
        assert_eq!(s.m, expected);
    }

    #[test]
    fn integration_examples() {
        let z = RatFun::z();
        let r = hyperexp_integrate(&z.scale(&int(2)), &z.pow(2), &RatFun::zero());
        assert_eq!(r, Antiderivative::Closed(RatFun::one()));
        let g = hyperexp_integrate(&RatFun::one(), &-z.pow(2), &RatFun::zero());
        assert_eq!(g, Antiderivative::NonElementary);
    }

    #[test]
    fn residue_small_cases() {
        assert_eq!(residue_pairing(0, 0).unwrap(), rat(1, 4));
        assert_eq!(residue_pairing(1, 1).unwrap(), rat(1, 4));
        assert_eq!(residue_pairing(2, 1).unwrap(), rat(1, 8));
    }

    #[test]
    fn gamma_sum_small_cases() {
        assert!(gamma_sum_check(0, &rat(1, 3)).unwrap().is_zero());
        assert!(gamma_sum_check(1, &rat(1, 3)).unwrap().is_zero());
        assert!(gamma_sum_check(3, &rat(2, 5)).unwrap().is_zero());
        assert!(gamma_sum_check(1, &rat(1, 2)).is_err());
    }
}
