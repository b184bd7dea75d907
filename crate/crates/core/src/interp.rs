//! Rational interpolation and Padé approximation in `E` over ℚ(ν, …)(z).

use crate::algebra::linalg::nullspace;
use crate::algebra::{RatFun, Var};
use crate::error::{Error, Result};

/// A prescribed value `M(z, energy) = value`.
#[derive(Clone, Debug, PartialEq)]
pub struct InterpNode {
    pub energy: RatFun,
    pub value: RatFun,
}

/// Numerator and denominator degree bounds in `E`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeSpec {
    pub num_deg: usize,
    pub den_deg: usize,
}

impl DegreeSpec {
    /// `(⌊n/2⌋, ⌊(n−1)/2⌋)`.
    pub fn for_count(n: usize) -> DegreeSpec {
        assert!(n >= 1);
        DegreeSpec { num_deg: n / 2, den_deg: (n - 1) / 2 }
    }
}

fn poly_in_e(coeffs: &[RatFun]) -> RatFun {
    let e = RatFun::e();
    coeffs.iter().rev().fold(RatFun::zero(), |acc, c| &(&acc * &e) + c)
}

fn powers(x: &RatFun, n: usize) -> Vec<RatFun> {
    let mut out = vec![RatFun::one()];
    for _ in 1..n {
        let next = out.last().unwrap() * x;
        out.push(next);
    }
    out
}

/// Finds `M = P/Q` with `deg_E P ≤ p`, `deg_E Q ≤ q` and `M(Eᵢ) = vᵢ`, or the
/// reciprocal problem when `reciprocal` is set.
fn cauchy(nodes: &[InterpNode], p: usize, q: usize, reciprocal: bool) -> Option<RatFun> {
    let ncols = p + q + 2;
    let n = p.max(q) + 1;
    let rows: Vec<Vec<RatFun>> = nodes
        .iter()
        .map(|node| {
            let pw = powers(&node.energy, n);
            // P(Eᵢ)·[1 or vᵢ] − Q(Eᵢ)·[vᵢ or 1] = 0
            let (fp, fq) = if reciprocal {
                (node.value.clone(), RatFun::one())
            } else {
                (RatFun::one(), node.value.clone())
            };
            let mut row: Vec<RatFun> = pw[..=p].iter().map(|x| x * &fp).collect();
            row.extend(pw[..=q].iter().map(|x| -(x * &fq)));
            row
        })
        .collect();
    for v in nullspace(&rows, ncols) {
        let pp = poly_in_e(&v[..=p]);
        let qq = poly_in_e(&v[p + 1..]);
        let (num, den) = if reciprocal { (qq, pp) } else { (pp, qq) };
        if den.is_zero() {
            continue;
        }
        let m = &num / &den;
        if verify_nodes(&m, nodes) {
            return Some(m);
        }
    }
    None
}

fn verify_nodes(m: &RatFun, nodes: &[InterpNode]) -> bool {
    nodes.iter().all(|node| {
        matches!(m.compose(Var::E, &node.energy), Ok(v) if v == node.value)
    })
}

/// Rational interpolant with degrees `(⌊n/2⌋, ⌊(n−1)/2⌋)` in `E`.
pub fn rat_interpolate(nodes: &[InterpNode]) -> Result<RatFun> {
    if nodes.is_empty() {
        return Err(Error::Invalid("no interpolation nodes".into()));
    }
    for (i, a) in nodes.iter().enumerate() {
        for b in &nodes[..i] {
            if a.energy == b.energy {
                return Err(Error::DuplicateNode(a.energy.to_string()));
            }
        }
    }
    let spec = DegreeSpec::for_count(nodes.len());
    cauchy(nodes, spec.den_deg, spec.num_deg, true)
        .or_else(|| cauchy(nodes, spec.num_deg, spec.den_deg, false))
        .ok_or_else(|| {
            Error::UnsolvableSystem(format!(
                "{} nodes with degrees ({}, {})",
                nodes.len(),
                spec.num_deg,
                spec.den_deg
            ))
        })
}

/// Padé approximant of `Σ coeffs[j] E^j`; on a degenerate system the
/// denominator degree is lowered. Returns the approximant and the degrees used.
pub fn pade_from_series(coeffs: &[RatFun], spec: DegreeSpec) -> Result<(RatFun, DegreeSpec)> {
    let n = coeffs.len();
    if n < spec.num_deg + spec.den_deg + 1 {
        return Err(Error::UnsolvableSystem(format!(
            "series order {} is below {}",
            n,
            spec.num_deg + spec.den_deg + 1
        )));
    }
    let mut dq = spec.den_deg as isize;
    while dq >= 0 {
        let q = dq as usize;
        let p = spec.num_deg;
        let ncols = q + 1 + p + 1;
        let rows: Vec<Vec<RatFun>> = (0..n)
            .map(|j| {
                let mut row = vec![RatFun::zero(); ncols];
                for i in 0..=q.min(j) {
                    row[i] = coeffs[j - i].clone();
                }
                if j <= p {
                    row[q + 1 + j] = RatFun::int(-1);
                }
                row
            })
            .collect();
        for v in nullspace(&rows, ncols) {
            if v[0].is_zero() {
                continue;
            }
            let den = poly_in_e(&v[..=q]);
            let num = poly_in_e(&v[q + 1..]);
            let m = &num / &den;
            if series_agrees(&v[..=q], &v[q + 1..], coeffs) {
                return Ok((m, DegreeSpec { num_deg: p, den_deg: q }));
            }
        }
        dq -= 1;
    }
    Err(Error::UnsolvableSystem("no Padé form with nonzero Q(0)".into()))
}

/// Re-expands `P/Q` and compares with the input coefficients.
fn series_agrees(q: &[RatFun], p: &[RatFun], coeffs: &[RatFun]) -> bool {
    let q0_inv = match q[0].inv() {
        Ok(x) => x,
        Err(_) => return false,
    };
    let mut out: Vec<RatFun> = Vec::with_capacity(coeffs.len());
    for j in 0..coeffs.len() {
        let mut acc = p.get(j).cloned().unwrap_or_default();
        for i in 1..q.len().min(j + 1) {
            acc = &acc - &(&q[i] * &out[j - i]);
        }
        out.push(&acc * &q0_inv);
    }
    out == coeffs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    #[test]
    fn two_point_polynomial() {
        let nodes = vec![
            InterpNode { energy: RatFun::int(0), value: RatFun::int(1) },
            InterpNode { energy: RatFun::int(1), value: RatFun::int(2) },
        ];
        assert_eq!(rat_interpolate(&nodes).unwrap(), &RatFun::e() + &RatFun::one());
    }

    #[test]
    fn duplicate_nodes_rejected() {
        let n = InterpNode { energy: RatFun::nu(), value: RatFun::z() };
        assert!(matches!(rat_interpolate(&[n.clone(), n]), Err(Error::DuplicateNode(_))));
    }

    #[test]
    fn geometric_series() {
        let c = vec![RatFun::one(); 2];
        let (m, spec) = pade_from_series(&c, DegreeSpec { num_deg: 0, den_deg: 1 }).unwrap();
        assert_eq!(m, (&RatFun::one() - &RatFun::e()).inv().unwrap());
        assert_eq!(spec.den_deg, 1);
    }

    #[test]
    fn three_point_rational() {
        // M = (z + E)/(1 + zE) has degrees (1, 1).
        let z = RatFun::z();
        let target = (&z + &RatFun::e()) / (&RatFun::one() + &(&z * &RatFun::e()));
        let nodes: Vec<InterpNode> = [int(0), int(2), rat(-1, 3)]
            .into_iter()
            .map(|e| {
                let energy = RatFun::constant(e);
                InterpNode { value: target.compose(Var::E, &energy).unwrap(), energy }
            })
            .collect();
        assert_eq!(rat_interpolate(&nodes).unwrap(), target);
    }
}
