//! Multivariate polynomial gcd over ℚ.
//!
//! The fast path is the heuristic integer gcd (evaluate the main variable at a
//! large integer, recurse, reconstruct by symmetric ξ-adic expansion and
//! confirm by trial division). Primitive pseudo-remainder sequences are the
//! fallback when the heuristic gives up.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{MPoly, Monomial, Rational, Var};

const HEU_TRIES: usize = 6;

/// Normalized gcd: primitive integer coefficients, positive leading coefficient.
/// `gcd(0, 0) = 0`.
pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.primitive_int().1;
    }
    if b.is_zero() {
        return a.primitive_int().1;
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::one();
    }
    let (_, a) = a.primitive_int();
    let (_, b) = b.primitive_int();
    if a == b {
        return a;
    }

    // Common monomial factor.
    let (ma, a) = split_monomial(&a);
    let (mb, b) = split_monomial(&b);
    let mono = Monomial::from_exponents(
        &Var::ALL.map(|v| (v, ma.exp(v).min(mb.exp(v)))),
    );
    let g = gcd_nomono(&a, &b);
    g.mul_monomial(mono)
}

pub fn gcd_many<'a, I: IntoIterator<Item = &'a MPoly>>(it: I) -> MPoly {
    let mut g = MPoly::zero();
    for p in it {
        g = gcd(&g, p);
        if g.is_one() {
            break;
        }
    }
    g
}

pub fn lcm(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() || b.is_zero() {
        return MPoly::zero();
    }
    let g = gcd(a, b);
    let q = a.div_exact(&g).expect("gcd divides");
    (&q * b).primitive_int().1
}

/// Content of `p` viewed as a polynomial in `v`: gcd of its coefficients.
pub fn content_in(p: &MPoly, v: Var) -> MPoly {
    gcd_many(p.coeffs_in(v).iter().filter(|c| !c.is_zero()))
}

fn split_monomial(p: &MPoly) -> (Monomial, MPoly) {
    let m = Monomial::from_exponents(&Var::ALL.map(|v| (v, p.low_degree(v))));
    if m.is_one() {
        return (m, p.clone());
    }
    let q = MPoly::from_terms(p.terms().iter().map(|(t, c)| (t.div(m).unwrap(), c.clone())));
    (m, q)
}

fn gcd_nomono(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_constant() || b.is_constant() {
        return MPoly::one();
    }
    let ma = a.var_mask();
    let mb = b.var_mask();
    // A variable present in only one argument cannot occur in the gcd.
    for v in Var::ALL {
        let bit = 1u8 << v as u8;
        if ma & bit != 0 && mb & bit == 0 {
            let mut g = b.clone();
            for c in a.coeffs_in(v).iter().filter(|c| !c.is_zero()) {
                g = gcd(&g, c);
                if g.is_one() {
                    return g;
                }
            }
            return g;
        }
        if mb & bit != 0 && ma & bit == 0 {
            return gcd_nomono(b, a);
        }
    }
    if let Some(h) = heu_gcd(a, b) {
        return normalize(h);
    }
    normalize(prs_gcd(a, b))
}

fn normalize(p: MPoly) -> MPoly {
    p.primitive_int().1
}

fn int_coeffs(p: &MPoly) -> impl Iterator<Item = BigInt> + '_ {
    p.terms().iter().map(|(_, c)| c.to_integer())
}

fn max_norm(p: &MPoly) -> BigInt {
    int_coeffs(p).map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
}

fn int_content(p: &MPoly) -> BigInt {
    int_coeffs(p).fold(BigInt::zero(), |g, c| g.gcd(&c))
}

fn scale_int(p: &MPoly, k: &BigInt) -> MPoly {
    p.scale(&Rational::from_integer(k.clone()))
}

/// Heuristic gcd of integer polynomials; returns `None` when it gives up.
fn heu_gcd(f: &MPoly, g: &MPoly) -> Option<MPoly> {
    heu_rec(f, g).map(|(h, _, _)| h)
}

fn heu_rec(f: &MPoly, g: &MPoly) -> Option<(MPoly, MPoly, MPoly)> {
    let vars = {
        let mask = f.var_mask() | g.var_mask();
        Var::ALL.iter().copied().find(|v| mask & (1u8 << *v as u8) != 0)
    };
    let Some(x) = vars else {
        let a = f.constant_value().unwrap().to_integer();
        let b = g.constant_value().unwrap().to_integer();
        let h = a.gcd(&b);
        if h.is_zero() {
            return Some((MPoly::zero(), MPoly::zero(), MPoly::zero()));
        }
        let cf = Rational::from_integer(&a / &h);
        let cg = Rational::from_integer(&b / &h);
        return Some((
            MPoly::constant(Rational::from_integer(h)),
            MPoly::constant(cf),
            MPoly::constant(cg),
        ));
    };

    let common = int_content(f).gcd(&int_content(g));
    let inv = Rational::new(BigInt::one(), common.clone());
    let f = f.scale(&inv);
    let g = g.scale(&inv);

    let f_norm = max_norm(&f);
    let g_norm = max_norm(&g);
    let b: BigInt = BigInt::from(2) * f_norm.clone().min(g_norm.clone()) + 29;
    let f_lc = f.lc().to_integer().abs();
    let g_lc = g.lc().to_integer().abs();
    let mut xi: BigInt = std::cmp::max(
        std::cmp::min(b.clone(), BigInt::from(99) * b.sqrt()),
        BigInt::from(2) * std::cmp::min(&f_norm / &f_lc, &g_norm / &g_lc) + 4,
    );

    for _ in 0..HEU_TRIES {
        let ff = f.eval_int(x, &xi);
        let gg = g.eval_int(x, &xi);
        if !ff.is_zero() && !gg.is_zero() {
            if let Some((h, cff, cfg)) = heu_rec(&ff, &gg) {
                let h = interpolate(&h, &xi, x);
                let h = h.primitive_int().1;
                if let (Some(cf), Some(cg)) = (f.div_exact(&h), g.div_exact(&h)) {
                    if cf.is_integral() && cg.is_integral() {
                        return Some((scale_int(&h, &common), cf, cg));
                    }
                }
                let cff = interpolate(&cff, &xi, x);
                if let Some(h2) = f.div_exact(&cff) {
                    if h2.is_integral() {
                        if let Some(cg) = g.div_exact(&h2) {
                            if cg.is_integral() {
                                return Some((scale_int(&h2, &common), cff, cg));
                            }
                        }
                    }
                }
                let cfg = interpolate(&cfg, &xi, x);
                if let Some(h3) = g.div_exact(&cfg) {
                    if h3.is_integral() {
                        if let Some(cf) = f.div_exact(&h3) {
                            if cf.is_integral() {
                                return Some((scale_int(&h3, &common), cf, cfg));
                            }
                        }
                    }
                }
            }
        }
        let r = xi.sqrt().sqrt();
        xi = BigInt::from(73794) * &xi * r / 27011;
    }
    None
}

/// Symmetric ξ-adic reconstruction of a polynomial in `x`.
fn interpolate(h: &MPoly, xi: &BigInt, x: Var) -> MPoly {
    let mut h = h.clone();
    let mut coeffs: Vec<MPoly> = Vec::new();
    let half = xi / 2;
    while !h.is_zero() {
        let g = MPoly::from_terms(h.terms().iter().map(|(m, c)| {
            let c = c.to_integer();
            let mut r = c.mod_floor(xi);
            if r > half {
                r -= xi;
            }
            (*m, Rational::from_integer(r))
        }));
        coeffs.push(g.clone());
        h = (&h - &g).scale(&Rational::new(BigInt::one(), xi.clone()));
    }
    let p = MPoly::from_coeffs_in(x, &coeffs);
    if p.lc().is_negative() {
        -p
    } else {
        p
    }
}

/// Pseudo-remainder of `a` by `b` with respect to `v`.
fn prem(a: &MPoly, b: &MPoly, v: Var) -> MPoly {
    let db = b.degree(v);
    let lb = b.lc_in(v);
    let mut r = a.clone();
    while !r.is_zero() && r.degree(v) >= db {
        let dr = r.degree(v);
        let lr = r.lc_in(v);
        let shift = Monomial::var(v, dr - db);
        r = &(&r * &lb) - &(&b.mul_monomial(shift) * &lr);
    }
    r
}

fn prs_gcd(a: &MPoly, b: &MPoly) -> MPoly {
    let mask = a.var_mask() & b.var_mask();
    let Some(v) = Var::ALL.iter().copied().find(|v| mask & (1u8 << *v as u8) != 0) else {
        return MPoly::one();
    };
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let c = gcd(&ca, &cb);
    let mut p = a.div_exact(&ca).unwrap();
    let mut q = b.div_exact(&cb).unwrap();
    if p.degree(v) < q.degree(v) {
        std::mem::swap(&mut p, &mut q);
    }
    loop {
        if q.degree(v) == 0 {
            return c;
        }
        let r = prem(&p, &q, v);
        if r.is_zero() {
            let g = q.div_exact(&content_in(&q, v)).unwrap();
            return &c * &g;
        }
        p = q;
        let cr = content_in(&r, v);
        q = r.div_exact(&cr).unwrap();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::int;

    fn z() -> MPoly {
        MPoly::var(Var::Z)
    }
    fn e() -> MPoly {
        MPoly::var(Var::E)
    }
    fn nu() -> MPoly {
        MPoly::var(Var::Nu)
    }

    #[test]
    fn simple_cases() {
        let a = &(&z() * &z()) - &MPoly::int(1);
        let b = &z() - &MPoly::int(1);
        assert_eq!(gcd(&a, &b), b);
        assert_eq!(gcd(&a, &(&z() + &MPoly::int(2))), MPoly::one());
        assert_eq!(gcd(&a.scale(&int(6)), &b.scale(&int(-4))), b);
    }

    #[test]
    fn multivariate_common_factor() {
        let f = &(&z() * &e()) + &nu();
        let g1 = &z().pow(2) + &e().pow(3);
        let g2 = &(&nu() * &z()) - &MPoly::int(7);
        let a = &(&f * &f) * &g1;
        let b = &f * &g2;
        assert_eq!(gcd(&a, &b), f);
        let m = z().pow(2);
        assert_eq!(gcd(&(&a * &m), &(&b * &z())), &f * &z());
    }

    #[test]
    fn prs_agrees_with_heuristic() {
        let f = &(&z() * &e()) + &(&nu() + &MPoly::int(3));
        let a = &f * &(&z().pow(3) - &e());
        let b = &f * &(&(&z() * &nu()) + &e().pow(2));
        let h = normalize(prs_gcd(&a, &b));
        assert_eq!(h, f.primitive_int().1);
        assert_eq!(gcd(&a, &b), h);
    }
}
