//! LaTeX and numeric table output.

use num_traits::{One, Signed, Zero};

use crate::algebra::{MPoly, Monomial, RatFun, Rational, UPoly, Var};
use crate::error::{Error, Result};
use crate::spectrum::EigenPair;

/// Factor order inside a LaTeX monomial.
const LATEX_ORDER: [Var; 8] = [Var::E, Var::Nu, Var::A, Var::B, Var::C, Var::D, Var::T, Var::Z];

fn latex_var(v: Var) -> &'static str {
    match v {
        Var::Nu => "\\nu",
        _ => v.name(),
    }
}

fn latex_exp(e: u32) -> String {
    if e < 10 {
        format!("^{}", e)
    } else {
        format!("^{{{}}}", e)
    }
}

fn latex_monomial(m: Monomial) -> String {
    let mut s = String::new();
    for v in LATEX_ORDER {
        match m.exp(v) {
            0 => {}
            1 => s.push_str(latex_var(v)),
            e => {
                s.push_str(latex_var(v));
                s.push_str(&latex_exp(e));
            }
        }
    }
    s
}

fn latex_coeff(c: &Rational, unit: bool) -> String {
    if c.is_integer() {
        if unit && c.is_one() {
            String::new()
        } else {
            c.to_string()
        }
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

pub fn latex_poly(p: &MPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, (m, c)) in p.terms().iter().enumerate() {
        if c.is_negative() {
            s.push('-');
        } else if i > 0 {
            s.push('+');
        }
        s.push_str(&latex_coeff(&c.abs(), !m.is_one()));
        s.push_str(&latex_monomial(*m));
    }
    s
}

fn wrap(s: String, terms: usize) -> String {
    if terms > 1 {
        format!("({})", s)
    } else {
        s
    }
}

/// `\frac{N}{D}` with a leading minus pulled out of single-term numerators.
fn latex_fraction(num: &MPoly, den_latex: &str, first: bool) -> String {
    let (sign, n) = if num.len() == 1 && num.lc().is_negative() { ("-", -num) } else { ("+", num.clone()) };
    let sign = if first && sign == "+" { "" } else { sign };
    format!("{}\\frac{{{}}}{{{}}}", sign, latex_poly(&n), den_latex)
}

pub fn latex_ratfun(r: &RatFun) -> String {
    let (n, d) = split(r);
    if d.is_one() {
        return latex_poly(&n);
    }
    latex_fraction(&n, &latex_poly(&d), true)
}

/// `r = N/D` with integer coefficients and no common rational content.
fn split(r: &RatFun) -> (MPoly, MPoly) {
    let (cn, n) = r.num().primitive_int();
    let (cd, d) = r.den().primitive_int();
    let f = cn / cd;
    (n.scale(&Rational::from_integer(f.numer().clone())), d.scale(&Rational::from_integer(f.denom().clone())))
}

fn factor_power(q: &MPoly, j: usize, with_coeff: bool) -> String {
    let body = latex_poly(q);
    if q.len() == 1 {
        if j == 1 {
            body
        } else {
            format!("{}{}", body, latex_exp(j as u32))
        }
    } else if j == 1 {
        if with_coeff {
            format!("({})", body)
        } else {
            body
        }
    } else {
        format!("({}){}", body, latex_exp(j as u32))
    }
}

fn strip_z_power(p: &MPoly) -> (MPoly, u32) {
    let k = p.low_degree(Var::Z);
    let m = Monomial::var(Var::Z, k);
    (MPoly::from_terms(p.terms().iter().map(|(t, c)| (t.div(m).unwrap(), c.clone()))), k)
}

/// Partial fractions in `z`: the polynomial part, then `c/q^j` grouped by
/// denominator factor, the power of `z` first.
pub fn latex_partial_fractions(r: &RatFun) -> String {
    let num = UPoly::from_mpoly(r.num(), Var::Z);
    let den = UPoly::from_mpoly(r.den(), Var::Z);
    let (poly, rem) = num.div_rem(&den);
    let mut factors: Vec<(UPoly<RatFun>, usize)> = Vec::new();
    let (rest, k) = strip_z_power(r.den());
    if k > 0 {
        factors.push((UPoly::new(vec![RatFun::zero(), RatFun::one()]), k as usize));
    }
    factors.extend(UPoly::from_mpoly(&rest, Var::Z).squarefree());

    let mut out = String::new();
    let poly_r = poly.to_ratfun(Var::Z);
    if !poly_r.is_zero() {
        let (n, d) = split(&poly_r);
        if d.is_one() {
            out.push_str(&latex_poly(&n));
        } else {
            out.push_str(&latex_fraction(&n, &latex_poly(&d), true));
        }
    }
    let mut rest_den = den.monic();
    let mut rem = rem.scale(&RatFun::one().try_div(&den.lc()).unwrap());
    for (q, m) in &factors {
        let qm = q.pow(*m);
        rest_den = rest_den.div_rem(&qm).0;
        // rem/(qm·rest) = a/qm + b/rest with a·rest + b·qm = rem.
        let (_, s, _) = rest_den.ext_gcd(&qm);
        let a = rem.mul(&s).rem(&qm);
        rem = rem.sub(&a.mul(&rest_den)).div_rem(&qm).0;
        let mut parts = vec![UPoly::zero(); *m];
        let mut t = a;
        for j in (1..=*m).rev() {
            let (qq, rr) = t.div_rem(q);
            parts[j - 1] = rr;
            t = qq;
        }
        let q_rf = q.to_ratfun(Var::Z);
        let (q_int, _) = split(&q_rf);
        let kappa = RatFun::from_poly(q_int.clone()).try_div(&q_rf).unwrap();
        for (j, c) in parts.iter().enumerate() {
            let j = j + 1;
            let c = c.to_ratfun(Var::Z);
            if c.is_zero() {
                continue;
            }
            let (n, d) = split(&(&c * &kappa.pow(j as i32)));
            let den_latex = if d.is_one() {
                factor_power(&q_int, j, false)
            } else {
                format!("{}{}", wrap(latex_poly(&d), d.len()), factor_power(&q_int, j, true))
            };
            out.push_str(&latex_fraction(&n, &den_latex, out.is_empty()));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// One line each for `M`, `H` and `V`.
pub fn latex_document(m: Option<&RatFun>, h: Option<&RatFun>, v: &RatFun) -> String {
    let mut s = String::new();
    match m {
        Some(m) => s.push_str(&format!("M(z,E)={}\n", latex_ratfun(m))),
        None => s.push_str("M(z,E)=\\infty\n"),
    }
    if let Some(h) = h {
        s.push_str(&format!("H={}\n", latex_ratfun(h)));
    }
    s.push_str(&format!("V(z)={}\n", latex_partial_fractions(v)));
    s
}

/// Values for the symbols other than `z`.
pub type Bindings = Vec<(Var, Rational)>;

fn bind(r: &RatFun, bindings: &Bindings) -> Result<RatFun> {
    let mut r = r.clone();
    for (v, x) in bindings {
        r = r.subs(*v, x)?;
    }
    for v in Var::ALL {
        if v != Var::Z && r.contains(v) {
            return Err(Error::UnboundParameter(v.name().to_string()));
        }
    }
    Ok(r)
}

fn eval_at(r: &RatFun, z: f64) -> Option<f64> {
    let mut p = [0.0; 8];
    p[Var::Z.index()] = z;
    let d = r.den().eval_f64(&p);
    if d == 0.0 {
        return None;
    }
    Some(r.num().eval_f64(&p) / d)
}

fn eval_psi(e: &EigenPair, z: f64) -> Option<f64> {
    let q = eval_at(&e.q, z)?;
    let r = eval_at(&e.r, z)?;
    let g = num_traits::ToPrimitive::to_f64(&e.g)?;
    let zg = if e.g.is_zero() {
        1.0
    } else if e.g.is_integer() {
        z.powi(g as i32)
    } else if z > 0.0 {
        z.powf(g)
    } else {
        return None;
    };
    let v = q.exp() * zg * r;
    v.is_finite().then_some(v)
}

fn cell(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

/// Tab-separated samples of `V` and the eigenfunctions; poles give empty cells.
pub fn plot_data(v: &RatFun, eigen: &[EigenPair], lo: f64, hi: f64, samples: usize, bindings: &Bindings) -> Result<String> {
    if samples == 0 {
        return Err(Error::Invalid("at least one sample is needed".into()));
    }
    let v = bind(v, bindings)?;
    let eigen: Vec<EigenPair> = eigen
        .iter()
        .map(|e| Ok(EigenPair { q: bind(&e.q, bindings)?, r: bind(&e.r, bindings)?, ..e.clone() }))
        .collect::<Result<_>>()?;
    let mut out = String::from("z\tV");
    for e in &eigen {
        out.push_str(&format!("\tpsi[{}]", e.e0));
    }
    out.push('\n');
    for i in 0..samples {
        let z = if samples == 1 { lo } else { lo + (hi - lo) * i as f64 / (samples - 1) as f64 };
        out.push_str(&z.to_string());
        out.push('\t');
        out.push_str(&cell(eval_at(&v, z)));
        for e in &eigen {
            out.push('\t');
            out.push_str(&cell(eval_psi(e, z)));
        }
        out.push('\n');
    }
    Ok(out)
}
