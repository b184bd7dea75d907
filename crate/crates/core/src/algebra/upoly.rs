//! Dense univariate polynomials over a field: Euclid, square-free
//! decomposition, Sturm sequences and partial fractions.

use num_traits::Signed;

use super::linalg::Field;
use super::poly::{MPoly, Rational, Var};
use super::ratfun::RatFun;

/// Ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct UPoly<F: Field> {
    c: Vec<F>,
}

impl<F: Field> UPoly<F> {
    pub fn new(mut c: Vec<F>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn zero() -> Self {
        UPoly { c: Vec::new() }
    }

    pub fn constant(x: F) -> Self {
        UPoly::new(vec![x])
    }

    pub fn x() -> Self {
        UPoly::new(vec![F::zero(), F::one()])
    }

    pub fn coeffs(&self) -> &[F] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lc(&self) -> F {
        self.c.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        UPoly::new(
            (0..n)
                .map(|i| match (self.c.get(i), o.c.get(i)) {
                    (Some(a), Some(b)) => a.add(b),
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => F::zero(),
                })
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        UPoly { c: self.c.iter().map(|x| x.neg()).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![F::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] = c[i + j].add(&a.mul(b));
                }
            }
        }
        UPoly::new(c)
    }

    pub fn scale(&self, k: &F) -> Self {
        UPoly::new(self.c.iter().map(|x| x.mul(k)).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(UPoly::constant(F::one()), |acc, _| acc.mul(self))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&F::one().div(&self.lc()))
    }

    pub fn derivative(&self) -> Self {
        UPoly::new(self.c.iter().enumerate().skip(1).map(|(i, x)| x.mul(&F::from_i64(i as i64))).collect())
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.c.clone();
        let dd = d.degree();
        let lc_inv = F::one().div(&d.lc());
        if r.len() < d.c.len() {
            return (UPoly::zero(), self.clone());
        }
        let mut q = vec![F::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let f = r[k + dd].mul(&lc_inv);
            if !f.is_zero() {
                for (j, dj) in d.c.iter().enumerate() {
                    r[k + j] = r[k + j].sub(&f.mul(dj));
                }
            }
            q[k] = f;
        }
        r.truncate(dd);
        (UPoly::new(q), UPoly::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s·self + t·o = g` monic.
    pub fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (UPoly::constant(F::one()), UPoly::zero());
        let (mut t0, mut t1) = (UPoly::zero(), UPoly::constant(F::one()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        let k = F::one().div(&r0.lc());
        (r0.scale(&k), s0.scale(&k), t0.scale(&k))
    }

    pub fn eval(&self, x: &F) -> F {
        self.c.iter().rev().fold(F::zero(), |acc, c| acc.mul(x).add(c))
    }

    /// Yun's square-free decomposition: monic `(factor, multiplicity)` pairs.
    pub fn squarefree(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.degree() == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let mut a = f.gcd(&df);
        let mut b = f.div_rem(&a).0;
        let mut c = df.div_rem(&a).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        loop {
            a = b.gcd(&d);
            if a.degree() > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a).0;
            if b.degree() == 0 {
                break;
            }
            c = d.div_rem(&a).0;
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }
}

impl UPoly<RatFun> {
    /// Views an [`MPoly`] as a polynomial in `v` over the remaining symbols.
    pub fn from_mpoly(p: &MPoly, v: Var) -> Self {
        UPoly::new(p.coeffs_in(v).into_iter().map(RatFun::from_poly).collect())
    }

    /// Back to a rational function (coefficients may carry denominators).
    pub fn to_ratfun(&self, v: Var) -> RatFun {
        let x = RatFun::var(v);
        self.c.iter().rev().fold(RatFun::zero(), |acc, c| &(&acc * &x) + c)
    }
}

impl UPoly<Rational> {
    pub fn from_mpoly_rational(p: &MPoly, v: Var) -> Option<Self> {
        p.coeffs_in(v).into_iter().map(|c| c.constant_value()).collect::<Option<Vec<_>>>().map(UPoly::new)
    }

    fn sign_at(&self, x: Option<&Rational>, plus_inf: bool) -> i32 {
        let v = match x {
            Some(x) => self.eval(x),
            None => {
                let lc = self.lc();
                if plus_inf || self.degree() % 2 == 0 {
                    lc
                } else {
                    -lc
                }
            }
        };
        if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        }
    }

    /// Number of distinct real roots in `(lo, hi]`; `None` bounds are infinite.
    pub fn count_real_roots(&self, lo: Option<&Rational>, hi: Option<&Rational>) -> usize {
        if self.degree() == 0 {
            return 0;
        }
        let mut seq = vec![self.clone(), self.derivative()];
        while !seq.last().unwrap().is_zero() {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1]).neg();
            seq.push(r);
        }
        seq.pop();
        let changes = |x: Option<&Rational>, plus: bool| {
            let signs: Vec<i32> =
                seq.iter().map(|p| p.sign_at(x, plus)).filter(|&s| s != 0).collect();
            signs.windows(2).filter(|w| w[0] != w[1]).count()
        };
        changes(lo, false) - changes(hi, true)
    }
}

/// Partial fractions of `num/den` over the field `F`: returns the polynomial
/// part and, for each square-free factor `q` of multiplicity `m`, the
/// numerators of `1/q^j` for `j = 1..=m` (each of degree below `deg q`).
#[allow(clippy::type_complexity)]
pub fn partial_fractions<F: Field>(
    num: &UPoly<F>,
    den: &UPoly<F>,
) -> (UPoly<F>, Vec<(UPoly<F>, Vec<UPoly<F>>)>) {
    let (poly, mut rem) = num.div_rem(den);
    let k = F::one().div(&den.lc());
    rem = rem.scale(&k);
    let factors = den.squarefree();
    let mut out = Vec::new();
    let mut rest_den = den.monic();
    for (q, m) in factors {
        let qm = q.pow(m);
        rest_den = rest_den.div_rem(&qm).0;
        // rem/(qm·rest) = a/qm + b/rest with a·rest + b·qm = rem.
        let (_, s, _) = rest_den.ext_gcd(&qm);
        let a = rem.mul(&s).rem(&qm);
        let b = rem.sub(&a.mul(&rest_den)).div_rem(&qm).0;
        rem = b;
        // Expand a in powers of q: a = Σ c_j q^{m-j}.
        let mut parts = vec![UPoly::zero(); m];
        let mut t = a;
        for j in (1..=m).rev() {
            let (qq, r) = t.div_rem(&q);
            parts[j - 1] = r;
            t = qq;
        }
        out.push((q, parts));
    }
    (poly, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::int;

    fn p(c: &[i64]) -> UPoly<Rational> {
        UPoly::new(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn sturm_counts() {
        // (x-1)(x+2)(x^2+1)
        let f = p(&[-1, 1]).mul(&p(&[2, 1])).mul(&p(&[1, 0, 1]));
        assert_eq!(f.count_real_roots(None, None), 2);
        assert_eq!(f.count_real_roots(Some(&int(0)), None), 1);
        assert_eq!(f.count_real_roots(None, Some(&int(0))), 1);
        assert_eq!(p(&[2, 2, 1]).count_real_roots(None, None), 0);
    }

    #[test]
    fn yun_decomposition() {
        let f = p(&[1, 1]).pow(2).mul(&p(&[-3, 1])).mul(&p(&[1, 0, 2]).pow(3));
        let sf = f.squarefree();
        assert_eq!(sf.len(), 3);
        assert_eq!(sf[0], (p(&[-3, 1]), 1));
        assert_eq!(sf[1], (p(&[1, 1]), 2));
        assert_eq!(sf[2].1, 3);
    }

    #[test]
    fn partial_fraction_reconstructs() {
        let den = p(&[1, 0, 2]).pow(2).mul(&p(&[0, 1]));
        let num = p(&[3, -1, 0, 5, 7, 1, 1]);
        let (poly, parts) = partial_fractions(&num, &den);
        let mut total = poly.mul(&den);
        let dm = den.monic();
        let k = den.lc();
        for (q, ps) in &parts {
            for (j, a) in ps.iter().enumerate() {
                let other = dm.div_rem(&q.pow(j + 1)).0;
                total = total.add(&a.mul(&other).scale(&k));
            }
        }
        assert_eq!(total, num);
    }
}
