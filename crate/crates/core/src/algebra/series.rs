//! Truncated power series in `E` with tower coefficients.

use super::poly::Var;
use super::ratfun::RatFun;
use super::tower::TowerElem;
use crate::error::{Error, Result};

/// `Σ_{j<n} coeffs[j]·E^j + O(E^n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ESeries {
    coeffs: Vec<TowerElem>,
}

impl ESeries {
    /// Pads with zeros or truncates to exactly `order` coefficients.
    pub fn new(mut coeffs: Vec<TowerElem>, order: usize) -> ESeries {
        coeffs.resize(order, TowerElem::zero());
        ESeries { coeffs }
    }

    pub fn from_ratfuns(coeffs: &[RatFun]) -> ESeries {
        ESeries { coeffs: coeffs.iter().cloned().map(TowerElem::from).collect() }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[TowerElem] {
        &self.coeffs
    }

    pub fn add(&self, o: &ESeries) -> Result<ESeries> {
        let n = self.order().min(o.order());
        let coeffs = (0..n).map(|j| self.coeffs[j].try_add(&o.coeffs[j])).collect::<Result<_>>()?;
        Ok(ESeries { coeffs })
    }

    pub fn mul(&self, o: &ESeries) -> Result<ESeries> {
        let n = self.order().min(o.order());
        let mut coeffs = Vec::with_capacity(n);
        for j in 0..n {
            let mut acc = TowerElem::zero();
            for i in 0..=j {
                acc = acc.try_add(&(&self.coeffs[i] * &o.coeffs[j - i]))?;
            }
            coeffs.push(acc);
        }
        Ok(ESeries { coeffs })
    }

    pub fn inv(&self) -> Result<ESeries> {
        let n = self.order();
        let c0 = self.coeffs.first().ok_or(Error::ZeroLeadingCoefficient)?;
        if c0.is_zero() {
            return Err(Error::ZeroLeadingCoefficient);
        }
        let c0_inv = c0.inv()?;
        let mut b: Vec<TowerElem> = vec![c0_inv.clone()];
        for j in 1..n {
            let mut acc = TowerElem::zero();
            for i in 1..=j {
                acc = acc.try_add(&(&self.coeffs[i] * &b[j - i]))?;
            }
            b.push(-&(&acc * &c0_inv));
        }
        Ok(ESeries { coeffs: b })
    }

    /// Coefficient-wise derivative in `z`.
    pub fn derivative_z(&self) -> ESeries {
        ESeries { coeffs: self.coeffs.iter().map(|c| c.derivative(Var::Z)).collect() }
    }

    /// `−Y′/Y` at the same truncation order.
    pub fn neg_log_derivative(&self) -> Result<ESeries> {
        let d = self.derivative_z();
        let q = d.mul(&self.inv()?)?;
        Ok(ESeries { coeffs: q.coeffs.iter().map(|c| -c).collect() })
    }

    /// Coefficients as rational functions, or the index of the first
    /// coefficient that still involves a tower generator.
    pub fn demote(&self) -> Result<Vec<RatFun>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| c.as_ratfun().ok_or(Error::NonRationalCoefficient(j)))
            .collect()
    }
}

/// `−Y′/Y` demoted to rational coefficients.
pub fn series_log_derivative(y: &ESeries) -> Result<Vec<RatFun>> {
    let c0 = y.coeffs.first().ok_or(Error::ZeroLeadingCoefficient)?;
    if c0.is_zero() {
        return Err(Error::ZeroLeadingCoefficient);
    }
    let m = match y.neg_log_derivative() {
        Ok(m) => m,
        Err(Error::NotInvertible(_)) => return Err(Error::NonRationalCoefficient(0)),
        Err(e) => return Err(e),
    };
    m.demote()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::int;
    use crate::algebra::tower::Gens;

    fn z() -> RatFun {
        RatFun::z()
    }

    #[test]
    fn log_derivative_of_sqrt() {
        let y = ESeries::new(vec![TowerElem::gen(Gens::R)], 1);
        let m = series_log_derivative(&y).unwrap();
        assert_eq!(m, vec![z().scale(&int(-2)).inv().unwrap()]);
    }

    #[test]
    fn log_derivative_one_plus_ze() {
        let y = ESeries::from_ratfuns(&[RatFun::one(), z()]);
        let m = series_log_derivative(&y).unwrap();
        assert_eq!(m, vec![RatFun::zero(), RatFun::int(-1)]);
    }

    #[test]
    fn log_derivative_with_logarithm() {
        let a = RatFun::var(Var::A);
        let b = RatFun::var(Var::B);
        let c1 = &TowerElem::term(Gens::R, &a + &z().pow(2))
            + &TowerElem::term(Gens { log: 1, r: true, ..Gens::ONE }, b.clone());
        let c0 = TowerElem::term(Gens::R, RatFun::int(-4));
        let m = series_log_derivative(&ESeries::new(vec![c0, c1], 2)).unwrap();
        let expected1 = (&z().pow(2).scale(&int(2)) + &b) / z().scale(&int(4));
        assert_eq!(m[0], z().scale(&int(-2)).inv().unwrap());
        assert_eq!(m[1], expected1);
    }

    #[test]
    fn log_in_leading_coefficient_is_flagged() {
        let c0 = TowerElem::term(Gens { log: 1, r: true, ..Gens::ONE }, RatFun::one());
        let y = ESeries::new(vec![c0], 1);
        assert_eq!(series_log_derivative(&y), Err(Error::NonRationalCoefficient(0)));
    }
}
