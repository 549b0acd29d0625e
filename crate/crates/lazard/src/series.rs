//! Truncated power series over a graded polynomial ring.
//!
//! A series is a polynomial together with a set of formal variables, a total
//! formal-degree bound `D`, and an optional weight bound. Multiplication
//! re-truncates, so truncating then multiplying agrees with multiplying then
//! truncating. Composition and compositional reversion are the devices the
//! formal-group-law construction is built on.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::{Bounds, GenId, GradedPoly, Monomial, Table};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    poly: GradedPoly,
    vars: Vec<GenId>,
    degree: u32,
    weight: Option<u32>,
}

impl TruncatedSeries {
    /// Wrap a polynomial, truncating it to the stated bounds.
    pub fn new(
        poly: GradedPoly,
        vars: &[&str],
        degree: u32,
        weight: Option<u32>,
    ) -> Result<Self> {
        let table = poly.table().clone();
        let ids = vars
            .iter()
            .map(|v| table.require(v))
            .collect::<Result<Vec<_>>>()?;
        let bounds = Bounds {
            formal: ids.clone(),
            max_fdeg: Some(degree),
            max_weight: weight,
            caps: vec![],
        };
        Ok(TruncatedSeries {
            poly: poly.truncate(&bounds),
            vars: ids,
            degree,
            weight,
        })
    }

    /// The identity series `t` in the given variable.
    pub fn identity(table: &Table, var: &str, degree: u32) -> Result<TruncatedSeries> {
        TruncatedSeries::new(GradedPoly::generator(table, var)?, &[var], degree, None)
    }

    pub fn poly(&self) -> &GradedPoly {
        &self.poly
    }

    pub fn table(&self) -> &Table {
        self.poly.table()
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree
    }

    pub fn variables(&self) -> &[GenId] {
        &self.vars
    }

    fn bounds(&self) -> Bounds {
        Bounds {
            formal: self.vars.clone(),
            max_fdeg: Some(self.degree),
            max_weight: self.weight,
            caps: vec![],
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let poly = self.poly.add(&other.poly)?;
        let mut s = self.clone();
        s.degree = self.degree.min(other.degree);
        s.poly = poly.truncate(&s.bounds());
        Ok(s)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.poly.table() != other.poly.table() {
            return Err(Error::TableMismatch);
        }
        let mut s = self.clone();
        s.degree = self.degree.min(other.degree);
        s.poly = self.poly.mul_bounded(&other.poly, &s.bounds());
        Ok(s)
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> Self {
        let mut s = self.clone();
        s.poly = self.poly.scale(k);
        s
    }

    /// Coefficient of `var^k` (the series must be univariate), with the
    /// variable stripped.
    pub fn coefficient(&self, k: u16) -> Result<GradedPoly> {
        let &[var] = self.vars.as_slice() else {
            return Err(Error::NotUnivariate);
        };
        Ok(self.poly.coefficient_of_power(var, k))
    }

    /// Substitute `inner` for the single variable of `self`. Every term of the
    /// inner series must involve a formal variable (zero constant term); the
    /// result is truncated at `min` of the two degree bounds over the inner
    /// variables.
    pub fn compose(&self, inner: &TruncatedSeries) -> Result<TruncatedSeries> {
        let &[var] = self.vars.as_slice() else {
            return Err(Error::NotUnivariate);
        };
        if inner
            .poly
            .terms()
            .any(|(m, _)| m.degree_in(&inner.vars) == 0)
        {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut result = TruncatedSeries {
            poly: GradedPoly::zero(inner.table()),
            vars: inner.vars.clone(),
            degree: self.degree.min(inner.degree),
            weight: self.weight.or(inner.weight),
        };
        let bounds = result.bounds();
        // Horner evaluation over the coefficients of self in its variable.
        let coeffs = self.poly.collect_along(var);
        let maxk = coeffs.keys().next_back().copied().unwrap_or(0);
        let mut acc = GradedPoly::zero(inner.table());
        for k in (0..=maxk).rev() {
            acc = acc.mul_bounded(&inner.poly, &bounds);
            if let Some(c) = coeffs.get(&k) {
                acc = acc.add_raw(&c.retable(inner.table())?);
            }
        }
        result.poly = acc.truncate(&bounds);
        Ok(result)
    }

    /// Compositional inverse: for `s = t + higher terms`, the series `r` with
    /// `compose(s, r) = compose(r, s) = t` up to the degree bound. Solved
    /// degree by degree; the linear coefficient must be exactly 1.
    pub fn reverse(&self) -> Result<TruncatedSeries> {
        let &[var] = self.vars.as_slice() else {
            return Err(Error::NotUnivariate);
        };
        if !self.coefficient(0)?.is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        if !self
            .coefficient(1)?
            .sub(&GradedPoly::one(self.table()))?
            .is_zero()
        {
            return Err(Error::NonunitLinear);
        }
        let name = self.table().generator(var).name.clone();
        let mut r = TruncatedSeries {
            poly: GradedPoly::generator(self.table(), &name)?,
            vars: self.vars.clone(),
            degree: self.degree,
            weight: self.weight,
        };
        for d in 2..=self.degree {
            let mut partial = self.clone();
            partial.degree = d;
            partial.poly = partial.poly.truncate(&partial.bounds());
            let e = partial.compose(&r)?;
            let c = e.coefficient(d as u16)?;
            if c.is_zero() {
                continue;
            }
            // Subtract c * t^d; the unit linear coefficient of `self` makes
            // this cancel the degree-d defect without touching lower degrees.
            let td = Monomial::from_pairs([(var, d as u16)]);
            let mut corr = GradedPoly::zero(self.table());
            for (m, v) in c.terms() {
                let (full, sign) = m.mul(&td, self.table()).expect("t is even");
                debug_assert_eq!(sign, 1);
                corr.add_term(full, -v.clone());
            }
            r.poly = r.poly.add_raw(&corr);
        }
        Ok(r)
    }
}
