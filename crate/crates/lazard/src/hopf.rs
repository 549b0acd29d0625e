//! The Hopf algebra of the complex bordism of infinite projective space.
//!
//! Classes live in two bases over the formal-group-law coefficient ring: the
//! dual basis `beta_n` (dual to powers of the orientation class) and the
//! geometric basis `p_n` (classes of linear subspaces). The structure maps:
//!
//! - basis change: `beta_n = sum a_{1i} p_{n-i}`,
//!   `p_n = sum cp(i) beta_{n-i}`, mutually inverse;
//! - coproduct: `beta_n -> sum_{i+j=n} beta_i (x) beta_j` in the dual basis,
//!   `p_n -> sum a_{1,i+j-n} p_{n-i} (x) p_{n-j}` directly in the geometric
//!   basis;
//! - product (pushforward along the Segre embedding):
//!   `beta_i * beta_j = sum_k a^(k)_{ij} beta_k` in the dual basis and the
//!   `s^(r)_{n,m}` coefficient formula directly in the geometric basis.
//!
//! The geometric-basis operations are implemented both directly and by
//! conjugation through the dual basis; their agreement is the module's
//! central oracle and part of the acceptance suite.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::fgl::Fgl;
use crate::report::{Check, Report};
use crate::ring::{GradedPoly, Table};

/// Which basis a class is expressed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    /// Dual basis `beta_n`.
    Beta,
    /// Geometric basis `p_n` of linear subspaces.
    P,
}

impl BasisKind {
    pub fn label(self) -> &'static str {
        match self {
            BasisKind::Beta => "beta",
            BasisKind::P => "p",
        }
    }
}

/// Finite linear combination of basis elements with coefficients in the
/// formal-group-law coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfClass {
    pub basis: BasisKind,
    pub terms: BTreeMap<u32, GradedPoly>,
}

/// Element of the tensor square, same basis on both factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorClass {
    pub basis: BasisKind,
    pub terms: BTreeMap<(u32, u32), GradedPoly>,
}

/// Coefficients of a triple tensor, used by the coassociativity checks.
pub type TripleTensor = BTreeMap<(u32, u32, u32), GradedPoly>;

impl HopfClass {
    fn normalized(self) -> Self {
        HopfClass {
            basis: self.basis,
            terms: self.terms.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, n: u32, table: &Table) -> GradedPoly {
        self.terms
            .get(&n)
            .cloned()
            .unwrap_or_else(|| GradedPoly::zero(table))
    }

    /// Homological degree when every term satisfies
    /// `weight(coefficient) + index = d`; `None` for inhomogeneous classes.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut deg = None;
        for (&n, c) in &self.terms {
            let w = c.homogeneous_weight()?;
            let d = w + n;
            match deg {
                None => deg = Some(d),
                Some(prev) if prev != d => return None,
                _ => {}
            }
        }
        deg
    }
}

impl TensorClass {
    fn normalized(self) -> Self {
        TensorClass {
            basis: self.basis,
            terms: self.terms.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// The Hopf algebra over a fixed formal group law truncation.
pub struct HopfAlgebra {
    fgl: Arc<Fgl>,
}

impl HopfAlgebra {
    pub fn new(fgl: Arc<Fgl>) -> Self {
        HopfAlgebra { fgl }
    }

    pub fn fgl(&self) -> &Arc<Fgl> {
        &self.fgl
    }

    pub fn table(&self) -> &Table {
        self.fgl.coeff_table()
    }

    pub fn basis_element(&self, basis: BasisKind, n: u32) -> HopfClass {
        let mut terms = BTreeMap::new();
        terms.insert(n, GradedPoly::one(self.table()));
        HopfClass { basis, terms }
    }

    pub fn class(
        &self,
        basis: BasisKind,
        terms: impl IntoIterator<Item = (u32, GradedPoly)>,
    ) -> HopfClass {
        HopfClass { basis, terms: terms.into_iter().collect() }.normalized()
    }

    /// Largest index used by a class; indices must stay below the truncation
    /// degree so that every coefficient `a_{1,i}` the formulas touch exists.
    fn assert_within_truncation(&self, c: &HopfClass) {
        if let Some((&n, _)) = c.terms.iter().next_back() {
            assert!(
                n < self.fgl.degree(),
                "index {n} needs truncation degree {}, have {}",
                n + 1,
                self.fgl.degree()
            );
        }
    }

    /// Express a class in the geometric basis via `beta_n = sum a_{1i} p_{n-i}`.
    pub fn to_p_basis(&self, c: &HopfClass) -> HopfClass {
        self.assert_within_truncation(c);
        match c.basis {
            BasisKind::P => c.clone(),
            BasisKind::Beta => {
                let mut terms: BTreeMap<u32, GradedPoly> = BTreeMap::new();
                for (&n, coeff) in &c.terms {
                    for i in 0..=n {
                        let contrib = self.fgl.eta(i as i64).mul_raw(coeff);
                        accumulate(&mut terms, n - i, contrib, self.table());
                    }
                }
                HopfClass { basis: BasisKind::P, terms }.normalized()
            }
        }
    }

    /// Express a class in the dual basis via `p_n = sum cp(i) beta_{n-i}`.
    pub fn to_beta_basis(&self, c: &HopfClass) -> Result<HopfClass> {
        match c.basis {
            BasisKind::Beta => Ok(c.clone()),
            BasisKind::P => {
                let mut terms: BTreeMap<u32, GradedPoly> = BTreeMap::new();
                for (&n, coeff) in &c.terms {
                    for i in 0..=n {
                        let contrib = self.fgl.cp_class(i)?.mul_raw(coeff);
                        accumulate(&mut terms, n - i, contrib, self.table());
                    }
                }
                Ok(HopfClass { basis: BasisKind::Beta, terms }.normalized())
            }
        }
    }

    /// Coproduct in the basis of the input: index splitting
    /// `beta_n -> sum_{i+j=n} beta_i (x) beta_j` in the dual basis, the
    /// direct coefficient formula `sum a_{1,i+j-n} p_{n-i} (x) p_{n-j}` in
    /// the geometric one.
    pub fn coproduct(&self, c: &HopfClass) -> TensorClass {
        if c.basis == BasisKind::P {
            self.assert_within_truncation(c);
        }
        let mut terms: BTreeMap<(u32, u32), GradedPoly> = BTreeMap::new();
        match c.basis {
            BasisKind::Beta => {
                for (&n, coeff) in &c.terms {
                    for i in 0..=n {
                        accumulate2(&mut terms, (i, n - i), coeff.clone(), self.table());
                    }
                }
            }
            BasisKind::P => {
                for (&n, coeff) in &c.terms {
                    for i in 0..=n {
                        for j in 0..=n {
                            let a = self.fgl.a(1, i as i64 + j as i64 - n as i64);
                            if a.is_zero() {
                                continue;
                            }
                            accumulate2(
                                &mut terms,
                                (n - i, n - j),
                                a.mul_raw(coeff),
                                self.table(),
                            );
                        }
                    }
                }
            }
        }
        TensorClass { basis: c.basis, terms }.normalized()
    }

    /// The coproduct computed by the other route: convert to the other basis,
    /// apply its coproduct, and convert each tensor factor back.
    pub fn coproduct_conjugated(&self, c: &HopfClass) -> Result<TensorClass> {
        let other = match c.basis {
            BasisKind::Beta => self.to_p_basis(c),
            BasisKind::P => self.to_beta_basis(c)?,
        };
        let cop = self.coproduct(&other);
        self.tensor_to_basis(&cop, c.basis)
    }

    /// Convert both tensor factors to the requested basis.
    pub fn tensor_to_basis(&self, t: &TensorClass, basis: BasisKind) -> Result<TensorClass> {
        if t.basis == basis {
            return Ok(t.clone());
        }
        let mut terms: BTreeMap<(u32, u32), GradedPoly> = BTreeMap::new();
        for (&(n, m), coeff) in &t.terms {
            let left = self.convert_index(t.basis, basis, n)?;
            let right = self.convert_index(t.basis, basis, m)?;
            for (&i, ci) in &left.terms {
                for (&j, cj) in &right.terms {
                    let c = ci.mul_raw(cj).mul_raw(coeff);
                    accumulate2(&mut terms, (i, j), c, self.table());
                }
            }
        }
        Ok(TensorClass { basis, terms }.normalized())
    }

    fn convert_index(&self, from: BasisKind, to: BasisKind, n: u32) -> Result<HopfClass> {
        let c = self.basis_element(from, n);
        match to {
            BasisKind::Beta => self.to_beta_basis(&c),
            BasisKind::P => Ok(self.to_p_basis(&c)),
        }
    }

    /// Product (pushforward along the Segre embedding). Both inputs must be in
    /// the same basis; the result is in that basis, computed by the direct
    /// formula for that basis.
    pub fn product(&self, a: &HopfClass, b: &HopfClass) -> Result<HopfClass> {
        assert_eq!(a.basis, b.basis, "product requires a common basis");
        let mut terms: BTreeMap<u32, GradedPoly> = BTreeMap::new();
        for (&n, ca) in &a.terms {
            for (&m, cb) in &b.terms {
                let coeff = ca.mul_raw(cb);
                let expansion = match a.basis {
                    BasisKind::Beta => self.product_beta(n, m)?,
                    BasisKind::P => self.product_p_direct(n, m)?,
                };
                for (k, ck) in expansion {
                    accumulate(&mut terms, k, ck.mul_raw(&coeff), self.table());
                }
            }
        }
        Ok(HopfClass { basis: a.basis, terms }.normalized())
    }

    /// The product by the conjugated route (through the other basis).
    pub fn product_conjugated(&self, a: &HopfClass, b: &HopfClass) -> Result<HopfClass> {
        assert_eq!(a.basis, b.basis, "product requires a common basis");
        let (ca, cb) = match a.basis {
            BasisKind::Beta => (self.to_p_basis(a), self.to_p_basis(b)),
            BasisKind::P => (self.to_beta_basis(a)?, self.to_beta_basis(b)?),
        };
        let prod = self.product(&ca, &cb)?;
        match a.basis {
            BasisKind::Beta => self.to_beta_basis(&prod),
            BasisKind::P => Ok(self.to_p_basis(&prod)),
        }
    }

    /// `beta_n * beta_m = sum_k a^(k)_{nm} beta_k`.
    fn product_beta(&self, n: u32, m: u32) -> Result<Vec<(u32, GradedPoly)>> {
        if n + m > self.fgl.degree() {
            return Err(Error::Bound { need: n + m, have: self.fgl.degree() });
        }
        let mut out = Vec::new();
        for k in 0..=(n + m) {
            let c = self.fgl.power_coefficient(k, n as i64, m as i64)?;
            if !c.is_zero() {
                out.push((k, c));
            }
        }
        Ok(out)
    }

    /// Geometric-basis structure constants `s^(r)_{n,m}`, each one
    /// weight-homogeneous of weight `n + m - r`:
    /// `s^(r) = sum_{i,j,k} cp(i) cp(j) a^(r+k)_{n-i,m-j} a_{1k}`. The sum is
    /// cut where a factor is identically zero: `i <= n`, `j <= m`, and
    /// `r + k <= (n-i) + (m-j)` so the power coefficient can survive.
    pub fn segre_coefficient(&self, r: u32, n: u32, m: u32) -> Result<GradedPoly> {
        let mut out = GradedPoly::zero(self.table());
        for i in 0..=n {
            for j in 0..=m {
                let rest = (n - i) + (m - j);
                if rest < r {
                    continue;
                }
                let cp_ij = self.fgl.cp_class(i)?.mul_raw(&self.fgl.cp_class(j)?);
                for k in 0..=(rest - r) {
                    let apow = self.fgl.power_coefficient(
                        r + k,
                        (n - i) as i64,
                        (m - j) as i64,
                    )?;
                    if apow.is_zero() {
                        continue;
                    }
                    let term = cp_ij.mul_raw(&apow).mul_raw(&self.fgl.eta(k as i64));
                    out = out.add_raw(&term);
                }
            }
        }
        Ok(out)
    }

    fn product_p_direct(&self, n: u32, m: u32) -> Result<Vec<(u32, GradedPoly)>> {
        if n + m > self.fgl.degree() {
            return Err(Error::Bound { need: n + m, have: self.fgl.degree() });
        }
        let mut out = Vec::new();
        for r in 0..=(n + m) {
            let c = self.segre_coefficient(r, n, m)?;
            if !c.is_zero() {
                out.push((r, c));
            }
        }
        Ok(out)
    }

    /// Decomposition of the Segre pushforward of `p_n (x) p_m` in the
    /// geometric basis: the full list of `(r, s^(r)_{n,m})` with nonzero
    /// coefficient.
    pub fn segre_decomposition(&self, n: u32, m: u32) -> Result<Vec<(u32, GradedPoly)>> {
        self.product_p_direct(n, m)
    }

    /// Counit: keeps the `beta_0` coefficient, kills `beta_n` for `n >= 1`.
    pub fn counit(&self, c: &HopfClass) -> Result<GradedPoly> {
        let beta = self.to_beta_basis(c)?;
        Ok(beta.coefficient(0, self.table()))
    }

    /// Componentwise product on the tensor square (even grading, no signs).
    pub fn tensor_product(&self, a: &TensorClass, b: &TensorClass) -> Result<TensorClass> {
        assert_eq!(a.basis, b.basis);
        let mut terms: BTreeMap<(u32, u32), GradedPoly> = BTreeMap::new();
        for (&(n1, m1), c1) in &a.terms {
            for (&(n2, m2), c2) in &b.terms {
                let coeff = c1.mul_raw(c2);
                let left = match a.basis {
                    BasisKind::Beta => self.product_beta(n1, n2)?,
                    BasisKind::P => self.product_p_direct(n1, n2)?,
                };
                let right = match a.basis {
                    BasisKind::Beta => self.product_beta(m1, m2)?,
                    BasisKind::P => self.product_p_direct(m1, m2)?,
                };
                for (i, ci) in &left {
                    for (j, cj) in &right {
                        let c = ci.mul_raw(cj).mul_raw(&coeff);
                        accumulate2(&mut terms, (*i, *j), c, self.table());
                    }
                }
            }
        }
        Ok(TensorClass { basis: a.basis, terms }.normalized())
    }

    /// Both triple coproducts `(Delta (x) id) Delta` and `(id (x) Delta) Delta`
    /// of a class, as maps `(i, j, k) -> coefficient`.
    pub fn triple_coproducts(&self, c: &HopfClass) -> (TripleTensor, TripleTensor) {
        let cop = self.coproduct(c);
        let mut left = TripleTensor::new();
        let mut right = TripleTensor::new();
        for (&(n, m), coeff) in &cop.terms {
            let dn = self.coproduct(&self.basis_element(c.basis, n));
            for (&(i, j), ci) in &dn.terms {
                let v = ci.mul_raw(coeff);
                accumulate3(&mut left, (i, j, m), v, self.table());
            }
            let dm = self.coproduct(&self.basis_element(c.basis, m));
            for (&(j, k), cj) in &dm.terms {
                let v = cj.mul_raw(coeff);
                accumulate3(&mut right, (n, j, k), v, self.table());
            }
        }
        left.retain(|_, v| !v.is_zero());
        right.retain(|_, v| !v.is_zero());
        (left, right)
    }

    /// Structural verification used by the CLI: basis-change round trips,
    /// two-route coproduct and product agreement, coassociativity, counit,
    /// associativity/commutativity, Hopf compatibility, grading.
    pub fn verify(&self, max_index: u32, product_limit: u32, hopf_limit: u32) -> Report {
        let mut report = Report::new("hopf");
        let t = self.table();

        let mut bad = Vec::new();
        for n in 0..=max_index {
            for basis in [BasisKind::Beta, BasisKind::P] {
                let c = self.basis_element(basis, n);
                let round = match basis {
                    BasisKind::Beta => {
                        self.to_beta_basis(&self.to_p_basis(&c)).unwrap()
                    }
                    BasisKind::P => {
                        self.to_p_basis(&self.to_beta_basis(&c).unwrap())
                    }
                };
                if round != c {
                    bad.push(format!("{}_{n}", basis.label()));
                }
            }
        }
        report.push(Check::from_failures("basis-change round trip", bad));

        let mut bad = Vec::new();
        for n in 0..=max_index.min(self.fgl.degree().saturating_sub(1)) {
            let c = self.basis_element(BasisKind::P, n);
            let direct = self.coproduct(&c);
            let conj = self.coproduct_conjugated(&c).unwrap();
            if direct != conj {
                bad.push(format!("p_{n}"));
            }
        }
        report.push(Check::from_failures("coproduct two-route", bad));

        let mut bad = Vec::new();
        for n in 0..=max_index {
            for basis in [BasisKind::Beta, BasisKind::P] {
                let c = self.basis_element(basis, n);
                let (l, r) = self.triple_coproducts(&c);
                if l != r {
                    bad.push(format!("{}_{n}", basis.label()));
                }
                // counit: (eps (x) id) Delta = id
                let cop = self.coproduct(&c);
                let mut folded: BTreeMap<u32, GradedPoly> = BTreeMap::new();
                for (&(i, j), coeff) in &cop.terms {
                    let eps = self
                        .counit(&self.class(basis, [(i, coeff.clone())]))
                        .unwrap();
                    accumulate(&mut folded, j, eps, t);
                }
                folded.retain(|_, v| !v.is_zero());
                if folded != c.terms {
                    bad.push(format!("counit {}_{n}", basis.label()));
                }
            }
        }
        report.push(Check::from_failures("coassociativity and counit", bad));

        let mut bad = Vec::new();
        for n in 0..=product_limit {
            for m in 0..=(product_limit - n) {
                let pn = self.basis_element(BasisKind::P, n);
                let pm = self.basis_element(BasisKind::P, m);
                let direct = self.product(&pn, &pm).unwrap();
                let conj = self.product_conjugated(&pn, &pm).unwrap();
                if direct != conj {
                    bad.push(format!("p_{n}*p_{m}"));
                }
                if direct != self.product(&pm, &pn).unwrap() {
                    bad.push(format!("commutativity p_{n},p_{m}"));
                }
                // leading coefficient
                let lead = self.segre_coefficient(n + m, n, m).unwrap();
                if lead != GradedPoly::constant(t, binomial(n + m, n)) {
                    bad.push(format!("leading s({n},{m})"));
                }
            }
        }
        report.push(Check::from_failures("product two-route", bad));

        let mut bad = Vec::new();
        for n in 0..=product_limit {
            for m in 0..=(product_limit - n) {
                for k in 0..=(product_limit - n - m) {
                    for basis in [BasisKind::Beta, BasisKind::P] {
                        let a = self.basis_element(basis, n);
                        let b = self.basis_element(basis, m);
                        let c = self.basis_element(basis, k);
                        let ab_c = self
                            .product(&self.product(&a, &b).unwrap(), &c)
                            .unwrap();
                        let a_bc = self
                            .product(&a, &self.product(&b, &c).unwrap())
                            .unwrap();
                        if ab_c != a_bc {
                            bad.push(format!(
                                "assoc {} ({n},{m},{k})",
                                basis.label()
                            ));
                        }
                    }
                }
            }
        }
        report.push(Check::from_failures("product associativity", bad));

        let mut bad = Vec::new();
        for n in 0..=hopf_limit {
            for m in 0..=(hopf_limit - n) {
                let a = self.basis_element(BasisKind::Beta, n);
                let b = self.basis_element(BasisKind::Beta, m);
                let lhs = self.coproduct(&self.product(&a, &b).unwrap());
                let rhs = self
                    .tensor_product(&self.coproduct(&a), &self.coproduct(&b))
                    .unwrap();
                if lhs != rhs {
                    bad.push(format!("Delta(beta_{n} beta_{m})"));
                }
            }
        }
        report.push(Check::from_failures("Hopf compatibility", bad));

        let mut bad = Vec::new();
        for n in 0..=product_limit {
            for m in 0..=(product_limit - n) {
                for (r, c) in self.segre_decomposition(n, m).unwrap() {
                    if !c.is_homogeneous_of_weight(n + m - r) {
                        bad.push(format!("s^({r})_({n},{m})"));
                    }
                }
            }
        }
        report.push(Check::from_failures("grading", bad));
        report
    }
}

fn accumulate(
    map: &mut BTreeMap<u32, GradedPoly>,
    key: u32,
    val: GradedPoly,
    table: &Table,
) {
    map.entry(key)
        .or_insert_with(|| GradedPoly::zero(table))
        .add_assign_raw(&val);
}

fn accumulate2(
    map: &mut BTreeMap<(u32, u32), GradedPoly>,
    key: (u32, u32),
    val: GradedPoly,
    table: &Table,
) {
    map.entry(key)
        .or_insert_with(|| GradedPoly::zero(table))
        .add_assign_raw(&val);
}

fn accumulate3(
    map: &mut TripleTensor,
    key: (u32, u32, u32),
    val: GradedPoly,
    table: &Table,
) {
    map.entry(key)
        .or_insert_with(|| GradedPoly::zero(table))
        .add_assign_raw(&val);
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse, to_canonical};
    use rand::Rng;
    use rand::SeedableRng;

    fn alg(degree: u32) -> HopfAlgebra {
        HopfAlgebra::new(Fgl::universal(degree))
    }

    #[test]
    fn p0_is_beta0() {
        let h = alg(4);
        let p0 = h.basis_element(BasisKind::P, 0);
        let b = h.to_beta_basis(&p0).unwrap();
        assert_eq!(b.terms, h.basis_element(BasisKind::Beta, 0).terms);
    }

    #[test]
    fn p1_in_beta_basis() {
        let h = alg(4);
        let p1 = h.basis_element(BasisKind::P, 1);
        let b = h.to_beta_basis(&p1).unwrap();
        // p_1 = beta_1 + cp(1) beta_0 = beta_1 - 2 b1 beta_0
        assert_eq!(to_canonical(&b.coefficient(1, h.table())), "1");
        assert_eq!(to_canonical(&b.coefficient(0, h.table())), "-2*b1");
    }

    #[test]
    fn beta_in_p_basis() {
        let h = alg(4);
        let b1 = h.basis_element(BasisKind::Beta, 1);
        let p = h.to_p_basis(&b1);
        assert_eq!(to_canonical(&p.coefficient(1, h.table())), "1");
        assert_eq!(to_canonical(&p.coefficient(0, h.table())), "2*b1");
        let b2 = h.basis_element(BasisKind::Beta, 2);
        let p = h.to_p_basis(&b2);
        assert_eq!(to_canonical(&p.coefficient(2, h.table())), "1");
        assert_eq!(p.coefficient(1, h.table()), h.fgl().a(1, 1));
        assert_eq!(p.coefficient(0, h.table()), h.fgl().a(1, 2));
    }

    #[test]
    fn round_trip_on_random_classes() {
        let h = alg(11);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let t = h.table();
        for _ in 0..25 {
            let mut terms = BTreeMap::new();
            for n in 0..=10u32 {
                if rng.gen_bool(0.4) {
                    let c = random_coeff(&mut rng, t);
                    if !c.is_zero() {
                        terms.insert(n, c);
                    }
                }
            }
            for basis in [BasisKind::Beta, BasisKind::P] {
                let c = HopfClass { basis, terms: terms.clone() };
                let round = match basis {
                    BasisKind::Beta => h.to_beta_basis(&h.to_p_basis(&c)).unwrap(),
                    BasisKind::P => h.to_p_basis(&h.to_beta_basis(&c).unwrap()),
                };
                assert_eq!(round, c);
            }
        }
    }

    fn random_coeff(rng: &mut impl Rng, t: &Table) -> GradedPoly {
        let mut c = GradedPoly::zero(t);
        let gens: Vec<String> = t.generators().map(|(_, g)| g.name.clone()).collect();
        for _ in 0..rng.gen_range(0..3) {
            let k: i64 = rng.gen_range(-4..=4);
            match rng.gen_range(0..3) {
                0 => c = c.add(&GradedPoly::constant(t, k)).unwrap(),
                1 => {
                    let g = &gens[rng.gen_range(0..gens.len())];
                    c = c
                        .add(&GradedPoly::monomial(t, &[(g, 1)], k).unwrap())
                        .unwrap();
                }
                _ => {
                    let g1 = &gens[rng.gen_range(0..gens.len())];
                    let g2 = &gens[rng.gen_range(0..gens.len())];
                    let m = if g1 == g2 {
                        GradedPoly::monomial(t, &[(g1, 2)], k)
                    } else {
                        GradedPoly::monomial(t, &[(g1, 1), (g2, 1)], k)
                    };
                    c = c.add(&m.unwrap()).unwrap();
                }
            }
        }
        c
    }

    #[test]
    fn beta_coproduct_is_sum_of_splits() {
        let h = alg(4);
        let b2 = h.basis_element(BasisKind::Beta, 2);
        let cop = h.coproduct(&b2);
        let one = GradedPoly::one(h.table());
        let expect: BTreeMap<(u32, u32), GradedPoly> =
            [((0, 2), one.clone()), ((1, 1), one.clone()), ((2, 0), one)]
                .into_iter()
                .collect();
        assert_eq!(cop.terms, expect);
    }

    #[test]
    fn p1_coproduct_matches_formula() {
        let h = alg(4);
        let p1 = h.basis_element(BasisKind::P, 1);
        let cop = h.coproduct(&p1);
        let one = GradedPoly::one(h.table());
        let expect: BTreeMap<(u32, u32), GradedPoly> = [
            ((1, 0), one.clone()),
            ((0, 1), one),
            ((0, 0), h.fgl().a(1, 1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(cop.terms, expect);
    }

    #[test]
    fn coproduct_two_routes_agree() {
        let h = alg(9);
        for n in 0..=8 {
            let p = h.basis_element(BasisKind::P, n);
            assert_eq!(
                h.coproduct(&p),
                h.coproduct_conjugated(&p).unwrap(),
                "p_{n}"
            );
        }
    }

    #[test]
    fn product_unit_and_leading() {
        let h = alg(8);
        for m in 0..=6 {
            let p0 = h.basis_element(BasisKind::P, 0);
            let pm = h.basis_element(BasisKind::P, m);
            assert_eq!(h.product(&p0, &pm).unwrap(), pm, "p_0 * p_{m}");
        }
        // s^{(2)}_{1,1} = 2 and the lower coefficients
        let s = h.segre_decomposition(1, 1).unwrap();
        let find = |r: u32| {
            s.iter()
                .find(|(rr, _)| *rr == r)
                .map(|(_, c)| c.clone())
                .unwrap()
        };
        assert_eq!(find(2), GradedPoly::constant(h.table(), 2));
        assert_eq!(to_canonical(&find(1)), "2*b1");
        assert_eq!(find(0), parse("6*b2 - 4*b1^2", h.table()).unwrap());
    }

    #[test]
    fn segre_point_cases() {
        let h = alg(8);
        for m in 0..=5 {
            let s = h.segre_decomposition(0, m).unwrap();
            assert_eq!(s.len(), 1);
            assert_eq!(s[0].0, m);
            assert_eq!(s[0].1, GradedPoly::one(h.table()));
        }
    }

    #[test]
    fn product_two_routes_agree() {
        let h = alg(9);
        for n in 0..=4u32 {
            for m in 0..=(4 - n.min(4)) {
                for basis in [BasisKind::Beta, BasisKind::P] {
                    let a = h.basis_element(basis, n);
                    let b = h.basis_element(basis, m);
                    assert_eq!(
                        h.product(&a, &b).unwrap(),
                        h.product_conjugated(&a, &b).unwrap(),
                        "{}: ({n},{m})",
                        basis.label()
                    );
                }
            }
        }
    }

    #[test]
    fn segre_weights_are_homogeneous() {
        let h = alg(8);
        for n in 0..=3 {
            for m in 0..=3 {
                for (r, c) in h.segre_decomposition(n, m).unwrap() {
                    assert!(
                        c.is_homogeneous_of_weight(n + m - r),
                        "s^({r})_({n},{m}) = {c:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn verify_report_passes() {
        let h = alg(8);
        let report = h.verify(6, 5, 4);
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn product_beyond_truncation_is_a_bound_error() {
        let h = alg(4);
        let a = h.basis_element(BasisKind::P, 3);
        let b = h.basis_element(BasisKind::P, 2);
        assert!(matches!(
            h.product(&a, &b),
            Err(crate::Error::Bound { need: 5, have: 4 })
        ));
        assert!(matches!(
            h.segre_decomposition(4, 1),
            Err(crate::Error::Bound { need: 5, have: 4 })
        ));
    }

    #[test]
    fn homogeneous_degree_bookkeeping() {
        let h = alg(6);
        // p_2 converted to beta stays homogeneous of degree 2
        let p2 = h.basis_element(BasisKind::P, 2);
        assert_eq!(p2.homogeneous_degree(), Some(2));
        let b = h.to_beta_basis(&p2).unwrap();
        assert_eq!(b.homogeneous_degree(), Some(2));
        // products add degrees
        let p1 = h.basis_element(BasisKind::P, 1);
        let prod = h.product(&p2, &p1).unwrap();
        assert_eq!(prod.homogeneous_degree(), Some(3));
    }
}
