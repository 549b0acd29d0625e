//! The universal formal group law and its coefficient families.
//!
//! The universal law is constructed through the standard polynomial model of
//! its coefficient ring: with `exp(t) = t + b1 t^2 + b2 t^3 + ...` over
//! `Z[b1, b2, ...]` and `log` its compositional inverse,
//! `F(x, y) = exp(log x + log y)`. The representation of the coefficient ring
//! inside `Z[b*]` is injective (a classical fact assumed here, not
//! re-derived), so identities verified in the model hold universally.
//!
//! From the truncated table `a_ij` the module derives the projective-space
//! classes `cp(n)` by the triangular recursion
//! `sum_{i+j=k} cp(i) * a_{1j} = [k == 0]`, the dual family `eta'` from the
//! pairing `sum eta_i eta'_{n-i} = [n == 0]`, the coefficient tables of powers
//! of `F`, and the formal inverse series. Additive and multiplicative laws
//! and integer specializations of the universal one share the same interface,
//! which is what the naturality checks exercise.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::{
    sum, Bounds, Domain, GeneratorTable, GradedPoly, Parity, Table,
};
use crate::series::TruncatedSeries;

/// Which formal group law a table carries; used for labeling reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FglKind {
    Universal,
    Additive,
    /// `F = x + y + c*xy` with the stated constant.
    Multiplicative(i64),
    /// Integer specialization of the universal law (generator name -> value).
    Specialized(Vec<(String, i64)>),
}

impl FglKind {
    pub fn label(&self) -> String {
        match self {
            FglKind::Universal => "universal".to_string(),
            FglKind::Additive => "additive".to_string(),
            FglKind::Multiplicative(c) => format!("multiplicative(a11={c})"),
            FglKind::Specialized(vals) => {
                let parts: Vec<String> =
                    vals.iter().map(|(n, v)| format!("{n}={v}")).collect();
                format!("specialized({})", parts.join(","))
            }
        }
    }
}

#[derive(Default)]
struct Caches {
    cp: Vec<GradedPoly>,
    eta_prime: Vec<GradedPoly>,
    powers: BTreeMap<u32, Arc<BTreeMap<(u32, u32), GradedPoly>>>,
    inverse: Option<TruncatedSeries>,
}

/// A formal group law truncated at total degree `D`, with every coefficient a
/// polynomial over the coefficient table. Immutable once built; the derived
/// tables are cached behind a single lock.
pub struct Fgl {
    kind: FglKind,
    degree: u32,
    table: Table,
    a: BTreeMap<(u32, u32), GradedPoly>,
    caches: Mutex<Caches>,
}

/// Table holding the coefficient generators plus formal variables `x`, `y`.
fn xy_table(coeff: &Table) -> Table {
    let mut gens: Vec<(String, u32, Parity)> = coeff
        .generators()
        .map(|(_, g)| (g.name.clone(), g.weight, g.parity))
        .collect();
    gens.push(("x".to_string(), 0, Parity::Even));
    gens.push(("y".to_string(), 0, Parity::Even));
    GeneratorTable::new(coeff.domain(), gens).expect("fresh names")
}

impl Fgl {
    /// The universal formal group law truncated at total degree `D >= 1`.
    pub fn universal(degree: u32) -> Arc<Fgl> {
        assert!(degree >= 1, "degree bound must be positive");
        let coeff = GeneratorTable::new(
            Domain::Integer,
            (1..degree).map(|n| (format!("b{n}"), n, Parity::Even)),
        )
        .expect("distinct names");
        let tt = GeneratorTable::new(
            Domain::Integer,
            (1..degree)
                .map(|n| (format!("b{n}"), n, Parity::Even))
                .chain([("t".to_string(), 0, Parity::Even)]),
        )
        .expect("distinct names");

        // exp(t) = t + b1 t^2 + ... + b_{D-1} t^D
        let mut exp = GradedPoly::generator(&tt, "t").expect("t");
        for n in 1..degree {
            exp = exp
                .add_raw(&GradedPoly::monomial(
                    &tt,
                    &[(&format!("b{n}"), 1), ("t", (n + 1) as u16)],
                    1,
                )
                .expect("term"));
        }
        let exp = TruncatedSeries::new(exp, &["t"], degree, None).expect("series");
        let log = exp.reverse().expect("exp starts with t");

        // F(x, y) = exp(log x + log y), truncated at total degree D in x, y
        // with coefficient weight at most D - 1.
        let xyt = xy_table(&coeff);
        let weight_bound = Some(degree.saturating_sub(1));
        let logx = log
            .poly()
            .rename_generator("t", "x", &xyt)
            .expect("rename");
        let logy = log
            .poly()
            .rename_generator("t", "y", &xyt)
            .expect("rename");
        let inner = TruncatedSeries::new(
            logx.add_raw(&logy),
            &["x", "y"],
            degree,
            weight_bound,
        )
        .expect("series");
        let f = exp.compose(&inner).expect("composition");

        let a = extract_bivariate(f.poly(), &coeff);
        let fgl = Fgl {
            kind: FglKind::Universal,
            degree,
            table: coeff,
            a,
            caches: Mutex::new(Caches::default()),
        };
        debug_assert!(fgl.check_table_invariants());
        Arc::new(fgl)
    }

    /// The additive law `F = x + y` over integer coefficients.
    pub fn additive(degree: u32) -> Arc<Fgl> {
        assert!(degree >= 1);
        let table = GeneratorTable::new(Domain::Integer, []).expect("empty");
        let mut a = BTreeMap::new();
        a.insert((1, 0), GradedPoly::one(&table));
        a.insert((0, 1), GradedPoly::one(&table));
        Arc::new(Fgl {
            kind: FglKind::Additive,
            degree,
            table,
            a,
            caches: Mutex::new(Caches::default()),
        })
    }

    /// The multiplicative law `F = x + y - xy` over integer coefficients.
    pub fn multiplicative(degree: u32) -> Arc<Fgl> {
        Self::multiplicative_with(degree, -1)
    }

    /// `F = x + y + c*xy`, a formal group law for any constant `c`.
    pub fn multiplicative_with(degree: u32, c: i64) -> Arc<Fgl> {
        assert!(degree >= 1);
        let table = GeneratorTable::new(Domain::Integer, []).expect("empty");
        let mut a = BTreeMap::new();
        a.insert((1, 0), GradedPoly::one(&table));
        a.insert((0, 1), GradedPoly::one(&table));
        if degree >= 2 && c != 0 {
            a.insert((1, 1), GradedPoly::constant(&table, c));
        }
        Arc::new(Fgl {
            kind: FglKind::Multiplicative(c),
            degree,
            table,
            a,
            caches: Mutex::new(Caches::default()),
        })
    }

    /// Specialize coefficient generators to integers (unlisted generators go
    /// to zero). The result is a formal group law over the integers; the map
    /// sending each `a_ij` to its specialization is a coefficient ring
    /// homomorphism, which is what the naturality checks rely on.
    pub fn specialize(&self, values: &[(&str, i64)]) -> Arc<Fgl> {
        let target = GeneratorTable::new(Domain::Integer, []).expect("empty");
        let mut map: BTreeMap<String, BigInt> = self
            .table
            .generators()
            .map(|(_, g)| (g.name.clone(), BigInt::from(0)))
            .collect();
        for &(name, v) in values {
            map.insert(name.to_string(), BigInt::from(v));
        }
        let a = self
            .a
            .iter()
            .map(|(&k, p)| (k, p.substitute(&map, &target).expect("closed")))
            .filter(|(_, p)| !p.is_zero())
            .collect();
        Arc::new(Fgl {
            kind: FglKind::Specialized(
                values.iter().map(|&(n, v)| (n.to_string(), v)).collect(),
            ),
            degree: self.degree,
            table: target,
            a,
            caches: Mutex::new(Caches::default()),
        })
    }

    /// The coefficient table of the degree-D universal truncation,
    /// generators `b1..b(D-1)` of matching weights.
    pub(crate) fn universal_coeff_table(degree: u32) -> Table {
        GeneratorTable::new(
            Domain::Integer,
            (1..degree).map(|n| (format!("b{n}"), n, Parity::Even)),
        )
        .expect("distinct names")
    }

    /// Rebuild a universal truncation from stored tables (cache path). All
    /// polynomials must live on `universal_coeff_table(degree)`; the caller
    /// guarantees integrity, and the structural invariants are re-checked
    /// cheaply with a violation being a hard error.
    pub(crate) fn from_parts(
        degree: u32,
        table: Table,
        a: BTreeMap<(u32, u32), GradedPoly>,
        cp: Vec<GradedPoly>,
        eta_prime: Vec<GradedPoly>,
    ) -> Result<Arc<Fgl>> {
        let fgl = Fgl {
            kind: FglKind::Universal,
            degree,
            table,
            a,
            caches: Mutex::new(Caches {
                cp,
                eta_prime,
                ..Caches::default()
            }),
        };
        if !fgl.check_table_invariants() {
            return Err(Error::Cache(
                "stored tables violate structural invariants".to_string(),
            ));
        }
        Ok(Arc::new(fgl))
    }

    pub fn kind(&self) -> &FglKind {
        &self.kind
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// The coefficient ring table.
    pub fn coeff_table(&self) -> &Table {
        &self.table
    }

    /// Coefficient `a_ij`; any negative index gives zero, and the unit entries
    /// `a_10 = a_01 = 1`, `a_00 = 0` follow the global convention.
    pub fn a(&self, i: i64, j: i64) -> GradedPoly {
        if i < 0 || j < 0 || (i + j) as u32 > self.degree {
            return GradedPoly::zero(&self.table);
        }
        self.a
            .get(&(i as u32, j as u32))
            .cloned()
            .unwrap_or_else(|| GradedPoly::zero(&self.table))
    }

    /// `eta_i = a_{1,i}` with `eta_0 = 1`.
    pub fn eta(&self, i: i64) -> GradedPoly {
        self.a(1, i)
    }

    /// All stored entries `(i, j, a_ij)` with `i + j <= limit`.
    pub fn entries(&self, limit: u32) -> Vec<(u32, u32, GradedPoly)> {
        self.a
            .iter()
            .filter(|((i, j), _)| i + j <= limit)
            .map(|(&(i, j), p)| (i, j, p.clone()))
            .collect()
    }

    /// The class of n-dimensional projective space, from the recursion
    /// `sum_{i+j=k} cp(i) * a_{1j} = [k == 0]`. Requires truncation degree at
    /// least `n + 1`.
    pub fn cp_class(&self, n: u32) -> Result<GradedPoly> {
        if n + 1 > self.degree {
            return Err(Error::Bound { need: n + 1, have: self.degree });
        }
        let mut caches = self.caches.lock().unwrap();
        if caches.cp.is_empty() {
            caches.cp.push(GradedPoly::one(&self.table));
        }
        while caches.cp.len() <= n as usize {
            let k = caches.cp.len();
            let s = sum(
                &self.table,
                (0..k).map(|i| caches.cp[i].mul_raw(&self.a(1, (k - i) as i64))),
            );
            caches.cp.push(s.neg());
        }
        Ok(caches.cp[n as usize].clone())
    }

    /// `eta'_n`, defined by `eta'_0 = 1` and the pairing
    /// `sum_{i<=n} eta_i * eta'_{n-i} = 0` for `n >= 1`, computed by the
    /// triangular recursion.
    pub fn eta_prime(&self, n: u32) -> GradedPoly {
        assert!(
            n < self.degree,
            "eta'_{n} needs truncation degree {}, have {}",
            n + 1,
            self.degree
        );
        let mut caches = self.caches.lock().unwrap();
        if caches.eta_prime.is_empty() {
            caches.eta_prime.push(GradedPoly::one(&self.table));
        }
        while caches.eta_prime.len() <= n as usize {
            let k = caches.eta_prime.len();
            let s = sum(
                &self.table,
                (1..=k).map(|i| self.a(1, i as i64).mul_raw(&caches.eta_prime[k - i])),
            );
            caches.eta_prime.push(s.neg());
        }
        caches.eta_prime[n as usize].clone()
    }

    /// Coefficient table of `F^k`: entry `(n, m)` is the coefficient of
    /// `x^n y^m` in the k-th power, for `n + m <= degree`.
    pub fn power_table(&self, k: u32) -> Result<Arc<BTreeMap<(u32, u32), GradedPoly>>> {
        if k > self.degree {
            // F^k has no terms of total degree <= degree when k exceeds it.
            return Ok(Arc::new(BTreeMap::new()));
        }
        {
            let caches = self.caches.lock().unwrap();
            if let Some(t) = caches.powers.get(&k) {
                return Ok(Arc::clone(t));
            }
        }
        // Build every power up to k, holding the lock so cache extension
        // stays single-writer.
        let xyt = xy_table(&self.table);
        let f = self.bivariate(&xyt);
        let bounds = Bounds {
            formal: vec![xyt.require("x")?, xyt.require("y")?],
            max_fdeg: Some(self.degree),
            max_weight: self.weight_bound(),
            caps: vec![],
        };
        let mut caches = self.caches.lock().unwrap();
        let mut cur: Option<GradedPoly> = None;
        for kk in 0..=k {
            let next = match &cur {
                None => GradedPoly::one(&xyt),
                Some(prev) => prev.mul_bounded(&f, &bounds),
            };
            caches
                .powers
                .entry(kk)
                .or_insert_with(|| Arc::new(extract_bivariate(&next, &self.table)));
            cur = Some(next);
        }
        Ok(Arc::clone(caches.powers.get(&k).unwrap()))
    }

    /// Coefficient of `x^n y^m` in `F^k` (zero for negative indices).
    pub fn power_coefficient(&self, k: u32, n: i64, m: i64) -> Result<GradedPoly> {
        if n < 0 || m < 0 {
            return Ok(GradedPoly::zero(&self.table));
        }
        if k == 0 {
            return Ok(if n == 0 && m == 0 {
                GradedPoly::one(&self.table)
            } else {
                GradedPoly::zero(&self.table)
            });
        }
        let t = self.power_table(k)?;
        Ok(t.get(&(n as u32, m as u32))
            .cloned()
            .unwrap_or_else(|| GradedPoly::zero(&self.table)))
    }

    /// The formal inverse: the series `iota(x) = -x + ...` with
    /// `F(x, iota(x)) = 0` up to the truncation degree.
    pub fn formal_inverse(&self) -> TruncatedSeries {
        {
            let caches = self.caches.lock().unwrap();
            if let Some(s) = &caches.inverse {
                return s.clone();
            }
        }
        let xyt = xy_table(&self.table);
        let f = self.bivariate(&xyt);
        let x = GradedPoly::generator(&xyt, "x").expect("x");
        let mut iota = TruncatedSeries::new(
            x.neg(),
            &["x"],
            self.degree,
            self.weight_bound(),
        )
        .expect("series");
        let xid = xyt.require("x").expect("x");
        let yid = xyt.require("y").expect("y");
        for d in 2..=self.degree {
            let bounds = Bounds {
                formal: vec![xid],
                max_fdeg: Some(d),
                max_weight: self.weight_bound(),
                caps: vec![],
            };
            // F(x, iota(x)) truncated at degree d, via Horner in y.
            let coeffs = f.collect_along(yid);
            let maxk = coeffs.keys().next_back().copied().unwrap_or(0);
            let mut acc = GradedPoly::zero(&xyt);
            for kk in (0..=maxk).rev() {
                acc = acc.mul_bounded(iota.poly(), &bounds);
                if let Some(c) = coeffs.get(&kk) {
                    acc = acc.add_raw(c);
                }
            }
            let defect = acc.coefficient_of_power(xid, d as u16);
            if defect.is_zero() {
                continue;
            }
            // dF/dy(0,0) = 1, so subtracting defect * x^d cancels degree d.
            let corr = defect
                .mul_raw(&GradedPoly::monomial(&xyt, &[("x", d as u16)], 1).expect("x^d"));
            iota = TruncatedSeries::new(
                iota.poly().sub_raw(&corr),
                &["x"],
                self.degree,
                self.weight_bound(),
            )
            .expect("series");
        }
        let mut caches = self.caches.lock().unwrap();
        caches.inverse = Some(iota.clone());
        iota
    }

    /// `F` as a bivariate polynomial over a table containing `x`, `y` and the
    /// coefficient generators.
    pub fn bivariate(&self, target: &Table) -> GradedPoly {
        let mut out = GradedPoly::zero(target);
        for (&(i, j), c) in &self.a {
            let c = c.retable(target).expect("coefficients embed");
            let xy = GradedPoly::monomial(
                target,
                &[("x", i as u16), ("y", j as u16)],
                1,
            )
            .expect("xy");
            out = out.add_raw(&c.mul_raw(&xy));
        }
        out
    }

    fn weight_bound(&self) -> Option<u32> {
        if self.table.is_empty() {
            None
        } else {
            Some(self.degree.saturating_sub(1))
        }
    }

    fn check_table_invariants(&self) -> bool {
        for (&(i, j), p) in &self.a {
            if self.a(j as i64, i as i64) != *p {
                return false;
            }
            if !p.is_homogeneous_of_weight((i + j).saturating_sub(1)) {
                return false;
            }
        }
        self.a(1, 0) == GradedPoly::one(&self.table)
            && self.a(0, 0).is_zero()
    }

    /// Check unitality, commutativity, and associativity of the truncated
    /// table up to total degree `limit`. Failures are reported, not raised.
    pub fn verify_axioms(&self, limit: u32) -> crate::report::Report {
        use crate::report::{Check, Report};
        let limit = limit.min(self.degree);
        let mut report = Report::new(format!("fgl-axioms[{}]", self.kind.label()));

        // Unitality: F(x, 0) = x, i.e. a_{i,0} = [i == 1].
        let mut bad = Vec::new();
        for i in 0..=limit {
            let want = if i == 1 {
                GradedPoly::one(&self.table)
            } else {
                GradedPoly::zero(&self.table)
            };
            if self.a(i as i64, 0) != want {
                bad.push(format!("a({i},0)"));
            }
            if self.a(0, i as i64) != want {
                bad.push(format!("a(0,{i})"));
            }
        }
        report.push(Check::from_failures("unitality", bad));

        let mut bad = Vec::new();
        for i in 0..=limit {
            for j in 0..=limit.saturating_sub(i) {
                if self.a(i as i64, j as i64) != self.a(j as i64, i as i64) {
                    bad.push(format!("a({i},{j}) != a({j},{i})"));
                }
            }
        }
        report.push(Check::from_failures("commutativity", bad));

        let diff = self.associativity_defect(limit);
        let mut bad = Vec::new();
        for (m, _) in diff.terms().take(5) {
            bad.push(format!("coefficient at {:?}", m));
        }
        report.push(Check::from_failures("associativity", bad));
        report
    }

    /// `F(F(x,y),z) - F(x,F(y,z))` truncated at total degree `limit`; zero
    /// exactly when the table is associative to that degree.
    pub fn associativity_defect(&self, limit: u32) -> GradedPoly {
        let limit = limit.min(self.degree);
        let mut gens: Vec<(String, u32, Parity)> = self
            .table
            .generators()
            .map(|(_, g)| (g.name.clone(), g.weight, g.parity))
            .collect();
        for v in ["x", "y", "z"] {
            gens.push((v.to_string(), 0, Parity::Even));
        }
        let xyz = GeneratorTable::new(self.table.domain(), gens).expect("fresh");
        let bounds = Bounds {
            formal: vec![
                xyz.require("x").unwrap(),
                xyz.require("y").unwrap(),
                xyz.require("z").unwrap(),
            ],
            max_fdeg: Some(limit),
            max_weight: self.weight_bound(),
            caps: vec![],
        };

        // W = F(x, y), V = F(y, z) inside the trivariate ring.
        let fxy = self.bivariate(&xyz);
        let w = fxy.truncate(&bounds);
        let v = {
            let mut out = GradedPoly::zero(&xyz);
            for (&(i, j), c) in &self.a {
                let c = c.retable(&xyz).expect("embed");
                let yz = GradedPoly::monomial(
                    &xyz,
                    &[("y", i as u16), ("z", j as u16)],
                    1,
                )
                .expect("yz");
                out = out.add_raw(&c.mul_raw(&yz));
            }
            out.truncate(&bounds)
        };

        // lhs = sum_i g_i(z) W^i with g_i(z) = sum_j a_ij z^j, by Horner.
        let mut g: BTreeMap<u32, GradedPoly> = BTreeMap::new();
        let mut h: BTreeMap<u32, GradedPoly> = BTreeMap::new();
        for (&(i, j), c) in &self.a {
            let c = c.retable(&xyz).expect("embed");
            let zj = GradedPoly::monomial(&xyz, &[("z", j as u16)], 1).expect("z^j");
            g.entry(i)
                .or_insert_with(|| GradedPoly::zero(&xyz))
                .add_assign_raw(&c.mul_raw(&zj));
            let xi = GradedPoly::monomial(&xyz, &[("x", i as u16)], 1).expect("x^i");
            h.entry(j)
                .or_insert_with(|| GradedPoly::zero(&xyz))
                .add_assign_raw(&c.mul_raw(&xi));
        }
        let horner = |coeffs: &BTreeMap<u32, GradedPoly>, base: &GradedPoly| {
            let maxk = coeffs.keys().next_back().copied().unwrap_or(0);
            let mut acc = GradedPoly::zero(&xyz);
            for k in (0..=maxk).rev() {
                acc = acc.mul_bounded(base, &bounds);
                if let Some(c) = coeffs.get(&k) {
                    acc = acc.add_raw(c);
                }
            }
            acc
        };
        let lhs = horner(&g, &w);
        let rhs = horner(&h, &v);
        lhs.sub_raw(&rhs)
    }
}

/// Split a bivariate polynomial in `x`, `y` into its coefficient table.
fn extract_bivariate(
    poly: &GradedPoly,
    coeff: &Table,
) -> BTreeMap<(u32, u32), GradedPoly> {
    let table = poly.table();
    let xid = table.require("x").expect("x");
    let yid = table.require("y").expect("y");
    let mut out: BTreeMap<(u32, u32), GradedPoly> = BTreeMap::new();
    for (m, c) in poly.terms() {
        let (ex, rest) = m.split_off(xid);
        let (ey, rest) = rest.split_off(yid);
        out.entry((ex as u32, ey as u32))
            .or_insert_with(|| GradedPoly::zero(table))
            .add_term(rest, c.clone());
    }
    out.into_iter()
        .filter(|(_, p)| !p.is_zero())
        .map(|(k, p)| (k, p.retable(coeff).expect("coefficients embed")))
        .collect()
}

impl GradedPoly {
    pub(crate) fn add_assign_raw(&mut self, other: &GradedPoly) {
        for (m, c) in other.terms() {
            // clone into an owned pair before mutating
            let (m, c) = (m.clone(), c.clone());
            self.add_term(m, c);
        }
    }
}
