//! Gysin calculus in truncated polynomial models of products of projective
//! spaces.
//!
//! A [`Model`] is the ring `R[x_1..x_k] / (x_i^(n_i+1))` over a
//! formal-group-law coefficient ring `R`, the polynomial shadow of
//! `E^*(P^{n_1} x ... x P^{n_k})` under the projective bundle formula. Three
//! concrete Gysin shapes are implemented:
//!
//! - pushforward along a projection, given on the coefficient list along one
//!   axis by pairing with the `eta'` family:
//!   `p_!(sum a_d x^d) = sum a_d * eta'_{n-d}`;
//! - the diagonal class `sum a_{1,i+j-n} x1^i x2^j`;
//! - the splitting-principle Euler class of the twisted quotient bundle,
//!   evaluated as `det g(C)` where `C` is the companion matrix of the Chern
//!   polynomial of the quotient of the trivial bundle by `O(-1,0)` and
//!   `g(y) = F(y, x2)`; this route is independent of the diagonal formula and
//!   re-derives it.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use rand::Rng;

use crate::error::{Error, Result};
use crate::fgl::Fgl;
use crate::report::{Check, Report};
use crate::ring::{Bounds, GenId, GeneratorTable, GradedPoly, Parity, Table};

/// One projective-space factor: variable `name` with `x^(order+1) = 0`.
#[derive(Debug, Clone)]
pub struct Axis {
    pub name: String,
    pub order: u32,
}

/// Truncated polynomial model of a product of projective spaces over the
/// coefficient ring of a formal group law.
pub struct Model {
    fgl: Arc<Fgl>,
    axes: Vec<Axis>,
    table: Table,
}

impl Model {
    /// Model of `P^{n_1} x ... x P^{n_k}` with variables named `x1..xk`.
    pub fn new(fgl: Arc<Fgl>, orders: &[u32]) -> Model {
        let axes: Vec<Axis> = orders
            .iter()
            .enumerate()
            .map(|(i, &n)| Axis { name: format!("x{}", i + 1), order: n })
            .collect();
        Self::with_axes(fgl, axes)
    }

    pub fn with_axes(fgl: Arc<Fgl>, axes: Vec<Axis>) -> Model {
        let mut gens: Vec<(String, u32, Parity)> = fgl
            .coeff_table()
            .generators()
            .map(|(_, g)| (g.name.clone(), g.weight, g.parity))
            .collect();
        for axis in &axes {
            gens.push((axis.name.clone(), 0, Parity::Even));
        }
        let table = GeneratorTable::new(fgl.coeff_table().domain(), gens)
            .expect("axis names are fresh");
        Model { fgl, axes, table }
    }

    pub fn fgl(&self) -> &Arc<Fgl> {
        &self.fgl
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    pub fn axes(&self) -> &[Axis] {
        &self.axes
    }

    pub fn axis(&self, name: &str) -> Result<&Axis> {
        self.axes
            .iter()
            .find(|a| a.name == name)
            .ok_or_else(|| Error::UnknownAxis(name.to_string()))
    }

    fn axis_id(&self, name: &str) -> Result<GenId> {
        self.axis(name)?;
        self.table.require(name)
    }

    fn caps(&self) -> Vec<(GenId, u16)> {
        self.axes
            .iter()
            .map(|a| (self.table.require(&a.name).unwrap(), a.order as u16))
            .collect()
    }

    fn bounds(&self, max_weight: Option<u32>) -> Bounds {
        Bounds {
            formal: self
                .axes
                .iter()
                .map(|a| self.table.require(&a.name).unwrap())
                .collect(),
            max_fdeg: None,
            max_weight,
            caps: self.caps(),
        }
    }

    /// Pull back a coefficient-ring element (or a class of a sub-model).
    pub fn embed(&self, coeff: &GradedPoly) -> Result<GradedPoly> {
        Ok(coeff.retable(&self.table)?.truncate(&self.bounds(None)))
    }

    pub fn var(&self, name: &str) -> Result<GradedPoly> {
        self.axis(name)?;
        GradedPoly::generator(&self.table, name)
    }

    pub fn one(&self) -> GradedPoly {
        GradedPoly::one(&self.table)
    }

    /// Product in the model: polynomial product reduced by the nilpotency
    /// relations `x_i^(n_i+1) = 0`.
    pub fn mul(&self, a: &GradedPoly, b: &GradedPoly) -> GradedPoly {
        a.mul_bounded(b, &self.bounds(None))
    }

    /// Product with an additional weight cut; only the Euler-class
    /// computation uses this, with the bound argued from the target grading.
    pub fn mul_weight_bounded(
        &self,
        a: &GradedPoly,
        b: &GradedPoly,
        max_weight: u32,
    ) -> GradedPoly {
        a.mul_bounded(b, &self.bounds(Some(max_weight)))
    }

    /// The coefficient list of a class along one axis: index `d` holds the
    /// coefficient of `x^d`, expressed in the model with the axis removed.
    pub fn collect_along(&self, axis: &str, c: &GradedPoly) -> Result<Vec<GradedPoly>> {
        let id = self.axis_id(axis)?;
        let order = self.axis(axis)?.order;
        let target = self.project(axis)?;
        let mut out = vec![GradedPoly::zero(&target.table); (order + 1) as usize];
        for (e, p) in c.collect_along(id) {
            assert!(
                (e as u32) <= order,
                "class not reduced along {axis}: exponent {e}"
            );
            out[e as usize] = p.retable(&target.table)?;
        }
        Ok(out)
    }

    /// The model with one axis removed (the target of the projection).
    pub fn project(&self, axis: &str) -> Result<Model> {
        self.axis(axis)?;
        let axes: Vec<Axis> = self
            .axes
            .iter()
            .filter(|a| a.name != axis)
            .cloned()
            .collect();
        Ok(Model::with_axes(Arc::clone(&self.fgl), axes))
    }

    /// Gysin pushforward along the projection that forgets `axis`:
    /// with `c = sum_d c_d x^d` and `n` the axis order,
    /// `p_!(c) = sum_d c_d * eta'_{n-d}`, landing in the reduced model.
    pub fn pushforward(&self, axis: &str, c: &GradedPoly) -> Result<GradedPoly> {
        let order = self.axis(axis)?.order;
        let target = self.project(axis)?;
        let coeffs = self.collect_along(axis, c)?;
        let mut out = GradedPoly::zero(&target.table);
        for (d, cd) in coeffs.iter().enumerate() {
            if cd.is_zero() {
                continue;
            }
            let eta_p = self.fgl.eta_prime(order - d as u32);
            let term = target.mul(cd, &target.embed(&eta_p)?);
            out = out.add_raw(&term);
        }
        Ok(out)
    }
}

/// The diagonal class of `P^n` in the two-axis model:
/// `sum_{i,j=0}^n a_{1,i+j-n} x1^i x2^j`.
pub fn diagonal_class(model: &Model) -> Result<GradedPoly> {
    let [ax1, ax2] = model.axes() else {
        return Err(Error::UnknownAxis("diagonal needs two axes".to_string()));
    };
    if ax1.order != ax2.order {
        return Err(Error::UnknownAxis("diagonal needs equal orders".to_string()));
    }
    let n = ax1.order;
    if n + 1 > model.fgl().degree() {
        return Err(Error::Bound { need: n + 1, have: model.fgl().degree() });
    }
    let mut out = GradedPoly::zero(model.table());
    for i in 0..=n {
        for j in 0..=n {
            let a = model.fgl().a(1, i as i64 + j as i64 - n as i64);
            if a.is_zero() {
                continue;
            }
            let xy = GradedPoly::monomial(
                model.table(),
                &[(&ax1.name, i as u16), (&ax2.name, j as u16)],
                1,
            )?;
            out = out.add_raw(&model.embed(&a)?.mul_raw(&xy));
        }
    }
    Ok(out)
}

/// Convenience: the two-axis model for the diagonal of `P^n` and its class.
pub fn diagonal_square(fgl: Arc<Fgl>, n: u32) -> Result<(Model, GradedPoly)> {
    let model = Model::new(fgl, &[n, n]);
    let class = diagonal_class(&model)?;
    Ok((model, class))
}

/// Top Chern class of the twisted quotient bundle `Q_1(0,1)`, where `Q_1` is
/// the quotient of the trivial bundle of rank `n+1` by `O(-1,0)`. The Chern
/// classes of `Q_1` are forced by `c(Q_1) * (1 + iota(x1) T) = 1`, so
/// `c_j(Q_1) = (-iota(x1))^j`; the twist multiplies each Chern root `y_i` by
/// `O(0,1)`, replacing it with `F(y_i, x2)`. The product over the roots is
/// evaluated as `det g(C)` with `C` the companion matrix of the Chern
/// polynomial and `g(y) = sum_k phi_k(x2) y^k`, `phi_k = sum_j a_{kj} x2^j`,
/// truncated at `y^n` (legitimate because every elementary symmetric value
/// has positive `x1`-valuation). All arithmetic keeps coefficient weight at
/// most `n`, the weight of the target grading.
pub fn euler_class_twisted_quotient(model: &Model) -> Result<GradedPoly> {
    let [ax1, ax2] = model.axes() else {
        return Err(Error::UnknownAxis("euler class needs two axes".to_string()));
    };
    assert_eq!(ax1.order, ax2.order);
    let n = ax1.order;
    if n == 0 {
        return Ok(model.one());
    }
    if 2 * n > model.fgl().degree() {
        return Err(Error::Bound { need: 2 * n, have: model.fgl().degree() });
    }
    let t = model.table();

    // iota(x1) in the model.
    let iota = model
        .fgl()
        .formal_inverse()
        .poly()
        .rename_generator("x", &ax1.name, t)?
        .truncate(&model.bounds(Some(n)));

    // e_j = c_j(Q_1) = (-iota)^j for j = 0..n.
    let minus_iota = iota.neg();
    let mut e = vec![model.one()];
    for j in 1..=n {
        e.push(model.mul_weight_bounded(&e[(j - 1) as usize], &minus_iota, n));
    }

    // Companion matrix of T^n - e1 T^{n-1} + ... + (-1)^n e_n: ones on the
    // subdiagonal, last column row i = (-1)^(n-i+1) e_{n-i}.
    let nn = n as usize;
    let mut comp = vec![vec![GradedPoly::zero(t); nn]; nn];
    for (i, row) in comp.iter_mut().enumerate().skip(1) {
        row[i - 1] = model.one();
    }
    for i in 0..nn {
        let k = nn - i;
        let sign = if (k + 1) % 2 == 0 { 1 } else { -1 };
        comp[i][nn - 1] = e[k].scale(sign);
    }

    // phi_k(x2) = sum_j a_{kj} x2^j, k = 0..n, j bounded by the axis order.
    let mut phis = Vec::with_capacity(nn + 1);
    for k in 0..=n {
        let mut phi = GradedPoly::zero(t);
        for j in 0..=n.min(model.fgl().degree().saturating_sub(k)) {
            let a = model.fgl().a(k as i64, j as i64);
            if a.is_zero() {
                continue;
            }
            let x2j = GradedPoly::monomial(t, &[(&ax2.name, j as u16)], 1)?;
            phi = phi.add_raw(&model.embed(&a)?.mul_raw(&x2j));
        }
        phis.push(phi);
    }

    // M = g(C) = sum_k phi_k C^k.
    let mut mat = vec![vec![GradedPoly::zero(t); nn]; nn];
    let mut cpow = vec![vec![GradedPoly::zero(t); nn]; nn];
    for i in 0..nn {
        cpow[i][i] = model.one();
    }
    for (k, phi) in phis.iter().enumerate() {
        if k > 0 {
            cpow = mat_mul(model, &cpow, &comp, n);
        }
        if phi.is_zero() {
            continue;
        }
        for i in 0..nn {
            for j in 0..nn {
                if !cpow[i][j].is_zero() {
                    mat[i][j] = mat[i][j]
                        .add_raw(&model.mul_weight_bounded(phi, &cpow[i][j], n));
                }
            }
        }
    }

    Ok(determinant(model, &mat, n))
}

fn mat_mul(
    model: &Model,
    a: &[Vec<GradedPoly>],
    b: &[Vec<GradedPoly>],
    weight: u32,
) -> Vec<Vec<GradedPoly>> {
    let n = a.len();
    let mut out = vec![vec![GradedPoly::zero(model.table()); n]; n];
    for i in 0..n {
        for (k, aik) in a[i].iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for (j, bkj) in b[k].iter().enumerate() {
                if bkj.is_zero() {
                    continue;
                }
                out[i][j] =
                    out[i][j].add_raw(&model.mul_weight_bounded(aik, bkj, weight));
            }
        }
    }
    out
}

/// Determinant by dynamic programming over column subsets (cofactor expansion
/// with shared minors); division-free, which matters because the model ring
/// has nilpotents.
fn determinant(model: &Model, mat: &[Vec<GradedPoly>], weight: u32) -> GradedPoly {
    let n = mat.len();
    let mut dp: BTreeMap<u64, GradedPoly> = BTreeMap::new();
    dp.insert(0, model.one());
    for row in mat.iter() {
        let mut next: BTreeMap<u64, GradedPoly> = BTreeMap::new();
        for (used, val) in &dp {
            if val.is_zero() {
                continue;
            }
            for (j, entry) in row.iter().enumerate() {
                if used & (1 << j) != 0 || entry.is_zero() {
                    continue;
                }
                let below = used & ((1 << j) - 1);
                let sign = if (used.count_ones() - below.count_ones()) % 2 == 1 {
                    -1
                } else {
                    1
                };
                let term = model.mul_weight_bounded(val, entry, weight).scale(sign);
                next.entry(used | (1 << j))
                    .or_insert_with(|| GradedPoly::zero(model.table()))
                    .add_assign_raw(&term);
            }
        }
        dp = next;
    }
    dp.remove(&((1u64 << n) - 1))
        .unwrap_or_else(|| GradedPoly::zero(model.table()))
}

/// Check `p_! Delta_!(1) = 1` for the diagonal of `P^n` over the given law.
pub fn verify_section_identity(fgl: Arc<Fgl>, n: u32) -> Report {
    let label = fgl.kind().label();
    let mut report = Report::new(format!("section-identity[{label}]"));
    match diagonal_square(fgl, n) {
        Err(e) => report.push(Check::fail(format!("n={n}"), e.to_string())),
        Ok((model, diag)) => {
            let pushed = model.pushforward("x2", &diag).expect("x2 is an axis");
            let target = model.project("x2").expect("x2 is an axis");
            let ok = pushed == target.one();
            report.push(Check::from_bool(
                format!("n={n}"),
                ok,
                format!("p_! of the diagonal class is {:?}", pushed),
            ));
        }
    }
    report
}

/// Projection formula `p_!(p^*(a) . b) = a . p_!(b)` for the projection
/// along `axis` (with `a` a class of the axis-removed model), and
/// double-projection commutation against each remaining axis.
pub fn verify_projection_properties(
    model: &Model,
    axis: &str,
    a: &GradedPoly,
    b: &GradedPoly,
) -> Result<Report> {
    let mut report = Report::new("projection-properties");
    model.axis(axis)?;

    let target = model.project(axis)?;
    let a_up = a.retable(model.table())?;
    let lhs = model.pushforward(axis, &model.mul(&a_up, b))?;
    let rhs = target.mul(a, &model.pushforward(axis, b)?);
    report.push(Check::from_bool(
        "projection formula",
        lhs == rhs,
        format!("lhs {:?} != rhs {:?}", lhs, rhs),
    ));

    for other in model.axes() {
        if other.name == axis {
            continue;
        }
        let via_1 = model
            .project(axis)?
            .pushforward(&other.name, &model.pushforward(axis, b)?)?;
        let via_2 = model
            .project(&other.name)?
            .pushforward(axis, &model.pushforward(&other.name, b)?)?;
        report.push(Check::from_bool(
            format!("double projection ({axis}, {})", other.name),
            via_1 == via_2,
            format!("{axis}-first {:?} != {}-first {:?}", via_1, other.name, via_2),
        ));
    }
    Ok(report)
}

/// A random class with small random coefficients, for property testing.
pub fn random_class(model: &Model, rng: &mut impl Rng, max_terms: usize) -> GradedPoly {
    let t = model.table();
    let coeff_gens: Vec<String> = model
        .fgl()
        .coeff_table()
        .generators()
        .map(|(_, g)| g.name.clone())
        .collect();
    let mut out = GradedPoly::zero(t);
    for _ in 0..rng.gen_range(1..=max_terms) {
        let mut pairs: Vec<(String, u16)> = Vec::new();
        for axis in model.axes() {
            let e = rng.gen_range(0..=axis.order) as u16;
            if e > 0 {
                pairs.push((axis.name.clone(), e));
            }
        }
        // a small coefficient monomial in the b-generators
        if !coeff_gens.is_empty() && rng.gen_bool(0.6) {
            let g = &coeff_gens[rng.gen_range(0..coeff_gens.len().min(3))];
            pairs.push((g.clone(), rng.gen_range(1..=2)));
        }
        let c: i64 = rng.gen_range(-3..=3);
        let refs: Vec<(&str, u16)> =
            pairs.iter().map(|(n, e)| (n.as_str(), *e)).collect();
        out = out.add_raw(&GradedPoly::monomial(t, &refs, c).expect("valid"));
    }
    out
}

/// Randomized projection-formula, double-projection, and base-change checks
/// in two-axis models with the given orders.
pub fn projection_properties_randomized(
    fgl: Arc<Fgl>,
    orders: (u32, u32),
    cases: u32,
    seed: u64,
) -> Report {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let label = fgl.kind().label();
    let mut report = Report::new(format!(
        "projection-properties[{label}, orders=({},{})]",
        orders.0, orders.1
    ));
    let model = Model::new(Arc::clone(&fgl), &[orders.0, orders.1]);
    let sub = model.project("x1").expect("x1");
    let mut failures = Vec::new();
    for case in 0..cases {
        let a = random_class(&sub, &mut rng, 3);
        let b = random_class(&model, &mut rng, 4);
        let r = verify_projection_properties(&model, "x1", &a, &b).expect("valid axis");
        if !r.passed() {
            failures.push(format!("case {case}"));
        }
    }
    report.push(Check::from_failures(
        format!("{cases} randomized cases"),
        failures,
    ));
    report
}

/// Base change along a coefficient specialization: specializing then pushing
/// forward agrees with pushing forward then specializing.
pub fn verify_specialization_naturality(
    fgl: Arc<Fgl>,
    values: &[(&str, i64)],
    orders: (u32, u32),
    cases: u32,
    seed: u64,
) -> Report {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let spec = fgl.specialize(values);
    let mut report = Report::new(format!(
        "pushforward naturality[{} -> {}]",
        fgl.kind().label(),
        spec.kind().label()
    ));
    let model = Model::new(Arc::clone(&fgl), &[orders.0, orders.1]);
    let smodel = Model::new(Arc::clone(&spec), &[orders.0, orders.1]);
    let starget = smodel.project("x1").expect("x1");
    let map: BTreeMap<String, BigInt> = {
        let mut m: BTreeMap<String, BigInt> = fgl
            .coeff_table()
            .generators()
            .map(|(_, g)| (g.name.clone(), BigInt::from(0)))
            .collect();
        for &(n, v) in values {
            m.insert(n.to_string(), BigInt::from(v));
        }
        m
    };
    let mut failures = Vec::new();
    for case in 0..cases {
        let b = random_class(&model, &mut rng, 4);
        let push_then_spec = model
            .pushforward("x1", &b)
            .unwrap()
            .substitute(&map, &starget.table)
            .unwrap();
        let spec_then_push = smodel
            .pushforward("x1", &b.substitute(&map, &smodel.table).unwrap())
            .unwrap();
        if push_then_spec != spec_then_push {
            failures.push(format!("case {case}"));
        }
    }
    report.push(Check::from_failures(
        format!("{cases} randomized cases"),
        failures,
    ));
    report
}

/// The central oracle of the module: the closed diagonal formula equals the
/// independently computed splitting-principle Euler class.
pub fn verify_diagonal_equals_euler(fgl: Arc<Fgl>, n: u32) -> Report {
    let label = fgl.kind().label();
    let mut report = Report::new(format!("diagonal-vs-euler[{label}]"));
    match diagonal_square(fgl, n) {
        Err(e) => report.push(Check::fail(format!("n={n}"), e.to_string())),
        Ok((model, diag)) => match euler_class_twisted_quotient(&model) {
            Err(e) => report.push(Check::fail(format!("n={n}"), e.to_string())),
            Ok(euler) => {
                report.push(Check::from_bool(
                    format!("n={n}"),
                    diag == euler,
                    format!("diagonal {:?} != euler {:?}", diag, euler),
                ));
            }
        },
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::to_canonical;

    #[test]
    fn pushforward_leading_and_unit() {
        let fgl = Fgl::universal(8);
        let model = Model::new(Arc::clone(&fgl), &[3]);
        let x = model.var("x1").unwrap();
        // p_!(x^n) = 1
        let xn = x.pow(3);
        let target = model.project("x1").unwrap();
        assert_eq!(model.pushforward("x1", &xn).unwrap(), target.one());
        // p_!(1) = eta'_n
        let pushed = model.pushforward("x1", &model.one()).unwrap();
        assert_eq!(pushed, fgl.eta_prime(3).retable(&target.table).unwrap());
        // and eta'_n coincides with the projective-space class
        assert_eq!(fgl.eta_prime(3), fgl.cp_class(3).unwrap());
    }

    #[test]
    fn pushforward_is_linear_over_base() {
        let fgl = Fgl::universal(6);
        let model = Model::new(Arc::clone(&fgl), &[2]);
        let alpha = model.embed(&fgl.a(1, 1)).unwrap();
        let x2 = model.var("x1").unwrap().pow(2);
        let c = model.mul(&alpha, &x2);
        let target = model.project("x1").unwrap();
        assert_eq!(
            model.pushforward("x1", &c).unwrap(),
            fgl.a(1, 1).retable(&target.table).unwrap()
        );
    }

    #[test]
    fn unknown_axis_is_an_error() {
        let fgl = Fgl::universal(4);
        let model = Model::new(fgl, &[2]);
        assert_eq!(
            model.pushforward("x9", &model.one()).unwrap_err(),
            Error::UnknownAxis("x9".to_string())
        );
    }

    #[test]
    fn diagonal_low_cases() {
        let fgl = Fgl::universal(6);
        let (_, d0) = diagonal_square(Arc::clone(&fgl), 0).unwrap();
        assert_eq!(to_canonical(&d0), "1");
        let (_, d1) = diagonal_square(fgl, 1).unwrap();
        assert_eq!(to_canonical(&d1), "2*b1*x1*x2 + x1 + x2");
    }

    #[test]
    fn diagonal_equals_euler_low() {
        for n in 1..=3 {
            let r = verify_diagonal_equals_euler(Fgl::universal(2 * n), n);
            assert!(r.passed(), "n={n}: {r:?}");
        }
    }

    #[test]
    fn diagonal_equals_euler_additive_specialization() {
        for n in 1..=3 {
            for fgl in [Fgl::additive(2 * n), Fgl::multiplicative(2 * n)] {
                let r = verify_diagonal_equals_euler(fgl, n);
                assert!(r.passed(), "n={n}: {r:?}");
            }
        }
    }

    #[test]
    fn euler_bound_error() {
        let fgl = Fgl::universal(4);
        let model = Model::new(fgl, &[3, 3]);
        assert!(matches!(
            euler_class_twisted_quotient(&model),
            Err(Error::Bound { need: 6, have: 4 })
        ));
    }

    #[test]
    fn section_identity_small() {
        for n in 0..=4 {
            let r = verify_section_identity(Fgl::universal(n.max(1) + 1), n);
            assert!(r.passed(), "universal n={n}: {r:?}");
        }
        for n in 0..=4 {
            for fgl in [Fgl::additive(8), Fgl::multiplicative(8)] {
                let r = verify_section_identity(fgl, n);
                assert!(r.passed(), "n={n}: {r:?}");
            }
        }
    }

    #[test]
    fn projection_formula_trivial_class() {
        let fgl = Fgl::universal(5);
        let model = Model::new(fgl, &[2, 2]);
        let sub = model.project("x1").unwrap();
        let r = verify_projection_properties(&model, "x1", &sub.one(), &model.one())
            .unwrap();
        assert!(r.passed(), "{r:?}");
        // and along the second axis too
        let sub2 = model.project("x2").unwrap();
        let r = verify_projection_properties(&model, "x2", &sub2.one(), &model.one())
            .unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(verify_projection_properties(&model, "zz", &sub.one(), &model.one())
            .is_err());
    }

    #[test]
    fn projection_properties_randomized_pass() {
        let r = projection_properties_randomized(Fgl::universal(5), (3, 2), 25, 11);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn specialization_naturality() {
        for values in [vec![], vec![("b1", -1)]] {
            let r = verify_specialization_naturality(
                Fgl::universal(5),
                &values,
                (2, 2),
                20,
                5,
            );
            assert!(r.passed(), "{values:?}: {r:?}");
        }
    }

    #[test]
    fn pushforward_lowers_degree_bookkeeping() {
        // Homogeneous classes have x-degree minus coefficient weight constant
        // (= k); the pushforward along an order-n axis is then
        // weight-homogeneous of weight n - k.
        let fgl = Fgl::universal(6);
        let model = Model::new(Arc::clone(&fgl), &[2]);
        let x = model.var("x1").unwrap();
        // k = 1: b1 * x^2 + 3 * x
        let b1 = model.embed(&GradedPoly::generator(fgl.coeff_table(), "b1").unwrap());
        let c = model.mul(&b1.unwrap(), &x.pow(2)).add_raw(&x.scale(3));
        let pushed = model.pushforward("x1", &c).unwrap();
        assert!(pushed.is_homogeneous_of_weight(1), "{pushed:?}");
        assert_eq!(to_canonical(&pushed), "-5*b1");
    }
}
