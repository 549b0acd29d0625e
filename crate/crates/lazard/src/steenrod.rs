//! Mod-l motivic Steenrod and Milnor operations on the cohomology of
//! products of root-of-unity classifying stacks.
//!
//! The ring for `k` factors has exterior generators `u1..uk` of bidegree
//! (1,1) and polynomial generators `v1..vk` of bidegree (2,1), coefficients
//! mod a prime `l`, with `u_i^2 = 0`. Two modes are supported, both with the
//! motivic parameters tau and rho specialized to zero: odd primes (where this
//! is forced) and the simplified l = 2 ring. The operations:
//!
//! - `bockstein`: the graded derivation with `beta(u_i) = v_i`,
//!   `beta(v_i) = 0`, sign `(-1)^deg` when passing a factor;
//! - `power_op(i)`: `P^0 = id`, `P^i(u) = 0` for i >= 1,
//!   `P^i(v^n) = C(n,i) v^(il + n - i)`, extended by the Cartan formula;
//! - `q_composite(i)`: `P^(l^(i-1)) ... P^l P^1`;
//! - `milnor_q(i)`: `q_i beta - beta q_i`;
//! - `truncate`: reduction mod the ideal `(v_i^(n_i+1))`, the algebraic
//!   shadow of restricting to a finite-dimensional approximation.
//!
//! Binomials mod l go through Lucas' theorem, so large exponents are exact.

use num_bigint::BigInt;
use rand::Rng;

use crate::error::{Error, Result};
use crate::report::{Check, Report, Status};
use crate::ring::{Domain, GeneratorTable, GradedPoly, Monomial, Parity, Table};

/// Supported specializations of the motivic parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Odd prime: tau = 0 is forced, rho = 0 because -1 is an l-th power.
    OddPrime,
    /// l = 2 with tau = rho = 0; signs collapse mod 2.
    TwoSimplified,
}

/// The mod-l cohomology ring of a k-fold product of classifying stacks.
pub struct MotRing {
    l: u32,
    k: u32,
    mode: Mode,
    table: Table,
}

/// A class in the ring; bidegrees are tracked per monomial.
pub type MotClass = GradedPoly;

impl MotRing {
    pub fn new(l: u32, k: u32) -> Result<MotRing> {
        let mode = if l == 2 { Mode::TwoSimplified } else { Mode::OddPrime };
        let mut gens = Vec::new();
        for i in 1..=k {
            gens.push((format!("u{i}"), 1, Parity::Odd));
            gens.push((format!("v{i}"), 1, Parity::Even));
        }
        let table = GeneratorTable::new(Domain::Mod(l), gens)?;
        Ok(MotRing { l, k, mode, table })
    }

    pub fn prime(&self) -> u32 {
        self.l
    }

    pub fn generator_count(&self) -> u32 {
        self.k
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    pub fn zero(&self) -> MotClass {
        GradedPoly::zero(&self.table)
    }

    pub fn one(&self) -> MotClass {
        GradedPoly::one(&self.table)
    }

    pub fn scalar(&self, c: i64) -> MotClass {
        GradedPoly::constant(&self.table, c)
    }

    pub fn u(&self, i: u32) -> Result<MotClass> {
        if i == 0 || i > self.k {
            return Err(Error::UnknownGenerator(format!("u{i}")));
        }
        GradedPoly::generator(&self.table, &format!("u{i}"))
    }

    pub fn v(&self, i: u32) -> Result<MotClass> {
        if i == 0 || i > self.k {
            return Err(Error::UnknownGenerator(format!("v{i}")));
        }
        GradedPoly::generator(&self.table, &format!("v{i}"))
    }

    fn is_u(&self, id: u16) -> bool {
        self.table.generator(id).name.starts_with('u')
    }

    /// Cohomological degree of a monomial: u contributes 1, v contributes 2.
    fn monomial_degree(&self, m: &Monomial) -> u32 {
        m.pairs()
            .iter()
            .map(|&(id, e)| {
                let per = if self.is_u(id) { 1 } else { 2 };
                per * e as u32
            })
            .sum()
    }

    /// Bidegree `(degree, weight)` when the class is homogeneous.
    pub fn bidegree(&self, c: &MotClass) -> Option<(u32, u32)> {
        let mut out = None;
        for (m, _) in c.terms() {
            let d = (self.monomial_degree(m), m.weight(&self.table));
            match out {
                None => out = Some(d),
                Some(prev) if prev != d => return None,
                _ => {}
            }
        }
        out
    }

    /// The Bockstein: a graded derivation with `beta(u_i) = v_i` and
    /// `beta(v_i) = 0`. On a canonical monomial the sign of each replacement
    /// is `(-1)^d` with `d` the cohomological degree of the preceding factors.
    pub fn bockstein(&self, c: &MotClass) -> MotClass {
        let mut out = self.zero();
        for (m, coeff) in c.terms() {
            let mut prefix_deg = 0u32;
            for (pos, &(id, e)) in m.pairs().iter().enumerate() {
                if self.is_u(id) {
                    debug_assert_eq!(e, 1);
                    let name = &self.table.generator(id).name;
                    let vid = self
                        .table
                        .require(&format!("v{}", &name[1..]))
                        .expect("paired generator");
                    let mut pairs: Vec<(u16, u16)> = m
                        .pairs()
                        .iter()
                        .enumerate()
                        .filter(|&(p, _)| p != pos)
                        .map(|(_, &pe)| pe)
                        .collect();
                    // bump the paired polynomial generator
                    match pairs.iter_mut().find(|(g, _)| *g == vid) {
                        Some(entry) => entry.1 += 1,
                        None => pairs.push((vid, 1)),
                    }
                    let sign = if prefix_deg % 2 == 0 { 1 } else { -1 };
                    out.add_term(
                        Monomial::from_pairs(pairs),
                        coeff * BigInt::from(sign),
                    );
                }
                let per = if self.is_u(id) { 1 } else { 2 };
                prefix_deg += per * e as u32;
            }
        }
        out
    }

    /// The power operation `P^i`, evaluated by the Cartan formula across the
    /// factors of each monomial with the generator rules `P^a(u) = 0` for
    /// `a >= 1` and `P^a(v^e) = C(e,a) v^(al + e - a)` (binomial mod l).
    pub fn power_op(&self, i: u32, c: &MotClass) -> MotClass {
        if i == 0 {
            return c.clone();
        }
        let mut out = self.zero();
        for (m, coeff) in c.terms() {
            // v-part slots that can absorb Steenrod power
            let vslots: Vec<(u16, u16)> = m
                .pairs()
                .iter()
                .copied()
                .filter(|&(id, _)| !self.is_u(id))
                .collect();
            // distribute i over the v-slots; u-slots force a = 0
            self.distribute(m, &vslots, 0, i, coeff.clone(), &mut out);
        }
        out
    }

    fn distribute(
        &self,
        m: &Monomial,
        vslots: &[(u16, u16)],
        slot: usize,
        remaining: u32,
        coeff: BigInt,
        out: &mut MotClass,
    ) {
        if slot == vslots.len() {
            if remaining == 0 {
                // rebuild the monomial: untouched u-part plus updated v-part
                // handled by the caller stack (vslots already rewritten there)
                let mut pairs: Vec<(u16, u16)> = m
                    .pairs()
                    .iter()
                    .copied()
                    .filter(|&(id, _)| self.is_u(id))
                    .collect();
                pairs.extend_from_slice(vslots);
                out.add_term(Monomial::from_pairs(pairs), coeff);
            }
            return;
        }
        let (id, e) = vslots[slot];
        let max_a = remaining.min(e as u32);
        for a in 0..=max_a {
            let binom = binomial_mod_l(e as u64, a as u64, self.l as u64);
            if binom == 0 {
                continue;
            }
            let new_e = e as u32 + a * (self.l - 1);
            assert!(new_e <= u16::MAX as u32, "exponent overflow");
            let mut updated = vslots.to_vec();
            updated[slot] = (id, new_e as u16);
            self.distribute(
                m,
                &updated,
                slot + 1,
                remaining - a,
                &coeff * BigInt::from(binom),
                out,
            );
        }
    }

    /// `q_i = P^(l^(i-1)) ... P^l P^1`, the composite of power operations at
    /// l-th power exponents, rightmost applied first. `i >= 1`.
    pub fn q_composite(&self, i: u32, c: &MotClass) -> MotClass {
        assert!(i >= 1, "q_i requires i >= 1");
        let mut out = c.clone();
        let mut exp = 1u64;
        for _ in 0..i {
            assert!(exp <= u32::MAX as u64, "power exponent overflow");
            out = self.power_op(exp as u32, &out);
            exp *= self.l as u64;
        }
        out
    }

    /// The Milnor operation `Q_i = q_i beta - beta q_i`, the literal
    /// composite. `i >= 1`.
    pub fn milnor_q(&self, i: u32, c: &MotClass) -> MotClass {
        let left = self.q_composite(i, &self.bockstein(c));
        let right = self.bockstein(&self.q_composite(i, c));
        left.sub_raw(&right)
    }

    /// Image in the quotient by the ideal `(v_i^(bounds_i + 1))`: monomials
    /// with any v-exponent above its bound are dropped.
    pub fn truncate(&self, c: &MotClass, bounds: &[u32]) -> MotClass {
        assert_eq!(bounds.len(), self.k as usize, "one bound per factor");
        let mut out = self.zero();
        'term: for (m, coeff) in c.terms() {
            for (i, &bound) in bounds.iter().enumerate() {
                let vid = self.table.require(&format!("v{}", i + 1)).unwrap();
                if m.exponent(vid) as u32 > bound {
                    continue 'term;
                }
            }
            out.add_term(m.clone(), coeff.clone());
        }
        out
    }

    /// Expected bidegree shifts: beta (1,0); P^i (2i(l-1), i(l-1));
    /// Q_i (2 l^i - 1, l^i - 1).
    pub fn shift_beta(&self) -> (u32, u32) {
        (1, 0)
    }

    pub fn shift_power(&self, i: u32) -> (u32, u32) {
        (2 * i * (self.l - 1), i * (self.l - 1))
    }

    pub fn shift_milnor(&self, i: u32) -> (u32, u32) {
        let li = (self.l as u64).pow(i);
        ((2 * li - 1) as u32, (li - 1) as u32)
    }

    /// A random class, each term homogeneous-by-construction only in the
    /// sense of having bounded exponents; used for property checks.
    pub fn random_class(&self, rng: &mut impl Rng, max_terms: usize, vmax: u16) -> MotClass {
        let mut out = self.zero();
        for _ in 0..rng.gen_range(1..=max_terms) {
            let mut pairs = Vec::new();
            for i in 1..=self.k {
                if rng.gen_bool(0.5) {
                    pairs.push((self.table.require(&format!("u{i}")).unwrap(), 1u16));
                }
                let e = rng.gen_range(0..=vmax);
                if e > 0 {
                    pairs.push((self.table.require(&format!("v{i}")).unwrap(), e));
                }
            }
            let c = rng.gen_range(1..self.l) as i64;
            out.add_term(Monomial::from_pairs(pairs), BigInt::from(c));
        }
        out
    }

    /// A random monomial class (hence bidegree-homogeneous).
    pub fn random_homogeneous(&self, rng: &mut impl Rng, vmax: u16) -> MotClass {
        loop {
            let c = self.random_class(rng, 1, vmax);
            if !c.is_zero() {
                return c;
            }
        }
    }

    /// Operation property suite: beta^2 = 0, the derivation law for beta,
    /// Cartan association independence for P^i, bidegree bookkeeping, and the
    /// derivation law for Q_1 (a warning, not a failure, if a mode convention
    /// breaks it).
    pub fn verify_operations(&self, cases: u32, seed: u64) -> Report {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut report = Report::new(format!("steenrod-ops[l={}]", self.l));

        let mut bad = Vec::new();
        for case in 0..cases {
            let c = self.random_class(&mut rng, 4, 3);
            if !self.bockstein(&self.bockstein(&c)).is_zero() {
                bad.push(format!("case {case}"));
            }
        }
        report.push(Check::from_failures("beta^2 = 0", bad));

        let mut bad = Vec::new();
        for case in 0..cases {
            let x = self.random_homogeneous(&mut rng, 3);
            let y = self.random_homogeneous(&mut rng, 3);
            let xy = x.mul_raw(&y);
            let (dx, _) = self.bidegree(&x).unwrap();
            let sign = if dx % 2 == 0 { 1 } else { -1 };
            let want = self
                .bockstein(&x)
                .mul_raw(&y)
                .add_raw(&x.mul_raw(&self.bockstein(&y)).scale(sign));
            if self.bockstein(&xy) != want {
                bad.push(format!("case {case}"));
            }
        }
        report.push(Check::from_failures("beta derivation law", bad));

        let mut bad = Vec::new();
        for case in 0..cases {
            let x = self.random_homogeneous(&mut rng, 2);
            let y = self.random_homogeneous(&mut rng, 2);
            let z = self.random_homogeneous(&mut rng, 2);
            let i = rng.gen_range(1..=2u32);
            let left = self.power_op(i, &x.mul_raw(&y).mul_raw(&z));
            let right = self.power_op(i, &x.mul_raw(&y.mul_raw(&z)));
            if left != right {
                bad.push(format!("case {case}"));
            }
            // Cartan expansion against the two-factor rule
            let mut cartan = self.zero();
            for a in 0..=i {
                cartan = cartan.add_raw(
                    &self
                        .power_op(a, &x)
                        .mul_raw(&self.power_op(i - a, &y.mul_raw(&z))),
                );
            }
            if cartan != left {
                bad.push(format!("cartan case {case}"));
            }
        }
        report.push(Check::from_failures("Cartan association independence", bad));

        let mut bad = Vec::new();
        for case in 0..cases {
            let x = self.random_homogeneous(&mut rng, 3);
            let (d, w) = self.bidegree(&x).unwrap();
            let b = self.bockstein(&x);
            if let Some(bd) = self.bidegree(&b) {
                let (sd, sw) = self.shift_beta();
                if bd != (d + sd, w + sw) {
                    bad.push(format!("beta case {case}"));
                }
            }
            let i = rng.gen_range(1..=2u32);
            let p = self.power_op(i, &x);
            if let Some(pd) = self.bidegree(&p) {
                let (sd, sw) = self.shift_power(i);
                if pd != (d + sd, w + sw) {
                    bad.push(format!("P^{i} case {case}"));
                }
            }
            for qi in 1..=2u32 {
                let q = self.milnor_q(qi, &x);
                if let Some(qd) = self.bidegree(&q) {
                    let (sd, sw) = self.shift_milnor(qi);
                    if qd != (d + sd, w + sw) {
                        bad.push(format!("Q_{qi} case {case}"));
                    }
                }
            }
        }
        report.push(Check::from_failures("bidegree bookkeeping", bad));

        let mut bad = Vec::new();
        for case in 0..cases {
            let x = self.random_homogeneous(&mut rng, 2);
            let y = self.random_homogeneous(&mut rng, 2);
            let (dx, _) = self.bidegree(&x).unwrap();
            let sign = if dx % 2 == 0 { 1 } else { -1 };
            let lhs = self.milnor_q(1, &x.mul_raw(&y));
            let rhs = self
                .milnor_q(1, &x)
                .mul_raw(&y)
                .add_raw(&x.mul_raw(&self.milnor_q(1, &y)).scale(sign));
            if lhs != rhs {
                bad.push(format!("case {case}"));
            }
        }
        if bad.is_empty() {
            report.push(Check::pass("Q_1 derivation law"));
        } else {
            report.push(Check {
                name: "Q_1 derivation law".to_string(),
                status: Status::Warn,
                details: bad.join("; "),
            });
        }
        report
    }
}

/// Binomial coefficient mod a prime via Lucas' theorem.
pub fn binomial_mod_l(n: u64, k: u64, l: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut n = n;
    let mut k = k;
    let mut out = 1u64;
    while k > 0 || n > 0 {
        let (nd, kd) = (n % l, k % l);
        if kd > nd {
            return 0;
        }
        out = out * binomial_small(nd, kd) % l;
        n /= l;
        k /= l;
    }
    out
}

fn binomial_small(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..k {
        num *= n - i;
        den *= i + 1;
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::to_canonical;

    #[test]
    fn bockstein_on_generators() {
        let r = MotRing::new(3, 2).unwrap();
        assert_eq!(r.bockstein(&r.u(1).unwrap()), r.v(1).unwrap());
        assert!(r.bockstein(&r.v(1).unwrap()).is_zero());
        // beta(u1 u2) = v1 u2 - u1 v2
        let u1u2 = r.u(1).unwrap().mul_raw(&r.u(2).unwrap());
        let b = r.bockstein(&u1u2);
        let want = r
            .v(1)
            .unwrap()
            .mul_raw(&r.u(2).unwrap())
            .sub_raw(&r.u(1).unwrap().mul_raw(&r.v(2).unwrap()));
        assert_eq!(b, want);
        assert_eq!(to_canonical(&b), "2*u1*v2 + u2*v1");
    }

    #[test]
    fn bockstein_kills_polynomial_part() {
        let r = MotRing::new(5, 1).unwrap();
        let v3 = r.v(1).unwrap().pow(3);
        assert!(r.bockstein(&v3).is_zero());
    }

    #[test]
    fn bockstein_squares_to_zero() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for l in [2u32, 3, 5] {
            let r = MotRing::new(l, 2).unwrap();
            for _ in 0..50 {
                let c = r.random_class(&mut rng, 4, 3);
                assert!(r.bockstein(&r.bockstein(&c)).is_zero());
            }
        }
    }

    #[test]
    fn power_op_generator_rules() {
        let r = MotRing::new(3, 2).unwrap();
        // P^1(v) = v^l
        assert_eq!(r.power_op(1, &r.v(1).unwrap()), r.v(1).unwrap().pow(3));
        // P^1(u) = 0
        assert!(r.power_op(1, &r.u(1).unwrap()).is_zero());
        // P^0 = id
        let u1 = r.u(1).unwrap();
        assert_eq!(r.power_op(0, &u1), u1);
        // P^1(v^2) = 2 v^(l+1)
        assert_eq!(
            r.power_op(1, &r.v(1).unwrap().pow(2)),
            r.v(1).unwrap().pow(4).scale(2)
        );
    }

    #[test]
    fn cartan_intermediate_value() {
        // P^1(v1 u2 - u1 v2) = v1^l u2 - u1 v2^l
        let r = MotRing::new(3, 2).unwrap();
        let c = r
            .v(1)
            .unwrap()
            .mul_raw(&r.u(2).unwrap())
            .sub_raw(&r.u(1).unwrap().mul_raw(&r.v(2).unwrap()));
        let p = r.power_op(1, &c);
        let want = r
            .v(1)
            .unwrap()
            .pow(3)
            .mul_raw(&r.u(2).unwrap())
            .sub_raw(&r.u(1).unwrap().mul_raw(&r.v(2).unwrap().pow(3)));
        assert_eq!(p, want);
    }

    #[test]
    fn milnor_q1_on_u() {
        // Q_1(u1) = v1^l
        for l in [2u32, 3, 5] {
            let r = MotRing::new(l, 1).unwrap();
            assert_eq!(r.milnor_q(1, &r.u(1).unwrap()), r.v(1).unwrap().pow(l), "l={l}");
        }
    }

    #[test]
    fn milnor_q1_kills_polynomial_classes() {
        let r = MotRing::new(3, 1).unwrap();
        for m in 1..=4u32 {
            assert!(r.milnor_q(1, &r.v(1).unwrap().pow(m)).is_zero(), "v^{m}");
        }
    }

    #[test]
    fn obstruction_class_value() {
        // Q_1(beta(u1 u2)) is the obstruction witness, equal up to sign to
        // v1^l v2 - v1 v2^l; the literal composite lands on the negative.
        for l in [2u32, 3, 5] {
            let r = MotRing::new(l, 2).unwrap();
            let u1u2 = r.u(1).unwrap().mul_raw(&r.u(2).unwrap());
            let val = r.milnor_q(1, &r.bockstein(&u1u2));
            let paper = r
                .v(1)
                .unwrap()
                .pow(l)
                .mul_raw(&r.v(2).unwrap())
                .sub_raw(&r.v(1).unwrap().mul_raw(&r.v(2).unwrap().pow(l)));
            assert_eq!(val, paper.neg(), "l={l}");
            assert!(!val.is_zero());
            // expected bidegree (2(l+1), l+1)
            assert_eq!(r.bidegree(&val), Some((2 * (l + 1), l + 1)));
        }
    }

    #[test]
    fn truncation_behaviour() {
        let r = MotRing::new(3, 2).unwrap();
        let l = 3u32;
        // v^(l+1) dies under bound l
        let big = r.v(1).unwrap().pow(l + 1);
        assert!(r.truncate(&big, &[l, l]).is_zero());
        // the obstruction class survives bounds (l, l)
        let u1u2 = r.u(1).unwrap().mul_raw(&r.u(2).unwrap());
        let val = r.milnor_q(1, &r.bockstein(&u1u2));
        let t = r.truncate(&val, &[l, l]);
        assert_eq!(t, val);
        assert!(!t.is_zero());
        // idempotence
        assert_eq!(r.truncate(&t, &[l, l]), t);
    }

    #[test]
    fn operation_suite_passes() {
        for l in [2u32, 3, 5] {
            let r = MotRing::new(l, 2).unwrap();
            let report = r.verify_operations(40, 17);
            assert!(report.passed(), "l={l}: {report:?}");
            // Q_1 derivation should genuinely pass in both modes here
            assert!(
                report.checks.iter().all(|c| c.status == Status::Pass),
                "l={l}: {report:?}"
            );
        }
    }

    #[test]
    fn lucas_binomials() {
        assert_eq!(binomial_mod_l(5, 2, 3), 10 % 3);
        assert_eq!(binomial_mod_l(100, 50, 3), {
            // direct check via factorial valuation would be heavier; spot
            // values from small cases suffice: C(100,50) mod 3 = 0 because a
            // base-3 digit of 50 exceeds the matching digit of 100.
            0
        });
        assert_eq!(binomial_mod_l(4, 2, 2), 0);
        assert_eq!(binomial_mod_l(4, 4, 2), 1);
        assert_eq!(binomial_mod_l(7, 3, 5), 35 % 5);
    }

    #[test]
    fn invalid_generator_index() {
        let r = MotRing::new(3, 2).unwrap();
        assert!(r.u(3).is_err());
        assert!(r.u(0).is_err());
        assert!(r.v(9).is_err());
    }
}
