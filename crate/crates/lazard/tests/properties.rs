//! Property tests for the ring core: ring axioms with Koszul signs, the
//! canonical-form round trip, truncation/multiplication commutation, and
//! reversion as an involution.

use lazard::{Domain, GeneratorTable, GradedPoly, Monomial, Parity, Table, TruncatedSeries};
use proptest::prelude::*;

fn mixed_table() -> Table {
    GeneratorTable::new(
        Domain::Integer,
        [
            ("a1".to_string(), 1, Parity::Even),
            ("a2".to_string(), 2, Parity::Even),
            ("e1".to_string(), 1, Parity::Odd),
            ("e2".to_string(), 1, Parity::Odd),
            ("e3".to_string(), 1, Parity::Odd),
        ],
    )
    .unwrap()
}

fn mod5_table() -> Table {
    GeneratorTable::new(
        Domain::Mod(5),
        [
            ("a1".to_string(), 1, Parity::Even),
            ("e1".to_string(), 1, Parity::Odd),
            ("e2".to_string(), 1, Parity::Odd),
        ],
    )
    .unwrap()
}

/// A random polynomial over a table: up to `terms` terms with bounded
/// exponents (odd generators capped at 1) and coefficients in -9..=9.
fn arb_poly(table: Table, terms: usize) -> impl Strategy<Value = GradedPoly> {
    let ngens = table.len();
    proptest::collection::vec(
        (
            proptest::collection::vec(0u16..3, ngens),
            -9i64..=9,
        ),
        0..=terms,
    )
    .prop_map(move |raw| {
        let mut p = GradedPoly::zero(&table);
        for (exps, c) in raw {
            let pairs: Vec<(u16, u16)> = exps
                .iter()
                .enumerate()
                .filter(|&(_, &e)| e > 0)
                .map(|(id, &e)| {
                    let e = if table.generator(id as u16).parity == Parity::Odd {
                        1
                    } else {
                        e
                    };
                    (id as u16, e)
                })
                .collect();
            p.add_term(Monomial::from_pairs(pairs), c.into());
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_commutes(
        a in arb_poly(mixed_table(), 5),
        b in arb_poly(mixed_table(), 5),
    ) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
    }

    #[test]
    fn multiplication_associates(
        a in arb_poly(mixed_table(), 4),
        b in arb_poly(mixed_table(), 4),
        c in arb_poly(mixed_table(), 4),
    ) {
        let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
        let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
    }

    #[test]
    fn multiplication_distributes(
        a in arb_poly(mixed_table(), 4),
        b in arb_poly(mixed_table(), 4),
        c in arb_poly(mixed_table(), 4),
    ) {
        let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
        let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn commutativity_up_to_koszul_sign_on_monomials(
        a in arb_poly(mixed_table(), 1),
        b in arb_poly(mixed_table(), 1),
    ) {
        // For single (homogeneous-parity) terms, ab = +/- ba with the sign
        // determined by the parities; in particular ab = 0 iff ba = 0.
        let ab = a.mul(&b).unwrap();
        let ba = b.mul(&a).unwrap();
        prop_assert!(ab == ba || ab == ba.neg());
    }

    #[test]
    fn mod_l_arithmetic_commutes_and_associates(
        a in arb_poly(mod5_table(), 4),
        b in arb_poly(mod5_table(), 4),
        c in arb_poly(mod5_table(), 4),
    ) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
        let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
    }

    #[test]
    fn canonical_form_round_trips(p in arb_poly(mixed_table(), 6)) {
        let s = lazard::text::to_canonical(&p);
        let parsed = lazard::text::parse(&s, p.table()).unwrap();
        prop_assert_eq!(&parsed, &p);
        prop_assert_eq!(lazard::text::to_canonical(&parsed), s);
    }

    #[test]
    fn canonical_form_round_trips_mod5(p in arb_poly(mod5_table(), 6)) {
        let s = lazard::text::to_canonical(&p);
        let parsed = lazard::text::parse(&s, p.table()).unwrap();
        prop_assert_eq!(lazard::text::to_canonical(&parsed), s);
    }

    #[test]
    fn product_of_homogeneous_is_homogeneous(
        a in arb_poly(mixed_table(), 4),
        b in arb_poly(mixed_table(), 4),
    ) {
        // project both factors onto one weight each, then multiply
        let pick = |p: &GradedPoly| -> Option<(u32, GradedPoly)> {
            let w = p.terms().next()?.0.weight(p.table());
            let mut out = GradedPoly::zero(p.table());
            for (m, c) in p.terms() {
                if m.weight(p.table()) == w {
                    out.add_term(m.clone(), c.clone());
                }
            }
            Some((w, out))
        };
        if let (Some((wa, ha)), Some((wb, hb))) = (pick(&a), pick(&b)) {
            let prod = ha.mul(&hb).unwrap();
            prop_assert!(prod.is_homogeneous_of_weight(wa + wb));
        }
    }
}

fn series_table() -> Table {
    GeneratorTable::new(
        Domain::Integer,
        [
            ("c1".to_string(), 1, Parity::Even),
            ("c2".to_string(), 2, Parity::Even),
            ("t".to_string(), 0, Parity::Even),
        ],
    )
    .unwrap()
}

/// A random reversible series `t + sum_{d >= 2} c_d t^d` with small
/// polynomial coefficients.
fn arb_series(degree: u32) -> impl Strategy<Value = TruncatedSeries> {
    let table = series_table();
    proptest::collection::vec(
        ((-3i64..=3), (-3i64..=3), (-3i64..=3)),
        (degree as usize).saturating_sub(1),
    )
    .prop_map(move |coeffs| {
        let mut p = GradedPoly::generator(&table, "t").unwrap();
        for (d, (k0, k1, k2)) in coeffs.iter().enumerate() {
            let d = (d + 2) as u16;
            p = p
                .add(&GradedPoly::monomial(&table, &[("t", d)], *k0).unwrap())
                .unwrap()
                .add(
                    &GradedPoly::monomial(&table, &[("c1", 1), ("t", d)], *k1)
                        .unwrap(),
                )
                .unwrap()
                .add(
                    &GradedPoly::monomial(&table, &[("c2", 1), ("t", d)], *k2)
                        .unwrap(),
                )
                .unwrap();
        }
        TruncatedSeries::new(p, &["t"], degree, None).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn reversion_is_an_involution(s in arb_series(10)) {
        let r = s.reverse().unwrap();
        let rr = r.reverse().unwrap();
        prop_assert_eq!(rr.poly(), s.poly());
    }

    #[test]
    fn reversion_back_substitutes_to_identity(s in arb_series(7)) {
        let r = s.reverse().unwrap();
        let id = TruncatedSeries::identity(s.table(), "t", 7).unwrap();
        let sr = s.compose(&r).unwrap();
        let rs = r.compose(&s).unwrap();
        prop_assert_eq!(sr.poly(), id.poly());
        prop_assert_eq!(rs.poly(), id.poly());
    }

    #[test]
    fn truncation_commutes_with_multiplication(
        a in arb_series(9),
        b in arb_series(9),
    ) {
        // multiply at full precision then truncate lower, vs truncate first
        let full = a.mul(&b).unwrap();
        let full_then_cut =
            TruncatedSeries::new(full.poly().clone(), &["t"], 5, None).unwrap();
        let a5 = TruncatedSeries::new(a.poly().clone(), &["t"], 5, None).unwrap();
        let b5 = TruncatedSeries::new(b.poly().clone(), &["t"], 5, None).unwrap();
        let cut_then_mul = a5.mul(&b5).unwrap();
        prop_assert_eq!(full_then_cut.poly(), cut_then_mul.poly());
    }
}

/// exp composed with its reverse is the identity series, termwise, at the
/// full working precision.
#[test]
fn exp_log_compose_to_identity_at_degree_twelve() {
    let degree = 12u32;
    let table = GeneratorTable::new(
        Domain::Integer,
        (1..degree)
            .map(|n| (format!("b{n}"), n, Parity::Even))
            .chain([("t".to_string(), 0, Parity::Even)]),
    )
    .unwrap();
    let mut exp = GradedPoly::generator(&table, "t").unwrap();
    for n in 1..degree {
        exp = exp
            .add(
                &GradedPoly::monomial(
                    &table,
                    &[(&format!("b{n}"), 1), ("t", (n + 1) as u16)],
                    1,
                )
                .unwrap(),
            )
            .unwrap();
    }
    let exp = TruncatedSeries::new(exp, &["t"], degree, None).unwrap();
    let log = exp.reverse().unwrap();
    let id = TruncatedSeries::identity(exp.table(), "t", degree).unwrap();
    let composed = exp.compose(&log).unwrap();
    for d in 0..=degree as u16 {
        assert_eq!(
            composed.coefficient(d).unwrap(),
            id.coefficient(d).unwrap(),
            "coefficient of t^{d}"
        );
    }
}
