//! Acceptance suite: one test per criterion, each printing a PASS line when
//! it holds. Every comparison is exact symbolic equality; the stated runtime
//! ceilings are asserted where given.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::sync::{Arc, OnceLock};
use std::time::{Duration, Instant};

use lazard::expr::{evaluate, parse_expression};
use lazard::fgl::Fgl;
use lazard::gysin;
use lazard::hopf::{binomial, BasisKind, HopfAlgebra};
use lazard::ring::GradedPoly;
use lazard::steenrod::MotRing;
use lazard::text::to_canonical;
use lazard::verify;

fn fgl12() -> Arc<Fgl> {
    static FGL: OnceLock<Arc<Fgl>> = OnceLock::new();
    Arc::clone(FGL.get_or_init(|| Fgl::universal(12)))
}

fn pass(n: u32, what: &str) {
    println!("criterion {n}: PASS — {what}");
}

#[test]
fn criterion_01_fgl_axioms_at_degree_12() {
    let start = Instant::now();
    let fgl = Fgl::universal(12);
    let report = fgl.verify_axioms(12);
    let elapsed = start.elapsed();
    assert!(report.passed(), "{report:?}");
    assert!(
        elapsed <= Duration::from_secs(60),
        "axioms took {elapsed:?}, budget 60s"
    );
    pass(1, &format!(
        "unitality, commutativity, associativity hold identically at D=12 ({} ms)",
        elapsed.as_millis()
    ));
}

#[test]
fn criterion_02_cp_classes_match_rational_log_oracle() {
    let report = verify::verify_cp_against_log(&fgl12(), 10);
    assert!(report.passed(), "{report:?}");
    pass(2, "cp(n) = (n+1)*m_n exactly for n <= 10");
}

#[test]
fn criterion_03_eta_pairing_and_matrix_identity() {
    let report = verify::verify_eta_pairing(&fgl12(), 10, 6);
    assert!(report.passed(), "{report:?}");
    pass(3, "eta pairing for n <= 10 and M_n * M_n^-1 = I for n <= 6");
}

#[test]
fn criterion_04_basis_change_round_trip() {
    let alg = HopfAlgebra::new(fgl12());
    for n in 0..=10u32 {
        for basis in [BasisKind::Beta, BasisKind::P] {
            let c = alg.basis_element(basis, n);
            let round = match basis {
                BasisKind::Beta => alg.to_beta_basis(&alg.to_p_basis(&c)).unwrap(),
                BasisKind::P => alg.to_p_basis(&alg.to_beta_basis(&c).unwrap()),
            };
            assert_eq!(round, c, "{}_{n}", basis.label());
        }
    }
    pass(4, "basis-change round trip is the identity for all indices <= 10");
}

#[test]
fn criterion_05_coproduct_two_route_coassociativity_counit() {
    let alg = HopfAlgebra::new(fgl12());
    for n in 0..=8u32 {
        let p = alg.basis_element(BasisKind::P, n);
        assert_eq!(
            alg.coproduct(&p),
            alg.coproduct_conjugated(&p).unwrap(),
            "two-route p_{n}"
        );
        for basis in [BasisKind::Beta, BasisKind::P] {
            let c = alg.basis_element(basis, n);
            let (l, r) = alg.triple_coproducts(&c);
            assert_eq!(l, r, "coassociativity {}_{n}", basis.label());
            let cop = alg.coproduct(&c);
            let mut folded = std::collections::BTreeMap::new();
            for (&(i, j), coeff) in &cop.terms {
                let eps = alg
                    .counit(&alg.class(basis, [(i, coeff.clone())]))
                    .unwrap();
                if !eps.is_zero() {
                    let slot = folded
                        .entry(j)
                        .or_insert_with(|| GradedPoly::zero(alg.table()));
                    *slot = slot.add(&eps).unwrap();
                }
            }
            folded.retain(|_, v: &mut GradedPoly| !v.is_zero());
            assert_eq!(folded, c.terms, "counit {}_{n}", basis.label());
        }
    }
    pass(5, "coproduct two-route, coassociativity, and counit for n <= 8");
}

#[test]
fn criterion_06_product_two_route_and_closed_forms() {
    let alg = HopfAlgebra::new(fgl12());
    for n in 0..=8u32 {
        for m in 0..=(8 - n) {
            for basis in [BasisKind::Beta, BasisKind::P] {
                let a = alg.basis_element(basis, n);
                let b = alg.basis_element(basis, m);
                assert_eq!(
                    alg.product(&a, &b).unwrap(),
                    alg.product_conjugated(&a, &b).unwrap(),
                    "{} ({n},{m})",
                    basis.label()
                );
            }
            let lead = alg.segre_coefficient(n + m, n, m).unwrap();
            assert_eq!(
                lead,
                GradedPoly::constant(alg.table(), binomial(n + m, n)),
                "leading ({n},{m})"
            );
        }
    }
    for m in 0..=8u32 {
        let p0 = alg.basis_element(BasisKind::P, 0);
        let pm = alg.basis_element(BasisKind::P, m);
        assert_eq!(alg.product(&p0, &pm).unwrap(), pm, "p0*p{m}");
    }
    pass(6, "product two-route for n+m <= 8, leading binomials, unit law");
}

#[test]
fn criterion_07_diagonal_equals_euler_class() {
    let start = Instant::now();
    for n in 1..=5u32 {
        let report = gysin::verify_diagonal_equals_euler(fgl12(), n);
        assert!(report.passed(), "n={n}: {report:?}");
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed <= Duration::from_secs(120),
        "diagonal-vs-euler took {elapsed:?}, budget 120s"
    );
    pass(7, &format!(
        "diagonal class equals splitting-principle Euler class for n <= 5 ({} ms)",
        elapsed.as_millis()
    ));
}

#[test]
fn criterion_08_section_identity_all_laws() {
    for law in [fgl12(), Fgl::additive(8), Fgl::multiplicative(8)] {
        for n in 0..=6u32 {
            let report = gysin::verify_section_identity(Arc::clone(&law), n);
            assert!(report.passed(), "{}: n={n}: {report:?}", law.kind().label());
        }
    }
    pass(8, "p_! of the diagonal is 1 for n <= 6 under universal, additive, multiplicative laws");
}

#[test]
fn criterion_09_projection_properties_randomized() {
    let configs: [(Arc<Fgl>, (u32, u32)); 5] = [
        (Fgl::universal(6), (4, 3)),
        (Fgl::universal(6), (4, 4)),
        (Fgl::universal(6), (2, 2)),
        (Fgl::additive(6), (4, 3)),
        (Fgl::multiplicative(6), (4, 3)),
    ];
    for (law, orders) in configs {
        let label = law.kind().label();
        let report = gysin::projection_properties_randomized(law, orders, 100, 2024);
        assert!(report.passed(), "{label} {orders:?}: {report:?}");
    }
    // base-change along coefficient specializations, same case volume
    for values in [vec![], vec![("b1", -1)]] {
        let report = gysin::verify_specialization_naturality(
            Fgl::universal(6),
            &values,
            (3, 3),
            100,
            2024,
        );
        assert!(report.passed(), "{values:?}: {report:?}");
    }
    pass(9, "projection formula and double projections on 100 randomized inputs per configuration");
}

#[test]
fn criterion_10_milnor_obstruction_value() {
    let start = Instant::now();
    for l in [2u32, 3, 5] {
        let ring = MotRing::new(l, 2).unwrap();
        // the Bockstein value is exact
        let u1u2 = evaluate(&ring, &parse_expression("u1*u2").unwrap()).unwrap();
        let beta = ring.bockstein(&u1u2);
        let beta_want = ring
            .v(1)
            .unwrap()
            .mul(&ring.u(2).unwrap())
            .unwrap()
            .sub(&ring.u(1).unwrap().mul(&ring.v(2).unwrap()).unwrap())
            .unwrap();
        assert_eq!(beta, beta_want, "beta(u1*u2) at l={l}");

        // the composite equals v1^l v2 - v1 v2^l up to a unit mod l
        let val =
            evaluate(&ring, &parse_expression("Q1(beta(u1*u2))").unwrap()).unwrap();
        let paper = ring
            .v(1)
            .unwrap()
            .pow(l)
            .mul(&ring.v(2).unwrap())
            .unwrap()
            .sub(&ring.v(1).unwrap().mul(&ring.v(2).unwrap().pow(l)).unwrap())
            .unwrap();
        assert!(!val.is_zero(), "l={l}");
        assert!(
            (1..l).any(|unit| val == paper.scale(unit as i64)),
            "l={l}: got {}",
            to_canonical(&val)
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed <= Duration::from_secs(1), "took {elapsed:?}, budget 1s");
    pass(10, &format!(
        "Q1(beta(u1*u2)) = v1^l*v2 - v1*v2^l up to a unit for l in {{2,3,5}} ({} ms)",
        elapsed.as_millis()
    ));
}

#[test]
fn criterion_11_obstruction_survives_truncation() {
    for l in [2u32, 3, 5] {
        let ring = MotRing::new(l, 2).unwrap();
        let val = evaluate(&ring, &parse_expression("Q1(beta(u1*u2))").unwrap()).unwrap();
        let truncated = ring.truncate(&val, &[l, l]);
        assert_eq!(truncated, val, "l={l}");
        assert!(!truncated.is_zero(), "l={l}");
    }
    pass(11, "the obstruction class is nonzero after truncation by (v1^(l+1), v2^(l+1))");
}

#[test]
fn criterion_12_operation_property_suite() {
    for l in [2u32, 3, 5] {
        let ring = MotRing::new(l, 2).unwrap();
        let report = ring.verify_operations(200, 77);
        assert!(report.passed(), "l={l}: {report:?}");
        let fails: Vec<_> = report
            .checks
            .iter()
            .filter(|c| c.status != lazard::Status::Pass)
            .collect();
        assert!(fails.is_empty(), "l={l}: non-pass checks {fails:?}");
    }
    pass(12, "beta^2, derivation law, Cartan independence, bidegrees on 200 random classes per prime");
}

#[test]
fn criterion_13_cli_determinism_and_cache_round_trip() {
    use std::process::Command;
    let dir = tempfile::tempdir().unwrap();
    let bin = env!("CARGO_BIN_EXE_lazard");
    let run = || {
        Command::new(bin)
            .args(["verify-all", "--degree", "8", "--cache-dir"])
            .arg(dir.path())
            .output()
            .expect("binary runs")
    };
    let first = run();
    let second = run();
    assert!(first.status.success(), "{}", String::from_utf8_lossy(&first.stderr));
    assert!(second.status.success());
    assert_eq!(first.stdout, second.stdout, "verify-all output must be byte-identical");
    // first run populated the cache; the second must have used it untouched
    let report: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(report["results"]["summary"]["failed"], 0);

    // cache round trip restores identical tables at D = 8
    let fgl = Fgl::universal(8);
    let path = dir.path().join("round-trip.json");
    lazard::cache::store(&fgl, &path).unwrap();
    match lazard::cache::load(&path, 8) {
        lazard::cache::LoadOutcome::Hit(loaded) => {
            for (i, j, p) in fgl.entries(8) {
                assert_eq!(loaded.a(i as i64, j as i64), p, "a({i},{j})");
            }
            for n in 0..8 {
                assert_eq!(loaded.cp_class(n).unwrap(), fgl.cp_class(n).unwrap());
                assert_eq!(loaded.eta_prime(n), fgl.eta_prime(n));
            }
        }
        _ => panic!("expected cache hit"),
    }
    pass(13, "verify-all --degree 8 is byte-identical across runs; cache round trip is exact");
}
