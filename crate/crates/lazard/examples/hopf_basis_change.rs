//! Basis change in the bordism Hopf algebra of infinite projective space.
//!
//! The dual basis beta_n and the geometric basis p_n are related by the
//! mutually inverse triangular substitutions
//! `beta_n = sum a_{1i} p_{n-i}` and `p_n = sum cp(i) beta_{n-i}`.
//!
//! ```bash
//! cargo run --example hopf_basis_change
//! ```

use lazard::hopf::{BasisKind, HopfAlgebra};
use lazard::text::to_canonical;
use lazard::Fgl;

fn main() {
    let alg = HopfAlgebra::new(Fgl::universal(8));

    println!("geometric classes in the dual basis:");
    for n in 0..=3 {
        let p = alg.basis_element(BasisKind::P, n);
        let beta = alg.to_beta_basis(&p).unwrap();
        let terms: Vec<String> = beta
            .terms
            .iter()
            .rev()
            .map(|(k, c)| format!("({}) beta_{k}", to_canonical(c)))
            .collect();
        println!("  p_{n} = {}", terms.join(" + "));
    }

    println!("\ndual classes in the geometric basis:");
    for n in 0..=3 {
        let b = alg.basis_element(BasisKind::Beta, n);
        let p = alg.to_p_basis(&b);
        let terms: Vec<String> = p
            .terms
            .iter()
            .rev()
            .map(|(k, c)| format!("({}) p_{k}", to_canonical(c)))
            .collect();
        println!("  beta_{n} = {}", terms.join(" + "));
    }

    println!("\nround trip is the identity:");
    for n in 0..=7 {
        let p = alg.basis_element(BasisKind::P, n);
        assert_eq!(alg.to_p_basis(&alg.to_beta_basis(&p).unwrap()), p);
        let b = alg.basis_element(BasisKind::Beta, n);
        assert_eq!(alg.to_beta_basis(&alg.to_p_basis(&b)).unwrap(), b);
    }
    println!("  verified for all indices <= 7");

    // Homogeneity bookkeeping: mixed classes track their degree.
    let mixed = alg.class(
        BasisKind::P,
        [(2, alg.fgl().a(1, 1)), (3, lazard::GradedPoly::one(alg.table()))],
    );
    println!(
        "\na mixed class (a_11) p_2 + p_3 has homogeneous degree {:?}",
        mixed.homogeneous_degree()
    );
}
