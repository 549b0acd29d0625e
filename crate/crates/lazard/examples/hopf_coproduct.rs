//! The coproduct of the bordism Hopf algebra, computed by two routes.
//!
//! In the dual basis the coproduct splits indices; in the geometric basis it
//! is the closed formula `p_n -> sum a_{1,i+j-n} p_{n-i} (x) p_{n-j}`. The
//! second is also computable by conjugating the first through the basis
//! change, and the two must agree — that agreement is one of the package's
//! acceptance oracles.
//!
//! ```bash
//! cargo run --example hopf_coproduct
//! ```

use lazard::hopf::{BasisKind, HopfAlgebra};
use lazard::text::to_canonical;
use lazard::Fgl;

fn main() {
    let alg = HopfAlgebra::new(Fgl::universal(9));

    let b2 = alg.basis_element(BasisKind::Beta, 2);
    println!("copr(beta_2):");
    for (&(i, j), c) in &alg.coproduct(&b2).terms {
        println!("  ({}) beta_{i} (x) beta_{j}", to_canonical(c));
    }

    let p1 = alg.basis_element(BasisKind::P, 1);
    println!("\ncopr(p_1) by the direct formula:");
    for (&(i, j), c) in &alg.coproduct(&p1).terms {
        println!("  ({}) p_{i} (x) p_{j}", to_canonical(c));
    }

    println!("\ntwo-route agreement for p_n, n <= 8:");
    for n in 0..=8 {
        let p = alg.basis_element(BasisKind::P, n);
        assert_eq!(
            alg.coproduct(&p),
            alg.coproduct_conjugated(&p).unwrap(),
            "p_{n}"
        );
    }
    println!("  direct formula == conjugated route");

    println!("\ncoassociativity and counit for indices <= 6:");
    for n in 0..=6 {
        for basis in [BasisKind::Beta, BasisKind::P] {
            let c = alg.basis_element(basis, n);
            let (left, right) = alg.triple_coproducts(&c);
            assert_eq!(left, right);
        }
    }
    println!("  (Delta x id) Delta == (id x Delta) Delta");
}
