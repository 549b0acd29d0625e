//! The Hopf-algebra product: pushforward along the Segre embedding.
//!
//! In the geometric basis the answer expresses the class of a product of
//! projective spaces with its (1,1) line bundle as a combination of single
//! projective spaces with their hyperplane bundles:
//! `[P^n x P^m; O(1,1)] = sum_r s^(r)_{n,m} [P^r; O(1)]`.
//!
//! ```bash
//! cargo run --example segre_product
//! ```

use lazard::hopf::{BasisKind, HopfAlgebra};
use lazard::text::to_canonical;
use lazard::Fgl;

fn main() {
    let alg = HopfAlgebra::new(Fgl::universal(10));

    for (n, m) in [(1u32, 1u32), (2, 1), (2, 2)] {
        println!("[P^{n} x P^{m}; O(1,1)] =");
        for (r, c) in alg.segre_decomposition(n, m).unwrap() {
            println!("    ({})  [P^{r}; O(1)]", to_canonical(&c));
        }
        // each coefficient is weight-homogeneous of weight n + m - r
        for (r, c) in alg.segre_decomposition(n, m).unwrap() {
            assert!(c.is_homogeneous_of_weight(n + m - r));
        }
        println!();
    }

    println!("the point class is the unit: p_0 * p_m = p_m for m <= 6");
    for m in 0..=6 {
        let p0 = alg.basis_element(BasisKind::P, 0);
        let pm = alg.basis_element(BasisKind::P, m);
        assert_eq!(alg.product(&p0, &pm).unwrap(), pm);
    }

    println!("leading coefficient s^(n+m)_(n,m) is binomial(n+m, n):");
    for (n, m) in [(1u32, 1u32), (3, 2), (4, 4)] {
        let lead = alg.segre_coefficient(n + m, n, m).unwrap();
        println!("  (n,m)=({n},{m}): {}", to_canonical(&lead));
    }

    println!("\ndirect geometric-basis formula == conjugation through the dual basis:");
    for n in 0..=4u32 {
        for m in 0..=(4 - n) {
            let a = alg.basis_element(BasisKind::P, n);
            let b = alg.basis_element(BasisKind::P, m);
            assert_eq!(
                alg.product(&a, &b).unwrap(),
                alg.product_conjugated(&a, &b).unwrap()
            );
        }
    }
    println!("  verified for n + m <= 4");
}
