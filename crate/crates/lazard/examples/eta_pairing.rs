//! The eta and eta' coefficient families and their pairing.
//!
//! eta_i = a_{1i}; eta'_n solves sum_i eta_i eta'_{n-i} = [n=0]. These are
//! the coefficients of the Gysin pushforward along a projective-space
//! projection. The pairing is equivalent to a pair of triangular matrices
//! multiplying to the identity, verified here explicitly.
//!
//! ```bash
//! cargo run --example eta_pairing
//! ```

use lazard::text::to_canonical;
use lazard::verify::verify_eta_pairing;
use lazard::{Fgl, GradedPoly};

fn main() {
    let fgl = Fgl::universal(8);

    println!("n  eta_n                      eta'_n");
    for n in 0..=5 {
        println!(
            "{n}  {:<26} {}",
            to_canonical(&fgl.eta(n as i64)),
            to_canonical(&fgl.eta_prime(n)),
        );
    }

    // eta'_n recovers the projective-space classes.
    println!("\neta'_n equals cp(n):");
    for n in 0..=5 {
        assert_eq!(fgl.eta_prime(n), fgl.cp_class(n).unwrap());
    }
    println!("  verified for n <= 5");

    println!("\nM_3 * M_3^-1, assembled from the families:");
    let n = 3usize;
    for r in 0..=n {
        let mut row = Vec::new();
        for c in 0..=n {
            let mut s = GradedPoly::zero(fgl.coeff_table());
            for k in 0..=n {
                let idx = n as i64 - k as i64 - c as i64;
                if idx < 0 {
                    continue;
                }
                s = s
                    .add(&fgl.eta((r + k) as i64 - n as i64).mul(&fgl.eta_prime(idx as u32)).unwrap())
                    .unwrap();
            }
            row.push(to_canonical(&s));
        }
        println!("  [{}]", row.join(", "));
    }

    let report = verify_eta_pairing(&fgl, 7, 5);
    assert!(report.passed());
    println!("\npairing and matrix identities verified up to the truncation");
}
