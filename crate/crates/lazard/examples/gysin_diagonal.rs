//! The diagonal class of P^n, twice: the closed coefficient formula and the
//! splitting-principle Euler class of the twisted quotient bundle.
//!
//! The closed formula reads off `a_{1,i+j-n}` at `x1^i x2^j`; the
//! independent route forces the Chern classes of the quotient bundle from
//! the formal inverse and evaluates the product of twisted Chern roots as a
//! companion-matrix determinant. Their agreement re-derives the formula.
//!
//! ```bash
//! cargo run --example gysin_diagonal
//! ```

use std::time::Instant;

use lazard::gysin::{diagonal_square, euler_class_twisted_quotient};
use lazard::text::to_canonical;
use lazard::Fgl;

fn main() {
    let fgl = Fgl::universal(10);

    let (model, diag) = diagonal_square(fgl.clone(), 1).unwrap();
    println!("diagonal class of P^1: {}", to_canonical(&diag));
    let euler = euler_class_twisted_quotient(&model).unwrap();
    println!("euler-class route:     {}", to_canonical(&euler));
    assert_eq!(diag, euler);

    println!("\nagreement for higher n:");
    for n in 2..=5 {
        let start = Instant::now();
        let (model, diag) = diagonal_square(fgl.clone(), n).unwrap();
        let euler = euler_class_twisted_quotient(&model).unwrap();
        assert_eq!(diag, euler, "n={n}");
        println!(
            "  n={n}: {} terms, equal ({} ms)",
            diag.num_terms(),
            start.elapsed().as_millis()
        );
    }

    println!("\nsame check under the additive and multiplicative laws:");
    for law in [Fgl::additive(10), Fgl::multiplicative(10)] {
        let label = law.kind().label();
        for n in 1..=4 {
            let (model, diag) = diagonal_square(law.clone(), n).unwrap();
            let euler = euler_class_twisted_quotient(&model).unwrap();
            assert_eq!(diag, euler, "{label} n={n}");
        }
        println!("  {label}: n <= 4 equal");
    }

    // Under the additive law the diagonal collapses to the classical answer.
    let (_, diag) = diagonal_square(Fgl::additive(6), 2).unwrap();
    println!("\nadditive-law diagonal of P^2: {}", to_canonical(&diag));
}
