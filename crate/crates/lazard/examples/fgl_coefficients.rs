//! Build the universal formal group law and inspect its coefficients.
//!
//! ```bash
//! cargo run --example fgl_coefficients
//! ```

use lazard::text::to_canonical;
use lazard::Fgl;

fn main() {
    let degree = 8;
    let fgl = Fgl::universal(degree);

    println!("universal formal group law, truncated at total degree {degree}");
    println!("F(x, y) = x + y + sum a_ij x^i y^j, coefficients in Z[b1, b2, ...]:\n");
    for (i, j, coeff) in fgl.entries(5) {
        if i + j >= 2 && i <= j {
            println!("  a_{i}{j} = {}", to_canonical(&coeff));
        }
    }

    println!("\nweights: a_ij is homogeneous of weight i + j - 1");
    for (i, j, coeff) in fgl.entries(5) {
        if i + j >= 2 && i <= j {
            assert!(coeff.is_homogeneous_of_weight(i + j - 1));
        }
    }
    println!("  verified for every entry above");

    println!("\nformal inverse iota(x) with F(x, iota(x)) = 0:");
    let iota = fgl.formal_inverse();
    for d in 1..=4u16 {
        println!("  [x^{d}] iota = {}", to_canonical(&iota.coefficient(d).unwrap()));
    }

    println!("\naxioms (unitality, commutativity, associativity) at D={degree}:");
    let report = fgl.verify_axioms(degree);
    for check in &report.checks {
        println!("  {}: {:?}", check.name, check.status);
    }
    assert!(report.passed());
}
