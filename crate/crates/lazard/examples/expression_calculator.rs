//! Parse and evaluate Steenrod operation expressions from the command line.
//!
//! ```bash
//! cargo run --example expression_calculator -- "Q1(beta(u1*u2))"
//! cargo run --example expression_calculator -- --l 5 "P1(v1) + 2*q1(u1)"
//! ```

use lazard::expr::{evaluate, parse_expression};
use lazard::steenrod::MotRing;
use lazard::text::to_canonical;

fn main() {
    let mut args: Vec<String> = std::env::args().skip(1).collect();
    let mut l = 3u32;
    let mut gens = 2u32;
    let mut exprs = Vec::new();
    while let Some(arg) = args.first() {
        match arg.as_str() {
            "--l" => {
                args.remove(0);
                l = args.remove(0).parse().expect("--l takes a prime");
            }
            "--gens" => {
                args.remove(0);
                gens = args.remove(0).parse().expect("--gens takes a count");
            }
            _ => exprs.push(args.remove(0)),
        }
    }
    if exprs.is_empty() {
        exprs.push("Q1(beta(u1*u2))".to_string());
    }

    let ring = MotRing::new(l, gens).expect("l must be prime");
    println!("ring: l = {l}, generators u1..u{gens}, v1..v{gens}\n");
    for src in exprs {
        print!("{src}\n  = ");
        match parse_expression(&src).and_then(|ast| evaluate(&ring, &ast)) {
            Ok(value) => {
                println!("{}", to_canonical(&value));
                if let Some((d, w)) = ring.bidegree(&value) {
                    println!("  bidegree ({d}, {w})");
                }
            }
            Err(e) => println!("{e}"),
        }
        println!();
    }
}
