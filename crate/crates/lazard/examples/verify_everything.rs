//! Run the complete verification suite and print one line per check.
//!
//! ```bash
//! cargo run --example verify_everything
//! cargo run --example verify_everything -- 10   # choose the degree
//! ```

use lazard::verify::verify_all;
use lazard::{Fgl, Status};

fn main() {
    let degree: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("degree must be a number"))
        .unwrap_or(8);
    let fgl = Fgl::universal(degree);
    let reports = verify_all(&fgl, 0x5eed);

    let mut checks = 0;
    let mut failed = 0;
    for report in &reports {
        for check in &report.checks {
            checks += 1;
            let tag = match check.status {
                Status::Pass => "PASS",
                Status::Warn => "WARN",
                Status::Fail => {
                    failed += 1;
                    "FAIL"
                }
            };
            println!("{tag} {}: {}", report.name, check.name);
        }
    }
    println!("\n{checks} checks, {failed} failed");
    std::process::exit(if failed > 0 { 1 } else { 0 });
}
