//! Checks the product formula against exhaustive simulation for every
//! size vector within small bounds.
//!
//!     cargo run --release --example brute_force_verify -- 4 9

use parking_sequences::oracle::{check_bijection, verify_sweep, VerifyOptions, DEFAULT_BUDGET};
use parking_sequences::{Flavor, SizeVector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let max_cars: usize = args.next().as_deref().unwrap_or("4").parse()?;
    let max_total: usize = args.next().as_deref().unwrap_or("9").parse()?;

    for flavor in [Flavor::Linear, Flavor::Circular] {
        let reports = verify_sweep(max_cars, max_total, flavor, &VerifyOptions::default())?;
        let mismatches: Vec<_> = reports.iter().filter(|r| !r.matches).collect();
        println!(
            "{flavor}: {} size vectors with at most {max_cars} cars and total at most {max_total}, {} mismatches",
            reports.len(),
            mismatches.len()
        );
        for r in mismatches {
            println!(
                "  {}: brute force {} vs formula {}",
                r.sizes, r.parked, r.formula_value
            );
        }
    }

    let sizes: SizeVector = "2,1,3".parse()?;
    let report = check_bijection(&sizes, DEFAULT_BUDGET)?;
    println!(
        "({sizes}): decode {}, cardinality {}, restriction {}, rotation {}",
        report.decode_pass, report.cardinality_pass, report.restriction_pass, report.rotation_pass
    );
    Ok(())
}
