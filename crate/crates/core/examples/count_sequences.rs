//! Exact counts from the product formula, including values far beyond
//! 64-bit range.
//!
//!     cargo run --example count_sequences

use parking_sequences::{count_circular, count_classical, count_linear, option_count, SizeVector};

fn main() -> Result<(), parking_sequences::Error> {
    for sizes in [
        vec![2, 2, 1],
        vec![1, 1, 1, 1],
        vec![2, 5, 1, 3, 2],
        vec![5; 20],
    ] {
        let sizes = SizeVector::new(sizes)?;
        println!(
            "({sizes}): {} linear, {} circular on {} spots",
            count_linear(&sizes),
            count_circular(&sizes),
            sizes.circle()
        );
    }

    // Per-car factors of the circular count.
    let sizes = SizeVector::new(vec![2, 5, 1, 3, 2])?;
    let factors = (1..=sizes.n())
        .map(|car| option_count(&sizes, car).map(|c| c.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    println!("choices per car for ({sizes}): {}", factors.join(" x "));

    for n in 1..=8 {
        println!("{n} unit cars: {} parking functions", count_classical(n)?);
    }
    Ok(())
}
