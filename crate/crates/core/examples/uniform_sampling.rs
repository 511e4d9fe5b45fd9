//! Draws parking sequences uniformly at random from a seeded generator and
//! tallies the outcomes.
//!
//!     cargo run --example uniform_sampling -- 2,2 20000 7

use std::collections::BTreeMap;

use parking_sequences::{count_linear, sample_linear, SizeVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let sizes: SizeVector = args.next().as_deref().unwrap_or("2,2").parse()?;
    let draws: usize = args.next().as_deref().unwrap_or("20000").parse()?;
    let seed: u64 = args.next().as_deref().unwrap_or("7").parse()?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut freq: BTreeMap<String, usize> = BTreeMap::new();
    for _ in 0..draws {
        *freq
            .entry(sample_linear(&sizes, &mut rng).to_string())
            .or_default() += 1;
    }
    println!(
        "({sizes}): {} of {} sequences seen in {draws} draws",
        freq.len(),
        count_linear(&sizes)
    );
    for (prefs, k) in freq.iter().take(40) {
        println!("  ({prefs})  {:.4}", *k as f64 / draws as f64);
    }
    Ok(())
}
