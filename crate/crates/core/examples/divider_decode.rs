//! Decodes option sequences (anchor spot plus one choice per later car)
//! into circular parking sequences and checks the result by simulation.
//!
//!     cargo run --example divider_decode

use std::collections::HashSet;

use parking_sequences::{
    count_circular, decode, empty_spot, enumerate_option_sequences, simulate_circular, CarOption,
    OptionSequence, SizeVector,
};

fn main() -> Result<(), parking_sequences::Error> {
    let sizes = SizeVector::new(vec![2, 2])?;
    for options in [
        vec![CarOption::Cruise { car: 1, offset: 1 }],
        vec![CarOption::Direct(1)],
        vec![CarOption::Direct(2)],
    ] {
        let opts = OptionSequence::new(1, options);
        let (prefs, layout) = decode(&sizes, &opts)?;
        println!(
            "{opts}: prefs ({prefs}), starts {:?}, empty spot {}",
            layout.starts(),
            empty_spot(&layout)?
        );
    }

    let sizes = SizeVector::new(vec![2, 5, 1, 3, 2])?;
    let mut seen = HashSet::new();
    let mut replayed = 0u64;
    for opts in enumerate_option_sequences(&sizes) {
        let (prefs, layout) = decode(&sizes, &opts)?;
        if simulate_circular(&sizes, &prefs)?.layout() == Some(&layout) {
            replayed += 1;
        }
        seen.insert(prefs);
    }
    println!(
        "({sizes}): {} distinct decodes, {replayed} replay exactly, formula {}",
        seen.len(),
        count_circular(&sizes)
    );
    Ok(())
}
