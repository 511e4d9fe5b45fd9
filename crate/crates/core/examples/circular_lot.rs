//! Parking on a circle with one spare spot: every rotation of a parking
//! tuple parks, and rotating the empty spot to the last position recovers
//! a linear parking sequence.
//!
//!     cargo run --example circular_lot

use parking_sequences::{
    empty_spot, restrict_to_linear, rotate, simulate_circular, PrefSequence, SizeVector,
};

fn main() -> Result<(), parking_sequences::Error> {
    let sizes = SizeVector::new(vec![2, 2, 1])?;
    let m = sizes.circle();
    let prefs = PrefSequence::circular(vec![4, 4, 2]);
    println!("sizes ({sizes}) on a circle of {m} spots");
    for a in 0..m as i64 {
        let rotated = rotate(&sizes, &prefs, a);
        let result = simulate_circular(&sizes, &rotated)?;
        let layout = result.layout().expect("rotations of a parking tuple park");
        let empty = empty_spot(layout)?;
        let linear = restrict_to_linear(&sizes, &rotated)?;
        println!(
            "shift {a}: prefs ({rotated}) starts {:?} empty spot {empty}{}",
            layout.starts(),
            match linear {
                Some(p) => format!(" -> linear parking sequence ({p})"),
                None => String::new(),
            }
        );
    }
    Ok(())
}
