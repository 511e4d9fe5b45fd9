//! Runs the parking rule on a few tuples and shows how each one ends.
//!
//!     cargo run --example park_cars

use parking_sequences::{simulate_linear, ParkResult, PrefSequence, SizeVector};

fn main() -> Result<(), parking_sequences::Error> {
    let cases: [(&[usize], &[usize]); 5] = [
        (&[2, 2, 1], &[2, 3, 1]),
        (&[2, 2, 2], &[3, 2, 1]),
        (&[2, 2, 2], &[2, 5, 5]),
        (&[2, 2], &[1, 2]),
        (&[2, 2], &[2, 1]),
    ];
    for (sizes, prefs) in cases {
        let sizes = SizeVector::new(sizes.to_vec())?;
        let prefs = PrefSequence::linear(prefs.to_vec());
        print!("sizes ({sizes}) prefs ({prefs}): ");
        match simulate_linear(&sizes, &prefs)? {
            ParkResult::Parked(layout) => {
                let cars: Vec<String> = layout
                    .blocks_by_spot()
                    .into_iter()
                    .map(|(car, start, end)| format!("C{car}@[{start},{end}]"))
                    .collect();
                println!("parked {}", cars.join(" "));
            }
            ParkResult::Collision {
                car,
                first_empty,
                blocked,
            } => {
                println!("car {car} finds spot {first_empty} empty but hits spot {blocked}")
            }
            ParkResult::PastEnd { car } => println!("car {car} leaves the lot"),
        }
    }
    Ok(())
}
