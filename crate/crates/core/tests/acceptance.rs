//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Every check is exact except the sampler, which uses a fixed seed, a
//! per-outcome frequency band of +-0.02 and a chi-square bound.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::Instant;

use parking_sequences::oracle::{
    check_bijection, compositions, verify_sweep, verify_with, VerifyOptions, DEFAULT_BUDGET,
};
use parking_sequences::tuples::TupleSpace;
use parking_sequences::{
    count_circular, count_classical, count_linear, is_classical_parking_function,
    is_parking_sequence, option_count, sample_linear, simulate_linear, CountValue, Flavor,
    ParkResult, PrefSequence, SizeVector,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn sv(v: &[usize]) -> SizeVector {
    SizeVector::new(v.to_vec()).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn golden_examples() -> Outcome {
    let run = |sizes: &[usize], prefs: &[usize]| {
        simulate_linear(&sv(sizes), &PrefSequence::linear(prefs.to_vec())).unwrap()
    };

    let parked = run(&[2, 2, 1], &[2, 3, 1]);
    let blocks = parked.layout().map(|l| l.blocks_by_spot());
    ensure(
        blocks == Some(vec![(3, 1, 1), (1, 2, 3), (2, 4, 5)]),
        || format!("(2,2,1)/(2,3,1) gave {parked:?}"),
    )?;

    let collision = run(&[2, 2, 2], &[3, 2, 1]);
    ensure(
        collision
            == ParkResult::Collision {
                car: 2,
                first_empty: 2,
                blocked: 3,
            },
        || format!("(2,2,2)/(3,2,1) gave {collision:?}"),
    )?;

    let past_end = run(&[2, 2, 2], &[2, 5, 5]);
    ensure(past_end == ParkResult::PastEnd { car: 3 }, || {
        format!("(2,2,2)/(2,5,5) gave {past_end:?}")
    })?;

    let s = sv(&[2, 2]);
    let forward = is_parking_sequence(&s, &PrefSequence::linear(vec![1, 2])).unwrap();
    let backward = is_parking_sequence(&s, &PrefSequence::linear(vec![2, 1])).unwrap();
    ensure(forward && !backward, || {
        format!("(2,2): (1,2) -> {forward}, (2,1) -> {backward}")
    })?;
    Ok("4 scenarios reproduced".into())
}

fn sweep_matches(max_n: usize, max_total: usize, flavor: Flavor) -> Outcome {
    let reports = verify_sweep(max_n, max_total, flavor, &VerifyOptions::default())
        .map_err(|e| e.to_string())?;
    if let Some(bad) = reports.iter().find(|r| !r.matches) {
        return Err(format!(
            "{} {}: brute force {} vs formula {}",
            bad.sizes, flavor, bad.parked, bad.formula_value
        ));
    }
    if flavor == Flavor::Circular {
        if let Some(bad) = reports.iter().find(|r| r.past_end != 0u64) {
            return Err(format!(
                "{}: past_end = {} on the circle",
                bad.sizes, bad.past_end
            ));
        }
    }
    let tuples: u64 = reports
        .iter()
        .map(|r| r.total_tuples.to_u64().unwrap())
        .sum();
    Ok(format!(
        "{} compositions, {tuples} tuples simulated, all equal",
        reports.len()
    ))
}

fn classical_specialization() -> Outcome {
    for n in 1..=7 {
        let report = verify_with(
            &SizeVector::unit(n).unwrap(),
            Flavor::Linear,
            &VerifyOptions::default(),
        )
        .map_err(|e| e.to_string())?;
        let expected = count_classical(n).unwrap();
        ensure(report.parked == expected, || {
            format!("n = {n}: {} parked, expected {expected}", report.parked)
        })?;
        if n == 7 {
            ensure(
                report.parked == 262_144u64 && report.total_tuples == 823_543u64,
                || format!("n = 7: {} of {}", report.parked, report.total_tuples),
            )?;
        }
    }
    Ok("n = 1..7 equal (n+1)^(n-1); n = 7: 262144 of 823543".into())
}

/// Runs the bijection checks over every composition with n <= 4, T <= 8
/// and reports the first failure of the selected check.
fn bijection_sweep(check: &str) -> Outcome {
    let mut instances = 0;
    for sizes in compositions(4, 8) {
        let r = check_bijection(&sizes, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        let ok = match check {
            "rotation" => r.rotation_pass,
            "restriction" => r.restriction_pass,
            "decode" => r.decode_pass && r.cardinality_pass,
            _ => unreachable!(),
        };
        ensure(ok, || format!("{check} failed for {sizes}: {r:?}"))?;
        instances += 1;
    }
    Ok(format!("{instances} compositions"))
}

fn decode_bijection() -> Outcome {
    let s = sv(&[2, 5, 1, 3, 2]);
    let c4 = option_count(&s, 4).unwrap();
    let c1 = option_count(&s, 1).unwrap();
    ensure(c4 == 11 && c1 == 14, || {
        format!("option_count gave {c4} and {c1}")
    })?;
    let detail = bijection_sweep("decode")?;
    Ok(format!(
        "{detail}; option_count((2,5,1,3,2), 4) = 11, (.., 1) = 14"
    ))
}

fn sampler_exactness() -> Outcome {
    const DRAWS: usize = 10_000;
    const SEED: u64 = 2024;
    // 0.999 quantile of chi-square with 3 degrees of freedom.
    const CHI2_3_999: f64 = 16.266;

    let s = sv(&[2, 2]);
    let expected: BTreeSet<Vec<usize>> = [[1, 1], [1, 2], [1, 3], [3, 1]]
        .iter()
        .map(|p| p.to_vec())
        .collect();
    let draw = |seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..DRAWS)
            .map(|_| sample_linear(&s, &mut rng))
            .collect::<Vec<_>>()
    };
    let samples = draw(SEED);
    ensure(samples == draw(SEED), || {
        "same seed gave different streams".into()
    })?;

    let mut freq: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for p in &samples {
        ensure(is_parking_sequence(&s, p).unwrap(), || {
            format!("{p} is not a parking sequence")
        })?;
        *freq.entry(p.as_slice().to_vec()).or_default() += 1;
    }
    ensure(
        freq.keys().cloned().collect::<BTreeSet<_>>() == expected,
        || format!("outcomes {freq:?}"),
    )?;

    let mean = DRAWS as f64 / 4.0;
    let mut chi2 = 0.0;
    for (p, &k) in &freq {
        let f = k as f64 / DRAWS as f64;
        ensure((f - 0.25).abs() <= 0.02, || {
            format!("{p:?} has frequency {f}")
        })?;
        chi2 += (k as f64 - mean).powi(2) / mean;
    }
    ensure(chi2 < CHI2_3_999, || {
        format!("chi-square {chi2:.3} >= {CHI2_3_999}")
    })?;
    let freqs: Vec<String> = freq
        .values()
        .map(|&k| format!("{:.4}", k as f64 / DRAWS as f64))
        .collect();
    Ok(format!(
        "frequencies [{}], chi-square {chi2:.3} < {CHI2_3_999}",
        freqs.join(", ")
    ))
}

fn classical_equivalence() -> Outcome {
    let mut checked = 0u64;
    for n in 1..=6 {
        let sizes = SizeVector::unit(n).unwrap();
        for prefs in TupleSpace::new(n, n).iter() {
            let sim = is_parking_sequence(&sizes, &PrefSequence::linear(prefs.clone())).unwrap();
            ensure(sim == is_classical_parking_function(&prefs), || {
                format!("{prefs:?}: simulation says {sim}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} tuples agree"))
}

fn parallel_determinism() -> Outcome {
    for sizes in [sv(&[2, 2, 2]), sv(&[3, 1, 2])] {
        for flavor in [Flavor::Linear, Flavor::Circular] {
            let reports: Vec<_> = [1, 2, 8]
                .iter()
                .map(|&p| {
                    verify_with(&sizes, flavor, &VerifyOptions::default().with_partitions(p))
                        .unwrap()
                })
                .collect();
            ensure(reports.windows(2).all(|w| w[0] == w[1]), || {
                format!("{sizes} {flavor}: {reports:?}")
            })?;
        }
    }
    Ok("1, 2 and 8 partitions give identical reports".into())
}

fn main() -> ExitCode {
    // Sanity: the closed forms the oracle compares against.
    assert_eq!(count_linear(&sv(&[2, 2, 1])), 30u64);
    assert_eq!(count_circular(&sv(&[2, 2, 1])), CountValue::from(180u64));

    let criteria: [Criterion; 10] = [
        ("golden examples", golden_examples),
        ("product formula vs brute force, n <= 5, T <= 12", || {
            sweep_matches(5, 12, Flavor::Linear)
        }),
        (
            "classical specialization, n = 1..7",
            classical_specialization,
        ),
        ("circular count vs brute force, n <= 4, T <= 10", || {
            sweep_matches(4, 10, Flavor::Circular)
        }),
        ("rotation invariance, n <= 4, T <= 8", || {
            bijection_sweep("rotation")
        }),
        ("restriction bijection, n <= 4, T <= 8", || {
            bijection_sweep("restriction")
        }),
        ("divider decode bijection, n <= 4, T <= 8", decode_bijection),
        ("sampler exactness, sizes (2,2)", sampler_exactness),
        (
            "classical criterion equivalence, n <= 6",
            classical_equivalence,
        ),
        ("parallel determinism", parallel_determinism),
    ];

    let mut failed = 0;
    for (idx, (name, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = check();
        let elapsed = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({elapsed:.2}s)", idx + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} ({elapsed:.2}s)", idx + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
