//! Brute-force ground truth.
//!
//! Every tuple of the preference domain (`[1, T]^n` on the line,
//! `[1, M]^n` on the circle) is simulated and the outcomes are tallied.
//! The domain is split into contiguous lexicographic rank blocks that are
//! processed in parallel and merged by addition, so the result does not
//! depend on the number of blocks.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::ops::Add;

use rayon::prelude::*;
use serde::Serialize;

use crate::circular::{rotate, wrap_spot};
use crate::count::{count_circular, count_linear, CountValue};
use crate::error::{Error, Result};
use crate::park::{simulate, Engine, Flavor, Outcome, PrefSequence, SizeVector};
use crate::pollak::{decode, enumerate_option_sequences};
use crate::tuples::{TupleRange, TupleSpace};

/// Default limit on the number of tuples simulated by one call.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Restriction sets up to this size are listed in a [`BijectionReport`].
pub const LISTED_SET_LIMIT: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Maximum number of tuples one call may simulate.
    pub budget: u64,
    /// Number of lexicographic blocks the domain is split into.
    pub partitions: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            budget: DEFAULT_BUDGET,
            partitions: rayon::current_num_threads().max(1),
        }
    }
}

impl VerifyOptions {
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_partitions(mut self, partitions: usize) -> Self {
        self.partitions = partitions.max(1);
        self
    }
}

/// Brute-force tally for one size vector and flavor, next to the closed
/// form it is checked against.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationReport {
    pub sizes: SizeVector,
    pub flavor: Flavor,
    pub total_tuples: CountValue,
    pub parked: CountValue,
    pub collisions: CountValue,
    pub past_end: CountValue,
    pub formula_value: CountValue,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Tally {
    parked: u64,
    collisions: u64,
    past_end: u64,
}

impl Add for Tally {
    type Output = Tally;

    fn add(self, rhs: Tally) -> Tally {
        Tally {
            parked: self.parked + rhs.parked,
            collisions: self.collisions + rhs.collisions,
            past_end: self.past_end + rhs.past_end,
        }
    }
}

/// Tuple space for the flavor's preference domain, refused when larger
/// than `budget`.
fn domain(sizes: &SizeVector, flavor: Flavor, budget: u64) -> Result<TupleSpace> {
    let space = TupleSpace::new(sizes.n(), sizes.spots(flavor));
    match space.size() {
        Some(size) if size <= budget => Ok(space),
        _ => Err(Error::BudgetExceeded {
            sizes: sizes.to_string(),
            required: CountValue::from(sizes.spots(flavor)).pow(sizes.n() as u32),
            budget,
        }),
    }
}

fn tally_block(sizes: &SizeVector, flavor: Flavor, block: TupleRange) -> Result<Tally> {
    let mut engine = Engine::new();
    let spots = sizes.spots(flavor);
    let mut tally = Tally::default();
    let mut failure = None;
    block.for_each_ref(|prefs| {
        if failure.is_some() {
            return;
        }
        match engine.run(sizes.as_slice(), prefs, flavor, spots) {
            Ok(Outcome::Parked) => tally.parked += 1,
            Ok(Outcome::Collision { .. }) => tally.collisions += 1,
            Ok(Outcome::PastEnd { .. }) => tally.past_end += 1,
            Err(e) => failure = Some(e),
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(tally),
    }
}

/// Closed form for the flavor: `f(y)` on the line, `M f(y)` on the circle.
pub fn formula(sizes: &SizeVector, flavor: Flavor) -> CountValue {
    match flavor {
        Flavor::Linear => count_linear(sizes),
        Flavor::Circular => count_circular(sizes),
    }
}

/// Brute-forces `sizes` and compares the parked count with the closed form.
pub fn verify(sizes: &SizeVector, flavor: Flavor) -> Result<EnumerationReport> {
    verify_with(sizes, flavor, &VerifyOptions::default())
}

pub fn verify_with(
    sizes: &SizeVector,
    flavor: Flavor,
    opts: &VerifyOptions,
) -> Result<EnumerationReport> {
    let space = domain(sizes, flavor, opts.budget)?;
    let tallies = space
        .blocks(opts.partitions)
        .into_par_iter()
        .map(|(start, end)| tally_block(sizes, flavor, space.range(start, end)))
        .collect::<Result<Vec<_>>>()?;
    let tally = tallies.into_iter().fold(Tally::default(), Add::add);
    let formula_value = formula(sizes, flavor);
    let parked = CountValue::from(tally.parked);
    Ok(EnumerationReport {
        sizes: sizes.clone(),
        flavor,
        total_tuples: CountValue::from(space.size().expect("checked by budget")),
        matches: parked == formula_value,
        parked,
        collisions: CountValue::from(tally.collisions),
        past_end: CountValue::from(tally.past_end),
        formula_value,
    })
}

/// All compositions `(y1, ..., yn)` with `1 <= n <= max_n` and
/// `n <= y1 + ... + yn <= max_total`, ordered by `n`, then total, then
/// lexicographically.
pub fn compositions(max_n: usize, max_total: usize) -> Vec<SizeVector> {
    fn extend(parts: usize, total: usize, prefix: &mut Vec<usize>, out: &mut Vec<SizeVector>) {
        if parts == 0 {
            if total == 0 {
                out.push(SizeVector::new(prefix.clone()).expect("positive parts"));
            }
            return;
        }
        for first in 1..=total.saturating_sub(parts - 1) {
            prefix.push(first);
            extend(parts - 1, total - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for n in 1..=max_n {
        for total in n..=max_total {
            extend(n, total, &mut Vec::with_capacity(n), &mut out);
        }
    }
    out
}

/// Runs [`verify_with`] on every composition within the bounds. The first
/// composition over budget aborts the sweep and is named in the error.
pub fn verify_sweep(
    max_n: usize,
    max_total: usize,
    flavor: Flavor,
    opts: &VerifyOptions,
) -> Result<Vec<EnumerationReport>> {
    compositions(max_n, max_total)
        .iter()
        .map(|sizes| verify_with(sizes, flavor, opts))
        .collect()
}

/// Parking sequences of the flavor in lexicographic order, by exhaustive
/// search over the preference domain.
pub fn enumerate_parking_sequences(
    sizes: &SizeVector,
    flavor: Flavor,
    budget: u64,
) -> Result<ParkingSequences> {
    let space = domain(sizes, flavor, budget)?;
    Ok(ParkingSequences {
        sizes: sizes.clone(),
        flavor,
        tuples: space.iter(),
        engine: Engine::new(),
    })
}

/// Iterator returned by [`enumerate_parking_sequences`].
#[derive(Debug, Clone)]
pub struct ParkingSequences {
    sizes: SizeVector,
    flavor: Flavor,
    tuples: TupleRange,
    engine: Engine,
}

impl Iterator for ParkingSequences {
    type Item = PrefSequence;

    fn next(&mut self) -> Option<PrefSequence> {
        let spots = self.sizes.spots(self.flavor);
        for prefs in self.tuples.by_ref() {
            let outcome = self
                .engine
                .run(self.sizes.as_slice(), &prefs, self.flavor, spots)
                .expect("circular scan terminates");
            if outcome == Outcome::Parked {
                return Some(PrefSequence::new(prefs, self.flavor));
            }
        }
        None
    }
}

/// Circular parking sequences mapped to the spot each leaves empty.
fn circular_parking_set(sizes: &SizeVector, budget: u64) -> Result<HashMap<Vec<usize>, usize>> {
    let space = domain(sizes, Flavor::Circular, budget)?;
    let m = sizes.circle();
    let mut engine = Engine::new();
    let mut set = HashMap::new();
    let mut failure = None;
    space.iter().for_each_ref(|prefs| {
        match engine.run(sizes.as_slice(), prefs, Flavor::Circular, m) {
            Ok(Outcome::Parked) => {
                let mut occupied = vec![false; m];
                for (&start, &y) in engine.starts().iter().zip(sizes.as_slice()) {
                    for d in 0..y {
                        occupied[wrap_spot(start + d, m) - 1] = true;
                    }
                }
                let empty = occupied
                    .iter()
                    .position(|o| !o)
                    .expect("one spot stays empty")
                    + 1;
                set.insert(prefs.to_vec(), empty);
            }
            Ok(_) => {}
            Err(e) => failure = Some(e),
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(set),
    }
}

/// Outcome of checking the divider decoding, the restriction to spot `M`
/// empty, and rotation invariance against brute force.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub sizes: SizeVector,
    pub option_sequences: CountValue,
    /// Distinct preference tuples among the decodes.
    pub distinct_decodes: CountValue,
    /// Decodes whose simulation parks every car in the decoded layout.
    pub valid_decodes: CountValue,
    pub decode_pass: bool,
    pub circular_parking_sequences: CountValue,
    pub formula_value: CountValue,
    pub cardinality_pass: bool,
    /// Circular parking sequences leaving spot `M` empty.
    pub restricted: CountValue,
    pub linear_parking_sequences: CountValue,
    /// The restricted set, when it has at most [`LISTED_SET_LIMIT`] members.
    pub restriction_set: Option<Vec<Vec<usize>>>,
    pub restriction_pass: bool,
    pub rotation_orbits: CountValue,
    /// Every rotation of every circular parking sequence parks, and its
    /// empty spot moves with the rotation.
    pub rotation_pass: bool,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.decode_pass && self.cardinality_pass && self.restriction_pass && self.rotation_pass
    }
}

pub fn check_bijection(sizes: &SizeVector, budget: u64) -> Result<BijectionReport> {
    let circular = circular_parking_set(sizes, budget)?;
    let m = sizes.circle();

    let mut decoded = HashSet::new();
    let mut option_sequences = 0u64;
    let mut valid = 0u64;
    for opts in enumerate_option_sequences(sizes) {
        option_sequences += 1;
        let (prefs, layout) = decode(sizes, &opts)?;
        let replay = simulate(sizes, &prefs)?;
        if replay.layout() == Some(&layout) {
            valid += 1;
        }
        decoded.insert(prefs.into_vec());
    }
    let decode_pass = valid == option_sequences && decoded.len() as u64 == option_sequences;

    let formula_value = count_circular(sizes);
    let cardinality_pass = decoded.iter().all(|p| circular.contains_key(p))
        && CountValue::from(decoded.len()) == formula_value
        && CountValue::from(circular.len()) == formula_value;

    let restricted: BTreeSet<Vec<usize>> = circular
        .iter()
        .filter(|(_, &empty)| empty == m)
        .map(|(p, _)| p.clone())
        .collect();
    let linear: BTreeSet<Vec<usize>> = enumerate_parking_sequences(sizes, Flavor::Linear, budget)?
        .map(PrefSequence::into_vec)
        .collect();
    let restriction_pass = restricted == linear;

    let rotation_pass = circular.iter().all(|(p, &empty)| {
        let p = PrefSequence::circular(p.clone());
        (1..m).all(|a| {
            let q = rotate(sizes, &p, a as i64);
            circular.get(q.as_slice()) == Some(&wrap_spot(empty + a, m))
        })
    });

    Ok(BijectionReport {
        sizes: sizes.clone(),
        option_sequences: CountValue::from(option_sequences),
        distinct_decodes: CountValue::from(decoded.len()),
        valid_decodes: CountValue::from(valid),
        decode_pass,
        circular_parking_sequences: CountValue::from(circular.len()),
        formula_value,
        cardinality_pass,
        restricted: CountValue::from(restricted.len()),
        linear_parking_sequences: CountValue::from(linear.len()),
        restriction_set: (restricted.len() <= LISTED_SET_LIMIT)
            .then(|| restricted.into_iter().collect()),
        restriction_pass,
        rotation_orbits: CountValue::from(circular.len() / m),
        rotation_pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(v: &[usize]) -> SizeVector {
        SizeVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn two_cars_of_size_two() {
        let linear: Vec<_> =
            enumerate_parking_sequences(&sv(&[2, 2]), Flavor::Linear, DEFAULT_BUDGET)
                .unwrap()
                .map(PrefSequence::into_vec)
                .collect();
        assert_eq!(linear, vec![vec![1, 1], vec![1, 2], vec![1, 3], vec![3, 1]]);

        let report = verify(&sv(&[2, 2]), Flavor::Circular).unwrap();
        assert_eq!(report.total_tuples, 25u64);
        assert_eq!(report.parked, 20u64);
        assert_eq!(report.collisions, 5u64);
        assert_eq!(report.past_end, 0u64);
        assert!(report.matches);
    }

    #[test]
    fn single_car() {
        for y in 1..6 {
            let all: Vec<_> =
                enumerate_parking_sequences(&sv(&[y]), Flavor::Linear, DEFAULT_BUDGET)
                    .unwrap()
                    .collect();
            assert_eq!(all, vec![PrefSequence::linear(vec![1])]);
        }
    }

    #[test]
    fn small_verifications() {
        let r = verify(&sv(&[2, 2, 2]), Flavor::Linear).unwrap();
        assert_eq!(
            (r.total_tuples.clone(), r.parked.clone()),
            (216u64.into(), 30u64.into())
        );
        assert!(r.matches);
        let r = verify(&sv(&[1, 1, 1]), Flavor::Linear).unwrap();
        assert_eq!(r.parked, 16u64);
        assert_eq!(
            enumerate_parking_sequences(&sv(&[2, 2, 1]), Flavor::Linear, DEFAULT_BUDGET)
                .unwrap()
                .count(),
            30
        );
    }

    #[test]
    fn report_json_uses_strings() {
        let r = verify(&sv(&[2, 2]), Flavor::Circular).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["sizes"], serde_json::json!([2, 2]));
        assert_eq!(json["flavor"], "circular");
        assert_eq!(json["parked"], "20");
        assert_eq!(json["match"], true);
    }

    #[test]
    fn budget_refusal() {
        let err = verify_with(&sv(&[5; 8]), Flavor::Linear, &VerifyOptions::default()).unwrap_err();
        match err {
            Error::BudgetExceeded {
                required,
                budget,
                sizes,
            } => {
                // T = 40, so 40^8 tuples.
                assert_eq!(required, 6_553_600_000_000u64);
                assert_eq!(budget, DEFAULT_BUDGET);
                assert_eq!(sizes, "5,5,5,5,5,5,5,5");
            }
            other => panic!("{other}"),
        }
        assert!(verify_with(
            &sv(&[2, 2]),
            Flavor::Linear,
            &VerifyOptions::default().with_budget(15)
        )
        .is_err());
        assert!(verify_with(
            &sv(&[2, 2]),
            Flavor::Linear,
            &VerifyOptions::default().with_budget(16)
        )
        .is_ok());
    }

    #[test]
    fn composition_listing() {
        let c: Vec<_> = compositions(2, 4)
            .into_iter()
            .filter(|s| s.n() == 2)
            .map(|s| s.as_slice().to_vec())
            .collect();
        assert_eq!(
            c,
            vec![
                vec![1, 1],
                vec![1, 2],
                vec![2, 1],
                vec![1, 3],
                vec![2, 2],
                vec![3, 1]
            ]
        );
        assert_eq!(compositions(1, 5).len(), 5);
        // 2^T - 1 compositions of T into any number of parts, summed over T.
        assert_eq!(compositions(6, 6).len(), 1 + 2 + 4 + 8 + 16 + 32);
    }

    #[test]
    fn sweeps() {
        let reports = verify_sweep(1, 5, Flavor::Linear, &VerifyOptions::default()).unwrap();
        assert_eq!(reports.len(), 5);
        assert!(reports.iter().all(|r| r.parked == 1u64));
        let reports = verify_sweep(3, 6, Flavor::Linear, &VerifyOptions::default()).unwrap();
        assert!(reports.iter().all(|r| r.matches));
    }

    #[test]
    fn bijection_on_small_cases() {
        let r = check_bijection(&sv(&[2, 2]), DEFAULT_BUDGET).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.option_sequences, 20u64);
        assert_eq!(
            r.restriction_set,
            Some(vec![vec![1, 1], vec![1, 2], vec![1, 3], vec![3, 1]])
        );
        let r = check_bijection(&sv(&[3]), DEFAULT_BUDGET).unwrap();
        assert!(r.passed());
        assert_eq!(r.option_sequences, 4u64);
        assert!(check_bijection(&sv(&[2, 2, 1]), DEFAULT_BUDGET)
            .unwrap()
            .passed());
    }
}
