//! Car sizes, preference tuples, layouts and the parking rule.
//!
//! Spots are numbered from 1. A linear lot has `T = y1 + ... + yn` spots; a
//! circular lot has `M = T + 1` spots arranged in a ring. Cars arrive in
//! order; each drives forward from its preferred spot to the first empty
//! spot `j` and then needs the `y` spots `j, j+1, ..., j+y-1` to be free.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::circular::wrap_spot;
use crate::error::{Error, Result};

/// Which kind of lot a preference tuple or layout refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Linear,
    Circular,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flavor::Linear => f.write_str("linear"),
            Flavor::Circular => f.write_str("circular"),
        }
    }
}

/// Car sizes `(y1, ..., yn)`, all positive, at least one car.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SizeVector {
    sizes: Vec<usize>,
    total: usize,
}

impl SizeVector {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::NoCars);
        }
        let mut total = 0usize;
        for (idx, &y) in sizes.iter().enumerate() {
            if y == 0 {
                return Err(Error::ZeroSize { car: idx + 1 });
            }
            total = total.checked_add(y).ok_or(Error::SizeOverflow)?;
        }
        // M = T + 1 must also fit.
        total.checked_add(1).ok_or(Error::SizeOverflow)?;
        Ok(SizeVector { sizes, total })
    }

    /// `n` unit-size cars: the classical parking function setting.
    pub fn unit(n: usize) -> Result<Self> {
        Self::new(vec![1; n])
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.sizes
    }

    pub fn n(&self) -> usize {
        self.sizes.len()
    }

    /// Size of car `car` (1-based).
    pub fn size(&self, car: usize) -> Result<usize> {
        if car == 0 || car > self.n() {
            return Err(Error::CarOutOfRange { car, n: self.n() });
        }
        Ok(self.sizes[car - 1])
    }

    /// Number of spots in the linear lot, `T`.
    pub fn total(&self) -> usize {
        self.total
    }

    /// Number of spots on the circle, `M = T + 1`.
    pub fn circle(&self) -> usize {
        self.total + 1
    }

    /// Number of spots in a lot of the given flavor.
    pub fn spots(&self, flavor: Flavor) -> usize {
        match flavor {
            Flavor::Linear => self.total(),
            Flavor::Circular => self.circle(),
        }
    }
}

impl fmt::Display for SizeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.sizes)
    }
}

impl Serialize for SizeVector {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.sizes.serialize(serializer)
    }
}

impl FromStr for SizeVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SizeVector::new(parse_list(s)?)
    }
}

/// Parses `"2, 2,1"` into `[2, 2, 1]`.
pub fn parse_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|part| {
            part.trim().parse::<usize>().map_err(|e| Error::Parse {
                input: s.to_string(),
                reason: e.to_string(),
            })
        })
        .collect()
}

fn write_joined(f: &mut fmt::Formatter<'_>, values: &[usize]) -> fmt::Result {
    for (idx, v) in values.iter().enumerate() {
        if idx > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// Preferred spots `(c1, ..., cn)` for a linear or circular lot.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrefSequence {
    prefs: Vec<usize>,
    flavor: Flavor,
}

impl PrefSequence {
    pub fn new(prefs: Vec<usize>, flavor: Flavor) -> Self {
        PrefSequence { prefs, flavor }
    }

    pub fn linear(prefs: Vec<usize>) -> Self {
        Self::new(prefs, Flavor::Linear)
    }

    pub fn circular(prefs: Vec<usize>) -> Self {
        Self::new(prefs, Flavor::Circular)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.prefs
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.prefs
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn len(&self) -> usize {
        self.prefs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.prefs.is_empty()
    }

    /// Checks length and the preference domain: `[1, T]` for linear lots,
    /// `[1, M]` for circular ones.
    pub fn validate(&self, sizes: &SizeVector) -> Result<()> {
        if self.prefs.len() != sizes.n() {
            return Err(Error::LengthMismatch {
                expected: sizes.n(),
                found: self.prefs.len(),
            });
        }
        let max = sizes.spots(self.flavor);
        for (idx, &pref) in self.prefs.iter().enumerate() {
            if pref == 0 || pref > max {
                return Err(Error::PrefOutOfRange {
                    car: idx + 1,
                    pref,
                    max,
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for PrefSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.prefs)
    }
}

/// Positions of parked cars. Car `i` occupies `y_i` consecutive spots
/// starting at `start(i)`, wrapping past spot `M` on a circular lot.
///
/// Holds the cars `1..=k` that have parked so far; a layout produced by a
/// successful simulation always holds all `n` cars.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Layout {
    flavor: Flavor,
    sizes: Vec<usize>,
    spots: usize,
    starts: Vec<usize>,
}

impl Layout {
    /// Builds a layout for the first `starts.len()` cars, checking that
    /// every block lies in the lot and that no two blocks overlap.
    pub fn new(sizes: &SizeVector, flavor: Flavor, starts: Vec<usize>) -> Result<Self> {
        if starts.len() > sizes.n() {
            return Err(Error::InvalidLayout(format!(
                "{} starts for {} cars",
                starts.len(),
                sizes.n()
            )));
        }
        let layout = Layout {
            flavor,
            sizes: sizes.as_slice().to_vec(),
            spots: sizes.spots(flavor),
            starts,
        };
        let mut seen = vec![false; layout.spots];
        for (idx, &start) in layout.starts.iter().enumerate() {
            let y = layout.sizes[idx];
            if start == 0 || start > layout.spots {
                return Err(Error::InvalidLayout(format!(
                    "car {} starts at spot {start}",
                    idx + 1
                )));
            }
            if flavor == Flavor::Linear && start + y - 1 > layout.spots {
                return Err(Error::InvalidLayout(format!(
                    "car {} runs past spot {}",
                    idx + 1,
                    layout.spots
                )));
            }
            for spot in layout.block_spots(idx + 1) {
                if std::mem::replace(&mut seen[spot - 1], true) {
                    return Err(Error::InvalidLayout(format!(
                        "spot {spot} is occupied twice"
                    )));
                }
            }
        }
        Ok(layout)
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// Number of spots in the lot (`T` or `M`).
    pub fn spots(&self) -> usize {
        self.spots
    }

    pub fn starts(&self) -> &[usize] {
        &self.starts
    }

    /// Number of cars placed.
    pub fn placed(&self) -> usize {
        self.starts.len()
    }

    pub fn is_complete(&self) -> bool {
        self.starts.len() == self.sizes.len()
    }

    pub fn start(&self, car: usize) -> Option<usize> {
        car.checked_sub(1)
            .and_then(|idx| self.starts.get(idx))
            .copied()
    }

    /// Last spot of car `car`'s block; smaller than the start when the
    /// block wraps around a circular lot.
    pub fn end(&self, car: usize) -> Option<usize> {
        let start = self.start(car)?;
        let y = self.sizes[car - 1];
        Some(match self.flavor {
            Flavor::Linear => start + y - 1,
            Flavor::Circular => wrap_spot(start + y - 1, self.spots),
        })
    }

    fn block_spots(&self, car: usize) -> impl Iterator<Item = usize> + '_ {
        let start = self.starts[car - 1];
        let y = self.sizes[car - 1];
        let spots = self.spots;
        (0..y).map(move |d| wrap_spot(start + d, spots))
    }

    /// Car occupying each spot, indexed by `spot - 1`.
    pub fn occupancy(&self) -> Vec<Option<usize>> {
        let mut occ = vec![None; self.spots];
        for car in 1..=self.placed() {
            for spot in self.block_spots(car) {
                occ[spot - 1] = Some(car);
            }
        }
        occ
    }

    /// Unoccupied spots in increasing order.
    pub fn empty_spots(&self) -> Vec<usize> {
        self.occupancy()
            .iter()
            .enumerate()
            .filter(|(_, car)| car.is_none())
            .map(|(idx, _)| idx + 1)
            .collect()
    }

    /// Cars ordered by start spot, as `(car, start, end)`.
    pub fn blocks_by_spot(&self) -> Vec<(usize, usize, usize)> {
        let mut blocks: Vec<_> = (1..=self.placed())
            .map(|car| (car, self.starts[car - 1], self.end(car).unwrap()))
            .collect();
        blocks.sort_by_key(|&(_, start, _)| start);
        blocks
    }
}

/// Outcome of running the parking rule on one preference tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParkResult {
    /// Every car parked.
    Parked(Layout),
    /// Car `car` found its first empty spot at `first_empty`, but `blocked`
    /// (the first occupied spot inside its block) was already taken.
    Collision {
        car: usize,
        first_empty: usize,
        blocked: usize,
    },
    /// Car `car` drove off the end of a linear lot.
    PastEnd { car: usize },
}

impl ParkResult {
    pub fn is_parked(&self) -> bool {
        matches!(self, ParkResult::Parked(_))
    }

    pub fn layout(&self) -> Option<&Layout> {
        match self {
            ParkResult::Parked(layout) => Some(layout),
            _ => None,
        }
    }

    pub fn into_layout(self) -> Option<Layout> {
        match self {
            ParkResult::Parked(layout) => Some(layout),
            _ => None,
        }
    }
}

/// Allocation-free outcome used by the enumeration hot path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Outcome {
    Parked,
    Collision {
        car: usize,
        first_empty: usize,
        blocked: usize,
    },
    PastEnd {
        car: usize,
    },
}

/// Reusable occupancy buffer. Inputs are assumed validated.
#[derive(Debug, Clone)]
pub(crate) struct Engine {
    occupied: Vec<bool>,
    starts: Vec<usize>,
}

impl Engine {
    pub(crate) fn new() -> Self {
        Engine {
            occupied: Vec::new(),
            starts: Vec::new(),
        }
    }

    /// Start spots of the cars parked by the last call to `run`.
    pub(crate) fn starts(&self) -> &[usize] {
        &self.starts
    }

    pub(crate) fn run(
        &mut self,
        sizes: &[usize],
        prefs: &[usize],
        flavor: Flavor,
        spots: usize,
    ) -> Result<Outcome> {
        self.occupied.clear();
        self.occupied.resize(spots, false);
        self.starts.clear();
        for (idx, (&y, &pref)) in sizes.iter().zip(prefs).enumerate() {
            let car = idx + 1;
            let step = match flavor {
                Flavor::Linear => self.place_linear(car, y, pref, spots),
                Flavor::Circular => self.place_circular(car, y, pref, spots)?,
            };
            match step {
                Some(failure) => return Ok(failure),
                None => continue,
            }
        }
        Ok(Outcome::Parked)
    }

    fn place_linear(&mut self, car: usize, y: usize, pref: usize, spots: usize) -> Option<Outcome> {
        let first_empty = match (pref..=spots).find(|&s| !self.occupied[s - 1]) {
            Some(j) => j,
            None => return Some(Outcome::PastEnd { car }),
        };
        let end = first_empty + y - 1;
        if end > spots {
            return Some(Outcome::PastEnd { car });
        }
        if let Some(blocked) = (first_empty + 1..=end).find(|&s| self.occupied[s - 1]) {
            return Some(Outcome::Collision {
                car,
                first_empty,
                blocked,
            });
        }
        self.occupied[first_empty - 1..end].fill(true);
        self.starts.push(first_empty);
        None
    }

    fn place_circular(
        &mut self,
        car: usize,
        y: usize,
        pref: usize,
        spots: usize,
    ) -> Result<Option<Outcome>> {
        let mut first_empty = pref;
        let mut steps = 0;
        while self.occupied[first_empty - 1] {
            steps += 1;
            if steps >= spots {
                return Err(Error::ScanExhausted);
            }
            first_empty = wrap_spot(first_empty + 1, spots);
        }
        if let Some(blocked) = (1..y)
            .map(|d| wrap_spot(first_empty + d, spots))
            .find(|&s| self.occupied[s - 1])
        {
            return Ok(Some(Outcome::Collision {
                car,
                first_empty,
                blocked,
            }));
        }
        for d in 0..y {
            self.occupied[wrap_spot(first_empty + d, spots) - 1] = true;
        }
        self.starts.push(first_empty);
        Ok(None)
    }
}

/// Runs the parking rule on a linear or circular lot, according to the
/// flavor of `prefs`.
pub fn simulate(sizes: &SizeVector, prefs: &PrefSequence) -> Result<ParkResult> {
    prefs.validate(sizes)?;
    let flavor = prefs.flavor();
    let mut engine = Engine::new();
    let outcome = engine.run(
        sizes.as_slice(),
        prefs.as_slice(),
        flavor,
        sizes.spots(flavor),
    )?;
    Ok(match outcome {
        Outcome::Parked => ParkResult::Parked(Layout {
            flavor,
            sizes: sizes.as_slice().to_vec(),
            spots: sizes.spots(flavor),
            starts: engine.starts().to_vec(),
        }),
        Outcome::Collision {
            car,
            first_empty,
            blocked,
        } => ParkResult::Collision {
            car,
            first_empty,
            blocked,
        },
        Outcome::PastEnd { car } => ParkResult::PastEnd { car },
    })
}

/// Parks the cars on a linear lot of `T` spots.
pub fn simulate_linear(sizes: &SizeVector, prefs: &PrefSequence) -> Result<ParkResult> {
    if prefs.flavor() != Flavor::Linear {
        return Err(Error::WrongFlavor {
            expected: Flavor::Linear,
        });
    }
    simulate(sizes, prefs)
}

/// Whether every car parks on the linear lot.
pub fn is_parking_sequence(sizes: &SizeVector, prefs: &PrefSequence) -> Result<bool> {
    Ok(simulate_linear(sizes, prefs)?.is_parked())
}

/// Classical criterion: sorted ascending, the `i`-th smallest preference is
/// at most `i`. The empty tuple qualifies.
pub fn is_classical_parking_function(prefs: &[usize]) -> bool {
    let mut sorted = prefs.to_vec();
    sorted.sort_unstable();
    sorted.iter().enumerate().all(|(idx, &b)| b <= idx + 1)
}
