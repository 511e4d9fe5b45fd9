//! The divider construction on the circle.
//!
//! After the first car parks at its anchor spot, the rest of the circle is
//! cut into `n + 1` cells by movable dividers; the first car fills one cell
//! and every later car fills exactly one more. Car `i` either picks one of
//! the `n + 2 - i` open cells directly, or prefers a spot inside an earlier
//! car `j` (`y_j` ways) and cruises to the first open cell after `j`. Cell
//! widths are fixed only at the end: a car cell is as wide as its car and
//! the one cell left open is a single empty spot.
//!
//! [`decode`] turns such a choice sequence into a preference tuple and its
//! final layout. Decoding is injective and there are exactly
//! [`count_circular`](crate::count::count_circular) choice sequences, so it
//! is a bijection onto circular parking sequences; the samplers draw a
//! choice sequence uniformly and decode it.

use std::fmt;

use rand::Rng;

use crate::circular::{empty_spot, restrict_to_linear, rotate, wrap_spot};
use crate::count::option_count;
use crate::error::{Error, Result};
use crate::park::{Flavor, Layout, PrefSequence, SizeVector};

/// Choice made by car `i >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CarOption {
    /// Park in the `t`-th open cell (1-based), counting clockwise from the
    /// cell after car 1.
    Direct(usize),
    /// Prefer spot `offset` (1-based) of car `car`'s block and cruise to the
    /// first open cell after it.
    Cruise { car: usize, offset: usize },
}

impl fmt::Display for CarOption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CarOption::Direct(t) => write!(f, "direct({t})"),
            CarOption::Cruise { car, offset } => write!(f, "cruise({car},{offset})"),
        }
    }
}

impl CarOption {
    /// The `index`-th option (0-based) of car `car`: the `n + 2 - car`
    /// direct picks first, then cruises over earlier cars in order.
    pub fn from_index(sizes: &SizeVector, car: usize, index: usize) -> Result<CarOption> {
        if car < 2 || car > sizes.n() {
            return Err(Error::CarOutOfRange { car, n: sizes.n() });
        }
        let direct = sizes.n() + 2 - car;
        if index < direct {
            return Ok(CarOption::Direct(index + 1));
        }
        let mut rest = index - direct;
        for (j, &y) in sizes.as_slice()[..car - 1].iter().enumerate() {
            if rest < y {
                return Ok(CarOption::Cruise {
                    car: j + 1,
                    offset: rest + 1,
                });
            }
            rest -= y;
        }
        Err(Error::InvalidOption {
            car,
            reason: format!("index {index} is not below {}", option_count(sizes, car)?),
        })
    }

    /// Inverse of [`CarOption::from_index`].
    pub fn index(&self, sizes: &SizeVector, car: usize) -> Result<usize> {
        check_option(sizes, car, self)?;
        let direct = sizes.n() + 2 - car;
        Ok(match *self {
            CarOption::Direct(t) => t - 1,
            CarOption::Cruise { car: j, offset } => {
                direct + sizes.as_slice()[..j - 1].iter().sum::<usize>() + offset - 1
            }
        })
    }
}

fn check_option(sizes: &SizeVector, car: usize, option: &CarOption) -> Result<()> {
    if car < 2 || car > sizes.n() {
        return Err(Error::CarOutOfRange { car, n: sizes.n() });
    }
    let open = sizes.n() + 2 - car;
    match *option {
        CarOption::Direct(t) if t == 0 || t > open => Err(Error::InvalidOption {
            car,
            reason: format!("direct pick {t} outside [1, {open}]"),
        }),
        CarOption::Cruise { car: j, .. } if j == 0 || j >= car => Err(Error::InvalidOption {
            car,
            reason: format!("cannot cruise on car {j}"),
        }),
        CarOption::Cruise { car: j, offset } if offset == 0 || offset > sizes.as_slice()[j - 1] => {
            Err(Error::InvalidOption {
                car,
                reason: format!(
                    "offset {offset} outside car {j} of size {}",
                    sizes.as_slice()[j - 1]
                ),
            })
        }
        _ => Ok(()),
    }
}

/// Anchor spot of car 1 plus one [`CarOption`] for each of cars `2..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OptionSequence {
    pub anchor: usize,
    pub options: Vec<CarOption>,
}

impl OptionSequence {
    pub fn new(anchor: usize, options: Vec<CarOption>) -> Self {
        OptionSequence { anchor, options }
    }

    /// Builds the sequence from per-car option indices: `indices[0]` is the
    /// anchor minus one, `indices[i - 1]` the option index of car `i`.
    pub fn from_indices(sizes: &SizeVector, indices: &[usize]) -> Result<Self> {
        if indices.len() != sizes.n() {
            return Err(Error::OptionCountMismatch {
                expected: sizes.n() - 1,
                found: indices.len().saturating_sub(1),
            });
        }
        let options = indices[1..]
            .iter()
            .enumerate()
            .map(|(idx, &index)| CarOption::from_index(sizes, idx + 2, index))
            .collect::<Result<_>>()?;
        Ok(OptionSequence::new(indices[0] + 1, options))
    }

    pub fn validate(&self, sizes: &SizeVector) -> Result<()> {
        if self.anchor == 0 || self.anchor > sizes.circle() {
            return Err(Error::InvalidOption {
                car: 1,
                reason: format!("anchor {} outside [1, {}]", self.anchor, sizes.circle()),
            });
        }
        if self.options.len() + 1 != sizes.n() {
            return Err(Error::OptionCountMismatch {
                expected: sizes.n() - 1,
                found: self.options.len(),
            });
        }
        self.options
            .iter()
            .enumerate()
            .try_for_each(|(idx, opt)| check_option(sizes, idx + 2, opt))
    }
}

impl fmt::Display for OptionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "anchor {}", self.anchor)?;
        for opt in &self.options {
            write!(f, " {opt}")?;
        }
        Ok(())
    }
}

/// State of one cell of the ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cell {
    Open,
    Car(usize),
}

/// `n + 1` cells around the circle. Cell 0 holds car 1; cells are filled
/// but never created or emptied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellRing {
    cells: Vec<Cell>,
    cell_of: Vec<Option<usize>>,
}

impl CellRing {
    pub fn new(n: usize) -> Self {
        let mut cells = vec![Cell::Open; n + 1];
        cells[0] = Cell::Car(1);
        let mut cell_of = vec![None; n];
        cell_of[0] = Some(0);
        CellRing { cells, cell_of }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn open_count(&self) -> usize {
        self.cells.iter().filter(|c| **c == Cell::Open).count()
    }

    /// Cell index holding car `car`, if it has been placed.
    pub fn cell_of(&self, car: usize) -> Option<usize> {
        car.checked_sub(1)
            .and_then(|idx| self.cell_of.get(idx))
            .copied()
            .flatten()
    }

    /// Places `car` according to `option`; returns the cell it lands in.
    pub fn place(&mut self, car: usize, option: CarOption) -> Result<usize> {
        let len = self.cells.len();
        let target = match option {
            CarOption::Direct(t) => (1..len)
                .filter(|&idx| self.cells[idx] == Cell::Open)
                .nth(t.wrapping_sub(1)),
            CarOption::Cruise { car: j, .. } => self.cell_of(j).and_then(|from| {
                (1..len)
                    .map(|step| (from + step) % len)
                    .find(|&idx| self.cells[idx] == Cell::Open)
            }),
        };
        let cell = target.ok_or_else(|| Error::InvalidOption {
            car,
            reason: format!("{option} does not reach an open cell"),
        })?;
        self.cells[cell] = Cell::Car(car);
        self.cell_of[car - 1] = Some(cell);
        Ok(cell)
    }
}

/// Decodes an option sequence into its circular preference tuple and the
/// layout the cars end up in. Simulating the returned tuple on the circle
/// parks every car exactly as in the returned layout.
pub fn decode(sizes: &SizeVector, opts: &OptionSequence) -> Result<(PrefSequence, Layout)> {
    opts.validate(sizes)?;
    let n = sizes.n();
    let m = sizes.circle();
    let ys = sizes.as_slice();

    let mut ring = CellRing::new(n);
    for (idx, &opt) in opts.options.iter().enumerate() {
        ring.place(idx + 2, opt)?;
    }
    debug_assert_eq!(ring.open_count(), 1);

    let mut starts = vec![0; n];
    let mut pos = opts.anchor;
    for cell in ring.cells() {
        match *cell {
            Cell::Car(car) => {
                starts[car - 1] = pos;
                pos = wrap_spot(pos + ys[car - 1], m);
            }
            Cell::Open => pos = wrap_spot(pos + 1, m),
        }
    }

    let mut prefs = Vec::with_capacity(n);
    prefs.push(opts.anchor);
    for (idx, opt) in opts.options.iter().enumerate() {
        prefs.push(match *opt {
            CarOption::Direct(_) => starts[idx + 1],
            CarOption::Cruise { car, offset } => wrap_spot(starts[car - 1] + offset - 1, m),
        });
    }
    let layout = Layout::new(sizes, Flavor::Circular, starts)?;
    Ok((PrefSequence::circular(prefs), layout))
}

/// Every valid option sequence exactly once, in mixed-radix order with the
/// last car's option varying fastest.
pub fn enumerate_option_sequences(sizes: &SizeVector) -> OptionSequences {
    let radices = (1..=sizes.n())
        .map(|car| option_count(sizes, car).expect("car index in range"))
        .collect();
    OptionSequences {
        sizes: sizes.clone(),
        radices,
        digits: Some(vec![0; sizes.n()]),
    }
}

/// Iterator returned by [`enumerate_option_sequences`].
#[derive(Debug, Clone)]
pub struct OptionSequences {
    sizes: SizeVector,
    radices: Vec<usize>,
    digits: Option<Vec<usize>>,
}

impl Iterator for OptionSequences {
    type Item = OptionSequence;

    fn next(&mut self) -> Option<OptionSequence> {
        let digits = self.digits.as_mut()?;
        let item = OptionSequence::from_indices(&self.sizes, digits).expect("digits below radices");
        let mut pos = digits.len();
        loop {
            if pos == 0 {
                self.digits = None;
                break;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < self.radices[pos] {
                break;
            }
            digits[pos] = 0;
        }
        Some(item)
    }
}

/// Draws an option sequence uniformly at random.
pub fn sample_options<R: Rng + ?Sized>(sizes: &SizeVector, rng: &mut R) -> OptionSequence {
    let indices: Vec<usize> = (1..=sizes.n())
        .map(|car| rng.gen_range(0..option_count(sizes, car).expect("car index in range")))
        .collect();
    OptionSequence::from_indices(sizes, &indices).expect("indices below option counts")
}

/// Uniform circular parking sequence together with its layout.
pub fn sample_circular_with_layout<R: Rng + ?Sized>(
    sizes: &SizeVector,
    rng: &mut R,
) -> (PrefSequence, Layout) {
    let opts = sample_options(sizes, rng);
    decode(sizes, &opts).expect("sampled options are valid")
}

/// Uniform circular parking sequence on `M` spots.
pub fn sample_circular<R: Rng + ?Sized>(sizes: &SizeVector, rng: &mut R) -> PrefSequence {
    sample_circular_with_layout(sizes, rng).0
}

/// Uniform linear parking sequence: sample on the circle, then rotate the
/// empty spot to `M`.
pub fn sample_linear<R: Rng + ?Sized>(sizes: &SizeVector, rng: &mut R) -> PrefSequence {
    let (prefs, layout) = sample_circular_with_layout(sizes, rng);
    let empty = empty_spot(&layout).expect("decoded layouts leave one spot empty");
    let m = sizes.circle();
    let shifted = rotate(sizes, &prefs, (m - empty) as i64);
    restrict_to_linear(sizes, &shifted)
        .expect("valid circular tuple")
        .expect("rotating the empty spot to M gives a linear parking sequence")
}
