//! Closed-form counts of linear and circular parking sequences.

use std::fmt;
use std::iter::Product;
use std::ops::Mul;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::park::SizeVector;

/// Exact non-negative integer of unbounded size.
///
/// Serializes as a decimal string so that JSON consumers limited to 64-bit
/// numbers do not truncate it.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CountValue(BigUint);

impl CountValue {
    pub fn zero() -> Self {
        CountValue(BigUint::zero())
    }

    pub fn one() -> Self {
        CountValue(BigUint::one())
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn pow(&self, exp: u32) -> Self {
        CountValue(self.0.pow(exp))
    }
}

impl From<u64> for CountValue {
    fn from(v: u64) -> Self {
        CountValue(BigUint::from(v))
    }
}

impl From<usize> for CountValue {
    fn from(v: usize) -> Self {
        CountValue(BigUint::from(v))
    }
}

impl From<BigUint> for CountValue {
    fn from(v: BigUint) -> Self {
        CountValue(v)
    }
}

impl PartialEq<u64> for CountValue {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl Mul for CountValue {
    type Output = CountValue;

    fn mul(self, rhs: CountValue) -> CountValue {
        CountValue(self.0 * rhs.0)
    }
}

impl Product for CountValue {
    fn product<I: Iterator<Item = CountValue>>(iter: I) -> Self {
        iter.fold(CountValue::one(), |acc, v| acc * v)
    }
}

impl fmt::Display for CountValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Serialize for CountValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

/// Factors `y1 + ... + y_{i-1} + n + 2 - i` for `i = 2..=n`, as machine
/// integers. Each fits because it is at most `T + 1`.
fn linear_factors(sizes: &SizeVector) -> impl Iterator<Item = usize> + '_ {
    let n = sizes.n();
    let ys = sizes.as_slice();
    (2..=n).scan(0usize, move |prefix, i| {
        *prefix += ys[i - 2];
        Some(*prefix + n + 2 - i)
    })
}

/// Number of linear parking sequences:
/// `(y1 + n)(y1 + y2 + n - 1) ... (y1 + ... + y_{n-1} + 2)`.
pub fn count_linear(sizes: &SizeVector) -> CountValue {
    linear_factors(sizes).map(CountValue::from).product()
}

/// Number of circular parking sequences on `M = T + 1` spots, `M * f(y)`.
pub fn count_circular(sizes: &SizeVector) -> CountValue {
    CountValue::from(sizes.circle()) * count_linear(sizes)
}

/// `(n + 1)^(n - 1)`, the number of classical parking functions.
pub fn count_classical(n: usize) -> Result<CountValue> {
    if n == 0 {
        return Err(Error::NoCars);
    }
    let exp = u32::try_from(n - 1).map_err(|_| Error::SizeOverflow)?;
    Ok(CountValue::from(n + 1).pow(exp))
}

/// Number of choices car `car` (1-based) has in the divider construction:
/// `M` for the first car, `y1 + ... + y_{i-1} + n + 2 - i` afterwards.
pub fn option_count(sizes: &SizeVector, car: usize) -> Result<usize> {
    let n = sizes.n();
    if car == 0 || car > n {
        return Err(Error::CarOutOfRange { car, n });
    }
    if car == 1 {
        return Ok(sizes.circle());
    }
    let prefix: usize = sizes.as_slice()[..car - 1].iter().sum();
    Ok(prefix + n + 2 - car)
}
