//! Parking sequences for cars of different sizes.
//!
//! Cars of sizes `y1, ..., yn` arrive in order at a one-way street with
//! `y1 + ... + yn` spots. Each drives to its preferred spot, keeps going to
//! the first empty one and parks there if its whole length fits; otherwise
//! it either hits a parked car or leaves the street. A tuple of preferences
//! under which every car parks is a *parking sequence*. Their number is
//!
//! ```text
//! f(y) = (y1 + n)(y1 + y2 + n - 1) ... (y1 + ... + y_{n-1} + 2)
//! ```
//!
//! and on a circle with one extra spot there are `(y1 + ... + yn + 1) f(y)`.
//!
//! The crate provides the simulator ([`park`], [`circular`]), the closed
//! forms ([`count`]), the divider bijection and exact uniform samplers
//! ([`pollak`]), brute-force verification ([`oracle`]) and the `parking`
//! command-line front end ([`cli`]).

pub mod circular;
pub mod cli;
pub mod count;
pub mod error;
pub mod oracle;
pub mod park;
pub mod pollak;
pub mod tuples;

pub use circular::{empty_spot, restrict_to_linear, rotate, simulate_circular, wrap_spot};
pub use count::{count_circular, count_classical, count_linear, option_count, CountValue};
pub use error::{Error, Result};
pub use oracle::{enumerate_parking_sequences, verify, verify_sweep, EnumerationReport};
pub use park::{
    is_classical_parking_function, is_parking_sequence, simulate, simulate_linear, Flavor, Layout,
    ParkResult, PrefSequence, SizeVector,
};
pub use pollak::{
    decode, enumerate_option_sequences, sample_circular, sample_linear, CarOption, OptionSequence,
};
