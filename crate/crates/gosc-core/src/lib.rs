//! Core library for the oscillatory Lie group `G_osc`, its coadjoint-orbit
//! representation on a truncated holomorphic basis, and the
//! noncommutative-integration solution pipeline for the quantum harmonic
//! oscillator.
//!
//! The crate is `no_std` (with `alloc`); all operations are pure and
//! deterministic. IO, configuration, and the command-line front end live in
//! the companion `gosc-cli` crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod lambda_rep;
pub mod lie_osc;
pub mod nim;
pub mod numerics;
pub mod oscillator;
pub mod report;
pub mod suites;

pub use error::Error;
