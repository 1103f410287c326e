//! Named checks with measured values and pass/fail outcomes.

use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

/// One verified identity: a measured value against its tolerance.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub measured: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    /// Passes when `measured <= tolerance` (NaN fails).
    pub fn residual(name: impl Into<String>, measured: f64, tolerance: f64) -> Self {
        Check { name: name.into(), measured, tolerance, pass: measured <= tolerance }
    }

    /// Passes when `measured >= threshold`; for overlaps and negative
    /// controls that must stay large.
    pub fn at_least(name: impl Into<String>, measured: f64, threshold: f64) -> Self {
        Check { name: name.into(), measured, tolerance: threshold, pass: measured >= threshold }
    }
}

/// A named batch of checks; overall pass is their conjunction.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub name: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report { name: name.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Worst residual-style margin, for quick summaries.
    pub fn max_measured(&self) -> f64 {
        self.checks.iter().map(|c| c.measured).fold(0.0, f64::max)
    }
}
