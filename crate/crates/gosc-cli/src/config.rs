//! Run configuration: a single JSON document covering physical constants,
//! truncation, quadrature, the output grid, per-suite tolerance scaling, and
//! the output directory.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use gosc_core::oscillator::{GridSpec, PhysParams};
use gosc_core::suites::SuiteParams;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PhysConfig {
    pub mass: f64,
    pub omega: f64,
    pub hbar: f64,
}

impl Default for PhysConfig {
    fn default() -> Self {
        PhysConfig { mass: 1.0, omega: 1.0, hbar: 1.0 }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GridConfig {
    pub t_min: f64,
    pub t_max: f64,
    pub t_count: usize,
    pub x_min: f64,
    pub x_max: f64,
    pub x_count: usize,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig {
            t_min: 0.0,
            t_max: 2.0 * std::f64::consts::PI,
            t_count: 901,
            x_min: -6.0,
            x_max: 6.0,
            x_count: 721,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub phys: PhysConfig,
    /// Basis truncation degree N.
    pub truncation: usize,
    /// Gauss-Hermite nodes per axis.
    pub quadrature_points: usize,
    pub grid: GridConfig,
    pub seed: u64,
    /// Per-suite multiplier applied to the default tolerances.
    pub tolerance_scale: BTreeMap<String, f64>,
    pub out_dir: PathBuf,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            phys: PhysConfig::default(),
            truncation: 40,
            quadrature_points: 80,
            grid: GridConfig::default(),
            seed: SuiteParams::default_desk().seed,
            tolerance_scale: BTreeMap::new(),
            out_dir: PathBuf::from("out"),
        }
    }
}

impl RunConfig {
    pub fn load(path: Option<&Path>) -> Result<Self> {
        let config = match path {
            Some(p) => {
                let text = std::fs::read_to_string(p)
                    .with_context(|| format!("reading config {}", p.display()))?;
                serde_json::from_str(&text)
                    .with_context(|| format!("parsing config {}", p.display()))?
            }
            None => RunConfig::default(),
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.phys.mass > 0.0 && self.phys.omega > 0.0 && self.phys.hbar > 0.0) {
            bail!("phys constants must be positive");
        }
        if self.truncation < 4 {
            bail!("truncation {} leaves the protected window too small (need N >= 4)", self.truncation);
        }
        if self.quadrature_points < 2 {
            bail!("quadrature_points must be at least 2");
        }
        if self.grid.t_count < 8 || self.grid.x_count < 8 {
            bail!("grid counts must be at least 8");
        }
        if !(self.grid.t_max > self.grid.t_min) || !(self.grid.x_max > self.grid.x_min) {
            bail!("grid ranges must be nonempty");
        }
        if let Some((name, &v)) = self.tolerance_scale.iter().find(|(_, &v)| !(v > 0.0)) {
            bail!("tolerance scale for suite {name} must be positive, got {v}");
        }
        Ok(())
    }

    pub fn phys_params(&self) -> Result<PhysParams> {
        PhysParams::new(self.phys.mass, self.phys.omega, self.phys.hbar)
            .map_err(|e| anyhow::anyhow!("{e}"))
    }

    pub fn grid_spec(&self) -> GridSpec {
        GridSpec {
            t_min: self.grid.t_min,
            t_max: self.grid.t_max,
            t_count: self.grid.t_count,
            x_min: self.grid.x_min,
            x_max: self.grid.x_max,
            x_count: self.grid.x_count,
        }
    }

    /// Suite parameters for one suite, with its tolerance scale applied.
    pub fn suite_params(&self, suite: &str) -> Result<SuiteParams> {
        Ok(SuiteParams {
            phys: self.phys_params()?,
            trunc: self.truncation,
            quad_points: self.quadrature_points,
            grid: self.grid_spec(),
            seed: self.seed,
            tol_scale: self.tolerance_scale.get(suite).copied().unwrap_or(1.0),
        })
    }
}
