//! JSON run configurations, one block per subcommand.

use crate::emit::CliError;
use clap::ValueEnum;
use serde::de::DeserializeOwned;
use serde::Deserialize;
use std::fs;
use std::path::Path;
use stretchlim::rootfind::SolverOptions;
use stretchlim::shock::ShockInputs;
use stretchlim::{ConstitutiveParams, DimensionlessGroup, PhysicalSetup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize, ValueEnum)]
pub enum CaseSelect {
    #[default]
    #[serde(rename = "auto")]
    #[value(name = "auto")]
    Auto,
    #[serde(rename = "1")]
    #[value(name = "1")]
    One,
    #[serde(rename = "2")]
    #[value(name = "2")]
    Two,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstitutiveConfig {
    pub params: ConstitutiveParams,
    /// Tabulated tension interval `[lo, hi]`.
    pub range: [f64; 2],
    pub samples: usize,
    /// Accept continuity mismatches as warnings.
    #[serde(default)]
    pub relaxed: bool,
    pub output: Option<String>,
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatenaryConfig {
    pub group: Option<DimensionlessGroup>,
    pub setup: Option<PhysicalSetup>,
    pub params: Option<ConstitutiveParams>,
    #[serde(default)]
    pub case: CaseSelect,
    /// Scaled position of the far support, `e₁` when absent.
    pub endpoint: Option<[f64; 3]>,
    #[serde(default = "default_polyline_samples")]
    pub samples: usize,
    #[serde(default)]
    pub solver: SolverOptions,
    /// Starting point for the selected case, in solver unknown order.
    pub guess: Option<Vec<f64>>,
    pub output: Option<String>,
    pub format: Option<Format>,
}

fn default_polyline_samples() -> usize {
    201
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub zeta: [f64; 2],
    pub vplus: [f64; 2],
    pub nzeta: usize,
    pub nvplus: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            zeta: [0.4, 4.0],
            vplus: [0.01, 0.5],
            nzeta: 37,
            nvplus: 50,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        let ranges_ok = [self.zeta, self.vplus]
            .iter()
            .all(|r| r[0].is_finite() && r[1].is_finite() && r[0] <= r[1]);
        if !ranges_ok || self.nzeta == 0 || self.nvplus == 0 {
            return Err(CliError::config(
                "sweep ranges must be finite and ordered with at least one point each",
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShockConfig {
    pub inputs: ShockInputs,
    #[serde(default)]
    pub strict_lax: bool,
    #[serde(default = "default_trajectory_samples")]
    pub trajectory_samples: usize,
    pub sweep: Option<SweepConfig>,
    pub output: Option<String>,
    pub format: Option<Format>,
}

fn default_trajectory_samples() -> usize {
    101
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimulateConfig {
    pub inputs: ShockInputs,
    #[serde(default = "default_ncells")]
    pub ncells: usize,
    #[serde(default = "default_cfl")]
    pub cfl: f64,
    pub t_end: f64,
    #[serde(default = "default_fit_skip")]
    pub fit_skip: f64,
    #[serde(default)]
    pub snapshot_times: Vec<f64>,
    #[serde(default)]
    pub strict_lax: bool,
    pub output: Option<String>,
    pub format: Option<Format>,
}

fn default_ncells() -> usize {
    2000
}

fn default_cfl() -> f64 {
    0.9
}

fn default_fit_skip() -> f64 {
    0.25
}

pub fn load<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    serde_json::from_str(&text).map_err(|e| CliError::config(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_selector_accepts_digit_strings() {
        let c: CatenaryConfig = serde_json::from_str(
            r#"{"group": {"zeta": 1, "Nbar0": 0.1, "Nbar1": 0.5, "ratio": 2}, "case": "2"}"#,
        )
        .unwrap();
        assert_eq!(c.case, CaseSelect::Two);
        assert_eq!(c.samples, 201);
        assert_eq!(c.solver, SolverOptions::default());
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let r: Result<SimulateConfig, _> = serde_json::from_str(
            r#"{"inputs": {"Nplus": 0.1, "vplus": 0.2, "zeta": 1, "ratio": 2, "sigma0": 0.7,
                "s0": 0.8, "Nbar0": 0.2, "Nbar1": 0.3}, "t_end": 0.5, "tend": 1}"#,
        );
        assert!(r.is_err());
    }
}
