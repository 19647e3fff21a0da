//! Subcommand implementations.

use crate::config::{
    CaseSelect, CatenaryConfig, ConstitutiveConfig, Format, ShockConfig, SimulateConfig,
    SweepConfig,
};
use crate::emit::{
    diagnostic, CliError, Outputs, EXIT_CONFIG, EXIT_INADMISSIBLE, EXIT_NO_REGIME, EXIT_RANGE,
    EXIT_SOLVER, EXIT_WINDOW,
};
use nalgebra::DVector;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use std::io::Write;
use stretchlim::catenary::{
    solve_case1, solve_case2, CatenaryCase, CatenaryError, CatenaryProblem, CatenarySolution,
    Polyline, SolutionRecord,
};
use stretchlim::dynamics::{simulate_shock, write_fronts_csv, DynamicsError, SimOptions};
use stretchlim::output::fmt17;
use stretchlim::scaling::nondimensionalize;
use stretchlim::shock::{
    lax_conditions, shock_speed, velocity_window, LaxVerdict, ShockError, ShockMotion,
};
use stretchlim::{DimensionlessGroup, Vec3};

/// Overrides shared by every subcommand.
#[derive(Debug, Clone, Default)]
pub struct Common {
    pub output: Option<String>,
    pub format: Option<Format>,
}

impl Common {
    fn resolve(
        &self,
        output: &Option<String>,
        format: Option<Format>,
        name: &str,
    ) -> (Outputs, Format) {
        let prefix = self
            .output
            .clone()
            .or_else(|| output.clone())
            .unwrap_or_else(|| format!("stretchlim_{name}"));
        (
            Outputs::new(prefix),
            self.format.or(format).unwrap_or_default(),
        )
    }
}

fn warn(kind: &str, message: &str, details: Value) {
    diagnostic("warn", kind, message, &details);
}

#[derive(Serialize)]
struct ConstitutiveRow {
    #[serde(rename = "N")]
    n: f64,
    nu: f64,
    regime: &'static str,
}

pub fn constitutive(cfg: ConstitutiveConfig, common: &Common) -> Result<(), CliError> {
    let params = cfg.params;
    if cfg.relaxed {
        let soft = params.validate_relaxed().map_err(validation_error)?;
        for v in soft {
            warn("continuity", "continuity mismatch accepted", json!(v));
        }
    } else {
        params.validate().map_err(validation_error)?;
    }
    let [lo, hi] = cfg.range;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) || cfg.samples < 2 {
        return Err(CliError::config(format!(
            "need a finite range lo < hi and at least 2 samples (range = [{lo}, {hi}], samples = {})",
            cfg.samples
        )));
    }
    let rows: Vec<ConstitutiveRow> = (0..cfg.samples)
        .map(|i| {
            let n = lo + (hi - lo) * i as f64 / (cfg.samples - 1) as f64;
            ConstitutiveRow {
                n,
                nu: params.nu_hat(n),
                regime: params.regime(n).label(),
            }
        })
        .collect();
    let (mut out, format) = common.resolve(&cfg.output, cfg.format, "constitutive");
    match format {
        Format::Csv => out.write_with("_table.csv", |w| {
            writeln!(w, "N,nu,regime")?;
            for r in &rows {
                writeln!(w, "{},{},{}", fmt17(r.n), fmt17(r.nu), r.regime)?;
            }
            Ok(())
        })?,
        Format::Json => out.write_json("_table.json", &rows)?,
    }
    out.finish();
    Ok(())
}

fn validation_error(e: stretchlim::constitutive::ValidationError) -> CliError {
    CliError::new(EXIT_CONFIG, "validation", e.to_string()).with_details(json!(e))
}

fn catenary_error(e: &CatenaryError) -> CliError {
    let (code, kind) = match e {
        CatenaryError::InvalidProblem(_) | CatenaryError::WrongCase { .. } => {
            (EXIT_CONFIG, "validation")
        }
        CatenaryError::RegimeViolation { .. } | CatenaryError::OrderingViolation { .. } => {
            (EXIT_NO_REGIME, "regime")
        }
        _ => (EXIT_SOLVER, "solver"),
    };
    let details = match e {
        CatenaryError::RegimeViolation { intervals, .. } => json!({ "intervals": intervals }),
        CatenaryError::OrderingViolation { stilde, sbreve } => {
            json!({ "stilde": stilde, "sbreve": sbreve })
        }
        _ => Value::Null,
    };
    CliError::new(code, kind, e.to_string()).with_details(details)
}

fn catenary_group(cfg: &CatenaryConfig) -> Result<DimensionlessGroup, CliError> {
    match (&cfg.group, &cfg.setup, &cfg.params) {
        (Some(g), None, None) => Ok(*g),
        (None, Some(setup), Some(params)) => nondimensionalize(setup, params)
            .map_err(|e| CliError::new(EXIT_CONFIG, "validation", e.to_string())),
        _ => Err(CliError::config(
            "catenary config needs either `group` or both `setup` and `params`",
        )),
    }
}

#[derive(Serialize)]
struct OracleCheck {
    /// Largest `|r_closed − r_quadrature|∞` over the polyline samples.
    max_deviation: f64,
    /// `‖r(1) − endpoint‖∞`.
    endpoint_residual: f64,
}

#[derive(Serialize)]
struct CatenaryOutput {
    #[serde(flatten)]
    record: SolutionRecord,
    fallback_from_case1: bool,
    oracle: OracleCheck,
}

#[derive(Serialize)]
struct PolylineRow {
    s: f64,
    r: [f64; 3],
    #[serde(rename = "N")]
    tension: f64,
    nu: f64,
}

fn solve_selected(
    problem: &CatenaryProblem,
    select: CaseSelect,
    cfg: &CatenaryConfig,
) -> Result<(CatenarySolution, bool), CliError> {
    let guess3 = || -> Result<Option<Vec3>, CliError> {
        match &cfg.guess {
            None => Ok(None),
            Some(g) if g.len() == 3 => Ok(Some(Vec3::new(g[0], g[1], g[2]))),
            Some(g) => Err(CliError::config(format!(
                "case 1 guess needs 3 values, got {}",
                g.len()
            ))),
        }
    };
    let guess11 = || -> Result<Option<DVector<f64>>, CliError> {
        match &cfg.guess {
            None => Ok(None),
            Some(g) if g.len() == 11 => Ok(Some(DVector::from_column_slice(g))),
            Some(g) => Err(CliError::config(format!(
                "case 2 guess needs 11 values, got {}",
                g.len()
            ))),
        }
    };
    let case1 = CatenaryProblem {
        case: CatenaryCase::FullyExtensible,
        ..*problem
    };
    let case2 = CatenaryProblem {
        case: CatenaryCase::TwoLimitSegments,
        ..*problem
    };
    match select {
        CaseSelect::One => solve_case1(&case1, guess3()?, &cfg.solver)
            .map(|s| (s, false))
            .map_err(|e| catenary_error(&e)),
        CaseSelect::Two => solve_case2(&case2, guess11()?, &cfg.solver)
            .map(|s| (s, false))
            .map_err(|e| catenary_error(&e)),
        CaseSelect::Auto => {
            let guess = if cfg.guess.as_ref().is_some_and(|g| g.len() == 3) {
                guess3()?
            } else {
                None
            };
            match solve_case1(&case1, guess, &cfg.solver) {
                Ok(s) => Ok((s, false)),
                Err(e1 @ CatenaryError::RegimeViolation { .. }) => {
                    warn(
                        "regime",
                        "case 1 leaves its regime, trying case 2",
                        json!({ "cause": e1.to_string() }),
                    );
                    let guess = if cfg.guess.as_ref().is_some_and(|g| g.len() == 11) {
                        guess11()?
                    } else {
                        None
                    };
                    solve_case2(&case2, guess, &cfg.solver)
                        .map(|s| (s, true))
                        .map_err(|e2| {
                            let inner = catenary_error(&e2);
                            if inner.code == EXIT_CONFIG {
                                return inner;
                            }
                            CliError::new(
                                EXIT_NO_REGIME,
                                "regime",
                                "neither case admits a solution",
                            )
                            .with_details(json!({
                                "case1": e1.to_string(),
                                "case2": e2.to_string(),
                            }))
                        })
                }
                Err(e) => Err(catenary_error(&e)),
            }
        }
    }
}

pub fn catenary(
    cfg: CatenaryConfig,
    select: Option<CaseSelect>,
    common: &Common,
) -> Result<(), CliError> {
    let group = catenary_group(&cfg)?;
    let mut problem = CatenaryProblem::new(group, CatenaryCase::FullyExtensible);
    if let Some(e) = cfg.endpoint {
        problem.endpoint = Vec3::new(e[0], e[1], e[2]);
    }
    problem.validate().map_err(|e| catenary_error(&e))?;
    cfg.solver
        .validate()
        .map_err(|e| CliError::new(EXIT_CONFIG, "validation", e.to_string()))?;
    if cfg.samples == 0 {
        return Err(CliError::config("samples must be positive"));
    }
    let (solution, fallback) = solve_selected(&problem, select.unwrap_or(cfg.case), &cfg)?;
    let polyline: Polyline = solution
        .sample(cfg.samples)
        .map_err(|e| catenary_error(&e))?;
    let mut max_deviation: f64 = 0.0;
    for p in &polyline.samples {
        let q = solution
            .quadrature_position(p.s)
            .map_err(|e| catenary_error(&e))?;
        max_deviation = max_deviation.max((p.r - q).amax());
    }
    let tip = solution.position(1.0).map_err(|e| catenary_error(&e))?;
    let output = CatenaryOutput {
        record: solution.record(),
        fallback_from_case1: fallback,
        oracle: OracleCheck {
            max_deviation,
            endpoint_residual: (tip - solution.endpoint).amax(),
        },
    };
    let (mut out, format) = common.resolve(&cfg.output, cfg.format, "catenary");
    out.write_json("_solution.json", &output)?;
    match format {
        Format::Csv => out.write_with("_polyline.csv", |w| polyline.write_csv(w))?,
        Format::Json => {
            let rows: Vec<PolylineRow> = polyline
                .samples
                .iter()
                .map(|p| PolylineRow {
                    s: p.s,
                    r: [p.r.x, p.r.y, p.r.z],
                    tension: p.tension,
                    nu: p.nu,
                })
                .collect();
            out.write_json("_polyline.json", &rows)?
        }
    }
    out.finish();
    Ok(())
}

fn shock_error(e: &ShockError) -> CliError {
    let (code, kind) = match e {
        ShockError::WindowViolation { .. } | ShockError::StateViolation { .. } => {
            (EXIT_WINDOW, "window")
        }
        ShockError::Inadmissible { .. } => (EXIT_INADMISSIBLE, "inadmissible"),
        ShockError::DivisionDegenerate => (EXIT_SOLVER, "degenerate"),
        ShockError::InvalidInputs(_) | ShockError::FrontExited { .. } => {
            (EXIT_CONFIG, "validation")
        }
    };
    let details = match e {
        ShockError::WindowViolation { v2, vmin2, vmax2 } => {
            json!({ "vplus2": v2, "vmin2": vmin2, "vmax2": vmax2 })
        }
        ShockError::StateViolation { nu_minus, nu0 } => json!({ "nu_minus": nu_minus, "nu0": nu0 }),
        _ => Value::Null,
    };
    CliError::new(code, kind, e.to_string()).with_details(details)
}

fn build_motion(
    inputs: stretchlim::shock::ShockInputs,
    strict: bool,
) -> Result<ShockMotion, CliError> {
    let motion = if strict {
        ShockMotion::build_strict(inputs)
    } else {
        ShockMotion::build(inputs)
    }
    .map_err(|e| shock_error(&e))?;
    if let LaxVerdict::Inadmissible { reason } = &motion.lax.verdict {
        warn(
            "inadmissible",
            reason,
            json!({ "sigma_dot": motion.sigma_dot }),
        );
    }
    Ok(motion)
}

/// One cell of the admissibility grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepCell {
    pub zeta: f64,
    pub vplus: f64,
    pub in_window: bool,
    pub sigma_dot: Option<f64>,
    pub direct_interval: bool,
    #[serde(flatten)]
    pub verdict: LaxVerdict,
}

impl SweepCell {
    fn regime_label(&self) -> &'static str {
        match &self.verdict {
            LaxVerdict::Admissible { regime } => match regime {
                stretchlim::shock::LaxRegime::Shock1 => "shock1",
                stretchlim::shock::LaxRegime::Shock2 => "shock2",
            },
            LaxVerdict::Inadmissible { .. } => "inadmissible",
        }
    }
}

fn grid(range: [f64; 2], n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![range[0]];
    }
    (0..n)
        .map(|i| range[0] + (range[1] - range[0]) * i as f64 / (n - 1) as f64)
        .collect()
}

/// Evaluates the grid in parallel and returns cells in row-major
/// `(zeta, vplus)` order.
pub fn sweep(inputs: &stretchlim::shock::ShockInputs, sweep: &SweepConfig) -> Vec<SweepCell> {
    let zetas = grid(sweep.zeta, sweep.nzeta);
    let vs = grid(sweep.vplus, sweep.nvplus);
    let points: Vec<(f64, f64)> = zetas
        .iter()
        .flat_map(|&z| vs.iter().map(move |&v| (z, v)))
        .collect();
    points
        .par_iter()
        .map(|&(zeta, vplus)| {
            let (vmin2, vmax2) = velocity_window(inputs.n_plus, zeta, inputs.ratio, inputs.nbar0);
            let v2 = vplus * vplus;
            let sigma_dot = shock_speed(inputs.n_plus, vplus, zeta, inputs.ratio).ok();
            SweepCell {
                zeta,
                vplus,
                in_window: vmin2 < v2 && v2 < vmax2,
                sigma_dot,
                direct_interval: sigma_dot.is_some_and(|sd| -1.0 < sd && sd < -1.0 / inputs.ratio),
                verdict: lax_conditions(inputs.n_plus, vplus, zeta, inputs.ratio),
            }
        })
        .collect()
}

pub fn shock(
    cfg: ShockConfig,
    do_sweep: bool,
    strict_lax: bool,
    common: &Common,
) -> Result<(), CliError> {
    let strict = strict_lax || cfg.strict_lax;
    let motion = build_motion(cfg.inputs, strict)?;
    let (mut out, format) = common.resolve(&cfg.output, cfg.format, "shock");
    out.write_json("_motion.json", &motion)?;
    let n = cfg.trajectory_samples.max(2);
    match format {
        Format::Csv => out.write_with("_trajectory.csv", |w| motion.write_trajectory_csv(n, w))?,
        Format::Json => {
            let rows: Vec<Value> = motion
                .trajectory(n)
                .into_iter()
                .map(|(t, sigma)| json!({ "t": t, "sigma": sigma }))
                .collect();
            out.write_json("_trajectory.json", &rows)?
        }
    }
    if do_sweep {
        let grid_cfg = cfg.sweep.unwrap_or_default();
        grid_cfg.validate()?;
        let cells = sweep(&cfg.inputs, &grid_cfg);
        match format {
            Format::Csv => out.write_with("_sweep.csv", |w| {
                writeln!(w, "zeta,vplus,in_window,sigma_dot,direct_interval,regime")?;
                for c in &cells {
                    let sd = c.sigma_dot.map(fmt17).unwrap_or_else(|| "nan".into());
                    writeln!(
                        w,
                        "{},{},{},{},{},{}",
                        fmt17(c.zeta),
                        fmt17(c.vplus),
                        c.in_window,
                        sd,
                        c.direct_interval,
                        c.regime_label()
                    )?;
                }
                Ok(())
            })?,
            Format::Json => out.write_json("_sweep.json", &cells)?,
        }
    }
    out.finish();
    Ok(())
}

/// Scalar overrides accepted on the command line.
#[derive(Debug, Clone, Default)]
pub struct SimOverrides {
    pub ncells: Option<usize>,
    pub cfl: Option<f64>,
    pub t_end: Option<f64>,
    pub strict_lax: bool,
}

fn dynamics_error(e: &DynamicsError) -> CliError {
    match e {
        DynamicsError::RangeExit { t, cell, nu } => {
            CliError::new(EXIT_RANGE, "range_exit", e.to_string())
                .with_details(json!({ "t": t, "cell": cell, "nu": nu }))
        }
        DynamicsError::InvalidSetup(_) => CliError::new(EXIT_CONFIG, "validation", e.to_string()),
    }
}

pub fn simulate(cfg: SimulateConfig, ov: &SimOverrides, common: &Common) -> Result<(), CliError> {
    let motion = build_motion(cfg.inputs, ov.strict_lax || cfg.strict_lax)?;
    let opts = SimOptions {
        ncells: ov.ncells.unwrap_or(cfg.ncells),
        cfl: ov.cfl.unwrap_or(cfg.cfl),
        t_end: ov.t_end.unwrap_or(cfg.t_end),
        fit_skip: cfg.fit_skip,
        snapshot_times: cfg.snapshot_times.clone(),
    };
    if !(opts.t_end > 0.0 && opts.t_end < motion.t_exit) {
        return Err(CliError::new(
            EXIT_CONFIG,
            "validation",
            format!(
                "t_end = {} must lie in (0, t_exit = {})",
                opts.t_end, motion.t_exit
            ),
        )
        .with_details(json!({ "t_end": opts.t_end, "t_exit": motion.t_exit })));
    }
    let sim = simulate_shock(&motion, &opts).map_err(|e| dynamics_error(&e))?;
    let (mut out, format) = common.resolve(&cfg.output, cfg.format, "simulate");
    match format {
        Format::Csv => {
            out.write_with("_fronts.csv", |w| write_fronts_csv(&sim.fronts, w))?;
            for (k, snap) in sim.snapshots.iter().enumerate() {
                out.write_with(&format!("_snapshot_{k}.csv"), |w| {
                    snap.write_snapshot_csv(w)
                })?;
            }
        }
        Format::Json => {
            out.write_json("_fronts.json", &sim.fronts)?;
            for (k, snap) in sim.snapshots.iter().enumerate() {
                let cells: Vec<Value> = snap
                    .centres()
                    .zip(snap.nu.iter().zip(&snap.v))
                    .map(|(s, (nu, v))| json!({ "s": s, "nu": nu, "v": v }))
                    .collect();
                out.write_json(
                    &format!("_snapshot_{k}.json"),
                    &json!({ "t": snap.t, "cells": cells }),
                )?;
            }
        }
    }
    out.write_json("_summary.json", &sim.summary)?;
    out.finish();
    Ok(())
}
