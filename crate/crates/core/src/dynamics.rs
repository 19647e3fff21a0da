//! Finite-volume solver for longitudinal motions of a straight string.
//!
//! With `r = χ·e₁`, `ν = χ_s` and `v = χ_t`, the scaled equations of motion
//! become the p-system
//!
//! ```text
//! ν_t − v_s = 0        v_t − N(ν)_s/ζ = 0
//! ```
//!
//! where `N(ν)` inverts the law on its extensible range `(ν₀, ν₁)`. Cells are
//! advanced with the first-order Lax–Friedrichs flux
//! `F̂ = ½(F_L + F_R) − ½·c·(u_R − u_L)` using the largest characteristic
//! speed `c = 1/√ζ`. The left end is a fixed wall (mirrored velocity) and the
//! right end is held at the stretch of the terminal tension.

use crate::constitutive::ConstitutiveParams;
use crate::output::fmt17;
use crate::shock::ShockMotion;
use serde::{Deserialize, Serialize};
use std::io::{self, Write};
use thiserror::Error;

/// Smallest grid accepted by [`init_from_shock`].
pub const MIN_CELLS: usize = 100;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DynamicsError {
    #[error("stretch {nu} in cell {cell} left the extensible range at t = {t}")]
    RangeExit { t: f64, cell: usize, nu: f64 },
    #[error("invalid simulation setup: {0}")]
    InvalidSetup(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct DynState {
    pub ncells: usize,
    pub ds: f64,
    pub nu: Vec<f64>,
    pub v: Vec<f64>,
    pub t: f64,
    pub zeta: f64,
    pub ratio: f64,
    pub law: ConstitutiveParams,
    /// Ghost stretch at the right end.
    pub nu_right: f64,
}

/// Outcome of one time step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepInfo {
    pub dt: f64,
    /// Numerical flux `(F̂_ν, F̂_v)` through the left wall.
    pub flux_left: [f64; 2],
    /// Numerical flux through the right end.
    pub flux_right: [f64; 2],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FrontMethod {
    MidpointCrossing,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FrontEstimate {
    pub t: f64,
    pub sigma_est: f64,
    pub method: FrontMethod,
}

/// Neumaier-compensated sum.
fn total(values: &[f64]) -> f64 {
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    for &x in values {
        let t = sum + x;
        comp += if sum.abs() >= x.abs() {
            (sum - t) + x
        } else {
            (x - t) + sum
        };
        sum = t;
    }
    sum + comp
}

impl DynState {
    /// Constant state `(nu, v)` on `ncells` cells, right end held at `nu_right`.
    pub fn uniform(
        ncells: usize,
        nu: f64,
        v: f64,
        nu_right: f64,
        zeta: f64,
        law: ConstitutiveParams,
    ) -> Result<Self, DynamicsError> {
        let state = DynState {
            ncells,
            ds: 1.0 / ncells as f64,
            nu: vec![nu; ncells],
            v: vec![v; ncells],
            t: 0.0,
            zeta,
            ratio: law.ratio(),
            law,
            nu_right,
        };
        state.check_setup()?;
        Ok(state)
    }

    fn check_setup(&self) -> Result<(), DynamicsError> {
        if self.ncells < 2 || !(self.zeta > 0.0) || !self.zeta.is_finite() {
            return Err(DynamicsError::InvalidSetup(format!(
                "need ncells >= 2 and zeta > 0 (ncells = {}, zeta = {})",
                self.ncells, self.zeta
            )));
        }
        if !self.law.dimensionless {
            return Err(DynamicsError::InvalidSetup(
                "law must be in dimensionless form".into(),
            ));
        }
        let inside = |nu: f64| nu > self.law.nu0 && nu < self.law.nu1;
        if !inside(self.nu_right) {
            return Err(DynamicsError::InvalidSetup(format!(
                "right stretch {} outside the extensible range",
                self.nu_right
            )));
        }
        if let Some(cell) = self.nu.iter().position(|&nu| !inside(nu)) {
            return Err(DynamicsError::RangeExit {
                t: self.t,
                cell,
                nu: self.nu[cell],
            });
        }
        Ok(())
    }

    /// Largest characteristic speed, `√(1/ζ)` (tensile slope 1 dominates).
    pub fn max_speed(&self) -> f64 {
        (1.0f64.max(1.0 / self.ratio) / self.zeta).sqrt()
    }

    pub fn total_stretch(&self) -> f64 {
        total(&self.nu) * self.ds
    }

    pub fn total_velocity(&self) -> f64 {
        total(&self.v) * self.ds
    }

    fn tension(&self, nu: f64) -> f64 {
        self.law
            .tension_from_stretch(nu)
            .expect("stretch checked to lie in the extensible range")
    }

    fn flux(&self, nu: f64, v: f64) -> [f64; 2] {
        [-v, -self.tension(nu) / self.zeta]
    }

    fn numerical_flux(&self, left: (f64, f64), right: (f64, f64)) -> [f64; 2] {
        let fl = self.flux(left.0, left.1);
        let fr = self.flux(right.0, right.1);
        let c = self.max_speed();
        [
            0.5 * (fl[0] + fr[0]) - 0.5 * c * (right.0 - left.0),
            0.5 * (fl[1] + fr[1]) - 0.5 * c * (right.1 - left.1),
        ]
    }

    /// `cfl·ds/c_max`.
    pub fn stable_dt(&self, cfl: f64) -> f64 {
        cfl * self.ds / self.max_speed()
    }

    /// One step of size `stable_dt(cfl)`.
    pub fn step(&mut self, cfl: f64) -> Result<StepInfo, DynamicsError> {
        let dt = self.stable_dt(cfl);
        self.step_dt(dt)
    }

    /// One step of size `dt`, which must not exceed `stable_dt(1)`.
    pub fn step_dt(&mut self, dt: f64) -> Result<StepInfo, DynamicsError> {
        if !(dt > 0.0) || dt > self.stable_dt(1.0) * (1.0 + 1e-12) {
            return Err(DynamicsError::InvalidSetup(format!(
                "time step {dt} outside (0, ds/c_max]"
            )));
        }
        let n = self.ncells;
        let mut fluxes = Vec::with_capacity(n + 1);
        fluxes.push(self.numerical_flux((self.nu[0], -self.v[0]), (self.nu[0], self.v[0])));
        for i in 0..n - 1 {
            fluxes.push(
                self.numerical_flux((self.nu[i], self.v[i]), (self.nu[i + 1], self.v[i + 1])),
            );
        }
        fluxes.push(self.numerical_flux(
            (self.nu[n - 1], self.v[n - 1]),
            (self.nu_right, self.v[n - 1]),
        ));
        let lambda = dt / self.ds;
        let t_next = self.t + dt;
        let nu: Vec<f64> = (0..n)
            .map(|i| self.nu[i] - lambda * (fluxes[i + 1][0] - fluxes[i][0]))
            .collect();
        if let Some(cell) = nu
            .iter()
            .position(|&x| !(x > self.law.nu0 && x < self.law.nu1))
        {
            return Err(DynamicsError::RangeExit {
                t: t_next,
                cell,
                nu: nu[cell],
            });
        }
        for i in 0..n {
            self.v[i] -= lambda * (fluxes[i + 1][1] - fluxes[i][1]);
        }
        self.nu = nu;
        self.t = t_next;
        Ok(StepInfo {
            dt,
            flux_left: fluxes[0],
            flux_right: fluxes[n],
        })
    }

    /// Cell centres.
    pub fn centres(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.ncells).map(move |i| (i as f64 + 0.5) * self.ds)
    }

    /// First crossing of `level` by the piecewise-linear interpolant of the
    /// cell-centred stretch, scanning from the left.
    pub fn locate_front(&self, level: f64) -> Option<f64> {
        for i in 0..self.ncells - 1 {
            let (a, b) = (self.nu[i] - level, self.nu[i + 1] - level);
            if a == 0.0 {
                return Some((i as f64 + 0.5) * self.ds);
            }
            if a * b < 0.0 {
                let frac = a / (a - b);
                return Some((i as f64 + 0.5 + frac) * self.ds);
            }
        }
        None
    }

    pub fn write_snapshot_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "s,nu,v")?;
        for (i, s) in self.centres().enumerate() {
            writeln!(
                out,
                "{},{},{}",
                fmt17(s),
                fmt17(self.nu[i]),
                fmt17(self.v[i])
            )?;
        }
        Ok(())
    }
}

/// Exact cell averages of the motion at `t = 0`.
pub fn init_from_shock(motion: &ShockMotion, ncells: usize) -> Result<DynState, DynamicsError> {
    if ncells < MIN_CELLS {
        return Err(DynamicsError::InvalidSetup(format!(
            "ncells = {ncells} below the minimum {MIN_CELLS}"
        )));
    }
    let ds = 1.0 / ncells as f64;
    let front = motion.sigma_start;
    let inp = &motion.inputs;
    let mut nu = Vec::with_capacity(ncells);
    let mut v = Vec::with_capacity(ncells);
    for i in 0..ncells {
        let left_fraction = ((front - i as f64 * ds) / ds).clamp(0.0, 1.0);
        nu.push(left_fraction * motion.nu_minus + (1.0 - left_fraction) * motion.nu_plus);
        v.push((1.0 - left_fraction) * inp.v_plus);
    }
    let state = DynState {
        ncells,
        ds,
        nu,
        v,
        t: 0.0,
        zeta: inp.zeta,
        ratio: inp.ratio,
        law: inp.law(),
        nu_right: motion.nu_plus,
    };
    state.check_setup()?;
    Ok(state)
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunOptions {
    /// Stretch level tracked as the front, usually `(ν₋ + ν₊)/2`.
    pub front_level: Option<f64>,
    /// Record a front estimate every this many steps (and at the end).
    pub front_every: usize,
    /// Times at which field snapshots are taken; steps are shortened to hit
    /// them exactly.
    pub snapshot_times: Vec<f64>,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            front_level: None,
            front_every: 1,
            snapshot_times: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub fronts: Vec<FrontEstimate>,
    pub snapshots: Vec<DynState>,
    pub steps: usize,
    /// Largest per-step gap between the change of `Σν·ds` and the wall fluxes.
    pub max_conservation_drift: f64,
}

/// Advances `state` to `t_end`.
pub fn run(
    state: &mut DynState,
    t_end: f64,
    cfl: f64,
    opts: &RunOptions,
) -> Result<RunOutput, DynamicsError> {
    if !(cfl > 0.0 && cfl <= 1.0) {
        return Err(DynamicsError::InvalidSetup(format!(
            "cfl = {cfl} not in (0, 1]"
        )));
    }
    if !(t_end >= state.t) || !t_end.is_finite() {
        return Err(DynamicsError::InvalidSetup(format!(
            "t_end = {t_end} before current time {}",
            state.t
        )));
    }
    let every = opts.front_every.max(1);
    let mut targets: Vec<f64> = opts
        .snapshot_times
        .iter()
        .copied()
        .filter(|&t| t >= state.t && t <= t_end)
        .collect();
    targets.sort_by(f64::total_cmp);
    targets.dedup();

    let mut out = RunOutput {
        fronts: Vec::new(),
        snapshots: Vec::new(),
        steps: 0,
        max_conservation_drift: 0.0,
    };
    let record_front = |state: &DynState, out: &mut RunOutput| {
        if let Some(level) = opts.front_level {
            if let Some(sigma_est) = state.locate_front(level) {
                out.fronts.push(FrontEstimate {
                    t: state.t,
                    sigma_est,
                    method: FrontMethod::MidpointCrossing,
                });
            }
        }
    };
    record_front(state, &mut out);
    let mut next_target = 0;
    while next_target < targets.len() && targets[next_target] <= state.t {
        out.snapshots.push(state.clone());
        next_target += 1;
    }

    let dt_max = state.stable_dt(cfl);
    while state.t < t_end {
        let stop = targets
            .get(next_target)
            .copied()
            .unwrap_or(t_end)
            .min(t_end);
        let remaining = stop - state.t;
        let (dt, lands) = if remaining <= dt_max * (1.0 + 1e-12) {
            (remaining.min(dt_max), true)
        } else {
            (dt_max, false)
        };
        let before = state.total_stretch();
        let info = state.step_dt(dt)?;
        if lands {
            state.t = stop;
        }
        let expected = -info.dt * (info.flux_right[0] - info.flux_left[0]);
        let drift = (state.total_stretch() - before - expected).abs();
        out.max_conservation_drift = out.max_conservation_drift.max(drift);
        out.steps += 1;
        if out.steps.is_multiple_of(every) || state.t >= t_end {
            record_front(state, &mut out);
        }
        while next_target < targets.len() && targets[next_target] <= state.t {
            out.snapshots.push(state.clone());
            next_target += 1;
        }
    }
    Ok(out)
}

/// Least-squares slope of `sigma_est` against `t` over estimates with
/// `t ≥ t_min`.
pub fn fit_front_speed(fronts: &[FrontEstimate], t_min: f64) -> Option<f64> {
    let pts: Vec<(f64, f64)> = fronts
        .iter()
        .filter(|f| f.t >= t_min)
        .map(|f| (f.t, f.sigma_est))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let tm = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let sm = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - tm) * (p.0 - tm)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - tm) * (p.1 - sm)).sum();
    if sxx == 0.0 {
        None
    } else {
        Some(sxy / sxx)
    }
}

pub fn write_fronts_csv<W: Write>(fronts: &[FrontEstimate], mut out: W) -> io::Result<()> {
    writeln!(out, "t,sigma_est")?;
    for f in fronts {
        writeln!(out, "{},{}", fmt17(f.t), fmt17(f.sigma_est))?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimOptions {
    pub ncells: usize,
    pub cfl: f64,
    pub t_end: f64,
    /// Fraction of `[0, t_end]` skipped before fitting the front speed.
    pub fit_skip: f64,
    pub snapshot_times: Vec<f64>,
}

impl Default for SimOptions {
    fn default() -> Self {
        Self {
            ncells: 2000,
            cfl: 0.9,
            t_end: 0.5,
            fit_skip: 0.25,
            snapshot_times: Vec::new(),
        }
    }
}

/// Measured against analytic front speed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimSummary {
    pub ncells: usize,
    pub cfl: f64,
    pub t_end: f64,
    pub steps: usize,
    pub sigma_dot_analytic: f64,
    pub sigma_dot_measured: f64,
    pub relative_error: f64,
    pub final_front_error: f64,
    pub max_conservation_drift: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Simulation {
    pub summary: SimSummary,
    pub fronts: Vec<FrontEstimate>,
    pub snapshots: Vec<DynState>,
    pub final_state: DynState,
}

/// Runs the finite-volume solver on the motion's initial data and compares
/// the tracked front with `σ(t)`.
pub fn simulate_shock(
    motion: &ShockMotion,
    opts: &SimOptions,
) -> Result<Simulation, DynamicsError> {
    if !(opts.t_end > 0.0 && opts.t_end < motion.t_exit) {
        return Err(DynamicsError::InvalidSetup(format!(
            "t_end = {} must lie in (0, t_exit = {})",
            opts.t_end, motion.t_exit
        )));
    }
    if !(0.0..1.0).contains(&opts.fit_skip) {
        return Err(DynamicsError::InvalidSetup(format!(
            "fit_skip = {} not in [0, 1)",
            opts.fit_skip
        )));
    }
    let mut state = init_from_shock(motion, opts.ncells)?;
    let run_opts = RunOptions {
        front_level: Some(0.5 * (motion.nu_minus + motion.nu_plus)),
        front_every: 1,
        snapshot_times: opts.snapshot_times.clone(),
    };
    let out = run(&mut state, opts.t_end, opts.cfl, &run_opts)?;
    let measured = fit_front_speed(&out.fronts, opts.fit_skip * opts.t_end).ok_or_else(|| {
        DynamicsError::InvalidSetup("too few front estimates to fit a speed".into())
    })?;
    let analytic = motion.sigma_dot;
    let final_front_error = out
        .fronts
        .last()
        .map(|f| (f.sigma_est - motion.sigma(f.t)).abs())
        .unwrap_or(f64::NAN);
    Ok(Simulation {
        summary: SimSummary {
            ncells: opts.ncells,
            cfl: opts.cfl,
            t_end: opts.t_end,
            steps: out.steps,
            sigma_dot_analytic: analytic,
            sigma_dot_measured: measured,
            relative_error: ((measured - analytic) / analytic).abs(),
            final_front_error,
            max_conservation_drift: out.max_conservation_drift,
        },
        fronts: out.fronts,
        snapshots: out.snapshots,
        final_state: state,
    })
}
