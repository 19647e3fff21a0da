//! Two-state shock motions of a straight string.
//!
//! A compressed segment `[0, σ(t)]` at tension `N₋ ∈ (−N̄₀, 0)` and rest
//! meets an elongated segment `[σ(t), 1]` at the terminal tension
//! `N₊ ∈ (0, N̄₁)` moving with velocity `v₊`:
//!
//! ```text
//! χ(s, t) = ν₋·s                       s ∈ [0, σ(t)]
//! χ(s, t) = ν₊·(s − s₀) + v₊·t + σ₀    s ∈ [σ(t), 1]
//! ```
//!
//! with `ν₋ = ratio·N₋ + 1` and `ν₊ = N₊ + 1`. Continuity of `χ` fixes
//! `σ(t)`, and the jump condition `⟦N⟧ + ζ·σ′·⟦χ_t⟧ = 0` fixes `N₋`.
//!
//! Admissibility is classified against the interval `−1 < σ′ < −1/ratio`.
//! The characteristic speeds of the scaled equations are `1/√ζ` on the
//! tensile branch and `1/√(ratio·ζ)` on the compressive one, so
//! [`LaxReport::characteristic`] also reports the interval built from those.

use crate::constitutive::ConstitutiveParams;
use crate::output::fmt17;
use serde::{Deserialize, Serialize};
use std::io::{self, Write};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ShockInputs {
    /// Terminal tension, in `(0, N̄₁)`.
    #[serde(rename = "Nplus")]
    pub n_plus: f64,
    /// Velocity of the elongated segment.
    #[serde(rename = "vplus")]
    pub v_plus: f64,
    pub zeta: f64,
    /// `α_C/α_T`.
    pub ratio: f64,
    pub sigma0: f64,
    pub s0: f64,
    #[serde(rename = "Nbar0")]
    pub nbar0: f64,
    #[serde(rename = "Nbar1")]
    pub nbar1: f64,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ShockError {
    #[error("invalid shock inputs: {0}")]
    InvalidInputs(String),
    #[error(
        "vplus^2 = {v2} outside the open window ({vmin2}, {vmax2}) = \
         (Nplus^2/zeta, Nplus^2/zeta + (ratio+1)*Nplus*Nbar0/zeta + ratio*Nbar0^2/zeta)"
    )]
    WindowViolation { v2: f64, vmin2: f64, vmax2: f64 },
    #[error("left stretch {nu_minus} outside ({nu0}, 1)")]
    StateViolation { nu_minus: f64, nu0: f64 },
    #[error("shock speed denominator vanishes")]
    DivisionDegenerate,
    #[error("front has left (0, 1): t = {t} >= t_exit = {t_exit}")]
    FrontExited { t: f64, t_exit: f64 },
    #[error("motion is not admissible: {reason}")]
    Inadmissible { reason: String },
}

/// `N₋` from the jump condition, the root below `N₊/ratio`.
pub fn left_tension(n_plus: f64, v_plus: f64, zeta: f64, ratio: f64) -> f64 {
    let inv = 1.0 / ratio;
    let half_diff = 0.5 * (1.0 - inv) * n_plus;
    0.5 * (1.0 + inv) * n_plus - (half_diff * half_diff + zeta * v_plus * v_plus * inv).sqrt()
}

/// `(v²_min, v²_max)`: the open range of `v₊²` giving `N₋ ∈ (−N̄₀, 0)`.
pub fn velocity_window(n_plus: f64, zeta: f64, ratio: f64, nbar0: f64) -> (f64, f64) {
    let vmin2 = n_plus * n_plus / zeta;
    let vmax2 = vmin2 + (ratio + 1.0) * n_plus * nbar0 / zeta + ratio * nbar0 * nbar0 / zeta;
    (vmin2, vmax2)
}

/// Front speed `σ′ = v₊ / {½(ratio−1)N₊ − √(¼(ratio−1)²N₊² + ζ·ratio·v₊²)}`.
pub fn shock_speed(n_plus: f64, v_plus: f64, zeta: f64, ratio: f64) -> Result<f64, ShockError> {
    let half = 0.5 * (ratio - 1.0) * n_plus;
    let brace = half - (half * half + zeta * ratio * v_plus * v_plus).sqrt();
    if brace == 0.0 {
        return Err(ShockError::DivisionDegenerate);
    }
    Ok(v_plus / brace)
}

/// `(1/√ζ, 1/√(ratio·ζ))`: characteristic speeds on the tensile and
/// compressive branches.
pub fn characteristic_speeds(zeta: f64, ratio: f64) -> (f64, f64) {
    ((1.0 / zeta).sqrt(), (1.0 / (ratio * zeta)).sqrt())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LaxRegime {
    /// `1/ratio < ζ ≤ ratio`, lower bound on `v₊` only.
    Shock1,
    /// `ζ > ratio`, two-sided window on `v₊`.
    Shock2,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum LaxVerdict {
    Admissible { regime: LaxRegime },
    Inadmissible { reason: String },
}

impl LaxVerdict {
    pub fn is_admissible(&self) -> bool {
        matches!(self, LaxVerdict::Admissible { .. })
    }
}

/// Closed-form parameter conditions for `−1 < σ′ < −1/ratio`.
pub fn lax_conditions(n_plus: f64, v_plus: f64, zeta: f64, ratio: f64) -> LaxVerdict {
    let inadmissible = |reason: &str| LaxVerdict::Inadmissible {
        reason: reason.to_string(),
    };
    if !(v_plus > 0.0) {
        return inadmissible("elongated segment must grow (vplus > 0)");
    }
    if !(zeta * ratio > 1.0) {
        return inadmissible("zeta must exceed 1/ratio");
    }
    let lower = (ratio - 1.0) * n_plus / (zeta * ratio - 1.0);
    if !(lower < v_plus) {
        return inadmissible("vplus at or below the lower bound (ratio-1)*Nplus/(zeta*ratio-1)");
    }
    if zeta <= ratio {
        return LaxVerdict::Admissible {
            regime: LaxRegime::Shock1,
        };
    }
    let upper = (1.0 - 1.0 / ratio) * n_plus / (zeta / ratio - 1.0);
    if v_plus < upper {
        LaxVerdict::Admissible {
            regime: LaxRegime::Shock2,
        }
    } else {
        inadmissible("vplus at or above the upper bound (1-1/ratio)*Nplus/(zeta/ratio-1)")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LaxReport {
    #[serde(flatten)]
    pub verdict: LaxVerdict,
    /// `−1 < σ′ < −1/ratio` evaluated on the computed speed.
    pub direct_interval: bool,
    /// Verdict and direct test agree.
    pub consistent: bool,
    /// `−1/√ζ < σ′ < −1/√(ratio·ζ)`.
    pub characteristic: bool,
}

pub fn lax_check(motion: &ShockMotion) -> LaxReport {
    let inp = &motion.inputs;
    let verdict = lax_conditions(inp.n_plus, inp.v_plus, inp.zeta, inp.ratio);
    let sd = motion.sigma_dot;
    let direct = -1.0 < sd && sd < -1.0 / inp.ratio;
    let (c_plus, c_minus) = characteristic_speeds(inp.zeta, inp.ratio);
    LaxReport {
        consistent: verdict.is_admissible() == direct,
        direct_interval: direct,
        characteristic: -c_plus < sd && sd < -c_minus,
        verdict,
    }
}

impl ShockInputs {
    pub fn validate(&self) -> Result<(), ShockError> {
        let fields = [
            self.n_plus,
            self.v_plus,
            self.zeta,
            self.ratio,
            self.sigma0,
            self.s0,
            self.nbar0,
            self.nbar1,
        ];
        let mut problems = Vec::new();
        if fields.iter().any(|x| !x.is_finite()) {
            problems.push("all inputs must be finite".to_string());
        }
        if !(self.n_plus > 0.0 && self.n_plus < self.nbar1) {
            problems.push(format!(
                "Nplus = {} not in (0, Nbar1 = {})",
                self.n_plus, self.nbar1
            ));
        }
        if self.v_plus == 0.0 {
            problems.push("vplus must be non-zero".into());
        }
        if !(self.zeta > 0.0) {
            problems.push(format!("zeta = {} must be positive", self.zeta));
        }
        if !(self.ratio > 1.0) {
            problems.push(format!("ratio = {} must exceed 1", self.ratio));
        }
        if !(self.nbar0 > 0.0 && self.ratio * self.nbar0 < 1.0) {
            problems.push(format!(
                "Nbar0 = {} must satisfy 0 < ratio*Nbar0 < 1",
                self.nbar0
            ));
        }
        for (name, v) in [("sigma0", self.sigma0), ("s0", self.s0)] {
            if !(v > 0.0 && v < 1.0) {
                problems.push(format!("{name} = {v} not in (0, 1)"));
            }
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(ShockError::InvalidInputs(problems.join("; ")))
        }
    }

    pub fn law(&self) -> ConstitutiveParams {
        ConstitutiveParams::dimensionless(self.nbar0, self.nbar1, self.ratio)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ShockMotion {
    #[serde(flatten)]
    pub inputs: ShockInputs,
    #[serde(rename = "Nminus")]
    pub n_minus: f64,
    pub nu_minus: f64,
    pub nu_plus: f64,
    pub sigma_dot: f64,
    /// `σ(0)`.
    pub sigma_start: f64,
    pub t_exit: f64,
    pub vmin2: f64,
    pub vmax2: f64,
    pub lax: LaxReport,
}

/// Fields of the motion at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShockPoint {
    pub chi: f64,
    pub stretch: f64,
    pub tension: f64,
    pub velocity: f64,
}

impl ShockMotion {
    /// Builds the motion and attaches the admissibility verdict without
    /// acting on it.
    pub fn build(inputs: ShockInputs) -> Result<Self, ShockError> {
        inputs.validate()?;
        let ShockInputs {
            n_plus,
            v_plus,
            zeta,
            ratio,
            ..
        } = inputs;
        let (vmin2, vmax2) = velocity_window(n_plus, zeta, ratio, inputs.nbar0);
        let v2 = v_plus * v_plus;
        if !(vmin2 < v2 && v2 < vmax2) {
            return Err(ShockError::WindowViolation { v2, vmin2, vmax2 });
        }
        let n_minus = left_tension(n_plus, v_plus, zeta, ratio);
        let law = inputs.law();
        let nu_minus = ratio * n_minus + 1.0;
        let nu_plus = n_plus + 1.0;
        if !(nu_minus > law.nu0 && nu_minus < 1.0) {
            return Err(ShockError::StateViolation {
                nu_minus,
                nu0: law.nu0,
            });
        }
        let sigma_dot = shock_speed(n_plus, v_plus, zeta, ratio)?;
        let sigma_start = (nu_plus * inputs.s0 - inputs.sigma0) / (nu_plus - nu_minus);
        if !(sigma_start > 0.0 && sigma_start < 1.0) {
            return Err(ShockError::InvalidInputs(format!(
                "initial front sigma(0) = {sigma_start} not in (0, 1)"
            )));
        }
        let t_exit = if sigma_dot < 0.0 {
            sigma_start / -sigma_dot
        } else {
            (1.0 - sigma_start) / sigma_dot
        };
        let mut motion = ShockMotion {
            inputs,
            n_minus,
            nu_minus,
            nu_plus,
            sigma_dot,
            sigma_start,
            t_exit,
            vmin2,
            vmax2,
            lax: LaxReport {
                verdict: LaxVerdict::Inadmissible {
                    reason: String::new(),
                },
                direct_interval: false,
                consistent: false,
                characteristic: false,
            },
        };
        motion.lax = lax_check(&motion);
        if !motion.lax.consistent {
            log::warn!(
                "closed-form admissibility disagrees with the direct interval test (sigma' = {})",
                sigma_dot
            );
        }
        Ok(motion)
    }

    /// [`ShockMotion::build`], rejecting inadmissible motions.
    pub fn build_strict(inputs: ShockInputs) -> Result<Self, ShockError> {
        let motion = Self::build(inputs)?;
        match &motion.lax.verdict {
            LaxVerdict::Admissible { .. } => Ok(motion),
            LaxVerdict::Inadmissible { reason } => Err(ShockError::Inadmissible {
                reason: reason.clone(),
            }),
        }
    }

    /// Front position from continuity of `χ`.
    pub fn sigma(&self, t: f64) -> f64 {
        let inp = &self.inputs;
        (self.nu_plus * inp.s0 - inp.v_plus * t - inp.sigma0) / (self.nu_plus - self.nu_minus)
    }

    /// `−v₊/(ν₊ − ν₋)`, the slope of [`ShockMotion::sigma`].
    pub fn continuity_speed(&self) -> f64 {
        -self.inputs.v_plus / (self.nu_plus - self.nu_minus)
    }

    pub fn evaluate(&self, s: f64, t: f64) -> Result<ShockPoint, ShockError> {
        if !(0.0..=1.0).contains(&s) || !(t >= 0.0) {
            return Err(ShockError::InvalidInputs(format!(
                "evaluation point (s = {s}, t = {t}) outside [0, 1] x [0, t_exit)"
            )));
        }
        if t >= self.t_exit {
            return Err(ShockError::FrontExited {
                t,
                t_exit: self.t_exit,
            });
        }
        let inp = &self.inputs;
        if s <= self.sigma(t) {
            Ok(ShockPoint {
                chi: self.nu_minus * s,
                stretch: self.nu_minus,
                tension: self.n_minus,
                velocity: 0.0,
            })
        } else {
            Ok(ShockPoint {
                chi: self.nu_plus * (s - inp.s0) + inp.v_plus * t + inp.sigma0,
                stretch: self.nu_plus,
                tension: inp.n_plus,
                velocity: inp.v_plus,
            })
        }
    }

    /// `(t_k, σ(t_k))` for `t_k = k·t_exit/n`, `k = 0..n−1`.
    pub fn trajectory(&self, n: usize) -> Vec<(f64, f64)> {
        let n = n.max(1);
        (0..n)
            .map(|k| {
                let t = k as f64 * self.t_exit / n as f64;
                (t, self.sigma(t))
            })
            .collect()
    }

    pub fn write_trajectory_csv<W: Write>(&self, n: usize, mut out: W) -> io::Result<()> {
        writeln!(out, "t,sigma")?;
        for (t, sigma) in self.trajectory(n) {
            writeln!(out, "{},{}", fmt17(t), fmt17(sigma))?;
        }
        Ok(())
    }
}

/// `⟦N⟧ + ζ·σ′·⟦χ_t⟧`, jumps taken right minus left.
pub fn rh_residual(motion: &ShockMotion) -> f64 {
    let inp = &motion.inputs;
    (inp.n_plus - motion.n_minus) + inp.zeta * motion.sigma_dot * inp.v_plus
}
