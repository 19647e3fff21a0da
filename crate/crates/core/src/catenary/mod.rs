//! Static catenaries of a stretch-limited string under gravity.
//!
//! In dimensionless variables the string occupies `s ∈ [0, 1]`, is pinned at
//! `r(0) = 0` and `r(1) = endpoint`, and carries the body force `f = −ζ·e₂`.
//! Static balance `n_s = −f` integrates to `n(s) = n₀ + ζ·s·e₂`, and for a
//! tensile string `r_s = ν̂(|n|)·n/|n|`. Two regime layouts are solved:
//!
//! * [`CatenaryCase::FullyExtensible`]: `0 ≤ N(s) ≤ N̄₁` everywhere; the three
//!   components of `n₀` are fixed by `r(1) = endpoint`.
//! * [`CatenaryCase::TwoLimitSegments`]: `N > N̄₁` on `[0, s̃]` and
//!   `[1 − s̆, 1]`, extensible in between; eleven unknowns fixed by position
//!   continuity at both junctions, the far boundary condition, and
//!   `N = N̄₁` at the junctions.
//!
//! Every closed form is checked against [`quadrature_position`], which
//! integrates the full law directly.
//!
//! There is no continuation framework. For hard parameters, step `ζ` in a
//! few increments and pass each converged solution as the next guess
//! ([`CatenarySolution::n0`] for case 1, [`CatenarySolution::unknowns`] for
//! case 2).

mod closed_form;
mod quadrature;
mod solve;

pub use closed_form::{ell, position_case1, EllCVariant};
pub use quadrature::{integrate, quadrature_position, quadrature_segment, QUADRATURE_TOL};
pub use solve::{
    default_guess_case1, default_guess_case2, position_case2, residual_case1, residual_case2,
    solve_case1, solve_case2, solve_case2_with, Case2Residual, UNKNOWN_NAMES,
};

use crate::constitutive::ConstitutiveParams;
use crate::rootfind::RootfindError;
use crate::scaling::DimensionlessGroup;
use crate::Vec3;
use serde::{Deserialize, Serialize};
use std::io::{self, Write};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CatenaryCase {
    FullyExtensible,
    TwoLimitSegments,
}

impl CatenaryCase {
    pub fn tag(self) -> &'static str {
        match self {
            CatenaryCase::FullyExtensible => "fully_extensible",
            CatenaryCase::TwoLimitSegments => "two_limit_segments",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CatenaryProblem {
    pub group: DimensionlessGroup,
    pub case: CatenaryCase,
    /// Scaled position of the far support, `e₁` in the standard frame.
    pub endpoint: Vec3,
}

impl CatenaryProblem {
    pub fn new(group: DimensionlessGroup, case: CatenaryCase) -> Self {
        Self {
            group,
            case,
            endpoint: Vec3::x(),
        }
    }

    pub fn zeta(&self) -> f64 {
        self.group.zeta
    }

    pub fn law(&self) -> ConstitutiveParams {
        self.group.law()
    }

    pub fn validate(&self) -> Result<(), CatenaryError> {
        self.group
            .validate()
            .map_err(|e| CatenaryError::InvalidProblem(e.to_string()))?;
        if !self.endpoint.iter().all(|v| v.is_finite()) || self.endpoint.norm() == 0.0 {
            return Err(CatenaryError::InvalidProblem(
                "endpoint must be finite and non-zero".into(),
            ));
        }
        Ok(())
    }
}

/// Junction data of a two-limit-segment solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitSegments {
    /// End of the first inextensible segment.
    pub stilde: f64,
    /// Length of the last inextensible segment, which starts at `1 − s̆`.
    pub sbreve: f64,
    /// Position offset of the middle segment, `r(s̃)`.
    pub r0: Vec3,
    /// Position offset of the last segment, `r(1 − s̆)`.
    pub rhat0: Vec3,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CatenarySolution {
    pub case: CatenaryCase,
    pub zeta: f64,
    pub law: ConstitutiveParams,
    pub endpoint: Vec3,
    /// Contact force at `s = 0`.
    pub n0: Vec3,
    /// Present exactly for [`CatenaryCase::TwoLimitSegments`].
    pub segments: Option<LimitSegments>,
    pub residual_norm: f64,
    pub iters: usize,
}

/// Serializable summary: case tag, unknowns in the documented order, and
/// the final residual.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub case: CatenaryCase,
    pub unknown_names: Vec<String>,
    pub unknowns: Vec<f64>,
    pub residual_norm: f64,
    pub iters: usize,
    pub zeta: f64,
    #[serde(rename = "Nbar1")]
    pub nbar1: f64,
    pub endpoint: [f64; 3],
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CatenaryError {
    #[error("invalid catenary problem: {0}")]
    InvalidProblem(String),
    #[error("logarithm argument is not positive at s = {s}")]
    DegenerateLog { s: f64 },
    #[error("solver failed: {0}")]
    Solver(#[from] RootfindError),
    #[error("solution leaves the assumed regime on {intervals:?}: {detail}")]
    RegimeViolation {
        solution: Box<CatenarySolution>,
        intervals: Vec<(f64, f64)>,
        detail: String,
    },
    #[error("junction ordering 0 < s̃ < 1 − s̆ < 1 violated (s̃ = {stilde}, s̆ = {sbreve})")]
    OrderingViolation { stilde: f64, sbreve: f64 },
    #[error("quadrature did not reach tolerance at s = {s} (error estimate {error_estimate:.3e})")]
    QuadratureFailure { s: f64, error_estimate: f64 },
    #[error("operation expects a {expected:?} solution")]
    WrongCase { expected: CatenaryCase },
}

/// `n(s) = n₀ + s·ζ·e₂`.
pub fn tension_vector(s: f64, n0: Vec3, zeta: f64) -> Vec3 {
    n0 + Vec3::new(0.0, s * zeta, 0.0)
}

impl CatenarySolution {
    pub fn tension_vector(&self, s: f64) -> Vec3 {
        tension_vector(s, self.n0, self.zeta)
    }

    /// `N(s) = |n(s)|` (the string is tensile throughout).
    pub fn tension(&self, s: f64) -> f64 {
        self.tension_vector(s).norm()
    }

    pub fn stretch(&self, s: f64) -> f64 {
        self.law.nu_hat(self.tension(s))
    }

    pub fn position(&self, s: f64) -> Result<Vec3, CatenaryError> {
        match &self.segments {
            None => position_case1(s, self.n0, self.zeta),
            Some(seg) => closed_form::position_two_limit(
                s,
                self.n0,
                self.zeta,
                self.law.nu1,
                seg,
                EllCVariant::Corrected,
            ),
        }
    }

    /// Position on a two-limit-segment solution with a chosen `ℓ_C` form.
    pub fn position_case2(&self, s: f64, variant: EllCVariant) -> Result<Vec3, CatenaryError> {
        let seg = self.segments.as_ref().ok_or(CatenaryError::WrongCase {
            expected: CatenaryCase::TwoLimitSegments,
        })?;
        closed_form::position_two_limit(s, self.n0, self.zeta, self.law.nu1, seg, variant)
    }

    /// Reference-position oracle for this solution's `n₀`.
    pub fn quadrature_position(&self, s: f64) -> Result<Vec3, CatenaryError> {
        quadrature_position(s, self.n0, self.zeta, &self.law)
    }

    /// Unknowns in the documented order: `n₀` for case 1, or
    /// `(s̃, s̆, r₀, r̂₀, n₀)` for case 2.
    pub fn unknowns(&self) -> Vec<f64> {
        match &self.segments {
            None => self.n0.iter().copied().collect(),
            Some(seg) => {
                let mut x = vec![seg.stilde, seg.sbreve];
                x.extend(seg.r0.iter());
                x.extend(seg.rhat0.iter());
                x.extend(self.n0.iter());
                x
            }
        }
    }

    pub fn record(&self) -> SolutionRecord {
        let names: &[&str] = match self.case {
            CatenaryCase::FullyExtensible => &UNKNOWN_NAMES[8..],
            CatenaryCase::TwoLimitSegments => &UNKNOWN_NAMES,
        };
        SolutionRecord {
            case: self.case,
            unknown_names: names.iter().map(|s| s.to_string()).collect(),
            unknowns: self.unknowns(),
            residual_norm: self.residual_norm,
            iters: self.iters,
            zeta: self.zeta,
            nbar1: self.law.n1,
            endpoint: [self.endpoint.x, self.endpoint.y, self.endpoint.z],
        }
    }

    /// `n + 1` evenly spaced samples, plus the junctions of a two-limit
    /// solution as extra knots.
    pub fn sample(&self, n: usize) -> Result<Polyline, CatenaryError> {
        let n = n.max(1);
        let mut knots: Vec<f64> = (0..=n).map(|i| i as f64 / n as f64).collect();
        if let Some(seg) = &self.segments {
            knots.push(seg.stilde);
            knots.push(1.0 - seg.sbreve);
            knots.sort_by(f64::total_cmp);
            knots.dedup();
        }
        let samples = knots
            .into_iter()
            .map(|s| {
                let tension = self.tension(s);
                Ok(Sample {
                    s,
                    r: self.position(s)?,
                    tension,
                    nu: self.law.nu_hat(tension),
                })
            })
            .collect::<Result<_, CatenaryError>>()?;
        Ok(Polyline { samples })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub s: f64,
    pub r: Vec3,
    pub tension: f64,
    pub nu: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    pub samples: Vec<Sample>,
}

impl Polyline {
    pub const CSV_HEADER: &'static str = "s,r1,r2,r3,N,nu";

    /// Sum of chord lengths.
    pub fn arc_length(&self) -> f64 {
        self.samples
            .windows(2)
            .map(|w| (w[1].r - w[0].r).norm())
            .sum()
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        use crate::output::fmt17;
        writeln!(out, "{}", Self::CSV_HEADER)?;
        for p in &self.samples {
            writeln!(
                out,
                "{},{},{},{},{},{}",
                fmt17(p.s),
                fmt17(p.r.x),
                fmt17(p.r.y),
                fmt17(p.r.z),
                fmt17(p.tension),
                fmt17(p.nu)
            )?;
        }
        Ok(())
    }
}
