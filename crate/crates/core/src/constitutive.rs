//! Piecewise-linear, stretch-limited stretch–tension law.
//!
//! The stretch is a bounded function of the tension:
//!
//! ```text
//!            ⎧ ν₁          N > N₁           (extension limit)
//! ν̂(N) = 1 + ⎨ α_T·N       0 ≤ N ≤ N₁       (tensile linear)
//!            ⎪ α_C·N      −N₀ ≤ N < 0       (compressive linear)
//!            ⎩ ν₀          N < −N₀          (compression limit)
//! ```
//!
//! The limit branches are written as `ν₁`/`ν₀` directly. The tension is not a
//! function of the stretch: on the flat branches a whole half-line of tensions
//! maps to the same stretch, so [`ConstitutiveParams::tension_from_stretch`]
//! only inverts the open extensible range `(ν₀, ν₁)`.
//!
//! The dimensionless form uses the same type with `dimensionless = true`:
//! tensions are `N̄ = α_T·N`, the tensile slope is `1` and the compressive
//! slope is `α_C/α_T`. See [`crate::scaling`] for the conversion.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// Absolute tolerance used for the continuity identities `ν₁ − 1 = α_T·N₁`
/// and `1 − ν₀ = α_C·N₀`.
pub const CONTINUITY_TOL: f64 = 1e-12;

/// Material constants of the stretch-limited law.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConstitutiveParams {
    /// Compression limit stretch, `0 < ν₀ < 1`.
    pub nu0: f64,
    /// Extension limit stretch, `ν₁ > 1`.
    pub nu1: f64,
    /// Magnitude of the compressive threshold tension.
    #[serde(rename = "N0")]
    pub n0: f64,
    /// Tensile threshold tension.
    #[serde(rename = "N1")]
    pub n1: f64,
    /// Tensile compliance (stretch per unit tension).
    #[serde(rename = "alphaT")]
    pub alpha_t: f64,
    /// Compressive compliance.
    #[serde(rename = "alphaC")]
    pub alpha_c: f64,
    /// When set, tensions are the scaled variables and `alpha_t == 1`.
    pub dimensionless: bool,
}

/// Branch of the law that contains a given tension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regime {
    CompressionLimit,
    CompressiveLinear,
    TensileLinear,
    ExtensionLimit,
}

impl Regime {
    pub fn label(self) -> &'static str {
        match self {
            Regime::CompressionLimit => "compression_limit",
            Regime::CompressiveLinear => "compressive_linear",
            Regime::TensileLinear => "tensile_linear",
            Regime::ExtensionLimit => "extension_limit",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A single violated parameter constraint, carrying the offending values.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "constraint", rename_all = "snake_case")]
pub enum Violation {
    /// `0 < ν₀ < 1 < ν₁` does not hold.
    StretchLimits { nu0: f64, nu1: f64 },
    /// A compliance is not strictly positive.
    NonPositiveCompliance { alpha_t: f64, alpha_c: f64 },
    /// `α_T < α_C` does not hold.
    ComplianceOrdering { alpha_t: f64, alpha_c: f64 },
    /// A threshold tension is not strictly positive.
    NonPositiveThreshold { n0: f64, n1: f64 },
    /// `ν₁ − 1 ≠ α_T·N₁`.
    TensileContinuity { nu1_minus_one: f64, alpha_t_n1: f64 },
    /// `1 − ν₀ ≠ α_C·N₀`.
    CompressiveContinuity { one_minus_nu0: f64, alpha_c_n0: f64 },
    /// Dimensionless parameters must have unit tensile slope.
    DimensionlessSlope { alpha_t: f64 },
    /// Some field is NaN or infinite.
    NonFinite,
}

impl Violation {
    pub fn is_continuity(&self) -> bool {
        matches!(
            self,
            Violation::TensileContinuity { .. } | Violation::CompressiveContinuity { .. }
        )
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::StretchLimits { nu0, nu1 } => {
                write!(f, "0 < nu0 < 1 < nu1 violated (nu0 = {nu0}, nu1 = {nu1})")
            }
            Violation::NonPositiveCompliance { alpha_t, alpha_c } => write!(
                f,
                "compliances must be positive (alphaT = {alpha_t}, alphaC = {alpha_c})"
            ),
            Violation::ComplianceOrdering { alpha_t, alpha_c } => write!(
                f,
                "alphaT < alphaC violated (alphaT = {alpha_t}, alphaC = {alpha_c})"
            ),
            Violation::NonPositiveThreshold { n0, n1 } => {
                write!(f, "thresholds must be positive (N0 = {n0}, N1 = {n1})")
            }
            Violation::TensileContinuity {
                nu1_minus_one,
                alpha_t_n1,
            } => write!(
                f,
                "continuity nu1 - 1 = alphaT*N1 violated ({nu1_minus_one} != {alpha_t_n1})"
            ),
            Violation::CompressiveContinuity {
                one_minus_nu0,
                alpha_c_n0,
            } => write!(
                f,
                "continuity 1 - nu0 = alphaC*N0 violated ({one_minus_nu0} != {alpha_c_n0})"
            ),
            Violation::DimensionlessSlope { alpha_t } => {
                write!(f, "dimensionless law requires alphaT = 1 (got {alpha_t})")
            }
            Violation::NonFinite => f.write_str("parameters must be finite"),
        }
    }
}

/// Every constraint a parameter set fails.
#[derive(Debug, Clone, PartialEq, Error, Serialize)]
#[error("invalid constitutive parameters: {}", join(.violations))]
pub struct ValidationError {
    pub violations: Vec<Violation>,
}

fn join(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum InverseError {
    /// The stretch lies on a flat branch (or outside the range), where the law
    /// is not invertible.
    #[error("stretch {nu} is not in the invertible range ({nu0}, {nu1})")]
    NotInvertible { nu: f64, nu0: f64, nu1: f64 },
}

impl ConstitutiveParams {
    /// Continuous law built from the two thresholds and compliances; the
    /// limit stretches follow from continuity.
    pub fn continuous(n0: f64, n1: f64, alpha_t: f64, alpha_c: f64) -> Self {
        Self {
            nu0: 1.0 - alpha_c * n0,
            nu1: 1.0 + alpha_t * n1,
            n0,
            n1,
            alpha_t,
            alpha_c,
            dimensionless: false,
        }
    }

    /// Dimensionless law with scaled thresholds `N̄₀`, `N̄₁` and modulus ratio
    /// `α_C/α_T`.
    pub fn dimensionless(nbar0: f64, nbar1: f64, ratio: f64) -> Self {
        Self {
            nu0: 1.0 - ratio * nbar0,
            nu1: 1.0 + nbar1,
            n0: nbar0,
            n1: nbar1,
            alpha_t: 1.0,
            alpha_c: ratio,
            dimensionless: true,
        }
    }

    /// Ratio of compressive to tensile compliance.
    pub fn ratio(&self) -> f64 {
        self.alpha_c / self.alpha_t
    }

    fn violations(&self) -> Vec<Violation> {
        let fields = [
            self.nu0,
            self.nu1,
            self.n0,
            self.n1,
            self.alpha_t,
            self.alpha_c,
        ];
        if fields.iter().any(|x| !x.is_finite()) {
            return vec![Violation::NonFinite];
        }
        let mut out = Vec::new();
        if !(0.0 < self.nu0 && self.nu0 < 1.0 && 1.0 < self.nu1) {
            out.push(Violation::StretchLimits {
                nu0: self.nu0,
                nu1: self.nu1,
            });
        }
        if !(self.alpha_t > 0.0 && self.alpha_c > 0.0) {
            out.push(Violation::NonPositiveCompliance {
                alpha_t: self.alpha_t,
                alpha_c: self.alpha_c,
            });
        }
        if self.alpha_t >= self.alpha_c {
            out.push(Violation::ComplianceOrdering {
                alpha_t: self.alpha_t,
                alpha_c: self.alpha_c,
            });
        }
        if !(self.n0 > 0.0 && self.n1 > 0.0) {
            out.push(Violation::NonPositiveThreshold {
                n0: self.n0,
                n1: self.n1,
            });
        }
        if self.dimensionless && self.alpha_t != 1.0 {
            out.push(Violation::DimensionlessSlope {
                alpha_t: self.alpha_t,
            });
        }
        let (nu1_minus_one, alpha_t_n1) = (self.nu1 - 1.0, self.alpha_t * self.n1);
        if (nu1_minus_one - alpha_t_n1).abs() > CONTINUITY_TOL {
            out.push(Violation::TensileContinuity {
                nu1_minus_one,
                alpha_t_n1,
            });
        }
        let (one_minus_nu0, alpha_c_n0) = (1.0 - self.nu0, self.alpha_c * self.n0);
        if (one_minus_nu0 - alpha_c_n0).abs() > CONTINUITY_TOL {
            out.push(Violation::CompressiveContinuity {
                one_minus_nu0,
                alpha_c_n0,
            });
        }
        out
    }

    /// Checks every invariant, continuity included.
    pub fn validate(&self) -> Result<(), ValidationError> {
        let violations = self.violations();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(ValidationError { violations })
        }
    }

    /// Like [`validate`](Self::validate), but continuity violations are only
    /// logged and returned as warnings.
    pub fn validate_relaxed(&self) -> Result<Vec<Violation>, ValidationError> {
        let (warnings, errors): (Vec<_>, Vec<_>) = self
            .violations()
            .into_iter()
            .partition(Violation::is_continuity);
        for w in &warnings {
            log::warn!("{w}");
        }
        if errors.is_empty() {
            Ok(warnings)
        } else {
            Err(ValidationError { violations: errors })
        }
    }

    /// Branch containing `n`. `N = 0` and `N = N₁` are tensile-linear,
    /// `N = −N₀` is compressive-linear.
    pub fn regime(&self, n: f64) -> Regime {
        if n > self.n1 {
            Regime::ExtensionLimit
        } else if n >= 0.0 {
            Regime::TensileLinear
        } else if n >= -self.n0 {
            Regime::CompressiveLinear
        } else {
            Regime::CompressionLimit
        }
    }

    /// Stretch at tension `n`.
    pub fn nu_hat(&self, n: f64) -> f64 {
        match self.regime(n) {
            Regime::ExtensionLimit => self.nu1,
            Regime::TensileLinear => 1.0 + self.alpha_t * n,
            Regime::CompressiveLinear => 1.0 + self.alpha_c * n,
            Regime::CompressionLimit => self.nu0,
        }
    }

    /// `dν̂/dN`, taking the one-sided value of the branch that owns `n`.
    pub fn tangent_compliance(&self, n: f64) -> f64 {
        match self.regime(n) {
            Regime::TensileLinear => self.alpha_t,
            Regime::CompressiveLinear => self.alpha_c,
            Regime::ExtensionLimit | Regime::CompressionLimit => 0.0,
        }
    }

    /// Inverse of [`nu_hat`](Self::nu_hat) on the open range `(ν₀, ν₁)`.
    pub fn tension_from_stretch(&self, nu: f64) -> Result<f64, InverseError> {
        if !(nu > self.nu0 && nu < self.nu1) {
            return Err(InverseError::NotInvertible {
                nu,
                nu0: self.nu0,
                nu1: self.nu1,
            });
        }
        if nu >= 1.0 {
            Ok((nu - 1.0) / self.alpha_t)
        } else {
            Ok((nu - 1.0) / self.alpha_c)
        }
    }
}
