//! Dimensional ↔ dimensionless conversions.
//!
//! With reference length `L`, gravity `g`, and mass per reference length
//! `ρA`, the scaled variables are
//!
//! ```text
//! s̄ = s/L   t̄ = √(g/L)·t   r̄ = r/L   N̄ = α_T·N   n̄ = α_T·n   f̄ = L·α_T·f
//! ζ = ρA·g·L·α_T
//! ```

use crate::constitutive::ConstitutiveParams;
use crate::Vec3;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalSetup {
    /// Reference (unstretched) length.
    #[serde(rename = "L")]
    pub length: f64,
    /// Gravitational acceleration.
    pub g: f64,
    /// Mass per unit reference length.
    #[serde(rename = "rhoA")]
    pub rho_a: f64,
}

/// Dimensionless groups that fully determine the scaled problem.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DimensionlessGroup {
    pub zeta: f64,
    #[serde(rename = "Nbar0")]
    pub nbar0: f64,
    #[serde(rename = "Nbar1")]
    pub nbar1: f64,
    /// `α_C/α_T`.
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScalingError {
    #[error("physical setup must be strictly positive (L = {length}, g = {g}, rhoA = {rho_a})")]
    InvalidSetup { length: f64, g: f64, rho_a: f64 },
    #[error("dimensional parameters expected, got a dimensionless law")]
    AlreadyDimensionless,
    #[error(
        "invalid dimensionless group (zeta = {zeta}, Nbar0 = {nbar0}, Nbar1 = {nbar1}, ratio = {ratio})"
    )]
    InvalidGroup {
        zeta: f64,
        nbar0: f64,
        nbar1: f64,
        ratio: f64,
    },
    #[error(transparent)]
    Params(#[from] crate::constitutive::ValidationError),
}

impl PhysicalSetup {
    pub fn validate(&self) -> Result<(), ScalingError> {
        let ok = [self.length, self.g, self.rho_a]
            .iter()
            .all(|x| x.is_finite() && *x > 0.0);
        if ok {
            Ok(())
        } else {
            Err(ScalingError::InvalidSetup {
                length: self.length,
                g: self.g,
                rho_a: self.rho_a,
            })
        }
    }

    /// `√(L/g)`, the time unit of the scaled equations.
    pub fn time_scale(&self) -> f64 {
        (self.length / self.g).sqrt()
    }

    pub fn nondimensionalize_position(&self, r: Vec3) -> Vec3 {
        r / self.length
    }

    pub fn redimensionalize_position(&self, rbar: Vec3) -> Vec3 {
        rbar * self.length
    }

    pub fn nondimensionalize_time(&self, t: f64) -> f64 {
        t / self.time_scale()
    }

    pub fn redimensionalize_time(&self, tbar: f64) -> f64 {
        tbar * self.time_scale()
    }

    /// Body force per unit reference length, `f̄ = L·α_T·f`.
    pub fn nondimensionalize_body_force(&self, f: Vec3, params: &ConstitutiveParams) -> Vec3 {
        f * (self.length * params.alpha_t)
    }
}

impl DimensionlessGroup {
    pub fn validate(&self) -> Result<(), ScalingError> {
        let ok = self.zeta.is_finite()
            && self.zeta > 0.0
            && self.nbar0.is_finite()
            && self.nbar0 > 0.0
            && self.nbar1.is_finite()
            && self.nbar1 > 0.0
            && self.ratio.is_finite()
            && self.ratio > 1.0
            && self.ratio * self.nbar0 < 1.0;
        if ok {
            Ok(())
        } else {
            Err(ScalingError::InvalidGroup {
                zeta: self.zeta,
                nbar0: self.nbar0,
                nbar1: self.nbar1,
                ratio: self.ratio,
            })
        }
    }

    /// The scaled law: tensile slope 1, compressive slope `ratio`.
    pub fn law(&self) -> ConstitutiveParams {
        ConstitutiveParams::dimensionless(self.nbar0, self.nbar1, self.ratio)
    }
}

/// Scaled groups of a dimensional setup and (validated, dimensional) law.
pub fn nondimensionalize(
    setup: &PhysicalSetup,
    params: &ConstitutiveParams,
) -> Result<DimensionlessGroup, ScalingError> {
    setup.validate()?;
    if params.dimensionless {
        return Err(ScalingError::AlreadyDimensionless);
    }
    params.validate_relaxed()?;
    Ok(DimensionlessGroup {
        zeta: setup.rho_a * setup.g * setup.length * params.alpha_t,
        nbar0: params.alpha_t * params.n0,
        nbar1: params.alpha_t * params.n1,
        ratio: params.alpha_c / params.alpha_t,
    })
}

pub fn nondimensionalize_tension(n: f64, params: &ConstitutiveParams) -> f64 {
    n * params.alpha_t
}

pub fn redimensionalize_tension(nbar: f64, params: &ConstitutiveParams) -> f64 {
    nbar / params.alpha_t
}
