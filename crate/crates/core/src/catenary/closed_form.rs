//! Closed-form catenary segments under gravity `f = −ζ·e₂`.
//!
//! Along the string the contact force is `n(s) = n₀ + ζ·s·e₂`, so with
//! `a(s) = n₀,₂ + ζ·s` and `b² = n₀,₁² + n₀,₃²` every segment integral
//! reduces to two primitives:
//!
//! ```text
//! ∫ dξ/|n|   = (1/ζ)·ln(a + √(a² + b²))
//! ∫ a dξ/|n| = (1/ζ)·√(a² + b²)
//! ```
//!
//! Both are evaluated as differences between two reference coordinates in a
//! cancellation-free form, so the formulas stay accurate for tiny `ζ` and for
//! strongly negative `a`.

use super::{CatenaryError, LimitSegments};
use crate::Vec3;

/// How the logarithm of the last inextensible segment is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EllCVariant {
    /// `ln[(a(s) + |n(s)|) / (a(1−s̆) + |n(1−s̆)|)]`, the primitive evaluated
    /// between the segment's two endpoints.
    #[default]
    Corrected,
    /// `ln[(a(s) + |n(s)|) / (a(s) + |n(1−s̆)|)]`, with `a(s)` in both
    /// numerator and denominator. Kept for comparison against quadrature.
    AsPrinted,
}

/// Force geometry shared by every segment.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Gravity {
    pub n0: Vec3,
    pub zeta: f64,
    b2: f64,
}

impl Gravity {
    pub fn new(n0: Vec3, zeta: f64) -> Self {
        Self {
            n0,
            zeta,
            b2: n0.x * n0.x + n0.z * n0.z,
        }
    }

    fn a(&self, s: f64) -> f64 {
        self.n0.y + self.zeta * s
    }

    fn norm(&self, s: f64) -> f64 {
        let a = self.a(s);
        (a * a + self.b2).sqrt()
    }

    /// `a + √(a² + b²)` without cancellation for negative `a`.
    fn lift(&self, a: f64) -> f64 {
        let root = (a * a + self.b2).sqrt();
        if a >= 0.0 {
            a + root
        } else {
            self.b2 / (root - a)
        }
    }

    /// `ln[lift(a(s1)) / lift(a(s0))]`, i.e. `ζ·∫_{s0}^{s1} dξ/|n|`.
    pub fn log_ratio(&self, s1: f64, s0: f64) -> Result<f64, CatenaryError> {
        let (a1, a0) = (self.a(s1), self.a(s0));
        if !(a1 + a0).is_finite() || !self.b2.is_finite() {
            return Err(CatenaryError::DegenerateLog { s: s1 });
        }
        let out = if a1 + a0 >= 0.0 {
            let l0 = self.lift(a0);
            let (m1, m0) = (self.norm(s1), self.norm(s0));
            if !(l0 > 0.0) || !(m1 + m0 > 0.0) {
                return Err(CatenaryError::DegenerateLog { s: s1 });
            }
            let dlift = (a1 - a0) * (1.0 + (a1 + a0) / (m1 + m0));
            (dlift / l0).ln_1p()
        } else {
            // lift(a)·lift(−a) = b², so the ratio flips under a → −a
            Gravity {
                n0: Vec3::new(self.n0.x, -self.n0.y, self.n0.z),
                zeta: -self.zeta,
                b2: self.b2,
            }
            .log_ratio(s1, s0)
            .map(|v| -v)?
        };
        if out.is_finite() {
            Ok(out)
        } else {
            Err(CatenaryError::DegenerateLog { s: s1 })
        }
    }

    /// `(|n(s1)| − |n(s0)|)/ζ`.
    pub fn norm_diff_over_zeta(&self, s1: f64, s0: f64) -> f64 {
        let denom = self.norm(s1) + self.norm(s0);
        if denom == 0.0 {
            return 0.0;
        }
        (s1 - s0) * (self.a(s1) + self.a(s0)) / denom
    }

    /// `∫_{s0}^{s1} (n₀,₂ + ζξ) dξ`.
    fn linear_integral(&self, s1: f64, s0: f64) -> f64 {
        0.5 * (s1 - s0) * (2.0 * self.n0.y + self.zeta * (s1 + s0))
    }

    /// `∫_{s0}^{s1} (1 + 1/|n|)·n dξ`: tensile-linear branch.
    pub fn extensible(&self, s1: f64, s0: f64) -> Result<Vec3, CatenaryError> {
        let ell = (s1 - s0) + self.log_ratio(s1, s0)? / self.zeta;
        let r2 = self.norm_diff_over_zeta(s1, s0) + self.linear_integral(s1, s0);
        Ok(Vec3::new(self.n0.x * ell, r2, self.n0.z * ell))
    }

    /// `∫_{s0}^{s1} ν₁·n/|n| dξ`: extension-limit branch.
    pub fn inextensible(&self, s1: f64, s0: f64, nu1: f64) -> Result<Vec3, CatenaryError> {
        let ell = nu1 * self.log_ratio(s1, s0)? / self.zeta;
        let r2 = nu1 * self.norm_diff_over_zeta(s1, s0);
        Ok(Vec3::new(self.n0.x * ell, r2, self.n0.z * ell))
    }

    /// Last-segment position offset with the printed `ℓ_C` logarithm.
    fn inextensible_as_printed(
        &self,
        s: f64,
        s_right: f64,
        nu1: f64,
    ) -> Result<Vec3, CatenaryError> {
        let a = self.a(s);
        let num = a + self.norm(s);
        let den = a + self.norm(s_right);
        if !(num > 0.0 && den > 0.0) {
            return Err(CatenaryError::DegenerateLog { s });
        }
        let ell = nu1 / self.zeta * (num / den).ln();
        let r2 = nu1 * self.norm_diff_over_zeta(s, s_right);
        Ok(Vec3::new(self.n0.x * ell, r2, self.n0.z * ell))
    }
}

/// `ℓ(s) = s + (1/ζ)·ln[(n₀,₂ + ζs + |n(s)|) / (n₀,₂ + |n₀|)]`.
pub fn ell(s: f64, n0: Vec3, zeta: f64) -> Result<f64, CatenaryError> {
    Ok(s + Gravity::new(n0, zeta).log_ratio(s, 0.0)? / zeta)
}

/// Position of a string that stays on the tensile-linear branch over `[0, s]`.
pub fn position_case1(s: f64, n0: Vec3, zeta: f64) -> Result<Vec3, CatenaryError> {
    Gravity::new(n0, zeta).extensible(s, 0.0)
}

/// Position on a string with inextensible end segments `[0, s̃]` and
/// `[1 − s̆, 1]`.
pub(crate) fn position_two_limit(
    s: f64,
    n0: Vec3,
    zeta: f64,
    nu1: f64,
    seg: &LimitSegments,
    variant: EllCVariant,
) -> Result<Vec3, CatenaryError> {
    let g = Gravity::new(n0, zeta);
    let right = 1.0 - seg.sbreve;
    if s <= seg.stilde {
        g.inextensible(s, 0.0, nu1)
    } else if s < right {
        Ok(g.extensible(s, seg.stilde)? + seg.r0)
    } else {
        let offset = match variant {
            EllCVariant::Corrected => g.inextensible(s, right, nu1)?,
            EllCVariant::AsPrinted => g.inextensible_as_printed(s, right, nu1)?,
        };
        Ok(offset + seg.rhat0)
    }
}
