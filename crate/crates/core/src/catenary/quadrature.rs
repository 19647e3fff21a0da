//! Globally adaptive Gauss–Kronrod (7/15) quadrature for vector integrands.
//!
//! Serves as the independent reference for every closed-form segment: it
//! integrates the full four-branch law directly. The only structure it uses
//! is where `|n(ξ)|` crosses the law's tensile threshold, computed from the
//! force path alone, so that no panel straddles a kink of the integrand.

use super::CatenaryError;
use crate::constitutive::ConstitutiveParams;
use crate::Vec3;

/// Absolute error target of [`quadrature_position`].
pub const QUADRATURE_TOL: f64 = 1e-12;
const MAX_INTERVALS: usize = 4000;

// Kronrod abscissae on [0, 1] (symmetric), Kronrod weights, and the weights
// of the embedded 7-point Gauss rule at the odd-indexed abscissae.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: Vec3,
    error: f64,
}

fn gk15<F: Fn(f64) -> Vec3>(f: &F, a: f64, b: f64) -> Panel {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(center - dx) + f(center + dx);
        kronrod += pair * WGK[j];
        if j % 2 == 1 {
            gauss += pair * WG[j / 2];
        }
    }
    let value = kronrod * half;
    let error = ((kronrod - gauss) * half).amax();
    Panel { a, b, value, error }
}

/// `∫_a^b f`, refined until the summed error estimate is at most `tol`.
///
/// Returns the integral, the final error estimate, and whether `tol` was met
/// before the interval budget ran out.
pub fn integrate<F: Fn(f64) -> Vec3>(f: F, a: f64, b: f64, tol: f64) -> (Vec3, f64, bool) {
    if a == b {
        return (Vec3::zeros(), 0.0, true);
    }
    let mut panels = vec![gk15(&f, a, b)];
    loop {
        let total_err: f64 = panels.iter().map(|p| p.error).sum();
        let value = panels.iter().fold(Vec3::zeros(), |acc, p| acc + p.value);
        if total_err <= tol {
            return (value, total_err, true);
        }
        if panels.len() >= MAX_INTERVALS || !total_err.is_finite() {
            return (value, total_err, false);
        }
        let (worst, _) = panels
            .iter()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |best, (i, p)| {
                if p.error > best.1 {
                    (i, p.error)
                } else {
                    best
                }
            });
        let p = panels.swap_remove(worst);
        let mid = 0.5 * (p.a + p.b);
        if !(mid > p.a && mid < p.b) {
            // interval no longer divisible
            return (value, total_err, false);
        }
        panels.push(gk15(&f, p.a, mid));
        panels.push(gk15(&f, mid, p.b));
    }
}

/// Integrand `ν̂(|n|)·n/|n|` with `n(ξ) = n₀ + ζξe₂`.
fn tangent(xi: f64, n0: Vec3, zeta: f64, law: &ConstitutiveParams) -> Vec3 {
    let n = n0 + Vec3::new(0.0, zeta * xi, 0.0);
    let tension = n.norm();
    n * (law.nu_hat(tension) / tension)
}

/// `r(s) = ∫₀ˢ ν̂(|n(ξ)|)·n(ξ)/|n(ξ)| dξ` by adaptive quadrature.
pub fn quadrature_position(
    s: f64,
    n0: Vec3,
    zeta: f64,
    law: &ConstitutiveParams,
) -> Result<Vec3, CatenaryError> {
    quadrature_segment(0.0, s, n0, zeta, law)
}

/// Same integrand over `[s0, s1]`.
pub fn quadrature_segment(
    s0: f64,
    s1: f64,
    n0: Vec3,
    zeta: f64,
    law: &ConstitutiveParams,
) -> Result<Vec3, CatenaryError> {
    let (lo, hi) = if s0 <= s1 { (s0, s1) } else { (s1, s0) };
    let mut knots = vec![lo];
    knots.extend(
        threshold_crossings(n0, zeta, law.n1)
            .into_iter()
            .filter(|&x| x > lo && x < hi),
    );
    knots.push(hi);
    let pieces = (knots.len() - 1) as f64;
    let mut value = Vec3::zeros();
    let mut error = 0.0;
    let mut ok = true;
    for w in knots.windows(2) {
        let (v, e, good) = integrate(
            |xi| tangent(xi, n0, zeta, law),
            w[0],
            w[1],
            QUADRATURE_TOL / pieces,
        );
        value += v;
        error += e;
        ok &= good;
    }
    if s1 < s0 {
        value = -value;
    }
    if ok && value.iter().all(|v| v.is_finite()) {
        Ok(value)
    } else {
        Err(CatenaryError::QuadratureFailure {
            s: s1,
            error_estimate: error,
        })
    }
}

/// Reference coordinates where `|n₀ + ζξe₂| = level`.
fn threshold_crossings(n0: Vec3, zeta: f64, level: f64) -> Vec<f64> {
    let disc = level * level - (n0.x * n0.x + n0.z * n0.z);
    if !(disc > 0.0) || zeta == 0.0 {
        return Vec::new();
    }
    let root = disc.sqrt();
    let mut out = vec![(-n0.y - root) / zeta, (-n0.y + root) / zeta];
    out.sort_by(f64::total_cmp);
    out
}
