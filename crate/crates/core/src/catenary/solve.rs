//! Matching systems for the two catenary layouts.

use super::closed_form::{position_case1, position_two_limit, EllCVariant, Gravity};
use super::{
    tension_vector, CatenaryCase, CatenaryError, CatenaryProblem, CatenarySolution, LimitSegments,
};
use crate::rootfind::{newton, SolverOptions};
use crate::Vec3;
use nalgebra::DVector;

/// Names of the case-2 unknowns in vector order. The last three are the
/// case-1 unknowns.
pub const UNKNOWN_NAMES: [&str; 11] = [
    "stilde", "sbreve", "r0_1", "r0_2", "r0_3", "rhat0_1", "rhat0_2", "rhat0_3", "n0_1", "n0_2",
    "n0_3",
];

/// Weight of the quadratic penalty on negative ordering gaps.
const ORDERING_PENALTY: f64 = 100.0;

/// Samples used by the post-hoc regime check of a two-limit solution.
const REGIME_SAMPLES: usize = 400;

/// Slack allowed when comparing sampled tensions against `N̄₁`.
const REGIME_TOL: f64 = 1e-9;

fn wrong_case(expected: CatenaryCase) -> CatenaryError {
    CatenaryError::WrongCase { expected }
}

/// `r(1) − endpoint` for a fully extensible string with `n(0) = n0`.
pub fn residual_case1(n0: Vec3, problem: &CatenaryProblem) -> Result<Vec3, CatenaryError> {
    if problem.case != CatenaryCase::FullyExtensible {
        return Err(wrong_case(CatenaryCase::FullyExtensible));
    }
    Ok(position_case1(1.0, n0, problem.zeta())? - problem.endpoint)
}

/// `(N̄₁/2, −ζ/2, 0)`.
pub fn default_guess_case1(problem: &CatenaryProblem) -> Vec3 {
    Vec3::new(0.5 * problem.group.nbar1, -0.5 * problem.zeta(), 0.0)
}

fn nan_vector(n: usize) -> DVector<f64> {
    DVector::from_element(n, f64::NAN)
}

/// Sub-intervals of `[0, 1]` on which `|n(s)| > N̄₁`.
fn over_threshold(n0: Vec3, zeta: f64, nbar1: f64) -> Vec<(f64, f64)> {
    let b2 = n0.x * n0.x + n0.z * n0.z;
    let disc = nbar1 * nbar1 - b2;
    if disc <= 0.0 {
        return vec![(0.0, 1.0)];
    }
    let root = disc.sqrt();
    let (lo, hi) = ((-n0.y - root) / zeta, (-n0.y + root) / zeta);
    let mut out = Vec::new();
    if lo > 0.0 {
        out.push((0.0, lo.min(1.0)));
    }
    if hi < 1.0 {
        out.push((hi.max(0.0), 1.0));
    }
    out
}

pub fn solve_case1(
    problem: &CatenaryProblem,
    guess: Option<Vec3>,
    opts: &SolverOptions,
) -> Result<CatenarySolution, CatenaryError> {
    problem.validate()?;
    if problem.case != CatenaryCase::FullyExtensible {
        return Err(wrong_case(CatenaryCase::FullyExtensible));
    }
    let guess = guess.unwrap_or_else(|| default_guess_case1(problem));
    let residual = |x: &DVector<f64>| match residual_case1(Vec3::new(x[0], x[1], x[2]), problem) {
        Ok(r) => DVector::from_column_slice(r.as_slice()),
        Err(_) => nan_vector(3),
    };
    let report = newton(residual, DVector::from_column_slice(guess.as_slice()), opts)?;
    let n0 = Vec3::new(report.x[0], report.x[1], report.x[2]);
    let solution = CatenarySolution {
        case: CatenaryCase::FullyExtensible,
        zeta: problem.zeta(),
        law: problem.law(),
        endpoint: problem.endpoint,
        n0,
        segments: None,
        residual_norm: report.residual_norm,
        iters: report.iters,
    };
    log::debug!(
        "case 1 converged in {} iterations, |F| = {:.3e}",
        report.iters,
        report.residual_norm
    );

    // N(s) is convex, so its maximum on [0, 1] sits at an end
    let nbar1 = problem.group.nbar1;
    let peak = solution.tension(0.0).max(solution.tension(1.0));
    if peak > nbar1 {
        let intervals = over_threshold(n0, problem.zeta(), nbar1);
        return Err(CatenaryError::RegimeViolation {
            detail: format!("max N = {peak} exceeds Nbar1 = {nbar1}"),
            solution: Box::new(solution),
            intervals,
        });
    }
    Ok(solution)
}

/// Case-2 residual plus the ordering status of the evaluated point.
#[derive(Debug, Clone, PartialEq)]
pub struct Case2Residual {
    pub values: DVector<f64>,
    /// `false` when `0 < s̃ < 1 − s̆ < 1` fails; the penalty is then active.
    pub ordered: bool,
}

fn unpack(x: &DVector<f64>) -> (LimitSegments, Vec3) {
    (
        LimitSegments {
            stilde: x[0],
            sbreve: x[1],
            r0: Vec3::new(x[2], x[3], x[4]),
            rhat0: Vec3::new(x[5], x[6], x[7]),
        },
        Vec3::new(x[8], x[9], x[10]),
    )
}

fn penalty(gap: f64) -> f64 {
    if gap < 0.0 {
        ORDERING_PENALTY * gap * gap
    } else {
        0.0
    }
}

fn case2_values(
    x: &DVector<f64>,
    problem: &CatenaryProblem,
    variant: EllCVariant,
) -> Result<Case2Residual, CatenaryError> {
    if x.len() != 11 {
        return Err(CatenaryError::InvalidProblem(format!(
            "expected 11 unknowns, got {}",
            x.len()
        )));
    }
    let (seg, n0) = unpack(x);
    let zeta = problem.zeta();
    let law = problem.law();
    let g = Gravity::new(n0, zeta);
    let right = 1.0 - seg.sbreve;

    let jump_a = g.inextensible(seg.stilde, 0.0, law.nu1)? - seg.r0;
    let jump_b = g.extensible(right, seg.stilde)? + seg.r0 - seg.rhat0;
    let tip = position_two_limit(1.0, n0, zeta, law.nu1, &seg, variant)? - problem.endpoint;

    let (g1, g2, g3) = (seg.stilde, right - seg.stilde, seg.sbreve);
    let nbar1_sq = problem.group.nbar1 * problem.group.nbar1;
    let left_tension = tension_vector(seg.stilde, n0, zeta).norm_squared() - nbar1_sq;
    let right_tension = tension_vector(right, n0, zeta).norm_squared() - nbar1_sq;

    let mut values = DVector::zeros(11);
    values.rows_mut(0, 3).copy_from(&jump_a);
    values.rows_mut(3, 3).copy_from(&jump_b);
    values.rows_mut(6, 3).copy_from(&tip);
    values[9] = left_tension + penalty(g1) + penalty(g2);
    values[10] = right_tension + penalty(g3) + penalty(g2);
    Ok(Case2Residual {
        values,
        ordered: g1 > 0.0 && g2 > 0.0 && g3 > 0.0,
    })
}

/// The eleven matching conditions at `x`, ordered as [`UNKNOWN_NAMES`]:
/// junction continuity at `s̃` and `1 − s̆`, the far boundary condition, and
/// `N² − N̄₁²` at both junctions.
pub fn residual_case2(
    x: &DVector<f64>,
    problem: &CatenaryProblem,
) -> Result<Case2Residual, CatenaryError> {
    if problem.case != CatenaryCase::TwoLimitSegments {
        return Err(wrong_case(CatenaryCase::TwoLimitSegments));
    }
    case2_values(x, problem, EllCVariant::Corrected)
}

/// Seeds the junctions where the case-1 tension crosses `N̄₁` and the
/// integration constants from the case-1 positions there.
pub fn default_guess_case2(problem: &CatenaryProblem, opts: &SolverOptions) -> DVector<f64> {
    let case1 = CatenaryProblem {
        case: CatenaryCase::FullyExtensible,
        ..*problem
    };
    let n0 = match solve_case1(&case1, None, opts) {
        Ok(sol) => sol.n0,
        Err(CatenaryError::RegimeViolation { solution, .. }) => solution.n0,
        Err(_) => default_guess_case1(problem),
    };
    let zeta = problem.zeta();
    let nbar1 = problem.group.nbar1;
    let disc = nbar1 * nbar1 - (n0.x * n0.x + n0.z * n0.z);
    let (mut lo, mut hi) = (0.25, 0.75);
    if disc > 0.0 {
        let root = disc.sqrt();
        let (a, b) = ((-n0.y - root) / zeta, (-n0.y + root) / zeta);
        if a > 0.0 && a < 1.0 {
            lo = a;
        }
        if b > 0.0 && b < 1.0 {
            hi = b;
        }
    }
    if lo >= hi {
        (lo, hi) = (0.25, 0.75);
    }
    let r0 = position_case1(lo, n0, zeta).unwrap_or_else(|_| Vec3::new(lo, 0.0, 0.0));
    let rhat0 = position_case1(hi, n0, zeta).unwrap_or_else(|_| Vec3::new(hi, 0.0, 0.0));
    let mut x = vec![lo, 1.0 - hi];
    x.extend(r0.iter());
    x.extend(rhat0.iter());
    x.extend(n0.iter());
    DVector::from_vec(x)
}

pub fn solve_case2(
    problem: &CatenaryProblem,
    guess: Option<DVector<f64>>,
    opts: &SolverOptions,
) -> Result<CatenarySolution, CatenaryError> {
    solve_case2_with(problem, guess, opts, EllCVariant::Corrected)
}

/// [`solve_case2`] with a chosen form of the last-segment logarithm.
pub fn solve_case2_with(
    problem: &CatenaryProblem,
    guess: Option<DVector<f64>>,
    opts: &SolverOptions,
    variant: EllCVariant,
) -> Result<CatenarySolution, CatenaryError> {
    problem.validate()?;
    if problem.case != CatenaryCase::TwoLimitSegments {
        return Err(wrong_case(CatenaryCase::TwoLimitSegments));
    }
    let x0 = guess.unwrap_or_else(|| default_guess_case2(problem, opts));
    let residual = |x: &DVector<f64>| match case2_values(x, problem, variant) {
        Ok(r) => r.values,
        Err(_) => nan_vector(11),
    };
    let report = newton(residual, x0, opts)?;
    let (seg, n0) = unpack(&report.x);
    log::debug!(
        "case 2 converged in {} iterations, |F| = {:.3e}",
        report.iters,
        report.residual_norm
    );
    if !(seg.stilde > 0.0 && seg.stilde < 1.0 - seg.sbreve && seg.sbreve > 0.0) {
        return Err(CatenaryError::OrderingViolation {
            stilde: seg.stilde,
            sbreve: seg.sbreve,
        });
    }
    let solution = CatenarySolution {
        case: CatenaryCase::TwoLimitSegments,
        zeta: problem.zeta(),
        law: problem.law(),
        endpoint: problem.endpoint,
        n0,
        segments: Some(seg),
        residual_norm: report.residual_norm,
        iters: report.iters,
    };
    check_two_limit_regime(solution, problem.group.nbar1)
}

fn check_two_limit_regime(
    solution: CatenarySolution,
    nbar1: f64,
) -> Result<CatenarySolution, CatenaryError> {
    let seg = solution.segments.expect("two-limit solution");
    let right = 1.0 - seg.sbreve;
    let mut bad: Vec<(f64, f64)> = Vec::new();
    let h = 1.0 / REGIME_SAMPLES as f64;
    for k in 0..=REGIME_SAMPLES {
        let s = k as f64 * h;
        let n = solution.tension(s);
        let limit_side = s < seg.stilde || s > right;
        let ok = if limit_side {
            n > nbar1 - REGIME_TOL
        } else {
            n <= nbar1 + REGIME_TOL
        };
        if !ok {
            match bad.last_mut() {
                Some(last) if (s - last.1) <= h * 1.5 => last.1 = s,
                _ => bad.push((s, s)),
            }
        }
    }
    if bad.is_empty() {
        Ok(solution)
    } else {
        Err(CatenaryError::RegimeViolation {
            detail: format!("tension on the wrong side of Nbar1 = {nbar1}"),
            solution: Box::new(solution),
            intervals: bad,
        })
    }
}

/// Position on a solved two-limit-segment string.
pub fn position_case2(s: f64, solution: &CatenarySolution) -> Result<Vec3, CatenaryError> {
    solution.position_case2(s, EllCVariant::Corrected)
}
