//! Damped Newton iteration for small square systems.
//!
//! The Jacobian is built by forward differences with step
//! `fd_step·max(1, |xᵢ|)`, factored by LU with partial pivoting, and each
//! Newton step is backtracked on the residual ∞-norm until it decreases.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SolverOptions {
    /// Stop once `‖F(x)‖∞ ≤ tol_residual`.
    pub tol_residual: f64,
    /// Steps shorter than `tol_step·(1 + ‖x‖∞)` without reaching
    /// `tol_residual` count as stagnation.
    pub tol_step: f64,
    pub max_iters: usize,
    pub fd_step: f64,
    /// Backtracking factor in `(0, 1)`.
    pub damping: f64,
    /// Smallest step fraction tried by the line search.
    pub min_damping: f64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            tol_residual: 1e-12,
            tol_step: 1e-15,
            max_iters: 100,
            fd_step: 1e-7,
            damping: 0.5,
            min_damping: 1e-4,
        }
    }
}

impl SolverOptions {
    pub fn validate(&self) -> Result<(), RootfindError> {
        let ok = self.tol_residual > 0.0
            && self.tol_step >= 0.0
            && self.max_iters >= 1
            && self.fd_step > 0.0
            && self.damping > 0.0
            && self.damping < 1.0
            && self.min_damping > 0.0
            && self.min_damping <= 1.0;
        if ok {
            Ok(())
        } else {
            Err(RootfindError::InvalidOptions)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    pub x: DVector<f64>,
    pub residual_norm: f64,
    /// Newton steps taken.
    pub iters: usize,
    pub converged: bool,
    /// `‖F‖∞` at the start of every iteration, plus the final value.
    pub history: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RootfindError {
    #[error("invalid solver options")]
    InvalidOptions,
    #[error("residual is not finite at the starting point")]
    NonFinite,
    #[error("no convergence after {} iterations (best residual {:.3e})", .best.iters, .best.residual_norm)]
    MaxIters { best: Box<SolveReport> },
    #[error("finite-difference Jacobian is singular (condition estimate {condition:.3e})")]
    SingularJacobian {
        condition: f64,
        best: Box<SolveReport>,
    },
    #[error("line search could not reduce the residual (best residual {:.3e})", .best.residual_norm)]
    Stalled { best: Box<SolveReport> },
}

impl RootfindError {
    /// Best iterate reached before the failure, when there is one.
    pub fn best(&self) -> Option<&SolveReport> {
        match self {
            RootfindError::MaxIters { best }
            | RootfindError::SingularJacobian { best, .. }
            | RootfindError::Stalled { best } => Some(best),
            _ => None,
        }
    }
}

fn inf_norm(v: &DVector<f64>) -> f64 {
    v.iter().fold(0.0f64, |m, x| m.max(x.abs()))
}

fn all_finite(v: &DVector<f64>) -> bool {
    v.iter().all(|x| x.is_finite())
}

/// Forward-difference Jacobian of `f` at `x`, given `fx = f(x)`.
pub fn fd_jacobian<F>(f: &F, x: &DVector<f64>, fx: &DVector<f64>, fd_step: f64) -> DMatrix<f64>
where
    F: Fn(&DVector<f64>) -> DVector<f64>,
{
    let n = x.len();
    let mut jac = DMatrix::zeros(fx.len(), n);
    let mut xp = x.clone();
    for j in 0..n {
        let h = fd_step * x[j].abs().max(1.0);
        xp[j] = x[j] + h;
        let h = xp[j] - x[j];
        let fp = f(&xp);
        jac.set_column(j, &((fp - fx) / h));
        xp[j] = x[j];
    }
    jac
}

fn condition_estimate(jac: &DMatrix<f64>) -> f64 {
    let sv = jac.clone().singular_values();
    let max = sv.max();
    let min = sv.min();
    if min == 0.0 {
        f64::INFINITY
    } else {
        max / min
    }
}

/// Solves `residual(x) = 0` from `x0`.
pub fn newton<F>(
    residual: F,
    x0: DVector<f64>,
    opts: &SolverOptions,
) -> Result<SolveReport, RootfindError>
where
    F: Fn(&DVector<f64>) -> DVector<f64>,
{
    opts.validate()?;
    let n = x0.len();
    let mut x = x0;
    let mut fx = residual(&x);
    if !all_finite(&fx) || fx.len() != n {
        return Err(RootfindError::NonFinite);
    }
    let mut norm = inf_norm(&fx);
    let mut history = Vec::with_capacity(opts.max_iters + 1);
    // forward differences carry relative noise of order eps/fd_step
    let singular_threshold = opts.fd_step / (f64::EPSILON * n.max(1) as f64);

    let report =
        |x: &DVector<f64>, norm: f64, iters: usize, history: &[f64], converged: bool| SolveReport {
            x: x.clone(),
            residual_norm: norm,
            iters,
            converged,
            history: history.to_vec(),
        };

    for iter in 0..opts.max_iters {
        history.push(norm);
        if norm <= opts.tol_residual {
            return Ok(report(&x, norm, iter, &history, true));
        }

        let jac = fd_jacobian(&residual, &x, &fx, opts.fd_step);
        if jac.iter().any(|v| !v.is_finite()) {
            return Err(RootfindError::Stalled {
                best: Box::new(report(&x, norm, iter, &history, false)),
            });
        }
        let condition = condition_estimate(&jac);
        let step = if condition > singular_threshold {
            None
        } else {
            jac.lu().solve(&(-&fx))
        };
        let Some(step) = step else {
            return Err(RootfindError::SingularJacobian {
                condition,
                best: Box::new(report(&x, norm, iter, &history, false)),
            });
        };

        let mut lambda = 1.0;
        let accepted = loop {
            let trial = &x + &step * lambda;
            let ft = residual(&trial);
            if all_finite(&ft) {
                let nt = inf_norm(&ft);
                if nt < norm {
                    break Some((trial, ft, nt));
                }
            }
            lambda *= opts.damping;
            if lambda < opts.min_damping {
                break None;
            }
        };
        let Some((trial, ft, nt)) = accepted else {
            return Err(RootfindError::Stalled {
                best: Box::new(report(&x, norm, iter, &history, false)),
            });
        };
        let step_len = inf_norm(&(&trial - &x));
        let stagnated = step_len <= opts.tol_step * (1.0 + inf_norm(&trial));
        x = trial;
        fx = ft;
        norm = nt;
        log::trace!("newton iter {iter}: |F| = {norm:.3e}, lambda = {lambda}");
        if stagnated && norm > opts.tol_residual {
            history.push(norm);
            return Err(RootfindError::Stalled {
                best: Box::new(report(&x, norm, iter + 1, &history, false)),
            });
        }
    }

    history.push(norm);
    if norm <= opts.tol_residual {
        Ok(report(&x, norm, opts.max_iters, &history, true))
    } else {
        Err(RootfindError::MaxIters {
            best: Box::new(report(&x, norm, opts.max_iters, &history, false)),
        })
    }
}
