//! Stretch-limited elastic strings.
//!
//! A perfectly flexible string whose stretch `ν` follows a piecewise-linear,
//! bounded function of the tension `N`:
//!
//! ```text
//!          ⎧ ν₀                 N < −N₀
//! ν̂(N) =  ⎨ 1 + α_C·N          −N₀ ≤ N < 0
//!          ⎪ 1 + α_T·N          0 ≤ N ≤ N₁
//!          ⎩ ν₁                 N > N₁
//! ```
//!
//! The crate evaluates the law ([`constitutive`]), scales problems to
//! dimensionless form ([`scaling`]), solves static catenaries under gravity
//! ([`catenary`]), builds exact two-state shock motions ([`shock`]), and
//! checks those motions against a finite-volume solver ([`dynamics`]).

// `!(a < b)` is used on purpose so that NaN fails every range check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![cfg_attr(test, allow(clippy::excessive_precision))]

pub mod catenary;
pub mod constitutive;
pub mod dynamics;
pub mod output;
pub mod rootfind;
pub mod scaling;
pub mod shock;

/// Spatial vector for positions and forces.
pub type Vec3 = nalgebra::Vector3<f64>;

pub use constitutive::{ConstitutiveParams, Regime};
pub use scaling::{DimensionlessGroup, PhysicalSetup};
