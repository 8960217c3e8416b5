//! Similarity reduction and numerical solution of parabolic moving-boundary
//! problems.
//!
//! Problems of the form
//!
//! ```text
//! u_t = (u^n u_x)_x,   0 < x < x_w(t),   u(x, 0) = 0,  x_w(0) = 0
//! u(0, t) = A t^α   or   u_x(0, t) = B t^β
//! u(x_w, t) = p(..),  u_x(x_w, t) = q(..)
//! ```
//!
//! are invariant under the stretching group `x -> λx, t -> λ^γ t, u -> λ^{αγ} u`
//! when `γ = 2/(nα + 1)`. The similarity variables `η = x t^{-1/γ}`,
//! `U = t^{-α} u` reduce them to free boundary problems on `[0, η_w]` for a
//! second order ODE, which are then solved by the iterative transformation
//! method (ITM):
//!
//! 1. embed the problem into an extended family with a parameter `h`, partially
//!    invariant under `z -> ω^δ z, w -> ω w, h -> ω^σ h`;
//! 2. for a trial `h*`, integrate the extended problem inward from a fixed
//!    starred boundary `s*` with classical RK4;
//! 3. recover `ω` from the origin condition and drive `Γ(h*) = ω^{-σ} h* - 1`
//!    to zero with the secant method;
//! 4. map the starred solution back with the group.
//!
//! Modules:
//! - [`similarity`]: scaling exponents, invariance residuals, physical reconstruction.
//! - [`ivp`]: fixed-step RK4 for two-component systems.
//! - [`itm`]: transformation function, secant driver, value recovery.
//! - [`problems`]: the one-phase Stefan problem and viscous spreading problem.
//! - [`reference`]: erf, the Neumann solution, the exact spreading solution and
//!   tabulated asymptotic fronts.

pub mod error;
pub mod itm;
pub mod ivp;
pub mod problems;
pub mod reference;
pub mod similarity;

pub use error::{Error, Result};
pub use itm::{
    degeneracy_defect, evaluate_gamma, origin_residual, original_profile, recover_values, secant_solve,
    ExtendedScaling, GammaEval, HStarDomain, ItmConfig, ItmIteration, ItmResult, ItmStatus, OmegaRule, Recovered,
    ReducedFreeBvp,
};
pub use ivp::{integrate, integrate_inward, steps_for, IntegrationResult, ProfilePoint, SolutionProfile, State2};
pub use problems::{make_spreading, make_stefan, SpreadingParams, SpreadingProblem, StefanParams, StefanProblem};
