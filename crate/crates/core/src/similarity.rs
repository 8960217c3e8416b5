//! Scaling-group analysis of the moving-boundary class
//! `u_t = (u^n u_x)_x` with a power-law origin condition.
//!
//! The stretching `x -> λx, x_w -> λx_w, t -> λ^γ t, u -> λ^{αγ} u` leaves the
//! class invariant when `γ = 2/(nα + 1)` and the free-boundary data have the
//! self-similar forms `p = t^α P(..)`, `q = t^{(αγ-1)/γ} Q(..)`. The group
//! parameter `λ` is never stored; invariance is checked as exponent balance.

use crate::error::{Error, Result};
use crate::ivp::SolutionProfile;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OriginKind {
    /// `u(0, t) = A t^α`
    Dirichlet,
    /// `u_x(0, t) = B t^β`
    Neumann,
}

/// Exponents and origin data of one member of the class.
///
/// Fields are public so that inconsistent sets can be built on purpose and
/// fed to [`check_invariance`]; [`SimilarityExponents::dirichlet`] and
/// [`SimilarityExponents::neumann`] validate and derive `gamma`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimilarityExponents {
    pub n: f64,
    pub alpha: f64,
    pub beta: Option<f64>,
    /// `A` for a Dirichlet origin, `B` for a Neumann origin.
    pub coefficient: f64,
    pub gamma: f64,
    pub origin_kind: OriginKind,
}

impl SimilarityExponents {
    pub fn dirichlet(n: f64, alpha: f64, a: f64) -> Result<Self> {
        Ok(Self {
            n,
            alpha,
            beta: None,
            coefficient: a,
            gamma: gamma_from_alpha(n, alpha)?,
            origin_kind: OriginKind::Dirichlet,
        })
    }

    /// Neumann origin `u_x(0,t) = B t^β` with an explicitly given `alpha`.
    ///
    /// `alpha` is taken as given because the spreading problem fixes it from
    /// the free-boundary data (`B = 0` leaves β without influence).
    pub fn neumann(n: f64, alpha: f64, beta: f64, b: f64) -> Result<Self> {
        if n != 0.0 && beta == 2.0 / n - 1.0 {
            return Err(Error::DegenerateExponent(format!("beta = 2/n - 1 = {beta} is excluded for n = {n}")));
        }
        Ok(Self {
            n,
            alpha,
            beta: Some(beta),
            coefficient: b,
            gamma: gamma_from_alpha(n, alpha)?,
            origin_kind: OriginKind::Neumann,
        })
    }

    /// One-phase Stefan problem: `n = 0, A = 1, α = 0`.
    pub fn stefan() -> Self {
        Self::dirichlet(0.0, 0.0, 1.0).expect("valid exponents")
    }

    /// Viscous spreading problem: `n = 3, B = 0, α = β = -1/5`.
    pub fn spreading() -> Self {
        Self::neumann(3.0, -0.2, -0.2, 0.0).expect("valid exponents")
    }
}

/// `γ = 2/(nα + 1)`.
pub fn gamma_from_alpha(n: f64, alpha: f64) -> Result<f64> {
    let d = n * alpha + 1.0;
    if d == 0.0 || !d.is_finite() {
        return Err(Error::DegenerateExponent(format!("n*alpha + 1 = {d}")));
    }
    Ok(2.0 / d)
}

/// Which formula [`alpha_from_beta_with`] applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AlphaFormula {
    /// `α = (β + 1)/(2 - n - nβ)`, the classical printed form.
    #[default]
    Printed,
    /// `α = (2β + 1)/(2 - n)`, from balancing `αγ - 1 = γβ` with `γ = 2/(nα+1)`.
    Rebalanced,
}

/// `α = (β + 1)/(2 - n - nβ)`.
pub fn alpha_from_beta(n: f64, beta: f64) -> Result<f64> {
    alpha_from_beta_with(n, beta, AlphaFormula::Printed)
}

pub fn alpha_from_beta_with(n: f64, beta: f64, formula: AlphaFormula) -> Result<f64> {
    if n != 0.0 && beta == 2.0 / n - 1.0 {
        return Err(Error::DegenerateExponent(format!("beta = 2/n - 1 = {beta} is excluded for n = {n}")));
    }
    let (num, den) = match formula {
        AlphaFormula::Printed => (beta + 1.0, 2.0 - n - n * beta),
        AlphaFormula::Rebalanced => (2.0 * beta + 1.0, 2.0 - n),
    };
    if den == 0.0 {
        return Err(Error::DegenerateExponent(format!("denominator vanishes for n = {n}, beta = {beta}")));
    }
    Ok(num / den)
}

/// Exponent-balance residuals of the stretching group on the model problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvarianceResiduals {
    /// `(αγ - γ) - (nαγ + αγ - 2)`: time derivative vs. diffusion term.
    pub pde: f64,
    /// Origin condition: `αγ - γα` (Dirichlet), `αγ - 1 - γβ` (Neumann, `B ≠ 0`),
    /// or `0` for a homogeneous Neumann condition.
    pub origin: f64,
}

impl InvarianceResiduals {
    pub fn is_invariant(&self, tol: f64) -> bool {
        self.pde.abs() <= tol && self.origin.abs() <= tol
    }

    pub fn as_array(&self) -> [f64; 2] {
        [self.pde, self.origin]
    }
}

pub fn check_invariance(exps: &SimilarityExponents) -> Result<InvarianceResiduals> {
    let SimilarityExponents { n, alpha, gamma, .. } = *exps;
    if gamma == 0.0 || !gamma.is_finite() {
        return Err(Error::DegenerateExponent(format!("gamma = {gamma}")));
    }
    let pde = (alpha * gamma - gamma) - (n * alpha * gamma + alpha * gamma - 2.0);
    let origin = match exps.origin_kind {
        // `A t^α` picks up `λ^{αγ}` on both sides
        OriginKind::Dirichlet => 0.0,
        OriginKind::Neumann if exps.coefficient == 0.0 => 0.0,
        OriginKind::Neumann => {
            let beta = exps.beta.ok_or_else(|| Error::InvalidParams("Neumann origin with B != 0 needs beta".into()))?;
            alpha * gamma - 1.0 - gamma * beta
        }
    };
    Ok(InvarianceResiduals { pde, origin })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalSample {
    pub x: f64,
    pub u: f64,
    pub du_dx: f64,
}

/// The solution at one time in physical variables.
#[derive(Debug, Clone, PartialEq)]
pub struct PhysicalProfile {
    pub t: f64,
    pub samples: Vec<PhysicalSample>,
    pub x_w: f64,
}

fn positive_time(t: f64) -> Result<()> {
    if t > 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositiveTime(t))
    }
}

/// Maps a similarity profile back to `(x, u, u_x)` at time `t`:
/// `x = η t^{1/γ}`, `u = t^α U`, `u_x = t^{α - 1/γ} U'`, `x_w = η_w t^{1/γ}`.
pub fn reconstruct_physical(
    profile: &SolutionProfile,
    exps: &SimilarityExponents,
    eta_w: f64,
    t: f64,
) -> Result<PhysicalProfile> {
    positive_time(t)?;
    let inv_gamma = 1.0 / exps.gamma;
    let x_scale = t.powf(inv_gamma);
    let u_scale = t.powf(exps.alpha);
    let du_scale = t.powf(exps.alpha - inv_gamma);
    let samples = profile
        .clone()
        .increasing()
        .points
        .iter()
        .map(|p| PhysicalSample { x: p.eta * x_scale, u: p.u * u_scale, du_dx: p.du * du_scale })
        .collect();
    Ok(PhysicalProfile { t, samples, x_w: eta_w * x_scale })
}

/// Flux at the origin, `B t^{β(n+1)} U(0)^n U'(0)`.
pub fn flux_at_origin(exps: &SimilarityExponents, u0: f64, du0: f64, t: f64) -> Result<f64> {
    positive_time(t)?;
    let beta = match (exps.origin_kind, exps.beta) {
        (OriginKind::Neumann, Some(beta)) => beta,
        _ => return Err(Error::InvalidParams("flux_at_origin needs a Neumann origin with beta".into())),
    };
    if exps.coefficient == 0.0 {
        return Ok(0.0);
    }
    Ok(exps.coefficient * t.powf(beta * (exps.n + 1.0)) * u0.powf(exps.n) * du0)
}

/// Height of the field at the origin, `t^α U(0)`.
pub fn height_at_origin(exps: &SimilarityExponents, u0: f64, t: f64) -> Result<f64> {
    positive_time(t)?;
    Ok(t.powf(exps.alpha) * u0)
}
