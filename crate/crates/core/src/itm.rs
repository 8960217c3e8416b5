//! Iterative transformation method for free boundary problems
//!
//! ```text
//! w'' = f(z, w, w'),   g(w(0), w'(0)) = C,   w(s) = j(s),   w'(s) = ℓ(s)
//! ```
//!
//! with unknown `s`. The problem is embedded into an extended family with a
//! parameter `h` (recovered at `h = 1`) that is invariant, except for the
//! origin condition, under `z -> ω^δ z, w -> ω w, h -> ω^σ h`. For a trial
//! `h*` the extended problem is integrated inward from a fixed `s*`; the
//! origin condition fixes `ω`, the group maps `h*` back to `h = ω^{-σ} h*`, and
//! the secant method solves `Γ(h*) = ω^{-σ} h* - 1 = 0`.

use std::fmt;

use crate::error::{Error, Result};
use crate::ivp::{integrate_inward, steps_for, ProfilePoint, SolutionProfile, State2};

/// Open interval of admissible `h*` values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HStarDomain {
    pub lo: f64,
    pub hi: f64,
}

impl HStarDomain {
    pub const POSITIVE: Self = Self { lo: 0.0, hi: f64::INFINITY };

    pub fn contains(&self, h: f64) -> bool {
        h > self.lo && h < self.hi
    }

    /// Pulls an escaped iterate back halfway between `from` and the violated bound.
    fn pull_back(&self, from: f64, escaped: f64) -> f64 {
        if escaped <= self.lo {
            0.5 * (from + self.lo)
        } else if self.hi.is_finite() {
            0.5 * (from + self.hi)
        } else {
            2.0 * from
        }
    }
}

/// A free boundary problem together with its extended embedding.
///
/// The extended closures must reduce to the original ones at `h* = 1`
/// (see [`degeneracy_defect`]).
pub trait ReducedFreeBvp: Send + Sync {
    /// `f(z, w, w')`
    fn rhs(&self, z: f64, y: State2) -> f64;
    /// `g(w(0), w'(0))`
    fn origin_condition(&self, y: State2) -> f64;
    /// `C`
    fn origin_constant(&self) -> f64;
    /// `j(s)`
    fn boundary_value(&self, s: f64) -> f64;
    /// `ℓ(s)`
    fn boundary_slope(&self, s: f64) -> f64;

    fn extended_rhs(&self, h_star: f64, z: f64, y: State2) -> f64;
    fn extended_boundary_value(&self, h_star: f64, s: f64) -> f64;
    fn extended_boundary_slope(&self, h_star: f64, s: f64) -> f64;

    fn h_star_domain(&self) -> HStarDomain {
        HStarDomain::POSITIVE
    }

    /// Maps a state in the solver's dependent variable to the reported one.
    /// Identity unless the problem was shifted to make `C` nonzero.
    fn report(&self, _z: f64, y: State2) -> State2 {
        y
    }
}

impl<P: ReducedFreeBvp + ?Sized> ReducedFreeBvp for &P {
    fn rhs(&self, z: f64, y: State2) -> f64 {
        (**self).rhs(z, y)
    }
    fn origin_condition(&self, y: State2) -> f64 {
        (**self).origin_condition(y)
    }
    fn origin_constant(&self) -> f64 {
        (**self).origin_constant()
    }
    fn boundary_value(&self, s: f64) -> f64 {
        (**self).boundary_value(s)
    }
    fn boundary_slope(&self, s: f64) -> f64 {
        (**self).boundary_slope(s)
    }
    fn extended_rhs(&self, h_star: f64, z: f64, y: State2) -> f64 {
        (**self).extended_rhs(h_star, z, y)
    }
    fn extended_boundary_value(&self, h_star: f64, s: f64) -> f64 {
        (**self).extended_boundary_value(h_star, s)
    }
    fn extended_boundary_slope(&self, h_star: f64, s: f64) -> f64 {
        (**self).extended_boundary_slope(h_star, s)
    }
    fn h_star_domain(&self) -> HStarDomain {
        (**self).h_star_domain()
    }
    fn report(&self, z: f64, y: State2) -> State2 {
        (**self).report(z, y)
    }
}

/// Largest absolute difference between the extended closures at `h* = 1` and
/// the original closures over the given sample states.
pub fn degeneracy_defect<P: ReducedFreeBvp + ?Sized>(problem: &P, samples: &[(f64, State2)]) -> f64 {
    samples
        .iter()
        .flat_map(|&(z, y)| {
            [
                problem.extended_rhs(1.0, z, y) - problem.rhs(z, y),
                problem.extended_boundary_value(1.0, z) - problem.boundary_value(z),
                problem.extended_boundary_slope(1.0, z) - problem.boundary_slope(z),
            ]
        })
        .fold(0.0, |m, d| m.max(d.abs()))
}

/// How the group parameter is recovered from the starred origin state.
#[derive(Clone, Copy)]
pub enum OmegaRule {
    /// `ω = h*^{1/σ} g(h*^{-1/σ} w*(0), h*^{(δ-1)/σ} w*'(0)) / C`; needs `C ≠ 0`.
    Generic,
    /// Problem-specific closed form `ω(h*, endpoint)`.
    Custom(fn(f64, State2) -> f64),
}

impl fmt::Debug for OmegaRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Generic => f.write_str("Generic"),
            Self::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

/// Exponents `(δ, σ)` of the extended group `z -> ω^δ z, w -> ω w, h -> ω^σ h`.
#[derive(Debug, Clone, Copy)]
pub struct ExtendedScaling {
    pub delta: f64,
    pub sigma: f64,
    pub omega_rule: OmegaRule,
}

impl ExtendedScaling {
    pub fn new(delta: f64, sigma: f64, omega_rule: OmegaRule) -> Result<Self> {
        if sigma == 0.0 || !sigma.is_finite() || !delta.is_finite() {
            return Err(Error::InvalidParams(format!("invalid group exponents delta={delta}, sigma={sigma}")));
        }
        Ok(Self { delta, sigma, omega_rule })
    }

    pub fn omega<P: ReducedFreeBvp + ?Sized>(&self, problem: &P, h_star: f64, endpoint: State2) -> Result<f64> {
        let omega = match self.omega_rule {
            OmegaRule::Custom(rule) => rule(h_star, endpoint),
            OmegaRule::Generic => {
                let c = problem.origin_constant();
                if c == 0.0 {
                    return Err(Error::InvalidParams(
                        "generic omega rule needs a nonzero origin constant; shift the dependent variable".into(),
                    ));
                }
                let (d, s) = (self.delta, self.sigma);
                let g = problem.origin_condition(State2::new(
                    h_star.powf(-1.0 / s) * endpoint.w,
                    h_star.powf((d - 1.0) / s) * endpoint.dw,
                ));
                h_star.powf(1.0 / s) * g / c
            }
        };
        if omega > 0.0 && omega.is_finite() {
            Ok(omega)
        } else {
            Err(Error::OmegaNonPositive { omega })
        }
    }

    /// `h = ω^{-σ} h*`
    pub fn h_from(&self, omega: f64, h_star: f64) -> f64 {
        omega.powf(-self.sigma) * h_star
    }

    /// `s = ω^{-δ} s*`
    pub fn s_from(&self, omega: f64, s_star: f64) -> f64 {
        omega.powf(-self.delta) * s_star
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ItmConfig {
    pub s_star: f64,
    /// Step magnitude; the solver integrates inward.
    pub step: f64,
    pub tol: f64,
    pub max_iter: usize,
    pub h0: f64,
    pub h1: f64,
    /// Attach the converged solution profile to the result.
    pub record_profile: bool,
}

impl Default for ItmConfig {
    fn default() -> Self {
        Self { s_star: 0.5, step: 1e-3, tol: 1e-6, max_iter: 50, h0: 1.0, h1: 2.0, record_profile: false }
    }
}

impl ItmConfig {
    pub fn validate(&self, domain: HStarDomain) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParams(msg));
        if !(self.s_star > 0.0 && self.s_star.is_finite()) {
            return bad(format!("s* must be positive, got {}", self.s_star));
        }
        if !(self.step > 0.0 && self.step.is_finite()) {
            return bad(format!("step must be positive, got {}", self.step));
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return bad(format!("tol must be positive, got {}", self.tol));
        }
        if self.max_iter < 1 {
            return bad("max_iter must be at least 1".into());
        }
        if self.h0 == self.h1 {
            return bad(format!("initial guesses must differ, got h0 = h1 = {}", self.h0));
        }
        for h in [self.h0, self.h1] {
            if !domain.contains(h) {
                return bad(format!("initial guess h* = {h} outside ({}, {})", domain.lo, domain.hi));
            }
        }
        Ok(())
    }

    fn n_steps(&self) -> usize {
        steps_for(self.s_star, self.step)
    }
}

/// One evaluation of the transformation function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaEval {
    pub gamma: f64,
    pub omega: f64,
    /// Starred state at `z* = 0`.
    pub endpoint: State2,
}

fn extended_system<'a, P: ReducedFreeBvp + ?Sized>(
    problem: &'a P,
    h_star: f64,
) -> impl Fn(f64, State2) -> (f64, f64) + 'a {
    move |z, y| (y.dw, problem.extended_rhs(h_star, z, y))
}

/// Integrates the extended problem at `h*` inward from `s*` and returns
/// `Γ(h*) = ω^{-σ} h* - 1` with the recovered `ω`.
pub fn evaluate_gamma<P: ReducedFreeBvp + ?Sized>(
    problem: &P,
    scaling: &ExtendedScaling,
    h_star: f64,
    config: &ItmConfig,
) -> Result<GammaEval> {
    if !problem.h_star_domain().contains(h_star) {
        return Err(Error::InvalidParams(format!("h* = {h_star} outside the admissible domain")));
    }
    if !(config.s_star > 0.0 && config.s_star.is_finite()) {
        return Err(Error::InvalidParams(format!("s* must be positive, got {}", config.s_star)));
    }
    let start = State2::new(
        problem.extended_boundary_value(h_star, config.s_star),
        problem.extended_boundary_slope(h_star, config.s_star),
    );
    let run = integrate_inward(extended_system(problem, h_star), config.s_star, start, 0.0, config.n_steps(), false)?;
    let omega = scaling.omega(problem, h_star, run.endpoint)?;
    Ok(GammaEval { gamma: scaling.h_from(omega, h_star) - 1.0, omega, endpoint: run.endpoint })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Recovered {
    pub s: f64,
    pub w0: f64,
    pub dw0: f64,
}

/// Group map back from starred values: `s = ω^{-δ} s*`, `w(0) = ω^{-1} w*(0)`,
/// `w'(0) = ω^{δ-1} w*'(0)`.
pub fn recover_values(omega: f64, scaling: &ExtendedScaling, endpoint: State2, s_star: f64) -> Result<Recovered> {
    if !(omega > 0.0 && omega.is_finite()) {
        return Err(Error::OmegaNonPositive { omega });
    }
    Ok(Recovered {
        s: scaling.s_from(omega, s_star),
        w0: endpoint.w / omega,
        dw0: omega.powf(scaling.delta - 1.0) * endpoint.dw,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ItmIteration {
    pub j: usize,
    pub h_star: f64,
    pub gamma: f64,
    pub omega: f64,
    pub s: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ItmStatus {
    Converged,
    MaxIterExceeded,
    SingularIntegration,
    OmegaNonPositive,
}

impl ItmStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Converged => "converged",
            Self::MaxIterExceeded => "max_iter_exceeded",
            Self::SingularIntegration => "singular_integration",
            Self::OmegaNonPositive => "omega_non_positive",
        }
    }
}

/// Outcome of [`secant_solve`]. Values come from the last successful iterate;
/// `w0`, `dw0` and `profile` are in the reported variables.
#[derive(Debug, Clone, PartialEq)]
pub struct ItmResult {
    pub status: ItmStatus,
    pub omega: f64,
    pub h_star: f64,
    pub s: f64,
    pub w0: f64,
    pub dw0: f64,
    pub trace: Vec<ItmIteration>,
    pub profile: Option<SolutionProfile>,
}

impl ItmResult {
    pub fn converged(&self) -> bool {
        self.status == ItmStatus::Converged
    }

    /// Index `j` of the final iterate.
    pub fn iterations(&self) -> usize {
        self.trace.last().map_or(0, |it| it.j)
    }

    pub fn gamma(&self) -> f64 {
        self.trace.last().map_or(f64::NAN, |it| it.gamma)
    }
}

struct Iterate {
    record: ItmIteration,
    eval: GammaEval,
}

/// Solves `Γ(h*) = 0` by the secant method starting from `config.h0`, `config.h1`.
///
/// The stopping test `|Γ(h*_j)| ≤ tol` and `|s_j - s_{j-1}| ≤ tol` is applied
/// from `j = 1` on. An iterate leaving the admissible `h*` domain is pulled
/// back once halfway towards the violated bound; a second exit is an error.
/// Failures of the two starting evaluations are returned as errors; later
/// integration or `ω` failures end the iteration with the matching status.
pub fn secant_solve<P: ReducedFreeBvp + ?Sized>(
    problem: &P,
    scaling: &ExtendedScaling,
    config: &ItmConfig,
) -> Result<ItmResult> {
    let domain = problem.h_star_domain();
    config.validate(domain)?;

    let step = |j: usize, h: f64| -> Result<Iterate> {
        let eval = evaluate_gamma(problem, scaling, h, config)?;
        let s = scaling.s_from(eval.omega, config.s_star);
        Ok(Iterate { record: ItmIteration { j, h_star: h, gamma: eval.gamma, omega: eval.omega, s }, eval })
    };

    let mut prev = step(0, config.h0)?;
    let mut curr = step(1, config.h1)?;
    let mut trace = vec![prev.record, curr.record];
    let mut pulled_back = false;

    let status = loop {
        let (p, c) = (prev.record, curr.record);
        if c.gamma.abs() <= config.tol && (c.s - p.s).abs() <= config.tol {
            break ItmStatus::Converged;
        }
        if c.j >= config.max_iter {
            break ItmStatus::MaxIterExceeded;
        }
        let denom = c.gamma - p.gamma;
        if denom == 0.0 && c.gamma != 0.0 {
            return Err(Error::SecantBreakdown { h_star: c.h_star });
        }
        let mut h_next = if denom == 0.0 { c.h_star } else { c.h_star - c.gamma * (c.h_star - p.h_star) / denom };
        if !domain.contains(h_next) || !h_next.is_finite() {
            if pulled_back {
                return Err(Error::DomainExit { h_star: h_next });
            }
            pulled_back = true;
            h_next = domain.pull_back(c.h_star, h_next);
        }
        match step(c.j + 1, h_next) {
            Ok(next) => {
                trace.push(next.record);
                prev = std::mem::replace(&mut curr, next);
            }
            Err(Error::SingularRhs { .. }) => break ItmStatus::SingularIntegration,
            Err(Error::OmegaNonPositive { .. }) => break ItmStatus::OmegaNonPositive,
            Err(e) => return Err(e),
        }
    };

    let last = curr.record;
    let rec = recover_values(last.omega, scaling, curr.eval.endpoint, config.s_star)?;
    let origin = problem.report(0.0, State2::new(rec.w0, rec.dw0));
    let profile = if config.record_profile && status == ItmStatus::Converged {
        Some(starred_profile(problem, scaling, config, last.h_star, last.omega)?)
    } else {
        None
    };

    Ok(ItmResult {
        status,
        omega: last.omega,
        h_star: last.h_star,
        s: rec.s,
        w0: origin.w,
        dw0: origin.dw,
        trace,
        profile,
    })
}

/// Re-runs the extended integration at `h*` and maps the starred samples to
/// original, reported variables, in increasing `z`.
fn starred_profile<P: ReducedFreeBvp + ?Sized>(
    problem: &P,
    scaling: &ExtendedScaling,
    config: &ItmConfig,
    h_star: f64,
    omega: f64,
) -> Result<SolutionProfile> {
    let start = State2::new(
        problem.extended_boundary_value(h_star, config.s_star),
        problem.extended_boundary_slope(h_star, config.s_star),
    );
    let run = integrate_inward(extended_system(problem, h_star), config.s_star, start, 0.0, config.n_steps(), true)?;
    let z_scale = omega.powf(-scaling.delta);
    let dw_scale = omega.powf(scaling.delta - 1.0);
    let profile = run.profile.expect("profile requested");
    Ok(profile
        .map(|p| {
            let z = z_scale * p.eta;
            let y = problem.report(z, State2::new(p.u / omega, dw_scale * p.du));
            ProfilePoint { eta: z, u: y.w, du: y.dw }
        })
        .increasing())
}

/// Integrates the original (`h = 1`) problem inward from `s` with start state
/// `(j(s), ℓ(s))` using `n_steps` steps; returns the reported profile in
/// increasing `z`.
pub fn original_profile<P: ReducedFreeBvp + ?Sized>(problem: &P, s: f64, n_steps: usize) -> Result<SolutionProfile> {
    let start = State2::new(problem.boundary_value(s), problem.boundary_slope(s));
    let run = integrate_inward(|z, y| (y.dw, problem.rhs(z, y)), s, start, 0.0, n_steps, true)?;
    let profile = run.profile.expect("profile requested");
    Ok(profile
        .map(|p| {
            let y = problem.report(p.eta, State2::new(p.u, p.du));
            ProfilePoint { eta: p.eta, u: y.w, du: y.dw }
        })
        .increasing())
}

/// `g(w(0), w'(0)) - C` after integrating the original problem inward from `s`.
pub fn origin_residual<P: ReducedFreeBvp + ?Sized>(problem: &P, s: f64, step: f64) -> Result<f64> {
    let start = State2::new(problem.boundary_value(s), problem.boundary_slope(s));
    let run = integrate_inward(|z, y| (y.dw, problem.rhs(z, y)), s, start, 0.0, steps_for(s, step), false)?;
    Ok(problem.origin_condition(run.endpoint) - problem.origin_constant())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `w'' = 0`, `w(0) = 1`, `w(s) = 0`, `w'(s) = -1`: solution `w = 1 - z`, `s = 1`.
    ///
    /// Extended with `δ = 1, σ = 1`: `j = 0`, `ℓ = -h*^0 = -1` is already
    /// invariant, so the generic rule gives `ω = w*(0)`.
    struct Ramp;

    impl ReducedFreeBvp for Ramp {
        fn rhs(&self, _z: f64, _y: State2) -> f64 {
            0.0
        }
        fn origin_condition(&self, y: State2) -> f64 {
            y.w
        }
        fn origin_constant(&self) -> f64 {
            1.0
        }
        fn boundary_value(&self, _s: f64) -> f64 {
            0.0
        }
        fn boundary_slope(&self, _s: f64) -> f64 {
            -1.0
        }
        fn extended_rhs(&self, _h: f64, _z: f64, _y: State2) -> f64 {
            0.0
        }
        fn extended_boundary_value(&self, _h: f64, _s: f64) -> f64 {
            0.0
        }
        fn extended_boundary_slope(&self, _h: f64, _s: f64) -> f64 {
            -1.0
        }
    }

    fn ramp_scaling() -> ExtendedScaling {
        ExtendedScaling::new(1.0, 1.0, OmegaRule::Generic).unwrap()
    }

    #[test]
    fn recover_identity_at_unit_omega() {
        let sc = ExtendedScaling::new(-1.0, 4.0, OmegaRule::Generic).unwrap();
        let r = recover_values(1.0, &sc, State2::new(0.7, -0.3), 0.5).unwrap();
        assert_eq!(r, Recovered { s: 0.5, w0: 0.7, dw0: -0.3 });
    }

    #[test]
    fn recover_group_maps() {
        let stefan = ExtendedScaling::new(-1.0, 4.0, OmegaRule::Generic).unwrap();
        let r = recover_values(2.0, &stefan, State2::new(2.0, -8.0), 0.5).unwrap();
        assert_eq!(r, Recovered { s: 1.0, w0: 1.0, dw0: -2.0 });

        let spread = ExtendedScaling::new(0.5, 1.0, OmegaRule::Generic).unwrap();
        let r = recover_values(4.0, &spread, State2::new(3.0, 2.0), 1.0).unwrap();
        assert_eq!(r.s, 0.5);
        assert_eq!(r.w0, 0.75);
        assert_eq!(r.dw0, 1.0);

        assert_eq!(
            recover_values(0.0, &spread, State2::new(1.0, 1.0), 1.0),
            Err(Error::OmegaNonPositive { omega: 0.0 })
        );
    }

    #[test]
    fn ramp_gamma_is_linear_in_s_star() {
        // w*(0) = s*, ω = s*, Γ = h*/s* - 1
        let cfg = ItmConfig { s_star: 2.0, step: 0.1, ..Default::default() };
        let g = evaluate_gamma(&Ramp, &ramp_scaling(), 3.0, &cfg).unwrap();
        assert!((g.omega - 2.0).abs() < 1e-14);
        assert!((g.gamma - 0.5).abs() < 1e-14);
    }

    #[test]
    fn ramp_secant_recovers_unit_boundary() {
        let cfg = ItmConfig { s_star: 2.0, step: 0.1, h0: 1.0, h1: 3.0, ..Default::default() };
        let r = secant_solve(&Ramp, &ramp_scaling(), &cfg).unwrap();
        assert!(r.converged());
        assert!((r.s - 1.0).abs() < 1e-12);
        assert!((r.w0 - 1.0).abs() < 1e-12);
        assert!((r.dw0 + 1.0).abs() < 1e-12);
        assert!(origin_residual(&Ramp, r.s, 0.01).unwrap().abs() < 1e-12);
    }

    #[test]
    fn generic_rule_needs_nonzero_constant() {
        struct Homogeneous;
        impl ReducedFreeBvp for Homogeneous {
            fn rhs(&self, _z: f64, _y: State2) -> f64 {
                0.0
            }
            fn origin_condition(&self, y: State2) -> f64 {
                y.dw
            }
            fn origin_constant(&self) -> f64 {
                0.0
            }
            fn boundary_value(&self, _s: f64) -> f64 {
                1.0
            }
            fn boundary_slope(&self, _s: f64) -> f64 {
                0.0
            }
            fn extended_rhs(&self, _h: f64, _z: f64, _y: State2) -> f64 {
                0.0
            }
            fn extended_boundary_value(&self, h: f64, _s: f64) -> f64 {
                h
            }
            fn extended_boundary_slope(&self, _h: f64, _s: f64) -> f64 {
                0.0
            }
        }
        let cfg = ItmConfig::default();
        assert!(matches!(evaluate_gamma(&Homogeneous, &ramp_scaling(), 1.0, &cfg), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn config_validation() {
        let d = HStarDomain::POSITIVE;
        assert!(ItmConfig::default().validate(d).is_ok());
        for bad in [
            ItmConfig { s_star: 0.0, ..Default::default() },
            ItmConfig { step: -1e-3, ..Default::default() },
            ItmConfig { tol: 0.0, ..Default::default() },
            ItmConfig { h0: 2.0, h1: 2.0, ..Default::default() },
            ItmConfig { h0: -1.0, ..Default::default() },
            ItmConfig { max_iter: 0, ..Default::default() },
        ] {
            assert!(bad.validate(d).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn domain_pull_back() {
        let d = HStarDomain::POSITIVE;
        assert_eq!(d.pull_back(4.0, -3.0), 2.0);
        let d = HStarDomain { lo: 0.0, hi: 10.0 };
        assert_eq!(d.pull_back(4.0, 12.0), 7.0);
    }

    #[test]
    fn max_iter_is_reported() {
        let cfg = ItmConfig { s_star: 2.0, step: 0.1, h0: 1.0, h1: 3.0, max_iter: 1, ..Default::default() };
        let r = secant_solve(&Ramp, &ramp_scaling(), &cfg).unwrap();
        assert_eq!(r.status, ItmStatus::MaxIterExceeded);
        assert_eq!(r.trace.len(), 2);
    }

    #[test]
    fn flat_gamma_breaks_down() {
        // ω = h*/2 makes Γ = 1 for every h*.
        let sc = ExtendedScaling::new(1.0, 1.0, OmegaRule::Custom(|h, _| h / 2.0)).unwrap();
        let cfg = ItmConfig { s_star: 1.0, step: 0.5, h0: 1.0, h1: 3.0, ..Default::default() };
        assert!(matches!(secant_solve(&Ramp, &sc, &cfg), Err(Error::SecantBreakdown { .. })));
    }

    #[test]
    fn secant_on_custom_rule() {
        // ω = 1/(h* + 1): Γ = h*(h* + 1) - 1, root (√5 - 1)/2.
        let sc = ExtendedScaling::new(1.0, 1.0, OmegaRule::Custom(|h, _| 1.0 / (h + 1.0))).unwrap();
        let cfg = ItmConfig { s_star: 1.0, step: 0.5, h0: 0.01, h1: 0.02, ..Default::default() };
        let r = secant_solve(&Ramp, &sc, &cfg).unwrap();
        assert!(r.converged());
        assert!((r.h_star - (5f64.sqrt() - 1.0) / 2.0).abs() < 1e-6);
    }

    #[test]
    fn repeated_domain_exit_is_an_error() {
        // ω = h*/(h* + 2): Γ = h* + 1 has no admissible root and the secant
        // lands on h* = -1 every time.
        let sc = ExtendedScaling::new(1.0, 1.0, OmegaRule::Custom(|h, _| h / (h + 2.0))).unwrap();
        let cfg = ItmConfig { s_star: 1.0, step: 0.5, h0: 3.0, h1: 2.0, ..Default::default() };
        assert!(matches!(secant_solve(&Ramp, &sc, &cfg), Err(Error::DomainExit { .. })));
    }
}
