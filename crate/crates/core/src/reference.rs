//! Closed-form and tabulated reference solutions.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::ivp::State2;

const FRAC_2_SQRT_PI: f64 = std::f64::consts::FRAC_2_SQRT_PI;
const SERIES_LIMIT: f64 = 3.0;

/// Error function, absolute error below `1e-15` on the real line.
///
/// `|x| < 3` uses the everywhere-positive series
/// `erf(x) = 2/√π e^{-x²} Σ 2^k x^{2k+1} / (2k+1)!!`; beyond that
/// `erf = 1 - erfc` with `erfc` from its continued fraction.
pub fn erf(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    let ax = x.abs();
    let v = if ax < SERIES_LIMIT { erf_series(ax) } else { 1.0 - erfc_continued_fraction(ax) };
    if x < 0.0 {
        -v
    } else {
        v
    }
}

/// Complementary error function.
pub fn erfc(x: f64) -> f64 {
    if x >= SERIES_LIMIT {
        erfc_continued_fraction(x)
    } else {
        1.0 - erf(x)
    }
}

fn erf_series(x: f64) -> f64 {
    let two_x2 = 2.0 * x * x;
    let mut term = x;
    let mut sum = x;
    let mut k = 0.0;
    while term > 1e-17 * sum {
        k += 1.0;
        term *= two_x2 / (2.0 * k + 1.0);
        sum += term;
    }
    FRAC_2_SQRT_PI * (-x * x).exp() * sum
}

/// `erfc(x) = e^{-x²}/√π · 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))`, `x ≥ 3`.
fn erfc_continued_fraction(x: f64) -> f64 {
    if x > 27.0 {
        return 0.0;
    }
    let mut tail = x;
    for k in (1..=80).rev() {
        tail = x + 0.5 * k as f64 / tail;
    }
    (-x * x).exp() / (PI.sqrt() * tail)
}

/// Left-hand side of the Neumann front equation
/// `√π S η_w exp(η_w²/4) erf(η_w/2) - 2`.
pub fn neumann_residual(s: f64, eta_w: f64) -> f64 {
    PI.sqrt() * s * eta_w * (0.25 * eta_w * eta_w).exp() * erf(0.5 * eta_w) - 2.0
}

/// Front position of the Neumann solution for inverse Stefan number `s`.
///
/// The residual is strictly increasing in `η_w` from `-2` at the origin, so
/// the positive root is unique. It is bracketed by doubling from `(0, 4]`,
/// bisected, then polished with Newton steps that stay in the bracket.
pub fn neumann_eta_w(s: f64) -> Result<f64> {
    if !(s > 0.0 && s.is_finite()) {
        return Err(Error::InvalidParams(format!("S must be positive, got {s}")));
    }
    let f = |e: f64| neumann_residual(s, e);
    let (mut lo, mut hi) = (0.0, 4.0);
    while f(hi) < 0.0 {
        lo = hi;
        hi *= 2.0;
        if !hi.is_finite() || hi > 1e3 {
            return Err(Error::InvalidParams(format!("no bracket for the Neumann front at S = {s}")));
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut root = 0.5 * (lo + hi);
    for _ in 0..3 {
        let e2 = (0.25 * root * root).exp();
        let d = PI.sqrt() * s * e2 * erf(0.5 * root) * (1.0 + 0.5 * root * root) + s * root;
        let next = root - f(root) / d;
        if next.is_finite() && next >= lo && next <= hi && f(next).abs() <= f(root).abs() {
            root = next;
        } else {
            break;
        }
    }
    Ok(root)
}

fn check_domain(value: f64, lo: f64, hi: f64) -> Result<()> {
    if value >= lo && value <= hi {
        Ok(())
    } else {
        Err(Error::DomainError { value, lo, hi })
    }
}

/// Neumann solution `U = 1 - erf(η/2)/erf(η_w/2)` and its derivative.
pub fn neumann_profile(eta: f64, eta_w: f64) -> Result<State2> {
    if !(eta_w > 0.0 && eta_w.is_finite()) {
        return Err(Error::InvalidParams(format!("eta_w must be positive, got {eta_w}")));
    }
    check_domain(eta, 0.0, eta_w)?;
    let denom = erf(0.5 * eta_w);
    Ok(State2::new(1.0 - erf(0.5 * eta) / denom, -(-0.25 * eta * eta).exp() / (PI.sqrt() * denom)))
}

/// Exact spreading profile for `H = 1/2`, `L = -1/2`, front at `η_w = 1`:
/// `U = [(3/10)(5/12 + 1 - η²)]^{1/3}`, `U' = -(η/5) U^{-2}`.
pub fn exact_spreading(eta: f64) -> Result<State2> {
    check_domain(eta, 0.0, 1.0)?;
    let u = (0.3 * (5.0 / 12.0 + 1.0 - eta * eta)).cbrt();
    Ok(State2::new(u, -eta / (5.0 * u * u)))
}

/// Asymptotic Neumann fronts against which the Stefan runs are compared.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceTable {
    pub entries: &'static [(f64, f64)],
}

pub const ASYMPTOTIC_ETA_W: ReferenceTable = ReferenceTable {
    entries: &[(0.1, 2.513961), (0.5, 1.601187), (1.0, 1.240161), (5.0, 0.612864), (10.0, 0.440000), (50.0, 0.199499)],
};

impl ReferenceTable {
    pub fn get(&self, s: f64) -> Option<f64> {
        self.entries.iter().find(|(k, _)| (k - s).abs() <= 1e-12 * k.abs().max(1.0)).map(|&(_, v)| v)
    }
}

pub fn asymptotic_eta_w(s: f64) -> Result<f64> {
    ASYMPTOTIC_ETA_W.get(s).ok_or(Error::NotTabulated(s))
}
