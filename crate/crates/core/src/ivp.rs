//! Fixed-step classical Runge-Kutta integration of second order scalar ODEs
//! written as two-component first order systems.

use crate::error::{Error, Result};

/// Field value and first derivative at one abscissa.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct State2 {
    pub w: f64,
    pub dw: f64,
}

impl State2 {
    pub const fn new(w: f64, dw: f64) -> Self {
        Self { w, dw }
    }

    pub fn is_finite(&self) -> bool {
        self.w.is_finite() && self.dw.is_finite()
    }

    fn axpy(self, a: f64, k: (f64, f64)) -> Self {
        Self::new(self.w + a * k.0, self.dw + a * k.1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfilePoint {
    pub eta: f64,
    pub u: f64,
    pub du: f64,
}

/// Sampled `(η, U, dU/dη)` triples, in the order they were produced.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SolutionProfile {
    pub points: Vec<ProfilePoint>,
}

impl SolutionProfile {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ProfilePoint> {
        self.points.iter()
    }

    /// Returns the profile ordered by increasing abscissa.
    pub fn increasing(mut self) -> Self {
        if self.points.len() > 1 && self.points[0].eta > self.points[self.points.len() - 1].eta {
            self.points.reverse();
        }
        self
    }

    pub fn map(&self, f: impl Fn(&ProfilePoint) -> ProfilePoint) -> Self {
        Self { points: self.points.iter().map(f).collect() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IntegrationResult {
    pub endpoint: State2,
    pub profile: Option<SolutionProfile>,
    pub steps_taken: usize,
}

/// Number of steps needed to cover `span` with steps of magnitude close to `step`.
///
/// The exact step is recomputed from this count so the terminal abscissa is
/// hit exactly.
pub fn steps_for(span: f64, step: f64) -> usize {
    ((span.abs() / step.abs()).round() as usize).max(1)
}

/// Integrates `y' = rhs(z, y)` from `z_start` to `z_end` with `n_steps`
/// classical RK4 steps. Either direction is allowed.
///
/// Stage abscissae are computed as `z_start + i·Δz` rather than accumulated,
/// and the last step lands on `z_end` exactly.
pub fn integrate<F>(
    rhs: F,
    z_start: f64,
    y_start: State2,
    z_end: f64,
    n_steps: usize,
    record_profile: bool,
) -> Result<IntegrationResult>
where
    F: Fn(f64, State2) -> (f64, f64),
{
    if n_steps == 0 {
        return Err(Error::InvalidParams("n_steps must be at least 1".into()));
    }
    if !(z_start.is_finite() && z_end.is_finite()) || z_start == z_end {
        return Err(Error::InvalidParams(format!("integration interval [{z_start}, {z_end}] is empty or not finite")));
    }
    if !y_start.is_finite() {
        return Err(Error::SingularRhs { z: z_start });
    }

    let dz = (z_end - z_start) / n_steps as f64;
    let eval = |z: f64, y: State2| -> Result<(f64, f64)> {
        let k = rhs(z, y);
        if k.0.is_finite() && k.1.is_finite() {
            Ok(k)
        } else {
            Err(Error::SingularRhs { z })
        }
    };

    let mut profile = record_profile.then(|| {
        let mut p = Vec::with_capacity(n_steps + 1);
        p.push(ProfilePoint { eta: z_start, u: y_start.w, du: y_start.dw });
        p
    });

    let mut y = y_start;
    for i in 0..n_steps {
        let z = z_start + i as f64 * dz;
        let k1 = eval(z, y)?;
        let k2 = eval(z + 0.5 * dz, y.axpy(0.5 * dz, k1))?;
        let k3 = eval(z + 0.5 * dz, y.axpy(0.5 * dz, k2))?;
        let k4 = eval(z + dz, y.axpy(dz, k3))?;
        y = State2::new(
            y.w + dz / 6.0 * (k1.0 + 2.0 * k2.0 + 2.0 * k3.0 + k4.0),
            y.dw + dz / 6.0 * (k1.1 + 2.0 * k2.1 + 2.0 * k3.1 + k4.1),
        );
        let z_next = if i + 1 == n_steps { z_end } else { z_start + (i + 1) as f64 * dz };
        if !y.is_finite() {
            return Err(Error::SingularRhs { z: z_next });
        }
        if let Some(p) = profile.as_mut() {
            p.push(ProfilePoint { eta: z_next, u: y.w, du: y.dw });
        }
    }

    Ok(IntegrationResult {
        endpoint: y,
        profile: profile.map(|points| SolutionProfile { points }),
        steps_taken: n_steps,
    })
}

/// Inward integration: `z_end` must lie strictly below `z_start`.
pub fn integrate_inward<F>(
    rhs: F,
    z_start: f64,
    y_start: State2,
    z_end: f64,
    n_steps: usize,
    record_profile: bool,
) -> Result<IntegrationResult>
where
    F: Fn(f64, State2) -> (f64, f64),
{
    if z_end >= z_start {
        return Err(Error::InvalidParams(format!(
            "inward integration needs z_end < z_start, got {z_end} >= {z_start}"
        )));
    }
    integrate(rhs, z_start, y_start, z_end, n_steps, record_profile)
}
