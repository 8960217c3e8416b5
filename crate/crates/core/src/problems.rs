//! The two reduced problems: the one-phase Stefan problem and the spreading
//! of a viscous fluid under gravity.

use crate::error::{Error, Result};
use crate::itm::{ExtendedScaling, OmegaRule, ReducedFreeBvp};
use crate::ivp::State2;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StefanParams {
    /// Inverse Stefan number.
    pub s: f64,
}

/// Starting guesses `(h0, h1)` used for the tabulated Stefan runs at `s* = 0.5`.
pub const STEFAN_GUESSES: [(f64, f64, f64); 6] = [
    (0.1, 600.0, 700.0),
    (0.5, 100.0, 150.0),
    (1.0, 30.0, 40.0),
    (5.0, 3.0, 2.0),
    (10.0, 1.0, 0.5),
    (50.0, 1e-3, 1e-2),
];

impl StefanParams {
    pub fn new(s: f64) -> Result<Self> {
        if s > 0.0 && s.is_finite() {
            Ok(Self { s })
        } else {
            Err(Error::InvalidParams(format!("S must be positive, got {s}")))
        }
    }

    /// Initial `h*` guesses for `s* = 0.5`.
    ///
    /// Tabulated values of `S` get their known-good pair. For any other `S`,
    /// `ln h*` is interpolated linearly in `ln S` between the converged roots
    /// at the tabulated values (extrapolated from the end segments), and the
    /// pair brackets that estimate by ten percent. Pass explicit guesses when
    /// using another `s*`.
    pub fn default_guesses(&self) -> (f64, f64) {
        if let Some(&(_, h0, h1)) = STEFAN_GUESSES.iter().find(|g| g.0 == self.s) {
            return (h0, h1);
        }
        let h = stefan_root_estimate(self.s);
        (0.9 * h, 1.1 * h)
    }
}

/// Converged `h*` at `s* = 0.5` for the tabulated `S` values.
const STEFAN_ROOTS: [(f64, f64); 6] =
    [(0.1, 639.06), (0.5, 105.17), (1.0, 37.843), (5.0, 2.2570), (10.0, 0.59990), (50.0, 0.025253)];

fn stefan_root_estimate(s: f64) -> f64 {
    let ln_s = s.ln();
    let k = STEFAN_ROOTS.windows(2).position(|w| ln_s <= w[1].0.ln()).unwrap_or(STEFAN_ROOTS.len() - 2);
    let (a, b) = (STEFAN_ROOTS[k], STEFAN_ROOTS[k + 1]);
    let t = (ln_s - a.0.ln()) / (b.0.ln() - a.0.ln());
    (a.1.ln() + t * (b.1.ln() - a.1.ln())).exp()
}

/// `U'' + (1/2) η U' = 0`, `U(0) = 1`, `U(η_w) = 0`, `U'(η_w) = -(S/2) η_w`.
///
/// Extended: `U'' = -(h^{1/2}/2) η U'`, `U'(η_w) = -(h^{3/4}/2) S η_w`,
/// invariant under `η -> ω^{-1} η, U -> ω U, h -> ω^4 h`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StefanProblem {
    pub params: StefanParams,
}

impl ReducedFreeBvp for StefanProblem {
    fn rhs(&self, z: f64, y: State2) -> f64 {
        -0.5 * z * y.dw
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

    fn boundary_slope(&self, s: f64) -> f64 {
        -0.5 * self.params.s * s
    }

    fn extended_rhs(&self, h_star: f64, z: f64, y: State2) -> f64 {
        -0.5 * h_star.sqrt() * z * y.dw
    }

    fn extended_boundary_value(&self, _h_star: f64, _s: f64) -> f64 {
        0.0
    }

    fn extended_boundary_slope(&self, h_star: f64, s: f64) -> f64 {
        -0.5 * h_star.powf(0.75) * self.params.s * s
    }
}

pub fn make_stefan(params: StefanParams) -> Result<(StefanProblem, ExtendedScaling)> {
    let params = StefanParams::new(params.s)?;
    let scaling = ExtendedScaling::new(-1.0, 4.0, OmegaRule::Custom(|_, end| end.w))?;
    Ok((StefanProblem { params }, scaling))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpreadingParams {
    /// Fluid height at the front.
    pub h: f64,
    /// Front slope constant.
    pub l: f64,
}

impl SpreadingParams {
    pub fn new(h: f64, l: f64) -> Result<Self> {
        if h == 0.0 || !h.is_finite() || !l.is_finite() {
            return Err(Error::InvalidParams(format!("H must be finite and nonzero, got H = {h}, L = {l}")));
        }
        Ok(Self { h, l })
    }

    /// `dU/dη(η_w) = L/(5H³)`
    pub fn front_slope(&self) -> f64 {
        self.l / (5.0 * self.h.powi(3))
    }
}

impl Default for SpreadingParams {
    fn default() -> Self {
        Self { h: 0.5, l: -0.5 }
    }
}

/// Spreading problem in the shifted variable `V = U + η`, which turns the
/// homogeneous origin condition `U'(0) = 0` into `V'(0) = 1`:
///
/// ```text
/// V'' + 3 (V-η)^{-1} (V'-1)^2 + (1/5) η (V-η)^{-3} (V'-1) + (1/5) (V-η)^{-2} = 0
/// V(η_w) = H + η_w,   V'(η_w) = L/(5H³) + 1
/// ```
///
/// The extended form replaces `η` by `h^{1/2} η` inside `V - η` and `V' - 1`,
/// multiplies the last two terms by `h²`, and uses `V(η_w) = hH + h^{1/2} η_w`,
/// `V'(η_w) = h^{1/2} (L/(5H³) + 1)`. It is invariant under
/// `η -> ω^{1/2} η, V -> ω V, h -> ω h`.
///
/// The right-hand side is NaN wherever `V - h^{1/2} η ≤ 0`, so the integrator
/// stops at the singularity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpreadingProblem {
    pub params: SpreadingParams,
}

impl SpreadingProblem {
    fn shifted_rhs(h: f64, root_h: f64, z: f64, y: State2) -> f64 {
        let gap = y.w - root_h * z;
        if gap <= 0.0 {
            return f64::NAN;
        }
        let slope = y.dw - root_h;
        let h2 = h * h / 5.0;
        -3.0 * slope * slope / gap - h2 * z * slope / gap.powi(3) - h2 / (gap * gap)
    }
}

impl ReducedFreeBvp for SpreadingProblem {
    fn rhs(&self, z: f64, y: State2) -> f64 {
        Self::shifted_rhs(1.0, 1.0, z, y)
    }

    fn origin_condition(&self, y: State2) -> f64 {
        y.dw
    }

    fn origin_constant(&self) -> f64 {
        1.0
    }

    fn boundary_value(&self, s: f64) -> f64 {
        self.params.h + s
    }

    fn boundary_slope(&self, _s: f64) -> f64 {
        self.params.front_slope() + 1.0
    }

    fn extended_rhs(&self, h_star: f64, z: f64, y: State2) -> f64 {
        Self::shifted_rhs(h_star, h_star.sqrt(), z, y)
    }

    fn extended_boundary_value(&self, h_star: f64, s: f64) -> f64 {
        h_star * self.params.h + h_star.sqrt() * s
    }

    fn extended_boundary_slope(&self, h_star: f64, _s: f64) -> f64 {
        h_star.sqrt() * (self.params.front_slope() + 1.0)
    }

    fn report(&self, z: f64, y: State2) -> State2 {
        State2::new(y.w - z, y.dw - 1.0)
    }
}

pub fn make_spreading(params: SpreadingParams) -> Result<(SpreadingProblem, ExtendedScaling)> {
    let params = SpreadingParams::new(params.h, params.l)?;
    let scaling = ExtendedScaling::new(0.5, 1.0, OmegaRule::Custom(|_, end| end.dw * end.dw))?;
    Ok((SpreadingProblem { params }, scaling))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::itm::{degeneracy_defect, evaluate_gamma, secant_solve, ItmConfig};
    use crate::reference::{exact_spreading, neumann_eta_w, neumann_profile};

    fn sample_states() -> Vec<(f64, State2)> {
        (0..24)
            .map(|i| {
                let t = i as f64 / 23.0;
                (0.05 + 0.9 * t, State2::new(1.2 + 0.7 * t, -0.8 + 1.1 * t * t))
            })
            .collect()
    }

    #[test]
    fn params_are_validated() {
        assert!(make_stefan(StefanParams { s: 0.0 }).is_err());
        assert!(make_stefan(StefanParams { s: -1.0 }).is_err());
        assert!(make_spreading(SpreadingParams { h: 0.0, l: 1.0 }).is_err());
    }

    #[test]
    fn stefan_degenerates_at_unit_h() {
        let (p, _) = make_stefan(StefanParams { s: 1.0 }).unwrap();
        let y = State2::new(0.7, -0.5);
        assert_eq!(p.extended_rhs(1.0, 0.3, y), p.rhs(0.3, y));
        assert_eq!(degeneracy_defect(&p, &sample_states()), 0.0);
    }

    #[test]
    fn spreading_degenerates_at_unit_h() {
        let (p, _) = make_spreading(SpreadingParams::default()).unwrap();
        assert_eq!(degeneracy_defect(&p, &sample_states()), 0.0);
        assert_eq!(p.extended_boundary_value(1.0, 0.8), 0.5 + 0.8);
        assert_eq!(p.extended_boundary_slope(1.0, 0.8), -0.8 + 1.0);
    }

    #[test]
    fn spreading_front_slope_in_unshifted_variables() {
        let (p, _) = make_spreading(SpreadingParams::default()).unwrap();
        assert!((p.params.front_slope() + 0.8).abs() < 1e-15);
        let s = 1.0;
        let u = p.report(s, State2::new(p.boundary_value(s), p.boundary_slope(s)));
        assert!((u.w - 0.5).abs() < 1e-15);
        assert!((u.dw + 0.8).abs() < 1e-15);
    }

    #[test]
    fn spreading_rhs_flags_singularity() {
        let (p, _) = make_spreading(SpreadingParams::default()).unwrap();
        assert!(p.rhs(1.0, State2::new(0.9, 0.0)).is_nan());
        assert!(p.extended_rhs(4.0, 1.0, State2::new(2.0, 0.0)).is_nan());
        assert!(p.rhs(0.5, State2::new(1.2, 0.5)).is_finite());
    }

    #[test]
    fn spreading_shifted_rhs_matches_unshifted_equation() {
        // U'' = -3 U'^2/U - (1/5) η U' U^{-3} - (1/5) U^{-2}
        let (p, _) = make_spreading(SpreadingParams::default()).unwrap();
        for &(z, y) in &sample_states() {
            let (u, du) = (y.w, y.dw);
            let expected = -3.0 * du * du / u - 0.2 * z * du / u.powi(3) - 0.2 / (u * u);
            let got = p.rhs(z, State2::new(u + z, du + 1.0));
            assert!((got - expected).abs() < 1e-12 * (1.0 + expected.abs()));
        }
    }

    #[test]
    fn stefan_default_guesses() {
        assert_eq!(StefanParams { s: 1.0 }.default_guesses(), (30.0, 40.0));
        assert_eq!(StefanParams { s: 50.0 }.default_guesses(), (1e-3, 1e-2));
        let (h0, h1) = StefanParams { s: 2.0 }.default_guesses();
        assert!(h0 < h1 && (2.257..37.843).contains(&h0) && (2.257..37.843).contains(&h1));
        let (h0, _) = StefanParams { s: 100.0 }.default_guesses();
        assert!(h0 > 0.0 && h0 < 0.025253);
    }

    #[test]
    fn stefan_solve_matches_neumann() {
        for (s, h0, h1) in STEFAN_GUESSES {
            let (p, sc) = make_stefan(StefanParams { s }).unwrap();
            let cfg = ItmConfig { s_star: 0.5, step: 1e-3, h0, h1, record_profile: true, ..Default::default() };
            let r = secant_solve(&p, &sc, &cfg).unwrap();
            assert!(r.converged(), "S = {s}: {:?}", r.status);
            let eta_w = neumann_eta_w(s).unwrap();
            assert!((r.s - eta_w).abs() < 1e-6, "S = {s}: {} vs {eta_w}", r.s);
            assert!((r.w0 - 1.0).abs() < 1e-6);
            let exact = neumann_profile(0.0, eta_w).unwrap();
            assert!((r.dw0 - exact.dw).abs() < 1e-6);
            let prof = r.profile.unwrap();
            assert_eq!(prof.len(), 501);
            for pt in prof.iter() {
                let e = neumann_profile(pt.eta.min(eta_w), eta_w).unwrap();
                assert!((pt.u - e.w).abs() < 1e-5, "S = {s}, eta = {}", pt.eta);
            }
        }
    }

    #[test]
    fn stefan_table_rows_for_ten_and_zero_point_one() {
        let (p, sc) = make_stefan(StefanParams { s: 10.0 }).unwrap();
        let cfg = ItmConfig { s_star: 0.5, step: 1e-3, h0: 1.0, h1: 0.5, ..Default::default() };
        let r = secant_solve(&p, &sc, &cfg).unwrap();
        assert!((r.s - 0.440033).abs() < 1e-4);
        assert!((r.dw0 + 2.309323).abs() < 1e-4);

        let (p, sc) = make_stefan(StefanParams { s: 0.1 }).unwrap();
        let cfg = ItmConfig { s_star: 0.5, step: 1e-3, h0: 600.0, h1: 700.0, ..Default::default() };
        let r = secant_solve(&p, &sc, &cfg).unwrap();
        // Exact front 2.5139442; the tabulated ITM value 2.514145 sits 2e-4 above it.
        assert!((r.s - 2.5139442).abs() < 1e-6);
    }

    #[test]
    fn spreading_solve_matches_exact() {
        let (p, sc) = make_spreading(SpreadingParams::default()).unwrap();
        for s_star in [0.5, 1.0] {
            let cfg = ItmConfig { s_star, step: 5e-4, h0: 0.5, h1: 0.1, record_profile: true, ..Default::default() };
            let r = secant_solve(&p, &sc, &cfg).unwrap();
            assert!(r.converged());
            assert!(r.iterations() <= 7, "{}", r.iterations());
            assert!((r.s - 1.0).abs() < 1e-6);
            assert!((r.w0 - (17.0f64 / 40.0).cbrt()).abs() < 1e-6);
            assert!(r.dw0.abs() < 1e-6);
            for pt in r.profile.unwrap().iter() {
                let e = exact_spreading(pt.eta.min(1.0)).unwrap();
                assert!((pt.u - e.w).abs() < 1e-5);
            }
        }
    }

    #[test]
    fn spreading_gamma_near_unit_h_is_small() {
        let (p, sc) = make_spreading(SpreadingParams::default()).unwrap();
        let cfg = ItmConfig { s_star: 1.0, step: 5e-4, ..Default::default() };
        let g = evaluate_gamma(&p, &sc, 1.0, &cfg).unwrap();
        assert!(g.gamma.abs() < 1e-8);
        assert!((g.omega - 1.0).abs() < 1e-8);
    }

    #[test]
    fn spreading_integration_hits_singularity() {
        // A steep front slope drives V - η through zero before the origin.
        let (p, sc) = make_spreading(SpreadingParams { h: 0.5, l: 20.0 }).unwrap();
        let cfg = ItmConfig { s_star: 1.0, step: 5e-4, ..Default::default() };
        let e = evaluate_gamma(&p, &sc, 1.0, &cfg).unwrap_err();
        assert!(matches!(e, Error::SingularRhs { .. }), "{e:?}");
    }
}
