use std::time::Instant;

use rayon::prelude::*;

use freebound::itm::{original_profile, secant_solve};
use freebound::problems::STEFAN_GUESSES;
use freebound::similarity::{check_invariance, reconstruct_physical, OriginKind, SimilarityExponents};
use freebound::{
    make_spreading, make_stefan, Error, ExtendedScaling, ItmConfig, ItmResult, ItmStatus, ReducedFreeBvp, Result,
    SpreadingParams, StefanParams,
};

use crate::args::{Cli, Command, InvarianceArgs, Preset, ProblemCmd, SpreadArgs, StefanArgs, Which};
use crate::render;
use crate::report::{Parameters, RunReport};

/// Rendered output plus the exit status it should end with.
pub struct Outcome {
    pub text: String,
    pub code: u8,
    pub message: Option<String>,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, code: 0, message: None }
    }
}

fn status_code(status: ItmStatus) -> u8 {
    match status {
        ItmStatus::Converged => 0,
        ItmStatus::MaxIterExceeded | ItmStatus::OmegaNonPositive => 2,
        ItmStatus::SingularIntegration => 4,
    }
}

struct Setup {
    problem: Box<dyn ReducedFreeBvp>,
    scaling: ExtendedScaling,
    config: ItmConfig,
    parameters: Parameters,
    exponents: SimilarityExponents,
}

fn stefan_setup(a: &StefanArgs, cli: &Cli) -> Result<Setup> {
    let params = StefanParams::new(a.s)?;
    let (g0, g1) = params.default_guesses();
    let (problem, scaling) = make_stefan(params)?;
    Ok(Setup {
        problem: Box::new(problem),
        scaling,
        config: ItmConfig {
            s_star: a.s_star,
            step: a.step,
            tol: cli.tol,
            max_iter: cli.max_iter,
            h0: a.h0.unwrap_or(g0),
            h1: a.h1.unwrap_or(g1),
            record_profile: false,
        },
        parameters: Parameters::Stefan { s: a.s },
        exponents: SimilarityExponents::stefan(),
    })
}

fn spread_setup(a: &SpreadArgs, cli: &Cli) -> Result<Setup> {
    let (problem, scaling) = make_spreading(SpreadingParams::new(a.h, a.l)?)?;
    Ok(Setup {
        problem: Box::new(problem),
        scaling,
        config: ItmConfig {
            s_star: a.s_star,
            step: a.step,
            tol: cli.tol,
            max_iter: cli.max_iter,
            h0: a.h0,
            h1: a.h1,
            record_profile: false,
        },
        parameters: Parameters::Spread { h: a.h, l: a.l },
        exponents: SimilarityExponents::spreading(),
    })
}

fn setup_for(cmd: &ProblemCmd, cli: &Cli) -> Result<Setup> {
    match cmd {
        ProblemCmd::Stefan(a) => stefan_setup(a, cli),
        ProblemCmd::Spread(a) => spread_setup(a, cli),
    }
}

impl Setup {
    fn solve(&self, timing: bool) -> Result<(ItmResult, RunReport)> {
        let start = Instant::now();
        let result = secant_solve(&*self.problem, &self.scaling, &self.config)?;
        let wall = timing.then(|| start.elapsed().as_secs_f64());
        let report = RunReport::new(self.parameters, &self.config, &result, wall);
        Ok((result, report))
    }

    /// Solves and insists on convergence before anything is derived from it.
    fn solve_converged(&self) -> Result<std::result::Result<ItmResult, Outcome>> {
        let (result, _) = self.solve(false)?;
        if result.converged() {
            return Ok(Ok(result));
        }
        Ok(Err(Outcome {
            text: String::new(),
            code: status_code(result.status),
            message: Some(format!("error: solve did not converge ({})", result.status.as_str())),
        }))
    }
}

fn single_run(setup: Setup, cli: &Cli) -> Result<Outcome> {
    let (result, report) = setup.solve(cli.timing)?;
    let text = render::run(&report, cli.format, cli.trace);
    let code = status_code(result.status);
    let message = (code != 0).then(|| format!("error: solve did not converge ({})", result.status.as_str()));
    Ok(Outcome { text, code, message })
}

fn table(which: Which, cli: &Cli) -> Result<Outcome> {
    let setups: Vec<Setup> = match which {
        Which::Stefan => STEFAN_GUESSES
            .iter()
            .map(|&(s, h0, h1)| {
                let args = StefanArgs { s, s_star: 0.5, step: 1e-3, h0: Some(h0), h1: Some(h1) };
                stefan_setup(&args, cli)
            })
            .collect::<Result<_>>()?,
        Which::Spread => [0.5, 1.0]
            .iter()
            .map(|&s_star| {
                let args = SpreadArgs { h: 0.5, l: -0.5, s_star, step: 5e-4, h0: 0.5, h1: 0.1 };
                spread_setup(&args, cli)
            })
            .collect::<Result<_>>()?,
    };
    let reports: Vec<RunReport> =
        setups.par_iter().map(|s| s.solve(cli.timing).map(|(_, r)| r)).collect::<Result<_>>()?;

    let text = match which {
        Which::Stefan => render::stefan_table(&reports, cli.format),
        Which::Spread => render::spread_table(&reports, cli.format),
    };
    let failed = reports.iter().filter(|r| !r.converged()).count();
    Ok(Outcome {
        text,
        code: if failed == 0 { 0 } else { 2 },
        message: (failed > 0).then(|| format!("error: {failed} row(s) did not converge")),
    })
}

fn profile(cmd: &ProblemCmd, points: usize, cli: &Cli) -> Result<Outcome> {
    let setup = setup_for(cmd, cli)?;
    let result = match setup.solve_converged()? {
        Ok(r) => r,
        Err(outcome) => return Ok(outcome),
    };
    let profile = original_profile(&*setup.problem, result.s, points)?;
    Ok(Outcome::ok(render::profile(&profile, cli.format)))
}

fn reconstruct(cmd: &ProblemCmd, t: f64, points: usize, cli: &Cli) -> Result<Outcome> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::NonPositiveTime(t));
    }
    let setup = setup_for(cmd, cli)?;
    let result = match setup.solve_converged()? {
        Ok(r) => r,
        Err(outcome) => return Ok(outcome),
    };
    let profile = original_profile(&*setup.problem, result.s, points)?;
    let physical = reconstruct_physical(&profile, &setup.exponents, result.s, t)?;
    Ok(Outcome::ok(render::physical(&physical, cli.format)))
}

fn invariance(a: &InvarianceArgs, cli: &Cli) -> Result<Outcome> {
    let mut exps = match (a.preset, a.n, a.alpha) {
        (Some(Preset::Stefan), ..) => SimilarityExponents::stefan(),
        (Some(Preset::Spread), ..) => SimilarityExponents::spreading(),
        (None, Some(n), Some(alpha)) => match a.beta {
            Some(beta) => SimilarityExponents::neumann(n, alpha, beta, a.coef)?,
            None => SimilarityExponents::dirichlet(n, alpha, a.coef)?,
        },
        _ => return Err(Error::InvalidParams("give a preset or both --n and --alpha".into())),
    };
    if let Some(gamma) = a.gamma {
        exps.gamma = gamma;
    }
    let residuals = check_invariance(&exps)?;
    let origin = match exps.origin_kind {
        OriginKind::Dirichlet => "dirichlet",
        OriginKind::Neumann => "neumann",
    };
    Ok(Outcome::ok(render::invariance(&exps, origin, &residuals, cli.format)))
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Stefan(a) => single_run(stefan_setup(a, cli)?, cli),
        Command::Spread(a) => single_run(spread_setup(a, cli)?, cli),
        Command::Table { which } => table(*which, cli),
        Command::Profile(p) => profile(&p.problem, p.points, cli),
        Command::Reconstruct(r) => reconstruct(&r.problem, r.t, r.points, cli),
        Command::CheckInvariance(a) => invariance(a, cli),
    }
}
