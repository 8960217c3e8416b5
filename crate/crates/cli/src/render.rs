//! Text, CSV and JSON output. Human tables use 6 decimals; CSV uses 9
//! significant digits in scientific form; JSON uses shortest round-trip floats.

use std::fmt::Write;

use serde::Serialize;
use serde_json::json;

use freebound::similarity::{InvarianceResiduals, PhysicalProfile, SimilarityExponents};
use freebound::SolutionProfile;

use crate::args::Format;
use crate::report::{Parameters, RunReport};

fn sci(x: f64) -> String {
    format!("{x:.8e}")
}

fn fixed(x: f64) -> String {
    format!("{x:.6}")
}

fn json_text<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn csv_line(out: &mut String, fields: &[String]) {
    out.push_str(&fields.join(","));
    out.push('\n');
}

pub fn run(report: &RunReport, format: Format, trace: bool) -> String {
    match format {
        Format::Json => json_text(report),
        Format::Csv => run_csv(report, trace),
        Format::Table => run_human(report, trace),
    }
}

/// With `--trace` the CSV holds one row per iterate instead of the summary row.
fn run_csv(report: &RunReport, trace: bool) -> String {
    let mut out = String::new();
    if trace {
        out.push_str("j,h_star,gamma,omega,s\n");
        for t in &report.trace {
            csv_line(&mut out, &[t.j.to_string(), sci(t.h_star), sci(t.gamma), sci(t.omega), sci(t.s)]);
        }
        return out;
    }
    let r = &report.result;
    out.push_str("problem,status,j,h_star,omega,gamma,eta_w,U0,dU0\n");
    csv_line(
        &mut out,
        &[
            report.problem.to_string(),
            r.status.to_string(),
            r.iterations.to_string(),
            sci(r.h_star),
            sci(r.omega),
            sci(r.gamma),
            sci(r.eta_w),
            sci(r.u0),
            sci(r.du0),
        ],
    );
    out
}

fn run_human(report: &RunReport, trace: bool) -> String {
    let mut out = String::new();
    let r = &report.result;
    let params = match report.parameters {
        Parameters::Stefan { s } => format!("S = {}", fixed(s)),
        Parameters::Spread { h, l } => format!("H = {}, L = {}", fixed(h), fixed(l)),
    };
    let _ = writeln!(out, "{} ({params})", report.problem);
    let _ = writeln!(out, "  {:<12}{} after j = {}", "status", r.status, r.iterations);
    for (name, v) in [
        ("h*", r.h_star),
        ("omega", r.omega),
        ("Gamma", r.gamma),
        ("eta_w", r.eta_w),
        ("U(0)", r.u0),
        ("dU/deta(0)", r.du0),
    ] {
        let _ = writeln!(out, "  {name:<12}{}", fixed(v));
    }
    for c in &report.references {
        let _ = writeln!(out, "  {:<12}{} {} (delta {:+.6})", c.quantity, c.source, fixed(c.reference), c.delta);
    }
    if let Some(w) = report.wall_time_s {
        let _ = writeln!(out, "  {:<12}{w:.6} s", "wall time");
    }
    if trace {
        let _ = writeln!(out, "\n  {:>3}  {:>16}  {:>16}  {:>12}", "j", "h*_j", "Gamma", "s_j");
        for t in &report.trace {
            let _ = writeln!(out, "  {:>3}  {:>16}  {:>16}  {:>12}", t.j, fixed(t.h_star), fixed(t.gamma), fixed(t.s));
        }
    }
    out
}

pub fn stefan_table(reports: &[RunReport], format: Format) -> String {
    if format == Format::Json {
        return json_text(reports);
    }
    let asymptotic = |r: &RunReport| r.reference("eta_w", "asymptotic").map(|c| (c.reference, c.delta));
    let mut out = String::new();
    if format == Format::Csv {
        out.push_str("S,h_star,dU0,eta_w,eta_w_asymptotic,delta\n");
        for r in reports {
            let Parameters::Stefan { s } = r.parameters else { continue };
            let (asym, delta) = asymptotic(r).map_or((String::new(), String::new()), |(a, d)| (sci(a), sci(d)));
            csv_line(&mut out, &[sci(s), sci(r.result.h_star), sci(r.result.du0), sci(r.result.eta_w), asym, delta]);
        }
        return out;
    }
    let _ = writeln!(
        out,
        "{:>6}  {:>3}  {:>14}  {:>12}  {:>10}  {:>10}  {:>10}  status",
        "S", "j", "h*_j", "dU/deta(0)", "eta_w", "asymptotic", "delta"
    );
    for r in reports {
        let Parameters::Stefan { s } = r.parameters else { continue };
        for (i, t) in r.trace.iter().take(2).enumerate() {
            let label = if i == 0 { format!("{s}") } else { String::new() };
            let _ = writeln!(out, "{label:>6}  {:>3}  {:>14}", t.j, fixed(t.h_star));
        }
        let (asym, delta) =
            asymptotic(r).map_or((String::new(), String::new()), |(a, d)| (fixed(a), format!("{d:+.6}")));
        let _ = writeln!(
            out,
            "{:>6}  {:>3}  {:>14}  {:>12}  {:>10}  {:>10}  {:>10}  {}",
            "",
            r.result.iterations,
            fixed(r.result.h_star),
            fixed(r.result.du0),
            fixed(r.result.eta_w),
            asym,
            delta,
            r.result.status
        );
    }
    out
}

pub fn spread_table(reports: &[RunReport], format: Format) -> String {
    if format == Format::Json {
        return json_text(reports);
    }
    let exact = |r: &RunReport| r.reference("eta_w", "exact").map(|c| c.delta);
    let mut out = String::new();
    if format == Format::Csv {
        out.push_str("s_star,j,h_star,gamma,U0,eta_w,delta\n");
        for r in reports {
            let s_star = sci(r.config.s_star);
            for t in r.trace.iter().take(2) {
                csv_line(
                    &mut out,
                    &[
                        s_star.clone(),
                        t.j.to_string(),
                        sci(t.h_star),
                        sci(t.gamma),
                        String::new(),
                        String::new(),
                        String::new(),
                    ],
                );
            }
            csv_line(
                &mut out,
                &[
                    s_star,
                    r.result.iterations.to_string(),
                    sci(r.result.h_star),
                    sci(r.result.gamma),
                    sci(r.result.u0),
                    sci(r.result.eta_w),
                    exact(r).map_or(String::new(), sci),
                ],
            );
        }
        return out;
    }
    let _ = writeln!(
        out,
        "{:>6}  {:>3}  {:>10}  {:>14}  {:>10}  {:>10}  {:>10}  status",
        "s*", "j", "h*_j", "Gamma", "U(0)", "eta_w", "delta"
    );
    for r in reports {
        for (i, t) in r.trace.iter().take(2).enumerate() {
            let label = if i == 0 { format!("{}", r.config.s_star) } else { String::new() };
            let _ = writeln!(out, "{label:>6}  {:>3}  {:>10}  {:>14}", t.j, fixed(t.h_star), fixed(t.gamma));
        }
        let _ = writeln!(
            out,
            "{:>6}  {:>3}  {:>10}  {:>14.6e}  {:>10}  {:>10}  {:>10}  {}",
            "",
            r.result.iterations,
            fixed(r.result.h_star),
            r.result.gamma,
            fixed(r.result.u0),
            fixed(r.result.eta_w),
            exact(r).map_or(String::new(), |d| format!("{d:+.6}")),
            r.result.status
        );
    }
    out
}

pub fn profile(profile: &SolutionProfile, format: Format) -> String {
    if format == Format::Json {
        let points: Vec<_> = profile.iter().map(|p| json!({ "eta": p.eta, "U": p.u, "dU": p.du })).collect();
        return json_text(&points);
    }
    let mut out = String::from("eta,U,dU\n");
    for p in profile.iter() {
        csv_line(&mut out, &[sci(p.eta), sci(p.u), sci(p.du)]);
    }
    out
}

pub fn physical(profile: &PhysicalProfile, format: Format) -> String {
    if format == Format::Json {
        let samples: Vec<_> = profile.samples.iter().map(|p| json!({ "x": p.x, "u": p.u, "du_dx": p.du_dx })).collect();
        return json_text(&json!({ "t": profile.t, "x_w": profile.x_w, "samples": samples }));
    }
    let mut out = format!("# x_w={}\nx,u,du_dx\n", sci(profile.x_w));
    for p in &profile.samples {
        csv_line(&mut out, &[sci(p.x), sci(p.u), sci(p.du_dx)]);
    }
    out
}

pub fn invariance(exps: &SimilarityExponents, origin: &str, residuals: &InvarianceResiduals, format: Format) -> String {
    let invariant = residuals.is_invariant(1e-12);
    match format {
        Format::Json => json_text(&json!({
            "n": exps.n,
            "alpha": exps.alpha,
            "beta": exps.beta,
            "gamma": exps.gamma,
            "origin": origin,
            "pde_residual": residuals.pde,
            "origin_residual": residuals.origin,
            "invariant": invariant,
        })),
        Format::Csv => {
            let mut out = String::from("n,alpha,beta,gamma,origin,pde_residual,origin_residual,invariant\n");
            csv_line(
                &mut out,
                &[
                    sci(exps.n),
                    sci(exps.alpha),
                    exps.beta.map_or(String::new(), sci),
                    sci(exps.gamma),
                    origin.to_string(),
                    sci(residuals.pde),
                    sci(residuals.origin),
                    invariant.to_string(),
                ],
            );
            out
        }
        Format::Table => {
            let beta = exps.beta.map_or("-".to_string(), fixed);
            let mut out = String::new();
            let _ = writeln!(
                out,
                "n = {}, alpha = {}, beta = {beta}, gamma = {}, {origin} origin",
                fixed(exps.n),
                fixed(exps.alpha),
                fixed(exps.gamma)
            );
            let _ = writeln!(out, "  {:<18}{:+.6e}", "pde residual", residuals.pde);
            let _ = writeln!(out, "  {:<18}{:+.6e}", "origin residual", residuals.origin);
            let _ = writeln!(out, "  {:<18}{}", "invariant", if invariant { "yes" } else { "no" });
            out
        }
    }
}
