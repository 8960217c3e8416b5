use serde::Serialize;

use freebound::reference::{asymptotic_eta_w, exact_spreading, neumann_eta_w};
use freebound::{ItmConfig, ItmIteration, ItmResult};

#[derive(Debug, Clone, Copy, Serialize)]
#[serde(untagged)]
pub enum Parameters {
    Stefan {
        #[serde(rename = "S")]
        s: f64,
    },
    Spread {
        #[serde(rename = "H")]
        h: f64,
        #[serde(rename = "L")]
        l: f64,
    },
}

impl Parameters {
    pub fn problem(&self) -> &'static str {
        match self {
            Self::Stefan { .. } => "stefan",
            Self::Spread { .. } => "spread",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConfigEcho {
    pub s_star: f64,
    pub step: f64,
    pub tol: f64,
    pub max_iter: usize,
    pub h0: f64,
    pub h1: f64,
}

impl From<&ItmConfig> for ConfigEcho {
    fn from(c: &ItmConfig) -> Self {
        Self { s_star: c.s_star, step: c.step, tol: c.tol, max_iter: c.max_iter, h0: c.h0, h1: c.h1 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub status: &'static str,
    pub iterations: usize,
    pub h_star: f64,
    pub omega: f64,
    pub gamma: f64,
    pub eta_w: f64,
    #[serde(rename = "U0")]
    pub u0: f64,
    #[serde(rename = "dU0")]
    pub du0: f64,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct TraceRow {
    pub j: usize,
    pub h_star: f64,
    pub gamma: f64,
    pub omega: f64,
    pub s: f64,
}

impl From<&ItmIteration> for TraceRow {
    fn from(it: &ItmIteration) -> Self {
        Self { j: it.j, h_star: it.h_star, gamma: it.gamma, omega: it.omega, s: it.s }
    }
}

/// A computed quantity next to a known value for the same parameters.
#[derive(Debug, Clone, Serialize)]
pub struct Comparison {
    pub quantity: &'static str,
    pub source: &'static str,
    pub reference: f64,
    pub delta: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub problem: &'static str,
    pub parameters: Parameters,
    pub config: ConfigEcho,
    pub result: Summary,
    pub trace: Vec<TraceRow>,
    pub references: Vec<Comparison>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_s: Option<f64>,
}

impl RunReport {
    pub fn new(parameters: Parameters, config: &ItmConfig, result: &ItmResult, wall_time_s: Option<f64>) -> Self {
        let summary = Summary {
            status: result.status.as_str(),
            iterations: result.iterations(),
            h_star: result.h_star,
            omega: result.omega,
            gamma: result.gamma(),
            eta_w: result.s,
            u0: result.w0,
            du0: result.dw0,
        };
        Self {
            problem: parameters.problem(),
            parameters,
            config: config.into(),
            references: references(parameters, &summary),
            result: summary,
            trace: result.trace.iter().map(TraceRow::from).collect(),
            wall_time_s,
        }
    }

    pub fn converged(&self) -> bool {
        self.result.status == "converged"
    }

    pub fn reference(&self, quantity: &str, source: &str) -> Option<&Comparison> {
        self.references.iter().find(|c| c.quantity == quantity && c.source == source)
    }
}

fn references(parameters: Parameters, r: &Summary) -> Vec<Comparison> {
    let cmp = |quantity, source, reference: f64, value: f64| Comparison {
        quantity,
        source,
        reference,
        delta: value - reference,
    };
    let mut out = Vec::new();
    match parameters {
        Parameters::Stefan { s } => {
            if let Ok(root) = neumann_eta_w(s) {
                out.push(cmp("eta_w", "neumann", root, r.eta_w));
            }
            if let Ok(asym) = asymptotic_eta_w(s) {
                out.push(cmp("eta_w", "asymptotic", asym, r.eta_w));
            }
        }
        Parameters::Spread { h, l } => {
            if h == 0.5 && l == -0.5 {
                let origin = exact_spreading(0.0).expect("origin inside the exact domain");
                out.push(cmp("eta_w", "exact", 1.0, r.eta_w));
                out.push(cmp("U0", "exact", origin.w, r.u0));
                out.push(cmp("dU0", "exact", origin.dw, r.du0));
            }
        }
    }
    out
}
