//! Run configuration: a JSON file mirroring `QContext`, overridden by command-line flags.

use std::path::PathBuf;

use qdisc::{Execution, QContext};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CommandName {
    Verify,
    Tabulate,
    Transform,
    Greens,
    Limit,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    pub path: Option<PathBuf>,
    pub format: Option<Format>,
}

/// Every field is optional; absent fields keep the library defaults.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub q: Option<f64>,
    pub series_tol: Option<f64>,
    pub grid_horizon: Option<usize>,
    pub trunc_terms: Option<usize>,
    pub green_terms: Option<usize>,
    pub quad_min_nodes: Option<usize>,
    pub quad_max_nodes: Option<usize>,
    pub quad_tol: Option<f64>,
    pub transform_nodes: Option<usize>,
    pub exec: Option<Execution>,
    pub command: Option<CommandName>,
    pub output: OutputConfig,
}

impl RunConfig {
    pub fn from_json(s: &str) -> Result<Self, String> {
        serde_json::from_str(s).map_err(|e| format!("invalid config: {e}"))
    }

    /// Builds and validates the context; `q` must be set.
    pub fn context(&self) -> Result<QContext, String> {
        let q = self.q.ok_or("q is required (pass --q or set it in the config)")?;
        let mut ctx = QContext::new(q).map_err(|e| e.to_string())?;
        if let Some(v) = self.series_tol {
            ctx.series_tol = v;
        }
        if let Some(v) = self.grid_horizon {
            ctx.grid_horizon = v;
        }
        if let Some(v) = self.trunc_terms {
            ctx.trunc_terms = v;
        }
        if let Some(v) = self.green_terms {
            ctx.green_terms = v;
        }
        if let Some(v) = self.quad_min_nodes {
            ctx.quad_min_nodes = v;
        }
        if let Some(v) = self.quad_max_nodes {
            ctx.quad_max_nodes = v;
        }
        if let Some(v) = self.quad_tol {
            ctx.quad_tol = v;
        }
        if let Some(v) = self.transform_nodes {
            ctx.transform_nodes = v;
        }
        if let Some(v) = self.exec {
            ctx.exec = v;
        }
        ctx.validate().map_err(|e| e.to_string())?;
        Ok(ctx)
    }

    /// Series tolerance for commands that need no grid context.
    pub fn series_tol(&self) -> Result<f64, String> {
        match self.series_tol {
            Some(v) if !(v > 0.0 && v.is_finite()) => Err("series_tol must be positive".into()),
            Some(v) => Ok(v),
            None => Ok(1e-15),
        }
    }
}
