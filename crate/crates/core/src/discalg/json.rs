use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::element::DiscElement;
use super::grid::GridFunction;
use crate::error::{Error, Result};

/// Wire form `{q, sectors: [{m, values: [[n, re, im], …]}]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ElementDoc {
    pub q: f64,
    pub sectors: Vec<SectorDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SectorDoc {
    pub m: i64,
    pub values: Vec<(usize, f64, f64)>,
    /// Sampled sectors are marked `finite: false`; omitted means finitely supported.
    #[serde(default = "default_true", skip_serializing_if = "is_true")]
    pub finite: bool,
}

fn default_true() -> bool {
    true
}

fn is_true(b: &bool) -> bool {
    *b
}

impl ElementDoc {
    pub fn from_element(q: f64, e: &DiscElement) -> Self {
        let sectors = e
            .sectors()
            .map(|(m, f)| SectorDoc {
                m,
                values: f
                    .values()
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !f.is_finite() || **v != Complex64::new(0.0, 0.0))
                    .map(|(n, v)| (n, v.re, v.im))
                    .collect(),
                finite: f.is_finite(),
            })
            .collect();
        Self { q, sectors }
    }

    pub fn from_grid(q: f64, f: &GridFunction) -> Self {
        Self::from_element(q, &DiscElement::radial(f.clone()))
    }

    /// Rebuilds the element; repeated sectors or grid indices are rejected.
    pub fn to_element(&self) -> Result<DiscElement> {
        let mut e = DiscElement::zero();
        for s in &self.sectors {
            if e.sector(s.m).is_some() {
                return Err(Error::InvalidParameter(format!("sector {} listed twice", s.m)));
            }
            let len = s.values.iter().map(|v| v.0 + 1).max().unwrap_or(0);
            let mut vals = vec![Complex64::new(0.0, 0.0); len];
            let mut seen = vec![false; len];
            for &(n, re, im) in &s.values {
                if seen[n] {
                    return Err(Error::InvalidParameter(format!(
                        "grid index {n} listed twice in sector {}",
                        s.m
                    )));
                }
                seen[n] = true;
                vals[n] = Complex64::new(re, im);
            }
            let f = if s.finite {
                GridFunction::finite(vals)
            } else {
                GridFunction::truncated(vals)
            };
            e.insert(s.m, f);
        }
        Ok(e)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("element documents always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidParameter(format!("element JSON: {e}")))
    }
}
