//! Named, parameterized numerical checks of statements about numerical
//! ranges of operators on `L²_a(dA_α)`.
//!
//! Every check takes a JSON object of parameters. [`list_checks`] publishes
//! the defaults; [`run_check`] merges caller overrides over them, rejects
//! unknown keys and returns a [`CheckReport`].

mod checks;
mod params;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use params::Params;

/// Seed used when a caller does not supply one.
pub const DEFAULT_SEED: u64 = 7;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    pub params: Map<String, Value>,
    pub pass: bool,
    pub metrics: BTreeMap<String, f64>,
    pub tolerance: f64,
    pub notes: String,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckInfo {
    pub id: &'static str,
    pub anchor: &'static str,
    pub defaults: Map<String, Value>,
}

/// Result of a check body before it is wrapped into a report.
pub(crate) struct Outcome {
    pub pass: bool,
    pub metrics: BTreeMap<String, f64>,
    pub tolerance: f64,
    pub notes: Vec<String>,
}

impl Outcome {
    pub fn new(tolerance: f64) -> Self {
        Outcome {
            pass: true,
            metrics: BTreeMap::new(),
            tolerance,
            notes: Vec::new(),
        }
    }

    pub fn metric(&mut self, name: impl Into<String>, value: f64) {
        self.metrics.insert(name.into(), value);
    }

    /// Records a metric and requires it to satisfy `ok`.
    pub fn require(&mut self, name: impl Into<String>, value: f64, ok: bool) {
        self.metric(name, value);
        self.pass &= ok;
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }
}

pub(crate) struct Entry {
    pub id: &'static str,
    pub anchor: &'static str,
    pub defaults: fn() -> Value,
    pub run: fn(&Params) -> Result<Outcome>,
}

/// Every registered check in a fixed order.
pub fn list_checks() -> Vec<CheckInfo> {
    checks::REGISTRY
        .iter()
        .map(|e| CheckInfo {
            id: e.id,
            anchor: e.anchor,
            defaults: defaults_of(e),
        })
        .collect()
}

fn defaults_of(e: &Entry) -> Map<String, Value> {
    let mut map = match (e.defaults)() {
        Value::Object(m) => m,
        _ => unreachable!("check defaults are JSON objects"),
    };
    map.insert("seed".into(), Value::from(DEFAULT_SEED));
    map
}

/// Runs the check `id` with `overrides` merged over its defaults.
pub fn run_check(id: &str, overrides: &Map<String, Value>) -> Result<CheckReport> {
    let entry = checks::REGISTRY.iter().find(|e| e.id == id).ok_or_else(|| {
        let ids: Vec<&str> = checks::REGISTRY.iter().map(|e| e.id).collect();
        Error::usage(format!("unknown check `{id}`; registered checks: {}", ids.join(", ")))
    })?;
    let mut params = defaults_of(entry);
    for (k, v) in overrides {
        if !params.contains_key(k) {
            let keys: Vec<&String> = params.keys().collect();
            return Err(Error::usage(format!(
                "check `{id}` has no parameter `{k}`; allowed: {}",
                keys.iter().map(|s| s.as_str()).collect::<Vec<_>>().join(", ")
            )));
        }
        params.insert(k.clone(), v.clone());
    }
    let p = Params::new(&params);
    let seed = p.seed()?;
    let outcome = (entry.run)(&p)?;
    let pass = outcome.pass && outcome.metrics.values().all(|v| !v.is_nan());
    Ok(CheckReport {
        id: id.to_string(),
        pass,
        metrics: outcome.metrics,
        tolerance: outcome.tolerance,
        notes: outcome.notes.join(" "),
        seed,
        params,
    })
}

/// Whether check `id` accepts parameter `key`.
pub fn check_accepts(id: &str, key: &str) -> bool {
    checks::REGISTRY
        .iter()
        .find(|e| e.id == id)
        .is_some_and(|e| defaults_of(e).contains_key(key))
}
