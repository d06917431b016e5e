//! The input document and inline edge syntax.
//!
//! ```json
//! {"edges": {"l12": "1", "l13": "1", "l14": "1", "l23": "1", "l24": "1", "l34": "0.5"},
//!  "config": {"tol": 1e-10, "mc_samples": 100000, "seed": 7}}
//! ```
//!
//! Lengths are decimal strings (plain JSON numbers are accepted too).
//! `config` and each of its fields are optional.

use serde::{Deserialize, Serialize};

use crate::edge::EdgeLengths;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Decimal {
    Text(String),
    Number(f64),
}

impl Decimal {
    fn parse(&self, name: &str) -> Result<f64, String> {
        let v = match self {
            Decimal::Text(s) => s
                .trim()
                .parse::<f64>()
                .map_err(|_| format!("{name}: '{s}' is not a decimal number"))?,
            Decimal::Number(v) => *v,
        };
        if !v.is_finite() {
            return Err(format!("{name}: value must be finite"));
        }
        if v < 0.0 {
            return Err(format!("{name}: length {v} is negative"));
        }
        Ok(v)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeTable {
    pub l12: Decimal,
    pub l13: Decimal,
    pub l14: Decimal,
    pub l23: Decimal,
    pub l24: Decimal,
    pub l34: Decimal,
}

impl EdgeTable {
    pub fn lengths(&self) -> Result<EdgeLengths, String> {
        let v = [
            self.l12.parse("l12")?,
            self.l13.parse("l13")?,
            self.l14.parse("l14")?,
            self.l23.parse("l23")?,
            self.l24.parse("l24")?,
            self.l34.parse("l34")?,
        ];
        EdgeLengths::from_array(v).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DocConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mc_samples: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub edges: EdgeTable,
    #[serde(default)]
    pub config: DocConfig,
}

pub fn parse_document(text: &str) -> Result<InputDocument, String> {
    serde_json::from_str(text).map_err(|e| format!("malformed input document: {e}"))
}

/// `l12=1,l13=0.9,...` with every edge named exactly once.
pub fn parse_inline(spec: &str) -> Result<EdgeTable, String> {
    let mut slots: [Option<String>; 6] = Default::default();
    let names = crate::edge::EDGE_NAMES;
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| format!("--edges: expected name=value, got '{part}'"))?;
        let key = key.trim();
        let idx = names
            .iter()
            .position(|n| *n == key)
            .ok_or_else(|| format!("--edges: unknown edge '{key}'"))?;
        if slots[idx].is_some() {
            return Err(format!("--edges: {key} given twice"));
        }
        slots[idx] = Some(value.trim().to_string());
    }
    let mut take = |k: usize| {
        slots[k]
            .take()
            .map(Decimal::Text)
            .ok_or_else(|| format!("--edges: {} is missing", names[k]))
    };
    Ok(EdgeTable {
        l12: take(0)?,
        l13: take(1)?,
        l14: take(2)?,
        l23: take(3)?,
        l24: take(4)?,
        l34: take(5)?,
    })
}
