//! JSON files exchanged by the command-line tool.
//!
//! Struct fields are declared in alphabetical order so serialized keys come
//! out sorted, which together with the sorted red list makes the output
//! byte-stable.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::checker::{is_valid_coloring, verify_witness};
use crate::coloring::Coloring;
use crate::equation::RadoEquation;
use crate::search::SweepEntry;
use crate::template::Witness;

pub const TOOL_VERSION: &str = concat!("rado ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Claim {
    Valid,
    Witness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub claim: Claim,
    pub coloring: Coloring,
    pub equation: RadoEquation,
    pub tool_version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CertificateFile {
    pub fn valid(equation: RadoEquation, coloring: Coloring) -> Self {
        Self {
            claim: Claim::Valid,
            coloring,
            equation,
            tool_version: TOOL_VERSION.to_string(),
            witness: None,
        }
    }

    pub fn witness(equation: RadoEquation, coloring: Coloring, witness: Witness) -> Self {
        Self {
            claim: Claim::Witness,
            coloring,
            equation,
            tool_version: TOOL_VERSION.to_string(),
            witness: Some(witness),
        }
    }

    /// Re-runs the checker against the stated claim.
    pub fn holds(&self) -> bool {
        match (self.claim, &self.witness) {
            (Claim::Valid, _) => is_valid_coloring(&self.coloring, &self.equation),
            (Claim::Witness, Some(w)) => verify_witness(w, &self.coloring, &self.equation),
            (Claim::Witness, None) => false,
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// A file passed to `check`: either a bare coloring or a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum ColoringInput {
    Certificate(CertificateFile),
    Bare(Coloring),
}

impl ColoringInput {
    pub fn read(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| format!("cannot parse {}: {e}", path.display()))
    }

    pub fn coloring(&self) -> &Coloring {
        match self {
            ColoringInput::Certificate(c) => &c.coloring,
            ColoringInput::Bare(c) => c,
        }
    }

    pub fn equation(&self) -> Option<RadoEquation> {
        match self {
            ColoringInput::Certificate(c) => Some(c.equation),
            ColoringInput::Bare(_) => None,
        }
    }
}

/// One sweep report row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub a: u64,
    pub agree: Option<bool>,
    pub exact: Option<u64>,
    pub formula: u64,
    pub known: Option<u64>,
    pub m: u64,
    pub millis: u64,
    pub nodes: u64,
}

impl From<&SweepEntry> for ReportRow {
    fn from(e: &SweepEntry) -> Self {
        Self {
            a: e.equation.a(),
            agree: e.agree,
            exact: e.outcome.rado_number,
            formula: e.formula,
            known: e.known.map(|k| k.value),
            m: e.equation.m(),
            millis: e.outcome.stats.millis,
            nodes: e.outcome.stats.nodes,
        }
    }
}
