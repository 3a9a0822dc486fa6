use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use super::CliError;
use crate::invariants::{report, InvariantError, KnotSpec};

const BUILTIN: &str = include_str!("../../data/catalog.json");

/// A named knot with optional expected report values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub conway: KnotSpec,
    /// Any subset of report fields, under their JSON names.
    #[serde(default)]
    pub expected: Map<String, Value>,
}

/// One expected field that disagrees with the computed report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Mismatch {
    pub field: String,
    pub expected: Value,
    pub computed: Value,
}

impl CatalogEntry {
    /// Compares every expected field with the computed report.
    pub fn check(&self) -> Result<Vec<Mismatch>, InvariantError> {
        let computed = serde_json::to_value(report(&self.conway)?).expect("reports serialize");
        Ok(self
            .expected
            .iter()
            .filter_map(|(field, expected)| {
                let got = computed.get(field).cloned().unwrap_or(Value::Null);
                (got != *expected).then(|| Mismatch {
                    field: field.clone(),
                    expected: expected.clone(),
                    computed: got,
                })
            })
            .collect())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    /// The catalog compiled into the binary.
    pub fn builtin() -> Self {
        serde_json::from_str(BUILTIN).expect("builtin catalog is valid")
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Catalog(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}
