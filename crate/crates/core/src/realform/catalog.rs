//! TOML catalog of Satake diagrams and involutions.

use std::collections::HashMap;
use std::path::Path;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdatum::{BasedRootDatum, CartanType};

use super::{theta_from_satake, RealForm, SatakeData};

pub const CATALOG_SCHEMA: &str = "realgr-catalog/1";

const BUILTIN: &str = include_str!("../../data/catalog.toml");

/// One `[[form]]` record. Node indices are one-based, Bourbaki order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormRecord {
    pub label: String,
    pub family: String,
    pub cartan: String,
    #[serde(default)]
    pub params: Vec<i64>,
    pub painted: Vec<usize>,
    pub arrows: Vec<[usize; 2]>,
    pub theta: Vec<Vec<i64>>,
    pub real_rank: usize,
    /// Expected type of the associated subgroup; empty when not tabulated.
    pub expected_h: String,
    pub quasi_split: bool,
    pub split: bool,
    pub table1: bool,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CatalogFile {
    schema: String,
    version: String,
    #[serde(default)]
    form: Vec<FormRecord>,
}

/// A validated catalog record.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub record: FormRecord,
    pub form: RealForm,
    /// Set when the stored `θ` differs from the one built from the diagram.
    pub recipe_discrepancy: Option<String>,
}

impl CatalogEntry {
    pub fn label(&self) -> &str {
        &self.record.label
    }

    /// `FAMILY label`, e.g. `AIII su(1,2)`.
    pub fn qualified_label(&self) -> String {
        format!("{} {}", self.record.family, self.record.label)
    }

    /// Expected type of `H`, if recorded.
    pub fn expected_h(&self) -> Option<CartanType> {
        if self.record.expected_h.is_empty() {
            None
        } else {
            self.record.expected_h.parse().ok()
        }
    }
}

#[derive(Clone, Debug)]
pub struct Catalog {
    version: String,
    entries: Vec<CatalogEntry>,
    index: HashMap<String, usize>,
}

impl Catalog {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let file: CatalogFile =
            toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if file.schema != CATALOG_SCHEMA {
            return Err(Error::Parse(format!(
                "unsupported schema `{}` (expected `{CATALOG_SCHEMA}`)",
                file.schema
            )));
        }
        let mut entries = Vec::with_capacity(file.form.len());
        let mut index = HashMap::new();
        for record in file.form {
            if index.contains_key(&record.label) {
                return Err(invalid(&record.label, "duplicate label"));
            }
            index.insert(record.label.clone(), entries.len());
            entries.push(build_entry(record)?);
        }
        Ok(Catalog {
            version: file.version,
            entries,
            index,
        })
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::from_toml_str(&text)
    }

    pub fn version(&self) -> &str {
        &self.version
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries flagged for the associated-subgroup table.
    pub fn table1(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(|e| e.record.table1)
    }

    pub fn get(&self, label: &str) -> Option<&CatalogEntry> {
        self.index.get(label).map(|&i| &self.entries[i])
    }

    /// Resolves `label`, `FAMILY label`, `split(X)` or `compact(X)`.
    pub fn lookup(&self, query: &str) -> Result<RealForm> {
        let q = query.trim();
        if let Some(e) = self.entry(q) {
            return Ok(e.form.clone());
        }
        if let Some(inner) = strip_call(q, "split") {
            let t = parse_type(inner)?;
            let found = self.entries.iter().find(|e| {
                e.record.split
                    && e.record.cartan.parse::<CartanType>().ok().as_ref() == Some(&t)
            });
            return match found {
                Some(e) => Ok(e.form.clone()),
                None => RealForm::split(BasedRootDatum::adjoint(&t)?),
            };
        }
        if let Some(inner) = strip_call(q, "compact") {
            let t = parse_type(inner)?;
            return RealForm::compact(BasedRootDatum::adjoint(&t)?);
        }
        Err(Error::UnknownLabel(query.to_string()))
    }

    /// Entry by plain or family-qualified label.
    pub fn entry(&self, query: &str) -> Option<&CatalogEntry> {
        let q = query.trim();
        if let Some(e) = self.get(q) {
            return Some(e);
        }
        let (family, label) = q.split_once(' ')?;
        self.get(label.trim())
            .filter(|e| e.record.family == family)
    }

    /// Entries whose stored `θ` disagrees with the diagram recipe.
    pub fn discrepancies(&self) -> Vec<(&str, &str)> {
        self.entries
            .iter()
            .filter_map(|e| e.recipe_discrepancy.as_deref().map(|d| (e.label(), d)))
            .collect()
    }
}

fn strip_call<'a>(q: &'a str, name: &str) -> Option<&'a str> {
    q.strip_prefix(name)?
        .trim()
        .strip_prefix('(')?
        .strip_suffix(')')
        .map(str::trim)
}

fn parse_type(s: &str) -> Result<CartanType> {
    s.parse::<CartanType>()
        .map_err(|_| Error::Parse(format!("bad Cartan type `{s}`")))
}

fn invalid(label: &str, reason: impl Into<String>) -> Error {
    Error::CatalogInvalid {
        label: label.to_string(),
        reason: reason.into(),
    }
}

fn build_entry(record: FormRecord) -> Result<CatalogEntry> {
    let label = record.label.clone();
    let bad = |reason: String| invalid(&label, reason);
    let t: CartanType = record
        .cartan
        .parse()
        .map_err(|_| bad(format!("bad cartan `{}`", record.cartan)))?;
    if !record.expected_h.is_empty() && record.expected_h.parse::<CartanType>().is_err() {
        return Err(bad(format!("bad expected_h `{}`", record.expected_h)));
    }
    let datum = BasedRootDatum::adjoint(&t).map_err(|e| bad(e.to_string()))?;
    let n = datum.semisimple_rank();
    let zero_based = |i: usize| {
        if i == 0 || i > n {
            Err(bad(format!("node {i} out of range 1..={n}")))
        } else {
            Ok(i - 1)
        }
    };
    let painted = record
        .painted
        .iter()
        .map(|&i| zero_based(i))
        .collect::<Result<Vec<_>>>()?;
    let arrows = record
        .arrows
        .iter()
        .map(|&[a, b]| Ok((zero_based(a)?, zero_based(b)?)))
        .collect::<Result<Vec<_>>>()?;
    let satake = SatakeData::new(datum, painted, &arrows).map_err(|e| bad(e.to_string()))?;
    let form = RealForm::new(satake, record.theta.clone(), Some(label.clone()))
        .map_err(|e| bad(e.to_string()))?;
    if form.real_rank() != record.real_rank {
        return Err(bad(format!(
            "real_rank {} but computed {}",
            record.real_rank,
            form.real_rank()
        )));
    }
    if form.is_quasi_split() != record.quasi_split {
        return Err(bad(format!("quasi_split flag is {}", record.quasi_split)));
    }
    if form.is_split() != record.split {
        return Err(bad(format!("split flag is {}", record.split)));
    }
    // the diagram does not see the central torus
    let recipe_discrepancy = match theta_from_satake(form.satake()) {
        _ if !form.datum().is_semisimple() => None,
        Ok(theta) if theta == record.theta => None,
        Ok(theta) => Some(format!("diagram gives {theta:?}")),
        Err(Error::NotSemisimple) => None,
        Err(e) => Some(e.to_string()),
    };
    Ok(CatalogEntry {
        record,
        form,
        recipe_discrepancy,
    })
}

impl RealForm {
    /// Split form: `θ = 1`.
    pub fn split(datum: BasedRootDatum) -> Result<Self> {
        let label = format!("split({})", datum.cartan_type());
        let n = datum.rank();
        let satake = SatakeData::new(datum, Vec::new(), &[])?;
        let theta = (0..n)
            .map(|i| (0..n).map(|j| (i == j) as i64).collect())
            .collect();
        RealForm::new(satake, theta, Some(label))
    }

    /// Compact form of a semisimple datum: all nodes painted, `θ = -1`.
    pub fn compact(datum: BasedRootDatum) -> Result<Self> {
        if !datum.is_semisimple() {
            return Err(Error::NotSemisimple);
        }
        let label = format!("compact({})", datum.cartan_type());
        let n = datum.rank();
        let satake = SatakeData::new(datum, (0..n).collect(), &[])?;
        let theta = (0..n)
            .map(|i| (0..n).map(|j| -((i == j) as i64)).collect())
            .collect();
        RealForm::new(satake, theta, Some(label))
    }

    /// Real form from a diagram, with `θ` built by [`theta_from_satake`].
    pub fn from_satake(satake: SatakeData, label: Option<String>) -> Result<Self> {
        let theta = theta_from_satake(&satake)?;
        RealForm::new(satake, theta, label)
    }
}

/// The built-in catalog.
pub fn catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| Catalog::from_toml_str(BUILTIN).expect("built-in catalog is valid"))
}
