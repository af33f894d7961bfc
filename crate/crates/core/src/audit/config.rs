use std::collections::BTreeSet;
use std::fmt;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::catalog::CatalogId;
use crate::error::{Error, Result};
use crate::gf::{prime_power, Budget, FieldCtx};
use crate::poly::{self, HomogeneousForm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Bounds,
    Sections,
    Lines,
    Tangency,
    Altform,
    QuadricCensus,
}

impl Check {
    fn needs_space(self) -> bool {
        !matches!(self, Check::QuadricCensus)
    }
}

/// A catalog name or an inline quaternary form in the poly text syntax.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum SurfaceSpec {
    Catalog(CatalogId),
    Inline(String),
}

impl SurfaceSpec {
    pub fn label(&self) -> String {
        match self {
            SurfaceSpec::Catalog(id) => id.name().to_string(),
            SurfaceSpec::Inline(text) => text.clone(),
        }
    }

    pub fn build(&self, field: &FieldCtx) -> Result<HomogeneousForm> {
        match self {
            SurfaceSpec::Catalog(id) => id.build(field),
            SurfaceSpec::Inline(text) => poly::parse_form_with(field, text, Some(4)),
        }
    }

    pub fn is_catalog(&self) -> bool {
        matches!(self, SurfaceSpec::Catalog(_))
    }
}

impl fmt::Display for SurfaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl std::str::FromStr for SurfaceSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Config("empty surface".into()));
        }
        Ok(s.parse::<CatalogId>()
            .map(SurfaceSpec::Catalog)
            .unwrap_or_else(|_| SurfaceSpec::Inline(s.to_string())))
    }
}

impl TryFrom<String> for SurfaceSpec {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<SurfaceSpec> for String {
    fn from(s: SurfaceSpec) -> String {
        s.label()
    }
}

fn default_checks() -> BTreeSet<Check> {
    BTreeSet::from([Check::Bounds, Check::Sections])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AuditConfig {
    pub q_list: Vec<u64>,
    #[serde(default)]
    pub surfaces: Vec<SurfaceSpec>,
    #[serde(default = "default_checks")]
    pub checks: BTreeSet<Check>,
    #[serde(default)]
    pub budget: Budget,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output_path: Option<PathBuf>,
}

impl AuditConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: AuditConfig =
            serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn validate(&self) -> Result<()> {
        if self.q_list.is_empty() {
            return Err(Error::Config("q_list is empty".into()));
        }
        if self.checks.is_empty() {
            return Err(Error::Config("no checks selected".into()));
        }
        let surface_checks = self.checks.iter().any(|c| {
            matches!(c, Check::Bounds | Check::Sections | Check::Lines | Check::Tangency)
        });
        if surface_checks && self.surfaces.is_empty() {
            return Err(Error::Config("surface checks selected but no surfaces given".into()));
        }
        for &q in &self.q_list {
            if prime_power(q).is_none() {
                return Err(Error::Config(format!("{q} is not a prime power")));
            }
            if q > self.budget.field_max_q {
                return Err(Error::BudgetExceeded {
                    what: "field construction",
                    q,
                    limit: self.budget.field_max_q,
                });
            }
            if self.checks.iter().any(|c| c.needs_space()) {
                self.budget.check_space(q, "enumeration of P^3")?;
            }
            if self.checks.contains(&Check::QuadricCensus) && !(q == 2 || q == 3) {
                return Err(Error::Config(format!(
                    "quadric_census is only available for q in {{2, 3}}, got {q}"
                )));
            }
        }
        Ok(())
    }
}
