use std::collections::BTreeSet;

use serde::Serialize;

use crate::sections::{LineReport, SectionCensus, TangencyCensus, TangencyIdentities};

use super::census::{DegreeGate, QuadricCensus};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    /// The surface does not exist at this q (Hermitian at non-square q).
    Skipped,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TangencyRecord {
    pub plane: String,
    #[serde(flatten)]
    pub census: TangencyCensus,
    pub identities: TangencyIdentities,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SurfaceRecord {
    pub q: u64,
    pub surface: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u64>,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub attains: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree_admissible: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub census: Option<SectionCensus>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex_bijection_ok: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<BTreeSet<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lines: Option<LineReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tangency: Option<Vec<TangencyRecord>>,
    /// Identities that must hold for a surface attaining the bound. For
    /// surfaces that do not attain it only internal consistency is required.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identities_ok: Option<bool>,
    pub passed: bool,
}

impl SurfaceRecord {
    pub(crate) fn new(q: u64, surface: String) -> Self {
        SurfaceRecord {
            q,
            surface,
            status: Status::Ok,
            error: None,
            d: None,
            n: None,
            bound: None,
            attains: None,
            degree_admissible: None,
            census: None,
            vertex_bijection_ok: None,
            spectrum: None,
            lines: None,
            tangency: None,
            identities_ok: None,
            passed: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AltformRecord {
    pub q: u64,
    pub matrices: u64,
    pub exhaustive: bool,
    pub rank2: u64,
    pub rank4: u64,
    pub normal_form_ok: bool,
    pub rank2_split_ok: bool,
    pub rank4_extremal_ok: bool,
    pub coherence_ok: bool,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AuditReport {
    pub passed: bool,
    pub surfaces: Vec<SurfaceRecord>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub degree_gates: Vec<DegreeGate>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub altform: Vec<AltformRecord>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub quadric_census: Vec<QuadricCensus>,
}

impl AuditReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
