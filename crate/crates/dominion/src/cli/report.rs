//! Machine-readable run reports.
//!
//! Stable JSON schema:
//!
//! ```text
//! {version, designs:[{id, params:{v,k,lambda,b,r}, gamma,
//!   bounds:{lb_general, bracket?, biplane_lb?},
//!   neatness?:{count_mds, count_neat, super_neat},
//!   checks:[{name, anchor, status, seconds}]}],
//!  solver:{threads, total_nodes}}
//! ```
//!
//! `status` is one of `pass`, `fail`, `finding`, `skipped`; `seconds` is the
//! only timing field. Every check carries its `anchor`: the claim it
//! verifies, stated as a formula or sentence.

use crate::design::DesignParams;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunReport {
    pub version: String,
    pub designs: Vec<DesignReport>,
    pub solver: SolverStats,
}

impl RunReport {
    pub fn count(&self, status: CheckStatus) -> usize {
        self.designs
            .iter()
            .flat_map(|d| &d.checks)
            .filter(|c| c.status == status)
            .count()
    }

    pub fn total_checks(&self) -> usize {
        self.designs.iter().map(|d| d.checks.len()).sum()
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SolverStats {
    pub threads: usize,
    /// Branch-and-bound nodes expanded across all γ computations.
    pub total_nodes: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DesignReport {
    pub id: String,
    pub params: DesignParams,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<u64>,
    pub bounds: BoundsJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub neatness: Option<NeatnessJson>,
    pub checks: Vec<CheckJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundsJson {
    pub lb_general: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bracket: Option<[u64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub biplane_lb: Option<u64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NeatnessJson {
    pub count_mds: usize,
    pub count_neat: usize,
    pub super_neat: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckJson {
    pub name: String,
    /// The verified claim, spelled out.
    pub anchor: String,
    pub status: CheckStatus,
    pub seconds: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    /// A proved statement held.
    Pass,
    /// A proved statement was violated: solver bug or corrupt input.
    Fail,
    /// A computed value with no theorem behind it, reported as data.
    Finding,
    /// Not evaluated (typically: budget exhausted or size-gated).
    Skipped,
}

impl std::fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Finding => "finding",
            CheckStatus::Skipped => "skipped",
        };
        f.write_str(s)
    }
}
