//! JSON verification reports.
//!
//! A report is a deterministic body plus a small header. The body depends
//! only on the group, the cap and the tool version; the header carries wall
//! time, worker count and the SHA-256 of the serialized body.

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::classifier::{classify, SimpleGroupName, Verdict};
use crate::groups::Group;
use crate::paperchecks::CheckReport;
use crate::reality::{RealityReport, WitnessKind};

/// Version tag of the canonical element text forms used in reports.
pub const SERIALIZATION: &str = "strongreal-text-v1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportConfig {
    pub cap: usize,
    pub extended: bool,
    pub serialization: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupSummary {
    pub name: String,
    pub spec: String,
    pub order: usize,
    pub num_classes: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassEntry {
    pub representative: String,
    pub rep_order: u32,
    pub class_size: usize,
    pub real: bool,
    pub strongly_real: bool,
    pub witness_kind: Option<&'static str>,
    pub witness_order: Option<u64>,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifierEntry {
    pub verdict: &'static str,
    pub item: Option<u8>,
    pub normalized: Option<String>,
    pub justification: String,
}

impl From<&Verdict> for ClassifierEntry {
    fn from(v: &Verdict) -> ClassifierEntry {
        ClassifierEntry {
            verdict: v.outcome.label(),
            item: v.outcome.item(),
            normalized: v.normalized.map(|n| n.to_string()),
            justification: v.justification.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportBody {
    pub tool_version: &'static str,
    pub config: ReportConfig,
    pub group: GroupSummary,
    pub classes: Vec<ClassEntry>,
    pub strongly_real: bool,
    pub classifier: Option<ClassifierEntry>,
    /// False iff brute force and the classifier disagree.
    pub consistent: bool,
    pub paper_checks: Vec<CheckReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    #[serde(flatten)]
    pub body: ReportBody,
    pub elapsed_ms: u64,
    pub workers: usize,
    pub body_sha256: String,
}

fn kind_label(kind: WitnessKind) -> &'static str {
    match kind {
        WitnessKind::Real => "real",
        WitnessKind::StronglyReal => "strongly_real",
        WitnessKind::Factorization => "factorization",
    }
}

impl ReportBody {
    /// Assembles the body; `name` is cross-checked against the classifier
    /// when given.
    pub fn new(
        group: &Group,
        spec: &str,
        reality: &RealityReport,
        name: Option<SimpleGroupName>,
        config: ReportConfig,
        paper_checks: Vec<CheckReport>,
    ) -> ReportBody {
        let classes = reality
            .classes
            .iter()
            .map(|c| ClassEntry {
                representative: c.representative.to_text(),
                rep_order: c.rep_order,
                class_size: c.class_size,
                real: c.real,
                strongly_real: c.strongly_real,
                witness_kind: c.witness.as_ref().map(|w| kind_label(w.kind)),
                witness_order: c.witness.as_ref().map(|w| w.t.order()),
                witness: c.witness.as_ref().map(|w| w.t.to_text()),
            })
            .collect();
        let verdict = name.map(classify);
        let consistent = verdict
            .as_ref()
            .and_then(Verdict::strongly_real)
            .is_none_or(|expected| expected == reality.strongly_real);
        ReportBody {
            tool_version: env!("CARGO_PKG_VERSION"),
            config,
            group: GroupSummary {
                name: reality.group_name.clone(),
                spec: spec.to_string(),
                order: group.order(),
                num_classes: group.conjugacy_classes().len(),
            },
            classes,
            strongly_real: reality.strongly_real,
            classifier: verdict.as_ref().map(ClassifierEntry::from),
            consistent,
            paper_checks,
        }
    }

    /// Canonical serialization: pretty JSON in declaration key order.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report body serializes")
    }

    pub fn sha256(&self) -> String {
        hex::encode(Sha256::digest(self.to_json().as_bytes()))
    }
}

impl Report {
    pub fn new(body: ReportBody, elapsed_ms: u64, workers: usize) -> Report {
        let body_sha256 = body.sha256();
        Report { body, elapsed_ms, workers, body_sha256 }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
