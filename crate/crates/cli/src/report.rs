//! Structured report envelope: every subcommand's payload under one
//! stable, versioned schema. Records mode serializes the envelope as JSON;
//! the field names here are the public contract.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "cyclometria.report/1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportEnvelope {
    pub schema: String,
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    /// Unix seconds; omitted entirely under --deterministic.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub produced_at: Option<u64>,
    pub corpus_version: String,
    pub body: Body,
}

impl ReportEnvelope {
    pub fn new(command: &str, body: Body) -> Self {
        Self {
            schema: SCHEMA.to_string(),
            command: command.to_string(),
            parameters: BTreeMap::new(),
            produced_at: None,
            corpus_version: cyclometria::corpus::builtin().version.clone(),
            body,
        }
    }

    pub fn parameter(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn stamped(mut self, deterministic: bool) -> Self {
        if !deterministic {
            let now = std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0);
            self.produced_at = Some(now);
        }
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Body {
    Pi(PiBody),
    Chain(ChainBody),
    Examen(ExamenBody),
    Audit(AuditBody),
    Kochanski(KochanskiBody),
    Bisection(BisectionBody),
    Cf(CfBody),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PiBody {
    pub digits: u32,
    /// Truncated decimal value, `digits` fraction digits.
    pub value: String,
    /// The same digits in five-digit groups.
    pub grouped: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeedDto {
    pub label: String,
    pub diameter: String,
    pub periphery: String,
    pub side: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepDto {
    pub label_minor: String,
    pub label_major: String,
    pub originator_label_minor: String,
    pub originator_label_major: String,
    pub originator_minor: String,
    pub originator_major: String,
    pub parent: String,
    pub defective_diameter: String,
    pub defective_periphery: String,
    pub excessive_diameter: String,
    pub excessive_periphery: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReducedDto {
    pub label: String,
    pub diameter: String,
    pub periphery: String,
    pub factor: String,
    pub side: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CuriousDto {
    pub value: String,
    pub agreeing_digits: u32,
    pub excess_low: String,
    pub excess_high: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainBody {
    pub depth: usize,
    pub seeds: Vec<SeedDto>,
    pub steps: Vec<StepDto>,
    pub reduced_forms: Vec<ReducedDto>,
    pub curious: CuriousDto,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExamenRowDto {
    pub label: String,
    pub periphery: String,
    pub kind: String,
    pub deviation: String,
    pub scale: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExamenBody {
    pub depth: usize,
    pub scale: u32,
    pub rows: Vec<ExamenRowDto>,
    /// The table in the source's five-digit-group layout.
    pub table: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FindingDto {
    pub location: String,
    pub printed: String,
    pub computed: String,
    pub classification: String,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditSummaryDto {
    pub total: usize,
    pub confirmed: usize,
    pub convention_ambiguities: usize,
    pub paper_misprints: usize,
    pub translator_misprints: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditBody {
    pub findings: Vec<FindingDto>,
    pub summary: AuditSummaryDto,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LengthDto {
    pub label: String,
    pub truncated: String,
    pub rounded: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointDto {
    pub label: String,
    /// Exact coordinates as `a + b*sqrt(3)` expressions.
    pub x: String,
    pub y: String,
    pub x_decimal: String,
    pub y_decimal: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct YearDto {
    pub year: u32,
    pub holds: bool,
    pub ten_times_year: String,
    pub ten_times_next: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KochanskiBody {
    pub scale: u32,
    pub lengths: Vec<LengthDto>,
    pub closed_form: String,
    pub il_low: String,
    pub il_high: String,
    pub defect_z_low: String,
    pub defect_z_high: String,
    pub reciprocal_x: String,
    pub year_check: YearDto,
    pub points: Vec<PointDto>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BisectionBody {
    pub scale: u32,
    pub ratio: String,
    pub periphery: String,
    pub decomposition: Vec<String>,
    pub excess_q_low: String,
    pub excess_q_high: String,
    pub q_below_z: bool,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CfClassificationDto {
    pub value: String,
    pub class: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CfBody {
    pub terms: Vec<String>,
    pub convergents: Vec<String>,
    pub classifications: Vec<CfClassificationDto>,
}
