//! JSON shapes for reports and test points.

use clusterpos::exactalg::{parse_rational, Rational};
use clusterpos::flagpos::{CriterionReport, Provenance, Record, Verdict};
use clusterpos::rootsys::WeylWord;
use serde::{Deserialize, Serialize};

use crate::config::JobConfig;
use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FunctionJson {
    /// Absent for chamber minors of the full-flag test.
    pub vertex: Option<i32>,
    pub label: String,
    /// `"p/q"`, or null when the function is singular at the point.
    pub value: Option<String>,
    pub positive: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProvenanceJson {
    pub root_system: String,
    pub word: Vec<usize>,
    pub k: Vec<usize>,
    pub mutations: Vec<i32>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportJson {
    pub verdict: String,
    pub functions: Vec<FunctionJson>,
    pub witness: Option<FunctionJson>,
    pub provenance: ProvenanceJson,
}

pub fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Accepted => "accepted",
        Verdict::Rejected => "rejected",
        Verdict::Singular => "singular",
    }
}

impl From<&Record> for FunctionJson {
    fn from(r: &Record) -> Self {
        FunctionJson {
            vertex: r.vertex,
            label: r.label.clone(),
            value: r.value.as_ref().map(ToString::to_string),
            positive: r.positive(),
        }
    }
}

impl From<&Provenance> for ProvenanceJson {
    fn from(p: &Provenance) -> Self {
        ProvenanceJson {
            root_system: p.root_system.clone(),
            word: p.word.0.clone(),
            k: p.k.clone(),
            mutations: p.mutations.clone(),
        }
    }
}

impl From<&CriterionReport> for ReportJson {
    fn from(r: &CriterionReport) -> Self {
        ReportJson {
            verdict: verdict_name(r.verdict).into(),
            functions: r.records.iter().map(FunctionJson::from).collect(),
            witness: r.witness.as_ref().map(FunctionJson::from),
            provenance: (&r.provenance).into(),
        }
    }
}

impl FunctionJson {
    fn to_record(&self) -> Result<Record, CliError> {
        Ok(Record {
            vertex: self.vertex,
            label: self.label.clone(),
            value: self.value.as_deref().map(parse_rational).transpose()?,
        })
    }
}

impl ReportJson {
    /// Rebuilds the library report; verdict and witness are recomputed and
    /// must agree with the stored ones.
    pub fn to_report(&self) -> Result<CriterionReport, CliError> {
        let records = self.functions.iter().map(FunctionJson::to_record).collect::<Result<_, _>>()?;
        let p = &self.provenance;
        let report = CriterionReport::from_records(
            records,
            Provenance {
                root_system: p.root_system.clone(),
                word: WeylWord(p.word.clone()),
                k: p.k.clone(),
                mutations: p.mutations.clone(),
            },
        );
        if verdict_name(report.verdict) != self.verdict {
            return Err(CliError::Input(format!(
                "report says {} but its values give {}",
                self.verdict,
                verdict_name(report.verdict)
            )));
        }
        if report.witness.as_ref().map(FunctionJson::from) != self.witness {
            return Err(CliError::Input("witness does not match the function values".into()));
        }
        Ok(report)
    }
}

/// A rational given as a string `"p/q"` or a JSON integer. JSON floats are
/// rejected.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum RationalJson {
    Text(String),
    Integer(i64),
}

impl<'de> Deserialize<'de> for RationalJson {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl serde::de::Visitor<'_> for V {
            type Value = RationalJson;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("an exact rational: a string \"p/q\" or an integer (floats are not accepted)")
            }
            fn visit_str<E: serde::de::Error>(self, s: &str) -> Result<RationalJson, E> {
                Ok(RationalJson::Text(s.to_string()))
            }
            fn visit_i64<E: serde::de::Error>(self, n: i64) -> Result<RationalJson, E> {
                Ok(RationalJson::Integer(n))
            }
            fn visit_u64<E: serde::de::Error>(self, n: u64) -> Result<RationalJson, E> {
                i64::try_from(n)
                    .map(RationalJson::Integer)
                    .or_else(|_| Ok(RationalJson::Text(n.to_string())))
            }
        }
        d.deserialize_any(V)
    }
}

impl RationalJson {
    pub fn value(&self) -> Result<Rational, CliError> {
        match self {
            RationalJson::Text(s) => Ok(parse_rational(s)?),
            RationalJson::Integer(n) => Ok(Rational::from_integer((*n).into())),
        }
    }
}

/// Contents of `--input`: a point, optionally with inlined job settings.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct PointInput {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<RationalJson>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<Vec<RationalJson>>,
    #[serde(flatten)]
    pub config: JobConfig,
}
