//! Machine-readable reports. Every report carries a `witnesses` array.

use serde::{Deserialize, Serialize};

use rometric_core::generalized::GeneralizedWitness;
use rometric_core::ground::{GroundSet, PointSet};
use rometric_core::json::{MetricDoc, SpaceDoc, TopologyDoc};
use rometric_core::metric::{AxiomWitness, Violation};
use rometric_core::rational;
use rometric_core::topology::TopologyViolation;

/// One piece of evidence for a reported property.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub values: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sets: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<String>,
    pub message: String,
}

impl Witness {
    pub fn from_violation(v: &Violation, ground: &GroundSet) -> Self {
        let l = |p: usize| ground.label(p).to_string();
        let (kind, points, values) = match v {
            Violation::NegativeEntry { from, to, value } => ("negative_entry", vec![l(*from), l(*to)], vec![value]),
            Violation::NonZeroDiagonal { point, value } => ("nonzero_diagonal", vec![l(*point)], vec![value]),
            Violation::Triangle {
                from,
                via,
                to,
                direct,
                detour,
            } => ("triangle", vec![l(*from), l(*via), l(*to)], vec![direct, detour]),
        };
        Witness {
            kind: kind.to_string(),
            points,
            values: values.into_iter().map(rational::format).collect(),
            message: v.describe(ground),
            ..Default::default()
        }
    }

    pub fn from_axiom(w: &AxiomWitness, ground: &GroundSet) -> Self {
        let points: Vec<String> = w.points().into_iter().map(|p| ground.label(p).to_string()).collect();
        let message = match w {
            AxiomWitness::Asymmetric { .. } => format!("d({0}, {1}) ≠ d({1}, {0})", points[0], points[1]),
            AxiomWitness::ZeroDistance { .. } => format!("d({}, {}) = 0", points[0], points[1]),
            AxiomWitness::Inseparable { .. } => format!("d({0}, {1}) = 0 = d({1}, {0})", points[0], points[1]),
            AxiomWitness::Triangle { direct, detour, .. } => format!(
                "d({0}, {2}) = {3} > d({0}, {1}) + d({1}, {2}) = {4}",
                points[0],
                points[1],
                points[2],
                rational::format(direct),
                rational::format(detour)
            ),
        };
        Witness {
            kind: w.kind().to_string(),
            values: w.values().iter().map(rational::format).collect(),
            points,
            message,
            ..Default::default()
        }
    }

    pub fn from_topology_violation(v: &TopologyViolation, ground: &GroundSet) -> Self {
        let kind = match v {
            TopologyViolation::NotOverGround(_) => "not_over_ground",
            TopologyViolation::Duplicate(_) => "duplicate_open",
            TopologyViolation::MissingEmpty => "missing_empty",
            TopologyViolation::MissingWhole => "missing_whole",
            TopologyViolation::UnionMissing { .. } => "union_missing",
            TopologyViolation::IntersectionMissing { .. } => "intersection_missing",
        };
        Witness {
            kind: kind.to_string(),
            sets: v.witness_sets().iter().map(|s| ground.names(*s)).collect(),
            message: v.describe(ground),
            ..Default::default()
        }
    }

    pub fn from_generalized(w: &GeneralizedWitness, ground: &GroundSet) -> Self {
        Witness {
            kind: "generalized_axiom".to_string(),
            points: vec![w.center_label.clone(), w.member_label.clone()],
            values: vec![rational::format(&w.radius)],
            sets: vec![ground.names(w.members)],
            map: Some(w.map_name.clone()),
            message: w.to_string(),
        }
    }

    pub fn open_set(kind: &str, set: PointSet, ground: &GroundSet) -> Self {
        let message = match kind {
            "missing_open" => format!("{} is open but not generated", ground.display(set)),
            _ => format!("{} is generated but not open", ground.display(set)),
        };
        Witness {
            kind: kind.to_string(),
            sets: vec![ground.names(set)],
            message,
            ..Default::default()
        }
    }

    pub fn note(kind: &str, message: impl Into<String>) -> Self {
        Witness {
            kind: kind.to_string(),
            message: message.into(),
            ..Default::default()
        }
    }
}

/// A check that failed with an error rather than a structured result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureReport {
    pub ok: bool,
    pub error: String,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileReport {
    pub ro: bool,
    pub quasi_pseudo: bool,
    pub pseudo: bool,
    pub quasi: bool,
    pub t0_quasi: bool,
    pub metric: bool,
    pub witnesses: Vec<Witness>,
}

/// A topology document with an (empty) witness list, readable as `TopologyDoc`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopologyReport {
    pub points: Vec<String>,
    pub opens: Vec<Vec<String>>,
    pub witnesses: Vec<Witness>,
}

impl TopologyReport {
    pub fn new(doc: TopologyDoc) -> Self {
        TopologyReport {
            points: doc.points,
            opens: doc.opens,
            witnesses: vec![],
        }
    }
}

/// A metric document with an (empty) witness list, readable as `MetricDoc`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricReport {
    pub points: Vec<String>,
    pub matrix: Vec<Vec<String>>,
    pub witnesses: Vec<Witness>,
}

impl MetricReport {
    pub fn new(doc: MetricDoc) -> Self {
        MetricReport {
            points: doc.points,
            matrix: doc.matrix,
            witnesses: vec![],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub holds: bool,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientReport {
    pub classes: Vec<Vec<String>>,
    pub quotient: TopologyDoc,
    pub is_t0: bool,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleReport {
    pub name: String,
    pub topology: TopologyDoc,
    pub metric: MetricDoc,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralizedReport {
    pub generalized: bool,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingChecks {
    pub injective: bool,
    pub metric_valid: Option<bool>,
    pub product_topology: Option<bool>,
    pub subspace_topology: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImageEntry {
    pub point: String,
    pub tuple: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbedReport {
    /// The proper closed sets indexing the coordinates, in order.
    pub coordinates: Vec<Vec<String>>,
    pub images: Vec<ImageEntry>,
    /// Induced metric and maps on the image, labeled by tuple.
    pub space: SpaceDoc,
    pub checks: EmbeddingChecks,
    pub witnesses: Vec<Witness>,
}

/// A space document with a witness list, readable as `SpaceDoc`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceReport {
    pub points: Vec<String>,
    pub matrix: Vec<Vec<String>>,
    pub maps: Vec<rometric_core::json::MapDoc>,
    pub witnesses: Vec<Witness>,
}

impl SpaceReport {
    pub fn new(doc: SpaceDoc) -> Self {
        SpaceReport {
            points: doc.points,
            matrix: doc.matrix,
            maps: doc.maps,
            witnesses: vec![],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub found: bool,
    /// Candidates examined before the solution, or in total when none was found.
    pub examined: u64,
    /// Size of the candidate space, when it fits in 64 bits.
    pub total: Option<u64>,
    pub complete: bool,
    pub metric: Option<MetricDoc>,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheckOutput {
    pub n: usize,
    pub topologies: usize,
    pub t0_count: usize,
    pub passed: bool,
    pub checks: Vec<CheckEntry>,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineBallReport {
    pub metric: String,
    pub center: String,
    pub radius: String,
    pub ball: String,
    pub listed: String,
    pub matches_listed: bool,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineCheckReport {
    pub metric: String,
    pub points: Vec<String>,
    pub clean: bool,
    pub witnesses: Vec<Witness>,
}
