//! JSON documents for topologies, metrics and generalized spaces.
//!
//! Points are referenced by label. Rationals are strings: `"p/q"` in
//! lowest terms with `q > 0`, or `"n"` for integers.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generalized::{MapFamily, NamedMap};
use crate::ground::{GroundSet, PointSet};
use crate::metric::RawDistanceMatrix;
use crate::rational;
use crate::topology::FiniteTopology;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopologyDoc {
    pub points: Vec<String>,
    pub opens: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricDoc {
    pub points: Vec<String>,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapDoc {
    pub name: String,
    pub targets: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceDoc {
    pub points: Vec<String>,
    pub matrix: Vec<Vec<String>>,
    pub maps: Vec<MapDoc>,
}

pub fn parse<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Pretty-printed JSON with a trailing newline.
pub fn render<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("documents always serialize");
    out.push('\n');
    out
}

fn subset(ground: &GroundSet, labels: &[String]) -> Result<PointSet> {
    let mut set = PointSet::EMPTY;
    for label in labels {
        let p = ground.index_of(label)?;
        if set.contains(p) {
            return Err(Error::Parse(format!("point `{label}` listed twice in one set")));
        }
        set.insert(p);
    }
    Ok(set)
}

impl TopologyDoc {
    /// The ground set and family as written, without checking the axioms.
    pub fn family(&self) -> Result<(GroundSet, Vec<PointSet>)> {
        let ground = GroundSet::new(self.points.iter().cloned())?;
        let family = self.opens.iter().map(|o| subset(&ground, o)).collect::<Result<_>>()?;
        Ok((ground, family))
    }

    pub fn to_topology(&self) -> Result<FiniteTopology> {
        let (ground, family) = self.family()?;
        FiniteTopology::validate(ground, &family)
    }

    pub fn from_topology(t: &FiniteTopology) -> Self {
        TopologyDoc {
            points: t.ground().labels().to_vec(),
            opens: t.opens().iter().map(|u| t.ground().names(*u)).collect(),
        }
    }
}

fn parse_matrix(ground: GroundSet, matrix: &[Vec<String>]) -> Result<RawDistanceMatrix> {
    let rows = matrix
        .iter()
        .map(|row| row.iter().map(|v| rational::parse(v)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    RawDistanceMatrix::new(ground, rows)
}

fn render_matrix(m: &RawDistanceMatrix) -> Vec<Vec<String>> {
    m.rows().map(|row| row.iter().map(rational::format).collect()).collect()
}

impl MetricDoc {
    pub fn to_matrix(&self) -> Result<RawDistanceMatrix> {
        parse_matrix(GroundSet::new(self.points.iter().cloned())?, &self.matrix)
    }

    pub fn from_matrix(m: &RawDistanceMatrix) -> Self {
        MetricDoc {
            points: m.ground().labels().to_vec(),
            matrix: render_matrix(m),
        }
    }
}

impl SpaceDoc {
    pub fn to_parts(&self) -> Result<(RawDistanceMatrix, MapFamily)> {
        let ground = GroundSet::new(self.points.iter().cloned())?;
        let matrix = parse_matrix(ground.clone(), &self.matrix)?;
        let maps = self
            .maps
            .iter()
            .map(|m| {
                let targets = m.targets.iter().map(|t| ground.index_of(t)).collect::<Result<_>>()?;
                Ok(NamedMap {
                    name: m.name.clone(),
                    targets,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((matrix, MapFamily::new(ground, maps)?))
    }

    pub fn from_parts(m: &RawDistanceMatrix, family: &MapFamily) -> Self {
        let ground = m.ground();
        SpaceDoc {
            points: ground.labels().to_vec(),
            matrix: render_matrix(m),
            maps: family
                .maps()
                .iter()
                .map(|map| MapDoc {
                    name: map.name.clone(),
                    targets: map.targets.iter().map(|&t| ground.label(t).to_string()).collect(),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn topology_round_trip_is_canonical() {
        let text = r#"{"points": ["a","b","c"], "opens": [["b","a"], [], ["a"], ["a","b","c"]]}"#;
        let doc: TopologyDoc = parse(text).unwrap();
        let t = doc.to_topology().unwrap();
        let out = TopologyDoc::from_topology(&t);
        assert_eq!(out.opens, vec![vec![], vec!["a"], vec!["a", "b"], vec!["a", "b", "c"]]);
        let again: TopologyDoc = parse(&render(&out)).unwrap();
        assert_eq!(again, out);
    }

    #[test]
    fn duplicate_open_is_a_topology_violation() {
        let doc: TopologyDoc = parse(r#"{"points": ["a"], "opens": [[], ["a"], ["a"]]}"#).unwrap();
        assert!(matches!(doc.to_topology(), Err(Error::InvalidTopology { .. })));
    }

    #[test]
    fn unknown_label_and_repeated_member() {
        let doc: TopologyDoc = parse(r#"{"points": ["a"], "opens": [[], ["z"]]}"#).unwrap();
        assert!(matches!(doc.to_topology(), Err(Error::UnknownPoint(_))));
        let doc: TopologyDoc = parse(r#"{"points": ["a"], "opens": [[], ["a", "a"]]}"#).unwrap();
        assert!(matches!(doc.to_topology(), Err(Error::Parse(_))));
    }

    #[test]
    fn malformed_json() {
        assert!(matches!(parse::<TopologyDoc>("{"), Err(Error::Parse(_))));
        assert!(matches!(parse::<MetricDoc>(r#"{"points": []}"#), Err(Error::Parse(_))));
    }

    #[test]
    fn metric_round_trip() {
        let doc: MetricDoc = parse(r#"{"points": ["a","b"], "matrix": [["0","2/4"],["3","0"]]}"#).unwrap();
        let m = doc.to_matrix().unwrap();
        assert_eq!(m.get(0, 1), &ratio(1, 2));
        let out = MetricDoc::from_matrix(&m);
        assert_eq!(out.matrix, vec![vec!["0", "1/2"], vec!["3", "0"]]);
    }

    #[test]
    fn metric_rejects_bad_entries() {
        let doc: MetricDoc = parse(r#"{"points": ["a","b"], "matrix": [["0","x"],["0","0"]]}"#).unwrap();
        assert!(matches!(doc.to_matrix(), Err(Error::BadRational(_))));
        let doc: MetricDoc = parse(r#"{"points": ["a","b"], "matrix": [["0","1"]]}"#).unwrap();
        assert!(matches!(doc.to_matrix(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn space_round_trip() {
        let text = r#"{"points": ["x","y"], "matrix": [["0","1"],["1","0"]],
            "maps": [{"name": "id", "targets": ["x","y"]}, {"name": "c", "targets": ["y","y"]}]}"#;
        let doc: SpaceDoc = parse(text).unwrap();
        let (m, fam) = doc.to_parts().unwrap();
        assert_eq!(fam.len(), 2);
        assert_eq!(SpaceDoc::from_parts(&m, &fam), doc);
    }

    #[test]
    fn space_requires_identity() {
        let text = r#"{"points": ["x","y"], "matrix": [["0","1"],["1","0"]],
            "maps": [{"name": "c", "targets": ["y","y"]}]}"#;
        let doc: SpaceDoc = parse(text).unwrap();
        assert!(matches!(doc.to_parts(), Err(Error::InvalidFamily(_))));
    }
}
