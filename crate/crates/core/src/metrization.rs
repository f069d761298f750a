//! Building R.O-metrics that generate a prescribed topology.
//!
//! The central construction takes a pointed subbasis, an assignment
//! `x ↦ f(x)` of an open set containing each point whose images form a
//! subbasis, and sets `d(x, y) = 0` when `y ∈ f(x)` and `1` otherwise.
//! On a finite space the minimal open sets give such an assignment, so
//! every finite topology is generated by a two-valued R.O-metric.

use std::fmt;

use crate::error::{Error, Result};
use crate::ground::{GroundSet, PointSet};
use crate::metric::{check_rometric_axioms, generated_topology, ROMetric, RawDistanceMatrix, Violation};
use crate::rational::int;
use crate::topology::{FiniteTopology, QuotientResult};

/// A topology with an open neighbourhood `f(x)` chosen for each point,
/// such that the chosen sets form a subbasis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedSubbasis {
    topology: FiniteTopology,
    assignment: Vec<PointSet>,
}

impl PointedSubbasis {
    pub fn new(topology: FiniteTopology, assignment: Vec<PointSet>) -> Result<Self> {
        let ground = topology.ground();
        if assignment.len() != topology.len() {
            return Err(Error::Precondition(format!(
                "assignment covers {} points, ground has {}",
                assignment.len(),
                topology.len()
            )));
        }
        for (x, fx) in assignment.iter().enumerate() {
            if !topology.is_open(*fx) {
                return Err(Error::Precondition(format!(
                    "f({}) = {} is not open",
                    ground.label(x),
                    ground.display(*fx)
                )));
            }
            if !fx.contains(x) {
                return Err(Error::Precondition(format!(
                    "f({}) = {} does not contain the point",
                    ground.label(x),
                    ground.display(*fx)
                )));
            }
        }
        let closure = FiniteTopology::close_subbasis(ground.clone(), &assignment)?;
        if closure != topology {
            return Err(Error::Precondition(
                "the assigned sets do not generate the topology".to_string(),
            ));
        }
        Ok(PointedSubbasis { topology, assignment })
    }

    /// The assignment `x ↦ minimal open set of x`.
    pub fn minimal(topology: FiniteTopology) -> Self {
        let assignment = topology.minimal_opens();
        PointedSubbasis { topology, assignment }
    }

    pub fn topology(&self) -> &FiniteTopology {
        &self.topology
    }

    pub fn assignment(&self) -> &[PointSet] {
        &self.assignment
    }
}

/// `d(x, y) = 0` if `y ∈ f(x)`, else `1`.
pub fn metrize_from_pointed_subbasis(ps: &PointedSubbasis) -> Result<ROMetric> {
    let raw = RawDistanceMatrix::from_fn(ps.topology.ground().clone(), |x, y| {
        int(if ps.assignment[x].contains(y) { 0 } else { 1 })
    });
    let metric = check_rometric_axioms(raw)?;
    if generated_topology(&metric) != ps.topology {
        return Err(Error::Internal(
            "pointed-subbasis metric does not regenerate its topology".to_string(),
        ));
    }
    Ok(metric)
}

/// A two-valued R.O-metric generating `t`, built from minimal open sets.
pub fn metrize_finite(t: &FiniteTopology) -> Result<ROMetric> {
    if t.is_empty() {
        return Err(Error::EmptyGround);
    }
    metrize_from_pointed_subbasis(&PointedSubbasis::minimal(t.clone()))
}

/// Pulls a metric on the Kolmogorov quotient back to the original space:
/// distance 0 inside a class, the quotient distance across classes.
pub fn lift_from_quotient(t: &FiniteTopology, q: &QuotientResult, dq: &ROMetric) -> Result<ROMetric> {
    if dq.len() != q.quotient.len() || q.class_of.len() != t.len() {
        return Err(Error::GroundMismatch);
    }
    if generated_topology(dq).opens() != q.quotient.opens() {
        return Err(Error::Precondition(
            "quotient metric does not generate the quotient topology".to_string(),
        ));
    }
    let raw = RawDistanceMatrix::from_fn(t.ground().clone(), |x, y| {
        let (cx, cy) = (q.class_of[x], q.class_of[y]);
        if cx == cy {
            int(0)
        } else {
            dq.get(cx, cy).clone()
        }
    });
    let lifted = check_rometric_axioms(raw)?;
    if &generated_topology(&lifted) != t {
        return Err(Error::Internal(
            "lifted metric does not regenerate the topology".to_string(),
        ));
    }
    Ok(lifted)
}

/// Named example constructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExampleSpec {
    /// `{a, b, c}` with `d(a,b) = d(b,c) = 1`, `d(a,c) = 2`, zero elsewhere.
    ThreePoint,
    /// Opens are ∅ and every superset of a fixed nonempty `subset`.
    ParticularSet { points: Vec<String>, subset: Vec<String> },
    /// Consecutive points are paired; partners are at distance 1 both ways.
    PairedCofinite { points: Vec<String> },
    /// `{0, 1}` with `{1}` open.
    Sierpinski,
}

impl ExampleSpec {
    pub const NAMES: [&'static str; 4] = ["three_point", "particular_set", "paired_cofinite", "sierpinski"];

    /// The named example with its default parameters.
    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "three_point" => Ok(ExampleSpec::ThreePoint),
            "particular_set" => Ok(ExampleSpec::ParticularSet {
                points: strings(["1", "2", "3"]),
                subset: strings(["1"]),
            }),
            "paired_cofinite" => Ok(ExampleSpec::PairedCofinite {
                points: strings(["x1", "x2", "x3", "x4"]),
            }),
            "sierpinski" => Ok(ExampleSpec::Sierpinski),
            other => Err(Error::Precondition(format!(
                "unknown example `{other}` (expected one of {})",
                Self::NAMES.join(", ")
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ExampleSpec::ThreePoint => "three_point",
            ExampleSpec::ParticularSet { .. } => "particular_set",
            ExampleSpec::PairedCofinite { .. } => "paired_cofinite",
            ExampleSpec::Sierpinski => "sierpinski",
        }
    }
}

fn strings<const N: usize>(items: [&str; N]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

/// The example's target topology and its metric. The metric is checked to
/// generate the topology before returning.
pub fn builtin_example(spec: &ExampleSpec) -> Result<(FiniteTopology, ROMetric)> {
    let (topology, raw) = match spec {
        ExampleSpec::ThreePoint => {
            let g = GroundSet::new(["a", "b", "c"])?;
            let raw = RawDistanceMatrix::from_integers(g.clone(), &[&[0, 1, 2], &[0, 0, 1], &[0, 0, 0]])?;
            let a = g.subset(["a"])?;
            let ab = g.subset(["a", "b"])?;
            let t = FiniteTopology::from_minimal_opens(g.clone(), &[a, ab, g.full()]);
            (t, raw)
        }
        ExampleSpec::ParticularSet { points, subset } => {
            let g = GroundSet::new(points.iter().cloned())?;
            let a = g.subset(subset)?;
            if a.is_empty() {
                return Err(Error::Precondition("the particular set must be nonempty".to_string()));
            }
            let generators: Vec<PointSet> = (0..g.len()).map(|x| a.union(PointSet::singleton(x))).collect();
            let t = FiniteTopology::from_minimal_opens(g.clone(), &generators);
            // Diagonal zero first; then 0 into A and 1 into its complement.
            let raw = RawDistanceMatrix::from_fn(g, |x, y| int(if x == y || a.contains(y) { 0 } else { 1 }));
            (t, raw)
        }
        ExampleSpec::PairedCofinite { points } => {
            let g = GroundSet::new(points.iter().cloned())?;
            if g.len() % 2 != 0 {
                return Err(Error::Precondition(format!(
                    "paired_cofinite needs an even number of points, got {}",
                    g.len()
                )));
            }
            let partner = |x: usize| x ^ 1;
            let raw = RawDistanceMatrix::from_fn(g.clone(), |x, y| int(if y == partner(x) { 1 } else { 0 }));
            let n = g.len();
            let mut family: Vec<PointSet> = (0..n).map(|x| PointSet::singleton(partner(x)).complement(n)).collect();
            family.push(g.full());
            let t = FiniteTopology::close_subbasis(g, &family)?;
            (t, raw)
        }
        ExampleSpec::Sierpinski => {
            let t = FiniteTopology::sierpinski();
            let raw = RawDistanceMatrix::from_integers(t.ground().clone(), &[&[0, 0], &[1, 0]])?;
            (t, raw)
        }
    };
    let metric = check_rometric_axioms(raw)?;
    if generated_topology(&metric) != topology {
        return Err(Error::Internal(format!(
            "example `{}` does not generate its topology",
            spec.name()
        )));
    }
    Ok((topology, metric))
}

/// Outcome of comparing a metric's generated topology with a target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetrizationCheck {
    /// R.O-metric violations; when nonempty no topology was generated.
    pub violations: Vec<Violation>,
    /// Opens of the target that the metric does not generate.
    pub missing: Vec<PointSet>,
    /// Generated opens that are not in the target.
    pub extra: Vec<PointSet>,
}

impl MetrizationCheck {
    pub fn holds(&self) -> bool {
        self.violations.is_empty() && self.missing.is_empty() && self.extra.is_empty()
    }
}

impl fmt::Display for MetrizationCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "holds={} violations={} missing={} extra={}",
            self.holds(),
            self.violations.len(),
            self.missing.len(),
            self.extra.len()
        )
    }
}

/// Does `m` pass the R.O axioms and generate exactly `t`?
pub fn verify_metrization(t: &FiniteTopology, m: &RawDistanceMatrix) -> Result<MetrizationCheck> {
    if t.ground() != m.ground() {
        return Err(Error::GroundMismatch);
    }
    let metric = match check_rometric_axioms(m.clone()) {
        Ok(metric) => metric,
        Err(Error::RoAxioms(violations)) => {
            return Ok(MetrizationCheck {
                violations,
                missing: vec![],
                extra: vec![],
            });
        }
        Err(e) => return Err(e),
    };
    let generated = generated_topology(&metric);
    let missing = t.opens().iter().copied().filter(|u| !generated.is_open(*u)).collect();
    let extra = generated.opens().iter().copied().filter(|u| !t.is_open(*u)).collect();
    Ok(MetrizationCheck {
        violations: vec![],
        missing,
        extra,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::classify_axioms;

    fn tau_a() -> FiniteTopology {
        let g = GroundSet::new(["1", "2", "3"]).unwrap();
        let fam: Vec<PointSet> = [&[][..], &["1"], &["1", "2"], &["1", "3"], &["1", "2", "3"]]
            .iter()
            .map(|s| g.subset(s.iter()).unwrap())
            .collect();
        FiniteTopology::validate(g, &fam).unwrap()
    }

    #[test]
    fn pointed_subbasis_on_particular_set() {
        let t = tau_a();
        let g = t.ground().clone();
        let f = vec![
            g.subset(["1"]).unwrap(),
            g.subset(["1", "2"]).unwrap(),
            g.subset(["1", "3"]).unwrap(),
        ];
        let ps = PointedSubbasis::new(t.clone(), f).unwrap();
        let m = metrize_from_pointed_subbasis(&ps).unwrap();
        let expected = RawDistanceMatrix::from_integers(g, &[&[0, 1, 1], &[0, 0, 1], &[0, 1, 0]]).unwrap();
        assert_eq!(m.raw(), &expected);
        assert_eq!(generated_topology(&m), t);
    }

    #[test]
    fn pointed_subbasis_invariants() {
        let t = tau_a();
        let g = t.ground().clone();
        let not_containing = vec![g.subset(["1"]).unwrap(), g.subset(["1"]).unwrap(), g.full()];
        assert!(
            matches!(PointedSubbasis::new(t.clone(), not_containing), Err(Error::Precondition(m)) if m.contains("f(2)"))
        );
        let not_open = vec![g.subset(["1"]).unwrap(), g.subset(["2"]).unwrap(), g.full()];
        assert!(
            matches!(PointedSubbasis::new(t.clone(), not_open), Err(Error::Precondition(m)) if m.contains("not open"))
        );
        let too_coarse = vec![g.full(), g.full(), g.full()];
        assert!(PointedSubbasis::new(t, too_coarse).is_err());
    }

    #[test]
    fn discrete_gives_indicator_metric() {
        let t = FiniteTopology::discrete(GroundSet::alphabetic(3));
        let m = metrize_finite(&t).unwrap();
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(m.get(x, y), &int(i64::from(x != y)));
            }
        }
    }

    #[test]
    fn sierpinski_metric_matches_construction() {
        let m = metrize_finite(&FiniteTopology::sierpinski()).unwrap();
        let expected =
            RawDistanceMatrix::from_integers(GroundSet::new(["0", "1"]).unwrap(), &[&[0, 0], &[1, 0]]).unwrap();
        assert_eq!(m.raw(), &expected);
    }

    #[test]
    fn indiscrete_gives_zero_metric() {
        let t = FiniteTopology::indiscrete(GroundSet::alphabetic(2));
        let m = metrize_finite(&t).unwrap();
        assert!(m.raw().rows().flatten().all(|v| *v == int(0)));
        assert!(matches!(
            metrize_finite(&FiniteTopology::indiscrete(GroundSet::alphabetic(0))),
            Err(Error::EmptyGround)
        ));
    }

    #[test]
    fn lifts_through_quotient() {
        let g = GroundSet::alphabetic(3);
        let fam = vec![PointSet::EMPTY, g.subset(["a", "b"]).unwrap(), g.full()];
        let t = FiniteTopology::validate(g, &fam).unwrap();
        let q = t.kolmogorov_quotient();
        let dq = metrize_finite(&q.quotient).unwrap();
        let lifted = lift_from_quotient(&t, &q, &dq).unwrap();
        assert_eq!(lifted.get(0, 1), &int(0));
        assert_eq!(lifted.get(1, 0), &int(0));
        assert_eq!(lifted.get(0, 2), dq.get(0, 1));
        assert_eq!(lifted.get(1, 2), dq.get(0, 1));
        assert_eq!(lifted.get(2, 0), dq.get(1, 0));
        assert_eq!(lifted.get(2, 1), dq.get(1, 0));
        assert_eq!(generated_topology(&lifted), t);
    }

    #[test]
    fn lift_rejects_foreign_metric() {
        let g = GroundSet::alphabetic(3);
        let fam = vec![PointSet::EMPTY, g.subset(["a", "b"]).unwrap(), g.full()];
        let t = FiniteTopology::validate(g, &fam).unwrap();
        let q = t.kolmogorov_quotient();
        let zero = metrize_finite(&FiniteTopology::indiscrete(q.quotient.ground().clone())).unwrap();
        assert!(matches!(lift_from_quotient(&t, &q, &zero), Err(Error::Precondition(_))));
    }

    #[test]
    fn lift_of_indiscrete_is_zero() {
        let t = FiniteTopology::indiscrete(GroundSet::alphabetic(3));
        let q = t.kolmogorov_quotient();
        let dq = metrize_finite(&q.quotient).unwrap();
        let lifted = lift_from_quotient(&t, &q, &dq).unwrap();
        assert!(lifted.raw().rows().flatten().all(|v| *v == int(0)));
    }

    #[test]
    fn examples_generate_their_topologies() {
        for name in ExampleSpec::NAMES {
            let spec = ExampleSpec::by_name(name).unwrap();
            let (t, m) = builtin_example(&spec).unwrap();
            assert!(verify_metrization(&t, m.raw()).unwrap().holds(), "{name}");
        }
    }

    #[test]
    fn three_point_example_is_asymmetric_quasi_pseudo() {
        let (t, m) = builtin_example(&ExampleSpec::ThreePoint).unwrap();
        assert_eq!(t.opens().len(), 4);
        let p = classify_axioms(m.raw()).unwrap();
        assert!(p.is_quasi_pseudo && !p.is_quasi);
    }

    #[test]
    fn particular_set_balls() {
        let (t, m) = builtin_example(&ExampleSpec::by_name("particular_set").unwrap()).unwrap();
        let g = t.ground().clone();
        assert_eq!(t, tau_a());
        assert_eq!(
            crate::metric::ball(&m, 0, &int(1)).unwrap().members,
            g.subset(["1"]).unwrap()
        );
        assert_eq!(
            crate::metric::ball(&m, 1, &int(1)).unwrap().members,
            g.subset(["1", "2"]).unwrap()
        );
        assert_eq!(crate::metric::ball(&m, 2, &int(2)).unwrap().members, g.full());
    }

    #[test]
    fn paired_cofinite_is_discrete_at_finite_scale() {
        let (t, m) = builtin_example(&ExampleSpec::by_name("paired_cofinite").unwrap()).unwrap();
        let g = t.ground().clone();
        assert_eq!(t, FiniteTopology::discrete(g.clone()));
        assert_eq!(m.get(0, 1), &int(1));
        assert_eq!(m.get(1, 0), &int(1));
        assert_eq!(m.get(0, 2), &int(0));
        assert_eq!(
            crate::metric::ball(&m, 0, &int(1)).unwrap().members,
            g.subset(["x1", "x3", "x4"]).unwrap()
        );
        let odd = ExampleSpec::PairedCofinite {
            points: strings(["p", "q", "r"]),
        };
        assert!(matches!(builtin_example(&odd), Err(Error::Precondition(_))));
    }

    #[test]
    fn empty_particular_set_is_rejected() {
        let spec = ExampleSpec::ParticularSet {
            points: strings(["1", "2"]),
            subset: vec![],
        };
        assert!(builtin_example(&spec).is_err());
    }

    #[test]
    fn verify_reports_missing_opens() {
        let g = GroundSet::alphabetic(2);
        let zero = RawDistanceMatrix::from_integers(g.clone(), &[&[0, 0], &[0, 0]]).unwrap();
        let check = verify_metrization(&FiniteTopology::discrete(g.clone()), &zero).unwrap();
        assert!(!check.holds());
        assert_eq!(check.missing, vec![PointSet::singleton(0), PointSet::singleton(1)]);
        assert!(check.extra.is_empty());

        let bad = RawDistanceMatrix::from_integers(g.clone(), &[&[1, 0], &[0, 0]]).unwrap();
        let check = verify_metrization(&FiniteTopology::discrete(g), &bad).unwrap();
        assert_eq!(check.violations.len(), 1);
        assert!(!check.holds());
    }

    #[test]
    fn verify_rejects_ground_mismatch() {
        let zero = RawDistanceMatrix::from_integers(GroundSet::alphabetic(2), &[&[0, 0], &[0, 0]]).unwrap();
        let other = FiniteTopology::sierpinski();
        assert!(matches!(verify_metrization(&other, &zero), Err(Error::GroundMismatch)));
    }
}
