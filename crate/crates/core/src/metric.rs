//! Right-oriented metrics on a finite ground set.
//!
//! A distance matrix `d` is an R.O-metric when `d(x, x) = 0` and the
//! triangle inequality `d(x, y) ≤ d(x, z) + d(z, y)` holds whenever the
//! right-hand side is nonzero. Quasi-pseudo-metrics are the special case
//! where the triangle inequality is unconditional.
//!
//! Distances are exact rationals. Balls use a strict threshold, so the
//! finitely many distinct balls around a point are the prefix sets of its
//! sorted row; [`distinct_balls`] enumerates exactly those.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ground::{GroundSet, PointSet};
use crate::rational::{self, Rational};
use crate::topology::{minimal_opens_of_subbasis, FiniteTopology};

/// A square matrix of rationals with no axioms enforced.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RawDistanceMatrix {
    ground: GroundSet,
    entries: Vec<Rational>,
}

impl RawDistanceMatrix {
    pub fn new(ground: GroundSet, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = ground.len();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare {
                points: n,
                rows: rows.len(),
            });
        }
        Ok(RawDistanceMatrix {
            ground,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(ground: GroundSet, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let n = ground.len();
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        RawDistanceMatrix { ground, entries }
    }

    /// Convenience constructor from integer rows.
    pub fn from_integers(ground: GroundSet, rows: &[&[i64]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| rational::int(v)).collect())
            .collect();
        Self::new(ground, rows)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn get(&self, from: usize, to: usize) -> &Rational {
        &self.entries[from * self.len() + to]
    }

    pub fn row(&self, from: usize) -> &[Rational] {
        let n = self.len();
        &self.entries[from * n..(from + 1) * n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.len()).map(|i| self.row(i))
    }

    pub fn with_ground(self, ground: GroundSet) -> Result<Self> {
        if ground.len() != self.len() {
            return Err(Error::GroundMismatch);
        }
        Ok(RawDistanceMatrix { ground, ..self })
    }
}

impl fmt::Display for RawDistanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            let cells: Vec<String> = row.iter().map(rational::format).collect();
            writeln!(f, "{}: {}", self.ground.label(i), cells.join(" "))?;
        }
        Ok(())
    }
}

/// A distance matrix satisfying the R.O-metric axioms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ROMetric(RawDistanceMatrix);

impl ROMetric {
    /// Wraps a matrix already known to satisfy the axioms.
    pub(crate) fn trusted(raw: RawDistanceMatrix) -> Self {
        debug_assert!(ro_violations(&raw).is_empty());
        ROMetric(raw)
    }

    pub fn raw(&self) -> &RawDistanceMatrix {
        &self.0
    }

    pub fn into_raw(self) -> RawDistanceMatrix {
        self.0
    }

    pub fn ground(&self) -> &GroundSet {
        self.0.ground()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, from: usize, to: usize) -> &Rational {
        self.0.get(from, to)
    }

    pub fn row(&self, from: usize) -> &[Rational] {
        self.0.row(from)
    }

    pub fn relabel(self, ground: GroundSet) -> Result<Self> {
        Ok(ROMetric(self.0.with_ground(ground)?))
    }
}

impl fmt::Display for ROMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// One failed R.O-metric condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NegativeEntry {
        from: usize,
        to: usize,
        value: Rational,
    },
    NonZeroDiagonal {
        point: usize,
        value: Rational,
    },
    /// `d(from, to) > d(from, via) + d(via, to)` with a nonzero right side.
    Triangle {
        from: usize,
        via: usize,
        to: usize,
        direct: Rational,
        detour: Rational,
    },
}

impl Violation {
    pub fn describe(&self, ground: &GroundSet) -> String {
        let l = |p: &usize| ground.label(*p);
        match self {
            Violation::NegativeEntry { from, to, value } => format!(
                "negative distance d({}, {}) = {}",
                l(from),
                l(to),
                rational::format(value)
            ),
            Violation::NonZeroDiagonal { point, value } => {
                format!("d({0}, {0}) = {1} is not zero", l(point), rational::format(value))
            }
            Violation::Triangle {
                from,
                via,
                to,
                direct,
                detour,
            } => format!(
                "d({}, {}) = {} > d({}, {}) + d({}, {}) = {}",
                l(from),
                l(to),
                rational::format(direct),
                l(from),
                l(via),
                l(via),
                l(to),
                rational::format(detour)
            ),
        }
    }
}

fn domain_violations(m: &RawDistanceMatrix) -> Vec<Violation> {
    let n = m.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let v = m.get(i, j);
            if v.is_negative() {
                out.push(Violation::NegativeEntry {
                    from: i,
                    to: j,
                    value: v.clone(),
                });
            }
        }
    }
    for i in 0..n {
        let v = m.get(i, i);
        if !v.is_zero() && !v.is_negative() {
            out.push(Violation::NonZeroDiagonal {
                point: i,
                value: v.clone(),
            });
        }
    }
    out
}

fn ro_violations(m: &RawDistanceMatrix) -> Vec<Violation> {
    let mut out = domain_violations(m);
    let n = m.len();
    for from in 0..n {
        for via in 0..n {
            for to in 0..n {
                let detour = m.get(from, via) + m.get(via, to);
                if !detour.is_zero() && m.get(from, to) > &detour {
                    out.push(Violation::Triangle {
                        from,
                        via,
                        to,
                        direct: m.get(from, to).clone(),
                        detour,
                    });
                }
            }
        }
    }
    out
}

/// Accepts the matrix iff it is an R.O-metric; otherwise reports every
/// violated condition.
pub fn check_rometric_axioms(m: RawDistanceMatrix) -> Result<ROMetric> {
    let violations = ro_violations(&m);
    if violations.is_empty() {
        Ok(ROMetric(m))
    } else {
        Err(Error::RoAxioms(violations))
    }
}

/// Which classical distance axioms a matrix satisfies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomProfile {
    pub is_ro: bool,
    pub is_quasi_pseudo: bool,
    pub is_pseudo: bool,
    pub is_quasi: bool,
    pub is_t0_quasi: bool,
    pub is_metric: bool,
    pub witnesses: Vec<AxiomWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomWitness {
    /// `d(x, y) ≠ d(y, x)`, reported once per unordered pair.
    Asymmetric {
        x: usize,
        y: usize,
        forward: Rational,
        backward: Rational,
    },
    /// `d(x, y) = 0` for distinct points.
    ZeroDistance { x: usize, y: usize },
    /// `d(x, y) = 0 = d(y, x)` for distinct points, once per unordered pair.
    Inseparable { x: usize, y: usize },
    /// Unconditional triangle inequality fails. When `detour` is zero the
    /// R.O condition is still met.
    Triangle {
        from: usize,
        via: usize,
        to: usize,
        direct: Rational,
        detour: Rational,
    },
}

impl AxiomWitness {
    pub fn kind(&self) -> &'static str {
        match self {
            AxiomWitness::Asymmetric { .. } => "asymmetric",
            AxiomWitness::ZeroDistance { .. } => "zero_distance",
            AxiomWitness::Inseparable { .. } => "inseparable",
            AxiomWitness::Triangle { detour, .. } if detour.is_zero() => "triangle_exempt",
            AxiomWitness::Triangle { .. } => "triangle",
        }
    }

    pub fn points(&self) -> Vec<usize> {
        match *self {
            AxiomWitness::Asymmetric { x, y, .. }
            | AxiomWitness::ZeroDistance { x, y }
            | AxiomWitness::Inseparable { x, y } => vec![x, y],
            AxiomWitness::Triangle { from, via, to, .. } => vec![from, via, to],
        }
    }

    pub fn values(&self) -> Vec<Rational> {
        match self {
            AxiomWitness::Asymmetric { forward, backward, .. } => {
                vec![forward.clone(), backward.clone()]
            }
            AxiomWitness::ZeroDistance { .. } | AxiomWitness::Inseparable { .. } => {
                vec![Rational::zero()]
            }
            AxiomWitness::Triangle { direct, detour, .. } => vec![direct.clone(), detour.clone()],
        }
    }
}

/// Scans every pair and triple and reports which axiom systems hold.
///
/// Requires non-negative entries and a zero diagonal.
pub fn classify_axioms(m: &RawDistanceMatrix) -> Result<AxiomProfile> {
    let domain = domain_violations(m);
    if !domain.is_empty() {
        return Err(Error::RoAxioms(domain));
    }
    let n = m.len();
    let mut witnesses = Vec::new();
    let (mut symmetric, mut separating, mut t0) = (true, true, true);
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            let (fwd, bwd) = (m.get(x, y), m.get(y, x));
            if x < y && fwd != bwd {
                symmetric = false;
                witnesses.push(AxiomWitness::Asymmetric {
                    x,
                    y,
                    forward: fwd.clone(),
                    backward: bwd.clone(),
                });
            }
            if fwd.is_zero() {
                separating = false;
                witnesses.push(AxiomWitness::ZeroDistance { x, y });
                if x < y && bwd.is_zero() {
                    t0 = false;
                    witnesses.push(AxiomWitness::Inseparable { x, y });
                }
            }
        }
    }
    let (mut triangle, mut conditional) = (true, true);
    for from in 0..n {
        for via in 0..n {
            for to in 0..n {
                let detour = m.get(from, via) + m.get(via, to);
                if m.get(from, to) > &detour {
                    triangle = false;
                    if !detour.is_zero() {
                        conditional = false;
                    }
                    witnesses.push(AxiomWitness::Triangle {
                        from,
                        via,
                        to,
                        direct: m.get(from, to).clone(),
                        detour,
                    });
                }
            }
        }
    }
    Ok(AxiomProfile {
        is_ro: conditional,
        is_quasi_pseudo: triangle,
        is_pseudo: triangle && symmetric,
        is_quasi: triangle && separating,
        is_t0_quasi: triangle && t0,
        is_metric: triangle && separating && symmetric,
        witnesses,
    })
}

/// Ball radius. A plain radius `r` selects `d < r`; an inclusive radius
/// `v` selects `d ≤ v`, the ball for any radius just above `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Radius {
    pub value: Rational,
    pub inclusive: bool,
}

impl Radius {
    pub fn open(value: Rational) -> Self {
        Radius {
            value,
            inclusive: false,
        }
    }

    pub fn just_above(value: Rational) -> Self {
        Radius { value, inclusive: true }
    }

    pub fn admits(&self, distance: &Rational) -> bool {
        if self.inclusive {
            distance <= &self.value
        } else {
            distance < &self.value
        }
    }
}

impl fmt::Display for Radius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inclusive {
            write!(f, "{}+", rational::format(&self.value))
        } else {
            write!(f, "{}", rational::format(&self.value))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ball {
    pub center: usize,
    pub radius: Radius,
    pub members: PointSet,
}

/// `V_r(p) = {x : d(p, x) < r}`.
pub fn ball(m: &ROMetric, center: usize, radius: &Rational) -> Result<Ball> {
    m.ground().check_point(center)?;
    if !radius.is_positive() {
        return Err(Error::NonPositiveRadius(rational::format(radius)));
    }
    let radius = Radius::open(radius.clone());
    let members = select(m.row(center), &radius);
    Ok(Ball {
        center,
        radius,
        members,
    })
}

fn select(row: &[Rational], radius: &Radius) -> PointSet {
    row.iter()
        .enumerate()
        .filter(|(_, d)| radius.admits(d))
        .map(|(x, _)| x)
        .collect()
}

/// Sorted distinct values of a row.
pub fn value_classes(row: &[Rational]) -> Vec<Rational> {
    let mut values = row.to_vec();
    values.sort();
    values.dedup();
    values
}

/// Every distinct ball, one per (center, distinct row value); the value is
/// stored as an inclusive radius. Centers ascend, then values ascend.
pub fn distinct_balls(m: &ROMetric) -> Vec<Ball> {
    (0..m.len())
        .flat_map(|center| {
            let row = m.row(center);
            value_classes(row).into_iter().map(move |v| {
                let radius = Radius::just_above(v);
                let members = select(row, &radius);
                Ball {
                    center,
                    radius,
                    members,
                }
            })
        })
        .collect()
}

/// The topology generated by all balls as a subbasis.
pub fn generated_topology(m: &ROMetric) -> FiniteTopology {
    let family: Vec<PointSet> = distinct_balls(m).into_iter().map(|b| b.members).collect();
    FiniteTopology::close_subbasis(m.ground().clone(), &family).expect("balls lie in the ground")
}

/// Minimal open set of each point in the generated topology, without
/// enumerating the opens. Equal vectors mean equal topologies.
pub fn generated_minimal_opens(m: &ROMetric) -> Vec<PointSet> {
    let family: Vec<PointSet> = distinct_balls(m).into_iter().map(|b| b.members).collect();
    minimal_opens_of_subbasis(&family, m.len())
}

/// Entrywise `v ↦ v / (v + 1)`; bounded by 1 and generating the same topology.
pub fn normalize(m: &ROMetric) -> ROMetric {
    let raw = m.raw();
    let out = RawDistanceMatrix::from_fn(raw.ground().clone(), |i, j| {
        let v = raw.get(i, j);
        v / (v + Rational::one())
    });
    ROMetric::trusted(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn abc() -> GroundSet {
        GroundSet::new(["a", "b", "c"]).unwrap()
    }

    pub(crate) fn three_point() -> ROMetric {
        let raw = RawDistanceMatrix::from_integers(abc(), &[&[0, 1, 2], &[0, 0, 1], &[0, 0, 0]]).unwrap();
        check_rometric_axioms(raw).unwrap()
    }

    fn xyz_exempt() -> RawDistanceMatrix {
        let g = GroundSet::new(["x", "y", "z"]).unwrap();
        RawDistanceMatrix::from_integers(g, &[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]]).unwrap()
    }

    fn set(g: &GroundSet, labels: &[&str]) -> PointSet {
        g.subset(labels.iter()).unwrap()
    }

    #[test]
    fn accepts_three_point_example() {
        three_point();
    }

    #[test]
    fn zero_detour_is_exempt() {
        assert!(check_rometric_axioms(xyz_exempt()).is_ok());
    }

    #[test]
    fn reports_triangle_failure() {
        let raw = RawDistanceMatrix::from_integers(abc(), &[&[0, 1, 3], &[0, 0, 1], &[0, 0, 0]]).unwrap();
        match check_rometric_axioms(raw) {
            Err(Error::RoAxioms(v)) => assert_eq!(
                v,
                vec![Violation::Triangle {
                    from: 0,
                    via: 1,
                    to: 2,
                    direct: int(3),
                    detour: int(2)
                }]
            ),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn reports_every_domain_problem() {
        let g = GroundSet::new(["a", "b"]).unwrap();
        let raw = RawDistanceMatrix::from_integers(g, &[&[1, -1], &[0, 0]]).unwrap();
        let Err(Error::RoAxioms(v)) = check_rometric_axioms(raw) else {
            panic!()
        };
        assert!(v.contains(&Violation::NegativeEntry {
            from: 0,
            to: 1,
            value: int(-1)
        }));
        assert!(v.contains(&Violation::NonZeroDiagonal {
            point: 0,
            value: int(1)
        }));
    }

    #[test]
    fn rejects_ragged_rows() {
        let g = GroundSet::new(["a", "b"]).unwrap();
        assert!(matches!(
            RawDistanceMatrix::from_integers(g, &[&[0, 1], &[0]]),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn classifies_three_point_example() {
        let p = classify_axioms(three_point().raw()).unwrap();
        assert!(p.is_ro && p.is_quasi_pseudo && p.is_t0_quasi);
        assert!(!p.is_quasi && !p.is_pseudo && !p.is_metric);
        assert!(p.witnesses.contains(&AxiomWitness::ZeroDistance { x: 1, y: 0 }));
    }

    #[test]
    fn classifies_zero_matrix() {
        let raw = RawDistanceMatrix::from_integers(GroundSet::alphabetic(2), &[&[0, 0], &[0, 0]]).unwrap();
        let p = classify_axioms(&raw).unwrap();
        assert!(p.is_ro && p.is_quasi_pseudo && p.is_pseudo);
        assert!(!p.is_metric && !p.is_quasi && !p.is_t0_quasi);
    }

    #[test]
    fn classifies_line_metric() {
        let raw = RawDistanceMatrix::from_fn(GroundSet::alphabetic(3), |i, j| int((i as i64 - j as i64).abs()));
        let p = classify_axioms(&raw).unwrap();
        assert!(p.is_ro && p.is_quasi_pseudo && p.is_pseudo && p.is_quasi && p.is_t0_quasi && p.is_metric);
        assert!(p.witnesses.is_empty());
    }

    #[test]
    fn exempt_triangle_is_classified() {
        let p = classify_axioms(&xyz_exempt()).unwrap();
        assert!(p.is_ro);
        assert!(!p.is_quasi_pseudo);
        assert!(p.witnesses.iter().any(|w| w.kind() == "triangle_exempt"));
    }

    #[test]
    fn balls_use_strict_threshold() {
        let m = three_point();
        let g = abc();
        assert_eq!(ball(&m, 0, &int(1)).unwrap().members, set(&g, &["a"]));
        assert_eq!(ball(&m, 0, &int(2)).unwrap().members, set(&g, &["a", "b"]));
        assert_eq!(ball(&m, 0, &ratio(5, 2)).unwrap().members, g.full());
        assert!(matches!(ball(&m, 0, &int(0)), Err(Error::NonPositiveRadius(_))));
        assert!(ball(&m, 3, &int(1)).is_err());
    }

    #[test]
    fn distinct_balls_are_row_prefixes() {
        let m = three_point();
        let g = abc();
        let at_a: Vec<_> = distinct_balls(&m).into_iter().filter(|b| b.center == 0).collect();
        assert_eq!(
            at_a.iter().map(|b| b.members).collect::<Vec<_>>(),
            vec![set(&g, &["a"]), set(&g, &["a", "b"]), g.full()]
        );
        assert_eq!(at_a[1].radius, Radius::just_above(int(1)));
    }

    #[test]
    fn zero_metric_has_one_ball_per_center() {
        let raw = RawDistanceMatrix::from_fn(GroundSet::alphabetic(3), |_, _| int(0));
        let m = check_rometric_axioms(raw).unwrap();
        let balls = distinct_balls(&m);
        assert_eq!(balls.len(), 3);
        assert!(balls.iter().all(|b| b.members == PointSet::full(3)));
        assert_eq!(
            generated_topology(&m),
            FiniteTopology::indiscrete(GroundSet::alphabetic(3))
        );
    }

    #[test]
    fn sierpinski_metric_balls() {
        let g = GroundSet::new(["0", "1"]).unwrap();
        let raw = RawDistanceMatrix::from_integers(g, &[&[0, 0], &[1, 0]]).unwrap();
        let m = check_rometric_axioms(raw).unwrap();
        let balls: Vec<_> = distinct_balls(&m).into_iter().map(|b| (b.center, b.members)).collect();
        assert_eq!(
            balls,
            vec![
                (0, PointSet::full(2)),
                (1, PointSet::singleton(1)),
                (1, PointSet::full(2))
            ]
        );
        assert_eq!(generated_topology(&m), FiniteTopology::sierpinski());
    }

    #[test]
    fn three_point_topology() {
        let g = abc();
        let t = generated_topology(&three_point());
        assert_eq!(
            t.opens(),
            &[PointSet::EMPTY, set(&g, &["a"]), set(&g, &["a", "b"]), g.full()]
        );
        assert_eq!(generated_minimal_opens(&three_point()), t.minimal_opens());
    }

    #[test]
    fn normalization_values() {
        let m = three_point();
        let n = normalize(&m);
        assert_eq!(n.get(0, 1), &ratio(1, 2));
        assert_eq!(n.get(0, 2), &ratio(2, 3));
        assert_eq!(n.get(1, 0), &int(0));
        assert_eq!(generated_topology(&n), generated_topology(&m));
        assert!(check_rometric_axioms(n.into_raw()).is_ok());
    }
}
