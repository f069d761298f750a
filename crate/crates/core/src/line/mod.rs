//! Two R.O-metrics on the rational line and their balls as exact sets.
//!
//! `lower_limit`: `d(a, b) = b − a` when `a ≤ b` and `a − b + 1` when `b < a`.
//! Its balls of radius at most 1 are `[a, a + r)`.
//!
//! `k_topology`: for `x ∉ K`, `d(x, 1/n) = |x − 1/n| + 1`; every other pair
//! is at `|x − y|`. Balls around points outside `K` are punctured by `K`.
//!
//! Ball shapes are derived from the distance formulas. Each ball also
//! carries the textbook shape of the generating subbasis for comparison;
//! for radii above 1 the two can differ.

mod interval;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::metric::{check_rometric_axioms, RawDistanceMatrix, Violation};
use crate::rational::{self, Rational};

pub use interval::{in_k, Endpoint, IntervalSet, KRange, Piece};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LineMetric {
    LowerLimit,
    KTopology,
}

impl LineMetric {
    pub fn name(self) -> &'static str {
        match self {
            LineMetric::LowerLimit => "lower_limit",
            LineMetric::KTopology => "k_topology",
        }
    }
}

impl FromStr for LineMetric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lower_limit" => Ok(LineMetric::LowerLimit),
            "k_topology" => Ok(LineMetric::KTopology),
            other => Err(Error::Parse(format!(
                "unknown line metric `{other}` (expected lower_limit or k_topology)"
            ))),
        }
    }
}

impl fmt::Display for LineMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn eval_line_metric(metric: LineMetric, x: &Rational, y: &Rational) -> Rational {
    if x == y {
        return Rational::zero();
    }
    match metric {
        LineMetric::LowerLimit => {
            if y < x {
                x - y + Rational::one()
            } else {
                y - x
            }
        }
        LineMetric::KTopology => {
            if !in_k(x) && in_k(y) {
                (x - y).abs() + Rational::one()
            } else {
                (x - y).abs()
            }
        }
    }
}

pub fn interval_membership(set: &IntervalSet, q: &Rational) -> bool {
    set.contains(q)
}

/// A ball together with the textbook subbasis shape for the same center and radius.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineBall {
    pub metric: LineMetric,
    pub center: Rational,
    pub radius: Rational,
    /// Derived from the distance formula.
    pub set: IntervalSet,
    /// The shape listed for the generating subbasis.
    pub nominal: IntervalSet,
}

impl LineBall {
    pub fn matches_nominal(&self) -> bool {
        self.set == self.nominal
    }

    pub fn contains(&self, q: &Rational) -> bool {
        self.set.contains(q)
    }
}

/// `{y : d(center, y) < radius}` as an exact set.
pub fn line_ball(metric: LineMetric, center: &Rational, radius: &Rational) -> Result<LineBall> {
    if !radius.is_positive() {
        return Err(Error::NonPositiveRadius(rational::format(radius)));
    }
    let one = Rational::one();
    let c = center.clone();
    let (set, nominal) = match metric {
        LineMetric::LowerLimit => {
            let right = Endpoint::open(&c + radius);
            let set = if radius <= &one {
                Piece::new(Endpoint::closed(c.clone()), right.clone())
            } else {
                // Points left of c need c − y + 1 < r.
                Piece::new(Endpoint::open(&c - radius + &one), right.clone())
            };
            let nominal = if radius <= &one {
                Piece::new(Endpoint::closed(c.clone()), right)
            } else {
                Piece::new(Endpoint::open(&c - radius), right)
            };
            (IntervalSet::piece(set), IntervalSet::piece(nominal))
        }
        LineMetric::KTopology => {
            let whole = Piece::new(Endpoint::open(&c - radius), Endpoint::open(&c + radius));
            if in_k(&c) {
                (IntervalSet::piece(whole.clone()), IntervalSet::piece(whole))
            } else {
                // K points y join only when |c − y| + 1 < r.
                let reach = radius - &one;
                let inner = if reach.is_positive() {
                    Piece::new(Endpoint::open(&c - &reach), Endpoint::open(&c + &reach)).k_points()
                } else {
                    None
                };
                let set = punctured_with(whole.clone(), inner);
                let nominal = if radius <= &one {
                    punctured_with(whole, None)
                } else {
                    IntervalSet::piece(whole)
                };
                (set, nominal)
            }
        }
    };
    Ok(LineBall {
        metric,
        center: c,
        radius: radius.clone(),
        set,
        nominal,
    })
}

/// `piece \ K`, with `included` added back, in canonical form: the
/// puncture is dropped when it removes nothing.
fn punctured_with(piece: Piece, included: Option<KRange>) -> IntervalSet {
    let removed = piece.k_points();
    let mut piece = piece;
    match (removed, included) {
        (None, _) => IntervalSet::piece(piece),
        (Some(all), Some(inc)) if all == inc => IntervalSet::piece(piece),
        (Some(_), inc) => {
            piece.minus_k = true;
            IntervalSet {
                pieces: vec![piece],
                k_ranges: inc.into_iter().collect(),
                ..Default::default()
            }
        }
    }
}

/// Result of checking the R.O axioms on a finite sample of the line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineAxiomReport {
    pub metric: LineMetric,
    pub points: GroundSet,
    pub violations: Vec<Violation>,
}

impl LineAxiomReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Diagonal and conditional triangle checks over every triple of sample points.
pub fn check_line_axioms(metric: LineMetric, sample: &[Rational]) -> Result<LineAxiomReport> {
    let mut points = sample.to_vec();
    points.sort();
    points.dedup();
    let ground = GroundSet::new(points.iter().map(rational::format))?;
    let raw = RawDistanceMatrix::from_fn(ground.clone(), |i, j| eval_line_metric(metric, &points[i], &points[j]));
    let violations = match check_rometric_axioms(raw) {
        Ok(_) => vec![],
        Err(Error::RoAxioms(v)) => v,
        Err(e) => return Err(e),
    };
    Ok(LineAxiomReport {
        metric,
        points: ground,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn lower_limit_values() {
        assert_eq!(eval_line_metric(LineMetric::LowerLimit, &int(1), &int(0)), int(2));
        assert_eq!(eval_line_metric(LineMetric::LowerLimit, &int(0), &int(1)), int(1));
        assert_eq!(
            eval_line_metric(LineMetric::LowerLimit, &ratio(1, 2), &ratio(1, 2)),
            int(0)
        );
    }

    #[test]
    fn k_topology_values() {
        assert_eq!(
            eval_line_metric(LineMetric::KTopology, &int(0), &ratio(1, 3)),
            ratio(4, 3)
        );
        assert_eq!(
            eval_line_metric(LineMetric::KTopology, &ratio(1, 3), &int(0)),
            ratio(1, 3)
        );
        assert_eq!(
            eval_line_metric(LineMetric::KTopology, &ratio(1, 2), &ratio(1, 3)),
            ratio(1, 6)
        );
        assert_eq!(eval_line_metric(LineMetric::KTopology, &int(1), &int(1)), int(0));
    }

    #[test]
    fn lower_limit_small_ball() {
        let b = line_ball(LineMetric::LowerLimit, &int(0), &ratio(1, 2)).unwrap();
        assert_eq!(b.set.to_string(), "[0, 1/2)");
        assert!(b.matches_nominal());
    }

    #[test]
    fn lower_limit_large_ball_differs_from_listing() {
        let b = line_ball(LineMetric::LowerLimit, &int(0), &int(2)).unwrap();
        assert_eq!(b.set.to_string(), "(-1, 2)");
        assert_eq!(b.nominal.to_string(), "(-2, 2)");
        assert!(!b.matches_nominal());
    }

    #[test]
    fn k_topology_small_ball() {
        let b = line_ball(LineMetric::KTopology, &int(0), &ratio(1, 2)).unwrap();
        assert_eq!(b.set.to_string(), "(-1/2, 1/2) \\ K");
        assert!(b.matches_nominal());
    }

    #[test]
    fn k_topology_ball_gains_inner_tail() {
        let b = line_ball(LineMetric::KTopology, &int(0), &ratio(3, 2)).unwrap();
        assert_eq!(b.set.to_string(), "(-3/2, 3/2) \\ K ∪ {1/n : n ≥ 3}");
        assert!(!b.matches_nominal());
        assert!(b.contains(&ratio(1, 3)));
        assert!(!b.contains(&ratio(1, 2)));
        assert!(!b.contains(&int(1)));
    }

    #[test]
    fn k_topology_ball_at_k_point_is_plain() {
        let b = line_ball(LineMetric::KTopology, &ratio(1, 2), &ratio(1, 4)).unwrap();
        assert_eq!(b.set.to_string(), "(1/4, 3/4)");
        assert!(b.contains(&ratio(1, 3)));
    }

    #[test]
    fn k_topology_far_from_k_has_no_puncture() {
        let b = line_ball(LineMetric::KTopology, &int(5), &ratio(1, 2)).unwrap();
        assert_eq!(b.set.to_string(), "(9/2, 11/2)");
        assert!(b.matches_nominal());
        // With a big enough radius every K point inside is recovered.
        let big = line_ball(LineMetric::KTopology, &int(0), &int(3)).unwrap();
        assert_eq!(big.set.to_string(), "(-3, 3)");
        assert!(big.matches_nominal());
    }

    #[test]
    fn nonpositive_radius() {
        assert!(line_ball(LineMetric::LowerLimit, &int(0), &int(0)).is_err());
        assert!(line_ball(LineMetric::KTopology, &int(0), &int(-1)).is_err());
    }

    #[test]
    fn sample_axioms() {
        let ll = [int(-1), int(0), ratio(1, 2), int(1), int(2)];
        assert!(check_line_axioms(LineMetric::LowerLimit, &ll).unwrap().is_clean());
        let kt = [int(0), ratio(1, 2), ratio(1, 3), int(1), ratio(3, 2)];
        assert!(check_line_axioms(LineMetric::KTopology, &kt).unwrap().is_clean());
        let single = check_line_axioms(LineMetric::LowerLimit, &[int(0)]).unwrap();
        assert!(single.is_clean());
        assert_eq!(single.points.len(), 1);
    }

    #[test]
    fn parses_names() {
        assert_eq!("k_topology".parse::<LineMetric>().unwrap(), LineMetric::KTopology);
        assert!("euclid".parse::<LineMetric>().is_err());
    }
}
