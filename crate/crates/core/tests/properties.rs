use proptest::prelude::*;

use rometric_core::generalized::{check_generalized_axioms, generalized_topology, universal_generalized_metrization};
use rometric_core::json::{self, MetricDoc, SpaceDoc, TopologyDoc};
use rometric_core::line::{eval_line_metric, line_ball, LineMetric};
use rometric_core::metric::{check_rometric_axioms, classify_axioms, generated_topology, normalize};
use rometric_core::metrization::{lift_from_quotient, metrize_finite, verify_metrization};
use rometric_core::rational::{int, is_positive, ratio};
use rometric_core::{FiniteTopology, GroundSet, PointSet, Rational, RawDistanceMatrix};

fn topology() -> impl Strategy<Value = FiniteTopology> {
    (1usize..=7).prop_flat_map(|n| {
        prop::collection::vec(0u128..(1 << n), 0..6).prop_map(move |family| {
            let family: Vec<PointSet> = family
                .into_iter()
                .map(|b| PointSet::from_points((0..n).filter(|p| b >> p & 1 == 1)))
                .collect();
            FiniteTopology::close_subbasis(GroundSet::alphabetic(n), &family).unwrap()
        })
    })
}

fn value() -> impl Strategy<Value = Rational> {
    prop::sample::select(vec![(0, 1), (1, 3), (1, 2), (1, 1), (2, 1), (5, 2)]).prop_map(|(p, q)| ratio(p, q))
}

/// An R.O-metric obtained by lowering entries onto shorter positive detours.
fn ro_matrix() -> impl Strategy<Value = RawDistanceMatrix> {
    (1usize..=5).prop_flat_map(|n| {
        prop::collection::vec(value(), n * n).prop_map(move |flat| {
            let mut d: Vec<Vec<Rational>> = flat.chunks(n).map(|r| r.to_vec()).collect();
            for (i, row) in d.iter_mut().enumerate() {
                row[i] = int(0);
            }
            let mut changed = true;
            while changed {
                changed = false;
                for x in 0..n {
                    for y in 0..n {
                        for z in 0..n {
                            let detour = &d[x][z] + &d[z][y];
                            if is_positive(&detour) && d[x][y] > detour {
                                d[x][y] = detour;
                                changed = true;
                            }
                        }
                    }
                }
            }
            RawDistanceMatrix::new(GroundSet::alphabetic(n), d).unwrap()
        })
    })
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=8).prop_map(|(p, q)| ratio(p, q))
}

fn radius() -> impl Strategy<Value = Rational> {
    (1i64..=24, 1i64..=8).prop_map(|(p, q)| ratio(p, q))
}

proptest! {
    #[test]
    fn metrization_round_trips(t in topology()) {
        let m = metrize_finite(&t).unwrap();
        prop_assert!(verify_metrization(&t, m.raw()).unwrap().holds());
        prop_assert_eq!(generated_topology(&m), t);
    }

    #[test]
    fn quotient_lift_regenerates(t in topology()) {
        let q = t.kolmogorov_quotient();
        prop_assert!(q.quotient.is_t0());
        let dq = metrize_finite(&q.quotient).unwrap();
        let lifted = lift_from_quotient(&t, &q, &dq).unwrap();
        prop_assert_eq!(generated_topology(&lifted), t);
    }

    #[test]
    fn t0_spaces_have_open_singletons(t in topology()) {
        if t.is_t0() {
            let a = t.find_open_singleton().unwrap();
            prop_assert!(t.is_open(PointSet::singleton(a)));
        }
    }

    #[test]
    fn normalization_keeps_topology(raw in ro_matrix()) {
        let m = check_rometric_axioms(raw).unwrap();
        let n = normalize(&m);
        prop_assert!(n.raw().rows().flatten().all(|v| *v < int(1)));
        prop_assert_eq!(generated_topology(&n), generated_topology(&m));
    }

    #[test]
    fn repaired_matrices_are_ro(raw in ro_matrix()) {
        prop_assert!(classify_axioms(&raw).unwrap().is_ro);
    }

    #[test]
    fn metric_json_round_trip(raw in ro_matrix()) {
        let text = json::render(&MetricDoc::from_matrix(&raw));
        let back = json::parse::<MetricDoc>(&text).unwrap().to_matrix().unwrap();
        prop_assert_eq!(json::render(&MetricDoc::from_matrix(&back)), text);
        prop_assert_eq!(back, raw);
    }

    #[test]
    fn topology_json_round_trip(t in topology()) {
        let text = json::render(&TopologyDoc::from_topology(&t));
        let back = json::parse::<TopologyDoc>(&text).unwrap().to_topology().unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn universal_space_round_trip(t in topology().prop_filter("small", |t| t.len() <= 4)) {
        let (metric, family) = universal_generalized_metrization(&t).unwrap();
        let text = json::render(&SpaceDoc::from_parts(metric.raw(), &family));
        let (raw, family) = json::parse::<SpaceDoc>(&text).unwrap().to_parts().unwrap();
        let space = check_generalized_axioms(&check_rometric_axioms(raw).unwrap(), &family).unwrap();
        prop_assert_eq!(generalized_topology(&space).unwrap(), t);
    }

    #[test]
    fn line_balls_match_distance(c in small_rational(), q in small_rational(), r in radius(), k in any::<bool>()) {
        let metric = if k { LineMetric::KTopology } else { LineMetric::LowerLimit };
        let ball = line_ball(metric, &c, &r).unwrap();
        prop_assert_eq!(ball.contains(&q), eval_line_metric(metric, &c, &q) < r);
        prop_assert!(ball.contains(&c));
    }

    #[test]
    fn line_balls_grow_with_radius(c in small_rational(), q in small_rational(), r in radius(), extra in radius(), k in any::<bool>()) {
        let metric = if k { LineMetric::KTopology } else { LineMetric::LowerLimit };
        let small = line_ball(metric, &c, &r).unwrap();
        let large = line_ball(metric, &c, &(&r + &extra)).unwrap();
        prop_assert!(!small.contains(&q) || large.contains(&q));
    }
}
