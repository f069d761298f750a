use rometric_core::json::{self, TopologyDoc};
use rometric_core::metric::generated_topology;
use rometric_core::metrization::metrize_finite;
use rometric_core::oracle::{
    brute_force_metrize, cross_check_suite, enumerate_topologies, SearchBudget, SearchOutcome,
};
use rometric_core::rational::int;
use rometric_core::Error;

#[test]
fn census_counts() {
    let counts: Vec<usize> = (0..=4).map(|n| enumerate_topologies(n).unwrap().count()).collect();
    assert_eq!(counts, [1, 1, 4, 29, 355]);
    assert!(matches!(enumerate_topologies(5), Err(Error::Budget { .. })));
}

#[test]
fn census_documents_reparse() {
    for t in enumerate_topologies(3).unwrap().topologies {
        let text = json::render(&TopologyDoc::from_topology(&t));
        assert_eq!(json::parse::<TopologyDoc>(&text).unwrap().to_topology().unwrap(), t);
    }
}

#[test]
fn brute_force_agrees_with_construction_on_three_points() {
    let budget = SearchBudget::new(vec![int(0), int(1)], 1 << 20).unwrap();
    for t in enumerate_topologies(3).unwrap().topologies {
        let found = brute_force_metrize(&t, &budget).unwrap();
        let m = found.metric().expect("every finite topology has a 0/1 metric");
        assert_eq!(generated_topology(m), t);
        assert_eq!(generated_topology(&metrize_finite(&t).unwrap()), t);
    }
}

#[test]
fn tiny_budget_is_reported() {
    let t = enumerate_topologies(3).unwrap().topologies.pop().unwrap();
    let budget = SearchBudget::new(vec![int(0), int(1)], 1).unwrap();
    match brute_force_metrize(&t, &budget).unwrap() {
        SearchOutcome::Found { .. } => {}
        SearchOutcome::Exhausted { examined, complete, .. } => {
            assert_eq!(examined, 1);
            assert!(!complete);
        }
    }
}

#[test]
fn cross_check_on_three_points() {
    let report = cross_check_suite(3).unwrap();
    assert!(report.passed(), "{report}");
    assert_eq!((report.topologies, report.t0_count), (29, 19));
}
