//! Exhaustive ground truth for small ground sets.
//!
//! [`enumerate_topologies`] filters every family of subsets of an `n`-point
//! set (`n ≤ 4`, so at most 2^16 families) with two separate closure checks
//! that must agree. [`brute_force_metrize`] scans zero-diagonal matrices
//! over a finite value set. [`cross_check_suite`] runs the structural
//! results of the other modules over a whole census.

use std::fmt;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::generalized::{
    check_generalized_axioms, generalized_topology, sierpinski_embed, universal_generalized_metrization,
};
use crate::ground::{GroundSet, PointSet};
use crate::metric::{check_rometric_axioms, ROMetric, RawDistanceMatrix};
use crate::metrization::{lift_from_quotient, metrize_finite, verify_metrization};
use crate::rational::{self, Rational};
use crate::topology::FiniteTopology;

pub const MAX_CENSUS_POINTS: usize = 4;

/// Every labeled topology on `n` points, in increasing order of the
/// family bitmask (bit `s` set when subset `s` is open).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopologyCensus {
    pub n: usize,
    pub topologies: Vec<FiniteTopology>,
}

impl TopologyCensus {
    pub fn count(&self) -> usize {
        self.topologies.len()
    }
}

fn pairwise_closed(family: u32, full: usize) -> bool {
    let has = |s: usize| family >> s & 1 == 1;
    if !has(0) || !has(full) {
        return false;
    }
    let members: Vec<usize> = (0..=full).filter(|&s| has(s)).collect();
    members
        .iter()
        .all(|&a| members.iter().all(|&b| has(a | b) && has(a & b)))
}

/// Grows `family ∪ {∅, X}` to a fixpoint under unions and intersections.
fn closure(family: u32, full: usize) -> u32 {
    let mut closed = family | 1 | 1 << full;
    loop {
        let mut next = closed;
        for a in 0..=full {
            if closed >> a & 1 == 0 {
                continue;
            }
            for b in 0..=full {
                if closed >> b & 1 == 1 {
                    next |= 1 << (a | b) | 1 << (a & b);
                }
            }
        }
        if next == closed {
            return closed;
        }
        closed = next;
    }
}

pub fn enumerate_topologies(n: usize) -> Result<TopologyCensus> {
    if n > MAX_CENSUS_POINTS {
        return Err(Error::Budget(format!(
            "census is limited to {MAX_CENSUS_POINTS} points (2^{} families for {n})",
            1u64 << n
        )));
    }
    let ground = GroundSet::alphabetic(n);
    let full = (1usize << n) - 1;
    let families: u64 = 1 << (1u64 << n);
    let mut topologies = Vec::new();
    for family in 0..families {
        let family = family as u32;
        let by_pairs = pairwise_closed(family, full);
        let by_fixpoint = closure(family, full) == family;
        if by_pairs != by_fixpoint {
            return Err(Error::Internal(format!(
                "closure checks disagree on family {family:#x}"
            )));
        }
        if !by_pairs {
            continue;
        }
        let sets: Vec<PointSet> = (0..=full)
            .filter(|&s| family >> s & 1 == 1)
            .map(|s| PointSet(s as u128))
            .collect();
        topologies.push(FiniteTopology::validate(ground.clone(), &sets)?);
    }
    Ok(TopologyCensus { n, topologies })
}

/// Candidate values for brute-force search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    value_set: Vec<Rational>,
    max_candidates: u128,
}

impl SearchBudget {
    pub fn new(value_set: Vec<Rational>, max_candidates: u128) -> Result<Self> {
        if !value_set.iter().any(|v| *v == rational::int(0)) {
            return Err(Error::Budget("value set must contain 0".to_string()));
        }
        if let Some(v) = value_set.iter().find(|v| v.is_negative()) {
            return Err(Error::Budget(format!("negative value {}", rational::format(v))));
        }
        for (i, v) in value_set.iter().enumerate() {
            if value_set[..i].contains(v) {
                return Err(Error::Budget(format!("duplicate value {}", rational::format(v))));
            }
        }
        if max_candidates == 0 {
            return Err(Error::Budget("candidate cap must be positive".to_string()));
        }
        Ok(SearchBudget {
            value_set,
            max_candidates,
        })
    }

    pub fn values(&self) -> &[Rational] {
        &self.value_set
    }

    pub fn max_candidates(&self) -> u128 {
        self.max_candidates
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found {
        metric: ROMetric,
        /// Index of the candidate in search order.
        candidate: u128,
    },
    Exhausted {
        examined: u128,
        /// `|values|^(n² − n)`, when it fits in a `u128`.
        total: Option<u128>,
        /// The whole candidate space was examined.
        complete: bool,
    },
}

impl SearchOutcome {
    pub fn metric(&self) -> Option<&ROMetric> {
        match self {
            SearchOutcome::Found { metric, .. } => Some(metric),
            SearchOutcome::Exhausted { .. } => None,
        }
    }
}

/// First zero-diagonal matrix over the budget's values that generates `t`.
///
/// Candidates are ordered lexicographically by the value indices of the
/// off-diagonal entries in row-major order, first entry most significant.
pub fn brute_force_metrize(t: &FiniteTopology, budget: &SearchBudget) -> Result<SearchOutcome> {
    let n = t.len();
    let values = budget.values();
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let total = u32::try_from(slots.len())
        .ok()
        .and_then(|e| (values.len() as u128).checked_pow(e));
    let zero = values
        .iter()
        .position(|v| *v == rational::int(0))
        .expect("checked by SearchBudget");

    let mut digits = vec![0usize; slots.len()];
    let mut examined: u128 = 0;
    loop {
        if examined == budget.max_candidates() {
            return Ok(SearchOutcome::Exhausted {
                examined,
                total,
                complete: false,
            });
        }
        let mut rows = vec![vec![values[zero].clone(); n]; n];
        for (&(i, j), &d) in slots.iter().zip(&digits) {
            rows[i][j] = values[d].clone();
        }
        let raw = RawDistanceMatrix::new(t.ground().clone(), rows)?;
        if verify_metrization(t, &raw)?.holds() {
            let metric = check_rometric_axioms(raw)?;
            return Ok(SearchOutcome::Found {
                metric,
                candidate: examined,
            });
        }
        examined += 1;
        // Odometer: the last slot turns fastest.
        let mut k = slots.len();
        loop {
            if k == 0 {
                return Ok(SearchOutcome::Exhausted {
                    examined,
                    total,
                    complete: true,
                });
            }
            k -= 1;
            digits[k] += 1;
            if digits[k] < values.len() {
                break;
            }
            digits[k] = 0;
        }
    }
}

/// Tally of one property across a census.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckTally {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    /// Census index and message of the first failure.
    pub first_failure: Option<(usize, String)>,
}

impl CheckTally {
    fn new(name: &'static str) -> Self {
        CheckTally {
            name,
            passed: 0,
            failed: 0,
            skipped: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, index: usize, outcome: Option<Result<(), String>>) {
        match outcome {
            None => self.skipped += 1,
            Some(Ok(())) => self.passed += 1,
            Some(Err(message)) => {
                self.failed += 1;
                self.first_failure.get_or_insert((index, message));
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub n: usize,
    pub topologies: usize,
    pub t0_count: usize,
    pub checks: Vec<CheckTally>,
    /// Failing topologies, for the first failure of each check.
    pub witnesses: Vec<FiniteTopology>,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failed == 0)
    }
}

impl fmt::Display for CrossCheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "n = {}: {} topologies, {} T0",
            self.n, self.topologies, self.t0_count
        )?;
        for c in &self.checks {
            write!(
                f,
                "  {:<22} passed {:>4}  failed {:>4}  skipped {:>4}",
                c.name, c.passed, c.failed, c.skipped
            )?;
            if let Some((i, msg)) = &c.first_failure {
                write!(f, "  first failure #{i}: {msg}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Largest census size for which the universal construction is included.
pub const UNIVERSAL_CHECK_POINTS: usize = 3;

fn err_text(e: Error) -> String {
    e.to_string()
}

fn check_metrize(t: &FiniteTopology) -> Result<(), String> {
    let raw = if t.is_empty() {
        RawDistanceMatrix::new(t.ground().clone(), vec![]).map_err(err_text)?
    } else {
        metrize_finite(t).map_err(err_text)?.into_raw()
    };
    let check = verify_metrization(t, &raw).map_err(err_text)?;
    if check.holds() {
        Ok(())
    } else {
        Err(check.to_string())
    }
}

fn check_quotient_t0(t: &FiniteTopology) -> Result<(), String> {
    let q = t.kolmogorov_quotient();
    match q.quotient.t0_witness() {
        None => Ok(()),
        Some((a, b)) => Err(format!("classes {a} and {b} are not separated")),
    }
}

fn check_lift(t: &FiniteTopology) -> Option<Result<(), String>> {
    if t.is_empty() {
        return None;
    }
    let q = t.kolmogorov_quotient();
    Some(
        metrize_finite(&q.quotient)
            .and_then(|dq| lift_from_quotient(t, &q, &dq))
            .map(|_| ())
            .map_err(err_text),
    )
}

fn check_open_singleton(t: &FiniteTopology) -> Option<Result<(), String>> {
    if t.is_empty() || !t.is_t0() {
        return None;
    }
    Some(match t.find_open_singleton() {
        Ok(a) if t.is_open(PointSet::singleton(a)) => Ok(()),
        Ok(a) => Err(format!("{{{}}} is not open", t.ground().label(a))),
        Err(e) => Err(e.to_string()),
    })
}

fn check_universal(t: &FiniteTopology) -> Option<Result<(), String>> {
    if t.is_empty() || t.len() > UNIVERSAL_CHECK_POINTS {
        return None;
    }
    Some((|| {
        let (metric, family) = universal_generalized_metrization(t).map_err(err_text)?;
        let space = check_generalized_axioms(&metric, &family).map_err(err_text)?;
        if &generalized_topology(&space).map_err(err_text)? == t {
            Ok(())
        } else {
            Err("generalized topology differs from the input".to_string())
        }
    })())
}

fn check_embedding(t: &FiniteTopology) -> Option<Result<(), String>> {
    if t.is_empty() || !t.is_t0() || t.len() > UNIVERSAL_CHECK_POINTS {
        return None;
    }
    Some((|| {
        let check = sierpinski_embed(t).map_err(err_text)?.verify().map_err(err_text)?;
        if check.holds() && check.complete() {
            Ok(())
        } else {
            Err(format!("{check:?}"))
        }
    })())
}

/// Runs every structural check over the census on `n` points.
pub fn cross_check_suite(n: usize) -> Result<CrossCheckReport> {
    let census = enumerate_topologies(n)?;
    let mut tallies = [
        CheckTally::new("metrize_round_trip"),
        CheckTally::new("quotient_is_t0"),
        CheckTally::new("quotient_lift"),
        CheckTally::new("open_singleton"),
        CheckTally::new("universal_round_trip"),
        CheckTally::new("sierpinski_embedding"),
    ];
    let mut t0_count = 0;
    for (i, t) in census.topologies.iter().enumerate() {
        if t.is_t0() {
            t0_count += 1;
        }
        tallies[0].record(i, Some(check_metrize(t)));
        tallies[1].record(i, Some(check_quotient_t0(t)));
        tallies[2].record(i, check_lift(t));
        tallies[3].record(i, check_open_singleton(t));
        tallies[4].record(i, check_universal(t));
        tallies[5].record(i, check_embedding(t));
    }
    let witnesses = tallies
        .iter()
        .filter_map(|c| c.first_failure.as_ref().map(|(i, _)| census.topologies[*i].clone()))
        .collect();
    Ok(CrossCheckReport {
        n,
        topologies: census.count(),
        t0_count,
        checks: tallies.to_vec(),
        witnesses,
    })
}
