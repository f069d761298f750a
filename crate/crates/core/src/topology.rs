//! Finite topological spaces over a labeled ground set.
//!
//! Open sets are bitmasks and a topology keeps its family sorted by
//! `(size, mask)`, so two topologies on the same ground are equal exactly
//! when their families are equal. On a finite space every point has a
//! smallest open neighbourhood; several operations work through those
//! minimal open sets instead of the whole family.

use std::collections::HashSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::ground::{canonicalize, GroundSet, PointSet};

/// Largest ground on which [`FiniteTopology::find_isomorphism`] will search.
pub const MAX_ISOMORPHISM_POINTS: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteTopology {
    ground: GroundSet,
    opens: Vec<PointSet>,
}

/// The first reason a family fails to be a topology.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TopologyViolation {
    NotOverGround(PointSet),
    Duplicate(PointSet),
    MissingEmpty,
    MissingWhole,
    UnionMissing {
        left: PointSet,
        right: PointSet,
        union: PointSet,
    },
    IntersectionMissing {
        left: PointSet,
        right: PointSet,
        intersection: PointSet,
    },
}

impl TopologyViolation {
    pub fn describe(&self, ground: &GroundSet) -> String {
        let d = |s: &PointSet| ground.display(*s);
        match self {
            TopologyViolation::NotOverGround(s) => {
                format!("set {s:?} has points outside the ground set")
            }
            TopologyViolation::Duplicate(s) => format!("{} is listed twice", d(s)),
            TopologyViolation::MissingEmpty => "the empty set is not open".to_string(),
            TopologyViolation::MissingWhole => "the whole space is not open".to_string(),
            TopologyViolation::UnionMissing { left, right, union } => {
                format!("{} ∪ {} = {} is missing", d(left), d(right), d(union))
            }
            TopologyViolation::IntersectionMissing {
                left,
                right,
                intersection,
            } => {
                format!("{} ∩ {} = {} is missing", d(left), d(right), d(intersection))
            }
        }
    }

    /// Sets that witness the violation, in the order they appear in the message.
    pub fn witness_sets(&self) -> Vec<PointSet> {
        match *self {
            TopologyViolation::NotOverGround(s) | TopologyViolation::Duplicate(s) => vec![s],
            TopologyViolation::MissingEmpty => vec![PointSet::EMPTY],
            TopologyViolation::MissingWhole => vec![],
            TopologyViolation::UnionMissing { left, right, union } => vec![left, right, union],
            TopologyViolation::IntersectionMissing {
                left,
                right,
                intersection,
            } => {
                vec![left, right, intersection]
            }
        }
    }
}

/// Kolmogorov quotient of a finite space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientResult {
    /// Equivalence classes ordered by their smallest member.
    pub classes: Vec<PointSet>,
    /// `class_of[p]` is the index of the class containing `p`.
    pub class_of: Vec<usize>,
    /// Topology on the classes, labeled by each class's smallest member.
    pub quotient: FiniteTopology,
}

impl QuotientResult {
    pub fn representative(&self, class: usize) -> usize {
        self.classes[class].first().expect("classes are nonempty")
    }

    /// Preimage in the original ground of a set of classes.
    pub fn saturate(&self, classes: PointSet) -> PointSet {
        classes
            .iter()
            .fold(PointSet::EMPTY, |acc, c| acc.union(self.classes[c]))
    }

    /// Image in the quotient of a set of original points.
    pub fn project(&self, set: PointSet) -> PointSet {
        set.iter().map(|p| self.class_of[p]).collect()
    }
}

impl FiniteTopology {
    /// Checks the topology axioms and returns the canonical topology.
    pub fn validate(ground: GroundSet, family: &[PointSet]) -> Result<Self> {
        match first_violation(&ground, family) {
            Some(violation) => Err(Error::InvalidTopology {
                message: violation.describe(&ground),
                violation,
            }),
            None => {
                let mut opens = family.to_vec();
                canonicalize(&mut opens);
                Ok(FiniteTopology { ground, opens })
            }
        }
    }

    /// Smallest topology containing `family` as a subbasis.
    ///
    /// Opens are all unions of finite intersections of members, with the
    /// empty intersection being the whole space.
    pub fn close_subbasis(ground: GroundSet, family: &[PointSet]) -> Result<Self> {
        let full = ground.full();
        if let Some(stray) = family.iter().find(|s| !s.is_subset(full)) {
            return Err(Error::InvalidTopology {
                message: TopologyViolation::NotOverGround(*stray).describe(&ground),
                violation: TopologyViolation::NotOverGround(*stray),
            });
        }
        let minimal = minimal_opens_of_subbasis(family, ground.len());
        Ok(Self::from_minimal_opens(ground, &minimal))
    }

    /// Topology whose opens are all unions of `generators`; `generators[p]`
    /// should be the minimal open set of `p`.
    pub fn from_minimal_opens(ground: GroundSet, generators: &[PointSet]) -> Self {
        let opens = union_closure(generators);
        FiniteTopology { ground, opens }
    }

    pub fn discrete(ground: GroundSet) -> Self {
        let generators: Vec<_> = (0..ground.len()).map(PointSet::singleton).collect();
        Self::from_minimal_opens(ground, &generators)
    }

    pub fn indiscrete(ground: GroundSet) -> Self {
        let full = ground.full();
        let mut opens = vec![PointSet::EMPTY, full];
        opens.dedup();
        FiniteTopology { ground, opens }
    }

    /// Sierpinski space on labels `0`, `1` with `{1}` open.
    pub fn sierpinski() -> Self {
        let ground = GroundSet::new(["0", "1"]).expect("distinct labels");
        let opens = vec![PointSet::EMPTY, PointSet::singleton(1), PointSet::full(2)];
        FiniteTopology { ground, opens }
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

    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn is_open(&self, set: PointSet) -> bool {
        self.opens
            .binary_search_by_key(&set.canonical_key(), |s| s.canonical_key())
            .is_ok()
    }

    /// Intersection of all opens containing `point`.
    pub fn minimal_open_set(&self, point: usize) -> Result<PointSet> {
        self.ground.check_point(point)?;
        Ok(self
            .opens
            .iter()
            .filter(|u| u.contains(point))
            .fold(self.ground.full(), |acc, u| acc.intersection(*u)))
    }

    /// Minimal open set of every point, indexed by point.
    pub fn minimal_opens(&self) -> Vec<PointSet> {
        (0..self.len())
            .map(|p| self.minimal_open_set(p).expect("point in range"))
            .collect()
    }

    /// A pair of distinct points lying in exactly the same opens, if any.
    pub fn t0_witness(&self) -> Option<(usize, usize)> {
        let minimal = self.minimal_opens();
        (0..self.len())
            .tuple_combinations()
            .find(|&(a, b)| minimal[a] == minimal[b])
    }

    pub fn is_t0(&self) -> bool {
        self.t0_witness().is_none()
    }

    /// A point whose singleton is open.
    ///
    /// Starts from a ⊆-minimal nonempty open set and, while it holds two
    /// points, shrinks it by an open set separating them.
    pub fn find_open_singleton(&self) -> Result<usize> {
        if self.is_empty() {
            return Err(Error::EmptyGround);
        }
        if let Some((a, b)) = self.t0_witness() {
            return Err(self.not_t0(a, b));
        }
        let mut current = *self
            .opens
            .iter()
            .find(|u| !u.is_empty())
            .expect("nonempty ground has a nonempty open");
        while current.len() > 1 {
            let mut members = current.iter();
            let a = members.next().expect("two members");
            let b = members.next().expect("two members");
            let separator = self
                .opens
                .iter()
                .find(|v| v.contains(a) != v.contains(b))
                .expect("T0 spaces separate distinct points");
            // Nonempty: the separator keeps exactly one of a, b.
            current = current.intersection(*separator);
        }
        Ok(current.first().expect("singleton"))
    }

    pub(crate) fn not_t0(&self, a: usize, b: usize) -> Error {
        Error::NotT0 {
            first: self.ground.label(a).to_string(),
            second: self.ground.label(b).to_string(),
        }
    }

    /// Identifies points with identical open-set membership.
    pub fn kolmogorov_quotient(&self) -> QuotientResult {
        let n = self.len();
        let profile = |p: usize| -> Vec<bool> { self.opens.iter().map(|u| u.contains(p)).collect() };
        let mut classes: Vec<PointSet> = Vec::new();
        let mut profiles: Vec<Vec<bool>> = Vec::new();
        let mut class_of = Vec::with_capacity(n);
        for p in 0..n {
            let prof = profile(p);
            let c = match profiles.iter().position(|q| *q == prof) {
                Some(c) => {
                    classes[c].insert(p);
                    c
                }
                None => {
                    classes.push(PointSet::singleton(p));
                    profiles.push(prof);
                    classes.len() - 1
                }
            };
            class_of.push(c);
        }
        let labels = classes
            .iter()
            .map(|c| self.ground.label(c.first().expect("nonempty")).to_string());
        let ground = GroundSet::new(labels).expect("representatives are distinct");
        let mut opens: Vec<PointSet> = self
            .opens
            .iter()
            .map(|u| u.iter().map(|p| class_of[p]).collect())
            .collect();
        canonicalize(&mut opens);
        QuotientResult {
            classes,
            class_of,
            quotient: FiniteTopology { ground, opens },
        }
    }

    /// Searches for a homeomorphism `self → other`, returned as the image of
    /// each point. Brute force over bijections.
    pub fn find_isomorphism(&self, other: &FiniteTopology) -> Result<Option<Vec<usize>>> {
        let n = self.len();
        if n != other.len() || self.opens.len() != other.opens.len() {
            return Ok(None);
        }
        if n > MAX_ISOMORPHISM_POINTS {
            return Err(Error::Budget(format!(
                "isomorphism search is limited to {MAX_ISOMORPHISM_POINTS} points, got {n}"
            )));
        }
        let ours = self.minimal_opens();
        let theirs = other.minimal_opens();
        for perm in (0..n).permutations(n) {
            let preserves = (0..n).all(|p| {
                let image: PointSet = ours[p].iter().map(|q| perm[q]).collect();
                image == theirs[perm[p]]
            });
            if preserves {
                return Ok(Some(perm));
            }
        }
        Ok(None)
    }

    pub fn is_isomorphic(&self, other: &FiniteTopology) -> Result<bool> {
        Ok(self.find_isomorphism(other)?.is_some())
    }

    /// Same family of opens with the ground relabeled.
    pub fn relabel(&self, ground: GroundSet) -> Result<Self> {
        if ground.len() != self.len() {
            return Err(Error::GroundMismatch);
        }
        Ok(FiniteTopology {
            ground,
            opens: self.opens.clone(),
        })
    }
}

impl fmt::Display for FiniteTopology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opens = self.opens.iter().map(|u| self.ground.display(*u)).join(", ");
        write!(f, "{{{opens}}}")
    }
}

fn first_violation(ground: &GroundSet, family: &[PointSet]) -> Option<TopologyViolation> {
    let full = ground.full();
    if let Some(s) = family.iter().find(|s| !s.is_subset(full)) {
        return Some(TopologyViolation::NotOverGround(*s));
    }
    let mut seen = HashSet::new();
    for s in family {
        if !seen.insert(*s) {
            return Some(TopologyViolation::Duplicate(*s));
        }
    }
    if !seen.contains(&PointSet::EMPTY) {
        return Some(TopologyViolation::MissingEmpty);
    }
    if !seen.contains(&full) {
        return Some(TopologyViolation::MissingWhole);
    }
    let mut sorted = family.to_vec();
    canonicalize(&mut sorted);
    for (i, left) in sorted.iter().enumerate() {
        for right in &sorted[i + 1..] {
            let union = left.union(*right);
            if !seen.contains(&union) {
                return Some(TopologyViolation::UnionMissing {
                    left: *left,
                    right: *right,
                    union,
                });
            }
            let intersection = left.intersection(*right);
            if !seen.contains(&intersection) {
                return Some(TopologyViolation::IntersectionMissing {
                    left: *left,
                    right: *right,
                    intersection,
                });
            }
        }
    }
    None
}

/// Minimal open set of each point in the topology generated by `subbasis`
/// on `n` points: the intersection of the members containing it.
pub fn minimal_opens_of_subbasis(subbasis: &[PointSet], n: usize) -> Vec<PointSet> {
    let full = PointSet::full(n);
    (0..n)
        .map(|p| {
            subbasis
                .iter()
                .filter(|s| s.contains(p))
                .fold(full, |acc, s| acc.intersection(*s))
        })
        .collect()
}

/// All unions of subfamilies of `generators` (including the empty union),
/// in canonical order.
pub fn union_closure(generators: &[PointSet]) -> Vec<PointSet> {
    let mut distinct = generators.to_vec();
    canonicalize(&mut distinct);
    let mut seen: HashSet<PointSet> = HashSet::from([PointSet::EMPTY]);
    let mut family = vec![PointSet::EMPTY];
    for g in distinct {
        let additions: Vec<PointSet> = family.iter().map(|s| s.union(g)).filter(|u| seen.insert(*u)).collect();
        family.extend(additions);
    }
    canonicalize(&mut family);
    family
}
