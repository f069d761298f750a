//! Labeled ground sets and bitmask subsets.

use std::fmt;

use crate::error::{Error, Result};

/// Largest ground set a [`PointSet`] can address.
pub const MAX_POINTS: usize = 128;

/// An ordered list of distinct point labels. A point is identified by its
/// position in the list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_POINTS {
            return Err(Error::GroundTooLarge(labels.len()));
        }
        for (i, label) in labels.iter().enumerate() {
            if labels[..i].contains(label) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(GroundSet { labels })
    }

    /// Ground set labeled `a`, `b`, `c`, ... (falls back to `p<i>` past `z`).
    pub fn alphabetic(n: usize) -> Self {
        let labels = (0..n)
            .map(|i| {
                if i < 26 {
                    ((b'a' + i as u8) as char).to_string()
                } else {
                    format!("p{i}")
                }
            })
            .collect::<Vec<_>>();
        GroundSet::new(labels).expect("generated labels are distinct")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, point: usize) -> &str {
        &self.labels[point]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownPoint(label.to_string()))
    }

    pub fn check_point(&self, point: usize) -> Result<()> {
        if point < self.len() {
            Ok(())
        } else {
            Err(Error::UnknownPoint(format!("#{point}")))
        }
    }

    /// The whole ground set as a [`PointSet`].
    pub fn full(&self) -> PointSet {
        PointSet::full(self.len())
    }

    /// Builds a subset from labels.
    pub fn subset<I, S>(&self, labels: I) -> Result<PointSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut set = PointSet::EMPTY;
        for label in labels {
            set.insert(self.index_of(label.as_ref())?);
        }
        Ok(set)
    }

    /// Iterates over every subset of the ground set in numeric mask order.
    /// Only sensible for small grounds.
    pub fn power_set(&self) -> impl Iterator<Item = PointSet> {
        assert!(self.len() < 32, "power set of {} points", self.len());
        (0u128..(1u128 << self.len())).map(PointSet)
    }

    /// Renders a subset as `{a, b}`.
    pub fn display(&self, set: PointSet) -> String {
        let inner = set.iter().map(|p| self.label(p)).collect::<Vec<_>>().join(", ");
        format!("{{{inner}}}")
    }

    pub fn names(&self, set: PointSet) -> Vec<String> {
        set.iter().map(|p| self.label(p).to_string()).collect()
    }
}

/// A subset of a ground set, stored as a bitmask over point indices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct PointSet(pub u128);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub fn full(n: usize) -> PointSet {
        assert!(n <= MAX_POINTS);
        if n == MAX_POINTS {
            PointSet(u128::MAX)
        } else {
            PointSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(point: usize) -> PointSet {
        PointSet(1u128 << point)
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(points: I) -> PointSet {
        let mut s = PointSet::EMPTY;
        for p in points {
            s.insert(p);
        }
        s
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn contains(self, point: usize) -> bool {
        point < MAX_POINTS && self.0 >> point & 1 == 1
    }

    pub fn insert(&mut self, point: usize) {
        self.0 |= 1u128 << point;
    }

    pub fn remove(&mut self, point: usize) {
        self.0 &= !(1u128 << point);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: PointSet) -> PointSet {
        PointSet(self.0 | other.0)
    }

    pub fn intersection(self, other: PointSet) -> PointSet {
        PointSet(self.0 & other.0)
    }

    pub fn difference(self, other: PointSet) -> PointSet {
        PointSet(self.0 & !other.0)
    }

    /// Complement relative to a ground of `n` points.
    pub fn complement(self, n: usize) -> PointSet {
        PointSet::full(n).difference(self)
    }

    pub fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let p = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(p)
            }
        })
    }

    /// Key for the canonical family order: by size, then numeric mask.
    pub fn canonical_key(self) -> (u32, u128) {
        (self.0.count_ones(), self.0)
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        PointSet::from_points(iter)
    }
}

/// Sorts a family into canonical order and removes duplicates.
pub fn canonicalize(family: &mut Vec<PointSet>) {
    family.sort_by_key(|s| s.canonical_key());
    family.dedup();
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicate_labels() {
        assert!(matches!(
            GroundSet::new(["a", "b", "a"]),
            Err(Error::DuplicateLabel(l)) if l == "a"
        ));
    }

    #[test]
    fn set_algebra() {
        let a = PointSet::from_points([0, 2]);
        let b = PointSet::from_points([2, 3]);
        assert_eq!(a.union(b), PointSet::from_points([0, 2, 3]));
        assert_eq!(a.intersection(b), PointSet::singleton(2));
        assert_eq!(a.complement(4), PointSet::from_points([1, 3]));
        assert!(PointSet::singleton(2).is_subset(a));
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(PointSet::full(128).len(), 128);
    }

    #[test]
    fn canonical_order_is_size_then_mask() {
        let mut family = vec![
            PointSet::full(3),
            PointSet::singleton(1),
            PointSet::EMPTY,
            PointSet::singleton(0),
            PointSet::singleton(1),
        ];
        canonicalize(&mut family);
        assert_eq!(
            family,
            vec![
                PointSet::EMPTY,
                PointSet::singleton(0),
                PointSet::singleton(1),
                PointSet::full(3)
            ]
        );
    }

    #[test]
    fn subset_by_label() {
        let g = GroundSet::new(["x", "y", "z"]).unwrap();
        assert_eq!(g.subset(["z", "x"]).unwrap(), PointSet::from_points([0, 2]));
        assert!(matches!(g.subset(["w"]), Err(Error::UnknownPoint(_))));
        assert_eq!(g.display(PointSet::from_points([0, 2])), "{x, z}");
    }
}
