//! Exact subsets of ℚ built from intervals, the set `K = {1/n : n ≥ 1}`,
//! and finite point lists.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Is `q = 1/n` for some integer `n ≥ 1`?
pub fn in_k(q: &Rational) -> bool {
    q.is_positive() && q.numer().is_one()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Endpoint {
    pub value: Rational,
    pub closed: bool,
}

impl Endpoint {
    pub fn open(value: Rational) -> Self {
        Endpoint { value, closed: false }
    }

    pub fn closed(value: Rational) -> Self {
        Endpoint { value, closed: true }
    }
}

/// A bounded interval, optionally with `K` removed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Piece {
    pub lower: Endpoint,
    pub upper: Endpoint,
    pub minus_k: bool,
}

impl Piece {
    pub fn new(lower: Endpoint, upper: Endpoint) -> Self {
        Piece {
            lower,
            upper,
            minus_k: false,
        }
    }

    pub fn interval_contains(&self, q: &Rational) -> bool {
        let above = if self.lower.closed {
            q >= &self.lower.value
        } else {
            q > &self.lower.value
        };
        let below = if self.upper.closed {
            q <= &self.upper.value
        } else {
            q < &self.upper.value
        };
        above && below
    }

    pub fn contains(&self, q: &Rational) -> bool {
        self.interval_contains(q) && !(self.minus_k && in_k(q))
    }

    /// The members of `K` inside the interval (ignoring the puncture).
    pub fn k_points(&self) -> Option<KRange> {
        let (lo, hi) = (&self.lower.value, &self.upper.value);
        if !hi.is_positive() {
            return None;
        }
        // 1/n < hi  ⇔  n > 1/hi;   1/n ≤ hi  ⇔  n ≥ 1/hi.
        let inv_hi = hi.recip();
        let first = if self.upper.closed {
            inv_hi.ceil().to_integer()
        } else {
            inv_hi.floor().to_integer() + 1
        };
        let first = first.max(BigInt::one());
        let last = if lo.is_positive() {
            // lo < 1/n  ⇔  n < 1/lo;   lo ≤ 1/n  ⇔  n ≤ 1/lo.
            let inv_lo = lo.recip();
            Some(if self.lower.closed {
                inv_lo.floor().to_integer()
            } else {
                inv_lo.ceil().to_integer() - 1
            })
        } else {
            None
        };
        KRange::new(first, last)
    }
}

/// `{1/n : first ≤ n ≤ last}`, unbounded above when `last` is `None`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KRange {
    pub first: BigInt,
    pub last: Option<BigInt>,
}

impl KRange {
    /// `None` when the range is empty.
    pub fn new(first: BigInt, last: Option<BigInt>) -> Option<Self> {
        let first = first.max(BigInt::one());
        match &last {
            Some(l) if *l < first => None,
            _ => Some(KRange { first, last }),
        }
    }

    pub fn contains(&self, q: &Rational) -> bool {
        if !in_k(q) {
            return false;
        }
        let n = q.denom();
        n >= &self.first && self.last.as_ref().is_none_or(|l| n <= l)
    }
}

/// A union of pieces and `K`-ranges, plus finitely many explicitly
/// included points, minus finitely many explicitly excluded points.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntervalSet {
    pub pieces: Vec<Piece>,
    pub k_ranges: Vec<KRange>,
    pub includes: Vec<Rational>,
    pub excludes: Vec<Rational>,
}

impl IntervalSet {
    /// Rejects a point that is both included and excluded.
    pub fn new(
        pieces: Vec<Piece>,
        k_ranges: Vec<KRange>,
        includes: Vec<Rational>,
        excludes: Vec<Rational>,
    ) -> Result<Self> {
        if let Some(q) = includes.iter().find(|q| excludes.contains(q)) {
            return Err(Error::Precondition(format!(
                "{} is both included and excluded",
                rational::format(q)
            )));
        }
        Ok(IntervalSet {
            pieces,
            k_ranges,
            includes,
            excludes,
        })
    }

    pub fn piece(piece: Piece) -> Self {
        IntervalSet {
            pieces: vec![piece],
            ..Default::default()
        }
    }

    /// Membership: excluded points are out, included points are in,
    /// otherwise any piece or `K`-range decides.
    pub fn contains(&self, q: &Rational) -> bool {
        if self.excludes.contains(q) {
            return false;
        }
        if self.includes.contains(q) {
            return true;
        }
        self.pieces.iter().any(|p| p.contains(q)) || self.k_ranges.iter().any(|k| k.contains(q))
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&rational::format(&self.value))
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = if self.lower.closed { '[' } else { '(' };
        let close = if self.upper.closed { ']' } else { ')' };
        write!(f, "{open}{}, {}{close}", self.lower, self.upper)?;
        if self.minus_k {
            f.write_str(" \\ K")?;
        }
        Ok(())
    }
}

impl fmt::Display for KRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.last {
            None => write!(f, "{{1/n : n ≥ {}}}", self.first),
            Some(l) if *l == self.first => write!(f, "{{1/{}}}", self.first),
            Some(l) => write!(f, "{{1/n : {} ≤ n ≤ {}}}", self.first, l),
        }
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.pieces.iter().map(|p| p.to_string()).collect();
        parts.extend(self.k_ranges.iter().map(|k| k.to_string()));
        if !self.includes.is_empty() {
            let pts: Vec<String> = self.includes.iter().map(rational::format).collect();
            parts.push(format!("{{{}}}", pts.join(", ")));
        }
        if parts.is_empty() {
            f.write_str("∅")?;
        } else {
            f.write_str(&parts.join(" ∪ "))?;
        }
        if !self.excludes.is_empty() {
            let pts: Vec<String> = self.excludes.iter().map(rational::format).collect();
            write!(f, " \\ {{{}}}", pts.join(", "))?;
        }
        Ok(())
    }
}
