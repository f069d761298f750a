//! Embedding a finite T0 space into a product of Sierpinski spaces.
//!
//! Coordinates are indexed by the proper closed sets `C`; point `x` maps to
//! the tuple with coordinate `C` equal to 0 when `x ∈ C` and 1 otherwise.
//! Tuples are bitmasks with bit `j` holding coordinate `j`.
//!
//! On the product, `D(x̄, ȳ) = d(1, y_β)` where `β` is the first coordinate
//! at which `x̄` is 1 and `d` is the Sierpinski metric (`d(1, 0) = 1`, all
//! else 0). When `x̄` has no 1 coordinate, `D(x̄, ·) = 0`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::generalized::{check_generalized_axioms, generalized_topology, MapFamily, NamedMap};
use crate::ground::{canonicalize, GroundSet, PointSet, MAX_POINTS};
use crate::metric::{check_rometric_axioms, generated_minimal_opens, ROMetric, RawDistanceMatrix};
use crate::rational::int;
use crate::topology::FiniteTopology;

/// Largest number of coordinates the embedding will handle.
pub const MAX_DIMENSION: usize = 24;

/// Order of the coordinate index set.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CoordinateOrder {
    /// Closed sets by `(size, mask)`.
    #[default]
    Canonical,
    Reversed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SierpinskiEmbedding {
    source: FiniteTopology,
    closed_index: Vec<PointSet>,
    images: Vec<u64>,
    beta: MapFamily,
    induced_metric: ROMetric,
}

/// Which construction postconditions were checked and whether they hold.
/// `None` means the product was too large to materialize.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EmbeddingCheck {
    pub injective: bool,
    pub metric_valid: Option<bool>,
    pub product_topology: Option<bool>,
    pub subspace_topology: bool,
}

impl EmbeddingCheck {
    pub fn holds(&self) -> bool {
        self.injective
            && self.metric_valid != Some(false)
            && self.product_topology != Some(false)
            && self.subspace_topology
    }

    pub fn complete(&self) -> bool {
        self.metric_valid.is_some() && self.product_topology.is_some()
    }
}

/// Embeds with canonically ordered coordinates and verifies the result.
pub fn sierpinski_embed(t: &FiniteTopology) -> Result<SierpinskiEmbedding> {
    sierpinski_embed_ordered(t, CoordinateOrder::Canonical)
}

pub fn sierpinski_embed_ordered(t: &FiniteTopology, order: CoordinateOrder) -> Result<SierpinskiEmbedding> {
    let embedding = SierpinskiEmbedding::build(t, order)?;
    let check = embedding.verify()?;
    if !check.holds() {
        return Err(Error::Internal(format!(
            "Sierpinski embedding postconditions fail: {check:?}"
        )));
    }
    Ok(embedding)
}

impl SierpinskiEmbedding {
    /// Builds the embedding without verifying it.
    pub fn build(t: &FiniteTopology, order: CoordinateOrder) -> Result<Self> {
        if t.is_empty() {
            return Err(Error::EmptyGround);
        }
        if let Some((a, b)) = t.t0_witness() {
            return Err(t.not_t0(a, b));
        }
        let n = t.len();
        let mut closed_index: Vec<PointSet> = t
            .opens()
            .iter()
            .filter(|u| !u.is_empty())
            .map(|u| u.complement(n))
            .collect();
        canonicalize(&mut closed_index);
        if order == CoordinateOrder::Reversed {
            closed_index.reverse();
        }
        if closed_index.len() > MAX_DIMENSION {
            return Err(Error::Budget(format!(
                "{} coordinates exceed the limit of {MAX_DIMENSION}",
                closed_index.len()
            )));
        }
        let images: Vec<u64> = (0..n)
            .map(|x| {
                closed_index
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.contains(x))
                    .fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        let dimension = closed_index.len();
        let image_ground = GroundSet::new(images.iter().map(|&x| tuple_label(x, dimension)))?;
        let induced =
            RawDistanceMatrix::from_fn(image_ground.clone(), |i, j| int(product_distance(images[i], images[j])));
        let induced_metric = check_rometric_axioms(induced)?;
        let beta = build_beta(&image_ground, &images, dimension)?;
        Ok(SierpinskiEmbedding {
            source: t.clone(),
            closed_index,
            images,
            beta,
            induced_metric,
        })
    }

    pub fn source(&self) -> &FiniteTopology {
        &self.source
    }

    /// The proper closed sets indexing the coordinates, in order.
    pub fn closed_index(&self) -> &[PointSet] {
        &self.closed_index
    }

    pub fn dimension(&self) -> usize {
        self.closed_index.len()
    }

    pub fn product_size(&self) -> usize {
        1 << self.dimension()
    }

    /// `F(x)` for each source point.
    pub fn images(&self) -> &[u64] {
        &self.images
    }

    pub fn label(&self, tuple: u64) -> String {
        tuple_label(tuple, self.dimension())
    }

    /// `D(x̄, ȳ)` on the full product.
    pub fn product_distance(&self, from: u64, to: u64) -> i64 {
        product_distance(from, to)
    }

    pub fn beta(&self) -> &MapFamily {
        &self.beta
    }

    /// `D` restricted to the image, over the image ground.
    pub fn induced_metric(&self) -> &ROMetric {
        &self.induced_metric
    }

    pub fn image_ground(&self) -> &GroundSet {
        self.induced_metric.ground()
    }

    /// `D` as a matrix on the whole product `Y^J`.
    pub fn product_metric(&self) -> Result<ROMetric> {
        let size = self.product_size();
        if size > MAX_POINTS {
            return Err(Error::Budget(format!(
                "product of {} coordinates has {size} points",
                self.dimension()
            )));
        }
        let ground = GroundSet::new((0..size as u64).map(|t| self.label(t)))?;
        let raw = RawDistanceMatrix::from_fn(ground, |i, j| int(product_distance(i as u64, j as u64)));
        check_rometric_axioms(raw)
    }

    /// Minimal open sets of the product topology, computed coordinatewise:
    /// the smallest neighbourhood of `ȳ` is every tuple that is 1 wherever `ȳ` is.
    pub fn product_minimal_opens(&self) -> Vec<PointSet> {
        let size = self.product_size() as u64;
        (0..size)
            .map(|y| (0..size).filter(|z| z & y == y).map(|z| z as usize).collect())
            .collect()
    }

    /// The topology `F(X)` inherits from the product, on the image ground.
    pub fn subspace_topology(&self) -> FiniteTopology {
        let minimal: Vec<PointSet> = self
            .images
            .iter()
            .map(|&fx| {
                self.images
                    .iter()
                    .enumerate()
                    .filter(|(_, &fz)| fz & fx == fx)
                    .map(|(z, _)| z)
                    .collect()
            })
            .collect();
        FiniteTopology::from_minimal_opens(self.image_ground().clone(), &minimal)
    }

    pub fn verify(&self) -> Result<EmbeddingCheck> {
        let injective = self.images.iter().collect::<HashSet<_>>().len() == self.images.len();
        let (metric_valid, product_topology) = match self.product_metric() {
            Ok(d) => (
                Some(true),
                Some(generated_minimal_opens(&d) == self.product_minimal_opens()),
            ),
            Err(Error::RoAxioms(_)) => (Some(false), None),
            Err(Error::Budget(_)) => (None, None),
            Err(e) => return Err(e),
        };
        let space = check_generalized_axioms(&self.induced_metric, &self.beta)?;
        let generated = generalized_topology(&space)?;
        let subspace = self.subspace_topology();
        // F is index-preserving, so the subspace is homeomorphic to the
        // source via F exactly when the families agree.
        let subspace_topology = generated == subspace && subspace.opens() == self.source.opens();
        Ok(EmbeddingCheck {
            injective,
            metric_valid,
            product_topology,
            subspace_topology,
        })
    }
}

fn product_distance(from: u64, to: u64) -> i64 {
    if from == 0 {
        return 0;
    }
    let first_one = from.trailing_zeros();
    if to >> first_one & 1 == 1 {
        0
    } else {
        1
    }
}

fn tuple_label(tuple: u64, dimension: usize) -> String {
    (0..dimension)
        .map(|j| if tuple >> j & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// The identity plus, for each tuple outside the image and each distinct
/// radius class of its `D` row, a map onto `V_r(ȳ) ∩ F(X)`. Empty
/// intersections are skipped.
fn build_beta(image_ground: &GroundSet, images: &[u64], dimension: usize) -> Result<MapFamily> {
    let n = images.len();
    let in_image: HashSet<u64> = images.iter().copied().collect();
    let everything = PointSet::full(n);
    let mut maps = vec![NamedMap::identity(n)];
    for y in 0..(1u64 << dimension) {
        if in_image.contains(&y) {
            continue;
        }
        let label = tuple_label(y, dimension);
        if y == 0 {
            maps.push(NamedMap::onto(format!("r>0@{label}"), n, everything));
            continue;
        }
        let first_one = y.trailing_zeros();
        let small: PointSet = images
            .iter()
            .enumerate()
            .filter(|(_, &fx)| fx >> first_one & 1 == 1)
            .map(|(x, _)| x)
            .collect();
        if !small.is_empty() {
            maps.push(NamedMap::onto(format!("r<=1@{label}"), n, small));
        }
        maps.push(NamedMap::onto(format!("r>1@{label}"), n, everything));
    }
    MapFamily::new(image_ground.clone(), maps)
}
