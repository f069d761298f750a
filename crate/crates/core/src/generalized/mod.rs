//! Generalized R.O-metric spaces: an R.O-metric together with a family of
//! self-maps containing the identity.
//!
//! A generalized ball `V_{r,α}(x)` only looks at points in the image of
//! `f_α` and requires the center to lie in that image. The generalized
//! axiom asks that every member of a generalized ball has some generalized
//! ball of its own inside it, which makes the balls a basis rather than
//! just a subbasis.
//!
//! Balls depend on a map only through its image, so checks and topology
//! generation visit each distinct image once; the first map with a given
//! image stands in for the rest.

mod sierpinski;
mod universal;

use std::collections::HashSet;
use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::ground::{GroundSet, PointSet};
use crate::metric::{value_classes, ROMetric, Radius};
use crate::rational::{self, Rational};
use crate::topology::FiniteTopology;

pub use sierpinski::{
    sierpinski_embed, sierpinski_embed_ordered, CoordinateOrder, EmbeddingCheck, SierpinskiEmbedding,
};
pub use universal::universal_generalized_metrization;

/// A named total self-map; `targets[i]` is the image of point `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NamedMap {
    pub name: String,
    pub targets: Vec<usize>,
}

impl NamedMap {
    pub fn identity(n: usize) -> Self {
        NamedMap {
            name: "id".to_string(),
            targets: (0..n).collect(),
        }
    }

    pub fn image(&self) -> PointSet {
        self.targets.iter().copied().collect()
    }

    pub fn is_identity(&self) -> bool {
        self.targets.iter().enumerate().all(|(i, &t)| i == t)
    }

    /// A map of `n` points onto `image`, cycling through its members in
    /// index order.
    pub fn onto(name: impl Into<String>, n: usize, image: PointSet) -> Self {
        let members: Vec<usize> = image.iter().collect();
        assert!(!members.is_empty() && members.len() <= n);
        NamedMap {
            name: name.into(),
            targets: (0..n).map(|i| members[i % members.len()]).collect(),
        }
    }
}

/// A family of self-maps on a ground set that contains the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapFamily {
    ground: GroundSet,
    maps: Vec<NamedMap>,
    identity_index: usize,
}

impl MapFamily {
    pub fn new(ground: GroundSet, maps: Vec<NamedMap>) -> Result<Self> {
        let n = ground.len();
        for map in &maps {
            if map.targets.len() != n {
                return Err(Error::InvalidFamily(format!(
                    "map `{}` has {} targets for {} points",
                    map.name,
                    map.targets.len(),
                    n
                )));
            }
            if let Some(&t) = map.targets.iter().find(|&&t| t >= n) {
                return Err(Error::InvalidFamily(format!(
                    "map `{}` targets unknown point #{t}",
                    map.name
                )));
            }
        }
        let identity_index = maps
            .iter()
            .position(NamedMap::is_identity)
            .ok_or_else(|| Error::InvalidFamily("the identity map is missing".to_string()))?;
        Ok(MapFamily {
            ground,
            maps,
            identity_index,
        })
    }

    pub fn identity_only(ground: GroundSet) -> Self {
        let maps = vec![NamedMap::identity(ground.len())];
        MapFamily {
            ground,
            maps,
            identity_index: 0,
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn maps(&self) -> &[NamedMap] {
        &self.maps
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn identity_index(&self) -> usize {
        self.identity_index
    }

    pub fn image(&self, alpha: usize) -> PointSet {
        self.maps[alpha].image()
    }

    /// Indices of the first map with each distinct image, in order.
    pub fn distinct_images(&self) -> Vec<(usize, PointSet)> {
        let mut seen = HashSet::new();
        self.maps
            .iter()
            .enumerate()
            .map(|(alpha, m)| (alpha, m.image()))
            .filter(|(_, image)| seen.insert(*image))
            .collect()
    }

    pub fn relabel(self, ground: GroundSet) -> Result<Self> {
        if ground.len() != self.ground.len() {
            return Err(Error::GroundMismatch);
        }
        Ok(MapFamily { ground, ..self })
    }

    /// Keeps the first map for each distinct image (the identity is always kept).
    pub fn dedup_by_image(self) -> Self {
        let keep: HashSet<usize> = self
            .distinct_images()
            .into_iter()
            .map(|(alpha, _)| alpha)
            .chain([self.identity_index])
            .collect();
        let mut identity_index = 0;
        let mut maps = Vec::new();
        for (alpha, map) in self.maps.into_iter().enumerate() {
            if keep.contains(&alpha) {
                if alpha == self.identity_index {
                    identity_index = maps.len();
                }
                maps.push(map);
            }
        }
        MapFamily {
            ground: self.ground,
            maps,
            identity_index,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneralizedBall {
    pub center: usize,
    pub map: usize,
    pub radius: Radius,
    pub members: PointSet,
}

/// `V_{r,α}(x) = {f_α(y) : d(x, f_α(y)) < r}`, defined for `x` in the image of `f_α`.
pub fn generalized_ball(
    metric: &ROMetric,
    family: &MapFamily,
    alpha: usize,
    center: usize,
    radius: &Radius,
) -> Result<GeneralizedBall> {
    if metric.ground() != family.ground() {
        return Err(Error::GroundMismatch);
    }
    metric.ground().check_point(center)?;
    if alpha >= family.len() {
        return Err(Error::InvalidFamily(format!("no map #{alpha}")));
    }
    if !radius.inclusive && !rational::is_positive(&radius.value) {
        return Err(Error::NonPositiveRadius(rational::format(&radius.value)));
    }
    let image = family.image(alpha);
    if !image.contains(center) {
        return Err(Error::CenterNotInImage {
            center: metric.ground().label(center).to_string(),
            map: family.maps[alpha].name.clone(),
        });
    }
    Ok(GeneralizedBall {
        center,
        map: alpha,
        radius: radius.clone(),
        members: ball_within(metric, image, center, radius),
    })
}

fn ball_within(metric: &ROMetric, image: PointSet, center: usize, radius: &Radius) -> PointSet {
    image.iter().filter(|&z| radius.admits(metric.get(center, z))).collect()
}

/// Distinct distances from `center` to the image, ascending.
fn image_values(metric: &ROMetric, image: PointSet, center: usize) -> Vec<Rational> {
    let row: Vec<Rational> = image.iter().map(|z| metric.get(center, z).clone()).collect();
    value_classes(&row)
}

/// A validated generalized R.O-metric space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedSpace {
    metric: ROMetric,
    family: MapFamily,
}

impl GeneralizedSpace {
    pub fn metric(&self) -> &ROMetric {
        &self.metric
    }

    pub fn family(&self) -> &MapFamily {
        &self.family
    }

    pub fn into_parts(self) -> (ROMetric, MapFamily) {
        (self.metric, self.family)
    }

    pub fn ball(&self, alpha: usize, center: usize, radius: &Rational) -> Result<GeneralizedBall> {
        generalized_ball(&self.metric, &self.family, alpha, center, &Radius::open(radius.clone()))
    }
}

/// A ball member with no generalized ball of its own inside the ball.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedWitness {
    pub map: usize,
    pub map_name: String,
    pub center: usize,
    pub center_label: String,
    /// A radius realizing the ball: the next distance class above it, or
    /// one more than the largest distance.
    pub radius: Rational,
    pub members: PointSet,
    pub member: usize,
    pub member_label: String,
}

impl fmt::Display for GeneralizedWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "`{}` lies in V_{{{}, {}}}({}) but no generalized ball around it fits inside",
            self.member_label,
            rational::format(&self.radius),
            self.map_name,
            self.center_label
        )
    }
}

/// Checks the generalized axiom exhaustively over every distinct ball.
///
/// For a member `y`, the smallest generalized ball at `y` for a map `η`
/// is the set of image points at distance 0, so only that ball needs to be
/// tested against the containing ball.
pub fn check_generalized_axioms(metric: &ROMetric, family: &MapFamily) -> Result<GeneralizedSpace> {
    if metric.ground() != family.ground() {
        return Err(Error::GroundMismatch);
    }
    let images = family.distinct_images();
    let n = metric.len();
    // smallest[y] lists, for each image containing y, the zero-distance ball at y.
    let mut smallest: Vec<Vec<PointSet>> = vec![Vec::new(); n];
    for (_, image) in &images {
        for y in image.iter() {
            smallest[y].push(ball_within(
                metric,
                *image,
                y,
                &Radius::just_above(Rational::from_integer(0.into())),
            ));
        }
    }
    for (alpha, image) in &images {
        for center in image.iter() {
            let values = image_values(metric, *image, center);
            for (k, v) in values.iter().enumerate() {
                let members = ball_within(metric, *image, center, &Radius::just_above(v.clone()));
                let fits = |y: usize| smallest[y].iter().any(|b| b.is_subset(members));
                if let Some(member) = members.iter().find(|&y| !fits(y)) {
                    let radius = values.get(k + 1).cloned().unwrap_or_else(|| v + Rational::one());
                    return Err(Error::GeneralizedAxiom(Box::new(GeneralizedWitness {
                        map: *alpha,
                        map_name: family.maps[*alpha].name.clone(),
                        center,
                        center_label: metric.ground().label(center).to_string(),
                        radius,
                        members,
                        member,
                        member_label: metric.ground().label(member).to_string(),
                    })));
                }
            }
        }
    }
    Ok(GeneralizedSpace {
        metric: metric.clone(),
        family: family.clone(),
    })
}

/// Every distinct generalized ball, one per (image, center, distance class).
pub fn generalized_balls(space: &GeneralizedSpace) -> Vec<GeneralizedBall> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (alpha, image) in space.family.distinct_images() {
        for center in image.iter() {
            for v in image_values(&space.metric, image, center) {
                let radius = Radius::just_above(v);
                let members = ball_within(&space.metric, image, center, &radius);
                if seen.insert(members) {
                    out.push(GeneralizedBall {
                        center,
                        map: alpha,
                        radius,
                        members,
                    });
                }
            }
        }
    }
    out
}

/// The topology whose basis is the set of generalized balls.
pub fn generalized_topology(space: &GeneralizedSpace) -> Result<FiniteTopology> {
    let n = space.metric.len();
    let basis: Vec<PointSet> = generalized_balls(space).into_iter().map(|b| b.members).collect();
    let full = PointSet::full(n);
    let mut minimal = Vec::with_capacity(n);
    for p in 0..n {
        let containing: Vec<PointSet> = basis.iter().copied().filter(|b| b.contains(p)).collect();
        let smallest = containing.iter().fold(full, |acc, b| acc.intersection(*b));
        if containing.is_empty() || !containing.contains(&smallest) {
            return Err(Error::Internal(format!(
                "generalized balls are not a basis at `{}`",
                space.metric.ground().label(p)
            )));
        }
        minimal.push(smallest);
    }
    Ok(FiniteTopology::from_minimal_opens(
        space.metric.ground().clone(),
        &minimal,
    ))
}
