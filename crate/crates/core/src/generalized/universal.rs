//! Every finite topology as a generalized R.O-metric space.
//!
//! Pipeline: Kolmogorov quotient, Sierpinski embedding of the quotient,
//! then lift back to the original points. Inside a class the lifted
//! distance is 0 and across classes it is the quotient distance. A
//! quotient map with image `I` lifts to a map onto the union of the
//! classes in `I`; the identity lifts to the identity.

use crate::error::{Error, Result};
use crate::generalized::{check_generalized_axioms, generalized_topology, sierpinski_embed, MapFamily, NamedMap};
use crate::metric::{check_rometric_axioms, ROMetric, RawDistanceMatrix};
use crate::rational::int;
use crate::topology::FiniteTopology;

/// A metric and map family on `t`'s ground whose generalized topology is `t`.
pub fn universal_generalized_metrization(t: &FiniteTopology) -> Result<(ROMetric, MapFamily)> {
    if t.is_empty() {
        return Err(Error::EmptyGround);
    }
    let q = t.kolmogorov_quotient();
    let embedding = sierpinski_embed(&q.quotient)?;

    let quotient_ground = q.quotient.ground().clone();
    let dq = embedding.induced_metric().clone().relabel(quotient_ground.clone())?;
    let beta_q = embedding.beta().clone().relabel(quotient_ground)?.dedup_by_image();

    let n = t.len();
    let raw = RawDistanceMatrix::from_fn(t.ground().clone(), |x, y| {
        let (cx, cy) = (q.class_of[x], q.class_of[y]);
        if cx == cy {
            int(0)
        } else {
            dq.get(cx, cy).clone()
        }
    });
    let metric = check_rometric_axioms(raw)?;

    let maps = beta_q
        .maps()
        .iter()
        .enumerate()
        .map(|(alpha, map)| {
            if alpha == beta_q.identity_index() {
                NamedMap::identity(n)
            } else {
                NamedMap::onto(map.name.clone(), n, q.saturate(map.image()))
            }
        })
        .collect();
    let family = MapFamily::new(t.ground().clone(), maps)?;

    let space = check_generalized_axioms(&metric, &family)?;
    if &generalized_topology(&space)? != t {
        return Err(Error::Internal(
            "lifted generalized space does not regenerate the topology".to_string(),
        ));
    }
    Ok((metric, family))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::{GroundSet, PointSet};

    #[test]
    fn indiscrete_gives_zero_metric_and_identity() {
        let t = FiniteTopology::indiscrete(GroundSet::alphabetic(2));
        let (m, fam) = universal_generalized_metrization(&t).unwrap();
        assert!(m.raw().rows().flatten().all(|v| *v == int(0)));
        // Every lifted map is onto the single class, i.e. onto X.
        assert!(fam.distinct_images().iter().all(|(_, img)| *img == PointSet::full(2)));
    }

    #[test]
    fn non_t0_space_round_trips() {
        let g = GroundSet::alphabetic(3);
        let fam = vec![PointSet::EMPTY, g.subset(["a", "b"]).unwrap(), g.full()];
        let t = FiniteTopology::validate(g, &fam).unwrap();
        let (m, family) = universal_generalized_metrization(&t).unwrap();
        assert_eq!(m.get(0, 1), &int(0));
        assert_eq!(m.get(1, 0), &int(0));
        assert_eq!(m.get(0, 2), m.get(1, 2));
        assert_eq!(m.get(2, 0), m.get(2, 1));
        let space = check_generalized_axioms(&m, &family).unwrap();
        assert_eq!(generalized_topology(&space).unwrap(), t);
    }

    #[test]
    fn empty_ground_is_rejected() {
        let t = FiniteTopology::indiscrete(GroundSet::alphabetic(0));
        assert!(matches!(universal_generalized_metrization(&t), Err(Error::EmptyGround)));
    }
}
