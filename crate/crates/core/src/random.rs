//! Random valid configurations, for tests and experiments.
//!
//! Points are added one at a time. A new point is either a new origin or is
//! attached to a uniformly chosen existing point; when attached it becomes
//! a satellite with probability one half, provided its parent still has a
//! proximity target whose satellite point is not yet taken.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::config::{Configuration, PointId};
use crate::lattice::SurfaceModel;

/// Shape parameters for [`random_configuration`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomShape {
    pub points: usize,
    /// Probability that a point after the first is a new origin.
    pub origin_probability: f64,
    /// Probability that an attached point is made satellite when possible.
    pub satellite_probability: f64,
}

impl RandomShape {
    pub fn single_origin(points: usize) -> Self {
        RandomShape {
            points,
            origin_probability: 0.0,
            satellite_probability: 0.5,
        }
    }

    pub fn multi_origin(points: usize) -> Self {
        RandomShape {
            points,
            origin_probability: 0.1,
            satellite_probability: 0.5,
        }
    }
}

/// `(id, proximities)` specs of a random configuration.
pub fn random_specs<R: Rng + ?Sized>(rng: &mut R, shape: RandomShape) -> Vec<(PointId, Vec<PointId>)> {
    assert!(shape.points >= 1, "configurations are non-empty");
    let mut specs: Vec<(PointId, Vec<PointId>)> = vec![(1, Vec::new())];
    let mut taken: Vec<(PointId, PointId)> = Vec::new();
    for id in 2..=shape.points {
        if rng.gen_bool(shape.origin_probability) {
            specs.push((id, Vec::new()));
            continue;
        }
        let parent = rng.gen_range(1..id);
        let free_targets: Vec<PointId> = specs[parent - 1]
            .1
            .iter()
            .copied()
            .filter(|&t| !taken.contains(&(parent, t)))
            .collect();
        let proximities = match free_targets.choose(rng) {
            Some(&target) if rng.gen_bool(shape.satellite_probability) => {
                taken.push((parent, target));
                vec![parent, target]
            }
            _ => vec![parent],
        };
        specs.push((id, proximities));
    }
    specs
}

pub fn random_configuration<R: Rng + ?Sized>(
    rng: &mut R,
    shape: RandomShape,
    surface: SurfaceModel,
) -> Configuration {
    Configuration::build(random_specs(rng, shape), surface)
        .expect("the generator only produces valid proximity structures")
}
