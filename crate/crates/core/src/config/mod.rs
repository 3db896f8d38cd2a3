//! Configurations of infinitely near points.
//!
//! A configuration is stored as a flat list of points in blowup order. Each
//! point records the ids of the points it is proximate to: nothing for an
//! origin, the parent for a free point, and the parent followed by one more
//! earlier point for a satellite. The parent is always the proximate point of
//! largest id, which is why the proximity matrix is unit lower triangular.

mod dot;
mod file;
mod matrix;

use std::fmt;

use thiserror::Error;

use crate::lattice::SurfaceModel;

pub use file::{parse_configuration, ConfigFileError};
pub use matrix::{IntMatrix, MultiplicityVector, ProximityMatrix};

/// 1-based index of a point in blowup order.
pub type PointId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("a configuration must contain at least one point")]
    Empty,
    #[error("point id 0 is not allowed (ids start at 1)")]
    InvalidId,
    #[error("point {id} is defined more than once")]
    DuplicateId { id: PointId },
    #[error("point ids must be 1..n; point {id} is missing")]
    MissingId { id: PointId },
    #[error("point {id} is proximate to {target}, which is not blown up before it")]
    ForwardReference { id: PointId, target: PointId },
    #[error("point {id} lists {count} proximities; at most two are possible")]
    TooManyProximities { id: PointId, count: usize },
    #[error("point {id} cannot be a satellite of {parent} and {target}: {parent} is not proximate to {target}")]
    InvalidSatellite {
        id: PointId,
        parent: PointId,
        target: PointId,
    },
    #[error("point {id}: the parent (largest proximate id) must be listed first")]
    Normalization { id: PointId },
    #[error("points {other} and {id} are the same satellite point (same parent and second proximity)")]
    DuplicateSatellite { id: PointId, other: PointId },
    #[error("point {id} is not in the configuration")]
    UnknownPoint { id: PointId },
    #[error("point {id} is proximate to {target}, which lies outside the sub-configuration")]
    DanglingProximity { id: PointId, target: PointId },
}

impl ConfigError {
    /// The point the error is about, when there is one.
    pub fn point_id(&self) -> Option<PointId> {
        match *self {
            ConfigError::Empty | ConfigError::InvalidId => None,
            ConfigError::DuplicateId { id }
            | ConfigError::MissingId { id }
            | ConfigError::ForwardReference { id, .. }
            | ConfigError::TooManyProximities { id, .. }
            | ConfigError::InvalidSatellite { id, .. }
            | ConfigError::Normalization { id }
            | ConfigError::DuplicateSatellite { id, .. }
            | ConfigError::UnknownPoint { id }
            | ConfigError::DanglingProximity { id, .. } => Some(id),
        }
    }
}

/// Free or satellite. Origins are reported as free.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointKind {
    Free,
    Satellite,
}

impl fmt::Display for PointKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PointKind::Free => "free",
            PointKind::Satellite => "satellite",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point {
    id: PointId,
    proximities: Vec<PointId>,
    level: usize,
}

impl Point {
    pub fn id(&self) -> PointId {
        self.id
    }

    /// Ids this point is proximate to, parent first.
    pub fn proximities(&self) -> &[PointId] {
        &self.proximities
    }

    pub fn parent(&self) -> Option<PointId> {
        self.proximities.first().copied()
    }

    /// The second point a satellite is proximate to.
    pub fn satellite_target(&self) -> Option<PointId> {
        self.proximities.get(1).copied()
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn is_origin(&self) -> bool {
        self.proximities.is_empty()
    }

    pub fn kind(&self) -> PointKind {
        if self.proximities.len() == 2 {
            PointKind::Satellite
        } else {
            PointKind::Free
        }
    }
}

/// Which half of the infinitely-near order a sub-configuration keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `(C)_q`: `q` and every point infinitely near it.
    Below,
    /// `(C)^q`: `q` and every point it is infinitely near to.
    Above,
}

/// Per-point classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointClass {
    pub id: PointId,
    pub origin: bool,
    pub end: bool,
    pub kind: PointKind,
    pub level: usize,
}

/// A sub-configuration together with the ids its points had in the parent
/// configuration (`original_ids[k - 1]` is the old id of new point `k`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subconfiguration {
    pub configuration: Configuration,
    pub original_ids: Vec<PointId>,
}

/// Self-intersections `E_q²` of the strict transforms of the exceptional
/// divisors on the sky, and `γ = max(-E_q²)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfIntersections {
    values: Vec<i64>,
    gamma: u64,
}

impl SelfIntersections {
    /// `E_q²` for point `q`.
    pub fn get(&self, q: PointId) -> Option<i64> {
        q.checked_sub(1).and_then(|i| self.values.get(i)).copied()
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn gamma(&self) -> u64 {
        self.gamma
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    points: Vec<Point>,
    surface: SurfaceModel,
    // proximate_from[i] lists the ids of points proximate to point i + 1
    proximate_from: Vec<Vec<PointId>>,
}

impl Configuration {
    /// Builds and validates a configuration from `(id, proximities)` pairs.
    ///
    /// Ids must be exactly `1..=n` (in any order). Each proximity list is
    /// empty (origin), `[parent]` (free point) or `[parent, r]` (satellite),
    /// where `parent > r` and the parent is itself proximate to `r`.
    pub fn build<I>(specs: I, surface: SurfaceModel) -> Result<Self, ConfigError>
    where
        I: IntoIterator<Item = (PointId, Vec<PointId>)>,
    {
        let mut specs: Vec<(PointId, Vec<PointId>)> = specs.into_iter().collect();
        if specs.is_empty() {
            return Err(ConfigError::Empty);
        }
        specs.sort_by_key(|(id, _)| *id);
        for (k, (id, _)) in specs.iter().enumerate() {
            if *id == 0 {
                return Err(ConfigError::InvalidId);
            }
            if k > 0 && specs[k - 1].0 == *id {
                return Err(ConfigError::DuplicateId { id: *id });
            }
            if *id != k + 1 {
                return Err(ConfigError::MissingId { id: k + 1 });
            }
        }

        let mut points: Vec<Point> = Vec::with_capacity(specs.len());
        let mut satellites: Vec<(PointId, PointId, PointId)> = Vec::new();
        for (id, proximities) in specs {
            if proximities.len() > 2 {
                return Err(ConfigError::TooManyProximities {
                    id,
                    count: proximities.len(),
                });
            }
            for &target in &proximities {
                if target == 0 {
                    return Err(ConfigError::InvalidId);
                }
                if target >= id {
                    return Err(ConfigError::ForwardReference { id, target });
                }
            }
            if let [parent, target] = proximities[..] {
                if parent < target {
                    return Err(ConfigError::Normalization { id });
                }
                if parent == target || !points[parent - 1].proximities.contains(&target) {
                    return Err(ConfigError::InvalidSatellite { id, parent, target });
                }
                if let Some(&(other, _, _)) = satellites
                    .iter()
                    .find(|&&(_, p, t)| p == parent && t == target)
                {
                    return Err(ConfigError::DuplicateSatellite { id, other });
                }
                satellites.push((id, parent, target));
            }
            let level = match proximities.first() {
                None => 0,
                Some(&parent) => points[parent - 1].level + 1,
            };
            points.push(Point {
                id,
                proximities,
                level,
            });
        }

        let mut proximate_from = vec![Vec::new(); points.len()];
        for p in &points {
            for &t in &p.proximities {
                proximate_from[t - 1].push(p.id);
            }
        }
        Ok(Configuration {
            points,
            surface,
            proximate_from,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// Always false: empty configurations are rejected by [`Configuration::build`].
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn surface(&self) -> SurfaceModel {
        self.surface
    }

    /// The same points over a different base surface.
    pub fn with_surface(&self, surface: SurfaceModel) -> Self {
        Configuration {
            surface,
            ..self.clone()
        }
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, id: PointId) -> Option<&Point> {
        id.checked_sub(1).and_then(|i| self.points.get(i))
    }

    fn require(&self, id: PointId) -> Result<&Point, ConfigError> {
        self.point(id).ok_or(ConfigError::UnknownPoint { id })
    }

    /// Ids of the points proximate to `id`.
    pub fn proximate_to(&self, id: PointId) -> &[PointId] {
        id.checked_sub(1)
            .and_then(|i| self.proximate_from.get(i))
            .map_or(&[], Vec::as_slice)
    }

    /// True when `a` is proximate to `b`.
    pub fn is_proximate(&self, a: PointId, b: PointId) -> bool {
        self.point(a)
            .is_some_and(|p| p.proximities.contains(&b))
    }

    pub fn origins(&self) -> Vec<PointId> {
        self.points
            .iter()
            .filter(|p| p.is_origin())
            .map(Point::id)
            .collect()
    }

    pub fn is_end(&self, id: PointId) -> bool {
        self.point(id).is_some() && self.proximate_to(id).is_empty()
    }

    pub fn ends(&self) -> Vec<PointId> {
        self.points
            .iter()
            .map(Point::id)
            .filter(|&id| self.is_end(id))
            .collect()
    }

    /// True when `later` is infinitely near `earlier` (`earlier ≤ later`).
    pub fn is_infinitely_near(&self, later: PointId, earlier: PointId) -> bool {
        let mut cur = self.point(later);
        while let Some(p) = cur {
            if p.id == earlier {
                return true;
            }
            cur = p.parent().and_then(|q| self.point(q));
        }
        false
    }

    /// The origin below `id`.
    pub fn origin_of(&self, id: PointId) -> Option<PointId> {
        let mut p = self.point(id)?;
        while let Some(parent) = p.parent() {
            p = &self.points[parent - 1];
        }
        Some(p.id)
    }

    /// Origin, end, free/satellite and level of every point.
    pub fn classify(&self) -> Vec<PointClass> {
        self.points
            .iter()
            .map(|p| PointClass {
                id: p.id,
                origin: p.is_origin(),
                end: self.is_end(p.id),
                kind: p.kind(),
                level: p.level,
            })
            .collect()
    }

    /// `(id, proximities)` pairs that rebuild this configuration.
    pub fn point_specs(&self) -> Vec<(PointId, Vec<PointId>)> {
        self.points
            .iter()
            .map(|p| (p.id, p.proximities.clone()))
            .collect()
    }

    pub fn proximity_matrix(&self) -> ProximityMatrix {
        ProximityMatrix::new(self)
    }

    pub fn multiplicity_vector(&self) -> MultiplicityVector {
        MultiplicityVector::new(self)
    }

    /// `(C)_q` or `(C)^q`, renumbered `1..k` in blowup order.
    ///
    /// Going below, `q` becomes an origin and loses its own proximities; any
    /// other retained point proximate to a removed point is an error.
    pub fn subconfiguration(
        &self,
        q: PointId,
        direction: Direction,
    ) -> Result<Subconfiguration, ConfigError> {
        self.require(q)?;
        let keep: Vec<PointId> = match direction {
            Direction::Below => self
                .points
                .iter()
                .map(Point::id)
                .filter(|&id| self.is_infinitely_near(id, q))
                .collect(),
            Direction::Above => self
                .points
                .iter()
                .map(Point::id)
                .filter(|&id| self.is_infinitely_near(q, id))
                .collect(),
        };
        let mut new_id = vec![0usize; self.len() + 1];
        for (k, &old) in keep.iter().enumerate() {
            new_id[old] = k + 1;
        }
        let mut specs = Vec::with_capacity(keep.len());
        for &old in &keep {
            let p = &self.points[old - 1];
            let proximities = if direction == Direction::Below && old == q {
                Vec::new()
            } else {
                let mut mapped = Vec::with_capacity(p.proximities.len());
                for &t in &p.proximities {
                    if new_id[t] == 0 {
                        return Err(ConfigError::DanglingProximity { id: old, target: t });
                    }
                    mapped.push(new_id[t]);
                }
                mapped
            };
            specs.push((new_id[old], proximities));
        }
        let configuration = Configuration::build(specs, self.surface)?;
        Ok(Subconfiguration {
            configuration,
            original_ids: keep,
        })
    }

    /// `E_q² = -1 - #{p : p → q}` for every point, and `γ`.
    pub fn exceptional_self_intersections(&self) -> SelfIntersections {
        let values: Vec<i64> = self
            .proximate_from
            .iter()
            .map(|from| -1 - from.len() as i64)
            .collect();
        let gamma = values.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0);
        SelfIntersections { values, gamma }
    }

    /// DOT rendering of the proximity graph.
    pub fn to_dot(&self) -> String {
        dot::render(self)
    }

    /// Text in the configuration file format.
    pub fn to_config_text(&self) -> String {
        file::render(self)
    }
}

#[cfg(test)]
pub(crate) mod tests;
