//! The hat configuration and the integer `d` attached to a single-origin
//! configuration.
//!
//! For a configuration `C_p` with one origin `p` and at least two points,
//! `Ĉ_p` adds, above every free end `q`, the satellite point `q'` lying on
//! `E_q` and on the strict transform of the exceptional divisor of `q`'s
//! parent. Then `d_{C_p}` is the least positive `d` for which
//! `v_d = P⁻¹(d·1_p - m)` is componentwise positive, with `P` and `m` the
//! proximity matrix and multiplicity vector of `Ĉ_p`.
//!
//! Writing `a = P⁻¹·1_p` and `b = P⁻¹·m`, every `aᵢ` is positive (each point
//! of `Ĉ_p` is infinitely near `p`), so `v_d = d·a - b > 0` exactly when
//! `d > bᵢ/aᵢ` for all `i`, which gives `d = maxᵢ(⌊bᵢ/aᵢ⌋ + 1)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::config::{Configuration, Direction, PointId, PointKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SufficiencyError {
    #[error("expected a configuration with a single origin, found {count}")]
    MultipleOrigins { count: usize },
    #[error("coefficient {index} of P⁻¹·1_p is not positive")]
    NonPositiveCoefficient { index: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HatConfiguration {
    pub base: Configuration,
    pub extended: Configuration,
    /// `(new point id, free end it lies above)`.
    pub added: Vec<(PointId, PointId)>,
}

impl HatConfiguration {
    pub fn len(&self) -> usize {
        self.extended.len()
    }

    pub fn is_empty(&self) -> bool {
        self.extended.is_empty()
    }
}

fn require_single_origin(config: &Configuration) -> Result<(), SufficiencyError> {
    let count = config.origins().len();
    if count != 1 {
        return Err(SufficiencyError::MultipleOrigins { count });
    }
    Ok(())
}

/// Builds `Ĉ_p`. Added points get ids `n + 1, n + 2, …` in the order of
/// the free ends they lie above.
pub fn hat_configuration(config: &Configuration) -> Result<HatConfiguration, SufficiencyError> {
    require_single_origin(config)?;
    let n = config.len();
    if n == 1 {
        return Ok(HatConfiguration {
            base: config.clone(),
            extended: config.clone(),
            added: Vec::new(),
        });
    }
    let mut specs = config.point_specs();
    let mut added = Vec::new();
    for p in config.points() {
        if !config.is_end(p.id()) || p.kind() != PointKind::Free {
            continue;
        }
        let parent = p
            .parent()
            .expect("with two or more points the origin is not an end");
        let id = n + added.len() + 1;
        specs.push((id, vec![p.id(), parent]));
        added.push((id, p.id()));
    }
    let extended = Configuration::build(specs, config.surface())
        .expect("satellites above free ends are always valid");
    Ok(HatConfiguration {
        base: config.clone(),
        extended,
        added,
    })
}

/// `d_{C_p}` with its positivity certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DValue {
    /// Id of the origin in the configuration the value was computed from.
    pub origin: PointId,
    pub d: BigInt,
    pub hat: HatConfiguration,
    /// `v_d`, all entries positive, in the point order of `hat.extended`.
    pub certificate: Vec<BigInt>,
    /// `v_{d-1}`, with at least one entry `≤ 0`.
    pub previous: Vec<BigInt>,
}

fn affine_vector(d: &BigInt, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(ai, bi)| d * ai - bi).collect()
}

/// Computes `d_{C_p}` for a single-origin configuration.
pub fn d_value(config: &Configuration) -> Result<DValue, SufficiencyError> {
    let hat = hat_configuration(config)?;
    let pm = hat.extended.proximity_matrix();
    let m = hat.extended.multiplicity_vector();
    let a: Vec<BigInt> = (0..pm.dim()).map(|i| pm.inverse().get(i, 0).clone()).collect();
    let b = pm.solve(m.values());

    let mut d = BigInt::one();
    for (index, (ai, bi)) in a.iter().zip(&b).enumerate() {
        if !ai.is_positive() {
            return Err(SufficiencyError::NonPositiveCoefficient { index: index + 1 });
        }
        let candidate = bi.div_floor(ai) + 1;
        if candidate > d {
            d = candidate;
        }
    }
    let certificate = affine_vector(&d, &a, &b);
    let previous = affine_vector(&(&d - 1), &a, &b);
    debug_assert!(certificate.iter().all(Signed::is_positive));
    debug_assert!(previous.iter().any(|v| !v.is_positive()));
    assert!(d >= BigInt::from(2), "d is at least m_p + 1 ≥ 2");

    Ok(DValue {
        origin: config.origins()[0],
        d,
        hat,
        certificate,
        previous,
    })
}

/// `d_{(C)_p}` for every origin `p`, in origin order.
pub fn origin_d_values(config: &Configuration) -> Vec<DValue> {
    config
        .origins()
        .into_iter()
        .map(|origin| {
            let sub = config
                .subconfiguration(origin, Direction::Below)
                .expect("the part of a configuration over an origin is valid");
            let mut value = d_value(&sub.configuration).expect("(C)_p has the single origin p");
            value.origin = origin;
            value
        })
        .collect()
}

/// `d = Σ_{p ∈ O_C} d_{(C)_p}`.
pub fn total_d(config: &Configuration) -> BigInt {
    origin_d_values(config)
        .into_iter()
        .fold(BigInt::zero(), |acc, v| acc + v.d)
}

/// `Σ_p #Ĉ_p` over the origins.
pub fn total_hat_size(config: &Configuration) -> usize {
    origin_d_values(config).iter().map(|v| v.hat.len()).sum()
}
