//! Serializable reports shared by the CLI and library users.
//!
//! Integers are emitted as JSON numbers when they fit in an `i64` and as
//! strings otherwise; rationals are always strings in `p/q` form.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::bounds::{BoundReport, EmpiricalNu};
use crate::config::{ConfigError, Configuration, PointId};
use crate::lattice::{DivisorClass, LatticeError, SurfaceModel};
use crate::sufficiency::DValue;
use crate::Rational;

fn ser_int<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(x) => s.serialize_i64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

fn ser_ints<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        match x.to_i64() {
            Some(i) => seq.serialize_element(&i)?,
            None => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

/// Exact value plus a 6-significant-digit decimal, e.g. `-1/3 (-0.333333)`.
pub fn exact_and_decimal(r: &Rational) -> String {
    if r.is_integer() {
        r.to_string()
    } else {
        format!("{r} ({})", decimal(r))
    }
}

/// Decimal rendering with 6 significant digits. Display only.
pub fn decimal(r: &Rational) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let x = r.to_f64().unwrap_or(f64::NAN);
    if !x.is_finite() {
        return format!("{x}");
    }
    let exponent = x.abs().log10().floor() as i32;
    if !(-5..=15).contains(&exponent) {
        return format!("{:.5e}", x);
    }
    let decimals = (5 - exponent).max(0) as usize;
    format!("{x:.decimals$}")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReportError {
    #[error(transparent)]
    Surface(#[from] LatticeError),
    #[error(transparent)]
    Config(#[from] ConfigError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointEntry {
    pub id: PointId,
    pub level: usize,
    pub kind: String,
    pub proximities: Vec<PointId>,
    pub e_sq: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub surface: String,
    pub points: Vec<PointEntry>,
    pub gamma: u64,
    pub origins: Vec<PointId>,
    pub ends: Vec<PointId>,
}

impl AnalyzeReport {
    pub fn new(config: &Configuration) -> Self {
        let e_sq = config.exceptional_self_intersections();
        let points = config
            .points()
            .iter()
            .map(|p| PointEntry {
                id: p.id(),
                level: p.level(),
                kind: p.kind().to_string(),
                proximities: p.proximities().to_vec(),
                e_sq: e_sq.get(p.id()).expect("one value per point"),
            })
            .collect();
        AnalyzeReport {
            surface: config.surface().file_token(),
            points,
            gamma: e_sq.gamma(),
            origins: config.origins(),
            ends: config.ends(),
        }
    }

    /// Rebuilds the configuration the report describes.
    pub fn to_configuration(&self) -> Result<Configuration, ReportError> {
        let surface: SurfaceModel = self.surface.parse()?;
        Ok(Configuration::build(
            self.points.iter().map(|p| (p.id, p.proximities.clone())),
            surface,
        )?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OriginDValue {
    pub id: PointId,
    #[serde(serialize_with = "ser_int")]
    pub d: BigInt,
    pub hat_size: usize,
    #[serde(serialize_with = "ser_ints")]
    pub certificate: Vec<BigInt>,
    /// `(new id in the hat configuration, original id of the free end)`.
    pub added: Vec<(PointId, PointId)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DValueReport {
    pub origins: Vec<OriginDValue>,
    #[serde(serialize_with = "ser_int")]
    pub total_d: BigInt,
}

impl DValueReport {
    /// `values` as returned by [`crate::sufficiency::origin_d_values`] for
    /// `config`.
    pub fn new(config: &Configuration, values: &[DValue]) -> Self {
        let origins = values
            .iter()
            .map(|v| {
                let sub = config
                    .subconfiguration(v.origin, crate::config::Direction::Below)
                    .expect("origin of the configuration");
                OriginDValue {
                    id: v.origin,
                    d: v.d.clone(),
                    hat_size: v.hat.len(),
                    certificate: v.certificate.clone(),
                    added: v
                        .hat
                        .added
                        .iter()
                        .map(|&(new, end)| (new, sub.original_ids[end - 1]))
                        .collect(),
                }
            })
            .collect();
        DValueReport {
            origins,
            total_d: values.iter().map(|v| &v.d).sum(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TermEntry {
    pub name: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReportJson {
    pub kind: String,
    pub surface: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<u32>,
    #[serde(serialize_with = "ser_int")]
    pub n_stated: BigInt,
    #[serde(serialize_with = "ser_int")]
    pub n_example: BigInt,
    #[serde(serialize_with = "ser_int")]
    pub d: BigInt,
    #[serde(serialize_with = "ser_int")]
    pub gamma: BigInt,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<String>,
    pub terms: Vec<TermEntry>,
    pub bound: String,
    pub convention: String,
}

impl From<&BoundReport> for BoundReportJson {
    fn from(r: &BoundReport) -> Self {
        BoundReportJson {
            kind: r.kind.to_string(),
            surface: r.surface.file_token(),
            delta: r.surface.delta(),
            n_stated: r.n_stated.clone(),
            n_example: r.n_example.clone(),
            d: r.d.clone(),
            gamma: r.gamma.clone(),
            epsilon: r.epsilon.as_ref().map(ToString::to_string),
            terms: r
                .terms
                .iter()
                .map(|t| TermEntry {
                    name: t.name.clone(),
                    value: t.value.to_string(),
                })
                .collect(),
            bound: r.bound.to_string(),
            convention: r.convention.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveEntry {
    pub curve: String,
    pub self_intersection: String,
    pub nef_dot_curve: String,
    pub ratio: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NuReport {
    pub nef: String,
    pub curves: Vec<CurveEntry>,
    /// `None` (JSON `null`) when no listed curve qualifies.
    pub value: Option<String>,
}

impl NuReport {
    pub fn new(nef: &DivisorClass, curves: &[DivisorClass], nu: &EmpiricalNu) -> Self {
        NuReport {
            nef: nef.to_string(),
            curves: curves
                .iter()
                .zip(&nu.curves)
                .map(|(c, r)| CurveEntry {
                    curve: c.to_string(),
                    self_intersection: r.self_intersection.to_string(),
                    nef_dot_curve: r.nef_dot_curve.to_string(),
                    ratio: r.ratio.as_ref().map(ToString::to_string),
                })
                .collect(),
            value: nu.value.as_ref().map(ToString::to_string),
        }
    }
}
