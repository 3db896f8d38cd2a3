//! Degree and bidegree of the closure in `S₀` of an affine curve `f(x, y) = 0`
//! given in one of the standard affine charts.

use std::fmt;
use std::str::FromStr;

use super::{LatticeError, SurfaceModel};

/// Standard affine charts: `U_X`, `U_Y`, `U_Z` cover the plane and
/// `U_ij = {X_i ≠ 0, Y_j ≠ 0}` cover `F_δ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Chart {
    UX,
    UY,
    UZ,
    U00,
    U01,
    U10,
    U11,
}

impl Chart {
    pub fn is_plane_chart(&self) -> bool {
        matches!(self, Chart::UX | Chart::UY | Chart::UZ)
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Chart::UX => "UX",
            Chart::UY => "UY",
            Chart::UZ => "UZ",
            Chart::U00 => "U00",
            Chart::U01 => "U01",
            Chart::U10 => "U10",
            Chart::U11 => "U11",
        };
        f.write_str(name)
    }
}

impl FromStr for Chart {
    type Err = LatticeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().replace('_', "").as_str() {
            "UX" => Ok(Chart::UX),
            "UY" => Ok(Chart::UY),
            "UZ" => Ok(Chart::UZ),
            "U00" => Ok(Chart::U00),
            "U01" => Ok(Chart::U01),
            "U10" => Ok(Chart::U10),
            "U11" => Ok(Chart::U11),
            _ => Err(LatticeError::UnknownChart(s.to_string())),
        }
    }
}

/// Degrees of an affine polynomial `f`: total degree, degree in `x` and
/// degree in `y`. `corner_nonzero` records `f_{d0}·f_{0d} ≠ 0` with `d` the
/// total degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AffineDegrees {
    pub total: u64,
    pub in_x: u64,
    pub in_y: u64,
    pub corner_nonzero: bool,
}

impl AffineDegrees {
    /// Degrees of a polynomial whose pure powers `x^d` and `y^d` both occur.
    pub fn with_corners(total: u64) -> Self {
        AffineDegrees {
            total,
            in_x: total,
            in_y: total,
            corner_nonzero: true,
        }
    }

    fn validate(&self) -> Result<(), LatticeError> {
        if self.in_x > self.total || self.in_y > self.total {
            return Err(LatticeError::InconsistentDegrees(format!(
                "partial degrees ({}, {}) exceed total degree {}",
                self.in_x, self.in_y, self.total
            )));
        }
        if self.corner_nonzero && (self.in_x != self.total || self.in_y != self.total) {
            return Err(LatticeError::InconsistentDegrees(
                "x^d and y^d occur, so both partial degrees equal the total degree".into(),
            ));
        }
        Ok(())
    }
}

/// `d₁` is exact when the corner coefficients are non-zero and only bounded
/// above otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FirstDegree {
    Exact(u64),
    AtMost(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureDegree {
    /// Closure in the plane is a curve of this degree.
    Plane(u64),
    /// Closure in `F_δ` has class `d₁F + d₂M`.
    Hirzebruch { d1: FirstDegree, d2: u64 },
}

pub fn bidegree_of_closure(
    surface: SurfaceModel,
    chart: Chart,
    degrees: AffineDegrees,
) -> Result<ClosureDegree, LatticeError> {
    degrees.validate()?;
    if chart.is_plane_chart() != surface.is_plane() {
        return Err(LatticeError::ChartMismatch { chart, surface });
    }
    let delta = match surface {
        SurfaceModel::ProjectivePlane => return Ok(ClosureDegree::Plane(degrees.total)),
        SurfaceModel::Hirzebruch { delta } => delta,
    };
    let d = degrees.total;
    if !degrees.corner_nonzero {
        return Ok(ClosureDegree::Hirzebruch {
            d1: FirstDegree::AtMost(degrees.in_x),
            d2: degrees.in_y,
        });
    }
    let d1 = if delta == 0 || matches!(chart, Chart::U00 | Chart::U10) {
        d
    } else {
        0
    };
    Ok(ClosureDegree::Hirzebruch {
        d1: FirstDegree::Exact(d1),
        d2: d,
    })
}
