//! Picard lattice of the sky of a configuration.
//!
//! Classes are written in the total-transform basis `{L*, E₁*, …, Eₙ*}` over
//! the plane and `{F*, M*, E₁*, …, Eₙ*}` over `F_δ`. The exceptional
//! coordinates `(m₁, …, mₙ)` of a class stand for `-Σ mᵢ Eᵢ*`, so a curve
//! of degree `a` through the points with multiplicities `mᵢ` has exceptional
//! coordinates exactly `mᵢ`.
//!
//! The pairing is `L*² = 1`; `F*² = 0`, `F*·M* = 1`, `M*² = δ`;
//! `Eᵢ*·Eⱼ* = -δᵢⱼ`, with base and exceptional generators orthogonal.

mod closure;
mod literal;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::config::{Configuration, PointId, ProximityMatrix};
use crate::Rational;

pub use closure::{bidegree_of_closure, AffineDegrees, Chart, ClosureDegree, FirstDegree};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("surface mismatch: {left} vs {right}")]
    SurfaceMismatch { left: String, right: String },
    #[error("point {id} is not in the configuration")]
    UnknownPoint { id: PointId },
    #[error("{0} is not a Hirzebruch surface")]
    NotHirzebruch(SurfaceModel),
    #[error("unknown chart `{0}`")]
    UnknownChart(String),
    #[error("chart {chart} does not belong to {surface}")]
    ChartMismatch { chart: Chart, surface: SurfaceModel },
    #[error("inconsistent degrees: {0}")]
    InconsistentDegrees(String),
    #[error("invalid surface `{0}` (expected `p2` or `f <delta>`)")]
    InvalidSurface(String),
    #[error("invalid divisor literal `{literal}`: {message}")]
    Literal { literal: String, message: String },
}

/// The base surface `S₀`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SurfaceModel {
    ProjectivePlane,
    Hirzebruch { delta: u32 },
}

impl SurfaceModel {
    pub fn hirzebruch(delta: u32) -> Self {
        SurfaceModel::Hirzebruch { delta }
    }

    pub fn delta(&self) -> Option<u32> {
        match *self {
            SurfaceModel::ProjectivePlane => None,
            SurfaceModel::Hirzebruch { delta } => Some(delta),
        }
    }

    pub fn is_plane(&self) -> bool {
        matches!(self, SurfaceModel::ProjectivePlane)
    }

    /// Number of base generators: 1 for the plane, 2 for `F_δ`.
    pub fn rank(&self) -> usize {
        if self.is_plane() {
            1
        } else {
            2
        }
    }

    /// The token used after `surface` in configuration files.
    pub fn file_token(&self) -> String {
        match self {
            SurfaceModel::ProjectivePlane => "p2".to_string(),
            SurfaceModel::Hirzebruch { delta } => format!("f {delta}"),
        }
    }
}

impl fmt::Display for SurfaceModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceModel::ProjectivePlane => f.write_str("P2"),
            SurfaceModel::Hirzebruch { delta } => write!(f, "F{delta}"),
        }
    }
}

impl FromStr for SurfaceModel {
    type Err = LatticeError;

    /// Accepts `p2`, `f <δ>`, `f<δ>` and `f:<δ>` (case-insensitive).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != ':')
            .collect::<String>()
            .to_ascii_lowercase();
        if compact == "p2" {
            return Ok(SurfaceModel::ProjectivePlane);
        }
        compact
            .strip_prefix('f')
            .and_then(|d| d.parse::<u32>().ok())
            .map(SurfaceModel::hirzebruch)
            .ok_or_else(|| LatticeError::InvalidSurface(s.to_string()))
    }
}

/// A divisor class with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    surface: SurfaceModel,
    base: Vec<Rational>,
    exceptional: Vec<Rational>,
}

fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

impl DivisorClass {
    /// `base` holds `(a)` over the plane or `(a, b)` over `F_δ`;
    /// `exceptional` holds the `mᵢ` of `-Σ mᵢ Eᵢ*`.
    pub fn new(
        surface: SurfaceModel,
        base: Vec<Rational>,
        exceptional: Vec<Rational>,
    ) -> Result<Self, LatticeError> {
        if base.len() != surface.rank() {
            return Err(LatticeError::SurfaceMismatch {
                left: format!("{} base coefficients", base.len()),
                right: format!("{surface} (rank {})", surface.rank()),
            });
        }
        Ok(DivisorClass {
            surface,
            base,
            exceptional,
        })
    }

    pub fn zero(surface: SurfaceModel, n: usize) -> Self {
        DivisorClass {
            surface,
            base: vec![Rational::zero(); surface.rank()],
            exceptional: vec![Rational::zero(); n],
        }
    }

    /// `a L* - Σ mᵢ Eᵢ*` with integer coefficients.
    pub fn plane(a: i64, multiplicities: &[i64]) -> Self {
        DivisorClass {
            surface: SurfaceModel::ProjectivePlane,
            base: vec![rat(a)],
            exceptional: multiplicities.iter().map(|&m| rat(m)).collect(),
        }
    }

    /// `a F* + b M* - Σ mᵢ Eᵢ*` with integer coefficients.
    pub fn hirzebruch(delta: u32, a: i64, b: i64, multiplicities: &[i64]) -> Self {
        DivisorClass {
            surface: SurfaceModel::hirzebruch(delta),
            base: vec![rat(a), rat(b)],
            exceptional: multiplicities.iter().map(|&m| rat(m)).collect(),
        }
    }

    /// `L*` with `n` exceptional slots.
    pub fn line(n: usize) -> Self {
        Self::plane(1, &vec![0; n])
    }

    /// `F*`.
    pub fn fiber(delta: u32, n: usize) -> Self {
        Self::hirzebruch(delta, 1, 0, &vec![0; n])
    }

    /// `M*`.
    pub fn section(delta: u32, n: usize) -> Self {
        Self::hirzebruch(delta, 0, 1, &vec![0; n])
    }

    /// The ample class used to normalize bounds: `L*` or `F* + M*`.
    pub fn polarization(surface: SurfaceModel, n: usize) -> Self {
        match surface {
            SurfaceModel::ProjectivePlane => Self::line(n),
            SurfaceModel::Hirzebruch { delta } => Self::hirzebruch(delta, 1, 1, &vec![0; n]),
        }
    }

    /// Total transform `Eᵢ*` of the `i`-th exceptional divisor (1-based).
    pub fn exceptional_generator(surface: SurfaceModel, n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n, "exceptional index {i} out of 1..={n}");
        let mut cls = Self::zero(surface, n);
        cls.exceptional[i - 1] = -Rational::one();
        cls
    }

    pub fn surface(&self) -> SurfaceModel {
        self.surface
    }

    /// Number of exceptional generators.
    pub fn n(&self) -> usize {
        self.exceptional.len()
    }

    pub fn base(&self) -> &[Rational] {
        &self.base
    }

    /// The `mᵢ` of `-Σ mᵢ Eᵢ*`.
    pub fn exceptional(&self) -> &[Rational] {
        &self.exceptional
    }

    /// True when there is no exceptional part (a pullback from `S₀`).
    pub fn is_pullback(&self) -> bool {
        self.exceptional.iter().all(Zero::is_zero)
    }

    fn check_compatible(&self, other: &Self) -> Result<(), LatticeError> {
        if self.surface != other.surface || self.n() != other.n() {
            return Err(LatticeError::SurfaceMismatch {
                left: format!("{} with {} points", self.surface, self.n()),
                right: format!("{} with {} points", other.surface, other.n()),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, LatticeError> {
        self.check_compatible(other)?;
        Ok(DivisorClass {
            surface: self.surface,
            base: self.base.iter().zip(&other.base).map(|(a, b)| a + b).collect(),
            exceptional: self
                .exceptional
                .iter()
                .zip(&other.exceptional)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, LatticeError> {
        self.try_add(&other.scaled(&-Rational::one()))
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        DivisorClass {
            surface: self.surface,
            base: self.base.iter().map(|a| a * factor).collect(),
            exceptional: self.exceptional.iter().map(|a| a * factor).collect(),
        }
    }

    /// Intersection number with `other`.
    pub fn dot(&self, other: &Self) -> Result<Rational, LatticeError> {
        pairing(self, other)
    }

    pub fn self_intersection(&self) -> Rational {
        pairing(self, self).expect("a class is compatible with itself")
    }

    /// Coordinates `s` in the basis of strict transforms, `D = base* - Σ sₖ Eₖ`.
    ///
    /// Since `Eᵢ* = Σₖ (P⁻¹)ₖᵢ Eₖ`, the strict coordinates are `s = P⁻¹ m`.
    pub fn strict_coordinates(&self, pm: &ProximityMatrix) -> Vec<Rational> {
        assert_eq!(pm.dim(), self.n());
        pm.inverse()
            .rows()
            .map(|row| {
                row.iter()
                    .zip(&self.exceptional)
                    .map(|(a, m)| Rational::from_integer(a.clone()) * m)
                    .sum()
            })
            .collect()
    }

    /// Inverse of [`DivisorClass::strict_coordinates`]: `m = P s`.
    pub fn from_strict_coordinates(
        surface: SurfaceModel,
        base: Vec<Rational>,
        strict: &[Rational],
        pm: &ProximityMatrix,
    ) -> Result<Self, LatticeError> {
        assert_eq!(pm.dim(), strict.len());
        let exceptional = pm
            .matrix()
            .rows()
            .map(|row| {
                row.iter()
                    .zip(strict)
                    .map(|(a, s)| Rational::from_integer(a.clone()) * s)
                    .sum()
            })
            .collect();
        Self::new(surface, base, exceptional)
    }

    /// Parses a literal such as `3L - 2E1 - E4` or `2F + 1M - 1/2E3`.
    pub fn parse_literal(text: &str, surface: SurfaceModel, n: usize) -> Result<Self, LatticeError> {
        literal::parse(text, surface, n)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        literal::write(self, f)
    }
}

/// The intersection pairing.
pub fn pairing(x: &DivisorClass, y: &DivisorClass) -> Result<Rational, LatticeError> {
    x.check_compatible(y)?;
    let base = match x.surface {
        SurfaceModel::ProjectivePlane => &x.base[0] * &y.base[0],
        SurfaceModel::Hirzebruch { delta } => {
            let (a, b) = (&x.base[0], &x.base[1]);
            let (c, d) = (&y.base[0], &y.base[1]);
            a * d + b * c + rat(delta.into()) * b * d
        }
    };
    let exceptional: Rational = x
        .exceptional
        .iter()
        .zip(&y.exceptional)
        .map(|(m, k)| m * k)
        .sum();
    Ok(base - exceptional)
}

/// Class of the strict transform `E_q = E_q* - Σ_{p→q} E_p*` on the sky.
pub fn strict_transform_of_exceptional(
    config: &Configuration,
    q: PointId,
) -> Result<DivisorClass, LatticeError> {
    if config.point(q).is_none() {
        return Err(LatticeError::UnknownPoint { id: q });
    }
    let mut cls = DivisorClass::exceptional_generator(config.surface(), config.len(), q);
    for &p in config.proximate_to(q) {
        cls.exceptional[p - 1] = Rational::one();
    }
    Ok(cls)
}

/// The special section `M₀ = M* - δF*`.
pub fn special_section_class(surface: SurfaceModel, n: usize) -> Result<DivisorClass, LatticeError> {
    match surface {
        SurfaceModel::Hirzebruch { delta } => {
            Ok(DivisorClass::hirzebruch(delta, -i64::from(delta), 1, &vec![0; n]))
        }
        other => Err(LatticeError::NotHirzebruch(other)),
    }
}

/// Outcome of checking `mᵢ ≤ a + b + δb` for a class `aF* + bM* - Σ mᵢEᵢ*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityCheck {
    pub limit: Rational,
    /// `(i, mᵢ)` for every 1-based index exceeding the limit.
    pub violators: Vec<(usize, Rational)>,
}

impl MultiplicityCheck {
    pub fn passed(&self) -> bool {
        self.violators.is_empty()
    }
}

/// Multiplicities of a curve on `F_δ` at the blown-up points are at most
/// `a + b + δb`.
pub fn multiplicity_bound_check(cls: &DivisorClass) -> Result<MultiplicityCheck, LatticeError> {
    let delta = cls
        .surface
        .delta()
        .ok_or(LatticeError::NotHirzebruch(cls.surface))?;
    let (a, b) = (&cls.base[0], &cls.base[1]);
    let limit = a + b + rat(delta.into()) * b;
    let violators = cls
        .exceptional
        .iter()
        .enumerate()
        .filter(|(_, m)| *m > &limit)
        .map(|(i, m)| (i + 1, m.clone()))
        .collect();
    Ok(MultiplicityCheck { limit, violators })
}

/// `C² ≥ -K_F·C`, the inequality every curve not invariant by a foliation
/// with canonical class `K_F` satisfies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantCheck {
    pub self_intersection: Rational,
    pub lower_bound: Rational,
}

impl InvariantCheck {
    pub fn holds(&self) -> bool {
        self.self_intersection >= self.lower_bound
    }
}

pub fn invariant_bound_check(
    canonical: &DivisorClass,
    curve: &DivisorClass,
) -> Result<InvariantCheck, LatticeError> {
    let k_dot_c = pairing(canonical, curve)?;
    Ok(InvariantCheck {
        self_intersection: curve.self_intersection(),
        lower_bound: -k_dot_c,
    })
}
