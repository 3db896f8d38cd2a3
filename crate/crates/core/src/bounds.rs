//! Explicit lower bounds on `C²/(D·C)` for negative curves on the sky of a
//! configuration, and the finite-list tools used to probe them.
//!
//! All bounds depend only on `n` (number of points), `d` (sum of the
//! per-origin integers of [`crate::sufficiency`]), `γ = max(-E_q²)`, `δ` and,
//! for the `Δ(S; G, ε)` family, on `ε`. Values are exact rationals.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::config::Configuration;
use crate::lattice::{pairing, DivisorClass, LatticeError, SurfaceModel};
use crate::sufficiency::{origin_d_values, DValue};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("epsilon must be positive, got {0}")]
    NonPositiveEpsilon(Rational),
    #[error("foliation degree {degree} does not match surface {surface}")]
    FoliationMismatch {
        degree: FoliationDegree,
        surface: SurfaceModel,
    },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

fn int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

fn check_epsilon(epsilon: &Rational) -> Result<(), BoundsError> {
    if !epsilon.is_positive() {
        return Err(BoundsError::NonPositiveEpsilon(epsilon.clone()));
    }
    Ok(())
}

/// Which value of `n` enters the invariant-curve terms.
///
/// `Stated` uses `n = #C`. `Example` uses `n = Σ_p #Ĉ_p`, the count that
/// reproduces the printed arithmetic of the 12-point worked example
/// (`-345 = 23·(1 - 16)`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum NConvention {
    #[default]
    Stated,
    Example,
}

impl fmt::Display for NConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NConvention::Stated => "stated",
            NConvention::Example => "example",
        })
    }
}

impl FromStr for NConvention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "stated" => Ok(NConvention::Stated),
            "example" => Ok(NConvention::Example),
            other => Err(format!("unknown n convention `{other}` (expected stated|example)")),
        }
    }
}

/// The combinatorial data every bound is evaluated from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundInputs {
    pub surface: SurfaceModel,
    pub n_stated: BigInt,
    pub n_example: BigInt,
    pub d: BigInt,
    pub gamma: BigInt,
}

impl BoundInputs {
    pub fn from_configuration(config: &Configuration) -> Self {
        Self::from_parts(config, &origin_d_values(config))
    }

    /// Same as [`BoundInputs::from_configuration`] reusing computed d-values.
    pub fn from_parts(config: &Configuration, d_values: &[DValue]) -> Self {
        BoundInputs {
            surface: config.surface(),
            n_stated: BigInt::from(config.len()),
            n_example: BigInt::from(d_values.iter().map(|v| v.hat.len()).sum::<usize>()),
            d: d_values.iter().map(|v| &v.d).sum(),
            gamma: BigInt::from(config.exceptional_self_intersections().gamma()),
        }
    }

    /// Inputs for `S = S₀` (no points blown up): `n = d = 0` and `γ = 0`.
    pub fn empty(surface: SurfaceModel) -> Self {
        BoundInputs {
            surface,
            n_stated: BigInt::zero(),
            n_example: BigInt::zero(),
            d: BigInt::zero(),
            gamma: BigInt::zero(),
        }
    }

    pub fn for_configuration(config: Option<&Configuration>, surface: SurfaceModel) -> Self {
        match config {
            Some(c) => Self::from_configuration(&c.with_surface(surface)),
            None => Self::empty(surface),
        }
    }

    pub fn with_gamma(mut self, gamma: impl Into<BigInt>) -> Self {
        self.gamma = gamma.into();
        self
    }

    pub fn n(&self, convention: NConvention) -> &BigInt {
        match convention {
            NConvention::Stated => &self.n_stated,
            NConvention::Example => &self.n_example,
        }
    }

    pub fn conventions_differ(&self) -> bool {
        self.n_stated != self.n_example
    }

    fn delta(&self) -> BigInt {
        BigInt::from(self.surface.delta().unwrap_or(0))
    }
}

/// Which inequality a report evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundKind {
    /// `C²/(G·C)` for curves not invariant by an attached foliation.
    NonInvariant,
    /// `C²/(G·C)` for invariant curves.
    Invariant,
    /// `ν_{D*}` for `D` nef on `S₀`.
    PullbackNef,
    /// `ν_D` for `D ∈ Δ(S; G, ε)`.
    DeltaNef,
    /// `ν_D` for `D ∈ Δ(S; G, ε)` in the two-term form that omits `-n-δ`.
    DeltaNefShort,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::NonInvariant => "non-invariant",
            BoundKind::Invariant => "invariant",
            BoundKind::PullbackNef => "pullback-nef",
            BoundKind::DeltaNef => "delta-nef",
            BoundKind::DeltaNefShort => "delta-nef-short",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundTerm {
    pub name: String,
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub kind: BoundKind,
    pub surface: SurfaceModel,
    pub n_stated: BigInt,
    pub n_example: BigInt,
    pub d: BigInt,
    pub gamma: BigInt,
    pub epsilon: Option<Rational>,
    pub convention: NConvention,
    pub terms: Vec<BoundTerm>,
    /// Minimum of the terms.
    pub bound: Rational,
}

impl BoundReport {
    fn new(
        kind: BoundKind,
        inputs: &BoundInputs,
        epsilon: Option<Rational>,
        convention: NConvention,
        terms: Vec<(&str, Rational)>,
    ) -> Self {
        let terms: Vec<BoundTerm> = terms
            .into_iter()
            .map(|(name, value)| BoundTerm {
                name: name.to_string(),
                value,
            })
            .collect();
        let bound = terms
            .iter()
            .map(|t| &t.value)
            .min()
            .cloned()
            .expect("every bound has at least one term");
        BoundReport {
            kind,
            surface: inputs.surface,
            n_stated: inputs.n_stated.clone(),
            n_example: inputs.n_example.clone(),
            d: inputs.d.clone(),
            gamma: inputs.gamma.clone(),
            epsilon,
            convention,
            terms,
            bound,
        }
    }

    pub fn term(&self, name: &str) -> Option<&Rational> {
        self.terms.iter().find(|t| t.name == name).map(|t| &t.value)
    }

    /// A warning when the two `n` conventions give different counts.
    pub fn convention_warning(&self) -> Option<String> {
        (self.n_stated != self.n_example).then(|| {
            format!(
                "n = #C = {} but the hat configurations have {} points in total; \
                 this report uses n = {} ({} convention)",
                self.n_stated,
                self.n_example,
                match self.convention {
                    NConvention::Stated => &self.n_stated,
                    NConvention::Example => &self.n_example,
                },
                self.convention
            )
        })
    }
}

/// Both cases of the bound normalized by `L*` or `F* + M*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Teo2Bounds {
    pub non_invariant: BoundReport,
    pub invariant: BoundReport,
}

fn non_invariant_term(inputs: &BoundInputs) -> (&'static str, Rational) {
    let d = &inputs.d;
    match inputs.surface {
        SurfaceModel::ProjectivePlane => ("3-2d", int(3 - BigInt::from(2) * d)),
        SurfaceModel::Hirzebruch { .. } => (
            "2-2d-delta",
            int(2 - BigInt::from(2) * d - inputs.delta()),
        ),
    }
}

fn invariant_terms(inputs: &BoundInputs, convention: NConvention) -> Vec<(&'static str, Rational)> {
    let d = &inputs.d;
    let n = inputs.n(convention);
    match inputs.surface {
        SurfaceModel::ProjectivePlane => vec![("d(1-n)", int(d * (1 - n)))],
        SurfaceModel::Hirzebruch { .. } => {
            let delta = inputs.delta();
            vec![
                ("-n-delta", int(-n - &delta)),
                ("-(delta+2)dn", int(-(delta + 2u32) * d * n)),
            ]
        }
    }
}

pub fn teo2_bounds_for(inputs: &BoundInputs, convention: NConvention) -> Teo2Bounds {
    Teo2Bounds {
        non_invariant: BoundReport::new(
            BoundKind::NonInvariant,
            inputs,
            None,
            convention,
            vec![non_invariant_term(inputs)],
        ),
        invariant: BoundReport::new(
            BoundKind::Invariant,
            inputs,
            None,
            convention,
            invariant_terms(inputs, convention),
        ),
    }
}

/// Both cases with `n = #C`.
pub fn teo2_bounds(config: &Configuration) -> Teo2Bounds {
    teo2_bounds_for(&BoundInputs::from_configuration(config), NConvention::Stated)
}

/// Bound on `ν_{D*}(S)` valid for every nef `D` on `S₀`.
pub fn cor_cotaejemplo_bounds_for(inputs: &BoundInputs, convention: NConvention) -> BoundReport {
    let mut terms = vec![non_invariant_term(inputs)];
    terms.extend(invariant_terms(inputs, convention));
    BoundReport::new(BoundKind::PullbackNef, inputs, None, convention, terms)
}

pub fn cor_cotaejemplo_bounds(config: &Configuration, convention: NConvention) -> BoundReport {
    cor_cotaejemplo_bounds_for(&BoundInputs::from_configuration(config), convention)
}

fn scaled_terms(
    inputs: &BoundInputs,
    epsilon: &Rational,
    convention: NConvention,
    include_fiber_term: bool,
) -> Vec<(&'static str, Rational)> {
    let inv = epsilon.recip();
    let mut terms = Vec::new();
    let (name, value) = non_invariant_term(inputs);
    terms.push((scaled_name(name), &inv * value));
    for (name, value) in invariant_terms(inputs, convention) {
        if name == "-n-delta" && !include_fiber_term {
            continue;
        }
        terms.push((scaled_name(name), &inv * value));
    }
    terms.push(("-gamma", -int(inputs.gamma.clone())));
    terms
}

fn scaled_name(name: &str) -> &'static str {
    match name {
        "3-2d" => "(3-2d)/eps",
        "2-2d-delta" => "(2-2d-delta)/eps",
        "d(1-n)" => "d(1-n)/eps",
        "-n-delta" => "(-n-delta)/eps",
        "-(delta+2)dn" => "-(delta+2)dn/eps",
        other => unreachable!("no scaled form for {other}"),
    }
}

/// Bound on `ν_D(S)` for nef `D ∈ Δ(S; G, ε)`, `G = L*` or `F* + M*`.
pub fn cor_expl1_bounds_for(
    inputs: &BoundInputs,
    epsilon: &Rational,
    convention: NConvention,
) -> Result<BoundReport, BoundsError> {
    check_epsilon(epsilon)?;
    Ok(BoundReport::new(
        BoundKind::DeltaNef,
        inputs,
        Some(epsilon.clone()),
        convention,
        scaled_terms(inputs, epsilon, convention, true),
    ))
}

pub fn cor_expl1_bounds(
    config: &Configuration,
    epsilon: &Rational,
    convention: NConvention,
) -> Result<BoundReport, BoundsError> {
    cor_expl1_bounds_for(&BoundInputs::from_configuration(config), epsilon, convention)
}

/// The `Δ(S; G, ε)` bound without the `(-n-δ)/ε` term. For `n, d ≥ 1`
/// that term never attains the minimum, since `(δ+2)dn ≥ n + δ`.
pub fn cor_expl1_short_bounds_for(
    inputs: &BoundInputs,
    epsilon: &Rational,
    convention: NConvention,
) -> Result<BoundReport, BoundsError> {
    check_epsilon(epsilon)?;
    Ok(BoundReport::new(
        BoundKind::DeltaNefShort,
        inputs,
        Some(epsilon.clone()),
        convention,
        scaled_terms(inputs, epsilon, convention, false),
    ))
}

/// Degree `r` of a foliation on the plane, or bidegree `(r₁, r₂)` on `F_δ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FoliationDegree {
    Plane(u64),
    Hirzebruch(i64, i64),
}

impl fmt::Display for FoliationDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FoliationDegree::Plane(r) => write!(f, "degree {r}"),
            FoliationDegree::Hirzebruch(r1, r2) => write!(f, "bidegree ({r1}, {r2})"),
        }
    }
}

impl FoliationDegree {
    /// `β = r - 1` on the plane, `r₁ + r₂` on `F_δ`.
    pub fn beta(&self, surface: SurfaceModel) -> Result<BigInt, BoundsError> {
        match (self, surface) {
            (FoliationDegree::Plane(r), SurfaceModel::ProjectivePlane) => {
                Ok(BigInt::from(*r) - 1)
            }
            (FoliationDegree::Hirzebruch(r1, r2), SurfaceModel::Hirzebruch { .. }) => {
                Ok(BigInt::from(*r1) + r2)
            }
            _ => Err(BoundsError::FoliationMismatch {
                degree: *self,
                surface,
            }),
        }
    }
}

/// `-β(F)`: lower bound on `C²/(G·C)` for negative curves outside the
/// invariant ones.
pub fn beta_bound(degree: FoliationDegree, surface: SurfaceModel) -> Result<Rational, BoundsError> {
    Ok(-int(degree.beta(surface)?))
}

fn scaled_by_epsilon(beta: BigInt, epsilon: &Rational) -> Result<Rational, BoundsError> {
    check_epsilon(epsilon)?;
    Ok(-int(beta) / epsilon)
}

/// `-β(F)/ε` for `D ∈ Δ(S; G, ε)`.
pub fn beta_bound_scaled(
    degree: FoliationDegree,
    surface: SurfaceModel,
    epsilon: &Rational,
) -> Result<Rational, BoundsError> {
    scaled_by_epsilon(degree.beta(surface)?, epsilon)
}

/// `-1/ε` for `D ∈ Δ(X; K_G, ε)`, i.e. the scaled bound with `β = 1`.
pub fn generic_epsilon_bound(epsilon: &Rational) -> Result<Rational, BoundsError> {
    scaled_by_epsilon(BigInt::one(), epsilon)
}

/// A foliation-based bound on `ν_D` and the terms it is the minimum of.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoliationBoundReport {
    pub beta: BigInt,
    pub epsilon: Option<Rational>,
    pub terms: Vec<BoundTerm>,
    pub bound: Rational,
}

fn foliation_report(
    beta: BigInt,
    epsilon: Option<&Rational>,
    alpha: Option<&Rational>,
    gamma: Option<&BigInt>,
) -> Result<FoliationBoundReport, BoundsError> {
    let main = match epsilon {
        Some(e) => BoundTerm {
            name: "-beta/eps".into(),
            value: scaled_by_epsilon(beta.clone(), e)?,
        },
        None => BoundTerm {
            name: "-beta".into(),
            value: -int(beta.clone()),
        },
    };
    let mut terms = vec![main];
    if let Some(a) = alpha {
        terms.push(BoundTerm {
            name: "-alpha".into(),
            value: -a.clone(),
        });
    }
    if let Some(g) = gamma {
        terms.push(BoundTerm {
            name: "-gamma".into(),
            value: -int(g.clone()),
        });
    }
    let bound = terms.iter().map(|t| &t.value).min().cloned().expect("non-empty");
    Ok(FoliationBoundReport {
        beta,
        epsilon: epsilon.cloned(),
        terms,
        bound,
    })
}

/// `min{-β/ε, -α̂, -γ}` (or `min{-β, -α̂}` without `ε`), where `α̂` is the
/// user-supplied maximum of `-W²/(D·W)` over negative invariant curves.
pub fn foliation_nu_bound(
    degree: FoliationDegree,
    surface: SurfaceModel,
    epsilon: Option<&Rational>,
    alpha: Option<&Rational>,
    gamma: Option<&BigInt>,
) -> Result<FoliationBoundReport, BoundsError> {
    foliation_report(degree.beta(surface)?, epsilon, alpha, gamma)
}

/// `min{-1/ε, -α_D}` for a foliation with finitely many negative invariant
/// curves and `D ∈ Δ(X; K_G, ε)`.
pub fn generic_foliation_nu_bound(
    epsilon: &Rational,
    alpha: Option<&Rational>,
) -> Result<FoliationBoundReport, BoundsError> {
    foliation_report(BigInt::one(), Some(epsilon), alpha, None)
}

/// Degree bounds for a foliation attached to the configuration, and the
/// degree of its rational first integral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AttachedDegreeBounds {
    Plane {
        r_max: BigInt,
        first_integral_degree: BigInt,
    },
    Hirzebruch {
        r1_max: BigInt,
        r2_max: BigInt,
        /// `d₁ ≤ d`.
        first_integral_d1_max: BigInt,
        /// `d₂ = d`.
        first_integral_d2: BigInt,
    },
}

pub fn attached_foliation_degree_bounds_for(d: &BigInt, surface: SurfaceModel) -> AttachedDegreeBounds {
    let two_d_minus_two = BigInt::from(2) * d - 2;
    match surface {
        SurfaceModel::ProjectivePlane => AttachedDegreeBounds::Plane {
            r_max: two_d_minus_two,
            first_integral_degree: d.clone(),
        },
        SurfaceModel::Hirzebruch { delta } => AttachedDegreeBounds::Hirzebruch {
            r1_max: &two_d_minus_two + delta,
            r2_max: two_d_minus_two,
            first_integral_d1_max: d.clone(),
            first_integral_d2: d.clone(),
        },
    }
}

pub fn attached_foliation_degree_bounds(config: &Configuration) -> AttachedDegreeBounds {
    let d: BigInt = origin_d_values(config).into_iter().map(|v| v.d).sum();
    attached_foliation_degree_bounds_for(&d, config.surface())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveRatio {
    pub self_intersection: Rational,
    pub nef_dot_curve: Rational,
    /// `C²/(D·C)` when `C² < 0` and `D·C > 0`.
    pub ratio: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmpiricalNu {
    pub curves: Vec<CurveRatio>,
    /// Minimum ratio over qualifying curves; `None` when none qualifies.
    pub value: Option<Rational>,
}

/// Minimum of `C²/(D·C)` over the supplied classes with `C² < 0` and
/// `D·C > 0`. Only the listed classes are examined.
pub fn empirical_nu(curves: &[DivisorClass], nef: &DivisorClass) -> Result<EmpiricalNu, BoundsError> {
    let mut rows = Vec::with_capacity(curves.len());
    for c in curves {
        let nef_dot_curve = pairing(nef, c)?;
        let self_intersection = c.self_intersection();
        let ratio = (self_intersection.is_negative() && nef_dot_curve.is_positive())
            .then(|| &self_intersection / &nef_dot_curve);
        rows.push(CurveRatio {
            self_intersection,
            nef_dot_curve,
            ratio,
        });
    }
    let value = rows.iter().filter_map(|r| r.ratio.as_ref()).min().cloned();
    Ok(EmpiricalNu {
        curves: rows,
        value,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessCheck {
    pub nef_dot_witness: Rational,
    pub shifted_dot_witness: Rational,
}

impl WitnessCheck {
    /// Whether the witness constrains `D` at all (`D·C > 0`).
    pub fn applies(&self) -> bool {
        self.nef_dot_witness.is_positive()
    }

    pub fn violated(&self) -> bool {
        self.applies() && self.shifted_dot_witness.is_negative()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaCheck {
    pub shifted: DivisorClass,
    pub witnesses: Vec<WitnessCheck>,
    /// 0-based indices of witnesses with `D·C > 0` and `(D - εG)·C < 0`.
    pub violations: Vec<usize>,
    /// `(D - εG)·C ≥ 0` for every witness, the nef-type sufficient condition.
    pub shifted_nonnegative_on_all: bool,
}

impl DeltaCheck {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Tests `(D - εG)·C ≥ 0` on the witnesses with `D·C > 0`.
pub fn delta_membership_check(
    nef: &DivisorClass,
    g: &DivisorClass,
    epsilon: &Rational,
    witnesses: &[DivisorClass],
) -> Result<DeltaCheck, BoundsError> {
    check_epsilon(epsilon)?;
    let shifted = nef.try_sub(&g.scaled(epsilon))?;
    let mut checks = Vec::with_capacity(witnesses.len());
    for w in witnesses {
        checks.push(WitnessCheck {
            nef_dot_witness: pairing(nef, w)?,
            shifted_dot_witness: pairing(&shifted, w)?,
        });
    }
    let violations = checks
        .iter()
        .enumerate()
        .filter(|(_, c)| c.violated())
        .map(|(i, _)| i)
        .collect();
    let shifted_nonnegative_on_all = checks.iter().all(|c| !c.shifted_dot_witness.is_negative());
    Ok(DeltaCheck {
        shifted,
        witnesses: checks,
        violations,
        shifted_nonnegative_on_all,
    })
}

#[cfg(test)]
mod tests;
