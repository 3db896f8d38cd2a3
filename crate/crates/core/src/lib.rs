//! Combinatorics of clusters of infinitely near points and explicit
//! bounded-negativity bounds for rational surfaces.
//!
//! A rational surface `S` is presented as the blowup of a base surface
//! `S₀` (the projective plane or a Hirzebruch surface `F_δ`) along a
//! [`Configuration`] of infinitely near points. Everything in this crate is
//! purely combinatorial and exact: proximity matrices and multiplicity
//! vectors are arbitrary-precision integers, and divisor classes and bound
//! values are exact rationals.
//!
//! The crate is organized in four layers:
//!
//! - [`config`]: configurations, proximity matrices, multiplicity vectors,
//!   classification of points, sub-configurations and DOT export.
//! - [`sufficiency`]: the hat configuration `Ĉ_p` and the integer `d_{C_p}`
//!   obtained from it, plus the aggregate `d` over all origins.
//! - [`lattice`]: the Picard lattice of the blown-up surface, with the
//!   intersection pairing, strict transforms and closure degree rules.
//! - [`bounds`]: evaluation of the explicit lower bounds on
//!   `C²/(D·C)` and the empirical quantities used to test them.
//!
//! The `lwbn` binary is a thin front end over [`cli`].

pub mod bounds;
pub mod cli;
pub mod config;
pub mod lattice;
pub mod random;
pub mod report;
pub mod sufficiency;

pub use bounds::{BoundReport, FoliationDegree, NConvention};
pub use config::{Configuration, ConfigError, Direction, Point};
pub use lattice::{DivisorClass, LatticeError, SurfaceModel};
pub use sufficiency::{DValue, HatConfiguration};

/// Exact rational number used for divisor coefficients and bound values.
pub type Rational = num_rational::BigRational;

pub use num_bigint::BigInt;
