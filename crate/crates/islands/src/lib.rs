//! Exact detection, enumeration and estimation of islands and holes in
//! finite point sets.
//!
//! A k-island of a point set S is a k-subset I with conv(I) ∩ S = I; a
//! k-hole is an island in convex position. Everything here runs on
//! arbitrary-precision rational arithmetic: no epsilons, no rounding, and
//! every predicate is decided by determinant signs.
//!
//! The crate provides
//! - an exact geometric kernel ([`geom`], [`rational`]),
//! - point-set containers with text/JSON round-trips ([`pointset`]),
//! - seeded uniform sampling from unit-volume convex bodies ([`sampler`]),
//! - counting of holes, islands and convex-position subsets ([`enumerate`]),
//! - the canonical ordering of a k-point set with certificates
//!   ([`canonical`]),
//! - d-dimensional Horton sets, constructed and certified exactly
//!   ([`horton`]),
//! - closed-form expectation bounds ([`bounds`]) and Monte Carlo / growth
//!   experiments checking them ([`experiments`]).
//!
//! The `examples/` directory demonstrates each capability end to end; a thin
//! `islands` binary exposes the same operations as subcommands.

pub mod bounds;
pub mod canonical;
pub mod enumerate;
pub mod error;
pub mod experiments;
pub mod geom;
pub mod horton;
pub mod pointset;
pub mod rational;
pub mod sampler;

pub use error::{Error, Result};
pub use geom::{HullPosition, Point};
pub use pointset::PointSet;
pub use rational::Rational;
