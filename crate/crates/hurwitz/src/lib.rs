//! Exact-arithmetic toolkit for degree-`d` covers of the projective line
//! branched at four points.
//!
//! Fixing three branch points and letting the fourth move yields a
//! one-dimensional Hurwitz space. This crate enumerates the covers with a
//! prescribed ramification profile (as monodromy tuples in `S_d` up to
//! simultaneous conjugation), splits them into braid-group orbits
//! (the irreducible components of the Hurwitz space), degenerates each cover
//! into an admissible cover over the three boundary points of the base, and
//! from the weighted node counts computes boundary degrees, Hodge-bundle
//! degrees and slopes — all in exact rational arithmetic.
//!
//! On top of the generic pipeline sit two closed-form layers that
//! cross-validate it: cyclic covers `y^d = Π (x - z_i)^{a_i}` (slope,
//! Lyapunov-exponent sum, genus expressed through gcd data of the exponents)
//! and pillowcase-style strata of quadratic differentials (finite-degree
//! Siegel–Veech estimates, the `κ_ν` constant and the slope identity that
//! ties them together).
//!
//! Modules:
//!
//! - [`perm`] — permutations of `{1..d}` and cycle-structure utilities
//! - [`covers`] — ramification profiles, monodromy tuples, canonical forms
//!   and the enumeration of cover sets
//! - [`braid`] — the two braid moves on tuples and orbit decomposition
//! - [`degen`] — boundary admissible covers, stabilization, node weights
//! - [`invariants`] — δ/δ′ orbit sums, Hodge degree and slope
//! - [`cyclic`] — closed forms for cyclic covers plus pipeline cross-checks
//! - [`qdiff`] — stratum profiles, κ_ν, degree scans, Siegel–Veech estimates,
//!   De Jonquières counts
//! - [`text`] — the textual grammar for permutations, tuples and profiles
//!
//! No floating point is used anywhere; every reported quantity is an exact
//! [`Rational`].

pub mod braid;
pub mod covers;
pub mod cyclic;
pub mod degen;
mod error;
pub mod invariants;
pub mod perm;
pub mod qdiff;
pub mod rational;
pub mod text;

pub use braid::{act_g1, act_g2, orbit_decompose, orbit_of, Orbit};
pub use covers::{
    enumerate_covers, enumerate_covers_with, Canonicalizer, CoverSet, EnumerationOptions,
    MonodromyTuple, RamificationProfile,
};
pub use cyclic::{degree_bound_check, CyclicCoverSpec, DegreeBound};
pub use degen::{degenerate, node_permutation, side_tuples, DegenerationReport, Direction};
pub use error::{Error, Result};
pub use invariants::{delta_sums, orbit_slope, space_slope, space_slope_from_orbits, SlopeReport};
pub use perm::{orbits_under, CycleType, Permutation, DEGREE_CAP};
pub use qdiff::{de_jonquieres_count, stratum_scan, sv_lyapunov_relation, OddPartition};
pub use rational::Rational;
