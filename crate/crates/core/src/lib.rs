//! Construction and verification of a triangle-of-bisectors configuration in
//! the complex hyperbolic plane, together with the reflection group it
//! generates.
//!
//! The crate is organised bottom-up:
//!
//! - [`numerics`]: point and interval scalars, certified signs, phase
//!   unwrapping, bisection certificates;
//! - [`hermitian`]: the hermitian form of signature (2,1), projective points,
//!   reflections, geodesics and the trace identities;
//! - [`construction`]: the one-parameter family of configurations and the
//!   antiholomorphic reflection `R₃`;
//! - [`verification`]: the existence inequalities, the group relation,
//!   Toledo and Euler invariants, scans and reports;
//! - [`cake`]: words in the generators, mapping tables, side pairings and the
//!   combinatorics of the sixteen-triangle fundamental domain.

pub mod cake;
pub mod construction;
pub mod hermitian;
pub mod numerics;
pub mod verification;

pub use construction::{
    build_configuration, solve_parameters, MirrorData, MirroredConfiguration, ParameterTriple,
    TriangleConfiguration,
};
pub use hermitian::{GramContext, Isometry, PointClass, ProjVector};
pub use numerics::{Backend, Complex, Interval, Real, SignVerdict, C64};
