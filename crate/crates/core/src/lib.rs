//! Exact computations in finite-dimensional ordered vector spaces whose
//! positive cone is polyhedral.
//!
//! A space is described by finitely many rational generators of its cone.
//! From those the crate decides disjointness, computes disjoint complements,
//! enumerates all bands and band projections, builds the Boolean algebra of
//! band projections, splits a space into a product of factors without
//! non-trivial projection bands, and tests whether a space is a vector
//! lattice. All arithmetic is exact.
//!
//! The math is generic over an exact ordered field ([`Scalar`]); the aliases
//! below fix the scalar to arbitrary-precision rationals.

pub mod bands;
pub mod error;
pub mod fixtures;
pub mod lab;
pub mod linalg;
pub mod lp;
pub mod polyhedral;
pub mod projections;
pub mod scalar;
pub mod space;

pub use error::{Error, Result};
pub use scalar::{format_rat, parse_rat, ParseRatError, Scalar};

/// Arbitrary-precision rational.
pub type Rat = num_rational::BigRational;
pub type RatVec = linalg::Vector<Rat>;
pub type RatMat = linalg::Matrix<Rat>;
pub type Cone = polyhedral::Cone<Rat>;
pub type HPolyhedron = lp::HPolyhedron<Rat>;
pub type LpResult = lp::LpResult<Rat>;
pub type OrderedSpace = space::OrderedSpace<Rat>;
pub type DisjointnessVerdict = space::DisjointnessVerdict<Rat>;
pub type Band = bands::Band<Rat>;
pub type BandLattice = bands::BandLattice<Rat>;
pub type BandProjection = projections::BandProjection<Rat>;
pub type BooleanAlgebraReport = projections::BooleanAlgebraReport<Rat>;
pub type Decomposition = projections::Decomposition<Rat>;
pub type LatticeVerdict = lab::LatticeVerdict<Rat>;
