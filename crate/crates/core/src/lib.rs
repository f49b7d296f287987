//! Exact combinatorial commutative algebra for Stanley-Reisner rings.
//!
//! The crate computes f- and h-vectors, Alexander duals, Hilbert series and
//! graded Betti numbers of face rings `k[Δ]`, and checks closed-form Betti
//! number and multiplicity formulas for pure and linear resolutions against
//! an independent oracle built on Hochster's formula.
//!
//! Arithmetic is exact throughout. Polynomials and matrix ranks are generic
//! over the scalar traits in [`scalar`]; the aliases below fix the types used
//! by the rest of the crate.

pub mod alexander;
pub mod betti;
pub mod complex;
pub mod error;
pub mod formulas;
pub mod generate;
pub mod graph;
pub mod hilbert;
pub mod io;
pub mod linalg;
pub mod poly;
pub mod report;
pub mod scalar;

pub use alexander::{alexander_dual, dual_f_vector, k_star, KStar};
pub use betti::{
    classify_resolution, hochster_betti, is_cohen_macaulay, reduced_homology_rank, FieldSpec,
    GradedBettiTable, ResolutionClass, ResolutionShape,
};
pub use complex::{
    f_from_h, h_from_f, quasi_forest_sequence, FVector, Face, HVector, SimplicialComplex,
};
pub use error::{Error, Result};
pub use graph::{Chordality, Graph};
pub use hilbert::{
    multiplicity, series_from_complex, series_from_resolution, HilbertSeries, Multiplicity,
};
pub use report::{Record, Verdict, VerificationReport};

/// Arbitrary-precision integer used for h-vectors and Betti formulas.
pub type Int = num_bigint::BigInt;
/// Exact rational.
pub type Rational = num_rational::BigRational;
/// Integer polynomial, e.g. a Hilbert series numerator.
pub type IntPoly = poly::Poly<Int>;
/// Rational polynomial, e.g. a Hilbert polynomial.
pub type RatPoly = poly::Poly<Rational>;
