//! Exact arithmetic substrate for the ambitoric stability workspace.
//!
//! Everything downstream (polytope measures, conic factorizations, extremal
//! solvers) is built on the types here. The crate is generic over the scalar
//! via the [`Ring`], [`Field`] and [`OrderedField`] traits; algorithms that
//! make sign decisions (Sturm sequences, root isolation, positivity
//! certificates) require [`OrderedField`], which floating point types do not
//! satisfy, so every certificate produced here is exact by construction.
//!
//! Concrete aliases for the arbitrary-precision rational instantiation live
//! at the crate root: [`Rat`], [`RatPoly`], [`RatQuadratic`].

pub mod bipoly;
pub mod lattice;
pub mod linalg;
pub mod mpoly;
pub mod poly;
pub mod qform3;
pub mod quadratic;
pub mod scalar;
pub mod sturm;

pub use bipoly::{BiPoly, BiRat};
pub use lattice::{spans_standard_lattice, spans_standard_lattice_i64};
pub use linalg::{det, solve_linear, LinearOutcome, Mat};
pub use mpoly::MPoly;
pub use poly::Poly;
pub use qform3::QuadForm3;
pub use quadratic::{quadratic_orthogonal_complement, Quadratic2};
pub use scalar::{parse_rat, rat_to_string, Field, OrderedField, Ring};
pub use sturm::{isolate_roots, sturm_positive_on, IntervalSign, RootWitness, SturmError};

/// Arbitrary-precision rational scalar used by all concrete pipelines.
pub type Rat = num_rational::BigRational;

/// Dense univariate polynomial over [`Rat`].
pub type RatPoly = Poly<Rat>;

/// Quadratic (degree two) polynomial over [`Rat`] in the half-coefficient
/// convention `u(z) = u0 z^2 + 2 u1 z + u2`.
pub type RatQuadratic = Quadratic2<Rat>;

/// Shorthand for an exact rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rat {
    use num_bigint::BigInt;
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an exact rational from an integer.
pub fn rat_int(num: i64) -> Rat {
    use num_bigint::BigInt;
    Rat::from_integer(BigInt::from(num))
}
