//! Bombieri-type upper bounds for `Σ |(x, y_i)|²` in finite-dimensional
//! inner product spaces.
//!
//! Everything is generic over the real scalar type ([`Real`], implemented
//! for `f32` and `f64`); complex scalars are [`num_complex::Complex`] over
//! the same type. The `*F64` / `*F32` aliases fix the scalar.
//!
//! - [`space`]: vectors, families, inner products and Gram matrices
//! - [`norms`]: Hölder exponents and the norm factors of every bound
//! - [`bounds`]: each left-hand side and right-hand side
//! - [`compare`]: the classical bound against the power-mean bound
//! - [`verify`]: random instances and batch verification

pub mod bounds;
pub mod compare;
pub mod error;
pub mod norms;
pub mod scalar;
pub mod space;
pub mod verify;

pub use num_complex::Complex;

pub use bounds::{
    bound_bessel_frobenius, bound_bessel_holder, bound_bessel_power_mean, bound_bombieri,
    bound_combo, bound_orthonormal_bessel, bound_refinement_chain, bound_span, lhs_bessel_sum,
    lhs_combo_sq, lhs_span_sq, power_mean_gap, BoundKind, BoundResult, FamilyBounds, Flavor,
    PowerMeanGap, RefinementChain,
};
pub use compare::{
    dominance_search, f_comparison, m1, m2, scan_f, DominanceOutcome, DominancePair, ScanConfig,
    SignScanReport,
};
pub use error::{BoundError, Result};
pub use norms::{
    conjugate_exponent, gram_entry_qnorm, max_row_abs_sum, seq_pnorm, Branch, HolderExponent,
};
pub use scalar::Real;
pub use space::{gram, inner, norm, norm_sq, Field, GramMatrix, Vector, VectorFamily};
pub use verify::{
    check_schwarz_chain, random_family, run_corpus, verify_all, verify_all_with, CorpusConfig,
    FamilySpec, Instance, Tolerance, VerificationReport,
};

/// A field element: real scalars are stored with zero imaginary part.
pub type Scalar<T> = Complex<T>;

pub type ScalarF64 = Scalar<f64>;
pub type VectorF64 = Vector<f64>;
pub type VectorFamilyF64 = VectorFamily<f64>;
pub type GramMatrixF64 = GramMatrix<f64>;
pub type HolderExponentF64 = HolderExponent<f64>;
pub type BoundResultF64 = BoundResult<f64>;
pub type SignScanReportF64 = SignScanReport<f64>;
pub type VerificationReportF64 = VerificationReport<f64>;

pub type ScalarF32 = Scalar<f32>;
pub type VectorF32 = Vector<f32>;
pub type VectorFamilyF32 = VectorFamily<f32>;
pub type GramMatrixF32 = GramMatrix<f32>;
pub type HolderExponentF32 = HolderExponent<f32>;
pub type BoundResultF32 = BoundResult<f32>;
