//! Hölder exponents and the sequence / Gram-entry norms that appear as
//! factors on the right-hand side of every bound.
//!
//! All finite-exponent norms factor out the largest magnitude before
//! powering, so `q = p / (p − 1)` may be very large without overflow.

use std::fmt;

use num_complex::Complex;

use crate::error::{BoundError, Result};
use crate::scalar::Real;
use crate::space::GramMatrix;

/// Distance from 1 below which an exponent is treated as exactly 1.
pub const SNAP_TO_ONE: f64 = 1e-12;

/// Which of the three forms a bound family takes at a given `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `p = ∞`: coefficients enter through their maximum modulus.
    Max,
    /// `1 < p < ∞`.
    Holder,
    /// `p = 1`: coefficients enter through their modulus sum.
    Sum,
}

/// A pair of conjugate exponents `1/p + 1/q = 1`, `p ∈ [1, ∞]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HolderExponent<T> {
    p: T,
    q: T,
}

impl<T: Real> HolderExponent<T> {
    pub fn new(p: T) -> Result<Self> {
        let p = snap(p)?;
        let q = if p == T::one() {
            T::infinity()
        } else if p.is_infinite() {
            T::one()
        } else {
            p / (p - T::one())
        };
        Ok(Self { p, q })
    }

    pub fn infinity() -> Self {
        Self {
            p: T::infinity(),
            q: T::one(),
        }
    }

    pub fn one() -> Self {
        Self {
            p: T::one(),
            q: T::infinity(),
        }
    }

    #[inline]
    pub fn p(&self) -> T {
        self.p
    }

    #[inline]
    pub fn q(&self) -> T {
        self.q
    }

    /// `1/q = 1 − 1/p`, exact at both limits.
    pub fn q_recip(&self) -> T {
        match self.branch() {
            Branch::Sum => T::zero(),
            Branch::Max => T::one(),
            Branch::Holder => T::one() / self.q,
        }
    }

    /// The exponent with the roles of `p` and `q` swapped.
    pub fn conjugate(&self) -> Self {
        Self {
            p: self.q,
            q: self.p,
        }
    }

    pub fn branch(&self) -> Branch {
        if self.p.is_infinite() {
            Branch::Max
        } else if self.p == T::one() {
            Branch::Sum
        } else {
            Branch::Holder
        }
    }
}

impl<T: Real> fmt::Display for HolderExponent<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_infinite() {
            f.write_str("inf")
        } else {
            write!(f, "{}", self.p)
        }
    }
}

fn snap<T: Real>(p: T) -> Result<T> {
    if p.is_nan() || p < T::one() {
        return Err(BoundError::Exponent(p.to_f64_lossy()));
    }
    if p - T::one() <= T::lit(SNAP_TO_ONE) {
        Ok(T::one())
    } else {
        Ok(p)
    }
}

/// `q` with `1/p + 1/q = 1`; `1 ↦ ∞` and `∞ ↦ 1`.
pub fn conjugate_exponent<T: Real>(p: T) -> Result<T> {
    Ok(HolderExponent::new(p)?.q())
}

/// ℓ^p norm of nonnegative magnitudes with an already-snapped exponent.
pub(crate) fn lp_of_magnitudes<T, I>(mags: I, p: T) -> T
where
    T: Real,
    I: Iterator<Item = T> + Clone,
{
    if p.is_infinite() {
        return mags.fold(T::zero(), T::max);
    }
    if p == T::one() {
        return mags.sum();
    }
    let peak = mags.clone().fold(T::zero(), T::max);
    if peak == T::zero() {
        return T::zero();
    }
    let sum: T = mags.map(|m| (m / peak).powf(p)).sum();
    peak * sum.powf(p.recip())
}

/// `(Σ |c_i|^p)^{1/p}`, or `max |c_i|` at `p = ∞`; zero for an empty slice.
pub fn seq_pnorm<T: Real>(c: &[Complex<T>], p: T) -> Result<T> {
    let p = HolderExponent::new(p)?.p();
    Ok(lp_of_magnitudes(c.iter().map(|z| z.norm()), p))
}

/// Same as [`seq_pnorm`] on values already known to be nonnegative reals.
pub fn real_pnorm<T: Real>(values: &[T], p: T) -> Result<T> {
    let p = HolderExponent::new(p)?.p();
    Ok(lp_of_magnitudes(values.iter().map(|v| v.abs()), p))
}

/// Entrywise `(Σ_{i,j} |g_ij|^q)^{1/q}` over all `n²` entries;
/// `max |g_ij|` at `q = ∞`.
pub fn gram_entry_qnorm<T: Real>(g: &GramMatrix<T>, q: T) -> Result<T> {
    let q = HolderExponent::new(q)?.p();
    Ok(lp_of_magnitudes(g.entries().iter().map(|z| z.norm()), q))
}

/// `max_i Σ_j |g_ij|`.
pub fn max_row_abs_sum<T: Real>(g: &GramMatrix<T>) -> T {
    g.rows()
        .map(|row| row.iter().map(|z| z.norm()).sum::<T>())
        .fold(T::zero(), T::max)
}
