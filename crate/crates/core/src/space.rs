//! Finite-dimensional coordinate inner product spaces over the real or
//! complex field: vectors, vector families and their Gram matrices.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{BoundError, Result};
use crate::scalar::Real;

/// Field of scalars a family lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Real,
    Complex,
}

impl Field {
    pub fn as_str(self) -> &'static str {
        match self {
            Field::Real => "real",
            Field::Complex => "complex",
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Field {
    type Err = BoundError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "real" | "r" => Ok(Field::Real),
            "complex" | "c" => Ok(Field::Complex),
            other => Err(BoundError::Domain(format!("unknown field `{other}`"))),
        }
    }
}

pub(crate) fn check_finite<T: Real>(values: &[Complex<T>]) -> Result<()> {
    match values
        .iter()
        .position(|z| !(z.re.is_finite() && z.im.is_finite()))
    {
        Some(i) => Err(BoundError::NonFinite(i)),
        None => Ok(()),
    }
}

/// A coordinate vector in `K^d`, `d >= 1`, with finite entries.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector<T> {
    coords: Vec<Complex<T>>,
}

impl<T: Real> Vector<T> {
    pub fn new(coords: Vec<Complex<T>>) -> Result<Self> {
        if coords.is_empty() {
            return Err(BoundError::EmptyVector);
        }
        check_finite(&coords)?;
        Ok(Self { coords })
    }

    pub fn from_real(coords: &[T]) -> Result<Self> {
        Self::new(coords.iter().map(|&r| Complex::new(r, T::zero())).collect())
    }

    pub fn zeros(dim: usize) -> Result<Self> {
        Self::new(vec![Complex::zero(); dim])
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    #[inline]
    pub fn coords(&self) -> &[Complex<T>] {
        &self.coords
    }

    pub fn is_real(&self) -> bool {
        self.coords.iter().all(|z| z.im.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|z| z.is_zero())
    }

    /// Multiplies every coordinate by `t`.
    pub fn scaled(&self, t: Complex<T>) -> Self {
        Self {
            coords: self.coords.iter().map(|&z| z * t).collect(),
        }
    }
}

/// An ordered family `y_1, …, y_n` of vectors sharing one dimension.
///
/// The family may be empty; its dimension is still recorded so that
/// operations pairing it with some `x` can check shapes.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorFamily<T> {
    field: Field,
    dim: usize,
    vectors: Vec<Vector<T>>,
}

impl<T: Real> VectorFamily<T> {
    pub fn new(field: Field, dim: usize, vectors: Vec<Vector<T>>) -> Result<Self> {
        if dim == 0 {
            return Err(BoundError::EmptyVector);
        }
        for v in &vectors {
            if v.dim() != dim {
                return Err(BoundError::Dimension {
                    expected: dim,
                    found: v.dim(),
                });
            }
        }
        if field == Field::Real {
            for (i, v) in vectors.iter().enumerate() {
                if !v.is_real() {
                    return Err(BoundError::ComplexInRealFamily { index: i });
                }
            }
        }
        Ok(Self {
            field,
            dim,
            vectors,
        })
    }

    /// Real family from rows of real coordinates.
    pub fn from_real_rows<R: AsRef<[T]>>(dim: usize, rows: &[R]) -> Result<Self> {
        let vectors = rows
            .iter()
            .map(|r| Vector::from_real(r.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(Field::Real, dim, vectors)
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    #[inline]
    pub fn vectors(&self) -> &[Vector<T>] {
        &self.vectors
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Vector<T>> {
        self.vectors.iter()
    }

    pub(crate) fn check_vector(&self, x: &Vector<T>) -> Result<()> {
        if x.dim() != self.dim {
            return Err(BoundError::Dimension {
                expected: self.dim,
                found: x.dim(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_coefficients(&self, what: &'static str, len: usize) -> Result<()> {
        if len != self.len() {
            return Err(BoundError::Shape {
                what,
                expected: self.len(),
                found: len,
            });
        }
        Ok(())
    }

    /// `Σ α_i y_i`.
    pub fn linear_combination(&self, alphas: &[Complex<T>]) -> Result<Vector<T>> {
        self.check_coefficients("coefficients", alphas.len())?;
        let mut acc = vec![Complex::<T>::zero(); self.dim];
        for (alpha, v) in alphas.iter().zip(&self.vectors) {
            for (a, &z) in acc.iter_mut().zip(v.coords()) {
                *a += *alpha * z;
            }
        }
        Vector::new(acc)
    }

    /// Norms `‖y_i‖` of every member, in order.
    pub fn norms(&self) -> Vec<T> {
        self.vectors.iter().map(norm).collect()
    }
}

impl<'a, T> IntoIterator for &'a VectorFamily<T> {
    type Item = &'a Vector<T>;
    type IntoIter = std::slice::Iter<'a, Vector<T>>;

    fn into_iter(self) -> Self::IntoIter {
        self.vectors.iter()
    }
}

/// The `n × n` matrix of pairwise inner products `g_ij = (y_i, y_j)`,
/// stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix<T> {
    n: usize,
    entries: Vec<Complex<T>>,
}

impl<T: Real> GramMatrix<T> {
    /// Builds a matrix from row-major entries without checking the Gram
    /// invariants; see [`GramMatrix::hermitian_defect`].
    pub fn from_entries(n: usize, entries: Vec<Complex<T>>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(BoundError::Shape {
                what: "gram entries",
                expected: n * n,
                found: entries.len(),
            });
        }
        check_finite(&entries)?;
        Ok(Self { n, entries })
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![Complex::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = Complex::new(T::one(), T::zero());
        }
        Self { n, entries }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex<T> {
        self.entries[i * self.n + j]
    }

    #[inline]
    pub fn entries(&self) -> &[Complex<T>] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Complex<T>] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Complex<T>]> {
        // chunks(0) panics; an empty matrix has no rows anyway
        self.entries.chunks(self.n.max(1))
    }

    /// Largest `|g_ji − conj(g_ij)|` over all pairs.
    pub fn hermitian_defect(&self) -> T {
        let mut worst = T::zero();
        for i in 0..self.n {
            for j in i..self.n {
                worst = worst.max((self.get(j, i) - self.get(i, j).conj()).norm());
            }
        }
        worst
    }

    /// Position and size of the entry farthest from the identity.
    pub fn identity_deviation(&self) -> Option<(usize, usize, T)> {
        let mut worst: Option<(usize, usize, T)> = None;
        for i in 0..self.n {
            for j in 0..self.n {
                let target = if i == j { T::one() } else { T::zero() };
                let dev = (self.get(i, j) - Complex::new(target, T::zero())).norm();
                if worst.is_none_or(|(_, _, w)| dev > w) {
                    worst = Some((i, j, dev));
                }
            }
        }
        worst
    }

    pub fn is_identity(&self, tol: T) -> bool {
        self.identity_deviation().is_none_or(|(_, _, d)| d <= tol)
    }

    /// `Σ_ij c_i conj(c_j) g_ij`, which is `‖Σ c_i y_i‖²` for a true Gram
    /// matrix and therefore real and nonnegative.
    pub fn quadratic_form(&self, c: &[Complex<T>]) -> Result<Complex<T>> {
        if c.len() != self.n {
            return Err(BoundError::Shape {
                what: "quadratic form coefficients",
                expected: self.n,
                found: c.len(),
            });
        }
        let mut acc = Complex::zero();
        for i in 0..self.n {
            for j in 0..self.n {
                acc += c[i] * c[j].conj() * self.get(i, j);
            }
        }
        Ok(acc)
    }
}

/// `(x, y) = Σ_k x_k · conj(y_k)`: linear in `x`, conjugate-linear in `y`.
pub fn inner<T: Real>(x: &Vector<T>, y: &Vector<T>) -> Result<Complex<T>> {
    if x.dim() != y.dim() {
        return Err(BoundError::Dimension {
            expected: x.dim(),
            found: y.dim(),
        });
    }
    Ok(inner_unchecked(x.coords(), y.coords()))
}

#[inline]
pub(crate) fn inner_unchecked<T: Real>(x: &[Complex<T>], y: &[Complex<T>]) -> Complex<T> {
    x.iter()
        .zip(y)
        .fold(Complex::zero(), |acc, (&a, &b)| acc + a * b.conj())
}

/// `‖x‖² = Re (x, x)`.
pub fn norm_sq<T: Real>(x: &Vector<T>) -> T {
    x.coords().iter().map(|z| z.norm_sqr()).sum()
}

pub fn norm<T: Real>(x: &Vector<T>) -> T {
    norm_sq(x).sqrt()
}

pub fn gram<T: Real>(family: &VectorFamily<T>) -> GramMatrix<T> {
    let n = family.len();
    let ys = family.vectors();
    let mut entries = vec![Complex::zero(); n * n];
    for i in 0..n {
        for j in i..n {
            let g = inner_unchecked(ys[i].coords(), ys[j].coords());
            entries[i * n + j] = g;
            entries[j * n + i] = g.conj();
        }
    }
    GramMatrix { n, entries }
}

/// Inner products `(x, y_i)` for every member of the family.
pub fn projections<T: Real>(x: &Vector<T>, family: &VectorFamily<T>) -> Result<Vec<Complex<T>>> {
    family.check_vector(x)?;
    Ok(family
        .iter()
        .map(|y| inner_unchecked(x.coords(), y.coords()))
        .collect())
}
