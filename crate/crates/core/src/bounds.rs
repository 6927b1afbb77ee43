//! Left-hand sides and upper bounds for sums of squared inner products.
//!
//! Every bound family is parametrised by a [`HolderExponent`]: `p = ∞`
//! selects the max-coefficient form, `p = 1` the sum-coefficient form and
//! anything in between the Hölder form with conjugate `q`.
//!
//! [`FamilyBounds`] caches the Gram matrix and member norms of one family so
//! that many bounds can be evaluated against it; the free functions are thin
//! wrappers that build one per call.

use std::fmt;

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{BoundError, Result};
use crate::norms::{lp_of_magnitudes, max_row_abs_sum, Branch, HolderExponent};
use crate::scalar::Real;
use crate::space::{
    check_finite, gram, inner_unchecked, norm_sq, GramMatrix, Vector, VectorFamily,
};
use crate::verify::Tolerance;

/// Per-entry tolerance used to accept a family as orthonormal.
pub const ORTHONORMAL_TOL: f64 = 1e-10;

/// Identifies which inequality a [`BoundResult`] belongs to. The string
/// forms are the ids written to CSV output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundKind {
    /// `‖Σ α_i z_i‖²` against Gram-entry factors.
    SpanGram,
    /// `‖Σ α_i z_i‖²` against member-norm factors.
    SpanNorms,
    /// `|Σ c_i (x, y_i)|²` against `‖x‖²` times Gram-entry factors.
    ComboGram,
    /// `|Σ c_i (x, y_i)|²` against `‖x‖²` times member-norm factors.
    ComboNorms,
    /// The `p = q = 2` chain `lhs ≤ Σ|α|²·‖G‖_F ≤ Σ|α|²·Σ‖z‖²`.
    RefinementChain,
    /// `Σ |(x, y_i)|² ≤ ‖x‖ · ‖((x, y_i))‖_p · (Σ|g_ij|^q)^{1/(2q)}`.
    BesselHolder,
    /// `Σ |(x, y_i)|² ≤ ‖x‖² · ‖G‖_F`.
    BesselFrobenius,
    /// `Σ |(x, y_i)|² ≤ n^{2/p−1} ‖x‖² (Σ|g_ij|^q)^{1/q}`, `1 < p ≤ 2`.
    BesselPowerMean,
    /// `Σ |(x, y_i)|² ≤ ‖x‖² · max_i Σ_j |g_ij|`.
    Bombieri,
    /// [`BoundKind::BesselHolder`] specialised to orthonormal families.
    OrthonormalBessel,
    /// `(Σ v_i^p)^{2/p} ≤ n^{2/p−1} Σ v_i²` on the moduli `v_i = |(x, y_i)|`.
    PowerMean,
}

impl BoundKind {
    pub const ALL: [BoundKind; 11] = [
        BoundKind::SpanGram,
        BoundKind::SpanNorms,
        BoundKind::ComboGram,
        BoundKind::ComboNorms,
        BoundKind::RefinementChain,
        BoundKind::BesselHolder,
        BoundKind::BesselFrobenius,
        BoundKind::BesselPowerMean,
        BoundKind::Bombieri,
        BoundKind::OrthonormalBessel,
        BoundKind::PowerMean,
    ];

    pub fn id(self) -> &'static str {
        match self {
            BoundKind::SpanGram => "span_gram",
            BoundKind::SpanNorms => "span_norms",
            BoundKind::ComboGram => "combo_gram",
            BoundKind::ComboNorms => "combo_norms",
            BoundKind::RefinementChain => "cor22_chain",
            BoundKind::BesselHolder => "thm27",
            BoundKind::BesselFrobenius => "cor28",
            BoundKind::BesselPowerMean => "eq211",
            BoundKind::Bombieri => "bombieri",
            BoundKind::OrthonormalBessel => "orthonormal_27a",
            BoundKind::PowerMean => "power_mean",
        }
    }

    pub fn from_id(id: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.id() == id)
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Whether the right-hand side uses Gram entries `|(z_i, z_j)|` directly or
/// their Schwarz majorants `‖z_i‖ ‖z_j‖`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    Gram,
    Norms,
}

impl Flavor {
    pub fn as_str(self) -> &'static str {
        match self {
            Flavor::Gram => "gram",
            Flavor::Norms => "norms",
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One bound evaluation together with the quantity it bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundResult<T> {
    pub kind: BoundKind,
    pub exponent: Option<HolderExponent<T>>,
    pub flavor: Option<Flavor>,
    pub value: T,
    pub lhs: T,
}

impl<T: Real> BoundResult<T> {
    pub fn margin(&self) -> T {
        self.value - self.lhs
    }

    pub fn holds(&self, tol: &Tolerance<T>) -> bool {
        tol.admits(self.lhs, self.value)
    }
}

/// The three terms of the `p = q = 2` refinement of Cauchy–Schwarz.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RefinementChain<T> {
    pub lhs: T,
    pub middle: T,
    pub outer: T,
}

/// Both sides of the power-mean comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerMeanGap<T> {
    pub lhs: T,
    pub rhs: T,
}

fn check_power_mean_range<T: Real>(p: T) -> Result<HolderExponent<T>> {
    let out_of_range = || BoundError::ExponentRange(p.to_f64_lossy());
    if p.is_nan() || p <= T::one() || p > T::lit(2.0) {
        return Err(out_of_range());
    }
    let exp = HolderExponent::new(p)?;
    if exp.branch() == Branch::Sum {
        return Err(out_of_range());
    }
    Ok(exp)
}

/// `n^{2/p − 1}`.
fn power_mean_factor<T: Real>(n: usize, p: T) -> T {
    let n = T::from_usize(n).expect("family size representable");
    n.powf(T::lit(2.0) / p - T::one())
}

fn magnitudes<T: Real>(zs: &[Complex<T>]) -> impl Iterator<Item = T> + Clone + '_ {
    zs.iter().map(|z| z.norm())
}

/// Gram matrix and member norms of one family, reused across bounds.
#[derive(Debug, Clone)]
pub struct FamilyBounds<'a, T> {
    family: &'a VectorFamily<T>,
    gram: GramMatrix<T>,
    norms: Vec<T>,
}

impl<'a, T: Real> FamilyBounds<'a, T> {
    pub fn new(family: &'a VectorFamily<T>) -> Self {
        Self {
            family,
            gram: gram(family),
            norms: family.norms(),
        }
    }

    pub fn family(&self) -> &VectorFamily<T> {
        self.family
    }

    pub fn gram(&self) -> &GramMatrix<T> {
        &self.gram
    }

    fn check_coefficients(&self, c: &[Complex<T>]) -> Result<()> {
        self.family.check_coefficients("coefficients", c.len())?;
        check_finite(c)
    }

    /// `(Σ|g_ij|^q)^{1/q}` for the exponent's `q`.
    fn gram_factor(&self, exp: &HolderExponent<T>) -> T {
        lp_of_magnitudes(magnitudes(self.gram.entries()), exp.q())
    }

    /// Coefficient-independent part times `‖α‖_p²`.
    fn span_factor(&self, alphas: &[Complex<T>], exp: &HolderExponent<T>, flavor: Flavor) -> T {
        let a = lp_of_magnitudes(magnitudes(alphas), exp.p());
        match flavor {
            Flavor::Gram => a * a * self.gram_factor(exp),
            Flavor::Norms => {
                let s = lp_of_magnitudes(self.norms.iter().copied(), exp.q());
                a * a * (s * s)
            }
        }
    }

    fn projections(&self, x: &Vector<T>) -> Result<Vec<Complex<T>>> {
        self.family.check_vector(x)?;
        Ok(self
            .family
            .iter()
            .map(|y| inner_unchecked(x.coords(), y.coords()))
            .collect())
    }

    pub fn lhs_span_sq(&self, alphas: &[Complex<T>]) -> Result<T> {
        self.check_coefficients(alphas)?;
        Ok(norm_sq(&self.family.linear_combination(alphas)?))
    }

    pub fn lhs_combo_sq(&self, x: &Vector<T>, c: &[Complex<T>]) -> Result<T> {
        self.check_coefficients(c)?;
        let proj = self.projections(x)?;
        let s = c
            .iter()
            .zip(&proj)
            .fold(Complex::<T>::zero(), |acc, (&ci, &pi)| acc + ci * pi);
        Ok(s.norm_sqr())
    }

    pub fn lhs_bessel_sum(&self, x: &Vector<T>) -> Result<T> {
        Ok(self.projections(x)?.iter().map(|z| z.norm_sqr()).sum())
    }

    pub fn span(
        &self,
        alphas: &[Complex<T>],
        exp: &HolderExponent<T>,
        flavor: Flavor,
    ) -> Result<BoundResult<T>> {
        let lhs = self.lhs_span_sq(alphas)?;
        Ok(BoundResult {
            kind: match flavor {
                Flavor::Gram => BoundKind::SpanGram,
                Flavor::Norms => BoundKind::SpanNorms,
            },
            exponent: Some(*exp),
            flavor: Some(flavor),
            value: self.span_factor(alphas, exp, flavor),
            lhs,
        })
    }

    /// `‖x‖²` times the span bound at `α_i = conj(c_i)`.
    pub fn combo(
        &self,
        x: &Vector<T>,
        c: &[Complex<T>],
        exp: &HolderExponent<T>,
        flavor: Flavor,
    ) -> Result<BoundResult<T>> {
        let lhs = self.lhs_combo_sq(x, c)?;
        let conj: Vec<_> = c.iter().map(|z| z.conj()).collect();
        Ok(BoundResult {
            kind: match flavor {
                Flavor::Gram => BoundKind::ComboGram,
                Flavor::Norms => BoundKind::ComboNorms,
            },
            exponent: Some(*exp),
            flavor: Some(flavor),
            value: norm_sq(x) * self.span_factor(&conj, exp, flavor),
            lhs,
        })
    }

    pub fn refinement_chain(&self, alphas: &[Complex<T>]) -> Result<RefinementChain<T>> {
        let lhs = self.lhs_span_sq(alphas)?;
        let a2: T = alphas.iter().map(|z| z.norm_sqr()).sum();
        let frob = lp_of_magnitudes(magnitudes(self.gram.entries()), T::lit(2.0));
        let norms2: T = self.norms.iter().map(|&v| v * v).sum();
        Ok(RefinementChain {
            lhs,
            middle: a2 * frob,
            outer: a2 * norms2,
        })
    }

    pub fn bessel_holder(&self, x: &Vector<T>, exp: &HolderExponent<T>) -> Result<BoundResult<T>> {
        let proj = self.projections(x)?;
        let lhs = proj.iter().map(|z| z.norm_sqr()).sum();
        let coeff = lp_of_magnitudes(magnitudes(&proj), exp.p());
        Ok(BoundResult {
            kind: BoundKind::BesselHolder,
            exponent: Some(*exp),
            flavor: None,
            value: norm_sq(x).sqrt() * coeff * self.gram_factor(exp).sqrt(),
            lhs,
        })
    }

    pub fn orthonormal_bessel(
        &self,
        x: &Vector<T>,
        exp: &HolderExponent<T>,
    ) -> Result<BoundResult<T>> {
        if let Some((row, col, dev)) = self.gram.identity_deviation() {
            if dev > T::lit(ORTHONORMAL_TOL) {
                return Err(BoundError::NotOrthonormal {
                    row,
                    col,
                    deviation: dev.to_f64_lossy(),
                });
            }
        }
        let proj = self.projections(x)?;
        let lhs = proj.iter().map(|z| z.norm_sqr()).sum();
        let n = T::from_usize(self.family.len()).expect("family size representable");
        let size_factor = match exp.branch() {
            Branch::Max => n.sqrt(),
            Branch::Sum => T::one(),
            Branch::Holder => n.powf(exp.q_recip() / T::lit(2.0)),
        };
        let coeff = lp_of_magnitudes(magnitudes(&proj), exp.p());
        Ok(BoundResult {
            kind: BoundKind::OrthonormalBessel,
            exponent: Some(*exp),
            flavor: None,
            value: norm_sq(x).sqrt() * size_factor * coeff,
            lhs,
        })
    }

    pub fn bessel_frobenius(&self, x: &Vector<T>) -> Result<BoundResult<T>> {
        let lhs = self.lhs_bessel_sum(x)?;
        let frob = lp_of_magnitudes(magnitudes(self.gram.entries()), T::lit(2.0));
        Ok(BoundResult {
            kind: BoundKind::BesselFrobenius,
            exponent: Some(HolderExponent::new(T::lit(2.0))?),
            flavor: None,
            value: norm_sq(x) * frob,
            lhs,
        })
    }

    /// Requires `1 < p ≤ 2`; other exponents are rejected, not extended.
    pub fn bessel_power_mean(&self, x: &Vector<T>, p: T) -> Result<BoundResult<T>> {
        let exp = check_power_mean_range(p)?;
        let lhs = self.lhs_bessel_sum(x)?;
        let value = if self.family.is_empty() {
            T::zero()
        } else {
            power_mean_factor(self.family.len(), exp.p()) * norm_sq(x) * self.gram_factor(&exp)
        };
        Ok(BoundResult {
            kind: BoundKind::BesselPowerMean,
            exponent: Some(exp),
            flavor: None,
            value,
            lhs,
        })
    }

    pub fn bombieri(&self, x: &Vector<T>) -> Result<BoundResult<T>> {
        let lhs = self.lhs_bessel_sum(x)?;
        Ok(BoundResult {
            kind: BoundKind::Bombieri,
            exponent: None,
            flavor: None,
            value: norm_sq(x) * max_row_abs_sum(&self.gram),
            lhs,
        })
    }

    /// The power-mean step on the moduli `|(x, y_i)|`.
    pub fn power_mean(&self, x: &Vector<T>, p: T) -> Result<PowerMeanGap<T>> {
        let moduli: Vec<T> = self.projections(x)?.iter().map(|z| z.norm()).collect();
        power_mean_gap(&moduli, p)
    }
}

pub fn lhs_span_sq<T: Real>(alphas: &[Complex<T>], family: &VectorFamily<T>) -> Result<T> {
    FamilyBounds::new(family).lhs_span_sq(alphas)
}

pub fn lhs_combo_sq<T: Real>(
    x: &Vector<T>,
    family: &VectorFamily<T>,
    c: &[Complex<T>],
) -> Result<T> {
    FamilyBounds::new(family).lhs_combo_sq(x, c)
}

pub fn lhs_bessel_sum<T: Real>(x: &Vector<T>, family: &VectorFamily<T>) -> Result<T> {
    FamilyBounds::new(family).lhs_bessel_sum(x)
}

pub fn bound_span<T: Real>(
    alphas: &[Complex<T>],
    family: &VectorFamily<T>,
    exp: &HolderExponent<T>,
    flavor: Flavor,
) -> Result<BoundResult<T>> {
    FamilyBounds::new(family).span(alphas, exp, flavor)
}

pub fn bound_combo<T: Real>(
    x: &Vector<T>,
    family: &VectorFamily<T>,
    c: &[Complex<T>],
    exp: &HolderExponent<T>,
    flavor: Flavor,
) -> Result<BoundResult<T>> {
    FamilyBounds::new(family).combo(x, c, exp, flavor)
}

pub fn bound_refinement_chain<T: Real>(
    alphas: &[Complex<T>],
    family: &VectorFamily<T>,
) -> Result<RefinementChain<T>> {
    FamilyBounds::new(family).refinement_chain(alphas)
}

pub fn bound_bessel_holder<T: Real>(
    x: &Vector<T>,
    family: &VectorFamily<T>,
    exp: &HolderExponent<T>,
) -> Result<BoundResult<T>> {
    FamilyBounds::new(family).bessel_holder(x, exp)
}

pub fn bound_orthonormal_bessel<T: Real>(
    x: &Vector<T>,
    family: &VectorFamily<T>,
    exp: &HolderExponent<T>,
) -> Result<BoundResult<T>> {
    FamilyBounds::new(family).orthonormal_bessel(x, exp)
}

pub fn bound_bessel_frobenius<T: Real>(
    x: &Vector<T>,
    family: &VectorFamily<T>,
) -> Result<BoundResult<T>> {
    FamilyBounds::new(family).bessel_frobenius(x)
}

pub fn bound_bessel_power_mean<T: Real>(
    x: &Vector<T>,
    family: &VectorFamily<T>,
    p: T,
) -> Result<BoundResult<T>> {
    FamilyBounds::new(family).bessel_power_mean(x, p)
}

pub fn bound_bombieri<T: Real>(x: &Vector<T>, family: &VectorFamily<T>) -> Result<BoundResult<T>> {
    FamilyBounds::new(family).bombieri(x)
}

/// `lhs = (Σ v_i^p)^{2/p}`, `rhs = n^{2/p−1} Σ v_i²` for `1 < p ≤ 2`.
pub fn power_mean_gap<T: Real>(values: &[T], p: T) -> Result<PowerMeanGap<T>> {
    let exp = check_power_mean_range(p)?;
    for (i, &v) in values.iter().enumerate() {
        if !v.is_finite() || v < T::zero() {
            return Err(BoundError::Domain(format!(
                "power mean value {i} must be finite and nonnegative, got {v}"
            )));
        }
    }
    if values.is_empty() {
        return Ok(PowerMeanGap {
            lhs: T::zero(),
            rhs: T::zero(),
        });
    }
    let norm_p = lp_of_magnitudes(values.iter().copied(), exp.p());
    let sum_sq: T = values.iter().map(|&v| v * v).sum();
    Ok(PowerMeanGap {
        lhs: norm_p * norm_p,
        rhs: power_mean_factor(values.len(), exp.p()) * sum_sq,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const INF: f64 = f64::INFINITY;

    fn re(xs: &[f64]) -> Vec<Complex<f64>> {
        xs.iter().map(|&x| Complex::new(x, 0.0)).collect()
    }

    fn v(xs: &[f64]) -> Vector<f64> {
        Vector::from_real(xs).unwrap()
    }

    fn fam<R: AsRef<[f64]>>(dim: usize, rows: &[R]) -> VectorFamily<f64> {
        VectorFamily::from_real_rows(dim, rows).unwrap()
    }

    fn e2() -> VectorFamily<f64> {
        fam(2, &[[1.0, 0.0], [0.0, 1.0]])
    }

    fn hx(p: f64) -> HolderExponent<f64> {
        HolderExponent::new(p).unwrap()
    }

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * a.abs().max(b.abs()).max(1e-300)
    }

    #[test]
    fn lhs_examples() {
        let ones = fam(1, &[[1.0], [1.0]]);
        assert_eq!(lhs_span_sq(&re(&[1.0, 1.0]), &ones).unwrap(), 4.0);
        assert_eq!(lhs_span_sq(&re(&[1.0, -1.0]), &ones).unwrap(), 0.0);
        assert_eq!(lhs_span_sq(&re(&[1.0, 1.0]), &e2()).unwrap(), 2.0);

        assert_eq!(
            lhs_combo_sq(&v(&[1.0]), &ones, &re(&[1.0, 1.0])).unwrap(),
            4.0
        );
        assert_eq!(
            lhs_combo_sq(&v(&[7.0]), &ones, &re(&[0.0, 0.0])).unwrap(),
            0.0
        );
        assert_eq!(
            lhs_combo_sq(&v(&[1.0, 0.0]), &e2(), &re(&[2.0, 5.0])).unwrap(),
            4.0
        );

        assert_eq!(lhs_bessel_sum(&v(&[1.0, 0.0]), &e2()).unwrap(), 1.0);
        assert_eq!(lhs_bessel_sum(&v(&[0.0, 0.0]), &e2()).unwrap(), 0.0);
        let ab = fam(1, &[[1.0], [0.5]]);
        assert_eq!(lhs_bessel_sum(&v(&[2.0]), &ab).unwrap(), 5.0);
    }

    #[test]
    fn shape_and_dimension_errors() {
        let ones = fam(1, &[[1.0], [1.0]]);
        assert!(matches!(
            lhs_span_sq(&re(&[1.0]), &ones),
            Err(BoundError::Shape {
                expected: 2,
                found: 1,
                ..
            })
        ));
        assert!(matches!(
            lhs_bessel_sum(&v(&[1.0, 2.0]), &ones),
            Err(BoundError::Dimension {
                expected: 1,
                found: 2
            })
        ));
        assert!(matches!(
            bound_combo(
                &v(&[1.0]),
                &ones,
                &re(&[1.0, 2.0, 3.0]),
                &hx(2.0),
                Flavor::Gram
            ),
            Err(BoundError::Shape { .. })
        ));
        let bad = vec![Complex::new(f64::NAN, 0.0), Complex::new(0.0, 0.0)];
        assert!(matches!(
            bound_span(&bad, &ones, &hx(2.0), Flavor::Gram),
            Err(BoundError::NonFinite(0))
        ));
    }

    #[test]
    fn span_examples() {
        let ones = fam(1, &[[1.0], [1.0]]);
        let r = bound_span(
            &re(&[1.0, 1.0]),
            &ones,
            &HolderExponent::infinity(),
            Flavor::Gram,
        )
        .unwrap();
        assert_eq!((r.value, r.lhs), (4.0, 4.0));
        let r = bound_span(
            &re(&[1.0, 1.0]),
            &ones,
            &HolderExponent::one(),
            Flavor::Gram,
        )
        .unwrap();
        assert_eq!(r.value, 4.0);
        let r = bound_span(&re(&[1.0, 1.0]), &e2(), &hx(2.0), Flavor::Gram).unwrap();
        assert!(close(r.value, 2.0 * 2f64.sqrt(), 1e-15));
        assert_eq!(r.lhs, 2.0);
        assert_eq!(r.kind, BoundKind::SpanGram);
    }

    #[test]
    fn span_norm_flavor_lines() {
        // z = (1), (2); α = (1, 3)
        let f = fam(1, &[[1.0], [2.0]]);
        let a = re(&[1.0, 3.0]);
        let at = |p: f64| bound_span(&a, &f, &hx(p), Flavor::Norms).unwrap().value;
        // p = ∞: max|α|² (Σ‖z‖)² = 9·9
        assert_eq!(at(INF), 81.0);
        // p = 1: (Σ|α|)² max‖z‖² = 16·4
        assert_eq!(at(1.0), 64.0);
        // p = 2: Σ|α|² Σ‖z‖² = 10·5
        assert!(close(at(2.0), 50.0, 1e-15));
    }

    #[test]
    fn combo_examples() {
        let ones = fam(1, &[[1.0], [1.0]]);
        let r = bound_combo(
            &v(&[1.0]),
            &ones,
            &re(&[1.0, 1.0]),
            &HolderExponent::infinity(),
            Flavor::Gram,
        )
        .unwrap();
        assert_eq!((r.value, r.lhs), (4.0, 4.0));
        let r = bound_combo(
            &v(&[0.0]),
            &ones,
            &re(&[3.0, -2.0]),
            &hx(1.7),
            Flavor::Norms,
        )
        .unwrap();
        assert_eq!(r.value, 0.0);
        let r = bound_combo(
            &v(&[1.0, 0.0]),
            &e2(),
            &re(&[1.0, 1.0]),
            &hx(2.0),
            Flavor::Gram,
        )
        .unwrap();
        assert!(close(r.value, 2.0 * 2f64.sqrt(), 1e-15));
        assert_eq!(r.lhs, 1.0);
    }

    #[test]
    fn refinement_chain_examples() {
        let ch = bound_refinement_chain(&re(&[1.0, 1.0]), &e2()).unwrap();
        assert!(close(ch.middle, 2.0 * 2f64.sqrt(), 1e-15));
        assert_eq!(ch.outer, 4.0);
        let ch = bound_refinement_chain(&re(&[1.0]), &fam(1, &[[1.0]])).unwrap();
        assert_eq!((ch.lhs, ch.middle, ch.outer), (1.0, 1.0, 1.0));
        let ch = bound_refinement_chain(&re(&[1.0, 1.0]), &fam(1, &[[1.0], [1.0]])).unwrap();
        assert_eq!((ch.lhs, ch.middle, ch.outer), (4.0, 4.0, 4.0));
    }

    #[test]
    fn bessel_holder_examples() {
        let r = bound_bessel_holder(&v(&[1.0, 0.0]), &e2(), &hx(2.0)).unwrap();
        assert!(close(r.value, 2f64.powf(0.25), 1e-15));
        assert_eq!(r.lhs, 1.0);
        for p in [1.0, 1.5, 2.0, INF] {
            assert_eq!(
                bound_bessel_holder(&v(&[0.0, 0.0]), &e2(), &hx(p))
                    .unwrap()
                    .value,
                0.0
            );
        }
        let r = bound_bessel_holder(&v(&[1.0]), &fam(1, &[[1.0]]), &HolderExponent::one()).unwrap();
        assert_eq!((r.value, r.lhs), (1.0, 1.0));
    }

    #[test]
    fn orthonormal_examples() {
        let x = v(&[1.0, 0.0]);
        let r = bound_orthonormal_bessel(&x, &e2(), &HolderExponent::infinity()).unwrap();
        assert!(close(r.value, 2f64.sqrt(), 1e-15));
        let r = bound_orthonormal_bessel(&x, &e2(), &HolderExponent::one()).unwrap();
        assert_eq!((r.value, r.lhs), (1.0, 1.0));
        let r = bound_orthonormal_bessel(&v(&[1.0, 1.0]), &e2(), &hx(2.0)).unwrap();
        assert!(close(r.value, 2f64.powf(1.25), 1e-15));
        assert_eq!(r.lhs, 2.0);
    }

    #[test]
    fn orthonormal_rejects_non_orthonormal() {
        let f = fam(2, &[[1.0, 0.0], [1.0, 1.0]]);
        let err = bound_orthonormal_bessel(&v(&[1.0, 0.0]), &f, &hx(2.0)).unwrap_err();
        assert!(matches!(err, BoundError::NotOrthonormal { .. }));
    }

    #[test]
    fn frobenius_examples() {
        let r = bound_bessel_frobenius(&v(&[1.0, 0.0]), &e2()).unwrap();
        assert!(close(r.value, 2f64.sqrt(), 1e-15));
        assert_eq!(r.lhs, 1.0);
        assert_eq!(
            bound_bessel_frobenius(&v(&[0.0, 0.0]), &e2())
                .unwrap()
                .value,
            0.0
        );
        let r = bound_bessel_frobenius(&v(&[1.0]), &fam(1, &[[1.0], [0.5]])).unwrap();
        assert_eq!((r.value, r.lhs), (1.25, 1.25));
    }

    #[test]
    fn power_mean_bound_examples() {
        let ab = fam(1, &[[1.0], [0.5]]);
        assert_eq!(
            bound_bessel_power_mean(&v(&[1.0]), &ab, 2.0).unwrap().value,
            1.25
        );

        // 50-digit reference: 2^{2/1.1−1}·(1 + 2·0.1^11 + 0.01^11)^{1/11}
        let r = bound_bessel_power_mean(&v(&[1.0]), &fam(1, &[[1.0], [0.1]]), 1.1).unwrap();
        assert!(close(r.value, 1.763_182_509_995_248_2, 1e-13));

        for p in [1.01, 1.3, 2.0] {
            let r = bound_bessel_power_mean(&v(&[1.0]), &fam(1, &[[1.0]]), p).unwrap();
            assert_eq!((r.value, r.lhs), (1.0, 1.0));
        }
    }

    #[test]
    fn power_mean_bound_range() {
        let ab = fam(1, &[[1.0], [0.5]]);
        for p in [1.0, 1.0 + 1e-13, 0.5, 2.0001, INF, f64::NAN] {
            assert!(
                matches!(
                    bound_bessel_power_mean(&v(&[1.0]), &ab, p),
                    Err(BoundError::ExponentRange(_))
                ),
                "p = {p}"
            );
        }
    }

    #[test]
    fn bombieri_examples() {
        let r = bound_bombieri(&v(&[0.6, 0.8]), &e2()).unwrap();
        assert!(close(r.value, 1.0, 1e-15));
        let ab = fam(1, &[[1.0], [0.5]]);
        assert_eq!(bound_bombieri(&v(&[1.0]), &ab).unwrap().value, 1.5);
        let r = bound_bombieri(&v(&[2.0]), &ab).unwrap();
        assert_eq!((r.value, r.lhs), (6.0, 5.0));
    }

    #[test]
    fn power_mean_gap_examples() {
        let g = power_mean_gap(&[1.0, 1.0], 2.0).unwrap();
        assert!(close(g.lhs, 2.0, 1e-15));
        assert_eq!(g.rhs, 2.0);
        for p in [1.1, 1.5, 2.0] {
            let g = power_mean_gap(&[0.7; 5], p).unwrap();
            assert!(close(g.lhs, g.rhs, 1e-14), "p = {p}: {g:?}");
        }
        // 50-digit references
        let g = power_mean_gap(&[1.0, 0.5], 1.5).unwrap();
        assert!(close(g.lhs, 1.497_271_373_878_986_5, 1e-14));
        assert!(close(g.rhs, 1.574_901_312_368_591_5, 1e-14));
    }

    #[test]
    fn power_mean_gap_errors() {
        assert!(matches!(
            power_mean_gap(&[1.0], 1.0),
            Err(BoundError::ExponentRange(_))
        ));
        assert!(matches!(
            power_mean_gap(&[1.0, -0.1], 1.5),
            Err(BoundError::Domain(_))
        ));
        let g = power_mean_gap::<f64>(&[], 1.5).unwrap();
        assert_eq!((g.lhs, g.rhs), (0.0, 0.0));
    }

    #[test]
    fn empty_family_bounds_are_zero() {
        let f = VectorFamily::<f64>::new(crate::space::Field::Real, 2, vec![]).unwrap();
        let x = v(&[1.0, 2.0]);
        let fb = FamilyBounds::new(&f);
        for p in [1.0, 1.5, 2.0, INF] {
            let e = hx(p);
            for fl in [Flavor::Gram, Flavor::Norms] {
                let r = fb.span(&[], &e, fl).unwrap();
                assert_eq!((r.value, r.lhs), (0.0, 0.0));
                let r = fb.combo(&x, &[], &e, fl).unwrap();
                assert_eq!((r.value, r.lhs), (0.0, 0.0));
            }
            assert_eq!(fb.bessel_holder(&x, &e).unwrap().value, 0.0);
            assert_eq!(fb.orthonormal_bessel(&x, &e).unwrap().value, 0.0);
        }
        assert_eq!(fb.bessel_power_mean(&x, 1.5).unwrap().value, 0.0);
        assert_eq!(fb.bombieri(&x).unwrap().value, 0.0);
        assert_eq!(fb.bessel_frobenius(&x).unwrap().value, 0.0);
    }

    #[test]
    fn kind_ids_round_trip() {
        for k in BoundKind::ALL {
            assert_eq!(BoundKind::from_id(k.id()), Some(k));
        }
        assert_eq!(BoundKind::from_id("nope"), None);
    }
}
