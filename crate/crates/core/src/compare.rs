//! Comparison of the classical Bombieri factor
//! `M1 = max_i Σ_j |g_ij|` with the power-mean factor
//! `M2 = n^{2/p−1} (Σ_{i,j} |g_ij|^q)^{1/q}`.
//!
//! On the one-dimensional two-vector families `y_1 = 1, y_2 = b` the gap
//! `M2 − M1` has the closed form
//! `f(b, p) = 2^{2/p−1} (1 + b^q)^{2/q} − 1 − b`, which takes both signs on
//! `[0, 1] × (1, 2]`, so neither bound dominates the other.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{BoundError, Result};
use crate::norms::{gram_entry_qnorm, max_row_abs_sum, Branch, HolderExponent};
use crate::scalar::Real;
use crate::space::{gram, GramMatrix, VectorFamily};

/// Cells with `|f| <= ZERO_TOL` count as zero in a scan.
pub const ZERO_TOL: f64 = 1e-12;

/// Minimum `|M2 − M1|` for a sample to count as a witness.
pub const DOMINANCE_TOL: f64 = 1e-9;

fn check_p<T: Real>(p: T) -> Result<HolderExponent<T>> {
    if p.is_nan() || p <= T::one() || p > T::lit(2.0) {
        return Err(BoundError::ExponentRange(p.to_f64_lossy()));
    }
    let exp = HolderExponent::new(p)?;
    if exp.branch() == Branch::Sum {
        return Err(BoundError::ExponentRange(p.to_f64_lossy()));
    }
    Ok(exp)
}

pub fn m1<T: Real>(g: &GramMatrix<T>) -> T {
    max_row_abs_sum(g)
}

/// `n^{2/p−1} · (Σ|g_ij|^q)^{1/q}` for `1 < p ≤ 2`.
pub fn m2<T: Real>(g: &GramMatrix<T>, p: T) -> Result<T> {
    let exp = check_p(p)?;
    if g.n() == 0 {
        return Ok(T::zero());
    }
    let n = T::from_usize(g.n()).expect("family size representable");
    let factor = n.powf(T::lit(2.0) / exp.p() - T::one());
    Ok(factor * gram_entry_qnorm(g, exp.q())?)
}

/// The family `y_1 = (1), y_2 = (b)` in one real dimension.
pub fn two_point_family<T: Real>(b: T) -> Result<VectorFamily<T>> {
    VectorFamily::from_real_rows(1, &[[T::one()], [b]])
}

/// `M2 − M1` evaluated through the Gram matrix of [`two_point_family`].
pub fn gap_from_gram<T: Real>(b: T, p: T) -> Result<T> {
    let g = gram(&two_point_family(b)?);
    Ok(m2(&g, p)? - m1(&g))
}

/// Closed form of `M2 − M1` for `a = 1`, `b ∈ [0, 1]`, `p ∈ (1, 2]`.
pub fn f_comparison<T: Real>(b: T, p: T) -> Result<T> {
    if !(b >= T::zero() && b <= T::one()) {
        return Err(BoundError::Domain(format!("b = {b} outside [0, 1]")));
    }
    let exp = check_p(p).map_err(|_| BoundError::Domain(format!("p = {p} outside (1, 2]")))?;
    let two = T::lit(2.0);
    // b^q at b = 0 is 0 for every q > 0
    let bq = b.powf(exp.q());
    let lead = two.powf(two / exp.p() - T::one());
    Ok(lead * (T::one() + bq).powf(two * exp.q_recip()) - T::one() - b)
}

/// Grid for [`scan_f`]: `nb` points evenly spaced on `[0, 1]` for `b` and
/// `np` points evenly spaced on `[1 + eps, 2]` for `p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanConfig {
    pub nb: usize,
    pub np: usize,
    pub eps: f64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self {
            nb: 201,
            np: 100,
            eps: 0.01,
        }
    }
}

impl ScanConfig {
    pub fn validate(&self) -> Result<()> {
        if self.nb < 2 || self.np < 2 {
            return Err(BoundError::Domain(format!(
                "scan grid needs at least 2 points per axis, got nb = {}, np = {}",
                self.nb, self.np
            )));
        }
        if !(self.eps > 0.0 && self.eps <= 1.0) {
            return Err(BoundError::Domain(format!(
                "eps = {} outside (0, 1]",
                self.eps
            )));
        }
        Ok(())
    }

    pub fn grid_b<T: Real>(&self) -> Vec<T> {
        linspace(T::zero(), T::one(), self.nb)
    }

    pub fn grid_p<T: Real>(&self) -> Vec<T> {
        linspace(T::one() + T::lit(self.eps), T::lit(2.0), self.np)
    }
}

fn linspace<T: Real>(lo: T, hi: T, n: usize) -> Vec<T> {
    let steps = T::from_usize(n - 1).expect("grid size representable");
    (0..n)
        .map(|i| {
            if i + 1 == n {
                hi
            } else {
                lo + (hi - lo) * T::from_usize(i).expect("grid index representable") / steps
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanCell<T> {
    pub b: T,
    pub p: T,
    pub value: T,
}

/// `f(b, p)` on a grid, with sign counts and extremal cells.
#[derive(Debug, Clone, PartialEq)]
pub struct SignScanReport<T> {
    pub grid_b: Vec<T>,
    pub grid_p: Vec<T>,
    /// `values[i][j] = f(grid_b[i], grid_p[j])`.
    pub values: Vec<Vec<T>>,
    pub n_positive: usize,
    pub n_negative: usize,
    pub n_zero: usize,
    pub min_cell: ScanCell<T>,
    pub max_cell: ScanCell<T>,
}

impl<T: Real> SignScanReport<T> {
    /// Cells in row-major order, `b` outer and `p` inner.
    pub fn cells(&self) -> impl Iterator<Item = ScanCell<T>> + '_ {
        self.grid_b
            .iter()
            .zip(&self.values)
            .flat_map(move |(&b, row)| {
                self.grid_p
                    .iter()
                    .zip(row)
                    .map(move |(&p, &value)| ScanCell { b, p, value })
            })
    }

    pub fn both_signs(&self) -> bool {
        self.n_positive > 0 && self.n_negative > 0
    }

    pub fn len(&self) -> usize {
        self.grid_b.len() * self.grid_p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn scan_f<T: Real>(config: &ScanConfig) -> Result<SignScanReport<T>> {
    config.validate()?;
    scan_grid(config.grid_b(), config.grid_p())
}

/// Evaluates `f` on an arbitrary nonempty grid inside the domain.
pub fn scan_grid<T: Real>(grid_b: Vec<T>, grid_p: Vec<T>) -> Result<SignScanReport<T>> {
    if grid_b.is_empty() || grid_p.is_empty() {
        return Err(BoundError::Domain("scan grid is empty".into()));
    }
    let values = grid_b
        .iter()
        .map(|&b| grid_p.iter().map(|&p| f_comparison(b, p)).collect())
        .collect::<Result<Vec<Vec<T>>>>()?;

    let tol = T::lit(ZERO_TOL);
    let first = ScanCell {
        b: grid_b[0],
        p: grid_p[0],
        value: values[0][0],
    };
    let mut report = SignScanReport {
        grid_b,
        grid_p,
        values,
        n_positive: 0,
        n_negative: 0,
        n_zero: 0,
        min_cell: first,
        max_cell: first,
    };
    let (mut lo, mut hi) = (first, first);
    let (mut pos, mut neg, mut zero) = (0, 0, 0);
    for cell in report.cells() {
        if cell.value > tol {
            pos += 1;
        } else if cell.value < -tol {
            neg += 1;
        } else {
            zero += 1;
        }
        if cell.value < lo.value {
            lo = cell;
        }
        if cell.value > hi.value {
            hi = cell;
        }
    }
    report.n_positive = pos;
    report.n_negative = neg;
    report.n_zero = zero;
    report.min_cell = lo;
    report.max_cell = hi;
    Ok(report)
}

/// Two families at the same `p` on which `M2 − M1` has opposite signs.
#[derive(Debug, Clone, PartialEq)]
pub struct DominancePair<T> {
    pub p: T,
    pub b_a: T,
    pub b_b: T,
    pub family_a: VectorFamily<T>,
    pub family_b: VectorFamily<T>,
    pub m1_a: T,
    pub m2_a: T,
    pub m1_b: T,
    pub m2_b: T,
}

impl<T: Real> DominancePair<T> {
    pub fn gap_a(&self) -> T {
        self.m2_a - self.m1_a
    }

    pub fn gap_b(&self) -> T {
        self.m2_b - self.m1_b
    }

    /// Recomputes both gaps from the stored families' Gram matrices and
    /// checks they have strictly opposite signs beyond [`DOMINANCE_TOL`].
    pub fn reverify(&self) -> bool {
        let gap = |f: &VectorFamily<T>| -> Option<T> {
            let g = gram(f);
            Some(m2(&g, self.p).ok()? - m1(&g))
        };
        let tol = T::lit(DOMINANCE_TOL);
        match (gap(&self.family_a), gap(&self.family_b)) {
            (Some(a), Some(b)) => (a > tol && b < -tol) || (a < -tol && b > tol),
            _ => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum DominanceOutcome<T> {
    Found(DominancePair<T>),
    NotFound { trials: usize },
}

impl<T> DominanceOutcome<T> {
    pub fn pair(&self) -> Option<&DominancePair<T>> {
        match self {
            DominanceOutcome::Found(pair) => Some(pair),
            DominanceOutcome::NotFound { .. } => None,
        }
    }
}

struct Sample<T> {
    b: T,
    family: VectorFamily<T>,
    m1: T,
    m2: T,
}

/// Draws `b` uniformly from `[0, 1)` until one family with `M2 > M1` and one
/// with `M2 < M1` (each by more than [`DOMINANCE_TOL`]) have been seen.
///
/// Deterministic for a given seed. The returned pair lists the positive-gap
/// family first.
pub fn dominance_search<T: Real>(
    seed: u64,
    max_trials: usize,
    p: T,
) -> Result<DominanceOutcome<T>> {
    check_p(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tol = T::lit(DOMINANCE_TOL);
    let mut positive: Option<Sample<T>> = None;
    let mut negative: Option<Sample<T>> = None;

    for _ in 0..max_trials {
        let b = T::lit(rng.random::<f64>());
        let family = two_point_family(b)?;
        let g = gram(&family);
        let (m1, m2) = (m1(&g), m2(&g, p)?);
        let gap = m2 - m1;
        let sample = Sample { b, family, m1, m2 };
        if gap > tol && positive.is_none() {
            positive = Some(sample);
        } else if gap < -tol && negative.is_none() {
            negative = Some(sample);
        }
        if let (Some(a), Some(b)) = (&positive, &negative) {
            return Ok(DominanceOutcome::Found(DominancePair {
                p,
                b_a: a.b,
                b_b: b.b,
                family_a: a.family.clone(),
                family_b: b.family.clone(),
                m1_a: a.m1,
                m2_a: a.m2,
                m1_b: b.m1,
                m2_b: b.m2,
            }));
        }
    }
    Ok(DominanceOutcome::NotFound { trials: max_trials })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank_one(b: f64) -> GramMatrix<f64> {
        gram(&two_point_family(b).unwrap())
    }

    #[test]
    fn m1_examples() {
        assert_eq!(m1(&rank_one(0.5)), 1.5);
        assert_eq!(m1(&GramMatrix::<f64>::identity(3)), 1.0);
        assert!((m1(&rank_one(0.1)) - 1.1).abs() < 1e-15);
    }

    #[test]
    fn m2_examples() {
        assert_eq!(m2(&rank_one(0.5), 2.0).unwrap(), 1.25);
        assert!((m2(&GramMatrix::<f64>::identity(2), 2.0).unwrap() - 2f64.sqrt()).abs() < 1e-15);
        // 50-digit reference value
        let got = m2(&rank_one(0.1), 1.1).unwrap();
        assert!((got - 1.763_182_509_995_248_2).abs() < 1e-13);
        assert!(matches!(
            m2(&rank_one(0.1), 1.0),
            Err(BoundError::ExponentRange(_))
        ));
        assert!(matches!(
            m2(&rank_one(0.1), 2.5),
            Err(BoundError::ExponentRange(_))
        ));
    }

    #[test]
    fn f_examples() {
        for p in [1.1, 1.5, 2.0] {
            assert!(f_comparison(1.0f64, p).unwrap().abs() <= 1e-12, "p = {p}");
        }
        assert!((f_comparison(0.5f64, 2.0).unwrap() + 0.25).abs() <= 1e-15);
        // 50-digit reference value
        assert!((f_comparison(0.1f64, 1.1).unwrap() - 0.663_182_509_995_248_2).abs() < 1e-13);
        assert_eq!(f_comparison(0.0, 2.0).unwrap(), 0.0);
    }

    #[test]
    fn f_domain_errors() {
        assert!(matches!(
            f_comparison(-0.1, 1.5),
            Err(BoundError::Domain(_))
        ));
        assert!(matches!(f_comparison(1.1, 1.5), Err(BoundError::Domain(_))));
        assert!(matches!(f_comparison(0.5, 1.0), Err(BoundError::Domain(_))));
        assert!(matches!(f_comparison(0.5, 2.1), Err(BoundError::Domain(_))));
        assert!(matches!(
            f_comparison(f64::NAN, 1.5),
            Err(BoundError::Domain(_))
        ));
    }

    #[test]
    fn scan_default_grid_finds_both_signs() {
        let r = scan_f::<f64>(&ScanConfig::default()).unwrap();
        assert_eq!(r.len(), 201 * 100);
        assert_eq!(r.n_positive + r.n_negative + r.n_zero, r.len());
        assert!(r.both_signs());
        assert!(r.min_cell.value <= 0.0 && r.max_cell.value >= 0.0);
        assert_eq!(r.grid_p[0], 1.01);
        assert_eq!(*r.grid_p.last().unwrap(), 2.0);
        assert_eq!(*r.grid_b.last().unwrap(), 1.0);
    }

    #[test]
    fn scan_corners_hit_zero_line() {
        let r = scan_f::<f64>(&ScanConfig {
            nb: 2,
            np: 2,
            eps: 0.01,
        })
        .unwrap();
        assert!(r.n_zero >= 2);
    }

    #[test]
    fn scan_at_p_two_has_no_positive_cells() {
        let r = scan_f::<f64>(&ScanConfig {
            nb: 51,
            np: 3,
            eps: 1.0,
        })
        .unwrap();
        assert!(r.grid_p.iter().all(|&p| p == 2.0));
        assert_eq!(r.n_positive, 0);
        assert!(r.n_negative > 0);
    }

    #[test]
    fn scan_rejects_bad_config() {
        assert!(scan_f::<f64>(&ScanConfig {
            nb: 1,
            np: 5,
            eps: 0.01
        })
        .is_err());
        assert!(scan_f::<f64>(&ScanConfig {
            nb: 5,
            np: 1,
            eps: 0.01
        })
        .is_err());
        assert!(scan_f::<f64>(&ScanConfig {
            nb: 5,
            np: 5,
            eps: 0.0
        })
        .is_err());
        assert!(scan_f::<f64>(&ScanConfig {
            nb: 5,
            np: 5,
            eps: 1.5
        })
        .is_err());
    }

    #[test]
    fn dominance_at_low_p() {
        let out = dominance_search::<f64>(7, 10_000, 1.1).unwrap();
        let pair = out.pair().expect("witness pair");
        assert!(pair.gap_a() > DOMINANCE_TOL && pair.gap_b() < -DOMINANCE_TOL);
        assert!(pair.reverify());
    }

    #[test]
    fn dominance_at_p_two_not_found() {
        let out = dominance_search::<f64>(7, 2_000, 2.0).unwrap();
        assert_eq!(out, DominanceOutcome::NotFound { trials: 2_000 });
    }

    #[test]
    fn dominance_is_deterministic() {
        let a = dominance_search::<f64>(99, 1000, 1.5).unwrap();
        let b = dominance_search::<f64>(99, 1000, 1.5).unwrap();
        assert_eq!(a, b);
        assert!(a.pair().is_some());
    }

    #[test]
    fn gap_near_one_is_negative_at_low_p() {
        assert!(gap_from_gram(0.999, 1.1).unwrap() < 0.0);
        assert!(gap_from_gram(0.1, 1.1).unwrap() > 0.6);
    }
}
