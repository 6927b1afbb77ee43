//! Random instance generation and batch checking of every bound.

use std::fmt;

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::bounds::{BoundKind, BoundResult, FamilyBounds, Flavor, ORTHONORMAL_TOL};
use crate::error::{BoundError, Result};
use crate::norms::HolderExponent;
use crate::scalar::Real;
use crate::space::{gram, inner_unchecked, norm, Field, Vector, VectorFamily};

pub const DEFAULT_REL_TOL: f64 = 1e-10;
pub const DEFAULT_ABS_TOL: f64 = 1e-12;

pub const MAX_DIM: usize = 16;
pub const MAX_N: usize = 32;

/// Slack for `lhs ≤ rhs` checks: passes iff `lhs ≤ rhs·(1 + rel) + abs`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance<T> {
    pub rel: T,
    pub abs: T,
}

impl<T: Real> Default for Tolerance<T> {
    fn default() -> Self {
        Self {
            rel: T::lit(DEFAULT_REL_TOL),
            abs: T::lit(DEFAULT_ABS_TOL),
        }
    }
}

impl<T: Real> Tolerance<T> {
    pub fn admits(&self, lhs: T, rhs: T) -> bool {
        lhs <= rhs * (T::one() + self.rel) + self.abs
    }
}

/// Parameters of one random instance; enough to replay it exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilySpec {
    pub dim: usize,
    pub n: usize,
    pub field: Field,
    pub scale: f64,
    pub seed: u64,
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        if !(1..=MAX_DIM).contains(&self.dim) {
            return Err(BoundError::Domain(format!(
                "dim {} outside 1..={MAX_DIM}",
                self.dim
            )));
        }
        if self.n > MAX_N {
            return Err(BoundError::Domain(format!(
                "n {} outside 0..={MAX_N}",
                self.n
            )));
        }
        if !(self.scale.is_finite() && self.scale > 0.0) {
            return Err(BoundError::Domain(format!(
                "scale {} must be positive",
                self.scale
            )));
        }
        Ok(())
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "seed={},dim={},n={},field={},scale={}",
            self.seed, self.dim, self.n, self.field, self.scale
        )
    }
}

/// A test point `x`, a family `y_1..y_n`, and coefficients `c_1..c_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance<T> {
    pub x: Vector<T>,
    pub family: VectorFamily<T>,
    pub coeffs: Vec<Complex<T>>,
}

fn draw_scalar<T: Real>(rng: &mut ChaCha8Rng, field: Field, scale: f64) -> Complex<T> {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = match field {
        Field::Real => 0.0,
        Field::Complex => rng.sample(StandardNormal),
    };
    Complex::new(T::lit(re * scale), T::lit(im * scale))
}

fn draw_vector<T: Real>(
    rng: &mut ChaCha8Rng,
    dim: usize,
    field: Field,
    scale: f64,
) -> Result<Vector<T>> {
    Vector::new((0..dim).map(|_| draw_scalar(rng, field, scale)).collect())
}

/// I.i.d. standard normal coordinates scaled by `spec.scale`, drawn in the
/// order `x`, `y_1..y_n`, `c`.
pub fn random_family<T: Real>(spec: &FamilySpec) -> Result<Instance<T>> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let x = draw_vector(&mut rng, spec.dim, spec.field, spec.scale)?;
    let vectors = (0..spec.n)
        .map(|_| draw_vector(&mut rng, spec.dim, spec.field, spec.scale))
        .collect::<Result<Vec<_>>>()?;
    let coeffs = (0..spec.n)
        .map(|_| draw_scalar(&mut rng, spec.field, spec.scale))
        .collect();
    Ok(Instance {
        x,
        family: VectorFamily::new(spec.field, spec.dim, vectors)?,
        coeffs,
    })
}

/// `n <= dim` orthonormal vectors from Gram–Schmidt (two passes) applied to
/// Gaussian draws.
pub fn random_orthonormal_family<T: Real>(
    dim: usize,
    n: usize,
    field: Field,
    seed: u64,
) -> Result<VectorFamily<T>> {
    if n > dim {
        return Err(BoundError::Domain(format!(
            "cannot fit {n} orthonormal vectors in dimension {dim}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut basis: Vec<Vec<Complex<T>>> = Vec::with_capacity(n);
    while basis.len() < n {
        let mut v: Vec<Complex<T>> = (0..dim)
            .map(|_| draw_scalar(&mut rng, field, 1.0))
            .collect();
        for _ in 0..2 {
            for e in &basis {
                let proj = inner_unchecked(&v, e);
                for (vk, &ek) in v.iter_mut().zip(e) {
                    *vk -= proj * ek;
                }
            }
        }
        let len: T = v.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
        // redraw on (vanishingly unlikely) near-dependence
        if len > T::lit(1e-6) {
            v.iter_mut().for_each(|z| *z /= len);
            basis.push(v);
        }
    }
    let vectors = basis
        .into_iter()
        .map(Vector::new)
        .collect::<Result<Vec<_>>>()?;
    VectorFamily::new(field, dim, vectors)
}

/// Sub-case label: which side of which inequality was compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseFlavor {
    Gram,
    Norms,
    /// Gram-flavour value against the norm-flavour value.
    GramVsNorms,
    /// Left side against the Frobenius middle term.
    Middle,
    /// Frobenius middle term against the outer Cauchy–Schwarz term.
    Outer,
}

impl CaseFlavor {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseFlavor::Gram => "gram",
            CaseFlavor::Norms => "norms",
            CaseFlavor::GramVsNorms => "gram_vs_norms",
            CaseFlavor::Middle => "middle",
            CaseFlavor::Outer => "outer",
        }
    }
}

impl From<Flavor> for CaseFlavor {
    fn from(f: Flavor) -> Self {
        match f {
            Flavor::Gram => CaseFlavor::Gram,
            Flavor::Norms => CaseFlavor::Norms,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Case<T> {
    pub kind: BoundKind,
    /// `None` for bounds without an exponent; `Some(∞)` is `p = ∞`.
    pub p: Option<T>,
    pub flavor: Option<CaseFlavor>,
    pub lhs: T,
    pub rhs: T,
    pub margin: T,
    pub pass: bool,
}

impl<T: Real> Case<T> {
    fn new(
        kind: BoundKind,
        p: Option<T>,
        flavor: Option<CaseFlavor>,
        lhs: T,
        rhs: T,
        tol: &Tolerance<T>,
    ) -> Self {
        Self {
            kind,
            p,
            flavor,
            lhs,
            rhs,
            margin: rhs - lhs,
            pass: tol.admits(lhs, rhs),
        }
    }

    fn from_result(r: &BoundResult<T>, tol: &Tolerance<T>) -> Self {
        Self::new(
            r.kind,
            r.exponent.map(|e| e.p()),
            r.flavor.map(CaseFlavor::from),
            r.lhs,
            r.value,
            tol,
        )
    }

    /// `margin / rhs`, or the raw margin when `rhs` is zero.
    pub fn relative_margin(&self) -> T {
        if self.rhs > T::zero() {
            self.margin / self.rhs
        } else {
            self.margin
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport<T> {
    pub cases: Vec<Case<T>>,
    pub n_pass: usize,
    pub n_fail: usize,
}

impl<T: Real> VerificationReport<T> {
    fn from_cases(cases: Vec<Case<T>>) -> Self {
        let n_pass = cases.iter().filter(|c| c.pass).count();
        let n_fail = cases.len() - n_pass;
        Self {
            cases,
            n_pass,
            n_fail,
        }
    }

    /// Case with the smallest relative margin.
    pub fn worst_margin_case(&self) -> Option<&Case<T>> {
        self.cases.iter().min_by(|a, b| {
            a.relative_margin()
                .partial_cmp(&b.relative_margin())
                .unwrap()
        })
    }

    pub fn all_pass(&self) -> bool {
        self.n_fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case<T>> {
        self.cases.iter().filter(|c| !c.pass)
    }
}

pub fn verify_all<T: Real>(
    x: &Vector<T>,
    family: &VectorFamily<T>,
    c: &[Complex<T>],
    p_list: &[T],
) -> Result<VerificationReport<T>> {
    verify_all_with(x, family, c, p_list, &Tolerance::default())
}

/// Evaluates every bound on one instance: one case per bound, flavour and
/// exponent. The power-mean bounds only see exponents in `(1, 2]`; the
/// orthonormal specialisation only runs on orthonormal families.
pub fn verify_all_with<T: Real>(
    x: &Vector<T>,
    family: &VectorFamily<T>,
    c: &[Complex<T>],
    p_list: &[T],
    tol: &Tolerance<T>,
) -> Result<VerificationReport<T>> {
    let exps = p_list
        .iter()
        .map(|&p| HolderExponent::new(p))
        .collect::<Result<Vec<_>>>()?;
    let fb = FamilyBounds::new(family);
    let orthonormal = !family.is_empty() && fb.gram().is_identity(T::lit(ORTHONORMAL_TOL));
    let mut cases = Vec::with_capacity(4 + exps.len() * 11);

    cases.push(Case::from_result(&fb.bombieri(x)?, tol));
    cases.push(Case::from_result(&fb.bessel_frobenius(x)?, tol));

    let chain = fb.refinement_chain(c)?;
    let two = Some(T::lit(2.0));
    cases.push(Case::new(
        BoundKind::RefinementChain,
        two,
        Some(CaseFlavor::Middle),
        chain.lhs,
        chain.middle,
        tol,
    ));
    cases.push(Case::new(
        BoundKind::RefinementChain,
        two,
        Some(CaseFlavor::Outer),
        chain.middle,
        chain.outer,
        tol,
    ));

    for exp in &exps {
        let span_g = fb.span(c, exp, Flavor::Gram)?;
        let span_n = fb.span(c, exp, Flavor::Norms)?;
        cases.push(Case::from_result(&span_g, tol));
        cases.push(Case::from_result(&span_n, tol));
        cases.push(Case::new(
            BoundKind::SpanNorms,
            Some(exp.p()),
            Some(CaseFlavor::GramVsNorms),
            span_g.value,
            span_n.value,
            tol,
        ));

        let combo_g = fb.combo(x, c, exp, Flavor::Gram)?;
        let combo_n = fb.combo(x, c, exp, Flavor::Norms)?;
        cases.push(Case::from_result(&combo_g, tol));
        cases.push(Case::from_result(&combo_n, tol));
        cases.push(Case::new(
            BoundKind::ComboNorms,
            Some(exp.p()),
            Some(CaseFlavor::GramVsNorms),
            combo_g.value,
            combo_n.value,
            tol,
        ));

        cases.push(Case::from_result(&fb.bessel_holder(x, exp)?, tol));
        if orthonormal {
            cases.push(Case::from_result(&fb.orthonormal_bessel(x, exp)?, tol));
        }

        let p = exp.p();
        if p > T::one() && p <= T::lit(2.0) {
            cases.push(Case::from_result(&fb.bessel_power_mean(x, p)?, tol));
            let gap = fb.power_mean(x, p)?;
            cases.push(Case::new(
                BoundKind::PowerMean,
                Some(p),
                None,
                gap.lhs,
                gap.rhs,
                tol,
            ));
        }
    }
    Ok(VerificationReport::from_cases(cases))
}

/// `|g_ij| ≤ ‖y_i‖ ‖y_j‖ (1 + 1e-12)` for every pair.
pub fn check_schwarz_chain<T: Real>(family: &VectorFamily<T>) -> bool {
    let g = gram(family);
    let norms: Vec<T> = family.iter().map(norm).collect();
    let slack = T::one() + T::lit(1e-12);
    (0..g.n()).all(|i| (0..g.n()).all(|j| g.get(i, j).norm() <= norms[i] * norms[j] * slack))
}

/// Which fields a corpus draws families over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldChoice {
    Real,
    Complex,
    Both,
}

/// A reproducible batch of random instances.
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusConfig<T> {
    pub trials: usize,
    pub max_dim: usize,
    pub max_n: usize,
    pub fields: FieldChoice,
    pub seed: u64,
    pub p_list: Vec<T>,
    pub tol: Tolerance<T>,
}

impl<T: Real> CorpusConfig<T> {
    /// 10 000 instances with `dim ≤ 8`, `n ≤ 10` over both fields and
    /// `p ∈ {1, 1.1, 1.5, 2, 3, ∞}`.
    pub fn standard(seed: u64) -> Self {
        Self {
            trials: 10_000,
            max_dim: 8,
            max_n: 10,
            fields: FieldChoice::Both,
            seed,
            p_list: standard_p_list(),
            tol: Tolerance::default(),
        }
    }

    /// Draws the per-trial specs sequentially from `seed`.
    pub fn specs(&self) -> Result<Vec<FamilySpec>> {
        if !(1..=MAX_DIM).contains(&self.max_dim) {
            return Err(BoundError::Domain(format!(
                "max dim {} outside 1..={MAX_DIM}",
                self.max_dim
            )));
        }
        if self.max_n > MAX_N {
            return Err(BoundError::Domain(format!(
                "max n {} outside 0..={MAX_N}",
                self.max_n
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        Ok((0..self.trials)
            .map(|_| {
                let dim = rng.random_range(1..=self.max_dim);
                let n = rng.random_range(0..=self.max_n);
                let field = match self.fields {
                    FieldChoice::Real => Field::Real,
                    FieldChoice::Complex => Field::Complex,
                    FieldChoice::Both => {
                        if rng.random_bool(0.5) {
                            Field::Complex
                        } else {
                            Field::Real
                        }
                    }
                };
                let scale = 10f64.powf(rng.random_range(-2.0..=2.0));
                FamilySpec {
                    dim,
                    n,
                    field,
                    scale,
                    seed: rng.random(),
                }
            })
            .collect())
    }
}

pub fn standard_p_list<T: Real>() -> Vec<T> {
    [1.0, 1.1, 1.5, 2.0, 3.0, f64::INFINITY]
        .into_iter()
        .map(T::lit)
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusEntry<T> {
    pub trial: usize,
    pub spec: FamilySpec,
    pub report: VerificationReport<T>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusRun<T> {
    pub entries: Vec<CorpusEntry<T>>,
}

impl<T: Real> CorpusRun<T> {
    pub fn n_cases(&self) -> usize {
        self.entries.iter().map(|e| e.report.cases.len()).sum()
    }

    pub fn n_pass(&self) -> usize {
        self.entries.iter().map(|e| e.report.n_pass).sum()
    }

    pub fn n_fail(&self) -> usize {
        self.entries.iter().map(|e| e.report.n_fail).sum()
    }

    /// Entries with at least one failing case.
    pub fn failing(&self) -> impl Iterator<Item = &CorpusEntry<T>> {
        self.entries.iter().filter(|e| e.report.n_fail > 0)
    }

    pub fn worst_case(&self) -> Option<(&CorpusEntry<T>, &Case<T>)> {
        self.entries
            .iter()
            .filter_map(|e| e.report.worst_margin_case().map(|c| (e, c)))
            .min_by(|a, b| {
                a.1.relative_margin()
                    .partial_cmp(&b.1.relative_margin())
                    .unwrap()
            })
    }
}

/// Verifies every instance of the corpus in parallel; entries come back in
/// trial order regardless of scheduling.
pub fn run_corpus<T: Real>(config: &CorpusConfig<T>) -> Result<CorpusRun<T>> {
    let specs = config.specs()?;
    let entries = specs
        .into_par_iter()
        .enumerate()
        .map(|(trial, spec)| {
            let inst = random_family::<T>(&spec)?;
            let report = verify_all_with(
                &inst.x,
                &inst.family,
                &inst.coeffs,
                &config.p_list,
                &config.tol,
            )?;
            Ok(CorpusEntry {
                trial,
                spec,
                report,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CorpusRun { entries })
}
