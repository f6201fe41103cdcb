//! Brute-force checks of the splitting step behind global generation after
//! twisting by `O(-varpi_alpha)`.
//!
//! For dominant `lambda` with `<lambda, alpha^vee> > 1` and every weight
//! `mu != varpi_alpha` of `L(varpi_alpha)`, the shifted parameter
//! `lambda + mu - varpi_alpha` must lie outside `W lambda`. Two independent
//! routes are run: orbit membership through dominant representatives, and the
//! strict norm chain
//!
//! ```text
//! (lambda - varpi, mu) < (lambda - varpi, varpi)
//! |lambda - varpi + mu|^2 < |lambda|^2
//! ```
//!
//! At `<lambda, alpha^vee> = 1` the conclusion fails, witnessed by
//! `mu = varpi_alpha - alpha`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::infchar::{dominant_representative, same_infinitesimal_character};
use crate::rational::{int, parse_rational, zero, Rational};
use crate::rootdata::{RootDatum, Weight, WeylWord};
use crate::weights::{weight_system, WeightSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaStatus {
    Pass,
    Fail,
    /// `<lambda, alpha^vee> = 1`; handled by [`boundary_witness`].
    Boundary,
    /// Input outside the lemma's hypotheses.
    Precondition,
}

/// A weight `mu` with `word . lambda = lambda + mu - varpi_alpha`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitFailure {
    pub mu: Weight,
    pub word: WeylWord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub datum: String,
    pub alpha: usize,
    pub lambda: Weight,
    pub status: LemmaStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Number of non-highest weights examined.
    pub checked: usize,
    pub failures: Vec<OrbitFailure>,
    pub norm_chain_failures: Vec<Weight>,
    /// Weights where the strict norm chain held but the orbit test still hit.
    pub soundness_violations: Vec<Weight>,
}

impl LemmaReport {
    fn new(datum: &RootDatum, alpha: usize, lambda: &Weight) -> Self {
        Self {
            datum: datum.label().to_string(),
            alpha,
            lambda: lambda.clone(),
            status: LemmaStatus::Pass,
            note: None,
            checked: 0,
            failures: Vec::new(),
            norm_chain_failures: Vec::new(),
            soundness_violations: Vec::new(),
        }
    }

    fn finish(mut self) -> Self {
        if !self.failures.is_empty()
            || !self.norm_chain_failures.is_empty()
            || !self.soundness_violations.is_empty()
        {
            self.status = LemmaStatus::Fail;
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.status == LemmaStatus::Pass
    }
}

#[derive(Clone, Copy)]
struct Routes {
    orbit: bool,
    norm: bool,
}

/// Returns a report with a non-`Pass` status when the hypotheses fail; only
/// malformed input (wrong rank, index out of range) is an `Err`.
fn precondition(datum: &RootDatum, alpha: usize, lambda: &Weight) -> Result<Option<LemmaReport>> {
    datum.check(lambda)?;
    datum.fundamental_weight(alpha)?;
    let mut report = LemmaReport::new(datum, alpha, lambda);
    if !lambda.is_dominant() {
        report.status = LemmaStatus::Precondition;
        report.note = Some("lambda is not dominant".into());
        return Ok(Some(report));
    }
    let c = lambda[alpha];
    if c == int(1) {
        report.status = LemmaStatus::Boundary;
        report.note = Some("pairing equals 1; see boundary witness".into());
        return Ok(Some(report));
    }
    if c < int(1) {
        report.status = LemmaStatus::Precondition;
        report.note = Some(format!("pairing {c} is not greater than 1"));
        return Ok(Some(report));
    }
    Ok(None)
}

fn run(
    datum: &RootDatum,
    alpha: usize,
    lambda: &Weight,
    system: &WeightSystem,
    routes: Routes,
) -> Result<LemmaReport> {
    if let Some(report) = precondition(datum, alpha, lambda)? {
        return Ok(report);
    }
    let varpi = datum.fundamental_weight(alpha)?;
    let lowered = lambda - &varpi;
    let lambda_norm = datum.norm_squared(lambda);
    let varpi_norm = datum.norm_squared(&varpi);
    let mut report = LemmaReport::new(datum, alpha, lambda);

    if routes.norm {
        let alpha_root = datum.simple_root(alpha)?;
        let mut bad = Vec::new();
        if !lowered.is_dominant() {
            bad.push("lambda - varpi_alpha is not dominant");
        }
        if datum.invariant_form(&lowered, &alpha_root)? <= zero() {
            bad.push("(lambda - varpi_alpha, alpha) is not positive");
        }
        if !bad.is_empty() {
            report.note = Some(bad.join("; "));
            report.norm_chain_failures.push(lowered.clone());
        }
    }
    let bound = datum.invariant_form(&lowered, &varpi)?;

    for mu in system.nonhighest_weights() {
        report.checked += 1;
        let shifted = &lowered + mu;
        let mut norm_ok = false;
        if routes.norm {
            let first = datum.invariant_form(&lowered, mu)? < bound;
            let weight_bound = datum.norm_squared(mu) <= varpi_norm;
            let second = datum.norm_squared(&shifted) < lambda_norm;
            norm_ok = first && weight_bound && second;
            if !norm_ok {
                report.norm_chain_failures.push(mu.clone());
            }
        }
        if routes.orbit && same_infinitesimal_character(datum, &shifted, lambda)? {
            let (dom, word) = dominant_representative(datum, &shifted)?;
            debug_assert_eq!(&dom, lambda);
            report.failures.push(OrbitFailure { mu: mu.clone(), word: word.inverse() });
            if norm_ok {
                report.soundness_violations.push(mu.clone());
            }
        }
    }
    Ok(report.finish())
}

fn fundamental_system(datum: &RootDatum, alpha: usize) -> Result<WeightSystem> {
    weight_system(datum, &datum.fundamental_weight(alpha)?)
}

/// Orbit route: no non-highest `mu` puts `lambda + mu - varpi_alpha` in `W lambda`.
pub fn verify_generation_lemma(datum: &RootDatum, alpha: usize, lambda: &Weight) -> Result<LemmaReport> {
    datum.fundamental_weight(alpha)?;
    let system = fundamental_system(datum, alpha)?;
    run(datum, alpha, lambda, &system, Routes { orbit: true, norm: false })
}

/// Norm route, including the premises that `lambda - varpi_alpha` is dominant
/// and pairs positively with `alpha`.
pub fn verify_norm_chain(datum: &RootDatum, alpha: usize, lambda: &Weight) -> Result<LemmaReport> {
    datum.fundamental_weight(alpha)?;
    let system = fundamental_system(datum, alpha)?;
    run(datum, alpha, lambda, &system, Routes { orbit: false, norm: true })
}

/// Both routes in one pass, also recording any weight where the norm chain
/// holds yet the orbit test hits.
pub fn verify_lemma(datum: &RootDatum, alpha: usize, lambda: &Weight) -> Result<LemmaReport> {
    datum.fundamental_weight(alpha)?;
    let system = fundamental_system(datum, alpha)?;
    verify_lemma_with(datum, alpha, lambda, &system)
}

fn verify_lemma_with(
    datum: &RootDatum,
    alpha: usize,
    lambda: &Weight,
    system: &WeightSystem,
) -> Result<LemmaReport> {
    run(datum, alpha, lambda, system, Routes { orbit: true, norm: true })
}

/// At `<lambda, alpha^vee> = 1`, returns `mu = varpi_alpha - alpha` after
/// confirming it is a weight of `L(varpi_alpha)` and that
/// `lambda + mu - varpi_alpha = s_alpha lambda`.
pub fn boundary_witness(datum: &RootDatum, alpha: usize, lambda: &Weight) -> Result<Weight> {
    let system = fundamental_system(datum, alpha)?;
    boundary_witness_with(datum, alpha, lambda, &system)
}

fn boundary_witness_with(
    datum: &RootDatum,
    alpha: usize,
    lambda: &Weight,
    system: &WeightSystem,
) -> Result<Weight> {
    datum.check(lambda)?;
    let varpi = datum.fundamental_weight(alpha)?;
    if !lambda.is_dominant() {
        return Err(Error::Precondition("lambda is not dominant".into()));
    }
    if lambda[alpha] != int(1) {
        return Err(Error::Precondition(format!(
            "pairing {} is not equal to 1",
            lambda[alpha]
        )));
    }
    let mu = &varpi - &datum.simple_root(alpha)?;
    if !system.contains(&mu) || mu == varpi {
        return Err(Error::WitnessFailed(format!("{mu} is not a non-highest weight")));
    }
    let shifted = &(lambda + &mu) - &varpi;
    if shifted != datum.reflect(lambda, alpha)? || !same_infinitesimal_character(datum, &shifted, lambda)? {
        return Err(Error::WitnessFailed(format!("{shifted} is not s_alpha lambda")));
    }
    Ok(mu)
}

/// Which simple roots a sweep tests.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AlphaSelection {
    #[default]
    All,
    Indices(Vec<usize>),
}

/// A product grid of rational parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridSpec {
    /// Candidate values for each fundamental-weight coordinate.
    pub values: Vec<Vec<Rational>>,
    pub alphas: AlphaSelection,
}

impl GridSpec {
    /// `{0, 1/2, 1, 3/2, 2, 5/2}` in every coordinate, every simple root.
    pub fn default_for(rank: usize) -> Self {
        let values: Vec<Rational> = (0..=5).map(|n| Rational::new(n, 2)).collect();
        Self::uniform(rank, values)
    }

    pub fn uniform(rank: usize, values: Vec<Rational>) -> Self {
        Self { values: vec![values; rank], alphas: AlphaSelection::All }
    }

    /// Parses `"default"` or a comma-separated value list applied to every coordinate.
    pub fn parse(rank: usize, s: &str) -> Result<Self> {
        if s.trim() == "default" {
            return Ok(Self::default_for(rank));
        }
        let values = s.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
        Ok(Self::uniform(rank, values))
    }

    pub fn with_alphas(mut self, alphas: AlphaSelection) -> Self {
        self.alphas = alphas;
        self
    }

    fn alpha_indices(&self, rank: usize) -> Result<Vec<usize>> {
        match &self.alphas {
            AlphaSelection::All => Ok((0..rank).collect()),
            AlphaSelection::Indices(v) => {
                if v.is_empty() {
                    return Err(Error::EmptyGrid);
                }
                for &i in v {
                    if i >= rank {
                        return Err(Error::IndexOutOfRange { index: i, rank });
                    }
                }
                Ok(v.clone())
            }
        }
    }

    /// Grid points in lexicographic order, last coordinate fastest.
    pub fn points(&self) -> Vec<Weight> {
        let mut out = Vec::new();
        if self.values.is_empty() || self.values.iter().any(Vec::is_empty) {
            return out;
        }
        let mut idx = vec![0usize; self.values.len()];
        loop {
            out.push(Weight::new(idx.iter().zip(&self.values).map(|(&i, v)| v[i]).collect()));
            let mut k = idx.len();
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < self.values[k].len() {
                    break;
                }
                idx[k] = 0;
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepStatus {
    Pass,
    Fail,
    /// No grid point met the lemma's hypothesis.
    Vacuous,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryFailure {
    pub alpha: usize,
    pub lambda: Weight,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub datum: String,
    pub status: SweepStatus,
    pub grid_points: usize,
    pub nondominant_skipped: usize,
    /// `(lambda, alpha)` pairs with pairing greater than 1.
    pub tested: usize,
    pub weights_checked: usize,
    pub orbit_failures: usize,
    pub norm_chain_failures: usize,
    pub soundness_violations: usize,
    pub boundary_points: usize,
    pub boundary_witnesses: usize,
    pub failing_reports: Vec<LemmaReport>,
    pub boundary_failures: Vec<BoundaryFailure>,
}

enum Outcome {
    Skipped,
    Below,
    Tested(LemmaReport),
    Boundary(std::result::Result<(), BoundaryFailure>),
}

pub fn sweep(datum: &RootDatum, grid: &GridSpec) -> Result<SweepReport> {
    sweep_parallel(datum, grid, 1)
}

/// Runs every grid point; `threads` only affects wall time, the report is
/// assembled in grid order.
pub fn sweep_parallel(datum: &RootDatum, grid: &GridSpec, threads: usize) -> Result<SweepReport> {
    use rayon::prelude::*;

    if grid.values.len() != datum.rank() {
        return Err(Error::RankMismatch { expected: datum.rank(), got: grid.values.len() });
    }
    let points = grid.points();
    if points.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let alphas = grid.alpha_indices(datum.rank())?;
    let systems: Vec<WeightSystem> = alphas
        .iter()
        .map(|&a| fundamental_system(datum, a))
        .collect::<Result<_>>()?;

    let evaluate = |lambda: &Weight| -> Result<Vec<Outcome>> {
        if !lambda.is_dominant() {
            return Ok(vec![Outcome::Skipped]);
        }
        alphas
            .iter()
            .zip(&systems)
            .map(|(&alpha, system)| {
                let c = lambda[alpha];
                Ok(if c > int(1) {
                    Outcome::Tested(verify_lemma_with(datum, alpha, lambda, system)?)
                } else if c == int(1) {
                    Outcome::Boundary(
                        boundary_witness_with(datum, alpha, lambda, system)
                            .map(|_| ())
                            .map_err(|e| BoundaryFailure {
                                alpha,
                                lambda: lambda.clone(),
                                reason: e.to_string(),
                            }),
                    )
                } else {
                    Outcome::Below
                })
            })
            .collect()
    };

    let outcomes: Vec<Vec<Outcome>> = if threads <= 1 {
        points.iter().map(evaluate).collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::Io(e.to_string()))?;
        pool.install(|| points.par_iter().map(evaluate).collect::<Result<_>>())?
    };

    let mut report = SweepReport {
        datum: datum.label().to_string(),
        status: SweepStatus::Pass,
        grid_points: points.len(),
        nondominant_skipped: 0,
        tested: 0,
        weights_checked: 0,
        orbit_failures: 0,
        norm_chain_failures: 0,
        soundness_violations: 0,
        boundary_points: 0,
        boundary_witnesses: 0,
        failing_reports: Vec::new(),
        boundary_failures: Vec::new(),
    };
    for outcome in outcomes.into_iter().flatten() {
        match outcome {
            Outcome::Skipped => report.nondominant_skipped += 1,
            Outcome::Below => {}
            Outcome::Tested(r) => {
                report.tested += 1;
                report.weights_checked += r.checked;
                report.orbit_failures += r.failures.len();
                report.norm_chain_failures += r.norm_chain_failures.len();
                report.soundness_violations += r.soundness_violations.len();
                if !r.passed() {
                    report.failing_reports.push(r);
                }
            }
            Outcome::Boundary(res) => {
                report.boundary_points += 1;
                match res {
                    Ok(()) => report.boundary_witnesses += 1,
                    Err(f) => report.boundary_failures.push(f),
                }
            }
        }
    }
    report.status = if !report.failing_reports.is_empty() || !report.boundary_failures.is_empty() {
        SweepStatus::Fail
    } else if report.tested == 0 {
        SweepStatus::Vacuous
    } else {
        SweepStatus::Pass
    };
    Ok(report)
}
