//! JSON views of core results with 1-based simple-root indices.

use serde_json::{json, Value};

use fpp_core::lemma::SweepReport;
use fpp_core::{Error, InductionCertificate, LemmaReport, Rational};

pub fn rationals(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn one_based(it: impl IntoIterator<Item = usize>) -> Vec<usize> {
    it.into_iter().map(|i| i + 1).collect()
}

pub fn lemma_report(r: &LemmaReport) -> Value {
    let failures: Vec<Value> = r
        .failures
        .iter()
        .map(|f| json!({ "mu": f.mu, "word": one_based(f.word.indices().iter().copied()) }))
        .collect();
    let mut v = json!({
        "datum": r.datum,
        "alpha": r.alpha + 1,
        "lambda": r.lambda,
        "status": r.status,
        "checked": r.checked,
        "failures": failures,
        "norm_chain_failures": r.norm_chain_failures,
        "soundness_violations": r.soundness_violations,
    });
    if let Some(note) = &r.note {
        v["note"] = json!(note);
    }
    v
}

pub fn sweep_report(r: &SweepReport) -> Value {
    let boundary_failures: Vec<Value> = r
        .boundary_failures
        .iter()
        .map(|b| json!({ "alpha": b.alpha + 1, "lambda": b.lambda, "reason": b.reason }))
        .collect();
    json!({
        "datum": r.datum,
        "status": r.status,
        "grid_points": r.grid_points,
        "nondominant_skipped": r.nondominant_skipped,
        "tested": r.tested,
        "weights_checked": r.weights_checked,
        "orbit_failures": r.orbit_failures,
        "norm_chain_failures": r.norm_chain_failures,
        "soundness_violations": r.soundness_violations,
        "boundary_points": r.boundary_points,
        "boundary_witnesses": r.boundary_witnesses,
        "failing_reports": r.failing_reports.iter().map(lemma_report).collect::<Vec<_>>(),
        "boundary_failures": boundary_failures,
    })
}

pub fn certificate(c: &InductionCertificate) -> Value {
    json!({
        "alpha": c.alpha + 1,
        "mu": c.mu,
        "removed": one_based(c.parabolic.removed().iter().copied()),
        "levi": one_based(c.parabolic.levi_simples().iter().copied()),
        "all_checks_pass": c.all_checks_pass(),
        "lemma_checks": c.lemma_checks.iter().map(lemma_report).collect::<Vec<_>>(),
    })
}

pub fn certificate_error(e: &Error) -> Value {
    let code = match e {
        Error::NotHermitian => "not_hermitian",
        Error::NoViolation => "no_violation",
        Error::NotDominant => "not_dominant",
        _ => "invalid",
    };
    json!({ "error": code, "message": e.to_string() })
}
