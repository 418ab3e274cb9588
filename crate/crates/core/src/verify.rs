//! Whole-degree invariant sweeps.
//!
//! [`sweep`] runs every per-composition check on all compositions of one
//! size, in parallel, and assembles the results in graded-lexicographic
//! order.

use num::{BigRational, One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{characteristic, composition_factors, filtration_order};
use crate::combinatorics::{compositions_of, Composition};
use crate::hecke::{nonyword_closure_check, quotient_consistency_check, quotient_module, verify_relations, word_module};
use crate::linalg::is_unimodular;
use crate::qsym::{
    dual_immaculate_via_fundamentals, dual_immaculate_via_kostka, fundamental_to_monomial, h_in_qsym,
    immaculate_in_h, kostka_matrix, pairing,
};

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CheckResult {
    pub check: &'static str,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckResult {
    fn new(check: &'static str, pass: bool) -> Self {
        CheckResult { check, pass, detail: None }
    }

    fn with_detail(check: &'static str, pass: bool, detail: String) -> Self {
        CheckResult {
            check,
            pass,
            detail: (!pass).then_some(detail),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CompositionReport {
    pub alpha: Composition,
    pub checks: Vec<CheckResult>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub n: usize,
    pub degree_checks: Vec<CheckResult>,
    pub compositions: Vec<CompositionReport>,
    pub passed: bool,
}

impl SweepReport {
    pub fn failures(&self) -> impl Iterator<Item = (Option<&Composition>, &CheckResult)> {
        self.degree_checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| (None, c))
            .chain(
                self.compositions
                    .iter()
                    .flat_map(|r| r.checks.iter().filter(|c| !c.pass).map(move |c| (Some(&r.alpha), c))),
            )
    }
}

/// All per-composition checks for `α`.
pub fn check_composition(alpha: &Composition) -> CompositionReport {
    let word = word_module(alpha);
    let quotient = quotient_module(alpha);
    let mut checks = Vec::new();

    let r = verify_relations(&word);
    checks.push(CheckResult::with_detail("relations_word", r.passed(), format!("{:?}", r.violations)));
    let r = verify_relations(&quotient);
    checks.push(CheckResult::with_detail("relations_quotient", r.passed(), format!("{:?}", r.violations)));

    checks.push(CheckResult::new("nonyword_closure", nonyword_closure_check(alpha)));
    checks.push(CheckResult::new("quotient_consistency", quotient_consistency_check(alpha)));

    let filtrations_ok = [&word, &quotient]
        .iter()
        .all(|m| filtration_order(m).map_or(false, |f| f.respects(m)));
    checks.push(CheckResult::new("filtration", filtrations_ok));
    checks.push(CheckResult::new(
        "one_dimensional_factors",
        composition_factors(&quotient).len() == quotient.dim() && composition_factors(&word).len() == word.dim(),
    ));

    let kostka_side = dual_immaculate_via_kostka(alpha);
    let via_f = fundamental_to_monomial(&dual_immaculate_via_fundamentals(alpha)).expect("F basis");
    checks.push(CheckResult::with_detail(
        "fundamental_positivity",
        via_f == kostka_side,
        format!("{via_f} != {kostka_side}"),
    ));

    let ch = fundamental_to_monomial(&characteristic(&quotient)).expect("F basis");
    checks.push(CheckResult::with_detail(
        "quotient_characteristic",
        ch == kostka_side,
        format!("{ch} != {kostka_side}"),
    ));

    let ch = fundamental_to_monomial(&characteristic(&word)).expect("F basis");
    let h = h_in_qsym(alpha);
    checks.push(CheckResult::with_detail("induced_characteristic", ch == h, format!("{ch} != {h}")));

    CompositionReport {
        alpha: alpha.clone(),
        checks,
    }
}

/// Kostka unimodularity and the duality `⟨𝔖_α, 𝔖*_β⟩ = δ_{α,β}` at degree `n`.
pub fn check_degree(n: usize) -> Vec<CheckResult> {
    let k = kostka_matrix(n);
    let det_ok = is_unimodular(&k.determinant);
    let mut checks = vec![CheckResult::with_detail(
        "kostka_unimodular",
        det_ok,
        format!("det = {}", k.determinant),
    )];
    let all = compositions_of(n);
    let duality = all.par_iter().all(|a| {
        let Ok(s) = immaculate_in_h(a) else { return false };
        all.iter().all(|b| {
            let v = pairing(&s, &dual_immaculate_via_kostka(b)).expect("matching bases and degrees");
            if a == b {
                v.is_one()
            } else {
                v.is_zero()
            }
        })
    });
    checks.push(CheckResult::new("duality_pairing", duality));
    checks
}

/// Runs every check on every composition of `n`.
pub fn sweep(n: usize) -> SweepReport {
    let degree_checks = check_degree(n);
    let compositions: Vec<CompositionReport> = compositions_of(n).par_iter().map(check_composition).collect();
    let passed = degree_checks.iter().all(|c| c.pass) && compositions.iter().all(|r| r.checks.iter().all(|c| c.pass));
    SweepReport {
        n,
        degree_checks,
        compositions,
        passed,
    }
}

/// Number of standard immaculate tableaux of shape `α` as an exact rational
/// (the coefficient sum of `𝔖*_α` in the `F` basis).
pub fn dimension_of_quotient(alpha: &Composition) -> BigRational {
    dual_immaculate_via_fundamentals(alpha).coefficient_sum()
}
