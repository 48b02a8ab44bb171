//! Fedder and Glassbrenner criterion checks, and executable versions of the
//! colon-ideal containments that drive the F-pure and strongly F-regular
//! containment theorems.
//!
//! Every check here is per `q`. Only `q = p^e` is meaningful for the
//! criteria; the algebra accepts any positive `q` and leaves that validation
//! to callers such as the CLI.

use rayon::prelude::*;
use serde::Serialize;

use crate::decomposition::minimal_primes;
use crate::error::{Error, Result};
use crate::format::IdealDocument;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::symbolic::SquarefreeIdeal;

/// Outcome of a Fedder or Glassbrenner check at a single `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionReport {
    pub q: u64,
    pub passed: bool,
    /// An element of `(I^[q] : I)` (times `c` for Glassbrenner) outside `m^[q]`.
    pub witness: Option<Monomial>,
    pub colon_ideal: MonomialIdeal,
}

#[derive(Serialize)]
struct CriterionReportJson<'a> {
    q: u64,
    passed: bool,
    witness: Option<String>,
    colon_ideal: IdealDocument,
    #[serde(skip_serializing_if = "Option::is_none")]
    multiplier: Option<&'a str>,
}

impl CriterionReport {
    pub fn to_json(&self) -> serde_json::Value {
        self.to_json_with_multiplier(None)
    }

    pub fn to_json_with_multiplier(&self, multiplier: Option<&str>) -> serde_json::Value {
        let ctx = self.colon_ideal.context();
        serde_json::to_value(CriterionReportJson {
            q: self.q,
            passed: self.passed,
            witness: self.witness.as_ref().map(|w| w.display(ctx).to_string()),
            colon_ideal: IdealDocument::from_ideal(&self.colon_ideal),
            multiplier,
        })
        .expect("report serializes")
    }
}

/// Whether `m` lies outside `m^[q] = (x_1^q, ..., x_v^q)`.
fn outside_frobenius_maximal(m: &Monomial, q: u64) -> bool {
    m.exponents().iter().all(|&e| e < q)
}

/// `(I^[q] : I)`.
pub fn frobenius_colon(ideal: &MonomialIdeal, q: u64) -> Result<MonomialIdeal> {
    ideal.bracket_power(q)?.colon_ideal(ideal)
}

fn check_criterion_input(ideal: &MonomialIdeal, q: u64, op: &'static str) -> Result<()> {
    if !ideal.is_proper_nonzero() {
        return Err(Error::ZeroOrUnitIdeal { op });
    }
    if q < 2 {
        return Err(Error::InvalidParameter(format!(
            "{op} needs q >= 2, got {q}"
        )));
    }
    Ok(())
}

/// Fedder's test `(I^[q] : I) ⊄ m^[q]` at one `q`.
pub fn fedder_check(ideal: &MonomialIdeal, q: u64) -> Result<CriterionReport> {
    check_criterion_input(ideal, q, "fedder check")?;
    let colon = frobenius_colon(ideal, q)?;
    let witness = colon
        .generators()
        .iter()
        .find(|g| outside_frobenius_maximal(g, q))
        .cloned();
    Ok(CriterionReport {
        q,
        passed: witness.is_some(),
        witness,
        colon_ideal: colon,
    })
}

/// Fedder reports for `q = p^e`, `e = 1..=max_e`, in order of `e`.
pub fn fedder_scan(ideal: &MonomialIdeal, p: u64, max_e: u32) -> Result<Vec<CriterionReport>> {
    let qs = (1..=max_e)
        .map(|e| {
            p.checked_pow(e)
                .ok_or_else(|| Error::InvalidParameter(format!("{p}^{e} overflows")))
        })
        .collect::<Result<Vec<_>>>()?;
    qs.into_par_iter().map(|q| fedder_check(ideal, q)).collect()
}

/// Glassbrenner's test `c (I^[q] : I) ⊄ m^[q]` for a user-chosen `c` avoiding
/// every minimal prime of `I`.
pub fn glassbrenner_check(ideal: &MonomialIdeal, c: &Monomial, q: u64) -> Result<CriterionReport> {
    check_criterion_input(ideal, q, "glassbrenner check")?;
    let ctx = ideal.context();
    if c.num_vars() != ctx.num_vars() {
        return Err(Error::ContextMismatch {
            left: ctx.num_vars(),
            right: c.num_vars(),
        });
    }
    let primes = minimal_primes(ideal)?;
    if let Some(p) = primes
        .minimal_primes
        .iter()
        .find(|p| p.contains_monomial(c))
    {
        return Err(Error::MultiplierInMinimalPrime {
            multiplier: c.display(ctx).to_string(),
            prime: p.display(ctx).to_string(),
        });
    }
    let colon = frobenius_colon(ideal, q)?;
    let witness = colon
        .scale_by(c)?
        .generators()
        .iter()
        .find(|g| outside_frobenius_maximal(g, q))
        .cloned();
    Ok(CriterionReport {
        q,
        passed: witness.is_some(),
        witness,
        colon_ideal: colon,
    })
}

/// Verdict of a containment `lhs ⊆ rhs` between explicit ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InclusionReport {
    pub holds: bool,
    /// First generator of the left side (canonical order) outside the right side.
    pub counterexample: Option<Monomial>,
    /// Set when `q` is below the threshold under which the containment is guaranteed.
    pub below_threshold: bool,
}

impl InclusionReport {
    fn compare(lhs: &MonomialIdeal, rhs: &MonomialIdeal) -> Result<Self> {
        let counterexample = rhs.first_non_member(lhs)?.cloned();
        Ok(InclusionReport {
            holds: counterexample.is_none(),
            counterexample,
            below_threshold: false,
        })
    }
}

/// For `I = (u_1, ..., u_h)`: `I^{ht+kt-h+1} ⊆ (u_1^t, ..., u_h^t)^{k+1}`, with
/// `h` the length of `gens` as given.
pub fn lemma_inclusion_check(gens: &MonomialIdeal, t: u64, k: u64) -> Result<InclusionReport> {
    let h = gens.num_generators() as u64;
    if h == 0 {
        return Err(Error::InvalidParameter(
            "generator list must be nonempty".into(),
        ));
    }
    if t == 0 {
        return Err(Error::InvalidParameter("t must be positive".into()));
    }
    let exponent = h * t + k * t - h + 1;
    let lhs = gens.power(exponent)?;
    let cap = gens.context().exponent_cap();
    let pure = gens
        .generators()
        .iter()
        .map(|u| u.scale(t, cap))
        .collect::<Result<Vec<_>>>()?;
    let rhs = MonomialIdeal::minimalize(gens.context().clone(), pure)?.power(k + 1)?;
    InclusionReport::compare(&lhs, &rhs)
}

/// `I^{(hq+kq-h+1)} ⊆ (I^{(k+1)})^[q]`.
pub fn lemma_qcomparison_check(ideal: &SquarefreeIdeal, k: u64, q: u64) -> Result<InclusionReport> {
    let h = ideal.big_height() as u64;
    let lhs = ideal.symbolic_power(h * q + k * q - h + 1)?;
    let rhs = ideal.symbolic_power(k + 1)?.bracket_power(q)?;
    InclusionReport::compare(&lhs, &rhs)
}

/// Smallest `q` for which the F-pure key containment is guaranteed: `(2h-1)(n-1)+1`.
pub fn fpure_key_threshold(h: u64, n: u64) -> u64 {
    (2 * h - 1) * (n - 1) + 1
}

/// `(I^[q] : I) ⊆ (I^n : I^{(hn-h+1)})^[q]`. Smaller `q` than the threshold are
/// allowed and flagged.
pub fn lemma_fpure_key_check(ideal: &SquarefreeIdeal, n: u64, q: u64) -> Result<InclusionReport> {
    if n == 0 || q == 0 {
        return Err(Error::InvalidParameter("n and q must be positive".into()));
    }
    let h = ideal.big_height() as u64;
    let lhs = frobenius_colon(ideal.ideal(), q)?;
    let rhs = ideal
        .power(n)?
        .colon_ideal(&ideal.symbolic_power(h * n - h + 1)?)?
        .bracket_power(q)?;
    let mut report = InclusionReport::compare(&lhs, &rhs)?;
    report.below_threshold = q < fpure_key_threshold(h, n);
    Ok(report)
}

/// `(I^d : I^{(d)}) (I^[q] : I) ⊆ (I I^{(d+1-h)} : I^{(d)})^[q]` for `h >= 2`, `d >= h-1`.
pub fn lemma_sfr_key_check(ideal: &SquarefreeIdeal, d: u64, q: u64) -> Result<InclusionReport> {
    let h = ideal.big_height() as u64;
    if h < 2 {
        return Err(Error::InvalidParameter(format!("big height {h} < 2")));
    }
    if d + 1 < h {
        return Err(Error::InvalidParameter(format!(
            "d = {d} < h - 1 = {}",
            h - 1
        )));
    }
    if q == 0 {
        return Err(Error::InvalidParameter("q must be positive".into()));
    }
    let i = ideal.ideal();
    let symb_d = ideal.symbolic_power(d)?;
    let lhs = i
        .power(d)?
        .colon_ideal(&symb_d)?
        .multiply(&frobenius_colon(i, q)?)?;
    let rhs = i
        .multiply(&ideal.symbolic_power(d + 1 - h)?)?
        .colon_ideal(&symb_d)?
        .bracket_power(q)?;
    InclusionReport::compare(&lhs, &rhs)
}
