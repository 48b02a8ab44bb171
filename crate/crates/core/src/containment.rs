//! Containment queries `I^(a) ⊆ I^b`, Harbourne sweeps, star configurations
//! and the containment bound calculators.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::frobenius::InclusionReport;
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, RingContext};
use crate::symbolic::SquarefreeIdeal;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContainmentReport {
    pub a: u64,
    pub b: u64,
    pub holds: bool,
    /// A generator of `I^(a)` outside `I^b`, first in canonical order.
    pub counterexample: Option<Monomial>,
    /// Smallest `a'` with `I^(a') ⊆ I^b`, when requested.
    pub minimal_a: Option<u64>,
}

#[derive(Debug, Serialize)]
struct ReportRow {
    n: u64,
    a: u64,
    b: u64,
    holds: bool,
    counterexample: String,
}

#[derive(Debug, Serialize)]
struct ReportJson {
    a: u64,
    b: u64,
    holds: bool,
    counterexample: Option<String>,
    minimal_a: Option<u64>,
}

impl ContainmentReport {
    fn row(&self, ctx: &RingContext) -> ReportRow {
        ReportRow {
            n: self.b,
            a: self.a,
            b: self.b,
            holds: self.holds,
            counterexample: self
                .counterexample
                .as_ref()
                .map(|m| m.display(ctx).to_string())
                .unwrap_or_default(),
        }
    }

    pub fn to_json(&self, ctx: &RingContext) -> serde_json::Value {
        serde_json::to_value(ReportJson {
            a: self.a,
            b: self.b,
            holds: self.holds,
            counterexample: self
                .counterexample
                .as_ref()
                .map(|m| m.display(ctx).to_string()),
            minimal_a: self.minimal_a,
        })
        .expect("report serializes")
    }
}

/// CSV with columns `n,a,b,holds,counterexample`; `n` is the target power `b`.
pub fn reports_to_csv(ctx: &RingContext, reports: &[ContainmentReport]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for r in reports {
        writer.serialize(r.row(ctx)).expect("in-memory csv write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory csv flush")).expect("csv is utf-8")
}

fn query(
    ideal: &SquarefreeIdeal,
    a: u64,
    power: &MonomialIdeal,
    b: u64,
) -> Result<ContainmentReport> {
    let symb = ideal.symbolic_power(a)?;
    let counterexample = power.first_non_member(&symb)?.cloned();
    Ok(ContainmentReport {
        a,
        b,
        holds: counterexample.is_none(),
        counterexample,
        minimal_a: None,
    })
}

/// Decide `I^(a) ⊆ I^b` by expanding `I^(a)` and testing each generator.
pub fn contains_symbolic_in_power(
    ideal: &SquarefreeIdeal,
    a: u64,
    b: u64,
) -> Result<ContainmentReport> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter("a and b must be positive".into()));
    }
    query(ideal, a, &ideal.power(b)?, b)
}

/// For `n = 1..=n_max`, check `I^(hn-h+1) ⊆ I^n` and find the smallest working
/// `a` by scanning downward from `hn-h+1`.
pub fn harbourne_sweep(ideal: &SquarefreeIdeal, n_max: u64) -> Result<Vec<ContainmentReport>> {
    let h = ideal.big_height() as u64;
    (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let power = ideal.power(n)?;
            let start = h * n - h + 1;
            let mut report = query(ideal, start, &power, n)?;
            if report.holds {
                let mut a = start;
                while a > 1 && query(ideal, a - 1, &power, n)?.holds {
                    a -= 1;
                }
                report.minimal_a = Some(a);
            }
            Ok(report)
        })
        .collect()
}

/// The codimension-`h` star configuration `⋂ (x_{i_1}, ..., x_{i_h})` in `v`
/// variables, generated by all squarefree monomials of degree `v-h+1`.
pub fn star_configuration(v: usize, h: usize) -> Result<MonomialIdeal> {
    if h == 0 || h >= v {
        return Err(Error::InvalidParameter(format!(
            "star configuration needs 1 <= h < v, got v={v}, h={h}"
        )));
    }
    let ctx = RingContext::indexed(v)?;
    let degree = v - h + 1;
    let mut gens = Vec::new();
    let mut chosen = Vec::with_capacity(degree);
    subsets(v, degree, 0, &mut chosen, &mut gens);
    MonomialIdeal::minimalize(ctx, gens)
}

fn subsets(v: usize, size: usize, from: usize, chosen: &mut Vec<usize>, out: &mut Vec<Monomial>) {
    if chosen.len() == size {
        let mut e = vec![0; v];
        for &i in chosen.iter() {
            e[i] = 1;
        }
        out.push(Monomial::new(e));
        return;
    }
    for i in from..v {
        chosen.push(i);
        subsets(v, size, i + 1, chosen, out);
        chosen.pop();
    }
}

/// Whether `(x_1 ... x_v)^{n-1}` witnesses `I^(hn-h) ⊄ I^n` for the star
/// configuration, confirmed by the full containment query.
pub fn star_sharpness_check(v: usize, h: usize, n: u64) -> Result<bool> {
    if h < 2 || h >= v || n < 2 || n * (h as u64 - 1) >= v as u64 {
        return Err(Error::InvalidParameter(format!(
            "star sharpness needs 2 <= h < v, n >= 2, n(h-1) < v; got v={v}, h={h}, n={n}"
        )));
    }
    let star = SquarefreeIdeal::new(star_configuration(v, h)?)?;
    let h = h as u64;
    let a = h * n - h;
    let witness = Monomial::new(vec![n - 1; v]);
    let power = star.power(n)?;
    let witness_works = star.symbolic_contains(&witness, a) && !power.contains_monomial(&witness);
    let full = query(&star, a, &power, n)?;
    Ok(witness_works && !full.holds)
}

/// The containment step `I^(d) ⊆ I I^(d+1-h)` on an explicit ideal.
pub fn sfr_step_check(ideal: &SquarefreeIdeal, d: u64) -> Result<InclusionReport> {
    let h = ideal.big_height() as u64;
    if h < 2 || d + 1 < h {
        return Err(Error::InvalidParameter(format!(
            "step containment needs h >= 2 and d >= h-1; got h={h}, d={d}"
        )));
    }
    let lhs = ideal.symbolic_power(d)?;
    let rhs = ideal.ideal().multiply(&ideal.symbolic_power(d + 1 - h)?)?;
    let counterexample = rhs.first_non_member(&lhs)?.cloned();
    Ok(InclusionReport {
        holds: counterexample.is_none(),
        counterexample,
        below_threshold: false,
    })
}

/// Which containment theorem a bound comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundQuery {
    /// `I^(hn) ⊆ I^n` for any ideal in a regular ring.
    Els { h: u64, n: u64 },
    /// `I^(hn-h+1) ⊆ I^n` when `R/I` is F-pure.
    FPure { h: u64, n: u64 },
    /// `I^((h-1)(b-1)+1) ⊆ I^b` when `R/I` is strongly F-regular, `h >= 2`.
    Sfr { h: u64, b: u64 },
    /// `I^(a) ⊆ I^b` for `a >= ceil(b/k)(h+k-1)` when `I^(k) = I^k`.
    Equality { h: u64, k: u64, b: u64 },
    /// `a >= ceil(b/2)(h+1)` for licci Gorenstein radical ideals.
    Licci { h: u64, b: u64 },
}

impl fmt::Display for BoundQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundQuery::Els { h, n } => write!(f, "ELS h={h} n={n}"),
            BoundQuery::FPure { h, n } => write!(f, "FPURE h={h} n={n}"),
            BoundQuery::Sfr { h, b } => write!(f, "SFR h={h} b={b}"),
            BoundQuery::Equality { h, k, b } => write!(f, "EQUALITY h={h} k={k} b={b}"),
            BoundQuery::Licci { h, b } => write!(f, "LICCI h={h} b={b}"),
        }
    }
}

/// Smallest symbolic exponent guaranteed by the given regime.
pub fn bound(query: BoundQuery) -> Result<u64> {
    let positive = |name: &str, x: u64| {
        if x == 0 {
            Err(Error::InvalidParameter(format!(
                "{query}: {name} must be positive"
            )))
        } else {
            Ok(())
        }
    };
    let overflow = || Error::InvalidParameter(format!("{query}: bound overflows"));
    match query {
        BoundQuery::Els { h, n } => {
            positive("h", h)?;
            positive("n", n)?;
            h.checked_mul(n).ok_or_else(overflow)
        }
        BoundQuery::FPure { h, n } => {
            positive("h", h)?;
            positive("n", n)?;
            h.checked_mul(n - 1)
                .and_then(|x| x.checked_add(1))
                .ok_or_else(overflow)
        }
        BoundQuery::Sfr { h, b } => {
            if h < 2 {
                return Err(Error::InvalidParameter(format!("{query}: requires h >= 2")));
            }
            positive("b", b)?;
            (h - 1)
                .checked_mul(b - 1)
                .and_then(|x| x.checked_add(1))
                .ok_or_else(overflow)
        }
        BoundQuery::Equality { h, k, b } => {
            positive("h", h)?;
            positive("k", k)?;
            positive("b", b)?;
            b.div_ceil(k).checked_mul(h + k - 1).ok_or_else(overflow)
        }
        BoundQuery::Licci { h, b } => {
            positive("h", h)?;
            positive("b", b)?;
            b.div_ceil(2).checked_mul(h + 1).ok_or_else(overflow)
        }
    }
}
