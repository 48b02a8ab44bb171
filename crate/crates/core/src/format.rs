//! The shared ideal interchange format.
//!
//! ```json
//! {"vars": ["x","y","z"], "generators": [[1,1,0],[1,0,1],[0,1,1]]}
//! ```
//!
//! Generators may also be given as strings such as `"x^2*y"`. Output always
//! uses exponent vectors.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, RingContext};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeneratorSpec {
    Exponents(Vec<u64>),
    Text(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealDocument {
    pub vars: Vec<String>,
    pub generators: Vec<GeneratorSpec>,
}

impl IdealDocument {
    pub fn from_ideal(ideal: &MonomialIdeal) -> Self {
        IdealDocument {
            vars: ideal.context().var_names().to_vec(),
            generators: ideal
                .generators()
                .iter()
                .map(|g| GeneratorSpec::Exponents(g.exponents().to_vec()))
                .collect(),
        }
    }

    pub fn to_ideal(&self) -> Result<MonomialIdeal> {
        let ctx = RingContext::new(self.vars.iter().cloned())?;
        let v = ctx.num_vars();
        let gens = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, spec)| match spec {
                GeneratorSpec::Exponents(e) if e.len() == v => Ok(Monomial::new(e.clone())),
                GeneratorSpec::Exponents(e) => Err(Error::Parse(format!(
                    "generators[{i}]: expected {v} exponents, found {}",
                    e.len()
                ))),
                GeneratorSpec::Text(s) => parse_monomial(&ctx, s)
                    .map_err(|e| Error::Parse(format!("generators[{i}]: {e}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::minimalize(ctx, gens)
    }
}

pub fn ideal_from_json(text: &str) -> Result<MonomialIdeal> {
    let doc: IdealDocument = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    doc.to_ideal()
}

pub fn ideal_to_json(ideal: &MonomialIdeal) -> String {
    serde_json::to_string(&IdealDocument::from_ideal(ideal)).expect("ideal document serializes")
}

/// Parse `x^2*y`, `x1*x3^4`, or `1` against the variables of `ctx`.
pub fn parse_monomial(ctx: &RingContext, text: &str) -> Result<Monomial> {
    let text = text.trim();
    let mut exps = vec![0u64; ctx.num_vars()];
    if text == "1" {
        return Ok(Monomial::new(exps));
    }
    if text.is_empty() {
        return Err(Error::Parse("empty monomial".into()));
    }
    for factor in text.split('*') {
        let factor = factor.trim();
        let (name, exp) = match factor.split_once('^') {
            Some((name, exp)) => {
                let exp: u64 = exp
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?;
                (name.trim(), exp)
            }
            None => (factor, 1),
        };
        let idx = ctx
            .var_index(name)
            .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
        exps[idx] = exps[idx]
            .checked_add(exp)
            .filter(|&e| e <= ctx.exponent_cap())
            .ok_or(Error::ExponentOverflow {
                cap: ctx.exponent_cap(),
            })?;
    }
    Ok(Monomial::new(exps))
}

/// Parse a comma-separated generator list such as `x*y, x*z, y*z`.
pub fn parse_generator_list(ctx: std::sync::Arc<RingContext>, text: &str) -> Result<MonomialIdeal> {
    let gens = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .enumerate()
        .map(|(i, s)| {
            parse_monomial(&ctx, s).map_err(|e| Error::Parse(format!("generator {}: {e}", i + 1)))
        })
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::minimalize(ctx, gens)
}
