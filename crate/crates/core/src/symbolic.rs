//! Symbolic powers of squarefree monomial ideals.
//!
//! For a squarefree monomial ideal the associated primes are the minimal
//! primes `P`, and `I R_P = P R_P`, so `I^(n)` is the intersection of the
//! prime powers `P^n`. A monomial lies in `P^n` exactly when its exponents
//! over the variables of `P` sum to at least `n`.

use std::sync::Arc;

use crate::decomposition::{minimal_primes, PrimeDecomposition, PrimeSupport};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, RingContext};

/// All monomials of degree exactly `n` in the variables of `prime`.
/// Compositions are produced in lexicographic order; `n = 0` gives the unit ideal.
pub fn prime_power_gens(
    ctx: &Arc<RingContext>,
    prime: &PrimeSupport,
    n: u64,
) -> Result<MonomialIdeal> {
    let vars: Vec<usize> = prime.variables().iter().copied().collect();
    if vars.is_empty() {
        return Err(Error::EmptySupport);
    }
    if let Some(&bad) = vars.iter().find(|&&i| i >= ctx.num_vars()) {
        return Err(Error::InvalidParameter(format!(
            "variable index {bad} out of range"
        )));
    }
    if n > ctx.exponent_cap() {
        return Err(Error::ExponentOverflow {
            cap: ctx.exponent_cap(),
        });
    }
    let mut gens = Vec::new();
    let mut exps = vec![0u64; ctx.num_vars()];
    compositions(&vars, n, &mut exps, &mut gens);
    Ok(MonomialIdeal::from_unchecked(ctx.clone(), gens))
}

fn compositions(vars: &[usize], remaining: u64, exps: &mut Vec<u64>, out: &mut Vec<Monomial>) {
    match vars {
        [] => unreachable!("nonempty support"),
        [last] => {
            exps[*last] = remaining;
            out.push(Monomial::new(exps.clone()));
            exps[*last] = 0;
        }
        [first, rest @ ..] => {
            for e in (0..=remaining).rev() {
                exps[*first] = e;
                compositions(rest, remaining - e, exps, out);
            }
            exps[*first] = 0;
        }
    }
}

/// A proper nonzero squarefree monomial ideal together with its minimal primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeIdeal {
    ideal: MonomialIdeal,
    decomposition: PrimeDecomposition,
}

impl SquarefreeIdeal {
    pub fn new(ideal: MonomialIdeal) -> Result<Self> {
        if !ideal.is_proper_nonzero() {
            return Err(Error::ZeroOrUnitIdeal {
                op: "symbolic power",
            });
        }
        if !ideal.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let decomposition = minimal_primes(&ideal)?;
        Ok(SquarefreeIdeal {
            ideal,
            decomposition,
        })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn context(&self) -> &Arc<RingContext> {
        self.ideal.context()
    }

    pub fn decomposition(&self) -> &PrimeDecomposition {
        &self.decomposition
    }

    pub fn minimal_primes(&self) -> &[PrimeSupport] {
        &self.decomposition.minimal_primes
    }

    pub fn big_height(&self) -> usize {
        self.decomposition.big_height
    }

    /// Explicit generators of `I^(n)`; `I^(0)` is the unit ideal.
    pub fn symbolic_power(&self, n: u64) -> Result<MonomialIdeal> {
        if n == 0 {
            return Ok(MonomialIdeal::unit(self.context().clone()));
        }
        let parts = self
            .minimal_primes()
            .iter()
            .map(|p| prime_power_gens(self.context(), p, n))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::intersect_all(&parts)
    }

    /// Membership in `I^(n)` without expanding generators.
    pub fn symbolic_contains(&self, m: &Monomial, n: u64) -> bool {
        self.minimal_primes().iter().all(|p| p.order_of(m) >= n)
    }

    pub fn power(&self, n: u64) -> Result<MonomialIdeal> {
        self.ideal.power(n)
    }
}

pub fn symbolic_power(ideal: &MonomialIdeal, n: u64) -> Result<MonomialIdeal> {
    SquarefreeIdeal::new(ideal.clone())?.symbolic_power(n)
}

pub fn symbolic_membership(m: &Monomial, ideal: &MonomialIdeal, n: u64) -> Result<bool> {
    if m.num_vars() != ideal.context().num_vars() {
        return Err(Error::ContextMismatch {
            left: ideal.context().num_vars(),
            right: m.num_vars(),
        });
    }
    Ok(SquarefreeIdeal::new(ideal.clone())?.symbolic_contains(m, n))
}
