//! Irreducible decomposition, minimal primes and big height.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, RingContext};

/// An irreducible monomial ideal `(x_{i1}^{a1}, ..., x_{ik}^{ak})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IrreducibleComponent {
    ctx: Arc<RingContext>,
    pure_powers: BTreeMap<usize, u64>,
}

impl IrreducibleComponent {
    pub fn pure_powers(&self) -> &BTreeMap<usize, u64> {
        &self.pure_powers
    }

    pub fn support(&self) -> PrimeSupport {
        PrimeSupport::new(self.pure_powers.keys().copied()).expect("components are nonempty")
    }

    pub fn is_prime(&self) -> bool {
        self.pure_powers.values().all(|&a| a == 1)
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let v = self.ctx.num_vars();
        let gens = self
            .pure_powers
            .iter()
            .map(|(&i, &a)| Monomial::pure_power(v, i, a))
            .collect();
        MonomialIdeal::from_unchecked(self.ctx.clone(), gens)
    }

    /// Ideal containment `other ⊆ self`.
    fn contains(&self, other: &IrreducibleComponent) -> bool {
        other
            .pure_powers
            .iter()
            .all(|(i, b)| self.pure_powers.get(i).is_some_and(|a| a <= b))
    }
}

impl fmt::Display for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_ideal().fmt(f)
    }
}

/// A monomial prime, recorded by the set of variables generating it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeSupport {
    variables: BTreeSet<usize>,
}

impl PrimeSupport {
    pub fn new(variables: impl IntoIterator<Item = usize>) -> Result<Self> {
        let variables: BTreeSet<usize> = variables.into_iter().collect();
        if variables.is_empty() {
            return Err(Error::EmptySupport);
        }
        Ok(PrimeSupport { variables })
    }

    pub fn variables(&self) -> &BTreeSet<usize> {
        &self.variables
    }

    pub fn height(&self) -> usize {
        self.variables.len()
    }

    /// Whether the monomial lies in this prime, i.e. uses one of its variables.
    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.variables.iter().any(|&i| m.exponents()[i] > 0)
    }

    /// Sum of the exponents of `m` over the variables of this prime.
    pub fn order_of(&self, m: &Monomial) -> u64 {
        self.variables
            .iter()
            .fold(0u64, |acc, &i| acc.saturating_add(m.exponents()[i]))
    }

    pub fn display<'a>(&'a self, ctx: &'a RingContext) -> impl fmt::Display + 'a {
        PrimeDisplay { prime: self, ctx }
    }
}

struct PrimeDisplay<'a> {
    prime: &'a PrimeSupport,
    ctx: &'a RingContext,
}

impl fmt::Display for PrimeDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, &i) in self.prime.variables.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&self.ctx.var_names()[i])?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeDecomposition {
    pub minimal_primes: Vec<PrimeSupport>,
    pub big_height: usize,
}

fn split(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    let v = ideal.context().num_vars();
    let mixed = ideal
        .generators()
        .iter()
        .find(|g| g.support().nth(1).is_some());
    let Some(g) = mixed else {
        let pure_powers = ideal
            .generators()
            .iter()
            .map(|g| {
                let i = g
                    .support()
                    .next()
                    .expect("proper ideal has no unit generator");
                (i, g.exponents()[i])
            })
            .collect();
        return Ok(vec![IrreducibleComponent {
            ctx: ideal.context().clone(),
            pure_powers,
        }]);
    };

    let var = g.support().next().expect("mixed support");
    let u = Monomial::pure_power(v, var, g.exponents()[var]);
    let mut w = g.exponents().to_vec();
    w[var] = 0;
    let w = Monomial::new(w);

    let left = ideal.add(&MonomialIdeal::from_unchecked(
        ideal.context().clone(),
        vec![u],
    ))?;
    let right = ideal.add(&MonomialIdeal::from_unchecked(
        ideal.context().clone(),
        vec![w],
    ))?;
    let (a, b) = rayon::join(|| split(&left), || split(&right));
    let mut comps = a?;
    comps.extend(b?);
    Ok(prune(comps))
}

fn prune(mut comps: Vec<IrreducibleComponent>) -> Vec<IrreducibleComponent> {
    comps.sort_by(|a, b| a.pure_powers.cmp(&b.pure_powers));
    comps.dedup();
    let keep: Vec<bool> = comps
        .iter()
        .enumerate()
        .map(|(i, c)| {
            !comps
                .iter()
                .enumerate()
                .any(|(j, d)| i != j && c.contains(d))
        })
        .collect();
    comps
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect()
}

/// Irredundant decomposition of `I` into irreducible monomial ideals.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    if !ideal.is_proper_nonzero() {
        return Err(Error::ZeroOrUnitIdeal {
            op: "irreducible decomposition",
        });
    }
    split(ideal)
}

/// Minimal primes of `I` and the largest of their heights.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<PrimeDecomposition> {
    let comps = irreducible_decomposition(ideal)?;
    let mut supports: Vec<PrimeSupport> = comps.iter().map(IrreducibleComponent::support).collect();
    supports.sort();
    supports.dedup();
    let minimal: Vec<PrimeSupport> = supports
        .iter()
        .filter(|p| {
            !supports
                .iter()
                .any(|q| q != *p && q.variables.is_subset(&p.variables))
        })
        .cloned()
        .collect();
    let big_height = minimal.iter().map(PrimeSupport::height).max().unwrap_or(0);
    Ok(PrimeDecomposition {
        minimal_primes: minimal,
        big_height,
    })
}
