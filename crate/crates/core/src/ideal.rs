//! Monomial ideals held by their canonical minimal generating set.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, RingContext, MAX_FROBENIUS_Q};

/// A monomial ideal. Generators form an antichain under divisibility and are
/// sorted in descending lexicographic order, so two ideals are equal exactly
/// when their representations are.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ctx: Arc<RingContext>,
    gens: Vec<Monomial>,
}

/// Drop duplicates and every monomial strictly divisible by another, then sort.
fn minimal_antichain(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    let mut seen = HashSet::with_capacity(gens.len());
    gens.retain(|g| seen.insert(g.clone()));
    gens.sort_by_cached_key(Monomial::degree);

    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        // kept elements have degree <= deg(g); an equal-degree divisor would equal g
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_unstable_by(|a, b| b.cmp(a));
    kept
}

impl MonomialIdeal {
    /// Build the ideal generated by `gens`, minimalizing them.
    pub fn minimalize(ctx: Arc<RingContext>, gens: Vec<Monomial>) -> Result<Self> {
        if let Some(bad) = gens.iter().find(|g| g.num_vars() != ctx.num_vars()) {
            return Err(Error::ContextMismatch {
                left: ctx.num_vars(),
                right: bad.num_vars(),
            });
        }
        Ok(Self::from_unchecked(ctx, gens))
    }

    pub(crate) fn from_unchecked(ctx: Arc<RingContext>, gens: Vec<Monomial>) -> Self {
        MonomialIdeal {
            ctx,
            gens: minimal_antichain(gens),
        }
    }

    /// Convenience constructor from raw exponent vectors.
    pub fn from_exponents(ctx: Arc<RingContext>, gens: &[&[u64]]) -> Result<Self> {
        let gens = gens.iter().map(|e| Monomial::new(e.to_vec())).collect();
        Self::minimalize(ctx, gens)
    }

    pub fn zero(ctx: Arc<RingContext>) -> Self {
        MonomialIdeal { ctx, gens: vec![] }
    }

    pub fn unit(ctx: Arc<RingContext>) -> Self {
        let one = Monomial::one(ctx.num_vars());
        MonomialIdeal {
            ctx,
            gens: vec![one],
        }
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_v)`.
    pub fn maximal(ctx: Arc<RingContext>) -> Self {
        let v = ctx.num_vars();
        let gens = (0..v).map(|i| Monomial::pure_power(v, i, 1)).collect();
        Self::from_unchecked(ctx, gens)
    }

    pub fn context(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    fn same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch {
                left: self.ctx.num_vars(),
                right: other.ctx.num_vars(),
            });
        }
        Ok(())
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        debug_assert_eq!(m.num_vars(), self.ctx.num_vars());
        self.gens.iter().any(|g| g.divides(m))
    }

    /// First generator of `other` lying outside `self`, if any.
    pub fn first_non_member<'a>(&self, other: &'a MonomialIdeal) -> Result<Option<&'a Monomial>> {
        self.same_ring(other)?;
        Ok(other.gens.iter().find(|g| !self.contains_monomial(g)))
    }

    /// `other ⊆ self`.
    pub fn ideal_contains(&self, other: &MonomialIdeal) -> Result<bool> {
        Ok(self.first_non_member(other)?.is_none())
    }

    pub fn add(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_unchecked(self.ctx.clone(), gens))
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let cap = self.ctx.exponent_cap();
        let mut products = HashSet::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                products.insert(g.mul(h, cap)?);
            }
        }
        Ok(Self::from_unchecked(
            self.ctx.clone(),
            products.into_iter().collect(),
        ))
    }

    /// `I^n`, with `I^0` the unit ideal.
    pub fn power(&self, n: u64) -> Result<MonomialIdeal> {
        let mut acc = Self::unit(self.ctx.clone());
        for _ in 0..n {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let mut lcms = HashSet::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                lcms.insert(g.lcm(h));
            }
        }
        Ok(Self::from_unchecked(
            self.ctx.clone(),
            lcms.into_iter().collect(),
        ))
    }

    /// Intersection of a nonempty family, folded smallest-first.
    pub fn intersect_all(ideals: &[MonomialIdeal]) -> Result<MonomialIdeal> {
        let mut order: Vec<&MonomialIdeal> = ideals.iter().collect();
        order.sort_by_key(|i| i.num_generators());
        let mut iter = order.into_iter();
        let first = iter
            .next()
            .ok_or_else(|| Error::InvalidParameter("empty intersection".into()))?
            .clone();
        iter.try_fold(first, |acc, next| acc.intersect(next))
    }

    /// `(I : m)` for a monomial `m`.
    pub fn colon(&self, m: &Monomial) -> Result<MonomialIdeal> {
        if m.num_vars() != self.ctx.num_vars() {
            return Err(Error::ContextMismatch {
                left: self.ctx.num_vars(),
                right: m.num_vars(),
            });
        }
        let gens = self.gens.iter().map(|g| g.quotient_by_gcd(m)).collect();
        Ok(Self::from_unchecked(self.ctx.clone(), gens))
    }

    /// `(I : J) = ⋂_{h ∈ gens(J)} (I : h)`.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        if other.is_zero() {
            return Err(Error::ColonByZero);
        }
        let parts = other
            .gens
            .iter()
            .map(|h| self.colon(h))
            .collect::<Result<Vec<_>>>()?;
        Self::intersect_all(&parts)
    }

    /// Frobenius bracket power `I^{[q]}`: every generator raised to the q-th power.
    pub fn bracket_power(&self, q: u64) -> Result<MonomialIdeal> {
        if q == 0 || q > MAX_FROBENIUS_Q {
            return Err(Error::FrobeniusOutOfRange {
                q,
                max: MAX_FROBENIUS_Q,
            });
        }
        let cap = self.ctx.exponent_cap();
        let mut gens = self
            .gens
            .iter()
            .map(|g| g.scale(q, cap))
            .collect::<Result<Vec<_>>>()?;
        // scaling preserves both the antichain and the order
        gens.sort_unstable_by(|a, b| b.cmp(a));
        Ok(MonomialIdeal {
            ctx: self.ctx.clone(),
            gens,
        })
    }

    pub fn radical(&self) -> MonomialIdeal {
        let gens = self.gens.iter().map(Monomial::radical).collect();
        Self::from_unchecked(self.ctx.clone(), gens)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Every monomial `g * m` for `g` a generator.
    pub fn scale_by(&self, m: &Monomial) -> Result<MonomialIdeal> {
        let cap = self.ctx.exponent_cap();
        let gens = self
            .gens
            .iter()
            .map(|g| g.mul(m, cap))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_unchecked(self.ctx.clone(), gens))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display(&self.ctx))?;
        }
        f.write_str(")")
    }
}
