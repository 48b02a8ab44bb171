//! Ring contexts and monomials as exponent vectors.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Default cap on any single exponent.
pub const DEFAULT_EXPONENT_CAP: u64 = 1 << 32;

/// Largest Frobenius exponent `q` accepted by bracket powers.
pub const MAX_FROBENIUS_Q: u64 = 1 << 16;

/// The ambient polynomial ring `k[x_1, ..., x_v]`. The field is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingContext {
    var_names: Vec<String>,
    exponent_cap: u64,
}

impl RingContext {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Arc<Self>> {
        Self::with_cap(names, DEFAULT_EXPONENT_CAP)
    }

    pub fn with_cap<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        exponent_cap: u64,
    ) -> Result<Arc<Self>> {
        let var_names: Vec<String> = names.into_iter().map(Into::into).collect();
        if var_names.is_empty() {
            return Err(Error::InvalidContext(
                "at least one variable required".into(),
            ));
        }
        let mut seen = HashSet::new();
        for name in &var_names {
            if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(Error::InvalidContext(format!("bad variable name {name:?}")));
            }
            if name.chars().all(|c| c.is_ascii_digit()) {
                return Err(Error::InvalidContext(format!(
                    "variable name {name:?} is numeric"
                )));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidContext(format!(
                    "duplicate variable {name:?}"
                )));
            }
        }
        if exponent_cap == 0 {
            return Err(Error::InvalidContext(
                "exponent cap must be positive".into(),
            ));
        }
        Ok(Arc::new(RingContext {
            var_names,
            exponent_cap,
        }))
    }

    /// `x1, ..., xv`.
    pub fn indexed(num_vars: usize) -> Result<Arc<Self>> {
        Self::new((1..=num_vars).map(|i| format!("x{i}")))
    }

    /// `x, y, z` for up to three variables, otherwise [`RingContext::indexed`].
    pub fn xyz(num_vars: usize) -> Result<Arc<Self>> {
        match num_vars {
            1..=3 => Self::new(["x", "y", "z"].into_iter().take(num_vars)),
            _ => Self::indexed(num_vars),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.var_names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.var_names.iter().position(|v| v == name)
    }

    pub fn exponent_cap(&self) -> u64 {
        self.exponent_cap
    }
}

/// A monomial `x_1^{a_1} ... x_v^{a_v}`, stored as its exponent vector.
///
/// The derived order is lexicographic on exponent vectors, so that
/// `x^2 > x*y > y^2` when `x` is the first variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<u64>,
}

impl Monomial {
    pub fn new(exponents: Vec<u64>) -> Self {
        Monomial { exponents }
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial {
            exponents: vec![0; num_vars],
        }
    }

    /// The pure power `x_var^exponent`.
    pub fn pure_power(num_vars: usize, var: usize, exponent: u64) -> Self {
        let mut m = Self::one(num_vars);
        m.exponents[var] = exponent;
        m
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u64 {
        self.exponents
            .iter()
            .fold(0u64, |acc, &e| acc.saturating_add(e))
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// Coordinatewise `self <= other`. Both monomials must live in the same ring.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }

    /// `self / gcd(self, other)`, i.e. the generator of `(self) : other`.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Monomial, cap: u64) -> Result<Monomial> {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        self.exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| a.checked_add(b).filter(|&e| e <= cap))
            .collect::<Option<Vec<_>>>()
            .map(Monomial::new)
            .ok_or(Error::ExponentOverflow { cap })
    }

    /// Raise every exponent to `factor` times its value.
    pub fn scale(&self, factor: u64, cap: u64) -> Result<Monomial> {
        self.exponents
            .iter()
            .map(|&a| a.checked_mul(factor).filter(|&e| e <= cap))
            .collect::<Option<Vec<_>>>()
            .map(Monomial::new)
            .ok_or(Error::ExponentOverflow { cap })
    }

    /// Replace every positive exponent by one.
    pub fn radical(&self) -> Monomial {
        Monomial::new(self.exponents.iter().map(|&e| e.min(1)).collect())
    }

    pub fn display<'a>(&'a self, ctx: &'a RingContext) -> MonomialDisplay<'a> {
        MonomialDisplay {
            monomial: self,
            ctx,
        }
    }
}

fn check_same(a: &Monomial, b: &Monomial) -> Result<()> {
    if a.num_vars() != b.num_vars() {
        return Err(Error::ContextMismatch {
            left: a.num_vars(),
            right: b.num_vars(),
        });
    }
    Ok(())
}

/// Checked divisibility test.
pub fn divides(a: &Monomial, b: &Monomial) -> Result<bool> {
    check_same(a, b)?;
    Ok(a.divides(b))
}

pub fn lcm(a: &Monomial, b: &Monomial) -> Result<Monomial> {
    check_same(a, b)?;
    Ok(a.lcm(b))
}

pub fn gcd(a: &Monomial, b: &Monomial) -> Result<Monomial> {
    check_same(a, b)?;
    Ok(a.gcd(b))
}

/// Renders a monomial as `x^2*y`, or `1` for the identity.
pub struct MonomialDisplay<'a> {
    monomial: &'a Monomial,
    ctx: &'a RingContext,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomial.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.monomial.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(&self.ctx.var_names()[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
