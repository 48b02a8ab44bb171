//! Test-only helpers: seeded random ideals and a brute-force membership
//! oracle that never looks at the library's generator sets for derived ideals.

#![allow(dead_code)]

use std::sync::Arc;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use symbolic_powers::{Monomial, MonomialIdeal, RingContext};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_ideal(
    rng: &mut impl Rng,
    num_vars: usize,
    max_gens: usize,
    max_exp: u64,
) -> MonomialIdeal {
    let ctx = RingContext::xyz(num_vars).unwrap();
    let count = rng.gen_range(1..=max_gens);
    let gens = (0..count)
        .map(|_| Monomial::new((0..num_vars).map(|_| rng.gen_range(0..=max_exp)).collect()))
        .collect();
    MonomialIdeal::minimalize(ctx, gens).unwrap()
}

/// A random proper nonzero squarefree ideal with every generator of degree >= 1.
pub fn random_squarefree(rng: &mut impl Rng, max_vars: usize, max_gens: usize) -> MonomialIdeal {
    let num_vars = rng.gen_range(2..=max_vars);
    let ctx = RingContext::xyz(num_vars).unwrap();
    let count = rng.gen_range(1..=max_gens);
    let gens = (0..count)
        .map(|_| loop {
            let e: Vec<u64> = (0..num_vars).map(|_| rng.gen_range(0..=1)).collect();
            if e.iter().any(|&x| x > 0) {
                break Monomial::new(e);
            }
        })
        .collect();
    MonomialIdeal::minimalize(ctx, gens).unwrap()
}

/// Every monomial with all exponents `<= cap`.
pub fn box_monomials(num_vars: usize, cap: u64) -> Vec<Monomial> {
    let mut out = vec![vec![]];
    for _ in 0..num_vars {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u64>| {
                (0..=cap).map(move |e| {
                    let mut p = prefix.clone();
                    p.push(e);
                    p
                })
            })
            .collect();
    }
    out.into_iter().map(Monomial::new).collect()
}

fn mono(e: Vec<u64>) -> Monomial {
    Monomial::new(e)
}

/// `m ∈ (gens)`: some listed generator divides `m` coordinatewise.
pub fn generated_by(gens: &[Monomial], m: &Monomial) -> bool {
    gens.iter()
        .any(|g| g.exponents().iter().zip(m.exponents()).all(|(a, b)| a <= b))
}

/// All divisors of `m`.
pub fn divisors(m: &Monomial) -> Vec<Monomial> {
    let mut out = vec![vec![]];
    for &e in m.exponents() {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u64>| {
                (0..=e).map(move |x| {
                    let mut p = prefix.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }
    out.into_iter().map(mono).collect()
}

pub fn quotient(m: &Monomial, d: &Monomial) -> Monomial {
    mono(
        m.exponents()
            .iter()
            .zip(d.exponents())
            .map(|(a, b)| a - b)
            .collect(),
    )
}

pub fn times(a: &Monomial, b: &Monomial) -> Monomial {
    mono(
        a.exponents()
            .iter()
            .zip(b.exponents())
            .map(|(x, y)| x + y)
            .collect(),
    )
}

/// `m ∈ I J` by searching factorizations `m = d (m/d)`.
pub fn in_product(i: &[Monomial], j: &[Monomial], m: &Monomial) -> bool {
    divisors(m)
        .iter()
        .any(|d| generated_by(i, d) && generated_by(j, &quotient(m, d)))
}

/// `m ∈ I^n` by recursive factorization, memoized on `(n, m)`.
pub fn in_power(i: &[Monomial], n: u64, m: &Monomial) -> bool {
    PowerOracle::new(i).contains(n, m)
}

pub struct PowerOracle<'a> {
    gens: &'a [Monomial],
    memo: std::collections::HashMap<(u64, Monomial), bool>,
}

impl<'a> PowerOracle<'a> {
    pub fn new(gens: &'a [Monomial]) -> Self {
        PowerOracle {
            gens,
            memo: Default::default(),
        }
    }

    pub fn contains(&mut self, n: u64, m: &Monomial) -> bool {
        if n == 0 {
            return true;
        }
        if let Some(&hit) = self.memo.get(&(n, m.clone())) {
            return hit;
        }
        let found = divisors(m)
            .iter()
            .any(|d| generated_by(self.gens, d) && self.contains(n - 1, &quotient(m, d)));
        self.memo.insert((n, m.clone()), found);
        found
    }
}

/// `m ∈ I^[q]`: some generator raised to the q-th power divides `m`.
pub fn in_bracket(i: &[Monomial], q: u64, m: &Monomial) -> bool {
    i.iter().any(|g| {
        g.exponents()
            .iter()
            .zip(m.exponents())
            .all(|(a, b)| a * q <= *b)
    })
}

/// `m ∈ (I : J)`: `m g ∈ I` for each generator `g` of `J`.
pub fn in_colon(i: &[Monomial], j: &[Monomial], m: &Monomial) -> bool {
    j.iter().all(|g| generated_by(i, &times(m, g)))
}

/// `m ∈ rad(I)`: a high enough power of `m` lies in `I`.
pub fn in_radical(i: &[Monomial], m: &Monomial) -> bool {
    let max_gen = i
        .iter()
        .flat_map(|g| g.exponents().iter().copied())
        .max()
        .unwrap_or(0)
        .max(1);
    let p = mono(m.exponents().iter().map(|&e| e * max_gen).collect());
    generated_by(i, &p)
}

/// `m ∈ I^(n)` for squarefree `I` straight from the definition: for every
/// minimal vertex cover `C` of the generators, `Σ_{i ∈ C} m_i >= n`. Covers are
/// enumerated as all variable subsets meeting every generator, pruned to the
/// inclusion-minimal ones.
pub fn in_symbolic(i: &[Monomial], n: u64, m: &Monomial) -> bool {
    minimal_covers(i)
        .iter()
        .all(|c| c.iter().map(|&v| m.exponents()[v]).sum::<u64>() >= n)
}

pub fn minimal_covers(i: &[Monomial]) -> Vec<Vec<usize>> {
    let v = i[0].num_vars();
    let covers: Vec<u32> = (0u32..(1 << v))
        .filter(|&mask| {
            i.iter().all(|g| {
                g.exponents()
                    .iter()
                    .enumerate()
                    .any(|(k, &e)| e > 0 && mask & (1 << k) != 0)
            })
        })
        .collect();
    covers
        .iter()
        .filter(|&&c| !covers.iter().any(|&d| d != c && d & c == d))
        .map(|&c| (0..v).filter(|k| c & (1 << k) != 0).collect())
        .collect()
}

pub fn ctx(n: usize) -> Arc<RingContext> {
    RingContext::xyz(n).unwrap()
}

/// Smallest prime power `>= n`.
pub fn next_prime_power(n: u64) -> u64 {
    (n.max(2)..)
        .find(|&q| {
            let p = (2..=q).find(|d| q % d == 0).unwrap();
            let mut r = q;
            while r % p == 0 {
                r /= p;
            }
            r == 1
        })
        .unwrap()
}
