//! Size-vector model of products of minors of a generic `n x n` matrix.
//!
//! A product `δ_1 ⋯ δ_u` of minors of sizes `s_1, ..., s_u` lies in the
//! symbolic power `I_t^(k)` iff `γ_t(s) >= k`, where
//! `γ_j(s) = Σ max(0, s_i - j + 1)`, and `I_t^m = ⋂_{j=1}^{t} I_j^((t-j+1)m)`.
//! Such products generate the powers involved, so containments between them
//! reduce to inequalities on size vectors. This is a model of the ideals, not a
//! polynomial computation. The combinatorics is characteristic-free; the
//! underlying membership results need characteristic 0 or `p > min(t, n-t)`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

/// Multiset of minor sizes, kept sorted in descending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SizeVector {
    n: u64,
    sizes: Vec<u64>,
}

impl SizeVector {
    pub fn new(n: u64, mut sizes: Vec<u64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "matrix size must be positive".into(),
            ));
        }
        if let Some(bad) = sizes.iter().find(|&&s| s == 0 || s > n) {
            return Err(Error::InvalidParameter(format!(
                "minor size {bad} outside 1..={n}"
            )));
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Ok(SizeVector { n, sizes })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    /// Number of minors `u`.
    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    /// Total size `s = Σ s_i`.
    pub fn total(&self) -> u64 {
        self.sizes.iter().sum()
    }

    fn check_index(&self, name: &str, j: u64) -> Result<()> {
        if j == 0 || j > self.n {
            return Err(Error::InvalidParameter(format!(
                "{name} = {j} outside 1..={}",
                self.n
            )));
        }
        Ok(())
    }

    /// `γ_j(s) = Σ max(0, s_i - j + 1)`.
    pub fn gamma(&self, j: u64) -> Result<u64> {
        self.check_index("j", j)?;
        Ok(self.gamma_unchecked(j))
    }

    fn gamma_unchecked(&self, j: u64) -> u64 {
        self.sizes.iter().map(|&s| (s + 1).saturating_sub(j)).sum()
    }

    pub fn in_symbolic(&self, t: u64, k: u64) -> Result<bool> {
        self.check_index("t", t)?;
        Ok(self.gamma_unchecked(t) >= k)
    }

    pub fn in_ordinary(&self, t: u64, m: u64) -> Result<bool> {
        self.check_index("t", t)?;
        Ok((1..=t).all(|j| self.gamma_unchecked(j) >= (t - j + 1) * m))
    }

    /// Largest `m` with the product in `I_t^m`.
    fn max_ordinary_power(&self, t: u64) -> u64 {
        (1..=t)
            .map(|j| self.gamma_unchecked(j) / (t - j + 1))
            .min()
            .expect("t >= 1")
    }

    /// With every `s_i >= t`, the two extreme inequalities `s >= tm` and
    /// `s >= m + (t-1)u` imply membership in `I_t^m`.
    pub fn convexity_check(&self, t: u64, m: u64) -> Result<bool> {
        self.check_index("t", t)?;
        if let Some(bad) = self.sizes.iter().find(|&&s| s < t) {
            return Err(Error::InvalidParameter(format!(
                "minor size {bad} < t = {t}"
            )));
        }
        let s = self.total();
        let u = self.len() as u64;
        let extremes = s >= t * m && s >= m + (t - 1) * u;
        Ok(!extremes || self.max_ordinary_power(t) >= m)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DetContainmentReport {
    pub n: u64,
    pub t: u64,
    pub k: u64,
    /// Largest `m` with `I_t^(k) ⊆ I_t^m` in the size-vector model.
    pub sharp_m: u64,
    /// `⌊nk / (t(n-t+1))⌋`.
    pub formula_m: u64,
    /// A size vector in `I_t^(k)` but outside `I_t^(sharp_m + 1)`.
    pub witness: Option<SizeVector>,
    pub vectors_checked: usize,
    pub characteristic: String,
}

pub fn formula_m(n: u64, t: u64, k: u64) -> u64 {
    n * k / (t * (n - t + 1))
}

/// Multisets of sizes in `lo..=hi` with exactly `len` entries, descending.
fn multisets(lo: u64, hi: u64, len: usize) -> Vec<Vec<u64>> {
    fn go(lo: u64, max: u64, len: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for s in (lo..=max).rev() {
            cur.push(s);
            go(lo, s, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lo, hi, len, &mut Vec::with_capacity(len), &mut out);
    out
}

/// Find the largest `m` with `I_t^(k) ⊆ I_t^m` by exhausting size vectors.
///
/// Vectors with an entry below `t` or with more than `k` entries never give a
/// new obstruction, so the search covers entries in `t..=n` and `u <= k`;
/// `search_bound` overrides the length cap.
pub fn sharp_containment(
    n: u64,
    t: u64,
    k: u64,
    search_bound: Option<usize>,
) -> Result<DetContainmentReport> {
    if t == 0 || t > n {
        return Err(Error::InvalidParameter(format!("t = {t} outside 1..={n}")));
    }
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    let max_len = search_bound.unwrap_or(k as usize);

    // per length: (count, best obstruction)
    let per_len: Vec<(usize, Option<(u64, SizeVector)>)> = (1..=max_len)
        .into_par_iter()
        .map(|len| {
            let mut count = 0;
            let mut best: Option<(u64, SizeVector)> = None;
            for sizes in multisets(t, n, len) {
                let s = SizeVector { n, sizes };
                if s.gamma_unchecked(t) < k {
                    continue;
                }
                count += 1;
                let m = s.max_ordinary_power(t);
                if best.as_ref().is_none_or(|(b, _)| m < *b) {
                    best = Some((m, s));
                }
            }
            (count, best)
        })
        .collect();

    let vectors_checked = per_len.iter().map(|(c, _)| c).sum();
    let mut worst: Option<(u64, SizeVector)> = None;
    for (_, best) in per_len {
        if let Some((m, s)) = best {
            if worst.as_ref().is_none_or(|(w, _)| m < *w) {
                worst = Some((m, s));
            }
        }
    }
    let (sharp_m, witness) = match worst {
        Some((m, s)) => (m, Some(s)),
        None => {
            return Err(Error::InvalidParameter(format!(
                "no size vector of length <= {max_len} reaches I^({k})"
            )))
        }
    };
    Ok(DetContainmentReport {
        n,
        t,
        k,
        sharp_m,
        formula_m: formula_m(n, t, k),
        witness,
        vectors_checked,
        characteristic: format!("0 or p > {}", t.min(n - t)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(n: u64, s: &[u64]) -> SizeVector {
        SizeVector::new(n, s.to_vec()).unwrap()
    }

    #[test]
    fn gamma_values() {
        assert_eq!(sv(3, &[3, 2]).gamma(2).unwrap(), 3);
        assert_eq!(sv(3, &[]).gamma(2).unwrap(), 0);
        assert_eq!(sv(4, &[4]).gamma(1).unwrap(), 4);
        assert!(sv(3, &[3]).gamma(4).is_err());
        assert!(sv(3, &[3]).gamma(0).is_err());
        assert!(SizeVector::new(3, vec![4]).is_err());
    }

    #[test]
    fn membership() {
        assert!(sv(3, &[3, 2]).in_symbolic(2, 3).unwrap());
        assert!(!sv(3, &[3]).in_symbolic(2, 3).unwrap());
        assert!(sv(3, &[1]).in_symbolic(2, 0).unwrap());
        assert!(!sv(3, &[3, 2]).in_ordinary(2, 3).unwrap());
        assert!(sv(3, &[3, 3, 2]).in_ordinary(2, 3).unwrap());
        assert!(sv(3, &[]).in_ordinary(3, 0).unwrap());
    }

    #[test]
    fn sharp_examples() {
        let r = sharp_containment(3, 2, 3, None).unwrap();
        assert_eq!(r.sharp_m, 2);
        assert_eq!(r.formula_m, 2);
        let w = r.witness.unwrap();
        assert!(w.in_symbolic(2, 3).unwrap() && !w.in_ordinary(2, 3).unwrap());
        assert_eq!(sharp_containment(3, 2, 4, None).unwrap().sharp_m, 3);
        for k in 1..=6 {
            assert_eq!(sharp_containment(4, 1, k, None).unwrap().sharp_m, k);
        }
    }

    #[test]
    fn the_witness_for_three_two_three_is_three_two() {
        let r = sharp_containment(3, 2, 3, None).unwrap();
        assert_eq!(r.witness.unwrap().sizes(), &[3, 2]);
    }

    #[test]
    fn convexity_examples() {
        assert!(sv(4, &[3, 3]).convexity_check(2, 2).unwrap());
        assert!(sv(5, &[4, 3, 3]).convexity_check(3, 2).unwrap());
        assert!(sv(5, &[4, 3, 3]).convexity_check(1, 7).unwrap());
        assert!(sv(5, &[4, 1]).convexity_check(2, 1).is_err());
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(sharp_containment(3, 4, 2, None).is_err());
        assert!(sharp_containment(3, 2, 0, None).is_err());
    }
}
