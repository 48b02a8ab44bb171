//! Acceptance suite. Every criterion is exact; each prints one PASS/FAIL line
//! with its wall time against the stated budget. Exits nonzero on any failure.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use symbolic_powers::containment::{
    bound, contains_symbolic_in_power, harbourne_sweep, star_configuration, star_sharpness_check,
    BoundQuery,
};
use symbolic_powers::determinantal::sharp_containment;
use symbolic_powers::frobenius::{
    fedder_check, fpure_key_threshold, lemma_fpure_key_check, lemma_inclusion_check,
    lemma_qcomparison_check, lemma_sfr_key_check,
};
use symbolic_powers::monomial::{divides, gcd, lcm};
use symbolic_powers::{Monomial, MonomialIdeal, SquarefreeIdeal};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn star(v: usize, h: usize) -> SquarefreeIdeal {
    SquarefreeIdeal::new(star_configuration(v, h).unwrap()).unwrap()
}

/// 25 random squarefree ideals in at most four variables.
fn ideal_pool() -> Vec<SquarefreeIdeal> {
    let mut r = rng(0x5eed_0004);
    (0..25)
        .map(|_| SquarefreeIdeal::new(random_squarefree(&mut r, 4, 6)).unwrap())
        .collect()
}

fn criterion_1() -> Outcome {
    let s = star(4, 2);
    let w = Monomial::new(vec![1, 1, 1, 1]);
    ensure!(s.symbolic_contains(&w, 2), "x1x2x3x4 not in I^(2)");
    ensure!(
        !s.power(2).unwrap().contains_monomial(&w),
        "x1x2x3x4 in I^2"
    );
    let sweep = harbourne_sweep(&s, 2).unwrap();
    let min_a = sweep[1].minimal_a;
    ensure!(min_a == Some(3), "minimal a for I^2 is {min_a:?}");
    Ok("x1x2x3x4 ∈ I^(2) \\ I^2, minimal a = 3".into())
}

fn criterion_2() -> Outcome {
    let mut checked = 0;
    for v in 3..=6usize {
        for h in [2usize, 3] {
            if h >= v {
                continue;
            }
            let s = star(v, h);
            let hh = h as u64;
            for n in 1..=3u64 {
                let r = contains_symbolic_in_power(&s, hh * n - hh + 1, n).unwrap();
                ensure!(r.holds, "v={v} h={h} n={n}: I^(hn-h+1) ⊄ I^n");
                checked += 1;
                if n >= 2 && n * (hh - 1) < v as u64 {
                    let r = contains_symbolic_in_power(&s, hh * n - hh, n).unwrap();
                    ensure!(!r.holds, "v={v} h={h} n={n}: I^(hn-h) ⊆ I^n");
                    ensure!(
                        star_sharpness_check(v, h, n).unwrap(),
                        "witness fails v={v} h={h} n={n}"
                    );
                    checked += 1;
                }
            }
        }
    }
    // n = 1: I^(0) is the unit ideal, never inside the proper ideal I
    Ok(format!("{checked} containment/sharpness checks"))
}

fn criterion_3() -> Outcome {
    let mut r = rng(0x5eed_0003);
    for i in 0..100 {
        let ideal = random_squarefree(&mut r, 6, 8);
        for q in [2, 3] {
            let rep = fedder_check(&ideal, q).unwrap();
            ensure!(rep.passed, "ideal #{i} {ideal} fails at q={q}");
        }
    }
    for a in 2..=5u64 {
        let i = MonomialIdeal::from_exponents(ctx(1), &[&[a]]).unwrap();
        for q in [2, 3, 4] {
            ensure!(
                !fedder_check(&i, q).unwrap().passed,
                "(x^{a}) passes at q={q}"
            );
        }
    }
    Ok("100 squarefree ideals pass at q=2,3; (x^a) fails for a=2..5, q=2,3,4".into())
}

fn criterion_4(pool: &[SquarefreeIdeal]) -> Outcome {
    let mut checked = 0;
    for (i, s) in pool.iter().enumerate() {
        for n in [2, 3] {
            let q = next_prime_power(fpure_key_threshold(s.big_height() as u64, n));
            let r = lemma_fpure_key_check(s, n, q).unwrap();
            ensure!(
                r.holds && !r.below_threshold,
                "ideal #{i} {} n={n} q={q}: {:?}",
                s.ideal(),
                r.counterexample
            );
            checked += 1;
        }
    }
    Ok(format!("{checked} (ideal, n) pairs"))
}

fn criterion_5(pool: &[SquarefreeIdeal]) -> Outcome {
    let mut checked = 0;
    for (i, s) in pool.iter().enumerate() {
        let h = s.big_height() as u64;
        if h < 2 {
            continue;
        }
        for d in [h - 1, h, h + 1] {
            for q in [2, 3] {
                let r = lemma_sfr_key_check(s, d, q).unwrap();
                ensure!(
                    r.holds,
                    "ideal #{i} {} d={d} q={q}: {:?}",
                    s.ideal(),
                    r.counterexample
                );
                checked += 1;
            }
        }
    }
    ensure!(checked > 0, "pool has no ideal of big height >= 2");
    Ok(format!("{checked} (ideal, d, q) triples"))
}

fn criterion_6(pool: &[SquarefreeIdeal]) -> Outcome {
    let mut checked = 0;
    for (i, s) in pool.iter().enumerate() {
        let ideal = s.ideal();
        for k in 0..=2u64 {
            for t in 1..=2u64 {
                let r = lemma_inclusion_check(ideal, t, k).unwrap();
                ensure!(
                    r.holds,
                    "inclusion: ideal #{i} {ideal} t={t} k={k}: {:?}",
                    r.counterexample
                );
                checked += 1;
            }
            for q in [2u64, 3] {
                let r = lemma_inclusion_check(ideal, q, k).unwrap();
                ensure!(r.holds, "inclusion at t=q: ideal #{i} {ideal} q={q} k={k}");
                let lhs = ideal.bracket_power(q).unwrap().power(k + 1).unwrap();
                let rhs = ideal.power(k + 1).unwrap().bracket_power(q).unwrap();
                ensure!(lhs == rhs, "(I^[q])^(k+1) != (I^(k+1))^[q] for #{i}");
                let r = lemma_qcomparison_check(s, k, q).unwrap();
                ensure!(
                    r.holds,
                    "q-comparison: ideal #{i} {ideal} k={k} q={q}: {:?}",
                    r.counterexample
                );
                checked += 2;
            }
        }
    }
    Ok(format!("{checked} containments"))
}

fn criterion_7() -> Outcome {
    let mut r = rng(0x5eed_0007);
    for i in 0..100 {
        let v = 2 + i % 4;
        let a = random_ideal(&mut r, v, 4, 4);
        let b = random_ideal(&mut r, v, 4, 4);
        for q in [2, 3, 4] {
            let colon = a.colon_ideal(&b).unwrap().bracket_power(q).unwrap();
            let colon_q = a
                .bracket_power(q)
                .unwrap()
                .colon_ideal(&b.bracket_power(q).unwrap())
                .unwrap();
            ensure!(colon == colon_q, "colon pair #{i} q={q}: {a} : {b}");
            let meet = a.intersect(&b).unwrap().bracket_power(q).unwrap();
            let meet_q = a
                .bracket_power(q)
                .unwrap()
                .intersect(&b.bracket_power(q).unwrap())
                .unwrap();
            ensure!(meet == meet_q, "intersection pair #{i} q={q}");
        }
    }
    Ok("100 pairs, q=2,3,4".into())
}

fn criterion_8() -> Outcome {
    let mut mismatches = vec![];
    for (n, t) in [(3u64, 2u64), (4, 2), (4, 3), (5, 3)] {
        for k in 1..=12 {
            let r = sharp_containment(n, t, k, None).unwrap();
            let w = r
                .witness
                .as_ref()
                .ok_or(format!("no witness for n={n} t={t} k={k}"))?;
            ensure!(
                w.in_symbolic(t, k).unwrap() && !w.in_ordinary(t, r.sharp_m + 1).unwrap(),
                "witness {:?} invalid for n={n} t={t} k={k}",
                w.sizes()
            );
            if r.sharp_m != r.formula_m {
                mismatches.push(format!(
                    "(n={n},t={t},k={k}): sharp {} vs formula {}",
                    r.sharp_m, r.formula_m
                ));
            }
        }
    }
    ensure!(
        mismatches.is_empty(),
        "{} of 48 cases differ: {}",
        mismatches.len(),
        mismatches.join("; ")
    );
    Ok("sharp_m = ⌊nk/(t(n-t+1))⌋ for all 48 cases".into())
}

fn criterion_9() -> Outcome {
    for h in 1..=10u64 {
        for n in 1..=20u64 {
            ensure!(
                bound(BoundQuery::FPure { h, n }).unwrap() == h * n - h + 1,
                "FPURE h={h} n={n}"
            );
        }
    }
    for b in 1..=20u64 {
        ensure!(
            bound(BoundQuery::Sfr { h: 2, b }).unwrap() == b,
            "SFR h=2 b={b}"
        );
    }
    for n in 1..=20u64 {
        let sfr = bound(BoundQuery::Sfr { h: 3, b: n }).unwrap();
        let licci = bound(BoundQuery::Licci { h: 3, b: n }).unwrap();
        ensure!(sfr == 2 * n - 1, "SFR h=3 n={n}: {sfr}");
        ensure!(licci == 4 * n.div_ceil(2), "LICCI h=3 n={n}: {licci}");
        ensure!(sfr <= licci, "SFR exceeds LICCI at n={n}");
        let gap = licci - sfr;
        ensure!(gap == if n % 2 == 1 { 3 } else { 1 }, "gap {gap} at n={n}");
    }
    Ok("FPURE, SFR(h=2), SFR vs LICCI (h=3, n<=20)".into())
}

fn criterion_10() -> Outcome {
    let mut r = rng(0x5eed_0010);
    let mut instances = 0;
    for i in 0..40 {
        let v = 1 + i % 4;
        let a = random_ideal(&mut r, v, 4, 3);
        let b = random_ideal(&mut r, v, 4, 3);
        let q = 2 + (i as u64) % 2;
        let n = (i as u64) % 3;
        let probe = b.generators()[0].clone();

        let sum = a.add(&b).unwrap();
        let prod = a.multiply(&b).unwrap();
        let pow = a.power(n).unwrap();
        let meet = a.intersect(&b).unwrap();
        let col = a.colon(&probe).unwrap();
        let col_ideal = a.colon_ideal(&b).unwrap();
        let br = a.bracket_power(q).unwrap();
        let rad = a.radical();
        let (ag, bg) = (a.generators(), b.generators());
        let mut power_oracle = PowerOracle::new(ag);

        let cube = box_monomials(v, 6);
        for m in &cube {
            ensure!(
                sum.contains_monomial(m) == (generated_by(ag, m) || generated_by(bg, m)),
                "add #{i}"
            );
            ensure!(
                prod.contains_monomial(m) == in_product(ag, bg, m),
                "multiply #{i}"
            );
            ensure!(
                pow.contains_monomial(m) == power_oracle.contains(n, m),
                "power #{i}"
            );
            ensure!(
                meet.contains_monomial(m) == (generated_by(ag, m) && generated_by(bg, m)),
                "intersect #{i}"
            );
            ensure!(
                col.contains_monomial(m) == generated_by(ag, &times(m, &probe)),
                "colon #{i}"
            );
            ensure!(
                col_ideal.contains_monomial(m) == in_colon(ag, bg, m),
                "colon_ideal #{i}"
            );
            ensure!(
                br.contains_monomial(m) == in_bracket(ag, q, m),
                "bracket #{i}"
            );
            ensure!(
                rad.contains_monomial(m) == in_radical(ag, m),
                "radical #{i}"
            );
            ensure!(
                a.contains_monomial(m) == generated_by(ag, m),
                "contains #{i}"
            );
        }
        ensure!(
            a.ideal_contains(&b).unwrap() == bg.iter().all(|g| generated_by(ag, g)),
            "ideal_contains #{i}"
        );
        for x in cube.iter().skip(i).step_by(211) {
            for y in cube.iter().skip(3 * i).step_by(157) {
                let naive_div = x.exponents().iter().zip(y.exponents()).all(|(p, q)| p <= q);
                ensure!(divides(x, y).unwrap() == naive_div, "divides #{i}");
                let l = lcm(x, y).unwrap();
                let g = gcd(x, y).unwrap();
                ensure!(
                    cube.iter()
                        .filter(|z| divides(x, z).unwrap() && divides(y, z).unwrap())
                        .all(|z| divides(&l, z).unwrap())
                        && divides(x, &l).unwrap()
                        && divides(y, &l).unwrap(),
                    "lcm #{i}"
                );
                ensure!(
                    divides(&g, x).unwrap()
                        && divides(&g, y).unwrap()
                        && cube
                            .iter()
                            .filter(|z| divides(z, x).unwrap() && divides(z, y).unwrap())
                            .all(|z| divides(z, &g).unwrap()),
                    "gcd #{i}"
                );
            }
        }
        instances += 1;
    }
    Ok(format!("{instances} random instances, exponent box 6"))
}

fn run(id: usize, budget: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = panic::catch_unwind(AssertUnwindSafe(f))
        .unwrap_or_else(|e| Err(format!("panic: {:?}", e.downcast_ref::<String>())));
    let elapsed = start.elapsed();
    let (ok, detail) = match outcome {
        Ok(d) if elapsed <= budget => (true, d),
        Ok(d) => (false, format!("{d}; exceeded budget {budget:?}")),
        Err(e) => (false, e),
    };
    println!(
        "[{}] criterion {id:>2} ({:.2?} / {:?}): {detail}",
        if ok { "PASS" } else { "FAIL" },
        elapsed,
        budget
    );
    ok
}

fn main() -> ExitCode {
    let pool = ideal_pool();
    let secs = Duration::from_secs;
    let results = [
        run(1, secs(1), criterion_1),
        run(2, secs(60), criterion_2),
        run(3, secs(30), criterion_3),
        run(4, secs(120), || criterion_4(&pool)),
        run(5, secs(120), || criterion_5(&pool)),
        run(6, secs(60), || criterion_6(&pool)),
        run(7, secs(10), criterion_7),
        run(8, secs(10), criterion_8),
        run(9, secs(1), criterion_9),
        run(10, secs(60), criterion_10),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
