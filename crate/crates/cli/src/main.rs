//! `symb`: command-line front end for the monomial ideal toolkit.
//!
//! Exit status: 0 success, 1 a containment/criterion failed under `--assert`,
//! 2 usage error, 3 computation error.

mod input;
mod render;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use symbolic_powers::containment::{
    bound, contains_symbolic_in_power, harbourne_sweep, reports_to_csv, sfr_step_check,
    star_configuration, star_sharpness_check, BoundQuery,
};
use symbolic_powers::frobenius::{
    fedder_check, glassbrenner_check, lemma_fpure_key_check, lemma_inclusion_check,
    lemma_qcomparison_check, lemma_sfr_key_check, CriterionReport, InclusionReport,
};
use symbolic_powers::{
    irreducible_decomposition, minimal_primes, sharp_containment, MonomialIdeal, SquarefreeIdeal,
};

use input::{monomial_arg, second_ideal, IdealInput};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute(symbolic_powers::Error),
}

impl From<symbolic_powers::Error> for CliError {
    fn from(e: symbolic_powers::Error) -> Self {
        match e {
            symbolic_powers::Error::Parse(msg) => CliError::Usage(msg),
            other => CliError::Compute(other),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "symb",
    version,
    about = "Symbolic, ordinary and Frobenius powers of monomial ideals"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = OutputFormat::Table, global = true)]
    format: OutputFormat,

    /// Write the report here instead of standard output
    #[arg(long, value_name = "PATH", global = true)]
    out: Option<PathBuf>,

    /// Exit with status 1 when a containment or criterion fails
    #[arg(long, global = true)]
    assert: bool,

    /// Accept any positive q, not only prime powers
    #[arg(long, global = true)]
    allow_any_q: bool,

    #[command(subcommand)]
    command: Command,
}

/// `q` either directly or as `p^e`.
#[derive(Debug, clap::Args)]
struct FrobeniusArgs {
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    e: Option<u32>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Lemma {
    /// I^{ht+kt-h+1} ⊆ (u_1^t, ..., u_h^t)^{k+1}
    Inclusion,
    /// I^{(hq+kq-h+1)} ⊆ (I^{(k+1)})^[q]
    Qcomparison,
    /// (I^[q] : I) ⊆ (I^n : I^{(hn-h+1)})^[q]
    FpureKey,
    /// (I^d : I^{(d)})(I^[q] : I) ⊆ (I I^{(d+1-h)} : I^{(d)})^[q]
    SfrKey,
    /// I^{(d)} ⊆ I I^{(d+1-h)}
    SfrStep,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
#[value(rename_all = "UPPER")]
enum Regime {
    Els,
    Fpure,
    Sfr,
    Equality,
    Licci,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Irreducible components, minimal primes and big height
    Decompose(#[command(flatten)] IdealInput),
    /// Generators of the symbolic power I^(n)
    SymbPow {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long)]
        n: u64,
    },
    /// Generators of the ordinary power I^n
    Pow {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long)]
        n: u64,
    },
    /// Frobenius bracket power I^[q]
    BracketPow {
        #[command(flatten)]
        input: IdealInput,
        #[command(flatten)]
        frob: FrobeniusArgs,
    },
    /// Colon ideal (I : J) or (I : m)
    Colon {
        #[command(flatten)]
        input: IdealInput,
        /// Generators of J in the ring of I, e.g. "x*y, z"
        #[arg(long, conflicts_with = "by_monomial")]
        by: Option<String>,
        #[arg(long)]
        by_monomial: Option<String>,
    },
    /// Decide I^(a) ⊆ I^b
    Contains {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
    },
    /// Harbourne containments I^(hn-h+1) ⊆ I^n with minimal exponents
    Sweep {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long, default_value_t = 3)]
        n_max: u64,
    },
    /// Fedder's criterion at q = p^e, or scanned over e = 1..=e-max
    Fedder {
        #[command(flatten)]
        input: IdealInput,
        #[command(flatten)]
        frob: FrobeniusArgs,
        #[arg(long, default_value_t = 4)]
        e_max: u32,
    },
    /// Glassbrenner's criterion for a multiplier c
    Glassbrenner {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long)]
        c: String,
        #[command(flatten)]
        frob: FrobeniusArgs,
    },
    /// Check one of the colon/power containments on an explicit ideal
    LemmaCheck {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long, value_enum)]
        lemma: Lemma,
        #[arg(long)]
        t: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        d: Option<u64>,
        #[command(flatten)]
        frob: FrobeniusArgs,
    },
    /// Star configuration, optionally with its sharpness check at n
    Star {
        #[arg(long)]
        v: usize,
        #[arg(long)]
        h: usize,
        #[arg(long)]
        n: Option<u64>,
    },
    /// Largest m with I_t^(k) ⊆ I_t^m for generic determinantal ideals
    DetSharp {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        t: u64,
        /// Single k; otherwise k = 1..=k-max
        #[arg(long, conflicts_with = "k_max")]
        k: Option<u64>,
        #[arg(long)]
        k_max: Option<u64>,
        #[arg(long)]
        search_bound: Option<usize>,
    },
    /// Smallest symbolic exponent guaranteed by a containment theorem
    Bound {
        #[arg(long, value_enum)]
        regime: Regime,
        #[arg(long)]
        h: u64,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        b: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
    },
}

/// Rendered output plus whether a mathematical check came out negative.
struct Report {
    text: String,
    negative: bool,
    rows: usize,
}

impl Report {
    fn new(text: String) -> Self {
        Report {
            text,
            negative: false,
            rows: 0,
        }
    }
}

fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let p = (2..)
        .take_while(|d| d * d <= q)
        .find(|d| q.is_multiple_of(*d))
        .unwrap_or(q);
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
    }
    r == 1
}

impl FrobeniusArgs {
    fn resolve(&self, allow_any: bool) -> Result<Option<u64>, CliError> {
        let q = match (self.q, self.p, self.e) {
            (None, None, None) => return Ok(None),
            (Some(q), None, None) => q,
            (None, Some(p), Some(e)) => {
                if !allow_any && !is_prime_power(p) {
                    return Err(CliError::Usage(format!("--p {p} is not prime")));
                }
                p.checked_pow(e)
                    .ok_or_else(|| CliError::Usage(format!("{p}^{e} overflows")))?
            }
            _ => {
                return Err(CliError::Usage(
                    "give either --q or both --p and --e".into(),
                ))
            }
        };
        if !allow_any && !is_prime_power(q) {
            return Err(CliError::Usage(format!(
                "q = {q} is not a prime power (use --allow-any-q to override)"
            )));
        }
        Ok(Some(q))
    }

    fn require(&self, allow_any: bool) -> Result<u64, CliError> {
        self.resolve(allow_any)?
            .ok_or_else(|| CliError::Usage("missing --q or --p/--e".into()))
    }
}

fn squarefree(input: &IdealInput) -> Result<SquarefreeIdeal, CliError> {
    Ok(SquarefreeIdeal::new(input.load()?)?)
}

fn need(name: &str, v: Option<u64>) -> Result<u64, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("--{name} is required here")))
}

fn criterion_reports(
    reports: &[CriterionReport],
    ideal: &MonomialIdeal,
    format: OutputFormat,
    c: Option<&str>,
) -> Report {
    let ctx = ideal.context();
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            vec![
                r.q.to_string(),
                if r.passed { "PASS" } else { "FAIL" }.to_string(),
                r.witness
                    .as_ref()
                    .map(|w| w.display(ctx).to_string())
                    .unwrap_or_else(|| "-".into()),
                r.colon_ideal.num_generators().to_string(),
            ]
        })
        .collect();
    let text = render::rows(
        &["q", "result", "witness", "colon_gens"],
        &rows,
        format,
        || {
            let items: Vec<_> = reports
                .iter()
                .map(|r| r.to_json_with_multiplier(c))
                .collect();
            if items.len() == 1 {
                items.into_iter().next().unwrap()
            } else {
                serde_json::Value::Array(items)
            }
        },
    );
    Report {
        text,
        negative: reports.iter().any(|r| !r.passed),
        rows: reports.len(),
    }
}

fn inclusion_report(
    name: &str,
    params: String,
    r: &InclusionReport,
    ideal: &MonomialIdeal,
    format: OutputFormat,
) -> Report {
    let ctx = ideal.context();
    let cex = r
        .counterexample
        .as_ref()
        .map(|m| m.display(ctx).to_string());
    let rows = vec![vec![
        name.to_string(),
        params.clone(),
        r.holds.to_string(),
        r.below_threshold.to_string(),
        cex.clone().unwrap_or_else(|| "-".into()),
    ]];
    let text = render::rows(
        &[
            "lemma",
            "params",
            "holds",
            "below_threshold",
            "counterexample",
        ],
        &rows,
        format,
        || json!({"lemma": name, "params": params, "holds": r.holds, "below_threshold": r.below_threshold, "counterexample": cex}),
    );
    Report {
        text,
        negative: !r.holds,
        rows: 1,
    }
}

fn execute(cli: &Cli) -> Result<Report, CliError> {
    let format = cli.format;
    let any_q = cli.allow_any_q;
    Ok(match &cli.command {
        Command::Decompose(input) => {
            let ideal = input.load()?;
            let comps = irreducible_decomposition(&ideal)?;
            let primes = minimal_primes(&ideal)?;
            let ctx = ideal.context();
            let mut rows: Vec<Vec<String>> = comps
                .iter()
                .map(|c| vec!["component".into(), c.to_string()])
                .collect();
            rows.extend(
                primes
                    .minimal_primes
                    .iter()
                    .map(|p| vec!["minimal_prime".into(), p.display(ctx).to_string()]),
            );
            rows.push(vec!["big_height".into(), primes.big_height.to_string()]);
            let text = render::rows(&["kind", "value"], &rows, format, || {
                json!({
                    "components": comps.iter().map(|c| symbolic_powers::format::IdealDocument::from_ideal(&c.to_ideal())).collect::<Vec<_>>(),
                    "minimal_primes": primes.minimal_primes.iter().map(|p| p.display(ctx).to_string()).collect::<Vec<_>>(),
                    "big_height": primes.big_height,
                })
            });
            Report {
                text,
                negative: false,
                rows: rows.len(),
            }
        }
        Command::SymbPow { input, n } => {
            let result = squarefree(input)?.symbolic_power(*n)?;
            Report {
                rows: result.num_generators(),
                ..Report::new(render::ideal(&result, format))
            }
        }
        Command::Pow { input, n } => {
            let result = input.load()?.power(*n)?;
            Report {
                rows: result.num_generators(),
                ..Report::new(render::ideal(&result, format))
            }
        }
        Command::BracketPow { input, frob } => {
            let q = frob.require(any_q)?;
            let result = input.load()?.bracket_power(q)?;
            Report {
                rows: result.num_generators(),
                ..Report::new(render::ideal(&result, format))
            }
        }
        Command::Colon {
            input,
            by,
            by_monomial,
        } => {
            let ideal = input.load()?;
            let result = match (by, by_monomial) {
                (Some(j), None) => ideal.colon_ideal(&second_ideal(&ideal, "--by", j)?)?,
                (None, Some(m)) => ideal.colon(&monomial_arg(&ideal, "--by-monomial", m)?)?,
                _ => return Err(CliError::Usage("give --by or --by-monomial".into())),
            };
            Report {
                rows: result.num_generators(),
                ..Report::new(render::ideal(&result, format))
            }
        }
        Command::Contains { input, a, b } => {
            let s = squarefree(input)?;
            let report = contains_symbolic_in_power(&s, *a, *b)?;
            containment_output(&s, &[report], format)
        }
        Command::Sweep { input, n_max } => {
            let s = squarefree(input)?;
            let reports = harbourne_sweep(&s, *n_max)?;
            containment_output(&s, &reports, format)
        }
        Command::Fedder { input, frob, e_max } => {
            let ideal = input.load()?;
            let reports = match frob.resolve(any_q)? {
                Some(q) => vec![fedder_check(&ideal, q)?],
                None => {
                    let p = frob.p.unwrap_or(2);
                    if !any_q && !is_prime_power(p) {
                        return Err(CliError::Usage(format!("--p {p} is not prime")));
                    }
                    symbolic_powers::frobenius::fedder_scan(&ideal, p, *e_max)?
                }
            };
            criterion_reports(&reports, &ideal, format, None)
        }
        Command::Glassbrenner { input, c, frob } => {
            let ideal = input.load()?;
            let q = frob.require(any_q)?;
            let c_mono = monomial_arg(&ideal, "--c", c)?;
            let report = glassbrenner_check(&ideal, &c_mono, q)?;
            criterion_reports(&[report], &ideal, format, Some(c))
        }
        Command::LemmaCheck {
            input,
            lemma,
            t,
            k,
            n,
            d,
            frob,
        } => {
            let q = frob.resolve(any_q)?;
            let need_q = || q.ok_or_else(|| CliError::Usage("missing --q or --p/--e".into()));
            match lemma {
                Lemma::Inclusion => {
                    let ideal = input.load()?;
                    let (t, k) = (need("t", *t)?, need("k", *k)?);
                    let r = lemma_inclusion_check(&ideal, t, k)?;
                    inclusion_report("inclusion", format!("t={t} k={k}"), &r, &ideal, format)
                }
                Lemma::Qcomparison => {
                    let s = squarefree(input)?;
                    let (k, q) = (need("k", *k)?, need_q()?);
                    let r = lemma_qcomparison_check(&s, k, q)?;
                    inclusion_report("qcomparison", format!("k={k} q={q}"), &r, s.ideal(), format)
                }
                Lemma::FpureKey => {
                    let s = squarefree(input)?;
                    let (n, q) = (need("n", *n)?, need_q()?);
                    let r = lemma_fpure_key_check(&s, n, q)?;
                    inclusion_report("fpure-key", format!("n={n} q={q}"), &r, s.ideal(), format)
                }
                Lemma::SfrKey => {
                    let s = squarefree(input)?;
                    let (d, q) = (need("d", *d)?, need_q()?);
                    let r = lemma_sfr_key_check(&s, d, q)?;
                    inclusion_report("sfr-key", format!("d={d} q={q}"), &r, s.ideal(), format)
                }
                Lemma::SfrStep => {
                    let s = squarefree(input)?;
                    let d = need("d", *d)?;
                    let r = sfr_step_check(&s, d)?;
                    inclusion_report("sfr-step", format!("d={d}"), &r, s.ideal(), format)
                }
            }
        }
        Command::Star { v, h, n } => {
            let star = star_configuration(*v, *h)?;
            match n {
                None => Report {
                    rows: star.num_generators(),
                    ..Report::new(render::ideal(&star, format))
                },
                Some(n) => {
                    let sharp = star_sharpness_check(*v, *h, *n)?;
                    let hh = *h as u64;
                    let rows = vec![vec![
                        v.to_string(),
                        h.to_string(),
                        n.to_string(),
                        (hh * n - hh).to_string(),
                        sharp.to_string(),
                    ]];
                    let text = render::rows(
                        &["v", "h", "n", "a", "sharp"],
                        &rows,
                        format,
                        || json!({"v": v, "h": h, "n": n, "a": hh * n - hh, "sharp": sharp, "ideal": symbolic_powers::format::IdealDocument::from_ideal(&star)}),
                    );
                    Report {
                        text,
                        negative: !sharp,
                        rows: 1,
                    }
                }
            }
        }
        Command::DetSharp {
            n,
            t,
            k,
            k_max,
            search_bound,
        } => {
            let ks: Vec<u64> = match (k, k_max) {
                (Some(k), None) => vec![*k],
                (None, Some(m)) => (1..=*m).collect(),
                _ => return Err(CliError::Usage("give --k or --k-max".into())),
            };
            let reports = ks
                .iter()
                .map(|&k| sharp_containment(*n, *t, k, *search_bound))
                .collect::<Result<Vec<_>, _>>()?;
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    vec![
                        r.k.to_string(),
                        r.sharp_m.to_string(),
                        r.formula_m.to_string(),
                        r.witness
                            .as_ref()
                            .map(|w| format!("{:?}", w.sizes()))
                            .unwrap_or_else(|| "-".into()),
                    ]
                })
                .collect();
            let text = render::rows(
                &["k", "sharp_m", "formula_m", "witness"],
                &rows,
                format,
                || {
                    if reports.len() == 1 {
                        serde_json::to_value(&reports[0]).unwrap()
                    } else {
                        serde_json::to_value(&reports).unwrap()
                    }
                },
            );
            Report {
                text,
                negative: reports.iter().any(|r| r.sharp_m < r.formula_m),
                rows: reports.len(),
            }
        }
        Command::Bound { regime, h, n, b, k } => {
            let h = *h;
            let target = || {
                n.or(*b)
                    .ok_or_else(|| CliError::Usage("--n or --b is required".into()))
            };
            let query = match regime {
                Regime::Els => BoundQuery::Els { h, n: target()? },
                Regime::Fpure => BoundQuery::FPure { h, n: target()? },
                Regime::Sfr => BoundQuery::Sfr { h, b: target()? },
                Regime::Equality => BoundQuery::Equality {
                    h,
                    k: need("k", *k)?,
                    b: target()?,
                },
                Regime::Licci => BoundQuery::Licci { h, b: target()? },
            };
            let a = bound(query)?;
            let rows = vec![vec![query.to_string(), a.to_string()]];
            let text = render::rows(
                &["query", "a"],
                &rows,
                format,
                || json!({"query": query.to_string(), "a": a}),
            );
            Report {
                text,
                negative: false,
                rows: 1,
            }
        }
    })
}

fn containment_output(
    s: &SquarefreeIdeal,
    reports: &[symbolic_powers::ContainmentReport],
    format: OutputFormat,
) -> Report {
    let ctx = s.context();
    let text = match format {
        OutputFormat::Csv => reports_to_csv(ctx, reports),
        OutputFormat::Json => render::json(&json!({
            "ideal": symbolic_powers::format::IdealDocument::from_ideal(s.ideal()),
            "big_height": s.big_height(),
            "reports": reports.iter().map(|r| r.to_json(ctx)).collect::<Vec<_>>(),
        })),
        OutputFormat::Table => {
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    vec![
                        r.b.to_string(),
                        r.a.to_string(),
                        r.b.to_string(),
                        if r.holds { "yes" } else { "no" }.to_string(),
                        r.minimal_a
                            .map(|a| a.to_string())
                            .unwrap_or_else(|| "-".into()),
                        r.counterexample
                            .as_ref()
                            .map(|m| m.display(ctx).to_string())
                            .unwrap_or_else(|| "-".into()),
                    ]
                })
                .collect();
            render::table(
                &["n", "a", "b", "holds", "minimal_a", "counterexample"],
                &rows,
            )
        }
    };
    Report {
        text,
        negative: reports.iter().any(|r| !r.holds),
        rows: reports.len(),
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("SYMB_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        // a second initialization attempt only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let start = Instant::now();
    let report = match execute(&cli) {
        Ok(r) => r,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(CliError::Compute(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &report.text),
        None => std::io::stdout().write_all(report.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: writing output: {e}");
        return ExitCode::from(3);
    }
    eprintln!("{} rows in {:.2?}", report.rows, start.elapsed());
    if cli.assert && report.negative {
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}
