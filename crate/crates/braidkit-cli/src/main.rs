//! Command-line front end for braidkit.
//!
//! Exit codes: 0 success / no counterexample, 1 counterexample or
//! verification failure, 2 undecided (fuel exhausted), 3 malformed input.
//! JSON reports have sorted keys and integer-only numbers, so identical
//! invocations are byte-identical across runs and parallelism degrees.

use std::fs;
use std::process::ExitCode;

use braidkit::cable::{classify_cabling, corollary_range_check, special_constraint, sym_hom_enumerate};
use braidkit::hom::{compose_hom, fingerprint, standard_hom, transvect, verify_hom};
use braidkit::suite::{self, SuiteReport};
use braidkit::{BraidWord, Error, Homomorphism, StandardKind, DEFAULT_FUEL};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

const MIN_FUEL: u64 = 10_000;

#[derive(Parser)]
#[command(name = "braidkit", version, about = "Exact braid-group computations")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Work budget for the word problem (minimum 10000).
    #[arg(long, global = true, env = "BRAIDKIT_FUEL", default_value_t = DEFAULT_FUEL)]
    fuel: u64,

    /// Worker threads; 0 means all available cores.
    #[arg(long, global = true, env = "BRAIDKIT_THREADS", default_value_t = 0)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Word-level operations: reduce, compare, commute.
    Word {
        #[command(subcommand)]
        op: WordOp,
    },
    /// Homomorphism operations on the JSON wire format.
    Hom {
        #[command(subcommand)]
        op: HomOp,
    },
    /// Emit a standard homomorphism as JSON.
    Standard {
        /// Which standard map to build.
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Source strand count n.
        #[arg(long)]
        n: usize,
        /// Twist exponent, required for --kind cabling.
        #[arg(long, allow_negative_numbers = true)]
        k: Option<i32>,
        /// Conjugating word, required for --kind inner (e.g. "B5: 1 2").
        #[arg(long)]
        conjugator: Option<String>,
    },
    /// Classify a cabling section up to equivalence.
    ClassifyCabling {
        /// Homomorphism as inline JSON or @file.
        hom: String,
    },
    /// Divisibility screen: special_constraint and range check per m.
    Screen {
        #[arg(long)]
        n: u64,
        /// Largest m to tabulate (from 1).
        #[arg(long)]
        m_max: u64,
    },
    /// Rotated curves intersect: every w(c_i) meets its α_k^±1 image.
    VerifyProp31 {
        /// Strand counts to check.
        #[arg(long, value_delimiter = ',', default_values_t = [5usize, 6])]
        n: Vec<usize>,
        /// Maximum conjugator length in the curve enumeration.
        #[arg(long, default_value_t = 4)]
        max_conj: usize,
    },
    /// No disjoint pair of curves jointly satisfies the rotation
    /// hypothesis.
    VerifyProp32 {
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        max_conj: usize,
    },
    /// Semidirect decomposition round trip on the pattern [2,…,2].
    VerifyLemma61 {
        /// Number of cables.
        #[arg(long, default_value_t = 5)]
        cables: usize,
        /// Number of random elements.
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
    /// Enumerate relation-satisfying tuples in S_k^{n−1}.
    EnumerateSym {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Run a named verification suite.
    Suite {
        /// One of: relations, word-problem, center, prop31, prop32,
        /// roundtrip, classifier, b4-identities, screen, sym,
        /// fingerprints, centralizers.
        name: String,
        /// Strand counts, for prop31/prop32.
        #[arg(long, value_delimiter = ',')]
        n: Option<Vec<usize>>,
        #[arg(long)]
        max_conj: Option<usize>,
        /// Cable count, for roundtrip.
        #[arg(long)]
        cables: Option<usize>,
        /// Sample count, for roundtrip.
        #[arg(long)]
        samples: Option<usize>,
        /// Largest n, for screen.
        #[arg(long)]
        n_max: Option<u64>,
    },
}

#[derive(Subcommand)]
enum WordOp {
    /// Freely reduce a word and decide triviality.
    Reduce { word: String },
    /// Decide equality of two words; exit 1 when they differ.
    Compare { left: String, right: String },
    /// Decide whether two words commute; exit 1 when they do not.
    Commute { left: String, right: String },
}

#[derive(Subcommand)]
enum HomOp {
    /// Build a homomorphism from generator images and verify it.
    Make {
        #[arg(long)]
        source: usize,
        #[arg(long)]
        target: usize,
        /// Generator images in order, one word each (e.g. "B10: 1").
        #[arg(long = "image", required = true)]
        images: Vec<String>,
    },
    /// Verify the braid relations; exit 1 when they fail.
    Verify { hom: String },
    /// Apply a homomorphism to a word.
    Apply { hom: String, word: String },
    /// Transvect by a word in the target group.
    Transvect { hom: String, by: String },
    /// Compose two homomorphisms (outer after inner).
    Compose { outer: String, inner: String },
    /// Equivalence-invariant fingerprint of a verified homomorphism.
    Fingerprint { hom: String },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Trivial,
    Inclusion,
    Diagonal,
    FlipDiagonal,
    Cabling,
    Exceptional,
    Inversion,
    Inner,
}

fn parse_word(s: &str) -> Result<BraidWord, Error> {
    s.parse()
}

fn load_hom(s: &str) -> Result<Homomorphism, Error> {
    let text = match s.strip_prefix('@') {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?,
        None => s.to_string(),
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("bad homomorphism JSON: {e}")))
}

fn hom_json(h: &Homomorphism) -> Value {
    serde_json::to_value(h).expect("homomorphisms serialize")
}

/// Print either the text line or the JSON value, per --format. The
/// default serde_json map is ordered, so keys come out sorted.
fn emit(format: Format, text: &str, jsonv: Value) {
    match format {
        Format::Text => println!("{text}"),
        Format::Json => println!("{jsonv}"),
    }
}

fn emit_suite(format: Format, r: &SuiteReport) -> u8 {
    let verdict = if r.passed { "PASS" } else { "FAIL" };
    emit(
        format,
        &format!(
            "suite {}: {verdict} ({} counterexamples) — {}",
            r.name, r.counterexamples, r.detail
        ),
        serde_json::to_value(r).expect("reports serialize"),
    );
    u8::from(!r.passed)
}

fn exit_for(err: &Error) -> u8 {
    match err {
        Error::Undecided { .. } => 2,
        Error::NonSection(_) => 1,
        _ => 3,
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    let format = cli.format;
    let fuel = cli.fuel;
    match cli.command {
        Command::Word { op } => match op {
            WordOp::Reduce { word } => {
                let w = parse_word(&word)?;
                let trivial = w.is_trivial_with_fuel(fuel)?;
                emit(
                    format,
                    &format!("{w} (trivial: {trivial})"),
                    json!({"reduced": w.to_string(), "trivial": trivial}),
                );
                Ok(0)
            }
            WordOp::Compare { left, right } => {
                let (u, v) = (parse_word(&left)?, parse_word(&right)?);
                let equal = u.equals_with_fuel(&v, fuel)?;
                emit(format, &format!("equal: {equal}"), json!({"equal": equal}));
                Ok(u8::from(!equal))
            }
            WordOp::Commute { left, right } => {
                let (u, v) = (parse_word(&left)?, parse_word(&right)?);
                let commute = u.commutes_with_fuel(&v, fuel)?;
                emit(
                    format,
                    &format!("commute: {commute}"),
                    json!({"commute": commute}),
                );
                Ok(u8::from(!commute))
            }
        },
        Command::Hom { op } => match op {
            HomOp::Make {
                source,
                target,
                images,
            } => {
                let images = images
                    .iter()
                    .map(|s| parse_word(s))
                    .collect::<Result<Vec<_>, _>>()?;
                let mut h = Homomorphism::new(source, target, images)?;
                let ok = h.verify()?;
                emit(format, &hom_json(&h).to_string(), hom_json(&h));
                Ok(u8::from(!ok))
            }
            HomOp::Verify { hom } => {
                let ok = verify_hom(&load_hom(&hom)?)?;
                emit(format, &format!("verified: {ok}"), json!({"verified": ok}));
                Ok(u8::from(!ok))
            }
            HomOp::Apply { hom, word } => {
                let image = load_hom(&hom)?.apply(&parse_word(&word)?)?;
                emit(
                    format,
                    &image.to_string(),
                    json!({"image": image.to_string()}),
                );
                Ok(0)
            }
            HomOp::Transvect { hom, by } => {
                let t = transvect(&load_hom(&hom)?, &parse_word(&by)?)?;
                emit(format, &hom_json(&t).to_string(), hom_json(&t));
                Ok(0)
            }
            HomOp::Compose { outer, inner } => {
                let c = compose_hom(&load_hom(&outer)?, &load_hom(&inner)?)?;
                emit(format, &hom_json(&c).to_string(), hom_json(&c));
                Ok(0)
            }
            HomOp::Fingerprint { hom } => {
                let mut h = load_hom(&hom)?;
                if !h.verify()? {
                    emit(
                        format,
                        "verified: false",
                        json!({"verified": false}),
                    );
                    return Ok(1);
                }
                let fp = fingerprint(&h)?;
                let v = serde_json::to_value(&fp).expect("fingerprints serialize");
                emit(format, &v.to_string(), v);
                Ok(0)
            }
        },
        Command::Standard {
            kind,
            n,
            k,
            conjugator,
        } => {
            let kind = match kind {
                KindArg::Trivial => StandardKind::Trivial,
                KindArg::Inclusion => StandardKind::Inclusion,
                KindArg::Diagonal => StandardKind::Diagonal,
                KindArg::FlipDiagonal => StandardKind::FlipDiagonal,
                KindArg::Cabling => StandardKind::KTwistCabling(
                    k.ok_or_else(|| Error::Parse("--kind cabling needs --k".into()))?,
                ),
                KindArg::Exceptional => StandardKind::ExceptionalB4B3,
                KindArg::Inversion => StandardKind::Inversion,
                KindArg::Inner => StandardKind::Inner(parse_word(&conjugator.ok_or_else(
                    || Error::Parse("--kind inner needs --conjugator".into()),
                )?)?),
            };
            let h = standard_hom(kind, n)?;
            emit(format, &hom_json(&h).to_string(), hom_json(&h));
            Ok(0)
        }
        Command::ClassifyCabling { hom } => {
            let c = classify_cabling(&load_hom(&hom)?)?;
            let v = serde_json::to_value(&c).expect("classifications serialize");
            emit(
                format,
                &format!(
                    "k = {}, conjugator exponents {:?}, transvection exponent {}, certified: {}",
                    c.k_canonical, c.conjugator_exponents, c.transvection_exponent, c.certified
                ),
                v,
            );
            Ok(u8::from(!c.certified))
        }
        Command::Screen { n, m_max } => {
            if m_max == 0 {
                return Err(Error::Parse("--m-max must be positive".into()));
            }
            let mut rows = Vec::new();
            let mut failures = 0u64;
            for m in 1..=m_max {
                let constraint = special_constraint(n, m);
                let range_ok = corollary_range_check(n, m);
                failures += u64::from(!range_ok);
                rows.push(json!({
                    "n": n,
                    "m": m,
                    "special_constraint": constraint,
                    "range_ok": range_ok,
                }));
            }
            let text = rows
                .iter()
                .map(|r| {
                    format!(
                        "{n} {} {} {}",
                        r["m"], r["special_constraint"], r["range_ok"]
                    )
                })
                .collect::<Vec<_>>()
                .join("\n");
            emit(format, &text, json!({"failures": failures, "rows": rows}));
            Ok(u8::from(failures > 0))
        }
        Command::VerifyProp31 { n, max_conj } => {
            require_positive("--max-conj", max_conj)?;
            Ok(emit_suite(format, &suite::prop31(&n, max_conj)?))
        }
        Command::VerifyProp32 { n, max_conj } => {
            require_positive("--max-conj", max_conj)?;
            Ok(emit_suite(format, &suite::prop32(n, max_conj)?))
        }
        Command::VerifyLemma61 { cables, samples } => {
            require_positive("--samples", samples)?;
            Ok(emit_suite(format, &suite::roundtrip(cables, samples)?))
        }
        Command::EnumerateSym { n, k } => {
            let r = sym_hom_enumerate(n, k)?;
            let v = serde_json::to_value(&r).expect("reports serialize");
            emit(
                format,
                &format!(
                    "({n}, {k}): {} of {} tuples satisfy the relations; all cyclic: {}",
                    r.solutions, r.total_tuples, r.all_cyclic
                ),
                v,
            );
            Ok(0)
        }
        Command::Suite {
            name,
            n,
            max_conj,
            cables,
            samples,
            n_max,
        } => {
            if let Some(c) = max_conj {
                require_positive("--max-conj", c)?;
            }
            let report = match name.as_str() {
                "prop31" => suite::prop31(
                    &n.unwrap_or_else(|| vec![5, 6]),
                    max_conj.unwrap_or(4),
                )?,
                "prop32" => suite::prop32(
                    n.and_then(|v| v.first().copied()).unwrap_or(5),
                    max_conj.unwrap_or(4),
                )?,
                "roundtrip" => suite::roundtrip(cables.unwrap_or(5), samples.unwrap_or(500))?,
                "screen" => suite::screen(n_max.unwrap_or(50))?,
                other => suite::run(other)?,
            };
            Ok(emit_suite(format, &report))
        }
    }
}

fn require_positive(flag: &str, value: usize) -> Result<(), Error> {
    if value == 0 {
        return Err(Error::Parse(format!("{flag} must be positive")));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.fuel < MIN_FUEL {
        eprintln!("error: --fuel must be at least {MIN_FUEL}");
        return ExitCode::from(3);
    }
    if cli.threads > 0 {
        // a failed build means a pool already exists; keep going
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global();
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_for(&err))
        }
    }
}
