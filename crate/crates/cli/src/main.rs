//! `braidfact` command-line front end.
//!
//! Exit codes: 0 yes/success, 1 certified no, 2 unknown or budget exhausted,
//! 3 usage or parse error.

use std::io::Read;
use std::process::ExitCode;

use braidfact::braid::{are_conjugate, BraidWord, Conjugacy};
use braidfact::curve::{singularity_census, validate_bmf, van_kampen, verify_centralizer_generators};
use braidfact::factor::{
    delta_squared_factorization, hurwitz_equivalent_bounded, is_partial_re_degeneration, re_degenerate,
    stably_equal, tilde_delta_squared, Factorization, HurwitzEquivalence, ReDegeneration, ReDegenerationTarget,
    StableEquality,
};
use braidfact::marked::{inseparability_certificate, interlacing_number, Inseparability, Interlacing};
use braidfact::{Budget, Error};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "braidfact", version, about = "Braid groups and factorization semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Number of strands.
    #[arg(short = 'm', long = "strands", global = true)]
    strands: Option<usize>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long = "budget-states", global = true)]
    budget_states: Option<usize>,
    #[arg(long = "budget-depth", global = true)]
    budget_depth: Option<usize>,
    #[arg(long = "budget-summit", global = true)]
    budget_summit: Option<usize>,
    #[arg(long = "budget-fixed-length", global = true)]
    budget_fixed_length: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Left-greedy normal form of a braid word.
    Nf {
        #[command(flatten)]
        common: Common,
        word: Option<String>,
    },
    /// Equality of two braid words.
    Eq {
        #[command(flatten)]
        common: Common,
        u: String,
        v: String,
    },
    /// Conjugacy of two braid words.
    Conj {
        #[command(flatten)]
        common: Common,
        u: String,
        v: String,
    },
    /// Hurwitz equivalence of two factorizations.
    HurwitzEq {
        #[command(flatten)]
        common: Common,
        f1: String,
        f2: String,
    },
    /// Stable equality of two factorizations.
    StableEq {
        #[command(flatten)]
        common: Common,
        f1: String,
        f2: String,
    },
    /// The factorization of Δ² into generator-conjugates.
    Delta2 {
        #[command(flatten)]
        common: Common,
    },
    /// The factorization of Δ² into node factors.
    TildeDelta2 {
        #[command(flatten)]
        common: Common,
    },
    /// Whether a factorization multiplies to Δ^{2N}.
    ValidateBmf {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'N', default_value_t = 1)]
        n: u64,
        factorization: Option<String>,
    },
    /// van Kampen presentation of a braid monodromy factorization.
    Vankampen {
        #[command(flatten)]
        common: Common,
        factorization: Option<String>,
    },
    /// Counts tangency, node and cusp factors.
    Census {
        #[command(flatten)]
        common: Common,
        factorization: Option<String>,
    },
    /// Inseparability certificate for a braid on the first k strands.
    Inseparable {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'k')]
        k: usize,
        /// Fixed-word length bound; defaults to the budget's fixed length.
        #[arg(long)]
        bound: Option<usize>,
        word: Option<String>,
    },
    /// Interlacing number of a braid.
    Interlace {
        #[command(flatten)]
        common: Common,
        word: Option<String>,
    },
    /// Partial re-degeneration test, or splitting of node factors with --split.
    Redegenerate {
        #[command(flatten)]
        common: Common,
        /// `full` or a minimum number of pairs.
        #[arg(long, default_value = "full")]
        target: String,
        /// Comma-separated 0-based factor positions to split instead of testing.
        #[arg(long)]
        split: Option<String>,
        factorization: Option<String>,
    },
    /// Checks listed centralizer generators of a_1^{n_1} a_3^{n_2} ⋯.
    VerifyCentralizer {
        #[command(flatten)]
        common: Common,
        #[arg(required = true, allow_hyphen_values = true)]
        exponents: Vec<i64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Verdict {
    Yes,
    No,
    Unknown,
}

impl Verdict {
    fn code(self) -> u8 {
        match self {
            Verdict::Yes => 0,
            Verdict::No => 1,
            Verdict::Unknown => 2,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Unknown => "unknown",
        }
    }
}

struct Output {
    verdict: Verdict,
    text: String,
    json: Value,
}

impl Output {
    fn new(verdict: Verdict, text: impl Into<String>, json: Value) -> Self {
        Output {
            verdict,
            text: text.into(),
            json,
        }
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Reads `@path`, `-` (stdin) or a literal argument; a missing argument reads stdin.
fn read_input(arg: Option<&str>) -> CliResult<String> {
    let read_stdin = || {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
        Ok(s)
    };
    match arg {
        None | Some("-") => read_stdin(),
        Some(a) => match a.strip_prefix('@') {
            Some(path) => std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {path}: {e}"))),
            None => Ok(a.to_string()),
        },
    }
}

impl Common {
    fn budget(&self) -> CliResult<Budget> {
        let mut b = Budget::from_env()?;
        if let Some(v) = self.budget_states {
            b.max_states = v;
        }
        if let Some(v) = self.budget_depth {
            b.max_depth = v;
        }
        if let Some(v) = self.budget_summit {
            b.max_summit = v;
        }
        if let Some(v) = self.budget_fixed_length {
            b.max_fixed_length = v;
        }
        Ok(b)
    }

    fn strands(&self) -> CliResult<usize> {
        self.strands.ok_or_else(|| CliError::Usage("-m <strands> is required".into()))
    }

    fn word(&self, arg: Option<&str>) -> CliResult<BraidWord> {
        let m = self.strands()?;
        Ok(BraidWord::parse(m, &read_input(arg)?)?)
    }

    fn factorization(&self, arg: Option<&str>) -> CliResult<Factorization> {
        Ok(Factorization::parse(self.strands, &read_input(arg)?)?)
    }
}

fn path_text(path: &[braidfact::factor::HurwitzMove]) -> String {
    path.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn factorization_text(f: &Factorization) -> String {
    f.to_json().to_string()
}

fn run(command: Command) -> CliResult<(Output, bool)> {
    let out = match command {
        Command::Nf { common, word } => {
            let w = common.word(word.as_deref())?;
            let nf = w.normal_form();
            let factors: Vec<Vec<usize>> = nf.factors().iter().map(|p| p.images()).collect();
            let j = json!({
                "normal_form": nf.to_string(),
                "delta_power": nf.delta_power(),
                "factors": factors,
                "word": nf.to_word().letters(),
            });
            (Output::new(Verdict::Yes, nf.to_string(), j), common.json)
        }
        Command::Eq { common, u, v } => {
            let (u, v) = (common.word(Some(&u))?, common.word(Some(&v))?);
            let eq = u.equals(&v)?;
            let verdict = if eq { Verdict::Yes } else { Verdict::No };
            (Output::new(verdict, verdict.name(), json!({ "verdict": verdict.name() })), common.json)
        }
        Command::Conj { common, u, v } => {
            let (u, v) = (common.word(Some(&u))?, common.word(Some(&v))?);
            let out = match are_conjugate(&u, &v, &common.budget()?)? {
                Conjugacy::Yes(c) => Output::new(
                    Verdict::Yes,
                    format!("yes\nconjugator: {c}"),
                    json!({ "verdict": "yes", "conjugator": c.letters() }),
                ),
                Conjugacy::No => Output::new(Verdict::No, "no", json!({ "verdict": "no" })),
                Conjugacy::Unknown => Output::new(Verdict::Unknown, "unknown", json!({ "verdict": "unknown" })),
            };
            (out, common.json)
        }
        Command::HurwitzEq { common, f1, f2 } => {
            let (a, b) = (common.factorization(Some(&f1))?, common.factorization(Some(&f2))?);
            let out = match hurwitz_equivalent_bounded(&a, &b, &common.budget()?)? {
                HurwitzEquivalence::Yes { path, stats } => Output::new(
                    Verdict::Yes,
                    format!("yes\npath: {}\nstates: {}", path_text(&path), stats.states),
                    json!({ "verdict": "yes", "path": path, "stats": stats }),
                ),
                HurwitzEquivalence::NoCertified(reason) => Output::new(
                    Verdict::No,
                    format!("no: {reason}"),
                    json!({ "verdict": "no", "reason": reason.to_string() }),
                ),
                HurwitzEquivalence::Unknown(stats) => Output::new(
                    Verdict::Unknown,
                    format!("unknown: budget exhausted after {} states", stats.states),
                    json!({ "verdict": "unknown", "stats": stats }),
                ),
            };
            (out, common.json)
        }
        Command::StableEq { common, f1, f2 } => {
            let (a, b) = (common.factorization(Some(&f1))?, common.factorization(Some(&f2))?);
            let verdict = match stably_equal(&a, &b, &common.budget()?)? {
                StableEquality::Yes => Verdict::Yes,
                StableEquality::No => Verdict::No,
                StableEquality::Unknown => Verdict::Unknown,
            };
            (Output::new(verdict, verdict.name(), json!({ "verdict": verdict.name() })), common.json)
        }
        Command::Delta2 { common } => {
            let f = delta_squared_factorization(common.strands()?)?;
            (Output::new(Verdict::Yes, f.to_string(), f.to_json()), common.json)
        }
        Command::TildeDelta2 { common } => {
            let f = tilde_delta_squared(common.strands()?)?;
            (Output::new(Verdict::Yes, factorization_text(&f), f.to_json()), common.json)
        }
        Command::ValidateBmf { common, n, factorization } => {
            let f = common.factorization(factorization.as_deref())?;
            let ok = validate_bmf(&f, n)?;
            let verdict = if ok { Verdict::Yes } else { Verdict::No };
            (Output::new(verdict, verdict.name(), json!({ "verdict": verdict.name() })), common.json)
        }
        Command::Vankampen { common, factorization } => {
            let f = common.factorization(factorization.as_deref())?;
            let p = van_kampen(&f)?;
            (Output::new(Verdict::Yes, p.to_text().trim_end(), p.to_json()), common.json)
        }
        Command::Census { common, factorization } => {
            let f = common.factorization(factorization.as_deref())?;
            let c = singularity_census(&f, &common.budget()?)?;
            let verdict = if c.unknown == 0 { Verdict::Yes } else { Verdict::Unknown };
            let text = format!(
                "tangency: {}\nnode: {}\ncusp: {}\nother: {}\nunknown: {}",
                c.tangency, c.node, c.cusp, c.other, c.unknown
            );
            let j = serde_json::to_value(c).expect("census serializes");
            (Output::new(verdict, text, j), common.json)
        }
        Command::Inseparable { common, k, bound, word } => {
            let b = common.word(word.as_deref())?;
            let bound = bound.unwrap_or(common.budget()?.max_fixed_length);
            let r = inseparability_certificate(&b, k, bound)?;
            let (verdict, text) = match &r {
                Inseparability::InseparableCertified { power, twists } => (
                    Verdict::Yes,
                    format!("inseparable_certified: b^{power} = Δ^{}", 2 * twists),
                ),
                Inseparability::InseparableUpTo { bound } => {
                    (Verdict::Unknown, format!("inseparable_up_to: {bound}"))
                }
                Inseparability::Separable { witness } => {
                    let w: Vec<String> = witness
                        .letters()
                        .iter()
                        .map(|&l| if l < 0 { format!("-x{}", -l) } else { format!("x{l}") })
                        .collect();
                    (Verdict::No, format!("separable: {}", w.join(" ")))
                }
            };
            let j = serde_json::to_value(&r).expect("certificate serializes");
            (Output::new(verdict, text, j), common.json)
        }
        Command::Interlace { common, word } => {
            let b = common.word(word.as_deref())?;
            let r = interlacing_number(&b, &common.budget()?);
            let (verdict, text) = match &r {
                Interlacing::Exact { k, witness, .. } => (Verdict::Yes, format!("{k}\nwitness: {witness}")),
                Interlacing::Range { lo, hi, witness, .. } => {
                    (Verdict::Unknown, format!("{lo}..{hi}\nwitness: {witness}"))
                }
            };
            let j = serde_json::to_value(&r).expect("interlacing serializes");
            (Output::new(verdict, text, j), common.json)
        }
        Command::Redegenerate { common, target, split, factorization } => {
            let f = common.factorization(factorization.as_deref())?;
            if let Some(slots) = split {
                let slots = slots
                    .split(',')
                    .map(|s| s.trim().parse::<usize>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| CliError::Usage(format!("bad --split list {slots:?}")))?;
                let g = re_degenerate(&f, &slots)?;
                return Ok((Output::new(Verdict::Yes, factorization_text(&g), g.to_json()), common.json));
            }
            let target = match target.as_str() {
                "full" => ReDegenerationTarget::Full,
                n => ReDegenerationTarget::AtLeast(
                    n.parse().map_err(|_| CliError::Usage(format!("bad --target {n:?}")))?,
                ),
            };
            let out = match is_partial_re_degeneration(&f, target, &common.budget()?)? {
                ReDegeneration::Yes { z1, z2, path, stats } => Output::new(
                    Verdict::Yes,
                    format!(
                        "yes\nz1: {}\nz2: {}\npath: {}",
                        factorization_text(&z1),
                        factorization_text(&z2),
                        path_text(&path)
                    ),
                    json!({ "verdict": "yes", "z1": z1.to_json(), "z2": z2.to_json(), "path": path, "stats": stats }),
                ),
                ReDegeneration::NoCertified(reason) => Output::new(
                    Verdict::No,
                    format!("no: {reason}"),
                    json!({ "verdict": "no", "reason": reason }),
                ),
                ReDegeneration::Unknown(stats) => Output::new(
                    Verdict::Unknown,
                    "unknown",
                    json!({ "verdict": "unknown", "stats": stats }),
                ),
            };
            (out, common.json)
        }
        Command::VerifyCentralizer { common, exponents } => {
            let report = verify_centralizer_generators(common.strands()?, &exponents)?;
            // d_{i,l} discrepancies are reported but do not change the verdict
            let listed_ok = report
                .entries
                .iter()
                .filter(|e| !e.name.starts_with('d'))
                .all(|e| e.commutes);
            let verdict = if listed_ok { Verdict::Yes } else { Verdict::No };
            let mut text = format!("b = {}\n", report.b);
            for e in &report.entries {
                let mark = if e.commutes { "commutes" } else { "FAILS" };
                text.push_str(&format!("{} [{}]: {mark}\n", e.name, e.variant));
            }
            for n in &report.not_constructible {
                text.push_str(&format!("{n}: not constructible\n"));
            }
            let j = serde_json::to_value(&report).expect("report serializes");
            (Output::new(verdict, text.trim_end(), j), common.json)
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Err(e) = Budget::from_env() {
        eprintln!("error: {}: {e}", Budget::ENV_VAR);
        return ExitCode::from(3);
    }
    match run(cli.command) {
        Ok((out, as_json)) => {
            if as_json {
                println!("{}", out.json);
            } else {
                println!("{}", out.text);
            }
            ExitCode::from(out.verdict.code())
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(CliError::Lib(Error::BudgetExhausted(msg))) => {
            eprintln!("unknown: budget exhausted: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
