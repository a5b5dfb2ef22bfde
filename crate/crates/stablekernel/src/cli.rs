//! Command-line front end. `run` writes results to `out`, diagnostics to
//! `err`, and returns the process exit code.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use stablekernel_core::aggregate::{
    classify_monotonicity, compile_aggregate, compile_antimonotone, compile_monotone, compile_theory,
    map_aggregates,
};
use stablekernel_core::auction::{auction_encode, decode};
use stablekernel_core::semantics::{check_stable_with, stable_models_with, strong_equiv_with};
use stablekernel_core::shape::aggregate_to_wc;
use stablekernel_core::simplify::simplify_theory;
use stablekernel_core::syntax::{parse_model, print_models, print_theory};
use stablekernel_core::translate::{eliminate_negative_weights, pdb_translate, wc_to_nested};
use stablekernel_core::{
    Aggregate, Budget, Error, Formula, Interpretation, Semantics, StrongEqMethod, StrongEqReport, Theory,
    Verdict,
};

use crate::casebook::run_casebook;
use crate::io::{format_bids, models_to_json, read_auction, read_theory};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "stablekernel", version, about = "Stable models of propositional theories with aggregates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SemanticsArg {
    Ferraris,
    Lif99,
    Flp,
    Smodels,
    Pdb,
}

impl From<SemanticsArg> for Semantics {
    fn from(s: SemanticsArg) -> Self {
        match s {
            SemanticsArg::Ferraris => Semantics::Ferraris,
            SemanticsArg::Lif99 => Semantics::Lif99,
            SemanticsArg::Flp => Semantics::Flp,
            SemanticsArg::Smodels => Semantics::SmodelsWc,
            SemanticsArg::Pdb => Semantics::Pdb,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Ht,
    Reduct,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Full,
    MonoSimplify,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    Ferraris,
    Pdb,
    Wc,
}

#[derive(Debug, clap::Args)]
pub struct BudgetArgs {
    /// Largest vocabulary searched exhaustively.
    #[arg(long, env = "STABLEKERNEL_MAX_ATOMS", default_value_t = 20)]
    pub max_atoms: usize,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        Budget {
            max_atoms: self.max_atoms,
            ..Budget::default()
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print every stable model, one per line.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "ferraris")]
        semantics: SemanticsArg,
        /// Print `{"models":[...]}` instead of one model per line.
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Decide whether one set of atoms is a stable model.
    Check {
        file: PathBuf,
        /// Comma-separated atoms, e.g. `p,q`; empty for the empty set.
        #[arg(long, allow_hyphen_values = true)]
        model: String,
        #[arg(long, value_enum, default_value = "ferraris")]
        semantics: SemanticsArg,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Decide strong equivalence of two theories.
    StrongEq {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, value_enum, default_value = "ht")]
        method: MethodArg,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Rewrite aggregates into formulas without aggregates.
    Compile {
        file: PathBuf,
        /// `mono-simplify` uses the shorter forms for monotone and
        /// antimonotone aggregates (Ferraris target only).
        #[arg(long, value_enum, default_value = "full")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "ferraris")]
        target: TargetArg,
    },
    /// Solve under every semantics the input fits and compare.
    Compare {
        file: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Run the bundled example corpus.
    Casebook,
    /// Solve an auction instance given as JSON; prints accepted bid sets.
    Auction {
        file: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

/// Parses `args` (program name first) and runs the command.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            code
        }
    }
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &anyhow::Error) -> i32 {
    if let Some(Error::BudgetExceeded { .. }) = e.downcast_ref::<Error>() {
        return EXIT_BUDGET;
    }
    if e.downcast_ref::<UsageError>().is_some() {
        return EXIT_USAGE;
    }
    EXIT_INPUT
}

#[derive(Debug, thiserror::Error)]
#[error("{0}")]
struct UsageError(String);

#[derive(Debug, thiserror::Error)]
#[error("methods disagree: here-and-there says {ht}, reduct equivalence says {reduct}")]
struct MethodDisagreement {
    ht: String,
    reduct: String,
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> anyhow::Result<i32> {
    match cli.command {
        Command::Solve {
            file,
            semantics,
            json,
            budget,
        } => {
            let t = read_theory(&file)?;
            let models = stable_models_with(&t, semantics.into(), &budget.budget())?;
            if json {
                writeln!(out, "{}", models_to_json(&models))?;
            } else {
                write!(out, "{}", print_models(&models))?;
            }
            Ok(if models.is_empty() { EXIT_NEGATIVE } else { EXIT_OK })
        }
        Command::Check {
            file,
            model,
            semantics,
            budget,
        } => {
            let t = read_theory(&file)?;
            let x = parse_model(&model).map_err(|e| anyhow::anyhow!("--model {e}"))?;
            let verdict = check_stable_with(&t, &x, semantics.into(), &budget.budget())?;
            writeln!(out, "{}", describe_verdict(&verdict))?;
            Ok(if verdict == Verdict::Stable { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::StrongEq {
            first,
            second,
            method,
            budget,
        } => {
            let t1 = read_theory(&first)?;
            let t2 = read_theory(&second)?;
            let b = budget.budget();
            let report = match method {
                MethodArg::Ht => strong_equiv_with(&t1, &t2, StrongEqMethod::HereAndThere, &b)?,
                MethodArg::Reduct => strong_equiv_with(&t1, &t2, StrongEqMethod::ReductEquivalence, &b)?,
                MethodArg::Both => {
                    let ht = strong_equiv_with(&t1, &t2, StrongEqMethod::HereAndThere, &b)?;
                    let reduct = strong_equiv_with(&t1, &t2, StrongEqMethod::ReductEquivalence, &b)?;
                    if ht != reduct {
                        return Err(MethodDisagreement {
                            ht: describe_report(&ht),
                            reduct: describe_report(&reduct),
                        }
                        .into());
                    }
                    ht
                }
            };
            writeln!(out, "{}", describe_report(&report))?;
            Ok(if report.equivalent { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Compile { file, mode, target } => {
            let t = read_theory(&file)?;
            let compiled = compile(&t, mode, target)?;
            write!(out, "{}", print_theory(&simplify_theory(&compiled)))?;
            Ok(EXIT_OK)
        }
        Command::Compare { file, budget } => {
            let t = read_theory(&file)?;
            write!(out, "{}", compare(&t, &budget.budget()))?;
            Ok(EXIT_OK)
        }
        Command::Casebook => {
            let report = run_casebook();
            write!(out, "{report}")?;
            Ok(if report.failures() == 0 { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Auction { file, budget } => {
            let inst = read_auction(&file)?;
            let models = stable_models_with(&auction_encode(&inst), Semantics::Ferraris, &budget.budget())?;
            let mut solutions: Vec<_> = models.iter().map(|x| decode(&inst, x)).collect();
            solutions.sort();
            solutions.dedup();
            for s in &solutions {
                writeln!(out, "{}", format_bids(s))?;
            }
            Ok(if solutions.is_empty() { EXIT_NEGATIVE } else { EXIT_OK })
        }
    }
}

pub fn describe_verdict(v: &Verdict) -> String {
    match v {
        Verdict::Stable => "stable".into(),
        Verdict::NotAModel => "not-stable (not-a-model)".into(),
        Verdict::NotMinimal(w) => format!("not-stable (not-minimal: {w})"),
    }
}

pub fn describe_report(r: &StrongEqReport) -> String {
    match &r.witness {
        None => "equivalent".into(),
        Some(w) => format!("not-equivalent witness={w}"),
    }
}

fn rewrite_aggregates(t: &Theory, rewrite: &mut dyn FnMut(&Aggregate) -> stablekernel_core::Result<Formula>) -> anyhow::Result<Theory> {
    Ok(t.iter().map(|f| map_aggregates(f, rewrite)).collect::<Result<Theory, _>>()?)
}

pub fn compile(t: &Theory, mode: ModeArg, target: TargetArg) -> anyhow::Result<Theory> {
    match (target, mode) {
        (TargetArg::Ferraris, ModeArg::Full) => Ok(compile_theory(t)?),
        (TargetArg::Ferraris, ModeArg::MonoSimplify) => rewrite_aggregates(t, &mut |a| {
            let m = classify_monotonicity(a)?;
            if m.is_monotone() {
                compile_monotone(a)
            } else if m.is_antimonotone() {
                compile_antimonotone(a)
            } else {
                compile_aggregate(a)
            }
        }),
        (TargetArg::Pdb, ModeArg::Full) => rewrite_aggregates(t, &mut pdb_translate),
        (TargetArg::Wc, ModeArg::Full) => rewrite_aggregates(t, &mut |a| {
            let c = aggregate_to_wc(a)
                .ok_or_else(|| Error::NotWeightConstraint(stablekernel_core::syntax::print_formula(&Formula::agg(a.clone()))))?;
            wc_to_nested(&eliminate_negative_weights(&c))
        }),
        (_, ModeArg::MonoSimplify) => Err(UsageError("--mode=mono-simplify needs --target=ferraris".into()).into()),
    }
}

fn fmt_models(ms: &[Interpretation]) -> String {
    if ms.is_empty() {
        return "none".into();
    }
    ms.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// One row per semantics, then one line per pair of semantics that both
/// apply.
pub fn compare(t: &Theory, budget: &Budget) -> String {
    let rows: Vec<(Semantics, Result<Vec<Interpretation>, Error>)> = Semantics::ALL
        .into_iter()
        .map(|s| (s, stable_models_with(t, s, budget)))
        .collect();
    let mut out = String::new();
    for (s, r) in &rows {
        let cell = match r {
            Ok(ms) => fmt_models(ms),
            Err(e) => format!("n/a ({e})"),
        };
        out.push_str(&format!("{:<9} {}\n", s.name(), cell));
    }
    for (i, (s1, r1)) in rows.iter().enumerate() {
        for (s2, r2) in &rows[i + 1..] {
            if let (Ok(m1), Ok(m2)) = (r1, r2) {
                let rel = if m1 == m2 { "=" } else { "!=" };
                out.push_str(&format!("{} {} {}\n", s1.name(), rel, s2.name()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use stablekernel_core::syntax::parse_theory;

    fn compile_text(text: &str, mode: ModeArg, target: TargetArg) -> String {
        let t = parse_theory(text).unwrap();
        print_theory(&simplify_theory(&compile(&t, mode, target).unwrap()))
    }

    #[test]
    fn compile_targets() {
        assert_eq!(
            compile_text("sum{p = 1; q = 1} != 1.", ModeArg::Full, TargetArg::Ferraris),
            "(p -> q) & (q -> p).\n"
        );
        assert_eq!(
            compile_text("sum{p = 1; q = 1} > 1.", ModeArg::MonoSimplify, TargetArg::Ferraris),
            "p & q.\n"
        );
        assert_eq!(
            compile_text("p :- sum{not p = 1} <= 0.", ModeArg::Full, TargetArg::Wc),
            "p :- not not p.\n"
        );
    }

    #[test]
    fn mono_simplify_needs_ferraris_target() {
        let t = parse_theory("p.").unwrap();
        let e = compile(&t, ModeArg::MonoSimplify, TargetArg::Pdb).unwrap_err();
        assert_eq!(exit_code(&e), EXIT_USAGE);
    }

    #[test]
    fn compare_table() {
        let t = parse_theory("p :- not q. q :- not p.").unwrap();
        let text = compare(&t, &Budget::default());
        assert!(text.starts_with("ferraris  {p} {q}\nlif99     {p} {q}\n"), "{text}");
        assert_eq!(text.matches(" = ").count(), 10);
    }

    #[test]
    fn verdict_text() {
        assert_eq!(describe_verdict(&Verdict::NotAModel), "not-stable (not-a-model)");
        assert_eq!(
            describe_verdict(&Verdict::NotMinimal(Interpretation::new())),
            "not-stable (not-minimal: {})"
        );
    }
}
