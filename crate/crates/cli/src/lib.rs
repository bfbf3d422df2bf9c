//! Command-line surface for the interval-logic workbench: bounded model
//! checking under the three HS semantic variants and the pointwise
//! checkers, the constructive formula translations with brute-force
//! validation, action-language membership, verdict-table suites, and
//! universe enumeration.

mod suites;
mod witness;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hs_eval::{
    check_ct, check_lin, check_st, eval_ct, eval_interval, EvalContext, Semantics, Witness,
};
use kripke_model::{
    builtin, enumerate_lassos, enumerate_traces, fig1, load_kripke, CtNode, Kripke,
};
use logic_core::{
    expand_derived,
    parse::{parse_hs, parse_point},
    render::{render_fo, render_hs, render_point},
    HsFormula, PointFormula,
};
use pointwise_eval::{
    check_finitary_ctlstar, check_hybrid, check_hybrid_finitary, check_ltl, eval_finitary_ctlstar,
    eval_fo, eval_hybrid, eval_hybrid_finitary, eval_ltl, lact_member_hs, Assignment,
};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(name = "hsmc", about = "Bounded model checking for interval temporal logic")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a formula against a structure under a chosen semantics
    Check(CheckArgs),
    /// Translate a formula between logics, optionally cross-validating
    Translate(TranslateArgs),
    /// Decide membership of a finite word in a formula's action language
    LangMember(LangMemberArgs),
    /// Replay a built-in verdict table (nonzero exit on any mismatch)
    Suite(SuiteArgs),
    /// List traces, lassos, or balanced formulas
    Enumerate(EnumerateArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Sem {
    St,
    Ct,
    Lin,
    Ltl,
    Ctlstar,
    Finitary,
    Hybrid,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct CheckArgs {
    /// Formula text (see the grammar in the README)
    #[arg(long)]
    formula: Option<String>,
    /// Read the formula from a file instead
    #[arg(long)]
    formula_file: Option<PathBuf>,
    /// Built-in structure name: fig1, vending, k1, k2, kn(N), mn(N)
    #[arg(long)]
    builtin: Option<String>,
    /// Structure document (JSON) path
    #[arg(long)]
    structure: Option<PathBuf>,
    #[arg(long, value_enum)]
    semantics: Sem,
    /// Max trace length (st/ct), max |stem|+|loop| (lasso-based checkers)
    #[arg(long, default_value_t = 8)]
    bound: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads (the bounded checkers are single-threaded; kept for
    /// script compatibility)
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Re-verify a previously printed machine-readable witness instead of
    /// searching: exit 0 when the witness still falsifies the formula
    #[arg(long)]
    witness: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Map {
    Ltl2ab,
    Hs2fo,
    Ct2hybrid,
    PastElim,
}

#[derive(Args)]
struct TranslateArgs {
    #[arg(long)]
    formula: Option<String>,
    #[arg(long)]
    formula_file: Option<PathBuf>,
    #[arg(long, value_enum)]
    map: Map,
    /// Cross-validate against the source semantics on fig1 (or the given
    /// structure) up to this lasso/interval size
    #[arg(long)]
    validate: Option<usize>,
    #[arg(long)]
    builtin: Option<String>,
    #[arg(long)]
    structure: Option<PathBuf>,
}

#[derive(Args)]
struct LangMemberArgs {
    #[arg(long)]
    formula: Option<String>,
    #[arg(long)]
    formula_file: Option<PathBuf>,
    /// Word as whitespace-separated letters, e.g. "a b b"
    #[arg(long)]
    word: String,
}

#[derive(Args)]
struct SuiteArgs {
    /// vending, fig7, or fig9
    name: String,
    /// Chain-family parameter for fig9
    #[arg(long, default_value_t = 2)]
    n: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumKind {
    Traces,
    Lassos,
    Balanced,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, value_enum)]
    kind: EnumKind,
    #[arg(long)]
    builtin: Option<String>,
    #[arg(long)]
    structure: Option<PathBuf>,
    #[arg(long, default_value_t = 4)]
    bound: usize,
    /// Only traces starting at the initial state
    #[arg(long, default_value_t = false)]
    initial_only: bool,
    /// Formula size limit for balanced enumeration
    #[arg(long, default_value_t = 3)]
    max_size: usize,
    /// Comma-separated atoms for balanced enumeration
    #[arg(long, default_value = "p")]
    atoms: String,
}

/// Runs the CLI on explicit arguments, appending output to `out`.
/// Exit status: 0 holds / member / tables match, 1 fails / mismatch,
/// 2 usage or parse error.
pub fn run(args: &[String], out: &mut String) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            out.push_str(&e.to_string());
            // clap renders --help/--version as "errors" with success status
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = match cli.cmd {
        Cmd::Check(a) => cmd_check(&a, out),
        Cmd::Translate(a) => cmd_translate(&a, out),
        Cmd::LangMember(a) => cmd_lang_member(&a, out),
        Cmd::Suite(a) => cmd_suite(&a, out),
        Cmd::Enumerate(a) => cmd_enumerate(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            writeln!(out, "error: {msg}").unwrap();
            EXIT_USAGE
        }
    }
}

fn formula_text(
    formula: &Option<String>,
    file: &Option<PathBuf>,
) -> Result<String, String> {
    match (formula, file) {
        (Some(t), None) => Ok(t.clone()),
        (None, Some(p)) => fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display())),
        _ => Err("provide exactly one of --formula and --formula-file".into()),
    }
}

fn structure(builtin_name: &Option<String>, path: &Option<PathBuf>) -> Result<Kripke, String> {
    match (builtin_name, path) {
        (Some(name), None) => builtin(name).map_err(|e| e.to_string()),
        (None, Some(p)) => {
            let doc = fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
            load_kripke(&doc).map_err(|e| e.to_string())
        }
        _ => Err("provide exactly one of --builtin and --structure".into()),
    }
}

fn parse_hs_expanded(text: &str) -> Result<HsFormula, String> {
    parse_hs(text).map(|f| expand_derived(&f)).map_err(|e| e.to_string())
}

enum Parsed {
    Hs(HsFormula),
    Point(PointFormula),
}

fn cmd_check(a: &CheckArgs, out: &mut String) -> Result<i32, String> {
    if a.bound == 0 {
        return Err("--bound must be at least 1".into());
    }
    let k = structure(&a.builtin, &a.structure)?;
    let text = formula_text(&a.formula, &a.formula_file)?;
    let parsed = match a.semantics {
        Sem::St | Sem::Ct | Sem::Lin => Parsed::Hs(parse_hs_expanded(&text)?),
        _ => Parsed::Point(parse_point(&text).map_err(|e| e.to_string())?),
    };
    if a.semantics == Sem::Ltl {
        if let Parsed::Point(f) = &parsed {
            if !f.is_pure_ltl() {
                return Err("--semantics ltl needs a pure (past-)LTL formula".into());
            }
        }
    }
    if let Some(wtext) = &a.witness {
        let wjson: serde_json::Value =
            serde_json::from_str(wtext).map_err(|e| format!("witness JSON: {e}"))?;
        let w = witness::witness_from_json(&k, &wjson)?;
        let falsified = recheck_witness(&k, a.semantics, a.bound, &parsed, &w)?;
        writeln!(
            out,
            "witness {} the formula",
            if falsified { "falsifies" } else { "does not falsify" }
        )
        .unwrap();
        return Ok(if falsified { EXIT_OK } else { EXIT_FAIL });
    }
    let verdict = match (&parsed, a.semantics) {
        (Parsed::Hs(f), Sem::St) => check_st(&EvalContext::new(&k, Semantics::St, a.bound), f),
        (Parsed::Hs(f), Sem::Ct) => check_ct(&EvalContext::new(&k, Semantics::Ct, a.bound), f),
        (Parsed::Hs(f), Sem::Lin) => check_lin(&EvalContext::new(&k, Semantics::Lin, a.bound), f),
        (Parsed::Point(f), Sem::Ltl) => check_ltl(&k, f, a.bound),
        (Parsed::Point(f), Sem::Ctlstar) => check_hybrid(&k, f, a.bound),
        (Parsed::Point(f), Sem::Finitary) => check_finitary_ctlstar(&k, f, a.bound),
        (Parsed::Point(f), Sem::Hybrid) => check_hybrid_finitary(&k, f, a.bound),
        _ => unreachable!("dialect fixed by semantics above"),
    };
    match a.format {
        Format::Json => {
            writeln!(out, "{}", witness::verdict_to_json(&k, &verdict)).unwrap()
        }
        Format::Text => {
            writeln!(out, "verdict: {}", witness::verdict_value_name(&verdict)).unwrap();
            writeln!(out, "bound_hit: {}", verdict.bound_hit).unwrap();
            if let Some(w) = &verdict.witness {
                writeln!(out, "witness: {}", describe_witness(&k, w)).unwrap();
            }
        }
    }
    Ok(if verdict.passes() { EXIT_OK } else { EXIT_FAIL })
}

fn describe_witness(k: &Kripke, w: &Witness) -> String {
    match w {
        Witness::Trace(t) => k.trace_names(t).join(" "),
        Witness::Lasso(l) => format!(
            "{} ({})^w",
            k.trace_names(&l.stem).join(" "),
            k.trace_names(&l.looping).join(" ")
        ),
        Witness::LassoInterval(l, (i, j)) => format!(
            "{} ({})^w interval [{i},{j}]",
            k.trace_names(&l.stem).join(" "),
            k.trace_names(&l.looping).join(" ")
        ),
    }
}

/// True when re-evaluating the formula on the witness yields false,
/// confirming the counterexample.
fn recheck_witness(
    k: &Kripke,
    sem: Sem,
    bound: usize,
    parsed: &Parsed,
    w: &Witness,
) -> Result<bool, String> {
    match (parsed, sem, w) {
        (Parsed::Hs(f), Sem::St, Witness::Trace(t)) => {
            Ok(!hs_eval::eval_st(&EvalContext::new(k, Semantics::St, bound), t, f))
        }
        (Parsed::Hs(f), Sem::Ct, Witness::Trace(t)) => Ok(!eval_ct(
            &EvalContext::new(k, Semantics::Ct, bound),
            &CtNode::new(t.clone(), 0),
            f,
        )),
        (Parsed::Hs(f), Sem::Lin, Witness::LassoInterval(l, (i, j))) => {
            Ok(!eval_interval(k, l, *i, *j, f, 2 * bound))
        }
        (Parsed::Point(f), Sem::Ltl, Witness::Lasso(l)) => Ok(!eval_ltl(k, l, 0, f)),
        (Parsed::Point(f), Sem::Ctlstar, Witness::Lasso(l)) => {
            Ok(!eval_hybrid(k, l, 0, &Assignment::new(), f, bound))
        }
        (Parsed::Point(f), Sem::Finitary, Witness::Trace(t)) => {
            Ok(!eval_finitary_ctlstar(k, t, 0, f, bound))
        }
        (Parsed::Point(f), Sem::Hybrid, Witness::Trace(t)) => {
            Ok(!eval_hybrid_finitary(k, t, 0, &Assignment::new(), f, bound))
        }
        _ => Err("witness shape does not match the chosen semantics".into()),
    }
}

fn cmd_translate(a: &TranslateArgs, out: &mut String) -> Result<i32, String> {
    let text = formula_text(&a.formula, &a.formula_file)?;
    let k = if a.builtin.is_some() || a.structure.is_some() {
        structure(&a.builtin, &a.structure)?
    } else {
        fig1()
    };
    match a.map {
        Map::Ltl2ab => {
            let f = parse_point(&text).map_err(|e| e.to_string())?;
            let g = translate::ltl_to_ab(&f).map_err(|e| e.to_string())?;
            writeln!(out, "{}", render_hs(&g)).unwrap();
            if let Some(n) = a.validate {
                let mut cases = 0usize;
                for pi in enumerate_lassos(&k, n) {
                    for i in 0..=n {
                        cases += 1;
                        let want = eval_ltl(&k, &pi, i, &f);
                        let got = hs_eval::eval_interval_limit(&k, &pi, i, i, &g);
                        if want != got {
                            writeln!(out, "validation: FAIL at position {i} of {pi:?}").unwrap();
                            return Ok(EXIT_FAIL);
                        }
                    }
                }
                writeln!(out, "validation: pass ({cases} cases)").unwrap();
            }
        }
        Map::Hs2fo => {
            let f = parse_hs(&text).map_err(|e| e.to_string())?;
            let tr = translate::hs_to_fo(&f);
            writeln!(out, "{}", render_fo(&tr.sentence)).unwrap();
            if let Some(n) = a.validate {
                let horizon = 2 * n + 2;
                let core = expand_derived(&f);
                let mut cases = 0usize;
                for pi in enumerate_lassos(&k, n) {
                    for i in 0..=n {
                        for j in i..=n {
                            cases += 1;
                            let want = eval_interval(&k, &pi, i, j, &core, horizon);
                            let g: BTreeMap<String, usize> =
                                [("x".to_string(), i), ("y".to_string(), j)].into();
                            let got = eval_fo(&k, &pi, &g, &tr.open, horizon);
                            if want != got {
                                writeln!(out, "validation: FAIL at [{i},{j}] of {pi:?}").unwrap();
                                return Ok(EXIT_FAIL);
                            }
                        }
                    }
                }
                writeln!(out, "validation: pass ({cases} cases)").unwrap();
            }
        }
        Map::Ct2hybrid => {
            let f = parse_hs(&text).map_err(|e| e.to_string())?;
            let g = translate::hs_ct_to_hybrid(&f, true).map_err(|e| e.to_string())?;
            writeln!(out, "{}", render_point(&g)).unwrap();
            if !translate::is_well_formed(&g) {
                writeln!(out, "validation: FAIL (sentence not well-formed)").unwrap();
                return Ok(EXIT_FAIL);
            }
            if let Some(n) = a.validate {
                let core = expand_derived(&f);
                let vc = check_ct(&EvalContext::new(&k, Semantics::Ct, n), &core);
                let vh = check_hybrid_finitary(&k, &g, n);
                if vc.value != vh.value {
                    writeln!(
                        out,
                        "validation: FAIL ({} vs {})",
                        witness::verdict_value_name(&vc),
                        witness::verdict_value_name(&vh)
                    )
                    .unwrap();
                    return Ok(EXIT_FAIL);
                }
                writeln!(out, "validation: pass (bound {n})").unwrap();
            }
        }
        Map::PastElim => {
            let f = parse_point(&text).map_err(|e| e.to_string())?;
            let g = translate::eliminate_initial_past(&f);
            writeln!(out, "{}", render_point(&g)).unwrap();
            if let Some(n) = a.validate {
                let mut cases = 0usize;
                for pi in enumerate_lassos(&k, n) {
                    cases += 1;
                    if eval_ltl(&k, &pi, 0, &f) != eval_ltl(&k, &pi, 0, &g) {
                        writeln!(out, "validation: FAIL at origin of {pi:?}").unwrap();
                        return Ok(EXIT_FAIL);
                    }
                }
                writeln!(out, "validation: pass ({cases} cases)").unwrap();
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_lang_member(a: &LangMemberArgs, out: &mut String) -> Result<i32, String> {
    let text = formula_text(&a.formula, &a.formula_file)?;
    let f = parse_hs(&text).map_err(|e| e.to_string())?;
    let letters: Vec<&str> = a.word.split_whitespace().collect();
    let member = lact_member_hs(&letters, &f);
    writeln!(out, "{}", if member { "member" } else { "not a member" }).unwrap();
    Ok(if member { EXIT_OK } else { EXIT_FAIL })
}

fn cmd_suite(a: &SuiteArgs, out: &mut String) -> Result<i32, String> {
    let ok = match a.name.as_str() {
        "vending" => suites::vending(out),
        "fig7" => suites::fig7(out),
        "fig9" => suites::fig9(a.n, out),
        other => return Err(format!("unknown suite `{other}`")),
    };
    Ok(if ok { EXIT_OK } else { EXIT_FAIL })
}

fn cmd_enumerate(a: &EnumerateArgs, out: &mut String) -> Result<i32, String> {
    match a.kind {
        EnumKind::Traces => {
            let k = structure(&a.builtin, &a.structure)?;
            for t in enumerate_traces(&k, a.bound, a.initial_only) {
                writeln!(out, "{}", k.trace_names(&t).join(" ")).unwrap();
            }
        }
        EnumKind::Lassos => {
            let k = structure(&a.builtin, &a.structure)?;
            for l in enumerate_lassos(&k, a.bound) {
                writeln!(
                    out,
                    "{} ({})^w",
                    k.trace_names(&l.stem).join(" "),
                    k.trace_names(&l.looping).join(" ")
                )
                .unwrap();
            }
        }
        EnumKind::Balanced => {
            let spec = expressiveness_suite::BalancedFormulaSpec {
                atoms: a.atoms.split(',').map(|s| s.trim().to_string()).collect(),
                relations: vec![
                    logic_core::Rel::B,
                    logic_core::Rel::BBar,
                    logic_core::Rel::E,
                    logic_core::Rel::EBar,
                ],
                max_size: a.max_size,
            };
            for f in expressiveness_suite::enumerate_balanced(&spec) {
                writeln!(out, "{}", render_hs(&f)).unwrap();
            }
        }
    }
    Ok(EXIT_OK)
}
