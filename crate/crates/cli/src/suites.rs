//! Built-in verdict-table replays: the vending-machine property table,
//! the two-structure separation report, and the chain-family contrast.

use expressiveness_suite::{agreement_check, distinguishing_report};
use hs_eval::{check_ct, check_lin, check_st, EvalContext, Semantics, Verdict, VerdictValue};
use kripke_model::builtin;
use logic_core::{expand_derived, parse::parse_hs};
use pointwise_eval::check_ltl;
use std::fmt::Write;

use crate::witness::verdict_value_name;

fn run_hs(sem: Semantics, bound: usize, k: &kripke_model::Kripke, f: &logic_core::HsFormula) -> Verdict {
    let ctx = EvalContext::new(k, sem, bound);
    match sem {
        Semantics::St => check_st(&ctx, f),
        Semantics::Ct => check_ct(&ctx, f),
        Semantics::Lin => check_lin(&ctx, f),
    }
}

/// One property row: formula plus (semantics, bound, expected value) cells.
struct Row {
    name: &'static str,
    formula: &'static str,
    cells: Vec<(Semantics, usize, VerdictValue)>,
}

pub fn vending(out: &mut String) -> bool {
    use Semantics::*;
    use VerdictValue::*;
    let k = builtin("vending").expect("builtin");
    let rows = vec![
        Row {
            // scaled down from the length-50 original so the bounded
            // universe stays enumerable
            name: "all-items-in-7",
            formula: "(p_operative & len7) -> ((<B><E> p_hotdog) & (<B><E> p_water) & (<B><E> p_candy))",
            cells: vec![(St, 7, Fails), (Ct, 7, Fails), (Lin, 7, Fails)],
        },
        Row {
            name: "credit-0.50",
            formula: "(<E> p_$=0.50) -> !<A>(len2 & <E>(p_hotdog | p_candy))",
            cells: vec![(St, 8, HoldsInBound), (Ct, 8, HoldsInBound), (Lin, 8, HoldsInBound)],
        },
        Row {
            name: "maintenance-exit",
            formula: "(<E> p_maint_end) -> <A><E> p_operative",
            cells: vec![(St, 8, HoldsInBound), (Ct, 8, HoldsInBound), (Lin, 8, Fails)],
        },
        Row {
            name: "fairness",
            formula: "([A]<A><E> p_maint) -> [A]<A><E> p_operative",
            cells: vec![(St, 8, HoldsInBound), (Ct, 8, HoldsInBound), (Lin, 8, Fails)],
        },
        Row {
            name: "water-any-credit",
            formula: "(<E> p_water) -> <E>(p_water & <Abar>(len2 & <B> p_$=2) & <Abar>(len2 & <B> p_$=1) & <Abar>(len2 & <B> p_$=0.50))",
            cells: vec![(St, 6, HoldsInBound), (Ct, 6, Fails), (Lin, 8, Fails)],
        },
    ];
    let mut ok = true;
    for row in rows {
        let f = expand_derived(&parse_hs(row.formula).expect("suite formula parses"));
        write!(out, "{:18}", row.name).unwrap();
        for (sem, bound, expected) in row.cells {
            let v = run_hs(sem, bound, &k, &f);
            let mark = if v.value == expected { "" } else { " (MISMATCH)" };
            ok &= v.value == expected;
            write!(out, "  {}@{bound}: {}{mark}", sem.name(), verdict_value_name(&v)).unwrap();
        }
        out.push('\n');
    }
    ok
}

pub fn fig7(out: &mut String) -> bool {
    let r = distinguishing_report();
    out.push_str(&r.to_string());
    let ok = r.st_k1.value == VerdictValue::HoldsInBound
        && r.st_k2.value == VerdictValue::Fails
        && r.ct_k1.value == r.ct_k2.value;
    if !ok {
        out.push_str("MISMATCH against the expected verdict pattern\n");
    }
    ok
}

pub fn fig9(n: usize, out: &mut String) -> bool {
    let f = logic_core::parse::parse_point("F p").expect("parses");
    let bound = 2 * n + 4;
    let vk = check_ltl(&kripke_model::kn(n), &f, bound);
    let vm = check_ltl(&kripke_model::mn(n), &f, bound);
    writeln!(out, "F p on kn({n}) at bound {bound}: {}", verdict_value_name(&vk)).unwrap();
    writeln!(out, "F p on mn({n}) at bound {bound}: {}", verdict_value_name(&vm)).unwrap();
    let r = agreement_check(n, n.min(3), 2 * n + 6);
    write!(out, "{r}").unwrap();
    let ok = vk.value == VerdictValue::Fails && vm.value == VerdictValue::HoldsInBound && r.ok();
    if !ok {
        out.push_str("MISMATCH against the expected verdict pattern\n");
    }
    ok
}
