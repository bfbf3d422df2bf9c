//! Machine-readable verdicts. Witnesses are printed as state-name
//! sequences in the same JSON dialect as structure documents, so they can
//! be fed back through `check --witness` and re-verified.

use hs_eval::{Verdict, Witness};
use kripke_model::{Kripke, Lasso, Trace};
use serde_json::{json, Value};

pub fn verdict_value_name(v: &Verdict) -> &'static str {
    match v.value {
        hs_eval::VerdictValue::Holds => "holds",
        hs_eval::VerdictValue::HoldsInBound => "holds_in_bound",
        hs_eval::VerdictValue::Fails => "fails",
    }
}

pub fn verdict_to_json(k: &Kripke, v: &Verdict) -> Value {
    json!({
        "value": verdict_value_name(v),
        "bound_hit": v.bound_hit,
        "pure_witness": v.pure_witness,
        "witness": v.witness.as_ref().map(|w| witness_to_json(k, w)),
    })
}

pub fn witness_to_json(k: &Kripke, w: &Witness) -> Value {
    let names = |t: &Trace| k.trace_names(t);
    match w {
        Witness::Trace(t) => json!({ "kind": "trace", "states": names(t) }),
        Witness::Lasso(l) => json!({
            "kind": "lasso",
            "stem": names(&l.stem),
            "loop": names(&l.looping),
        }),
        Witness::LassoInterval(l, (i, j)) => json!({
            "kind": "lasso_interval",
            "stem": names(&l.stem),
            "loop": names(&l.looping),
            "interval": [i, j],
        }),
    }
}

pub fn witness_from_json(k: &Kripke, v: &Value) -> Result<Witness, String> {
    // accept either a bare witness object or a whole verdict document
    let v = v.get("witness").filter(|w| !w.is_null()).unwrap_or(v);
    let parse_trace = |field: &str| -> Result<Trace, String> {
        let arr = v
            .get(field)
            .and_then(Value::as_array)
            .ok_or_else(|| format!("witness is missing the `{field}` state list"))?;
        let names: Vec<&str> = arr
            .iter()
            .map(|s| s.as_str().ok_or_else(|| "state names must be strings".to_string()))
            .collect::<Result<_, _>>()?;
        if field == "stem" && names.is_empty() {
            return Ok(Vec::new());
        }
        k.parse_trace(&names).map_err(|e| e.to_string())
    };
    match v.get("kind").and_then(Value::as_str) {
        Some("trace") => Ok(Witness::Trace(parse_trace("states")?)),
        Some("lasso") => Ok(Witness::Lasso(Lasso::new(
            parse_trace("stem")?,
            parse_trace("loop")?,
        ))),
        Some("lasso_interval") => {
            let iv = v
                .get("interval")
                .and_then(Value::as_array)
                .ok_or("lasso_interval witness needs an `interval` pair")?;
            let at = |n: usize| {
                iv.get(n)
                    .and_then(Value::as_u64)
                    .map(|x| x as usize)
                    .ok_or("interval endpoints must be naturals")
            };
            Ok(Witness::LassoInterval(
                Lasso::new(parse_trace("stem")?, parse_trace("loop")?),
                (at(0)?, at(1)?),
            ))
        }
        _ => Err("witness `kind` must be trace, lasso, or lasso_interval".into()),
    }
}
