use prunix::identity::TOLERANCE;
use prunix::sat::{
    classify_vars, core, first_invalid_clause, geometry_from_assignment,
    geometry_intersection_witness, numeric_ground, parse_dimacs, poset_below, total_weight,
    unique_satisfier_circuits, verify_sat_identity, weight,
};
use prunix::sets::{serialize_family, serialize_rooted, RootedKind};
use prunix::{CnfFormula, PartialAssignment};
use serde_json::{json, Value};

use crate::args::{SatAction, SatArgs};
use crate::commands::{read, set_json, weights, yes};
use crate::{Fail, Output, Res};

fn clause_text(clause: &[i32]) -> String {
    let lits: Vec<String> = clause
        .iter()
        .map(|&l| if l < 0 { format!("¬x{}", -l) } else { format!("x{l}") })
        .collect();
    format!("({})", lits.join(" ∨ "))
}

fn number(x: f64, holds: bool, what: &str) -> Output {
    Output::new(format!("{x:.12}"), json!({ "value": x, "holds": holds }))
        .verdict(holds, || format!("{what} is {x:.12}, not 1"))
}

pub fn sat(s: SatArgs, seed: u64) -> Res<Output> {
    let path = s.cnf.as_deref().ok_or_else(|| Fail("sat needs --cnf".into()))?;
    let f: CnfFormula = parse_dimacs(&read(path)?).map_err(|e| Fail(format!("{}: {e}", path.display())))?;
    let vars = f.variables();
    let assignment = || -> Res<PartialAssignment> {
        let text = s.assign.as_deref().ok_or_else(|| Fail("this action needs --assign".into()))?;
        let a = PartialAssignment::parse(text)?;
        if a.len() != f.num_vars() {
            return Err(Fail(format!("assignment has {} values for {} variables", a.len(), f.num_vars())));
        }
        Ok(a)
    };
    match s.action {
        SatAction::Validity => {
            let a = assignment()?;
            let bad = first_invalid_clause(&f, &a)?;
            let json = json!({ "valid": bad.is_none(), "clause": bad.map(|i| i + 1) });
            Ok(Output::new(if bad.is_none() { "valid" } else { "invalid" }, json).verdict(bad.is_none(), || {
                let i = bad.expect("invalid has a clause");
                format!("clause {} {} is not validly satisfied by {a}", i + 1, clause_text(&f.clauses()[i]))
            }))
        }
        SatAction::Classify => {
            let a = assignment()?;
            let c = classify_vars(&f, &a)?;
            let text = format!(
                "stars: {}\nunconstrained: {}\nconstrained: {}",
                vars.format_set(c.stars),
                vars.format_set(c.unconstrained),
                vars.format_set(c.constrained)
            );
            let json = json!({
                "stars": set_json(&vars, c.stars),
                "unconstrained": set_json(&vars, c.unconstrained),
                "constrained": set_json(&vars, c.constrained),
            });
            Ok(Output::new(text, json))
        }
        SatAction::Poset => {
            let a = assignment()?;
            let poset = poset_below(&f, &a)?;
            let items = poset.assignments();
            let mut lines: Vec<String> = items.iter().map(ToString::to_string).collect();
            lines.push("covers:".into());
            lines.extend(poset.covers().iter().map(|&(u, l)| format!("{} > {}", items[u], items[l])));
            let json = json!({
                "assignments": items.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "covers": poset.covers(),
            });
            Ok(Output::new(lines.join("\n"), json))
        }
        SatAction::Geometry { circuits } => {
            let a = assignment()?;
            let text = if circuits {
                serialize_rooted(&numeric_ground(&a), RootedKind::Circuits, &unique_satisfier_circuits(&f, &a)?)
            } else {
                serialize_family(geometry_from_assignment(&f, &a)?.family())
            };
            let json: Value = serde_json::from_str(&text).expect("serialized documents are JSON");
            Ok(Output::new(text, json))
        }
        SatAction::Weight { weights: wa } => {
            let a = assignment()?;
            let x = weight(&f, &a, &weights(&vars, &wa, seed)?)?;
            Ok(Output::new(format!("{x:.12}"), json!({ "value": x })))
        }
        SatAction::Identity { weights: wa } => {
            let a = assignment()?;
            let x = verify_sat_identity(&f, &a, &weights(&vars, &wa, seed)?)?;
            Ok(number(x, (x - 1.0).abs() < TOLERANCE, "sum below the assignment"))
        }
        SatAction::Total { weights: wa } => {
            let x = total_weight(&f, &weights(&vars, &wa, seed)?)?;
            Ok(Output::new(format!("{x:.12}"), json!({ "value": x })))
        }
        SatAction::Core => {
            let c = core(&f, &assignment()?, seed)?;
            Ok(Output::new(c.to_string(), json!({ "core": c.to_string() })))
        }
        SatAction::Intersect { other } => {
            let a = assignment()?;
            let b = PartialAssignment::parse(&other)?;
            let w = geometry_intersection_witness(&f, &a, &b)?;
            let maximal = w.maximal.as_ref().map_or("none".to_string(), ToString::to_string);
            let text = format!(
                "agreement: {}\nc: {}\ncommon: {}\nholds: {}\nmaximal: {maximal}\nholds at maximal: {}",
                w.agreement,
                w.c,
                w.intersection.len(),
                yes(w.holds),
                yes(w.holds_at_maximal)
            );
            let json = json!({
                "agreement": w.agreement.to_string(),
                "c": w.c.to_string(),
                "intersection": w.intersection.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "holds": w.holds,
                "maximal": w.maximal.as_ref().map(ToString::to_string),
                "holds_at_maximal": w.holds_at_maximal,
            });
            let c = w.c.clone();
            Ok(Output::new(text, json).verdict(w.holds, || {
                format!("assignments below both {a} and {b} differ from those below {c}")
            }))
        }
        SatAction::Dimacs => {
            let text = f.to_dimacs();
            Ok(Output::new(text.clone(), json!({ "dimacs": text })))
        }
    }
}
