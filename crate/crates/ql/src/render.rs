//! Canonical text form of a query statement.
//!
//! Identifiers are quoted and one clause item is printed per line, so the
//! output reads like the thesis's typeset queries. Reparsing the output
//! yields a structurally equal statement.

use std::fmt::Write;

use biopathqa_model::FluentRef;

use crate::ast::{
    CascadeLink, DirectionOrHole, Intervention, IntervalFormula, IntervalQuantity, Observation,
    PointFormula, QueryDescription, QueryStatement,
};

fn quoted(name: &str) -> String {
    format!("'{}'", name)
}

fn fluent(f: &FluentRef) -> String {
    match &f.location {
        Some(l) => format!("{} atloc {}", quoted(&f.fluent), quoted(l)),
        None => quoted(&f.fluent),
    }
}

fn interval_quantity(q: &IntervalQuantity) -> String {
    match q {
        IntervalQuantity::ProductionRate(f) => format!("rate of production of {}", fluent(f)),
        IntervalQuantity::FiringRate(a) => format!("rate of firing of {}", quoted(a)),
        IntervalQuantity::TotalProduction(f) => format!("total production of {}", fluent(f)),
    }
}

fn plural_quantity(q: &IntervalQuantity) -> String {
    match q {
        IntervalQuantity::ProductionRate(f) => format!("rates of production of {}", fluent(f)),
        IntervalQuantity::FiringRate(a) => format!("rates of firing of {}", quoted(a)),
        IntervalQuantity::TotalProduction(f) => format!("totals of production of {}", fluent(f)),
    }
}

fn point_formula(pf: &PointFormula) -> String {
    match pf {
        PointFormula::ValueHigher { fluent: f, value } => {
            format!("value of {} is higher than {}", fluent(f), value)
        }
        PointFormula::ValueLower { fluent: f, value } => {
            format!("value of {} is lower than {}", fluent(f), value)
        }
        PointFormula::ValueIs { fluent: f, value } => {
            format!("value of {} is {}", fluent(f), value)
        }
        PointFormula::Occurs { action } => format!("{} occurs", quoted(action)),
        PointFormula::DoesNotOccur { action } => format!("{} does not occur", quoted(action)),
        PointFormula::SwitchesTo { from, to } => {
            format!("{} switches to {}", quoted(from), quoted(to))
        }
    }
}

fn interval_formula(f: &IntervalFormula) -> String {
    match f {
        IntervalFormula::Quantity { quantity, value } => {
            format!("{} is {}", interval_quantity(quantity), value)
        }
        IntervalFormula::Accumulating { fluent: fl } => match &fl.location {
            Some(l) => format!("{} is accumulating atloc {}", quoted(&fl.fluent), quoted(l)),
            None => format!("{} is accumulating", quoted(&fl.fluent)),
        },
        IntervalFormula::Decreasing { fluent: fl } => match &fl.location {
            Some(l) => format!("{} is decreasing atloc {}", quoted(&fl.fluent), quoted(l)),
            None => format!("{} is decreasing", quoted(&fl.fluent)),
        },
    }
}

fn observation(obs: &Observation) -> String {
    match obs {
        Observation::Point { formula, at } => match at {
            Some(p) => format!("{} at {}", point_formula(formula), p),
            None => point_formula(formula),
        },
        Observation::Interval { formula, between } => match between {
            Some(i) => format!(
                "{} when observed between {}",
                interval_formula(formula),
                i
            ),
            None => interval_formula(formula),
        },
    }
}

fn direction(d: &DirectionOrHole) -> String {
    match d {
        DirectionOrHole::Direction(d) => format!("'{}'", d),
        DirectionOrHole::Hole(name) => name.clone(),
    }
}

fn number_list(values: &[crate::ast::Number]) -> String {
    let items: Vec<String> = values.iter().map(|n| n.to_string()).collect();
    format!("[{}]", items.join(", "))
}

fn description(d: &QueryDescription) -> String {
    let mut out = match d {
        QueryDescription::Observed {
            observation: obs, ..
        } => observation(obs),
        QueryDescription::Cascade { head, links, .. } => {
            let mut s = point_formula(head);
            for link in links {
                match link {
                    CascadeLink::After(fs) => {
                        let items: Vec<String> = fs.iter().map(point_formula).collect();
                        write!(s, " after {}", items.join(", ")).unwrap();
                    }
                    CascadeLink::When(fs) => {
                        let items: Vec<String> = fs.iter().map(point_formula).collect();
                        write!(s, " when {}", items.join(", ")).unwrap();
                    }
                    CascadeLink::WhenCondition(name) => {
                        write!(s, " when {}", name).unwrap();
                    }
                }
            }
            s
        }
        QueryDescription::AggregateInterval {
            op,
            quantity,
            value,
            between,
        } => format!(
            "{} {} is {} when observed between {}",
            op,
            interval_quantity(quantity),
            value,
            between
        ),
        QueryDescription::AggregatePoint {
            op,
            fluent: f,
            value,
            at,
        } => format!(
            "{} value of {} is {} when observed at {}",
            op,
            fluent(f),
            value,
            at
        ),
        QueryDescription::AllInterval {
            quantity,
            values,
            between,
        } => format!(
            "{} are {} when observed between {}",
            plural_quantity(quantity),
            number_list(values),
            between
        ),
        QueryDescription::AllPoint {
            fluent: f,
            values,
            at,
        } => format!(
            "values of {} are {} when observed at {}",
            fluent(f),
            number_list(values),
            at
        ),
        QueryDescription::ComparativeInterval {
            op,
            quantity,
            direction: dir,
            between,
        } => format!(
            "direction of change in {} {} is {} when observed between {}",
            op,
            interval_quantity(quantity),
            direction(dir),
            between
        ),
        QueryDescription::ComparativePoint {
            op,
            fluent: f,
            direction: dir,
            at,
        } => format!(
            "direction of change in {} value of {} is {} when observed at {}",
            op,
            fluent(f),
            direction(dir),
            at
        ),
    };
    match d {
        QueryDescription::Observed {
            all_trajectories: true,
            ..
        }
        | QueryDescription::Cascade {
            all_trajectories: true,
            ..
        } => out.push_str(" in all trajectories"),
        _ => {}
    }
    out
}

fn intervention(iv: &Intervention) -> String {
    match iv {
        Intervention::RemoveAsProduced { fluent: f } => {
            format!("remove {} as soon as produced", fluent(f))
        }
        Intervention::Disable { action } => format!("disable {}", quoted(action)),
        Intervention::ContinuouslyTransform { from, quantity, to } => format!(
            "continuously transform {} in quantity {} to {}",
            fluent(from),
            quantity,
            fluent(to)
        ),
        Intervention::MakeInhibit { fluent: f, action } => {
            format!("make {} inhibit {}", fluent(f), quoted(action))
        }
        Intervention::ContinuouslySupply { fluent: f, quantity } => {
            format!("continuously supply {} in quantity {}", fluent(f), quantity)
        }
        Intervention::TransferAcross {
            fluent: f,
            quantity,
            from_location,
            to_location,
        } => format!(
            "continuously transfer {} in quantity {} across {},{} to lower gradient",
            quoted(f),
            quantity,
            quoted(from_location),
            quoted(to_location)
        ),
        Intervention::AddDelay { quantity, fluent: f } => format!(
            "add delay of {} time units in availability of {}",
            quantity,
            fluent(f)
        ),
        Intervention::SetValue { fluent: f, value } => {
            format!("set value of {} to {}", fluent(f), value)
        }
    }
}

fn push_clause(out: &mut String, header: &str, items: &[String]) {
    if items.is_empty() {
        return;
    }
    out.push_str(header);
    out.push('\n');
    for (i, item) in items.iter().enumerate() {
        let sep = if i + 1 < items.len() { "," } else { " ;" };
        out.push_str("    ");
        out.push_str(item);
        out.push_str(sep);
        out.push('\n');
    }
}

/// Renders a query statement in canonical form.
pub fn render(q: &QueryStatement) -> String {
    let mut out = String::new();
    out.push_str(&description(&q.description));
    out.push_str(" ;\n");
    if q.description.is_comparative() {
        out.push_str("comparing nominal pathway with modified pathway obtained\n");
    }
    push_clause(
        &mut out,
        "due to interventions:",
        &q.interventions.iter().map(intervention).collect::<Vec<_>>(),
    );
    push_clause(
        &mut out,
        "due to observations:",
        &q.observations.iter().map(observation).collect::<Vec<_>>(),
    );
    push_clause(
        &mut out,
        "using initial setup:",
        &q.initial_setup.iter().map(intervention).collect::<Vec<_>>(),
    );
    out
}
