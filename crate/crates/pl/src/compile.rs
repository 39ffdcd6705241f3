use std::collections::{BTreeMap, BTreeSet};

use biopathqa_model::{
    ArcKind, ColoredMultiset, CondRhs, FluentRef, Guard, GuardedNet, Marking, NetArc,
    PlaceDef, Stimulation, TransitionDef,
};
use thiserror::Error;

use crate::ast::{Delta, DomainType, ExecuteStatement, PathwaySpec, Statement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompileError {
    #[error("{statement} statement references unknown action `{action}`")]
    UnknownAction { action: String, statement: String },
}

fn unknown(action: &str, statement: &str) -> CompileError {
    CompileError::UnknownAction {
        action: action.to_string(),
        statement: statement.to_string(),
    }
}

fn collect_fluents(spec: &PathwaySpec) -> Vec<FluentRef> {
    let mut seen: BTreeSet<FluentRef> = BTreeSet::new();
    let mut refs: Vec<FluentRef> = Vec::new();
    let mut visit = |f: &FluentRef| {
        if seen.insert(f.clone()) {
            refs.push(f.clone());
        }
    };
    let mut visit_conds = |visit: &mut dyn FnMut(&FluentRef), conds: &[biopathqa_model::Condition]| {
        for cond in conds {
            visit(&cond.lhs);
            if let CondRhs::Fluent(f) = &cond.rhs {
                visit(f);
            }
        }
    };
    for (fluent, _) in &spec.domains {
        visit(fluent);
    }
    for st in &spec.statements {
        match st {
            Statement::Execute(ex) => {
                for effect in &ex.effects {
                    visit(&effect.fluent);
                }
                visit_conds(&mut visit, &ex.conditions);
            }
            Statement::Inhibit { conditions, .. } => visit_conds(&mut visit, conditions),
            Statement::Stimulate { conditions, .. } => visit_conds(&mut visit, conditions),
            Statement::Initially(items) => {
                for (fluent, _) in items {
                    visit(fluent);
                }
            }
            Statement::Duration { .. } | Statement::Priority { .. } => {}
        }
    }
    refs
}

fn statement_guard(ex: &ExecuteStatement) -> Guard {
    Guard::conjunction(ex.conditions.clone())
}

/// The transition guard formed from the guards of an action's execute
/// statements (or-ed) and inhibit statements (negated and and-ed).
fn transition_guard(executes: &[Guard], inhibits: &[Guard]) -> Guard {
    let mut parts: Vec<Guard> = Vec::new();
    let unconditional =
        executes.is_empty() || executes.iter().any(|g| matches!(g, Guard::True));
    if !unconditional {
        let mut executes = executes.to_vec();
        if executes.len() == 1 {
            parts.push(executes.pop().unwrap());
        } else {
            parts.push(Guard::Or(executes));
        }
    }
    for ig in inhibits {
        parts.push(Guard::Not(Box::new(ig.clone())));
    }
    match parts.len() {
        0 => Guard::True,
        1 => parts.pop().unwrap(),
        _ => Guard::And(parts),
    }
}

/// Compiles a pathway specification into a guarded-arc Petri net.
///
/// Simple fluents become places holding the default color; a locational
/// fluent `f atloc l` becomes color `f` at place `l`. Each execute
/// statement contributes arcs guarded by that statement's conditions:
/// negative effects are input arcs, positive effects output arcs, and `*`
/// reset arcs. Inhibit statements negate into the transition guard,
/// must-execute statements register must-fire guards, and initially
/// statements seed the marking (unmentioned fluents start at 0).
pub fn compile(spec: &PathwaySpec) -> Result<GuardedNet, CompileError> {
    let mut net = GuardedNet::new(spec.firing_style());

    for fluent in collect_fluents(spec) {
        let (place, color) = fluent.place_color();
        if net.place(place).is_none() {
            net.places.push(PlaceDef::new(place));
        }
        net.colors.insert(color.to_string());
    }
    for (fluent, ty) in &spec.domains {
        if *ty == DomainType::Binary {
            let (place, color) = fluent.place_color();
            let place = net
                .places
                .iter_mut()
                .find(|p| p.id == place)
                .expect("declared fluents were collected");
            place.binary_colors.insert(color.to_string());
        }
    }

    for st in &spec.statements {
        if let Statement::Execute(ex) = st {
            if net.transition(&ex.action).is_none() {
                net.transitions.push(TransitionDef::new(&ex.action));
            }
        }
    }

    for st in &spec.statements {
        if let Statement::Execute(ex) = st {
            let guard = statement_guard(ex);
            for effect in &ex.effects {
                let (place, color) = effect.fluent.place_color();
                let (kind, weight) = match effect.delta {
                    Delta::Change(n) if n < 0 => (
                        ArcKind::Input,
                        ColoredMultiset::of(color, n.unsigned_abs()),
                    ),
                    Delta::Change(n) => {
                        (ArcKind::Output, ColoredMultiset::of(color, n as u64))
                    }
                    Delta::ResetAll => (ArcKind::Reset, ColoredMultiset::new()),
                };
                net.arcs.push(NetArc {
                    kind,
                    place: place.to_string(),
                    transition: ex.action.clone(),
                    guard: guard.clone(),
                    weight,
                });
            }
        }
    }

    let mut executes: BTreeMap<&str, Vec<Guard>> = BTreeMap::new();
    let mut musts: BTreeMap<&str, Vec<Guard>> = BTreeMap::new();
    let mut inhibits: BTreeMap<&str, Vec<Guard>> = BTreeMap::new();
    for st in &spec.statements {
        match st {
            Statement::Execute(ex) => {
                let guard = statement_guard(ex);
                if ex.must {
                    musts
                        .entry(ex.action.as_str())
                        .or_default()
                        .push(guard.clone());
                }
                executes.entry(ex.action.as_str()).or_default().push(guard);
            }
            Statement::Inhibit { action, conditions } => {
                if net.transition(action).is_none() {
                    return Err(unknown(action, "inhibit"));
                }
                inhibits
                    .entry(action.as_str())
                    .or_default()
                    .push(Guard::conjunction(conditions.clone()));
            }
            _ => {}
        }
    }
    for trans in &mut net.transitions {
        let ex = executes.get(trans.id.as_str()).map_or(&[][..], |v| v);
        let ig = inhibits.get(trans.id.as_str()).map_or(&[][..], |v| v);
        trans.guard = transition_guard(ex, ig);
        trans.must_fire_guards = musts.remove(trans.id.as_str()).unwrap_or_default();
    }

    for st in &spec.statements {
        match st {
            Statement::Stimulate {
                action,
                factor,
                conditions,
            } => {
                let trans = net
                    .transitions
                    .iter_mut()
                    .find(|t| t.id == *action)
                    .ok_or_else(|| unknown(action, "stimulate"))?;
                trans.stimulation = Some(Stimulation {
                    guard: Guard::conjunction(conditions.clone()),
                    factor: *factor,
                });
            }
            Statement::Duration { action, duration } => {
                let trans = net
                    .transitions
                    .iter_mut()
                    .find(|t| t.id == *action)
                    .ok_or_else(|| unknown(action, "duration"))?;
                trans.duration = *duration;
            }
            Statement::Priority { action, priority } => {
                let trans = net
                    .transitions
                    .iter_mut()
                    .find(|t| t.id == *action)
                    .ok_or_else(|| unknown(action, "priority"))?;
                trans.priority = *priority;
            }
            _ => {}
        }
    }

    let mut tokens: BTreeMap<&str, ColoredMultiset> = BTreeMap::new();
    for st in &spec.statements {
        if let Statement::Initially(items) = st {
            for (fluent, w) in items {
                let (place, color) = fluent.place_color();
                tokens.entry(place).or_default().set(color, *w);
            }
        }
    }
    let mut marking = Marking::with_places(net.places.iter().map(|p| p.id.as_str()));
    for (place, ms) in tokens {
        marking.set(place, ms);
    }
    net.initial_marking = marking;

    Ok(net)
}
