use std::collections::BTreeMap;

use biopathqa_model::{
    jointly_satisfiable, CondRhs, Condition, Diagnostic, FluentRef, Guard,
};

use crate::ast::{Delta, DomainType, PathwaySpec, Statement};

fn conditions_of(st: &Statement) -> &[Condition] {
    match st {
        Statement::Execute(ex) => &ex.conditions,
        Statement::Inhibit { conditions, .. } => conditions,
        Statement::Stimulate { conditions, .. } => conditions,
        _ => &[],
    }
}

/// The satisfiability search bound: one past the largest constant named in
/// any condition, so strict comparisons can still be witnessed.
fn guard_bound(spec: &PathwaySpec) -> u64 {
    let mut max = 0;
    for st in &spec.statements {
        for cond in conditions_of(st) {
            if let CondRhs::Const(w) = cond.rhs {
                max = max.max(w);
            }
        }
    }
    max + 1
}

fn fluent_refs(spec: &PathwaySpec) -> Vec<&FluentRef> {
    let mut refs: Vec<&FluentRef> = spec.domains.iter().map(|(f, _)| f).collect();
    for st in &spec.statements {
        if let Statement::Execute(ex) = st {
            refs.extend(ex.effects.iter().map(|e| &e.fluent));
        }
        if let Statement::Initially(items) = st {
            refs.extend(items.iter().map(|(f, _)| f));
        }
        for cond in conditions_of(st) {
            refs.push(&cond.lhs);
            if let CondRhs::Fluent(f) = &cond.rhs {
                refs.push(f);
            }
        }
    }
    refs
}

/// Checks a parsed specification for the consistency rules of the pathway
/// language: unique style/duration/priority statements, per-action guard
/// disjointness, no mixing of locational and simple fluents, and binary
/// domain discipline. Returns diagnostics; an empty list means consistent.
pub fn check_consistency(spec: &PathwaySpec) -> Vec<Diagnostic> {
    let mut out = Vec::new();

    let mut domains: BTreeMap<&FluentRef, DomainType> = BTreeMap::new();
    for (fluent, ty) in &spec.domains {
        if let Some(prev) = domains.insert(fluent, *ty) {
            if prev != *ty {
                out.push(Diagnostic::error(format!(
                    "conflicting domain declarations for fluent `{}`",
                    fluent
                )));
            }
        }
    }
    let domain_of = |fluent: &FluentRef| {
        domains
            .get(fluent)
            .copied()
            .unwrap_or(DomainType::Integer)
    };

    if spec.firing_styles.len() > 1 {
        out.push(Diagnostic::error(
            "duplicate firing style statement".to_string(),
        ));
    }

    let mut durations: BTreeMap<&str, u64> = BTreeMap::new();
    let mut priorities: BTreeMap<&str, u64> = BTreeMap::new();
    let mut stimulations: BTreeMap<&str, u64> = BTreeMap::new();
    for st in &spec.statements {
        match st {
            Statement::Duration { action, .. } => {
                let n = durations.entry(action).or_insert(0);
                *n += 1;
                if *n == 2 {
                    out.push(Diagnostic::error(format!(
                        "duplicate duration statement for action `{}`",
                        action
                    )));
                }
            }
            Statement::Priority { action, .. } => {
                out.push(Diagnostic::note(format!(
                    "priority statement for action `{}` is an extension to the pathway language",
                    action
                )));
                let n = priorities.entry(action).or_insert(0);
                *n += 1;
                if *n == 2 {
                    out.push(Diagnostic::error(format!(
                        "duplicate priority statement for action `{}`",
                        action
                    )));
                }
            }
            Statement::Stimulate { action, .. } => {
                let n = stimulations.entry(action).or_insert(0);
                *n += 1;
                if *n == 2 {
                    out.push(Diagnostic::error(format!(
                        "duplicate stimulate statement for action `{}`",
                        action
                    )));
                }
            }
            _ => {}
        }
    }

    let bound = guard_bound(spec);
    let guards: Vec<(&str, Guard)> = spec
        .statements
        .iter()
        .filter_map(|st| match st {
            Statement::Execute(ex) => Some((
                ex.action.as_str(),
                Guard::conjunction(ex.conditions.clone()),
            )),
            _ => None,
        })
        .collect();
    for (i, (a1, g1)) in guards.iter().enumerate() {
        for (a2, g2) in guards.iter().skip(i + 1) {
            if a1 == a2 && jointly_satisfiable(g1, g2, bound) {
                out.push(Diagnostic::error(format!(
                    "overlapping guards on execute statements for action `{}`",
                    a1
                )));
            }
        }
    }

    let refs = fluent_refs(spec);
    let has_simple = refs.iter().any(|f| f.location.is_none());
    let has_locational = refs.iter().any(|f| f.location.is_some());
    if has_simple && has_locational {
        out.push(Diagnostic::error(
            "locational and simple fluents are intermixed".to_string(),
        ));
    }

    for st in &spec.statements {
        if let Statement::Execute(ex) = st {
            let mut neg: BTreeMap<&FluentRef, u64> = BTreeMap::new();
            let mut pos: BTreeMap<&FluentRef, u64> = BTreeMap::new();
            let mut reset: BTreeMap<&FluentRef, u64> = BTreeMap::new();
            for effect in &ex.effects {
                let bucket = match effect.delta {
                    Delta::Change(n) if n < 0 => &mut neg,
                    Delta::Change(_) => &mut pos,
                    Delta::ResetAll => &mut reset,
                };
                *bucket.entry(&effect.fluent).or_insert(0) += 1;
            }
            for (buckets, what) in [
                (&neg, "negative"),
                (&pos, "positive"),
                (&reset, "reset"),
            ] {
                for (fluent, n) in buckets {
                    if *n > 1 {
                        out.push(Diagnostic::error(format!(
                            "statement for action `{}` has multiple {} effects on fluent `{}`",
                            ex.action, what, fluent
                        )));
                    }
                }
            }
            for effect in &ex.effects {
                if domain_of(&effect.fluent) == DomainType::Binary
                    && !matches!(
                        effect.delta,
                        Delta::Change(1) | Delta::Change(-1) | Delta::ResetAll
                    )
                {
                    out.push(Diagnostic::error(format!(
                        "effect on binary fluent `{}` must be +1, -1, or *",
                        effect.fluent
                    )));
                }
            }
        }
        for cond in conditions_of(st) {
            if domain_of(&cond.lhs) == DomainType::Binary {
                if let CondRhs::Const(w) = cond.rhs {
                    if w > 1 {
                        out.push(Diagnostic::error(format!(
                            "condition on binary fluent `{}` uses non-binary value {}",
                            cond.lhs, w
                        )));
                    }
                }
            }
        }
        if let Statement::Initially(items) = st {
            for (fluent, w) in items {
                if domain_of(fluent) == DomainType::Binary && *w > 1 {
                    out.push(Diagnostic::error(format!(
                        "initial value {} for binary fluent `{}` must be 0 or 1",
                        w, fluent
                    )));
                }
            }
        }
    }

    out
}
