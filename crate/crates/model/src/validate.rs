//! Structural validation of guarded-arc Petri nets.
//!
//! Guard-disjointness constraints are checked by exhaustive valuation search
//! over fluent values `0..=bound`, which is decidable because the condition
//! language ranges over bounded non-negative integers.

use std::collections::BTreeSet;
use std::fmt;

use crate::net::{guard_satisfied, ArcKind, FluentRef, Guard, GuardedNet, Marking};

/// How serious a diagnostic is: `Error` rejects the net, `Note` does not.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Error,
    Note,
}

/// A validation finding naming the violated constraint and the offending
/// elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub message: String,
}

impl Diagnostic {
    pub fn error(message: impl Into<String>) -> Self {
        Self {
            severity: Severity::Error,
            message: message.into(),
        }
    }

    pub fn note(message: impl Into<String>) -> Self {
        Self {
            severity: Severity::Note,
            message: message.into(),
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.severity {
            Severity::Error => write!(f, "error: {}", self.message),
            Severity::Note => write!(f, "note: {}", self.message),
        }
    }
}

/// True when some valuation of the referenced fluents over `0..=bound`
/// satisfies both guards at once.
pub fn jointly_satisfiable(g1: &Guard, g2: &Guard, bound: u64) -> bool {
    let mut refs: BTreeSet<FluentRef> = g1.fluent_refs();
    refs.extend(g2.fluent_refs());
    let refs: Vec<FluentRef> = refs.into_iter().collect();
    let n = refs.len();
    let mut vals = vec![0u64; n];
    loop {
        let mut marking = Marking::new();
        for (r, v) in refs.iter().zip(&vals) {
            let (place, color) = r.place_color();
            let mut tokens = marking.get(place).cloned().unwrap_or_default();
            tokens.set(color, *v);
            marking.set(place, tokens);
        }
        let both = guard_satisfied(g1, &marking).unwrap_or(false)
            && guard_satisfied(g2, &marking).unwrap_or(false);
        if both {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            if vals[i] == bound {
                vals[i] = 0;
                i += 1;
            } else {
                vals[i] += 1;
                break;
            }
        }
    }
}

fn describe_kind(kind: ArcKind) -> &'static str {
    match kind {
        ArcKind::Input => "input",
        ArcKind::Output => "output",
        ArcKind::Reset => "reset",
        ArcKind::Inhibitor => "inhibitor",
        ArcKind::Read => "read",
    }
}

/// Checks every structural constraint of the net, searching fluent values
/// `0..=bound` for guard-disjointness. Returns an empty list iff the net is
/// well formed.
pub fn validate_net(net: &GuardedNet, bound: u64) -> Vec<Diagnostic> {
    let mut out = Vec::new();

    let place_ids: BTreeSet<&str> = net.places.iter().map(|p| p.id.as_str()).collect();
    let trans_ids: BTreeSet<&str> = net.transitions.iter().map(|t| t.id.as_str()).collect();

    for id in place_ids.intersection(&trans_ids) {
        out.push(Diagnostic::error(format!(
            "`{id}` is declared as both a place and a transition"
        )));
    }

    for arc in &net.arcs {
        let kind = describe_kind(arc.kind);
        if !place_ids.contains(arc.place.as_str()) {
            out.push(Diagnostic::error(format!(
                "{kind} arc references unknown place `{}`",
                arc.place
            )));
        }
        if !trans_ids.contains(arc.transition.as_str()) {
            out.push(Diagnostic::error(format!(
                "{kind} arc references unknown transition `{}`",
                arc.transition
            )));
        }
        match arc.kind {
            ArcKind::Reset => {
                if !arc.weight.is_empty() {
                    out.push(Diagnostic::error(format!(
                        "reset arc between `{}` and `{}` carries a weight",
                        arc.place, arc.transition
                    )));
                }
            }
            ArcKind::Input | ArcKind::Output | ArcKind::Read => {
                if arc.weight.is_empty() {
                    out.push(Diagnostic::error(format!(
                        "{kind} arc between `{}` and `{}` has an empty weight",
                        arc.place, arc.transition
                    )));
                }
            }
            ArcKind::Inhibitor => {}
        }
    }

    // A reset arc must not coexist with an input arc on the same
    // (place, transition) under guards that can hold together.
    for reset in net.arcs.iter().filter(|a| a.kind == ArcKind::Reset) {
        for input in net.arcs.iter().filter(|a| {
            a.kind == ArcKind::Input && a.place == reset.place && a.transition == reset.transition
        }) {
            if jointly_satisfiable(&reset.guard, &input.guard, bound) {
                out.push(Diagnostic::error(format!(
                    "reset arc and input arc between `{}` and `{}` have jointly satisfiable guards",
                    reset.place, reset.transition
                )));
            }
        }
    }

    for (i, t1) in net.transitions.iter().enumerate() {
        for t2 in net.transitions.iter().skip(i + 1) {
            for g1 in &t1.must_fire_guards {
                for g2 in &t2.must_fire_guards {
                    if jointly_satisfiable(g1, g2, bound) {
                        out.push(Diagnostic::error(format!(
                            "overlapping must-fire guards on `{}` and `{}`",
                            t1.id, t2.id
                        )));
                    }
                }
            }
        }
    }

    // Arcs sharing (place, transition, kind) must have mutually exclusive
    // guards; differing kinds may share one (a catalyst's input and output).
    let mut groups: BTreeSet<(&str, &str, ArcKind)> = BTreeSet::new();
    for arc in &net.arcs {
        groups.insert((arc.place.as_str(), arc.transition.as_str(), arc.kind));
    }
    for (place, transition, kind) in groups {
        let members: Vec<&crate::net::NetArc> = net
            .arcs
            .iter()
            .filter(|a| a.place == place && a.transition == transition && a.kind == kind)
            .collect();
        for (i, a1) in members.iter().enumerate() {
            for a2 in members.iter().skip(i + 1) {
                if jointly_satisfiable(&a1.guard, &a2.guard, bound) {
                    out.push(Diagnostic::error(format!(
                        "overlapping guards on {} arcs between `{place}` and `{transition}`",
                        describe_kind(kind)
                    )));
                }
            }
        }
    }

    for t in &net.transitions {
        let factor = t.stimulation.as_ref().map_or(1, |s| s.factor);
        if factor > 1 {
            for arc in net.arcs_of(&t.id, ArcKind::Input) {
                if let Some(place) = net.place(&arc.place) {
                    let scaled_binary = arc
                        .weight
                        .iter()
                        .any(|(color, _)| place.cap(color) == Some(1));
                    if scaled_binary {
                        out.push(Diagnostic::error(format!(
                            "binary stimulation: transition `{}` scales consumption from binary-capped place `{}`",
                            t.id, arc.place
                        )));
                    }
                }
            }
        }
    }

    let mut guards: Vec<(&Guard, String)> = Vec::new();
    for t in &net.transitions {
        guards.push((&t.guard, format!("guard of transition `{}`", t.id)));
        for g in &t.must_fire_guards {
            guards.push((g, format!("must-fire guard of transition `{}`", t.id)));
        }
        if let Some(s) = &t.stimulation {
            guards.push((&s.guard, format!("stimulation guard of transition `{}`", t.id)));
        }
    }
    for arc in &net.arcs {
        guards.push((
            &arc.guard,
            format!(
                "guard of {} arc between `{}` and `{}`",
                describe_kind(arc.kind),
                arc.place,
                arc.transition
            ),
        ));
    }
    for (guard, what) in guards {
        for fref in guard.fluent_refs() {
            let (place, _) = fref.place_color();
            if !place_ids.contains(place) {
                out.push(Diagnostic::error(format!(
                    "{what} references unknown place `{place}` (via fluent `{fref}`)"
                )));
            }
        }
    }

    for (place, tokens) in net.initial_marking.iter() {
        match net.place(place) {
            None => {
                out.push(Diagnostic::error(format!(
                    "initial marking references unknown place `{place}`"
                )));
            }
            Some(def) => {
                for (color, count) in tokens.iter() {
                    if let Some(cap) = def.cap(color) {
                        if count > cap {
                            out.push(Diagnostic::error(format!(
                                "initial marking of place `{place}` exceeds the cap for color `{color}` ({count} > {cap})"
                            )));
                        }
                    }
                }
            }
        }
    }

    out
}
