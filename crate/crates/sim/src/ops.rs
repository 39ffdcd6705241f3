//! Enabledness, conflict, and firing-set selection.

use std::collections::{BTreeMap, BTreeSet};

use biopathqa_model::{
    guard_satisfied, ms_add, ms_leq, ms_scale, ArcKind, ColoredMultiset, FiringStyle, GuardedNet,
    Marking, TransitionDef,
};

use crate::state::SimError;

/// The stimulation scaling of a transition at a marking: its declared factor
/// while the stimulation guard holds, 1 otherwise.
pub fn stimulation_factor(
    net: &GuardedNet,
    transition: &str,
    marking: &Marking,
) -> Result<u64, SimError> {
    let t = net
        .transition(transition)
        .ok_or_else(|| SimError::UnknownTransition {
            transition: transition.to_string(),
        })?;
    match &t.stimulation {
        Some(s) if guard_satisfied(&s.guard, marking)? => Ok(s.factor),
        _ => Ok(1),
    }
}

fn transition_enabled(
    net: &GuardedNet,
    t: &TransitionDef,
    marking: &Marking,
) -> Result<bool, SimError> {
    if !guard_satisfied(&t.guard, marking)? {
        return Ok(false);
    }
    let factor = stimulation_factor(net, &t.id, marking)?;
    for arc in net.arcs_of(&t.id, ArcKind::Input) {
        if !guard_satisfied(&arc.guard, marking)? {
            continue;
        }
        let need = ms_scale(&arc.weight, factor);
        let have = marking.get(&arc.place).cloned().unwrap_or_default();
        if !ms_leq(&need, &have) {
            return Ok(false);
        }
    }
    for arc in net.arcs_of(&t.id, ArcKind::Read) {
        if !guard_satisfied(&arc.guard, marking)? {
            continue;
        }
        for (color, threshold) in arc.weight.iter() {
            if marking.count(&arc.place, color) < threshold {
                return Ok(false);
            }
        }
    }
    for arc in net.arcs_of(&t.id, ArcKind::Inhibitor) {
        if !guard_satisfied(&arc.guard, marking)? {
            continue;
        }
        for (color, threshold) in arc.weight.iter() {
            if marking.count(&arc.place, color) >= threshold {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Transitions whose guard, satisfied-guard input coverage (scaled by
/// stimulation), read thresholds, and inhibitor bounds all hold at `marking`.
pub fn enabled_set(net: &GuardedNet, marking: &Marking) -> Result<BTreeSet<String>, SimError> {
    let mut out = BTreeSet::new();
    for t in &net.transitions {
        if transition_enabled(net, t, marking)? {
            out.insert(t.id.clone());
        }
    }
    Ok(out)
}

fn has_satisfied_must_fire(t: &TransitionDef, marking: &Marking) -> Result<bool, SimError> {
    for g in &t.must_fire_guards {
        if guard_satisfied(g, marking)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Enabled transitions with a satisfied must-fire guard.
pub fn must_fire_set(net: &GuardedNet, marking: &Marking) -> Result<BTreeSet<String>, SimError> {
    let mut out = BTreeSet::new();
    for t in &net.transitions {
        if transition_enabled(net, t, marking)? && has_satisfied_must_fire(t, marking)? {
            out.insert(t.id.clone());
        }
    }
    Ok(out)
}

fn transition_demand(
    net: &GuardedNet,
    marking: &Marking,
    transition: &str,
) -> Result<BTreeMap<String, ColoredMultiset>, SimError> {
    let mut demand: BTreeMap<String, ColoredMultiset> = BTreeMap::new();
    let factor = stimulation_factor(net, transition, marking)?;
    for arc in net.arcs_of(transition, ArcKind::Input) {
        if !guard_satisfied(&arc.guard, marking)? {
            continue;
        }
        let amount = ms_scale(&arc.weight, factor);
        let entry = demand.entry(arc.place.clone()).or_default();
        *entry = ms_add(entry, &amount);
    }
    for arc in net.arcs_of(transition, ArcKind::Reset) {
        if !guard_satisfied(&arc.guard, marking)? {
            continue;
        }
        let full = marking.get(&arc.place).cloned().unwrap_or_default();
        let entry = demand.entry(arc.place.clone()).or_default();
        *entry = ms_add(entry, &full);
    }
    Ok(demand)
}

/// Per-place total demand of the firing set `firing`: satisfied-guard input
/// weights scaled by stimulation, plus the full current content of every
/// satisfied-guard reset place. Places without demand are absent.
pub fn consumption(
    net: &GuardedNet,
    marking: &Marking,
    firing: &BTreeSet<String>,
) -> Result<BTreeMap<String, ColoredMultiset>, SimError> {
    let mut total: BTreeMap<String, ColoredMultiset> = BTreeMap::new();
    for t in firing {
        for (place, amount) in transition_demand(net, marking, t)? {
            let entry = total.entry(place).or_default();
            *entry = ms_add(entry, &amount);
        }
    }
    total.retain(|_, ms| !ms.is_empty());
    Ok(total)
}

/// Places where the demand of `firing` exceeds availability in any color.
pub fn overconsumed(
    net: &GuardedNet,
    marking: &Marking,
    firing: &BTreeSet<String>,
) -> Result<BTreeSet<String>, SimError> {
    let demand = consumption(net, marking, firing)?;
    let mut out = BTreeSet::new();
    for (place, needed) in demand {
        let have = marking.get(&place).cloned().unwrap_or_default();
        if !ms_leq(&needed, &have) {
            out.insert(place);
        }
    }
    Ok(out)
}

/// Keeps the transitions whose priority number equals the minimum over the
/// given set (lower number means higher priority).
pub fn priority_filter(net: &GuardedNet, enabled: &BTreeSet<String>) -> BTreeSet<String> {
    let min = enabled
        .iter()
        .filter_map(|id| net.transition(id))
        .map(|t| t.priority)
        .min();
    match min {
        None => BTreeSet::new(),
        Some(m) => enabled
            .iter()
            .filter(|id| net.transition(id).map_or(false, |t| t.priority == m))
            .cloned()
            .collect(),
    }
}

pub(crate) struct CandidateOutcome {
    pub candidates: Vec<BTreeSet<String>>,
    pub serial_conflict: Option<String>,
}

/// The candidate pipeline shared by the public entry point and the
/// enumerator: enabledness (with busy durative transitions removed), the
/// priority filter, must-fire collection, style selection, and the
/// reset-transition side-condition, in that order.
pub(crate) fn candidates_with_busy(
    net: &GuardedNet,
    marking: &Marking,
    style: FiringStyle,
    busy: &BTreeMap<String, u64>,
    step: u64,
    force_non_reentrant: bool,
) -> Result<CandidateOutcome, SimError> {
    let mut enabled: Vec<&TransitionDef> = Vec::new();
    for t in &net.transitions {
        if !transition_enabled(net, t, marking)? {
            continue;
        }
        let reentrant = t.reentrant && !force_non_reentrant;
        if !reentrant {
            if let Some(free_at) = busy.get(&t.id) {
                if *free_at > step {
                    continue;
                }
            }
        }
        enabled.push(t);
    }

    if let Some(min) = enabled.iter().map(|t| t.priority).min() {
        enabled.retain(|t| t.priority == min);
    }

    let mut must_fire: BTreeSet<String> = BTreeSet::new();
    for t in &enabled {
        if has_satisfied_must_fire(t, marking)? {
            must_fire.insert(t.id.clone());
        }
    }

    let demands: Vec<BTreeMap<String, ColoredMultiset>> = enabled
        .iter()
        .map(|t| transition_demand(net, marking, &t.id))
        .collect::<Result<_, _>>()?;

    let fits = |members: &[usize]| -> bool {
        let mut total: BTreeMap<&str, ColoredMultiset> = BTreeMap::new();
        for &i in members {
            for (place, amount) in &demands[i] {
                let entry = total.entry(place.as_str()).or_default();
                *entry = ms_add(entry, amount);
            }
        }
        total.iter().all(|(place, needed)| {
            let have = marking.get(place).cloned().unwrap_or_default();
            ms_leq(needed, &have)
        })
    };

    let subset_ids = |members: &[usize]| -> BTreeSet<String> {
        members.iter().map(|&i| enabled[i].id.clone()).collect()
    };

    let mut candidates: Vec<BTreeSet<String>> = Vec::new();
    let mut serial_conflict = None;

    match style {
        FiringStyle::Any | FiringStyle::Max => {
            let n = enabled.len();
            let mut viable: Vec<Vec<usize>> = Vec::new();
            for mask in 0u64..(1u64 << n) {
                let members: Vec<usize> =
                    (0..n).filter(|i| mask & (1 << i) != 0).collect();
                let ids = subset_ids(&members);
                if !must_fire.iter().all(|t| ids.contains(t)) {
                    continue;
                }
                if !fits(&members) {
                    continue;
                }
                viable.push(members);
            }
            if style == FiringStyle::Max {
                let sets: Vec<BTreeSet<usize>> = viable
                    .iter()
                    .map(|m| m.iter().copied().collect())
                    .collect();
                viable = viable
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| {
                        !sets.iter().enumerate().any(|(j, other)| {
                            j != *i && sets[*i].is_subset(other) && sets[*i] != *other
                        })
                    })
                    .map(|(_, m)| m.clone())
                    .collect();
            }
            candidates = viable.iter().map(|m| subset_ids(m)).collect();
        }
        FiringStyle::Serial => match must_fire.len() {
            1 => {
                let members: Vec<usize> = enabled
                    .iter()
                    .enumerate()
                    .filter(|(_, t)| must_fire.contains(&t.id))
                    .map(|(i, _)| i)
                    .collect();
                if fits(&members) {
                    candidates.push(subset_ids(&members));
                }
            }
            0 => {
                candidates.push(BTreeSet::new());
                for i in 0..enabled.len() {
                    if fits(&[i]) {
                        candidates.push(subset_ids(&[i]));
                    }
                }
            }
            _ => {
                let names: Vec<&str> =
                    must_fire.iter().map(|s| s.as_str()).collect();
                serial_conflict = Some(format!(
                    "serial firing style cannot satisfy {} simultaneous must-fire transitions ({}) at step {step}",
                    must_fire.len(),
                    names.join(", ")
                ));
            }
        },
    }

    let mut resetters: BTreeSet<String> = BTreeSet::new();
    for t in &enabled {
        for arc in net.arcs_of(&t.id, ArcKind::Reset) {
            if guard_satisfied(&arc.guard, marking)? {
                resetters.insert(t.id.clone());
                break;
            }
        }
    }
    candidates.retain(|c| resetters.iter().all(|r| c.contains(r)));

    let index_of = |id: &str| net.transition_index(id).unwrap_or(usize::MAX);
    candidates.sort_by_key(|c| {
        let mut order: Vec<usize> = c.iter().map(|t| index_of(t)).collect();
        order.sort_unstable();
        (c.len(), order)
    });

    Ok(CandidateOutcome {
        candidates,
        serial_conflict,
    })
}

/// The firing sets the net may choose from at `marking` under `style`. An
/// empty collection means the run halts at this state.
pub fn candidate_firing_sets(
    net: &GuardedNet,
    marking: &Marking,
    style: FiringStyle,
) -> Result<Vec<BTreeSet<String>>, SimError> {
    let outcome = candidates_with_busy(net, marking, style, &BTreeMap::new(), 0, false)?;
    Ok(outcome.candidates)
}
