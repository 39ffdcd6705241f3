//! State update and exhaustive trajectory enumeration.

use std::collections::BTreeSet;

use biopathqa_model::{
    guard_satisfied, ms_add, ms_scale, ms_sub_saturating, ArcKind, FiringStyle, GuardedNet,
    Marking,
};

use crate::ops::{candidates_with_busy, consumption, stimulation_factor};
use crate::state::{EnumerationResult, PendingProduction, SimError, SimOptions, SimState, Trajectory};

/// Applies the firing set `firing` to `state`: consumption (including reset
/// arcs draining their places) happens now, production arrives at the state
/// `fire step + duration`, and binary caps clamp the result.
pub fn step(net: &GuardedNet, state: &SimState, firing: &BTreeSet<String>) -> Result<SimState, SimError> {
    let demand = consumption(net, &state.marking, firing)?;
    let mut marking = state.marking.clone();
    for (place, amount) in &demand {
        let have = marking.get(place).cloned().unwrap_or_default();
        marking.set(place, ms_sub_saturating(&have, amount)?);
    }

    let mut pending = state.pending.clone();
    for id in firing {
        let t = net
            .transition(id)
            .ok_or_else(|| SimError::UnknownTransition { transition: id.clone() })?;
        let factor = stimulation_factor(net, id, &state.marking)?;
        for arc in net.arcs_of(id, ArcKind::Output) {
            if !guard_satisfied(&arc.guard, &state.marking)? {
                continue;
            }
            pending.push(PendingProduction {
                due_step: state.step + t.duration,
                place: arc.place.clone(),
                amount: ms_scale(&arc.weight, factor),
            });
        }
    }

    let next_step = state.step + 1;
    let mut in_transit = Vec::new();
    for p in pending {
        if p.due_step <= next_step {
            let have = marking.get(&p.place).cloned().unwrap_or_default();
            marking.set(&p.place, ms_add(&have, &p.amount));
        } else {
            in_transit.push(p);
        }
    }

    for place in &net.places {
        if place.binary_colors.is_empty() {
            continue;
        }
        let mut tokens = marking.get(&place.id).cloned().unwrap_or_default();
        let mut clamped = false;
        for color in &place.binary_colors {
            if tokens.count(color) > 1 {
                tokens.set(color, 1);
                clamped = true;
            }
        }
        if clamped {
            marking.set(&place.id, tokens);
        }
    }

    let mut busy = state.busy.clone();
    busy.retain(|_, free_at| *free_at > next_step);
    for id in firing {
        let t = net.transition(id).expect("firing members were resolved above");
        if t.duration > 1 {
            busy.insert(id.clone(), state.step + t.duration);
        }
    }

    Ok(SimState {
        step: next_step,
        marking,
        pending: in_transit,
        busy,
    })
}

fn check_cap(marking: &Marking, net: &GuardedNet, cap: u64, step: u64) -> Result<(), SimError> {
    for (place, tokens) in marking.iter() {
        for (color, count) in tokens.iter() {
            if count > cap {
                let binary = net
                    .place(place)
                    .map_or(false, |p| p.binary_colors.contains(color));
                if !binary {
                    return Err(SimError::CapExceeded {
                        place: place.to_string(),
                        color: color.to_string(),
                        count,
                        cap,
                        step,
                    });
                }
            }
        }
    }
    Ok(())
}

struct Enumerator<'a> {
    net: &'a GuardedNet,
    opts: &'a SimOptions,
    style: FiringStyle,
    states: Vec<Marking>,
    firings: Vec<BTreeSet<String>>,
    trajectories: Vec<Trajectory>,
    diagnostics: BTreeSet<String>,
}

impl Enumerator<'_> {
    fn record(&mut self, trajectory: Trajectory) -> Result<(), SimError> {
        self.trajectories.push(trajectory);
        if self.trajectories.len() as u64 > self.opts.max_trajectories {
            return Err(SimError::TooManyTrajectories {
                max: self.opts.max_trajectories,
            });
        }
        Ok(())
    }

    fn explore(&mut self, state: SimState) -> Result<(), SimError> {
        let outcome = candidates_with_busy(
            self.net,
            &state.marking,
            self.style,
            &state.busy,
            state.step,
            self.opts.non_reentrant,
        )?;
        if let Some(conflict) = outcome.serial_conflict {
            self.diagnostics.insert(conflict);
        }
        if outcome.candidates.is_empty() {
            let truncated = Trajectory {
                states: self.states.clone(),
                firings: self.firings.clone(),
                complete: false,
            };
            return self.record(truncated);
        }
        for firing in outcome.candidates {
            let next = step(self.net, &state, &firing)?;
            if next.step <= self.opts.steps {
                check_cap(&next.marking, self.net, self.opts.max_tokens, next.step)?;
            }
            self.firings.push(firing);
            if state.step == self.opts.steps {
                self.states.push(next.marking);
                let complete = Trajectory {
                    states: self.states.clone(),
                    firings: self.firings.clone(),
                    complete: true,
                };
                self.states.pop();
                self.record(complete)?;
            } else {
                self.states.push(next.marking.clone());
                self.explore(next)?;
                self.states.pop();
            }
            self.firings.pop();
        }
        Ok(())
    }
}

/// Every trajectory of the net from its initial marking to horizon
/// `opts.steps`, branching over the candidate firing sets at each state.
/// Trajectories arrive in canonical order: depth-first over per-step
/// candidates sorted by size then declaration order.
pub fn enumerate_trajectories(
    net: &GuardedNet,
    opts: &SimOptions,
) -> Result<EnumerationResult, SimError> {
    let style = opts.style.unwrap_or(net.firing_style);
    let initial = net.initial_state();
    check_cap(&initial, net, opts.max_tokens, 0)?;
    let mut enumerator = Enumerator {
        net,
        opts,
        style,
        states: vec![initial.clone()],
        firings: Vec::new(),
        trajectories: Vec::new(),
        diagnostics: BTreeSet::new(),
    };
    enumerator.explore(SimState::initial(initial))?;
    Ok(EnumerationResult {
        trajectories: enumerator.trajectories,
        diagnostics: enumerator.diagnostics.into_iter().collect(),
    })
}
