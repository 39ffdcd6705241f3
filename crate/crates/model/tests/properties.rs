//! Algebraic properties of multiset operations and guard evaluation.

use biopathqa_model::{
    guard_satisfied, ms_add, ms_leq, ColoredMultiset, CondKind, CondRhs, Condition, FluentRef,
    Guard, Marking,
};
use proptest::prelude::*;

const COLORS: [&str; 4] = ["_", "h", "e", "nadh"];
const PLACES: [&str; 3] = ["f1", "f2", "l1"];

fn multiset_strategy() -> impl Strategy<Value = ColoredMultiset> {
    proptest::collection::vec((0usize..COLORS.len(), 0u64..50), 0..4).prop_map(|pairs| {
        let mut ms = ColoredMultiset::new();
        for (ci, count) in pairs {
            ms.set(COLORS[ci], ms.count(COLORS[ci]) + count);
        }
        ms
    })
}

fn fluent_ref_strategy() -> impl Strategy<Value = FluentRef> {
    prop_oneof![
        (0usize..PLACES.len()).prop_map(|i| FluentRef::simple(PLACES[i])),
        (0usize..COLORS.len(), 0usize..PLACES.len())
            .prop_map(|(c, p)| FluentRef::at(COLORS[c], PLACES[p])),
    ]
}

fn condition_strategy() -> impl Strategy<Value = Condition> {
    let kind = prop_oneof![
        Just(CondKind::Lt),
        Just(CondKind::Le),
        Just(CondKind::Gt),
        Just(CondKind::Ge),
        Just(CondKind::Eq),
    ];
    let rhs = prop_oneof![
        (0u64..12).prop_map(CondRhs::Const),
        fluent_ref_strategy().prop_map(CondRhs::Fluent),
    ];
    (fluent_ref_strategy(), kind, rhs).prop_map(|(lhs, kind, rhs)| Condition::new(lhs, kind, rhs))
}

fn guard_strategy() -> impl Strategy<Value = Guard> {
    let leaf = prop_oneof![
        Just(Guard::True),
        condition_strategy().prop_map(Guard::Cond),
    ];
    leaf.prop_recursive(3, 16, 3, |inner| {
        prop_oneof![
            inner.clone().prop_map(|g| Guard::Not(Box::new(g))),
            proptest::collection::vec(inner.clone(), 1..3).prop_map(Guard::And),
            proptest::collection::vec(inner, 1..3).prop_map(Guard::Or),
        ]
    })
}

fn marking_strategy() -> impl Strategy<Value = Marking> {
    proptest::collection::vec(0u64..12, PLACES.len() * COLORS.len()).prop_map(|vals| {
        let mut m = Marking::new();
        let mut it = vals.into_iter();
        for place in PLACES {
            let mut ms = ColoredMultiset::new();
            for color in COLORS {
                ms.set(color, it.next().unwrap());
            }
            m.set(place, ms);
        }
        m
    })
}

proptest! {
    #[test]
    fn add_commutes(a in multiset_strategy(), b in multiset_strategy()) {
        prop_assert_eq!(ms_add(&a, &b), ms_add(&b, &a));
    }

    #[test]
    fn add_associates(a in multiset_strategy(), b in multiset_strategy(), c in multiset_strategy()) {
        prop_assert_eq!(ms_add(&ms_add(&a, &b), &c), ms_add(&a, &ms_add(&b, &c)));
    }

    #[test]
    fn leq_is_reflexive(a in multiset_strategy()) {
        prop_assert!(ms_leq(&a, &a));
    }

    #[test]
    fn leq_is_antisymmetric(a in multiset_strategy(), b in multiset_strategy()) {
        if ms_leq(&a, &b) && ms_leq(&b, &a) {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn leq_is_transitive(a in multiset_strategy(), b in multiset_strategy(), c in multiset_strategy()) {
        if ms_leq(&a, &b) && ms_leq(&b, &c) {
            prop_assert!(ms_leq(&a, &c));
        }
    }

    #[test]
    fn negation_flips_satisfaction(g in guard_strategy(), m in marking_strategy()) {
        let plain = guard_satisfied(&g, &m).unwrap();
        let negated = guard_satisfied(&Guard::Not(Box::new(g)), &m).unwrap();
        prop_assert_eq!(negated, !plain);
    }
}
