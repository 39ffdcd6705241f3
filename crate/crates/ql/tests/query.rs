use biopathqa_model::FluentRef;
use biopathqa_ql::{
    parse_query, render, AggOp, CascadeLink, DirectionOrHole, Intervention, IntervalFormula,
    IntervalQuantity, Number, NumberOrHole, Observation, Point, PointFormula, QueryDescription,
    QueryStatement,
};

const RATE_PLAIN: &str = "\
rate of production of 'bpg13' is n
when observed between time step 0 and time step k ;
";

const RATE_FIXED_SUPPLY: &str = "\
rate of production of 'bpg13' is n
when observed between time step 0 and time step k ;
using initial setup: set value of 'f16bp' to 5 ;
";

const RATE_CONTINUOUS_SUPPLY: &str = "\
rate of production of 'bpg13' is n
when observed between time step 0 and time step k ;
using initial setup: continuously supply 'f16bp' in quantity 5 ;
";

const RATE_WITH_INTERVENTION: &str = "\
rate of production of 'bpg13' is n
when observed between time step 0 and time step k ;
due to interventions: remove 'dhap' as soon as produced ;
using initial setup: continuously supply 'f16bp' in quantity 5 ;
";

const RATE_WITH_OBSERVATION: &str = "\
rate of production of 'bpg13' is n
when observed between time step 0 and time step k ;
due to interventions: remove 'dhap' as soon as produced ;
due to observations: 't5b' does not occur ;
using initial setup: continuously supply 'f16bp' in quantity 5 ;
";

const AVERAGE_RATE: &str = "\
average rate of production of 'bpg13' is n
when observed between time step 0 and time step k ;
due to interventions: remove 'dhap' as soon as produced ;
due to observations: 't5b' does not occur ;
using initial setup: continuously supply 'f16bp' in quantity 5 ;
";

const COMPARATIVE_RATE: &str = "\
direction of change in average rate of production of 'bpg13' is d
when observed between time step 0 and time step k ;
comparing nominal pathway with modified pathway obtained
      due to interventions: remove 'dhap' as soon as produced ;
      due to observations: 't5b' does not occur ;
using initial setup: continuously supply 'f16bp' in quantity 5 ;
";

const OCCURS_QUERY: &str = "\
't5b' occurs ;
due to interventions: disable 't5a' ;
using initial setup: continuously produce 'f16bp' in quantity 5 ;
";

const SWITCHES_QUERY: &str = "\
'gly' switches to 'box' when
    value of 'sug' is 0,
    value of 'fac' is higher than 0
    in all trajectories ;
due to observations:
    'gly' switches to 'box'
using initial setup:
    set value of 'sug' to 5,
    set value of 'fac' to 5 ;
";

const GLYCOLYSIS_COMPARATIVE: &str = "\
direction of change in average rate of production of bpg13 is d
    when observed between time step 0 and time step k;
    comparing nominal pathway with modified pathway obtained
        due to interventions: remove dhap as soon as produced;
    using initial setup: continuously supply f16bp in quantity 1;
";

const GLYCOLYSIS_NOMINAL_SUBQUERY: &str = "\
average rate of production of bpg13 is n_avg
    when observed between time step 0 and time step k;
using initial setup: continuously supply f16bp in quantity 1;
";

const GLYCOLYSIS_MODIFIED_SUBQUERY: &str = "\
average rate of production of bpg13 is n_avg
    when observed between time step 0 and time step k;
due to interventions: remove dhap as soon as produced ;
using initial setup: continuously supply f16bp in quantity 1;
";

const SWITCH_CONDITION_QUERY: &str = "\
gly switches to box when p;
    due to observations:
        gly switches to box
    in all trajectories
";

const DISABLED_COMPARATIVE: &str = "\
direction of change in average total production of h atloc is is d
    when observed between time step 0 and time step k ;
    comparing nominal pathway with modified pathway obtained
    due to intervention t4 disabled ;
";

const DELAY_COMPARATIVE: &str = "\
direction of change in average total production of h atloc is is d
    when observed between time step 0 and time step k;
    comparing nominal pathway with modified pathway obtained
        due to interventions:
            add delay of v time units in availability of e atloc q,
            add delay of v time units in availability of e atloc cytc;
";

const DRUG_INTERACTION_QUERY: &str = "\
direction of change in average value of gefitinib is d
    when observed at time step k;
    comparing nominal pathway with modified pathway obtained
        due to interventions: set value of phenytoin to 5;
";

const DRUG_BIOAVAILABILITY_QUERY: &str = "\
average value of gefitinib is n
    when observed at time step k;
    due to interventions:
        set value of phenytoin to 5;
";

const DRUG_DEVELOPMENT_QUERY: &str = "\
average value of gefitinib is n
    when observed at time step k;
    due to interventions:
        set value of phenytoin to 5,
        set value of test_drug to 5;
";

const MORPHINE_QUERY: &str = "\
average value of morphine is n
    when observed at time step k;
    due to interventions:
        set value of codeine to 20,
        set value of cyp2d6 to 20,
        set value of cyp2d6_allele to 9;
";

const CORPUS: &[&str] = &[
    RATE_PLAIN,
    RATE_FIXED_SUPPLY,
    RATE_CONTINUOUS_SUPPLY,
    RATE_WITH_INTERVENTION,
    RATE_WITH_OBSERVATION,
    AVERAGE_RATE,
    COMPARATIVE_RATE,
    OCCURS_QUERY,
    SWITCHES_QUERY,
    GLYCOLYSIS_COMPARATIVE,
    GLYCOLYSIS_NOMINAL_SUBQUERY,
    GLYCOLYSIS_MODIFIED_SUBQUERY,
    SWITCH_CONDITION_QUERY,
    DISABLED_COMPARATIVE,
    DELAY_COMPARATIVE,
    DRUG_INTERACTION_QUERY,
    DRUG_BIOAVAILABILITY_QUERY,
    DRUG_DEVELOPMENT_QUERY,
    MORPHINE_QUERY,
];

fn simple(name: &str) -> FluentRef {
    FluentRef::simple(name)
}

fn at(fluent: &str, location: &str) -> FluentRef {
    FluentRef::at(fluent, location)
}

fn num(value: i64) -> NumberOrHole {
    NumberOrHole::Number(Number::from_int(value))
}

fn hole(name: &str) -> NumberOrHole {
    NumberOrHole::Hole(name.to_string())
}

fn parsed(text: &str) -> QueryStatement {
    parse_query(text).unwrap_or_else(|e| panic!("parse failed for {text:?}: {e}"))
}

#[test]
fn every_corpus_query_parses() {
    for text in CORPUS {
        parsed(text);
    }
}

#[test]
fn corpus_round_trips_through_render() {
    for text in CORPUS {
        let q = parsed(text);
        let rendered = render(&q);
        let reparsed = parse_query(&rendered)
            .unwrap_or_else(|e| panic!("reparse failed for {rendered:?}: {e}"));
        assert_eq!(q, reparsed, "render round trip changed {text:?}");
    }
}

#[test]
fn comparative_rate_query_shape() {
    let q = parsed(GLYCOLYSIS_COMPARATIVE);
    assert_eq!(
        q.description,
        QueryDescription::ComparativeInterval {
            op: AggOp::Average,
            quantity: IntervalQuantity::ProductionRate(simple("bpg13")),
            direction: DirectionOrHole::Hole("d".to_string()),
            between: biopathqa_ql::Interval {
                from: Point::Step(0),
                to: Point::Hole("k".to_string()),
            },
        }
    );
    assert_eq!(
        q.interventions,
        vec![Intervention::RemoveAsProduced {
            fluent: simple("dhap")
        }]
    );
    assert!(q.observations.is_empty());
    assert_eq!(
        q.initial_setup,
        vec![Intervention::ContinuouslySupply {
            fluent: simple("f16bp"),
            quantity: num(1),
        }]
    );
}

#[test]
fn bare_occurs_has_no_anchor_and_no_clauses() {
    let q = parsed("'t5b' occurs;");
    assert_eq!(
        q.description,
        QueryDescription::Observed {
            observation: Observation::Point {
                formula: PointFormula::Occurs {
                    action: "t5b".to_string()
                },
                at: None,
            },
            all_trajectories: false,
        }
    );
    assert!(q.interventions.is_empty());
    assert!(q.observations.is_empty());
    assert!(q.initial_setup.is_empty());
}

#[test]
fn switch_condition_query_is_a_cascade_with_a_hole() {
    let q = parsed(SWITCH_CONDITION_QUERY);
    assert_eq!(
        q.description,
        QueryDescription::Cascade {
            head: PointFormula::SwitchesTo {
                from: "gly".to_string(),
                to: "box".to_string(),
            },
            links: vec![CascadeLink::WhenCondition("p".to_string())],
            all_trajectories: true,
        }
    );
    assert_eq!(
        q.observations,
        vec![Observation::Point {
            formula: PointFormula::SwitchesTo {
                from: "gly".to_string(),
                to: "box".to_string(),
            },
            at: None,
        }]
    );
}

#[test]
fn switches_query_carries_when_list_and_setup() {
    let q = parsed(SWITCHES_QUERY);
    match &q.description {
        QueryDescription::Cascade {
            head,
            links,
            all_trajectories,
        } => {
            assert_eq!(
                head,
                &PointFormula::SwitchesTo {
                    from: "gly".to_string(),
                    to: "box".to_string(),
                }
            );
            assert!(all_trajectories);
            assert_eq!(
                links,
                &vec![CascadeLink::When(vec![
                    PointFormula::ValueIs {
                        fluent: simple("sug"),
                        value: num(0),
                    },
                    PointFormula::ValueHigher {
                        fluent: simple("fac"),
                        value: num(0),
                    },
                ])]
            );
        }
        other => panic!("expected a cascade, got {other:?}"),
    }
    assert_eq!(
        q.initial_setup,
        vec![
            Intervention::SetValue {
                fluent: simple("sug"),
                value: num(5),
            },
            Intervention::SetValue {
                fluent: simple("fac"),
                value: num(5),
            },
        ]
    );
}

#[test]
fn observation_clause_and_intervention_clause_fill_in_order() {
    let q = parsed(RATE_WITH_OBSERVATION);
    assert_eq!(
        q.interventions,
        vec![Intervention::RemoveAsProduced {
            fluent: simple("dhap")
        }]
    );
    assert_eq!(
        q.observations,
        vec![Observation::Point {
            formula: PointFormula::DoesNotOccur {
                action: "t5b".to_string()
            },
            at: None,
        }]
    );
    assert_eq!(
        q.initial_setup,
        vec![Intervention::ContinuouslySupply {
            fluent: simple("f16bp"),
            quantity: num(5),
        }]
    );
}

#[test]
fn produce_is_an_alias_for_supply() {
    let q = parsed(OCCURS_QUERY);
    assert_eq!(
        q.interventions,
        vec![Intervention::Disable {
            action: "t5a".to_string()
        }]
    );
    assert_eq!(
        q.initial_setup,
        vec![Intervention::ContinuouslySupply {
            fluent: simple("f16bp"),
            quantity: num(5),
        }]
    );
}

#[test]
fn comparative_point_query_shape() {
    let q = parsed(DRUG_INTERACTION_QUERY);
    assert_eq!(
        q.description,
        QueryDescription::ComparativePoint {
            op: AggOp::Average,
            fluent: simple("gefitinib"),
            direction: DirectionOrHole::Hole("d".to_string()),
            at: Point::Hole("k".to_string()),
        }
    );
    assert_eq!(
        q.interventions,
        vec![Intervention::SetValue {
            fluent: simple("phenytoin"),
            value: num(5),
        }]
    );
}

#[test]
fn delay_interventions_take_hole_quantities_and_locations() {
    let q = parsed(DELAY_COMPARATIVE);
    match &q.description {
        QueryDescription::ComparativeInterval { quantity, .. } => {
            assert_eq!(
                quantity,
                &IntervalQuantity::TotalProduction(at("h", "is"))
            );
        }
        other => panic!("expected a comparative interval, got {other:?}"),
    }
    assert_eq!(
        q.interventions,
        vec![
            Intervention::AddDelay {
                quantity: hole("v"),
                fluent: at("e", "q"),
            },
            Intervention::AddDelay {
                quantity: hole("v"),
                fluent: at("e", "cytc"),
            },
        ]
    );
}

#[test]
fn singular_intervention_clause_disables_the_action() {
    let q = parsed(DISABLED_COMPARATIVE);
    assert_eq!(
        q.interventions,
        vec![Intervention::Disable {
            action: "t4".to_string()
        }]
    );
    assert!(q.initial_setup.is_empty());
}

#[test]
fn multiple_set_values_in_one_clause() {
    let q = parsed(MORPHINE_QUERY);
    assert_eq!(
        q.interventions,
        vec![
            Intervention::SetValue {
                fluent: simple("codeine"),
                value: num(20),
            },
            Intervention::SetValue {
                fluent: simple("cyp2d6"),
                value: num(20),
            },
            Intervention::SetValue {
                fluent: simple("cyp2d6_allele"),
                value: num(9),
            },
        ]
    );
}

#[test]
fn plural_rates_bind_a_bracketed_list() {
    let q = parsed(
        "rates of production of 'bpg13' are [0.4, 0.8, 1.2] \
         when observed between time step 0 and time step 5 ;",
    );
    assert_eq!(
        q.description,
        QueryDescription::AllInterval {
            quantity: IntervalQuantity::ProductionRate(simple("bpg13")),
            values: vec![Number::new(4, 1), Number::new(8, 1), Number::new(12, 1)],
            between: biopathqa_ql::Interval {
                from: Point::Step(0),
                to: Point::Step(5),
            },
        }
    );
}

#[test]
fn plural_values_bind_at_a_point() {
    let q = parsed("values of 'x' are [0, 2, 4] when observed at time step 3 ;");
    assert_eq!(
        q.description,
        QueryDescription::AllPoint {
            fluent: simple("x"),
            values: vec![Number::from_int(0), Number::from_int(2), Number::from_int(4)],
            at: Point::Step(3),
        }
    );
}

#[test]
fn minimum_and_maximum_aggregates_parse() {
    let q = parsed("minimum value of 'f' is n when observed at time step 5 ;");
    assert_eq!(
        q.description,
        QueryDescription::AggregatePoint {
            op: AggOp::Minimum,
            fluent: simple("f"),
            value: hole("n"),
            at: Point::Step(5),
        }
    );
    let q = parsed(
        "maximum total production of 'f' atloc 'l' is 4 \
         when observed between time step 1 and time step 3 ;",
    );
    assert_eq!(
        q.description,
        QueryDescription::AggregateInterval {
            op: AggOp::Maximum,
            quantity: IntervalQuantity::TotalProduction(at("f", "l")),
            value: num(4),
            between: biopathqa_ql::Interval {
                from: Point::Step(1),
                to: Point::Step(3),
            },
        }
    );
}

#[test]
fn firing_rate_normalizes_decimal_values() {
    let q = parsed("rate of firing of 't3' is 1.0 when observed between time step 0 and time step 5 ;");
    assert_eq!(
        q.description,
        QueryDescription::Observed {
            observation: Observation::Interval {
                formula: IntervalFormula::Quantity {
                    quantity: IntervalQuantity::FiringRate("t3".to_string()),
                    value: num(1),
                },
                between: Some(biopathqa_ql::Interval {
                    from: Point::Step(0),
                    to: Point::Step(5),
                }),
            },
            all_trajectories: false,
        }
    );
    assert_eq!(Number::new(10, 1), Number::from_int(1));
    assert_eq!(Number::new(8, 1).to_string(), "0.8");
    assert_eq!(Number::new(125, 2).to_string(), "1.25");
    assert_eq!(Number::new(-8, 1).to_string(), "-0.8");
}

#[test]
fn remaining_intervention_forms_parse() {
    let q = parsed(
        "'a' occurs ;
         due to interventions:
             continuously transform 'f1' in quantity 2 to 'f2' atloc 'l2',
             make 'f3' inhibit 't1',
             continuously transfer 'h' in quantity 2 across 'mm','is' to lower gradient ;",
    );
    assert_eq!(
        q.interventions,
        vec![
            Intervention::ContinuouslyTransform {
                from: simple("f1"),
                quantity: num(2),
                to: at("f2", "l2"),
            },
            Intervention::MakeInhibit {
                fluent: simple("f3"),
                action: "t1".to_string(),
            },
            Intervention::TransferAcross {
                fluent: "h".to_string(),
                quantity: num(2),
                from_location: "mm".to_string(),
                to_location: "is".to_string(),
            },
        ]
    );
}

#[test]
fn after_cascade_groups_in_order() {
    let q = parsed(
        "value of 'atp' is higher than 3 \
         after 'gly' occurs, 'box' does not occur \
         after value of 'o2' is 0 ;",
    );
    assert_eq!(
        q.description,
        QueryDescription::Cascade {
            head: PointFormula::ValueHigher {
                fluent: simple("atp"),
                value: num(3),
            },
            links: vec![
                CascadeLink::After(vec![
                    PointFormula::Occurs {
                        action: "gly".to_string()
                    },
                    PointFormula::DoesNotOccur {
                        action: "box".to_string()
                    },
                ]),
                CascadeLink::After(vec![PointFormula::ValueIs {
                    fluent: simple("o2"),
                    value: num(0),
                }]),
            ],
            all_trajectories: false,
        }
    );
}

#[test]
fn point_observations_can_anchor_at_a_step() {
    let q = parsed("value of 'sug' is 0 at time step 4 ;");
    assert_eq!(
        q.description,
        QueryDescription::Observed {
            observation: Observation::Point {
                formula: PointFormula::ValueIs {
                    fluent: simple("sug"),
                    value: num(0),
                },
                at: Some(Point::Step(4)),
            },
            all_trajectories: false,
        }
    );
}

#[test]
fn interval_observations_accept_anchors_in_clauses() {
    let q = parsed(
        "'t5b' occurs ;
         due to observations:
             'acoa' is accumulating when observed between time step 0 and time step 5 ;",
    );
    assert_eq!(
        q.observations,
        vec![Observation::Interval {
            formula: IntervalFormula::Accumulating {
                fluent: simple("acoa")
            },
            between: Some(biopathqa_ql::Interval {
                from: Point::Step(0),
                to: Point::Step(5),
            }),
        }]
    );
}

#[test]
fn decreasing_takes_a_trailing_location() {
    let q = parsed("'h' is decreasing atloc 'mm' ;");
    assert_eq!(
        q.description,
        QueryDescription::Observed {
            observation: Observation::Interval {
                formula: IntervalFormula::Decreasing {
                    fluent: at("h", "mm")
                },
                between: None,
            },
            all_trajectories: false,
        }
    );
}

#[test]
fn occurs_accepts_in_all_trajectories() {
    let q = parsed("'t5b' occurs in all trajectories ;");
    assert_eq!(
        q.description,
        QueryDescription::Observed {
            observation: Observation::Point {
                formula: PointFormula::Occurs {
                    action: "t5b".to_string()
                },
                at: None,
            },
            all_trajectories: true,
        }
    );
}

#[test]
fn quoted_direction_literals_parse() {
    let q = parsed(
        "direction of change in average rate of production of 'bpg13' is '<' \
         when observed between time step 0 and time step 5 ;
         comparing nominal pathway with modified pathway obtained
         due to interventions: remove 'dhap' as soon as produced ;",
    );
    match q.description {
        QueryDescription::ComparativeInterval { direction, .. } => {
            assert_eq!(
                direction,
                DirectionOrHole::Direction(biopathqa_ql::Direction::Less)
            );
        }
        other => panic!("expected a comparative interval, got {other:?}"),
    }
}

#[test]
fn aggregate_requires_its_anchor() {
    let err = parse_query("average rate of production of 'f' is n ;").unwrap_err();
    assert_eq!(err.expected, vec!["'when'".to_string()]);
}

#[test]
fn setup_items_reject_general_interventions() {
    let err = parse_query("'a' occurs ; using initial setup: disable 't1' ;").unwrap_err();
    assert_eq!(
        err.expected,
        vec![
            "'continuously supply'".to_string(),
            "'set value of'".to_string()
        ]
    );
}

#[test]
fn comparing_clause_requires_a_comparative_description() {
    let err =
        parse_query("'a' occurs ; comparing nominal pathway with modified pathway obtained")
            .unwrap_err();
    assert_eq!(
        err.expected,
        vec!["a 'direction of change' description before 'comparing'".to_string()]
    );
}

#[test]
fn comparative_description_requires_the_comparing_clause() {
    let err = parse_query(
        "direction of change in average rate of production of 'f' is d \
         when observed between time step 0 and time step 5 ;",
    )
    .unwrap_err();
    assert_eq!(err.expected, vec!["'comparing'".to_string()]);
    assert_eq!(err.found, "end of query");
}

#[test]
fn plural_lists_require_brackets() {
    let err = parse_query(
        "rates of production of 'f' are 0.8 when observed between time step 0 and time step 5 ;",
    )
    .unwrap_err();
    assert_eq!(err.expected, vec!["'['".to_string()]);
}

#[test]
fn syntax_errors_carry_positions() {
    let err = parse_query("value of 'f' is higher 5 ;").unwrap_err();
    assert_eq!((err.line, err.column), (1, 24));
    assert_eq!(err.expected, vec!["'than'".to_string()]);
    assert_eq!(err.found, "'5'");

    let err = parse_query("'t5b occurs ;").unwrap_err();
    assert_eq!(err.expected, vec!["closing '".to_string()]);

    let err = parse_query("value of 'f' is 3 at time step 1.5 ;").unwrap_err();
    assert_eq!(
        err.expected,
        vec!["a whole number".to_string(), "a name for the step".to_string()]
    );

    let err = parse_query("'a' occurs ; due to interventions: set value of 'f' to 0 ;").unwrap_err();
    assert_eq!(err.expected, vec!["a positive whole number".to_string()]);
}
