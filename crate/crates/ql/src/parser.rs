use biopathqa_model::FluentRef;
use thiserror::Error;

use crate::ast::{
    AggOp, CascadeLink, Direction, DirectionOrHole, Intervention, Interval, IntervalFormula,
    IntervalQuantity, Number, NumberOrHole, Observation, Point, PointFormula, QueryDescription,
    QueryStatement,
};
use crate::lexer::{lex, TokKind, Token};

/// A syntax error with its source position and the tokens that would have
/// been accepted there.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error(
    "syntax error at line {line}, column {column}: expected {}, found {found}",
    .expected.join(" or ")
)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub found: String,
    pub expected: Vec<String>,
}

struct Cursor<'a> {
    toks: &'a [Token],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(toks: &'a [Token]) -> Self {
        Self { toks, pos: 0 }
    }

    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn advance(&mut self, n: usize) {
        self.pos += n;
    }

    /// The word at offset `n` from the cursor, when it is an identifier.
    fn word_at(&self, n: usize) -> Option<&str> {
        match self.toks.get(self.pos + n) {
            Some(Token {
                kind: TokKind::Ident(s),
                ..
            }) => Some(s.as_str()),
            _ => None,
        }
    }

    fn at_word(&self, w: &str) -> bool {
        self.word_at(0) == Some(w)
    }

    fn at_words(&self, ws: &[&str]) -> bool {
        ws.iter().enumerate().all(|(i, w)| self.word_at(i) == Some(*w))
    }

    fn err(&self, expected: &[&str]) -> ParseError {
        let (line, column, found) = match self.peek() {
            Some(t) => (t.line, t.col, t.kind.describe()),
            None => {
                let last = self.toks.last();
                (
                    last.map_or(1, |t| t.line),
                    last.map_or(1, |t| t.col),
                    "end of query".to_string(),
                )
            }
        };
        ParseError {
            line,
            column,
            found,
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn expect_word(&mut self, w: &str) -> Result<(), ParseError> {
        if self.at_word(w) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&[&format!("'{}'", w)]))
        }
    }

    fn expect_words(&mut self, ws: &[&str]) -> Result<(), ParseError> {
        for w in ws {
            self.expect_word(w)?;
        }
        Ok(())
    }

    fn expect_ident(&mut self, what: &str) -> Result<String, ParseError> {
        match self.peek() {
            Some(Token {
                kind: TokKind::Ident(s),
                ..
            }) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.err(&[what])),
        }
    }

    fn eat_punct(&mut self, kind: TokKind) -> bool {
        if self.peek().map(|t| t.kind == kind) == Some(true) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_comma(&mut self) -> bool {
        self.eat_punct(TokKind::Comma)
    }

    fn expect_colon(&mut self) -> Result<(), ParseError> {
        if self.eat_punct(TokKind::Colon) {
            Ok(())
        } else {
            Err(self.err(&["':'"]))
        }
    }

    /// Consumes a clause-terminating ';'. The thesis's examples sometimes
    /// omit it when the next clause header follows directly, so a header
    /// (or end of input) is accepted as a boundary too.
    fn end_of_clause(&mut self) -> Result<(), ParseError> {
        if self.eat_punct(TokKind::Semicolon) || self.peek().is_none() {
            return Ok(());
        }
        if self.at_word("due")
            || self.at_word("using")
            || self.at_word("comparing")
            || self.at_words(&["in", "all", "trajectories"])
        {
            return Ok(());
        }
        Err(self.err(&["';'"]))
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.peek().is_none() {
            Ok(())
        } else {
            Err(self.err(&["end of query"]))
        }
    }
}

/// Parses one query statement.
pub fn parse_query(text: &str) -> Result<QueryStatement, ParseError> {
    let toks = lex(text)?;
    let mut c = Cursor::new(&toks);

    let mut description = parse_description(&mut c)?;
    c.end_of_clause()?;

    if description.is_comparative() {
        c.expect_words(&[
            "comparing", "nominal", "pathway", "with", "modified", "pathway", "obtained",
        ])?;
        c.eat_punct(TokKind::Semicolon);
    } else if c.at_word("comparing") {
        return Err(c.err(&["a 'direction of change' description before 'comparing'"]));
    }

    let mut interventions = Vec::new();
    if c.at_words(&["due", "to", "interventions"]) {
        c.advance(3);
        c.expect_colon()?;
        interventions = parse_list(&mut c, parse_intervention)?;
        c.end_of_clause()?;
    } else if c.at_words(&["due", "to", "intervention"]) {
        c.advance(3);
        let action = c.expect_ident("an action name")?;
        c.expect_word("disabled")?;
        interventions.push(Intervention::Disable { action });
        c.end_of_clause()?;
    }

    let mut observations = Vec::new();
    if c.at_words(&["due", "to", "observations"]) {
        c.advance(3);
        c.expect_colon()?;
        observations = parse_list(&mut c, parse_observation)?;
        c.end_of_clause()?;
    }

    let mut initial_setup = Vec::new();
    if c.at_words(&["using", "initial", "setup"]) {
        c.advance(3);
        c.expect_colon()?;
        initial_setup = parse_list(&mut c, parse_setup_item)?;
        c.end_of_clause()?;
    }

    if c.at_words(&["in", "all", "trajectories"]) {
        match &mut description {
            QueryDescription::Observed {
                all_trajectories, ..
            }
            | QueryDescription::Cascade {
                all_trajectories, ..
            } => {
                c.advance(3);
                *all_trajectories = true;
                c.eat_punct(TokKind::Semicolon);
            }
            _ => return Err(c.err(&["end of query"])),
        }
    }

    c.finish()?;
    Ok(QueryStatement {
        description,
        interventions,
        observations,
        initial_setup,
    })
}

fn parse_list<T>(
    c: &mut Cursor,
    item: fn(&mut Cursor) -> Result<T, ParseError>,
) -> Result<Vec<T>, ParseError> {
    let mut out = vec![item(c)?];
    while c.eat_comma() {
        out.push(item(c)?);
    }
    Ok(out)
}

fn parse_fluent_ref(c: &mut Cursor, what: &str) -> Result<FluentRef, ParseError> {
    let name = c.expect_ident(what)?;
    if c.at_word("atloc") {
        c.advance(1);
        let location = c.expect_ident("a location name")?;
        Ok(FluentRef::at(&name, &location))
    } else {
        Ok(FluentRef::simple(&name))
    }
}

fn parse_number(c: &mut Cursor) -> Result<Number, ParseError> {
    let negative = c.eat_punct(TokKind::Minus);
    match c.peek() {
        Some(Token {
            kind: TokKind::Number { mantissa, scale },
            ..
        }) => {
            let mantissa = i64::try_from(*mantissa).map_err(|_| c.err(&["a smaller number"]))?;
            let scale = *scale;
            c.advance(1);
            Ok(Number::new(if negative { -mantissa } else { mantissa }, scale))
        }
        _ => Err(c.err(&["a number"])),
    }
}

fn parse_number_or_hole(c: &mut Cursor, what: &str) -> Result<NumberOrHole, ParseError> {
    match c.peek() {
        Some(Token {
            kind: TokKind::Number { .. } | TokKind::Minus,
            ..
        }) => Ok(NumberOrHole::Number(parse_number(c)?)),
        Some(Token {
            kind: TokKind::Ident(name),
            ..
        }) => {
            let name = name.clone();
            c.advance(1);
            Ok(NumberOrHole::Hole(name))
        }
        _ => Err(c.err(&[what])),
    }
}

/// A quantity slot: a positive whole number, or a hole to solve later.
fn parse_quantity(c: &mut Cursor) -> Result<NumberOrHole, ParseError> {
    match c.peek() {
        Some(Token {
            kind: TokKind::Number { .. },
            ..
        }) => {
            let n = parse_number(c)?;
            if n.as_quantity().is_none_or(|q| q == 0) {
                return Err(c.err(&["a positive whole number"]));
            }
            Ok(NumberOrHole::Number(n))
        }
        Some(Token {
            kind: TokKind::Ident(name),
            ..
        }) => {
            let name = name.clone();
            c.advance(1);
            Ok(NumberOrHole::Hole(name))
        }
        _ => Err(c.err(&["a positive whole number"])),
    }
}

fn parse_direction(c: &mut Cursor) -> Result<DirectionOrHole, ParseError> {
    match c.peek() {
        Some(Token { kind: TokKind::Lt, .. }) => {
            c.advance(1);
            Ok(DirectionOrHole::Direction(Direction::Less))
        }
        Some(Token { kind: TokKind::Gt, .. }) => {
            c.advance(1);
            Ok(DirectionOrHole::Direction(Direction::Greater))
        }
        Some(Token { kind: TokKind::Eq, .. }) => {
            c.advance(1);
            Ok(DirectionOrHole::Direction(Direction::Equal))
        }
        Some(Token {
            kind: TokKind::Ident(name),
            ..
        }) => {
            let name = name.clone();
            c.advance(1);
            Ok(DirectionOrHole::Hole(name))
        }
        _ => Err(c.err(&["a direction"])),
    }
}

fn parse_point(c: &mut Cursor) -> Result<Point, ParseError> {
    c.expect_words(&["time", "step"])?;
    match c.peek() {
        Some(Token {
            kind: TokKind::Number { mantissa, scale: 0 },
            ..
        }) => {
            let step = *mantissa;
            c.advance(1);
            Ok(Point::Step(step))
        }
        Some(Token {
            kind: TokKind::Ident(name),
            ..
        }) => {
            let name = name.clone();
            c.advance(1);
            Ok(Point::Hole(name))
        }
        _ => Err(c.err(&["a whole number", "a name for the step"])),
    }
}

fn parse_interval(c: &mut Cursor) -> Result<Interval, ParseError> {
    let from = parse_point(c)?;
    c.expect_word("and")?;
    let to = parse_point(c)?;
    Ok(Interval { from, to })
}

fn parse_between_anchor(c: &mut Cursor) -> Result<Interval, ParseError> {
    c.expect_words(&["when", "observed", "between"])?;
    parse_interval(c)
}

fn parse_at_anchor(c: &mut Cursor) -> Result<Point, ParseError> {
    c.expect_words(&["when", "observed", "at"])?;
    parse_point(c)
}

fn at_between_anchor(c: &Cursor) -> bool {
    c.at_words(&["when", "observed", "between"])
}

fn parse_aggop(c: &mut Cursor) -> Result<AggOp, ParseError> {
    let op = match c.word_at(0) {
        Some("minimum") => AggOp::Minimum,
        Some("maximum") => AggOp::Maximum,
        Some("average") => AggOp::Average,
        _ => return Err(c.err(&["'minimum'", "'maximum'", "'average'"])),
    };
    c.advance(1);
    Ok(op)
}

/// Parses the tail of `rate ...`, with the cursor just past the word
/// "rate" (or "rates").
fn parse_rate_quantity(c: &mut Cursor) -> Result<IntervalQuantity, ParseError> {
    c.expect_word("of")?;
    if c.at_word("production") {
        c.advance(1);
        c.expect_word("of")?;
        Ok(IntervalQuantity::ProductionRate(parse_fluent_ref(
            c,
            "a fluent name",
        )?))
    } else if c.at_word("firing") {
        c.advance(1);
        c.expect_word("of")?;
        Ok(IntervalQuantity::FiringRate(
            c.expect_ident("an action name")?,
        ))
    } else {
        Err(c.err(&["'production'", "'firing'"]))
    }
}

/// Parses the tail of `total production of ...`, with the cursor just past
/// "total" (or `totals of production of ...`, just past "totals of").
fn parse_total_quantity(c: &mut Cursor) -> Result<IntervalQuantity, ParseError> {
    c.expect_words(&["production", "of"])?;
    Ok(IntervalQuantity::TotalProduction(parse_fluent_ref(
        c,
        "a fluent name",
    )?))
}

fn parse_bracket_list(c: &mut Cursor) -> Result<Vec<Number>, ParseError> {
    if !c.eat_punct(TokKind::LBracket) {
        return Err(c.err(&["'['"]));
    }
    let mut out = vec![parse_number(c)?];
    while c.eat_comma() {
        out.push(parse_number(c)?);
    }
    if !c.eat_punct(TokKind::RBracket) {
        return Err(c.err(&["']'"]));
    }
    Ok(out)
}

enum AggSlot {
    Value,
    Direction,
}

/// Parses the formula after an aggregate operator, for both the plain
/// aggregate forms (`is n`) and the comparative forms (`is d`).
fn parse_agg_body(c: &mut Cursor, op: AggOp, slot: AggSlot) -> Result<QueryDescription, ParseError> {
    if c.at_word("rate") || c.at_word("total") {
        let quantity = if c.at_word("rate") {
            c.advance(1);
            parse_rate_quantity(c)?
        } else {
            c.advance(1);
            parse_total_quantity(c)?
        };
        c.expect_word("is")?;
        match slot {
            AggSlot::Value => {
                let value = parse_number_or_hole(c, "a number")?;
                let between = parse_between_anchor(c)?;
                Ok(QueryDescription::AggregateInterval {
                    op,
                    quantity,
                    value,
                    between,
                })
            }
            AggSlot::Direction => {
                let direction = parse_direction(c)?;
                let between = parse_between_anchor(c)?;
                Ok(QueryDescription::ComparativeInterval {
                    op,
                    quantity,
                    direction,
                    between,
                })
            }
        }
    } else if c.at_word("value") {
        c.advance(1);
        c.expect_word("of")?;
        let fluent = parse_fluent_ref(c, "a fluent name")?;
        c.expect_word("is")?;
        match slot {
            AggSlot::Value => {
                let value = parse_number_or_hole(c, "a number")?;
                let at = parse_at_anchor(c)?;
                Ok(QueryDescription::AggregatePoint {
                    op,
                    fluent,
                    value,
                    at,
                })
            }
            AggSlot::Direction => {
                let direction = parse_direction(c)?;
                let at = parse_at_anchor(c)?;
                Ok(QueryDescription::ComparativePoint {
                    op,
                    fluent,
                    direction,
                    at,
                })
            }
        }
    } else {
        Err(c.err(&["'rate'", "'total'", "'value'"]))
    }
}

fn parse_point_formula(c: &mut Cursor) -> Result<PointFormula, ParseError> {
    if c.at_word("value") {
        c.advance(1);
        c.expect_word("of")?;
        let fluent = parse_fluent_ref(c, "a fluent name")?;
        c.expect_word("is")?;
        if c.at_word("higher") {
            c.advance(1);
            c.expect_word("than")?;
            let value = parse_number_or_hole(c, "a number")?;
            Ok(PointFormula::ValueHigher { fluent, value })
        } else if c.at_word("lower") {
            c.advance(1);
            c.expect_word("than")?;
            let value = parse_number_or_hole(c, "a number")?;
            Ok(PointFormula::ValueLower { fluent, value })
        } else {
            let value = parse_number_or_hole(c, "a number")?;
            Ok(PointFormula::ValueIs { fluent, value })
        }
    } else {
        let first = c.expect_ident("a formula")?;
        if c.at_word("occurs") {
            c.advance(1);
            Ok(PointFormula::Occurs { action: first })
        } else if c.at_word("does") {
            c.advance(1);
            c.expect_words(&["not", "occur"])?;
            Ok(PointFormula::DoesNotOccur { action: first })
        } else if c.at_word("switches") {
            c.advance(1);
            c.expect_word("to")?;
            let to = c.expect_ident("an action name")?;
            Ok(PointFormula::SwitchesTo { from: first, to })
        } else {
            Err(c.err(&["'occurs'", "'does not occur'", "'switches to'"]))
        }
    }
}

/// Parses an interval-formula observation when the cursor is at one,
/// leaving the cursor untouched otherwise.
fn try_parse_interval_observation(c: &mut Cursor) -> Result<Option<Observation>, ParseError> {
    if c.at_word("rate") || c.at_word("total") {
        let quantity = if c.at_word("rate") {
            c.advance(1);
            parse_rate_quantity(c)?
        } else {
            c.advance(1);
            parse_total_quantity(c)?
        };
        c.expect_word("is")?;
        let value = parse_number_or_hole(c, "a number")?;
        let between = if at_between_anchor(c) {
            Some(parse_between_anchor(c)?)
        } else {
            None
        };
        return Ok(Some(Observation::Interval {
            formula: IntervalFormula::Quantity { quantity, value },
            between,
        }));
    }
    if c.word_at(1) == Some("is")
        && matches!(c.word_at(2), Some("accumulating") | Some("decreasing"))
    {
        let name = c.expect_ident("a fluent name")?;
        c.advance(1);
        let accumulating = c.at_word("accumulating");
        c.advance(1);
        let fluent = if c.at_word("atloc") {
            c.advance(1);
            FluentRef::at(&name, &c.expect_ident("a location name")?)
        } else {
            FluentRef::simple(&name)
        };
        let formula = if accumulating {
            IntervalFormula::Accumulating { fluent }
        } else {
            IntervalFormula::Decreasing { fluent }
        };
        let between = if at_between_anchor(c) {
            Some(parse_between_anchor(c)?)
        } else {
            None
        };
        return Ok(Some(Observation::Interval { formula, between }));
    }
    Ok(None)
}

fn parse_observation(c: &mut Cursor) -> Result<Observation, ParseError> {
    if let Some(obs) = try_parse_interval_observation(c)? {
        return Ok(obs);
    }
    let formula = parse_point_formula(c)?;
    let at = if c.at_word("at") {
        c.advance(1);
        Some(parse_point(c)?)
    } else {
        None
    };
    Ok(Observation::Point { formula, at })
}

fn eat_in_all_trajectories(c: &mut Cursor) -> bool {
    if c.at_words(&["in", "all", "trajectories"]) {
        c.advance(3);
        true
    } else {
        false
    }
}

/// Parses the `when` tail of a cascade: either a named unknown condition
/// or a comma-separated list of point formulas holding at the same step.
fn parse_when_link(c: &mut Cursor) -> Result<CascadeLink, ParseError> {
    if let Some(w) = c.word_at(0) {
        let starts_formula = w == "value"
            || matches!(c.word_at(1), Some("occurs") | Some("does") | Some("switches"));
        if !starts_formula {
            let name = w.to_string();
            c.advance(1);
            return Ok(CascadeLink::WhenCondition(name));
        }
    }
    Ok(CascadeLink::When(parse_list(c, parse_point_formula)?))
}

fn parse_simple_description(c: &mut Cursor) -> Result<QueryDescription, ParseError> {
    if let Some(observation) = try_parse_interval_observation(c)? {
        let all_trajectories = eat_in_all_trajectories(c);
        return Ok(QueryDescription::Observed {
            observation,
            all_trajectories,
        });
    }

    let head = parse_point_formula(c)?;

    let mut links = Vec::new();
    loop {
        if c.at_word("after") {
            c.advance(1);
            links.push(CascadeLink::After(parse_list(c, parse_point_formula)?));
        } else if c.at_word("when") && !c.at_words(&["when", "observed"]) {
            c.advance(1);
            links.push(parse_when_link(c)?);
        } else {
            break;
        }
    }
    if !links.is_empty() {
        let all_trajectories = eat_in_all_trajectories(c);
        return Ok(QueryDescription::Cascade {
            head,
            links,
            all_trajectories,
        });
    }

    let at = if c.at_word("at") {
        c.advance(1);
        Some(parse_point(c)?)
    } else {
        None
    };
    let all_trajectories = eat_in_all_trajectories(c);
    Ok(QueryDescription::Observed {
        observation: Observation::Point { formula: head, at },
        all_trajectories,
    })
}

fn parse_description(c: &mut Cursor) -> Result<QueryDescription, ParseError> {
    match c.word_at(0) {
        Some("direction") => {
            c.advance(1);
            c.expect_words(&["of", "change", "in"])?;
            let op = parse_aggop(c)?;
            parse_agg_body(c, op, AggSlot::Direction)
        }
        Some("minimum") | Some("maximum") | Some("average") => {
            let op = parse_aggop(c)?;
            parse_agg_body(c, op, AggSlot::Value)
        }
        Some("rates") => {
            c.advance(1);
            let quantity = parse_rate_quantity(c)?;
            c.expect_word("are")?;
            let values = parse_bracket_list(c)?;
            let between = parse_between_anchor(c)?;
            Ok(QueryDescription::AllInterval {
                quantity,
                values,
                between,
            })
        }
        Some("totals") => {
            c.advance(1);
            c.expect_word("of")?;
            let quantity = parse_total_quantity(c)?;
            c.expect_word("are")?;
            let values = parse_bracket_list(c)?;
            let between = parse_between_anchor(c)?;
            Ok(QueryDescription::AllInterval {
                quantity,
                values,
                between,
            })
        }
        Some("values") => {
            c.advance(1);
            c.expect_word("of")?;
            let fluent = parse_fluent_ref(c, "a fluent name")?;
            c.expect_word("are")?;
            let values = parse_bracket_list(c)?;
            let at = parse_at_anchor(c)?;
            Ok(QueryDescription::AllPoint { fluent, values, at })
        }
        _ => parse_simple_description(c),
    }
}

fn parse_intervention(c: &mut Cursor) -> Result<Intervention, ParseError> {
    match c.word_at(0) {
        Some("remove") => {
            c.advance(1);
            let fluent = parse_fluent_ref(c, "a fluent name")?;
            c.expect_words(&["as", "soon", "as", "produced"])?;
            Ok(Intervention::RemoveAsProduced { fluent })
        }
        Some("disable") => {
            c.advance(1);
            let action = c.expect_ident("an action name")?;
            Ok(Intervention::Disable { action })
        }
        Some("continuously") => {
            c.advance(1);
            if c.at_word("transform") {
                c.advance(1);
                let from = parse_fluent_ref(c, "a fluent name")?;
                c.expect_words(&["in", "quantity"])?;
                let quantity = parse_quantity(c)?;
                c.expect_word("to")?;
                let to = parse_fluent_ref(c, "a fluent name")?;
                Ok(Intervention::ContinuouslyTransform { from, quantity, to })
            } else if c.at_word("supply") || c.at_word("produce") {
                c.advance(1);
                let fluent = parse_fluent_ref(c, "a fluent name")?;
                c.expect_words(&["in", "quantity"])?;
                let quantity = parse_quantity(c)?;
                Ok(Intervention::ContinuouslySupply { fluent, quantity })
            } else if c.at_word("transfer") {
                c.advance(1);
                let fluent = c.expect_ident("a fluent name")?;
                c.expect_words(&["in", "quantity"])?;
                let quantity = parse_quantity(c)?;
                c.expect_word("across")?;
                let from_location = c.expect_ident("a location name")?;
                if !c.eat_comma() {
                    return Err(c.err(&["','"]));
                }
                let to_location = c.expect_ident("a location name")?;
                c.expect_words(&["to", "lower", "gradient"])?;
                Ok(Intervention::TransferAcross {
                    fluent,
                    quantity,
                    from_location,
                    to_location,
                })
            } else {
                Err(c.err(&["'transform'", "'supply'", "'transfer'"]))
            }
        }
        Some("make") => {
            c.advance(1);
            let fluent = parse_fluent_ref(c, "a fluent name")?;
            c.expect_word("inhibit")?;
            let action = c.expect_ident("an action name")?;
            Ok(Intervention::MakeInhibit { fluent, action })
        }
        Some("add") => {
            c.advance(1);
            c.expect_words(&["delay", "of"])?;
            let quantity = parse_quantity(c)?;
            c.expect_words(&["time", "units", "in", "availability", "of"])?;
            let fluent = parse_fluent_ref(c, "a fluent name")?;
            Ok(Intervention::AddDelay { quantity, fluent })
        }
        Some("set") => {
            c.advance(1);
            c.expect_words(&["value", "of"])?;
            let fluent = parse_fluent_ref(c, "a fluent name")?;
            c.expect_word("to")?;
            let value = parse_quantity(c)?;
            Ok(Intervention::SetValue { fluent, value })
        }
        _ => Err(c.err(&[
            "'remove'",
            "'disable'",
            "'continuously'",
            "'make'",
            "'add'",
            "'set'",
        ])),
    }
}

/// Initial-setup items are restricted to the supply and set-value forms.
fn parse_setup_item(c: &mut Cursor) -> Result<Intervention, ParseError> {
    if c.at_words(&["continuously", "supply"])
        || c.at_words(&["continuously", "produce"])
        || c.at_words(&["set", "value"])
    {
        parse_intervention(c)
    } else {
        Err(c.err(&["'continuously supply'", "'set value of'"]))
    }
}
