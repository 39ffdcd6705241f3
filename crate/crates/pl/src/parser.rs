use biopathqa_model::{CondKind, CondRhs, Condition, FiringStyle, FluentRef};
use thiserror::Error;

use crate::ast::{Delta, DomainType, Effect, ExecuteStatement, PathwaySpec, Statement};
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

    fn next(&mut self) -> Option<&Token> {
        let t = self.toks.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
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

    fn err(&self, expected: &[&str]) -> ParseError {
        let (line, column, found) = match self.peek() {
            Some(t) => (t.line, t.col, t.kind.describe()),
            None => {
                let last = self.toks.last();
                (
                    last.map_or(1, |t| t.line),
                    last.map_or(1, |t| t.col),
                    "end of statement".to_string(),
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

    fn expect_number(&mut self) -> Result<u64, ParseError> {
        match self.peek() {
            Some(Token {
                kind: TokKind::Number(n),
                ..
            }) => {
                let n = *n;
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.err(&["a number"])),
        }
    }

    fn eat_comma(&mut self) -> bool {
        if matches!(
            self.peek(),
            Some(Token {
                kind: TokKind::Comma,
                ..
            })
        ) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.peek().is_none() {
            Ok(())
        } else {
            Err(self.err(&["end of statement"]))
        }
    }
}

fn parse_fluent_ref(cur: &mut Cursor) -> Result<FluentRef, ParseError> {
    let fluent = cur.expect_ident("a fluent name")?;
    if cur.at_word("atloc") {
        cur.pos += 1;
        let location = cur.expect_ident("a location name")?;
        Ok(FluentRef::at(&fluent, &location))
    } else {
        Ok(FluentRef::simple(&fluent))
    }
}

fn parse_cond_rhs(cur: &mut Cursor) -> Result<CondRhs, ParseError> {
    match cur.peek() {
        Some(Token {
            kind: TokKind::Number(_),
            ..
        }) => Ok(CondRhs::Const(cur.expect_number()?)),
        Some(Token {
            kind: TokKind::Ident(_),
            ..
        }) => Ok(CondRhs::Fluent(parse_fluent_ref(cur)?)),
        _ => Err(cur.err(&["a number", "a fluent name"])),
    }
}

fn parse_condition(cur: &mut Cursor) -> Result<Condition, ParseError> {
    let lhs = parse_fluent_ref(cur)?;
    cur.expect_word("has")?;
    cur.expect_word("value")?;
    match cur.word_at(0) {
        Some("lower") => {
            cur.pos += 1;
            cur.expect_word("than")?;
            let rhs = parse_cond_rhs(cur)?;
            Ok(Condition::new(lhs, CondKind::Lt, rhs))
        }
        Some("higher") => {
            cur.pos += 1;
            cur.expect_word("than")?;
            let rhs = parse_cond_rhs(cur)?;
            Ok(Condition::new(lhs, CondKind::Gt, rhs))
        }
        Some("equal") => {
            cur.pos += 1;
            cur.expect_word("to")?;
            let rhs = parse_cond_rhs(cur)?;
            Ok(Condition::new(lhs, CondKind::Eq, rhs))
        }
        _ => {
            let rhs = parse_cond_rhs(cur)?;
            cur.expect_word("or")?;
            cur.expect_word("higher")?;
            Ok(Condition::new(lhs, CondKind::Ge, rhs))
        }
    }
}

/// Parses `item (, item)*`, tolerating one dangling comma before an `if`
/// clause or the end of the statement (the comma that joined a
/// continuation line).
fn comma_separated<T>(
    cur: &mut Cursor,
    mut item: impl FnMut(&mut Cursor) -> Result<T, ParseError>,
) -> Result<Vec<T>, ParseError> {
    let mut items = vec![item(cur)?];
    while cur.eat_comma() {
        if cur.peek().is_none() || cur.at_word("if") {
            break;
        }
        items.push(item(cur)?);
    }
    Ok(items)
}

fn parse_if_conditions(cur: &mut Cursor) -> Result<Vec<Condition>, ParseError> {
    if cur.at_word("if") {
        cur.pos += 1;
        comma_separated(cur, parse_condition)
    } else {
        Ok(Vec::new())
    }
}

fn parse_delta(cur: &mut Cursor) -> Result<Delta, ParseError> {
    let signed = |n: u64, cur: &Cursor| {
        i64::try_from(n).map_err(|_| cur.err(&["a smaller number"]))
    };
    match cur.peek().map(|t| t.kind.clone()) {
        Some(TokKind::Star) => {
            cur.pos += 1;
            Ok(Delta::ResetAll)
        }
        Some(TokKind::Plus) => {
            cur.pos += 1;
            let n = cur.expect_number()?;
            Ok(Delta::Change(signed(n, cur)?))
        }
        Some(TokKind::Minus) => {
            cur.pos += 1;
            let n = cur.expect_number()?;
            Ok(Delta::Change(-signed(n, cur)?))
        }
        Some(TokKind::Number(n)) => {
            cur.pos += 1;
            Ok(Delta::Change(signed(n, cur)?))
        }
        _ => Err(cur.err(&["a signed amount", "'*'"])),
    }
}

fn parse_effect(cur: &mut Cursor) -> Result<Effect, ParseError> {
    let fluent = parse_fluent_ref(cur)?;
    cur.expect_word("change")?;
    cur.expect_word("value")?;
    cur.expect_word("by")?;
    let delta = parse_delta(cur)?;
    Ok(Effect { fluent, delta })
}

fn parse_domain_items(cur: &mut Cursor) -> Result<Vec<(FluentRef, DomainType)>, ParseError> {
    comma_separated(cur, |cur| {
        let fluent = parse_fluent_ref(cur)?;
        cur.expect_word("is")?;
        let ty = match cur.word_at(0) {
            Some("integer") => DomainType::Integer,
            Some("binary") => DomainType::Binary,
            _ => return Err(cur.err(&["'integer'", "'binary'"])),
        };
        cur.pos += 1;
        Ok((fluent, ty))
    })
}

fn parse_initially_items(cur: &mut Cursor) -> Result<Vec<(FluentRef, u64)>, ParseError> {
    comma_separated(cur, |cur| {
        let fluent = parse_fluent_ref(cur)?;
        cur.expect_word("has")?;
        cur.expect_word("value")?;
        let w = cur.expect_number()?;
        Ok((fluent, w))
    })
}

fn parse_firing_style(cur: &mut Cursor) -> Result<FiringStyle, ParseError> {
    match cur.peek().map(|t| t.kind.clone()) {
        Some(TokKind::Number(1)) => {
            cur.pos += 1;
            Ok(FiringStyle::Serial)
        }
        Some(TokKind::Star) => {
            cur.pos += 1;
            Ok(FiringStyle::Any)
        }
        Some(TokKind::Ident(ref s)) if s == "max" => {
            cur.pos += 1;
            Ok(FiringStyle::Max)
        }
        _ => Err(cur.err(&["'1'", "'*'", "'max'"])),
    }
}

enum Parsed {
    Domains(Vec<(FluentRef, DomainType)>),
    Style(FiringStyle),
    Plain(Statement),
}

fn parse_statement(toks: &[Token]) -> Result<Parsed, ParseError> {
    let mut cur = Cursor::new(toks);
    let parsed = match (cur.word_at(0), cur.word_at(1)) {
        (Some("domain"), Some("of")) => {
            cur.pos += 2;
            Parsed::Domains(parse_domain_items(&mut cur)?)
        }
        (Some("inhibit"), _) => {
            cur.pos += 1;
            let action = cur.expect_ident("an action name")?;
            let conditions = parse_if_conditions(&mut cur)?;
            Parsed::Plain(Statement::Inhibit { action, conditions })
        }
        (Some("initially"), _) => {
            cur.pos += 1;
            Parsed::Plain(Statement::Initially(parse_initially_items(&mut cur)?))
        }
        (Some("normally"), Some("stimulate")) => {
            cur.pos += 2;
            let action = cur.expect_ident("an action name")?;
            cur.expect_word("by")?;
            cur.expect_word("factor")?;
            let factor = cur.expect_number()?;
            let conditions = parse_if_conditions(&mut cur)?;
            Parsed::Plain(Statement::Stimulate {
                action,
                factor,
                conditions,
            })
        }
        (Some("firing"), Some("style")) => {
            cur.pos += 2;
            Parsed::Style(parse_firing_style(&mut cur)?)
        }
        (Some("duration"), Some("of")) => {
            cur.pos += 2;
            let action = cur.expect_ident("an action name")?;
            cur.expect_word("is")?;
            let duration = cur.expect_number()?;
            Parsed::Plain(Statement::Duration { action, duration })
        }
        (Some("priority"), Some("of")) => {
            cur.pos += 2;
            let action = cur.expect_ident("an action name")?;
            cur.expect_word("is")?;
            let priority = cur.expect_number()?;
            Parsed::Plain(Statement::Priority { action, priority })
        }
        (Some(_), _) => {
            let action = cur.expect_ident("an action name")?;
            match cur.word_at(0) {
                Some("may") => {
                    cur.pos += 1;
                    if !cur.at_word("execute") && !cur.at_word("fire") {
                        return Err(cur.err(&["'execute'", "'fire'"]));
                    }
                    cur.pos += 1;
                    cur.expect_word("causing")?;
                    let effects = comma_separated(&mut cur, parse_effect)?;
                    let conditions = parse_if_conditions(&mut cur)?;
                    Parsed::Plain(Statement::Execute(ExecuteStatement {
                        action,
                        effects,
                        conditions,
                        must: false,
                    }))
                }
                Some("normally") => {
                    cur.pos += 1;
                    cur.expect_word("must")?;
                    cur.expect_word("execute")?;
                    cur.expect_word("causing")?;
                    let effects = comma_separated(&mut cur, parse_effect)?;
                    let conditions = parse_if_conditions(&mut cur)?;
                    Parsed::Plain(Statement::Execute(ExecuteStatement {
                        action,
                        effects,
                        conditions,
                        must: true,
                    }))
                }
                Some("executes") => {
                    cur.pos += 1;
                    cur.expect_word("in")?;
                    let duration = cur.expect_number()?;
                    cur.expect_word("time")?;
                    cur.expect_word("units")?;
                    Parsed::Plain(Statement::Duration { action, duration })
                }
                _ => return Err(cur.err(&["'may'", "'normally'", "'executes'"])),
            }
        }
        _ => return Err(cur.err(&["a statement"])),
    };
    cur.finish()?;
    Ok(parsed)
}

/// Parses pathway text into a [`PathwaySpec`].
pub fn parse_pathway(text: &str) -> Result<PathwaySpec, ParseError> {
    let mut spec = PathwaySpec::new();
    for toks in lex(text)? {
        match parse_statement(&toks)? {
            Parsed::Domains(items) => spec.domains.extend(items),
            Parsed::Style(style) => spec.firing_styles.push(style),
            Parsed::Plain(st) => spec.statements.push(st),
        }
    }
    Ok(spec)
}
