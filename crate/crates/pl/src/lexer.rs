use crate::parser::ParseError;

/// One lexical token with its source position (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Token {
    pub kind: TokKind,
    pub line: usize,
    pub col: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum TokKind {
    Ident(String),
    Number(u64),
    Comma,
    Star,
    Plus,
    Minus,
}

impl TokKind {
    /// How the token reads in an error message.
    pub fn describe(&self) -> String {
        match self {
            TokKind::Ident(s) => format!("'{}'", s),
            TokKind::Number(n) => format!("'{}'", n),
            TokKind::Comma => "','".to_string(),
            TokKind::Star => "'*'".to_string(),
            TokKind::Plus => "'+'".to_string(),
            TokKind::Minus => "'-'".to_string(),
        }
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_part(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Splits pathway text into logical statements: one token list per
/// statement, where a line ending in a comma continues on the next line.
/// Comments run from '%' to end of line. Identifiers may be wrapped in
/// single or double quotes, which are stripped.
pub(crate) fn lex(text: &str) -> Result<Vec<Vec<Token>>, ParseError> {
    let mut statements: Vec<Vec<Token>> = Vec::new();
    let mut current: Vec<Token> = Vec::new();

    for (line_idx, raw_line) in text.lines().enumerate() {
        let line_no = line_idx + 1;
        let mut chars = raw_line.char_indices().peekable();

        while let Some((byte_pos, c)) = chars.next() {
            let col = byte_pos + 1;
            match c {
                '%' => break,
                c if c.is_whitespace() => {}
                ',' => current.push(Token {
                    kind: TokKind::Comma,
                    line: line_no,
                    col,
                }),
                '*' => current.push(Token {
                    kind: TokKind::Star,
                    line: line_no,
                    col,
                }),
                '+' => current.push(Token {
                    kind: TokKind::Plus,
                    line: line_no,
                    col,
                }),
                '-' => current.push(Token {
                    kind: TokKind::Minus,
                    line: line_no,
                    col,
                }),
                '\'' | '"' => {
                    let quote = c;
                    let mut name = String::new();
                    let mut closed = false;
                    for (_, qc) in chars.by_ref() {
                        if qc == quote {
                            closed = true;
                            break;
                        }
                        name.push(qc);
                    }
                    if !closed {
                        return Err(ParseError {
                            line: line_no,
                            column: col,
                            found: "end of line".to_string(),
                            expected: vec![format!("closing {}", quote)],
                        });
                    }
                    current.push(Token {
                        kind: TokKind::Ident(name),
                        line: line_no,
                        col,
                    });
                }
                c if c.is_ascii_digit() => {
                    let mut digits = String::from(c);
                    while let Some(&(_, d)) = chars.peek() {
                        if d.is_ascii_digit() {
                            digits.push(d);
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    let value = digits.parse::<u64>().map_err(|_| ParseError {
                        line: line_no,
                        column: col,
                        found: format!("'{}'", digits),
                        expected: vec!["a smaller number".to_string()],
                    })?;
                    current.push(Token {
                        kind: TokKind::Number(value),
                        line: line_no,
                        col,
                    });
                }
                c if is_ident_start(c) => {
                    let mut name = String::from(c);
                    while let Some(&(_, d)) = chars.peek() {
                        if is_ident_part(d) {
                            name.push(d);
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    current.push(Token {
                        kind: TokKind::Ident(name),
                        line: line_no,
                        col,
                    });
                }
                other => {
                    return Err(ParseError {
                        line: line_no,
                        column: col,
                        found: format!("'{}'", other),
                        expected: vec![
                            "an identifier".to_string(),
                            "a number".to_string(),
                            "punctuation".to_string(),
                        ],
                    });
                }
            }
        }

        let continues = matches!(
            current.last(),
            Some(Token {
                kind: TokKind::Comma,
                ..
            })
        );
        if !continues && !current.is_empty() {
            statements.push(std::mem::take(&mut current));
        }
    }
    if !current.is_empty() {
        statements.push(current);
    }
    Ok(statements)
}
