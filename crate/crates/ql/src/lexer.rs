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
    Number { mantissa: u64, scale: u32 },
    Comma,
    Semicolon,
    Colon,
    LBracket,
    RBracket,
    Minus,
    Lt,
    Gt,
    Eq,
}

impl TokKind {
    /// How the token reads in an error message.
    pub fn describe(&self) -> String {
        match self {
            TokKind::Ident(s) => format!("'{}'", s),
            TokKind::Number { mantissa, scale } => {
                format!("'{}'", crate::ast::Number::new(*mantissa as i64, *scale))
            }
            TokKind::Comma => "','".to_string(),
            TokKind::Semicolon => "';'".to_string(),
            TokKind::Colon => "':'".to_string(),
            TokKind::LBracket => "'['".to_string(),
            TokKind::RBracket => "']'".to_string(),
            TokKind::Minus => "'-'".to_string(),
            TokKind::Lt => "'<'".to_string(),
            TokKind::Gt => "'>'".to_string(),
            TokKind::Eq => "'='".to_string(),
        }
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_part(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Splits query text into a flat token stream. Unlike pathway statements,
/// a query statement spans lines freely; the clause punctuation carries
/// the structure. Comments run from '%' to end of line. Identifiers and
/// direction symbols may be wrapped in single or double quotes, which are
/// stripped.
pub(crate) fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut tokens: Vec<Token> = Vec::new();

    for (line_idx, raw_line) in text.lines().enumerate() {
        let line_no = line_idx + 1;
        let mut chars = raw_line.char_indices().peekable();

        while let Some((byte_pos, c)) = chars.next() {
            let col = byte_pos + 1;
            let mut push = |kind: TokKind| {
                tokens.push(Token {
                    kind,
                    line: line_no,
                    col,
                })
            };
            match c {
                '%' => break,
                c if c.is_whitespace() => {}
                ',' => push(TokKind::Comma),
                ';' => push(TokKind::Semicolon),
                ':' => push(TokKind::Colon),
                '[' => push(TokKind::LBracket),
                ']' => push(TokKind::RBracket),
                '-' => push(TokKind::Minus),
                '<' => push(TokKind::Lt),
                '>' => push(TokKind::Gt),
                '=' => push(TokKind::Eq),
                '\'' | '"' => {
                    let quote = c;
                    let mut content = String::new();
                    let mut closed = false;
                    for (_, qc) in chars.by_ref() {
                        if qc == quote {
                            closed = true;
                            break;
                        }
                        content.push(qc);
                    }
                    if !closed {
                        return Err(ParseError {
                            line: line_no,
                            column: col,
                            found: "end of line".to_string(),
                            expected: vec![format!("closing {}", quote)],
                        });
                    }
                    let kind = match content.as_str() {
                        "<" => TokKind::Lt,
                        ">" => TokKind::Gt,
                        "=" => TokKind::Eq,
                        _ if !content.is_empty()
                            && content.starts_with(is_ident_start)
                            && content.chars().all(is_ident_part) =>
                        {
                            TokKind::Ident(content)
                        }
                        _ => {
                            return Err(ParseError {
                                line: line_no,
                                column: col,
                                found: format!("'{}'", content),
                                expected: vec!["a quoted identifier or direction".to_string()],
                            });
                        }
                    };
                    push(kind);
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
                    let mut scale: u32 = 0;
                    if let Some(&(dot_pos, '.')) = chars.peek() {
                        let mut lookahead = raw_line[dot_pos + 1..].chars();
                        if lookahead.next().is_some_and(|d| d.is_ascii_digit()) {
                            chars.next();
                            while let Some(&(_, d)) = chars.peek() {
                                if d.is_ascii_digit() {
                                    digits.push(d);
                                    scale += 1;
                                    chars.next();
                                } else {
                                    break;
                                }
                            }
                        }
                    }
                    let mantissa = digits.parse::<u64>().map_err(|_| ParseError {
                        line: line_no,
                        column: col,
                        found: format!("'{}'", digits),
                        expected: vec!["a smaller number".to_string()],
                    })?;
                    push(TokKind::Number { mantissa, scale });
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
                    push(TokKind::Ident(name));
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
    }
    Ok(tokens)
}
