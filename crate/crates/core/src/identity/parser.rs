//! Recursive-descent parser for two-operation identities.
//!
//! ```text
//! equation := side '=' side
//! side     := primary [ op primary ]
//! primary  := var | '(' primary op primary ')'
//! op       := 'o' | '∘' | '*'
//! var      := 'x' | 'y' | 'z' | 'u' | 'w'
//! ```
//!
//! Every application is parenthesized except an application standing alone
//! on one side of `=`. There is no precedence between the operators.

use std::fmt;

use thiserror::Error;

use super::ast::{Equation, Op, Term, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    /// 0-based character offset into the input.
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    EmptyInput,
    UnknownToken(char),
    UnbalancedParentheses,
    MissingEquals,
    ExtraEquals,
    UnparenthesizedApplication,
    RedundantParentheses,
    Expected { expected: &'static str, found: String },
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::EmptyInput => write!(f, "empty identity"),
            ParseErrorKind::UnknownToken(c) => write!(f, "unknown token `{c}`"),
            ParseErrorKind::UnbalancedParentheses => write!(f, "unbalanced parentheses"),
            ParseErrorKind::MissingEquals => write!(f, "missing `=`"),
            ParseErrorKind::ExtraEquals => write!(f, "more than one `=`"),
            ParseErrorKind::UnparenthesizedApplication => write!(f, "unparenthesized application"),
            ParseErrorKind::RedundantParentheses => write!(f, "parentheses must enclose exactly one application"),
            ParseErrorKind::Expected { expected, found } => write!(f, "expected {expected}, found {found}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    Var(Var),
    Op(Op),
    LParen,
    RParen,
    Equals,
}

impl Tok {
    fn describe(self) -> String {
        match self {
            Tok::Var(v) => format!("variable `{v}`"),
            Tok::Op(op) => format!("operator `{}`", op.symbol()),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Equals => "`=`".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut toks = Vec::new();
    for (pos, c) in text.chars().enumerate() {
        let tok = match c {
            c if c.is_whitespace() => continue,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '=' => Tok::Equals,
            'o' | '∘' => Tok::Op(Op::Circ),
            '*' => Tok::Op(Op::Star),
            c => match Var::from_char(c) {
                Some(v) => Tok::Var(v),
                None => {
                    return Err(ParseError {
                        position: pos,
                        kind: ParseErrorKind::UnknownToken(c),
                    })
                }
            },
        };
        toks.push((pos, tok));
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    next: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<(usize, Tok)> {
        self.toks.get(self.next).copied()
    }

    fn bump(&mut self) -> Option<(usize, Tok)> {
        let t = self.peek();
        self.next += 1;
        t
    }

    fn here(&self) -> usize {
        self.peek().map_or(self.end, |(p, _)| p)
    }

    fn fail<T>(&self, position: usize, kind: ParseErrorKind) -> Result<T, ParseError> {
        Err(ParseError { position, kind })
    }

    fn expected<T>(&self, expected: &'static str) -> Result<T, ParseError> {
        let found = self.peek().map_or("end of input".to_string(), |(_, t)| t.describe());
        self.fail(self.here(), ParseErrorKind::Expected { expected, found })
    }

    fn side(&mut self) -> Result<Term, ParseError> {
        let left = self.primary()?;
        let Some((_, Tok::Op(op))) = self.peek() else {
            return Ok(left);
        };
        self.bump();
        let right = self.primary()?;
        if let Some((pos, Tok::Op(_))) = self.peek() {
            return self.fail(pos, ParseErrorKind::UnparenthesizedApplication);
        }
        Ok(Term::Apply(op, Box::new(left), Box::new(right)))
    }

    fn primary(&mut self) -> Result<Term, ParseError> {
        match self.peek() {
            Some((_, Tok::Var(v))) => {
                self.bump();
                Ok(Term::Var(v))
            }
            Some((open, Tok::LParen)) => {
                self.bump();
                let left = self.primary()?;
                let op = match self.peek() {
                    Some((_, Tok::Op(op))) => op,
                    Some((_, Tok::RParen)) => return self.fail(open, ParseErrorKind::RedundantParentheses),
                    _ => return self.expected("operator"),
                };
                self.bump();
                let right = self.primary()?;
                match self.peek() {
                    Some((_, Tok::RParen)) => {
                        self.bump();
                        Ok(Term::Apply(op, Box::new(left), Box::new(right)))
                    }
                    Some((pos, Tok::Op(_))) => self.fail(pos, ParseErrorKind::UnparenthesizedApplication),
                    _ => self.expected("`)`"),
                }
            }
            _ => self.expected("variable or `(`"),
        }
    }
}

/// Parses an identity such as `(x o z) * (y o z) = x * y`.
pub fn parse_identity(text: &str) -> Result<Equation, ParseError> {
    let toks = lex(text)?;
    let end = text.chars().count();
    if toks.is_empty() {
        return Err(ParseError {
            position: 0,
            kind: ParseErrorKind::EmptyInput,
        });
    }

    let mut open = Vec::new();
    for &(pos, tok) in &toks {
        match tok {
            Tok::LParen => open.push(pos),
            Tok::RParen if open.pop().is_none() => {
                return Err(ParseError {
                    position: pos,
                    kind: ParseErrorKind::UnbalancedParentheses,
                })
            }
            _ => {}
        }
    }
    if let Some(&pos) = open.first() {
        return Err(ParseError {
            position: pos,
            kind: ParseErrorKind::UnbalancedParentheses,
        });
    }
    let mut equals = toks.iter().filter(|(_, t)| *t == Tok::Equals).map(|(p, _)| *p);
    if equals.next().is_none() {
        return Err(ParseError {
            position: end,
            kind: ParseErrorKind::MissingEquals,
        });
    }
    if let Some(pos) = equals.next() {
        return Err(ParseError {
            position: pos,
            kind: ParseErrorKind::ExtraEquals,
        });
    }

    let mut p = Parser { toks, next: 0, end };
    let lhs = p.side()?;
    match p.peek() {
        Some((_, Tok::Equals)) => {
            p.bump();
        }
        _ => return p.expected("`=`"),
    }
    let rhs = p.side()?;
    if p.peek().is_some() {
        return p.expected("end of input");
    }
    Ok(Equation::new(lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identity::ast::{builtin, Builtin};

    #[test]
    fn display_form_parses_to_e2() {
        let eq = parse_identity("(x o z) * (y o z) = x * y").unwrap();
        assert_eq!(eq, builtin(Builtin::E2));
        assert_eq!(eq.vars(), &[Var::X, Var::Z, Var::Y]);
    }

    #[test]
    fn reflexive_identity() {
        let eq = parse_identity("x = x").unwrap();
        assert_eq!(eq.lhs(), &Term::Var(Var::X));
        assert_eq!(eq.rhs(), &Term::Var(Var::X));
        assert_eq!(eq.render(), "x = x");
    }

    #[test]
    fn unparenthesized_application_inside_group() {
        let err = parse_identity("(x o z * y) = x").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnparenthesizedApplication);
        assert_eq!(err.position, 7);
    }

    #[test]
    fn render_examples() {
        assert_eq!(builtin(Builtin::E2).render(), "((x o z) * (y o z)) = (x * y)");
        assert_eq!(builtin(Builtin::E9).render(), "((x o z) * (y * z)) = (x * y)");
    }

    #[test]
    fn left_modular_outer_parentheses_optional() {
        let a = parse_identity("(x o (y o z)) = (z o (y o x))").unwrap();
        let b = parse_identity("x o (y o z) = z o (y o x)").unwrap();
        assert_eq!(a, b);
        assert_eq!(a, builtin(Builtin::LeftModular));
    }

    #[test]
    fn unicode_circ_accepted() {
        assert_eq!(
            parse_identity("(x ∘ z) ∘ (y ∘ z) = x ∘ y").unwrap(),
            builtin(Builtin::E1)
        );
    }

    #[test]
    fn error_kinds() {
        let kind = |s| parse_identity(s).unwrap_err().kind;
        assert_eq!(kind("x o y"), ParseErrorKind::MissingEquals);
        assert_eq!(kind("x = y = z"), ParseErrorKind::ExtraEquals);
        assert_eq!(kind("(x o y = x"), ParseErrorKind::UnbalancedParentheses);
        assert_eq!(kind("a = x"), ParseErrorKind::UnknownToken('a'));
        assert_eq!(kind("(x) = x"), ParseErrorKind::RedundantParentheses);
        assert_eq!(kind(""), ParseErrorKind::EmptyInput);
    }
}
