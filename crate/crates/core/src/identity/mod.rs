//! Two-operation equational identities: syntax, evaluation, and exhaustive
//! satisfaction checking over finite biquasigroups.

mod ast;
mod eval;
mod parser;

pub use ast::{builtin, Builtin, Equation, Op, Term, Var};
pub use eval::{check, eval_term, holds, Assignment, Binding, CheckResult, Counterexample, Program};
pub use parser::{parse_identity, ParseError, ParseErrorKind};

use crate::error::Result;

/// Resolves an identity argument: a builtin name (`e2`, `medial`, …) or
/// `custom:TEXT`.
pub fn resolve_identity(arg: &str) -> Result<Equation> {
    match arg.strip_prefix("custom:") {
        Some(text) => Ok(parse_identity(text)?),
        None => Ok(builtin(arg.parse::<Builtin>()?)),
    }
}

/// Shorthand for [`Equation::render`].
pub fn render(eq: &Equation) -> String {
    eq.render()
}
