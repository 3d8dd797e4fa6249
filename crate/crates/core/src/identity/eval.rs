//! Evaluation of terms and exhaustive identity checking.

use serde::Serialize;

use super::ast::{Equation, Op, Term, Var};
use crate::error::{Error, Result};
use crate::linear::Biquasigroup;
use crate::table::Element;

/// A partial map from variables to carrier elements.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment {
    values: [Option<Element>; 5],
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, var: Var, value: Element) -> Self {
        self.set(var, value);
        self
    }

    pub fn set(&mut self, var: Var, value: Element) {
        self.values[var.index()] = Some(value);
    }

    pub fn get(&self, var: Var) -> Option<Element> {
        self.values[var.index()]
    }
}

/// Evaluates `t` by table lookup; `Circ` reads `biq.circ()`, `Star` reads `biq.star()`.
pub fn eval_term(t: &Term, biq: &Biquasigroup, assign: &Assignment) -> Result<Element> {
    match t {
        Term::Var(v) => {
            let value = assign.get(*v).ok_or(Error::UnboundVariable(v.name()))?;
            if value >= biq.order() {
                return Err(Error::ElementOutOfRange {
                    element: value,
                    order: biq.order(),
                });
            }
            Ok(value)
        }
        Term::Apply(op, l, r) => {
            let l = eval_term(l, biq, assign)?;
            let r = eval_term(r, biq, assign)?;
            Ok(match op {
                Op::Circ => biq.circ().get(l, r),
                Op::Star => biq.star().get(l, r),
            })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Binding {
    pub var: Var,
    pub value: Element,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// Values for the equation's variables, in first-occurrence order.
    pub assignment: Vec<Binding>,
    pub lhs: Element,
    pub rhs: Element,
}

impl Counterexample {
    pub fn value_of(&self, var: Var) -> Option<Element> {
        self.assignment.iter().find(|b| b.var == var).map(|b| b.value)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
}

/// Exhaustively checks `eq` on `biq`, reporting the first failing assignment
/// in lexicographic order over the equation's variables.
pub fn check(biq: &Biquasigroup, eq: &Equation) -> CheckResult {
    let program = Program::compile(eq);
    let circ = biq.circ();
    let star = biq.star();
    let failure = program.first_failure(biq.order(), |op, x, y| match op {
        Op::Circ => circ.get(x, y),
        Op::Star => star.get(x, y),
    });
    match failure {
        None => CheckResult {
            holds: true,
            counterexample: None,
        },
        Some((values, lhs, rhs)) => CheckResult {
            holds: false,
            counterexample: Some(Counterexample {
                assignment: eq
                    .vars()
                    .iter()
                    .zip(values)
                    .map(|(&var, value)| Binding { var, value })
                    .collect(),
                lhs,
                rhs,
            }),
        },
    }
}

/// Shorthand for `check(biq, eq).holds`.
pub fn holds(biq: &Biquasigroup, eq: &Equation) -> bool {
    Program::compile(eq).holds(biq.order(), |op, x, y| match op {
        Op::Circ => biq.circ().get(x, y),
        Op::Star => biq.star().get(x, y),
    })
}

#[derive(Clone, Copy, Debug)]
struct Instr {
    op: Op,
    left: usize,
    right: usize,
}

/// An equation flattened into straight-line code over numbered slots.
///
/// Slots `0..vars` hold the variable values; each instruction writes the
/// next slot. Used by the census hot loops, where the operation lookup is
/// supplied as a closure over whatever table layout the caller holds.
#[derive(Clone, Debug)]
pub struct Program {
    vars: usize,
    code: Vec<Instr>,
    lhs: usize,
    rhs: usize,
}

impl Program {
    pub fn compile(eq: &Equation) -> Self {
        let mut code = Vec::new();
        let vars = eq.vars().len();
        let lhs = Self::emit(eq.lhs(), eq.vars(), &mut code);
        let rhs = Self::emit(eq.rhs(), eq.vars(), &mut code);
        Self { vars, code, lhs, rhs }
    }

    fn emit(t: &Term, vars: &[Var], code: &mut Vec<Instr>) -> usize {
        match t {
            Term::Var(v) => vars.iter().position(|w| w == v).expect("variable listed in equation"),
            Term::Apply(op, l, r) => {
                let left = Self::emit(l, vars, code);
                let right = Self::emit(r, vars, code);
                code.push(Instr { op: *op, left, right });
                vars.len() + code.len() - 1
            }
        }
    }

    pub fn var_count(&self) -> usize {
        self.vars
    }

    fn slots(&self) -> usize {
        self.vars + self.code.len()
    }

    #[inline]
    fn run(&self, regs: &mut [Element], lookup: &impl Fn(Op, Element, Element) -> Element) -> (Element, Element) {
        let base = self.vars;
        for (i, ins) in self.code.iter().enumerate() {
            regs[base + i] = lookup(ins.op, regs[ins.left], regs[ins.right]);
        }
        (regs[self.lhs], regs[self.rhs])
    }

    /// First failing assignment in lexicographic order (first variable most
    /// significant), with the two side values.
    pub fn first_failure(
        &self,
        order: usize,
        lookup: impl Fn(Op, Element, Element) -> Element,
    ) -> Option<(Vec<Element>, Element, Element)> {
        let mut regs = vec![0; self.slots()];
        loop {
            let (l, r) = self.run(&mut regs, &lookup);
            if l != r {
                return Some((regs[..self.vars].to_vec(), l, r));
            }
            if !Self::advance(&mut regs[..self.vars], order) {
                return None;
            }
        }
    }

    pub fn holds(&self, order: usize, lookup: impl Fn(Op, Element, Element) -> Element) -> bool {
        self.first_failure(order, lookup).is_none()
    }

    /// Like [`Program::holds`] but reuses `regs` as scratch space.
    #[inline]
    pub fn holds_with(
        &self,
        order: usize,
        regs: &mut Vec<Element>,
        lookup: impl Fn(Op, Element, Element) -> Element,
    ) -> bool {
        regs.clear();
        regs.resize(self.slots(), 0);
        loop {
            let (l, r) = self.run(regs, &lookup);
            if l != r {
                return false;
            }
            if !Self::advance(&mut regs[..self.vars], order) {
                return true;
            }
        }
    }

    /// Odometer step; returns false after the last assignment.
    #[inline]
    fn advance(vals: &mut [Element], order: usize) -> bool {
        for v in vals.iter_mut().rev() {
            *v += 1;
            if *v < order {
                return true;
            }
            *v = 0;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identity::{builtin, parse_identity, Builtin};
    use crate::table::CayleyTable;

    fn zn_biq(n: usize, circ: impl Fn(usize, usize) -> usize, star: impl Fn(usize, usize) -> usize) -> Biquasigroup {
        Biquasigroup::from_fns(n, circ, star).unwrap()
    }

    #[test]
    fn eval_examples() {
        let z3 = Biquasigroup::single(CayleyTable::from_fn(3, |x, y| (x + y) % 3)).unwrap();
        let x = Term::Var(Var::X);
        assert_eq!(eval_term(&x, &z3, &Assignment::new().with(Var::X, 2)).unwrap(), 2);
        let xy = parse_identity("x o y = x").unwrap().lhs().clone();
        let a = Assignment::new().with(Var::X, 1).with(Var::Y, 2);
        assert_eq!(eval_term(&xy, &z3, &a).unwrap(), 0);

        let sub = |x: usize, y: usize| (x + 5 - y) % 5;
        let b = zn_biq(5, sub, sub);
        let lhs = builtin(Builtin::E2).lhs().clone();
        let a = Assignment::new().with(Var::X, 1).with(Var::Y, 2).with(Var::Z, 4);
        // (1-4) - (2-4) = -1 mod 5
        assert_eq!(eval_term(&lhs, &b, &a).unwrap(), 4);
    }

    #[test]
    fn unbound_variable_is_an_error() {
        let z3 = Biquasigroup::single(CayleyTable::from_fn(3, |x, y| (x + y) % 3)).unwrap();
        let t = parse_identity("x o y = x").unwrap().lhs().clone();
        assert_eq!(
            eval_term(&t, &z3, &Assignment::new().with(Var::X, 0)),
            Err(Error::UnboundVariable('y'))
        );
    }

    #[test]
    fn check_examples() {
        let c72 = zn_biq(5, |x, y| (3 * x + 3 * y) % 5, |x, y| (4 * x + 2 * y) % 5);
        assert!(check(&c72, &builtin(Builtin::E7)).holds);

        let z2 = zn_biq(2, |x, y| (x + y) % 2, |x, y| (x + y) % 2);
        assert!(check(&z2, &builtin(Builtin::E1)).holds);

        let z3 = zn_biq(3, |x, y| (x + y) % 3, |x, y| (x + y) % 3);
        let res = check(&z3, &builtin(Builtin::E1));
        assert!(!res.holds);
        let cx = res.counterexample.unwrap();
        assert_eq!(cx.value_of(Var::X), Some(0));
        assert_eq!(cx.value_of(Var::Y), Some(0));
        assert_eq!(cx.value_of(Var::Z), Some(1));
        assert_eq!((cx.lhs, cx.rhs), (2, 0));
    }

    #[test]
    fn reflexive_identity_always_holds() {
        let z3 = zn_biq(3, |x, y| (x + 2 * y) % 3, |x, y| (x + y) % 3);
        assert!(check(&z3, &parse_identity("x = x").unwrap()).holds);
    }
}
