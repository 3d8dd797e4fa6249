use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;

/// The five variable names an identity may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Var {
    X,
    Y,
    Z,
    U,
    W,
}

impl Var {
    pub const ALL: [Var; 5] = [Var::X, Var::Y, Var::Z, Var::U, Var::W];

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'x' => Some(Var::X),
            'y' => Some(Var::Y),
            'z' => Some(Var::Z),
            'u' => Some(Var::U),
            'w' => Some(Var::W),
            _ => None,
        }
    }

    pub fn name(self) -> char {
        match self {
            Var::X => 'x',
            Var::Y => 'y',
            Var::Z => 'z',
            Var::U => 'u',
            Var::W => 'w',
        }
    }

    pub(crate) fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Op {
    /// `∘`, written `o`.
    Circ,
    /// `*`
    Star,
}

impl Op {
    pub fn symbol(self) -> char {
        match self {
            Op::Circ => 'o',
            Op::Star => '*',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(Var),
    Apply(Op, Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(v: Var) -> Self {
        Term::Var(v)
    }

    pub fn circ(l: Term, r: Term) -> Self {
        Term::Apply(Op::Circ, Box::new(l), Box::new(r))
    }

    pub fn star(l: Term, r: Term) -> Self {
        Term::Apply(Op::Star, Box::new(l), Box::new(r))
    }

    /// Pushes each variable not already in `out`, left to right.
    pub(crate) fn collect_vars(&self, out: &mut Vec<Var>) {
        match self {
            Term::Var(v) => {
                if !out.contains(v) {
                    out.push(*v);
                }
            }
            Term::Apply(_, l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) => 0,
            Term::Apply(_, l, r) => 1 + l.depth().max(r.depth()),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => write!(f, "{v}"),
            Term::Apply(op, l, r) => write!(f, "({l} {} {r})", op.symbol()),
        }
    }
}

/// `lhs = rhs`, with its variables in first-occurrence order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Equation {
    lhs: Term,
    rhs: Term,
    vars: Vec<Var>,
}

impl Equation {
    pub fn new(lhs: Term, rhs: Term) -> Self {
        let mut vars = Vec::new();
        lhs.collect_vars(&mut vars);
        rhs.collect_vars(&mut vars);
        Self { lhs, rhs, vars }
    }

    pub fn lhs(&self) -> &Term {
        &self.lhs
    }

    pub fn rhs(&self) -> &Term {
        &self.rhs
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    /// Fully parenthesized canonical text.
    pub fn render(&self) -> String {
        format!("{} = {}", self.lhs, self.rhs)
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for Equation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.render())
    }
}

/// The named identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Builtin {
    E1,
    E2,
    E3,
    E4,
    E5,
    E6,
    E7,
    E8,
    E9,
    MedialCirc,
    MedialStar,
    ParamedialCirc,
    ParamedialStar,
    LeftModular,
}

impl Builtin {
    pub const ALL: [Builtin; 14] = [
        Builtin::E1,
        Builtin::E2,
        Builtin::E3,
        Builtin::E4,
        Builtin::E5,
        Builtin::E6,
        Builtin::E7,
        Builtin::E8,
        Builtin::E9,
        Builtin::MedialCirc,
        Builtin::MedialStar,
        Builtin::ParamedialCirc,
        Builtin::ParamedialStar,
        Builtin::LeftModular,
    ];

    /// The numbered identities `e1`–`e9`.
    pub const NUMBERED: [Builtin; 9] = [
        Builtin::E1,
        Builtin::E2,
        Builtin::E3,
        Builtin::E4,
        Builtin::E5,
        Builtin::E6,
        Builtin::E7,
        Builtin::E8,
        Builtin::E9,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::E1 => "e1",
            Builtin::E2 => "e2",
            Builtin::E3 => "e3",
            Builtin::E4 => "e4",
            Builtin::E5 => "e5",
            Builtin::E6 => "e6",
            Builtin::E7 => "e7",
            Builtin::E8 => "e8",
            Builtin::E9 => "e9",
            Builtin::MedialCirc => "medial",
            Builtin::MedialStar => "medial_star",
            Builtin::ParamedialCirc => "paramedial",
            Builtin::ParamedialStar => "paramedial_star",
            Builtin::LeftModular => "leftmod",
        }
    }

    pub fn equation(self) -> Equation {
        builtin(self)
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Builtin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let found = match s {
            "medial_circ" => Some(Builtin::MedialCirc),
            "paramedial_circ" => Some(Builtin::ParamedialCirc),
            "left_modular" => Some(Builtin::LeftModular),
            _ => Builtin::ALL.into_iter().find(|b| b.name() == s),
        };
        found.ok_or_else(|| Error::InvalidParameters(format!("unknown identity `{s}`")))
    }
}

/// Builds the AST of a named identity.
///
/// `e1` and `e3` coincide as equations: both state the Ward law for `∘`.
pub fn builtin(id: Builtin) -> Equation {
    use Term as T;
    let [x, y, z, u, w] = Var::ALL.map(T::var);
    // (x ⊙ z) ⊕ (y ⊙' z) = x ⊕' y
    let ward_shape = |inner_l: Op, outer: Op, inner_r: Op, rhs: Op| {
        let app = |op, l, r| T::Apply(op, Box::new(l), Box::new(r));
        Equation::new(
            app(
                outer,
                app(inner_l, x.clone(), z.clone()),
                app(inner_r, y.clone(), z.clone()),
            ),
            app(rhs, x.clone(), y.clone()),
        )
    };
    let medial = |op: Op| {
        let app = |l, r| T::Apply(op, Box::new(l), Box::new(r));
        Equation::new(
            app(app(x.clone(), y.clone()), app(z.clone(), w.clone())),
            app(app(x.clone(), z.clone()), app(y.clone(), w.clone())),
        )
    };
    let paramedial = |op: Op| {
        let app = |l, r| T::Apply(op, Box::new(l), Box::new(r));
        Equation::new(
            app(app(x.clone(), y.clone()), app(z.clone(), u.clone())),
            app(app(u.clone(), y.clone()), app(z.clone(), x.clone())),
        )
    };
    use Op::{Circ as C, Star as S};
    match id {
        Builtin::E1 | Builtin::E3 => ward_shape(C, C, C, C),
        Builtin::E2 => ward_shape(C, S, C, S),
        Builtin::E4 => ward_shape(C, C, C, S),
        Builtin::E5 => ward_shape(C, C, S, C),
        Builtin::E6 => ward_shape(C, S, C, C),
        Builtin::E7 => ward_shape(C, C, S, S),
        Builtin::E8 => ward_shape(C, S, S, C),
        Builtin::E9 => ward_shape(C, S, S, S),
        Builtin::MedialCirc => medial(C),
        Builtin::MedialStar => medial(S),
        Builtin::ParamedialCirc => paramedial(C),
        Builtin::ParamedialStar => paramedial(S),
        Builtin::LeftModular => Equation::new(
            T::circ(x.clone(), T::circ(y.clone(), z.clone())),
            T::circ(z.clone(), T::circ(y.clone(), x.clone())),
        ),
    }
}
