//! Structural theorems checked over every pair of quasigroups of small order.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::theorem::{CensusOptions, TheoremId};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::identity::{builtin, Builtin, Op, Program};
use crate::table::{CayleyTable, Element};

/// Largest order [`enumerate_quasigroups`] accepts.
pub const MAX_QUASIGROUP_ORDER: usize = 4;

/// Every Latin square of order `n` on `0..n`, in lexicographic order of the
/// row-major entries.
pub fn enumerate_quasigroups(n: usize) -> Result<Vec<CayleyTable>> {
    Ok(latin_squares(n)?
        .into_iter()
        .map(|t| CayleyTable::new(n, t.into_iter().map(usize::from).collect()).expect("Latin square is a table"))
        .collect())
}

fn latin_squares(n: usize) -> Result<Vec<Vec<u8>>> {
    if n == 0 {
        return Err(Error::EmptyTable);
    }
    if n > MAX_QUASIGROUP_ORDER {
        return Err(Error::TooLarge {
            order: n,
            limit: MAX_QUASIGROUP_ORDER,
        });
    }
    fn fill(n: usize, cell: usize, t: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cell == n * n {
            out.push(t.clone());
            return;
        }
        let (r, c) = (cell / n, cell % n);
        for v in 0..n as u8 {
            let clash = (0..c).any(|j| t[r * n + j] == v) || (0..r).any(|i| t[i * n + c] == v);
            if !clash {
                t.push(v);
                fill(n, cell + 1, t, out);
                t.pop();
            }
        }
    }
    let mut out = Vec::new();
    fill(n, 0, &mut Vec::with_capacity(n * n), &mut out);
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StructuralClaim {
    /// `e2` models are `x∘y = x - βy`, `x*y = α(x - y)` over some group.
    T11Form,
    /// `e4` models are unipotent with one common value `q`, and
    /// `x*y = (x∘y)∘q = q∘(y∘x)`.
    T24Unipotent,
    /// `e5` models have a single idempotent `e`, right neutral for both
    /// operations, and `x*x = e`.
    T25Neutral,
    /// In `e6` models `*` is Ward and `x∘y = (αx)⁻¹·(αy)` over its group.
    T26Ward,
    /// `e6` models are unipotent with one common value.
    T26Unipotent,
    /// `e9` models have at most one idempotent, shared and right neutral;
    /// when `*` is unipotent the operations coincide and are Ward.
    T29Idem,
    /// `e8` models: `*` has at most one idempotent, right neutral; when `∘`
    /// is unipotent with value `u`, `x∘y = u*(y*x)`.
    P8Idem,
}

impl StructuralClaim {
    pub const ALL: [StructuralClaim; 7] = [
        StructuralClaim::T11Form,
        StructuralClaim::T24Unipotent,
        StructuralClaim::T25Neutral,
        StructuralClaim::T26Ward,
        StructuralClaim::T26Unipotent,
        StructuralClaim::T29Idem,
        StructuralClaim::P8Idem,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StructuralClaim::T11Form => "t11_form",
            StructuralClaim::T24Unipotent => "t24_unipotent",
            StructuralClaim::T25Neutral => "t25_neutral",
            StructuralClaim::T26Ward => "t26_ward",
            StructuralClaim::T26Unipotent => "t26_unipotent",
            StructuralClaim::T29Idem => "t29_idem",
            StructuralClaim::P8Idem => "p8_idem",
        }
    }

    pub fn identity(self) -> Builtin {
        match self {
            StructuralClaim::T11Form => Builtin::E2,
            StructuralClaim::T24Unipotent => Builtin::E4,
            StructuralClaim::T25Neutral => Builtin::E5,
            StructuralClaim::T26Ward | StructuralClaim::T26Unipotent => Builtin::E6,
            StructuralClaim::T29Idem => Builtin::E9,
            StructuralClaim::P8Idem => Builtin::E8,
        }
    }

    /// The claims making up a structural theorem.
    pub fn for_theorem(t: TheoremId) -> Result<Vec<StructuralClaim>> {
        Ok(match t {
            TheoremId::T11 => vec![StructuralClaim::T11Form],
            TheoremId::T24 => vec![StructuralClaim::T24Unipotent],
            TheoremId::T25 => vec![StructuralClaim::T25Neutral],
            TheoremId::T26 => vec![StructuralClaim::T26Ward, StructuralClaim::T26Unipotent],
            TheoremId::T29struct => vec![StructuralClaim::T29Idem],
            other => {
                return Err(Error::NotApplicable(format!(
                    "{other} is a linear theorem; use verify_theorem"
                )))
            }
        })
    }

    /// `None` if the conclusion holds for the pair, else a reason.
    fn violation(self, c: &Table<'_>, s: &Table<'_>) -> Option<String> {
        match self {
            StructuralClaim::T11Form => t11_form(c, s),
            StructuralClaim::T24Unipotent => {
                let q = match (c.unipotent(), s.unipotent()) {
                    (Some(p), Some(q)) if p == q => q,
                    _ => return Some("diagonals are not one common constant".into()),
                };
                c.find(|x, y| {
                    let star = s.get(x, y);
                    (star != c.get(c.get(x, y), q) || star != c.get(q, c.get(y, x)))
                        .then(|| format!("x*y differs from (x o y) o q or q o (y o x) at ({x}, {y})"))
                })
            }
            StructuralClaim::T25Neutral => {
                let (ic, is) = (c.idempotents(), s.idempotents());
                if ic.len() != 1 || ic != is {
                    return Some(format!("idempotents {ic:?} and {is:?}"));
                }
                let e = ic[0];
                if !c.right_neutral(e) || !s.right_neutral(e) {
                    return Some(format!("{e} is not right neutral for both"));
                }
                (s.unipotent() != Some(e)).then(|| format!("x*x is not constantly {e}"))
            }
            StructuralClaim::T26Ward => t26_ward(c, s),
            StructuralClaim::T26Unipotent => match (c.unipotent(), s.unipotent()) {
                (Some(p), Some(q)) if p == q => None,
                _ => Some("diagonals are not one common constant".into()),
            },
            StructuralClaim::T29Idem => {
                let (ic, is) = (c.idempotents(), s.idempotents());
                if ic.len() > 1 || is.len() > 1 || ic != is {
                    return Some(format!("idempotents {ic:?} and {is:?}"));
                }
                if let Some(&a) = ic.first() {
                    if !c.right_neutral(a) || !s.right_neutral(a) {
                        return Some(format!("{a} is not right neutral for both"));
                    }
                }
                if s.unipotent().is_some() {
                    if c.t != s.t {
                        return Some("* is unipotent but the operations differ".into());
                    }
                    if !s.ward() {
                        return Some("* is unipotent but not Ward".into());
                    }
                }
                None
            }
            StructuralClaim::P8Idem => {
                let is = s.idempotents();
                if is.len() > 1 {
                    return Some(format!("* has idempotents {is:?}"));
                }
                if let Some(&a) = is.first() {
                    if !s.right_neutral(a) {
                        return Some(format!("{a} is not right neutral for *"));
                    }
                }
                let u = c.unipotent()?;
                let Some(w) = s.unipotent() else {
                    return Some("o is unipotent but * is not".into());
                };
                if let Some(r) = c.find(|x, y| {
                    (c.get(x, y) != s.get(u, s.get(y, x))).then(|| format!("x o y differs from u*(y*x) at ({x}, {y})"))
                }) {
                    return Some(r);
                }
                if c.get(w, u) != w {
                    return Some(format!("w o u differs from w for w = {w}, u = {u}"));
                }
                (!s.right_neutral(w)).then(|| format!("{w} is not right neutral for *"))
            }
        }
    }
}

impl fmt::Display for StructuralClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StructuralClaim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        StructuralClaim::ALL
            .into_iter()
            .find(|c| c.name() == lower)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

/// Byte table view used in the pair loops.
struct Table<'a> {
    n: usize,
    t: &'a [u8],
}

impl Table<'_> {
    #[inline]
    fn get(&self, x: Element, y: Element) -> Element {
        self.t[x * self.n + y] as usize
    }

    fn find(&self, f: impl Fn(Element, Element) -> Option<String>) -> Option<String> {
        (0..self.n).find_map(|x| (0..self.n).find_map(|y| f(x, y)))
    }

    fn unipotent(&self) -> Option<Element> {
        let q = self.get(0, 0);
        (0..self.n).all(|x| self.get(x, x) == q).then_some(q)
    }

    fn idempotents(&self) -> Vec<Element> {
        (0..self.n).filter(|&x| self.get(x, x) == x).collect()
    }

    fn right_neutral(&self, e: Element) -> bool {
        (0..self.n).all(|x| self.get(x, e) == x)
    }

    fn ward(&self) -> bool {
        Program::compile(&builtin(Builtin::E1)).holds(self.n, |_, x, y| self.get(x, y))
    }
}

/// Looks for an element `e` making `x + w = x∘(e∘_)⁻¹(w)` a group with
/// identity `e`, `α(v) = v*e` bijective and `x*y = α(x - y)`.
fn t11_form(c: &Table<'_>, s: &Table<'_>) -> Option<String> {
    let n = c.n;
    let works = |e: Element| -> bool {
        let mut left_inv = vec![0; n];
        for y in 0..n {
            left_inv[c.get(e, y)] = y;
        }
        let table = CayleyTable::from_fn(n, |x, w| c.get(x, left_inv[w]));
        let Some(g) = FiniteGroup::from_table(table) else {
            return false;
        };
        if g.identity() != e {
            return false;
        }
        let alpha: Vec<Element> = (0..n).map(|v| s.get(v, e)).collect();
        let mut seen = vec![false; n];
        for &v in &alpha {
            if std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        // β(y) = -(e∘y), so x - βy = x + (e∘y).
        (0..n).all(|x| (0..n).all(|y| c.get(x, y) == g.add(x, c.get(e, y)) && s.get(x, y) == alpha[g.sub(x, y)]))
    };
    (!(0..n).any(works)).then(|| "no element yields the group form".into())
}

fn t26_ward(c: &Table<'_>, s: &Table<'_>) -> Option<String> {
    if !s.ward() {
        return Some("* is not Ward".into());
    }
    let Some(e) = s.unipotent() else {
        return Some("* is not unipotent".into());
    };
    let n = c.n;
    let mul = |x, y| s.get(x, s.get(e, y));
    let inv = |x| s.get(e, x);
    c.find(|x, y| {
        let want = mul(inv(c.get(e, x)), c.get(e, y));
        (c.get(x, y) != want).then(|| format!("x o y differs from (ex)^-1 (ey) at ({x}, {y}), n = {n}"))
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct StructuralViolation {
    pub circ: CayleyTable,
    pub star: CayleyTable,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct StructuralReport {
    pub claim: StructuralClaim,
    pub identity: String,
    pub order: usize,
    pub pairs_examined: usize,
    pub satisfying_pairs: usize,
    pub violations: Vec<StructuralViolation>,
}

impl StructuralReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `claim` on every pair of quasigroups of order `n` satisfying its
/// identity.
pub fn verify_structural(claim: StructuralClaim, n: usize, opts: &CensusOptions) -> Result<StructuralReport> {
    let squares = latin_squares(n)?;
    let eq = builtin(claim.identity());
    let program = Program::compile(&eq);
    let scan = |ci: usize| -> (usize, Vec<StructuralViolation>) {
        let c = Table { n, t: &squares[ci] };
        let mut regs = Vec::new();
        let mut count = 0;
        let mut bad = Vec::new();
        for star in &squares {
            let s = Table { n, t: star };
            let ok = program.holds_with(n, &mut regs, |op, x, y| match op {
                Op::Circ => c.get(x, y),
                Op::Star => s.get(x, y),
            });
            if !ok {
                continue;
            }
            count += 1;
            if let Some(reason) = claim.violation(&c, &s) {
                let table = |t: &[u8]| CayleyTable::new(n, t.iter().map(|&v| v as usize).collect()).expect("valid");
                bad.push(StructuralViolation {
                    circ: table(c.t),
                    star: table(s.t),
                    reason,
                });
            }
        }
        (count, bad)
    };
    let merge = |parts: Vec<(usize, Vec<StructuralViolation>)>| {
        let mut total = 0;
        let mut violations = Vec::new();
        for (k, v) in parts {
            total += k;
            violations.extend(v);
        }
        (total, violations)
    };
    let indices = 0..squares.len();
    let parts: Vec<_> = if opts.workers <= 1 {
        indices.map(scan).collect()
    } else {
        let run = || indices.clone().into_par_iter().map(scan).collect();
        match rayon::ThreadPoolBuilder::new().num_threads(opts.workers).build() {
            Ok(pool) => pool.install(run),
            Err(_) => run(),
        }
    };
    let (satisfying_pairs, violations) = merge(parts);
    Ok(StructuralReport {
        claim,
        identity: eq.render(),
        order: n,
        pairs_examined: squares.len() * squares.len(),
        satisfying_pairs,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quasigroup_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| enumerate_quasigroups(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 2, 12, 576]);
        assert!(enumerate_quasigroups(5).is_err());
    }

    #[test]
    fn enumeration_is_sorted_and_latin() {
        let all = enumerate_quasigroups(3).unwrap();
        assert!(all.windows(2).all(|w| w[0].entries() < w[1].entries()));
        assert!(all.iter().all(|t| t.is_latin_square()));
    }

    #[test]
    fn claims_hold_through_order_three() {
        let opts = CensusOptions::with_workers(1);
        for claim in StructuralClaim::ALL {
            for n in 1..=3 {
                let r = verify_structural(claim, n, &opts).unwrap();
                assert!(r.holds(), "{claim} n={n}: {:?}", r.violations.first());
                assert!(r.satisfying_pairs > 0, "{claim} n={n} vacuous");
            }
        }
    }

    #[test]
    fn theorem_claims_map() {
        assert_eq!(StructuralClaim::for_theorem(TheoremId::T26).unwrap().len(), 2);
        assert!(StructuralClaim::for_theorem(TheoremId::T22).is_err());
        for c in StructuralClaim::ALL {
            assert_eq!(c.name().parse::<StructuralClaim>().unwrap(), c);
        }
    }
}
