//! Named constructions of quasigroups and biquasigroups.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Permutation};
use crate::identity::Builtin;
use crate::linear::Biquasigroup;
use crate::properties::{is_medial, is_ward, require_latin, unipotency};
use crate::table::{CayleyTable, Element};

/// The Ward quasigroup `x∘y = x·y⁻¹`.
pub fn ward_from_group(g: &FiniteGroup) -> CayleyTable {
    CayleyTable::from_fn(g.order(), |x, y| g.sub(x, y))
}

/// Recovers the group `x·y = x∘(e∘y)` of a Ward quasigroup, where `e` is the
/// constant diagonal.
pub fn derived_group(w: &CayleyTable) -> Result<FiniteGroup> {
    if !is_ward(w)? {
        return Err(Error::NotWard);
    }
    let n = w.order();
    let e = w.get(0, 0);
    let table = CayleyTable::from_fn(n, |x, y| w.get(x, w.get(e, y)));
    let g = FiniteGroup::from_table(table).ok_or(Error::NotAGroup)?;
    debug_assert_eq!(g.identity(), e);
    debug_assert!((0..n).all(|x| g.neg(x) == w.get(e, x)));
    debug_assert!((0..n).all(|x| w.get(x, e) == x && w.get(e, w.get(e, x)) == x));
    debug_assert!((0..n).all(|x| (0..n).all(|y| w.get(e, w.get(x, y)) == w.get(y, x))));
    Ok(g)
}

/// Extends a medial unipotent quasigroup by `x*y = (x∘y)∘q`.
pub fn extend_e4(t: &CayleyTable) -> Result<Biquasigroup> {
    require_latin(t)?;
    if !is_medial(t)? {
        return Err(Error::NotMedial);
    }
    let q = unipotency(t).ok_or(Error::NotUnipotent)?;
    let star = CayleyTable::from_fn(t.order(), |x, y| t.get(t.get(x, y), q));
    Biquasigroup::new(t.clone(), star)
}

/// `x∘y = (αx)⁻¹·(αy)` and `x*y = x·y⁻¹` for any bijection `α`.
pub fn t26_construct(g: &FiniteGroup, alpha: &Permutation) -> Result<Biquasigroup> {
    if alpha.order() != g.order() {
        return Err(Error::OrderMismatch {
            left: g.order(),
            right: alpha.order(),
        });
    }
    Biquasigroup::from_fns(
        g.order(),
        |x, y| g.add(g.neg(alpha.apply(x)), alpha.apply(y)),
        |x, y| g.sub(x, y),
    )
}

/// `(Q, x - y, +)` over a commutative group.
pub fn inverse_op_biq(g: &FiniteGroup) -> Result<Biquasigroup> {
    if !g.is_commutative() {
        return Err(Error::NotCommutative);
    }
    Biquasigroup::new(ward_from_group(g), g.table().clone())
}

/// `∘` the group operation, `x*y = y⁻¹∘x`.
pub fn e5_example(g: &FiniteGroup) -> Result<Biquasigroup> {
    Biquasigroup::from_fns(g.order(), |x, y| g.add(x, y), |x, y| g.add(g.neg(y), x))
}

/// `x∘y = y - x`, `x*y = x + y` over a commutative group.
pub fn e7_example(g: &FiniteGroup) -> Result<Biquasigroup> {
    if !g.is_commutative() {
        return Err(Error::NotCommutative);
    }
    Biquasigroup::from_fns(g.order(), |x, y| g.sub(y, x), |x, y| g.add(x, y))
}

fn modulus(n: i64) -> Result<usize> {
    if n < 1 {
        return Err(Error::InvalidParameters(format!("modulus n = {n} must be at least 1")));
    }
    Ok(n as usize)
}

fn residue(v: i64, n: usize) -> Element {
    v.rem_euclid(n as i64) as Element
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `x∘y = [px + qy + c]_n` as a table.
fn affine(n: usize, p: i64, q: i64, c: i64) -> CayleyTable {
    CayleyTable::from_fn(n, |x, y| residue(p * x as i64 + q * y as i64 + c, n))
}

fn affine_biq(n: usize, circ: (i64, i64, i64), star: (i64, i64, i64)) -> Result<Biquasigroup> {
    Biquasigroup::new(affine(n, circ.0, circ.1, circ.2), affine(n, star.0, star.1, star.2))
}

/// `x∘y = [ax + (1-a)y]_n`, `x*y = [a²x + (1-a²)y]_n`, requiring `[a²-a]_n = 1`.
pub fn family_c71(n: i64, a: i64) -> Result<Biquasigroup> {
    let m = modulus(n)?;
    let r = residue(a * a - a, m);
    if r != 1 % m {
        return Err(Error::InvalidParameters(format!(
            "[a^2 - a]_{n} = {r}, expected 1 (a = {a})"
        )));
    }
    affine_biq(m, (a, 1 - a, 0), (a * a, 1 - a * a, 0))
}

/// The order `a² - a - 1` members of the `[a²-a]_n = 1` family, in either
/// of the two published variants.
pub fn family_c72(a: i64, variant: u8) -> Result<Biquasigroup> {
    if a < 3 {
        return Err(Error::InvalidParameters(format!("a = {a} must be at least 3")));
    }
    let n = modulus(a * a - a - 1)?;
    match variant {
        1 => affine_biq(n, (a, 1 - a, 0), (a + 1, -a, 0)),
        2 => affine_biq(n, (1 - a, a, 0), (2 - a, a - 1, 0)),
        v => Err(Error::InvalidParameters(format!("variant {v} must be 1 or 2"))),
    }
}

/// `x∘y = [ax - y + c]_n`, `x*y = [x - y + d]_n` with `gcd(a, n) = 1`.
pub fn family_e8_zn(n: i64, a: i64, c: i64, d: i64) -> Result<Biquasigroup> {
    let m = modulus(n)?;
    let g = gcd(a, n);
    if g != 1 {
        return Err(Error::InvalidParameters(format!(
            "gcd(a, n) = gcd({a}, {n}) = {g}, expected 1"
        )));
    }
    affine_biq(m, (a, -1, c), (1, -1, d))
}

/// `x∘y = [x - a²y - ab]_n`, `x*y = [x + ay + b]_n` with `gcd(a, n) = 1`.
pub fn family_e9_zn(n: i64, a: i64, b: i64) -> Result<Biquasigroup> {
    let m = modulus(n)?;
    let g = gcd(a, n);
    if g != 1 {
        return Err(Error::InvalidParameters(format!(
            "gcd(a, n) = gcd({a}, {n}) = {g}, expected 1"
        )));
    }
    affine_biq(m, (1, -a * a, -a * b), (1, a, b))
}

/// `x∘y = [x + y]_n`, `x*y = [x + ay]_n` with `n = a² + 1 > 4`.
pub fn e9_example(a: i64) -> Result<Biquasigroup> {
    if a < 2 {
        return Err(Error::InvalidParameters(format!(
            "a = {a} gives n = a^2 + 1 = {}, which must exceed 4",
            a * a + 1
        )));
    }
    let n = modulus(a * a + 1)?;
    affine_biq(n, (1, 1, 0), (1, a, 0))
}

/// Construction families addressable by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Ward,
    DerivedGroup,
    E4Extension,
    T26,
    InverseOp,
    E5Example,
    E7Example,
    C71,
    C72V1,
    C72V2,
    E8Zn,
    E9Zn,
    E9Example,
}

impl Family {
    pub const ALL: [Family; 13] = [
        Family::Ward,
        Family::DerivedGroup,
        Family::E4Extension,
        Family::T26,
        Family::InverseOp,
        Family::E5Example,
        Family::E7Example,
        Family::C71,
        Family::C72V1,
        Family::C72V2,
        Family::E8Zn,
        Family::E9Zn,
        Family::E9Example,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Ward => "ward",
            Family::DerivedGroup => "derived_group",
            Family::E4Extension => "e4_extension",
            Family::T26 => "t26",
            Family::InverseOp => "inverse_op",
            Family::E5Example => "e5_example",
            Family::E7Example => "e7_example",
            Family::C71 => "c71",
            Family::C72V1 => "c72_v1",
            Family::C72V2 => "c72_v2",
            Family::E8Zn => "e8_zn",
            Family::E9Zn => "e9_zn",
            Family::E9Example => "e9_example",
        }
    }

    /// The identity every member of the family satisfies, if any.
    pub fn target(self) -> Option<Builtin> {
        match self {
            Family::Ward => Some(Builtin::E1),
            Family::DerivedGroup => None,
            Family::E4Extension => Some(Builtin::E4),
            Family::T26 => Some(Builtin::E6),
            Family::InverseOp => Some(Builtin::E3),
            Family::E5Example => Some(Builtin::E5),
            Family::E7Example | Family::C71 | Family::C72V1 | Family::C72V2 => Some(Builtin::E7),
            Family::E8Zn => Some(Builtin::E8),
            Family::E9Zn | Family::E9Example => Some(Builtin::E9),
        }
    }

    /// Whether the family is built from a group argument.
    pub fn needs_group(self) -> bool {
        matches!(
            self,
            Family::Ward
                | Family::DerivedGroup
                | Family::E4Extension
                | Family::T26
                | Family::InverseOp
                | Family::E5Example
                | Family::E7Example
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown family `{s}`")))
    }
}

/// Numeric parameters for [`construct`]; unused ones are ignored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FamilyParams {
    pub a: Option<i64>,
    pub b: Option<i64>,
    pub c: Option<i64>,
    pub d: Option<i64>,
    pub n: Option<i64>,
}

fn required(value: Option<i64>, name: &str, family: Family) -> Result<i64> {
    value.ok_or_else(|| Error::InvalidParameters(format!("family {family} requires --{name}")))
}

/// Builds a member of `family`.
///
/// Group-based families take `group`. `t26` uses the bijection
/// `x ↦ (x + a) mod n` on element indices (default `a = 0`). The `ward`,
/// `derived_group` and `e4_extension` results are returned as `(Q, ∘, ∘)`
/// or, for the extension, `(Q, ∘, *)` built from the Ward quasigroup of
/// `group`.
pub fn construct(family: Family, group: Option<&FiniteGroup>, p: &FamilyParams) -> Result<Biquasigroup> {
    let need_group = || group.ok_or_else(|| Error::InvalidParameters(format!("family {family} requires --group")));
    match family {
        Family::Ward => Biquasigroup::single(ward_from_group(need_group()?)),
        Family::DerivedGroup => {
            let g = derived_group(&ward_from_group(need_group()?))?;
            Biquasigroup::single(g.table().clone())
        }
        Family::E4Extension => extend_e4(&ward_from_group(need_group()?)),
        Family::T26 => {
            let g = need_group()?;
            let n = g.order() as i64;
            let shift = p.a.unwrap_or(0);
            let alpha = Permutation::from_fn(g.order(), |x| residue(x as i64 + shift, n as usize))?;
            t26_construct(g, &alpha)
        }
        Family::InverseOp => inverse_op_biq(need_group()?),
        Family::E5Example => e5_example(need_group()?),
        Family::E7Example => e7_example(need_group()?),
        Family::C71 => family_c71(required(p.n, "n", family)?, required(p.a, "a", family)?),
        Family::C72V1 => family_c72(required(p.a, "a", family)?, 1),
        Family::C72V2 => family_c72(required(p.a, "a", family)?, 2),
        Family::E8Zn => family_e8_zn(
            required(p.n, "n", family)?,
            required(p.a, "a", family)?,
            p.c.unwrap_or(0),
            p.d.unwrap_or(0),
        ),
        Family::E9Zn => family_e9_zn(
            required(p.n, "n", family)?,
            required(p.a, "a", family)?,
            p.b.unwrap_or(0),
        ),
        Family::E9Example => e9_example(required(p.a, "a", family)?),
    }
}
