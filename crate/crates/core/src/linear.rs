//! Biquasigroups and their linear parameterizations over a group.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Permutation};
use crate::table::{CayleyTable, Element};

/// Two quasigroup operations `∘` and `*` on one carrier.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Biquasigroup {
    circ: CayleyTable,
    star: CayleyTable,
}

impl Biquasigroup {
    pub fn new(circ: CayleyTable, star: CayleyTable) -> Result<Self> {
        if circ.order() != star.order() {
            return Err(Error::OrderMismatch {
                left: circ.order(),
                right: star.order(),
            });
        }
        if let Some(detail) = circ.latin_violation() {
            return Err(Error::NotLatin { which: "circ", detail });
        }
        if let Some(detail) = star.latin_violation() {
            return Err(Error::NotLatin { which: "star", detail });
        }
        Ok(Self { circ, star })
    }

    /// The biquasigroup `(Q, ∘, ∘)`.
    pub fn single(t: CayleyTable) -> Result<Self> {
        Self::new(t.clone(), t)
    }

    pub fn from_fns(
        order: usize,
        circ: impl Fn(Element, Element) -> Element,
        star: impl Fn(Element, Element) -> Element,
    ) -> Result<Self> {
        Self::new(CayleyTable::from_fn(order, circ), CayleyTable::from_fn(order, star))
    }

    pub fn order(&self) -> usize {
        self.circ.order()
    }

    pub fn circ(&self) -> &CayleyTable {
        &self.circ
    }

    pub fn star(&self) -> &CayleyTable {
        &self.star
    }

    /// Renders both tables in the biquasigroup file format.
    pub fn to_text(&self) -> String {
        format!("{}\n{}", self.circ.to_text(), self.star.to_text())
    }
}

/// Where the constant sits in a linear operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// `φx + a + ψy`
    Middle,
    /// `φx + ψy + a`
    End,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Middle => "middle",
            Kind::End => "end",
        })
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "middle" => Ok(Kind::Middle),
            "end" => Ok(Kind::End),
            other => Err(Error::InvalidParameters(format!(
                "unknown kind `{other}` (expected middle or end)"
            ))),
        }
    }
}

/// Evaluates one linear operation `φx ⊕ ψy ⊕ c` of the given kind.
#[inline]
pub fn linear_op(
    g: &FiniteGroup,
    kind: Kind,
    phi: &Permutation,
    psi: &Permutation,
    c: Element,
    x: Element,
    y: Element,
) -> Element {
    match kind {
        Kind::Middle => g.add(g.add(phi.apply(x), c), psi.apply(y)),
        Kind::End => g.add(g.add(phi.apply(x), psi.apply(y)), c),
    }
}

/// Parameters `(φ, ψ, a, α, β, b)` of a biquasigroup linear over `group`:
/// `x∘y` uses `(φ, ψ, a)` and `x*y` uses `(α, β, b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSpec<'g> {
    group: &'g FiniteGroup,
    pub phi: Permutation,
    pub psi: Permutation,
    pub a: Element,
    pub alpha: Permutation,
    pub beta: Permutation,
    pub b: Element,
    pub kind: Kind,
}

impl<'g> LinearSpec<'g> {
    /// Validates that all four maps are automorphisms and both constants lie
    /// in the carrier.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        group: &'g FiniteGroup,
        phi: Permutation,
        psi: Permutation,
        a: Element,
        alpha: Permutation,
        beta: Permutation,
        b: Element,
        kind: Kind,
    ) -> Result<Self> {
        group.check_automorphism("phi", &phi)?;
        group.check_automorphism("psi", &psi)?;
        group.check_automorphism("alpha", &alpha)?;
        group.check_automorphism("beta", &beta)?;
        for c in [a, b] {
            if c >= group.order() {
                return Err(Error::ElementOutOfRange {
                    element: c,
                    order: group.order(),
                });
            }
        }
        Ok(Self::new_unchecked(group, phi, psi, a, alpha, beta, b, kind))
    }

    /// Builds a spec from maps already known to be automorphisms.
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn new_unchecked(
        group: &'g FiniteGroup,
        phi: Permutation,
        psi: Permutation,
        a: Element,
        alpha: Permutation,
        beta: Permutation,
        b: Element,
        kind: Kind,
    ) -> Self {
        Self {
            group,
            phi,
            psi,
            a,
            alpha,
            beta,
            b,
            kind,
        }
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn circ(&self, x: Element, y: Element) -> Element {
        linear_op(self.group, self.kind, &self.phi, &self.psi, self.a, x, y)
    }

    pub fn star(&self, x: Element, y: Element) -> Element {
        linear_op(self.group, self.kind, &self.alpha, &self.beta, self.b, x, y)
    }

    /// Tabulates both operations. Automorphisms make both tables Latin.
    pub fn realize(&self) -> Biquasigroup {
        let n = self.group.order();
        let circ = CayleyTable::from_fn(n, |x, y| self.circ(x, y));
        let star = CayleyTable::from_fn(n, |x, y| self.star(x, y));
        debug_assert!(circ.is_latin_square() && star.is_latin_square());
        Biquasigroup { circ, star }
    }
}

/// Free-function form of [`LinearSpec::realize`].
pub fn realize(spec: &LinearSpec<'_>) -> Biquasigroup {
    spec.realize()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: usize) -> FiniteGroup {
        FiniteGroup::from_table(CayleyTable::from_fn(n, |x, y| (x + y) % n)).unwrap()
    }

    fn mul(n: usize, k: usize) -> Permutation {
        Permutation::from_fn(n, |x| (k * x) % n).unwrap()
    }

    #[test]
    fn realize_identity_spec_gives_group_table() {
        let g = zn(3);
        let e = Permutation::identity(3);
        let spec = LinearSpec::new(&g, e.clone(), e.clone(), 0, e.clone(), e, 0, Kind::Middle).unwrap();
        let biq = spec.realize();
        assert_eq!(biq.circ(), g.table());
        assert_eq!(biq.star(), g.table());
    }

    #[test]
    fn realize_subtraction() {
        let g = zn(5);
        let e = Permutation::identity(5);
        let spec = LinearSpec::new(&g, e.clone(), mul(5, 4), 0, e.clone(), e, 0, Kind::Middle).unwrap();
        let expected = CayleyTable::from_fn(5, |x, y| (x + 5 - y) % 5);
        assert_eq!(spec.realize().circ(), &expected);
    }

    #[test]
    fn middle_and_end_agree_on_commutative_groups() {
        let g = zn(5);
        let e = Permutation::identity(5);
        let build = |kind| {
            LinearSpec::new(&g, e.clone(), mul(5, 2), 2, e.clone(), e.clone(), 0, kind)
                .unwrap()
                .realize()
        };
        let middle = build(Kind::Middle);
        let end = build(Kind::End);
        let expected = CayleyTable::from_fn(5, |x, y| (x + 2 * y + 2) % 5);
        assert_eq!(middle.circ(), &expected);
        assert_eq!(end.circ(), &expected);
    }

    #[test]
    fn non_automorphism_rejected() {
        let g = zn(3);
        let e = Permutation::identity(3);
        let shift = Permutation::new(vec![1, 2, 0]).unwrap();
        let err = LinearSpec::new(&g, e.clone(), e.clone(), 0, shift, e, 0, Kind::Middle).unwrap_err();
        assert_eq!(
            err,
            Error::NotAutomorphism {
                map: "alpha",
                x: 0,
                y: 0
            }
        );
    }

    #[test]
    fn biquasigroup_validation() {
        let a = CayleyTable::from_fn(3, |x, y| (x + y) % 3);
        let b = CayleyTable::from_fn(2, |x, y| (x + y) % 2);
        assert!(matches!(
            Biquasigroup::new(a.clone(), b),
            Err(Error::OrderMismatch { .. })
        ));
        let bad = CayleyTable::new(2, vec![0, 1, 0, 1]).unwrap();
        let c = CayleyTable::from_fn(2, |x, y| (x + y) % 2);
        assert!(matches!(
            Biquasigroup::new(c, bad),
            Err(Error::NotLatin { which: "star", .. })
        ));
        assert!(Biquasigroup::single(a).is_ok());
    }
}
