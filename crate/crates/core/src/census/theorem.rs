//! Characterizations of linear biquasigroups, checked against exhaustive
//! censuses of the spec space.
//!
//! Each linear theorem pairs an identity with a predicate on the parameters
//! `(φ, ψ, a, α, β, b)`. The census side realizes every spec and checks the
//! identity on the tables; the predicate side never looks at the tables. The
//! two digest sets must coincide.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use super::space::{Scope, SpecDigest, SpecSpace};
use crate::constructors::{catalog, GroupName};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Permutation};
use crate::identity::{builtin, Builtin, Equation, Op, Program};
use crate::linear::{Kind, LinearSpec};
use crate::table::Element;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TheoremId {
    T11,
    T22,
    T23,
    T24,
    T24a,
    T25,
    T26,
    T26lin,
    T27,
    T28,
    T29struct,
    T29lin,
    P5lin,
    MED7,
    MED7zn,
    BOOL,
    SEC10,
}

impl TheoremId {
    pub const ALL: [TheoremId; 17] = [
        TheoremId::T11,
        TheoremId::T22,
        TheoremId::T23,
        TheoremId::T24,
        TheoremId::T24a,
        TheoremId::T25,
        TheoremId::T26,
        TheoremId::T26lin,
        TheoremId::T27,
        TheoremId::T28,
        TheoremId::T29struct,
        TheoremId::T29lin,
        TheoremId::P5lin,
        TheoremId::MED7,
        TheoremId::MED7zn,
        TheoremId::BOOL,
        TheoremId::SEC10,
    ];

    /// Theorems decided by comparing a census with a parameter predicate.
    pub const LINEAR: [TheoremId; 12] = [
        TheoremId::T22,
        TheoremId::T23,
        TheoremId::T24a,
        TheoremId::P5lin,
        TheoremId::T26lin,
        TheoremId::T27,
        TheoremId::T28,
        TheoremId::T29lin,
        TheoremId::MED7,
        TheoremId::MED7zn,
        TheoremId::BOOL,
        TheoremId::SEC10,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::T11 => "t11",
            TheoremId::T22 => "t22",
            TheoremId::T23 => "t23",
            TheoremId::T24 => "t24",
            TheoremId::T24a => "t24a",
            TheoremId::T25 => "t25",
            TheoremId::T26 => "t26",
            TheoremId::T26lin => "t26lin",
            TheoremId::T27 => "t27",
            TheoremId::T28 => "t28",
            TheoremId::T29struct => "t29struct",
            TheoremId::T29lin => "t29lin",
            TheoremId::P5lin => "p5lin",
            TheoremId::MED7 => "med7",
            TheoremId::MED7zn => "med7zn",
            TheoremId::BOOL => "bool",
            TheoremId::SEC10 => "sec10",
        }
    }

    /// The identity the theorem characterizes. `BOOL` covers all of
    /// `e1`–`e9` and `SEC10` all of `e2`–`e9`; both return `None`.
    pub fn identity(self) -> Option<Builtin> {
        match self {
            TheoremId::T11 | TheoremId::T22 => Some(Builtin::E2),
            TheoremId::T23 => Some(Builtin::E3),
            TheoremId::T24 | TheoremId::T24a => Some(Builtin::E4),
            TheoremId::T25 | TheoremId::P5lin => Some(Builtin::E5),
            TheoremId::T26 | TheoremId::T26lin => Some(Builtin::E6),
            TheoremId::T27 | TheoremId::MED7 | TheoremId::MED7zn => Some(Builtin::E7),
            TheoremId::T28 => Some(Builtin::E8),
            TheoremId::T29struct | TheoremId::T29lin => Some(Builtin::E9),
            TheoremId::BOOL | TheoremId::SEC10 => None,
        }
    }

    pub fn is_linear(self) -> bool {
        Self::LINEAR.contains(&self)
    }

    /// Whether the predicate includes commutativity of the group.
    pub fn demands_commutativity(self) -> bool {
        self.is_linear() && self != TheoremId::SEC10
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == lower)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

/// Census parallelism.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CensusOptions {
    pub workers: usize,
}

impl CensusOptions {
    pub fn with_workers(workers: usize) -> Self {
        Self {
            workers: workers.max(1),
        }
    }

    /// `BIQ_WORKERS` if set and positive, else the available parallelism.
    pub fn from_env() -> Self {
        let workers = std::env::var("BIQ_WORKERS")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&w| w > 0)
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
        Self::with_workers(workers)
    }
}

impl Default for CensusOptions {
    fn default() -> Self {
        Self::from_env()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub group: String,
    pub identity: String,
    pub kind: Kind,
    pub scope: Scope,
    pub total_specs: usize,
    pub satisfying: Vec<SpecDigest>,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Scope used for an identity: `Circ`-only identities vary only `(φ, ψ, a)`.
pub fn scope_for(eq: &Equation) -> Scope {
    fn uses_star(t: &crate::identity::Term) -> bool {
        match t {
            crate::identity::Term::Var(_) => false,
            crate::identity::Term::Apply(op, l, r) => *op == Op::Star || uses_star(l) || uses_star(r),
        }
    }
    if uses_star(eq.lhs()) || uses_star(eq.rhs()) {
        Scope::Full
    } else {
        Scope::CircOnly
    }
}

/// Satisfying digests of `eq` over the linear specs of `g`.
pub fn census_on(g: &FiniteGroup, eq: &Equation, kind: Kind, opts: &CensusOptions) -> Result<(usize, Vec<SpecDigest>)> {
    let space = SpecSpace::new(g, kind, scope_for(eq))?;
    let found = space.search(&Program::compile(eq), opts.workers, |_, _, _| true);
    Ok((space.len(), found))
}

pub fn run_census(group: &GroupName, eq: &Equation, kind: Kind, opts: &CensusOptions) -> Result<CensusReport> {
    let start = Instant::now();
    let g = catalog(group)?;
    let (total_specs, satisfying) = census_on(&g, eq, kind, opts)?;
    Ok(CensusReport {
        group: group.to_string(),
        identity: eq.render(),
        kind,
        scope: scope_for(eq),
        total_specs,
        satisfying,
        elapsed: start.elapsed(),
    })
}

fn all(n: usize, f: impl Fn(Element) -> bool) -> bool {
    (0..n).all(f)
}

/// Whether `spec` lies in the family a linear theorem describes. Every
/// equation is checked pointwise over the carrier.
pub fn predicate(theorem: TheoremId, spec: &LinearSpec<'_>) -> Result<bool> {
    let g = spec.group();
    let n = g.order();
    if !theorem.is_linear() {
        return Err(Error::NotApplicable(format!(
            "{theorem} is a structural theorem; use verify_structural"
        )));
    }
    if theorem == TheoremId::SEC10 {
        return Err(Error::NotApplicable(
            "sec10 compares two censuses and has no parameter predicate".into(),
        ));
    }
    if theorem == TheoremId::MED7zn {
        return med7_zn(spec);
    }
    if !g.is_commutative() {
        return Ok(false);
    }
    let (phi, psi, alpha, beta) = (&spec.phi, &spec.psi, &spec.alpha, &spec.beta);
    let (a, b) = (spec.a, spec.b);
    let is_eps = |p: &Permutation| p.is_identity();
    let is_minus_eps = |p: &Permutation| all(n, |z| p.apply(z) == g.neg(z));
    let ok = match theorem {
        // x∘y = x + ψy + a, x*y = αx - αy + b
        TheoremId::T22 => is_eps(phi) && all(n, |z| beta.apply(z) == g.neg(alpha.apply(z))),
        // x∘y = x - y + a
        TheoremId::T23 => is_eps(phi) && is_minus_eps(psi),
        // x∘y = φx + a - φy, x*y = φ²x + a - φ²y
        TheoremId::T24a => {
            b == a
                && all(n, |z| {
                    let phi2 = phi.apply(phi.apply(z));
                    psi.apply(z) == g.neg(phi.apply(z)) && alpha.apply(z) == phi2 && beta.apply(z) == g.neg(phi2)
                })
        }
        // x∘y = x + ψy - ψb, x*y = x - y + b
        TheoremId::P5lin => is_eps(phi) && is_eps(alpha) && is_minus_eps(beta) && a == g.neg(psi.apply(b)),
        // x∘y = φx - φy + a, x*y = x - y + a
        TheoremId::T26lin => {
            b == a && is_eps(alpha) && is_minus_eps(beta) && all(n, |z| psi.apply(z) == g.neg(phi.apply(z)))
        }
        // x∘y = φx + ψy + a, x*y = φ²x + ψφ²y + b, φψ + ψ²φ² = 0, φa + a + ψb = b
        TheoremId::T27 => {
            g.add(g.add(phi.apply(a), a), psi.apply(b)) == b
                && all(n, |z| {
                    let phi2 = phi.apply(phi.apply(z));
                    alpha.apply(z) == phi2
                        && beta.apply(z) == psi.apply(phi2)
                        && g.add(phi.apply(psi.apply(z)), psi.apply(psi.apply(phi2))) == g.identity()
                })
        }
        // x∘y = φx - y + a, x*y = x - y + b
        TheoremId::T28 => is_minus_eps(psi) && is_eps(alpha) && is_minus_eps(beta),
        // x∘y = x - β²y - βb, x*y = x + βy + b
        TheoremId::T29lin => {
            is_eps(phi)
                && is_eps(alpha)
                && a == g.neg(beta.apply(b))
                && all(n, |z| psi.apply(z) == g.neg(beta.apply(beta.apply(z))))
        }
        // φψ = ψφ, φψ + ε = 0, x∘y = φx + ψy + c, x*y = φ²x - φy + d, φc + ψd + c = d
        TheoremId::MED7 => {
            g.add(g.add(phi.apply(a), psi.apply(b)), a) == b
                && all(n, |z| {
                    let phi_psi = phi.apply(psi.apply(z));
                    phi_psi == psi.apply(phi.apply(z))
                        && g.add(phi_psi, z) == g.identity()
                        && alpha.apply(z) == phi.apply(phi.apply(z))
                        && beta.apply(z) == g.neg(phi.apply(z))
                })
        }
        // (Q, x - y, +) over a Boolean group
        TheoremId::BOOL => is_inverse_op_form(spec) && g.is_boolean(),
        _ => unreachable!("non-linear theorems handled above"),
    };
    Ok(ok)
}

/// `φ = α = β = ε`, `ψ = -ε`, `a = b = 0`.
fn is_inverse_op_form(spec: &LinearSpec<'_>) -> bool {
    let g = spec.group();
    spec.phi.is_identity()
        && spec.alpha.is_identity()
        && spec.beta.is_identity()
        && spec.a == g.identity()
        && spec.b == g.identity()
        && all(g.order(), |z| spec.psi.apply(z) == g.neg(z))
}

/// Integer form over `Z_n`: `x∘y = [ax + by + c]`, `x*y = [a²x - ay + d]`,
/// `[ab + 1] = 0`, `[ac + bd + c] = d`.
fn med7_zn(spec: &LinearSpec<'_>) -> Result<bool> {
    let g = spec.group();
    let n = g.order();
    let cyclic = (0..n).all(|x| (0..n).all(|y| g.add(x, y) == (x + y) % n));
    if !cyclic {
        return Err(Error::NotApplicable("med7zn applies only to the canonical Z_n".into()));
    }
    let mult = |p: &Permutation| if n == 1 { 0 } else { p.apply(1) };
    let (a, b) = (mult(&spec.phi), mult(&spec.psi));
    let (c, d) = (spec.a, spec.b);
    let (alpha, beta) = (mult(&spec.alpha), mult(&spec.beta));
    Ok((a * b + 1) % n == 0 && (a * c + b * d + c) % n == d && alpha == (a * a) % n && beta == (n - a) % n)
}

/// A digest in a theorem check, tagged with the identity and kind it came
/// from. `identity` is `None` for the all-nine check of `BOOL`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TheoremDigest {
    pub identity: Option<Builtin>,
    pub kind: Kind,
    pub spec: SpecDigest,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremCheck {
    pub theorem: TheoremId,
    pub group: String,
    pub census_set: Vec<TheoremDigest>,
    pub predicate_set: Vec<TheoremDigest>,
    pub agree: bool,
    /// Symmetric difference of the two sets.
    pub witnesses: Vec<TheoremDigest>,
    /// For `t29lin`: how the right neutral element read off each satisfying
    /// spec's tables compares with `-β⁻¹b`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub neutral_check: Option<NeutralCheck>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NeutralCheck {
    pub specs: usize,
    /// Specs whose two tables share a right neutral element.
    pub with_common_neutral: usize,
    /// Specs where that element equals `-β⁻¹b`.
    pub matching_minus_beta_inv_b: usize,
}

/// The common right neutral element of both operations of `spec`, and the
/// element `-β⁻¹b`.
pub fn t29lin_neutral(spec: &LinearSpec<'_>) -> (Option<Element>, Element) {
    let g = spec.group();
    let n = g.order();
    let neutral = (0..n).find(|&e| (0..n).all(|x| spec.circ(x, e) == x && spec.star(x, e) == x));
    (neutral, g.neg(spec.beta.inverse().apply(spec.b)))
}

impl TheoremCheck {
    fn from_sets(
        theorem: TheoremId,
        group: String,
        census: BTreeSet<TheoremDigest>,
        predicate: BTreeSet<TheoremDigest>,
    ) -> Self {
        let witnesses: Vec<_> = census.symmetric_difference(&predicate).copied().collect();
        Self {
            theorem,
            group,
            agree: witnesses.is_empty(),
            census_set: census.into_iter().collect(),
            predicate_set: predicate.into_iter().collect(),
            witnesses,
            neutral_check: None,
        }
    }
}

fn medial_bytes(t: &[u8], n: usize) -> bool {
    Program::compile(&builtin(Builtin::MedialCirc)).holds(n, |_, x, y| t[x * n + y] as usize)
}

pub fn verify_theorem(theorem: TheoremId, group: &GroupName, opts: &CensusOptions) -> Result<TheoremCheck> {
    let g = catalog(group)?;
    verify_theorem_on(theorem, &g, &group.to_string(), opts)
}

/// [`verify_theorem`] over an explicit group; `label` fills the report's
/// group field.
pub fn verify_theorem_on(
    theorem: TheoremId,
    g: &FiniteGroup,
    label: &str,
    opts: &CensusOptions,
) -> Result<TheoremCheck> {
    if !theorem.is_linear() {
        return Err(Error::NotApplicable(format!(
            "{theorem} is a structural theorem; use verify_structural"
        )));
    }
    if theorem == TheoremId::SEC10 {
        return verify_sec10(g, label, opts);
    }
    let n = g.order();
    let tag = |spec| TheoremDigest {
        identity: theorem.identity(),
        kind: Kind::Middle,
        spec,
    };

    let (census, space) = match theorem {
        TheoremId::BOOL => {
            let space = SpecSpace::new(g, Kind::Middle, Scope::Full)?;
            let programs: Vec<Program> = Builtin::NUMBERED
                .iter()
                .map(|&id| Program::compile(&builtin(id)))
                .collect();
            // The family has at most one member; find it by shape, then decide
            // the nine identities on its tables.
            let census: Vec<SpecDigest> = (0..space.len())
                .map(|i| space.digest(i))
                .filter(|d| is_inverse_op_form(&space.spec(d)))
                .filter(|d| {
                    let (c, s) = space.tables_of(d);
                    programs.iter().all(|p| {
                        p.holds(n, |op, x, y| match op {
                            Op::Circ => c[x * n + y] as usize,
                            Op::Star => s[x * n + y] as usize,
                        })
                    })
                })
                .collect();
            (census, space)
        }
        _ => {
            let eq = builtin(theorem.identity().expect("linear theorems name an identity"));
            let space = SpecSpace::new(g, Kind::Middle, scope_for(&eq))?;
            let medial_filter = matches!(theorem, TheoremId::MED7 | TheoremId::MED7zn);
            let census = space.search(&Program::compile(&eq), opts.workers, |_, c, s| {
                !medial_filter || (medial_bytes(c, n) && medial_bytes(s, n))
            });
            (census, space)
        }
    };

    let mut predicate_set = BTreeSet::new();
    if g.is_commutative() || !theorem.demands_commutativity() {
        for i in 0..space.len() {
            let d = space.digest(i);
            if predicate(theorem, &space.spec(&d))? {
                predicate_set.insert(tag(d));
            }
        }
    }
    let neutral_check = (theorem == TheoremId::T29lin).then(|| {
        let mut check = NeutralCheck {
            specs: census.len(),
            with_common_neutral: 0,
            matching_minus_beta_inv_b: 0,
        };
        for d in &census {
            let (neutral, formula) = t29lin_neutral(&space.spec(d));
            if let Some(e) = neutral {
                check.with_common_neutral += 1;
                if e == formula {
                    check.matching_minus_beta_inv_b += 1;
                }
            }
        }
        check
    });
    let census_set = census.into_iter().map(tag).collect();
    let mut check = TheoremCheck::from_sets(theorem, label.to_string(), census_set, predicate_set);
    check.neutral_check = neutral_check;
    Ok(check)
}

/// End-kind and middle-kind specs satisfying each of `e2`–`e9` realize the
/// same sets of table pairs.
fn verify_sec10(g: &FiniteGroup, label: &str, opts: &CensusOptions) -> Result<TheoremCheck> {
    let mut census = BTreeSet::new();
    let mut predicate = BTreeSet::new();
    for id in &Builtin::NUMBERED[1..] {
        let eq = builtin(*id);
        let program = Program::compile(&eq);
        let middle = SpecSpace::new(g, Kind::Middle, scope_for(&eq))?;
        let end = SpecSpace::new(g, Kind::End, scope_for(&eq))?;
        let found_middle = middle.search(&program, opts.workers, |_, _, _| true);
        let found_end = end.search(&program, opts.workers, |_, _, _| true);
        let tables = |space: &SpecSpace<'_>, found: &[SpecDigest]| -> BTreeSet<(Vec<u8>, Vec<u8>)> {
            found
                .iter()
                .map(|d| {
                    let (c, s) = space.tables_of(d);
                    (c.to_vec(), s.to_vec())
                })
                .collect()
        };
        let middle_tables = tables(&middle, &found_middle);
        let end_tables = tables(&end, &found_end);
        let tag = |kind, spec| TheoremDigest {
            identity: Some(*id),
            kind,
            spec,
        };
        for (kind, space, found, other) in [
            (Kind::Middle, &middle, &found_middle, &end_tables),
            (Kind::End, &end, &found_end, &middle_tables),
        ] {
            for d in found {
                census.insert(tag(kind, *d));
                let (c, s) = space.tables_of(d);
                if other.contains(&(c.to_vec(), s.to_vec())) {
                    predicate.insert(tag(kind, *d));
                }
            }
        }
    }
    Ok(TheoremCheck::from_sets(
        TheoremId::SEC10,
        label.to_string(),
        census,
        predicate,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> CensusOptions {
        CensusOptions::with_workers(1)
    }

    fn zn(n: usize) -> FiniteGroup {
        catalog(&GroupName::Zn(n)).unwrap()
    }

    fn mul(n: usize, k: usize) -> Permutation {
        Permutation::from_fn(n, |x| (k * x) % n).unwrap()
    }

    #[test]
    fn census_examples() {
        let r = run_census(&GroupName::Zn(2), &builtin(Builtin::E2), Kind::Middle, &opts()).unwrap();
        assert_eq!((r.total_specs, r.satisfying.len()), (4, 4));
        let r = run_census(&GroupName::Zn(5), &builtin(Builtin::E4), Kind::Middle, &opts()).unwrap();
        assert_eq!((r.total_specs, r.satisfying.len()), (6400, 20));
        assert!(r.satisfying.windows(2).all(|w| w[0] < w[1]));
        let r = run_census(&GroupName::S3, &builtin(Builtin::E2), Kind::Middle, &opts()).unwrap();
        assert!(r.satisfying.is_empty());
    }

    #[test]
    fn predicate_examples() {
        let z5 = zn(5);
        let e = Permutation::identity(5);
        let spec = |psi: Permutation, a| {
            LinearSpec::new(&z5, e.clone(), psi.clone(), a, e.clone(), psi, a, Kind::Middle).unwrap()
        };
        assert!(predicate(TheoremId::T23, &spec(mul(5, 4), 2)).unwrap());
        assert!(!predicate(TheoremId::T23, &spec(mul(5, 2), 0)).unwrap());

        // ∘ = x - 4y, * = x + 2y: β = 2·, b = 0, β² = 4·.
        let s = LinearSpec::new(&z5, e.clone(), mul(5, 1), 0, e.clone(), mul(5, 2), 0, Kind::Middle).unwrap();
        let biq = s.realize();
        assert!((0..5).all(|x| (0..5).all(|y| biq.circ().get(x, y) == (x + 25 - 4 * y) % 5)));
        assert!(predicate(TheoremId::T29lin, &s).unwrap());

        assert!(predicate(TheoremId::T11, &s).is_err());
        assert!(predicate(TheoremId::SEC10, &s).is_err());
    }

    #[test]
    fn verify_examples() {
        let check = verify_theorem(TheoremId::T22, &GroupName::Zn(4), &opts()).unwrap();
        assert!(check.agree);
        assert!(!check.census_set.is_empty());
        let check = verify_theorem(TheoremId::T22, &GroupName::S3, &opts()).unwrap();
        assert!(check.agree && check.census_set.is_empty() && check.predicate_set.is_empty());
    }

    #[test]
    fn t27_over_z5_nonempty_iff_automorphism_equation_solvable() {
        let z5 = zn(5);
        let auts = z5.automorphisms();
        // Independent count: pairs of multipliers with p·s + s²·p² ≡ 0.
        let solvable = (1..5).any(|p| (1..5).any(|s| (p * s + s * s * p * p) % 5 == 0));
        assert_eq!(auts.len(), 4);
        let check = verify_theorem(TheoremId::T27, &GroupName::Zn(5), &opts()).unwrap();
        assert!(check.agree);
        assert_eq!(!check.census_set.is_empty(), solvable);
    }

    #[test]
    fn med7_matches_t27_on_cyclic_groups() {
        for n in 2..=6 {
            let t27 = verify_theorem(TheoremId::T27, &GroupName::Zn(n), &opts()).unwrap();
            let med7 = verify_theorem(TheoremId::MED7, &GroupName::Zn(n), &opts()).unwrap();
            let med7zn = verify_theorem(TheoremId::MED7zn, &GroupName::Zn(n), &opts()).unwrap();
            assert!(t27.agree && med7.agree && med7zn.agree, "Z_{n}");
            // Automorphisms of Z_n commute, so every linear e7 model is medial.
            let strip = |c: &TheoremCheck| c.census_set.iter().map(|d| d.spec).collect::<Vec<_>>();
            assert_eq!(strip(&t27), strip(&med7), "Z_{n}");
            assert_eq!(med7.census_set, med7zn.census_set);
        }
    }

    #[test]
    fn med7zn_rejects_other_groups() {
        assert!(verify_theorem(TheoremId::MED7zn, &GroupName::Z2xZ2, &opts()).is_err());
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let one = verify_theorem(TheoremId::T24a, &GroupName::Z2xZ2, &CensusOptions::with_workers(1)).unwrap();
        let four = verify_theorem(TheoremId::T24a, &GroupName::Z2xZ2, &CensusOptions::with_workers(4)).unwrap();
        assert_eq!(
            serde_json::to_string(&one).unwrap(),
            serde_json::to_string(&four).unwrap()
        );
    }

    #[test]
    fn theorem_names_parse() {
        for t in TheoremId::ALL {
            assert_eq!(t.name().parse::<TheoremId>().unwrap(), t);
        }
        assert!("T24A".parse::<TheoremId>().is_ok());
        assert!("t99".parse::<TheoremId>().is_err());
    }
}
