//! The space of linear specs over a fixed group, and exhaustive search of it.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Permutation};
use crate::identity::{Op, Program};
use crate::linear::{linear_op, Kind, LinearSpec};

/// Largest group order a census accepts.
pub const MAX_CENSUS_ORDER: usize = 8;
/// Largest number of spec points a census will enumerate.
pub const MAX_SPECS: u128 = 100_000_000;

/// Index tuple of a spec: automorphisms by position in the sorted
/// automorphism list, constants as elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SpecDigest {
    pub phi: usize,
    pub psi: usize,
    pub a: usize,
    pub alpha: usize,
    pub beta: usize,
    pub b: usize,
}

impl SpecDigest {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.phi, self.psi, self.a, self.alpha, self.beta, self.b
        )
    }
}

/// Which part of the spec varies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    /// All `(φ, ψ, a, α, β, b)`.
    Full,
    /// Only `(φ, ψ, a)`; the star operation repeats `∘`, so the digest has
    /// `α = φ`, `β = ψ`, `b = a`.
    CircOnly,
}

impl std::fmt::Display for Scope {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Scope::Full => "full",
            Scope::CircOnly => "circ_only",
        })
    }
}

/// Every linear spec over one group, in index order.
pub struct SpecSpace<'g> {
    group: &'g FiniteGroup,
    kind: Kind,
    scope: Scope,
    auts: Vec<Permutation>,
    /// Row-major table of `φx ⊕ ψy ⊕ c` for each one-operation index.
    tables: Vec<Vec<u8>>,
}

impl<'g> SpecSpace<'g> {
    pub fn new(group: &'g FiniteGroup, kind: Kind, scope: Scope) -> Result<Self> {
        let n = group.order();
        if n > MAX_CENSUS_ORDER {
            return Err(Error::TooLarge {
                order: n,
                limit: MAX_CENSUS_ORDER,
            });
        }
        let auts = group.automorphisms();
        let one_op = (auts.len() * auts.len() * n) as u128;
        let specs = match scope {
            Scope::Full => one_op * one_op,
            Scope::CircOnly => one_op,
        };
        if specs > MAX_SPECS {
            return Err(Error::SpaceTooLarge {
                specs,
                limit: MAX_SPECS,
            });
        }
        let mut tables = Vec::with_capacity(one_op as usize);
        for phi in &auts {
            for psi in &auts {
                for c in 0..n {
                    let mut t = Vec::with_capacity(n * n);
                    for x in 0..n {
                        for y in 0..n {
                            t.push(linear_op(group, kind, phi, psi, c, x, y) as u8);
                        }
                    }
                    tables.push(t);
                }
            }
        }
        Ok(Self {
            group,
            kind,
            scope,
            auts,
            tables,
        })
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn scope(&self) -> Scope {
        self.scope
    }

    pub fn automorphisms(&self) -> &[Permutation] {
        &self.auts
    }

    /// Number of `(φ, ψ, c)` choices for a single operation.
    pub fn one_op_count(&self) -> usize {
        self.tables.len()
    }

    pub fn len(&self) -> usize {
        match self.scope {
            Scope::Full => self.tables.len() * self.tables.len(),
            Scope::CircOnly => self.tables.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn split(&self, one: usize) -> (usize, usize, usize) {
        let n = self.group.order();
        let k = self.auts.len();
        (one / (k * n), (one / n) % k, one % n)
    }

    fn join(&self, f: usize, g: usize, c: usize) -> usize {
        (f * self.auts.len() + g) * self.group.order() + c
    }

    /// Digest for `(∘ index, * index)`.
    pub(crate) fn digest_of(&self, circ: usize, star: usize) -> SpecDigest {
        let (phi, psi, a) = self.split(circ);
        let (alpha, beta, b) = self.split(star);
        SpecDigest {
            phi,
            psi,
            a,
            alpha,
            beta,
            b,
        }
    }

    /// Digest of the `i`-th spec in index order.
    pub fn digest(&self, i: usize) -> SpecDigest {
        match self.scope {
            Scope::Full => self.digest_of(i / self.tables.len(), i % self.tables.len()),
            Scope::CircOnly => self.digest_of(i, i),
        }
    }

    pub(crate) fn indices(&self, d: &SpecDigest) -> (usize, usize) {
        (self.join(d.phi, d.psi, d.a), self.join(d.alpha, d.beta, d.b))
    }

    /// The realized `(∘, *)` table pair for a digest, as raw bytes.
    pub fn tables_of(&self, d: &SpecDigest) -> (&[u8], &[u8]) {
        let (c, s) = self.indices(d);
        (&self.tables[c], &self.tables[s])
    }

    pub fn spec(&self, d: &SpecDigest) -> LinearSpec<'g> {
        let a = &self.auts;
        LinearSpec::new_unchecked(
            self.group,
            a[d.phi].clone(),
            a[d.psi].clone(),
            d.a,
            a[d.alpha].clone(),
            a[d.beta].clone(),
            d.b,
            self.kind,
        )
    }

    pub fn iter(&self) -> impl Iterator<Item = LinearSpec<'g>> + '_ {
        (0..self.len()).map(move |i| self.spec(&self.digest(i)))
    }

    /// Digests (in index order) of specs whose tables satisfy `program`,
    /// further filtered by `keep`.
    pub(crate) fn search(
        &self,
        program: &Program,
        workers: usize,
        keep: impl Fn(&SpecDigest, &[u8], &[u8]) -> bool + Sync,
    ) -> Vec<SpecDigest> {
        let n = self.group.order();
        let count = self.tables.len();
        let scan = |c: usize| -> Vec<SpecDigest> {
            let circ = &self.tables[c];
            let mut regs = Vec::new();
            let mut found = Vec::new();
            let stars: Box<dyn Iterator<Item = usize>> = match self.scope {
                Scope::Full => Box::new(0..count),
                Scope::CircOnly => Box::new(std::iter::once(c)),
            };
            for s in stars {
                let star = &self.tables[s];
                let ok = program.holds_with(n, &mut regs, |op, x, y| match op {
                    Op::Circ => circ[x * n + y] as usize,
                    Op::Star => star[x * n + y] as usize,
                });
                if ok {
                    let d = self.digest_of(c, s);
                    if keep(&d, circ, star) {
                        found.push(d);
                    }
                }
            }
            found
        };
        let run = || -> Vec<SpecDigest> { (0..count).into_par_iter().flat_map_iter(scan).collect() };
        if workers <= 1 {
            (0..count).flat_map(scan).collect()
        } else {
            match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
                Ok(pool) => pool.install(run),
                Err(_) => run(),
            }
        }
    }
}

/// Every spec over `g` of the given kind and scope, in sorted index order.
pub fn enumerate_linear_specs(g: &FiniteGroup, kind: Kind, scope: Scope) -> Result<SpecSpace<'_>> {
    SpecSpace::new(g, kind, scope)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{catalog, GroupName};

    #[test]
    fn space_sizes() {
        let z2 = catalog(&GroupName::Zn(2)).unwrap();
        assert_eq!(enumerate_linear_specs(&z2, Kind::Middle, Scope::Full).unwrap().len(), 4);
        let z5 = catalog(&GroupName::Zn(5)).unwrap();
        assert_eq!(
            enumerate_linear_specs(&z5, Kind::Middle, Scope::Full).unwrap().len(),
            6400
        );
        let z3 = catalog(&GroupName::Zn(3)).unwrap();
        assert_eq!(
            enumerate_linear_specs(&z3, Kind::Middle, Scope::CircOnly)
                .unwrap()
                .len(),
            12
        );
    }

    #[test]
    fn digests_are_sorted_and_realize_consistently() {
        let z3 = catalog(&GroupName::Zn(3)).unwrap();
        let space = enumerate_linear_specs(&z3, Kind::End, Scope::Full).unwrap();
        let digests: Vec<_> = (0..space.len()).map(|i| space.digest(i)).collect();
        assert!(digests.windows(2).all(|w| w[0] < w[1]));
        for (d, spec) in digests.iter().zip(space.iter()) {
            let biq = spec.realize();
            let (c, s) = space.tables_of(d);
            let as_bytes = |t: &crate::table::CayleyTable| t.entries().iter().map(|&v| v as u8).collect::<Vec<_>>();
            assert_eq!(as_bytes(biq.circ()), c);
            assert_eq!(as_bytes(biq.star()), s);
        }
    }

    #[test]
    fn every_spec_realizes_latin_tables() {
        for name in [GroupName::Zn(4), GroupName::S3, GroupName::Z2xZ2] {
            let g = catalog(&name).unwrap();
            for kind in [Kind::Middle, Kind::End] {
                let space = enumerate_linear_specs(&g, kind, Scope::CircOnly).unwrap();
                for spec in space.iter() {
                    let biq = spec.realize();
                    assert!(biq.circ().is_latin_square() && biq.star().is_latin_square());
                }
            }
        }
    }

    #[test]
    fn oversized_spaces_rejected() {
        let z9 = catalog(&GroupName::Zn(9)).unwrap();
        assert!(matches!(
            enumerate_linear_specs(&z9, Kind::Middle, Scope::Full),
            Err(Error::TooLarge { .. })
        ));
        let cube = catalog(&GroupName::Z2Cube).unwrap();
        assert!(matches!(
            enumerate_linear_specs(&cube, Kind::Middle, Scope::Full),
            Err(Error::SpaceTooLarge { .. })
        ));
        assert!(enumerate_linear_specs(&cube, Kind::Middle, Scope::CircOnly).is_ok());
    }
}
