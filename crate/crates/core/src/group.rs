//! Permutations and finite groups given by Cayley tables.
//!
//! Groups are written additively throughout (`+`, `-x`), matching the way
//! linear quasigroups are parameterized, even when the group is not abelian.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::table::{CayleyTable, Element};

/// A bijection of `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<Element>,
}

impl Permutation {
    pub fn new(images: Vec<Element>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n {
                return Err(Error::NotAPermutation {
                    order: n,
                    reason: format!("image {v} out of range"),
                });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutation {
                    order: n,
                    reason: format!("image {v} repeated"),
                });
            }
        }
        Ok(Self { images })
    }

    /// The identity map ε.
    pub fn identity(order: usize) -> Self {
        Self {
            images: (0..order).collect(),
        }
    }

    pub fn from_fn(order: usize, f: impl Fn(Element) -> Element) -> Result<Self> {
        Self::new((0..order).map(f).collect())
    }

    pub fn order(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: Element) -> Element {
        self.images[x]
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Self { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// A group structure on `0..n`, written additively.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteGroup {
    table: CayleyTable,
    identity: Element,
    inverse: Vec<Element>,
    commutative: bool,
}

/// Returns the group view of `t`, or `None` if `t` is not a group table.
pub fn group_structure(t: &CayleyTable) -> Option<FiniteGroup> {
    FiniteGroup::from_table(t.clone())
}

impl FiniteGroup {
    pub fn from_table(table: CayleyTable) -> Option<Self> {
        let n = table.order();
        let identity = (0..n).find(|&e| (0..n).all(|x| table.get(e, x) == x && table.get(x, e) == x))?;
        let mut inverse = Vec::with_capacity(n);
        for x in 0..n {
            let inv = (0..n).find(|&y| table.get(x, y) == identity && table.get(y, x) == identity)?;
            inverse.push(inv);
        }
        for x in 0..n {
            for y in 0..n {
                let xy = table.get(x, y);
                for z in 0..n {
                    if table.get(xy, z) != table.get(x, table.get(y, z)) {
                        return None;
                    }
                }
            }
        }
        let commutative = table.is_commutative();
        Some(Self {
            table,
            identity,
            inverse,
            commutative,
        })
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    /// The neutral element, written `0`.
    pub fn identity(&self) -> Element {
        self.identity
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    #[inline]
    pub fn add(&self, x: Element, y: Element) -> Element {
        self.table.get(x, y)
    }

    #[inline]
    pub fn neg(&self, x: Element) -> Element {
        self.inverse[x]
    }

    /// `x - y`, defined as `x + (-y)`.
    #[inline]
    pub fn sub(&self, x: Element, y: Element) -> Element {
        self.add(x, self.neg(y))
    }

    /// `k·x` for a non-negative integer `k`.
    pub fn times(&self, k: usize, x: Element) -> Element {
        (0..k).fold(self.identity, |acc, _| self.add(acc, x))
    }

    /// Elements commuting with every element.
    pub fn center(&self) -> Vec<Element> {
        let n = self.order();
        (0..n)
            .filter(|&c| (0..n).all(|x| self.add(c, x) == self.add(x, c)))
            .collect()
    }

    /// True iff the group is commutative and `x + x = 0` for all `x`.
    pub fn is_boolean(&self) -> bool {
        self.commutative && (0..self.order()).all(|x| self.add(x, x) == self.identity)
    }

    /// `-p`: the map `x ↦ -(p x)`. An automorphism only for abelian groups.
    pub fn negate(&self, p: &Permutation) -> Permutation {
        Permutation {
            images: p.images.iter().map(|&v| self.neg(v)).collect(),
        }
    }

    /// First pair `(x, y)` with `p(x+y) ≠ p(x)+p(y)`, if any.
    pub fn homomorphism_violation(&self, p: &Permutation) -> Option<(Element, Element)> {
        let n = self.order();
        if p.order() != n {
            return Some((0, 0));
        }
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| p.apply(self.add(x, y)) != self.add(p.apply(x), p.apply(y)))
    }

    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        self.homomorphism_violation(p).is_none()
    }

    /// Validates `p` as an automorphism, naming it `map` in the error.
    pub fn check_automorphism(&self, map: &'static str, p: &Permutation) -> Result<()> {
        if p.order() != self.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: p.order(),
            });
        }
        match self.homomorphism_violation(p) {
            Some((x, y)) => Err(Error::NotAutomorphism { map, x, y }),
            None => Ok(()),
        }
    }

    /// A generating set chosen greedily by smallest index.
    pub fn generators(&self) -> Vec<Element> {
        let n = self.order();
        let mut gens = Vec::new();
        let mut reached = vec![false; n];
        reached[self.identity] = true;
        let mut count = 1;
        for g in 0..n {
            if reached[g] {
                continue;
            }
            gens.push(g);
            // Closure of the reached set under right multiplication by all gens.
            let mut queue: VecDeque<Element> = (0..n).filter(|&x| reached[x]).collect();
            while let Some(x) = queue.pop_front() {
                for &h in &gens {
                    let y = self.add(x, h);
                    if !reached[y] {
                        reached[y] = true;
                        count += 1;
                        queue.push_back(y);
                    }
                }
            }
            if count == n {
                break;
            }
        }
        gens
    }

    /// All automorphisms, sorted lexicographically by image array.
    ///
    /// Candidates are determined by the images of a generating set; each
    /// assignment of distinct generator images is extended along the Cayley
    /// graph and discarded on the first inconsistency.
    pub fn automorphisms(&self) -> Vec<Permutation> {
        let gens = self.generators();
        let mut found = Vec::new();
        let mut images = vec![0; gens.len()];
        self.search_generator_images(&gens, 0, &mut images, &mut found);
        found.sort();
        found
    }

    fn search_generator_images(
        &self,
        gens: &[Element],
        depth: usize,
        images: &mut Vec<Element>,
        found: &mut Vec<Permutation>,
    ) {
        if depth == gens.len() {
            if let Some(p) = self.extend_from_generators(gens, images) {
                found.push(p);
            }
            return;
        }
        for candidate in 0..self.order() {
            if candidate == self.identity || images[..depth].contains(&candidate) {
                continue;
            }
            images[depth] = candidate;
            self.search_generator_images(gens, depth + 1, images, found);
        }
    }

    fn extend_from_generators(&self, gens: &[Element], images: &[Element]) -> Option<Permutation> {
        let n = self.order();
        let mut map: Vec<Option<Element>> = vec![None; n];
        map[self.identity] = Some(self.identity);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            let fx = map[x].expect("queued elements are mapped");
            for (&g, &fg) in gens.iter().zip(images) {
                let y = self.add(x, g);
                let fy = self.add(fx, fg);
                match map[y] {
                    Some(existing) if existing != fy => return None,
                    Some(_) => {}
                    None => {
                        map[y] = Some(fy);
                        queue.push_back(y);
                    }
                }
            }
        }
        let images: Vec<Element> = map.into_iter().collect::<Option<_>>()?;
        Permutation::new(images).ok()
    }
}
