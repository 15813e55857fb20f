//! Finite groups given by full Cayley tables.
//!
//! Elements are the indices `0..n`. All group-theoretic machinery works on
//! these indices; [`Subgroup`] is a membership mask over them.

mod classes;
pub mod isoclinism;
mod ops;

use std::fmt;
use std::sync::OnceLock;

pub use classes::ConjClassPartition;
pub use ops::*;

use crate::error::{Error, Result};

/// Above this order associativity is checked on a deterministic sample of triples.
pub const FULL_ASSOCIATIVITY_LIMIT: usize = 512;
const SAMPLED_TRIPLES: usize = 200_000;

pub struct FiniteGroup {
    name: String,
    n: usize,
    table: Vec<u32>,
    identity: usize,
    inverse: Vec<usize>,
    element_order: Vec<usize>,
    generators: Vec<usize>,
    classes: OnceLock<ConjClassPartition>,
}

impl Clone for FiniteGroup {
    fn clone(&self) -> Self {
        FiniteGroup {
            name: self.name.clone(),
            n: self.n,
            table: self.table.clone(),
            identity: self.identity,
            inverse: self.inverse.clone(),
            element_order: self.element_order.clone(),
            generators: self.generators.clone(),
            classes: self.classes.clone(),
        }
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.n)
            .finish()
    }
}

/// Validates a Cayley table and builds the group.
///
/// Checks the Latin-square property, the identity, and associativity (on
/// every triple up to [`FULL_ASSOCIATIVITY_LIMIT`], sampled above it).
pub fn make_group(table: &[Vec<usize>], name: impl Into<String>) -> Result<FiniteGroup> {
    let n = table.len();
    if n == 0 {
        return Err(Error::NotAGroup {
            axiom: "nonempty",
            witness: vec![],
        });
    }
    let mut flat = Vec::with_capacity(n * n);
    for (a, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotAGroup {
                axiom: "square table",
                witness: vec![a],
            });
        }
        for (b, &c) in row.iter().enumerate() {
            if c >= n {
                return Err(Error::NotAGroup {
                    axiom: "closure",
                    witness: vec![a, b],
                });
            }
            flat.push(c as u32);
        }
    }
    FiniteGroup::from_flat(flat, n, name.into())
}

impl FiniteGroup {
    fn from_flat(table: Vec<u32>, n: usize, name: String) -> Result<FiniteGroup> {
        // Latin square: every row and column is a permutation.
        let mut seen = vec![usize::MAX; n];
        for a in 0..n {
            for b in 0..n {
                let c = table[a * n + b] as usize;
                if seen[c] == a {
                    return Err(Error::NotAGroup {
                        axiom: "latin rows",
                        witness: vec![a, b],
                    });
                }
                seen[c] = a;
            }
        }
        seen.iter_mut().for_each(|s| *s = usize::MAX);
        for b in 0..n {
            for a in 0..n {
                let c = table[a * n + b] as usize;
                if seen[c] == b {
                    return Err(Error::NotAGroup {
                        axiom: "latin columns",
                        witness: vec![a, b],
                    });
                }
                seen[c] = b;
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e * n + x] as usize == x && table[x * n + e] as usize == x))
            .ok_or(Error::NotAGroup {
                axiom: "identity",
                witness: vec![],
            })?;
        let mul = |a: usize, b: usize| table[a * n + b] as usize;
        if n <= FULL_ASSOCIATIVITY_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    let ab = mul(a, b);
                    for c in 0..n {
                        if mul(ab, c) != mul(a, mul(b, c)) {
                            return Err(Error::NotAGroup {
                                axiom: "associativity",
                                witness: vec![a, b, c],
                            });
                        }
                    }
                }
            }
        } else {
            let mut state = 0x9e37_79b9_7f4a_7c15u64 ^ n as u64;
            for _ in 0..SAMPLED_TRIPLES {
                let [a, b, c] = [0; 3].map(|_| (splitmix(&mut state) % n as u64) as usize);
                if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                    return Err(Error::NotAGroup {
                        axiom: "associativity",
                        witness: vec![a, b, c],
                    });
                }
            }
        }
        let mut inverse = vec![0; n];
        for a in 0..n {
            // Latin rows guarantee a unique right inverse.
            let b = (0..n).find(|&b| mul(a, b) == identity).unwrap();
            if mul(b, a) != identity {
                return Err(Error::NotAGroup {
                    axiom: "inverse",
                    witness: vec![a, b],
                });
            }
            inverse[a] = b;
        }
        let element_order = (0..n)
            .map(|g| {
                let mut k = 1;
                let mut x = g;
                while x != identity {
                    x = mul(x, g);
                    k += 1;
                }
                k
            })
            .collect();
        let mut group = FiniteGroup {
            name,
            n,
            table,
            identity,
            inverse,
            element_order,
            generators: Vec::new(),
            classes: OnceLock::new(),
        };
        group.generators = group.greedy_generators();
        Ok(group)
    }

    /// Replaces the recorded generating set. Fails if `gens` does not generate.
    pub fn with_generators(mut self, gens: Vec<usize>) -> Result<Self> {
        if gens.iter().any(|&g| g >= self.n) || generate(&self, &gens).order() != self.n {
            return Err(Error::HypothesisViolation(
                "given elements do not generate the group".into(),
            ));
        }
        self.generators = gens;
        Ok(self)
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut mask = vec![false; self.n];
        mask[self.identity] = true;
        let mut size = 1;
        while size < self.n {
            // Prefer an element of maximal order among those not yet generated.
            let g = (0..self.n)
                .filter(|&g| !mask[g])
                .max_by_key(|&g| (self.element_order[g], std::cmp::Reverse(g)))
                .unwrap();
            gens.push(g);
            let sub = generate(self, &gens);
            mask = sub.mask().to_vec();
            size = sub.order();
        }
        gens
    }

    #[inline]
    pub fn name(&self) -> &str {
        &self.name
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    #[inline]
    pub fn element_order(&self, a: usize) -> usize {
        self.element_order[a]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn pow(&self, g: usize, k: i64) -> usize {
        let ord = self.element_order[g] as i64;
        let k = k.rem_euclid(ord);
        let mut acc = self.identity;
        for _ in 0..k {
            acc = self.mul(acc, g);
        }
        acc
    }

    /// `g x g^{-1}`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inverse[g])
    }

    /// `[a, b] = a b a^{-1} b^{-1}`.
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inverse[a], self.inverse[b]))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, &a)| self.generators[i + 1..].iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|a| (0..self.n).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    /// Raw table bytes in row-major little-endian `u32`, for hashing.
    pub fn table_bytes(&self) -> Vec<u8> {
        self.table.iter().flat_map(|x| x.to_le_bytes()).collect()
    }

    pub fn conjugacy_classes(&self) -> &ConjClassPartition {
        self.classes.get_or_init(|| ConjClassPartition::compute(self))
    }
}

pub(crate) fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// A subgroup of a [`FiniteGroup`], stored as a sorted element list plus a mask.
#[derive(Clone)]
pub struct Subgroup {
    elements: Vec<usize>,
    mask: Vec<bool>,
    normal: bool,
    /// Elements whose closure produced this subgroup.
    generators: Vec<usize>,
}

// Equality is by membership only; generating sets may differ.
impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.mask == other.mask
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.mask.hash(state);
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, normal {})", self.order(), self.normal)
    }
}

impl Subgroup {
    /// Builds a subgroup from a closed mask. Callers guarantee closure.
    pub(crate) fn from_mask(g: &FiniteGroup, mask: Vec<bool>, generators: Vec<usize>) -> Subgroup {
        let elements: Vec<usize> = (0..mask.len()).filter(|&i| mask[i]).collect();
        debug_assert!(mask[g.identity()]);
        debug_assert_eq!(g.order() % elements.len(), 0);
        let normal = g
            .generators()
            .iter()
            .all(|&s| elements.iter().all(|&h| mask[g.conj(s, h)]));
        Subgroup {
            elements,
            mask,
            normal,
            generators,
        }
    }

    /// Validates that `elements` form a subgroup of `g`.
    pub fn from_elements(g: &FiniteGroup, elements: &[usize]) -> Result<Subgroup> {
        let mut mask = vec![false; g.order()];
        for &e in elements {
            if e >= g.order() {
                return Err(Error::HypothesisViolation(format!("{e} is not an element")));
            }
            mask[e] = true;
        }
        if !mask[g.identity()] {
            return Err(Error::HypothesisViolation("subset misses the identity".into()));
        }
        let members: Vec<usize> = (0..mask.len()).filter(|&i| mask[i]).collect();
        for &a in &members {
            if !mask[g.inv(a)] {
                return Err(Error::HypothesisViolation("subset not closed under inverses".into()));
            }
            for &b in &members {
                if !mask[g.mul(a, b)] {
                    return Err(Error::HypothesisViolation(
                        "subset not closed under products".into(),
                    ));
                }
            }
        }
        Ok(Subgroup::from_mask(g, mask, members))
    }

    pub fn whole(g: &FiniteGroup) -> Subgroup {
        Subgroup::from_mask(g, vec![true; g.order()], g.generators().to_vec())
    }

    pub fn trivial(g: &FiniteGroup) -> Subgroup {
        let mut mask = vec![false; g.order()];
        mask[g.identity()] = true;
        Subgroup::from_mask(g, mask, Vec::new())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    #[inline]
    pub fn contains(&self, g: usize) -> bool {
        self.mask[g]
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn parent_order(&self) -> usize {
        self.mask.len()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.mask[x])
    }

    pub fn index(&self) -> usize {
        self.mask.len() / self.elements.len()
    }
}
