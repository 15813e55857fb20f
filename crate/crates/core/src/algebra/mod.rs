//! The group algebra `F_p G` and its center.
//!
//! Elements of `F_p G` are coefficient vectors indexed by group elements.
//! Central elements are also handled in class coordinates, where the `i`-th
//! entry is the coefficient of the `i`-th class sum.

mod ideals;
mod quotient;
mod radical;
mod witness;

use std::collections::HashMap;

pub use ideals::*;
pub use quotient::*;
pub use witness::*;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fp::{FpMatrix, FpSubspace, PrimeField};
use crate::group::{ConjClassPartition, FiniteGroup};

/// `Σ a_g g`, tied to its algebra by group order and prime.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraElement {
    p: u32,
    coeffs: Vec<u32>,
}

impl AlgebraElement {
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn into_coeffs(self) -> Vec<u32> {
        self.coeffs
    }
}

/// `F_p G` with the class-multiplication structure constants of `Z F_p G`.
#[derive(Clone, Debug)]
pub struct GroupAlgebra {
    group: FiniteGroup,
    field: PrimeField,
    /// For each pair `(i, j)` at `i k + j`, the nonzero `(l, a_ijl mod p)` with
    /// `C_i^+ C_j^+ = Σ_l a_ijl C_l^+`.
    structure: Vec<Vec<(u32, u32)>>,
}

impl GroupAlgebra {
    pub fn new(group: &FiniteGroup, p: u32) -> Result<GroupAlgebra> {
        let field = PrimeField::new(p)?;
        let cl = group.conjugacy_classes();
        let k = cl.len();
        // a_ijl = #{(x, y) ∈ C_i x C_j : x y = rep_l}; for fixed l each x
        // determines y = x^{-1} rep_l.
        let mut counts: HashMap<(u32, u32), Vec<(u32, u32)>> = HashMap::new();
        for l in 0..k {
            let rep = cl.representative(l);
            let mut local: HashMap<(u32, u32), u32> = HashMap::new();
            for x in group.elements() {
                let y = group.mul(group.inv(x), rep);
                *local.entry((cl.class_of(x) as u32, cl.class_of(y) as u32)).or_default() += 1;
            }
            for (key, c) in local {
                let c = c % p;
                if c != 0 {
                    counts.entry(key).or_default().push((l as u32, c));
                }
            }
        }
        let mut structure = vec![Vec::new(); k * k];
        for ((i, j), mut v) in counts {
            v.sort_unstable();
            structure[i as usize * k + j as usize] = v;
        }
        Ok(GroupAlgebra {
            group: group.clone(),
            field,
            structure,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn prime(&self) -> u32 {
        self.field.modulus()
    }

    /// `dim F_p G = |G|`.
    pub fn dim(&self) -> usize {
        self.group.order()
    }

    /// `dim Z F_p G`, the number of conjugacy classes.
    pub fn center_dim(&self) -> usize {
        self.classes().len()
    }

    pub fn classes(&self) -> &ConjClassPartition {
        self.group.conjugacy_classes()
    }

    pub fn element(&self, coeffs: Vec<u32>) -> Result<AlgebraElement> {
        if coeffs.len() != self.dim() {
            return Err(Error::AlgebraMismatch);
        }
        let p = self.prime();
        Ok(AlgebraElement {
            p,
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        })
    }

    fn check(&self, a: &AlgebraElement) -> Result<()> {
        if a.p != self.prime() || a.coeffs.len() != self.dim() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement {
            p: self.prime(),
            coeffs: vec![0; self.dim()],
        }
    }

    pub fn basis_element(&self, g: usize) -> AlgebraElement {
        let mut a = self.zero();
        a.coeffs[g] = 1;
        a
    }

    pub fn one(&self) -> AlgebraElement {
        self.basis_element(self.group.identity())
    }

    pub fn add(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(a)?;
        self.check(b)?;
        let f = self.field;
        Ok(AlgebraElement {
            p: a.p,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| f.add(x, y)).collect(),
        })
    }

    pub fn scale(&self, c: u32, a: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(a)?;
        let f = self.field;
        let c = c % f.modulus();
        Ok(AlgebraElement {
            p: a.p,
            coeffs: a.coeffs.iter().map(|&x| f.mul(c, x)).collect(),
        })
    }

    pub fn sub(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        let neg = self.scale(self.prime() - 1, b)?;
        self.add(a, &neg)
    }

    /// Convolution through the Cayley table.
    pub fn multiply(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.multiply_raw(&a.coeffs, &b.coeffs))
    }

    pub(crate) fn multiply_raw(&self, a: &[u32], b: &[u32]) -> AlgebraElement {
        let f = self.field;
        let mut out = vec![0u64; self.dim()];
        for (x, &ax) in a.iter().enumerate() {
            if ax == 0 {
                continue;
            }
            for (y, &by) in b.iter().enumerate() {
                if by != 0 {
                    out[self.group.mul(x, y)] += (ax * by) as u64;
                }
            }
        }
        AlgebraElement {
            p: self.prime(),
            coeffs: out.into_iter().map(|c| f.reduce(c)).collect(),
        }
    }

    /// `g · v` for a group element `g` acting on a coefficient vector.
    pub(crate) fn left_translate(&self, g: usize, v: &[u32]) -> Vec<u32> {
        let mut out = vec![0; v.len()];
        for (x, &c) in v.iter().enumerate() {
            out[self.group.mul(g, x)] = c;
        }
        out
    }

    /// `v · g`.
    pub(crate) fn right_translate(&self, g: usize, v: &[u32]) -> Vec<u32> {
        let mut out = vec![0; v.len()];
        for (x, &c) in v.iter().enumerate() {
            out[self.group.mul(x, g)] = c;
        }
        out
    }

    /// The symmetrizing form `λ(a) = a_1`.
    pub fn lambda(&self, a: &AlgebraElement) -> Result<u32> {
        self.check(a)?;
        Ok(a.coeffs[self.group.identity()])
    }

    /// `S^+`, the sum of the elements of `S`.
    pub fn subset_sum(&self, s: &[usize]) -> AlgebraElement {
        let mut a = self.zero();
        for &x in s {
            a.coeffs[x] = 1;
        }
        a
    }

    pub fn class_sum(&self, i: usize) -> AlgebraElement {
        self.subset_sum(self.classes().class(i))
    }

    /// Class sums in class order; a basis of `Z F_p G`.
    pub fn center_basis(&self) -> Vec<AlgebraElement> {
        (0..self.center_dim()).map(|i| self.class_sum(i)).collect()
    }

    pub fn is_central(&self, a: &AlgebraElement) -> Result<bool> {
        self.check(a)?;
        let cl = self.classes();
        Ok(self
            .group
            .elements()
            .all(|x| a.coeffs[x] == a.coeffs[cl.representative(cl.class_of(x))]))
    }

    /// Class coordinates of a central element.
    pub fn to_class_coords(&self, a: &AlgebraElement) -> Result<Vec<u32>> {
        if !self.is_central(a)? {
            return Err(Error::HypothesisViolation("element is not central".into()));
        }
        let cl = self.classes();
        Ok((0..cl.len()).map(|i| a.coeffs[cl.representative(i)]).collect())
    }

    pub fn from_class_coords(&self, v: &[u32]) -> Result<AlgebraElement> {
        if v.len() != self.center_dim() {
            return Err(Error::DimensionMismatch {
                left: self.center_dim(),
                right: v.len(),
            });
        }
        let cl = self.classes();
        let p = self.prime();
        Ok(AlgebraElement {
            p,
            coeffs: self.group.elements().map(|x| v[cl.class_of(x)] % p).collect(),
        })
    }

    /// Product in `Z F_p G` in class coordinates.
    pub fn center_mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let k = self.center_dim();
        let f = self.field;
        let mut out = vec![0u64; k];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let c = f.mul(xi, yj) as u64;
                for &(l, a) in &self.structure[i * k + j] {
                    out[l as usize] += c * a as u64;
                }
            }
        }
        out.into_iter().map(|c| f.reduce(c)).collect()
    }

    /// Matrix of `z -> b z` on `Z F_p G` in class coordinates.
    pub fn center_mul_matrix(&self, b: &[u32]) -> FpMatrix {
        let k = self.center_dim();
        let mut m = FpMatrix::zero(self.field, k, k);
        for j in 0..k {
            let mut e = vec![0u32; k];
            e[j] = 1;
            for (l, &v) in self.center_mul(b, &e).iter().enumerate() {
                m.set(l, j, v);
            }
        }
        m
    }

    /// Embeds a subspace of `Z F_p G` (class coordinates) into `F_p G`.
    pub fn embed_center(&self, w: &FpSubspace) -> Result<FpSubspace> {
        let rows: Vec<Vec<u32>> = w
            .basis_vectors()
            .map(|v| self.from_class_coords(v).map(AlgebraElement::into_coeffs))
            .collect::<Result<_>>()?;
        Ok(FpSubspace::span(self.field, self.dim(), &rows))
    }

    /// Class coordinates of a subspace of `F_p G` contained in the center.
    pub fn restrict_to_center(&self, w: &FpSubspace) -> Result<FpSubspace> {
        let rows: Vec<Vec<u32>> = w
            .basis_vectors()
            .map(|v| self.to_class_coords(&self.element(v.to_vec())?))
            .collect::<Result<_>>()?;
        Ok(FpSubspace::span(self.field, self.center_dim(), &rows))
    }

    /// `W ∩ Z F_p G` in class coordinates, for any subspace `W` of `F_p G`.
    pub fn center_meet(&self, w: &FpSubspace) -> Result<FpSubspace> {
        let z = self.embed_center(&FpSubspace::full(self.field, self.center_dim()))?;
        self.restrict_to_center(&z.meet(w)?)
    }
}
