//! `J(ZFG)`, `soc(ZFG)` and the Reynolds ideal, all in class coordinates.

use super::GroupAlgebra;
use crate::error::Result;
use crate::fp::{common_nullspace, nullspace, FpMatrix, FpSubspace};
use crate::group::{p_decomposition, ph_decomposition, pprime_core, pprime_sections, Subgroup};

impl GroupAlgebra {
    /// `x^n` in `ZFG`, class coordinates.
    pub fn center_pow(&self, x: &[u32], mut n: u64) -> Vec<u32> {
        let mut result = vec![0u32; self.center_dim()];
        result[self.classes().class_of(self.group().identity())] = 1;
        let mut base = x.to_vec();
        while n > 0 {
            if n & 1 == 1 {
                result = self.center_mul(&result, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.center_mul(&base, &base);
            }
        }
        result
    }

    /// Smallest `m` with `p^m >= dim ZFG`.
    pub fn frobenius_depth(&self) -> u32 {
        let p = self.prime() as usize;
        let mut m = 0;
        let mut q = 1usize;
        while q < self.center_dim() {
            q *= p;
            m += 1;
        }
        m
    }

    /// Matrix of `x -> x^p` on `ZFG`. It is `F_p`-linear since `ZFG` is
    /// commutative of characteristic `p` and `c^p = c` on the prime field.
    pub fn frobenius_matrix(&self) -> FpMatrix {
        let k = self.center_dim();
        let mut m = FpMatrix::zero(self.field(), k, k);
        for j in 0..k {
            let mut e = vec![0u32; k];
            e[j] = 1;
            for (i, v) in self.center_pow(&e, self.prime() as u64).into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    /// `J(ZFG)`: the nilradical, i.e. the kernel of the `m`-th Frobenius iterate.
    pub fn jacobson_center(&self) -> FpSubspace {
        let f = self.frobenius_matrix();
        let mut m = FpMatrix::identity(self.field(), self.center_dim());
        for _ in 0..self.frobenius_depth() {
            m = f.mul(&m);
        }
        nullspace(&m)
    }

    /// `b_C` in class coordinates, given `O_{p'}(G)`. `None` when `C ⊆ O_{p'}(G)`.
    pub(crate) fn b_element(&self, class: usize, pprime: &Subgroup) -> Option<Vec<u32>> {
        let cl = self.classes();
        let rep = cl.representative(class);
        if pprime.contains(rep) {
            return None;
        }
        let f = self.field();
        let size = cl.class(class).len();
        let mut v = vec![0u32; self.center_dim()];
        v[class] = 1;
        if size % self.prime() as usize != 0 {
            // g_{p'} lies in O_{p'}(G), which is central here, so it is a class of its own.
            let gp = p_decomposition(self.group(), rep, self.prime()).pprime_part;
            let j = cl.class_of(gp);
            v[j] = f.sub(v[j], f.reduce(size as u64));
        }
        Some(v)
    }

    /// The basis `{b_C : C ⊄ O_{p'}(G)}` of `J(ZFG)` for `G = P ⋊ H` with `H`
    /// abelian, in class order.
    pub fn jacobson_center_basis_ph(&self) -> Result<Vec<Vec<u32>>> {
        ph_decomposition(self.group(), self.prime())?;
        let op = pprime_core(self.group(), self.prime());
        Ok((0..self.center_dim()).filter_map(|c| self.b_element(c, &op)).collect())
    }

    /// Common annihilator in `ZFG` of the given class-coordinate elements.
    pub fn center_annihilator(&self, elements: &[Vec<u32>]) -> Result<FpSubspace> {
        let maps: Vec<FpMatrix> = elements.iter().map(|b| self.center_mul_matrix(b)).collect();
        common_nullspace(self.field(), self.center_dim(), &maps)
    }

    /// `soc(ZFG) = Ann_{ZFG}(J(ZFG))`.
    pub fn socle_center(&self) -> Result<FpSubspace> {
        let j: Vec<Vec<u32>> = self.jacobson_center().basis_vectors().map(<[u32]>::to_vec).collect();
        self.center_annihilator(&j)
    }

    /// Span of the `p'`-section sums.
    pub fn reynolds(&self) -> FpSubspace {
        let cl = self.classes();
        let rows: Vec<Vec<u32>> = pprime_sections(self.group(), self.prime())
            .iter()
            .map(|s| {
                let mut v = vec![0u32; self.center_dim()];
                for &x in s {
                    v[cl.class_of(x)] = 1;
                }
                v
            })
            .collect();
        FpSubspace::span(self.field(), self.center_dim(), &rows)
    }
}
