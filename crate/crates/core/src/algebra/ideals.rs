//! Subspaces of `F_p G`: ideals generated by subgroup sums, augmentation
//! ideals, the commutator space, and the ideal tests built on them.

use serde::{Deserialize, Serialize};

use super::GroupAlgebra;
use crate::error::{Error, Result};
use crate::fp::{EchelonBuilder, FpSubspace};
use crate::group::{derived_subgroup, Subgroup};

/// Outcome of testing whether `soc(ZFG)` is an ideal of `FG`, by two routes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SocleIdealVerdict {
    /// `soc(ZFG)` is closed under multiplication by group elements.
    pub direct: bool,
    /// `soc(ZFG) ⊆ (G')^+ FG`.
    pub criterion: bool,
    pub socle_dim: usize,
    pub derived_ideal_dim: usize,
    /// Class coordinates of a socle basis vector outside `(G')^+ FG`, if any.
    pub witness: Option<Vec<u32>>,
}

impl SocleIdealVerdict {
    pub fn agree(&self) -> bool {
        self.direct == self.criterion
    }
}

impl GroupAlgebra {
    fn check_subgroup(&self, n: &Subgroup) -> Result<()> {
        if n.parent_order() != self.dim() {
            return Err(Error::AlgebraMismatch);
        }
        if !n.is_normal() {
            return Err(Error::NotNormal);
        }
        Ok(())
    }

    /// `N^+ FG`, spanned by the coset sums `(gN)^+`.
    pub fn normal_sum_ideal(&self, n: &Subgroup) -> Result<FpSubspace> {
        self.check_subgroup(n)?;
        let g = self.group();
        let mut seen = vec![false; g.order()];
        let mut rows = Vec::new();
        for x in g.elements() {
            if seen[x] {
                continue;
            }
            let mut v = vec![0u32; g.order()];
            for &y in n.elements() {
                let xy = g.mul(x, y);
                seen[xy] = true;
                v[xy] = 1;
            }
            rows.push(v);
        }
        Ok(FpSubspace::span(self.field(), g.order(), &rows))
    }

    /// `ω(FN) FG`, the kernel of `ν_N`. Basis: `x - r` for `x` in the coset of `r`.
    pub fn omega_ideal(&self, n: &Subgroup) -> Result<FpSubspace> {
        self.check_subgroup(n)?;
        let g = self.group();
        let neg_one = self.prime() - 1;
        let mut seen = vec![false; g.order()];
        let mut rows = Vec::new();
        for r in g.elements() {
            if seen[r] {
                continue;
            }
            for &y in n.elements() {
                let x = g.mul(r, y);
                seen[x] = true;
                if x != r {
                    let mut v = vec![0u32; g.order()];
                    v[x] = 1;
                    v[r] = neg_one;
                    rows.push(v);
                }
            }
        }
        Ok(FpSubspace::span(self.field(), g.order(), &rows))
    }

    /// `K(FG) = span{ab - ba}`, which is spanned by `x - y` over conjugate pairs.
    pub fn commutator_space(&self) -> FpSubspace {
        let cl = self.classes();
        let neg_one = self.prime() - 1;
        let mut rows = Vec::new();
        for class in cl.classes() {
            let r = class[0];
            for &x in &class[1..] {
                let mut v = vec![0u32; self.dim()];
                v[x] = 1;
                v[r] = neg_one;
                rows.push(v);
            }
        }
        FpSubspace::span(self.field(), self.dim(), &rows)
    }

    /// `FG W`: closes `W` under left multiplication by the generators.
    pub fn left_ideal_closure(&self, w: &FpSubspace) -> Result<FpSubspace> {
        self.closure(w, true, false)
    }

    /// `FG W FG`.
    pub fn two_sided_closure(&self, w: &FpSubspace) -> Result<FpSubspace> {
        self.closure(w, true, true)
    }

    fn closure(&self, w: &FpSubspace, left: bool, right: bool) -> Result<FpSubspace> {
        if w.ambient_dim() != self.dim() || w.field() != self.field() {
            return Err(Error::AlgebraMismatch);
        }
        let mut builder = EchelonBuilder::new(self.field(), self.dim());
        let mut queue: Vec<Vec<u32>> = Vec::new();
        for v in w.basis_vectors() {
            if builder.insert(v) {
                queue.push(v.to_vec());
            }
        }
        let gens = self.group().generators();
        while let Some(v) = queue.pop() {
            for &g in gens {
                let mut images = Vec::with_capacity(2);
                if left {
                    images.push(self.left_translate(g, &v));
                }
                if right {
                    images.push(self.right_translate(g, &v));
                }
                for u in images {
                    if builder.insert(&u) {
                        queue.push(u);
                    }
                }
            }
        }
        Ok(builder.into_subspace())
    }

    /// Whether `W` is a two-sided ideal. Closure under the generators on both
    /// sides suffices because `G` spans `FG`.
    pub fn is_ideal(&self, w: &FpSubspace) -> Result<bool> {
        if w.ambient_dim() != self.dim() || w.field() != self.field() {
            return Err(Error::AlgebraMismatch);
        }
        for v in w.basis_vectors() {
            for &g in self.group().generators() {
                if !w.contains(&self.left_translate(g, v))? || !w.contains(&self.right_translate(g, v))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `(G')^+ FG`.
    pub fn derived_sum_ideal(&self) -> FpSubspace {
        self.normal_sum_ideal(&derived_subgroup(self.group()))
            .expect("G' is normal")
    }

    /// Tests whether `soc(ZFG)` is an ideal directly and through the
    /// containment `soc(ZFG) ⊆ (G')^+ FG`.
    pub fn soc_is_ideal(&self) -> Result<SocleIdealVerdict> {
        self.socle_ideal_verdict(&self.socle_center()?)
    }

    /// As [`GroupAlgebra::soc_is_ideal`], for an already computed socle.
    pub fn socle_ideal_verdict(&self, soc: &FpSubspace) -> Result<SocleIdealVerdict> {
        let embedded = self.embed_center(soc)?;
        let derived = self.derived_sum_ideal();
        let direct = self.is_ideal(&embedded)?;
        let mut witness = None;
        for v in soc.basis_vectors() {
            if !derived.contains(self.from_class_coords(v)?.coeffs())? {
                witness = Some(v.to_vec());
                break;
            }
        }
        let criterion = witness.is_none();
        Ok(SocleIdealVerdict {
            direct,
            criterion,
            socle_dim: soc.dim(),
            derived_ideal_dim: derived.dim(),
            witness,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;
    use crate::group::{center, generate};

    #[test]
    fn omega_of_trivial_and_whole() {
        let c2 = cyclic(2).unwrap();
        let a = GroupAlgebra::new(&c2, 2).unwrap();
        assert_eq!(a.omega_ideal(&Subgroup::trivial(&c2)).unwrap().dim(), 0);
        let w = a.omega_ideal(&Subgroup::whole(&c2)).unwrap();
        assert_eq!(w.dim(), 1);
        assert!(w.contains(&[1, 1]).unwrap());
    }

    #[test]
    fn omega_dimension_is_order_minus_index() {
        let d8 = dihedral(8).unwrap();
        let a = GroupAlgebra::new(&d8, 2).unwrap();
        let z = center(&d8);
        let w = a.omega_ideal(&z).unwrap();
        assert_eq!(w.dim(), 4);
        // (1 - n) g lies in it for every n in N and g in G.
        for &n in z.elements() {
            for g in d8.elements() {
                let mut v = vec![0u32; 8];
                v[g] = 1;
                v[d8.mul(n, g)] = (v[d8.mul(n, g)] + 1) % 2;
                assert!(w.contains(&v).unwrap());
            }
        }
        assert!(a.is_ideal(&w).unwrap());
    }

    #[test]
    fn normal_sum_ideal_dimension() {
        let d8 = dihedral(8).unwrap();
        let a = GroupAlgebra::new(&d8, 3).unwrap();
        let w = a.normal_sum_ideal(&center(&d8)).unwrap();
        assert_eq!(w.dim(), 4);
        assert!(a.is_ideal(&w).unwrap());
        let refl = generate(&d8, &[4]);
        assert_eq!(a.normal_sum_ideal(&refl), Err(Error::NotNormal));
    }

    #[test]
    fn commutator_space_of_abelian_is_zero() {
        let g = abelian(&[4, 2]).unwrap();
        assert_eq!(GroupAlgebra::new(&g, 2).unwrap().commutator_space().dim(), 0);
    }

    #[test]
    fn commutator_ideal_matches_omega_of_derived() {
        for (g, p) in [(symmetric(3).unwrap(), 3), (dihedral(8).unwrap(), 2)] {
            let a = GroupAlgebra::new(&g, p).unwrap();
            let fgk = a.left_ideal_closure(&a.commutator_space()).unwrap();
            let omega = a.omega_ideal(&derived_subgroup(&g)).unwrap();
            assert_eq!(fgk.dim(), 4, "{}", g.name());
            assert_eq!(fgk, omega, "{}", g.name());
        }
    }

    #[test]
    fn ideal_tests() {
        let s3 = symmetric(3).unwrap();
        let a = GroupAlgebra::new(&s3, 2).unwrap();
        assert!(a.is_ideal(&FpSubspace::full(a.field(), 6)).unwrap());
        assert!(!a.is_ideal(&FpSubspace::span(a.field(), 6, &[a.one().coeffs()])).unwrap());
        assert!(a.is_ideal(&a.derived_sum_ideal()).unwrap());
        let one = FpSubspace::span(a.field(), 6, &[a.one().coeffs()]);
        assert_eq!(a.two_sided_closure(&one).unwrap().dim(), 6);
    }

    #[test]
    fn socle_ideal_examples() {
        let hol = holomorph_cyclic(8).unwrap();
        let v = GroupAlgebra::new(&hol, 2).unwrap().soc_is_ideal().unwrap();
        assert!(!v.direct && !v.criterion);
        assert_eq!((v.socle_dim, v.derived_ideal_dim), (10, 8));
        assert!(v.witness.is_some());
        for order in [8, 16, 32] {
            let d = dihedral(order).unwrap();
            let v = GroupAlgebra::new(&d, 2).unwrap().soc_is_ideal().unwrap();
            assert!(v.direct && v.criterion, "D{order}");
            assert!(v.witness.is_none());
        }
        let ab = abelian(&[4, 2]).unwrap();
        assert!(GroupAlgebra::new(&ab, 2).unwrap().soc_is_ideal().unwrap().direct);
    }
}
