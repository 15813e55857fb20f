//! The projection `ν_N: FG -> F[G/N]`, its adjoint, and the class selection
//! that describes `ν_N(J(ZFG))`.

use serde::{Deserialize, Serialize};

use super::{AlgebraElement, GroupAlgebra};
use crate::error::{Error, Result};
use crate::fp::FpSubspace;
use crate::group::{center, ph_decomposition, pprime_core, quotient, Quotient, Subgroup};

/// `F[G/N]` together with the projection data from `G`.
pub struct QuotientAlgebra {
    pub quotient: Quotient,
    pub algebra: GroupAlgebra,
    normal_order: usize,
}

impl QuotientAlgebra {
    pub fn normal_order(&self) -> usize {
        self.normal_order
    }

    /// Image of a class of `G`, as a class index of `G/N`.
    pub fn image_class(&self, parent: &GroupAlgebra, class: usize) -> usize {
        let rep = parent.classes().representative(class);
        self.algebra.classes().class_of(self.quotient.projection[rep])
    }
}

/// Membership data for one class `C ⊄ O_{p'}(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DclEntry {
    pub class: usize,
    pub image_class: usize,
    /// `|C| / |C̄|`.
    pub k: usize,
    /// `C̄ ⊄ O_{p'}(G/N)` and `p ∤ k`.
    pub by_criterion: bool,
    /// `ν_N(b_C) ≠ 0`.
    pub by_image: bool,
    /// For selected classes, `ν_N(b_C) = k b_{C̄}`.
    pub relation_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSelection {
    pub normal_order: usize,
    pub entries: Vec<DclEntry>,
    /// `b_{C̄}` in class coordinates of `G/N`, one per distinct selected image class.
    pub image_elements: Vec<Vec<u32>>,
}

impl ClassSelection {
    pub fn selected(&self) -> impl Iterator<Item = &DclEntry> {
        self.entries.iter().filter(|e| e.by_criterion)
    }

    pub fn agree(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.by_criterion == e.by_image && (!e.by_criterion || e.relation_holds))
    }
}

/// `Ann_{ZF[G/N]}` computed from the selected images and from `ν_N(J(ZFG))`.
#[derive(Clone, Debug)]
pub struct QuotientAnnihilator {
    pub via_selection: FpSubspace,
    pub via_radical: FpSubspace,
    /// `A ⊆ ((G/N)')^+ F[G/N]`, with `A` in group coordinates.
    pub in_derived_ideal: bool,
}

impl QuotientAnnihilator {
    pub fn agree(&self) -> bool {
        self.via_selection == self.via_radical
    }
}

impl GroupAlgebra {
    pub fn quotient_algebra(&self, n: &Subgroup) -> Result<QuotientAlgebra> {
        if n.parent_order() != self.dim() {
            return Err(Error::AlgebraMismatch);
        }
        let quotient = quotient(self.group(), n)?;
        let algebra = GroupAlgebra::new(&quotient.group, self.prime())?;
        Ok(QuotientAlgebra {
            quotient,
            algebra,
            normal_order: n.order(),
        })
    }

    /// `ν_N(Σ a_g g) = Σ a_g gN`.
    pub fn nu(&self, q: &QuotientAlgebra, a: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(a)?;
        let f = self.field();
        let mut out = vec![0u32; q.algebra.dim()];
        for (x, &c) in a.coeffs().iter().enumerate() {
            let i = q.quotient.projection[x];
            out[i] = f.add(out[i], c);
        }
        q.algebra.element(out)
    }

    /// `ν_N^*(Σ a_{gN} gN) = Σ a_{gN} g`.
    pub fn nu_star(&self, q: &QuotientAlgebra, a: &AlgebraElement) -> Result<AlgebraElement> {
        q.algebra.check(a)?;
        let coeffs = q.quotient.projection.iter().map(|&i| a.coeffs()[i]).collect();
        self.element(coeffs)
    }

    /// `DCL(G, N)` with both membership tests. Requires `G = P ⋊ H`, `H` abelian.
    pub fn dcl(&self, n: &Subgroup) -> Result<(ClassSelection, QuotientAlgebra)> {
        ph_decomposition(self.group(), self.prime())?;
        let q = self.quotient_algebra(n)?;
        let p = self.prime() as usize;
        let op = pprime_core(self.group(), self.prime());
        let op_bar = pprime_core(&q.quotient.group, self.prime());
        let f = self.field();
        let mut entries = Vec::new();
        let mut image_classes: Vec<usize> = Vec::new();
        for c in 0..self.center_dim() {
            let Some(b) = self.b_element(c, &op) else {
                continue;
            };
            let image_class = q.image_class(self, c);
            let image_size = q.algebra.classes().class(image_class).len();
            let k = self.classes().class(c).len() / image_size;
            let image_rep = q.algebra.classes().representative(image_class);
            let by_criterion = !op_bar.contains(image_rep) && k % p != 0;
            let nu_b = self.nu(&q, &self.from_class_coords(&b)?)?;
            let by_image = !nu_b.is_zero();
            let relation_holds = match q.algebra.b_element(image_class, &op_bar) {
                Some(b_bar) => {
                    let scaled: Vec<u32> = b_bar.iter().map(|&x| f.mul(f.reduce(k as u64), x)).collect();
                    q.algebra.from_class_coords(&scaled)? == nu_b
                }
                None => false,
            };
            if by_criterion && !image_classes.contains(&image_class) {
                image_classes.push(image_class);
            }
            entries.push(DclEntry {
                class: c,
                image_class,
                k,
                by_criterion,
                by_image,
                relation_holds,
            });
        }
        image_classes.sort_unstable();
        let image_elements = image_classes
            .iter()
            .map(|&c| q.algebra.b_element(c, &op_bar).expect("selected images lie outside O_p'"))
            .collect();
        Ok((
            ClassSelection {
                normal_order: n.order(),
                entries,
                image_elements,
            },
            q,
        ))
    }

    /// `Ann_{ZF[G/N]}(ν_N(J(ZFG)))`, once through the selected `b_{C̄}` and
    /// once through the image of a radical basis.
    pub fn quotient_annihilator(&self, n: &Subgroup) -> Result<QuotientAnnihilator> {
        let (selection, q) = self.dcl(n)?;
        let via_selection = q.algebra.center_annihilator(&selection.image_elements)?;
        let images: Vec<Vec<u32>> = self
            .jacobson_center()
            .basis_vectors()
            .map(|v| {
                let nu = self.nu(&q, &self.from_class_coords(v)?)?;
                q.algebra.to_class_coords(&nu)
            })
            .collect::<Result<_>>()?;
        let via_radical = q.algebra.center_annihilator(&images)?;
        let in_derived_ideal = q
            .algebra
            .embed_center(&via_selection)?
            .is_subspace_of(&q.algebra.derived_sum_ideal())?;
        Ok(QuotientAnnihilator {
            via_selection,
            via_radical,
            in_derived_ideal,
        })
    }

    /// For a `p`-group with `N = Z(G)`: the classes `C ⊄ Z(G)` with `|C| = |C̄|`,
    /// and the annihilator in `ZF[G/Z]` of their image sums.
    pub fn central_quotient_annihilator(&self) -> Result<(Vec<usize>, FpSubspace, QuotientAlgebra)> {
        let z = center(self.group());
        let q = self.quotient_algebra(&z)?;
        let mut classes = Vec::new();
        let mut images = Vec::new();
        for c in 0..self.center_dim() {
            let size = self.classes().class(c).len();
            if size == 1 {
                continue;
            }
            let image = q.image_class(self, c);
            if q.algebra.classes().class(image).len() == size {
                classes.push(c);
                let mut v = vec![0u32; q.algebra.center_dim()];
                v[image] = 1;
                if !images.contains(&v) {
                    images.push(v);
                }
            }
        }
        let ann = q.algebra.center_annihilator(&images)?;
        Ok((classes, ann, q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;
    use crate::group::{derived_subgroup, is_p_group, sylow};

    #[test]
    fn nu_basics() {
        let d8 = dihedral(8).unwrap();
        let a = GroupAlgebra::new(&d8, 3).unwrap();
        let z = center(&d8);
        let q = a.quotient_algebra(&z).unwrap();
        assert_eq!(a.nu(&q, &a.one()).unwrap(), q.algebra.one());
        let nplus = a.subset_sum(z.elements());
        assert_eq!(a.nu(&q, &nplus).unwrap(), q.algebra.scale(2, &q.algebra.one()).unwrap());
        assert_eq!(a.nu_star(&q, &q.algebra.one()).unwrap(), nplus);
        let a2 = GroupAlgebra::new(&d8, 2).unwrap();
        let q2 = a2.quotient_algebra(&z).unwrap();
        assert!(a2.nu(&q2, &a2.subset_sum(z.elements())).unwrap().is_zero());
    }

    #[test]
    fn nu_kernel_and_star_image() {
        let g = dihedral(12).unwrap();
        let a = GroupAlgebra::new(&g, 2).unwrap();
        let n = derived_subgroup(&g);
        let q = a.quotient_algebra(&n).unwrap();
        let omega = a.omega_ideal(&n).unwrap();
        for v in omega.basis_vectors() {
            assert!(a.nu(&q, &a.element(v.to_vec()).unwrap()).unwrap().is_zero());
        }
        let images: Vec<Vec<u32>> = q
            .algebra
            .group()
            .elements()
            .map(|x| a.nu_star(&q, &q.algebra.basis_element(x)).unwrap().into_coeffs())
            .collect();
        assert_eq!(FpSubspace::span(a.field(), 12, &images), a.normal_sum_ideal(&n).unwrap());
    }

    #[test]
    fn dcl_trivial_and_whole() {
        let g = alternating4();
        let a = GroupAlgebra::new(&g, 2).unwrap();
        let (sel, _) = a.dcl(&Subgroup::trivial(&g)).unwrap();
        assert!(sel.agree());
        assert_eq!(sel.selected().count(), sel.entries.len());
        assert!(sel.selected().all(|e| e.k == 1));
        let (sel, _) = a.dcl(&Subgroup::whole(&g)).unwrap();
        assert!(sel.agree());
        assert_eq!(sel.selected().count(), 0);
    }

    #[test]
    fn dcl_normal_p_subgroup_matches_centralizer() {
        for (g, p) in [
            (alternating4(), 2),
            (metacyclic(7, 3, 2, 0, "C7:C3").unwrap(), 7),
            (direct_product(&dihedral(8).unwrap(), &cyclic(3).unwrap()).unwrap(), 2),
        ] {
            let a = GroupAlgebra::new(&g, p).unwrap();
            let pp = sylow(&g, p);
            let cp = crate::group::centralizer(&g, pp.elements());
            for n in crate::group::all_subgroups(&g) {
                if !n.is_normal() || !is_p_group(&crate::group::induced_group(&g, &n, "").0, p) {
                    continue;
                }
                let (sel, _) = a.dcl(&n).unwrap();
                assert!(sel.agree(), "{} N{}", g.name(), n.order());
                let cn = crate::group::centralizer(&g, n.elements());
                for e in &sel.entries {
                    let class = a.classes().class(e.class);
                    let pprime_class = class.iter().all(|&x| g.element_order(x) % p as usize != 0);
                    if pprime_class && !class.iter().all(|&x| cp.contains(x)) {
                        assert_eq!(e.by_criterion, class.iter().all(|&x| cn.contains(x)));
                    }
                }
            }
        }
    }

    #[test]
    fn annihilator_routes_agree() {
        for g in [dihedral(8).unwrap(), holomorph_cyclic(8).unwrap(), quaternion(16).unwrap()] {
            let a = GroupAlgebra::new(&g, 2).unwrap();
            let z = center(&g);
            let ann = a.quotient_annihilator(&z).unwrap();
            assert!(ann.agree(), "{}", g.name());
            let whole = a.quotient_annihilator(&Subgroup::whole(&g)).unwrap();
            assert_eq!(whole.via_selection.dim(), 1);
        }
        let d8 = dihedral(8).unwrap();
        assert!(GroupAlgebra::new(&d8, 2).unwrap().quotient_annihilator(&center(&d8)).unwrap().in_derived_ideal);
    }
}
