//! Isomorphism search by generator-image backtracking, and isoclinism on top of it.

use super::{center, derived_subgroup, quotient, FiniteGroup};
use crate::error::{Error, Result};

/// A bijective homomorphism, stored as an image table over source indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupIso {
    pub image: Vec<usize>,
}

impl GroupIso {
    pub fn identity(g: &FiniteGroup) -> GroupIso {
        GroupIso {
            image: g.elements().collect(),
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    /// Checks bijectivity and `image(ab) = image(a) image(b)` on all pairs.
    pub fn is_isomorphism(&self, source: &FiniteGroup, target: &FiniteGroup) -> bool {
        if self.image.len() != source.order() || source.order() != target.order() {
            return false;
        }
        let mut hit = vec![false; target.order()];
        for &y in &self.image {
            if y >= target.order() || hit[y] {
                return false;
            }
            hit[y] = true;
        }
        source.elements().all(|a| {
            source
                .elements()
                .all(|b| self.image[source.mul(a, b)] == target.mul(self.image[a], self.image[b]))
        })
    }
}

fn profile(g: &FiniteGroup) -> Vec<(usize, usize)> {
    let cl = g.conjugacy_classes();
    g.elements()
        .map(|x| (g.element_order(x), cl.class(cl.class_of(x)).len()))
        .collect()
}

/// Extends the partial assignment `gens[i] -> imgs[i]` over the subgroup the
/// generators span. Returns `None` if the map is not a well-defined injective
/// homomorphism there.
pub(crate) fn extend_homomorphism(a: &FiniteGroup, b: &FiniteGroup, gens: &[usize], imgs: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; a.order()];
    let mut used = vec![false; b.order()];
    map[a.identity()] = b.identity();
    used[b.identity()] = true;
    let mut queue = vec![a.identity()];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for (&s, &t) in gens.iter().zip(imgs) {
            let y = a.mul(x, s);
            let fy = b.mul(map[x], t);
            if map[y] == usize::MAX {
                if used[fy] {
                    return None;
                }
                used[fy] = true;
                map[y] = fy;
                queue.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
        i += 1;
    }
    Some(map)
}

/// Calls `visit` on every isomorphism `a -> b` until it returns `false`.
pub fn for_each_isomorphism(
    a: &FiniteGroup,
    b: &FiniteGroup,
    mut visit: impl FnMut(&GroupIso) -> bool,
) {
    if a.order() != b.order() {
        return;
    }
    let pa = profile(a);
    let pb = profile(b);
    let mut sa = pa.clone();
    let mut sb = pb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return;
    }
    let gens = a.generators().to_vec();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| b.elements().filter(|&t| pb[t] == pa[s]).collect())
        .collect();
    let mut imgs = Vec::with_capacity(gens.len());
    search(a, b, &gens, &candidates, &mut imgs, &mut visit);
}

fn search(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    imgs: &mut Vec<usize>,
    visit: &mut impl FnMut(&GroupIso) -> bool,
) -> bool {
    let k = imgs.len();
    if k == gens.len() {
        let map = extend_homomorphism(a, b, gens, imgs).expect("checked at previous level");
        return visit(&GroupIso { image: map });
    }
    for &t in &candidates[k] {
        imgs.push(t);
        let keep_going = match extend_homomorphism(a, b, &gens[..=k], imgs) {
            Some(_) => search(a, b, gens, candidates, imgs, visit),
            None => true,
        };
        imgs.pop();
        if !keep_going {
            return false;
        }
    }
    true
}

pub fn find_isomorphism(a: &FiniteGroup, b: &FiniteGroup) -> Option<GroupIso> {
    let mut found = None;
    for_each_isomorphism(a, b, |iso| {
        found = Some(iso.clone());
        false
    });
    found
}

pub fn are_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    find_isomorphism(a, b).is_some()
}

/// Witness pair for an isoclinism `G1 -> G2`.
#[derive(Clone, Debug)]
pub struct Isoclinism {
    /// `β` on coset indices of `G1/Z(G1)` to those of `G2/Z(G2)`.
    pub beta: Vec<usize>,
    /// `φ` as pairs `(x, φ(x))` over the elements of `G1'`, sorted by `x`.
    pub phi: Vec<(usize, usize)>,
}

/// Searches for isoclinism maps `(β, φ)`. `Ok(None)` means no witness exists.
pub fn are_isoclinic(g1: &FiniteGroup, g2: &FiniteGroup) -> Result<Option<Isoclinism>> {
    let z1 = center(g1);
    let z2 = center(g2);
    let d1 = derived_subgroup(g1);
    let d2 = derived_subgroup(g2);
    if z1.index() != z2.index() || d1.order() != d2.order() {
        return Err(Error::SizeMismatch(format!(
            "|G/Z| {} vs {}, |G'| {} vs {}",
            z1.index(),
            z2.index(),
            d1.order(),
            d2.order()
        )));
    }
    let q1 = quotient(g1, &z1)?;
    let q2 = quotient(g2, &z2)?;
    let mut witness = None;
    for_each_isomorphism(&q1.group, &q2.group, |beta| {
        if let Some(phi) = compatible_phi(g1, g2, &q1.representatives, &q2.representatives, beta, d2.order()) {
            witness = Some(Isoclinism {
                beta: beta.image.clone(),
                phi,
            });
            return false;
        }
        true
    });
    Ok(witness)
}

fn compatible_phi(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
    reps1: &[usize],
    reps2: &[usize],
    beta: &GroupIso,
    derived_order: usize,
) -> Option<Vec<(usize, usize)>> {
    let mut phi = vec![usize::MAX; g1.order()];
    let mut used = vec![false; g2.order()];
    let mut assign = |x: usize, y: usize, phi: &mut Vec<usize>| -> bool {
        if phi[x] == usize::MAX {
            if used[y] {
                return false;
            }
            used[y] = true;
            phi[x] = y;
            true
        } else {
            phi[x] == y
        }
    };
    let mut domain = Vec::new();
    for (i, &a1) in reps1.iter().enumerate() {
        let a2 = reps2[beta.apply(i)];
        for (j, &b1) in reps1.iter().enumerate() {
            let b2 = reps2[beta.apply(j)];
            let c1 = g1.commutator(a1, b1);
            let fresh = phi[c1] == usize::MAX;
            if !assign(c1, g2.commutator(a2, b2), &mut phi) {
                return None;
            }
            if fresh {
                domain.push(c1);
            }
        }
    }
    // φ must extend multiplicatively to all of G1'.
    let mut i = 0;
    let seeds = domain.clone();
    while i < domain.len() {
        let x = domain[i];
        for &s in &seeds {
            let y = g1.mul(x, s);
            let fy = g2.mul(phi[x], phi[s]);
            let fresh = phi[y] == usize::MAX;
            if !assign(y, fy, &mut phi) {
                return None;
            }
            if fresh {
                domain.push(y);
            }
        }
        i += 1;
    }
    if domain.len() != derived_order {
        return None;
    }
    domain.sort_unstable();
    Some(domain.into_iter().map(|x| (x, phi[x])).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;

    #[test]
    fn group_is_isoclinic_to_itself() {
        let g = dihedral(16).unwrap();
        let w = are_isoclinic(&g, &g).unwrap().expect("self-isoclinic");
        assert_eq!(w.phi.len(), derived_subgroup(&g).order());
    }

    #[test]
    fn maximal_class_16_pairwise_isoclinic() {
        let gs = [
            family(Family::Dihedral, 16).unwrap(),
            family(Family::SemiDihedral, 16).unwrap(),
            family(Family::GeneralizedQuaternion, 16).unwrap(),
        ];
        for a in &gs {
            for b in &gs {
                assert!(are_isoclinic(a, b).unwrap().is_some(), "{} {}", a.name(), b.name());
            }
        }
    }

    #[test]
    fn c4_and_d8_fail_fast() {
        let c4 = abelian(&[4]).unwrap();
        let d8 = dihedral(8).unwrap();
        assert!(matches!(are_isoclinic(&c4, &d8), Err(Error::SizeMismatch(_))));
    }

    #[test]
    fn abelian_groups_of_any_order_are_isoclinic() {
        let a = abelian(&[2]).unwrap();
        let b = abelian(&[3, 3]).unwrap();
        assert!(are_isoclinic(&a, &b).unwrap().is_some());
    }

    #[test]
    fn d8_and_q8_isoclinic_but_not_isomorphic() {
        let d8 = dihedral(8).unwrap();
        let q8 = quaternion(8).unwrap();
        assert!(are_isoclinic(&d8, &q8).unwrap().is_some());
        assert!(!are_isomorphic(&d8, &q8));
    }

    #[test]
    fn isomorphisms_are_verified() {
        let a = holomorph_cyclic(4).unwrap();
        let b = dihedral(8).unwrap();
        let iso = find_isomorphism(&a, &b).expect("Hol(C4) is D8");
        assert!(iso.is_isomorphism(&a, &b));
        // Aut(D8) has order 8.
        let mut count = 0;
        for_each_isomorphism(&b, &b, |_| {
            count += 1;
            true
        });
        assert_eq!(count, 8);
    }
}
