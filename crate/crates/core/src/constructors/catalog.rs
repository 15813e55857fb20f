use super::*;

fn c2() -> FiniteGroup {
    cyclic(2).expect("C2")
}

/// `(C4 x C2) ⋊ C2` with `a -> ab`, `b -> b`.
fn c4c2_by_c2() -> FiniteGroup {
    let n = abelian(&[4, 2]).expect("C4xC2");
    let shear: Vec<usize> = n.elements().map(|x| x % 4 + 4 * ((x / 4 + x % 4) % 2)).collect();
    let action = ActionTable {
        generators: vec![1],
        images: vec![shear],
    };
    semidirect(&n, &c2(), &action)
        .expect("shear is an involutory automorphism")
        .renamed("(C4xC2):C2")
}

/// The 14 groups of order 16.
pub fn groups_of_order_16() -> Vec<FiniteGroup> {
    let d8 = dihedral(8).unwrap();
    let q8 = quaternion(8).unwrap();
    let c4 = cyclic(4).unwrap();
    vec![
        cyclic(16).unwrap(),
        abelian(&[4, 4]).unwrap(),
        c4c2_by_c2(),
        metacyclic(4, 4, 3, 0, "C4:C4").unwrap(),
        abelian(&[8, 2]).unwrap(),
        metacyclic(8, 2, 5, 0, "M16").unwrap(),
        dihedral(16).unwrap(),
        family(Family::SemiDihedral, 16).unwrap(),
        quaternion(16).unwrap(),
        abelian(&[4, 2, 2]).unwrap(),
        direct_product(&d8, &c2()).unwrap(),
        direct_product(&q8, &c2()).unwrap(),
        central_product(&d8, &c4, &[(0, 0), (2, 2)]).unwrap().renamed("D8*C4"),
        abelian(&[2, 2, 2, 2]).unwrap(),
    ]
}

/// Every 2-group of order 2 to 16, one per isomorphism type.
pub fn two_groups_up_to_16() -> Vec<FiniteGroup> {
    let mut out = vec![
        c2(),
        cyclic(4).unwrap(),
        abelian(&[2, 2]).unwrap(),
        cyclic(8).unwrap(),
        abelian(&[4, 2]).unwrap(),
        abelian(&[2, 2, 2]).unwrap(),
        dihedral(8).unwrap(),
        quaternion(8).unwrap(),
    ];
    out.extend(groups_of_order_16());
    out
}

/// Built-in catalog: the 2-groups above, maximal-class families up to order 64,
/// odd p-groups, and groups of mixed order.
pub fn builtin_catalog() -> Vec<FiniteGroup> {
    let mut out = two_groups_up_to_16();
    for order in [32, 64] {
        out.push(dihedral(order).unwrap());
        out.push(family(Family::SemiDihedral, order).unwrap());
        out.push(quaternion(order).unwrap());
    }
    let d8 = dihedral(8).unwrap();
    let q8 = quaternion(8).unwrap();
    let c3 = cyclic(3).unwrap();
    let s3 = symmetric(3).unwrap();
    out.extend([
        holomorph_cyclic(8).unwrap(),
        central_product(&d8, &d8, &[(0, 0), (2, 2)]).unwrap().renamed("D8*D8"),
        direct_product(&d8, &abelian(&[2, 2]).unwrap()).unwrap(),
        abelian(&[3, 3]).unwrap(),
        abelian(&[9, 3]).unwrap(),
        extraspecial_27_exp3(),
        metacyclic(9, 3, 4, 0, "C9:C3").unwrap(),
        wreath_cyclic(3).unwrap(),
        heisenberg(5).unwrap(),
        cyclic(5).unwrap(),
        cyclic(6).unwrap(),
        s3.clone(),
        dihedral(12).unwrap(),
        direct_product(&c3, &s3).unwrap(),
        alternating4(),
        direct_product(&alternating4(), &c2()).unwrap(),
        sl23(),
        symmetric(4).unwrap(),
        direct_product(&d8, &c3).unwrap(),
        direct_product(&q8, &c3).unwrap(),
        metacyclic(3, 8, 2, 0, "C3:C8").unwrap(),
        metacyclic(7, 3, 2, 0, "C7:C3").unwrap(),
        holomorph_cyclic(5).unwrap(),
        holomorph_cyclic(9).unwrap(),
        smallgroup_216_86().unwrap(),
    ]);
    out
}
