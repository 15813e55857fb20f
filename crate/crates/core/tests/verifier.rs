use socle_core::constructors::*;
use socle_core::group::{center, derived_subgroup, is_p_group, normal_subgroups, quotient, Subgroup};
use socle_core::verifier::*;

fn assert_clean(reports: &[VerdictReport]) {
    for r in reports {
        let bad: Vec<&Claim> = r.failures().collect();
        assert!(bad.is_empty(), "{} suite {} p={}: {:#?}", r.group, r.suite, r.prime, bad);
    }
}

fn verdict(r: &VerdictReport, id: &str) -> (Verdict, Verdict) {
    let c = r.claim(id).unwrap_or_else(|| panic!("no claim {id}"));
    (c.route1, c.route2)
}

#[test]
fn every_suite_agrees_on_the_builtin_catalog() {
    for g in builtin_catalog() {
        for p in [2, 3, 5] {
            let reports = run_suite(&g, p, Suite::All).unwrap();
            assert_clean(&reports);
        }
    }
}

#[test]
fn reynolds_examples() {
    let s3 = symmetric(3).unwrap();
    let r = verify_reynolds(&s3, 3).unwrap();
    assert_eq!(verdict(&r, "reynolds-ideal"), (Verdict::True, Verdict::True));
    let r = verify_reynolds(&s3, 2).unwrap();
    assert_eq!(verdict(&r, "reynolds-ideal"), (Verdict::False, Verdict::False));
    let r = verify_reynolds(&dihedral(16).unwrap(), 2).unwrap();
    assert_eq!(verdict(&r, "reynolds-ideal"), (Verdict::True, Verdict::True));
}

#[test]
fn pgroup_examples() {
    let wr = wreath_cyclic(3).unwrap();
    let r = verify_pgroup_classification(&wr, 3).unwrap();
    assert_eq!(verdict(&r, "socle-ideal-classification"), (Verdict::False, Verdict::False));
    assert_eq!(verdict(&r, "odd-witness"), (Verdict::True, Verdict::True));
    assert!(r.all_agree());

    let r = verify_pgroup_classification(&dihedral(16).unwrap(), 2).unwrap();
    assert_eq!(verdict(&r, "socle-ideal-classification"), (Verdict::True, Verdict::True));

    assert!(verify_pgroup_classification(&symmetric(3).unwrap(), 2).is_err());
}

#[test]
fn sufficient_condition_examples() {
    let ab = abelian(&[4, 2]).unwrap();
    let r = verify_sufficient_conditions(&ab, 2).unwrap();
    assert_eq!(verdict(&r, "derived-in-core-center"), (Verdict::True, Verdict::True));

    let d8c2 = direct_product(&dihedral(8).unwrap(), &cyclic(2).unwrap()).unwrap();
    let r = verify_sufficient_conditions(&d8c2, 2).unwrap();
    assert_eq!(verdict(&r, "derived-in-core-yz"), (Verdict::True, Verdict::True));

    let g = smallgroup_216_86().unwrap();
    let r = verify_sufficient_conditions(&g, 3).unwrap();
    assert_eq!(verdict(&r, "derived-in-core-center").0, Verdict::NotApplicable);
    assert_eq!(verdict(&r, "derived-in-core-yz").0, Verdict::NotApplicable);
    let a = verify_pgroup_classification(&g, 3);
    assert!(a.is_err());
    let d = verify_decomposition(&g, 3).unwrap();
    assert!(d.all_agree());
    assert_eq!(d.claim("socle-dimension").unwrap().dims["socle"], 8);
}

#[test]
fn decomposition_examples() {
    let d8c3 = direct_product(&dihedral(8).unwrap(), &cyclic(3).unwrap()).unwrap();
    let r = verify_decomposition(&d8c3, 2).unwrap();
    assert!(r.all_agree());
    assert_eq!(verdict(&r, "central-product"), (Verdict::True, Verdict::True));

    let q16 = quaternion(16).unwrap();
    let r = verify_decomposition(&q16, 2).unwrap();
    assert_eq!(r.claim("central-product").unwrap().dims["residual"], 1);

    let hol = holomorph_cyclic(8).unwrap();
    let r = verify_decomposition(&hol, 2).unwrap();
    assert!(r.claims.iter().all(|c| c.route1 == Verdict::NotApplicable));
}

#[test]
fn quotients_of_d16_keep_the_property() {
    let d16 = dihedral(16).unwrap();
    for n in normal_subgroups(&d16) {
        let r = verify_quotient_and_central_product(&d16, 2, &n, None).unwrap();
        assert!(r.all_agree());
        assert_eq!(verdict(&r, "quotient-inherits"), (Verdict::True, Verdict::True));
    }
}

#[test]
fn central_products() {
    let d8 = dihedral(8).unwrap();
    let g = central_product(&d8, &d8, &[(0, 0), (2, 2)]).unwrap();
    let r = verify_closure(&g, 2).unwrap();
    assert!(r.all_agree());
    assert!(r.claim("central-decompositions-searched").unwrap().dims["found"] > 0);

    // No central decomposition of Hol(C8) has both factors with the property.
    let hol = holomorph_cyclic(8).unwrap();
    let r = verify_closure(&hol, 2).unwrap();
    assert!(r.all_agree());
    for c in r.claims.iter().filter(|c| c.id == "central-product-equivalence") {
        assert_eq!(c.route2, Verdict::False);
    }

    let z = center(&g);
    assert!(verify_quotient_and_central_product(&g, 2, &z, Some((&z, &Subgroup::trivial(&g)))).is_err());
}

#[test]
fn isoclinism_pairs() {
    let d16 = dihedral(16).unwrap();
    for other in [family(Family::SemiDihedral, 16).unwrap(), quaternion(16).unwrap(), d16.clone()] {
        let r = verify_isoclinism_pair(&d16, &other, 2).unwrap();
        assert!(r.all_agree());
        assert_eq!(verdict(&r, "isoclinic-verdicts"), (Verdict::True, Verdict::True));
    }
    assert!(verify_isoclinism_pair(&d16, &cyclic(16).unwrap(), 2).is_err());
}

#[test]
fn analysis_summary() {
    let a = analyze(&holomorph_cyclic(8).unwrap(), 2).unwrap();
    assert_eq!((a.classes, a.jacobson_dim, a.socle_dim, a.derived_ideal_dim), (11, 10, 10, 8));
    assert!(!a.socle_ideal && !a.socle_ideal_criterion);
    let a = analyze(&cyclic(5).unwrap(), 2).unwrap();
    assert!(a.semisimple && a.socle_dim == a.center_dim && a.jacobson_dim == 0);
}

#[test]
fn dihedral_quotient_chain() {
    let mut g = dihedral(32).unwrap();
    while g.order() > 2 && !g.is_abelian() {
        let reports = run_suite(&g, 2, Suite::D).unwrap();
        assert_clean(&reports);
        let z = center(&g);
        g = quotient(&g, &z).unwrap().group;
    }
    assert!(is_p_group(&g, 2));
    assert!(derived_subgroup(&g).is_trivial());
}
