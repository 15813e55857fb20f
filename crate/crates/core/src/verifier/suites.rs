use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{subgroup_socle_is_ideal, within_subgroup, Claim, GroupFacts, VerdictReport};
use crate::algebra::GroupAlgebra;
use crate::error::{Error, Result};
use crate::fp::FpSubspace;
use crate::group::isoclinism::are_isoclinic;
use crate::group::{
    center, centralizer, frattini, intersection, is_central_product, is_metabelian, is_p_group, join,
    nilpotency_class, normal_subgroups, p_residual, ph_decomposition, pprime_core, pprime_sections, quotient,
    y_subgroup, FiniteGroup, PhDecomposition, Subgroup,
};

fn timed(mut report: VerdictReport, start: Instant) -> VerdictReport {
    report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    report
}

fn shape(g: &FiniteGroup, p: u32) -> Option<PhDecomposition> {
    ph_decomposition(g, p).ok()
}

/// The `p`-elements of `Z(G)`.
fn p_part_of_center(g: &FiniteGroup, p: u32) -> Subgroup {
    let z = center(g);
    let members: Vec<usize> = z
        .elements()
        .iter()
        .copied()
        .filter(|&x| crate::group::is_p_power(g.element_order(x), p))
        .collect();
    Subgroup::from_elements(g, &members).expect("p-elements of an abelian group form a subgroup")
}

/// Reynolds ideal: `R(FG)` is an ideal iff `G' ⊆ O_p(G)` iff `G = P ⋊ H` with
/// `H` abelian, and then `R(FG) = O_p(G)^+ FG`.
pub fn verify_reynolds(g: &FiniteGroup, p: u32) -> Result<VerdictReport> {
    let start = Instant::now();
    let facts = GroupFacts::new(g, p)?;
    let mut report = verify_reynolds_with(&facts)?;
    report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    Ok(report)
}

pub fn verify_reynolds_with(facts: &GroupFacts) -> Result<VerdictReport> {
    let g = facts.group();
    let p = facts.prime();
    let alg = &facts.algebra;
    let mut report = VerdictReport::new("A", g, p);

    let r = alg.reynolds();
    let r_fg = alg.embed_center(&r)?;
    let r_ideal = alg.is_ideal(&r_fg)?;
    let derived_in_core = facts.derived.is_subgroup_of(&facts.p_core);
    report.push(
        Claim::equivalence("reynolds-ideal", r_ideal, derived_in_core)
            .dim("reynolds", r.dim())
            .dim("core", facts.p_core.order()),
    );
    let decomposition = shape(g, p);
    report.push(Claim::equivalence("ph-shape", derived_in_core, decomposition.is_some()));
    if r_ideal {
        let core_sum = alg.normal_sum_ideal(&facts.p_core)?;
        report.push(Claim::equal_spaces("reynolds-equals-core-sum", &r_fg, &core_sum)?);
    } else {
        report.push(Claim::not_applicable("reynolds-equals-core-sum"));
    }
    report.push(Claim::implication("sections-are-cosets", r_ideal, || {
        Ok(sections_are_sylow_cosets(g, p, &facts.sylow))
    })?);

    // R(FG) sits inside soc(ZFG) and kills J(ZFG), checked by inclusion and by
    // multiplying out.
    let in_socle = r.is_subspace_of(&facts.socle)?;
    let kills = r.basis_vectors().all(|x| {
        facts
            .jacobson
            .basis_vectors()
            .all(|y| alg.center_mul(x, y).iter().all(|&c| c == 0))
    });
    report.push(Claim::both("reynolds-in-socle", in_socle, kills));
    report.push(Claim::implication("socle-implies-reynolds", facts.socle_is_ideal(), || Ok(r_ideal))?);

    // soc(ZFG) ⊴ FG iff R(FG) ⊴ FG and the same holds for G/O_{p'}(G).
    let op = pprime_core(g, p);
    let bar_ideal = if op.is_trivial() {
        facts.socle_is_ideal()
    } else {
        let q = quotient(g, &op)?;
        GroupAlgebra::new(&q.group, p)?.soc_is_ideal()?.direct
    };
    report.push(
        Claim::equivalence("pprime-core-reduction", facts.socle_is_ideal(), r_ideal && bar_ideal)
            .dim("pprime-core", op.order()),
    );
    Ok(report)
}

fn sections_are_sylow_cosets(g: &FiniteGroup, p: u32, sylow: &Subgroup) -> bool {
    pprime_sections(g, p).iter().all(|s| {
        s.len() == sylow.order() && s.iter().all(|&y| sylow.contains(g.mul(g.inv(s[0]), y)))
    })
}

fn socle_ideal_claims(facts: &GroupFacts, report: &mut VerdictReport) {
    let v = &facts.socle_verdict;
    let mut c = Claim::equivalence("socle-ideal-criterion", v.direct, v.criterion)
        .dim("socle", v.socle_dim)
        .dim("derived-sum-ideal", v.derived_ideal_dim);
    if let Some(w) = &v.witness {
        c = c.with_witness(format!("class coordinates {w:?}"));
    }
    report.push(c);
}

/// Prime-power groups: `soc(ZFG)` is an ideal iff class at most 2 (odd `p`)
/// or `G' ⊆ Y(G) Z(G)` (`p = 2`).
pub fn verify_pgroup_classification(g: &FiniteGroup, p: u32) -> Result<VerdictReport> {
    let start = Instant::now();
    if !is_p_group(g, p) {
        return Err(Error::HypothesisViolation(format!("{} is not a {p}-group", g.name())));
    }
    let facts = GroupFacts::new(g, p)?;
    Ok(timed(verify_pgroup_with(&facts)?, start))
}

pub fn verify_pgroup_with(facts: &GroupFacts) -> Result<VerdictReport> {
    let g = facts.group();
    let p = facts.prime();
    if !is_p_group(g, p) {
        return Err(Error::HypothesisViolation(format!("{} is not a {p}-group", g.name())));
    }
    let alg = &facts.algebra;
    let mut report = VerdictReport::new("B", g, p);
    let ideal = facts.socle_is_ideal();
    socle_ideal_claims(facts, &mut report);

    let class = nilpotency_class(g)?;
    let yz = join(g, &y_subgroup(g), &facts.center);
    let group_criterion = class <= 2 || (p == 2 && facts.derived.is_subgroup_of(&yz));
    report.push(Claim::equivalence("socle-ideal-classification", ideal, group_criterion).dim("class", class));
    report.push(Claim::implication("metabelian", ideal, || Ok(is_metabelian(g)))?);

    let center_sum = alg.normal_sum_ideal(&facts.center)?;
    report.push(Claim::both(
        "socle-in-center-sum",
        facts.socle_fg.is_subspace_of(&center_sum)?,
        facts.socle.dim() <= g.order() / facts.center.order(),
    ));
    if ideal {
        let zd = join(g, &facts.center, &facts.derived);
        report.push(Claim::equal_spaces(
            "socle-equals-center-derived-sum",
            &facts.socle_fg,
            &alg.normal_sum_ideal(&zd)?,
        )?);
    } else {
        report.push(Claim::not_applicable("socle-equals-center-derived-sum"));
    }

    let (selected, ann, q) = alg.central_quotient_annihilator()?;
    let ann_in_derived = q.algebra.embed_center(&ann)?.is_subspace_of(&q.algebra.derived_sum_ideal())?;
    report.push(
        Claim::equivalence("central-quotient-annihilator", ideal, ann_in_derived)
            .dim("selected-classes", selected.len())
            .dim("annihilator", ann.dim()),
    );

    let b = alg.jacobson_center_basis_ph()?;
    let b_span = FpSubspace::span(alg.field(), alg.center_dim(), &b);
    report.push(
        Claim::equal_spaces("radical-basis", &facts.jacobson, &b_span)?
            .dim("basis-size", b.len()),
    );

    if p == 2 {
        let y_sum = alg.normal_sum_ideal(&y_subgroup(g))?;
        report.push(Claim::both(
            "socle-in-y-sum",
            facts.socle_fg.is_subspace_of(&y_sum)?,
            y_subgroup(g).is_subgroup_of(&within_subgroup(g, &frattini(g), center)?),
        ));
    } else if class == 2 {
        let w = alg.odd_witness()?;
        // Second route: y (G')^+ = 0 in class coordinates.
        let y = alg.to_class_coords(&w.element)?;
        let d = alg.to_class_coords(&alg.subset_sum(facts.derived.elements()))?;
        let kills_derived = alg.center_mul(&y, &d).iter().all(|&c| c == 0);
        report.push(
            Claim::both("odd-witness", w.holds(), kills_derived && w.outside_derived_ideal)
                .dim("subgroups", w.subgroups_checked),
        );
    } else if class == 3 {
        report.push(odd_witness_on_central_quotient(alg, &q, &ann, &selected)?);
    }
    Ok(report)
}

/// For class 3 and odd `p`: the witness for `G/Z(G)` kills every selected
/// image class sum, so it lies in the annihilator but not in `(Ḡ')^+ FḠ`.
fn odd_witness_on_central_quotient(
    alg: &GroupAlgebra,
    q: &crate::algebra::QuotientAlgebra,
    ann: &FpSubspace,
    selected: &[usize],
) -> Result<Claim> {
    let w = q.algebra.odd_witness()?;
    let mut kills = true;
    for &c in selected {
        let image = q.image_class(alg, c);
        let sum = q.algebra.class_sum(image);
        if !q.algebra.multiply(&w.element, &sum)?.is_zero() {
            kills = false;
        }
    }
    let in_ann = ann.contains(&q.algebra.to_class_coords(&w.element)?)?;
    Ok(Claim::both("odd-witness", w.holds(), kills && in_ann)
        .scoped("G/Z(G)")
        .dim("subgroups", w.subgroups_checked)
        .dim("selected-classes", selected.len()))
}

/// Sufficient conditions: `G' ⊆ Z(O_p(G))`, or `p = 2` and
/// `G' ⊆ Y(O_2(G)) Z(O_2(G))`; and `G = C_G(H) Z(P)` forces
/// `soc(ZFG) ⊆ Z(P)^+ FG`.
pub fn verify_sufficient_conditions(g: &FiniteGroup, p: u32) -> Result<VerdictReport> {
    let start = Instant::now();
    let facts = GroupFacts::new(g, p)?;
    Ok(timed(verify_sufficient_with(&facts)?, start))
}

pub fn verify_sufficient_with(facts: &GroupFacts) -> Result<VerdictReport> {
    let g = facts.group();
    let p = facts.prime();
    let mut report = VerdictReport::new("C", g, p);
    let ideal = facts.socle_is_ideal();
    let core = &facts.p_core;
    let core_center = within_subgroup(g, core, center)?;
    let central = facts.derived.is_subgroup_of(&core_center);
    report.push(Claim::implication("derived-in-core-center", central, || Ok(ideal))?);
    if p == 2 {
        let y = within_subgroup(g, core, y_subgroup)?;
        let yz = join(g, &y, &core_center);
        let hyp = facts.derived.is_subgroup_of(&yz);
        report.push(Claim::implication("derived-in-core-yz", hyp, || Ok(ideal))?);
    } else {
        report.push(Claim::not_applicable("derived-in-core-yz"));
    }
    match shape(g, p) {
        Some(d) => {
            let zp = within_subgroup(g, &d.sylow, center)?;
            let ch = centralizer(g, d.complement.elements());
            let covers = join(g, &ch, &zp).order() == g.order();
            report.push(Claim::implication("centralizer-cover", covers, || {
                facts
                    .socle_fg
                    .is_subspace_of(&facts.algebra.normal_sum_ideal(&zp)?)
            })?);
        }
        None => report.push(Claim::not_applicable("centralizer-cover")),
    }
    Ok(report)
}

/// Structure when `soc(ZFG)` is an ideal: `G = C_P(H) * O^p(G)`,
/// `soc(ZFG) = (Z(P)G')^+ FG` of dimension `|G : G'Z(G)|`, and the socle
/// property for both factors and for `P`.
pub fn verify_decomposition(g: &FiniteGroup, p: u32) -> Result<VerdictReport> {
    let start = Instant::now();
    let facts = GroupFacts::new(g, p)?;
    Ok(timed(verify_decomposition_with(&facts)?, start))
}

pub fn verify_decomposition_with(facts: &GroupFacts) -> Result<VerdictReport> {
    let g = facts.group();
    let p = facts.prime();
    let mut report = VerdictReport::new("D", g, p);
    let ids = [
        "central-product",
        "socle-formula",
        "socle-dimension",
        "socle-dimension-pprime-free",
        "factor-socle-ideals",
        "sylow-socle-ideal",
    ];
    if !facts.socle_is_ideal() {
        for id in ids {
            report.push(Claim::not_applicable(id));
        }
        return Ok(report);
    }
    let d = ph_decomposition(g, p)?;
    let cph = intersection(g, &centralizer(g, d.complement.elements()), &d.sylow);
    let residual = p_residual(g, p);
    report.push(
        Claim::both(
            "central-product",
            is_central_product(g, &cph, &residual),
            join(g, &cph, &residual).order() == g.order(),
        )
        .dim("centralizer", cph.order())
        .dim("residual", residual.order()),
    );
    let zp = within_subgroup(g, &d.sylow, center)?;
    let zpd = join(g, &zp, &facts.derived);
    report.push(Claim::equal_spaces(
        "socle-formula",
        &facts.socle_fg,
        &facts.algebra.normal_sum_ideal(&zpd)?,
    )?);
    // |G : G'Z(G)| = |G : Z(P)G'| / |O_{p'}(G)|, so the plain index formula
    // needs O_{p'}(G) = 1; the general form is checked by both routes.
    let index = g.order() / join(g, &facts.derived, &facts.center).order();
    let pprime = pprime_core(g, p).order();
    let via_basis = facts.algebra.center_annihilator(&facts.algebra.jacobson_center_basis_ph()?)?;
    report.push(
        Claim::both(
            "socle-dimension",
            facts.socle.dim() == g.order() / zpd.order(),
            via_basis.dim() == index * pprime,
        )
        .dim("socle", facts.socle.dim())
        .dim("index", index)
        .dim("pprime-core", pprime),
    );
    report.push(Claim::implication("socle-dimension-pprime-free", pprime == 1, || {
        Ok(facts.socle.dim() == index)
    })?);
    report.push(Claim::both(
        "factor-socle-ideals",
        subgroup_socle_is_ideal(g, &cph, p)?,
        subgroup_socle_is_ideal(g, &residual, p)?,
    ));
    let sylow_ideal = subgroup_socle_is_ideal(g, &d.sylow, p)?;
    report.push(Claim::both("sylow-socle-ideal", sylow_ideal, !sylow_ideal || is_metabelian(&crate::group::induced_group(g, &d.sylow, "P").0)));
    Ok(report)
}

/// Invariants of `G = P ⋊ H`: the `b_C` basis spans `J(ZFG)`,
/// `(Z(P)G')^+ FG ∩ ZFG ⊆ soc(ZFG) ⊆ O_p(Z(G))^+ FG`, and `soc(ZFG)` is
/// graded by the cosets of `P`.
pub fn verify_ph_invariants(g: &FiniteGroup, p: u32) -> Result<VerdictReport> {
    let start = Instant::now();
    let facts = GroupFacts::new(g, p)?;
    Ok(timed(verify_ph_invariants_with(&facts)?, start))
}

pub fn verify_ph_invariants_with(facts: &GroupFacts) -> Result<VerdictReport> {
    let g = facts.group();
    let p = facts.prime();
    let alg = &facts.algebra;
    let mut report = VerdictReport::new("structure", g, p);
    let ids = ["radical-basis", "sandwich-lower", "sandwich-upper", "grading"];
    let Some(d) = shape(g, p) else {
        for id in ids {
            report.push(Claim::not_applicable(id));
        }
        return Ok(report);
    };
    let b = alg.jacobson_center_basis_ph()?;
    let b_span = FpSubspace::span(alg.field(), alg.center_dim(), &b);
    report.push(
        Claim::equal_spaces("radical-basis", &facts.jacobson, &b_span)?
            .dim("basis-size", b.len()),
    );

    let zp = within_subgroup(g, &d.sylow, center)?;
    let lower = alg.center_meet(&alg.normal_sum_ideal(&join(g, &zp, &facts.derived))?)?;
    let lower_in = lower.is_subspace_of(&facts.socle)?;
    let lower_kills = lower.basis_vectors().all(|x| {
        facts
            .jacobson
            .basis_vectors()
            .all(|y| alg.center_mul(x, y).iter().all(|&c| c == 0))
    });
    report.push(Claim::both("sandwich-lower", lower_in, lower_kills).dim("lower", lower.dim()));

    let upper = alg.normal_sum_ideal(&p_part_of_center(g, p))?;
    report.push(Claim::both(
        "sandwich-upper",
        facts.socle_fg.is_subspace_of(&upper)?,
        facts.socle.dim() <= upper.dim(),
    ));

    let homogeneous = b.iter().all(|v| {
        let mut cosets = v
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != 0)
            .flat_map(|(i, _)| alg.classes().class(i).iter().map(|&x| coset_of(g, &d.sylow, x)));
        match cosets.next() {
            Some(first) => cosets.all(|c| c == first),
            None => true,
        }
    });
    report.push(Claim::both("grading", socle_is_graded(facts, &d.sylow)?, homogeneous));
    Ok(report)
}

/// Smallest element of `xP`.
fn coset_of(g: &FiniteGroup, sylow: &Subgroup, x: usize) -> usize {
    sylow.elements().iter().map(|&y| g.mul(x, y)).min().expect("nonempty")
}

/// Each socle vector's restriction to a coset `hP` lies in the socle again.
fn socle_is_graded(facts: &GroupFacts, sylow: &Subgroup) -> Result<bool> {
    let g = facts.group();
    let mut block = vec![usize::MAX; g.order()];
    let mut blocks = 0;
    for x in g.elements() {
        if block[x] == usize::MAX {
            for &y in sylow.elements() {
                block[g.mul(x, y)] = blocks;
            }
            blocks += 1;
        }
    }
    for v in facts.socle_fg.basis_vectors() {
        for b in 0..blocks {
            let part: Vec<u32> = v
                .iter()
                .enumerate()
                .map(|(x, &c)| if block[x] == b { c } else { 0 })
                .collect();
            if !facts.socle_fg.contains(&part)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Passing to `G/N` preserves the socle property; for `G = A * B` it holds
/// iff it holds for both factors.
pub fn verify_quotient_and_central_product(
    g: &FiniteGroup,
    p: u32,
    n: &Subgroup,
    factors: Option<(&Subgroup, &Subgroup)>,
) -> Result<VerdictReport> {
    let start = Instant::now();
    let facts = GroupFacts::new(g, p)?;
    let mut report = VerdictReport::new("closure", g, p);
    for c in quotient_claims(&facts, n)? {
        report.push(c);
    }
    if let Some((a, b)) = factors {
        if !is_central_product(g, a, b) {
            return Err(Error::HypothesisViolation("subgroups do not form a central product".into()));
        }
        let both = subgroup_socle_is_ideal(g, a, p)? && subgroup_socle_is_ideal(g, b, p)?;
        report.push(Claim::equivalence("central-product-equivalence", facts.socle_is_ideal(), both));
    }
    Ok(timed(report, start))
}

fn quotient_claims(facts: &GroupFacts, n: &Subgroup) -> Result<Vec<Claim>> {
    let g = facts.group();
    let p = facts.prime();
    let scope = format!("N of order {}", n.order());
    let alg = &facts.algebra;
    let q = alg.quotient_algebra(n)?;
    let ideal = facts.socle_is_ideal();
    let mut out = vec![Claim::implication("quotient-inherits", ideal, || {
        Ok(q.algebra.soc_is_ideal()?.direct)
    })?
    .scoped(scope.clone())];
    if shape(g, p).is_some() {
        let (selection, _) = alg.dcl(n)?;
        out.push(
            Claim::both("class-selection", selection.agree(), selection.entries.iter().all(|e| e.k * q.algebra.classes().class(e.image_class).len() == alg.classes().class(e.class).len()))
                .scoped(scope.clone())
                .dim("selected", selection.selected().count()),
        );
        let ann = alg.quotient_annihilator(n)?;
        out.push(
            Claim::equal_spaces("annihilator-routes", &ann.via_selection, &ann.via_radical)?.scoped(scope.clone()),
        );
        out.push(Claim::implication("annihilator-in-derived-ideal", ideal, || Ok(ann.in_derived_ideal))?.scoped(scope));
    }
    Ok(out)
}

/// Upper bound on `|G|` for the exhaustive normal-subgroup and
/// central-decomposition searches in [`verify_closure`].
pub const CLOSURE_SEARCH_LIMIT: usize = 64;

/// Runs the quotient claims over every normal subgroup and the central
/// product claim over every decomposition `G = A * B` into proper normal
/// subgroups.
pub fn verify_closure(g: &FiniteGroup, p: u32) -> Result<VerdictReport> {
    let start = Instant::now();
    let facts = GroupFacts::new(g, p)?;
    let mut report = VerdictReport::new("closure", g, p);
    if g.order() > CLOSURE_SEARCH_LIMIT {
        report.push(Claim::not_applicable("quotient-inherits").scoped("search bound exceeded"));
        return Ok(timed(report, start));
    }
    let normals = normal_subgroups(g);
    for n in &normals {
        for c in quotient_claims(&facts, n)? {
            report.push(c);
        }
    }
    let proper: Vec<&Subgroup> = normals
        .iter()
        .filter(|n| !n.is_trivial() && n.order() < g.order())
        .collect();
    let mut ideal_cache: Vec<Option<bool>> = vec![None; proper.len()];
    let mut decompositions = 0;
    for i in 0..proper.len() {
        for j in i..proper.len() {
            if !is_central_product(g, proper[i], proper[j]) {
                continue;
            }
            decompositions += 1;
            for k in [i, j] {
                if ideal_cache[k].is_none() {
                    ideal_cache[k] = Some(subgroup_socle_is_ideal(g, proper[k], p)?);
                }
            }
            let both = ideal_cache[i].unwrap() && ideal_cache[j].unwrap();
            report.push(
                Claim::equivalence("central-product-equivalence", facts.socle_is_ideal(), both)
                    .scoped(format!("factors of order {} and {}", proper[i].order(), proper[j].order())),
            );
        }
    }
    report.push(Claim::both("central-decompositions-searched", true, true).dim("found", decompositions));
    Ok(timed(report, start))
}

/// Isoclinic `p`-groups agree on the socle property, and each satisfies the
/// central-quotient criterion.
pub fn verify_isoclinism_pair(g1: &FiniteGroup, g2: &FiniteGroup, p: u32) -> Result<VerdictReport> {
    let start = Instant::now();
    for g in [g1, g2] {
        if !is_p_group(g, p) {
            return Err(Error::HypothesisViolation(format!("{} is not a {p}-group", g.name())));
        }
    }
    if are_isoclinic(g1, g2)?.is_none() {
        return Err(Error::HypothesisViolation(format!(
            "{} and {} are not isoclinic",
            g1.name(),
            g2.name()
        )));
    }
    let mut report = VerdictReport::new("isoclinism", g1, p);
    report.group = format!("{} ~ {}", g1.name(), g2.name());
    let mut verdicts = Vec::new();
    for g in [g1, g2] {
        let alg = GroupAlgebra::new(g, p)?;
        let ideal = alg.soc_is_ideal()?.direct;
        let (_, ann, q) = alg.central_quotient_annihilator()?;
        let contained = q.algebra.embed_center(&ann)?.is_subspace_of(&q.algebra.derived_sum_ideal())?;
        report.push(Claim::equivalence("central-quotient-annihilator", ideal, contained).scoped(g.name()));
        verdicts.push(ideal);
    }
    report.push(Claim::equivalence("isoclinic-verdicts", verdicts[0], verdicts[1]));
    Ok(timed(report, start))
}

/// Which verifier suites to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// Reynolds ideal.
    A,
    /// Prime-power groups.
    B,
    /// Sufficient conditions.
    C,
    /// Decomposition, structure invariants, quotients and central products.
    D,
    All,
}

/// Runs a suite on one group. Suite B is skipped for groups that are not
/// `p`-groups.
pub fn run_suite(g: &FiniteGroup, p: u32, suite: Suite) -> Result<Vec<VerdictReport>> {
    let start = Instant::now();
    let facts = GroupFacts::new(g, p)?;
    let mut out = Vec::new();
    let wants = |s: Suite| suite == Suite::All || suite == s;
    if wants(Suite::A) {
        out.push(verify_reynolds_with(&facts)?);
    }
    if wants(Suite::B) && is_p_group(g, p) {
        out.push(verify_pgroup_with(&facts)?);
    }
    if wants(Suite::C) {
        out.push(verify_sufficient_with(&facts)?);
    }
    if wants(Suite::D) {
        out.push(verify_decomposition_with(&facts)?);
        out.push(verify_ph_invariants_with(&facts)?);
        out.push(verify_closure(g, p)?);
    }
    let ms = start.elapsed().as_millis() as u64;
    for r in &mut out {
        r.elapsed_ms.get_or_insert(ms);
    }
    Ok(out)
}

/// Orders, dimensions and verdicts for one group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupAnalysis {
    pub name: String,
    pub order: usize,
    pub prime: u32,
    pub classes: usize,
    pub center_order: usize,
    pub derived_order: usize,
    pub frattini_order: usize,
    pub p_core_order: usize,
    /// Only for 2-groups.
    pub y_order: Option<usize>,
    pub nilpotency_class: Option<usize>,
    /// Dimensions over `F_p`.
    pub center_dim: usize,
    pub jacobson_dim: usize,
    pub socle_dim: usize,
    pub reynolds_dim: usize,
    pub derived_ideal_dim: usize,
    pub semisimple: bool,
    pub socle_ideal: bool,
    pub socle_ideal_criterion: bool,
    pub reynolds_ideal: bool,
    pub derived_in_p_core: bool,
    /// Class at most 2, or for `p = 2` the `Y(G)Z(G)` criterion; only for `p`-groups.
    pub pgroup_criterion: Option<bool>,
}

pub fn analyze(g: &FiniteGroup, p: u32) -> Result<GroupAnalysis> {
    let facts = GroupFacts::new(g, p)?;
    let alg = &facts.algebra;
    let r = alg.reynolds();
    let reynolds_ideal = alg.is_ideal(&alg.embed_center(&r)?)?;
    let is_pg = is_p_group(g, p);
    let class = nilpotency_class(g).ok();
    let y = (is_pg && p == 2).then(|| y_subgroup(g));
    let pgroup_criterion = if is_pg {
        let c = class.expect("p-groups are nilpotent");
        Some(
            c <= 2
                || y.as_ref()
                    .is_some_and(|y| facts.derived.is_subgroup_of(&join(g, y, &facts.center))),
        )
    } else {
        None
    };
    Ok(GroupAnalysis {
        name: g.name().to_string(),
        order: g.order(),
        prime: p,
        classes: alg.center_dim(),
        center_order: facts.center.order(),
        derived_order: facts.derived.order(),
        frattini_order: frattini(g).order(),
        p_core_order: facts.p_core.order(),
        y_order: y.map(|y| y.order()),
        nilpotency_class: class,
        center_dim: alg.center_dim(),
        jacobson_dim: facts.jacobson.dim(),
        socle_dim: facts.socle.dim(),
        reynolds_dim: r.dim(),
        derived_ideal_dim: facts.socle_verdict.derived_ideal_dim,
        semisimple: g.order() % p as usize != 0,
        socle_ideal: facts.socle_verdict.direct,
        socle_ideal_criterion: facts.socle_verdict.criterion,
        reynolds_ideal,
        derived_in_p_core: facts.derived.is_subgroup_of(&facts.p_core),
        pgroup_criterion,
    })
}
