//! Acceptance run: one PASS/FAIL/SKIPPED line per criterion. All numeric
//! checks are exact; only wall-clock limits carry a tolerance, pinned below.
//! Exits non-zero if any criterion fails.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use socle_core::algebra::GroupAlgebra;
use socle_core::constructors::*;
use socle_core::fp::FpSubspace;
use socle_core::group::*;
use socle_core::verifier::*;

const LIMIT_HOLOMORPH: Duration = Duration::from_secs(1);
const LIMIT_216: Duration = Duration::from_secs(10);
const LIMIT_DIHEDRAL: Duration = Duration::from_secs(5);
const LIMIT_ORDER32: Duration = Duration::from_secs(60);
const PRIMES: [u32; 3] = [2, 3, 5];

enum Outcome {
    Pass(String),
    Fail(String),
    Skipped(String),
}

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Check) -> Outcome {
    let start = Instant::now();
    let result = f();
    let elapsed = start.elapsed();
    let time = format!("{:.2} s, limit {} s", elapsed.as_secs_f64(), limit.as_secs());
    match result {
        Ok(msg) if elapsed <= limit => Outcome::Pass(format!("{msg} [{time}]")),
        Ok(msg) => Outcome::Fail(format!("{msg} but too slow [{time}]")),
        Err(msg) => Outcome::Fail(format!("{msg} [{time}]")),
    }
}

fn untimed(f: impl FnOnce() -> Check) -> Outcome {
    match f() {
        Ok(msg) => Outcome::Pass(msg),
        Err(msg) => Outcome::Fail(msg),
    }
}

fn err(e: socle_core::Error) -> String {
    e.to_string()
}

fn holomorph() -> Check {
    let g = holomorph_cyclic(8).map_err(err)?;
    let alg = GroupAlgebra::new(&g, 2).map_err(err)?;
    let j = alg.jacobson_center();
    let soc = alg.socle_center().map_err(err)?;
    let j_squared_zero = j
        .basis_vectors()
        .all(|x| j.basis_vectors().all(|y| alg.center_mul(x, y).iter().all(|&c| c == 0)));
    let derived_ideal = alg.derived_sum_ideal();
    let verdict = alg.socle_ideal_verdict(&soc).map_err(err)?;
    ensure(g.conjugacy_classes().len() == 11, "classes != 11")?;
    ensure(alg.center_dim() == 11, "dim ZFG != 11")?;
    ensure(j.dim() == 10, format!("dim J = {}", j.dim()))?;
    ensure(j_squared_zero, "J^2 != 0")?;
    ensure(soc == j, "soc != J")?;
    ensure(derived_ideal.dim() == 8, format!("dim (G')+FG = {}", derived_ideal.dim()))?;
    ensure(!verdict.direct && !verdict.criterion, "soc reported as an ideal")?;
    Ok("Hol(C8) p=2: 11 classes, dim ZFG 11, dim J 10, J^2 = 0, soc = J, dim (G')+FG 8, soc not an ideal".into())
}

fn smallgroup_216() -> Check {
    let g = smallgroup_216_86().map_err(err)?;
    let d = derived_subgroup(&g);
    let (dg, _) = induced_group(&g, &d, "G'");
    let dz = center(&dg);
    let dd = derived_subgroup(&dg);
    let df = frattini(&dg);
    ensure(g.order() == 216, "order != 216")?;
    ensure(d.order() == 27, format!("|G'| = {}", d.order()))?;
    ensure(
        dz.order() == 3 && dd.order() == 3 && df.order() == 3 && is_p_group(&dg, 3),
        "G' is not extraspecial",
    )?;

    let alg = GroupAlgebra::new(&g, 3).map_err(err)?;
    let soc = alg.socle_center().map_err(err)?;
    let verdict = alg.socle_ideal_verdict(&soc).map_err(err)?;
    ensure(verdict.direct && verdict.criterion, "soc is not an ideal")?;

    let h = hall_complement(&g, 3).map_err(err)?;
    let coset_sums: Vec<Vec<u32>> = h
        .elements()
        .iter()
        .map(|&x| {
            let coset: Vec<usize> = d.elements().iter().map(|&y| g.mul(x, y)).collect();
            alg.subset_sum(&coset).into_coeffs()
        })
        .collect();
    let span = FpSubspace::span(alg.field(), alg.dim(), &coset_sums);
    let soc_fg = alg.embed_center(&soc).map_err(err)?;
    ensure(h.order() == 8 && span.dim() == 8, "coset sums are not 8 independent elements")?;
    ensure(span == soc_fg, "soc != span of (hG')+")?;
    let index = g.order() / join(&g, &d, &center(&g)).order();
    ensure(soc.dim() == 8 && index == 8, format!("dim soc {} vs |G:G'Z(G)| {}", soc.dim(), index))?;
    Ok("SmallGroup(216,86) p=3: G' extraspecial of order 27, soc ideal, soc basis {(hG')+ : h in H}, dim soc 8 = |G:G'Z(G)|".into())
}

fn dihedral_family() -> Check {
    for n in 3..=6 {
        let g = dihedral(1 << n).map_err(err)?;
        let alg = GroupAlgebra::new(&g, 2).map_err(err)?;
        let v = alg.soc_is_ideal().map_err(err)?;
        ensure(v.direct && v.criterion, format!("{}: soc not an ideal", g.name()))?;
        let yz = join(&g, &y_subgroup(&g), &center(&g));
        ensure(derived_subgroup(&g) == yz, format!("{}: G' != Y(G)Z(G)", g.name()))?;
    }
    let triple = [
        dihedral(16).map_err(err)?,
        family(Family::SemiDihedral, 16).map_err(err)?,
        quaternion(16).map_err(err)?,
    ];
    for (i, a) in triple.iter().enumerate() {
        for b in &triple[i + 1..] {
            let r = verify_isoclinism_pair(a, b, 2).map_err(err)?;
            ensure(r.all_agree(), format!("{}: disagreement", r.group))?;
            let c = r.claim("isoclinic-verdicts").ok_or("missing claim")?;
            ensure(c.route1 == Verdict::True && c.route2 == Verdict::True, format!("{}: verdicts differ", r.group))?;
        }
    }
    Ok("D8, D16, D32, D64 p=2: soc ideal and G' = Y(G)Z(G); D16, SD16, Q16 isoclinic with equal verdicts".into())
}

fn small_two_groups() -> Check {
    let groups = two_groups_up_to_16();
    for g in &groups {
        let v = GroupAlgebra::new(g, 2).map_err(err)?.soc_is_ideal().map_err(err)?;
        ensure(v.direct && v.criterion, format!("{}: soc not an ideal", g.name()))?;
    }
    Ok(format!("all {} 2-groups of order <= 16: soc ideal", groups.len()))
}

fn order32_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../catalogs/order32")
}

fn order32_catalog() -> Option<Result<Catalog, String>> {
    let dir = order32_dir();
    dir.join(MANIFEST_FILE).exists().then(|| load_catalog(&dir).map_err(err))
}

fn order32_census(catalog: &Catalog) -> Check {
    ensure(catalog.has_tag(ORDER32_COMPLETE), "catalog lacks the order32-complete tag")?;
    let s = run_census(&catalog.id, &catalog.tags, &catalog.groups, 2, None).map_err(err)?;
    let c = &s.counts;
    let split = (c.groups, c.abelian, c.class_two, c.y_criterion_beyond_class_two);
    ensure(split == ORDER32_SPLIT, format!("split {split:?}, expected {ORDER32_SPLIT:?}"))?;
    let disagreeing: Vec<&str> = s.entries.iter().filter(|e| !e.agree).map(|e| e.name.as_str()).collect();
    ensure(disagreeing.is_empty(), format!("disagreement on {disagreeing:?}"))?;
    ensure(s.all_agree(), "census checks failed")?;
    Ok(format!(
        "order 32 p=2: {} groups, abelian {}, class two {}, further Y-criterion {}, soc ideal {}, all routes agree",
        c.groups, c.abelian, c.class_two, c.y_criterion_beyond_class_two, c.socle_ideal
    ))
}

/// Every suite run over the catalog at every prime.
struct SuiteRuns {
    reports: Vec<VerdictReport>,
    runs: usize,
}

impl SuiteRuns {
    fn collect(groups: &[FiniteGroup]) -> Result<SuiteRuns, String> {
        let mut reports = Vec::new();
        let mut runs = 0;
        for g in groups {
            for p in PRIMES {
                reports.extend(run_suite(g, p, Suite::All).map_err(|e| format!("{} p={p}: {e}", g.name()))?);
                runs += 1;
            }
        }
        Ok(SuiteRuns { reports, runs })
    }

    fn claims<'a>(&'a self, suite: &'a str, ids: &'a [&'a str]) -> impl Iterator<Item = (&'a VerdictReport, &'a Claim)> {
        self.reports
            .iter()
            .filter(move |r| r.suite == suite)
            .flat_map(|r| r.claims.iter().map(move |c| (r, c)))
            .filter(move |(_, c)| ids.contains(&c.id.as_str()))
    }

    /// Fails on any disagreeing claim; returns (claims checked, claims applicable).
    fn tally(&self, suite: &str, ids: &[&str]) -> Result<(usize, usize), String> {
        let mut total = 0;
        let mut applicable = 0;
        for (r, c) in self.claims(suite, ids) {
            ensure(
                c.agree,
                format!("{} p={} {}: {:?}/{:?} {:?}", r.group, r.prime, c.id, c.route1, c.route2, c.dims),
            )?;
            total += 1;
            applicable += (c.route1 != Verdict::NotApplicable) as usize;
        }
        Ok((total, applicable))
    }
}

fn reynolds_suite(runs: &SuiteRuns) -> Check {
    let (n, _) = runs.tally("A", &["reynolds-ideal"])?;
    let (m, applied) = runs.tally("A", &["reynolds-equals-core-sum"])?;
    ensure(n == m && n > 0, "missing claims")?;
    Ok(format!(
        "{n} (group, p) runs: R ideal <=> G' <= O_p(G) with no disagreement; R = O_p(G)+FG on all {applied} ideal cases"
    ))
}

fn pgroup_suite(runs: &SuiteRuns, catalog: &[FiniteGroup]) -> Check {
    let (n, _) = runs.tally("B", &["socle-ideal-classification", "socle-ideal-criterion"])?;
    let (_, metabelian) = runs.tally("B", &["metabelian"])?;
    let (_, witnesses) = runs.tally("B", &["odd-witness"])?;
    let mut class_three = 0;
    for g in catalog {
        for p in [3, 5] {
            if !is_p_group(g, p) || nilpotency_class(g).ok() != Some(3) {
                continue;
            }
            let r = runs
                .reports
                .iter()
                .find(|r| r.suite == "B" && r.group == g.name() && r.prime == p)
                .ok_or_else(|| format!("{} p={p}: no suite B report", g.name()))?;
            let c = r.claim("odd-witness").ok_or("missing odd-witness")?;
            ensure(
                c.route1 == Verdict::True && c.route2 == Verdict::True,
                format!("{} p={p}: witness fails", g.name()),
            )?;
            class_three += 1;
        }
    }
    ensure(class_three > 0, "no odd class-3 p-group in the catalog")?;
    Ok(format!(
        "{} p-group claims agree; metabelian on {metabelian} ideal cases; odd witness validated on {witnesses} groups, {class_three} of class 3",
        n
    ))
}

fn radical_basis(runs: &SuiteRuns) -> Check {
    let (_, applied) = runs.tally("structure", &["radical-basis"])?;
    ensure(applied > 0, "no group of P:H shape")?;
    Ok(format!("Frobenius kernel = span of the b_C basis on all {applied} P:H runs"))
}

fn sandwich_grading(runs: &SuiteRuns) -> Check {
    let (_, sandwich) = runs.tally("structure", &["sandwich-lower", "sandwich-upper"])?;
    let (_, grading) = runs.tally("structure", &["grading"])?;
    let (_, y_sum) = runs.tally("B", &["socle-in-y-sum"])?;
    ensure(sandwich > 0 && grading > 0 && y_sum > 0, "invariants never applied")?;
    Ok(format!(
        "sandwich {sandwich} checks, grading {grading} checks, soc in Y-sum {y_sum} checks: zero violations"
    ))
}

fn closure_family() -> Check {
    let d8 = dihedral(8).map_err(err)?;
    let q8 = quaternion(8).map_err(err)?;
    let c2 = cyclic(2).map_err(err)?;
    let c3 = cyclic(3).map_err(err)?;
    let mut family = vec![
        direct_product(&d8, &c2).map_err(err)?,
        direct_product(&d8, &c3).map_err(err)?,
        direct_product(&q8, &c2).map_err(err)?,
        direct_product(&d8, &abelian(&[2, 2]).map_err(err)?).map_err(err)?,
        direct_product(&symmetric(3).map_err(err)?, &c3).map_err(err)?,
        central_product(&d8, &d8, &[(0, 0), (2, 2)]).map_err(err)?,
        central_product(&d8, &cyclic(4).map_err(err)?, &[(0, 0), (2, 2)]).map_err(err)?,
        holomorph_cyclic(8).map_err(err)?,
    ];
    let mut g = dihedral(32).map_err(err)?;
    while !g.is_abelian() {
        family.push(g.clone());
        g = quotient(&g, &center(&g)).map_err(err)?.group;
    }
    let mut quotients = 0;
    let mut decompositions = 0;
    for g in &family {
        let r = verify_closure(g, 2).map_err(err)?;
        let bad: Vec<&Claim> = r.failures().collect();
        ensure(bad.is_empty(), format!("{}: {bad:?}", g.name()))?;
        quotients += r.claims.iter().filter(|c| c.id == "quotient-inherits").count();
        decompositions += r.claims.iter().filter(|c| c.id == "central-product-equivalence").count();
    }
    Ok(format!(
        "{} groups (direct products, central products, D32 quotient chain): {quotients} quotient and {decompositions} central-product checks agree",
        family.len()
    ))
}

fn main() {
    let mut outcomes: Vec<(usize, Outcome)> = vec![
        (1, timed(LIMIT_HOLOMORPH, holomorph)),
        (2, timed(LIMIT_216, smallgroup_216)),
        (3, timed(LIMIT_DIHEDRAL, dihedral_family)),
        (4, untimed(small_two_groups)),
    ];

    let order32 = order32_catalog();
    outcomes.push((
        5,
        match &order32 {
            None => Outcome::Skipped(format!("no catalog at {}", order32_dir().display())),
            Some(Err(e)) => Outcome::Fail(e.clone()),
            Some(Ok(cat)) => timed(LIMIT_ORDER32, || order32_census(cat)),
        },
    ));

    let mut catalog = builtin_catalog();
    if let Some(Ok(cat)) = &order32 {
        catalog.extend(cat.groups.iter().cloned());
    }
    match SuiteRuns::collect(&catalog) {
        Ok(runs) => {
            let scope = format!("{} groups x p in {PRIMES:?}, {} runs", catalog.len(), runs.runs);
            let with_scope = |o: Outcome| match o {
                Outcome::Pass(m) => Outcome::Pass(format!("{m} ({scope})")),
                other => other,
            };
            outcomes.push((6, with_scope(untimed(|| reynolds_suite(&runs)))));
            outcomes.push((7, with_scope(untimed(|| pgroup_suite(&runs, &catalog)))));
            outcomes.push((8, with_scope(untimed(|| radical_basis(&runs)))));
            outcomes.push((9, with_scope(untimed(|| sandwich_grading(&runs)))));
        }
        Err(e) => {
            for k in 6..=9 {
                outcomes.push((k, Outcome::Fail(e.clone())));
            }
        }
    }
    outcomes.push((10, untimed(closure_family)));

    let mut failed = 0;
    for (k, o) in &outcomes {
        let (tag, msg) = match o {
            Outcome::Pass(m) => ("PASS", m),
            Outcome::Fail(m) => {
                failed += 1;
                ("FAIL", m)
            }
            Outcome::Skipped(m) => ("SKIPPED", m),
        };
        println!("criterion {k:>2}: {tag:<7} {msg}");
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
