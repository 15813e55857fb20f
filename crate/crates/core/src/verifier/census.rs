//! Catalog-wide counts of the group properties that decide whether
//! `soc(ZFG)` is an ideal.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{verify_pgroup_with, verify_reynolds_with, Claim, GroupFacts, VerdictReport};
use crate::error::{Error, Result};
use crate::group::{is_p_group, join, nilpotency_class, y_subgroup, FiniteGroup};

/// Catalog tag asserting that the catalog holds all 51 groups of order 32.
pub const ORDER32_COMPLETE: &str = "order32-complete";

/// Expected split for the complete order-32 catalog at `p = 2`:
/// (catalog size, abelian, class exactly 2, class at least 3 with `G' ⊆ Y(G)Z(G)`).
pub const ORDER32_SPLIT: (usize, usize, usize, usize) = (51, 7, 26, 13);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntry {
    pub name: String,
    pub order: usize,
    pub abelian: bool,
    pub nilpotency_class: Option<usize>,
    /// `G' ⊆ Y(G) Z(G)`; only for 2-groups at `p = 2`.
    pub y_criterion: Option<bool>,
    pub socle_ideal: bool,
    pub reynolds_ideal: bool,
    pub agree: bool,
    pub reports: Vec<VerdictReport>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusCounts {
    pub groups: usize,
    pub p_groups: usize,
    pub abelian: usize,
    pub class_two: usize,
    pub class_at_most_two: usize,
    /// Every group meeting the `Y(G)Z(G)` criterion, including class at most 2.
    pub y_criterion: usize,
    /// Class at least 3 and meeting the `Y(G)Z(G)` criterion.
    pub y_criterion_beyond_class_two: usize,
    /// Class exactly 2 and meeting the `Y(G)Z(G)` criterion.
    pub y_overlap_with_class_two: usize,
    pub socle_ideal: usize,
    pub reynolds_ideal: usize,
    /// Abelian, class 2 or meeting the `Y(G)Z(G)` criterion.
    pub predicted_socle_ideal: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusSummary {
    pub catalog: String,
    pub prime: u32,
    pub counts: CensusCounts,
    /// Checks on the counts themselves.
    pub checks: Vec<Claim>,
    pub entries: Vec<CensusEntry>,
}

impl CensusSummary {
    pub fn all_agree(&self) -> bool {
        self.checks.iter().all(|c| c.agree) && self.entries.iter().all(|e| e.agree)
    }
}

pub fn census_entry(g: &FiniteGroup, p: u32) -> Result<CensusEntry> {
    let facts = GroupFacts::new(g, p)?;
    let mut reports = vec![verify_reynolds_with(&facts)?];
    let pg = is_p_group(g, p);
    if pg {
        reports.push(verify_pgroup_with(&facts)?);
    }
    let reynolds_ideal = reports[0]
        .claim("reynolds-ideal")
        .map(|c| c.route1 == super::Verdict::True)
        .unwrap_or(false);
    let y_criterion = (pg && p == 2).then(|| facts.derived.is_subgroup_of(&join(g, &y_subgroup(g), &facts.center)));
    Ok(CensusEntry {
        name: g.name().to_string(),
        order: g.order(),
        abelian: g.is_abelian(),
        nilpotency_class: nilpotency_class(g).ok(),
        y_criterion,
        socle_ideal: facts.socle_is_ideal(),
        reynolds_ideal,
        agree: reports.iter().all(VerdictReport::all_agree),
        reports,
    })
}

/// Runs the Reynolds and prime-power suites on every group. `parallel` bounds
/// the worker count (`None` uses the rayon default). Entries are sorted by
/// (order, name).
pub fn run_census(
    catalog: &str,
    tags: &[String],
    groups: &[FiniteGroup],
    p: u32,
    parallel: Option<usize>,
) -> Result<CensusSummary> {
    let work = || -> Result<Vec<CensusEntry>> { groups.par_iter().map(|g| census_entry(g, p)).collect() };
    let mut entries = match parallel {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::SearchFailed(e.to_string()))?
            .install(work)?,
        None => work()?,
    };
    entries.sort_by(|a, b| (a.order, &a.name).cmp(&(b.order, &b.name)));

    let mut c = CensusCounts {
        groups: entries.len(),
        ..CensusCounts::default()
    };
    for e in &entries {
        let class = e.nilpotency_class;
        let class_two = class == Some(2);
        let y = e.y_criterion == Some(true);
        c.p_groups += e.reports.iter().any(|r| r.suite == "B") as usize;
        c.abelian += e.abelian as usize;
        c.class_two += class_two as usize;
        c.class_at_most_two += class.is_some_and(|k| k <= 2) as usize;
        c.y_criterion += y as usize;
        c.y_criterion_beyond_class_two += (y && class.is_some_and(|k| k >= 3)) as usize;
        c.y_overlap_with_class_two += (y && class_two) as usize;
        c.socle_ideal += e.socle_ideal as usize;
        c.reynolds_ideal += e.reynolds_ideal as usize;
        c.predicted_socle_ideal += (e.abelian || class_two || y) as usize;
    }

    let mut checks = Vec::new();
    let two_groups = p == 2 && entries.iter().all(|e| e.y_criterion.is_some());
    if two_groups {
        checks.push(
            Claim::equivalence("socle-ideal-count", true, c.socle_ideal == c.predicted_socle_ideal)
                .dim("socle-ideal", c.socle_ideal)
                .dim("predicted", c.predicted_socle_ideal),
        );
    }
    let socle_implies_reynolds = entries.iter().all(|e| !e.socle_ideal || e.reynolds_ideal);
    checks.push(Claim::both("socle-implies-reynolds", socle_implies_reynolds, c.socle_ideal <= c.reynolds_ideal));
    if tags.iter().any(|t| t == ORDER32_COMPLETE) {
        let (n, ab, two, beyond) = ORDER32_SPLIT;
        let all_32 = entries.iter().all(|e| e.order == 32);
        checks.push(
            Claim::both(
                "order32-split",
                p == 2 && all_32 && c.groups == n,
                c.abelian == ab && c.class_two == two && c.y_criterion_beyond_class_two == beyond,
            )
            .dim("groups", c.groups)
            .dim("abelian", c.abelian)
            .dim("class-two", c.class_two)
            .dim("y-beyond-class-two", c.y_criterion_beyond_class_two),
        );
    }
    Ok(CensusSummary {
        catalog: catalog.to_string(),
        prime: p,
        counts: c,
        checks,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{cyclic, two_groups_up_to_16};

    #[test]
    fn small_two_groups_all_have_ideal_socle() {
        let groups = two_groups_up_to_16();
        let s = run_census("builtin", &[], &groups, 2, Some(2)).unwrap();
        assert!(s.all_agree());
        assert_eq!(s.counts.groups, 22);
        assert_eq!(s.counts.socle_ideal, 22);
        let names: Vec<(usize, &str)> = s.entries.iter().map(|e| (e.order, e.name.as_str())).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
    }

    #[test]
    fn empty_and_single() {
        let s = run_census("empty", &[], &[], 2, None).unwrap();
        assert_eq!(s.counts, CensusCounts::default());
        let s = run_census("one", &[], &[cyclic(5).unwrap()], 2, None).unwrap();
        assert_eq!(s.counts.groups, 1);
        assert!(s.counts.socle_ideal <= 1 && s.counts.abelian == 1);
    }

    #[test]
    fn tag_without_complete_catalog_fails_check() {
        let s = run_census("fake", &[ORDER32_COMPLETE.into()], &[cyclic(2).unwrap()], 2, None).unwrap();
        assert!(!s.all_agree());
    }
}
