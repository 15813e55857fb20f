//! Command implementations behind the `socle` binary.

pub mod report;
pub mod spec;

use std::path::Path;

use socle_core::constructors::{builtin_catalog, load_catalog, two_groups_up_to_16, Catalog};
use socle_core::group::{is_p_group, FiniteGroup};
use socle_core::verifier::{analyze, run_census, run_suite, verify_isoclinism_pair, Suite};
use socle_core::{Error, Result};

pub use report::{Body, ReportDocument};
pub use spec::parse_spec;

/// Catalog name for the full built-in catalog.
pub const BUILTIN: &str = "builtin";
/// Catalog name for the built-in 2-groups of order at most 16.
pub const BUILTIN_SMALL_TWO_GROUPS: &str = "builtin-2groups";

/// Exit status: every claim agreed.
pub const EXIT_OK: i32 = 0;
/// Exit status: some claim or census check disagreed.
pub const EXIT_DISAGREE: i32 = 1;
/// Exit status: I/O, parse or hypothesis error.
pub const EXIT_ERROR: i32 = 2;

pub fn open_catalog(name: &str) -> Result<Catalog> {
    match name {
        BUILTIN => Ok(Catalog {
            id: BUILTIN.into(),
            tags: Vec::new(),
            groups: builtin_catalog(),
        }),
        BUILTIN_SMALL_TWO_GROUPS => Ok(Catalog {
            id: BUILTIN_SMALL_TWO_GROUPS.into(),
            tags: Vec::new(),
            groups: two_groups_up_to_16(),
        }),
        dir => load_catalog(Path::new(dir)),
    }
}

pub fn cmd_analyze(spec: &str, p: u32) -> Result<ReportDocument> {
    let g = parse_spec(spec)?;
    Ok(ReportDocument::analysis(&g, analyze(&g, p)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteChoice {
    Core(Suite),
    Isoclinism,
}

/// One document per group, or per isoclinic pair for the isoclinism suite.
pub fn cmd_verify(groups: &[FiniteGroup], p: u32, suite: SuiteChoice) -> Result<Vec<ReportDocument>> {
    match suite {
        SuiteChoice::Core(s) => groups
            .iter()
            .map(|g| Ok(ReportDocument::verdicts(&[g], p, run_suite(g, p, s)?)))
            .collect(),
        SuiteChoice::Isoclinism => isoclinic_pairs(groups, p),
    }
}

/// Runs the isoclinism suite on every isoclinic pair of `p`-groups of equal
/// order in the list.
fn isoclinic_pairs(groups: &[FiniteGroup], p: u32) -> Result<Vec<ReportDocument>> {
    let pgroups: Vec<&FiniteGroup> = groups.iter().filter(|g| is_p_group(g, p) && g.order() > 1).collect();
    let mut out = Vec::new();
    for (i, a) in pgroups.iter().enumerate() {
        for b in &pgroups[i + 1..] {
            if a.order() != b.order() {
                continue;
            }
            match verify_isoclinism_pair(a, b, p) {
                Ok(r) => out.push(ReportDocument::verdicts(&[a, b], p, vec![r])),
                Err(Error::HypothesisViolation(_)) | Err(Error::SizeMismatch(_)) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(out)
}

pub fn cmd_census(catalog: &Catalog, p: u32, parallel: Option<usize>) -> Result<ReportDocument> {
    let summary = run_census(&catalog.id, &catalog.tags, &catalog.groups, p, parallel)?;
    Ok(ReportDocument::census(summary))
}

/// Exit status for a batch of documents.
pub fn exit_status(docs: &[ReportDocument]) -> i32 {
    if docs.iter().all(ReportDocument::all_agree) {
        EXIT_OK
    } else {
        EXIT_DISAGREE
    }
}
