//! Report documents written by the command line tool.
//!
//! Each document is one JSON object. Field order is fixed by declaration
//! order and maps are ordered, so equal inputs give byte-identical output.
//! Timings are stripped before serialization.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use socle_core::group::FiniteGroup;
use socle_core::verifier::{CensusSummary, GroupAnalysis, VerdictReport};

pub const TOOL: &str = "socle";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupRef {
    pub name: String,
    pub order: usize,
    /// SHA-256 of the Cayley table, row-major little-endian `u32`.
    pub sha256: String,
}

impl GroupRef {
    pub fn new(g: &FiniteGroup) -> GroupRef {
        GroupRef {
            name: g.name().to_string(),
            order: g.order(),
            sha256: group_hash(g),
        }
    }
}

pub fn group_hash(g: &FiniteGroup) -> String {
    hex::encode(Sha256::digest(g.table_bytes()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "body", rename_all = "lowercase")]
pub enum Body {
    Analysis(GroupAnalysis),
    Verdicts(Vec<VerdictReport>),
    Census(CensusSummary),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub prime: u32,
    /// Groups the body refers to; empty for censuses, whose entries name them.
    pub groups: Vec<GroupRef>,
    #[serde(flatten)]
    pub body: Body,
}

fn strip_timing(reports: &mut [VerdictReport]) {
    for r in reports {
        r.elapsed_ms = None;
    }
}

impl ReportDocument {
    fn new(prime: u32, groups: Vec<GroupRef>, body: Body) -> ReportDocument {
        ReportDocument {
            tool: TOOL.to_string(),
            version: VERSION.to_string(),
            prime,
            groups,
            body,
        }
    }

    pub fn analysis(g: &FiniteGroup, a: GroupAnalysis) -> ReportDocument {
        ReportDocument::new(a.prime, vec![GroupRef::new(g)], Body::Analysis(a))
    }

    pub fn verdicts(groups: &[&FiniteGroup], prime: u32, mut reports: Vec<VerdictReport>) -> ReportDocument {
        strip_timing(&mut reports);
        let refs = groups.iter().map(|g| GroupRef::new(g)).collect();
        ReportDocument::new(prime, refs, Body::Verdicts(reports))
    }

    pub fn census(mut summary: CensusSummary) -> ReportDocument {
        for e in &mut summary.entries {
            strip_timing(&mut e.reports);
        }
        ReportDocument::new(summary.prime, Vec::new(), Body::Census(summary))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report documents serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<ReportDocument> {
        serde_json::from_str(s)
    }

    /// Whether every claim and check in the body agrees.
    pub fn all_agree(&self) -> bool {
        match &self.body {
            Body::Analysis(a) => a.socle_ideal == a.socle_ideal_criterion,
            Body::Verdicts(rs) => rs.iter().all(VerdictReport::all_agree),
            Body::Census(c) => c.all_agree(),
        }
    }

    /// Failing claims as `group suite claim: route1/route2` lines.
    pub fn disagreements(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut from_reports = |rs: &[VerdictReport]| {
            for r in rs {
                for c in r.failures() {
                    out.push(format!(
                        "{} [{}] {}{}: {:?}/{:?} dims={:?}{}",
                        r.group,
                        r.suite,
                        c.id,
                        c.scope.as_ref().map(|s| format!(" on {s}")).unwrap_or_default(),
                        c.route1,
                        c.route2,
                        c.dims,
                        c.witness.as_ref().map(|w| format!(" witness={w}")).unwrap_or_default(),
                    ));
                }
            }
        };
        match &self.body {
            Body::Analysis(a) => {
                if a.socle_ideal != a.socle_ideal_criterion {
                    out.push(format!(
                        "{}: socle ideal {} but derived-ideal criterion {}",
                        a.name, a.socle_ideal, a.socle_ideal_criterion
                    ));
                }
            }
            Body::Verdicts(rs) => from_reports(rs),
            Body::Census(c) => {
                for e in &c.entries {
                    from_reports(&e.reports);
                }
                for k in c.checks.iter().filter(|k| !k.agree) {
                    out.push(format!("census check {}: {:?}/{:?} dims={:?}", k.id, k.route1, k.route2, k.dims));
                }
            }
        }
        out
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

/// Markdown rendering of an analysis.
pub fn analysis_markdown(doc: &ReportDocument) -> Option<String> {
    let Body::Analysis(a) = &doc.body else {
        return None;
    };
    let mut rows: Vec<(String, String)> = vec![
        ("order".into(), a.order.to_string()),
        ("conjugacy classes".into(), a.classes.to_string()),
        ("|Z(G)|".into(), a.center_order.to_string()),
        ("|G'|".into(), a.derived_order.to_string()),
        ("|Φ(G)|".into(), a.frattini_order.to_string()),
        (format!("|O_{}(G)|", a.prime), a.p_core_order.to_string()),
    ];
    if let Some(y) = a.y_order {
        rows.push(("|Y(G)|".into(), y.to_string()));
    }
    if let Some(c) = a.nilpotency_class {
        rows.push(("nilpotency class".into(), c.to_string()));
    }
    rows.extend([
        ("dim ZFG".into(), a.center_dim.to_string()),
        ("dim J(ZFG)".into(), a.jacobson_dim.to_string()),
        ("dim soc(ZFG)".into(), a.socle_dim.to_string()),
        ("dim R(FG)".into(), a.reynolds_dim.to_string()),
        ("dim (G')⁺FG".into(), a.derived_ideal_dim.to_string()),
        ("semisimple".into(), yes(a.semisimple).into()),
        ("soc ideal".into(), yes(a.socle_ideal).into()),
        ("soc ⊆ (G')⁺FG".into(), yes(a.socle_ideal_criterion).into()),
        ("R ideal".into(), yes(a.reynolds_ideal).into()),
        (format!("G' ⊆ O_{}(G)", a.prime), yes(a.derived_in_p_core).into()),
    ]);
    if let Some(c) = a.pgroup_criterion {
        rows.push(("p-group criterion".into(), yes(c).into()));
    }
    let mut out = format!("# {} over F_{}\n\n", a.name, a.prime);
    if let Some(g) = doc.groups.first() {
        out.push_str(&format!("table sha256 `{}`\n\n", g.sha256));
    }
    out.push_str("| quantity | value |\n|---|---|\n");
    for (k, v) in rows {
        out.push_str(&format!("| {k} | {v} |\n"));
    }
    Some(out)
}
