//! Claims about when `soc(ZFG)` and `R(FG)` are ideals, each evaluated by
//! two independent computations.
//!
//! Every claim carries two verdicts. For an equivalence both sides are
//! computed separately and must match. For an implication the second verdict
//! is only evaluated when the premise holds, otherwise the claim is
//! not applicable. A claim whose `agree` flag is false is a failure.

mod census;
mod suites;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub use census::*;
pub use suites::*;

use crate::algebra::{GroupAlgebra, SocleIdealVerdict};
use crate::error::Result;
use crate::fp::FpSubspace;
use crate::group::{center, derived_subgroup, induced_group, p_core, sylow, FiniteGroup, Subgroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    True,
    False,
    NotApplicable,
}

impl From<bool> for Verdict {
    fn from(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    /// Which subgroup, quotient or factor the claim was evaluated on.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scope: Option<String>,
    pub route1: Verdict,
    pub route2: Verdict,
    pub agree: bool,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub dims: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Claim {
    fn new(id: &str, route1: Verdict, route2: Verdict, agree: bool) -> Claim {
        Claim {
            id: id.to_string(),
            scope: None,
            route1,
            route2,
            agree,
            dims: BTreeMap::new(),
            witness: None,
        }
    }

    /// Both sides computed independently; they must coincide.
    pub fn equivalence(id: &str, left: bool, right: bool) -> Claim {
        Claim::new(id, left.into(), right.into(), left == right)
    }

    /// `premise ⟹ conclusion`; not applicable when the premise fails.
    pub fn implication(id: &str, premise: bool, conclusion: impl FnOnce() -> Result<bool>) -> Result<Claim> {
        if !premise {
            return Ok(Claim::not_applicable(id));
        }
        let c = conclusion()?;
        Ok(Claim::new(id, Verdict::True, c.into(), c))
    }

    /// An invariant checked by two computations that must both succeed.
    pub fn both(id: &str, first: bool, second: bool) -> Claim {
        Claim::new(id, first.into(), second.into(), first && second)
    }

    /// Subspace equality, as the two inclusions.
    pub fn equal_spaces(id: &str, left: &FpSubspace, right: &FpSubspace) -> Result<Claim> {
        let l = left.is_subspace_of(right)?;
        let r = right.is_subspace_of(left)?;
        Ok(Claim::both(id, l, r).dim("left", left.dim()).dim("right", right.dim()))
    }

    pub fn not_applicable(id: &str) -> Claim {
        Claim::new(id, Verdict::NotApplicable, Verdict::NotApplicable, true)
    }

    pub fn dim(mut self, key: &str, value: usize) -> Claim {
        self.dims.insert(key.to_string(), value);
        self
    }

    pub fn scoped(mut self, scope: impl Into<String>) -> Claim {
        self.scope = Some(scope.into());
        self
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> Claim {
        self.witness = Some(witness.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub suite: String,
    pub group: String,
    pub order: usize,
    pub prime: u32,
    pub claims: Vec<Claim>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl VerdictReport {
    fn new(suite: &str, g: &FiniteGroup, p: u32) -> VerdictReport {
        VerdictReport {
            suite: suite.to_string(),
            group: g.name().to_string(),
            order: g.order(),
            prime: p,
            claims: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn all_agree(&self) -> bool {
        self.claims.iter().all(|c| c.agree)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| !c.agree)
    }

    pub fn claim(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
    }

    fn push(&mut self, c: Claim) {
        self.claims.push(c);
    }
}

/// Quantities shared by most claims about one group and prime.
pub struct GroupFacts {
    pub algebra: GroupAlgebra,
    pub jacobson: FpSubspace,
    pub socle: FpSubspace,
    /// `soc(ZFG)` in group coordinates.
    pub socle_fg: FpSubspace,
    pub socle_verdict: SocleIdealVerdict,
    pub derived: Subgroup,
    pub center: Subgroup,
    pub sylow: Subgroup,
    pub p_core: Subgroup,
}

impl GroupFacts {
    pub fn new(g: &FiniteGroup, p: u32) -> Result<GroupFacts> {
        let algebra = GroupAlgebra::new(g, p)?;
        let jacobson = algebra.jacobson_center();
        let rows: Vec<Vec<u32>> = jacobson.basis_vectors().map(<[u32]>::to_vec).collect();
        let socle = algebra.center_annihilator(&rows)?;
        let socle_fg = algebra.embed_center(&socle)?;
        let socle_verdict = algebra.socle_ideal_verdict(&socle)?;
        Ok(GroupFacts {
            jacobson,
            socle,
            socle_fg,
            socle_verdict,
            derived: derived_subgroup(g),
            center: center(g),
            sylow: sylow(g, p),
            p_core: p_core(g, p),
            algebra,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        self.algebra.group()
    }

    pub fn prime(&self) -> u32 {
        self.algebra.prime()
    }

    pub fn socle_is_ideal(&self) -> bool {
        self.socle_verdict.direct
    }
}

/// Whether `soc(ZFH)` is an ideal of `FH` for `H` given as a subgroup of `G`.
pub fn subgroup_socle_is_ideal(g: &FiniteGroup, h: &Subgroup, p: u32) -> Result<bool> {
    let (local, _) = induced_group(g, h, format!("{}<{}>", g.name(), h.order()));
    Ok(GroupAlgebra::new(&local, p)?.soc_is_ideal()?.direct)
}

/// Applies a subgroup construction to `H ≤ G` and maps the result back into `G`.
pub fn within_subgroup(
    g: &FiniteGroup,
    h: &Subgroup,
    f: impl FnOnce(&FiniteGroup) -> Subgroup,
) -> Result<Subgroup> {
    let (local, embed) = induced_group(g, h, "");
    let s = f(&local);
    let members: Vec<usize> = s.elements().iter().map(|&x| embed[x]).collect();
    Subgroup::from_elements(g, &members)
}
