//! Central elements supported on `G'` that kill every subgroup sum of `G'`
//! but lie outside `(G')^+ FG`. They exist for odd `p` and class 2.

use serde::{Deserialize, Serialize};

use super::{AlgebraElement, GroupAlgebra};
use crate::error::{Error, Result};
use crate::group::{all_subgroups, derived_subgroup, induced_group, is_p_group, nilpotency_class};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OddWitness {
    pub element: AlgebraElement,
    pub central: bool,
    pub outside_derived_ideal: bool,
    /// `y S^+ = 0` for every nontrivial `S ≤ G'`.
    pub kills_subgroup_sums: bool,
    pub subgroups_checked: usize,
}

impl OddWitness {
    pub fn holds(&self) -> bool {
        self.central && self.outside_derived_ideal && self.kills_subgroup_sums
    }
}

impl GroupAlgebra {
    /// `y = Σ_{g ∈ G'} α(g) g` for a nontrivial `α: G' -> F_p`.
    ///
    /// `α` is read off a maximal subgroup `M < G'` and some `t ∉ M`: it is `i`
    /// on `t^i M`.
    pub fn odd_witness(&self) -> Result<OddWitness> {
        let g = self.group();
        let p = self.prime();
        if p == 2 {
            return Err(Error::HypothesisViolation("witness needs an odd prime".into()));
        }
        if !is_p_group(g, p) || nilpotency_class(g)? != 2 {
            return Err(Error::HypothesisViolation(
                "witness needs a p-group of nilpotency class 2".into(),
            ));
        }
        let derived = derived_subgroup(g);
        let (dg, embed) = induced_group(g, &derived, "G'");
        let subgroups = all_subgroups(&dg);
        let m = subgroups
            .iter()
            .rev()
            .find(|s| s.index() == p as usize)
            .expect("a nontrivial p-group has a subgroup of index p");
        let t = dg.elements().find(|&x| !m.contains(x)).expect("M is proper");
        let mut alpha = vec![u32::MAX; dg.order()];
        let mut coset_rep = dg.identity();
        for i in 0..p {
            for &x in m.elements() {
                alpha[dg.mul(coset_rep, x)] = i;
            }
            coset_rep = dg.mul(coset_rep, t);
        }
        let mut coeffs = vec![0u32; g.order()];
        for (local, &parent) in embed.iter().enumerate() {
            coeffs[parent] = alpha[local];
        }
        let y = self.element(coeffs)?;

        let central = self.is_central(&y)?;
        let outside_derived_ideal = !self.derived_sum_ideal().contains(y.coeffs())?;
        let mut kills_subgroup_sums = true;
        let mut subgroups_checked = 0;
        for s in subgroups.iter().filter(|s| !s.is_trivial()) {
            let members: Vec<usize> = s.elements().iter().map(|&x| embed[x]).collect();
            subgroups_checked += 1;
            if !self.multiply(&y, &self.subset_sum(&members))?.is_zero() {
                kills_subgroup_sums = false;
                break;
            }
        }
        Ok(OddWitness {
            element: y,
            central,
            outside_derived_ideal,
            kills_subgroup_sums,
            subgroups_checked,
        })
    }
}
