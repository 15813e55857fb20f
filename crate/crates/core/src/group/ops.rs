use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{make_group, FiniteGroup, Subgroup};
use crate::error::{Error, Result};

/// Largest power of `p` dividing `n`.
pub fn p_part(n: usize, p: u32) -> usize {
    let p = p as usize;
    let mut q = 1;
    let mut m = n;
    while m % p == 0 {
        m /= p;
        q *= p;
    }
    q
}

pub fn is_p_power(n: usize, p: u32) -> bool {
    p_part(n, p) == n
}

pub fn is_p_group(g: &FiniteGroup, p: u32) -> bool {
    is_p_power(g.order(), p)
}

/// The least subgroup containing `seed`.
pub fn generate(g: &FiniteGroup, seed: &[usize]) -> Subgroup {
    let mut mask = vec![false; g.order()];
    mask[g.identity()] = true;
    let mut elements = vec![g.identity()];
    let mut gens: Vec<usize> = Vec::new();
    for &s in seed {
        if mask[s] {
            continue;
        }
        gens.push(s);
        // Right-multiplying the current elements by every generator until
        // nothing new appears yields the closure.
        let mut i = 0;
        while i < elements.len() {
            let x = elements[i];
            for &t in &gens {
                let y = g.mul(x, t);
                if !mask[y] {
                    mask[y] = true;
                    elements.push(y);
                }
            }
            i += 1;
        }
    }
    Subgroup::from_mask(g, mask, gens)
}

pub fn join(g: &FiniteGroup, a: &Subgroup, b: &Subgroup) -> Subgroup {
    let seed: Vec<usize> = a.generators().iter().chain(b.generators()).copied().collect();
    generate(g, &seed)
}

pub fn intersection(g: &FiniteGroup, a: &Subgroup, b: &Subgroup) -> Subgroup {
    let mask: Vec<bool> = a.mask().iter().zip(b.mask()).map(|(&x, &y)| x && y).collect();
    let gens = (0..mask.len()).filter(|&i| mask[i]).collect();
    Subgroup::from_mask(g, mask, gens)
}

/// Smallest normal subgroup containing `seed`.
pub fn normal_closure(g: &FiniteGroup, seed: &[usize]) -> Subgroup {
    let mut h = generate(g, seed);
    loop {
        let extra: Vec<usize> = h
            .generators()
            .iter()
            .flat_map(|&x| g.generators().iter().map(move |&s| (s, x)))
            .map(|(s, x)| g.conj(s, x))
            .filter(|&y| !h.contains(y))
            .collect();
        if extra.is_empty() {
            return h;
        }
        let seed: Vec<usize> = h.generators().iter().copied().chain(extra).collect();
        h = generate(g, &seed);
    }
}

pub fn conjugate(g: &FiniteGroup, h: &Subgroup, by: usize) -> Subgroup {
    let mut mask = vec![false; g.order()];
    for &x in h.elements() {
        mask[g.conj(by, x)] = true;
    }
    let gens = h.generators().iter().map(|&x| g.conj(by, x)).collect();
    Subgroup::from_mask(g, mask, gens)
}

/// `[A, B]`, generated by all `[a, b]`.
pub fn commutator_subgroup(g: &FiniteGroup, a: &Subgroup, b: &Subgroup) -> Subgroup {
    let mut seen = vec![false; g.order()];
    let mut seed = Vec::new();
    for &x in a.elements() {
        for &y in b.elements() {
            let c = g.commutator(x, y);
            if !seen[c] {
                seen[c] = true;
                seed.push(c);
            }
        }
    }
    generate(g, &seed)
}

pub fn derived_subgroup(g: &FiniteGroup) -> Subgroup {
    let whole = Subgroup::whole(g);
    commutator_subgroup(g, &whole, &whole)
}

pub fn center(g: &FiniteGroup) -> Subgroup {
    centralizer(g, g.generators())
}

/// `C_G(S)`.
pub fn centralizer(g: &FiniteGroup, s: &[usize]) -> Subgroup {
    let mask: Vec<bool> = g
        .elements()
        .map(|x| s.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
        .collect();
    let gens = (0..mask.len()).filter(|&i| mask[i]).collect();
    Subgroup::from_mask(g, mask, gens)
}

/// `N_G(S)` for an arbitrary subset `S`.
pub fn normalizer(g: &FiniteGroup, s: &[usize]) -> Subgroup {
    let mut in_s = vec![false; g.order()];
    for &x in s {
        in_s[x] = true;
    }
    let mask: Vec<bool> = g
        .elements()
        .map(|x| s.iter().all(|&y| in_s[g.conj(x, y)]))
        .collect();
    let gens = (0..mask.len()).filter(|&i| mask[i]).collect();
    Subgroup::from_mask(g, mask, gens)
}

/// Lower central series `G = γ_1 ⊇ γ_2 ⊇ ...`, stopping once it stabilizes.
pub fn lower_central_series(g: &FiniteGroup) -> Vec<Subgroup> {
    let whole = Subgroup::whole(g);
    let mut series = vec![whole.clone()];
    loop {
        let next = commutator_subgroup(g, series.last().unwrap(), &whole);
        if next.order() == series.last().unwrap().order() {
            return series;
        }
        series.push(next);
    }
}

/// Length of the lower central series; `0` for the trivial group.
pub fn nilpotency_class(g: &FiniteGroup) -> Result<usize> {
    let series = lower_central_series(g);
    if !series.last().unwrap().is_trivial() {
        return Err(Error::NotNilpotent);
    }
    Ok(series.len() - 1)
}

pub fn is_metabelian(g: &FiniteGroup) -> bool {
    let d = derived_subgroup(g);
    commutator_subgroup(g, &d, &d).is_trivial()
}

/// `G' · G^p`, the Frattini subgroup of a `p`-group.
fn frattini_p_group(g: &FiniteGroup, p: u32) -> Subgroup {
    let d = derived_subgroup(g);
    let powers: Vec<usize> = g.elements().map(|x| g.pow(x, p as i64)).collect();
    let seed: Vec<usize> = d.generators().iter().copied().chain(powers).collect();
    generate(g, &seed)
}

/// Frattini subgroup. Uses `G'G^p` for `p`-groups and the intersection of
/// all maximal subgroups (from [`all_subgroups`]) otherwise.
pub fn frattini(g: &FiniteGroup) -> Subgroup {
    if g.order() == 1 {
        return Subgroup::trivial(g);
    }
    let primes = prime_divisors(g.order());
    if primes.len() == 1 {
        return frattini_p_group(g, primes[0]);
    }
    let subs = all_subgroups(g);
    let proper: Vec<&Subgroup> = subs.iter().filter(|s| s.order() < g.order()).collect();
    let mut phi = Subgroup::whole(g);
    for m in &proper {
        let maximal = !proper
            .iter()
            .any(|k| k.order() > m.order() && m.is_subgroup_of(k));
        if maximal {
            phi = intersection(g, &phi, m);
        }
    }
    phi
}

pub fn prime_divisors(mut n: usize) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d as u32);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n as u32);
    }
    out
}

/// A Sylow `p`-subgroup, grown by normalizer ascent with smallest-index choices.
pub fn sylow(g: &FiniteGroup, p: u32) -> Subgroup {
    let target = p_part(g.order(), p);
    let mut q = Subgroup::trivial(g);
    while q.order() < target {
        let n = normalizer(g, q.elements());
        let x = n
            .elements()
            .iter()
            .copied()
            .find(|&x| !q.contains(x) && q.contains(g.pow(x, p as i64)))
            .expect("normalizer of a non-Sylow p-subgroup has p-elements outside it");
        let seed: Vec<usize> = q.generators().iter().copied().chain([x]).collect();
        q = generate(g, &seed);
    }
    q
}

/// `O_p(G)`, the intersection of the conjugates of a Sylow `p`-subgroup.
pub fn p_core(g: &FiniteGroup, p: u32) -> Subgroup {
    let s = sylow(g, p);
    let mut core = s.clone();
    for x in g.elements() {
        if core.is_trivial() {
            break;
        }
        core = intersection(g, &core, &conjugate(g, &s, x));
    }
    core
}

/// `O_{p'}(G)`: grow by normal closures of `p'`-elements while the result
/// stays a `p'`-group.
pub fn pprime_core(g: &FiniteGroup, p: u32) -> Subgroup {
    let mut k = Subgroup::trivial(g);
    loop {
        let mut grew = false;
        for x in g.elements() {
            if k.contains(x) || g.element_order(x) % p as usize == 0 {
                continue;
            }
            let seed: Vec<usize> = k.generators().iter().copied().chain([x]).collect();
            let c = normal_closure(g, &seed);
            if c.order() % p as usize != 0 {
                k = c;
                grew = true;
            }
        }
        if !grew {
            return k;
        }
    }
}

/// `O^p(G)`, generated by the `p'`-elements.
pub fn p_residual(g: &FiniteGroup, p: u32) -> Subgroup {
    let seed: Vec<usize> = g
        .elements()
        .filter(|&x| g.element_order(x) % p as usize != 0)
        .collect();
    generate(g, &seed)
}

/// `Y(G) = ⟨ g f^{-1} : {f, g} a conjugacy class of length two ⟩`.
pub fn y_subgroup(g: &FiniteGroup) -> Subgroup {
    let seed: Vec<usize> = g
        .conjugacy_classes()
        .classes()
        .iter()
        .filter(|c| c.len() == 2)
        .map(|c| g.mul(c[1], g.inv(c[0])))
        .collect();
    generate(g, &seed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CharacteristicKind {
    Derived,
    Center,
    Frattini,
    Op(u32),
    OpPrime(u32),
    OpResidual(u32),
    Y,
}

pub fn characteristic_subgroup(g: &FiniteGroup, kind: CharacteristicKind) -> Result<Subgroup> {
    let check = |p: u32| {
        if crate::fp::is_prime(p as u64) {
            Ok(())
        } else {
            Err(Error::InvalidPrime(p))
        }
    };
    Ok(match kind {
        CharacteristicKind::Derived => derived_subgroup(g),
        CharacteristicKind::Center => center(g),
        CharacteristicKind::Frattini => frattini(g),
        CharacteristicKind::Op(p) => {
            check(p)?;
            p_core(g, p)
        }
        CharacteristicKind::OpPrime(p) => {
            check(p)?;
            pprime_core(g, p)
        }
        CharacteristicKind::OpResidual(p) => {
            check(p)?;
            p_residual(g, p)
        }
        CharacteristicKind::Y => y_subgroup(g),
    })
}

/// `M = {x ∈ [N,G] : x^p ∈ [N,[N,G]]}` for a normal `p`-subgroup `N`.
pub fn msub(g: &FiniteGroup, n: &Subgroup, p: u32) -> Result<Subgroup> {
    if !n.is_normal() || !is_p_power(n.order(), p) {
        return Err(Error::HypothesisViolation(
            "M requires a normal p-subgroup N".into(),
        ));
    }
    let whole = Subgroup::whole(g);
    let ng = commutator_subgroup(g, n, &whole);
    let nng = commutator_subgroup(g, n, &ng);
    let members: Vec<usize> = ng
        .elements()
        .iter()
        .copied()
        .filter(|&x| nng.contains(g.pow(x, p as i64)))
        .collect();
    let m = Subgroup::from_elements(g, &members)?;
    if !m.is_normal() {
        return Err(Error::HypothesisViolation("M is not normal".into()));
    }
    Ok(m)
}

/// `U_h = {[a, h] : a ∈ G}` for `G = P ⋊ H` with `[P,G] ⊆ Z(P)` and `h ∈ C_G(H)`.
pub fn uh_subgroup(g: &FiniteGroup, h: usize, p: u32) -> Result<Subgroup> {
    let ph = ph_decomposition(g, p)?;
    let whole = Subgroup::whole(g);
    let pg = commutator_subgroup(g, &ph.sylow, &whole);
    let zp: Vec<usize> = centralizer(g, ph.sylow.elements()).elements().to_vec();
    if !pg.elements().iter().all(|x| ph.sylow.contains(*x) && zp.contains(x)) {
        return Err(Error::HypothesisViolation("[P,G] is not contained in Z(P)".into()));
    }
    if !ph
        .complement
        .elements()
        .iter()
        .all(|&k| g.mul(k, h) == g.mul(h, k))
    {
        return Err(Error::HypothesisViolation("h does not centralize H".into()));
    }
    let mut members: Vec<usize> = g.elements().map(|a| g.commutator(a, h)).collect();
    members.sort_unstable();
    members.dedup();
    let u = Subgroup::from_elements(g, &members)?;
    if !u.is_normal() {
        return Err(Error::HypothesisViolation("U_h is not normal".into()));
    }
    Ok(u)
}

pub enum RelativeKind<'a> {
    Centralizer(&'a [usize]),
    Normalizer(&'a [usize]),
    Commutator(&'a Subgroup, &'a Subgroup),
    Msub { n: &'a Subgroup, p: u32 },
    Uh { h: usize, p: u32 },
}

pub fn relative_subgroup(g: &FiniteGroup, kind: RelativeKind<'_>) -> Result<Subgroup> {
    match kind {
        RelativeKind::Centralizer(s) => Ok(centralizer(g, s)),
        RelativeKind::Normalizer(s) => Ok(normalizer(g, s)),
        RelativeKind::Commutator(a, b) => Ok(commutator_subgroup(g, a, b)),
        RelativeKind::Msub { n, p } => msub(g, n, p),
        RelativeKind::Uh { h, p } => uh_subgroup(g, h, p),
    }
}

/// A `p'`-complement to the normal Sylow `p`-subgroup, chosen greedily by
/// smallest element index.
pub fn hall_complement(g: &FiniteGroup, p: u32) -> Result<Subgroup> {
    let s = sylow(g, p);
    if !s.is_normal() {
        return Err(Error::NoComplement("Sylow subgroup is not normal".into()));
    }
    let target = g.order() / s.order();
    let mut h = Subgroup::trivial(g);
    for x in g.elements() {
        if h.order() == target {
            break;
        }
        if h.contains(x) || g.element_order(x) % p as usize == 0 {
            continue;
        }
        let seed: Vec<usize> = h.generators().iter().copied().chain([x]).collect();
        let k = generate(g, &seed);
        if k.order() % p as usize != 0 {
            h = k;
        }
    }
    if h.order() != target {
        return Err(Error::NoComplement(format!(
            "greedy search stopped at order {}",
            h.order()
        )));
    }
    Ok(h)
}

/// `G = P ⋊ H` with normal Sylow `P` and abelian `p'`-complement `H`.
#[derive(Clone, Debug)]
pub struct PhDecomposition {
    pub p: u32,
    pub sylow: Subgroup,
    pub complement: Subgroup,
}

pub fn ph_decomposition(g: &FiniteGroup, p: u32) -> Result<PhDecomposition> {
    let sylow = sylow(g, p);
    if !sylow.is_normal() {
        return Err(Error::HypothesisViolation(
            "Sylow p-subgroup is not normal".into(),
        ));
    }
    let complement = hall_complement(g, p)?;
    let gens = complement.generators();
    let abelian = gens
        .iter()
        .all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)));
    if !abelian {
        return Err(Error::HypothesisViolation("p'-complement is not abelian".into()));
    }
    Ok(PhDecomposition {
        p,
        sylow,
        complement,
    })
}

pub struct Quotient {
    pub group: FiniteGroup,
    /// Element of `G` to coset index.
    pub projection: Vec<usize>,
    /// Smallest element of each coset.
    pub representatives: Vec<usize>,
}

pub fn quotient(g: &FiniteGroup, n: &Subgroup) -> Result<Quotient> {
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    let mut projection = vec![usize::MAX; g.order()];
    let mut representatives = Vec::new();
    for x in g.elements() {
        if projection[x] != usize::MAX {
            continue;
        }
        let idx = representatives.len();
        representatives.push(x);
        for &y in n.elements() {
            projection[g.mul(x, y)] = idx;
        }
    }
    let table: Vec<Vec<usize>> = representatives
        .iter()
        .map(|&a| {
            representatives
                .iter()
                .map(|&b| projection[g.mul(a, b)])
                .collect()
        })
        .collect();
    let group = make_group(&table, format!("{}/N{}", g.name(), n.order()))?;
    Ok(Quotient {
        group,
        projection,
        representatives,
    })
}

/// `g = g_p g_{p'}` with both factors powers of `g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PDecomposition {
    pub element: usize,
    pub p_part: usize,
    pub pprime_part: usize,
}

fn mod_inverse(a: i64, m: i64) -> i64 {
    if m == 1 {
        return 0;
    }
    let (mut old_r, mut r) = (a.rem_euclid(m), m);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    old_s.rem_euclid(m)
}

pub fn p_decomposition(g: &FiniteGroup, x: usize, p: u32) -> PDecomposition {
    let ord = g.element_order(x);
    let pa = p_part(ord, p);
    let m = ord / pa;
    let e_p = m as i64 * mod_inverse(m as i64, pa as i64);
    let e_pp = pa as i64 * mod_inverse(pa as i64, m as i64);
    PDecomposition {
        element: x,
        p_part: g.pow(x, e_p),
        pprime_part: g.pow(x, e_pp),
    }
}

/// `p'`-sections: `x ~ y` iff `x_{p'}` and `y_{p'}` are conjugate.
/// Sections are ordered by smallest member.
pub fn pprime_sections(g: &FiniteGroup, p: u32) -> Vec<Vec<usize>> {
    let cl = g.conjugacy_classes();
    let mut by_class: Vec<Option<usize>> = vec![None; cl.len()];
    let mut sections: Vec<Vec<usize>> = Vec::new();
    for x in g.elements() {
        let c = cl.class_of(p_decomposition(g, x, p).pprime_part);
        match by_class[c] {
            Some(i) => sections[i].push(x),
            None => {
                by_class[c] = Some(sections.len());
                sections.push(vec![x]);
            }
        }
    }
    sections
}

/// `⟨A ∪ B⟩ = G` and `[A, B] = 1`.
pub fn is_central_product(g: &FiniteGroup, a: &Subgroup, b: &Subgroup) -> bool {
    let commute = a
        .generators()
        .iter()
        .all(|&x| b.generators().iter().all(|&y| g.mul(x, y) == g.mul(y, x)));
    commute && join(g, a, b).order() == g.order()
}

/// The subgroup as a group in its own right, with the embedding
/// (new index to parent index).
pub fn induced_group(g: &FiniteGroup, h: &Subgroup, name: impl Into<String>) -> (FiniteGroup, Vec<usize>) {
    let embedding = h.elements().to_vec();
    let mut local = vec![usize::MAX; g.order()];
    for (i, &x) in embedding.iter().enumerate() {
        local[x] = i;
    }
    let table: Vec<Vec<usize>> = embedding
        .iter()
        .map(|&a| embedding.iter().map(|&b| local[g.mul(a, b)]).collect())
        .collect();
    let group = make_group(&table, name).expect("subgroup tables are group tables");
    (group, embedding)
}

fn mask_key(mask: &[bool]) -> Vec<u64> {
    let mut key = vec![0u64; mask.len().div_ceil(64)];
    for (i, &b) in mask.iter().enumerate() {
        if b {
            key[i / 64] |= 1 << (i % 64);
        }
    }
    key
}

/// Every subgroup, built as iterated joins of cyclic subgroups.
/// Ordered by (order, smallest differing member) for determinism.
pub fn all_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut cyclic: Vec<Subgroup> = Vec::new();
    for x in g.elements() {
        let c = generate(g, &[x]);
        if seen.insert(mask_key(c.mask())) {
            cyclic.push(c);
        }
    }
    let mut all = cyclic.clone();
    let mut i = 0;
    while i < all.len() {
        let h = all[i].clone();
        for c in &cyclic {
            if c.is_subgroup_of(&h) {
                continue;
            }
            let k = join(g, &h, c);
            if seen.insert(mask_key(k.mask())) {
                all.push(k);
            }
        }
        i += 1;
    }
    all.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements().cmp(b.elements())));
    all
}

/// Every normal subgroup, as joins of normal closures of single elements.
/// Same ordering as [`all_subgroups`].
pub fn normal_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut closures: Vec<Subgroup> = Vec::new();
    for x in g.elements() {
        let c = normal_closure(g, &[x]);
        if seen.insert(mask_key(c.mask())) {
            closures.push(c);
        }
    }
    let mut all = closures.clone();
    let mut i = 0;
    while i < all.len() {
        let h = all[i].clone();
        for c in &closures {
            if c.is_subgroup_of(&h) {
                continue;
            }
            let k = join(g, &h, c);
            if seen.insert(mask_key(k.mask())) {
                all.push(k);
            }
        }
        i += 1;
    }
    all.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements().cmp(b.elements())));
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;

    fn brute_subgroups(g: &FiniteGroup) -> usize {
        // Oracle for small groups: close every subset of size <= 2 and
        // every join, via pairs, compared against all_subgroups count.
        let n = g.order();
        let mut found: HashSet<Vec<usize>> = HashSet::new();
        for mask in 0u32..(1 << n) {
            let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            if Subgroup::from_elements(g, &members).is_ok() {
                found.insert(members);
            }
        }
        found.len()
    }

    #[test]
    fn subgroup_lattice_matches_subset_enumeration() {
        let d8 = dihedral(8).unwrap();
        assert_eq!(all_subgroups(&d8).len(), 10);
        assert_eq!(brute_subgroups(&d8), 10);
        let q8 = quaternion(8).unwrap();
        assert_eq!(all_subgroups(&q8).len(), brute_subgroups(&q8));
        let d12 = dihedral(12).unwrap();
        assert_eq!(all_subgroups(&d12).len(), brute_subgroups(&d12));
    }

    #[test]
    fn normal_subgroups_match_lattice_filter() {
        for g in [dihedral(8).unwrap(), symmetric(4).unwrap(), abelian(&[2, 2, 2]).unwrap()] {
            let filtered: Vec<Subgroup> = all_subgroups(&g).into_iter().filter(|s| s.is_normal()).collect();
            assert_eq!(normal_subgroups(&g), filtered, "{}", g.name());
        }
    }

    #[test]
    fn generate_examples() {
        let d8 = dihedral(8).unwrap();
        assert!(generate(&d8, &[]).is_trivial());
        let r = 1; // rotation by one step in the dihedral construction
        assert_eq!(d8.element_order(r), 4);
        let c = generate(&d8, &[r]);
        assert_eq!(c.order(), 4);
        // Closure oracle: powers of r.
        let powers: HashSet<usize> = (0..4).map(|k| d8.pow(r, k)).collect();
        assert_eq!(powers.len(), 4);
        assert!(powers.iter().all(|&x| c.contains(x)));
        let all: Vec<usize> = d8.elements().collect();
        assert_eq!(generate(&d8, &all).order(), 8);
    }

    #[test]
    fn abelian_characteristic_subgroups() {
        let g = abelian(&[2, 6]).unwrap();
        assert_eq!(center(&g).order(), 12);
        assert!(derived_subgroup(&g).is_trivial());
    }

    #[test]
    fn dihedral_derived_equals_yz() {
        for n in 3..=6 {
            let g = dihedral(1 << n).unwrap();
            let d = derived_subgroup(&g);
            assert_eq!(d.order(), 1 << (n - 2));
            // G' = <r^2>
            assert_eq!(d, generate(&g, &[g.pow(1, 2)]));
            let yz = join(&g, &y_subgroup(&g), &center(&g));
            assert_eq!(yz, d);
        }
    }

    #[test]
    fn op_residual_of_c6() {
        let g = abelian(&[6]).unwrap();
        let r = p_residual(&g, 2);
        assert_eq!(r.order(), 3);
        // Oracle: elements of odd order.
        let odd: Vec<usize> = g.elements().filter(|&x| g.element_order(x) % 2 == 1).collect();
        assert_eq!(r.elements(), &odd[..]);
    }

    #[test]
    fn centralizer_of_center_is_whole_group() {
        let g = dihedral(16).unwrap();
        let z = center(&g);
        assert_eq!(centralizer(&g, z.elements()).order(), 16);
    }

    #[test]
    fn commutator_of_whole_group_is_derived() {
        for g in [dihedral(8).unwrap(), quaternion(8).unwrap()] {
            let w = Subgroup::whole(&g);
            let oracle: Vec<usize> = {
                let mut v: Vec<usize> = g
                    .elements()
                    .flat_map(|a| g.elements().map(move |b| (a, b)))
                    .map(|(a, b)| g.commutator(a, b))
                    .collect();
                v.sort_unstable();
                v.dedup();
                v
            };
            // In groups of order 8 the commutators already form a subgroup.
            assert_eq!(commutator_subgroup(&g, &w, &w).elements(), &oracle[..]);
            assert_eq!(commutator_subgroup(&g, &w, &w), derived_subgroup(&g));
        }
    }

    #[test]
    fn msub_for_extraspecial_27() {
        let g = heisenberg(3).unwrap();
        let w = Subgroup::whole(&g);
        let m = msub(&g, &w, 3).unwrap();
        let gg = derived_subgroup(&g);
        assert_eq!(gg.order(), 3);
        // Brute force: {x in [N,G] : x^3 in [N,[N,G]] = 1}
        let oracle: Vec<usize> = gg
            .elements()
            .iter()
            .copied()
            .filter(|&x| g.pow(x, 3) == g.identity())
            .collect();
        assert_eq!(m.elements(), &oracle[..]);
        assert_eq!(m, gg);
    }

    #[test]
    fn msub_rejects_non_p_subgroup() {
        let g = dihedral(12).unwrap();
        let w = Subgroup::whole(&g);
        assert!(matches!(msub(&g, &w, 2), Err(Error::HypothesisViolation(_))));
    }

    #[test]
    fn sylow_examples() {
        let c5 = abelian(&[5]).unwrap();
        assert!(sylow(&c5, 2).is_trivial());
        let d12 = dihedral(12).unwrap();
        let s = sylow(&d12, 2);
        assert_eq!(s.order(), 4);
        // Oracle: exhaustive lattice has subgroups of order 4 and none of order 8.
        let subs = all_subgroups(&d12);
        assert!(subs.iter().any(|h| h.order() == 4));
        assert!(subs.iter().all(|h| h.order() != 8));
        assert!(subs.contains(&s));
    }

    #[test]
    fn hall_complement_examples() {
        let d8 = dihedral(8).unwrap();
        assert!(hall_complement(&d8, 2).unwrap().is_trivial());
        let c6 = abelian(&[6]).unwrap();
        let h = hall_complement(&c6, 3).unwrap();
        assert_eq!(h.order(), 2);
        let s3 = holomorph_cyclic(3).unwrap();
        assert!(hall_complement(&s3, 2).is_err());
    }

    #[test]
    fn quotient_examples() {
        let g = dihedral(8).unwrap();
        let q = quotient(&g, &Subgroup::trivial(&g)).unwrap();
        assert_eq!(q.group.order(), 8);
        let q = quotient(&g, &Subgroup::whole(&g)).unwrap();
        assert_eq!(q.group.order(), 1);
        let s = generate(&g, &[g.order() - 1]);
        if !s.is_normal() {
            assert!(matches!(quotient(&g, &s), Err(Error::NotNormal)));
        }
        let reflection = (0..8).find(|&x| g.element_order(x) == 2 && !center(&g).contains(x)).unwrap();
        assert!(matches!(
            quotient(&g, &generate(&g, &[reflection])),
            Err(Error::NotNormal)
        ));
    }

    #[test]
    fn p_decomposition_examples() {
        let g = abelian(&[6]).unwrap();
        let d = p_decomposition(&g, 1, 2);
        // CRT: 1 = 3 + 4 in Z/6, so g_2 = g^3 and g_{2'} = g^4.
        assert_eq!(d.p_part, g.pow(1, 3));
        assert_eq!(d.pprime_part, g.pow(1, 4));
        let d = p_decomposition(&g, 3, 2);
        assert_eq!((d.p_part, d.pprime_part), (3, 0));
        let d = p_decomposition(&g, 2, 2);
        assert_eq!((d.p_part, d.pprime_part), (0, 2));
    }

    #[test]
    fn pprime_section_examples() {
        let p8 = dihedral(8).unwrap();
        assert_eq!(pprime_sections(&p8, 2).len(), 1);
        let c5 = abelian(&[5]).unwrap();
        assert_eq!(pprime_sections(&c5, 2).len(), 5);
        let d12 = dihedral(12).unwrap();
        let secs = pprime_sections(&d12, 2);
        let mut sizes: Vec<usize> = secs.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![4, 8]);
        // Oracle: group by the conjugacy class of the 2'-part, computed by
        // brute-force conjugation.
        for s in &secs {
            let x = s[0];
            let xp = p_decomposition(&d12, x, 2).pprime_part;
            for &y in s {
                let yp = p_decomposition(&d12, y, 2).pprime_part;
                assert!(d12.elements().any(|h| d12.conj(h, xp) == yp));
            }
        }
    }

    #[test]
    fn nilpotency_examples() {
        assert_eq!(nilpotency_class(&abelian(&[4, 2]).unwrap()).unwrap(), 1);
        assert_eq!(nilpotency_class(&abelian(&[1]).unwrap()).unwrap(), 0);
        assert_eq!(nilpotency_class(&heisenberg(3).unwrap()).unwrap(), 2);
        assert_eq!(nilpotency_class(&dihedral(16).unwrap()).unwrap(), 3);
        assert!(matches!(
            nilpotency_class(&holomorph_cyclic(3).unwrap()),
            Err(Error::NotNilpotent)
        ));
        assert!(is_metabelian(&holomorph_cyclic(3).unwrap()));
    }

    #[test]
    fn central_product_examples() {
        let g = dihedral(8).unwrap();
        let w = Subgroup::whole(&g);
        assert!(is_central_product(&g, &w, &center(&g)));
        let r = generate(&g, &[1]);
        assert!(!is_central_product(&g, &r, &r));
    }

    #[test]
    fn frattini_general_matches_p_group_formula() {
        let g = dihedral(16).unwrap();
        let subs = all_subgroups(&g);
        let proper: Vec<&Subgroup> = subs.iter().filter(|s| s.order() < 16).collect();
        let mut phi = Subgroup::whole(&g);
        for m in &proper {
            if !proper.iter().any(|k| k.order() > m.order() && m.is_subgroup_of(k)) {
                phi = intersection(&g, &phi, m);
            }
        }
        assert_eq!(phi, frattini(&g));
        // D_12: Φ = <r^2>... no: maximal subgroups of D_12 meet trivially except
        // in the rotation subgroup of order 3? Compare to brute force anyway.
        let d12 = dihedral(12).unwrap();
        let f = frattini(&d12);
        assert!(f.is_normal());
        assert!(f.order() <= 3);
    }

    #[test]
    fn cores_of_s3_and_a4() {
        let s3 = holomorph_cyclic(3).unwrap();
        assert_eq!(p_core(&s3, 3).order(), 3);
        assert!(p_core(&s3, 2).is_trivial());
        assert!(pprime_core(&s3, 3).is_trivial());
        assert_eq!(pprime_core(&s3, 2).order(), 3);
        let a4 = alternating4();
        assert_eq!(p_core(&a4, 2).order(), 4);
        assert_eq!(pprime_core(&a4, 3).order(), 4);
        let c6 = abelian(&[6]).unwrap();
        assert_eq!(pprime_core(&c6, 2).order(), 3);
    }
}
