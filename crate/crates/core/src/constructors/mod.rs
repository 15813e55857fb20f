//! Concrete groups: cyclic and abelian, metacyclic 2-group families,
//! Heisenberg groups, holomorphs, products, and permutation closures.

mod catalog;
mod extensions;
mod parse;

pub use catalog::*;
pub use extensions::*;
pub use parse::*;

use crate::error::{Error, Result};
use crate::group::isoclinism::extend_homomorphism;
use crate::group::{center, derived_subgroup, make_group, quotient, FiniteGroup, Subgroup};

fn table_from(n: usize, name: impl Into<String>, mul: impl Fn(usize, usize) -> usize) -> Result<FiniteGroup> {
    let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| mul(a, b)).collect()).collect();
    make_group(&table, name)
}

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    abelian(&[n]).map(|g| g.renamed(format!("C{n}")))
}

/// Direct product of cyclic groups of the given orders, in mixed radix.
pub fn abelian(orders: &[usize]) -> Result<FiniteGroup> {
    if orders.contains(&0) {
        return Err(Error::HypothesisViolation("cyclic orders must be positive".into()));
    }
    let n: usize = orders.iter().product();
    let digits = |mut x: usize| -> Vec<usize> {
        orders
            .iter()
            .map(|&m| {
                let d = x % m;
                x /= m;
                d
            })
            .collect()
    };
    let name = orders.iter().map(|m| format!("C{m}")).collect::<Vec<_>>().join("x");
    table_from(n, name, |a, b| {
        let (da, db) = (digits(a), digits(b));
        let mut idx = 0;
        for i in (0..orders.len()).rev() {
            idx = idx * orders[i] + (da[i] + db[i]) % orders[i];
        }
        idx
    })
}

/// `⟨r, s | r^m, s^e = r^t, s r s^{-1} = r^k⟩`, elements `r^a s^b` at index `a + m b`.
pub fn metacyclic(m: usize, e: usize, k: usize, t: usize, name: impl Into<String>) -> Result<FiniteGroup> {
    if m == 0 || e == 0 {
        return Err(Error::HypothesisViolation("metacyclic orders must be positive".into()));
    }
    let mut kpow = vec![1 % m; e + 1];
    for i in 1..=e {
        kpow[i] = kpow[i - 1] * k % m;
    }
    if kpow[e] != 1 % m || (k * t) % m != t % m {
        return Err(Error::InvalidAction(format!(
            "r -> r^{k} does not define an action of order dividing {e} fixing r^{t}"
        )));
    }
    table_from(m * e, name, |x, y| {
        let (a, b) = (x % m, x / m);
        let (c, d) = (y % m, y / m);
        let mut r = a + kpow[b] * c;
        let mut s = b + d;
        if s >= e {
            s -= e;
            r += t;
        }
        r % m + m * s
    })
}

/// `D_{2m}` of the given (even) order; `r` is element 1, `s` is element `order/2`.
pub fn dihedral(order: usize) -> Result<FiniteGroup> {
    if order < 2 || order % 2 != 0 {
        return Err(Error::OrderTooSmall {
            family: "dihedral",
            order,
        });
    }
    let m = order / 2;
    metacyclic(m, 2, m - 1, 0, format!("D{order}"))
}

/// `Q_{2^n}` for `n >= 3`, including `Q_8`.
pub fn quaternion(order: usize) -> Result<FiniteGroup> {
    if order < 8 || !order.is_power_of_two() {
        return Err(Error::OrderTooSmall {
            family: "quaternion",
            order,
        });
    }
    let m = order / 2;
    metacyclic(m, 2, m - 1, m / 2, format!("Q{order}"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Dihedral,
    SemiDihedral,
    GeneralizedQuaternion,
}

/// The maximal-class 2-group families of order `2^n`.
pub fn family(kind: Family, order: usize) -> Result<FiniteGroup> {
    let (label, min) = match kind {
        Family::Dihedral => ("dihedral", 8),
        Family::SemiDihedral => ("semidihedral", 16),
        Family::GeneralizedQuaternion => ("generalized quaternion", 16),
    };
    if order < min || !order.is_power_of_two() {
        return Err(Error::OrderTooSmall {
            family: label,
            order,
        });
    }
    let m = order / 2;
    match kind {
        Family::Dihedral => dihedral(order),
        Family::SemiDihedral => metacyclic(m, 2, m / 2 - 1, 0, format!("SD{order}")),
        Family::GeneralizedQuaternion => quaternion(order),
    }
}

/// Upper unitriangular 3x3 matrices over `F_p`; `(a, b, c)` at index `a + p b + p^2 c`
/// with `(a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')`.
pub fn heisenberg(p: usize) -> Result<FiniteGroup> {
    if !crate::fp::is_prime(p as u64) {
        return Err(Error::InvalidPrime(p as u32));
    }
    let split = |x: usize| (x % p, x / p % p, x / (p * p));
    table_from(p * p * p, format!("Heis{p}"), |x, y| {
        let (a, b, c) = split(x);
        let (a2, b2, c2) = split(y);
        (a + a2) % p + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p)
    })
}

pub fn extraspecial_27_exp3() -> FiniteGroup {
    heisenberg(3).expect("3 is prime").renamed("3^(1+2)_+")
}

pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
    let n = a.order();
    table_from(n * b.order(), format!("{}x{}", a.name(), b.name()), |x, y| {
        a.mul(x % n, y % n) + n * b.mul(x / n, y / n)
    })
}

/// Action of `H` on `N`: for each listed element of `H`, a permutation of `N`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ActionTable {
    pub generators: Vec<usize>,
    pub images: Vec<Vec<usize>>,
}

impl ActionTable {
    pub fn trivial() -> ActionTable {
        ActionTable {
            generators: Vec::new(),
            images: Vec::new(),
        }
    }

    /// Extends to `h -> automorphism` over all of `H`, verifying the homomorphism property.
    pub fn resolve(&self, n: &FiniteGroup, h: &FiniteGroup) -> Result<Vec<Vec<usize>>> {
        if self.generators.len() != self.images.len() {
            return Err(Error::InvalidAction("generator/image count mismatch".into()));
        }
        for (i, perm) in self.images.iter().enumerate() {
            if perm.len() != n.order() {
                return Err(Error::InvalidAction(format!("image {i} has wrong length")));
            }
            let mut seen = vec![false; n.order()];
            for &y in perm {
                if y >= n.order() || seen[y] {
                    return Err(Error::InvalidAction(format!("image {i} is not a bijection")));
                }
                seen[y] = true;
            }
            for a in n.elements() {
                for b in n.elements() {
                    if perm[n.mul(a, b)] != n.mul(perm[a], perm[b]) {
                        return Err(Error::InvalidAction(format!(
                            "image {i} is not an automorphism at ({a}, {b})"
                        )));
                    }
                }
            }
        }
        let identity: Vec<usize> = n.elements().collect();
        let mut act: Vec<Option<Vec<usize>>> = vec![None; h.order()];
        act[h.identity()] = Some(identity);
        let mut queue = vec![h.identity()];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for (&s, perm) in self.generators.iter().zip(&self.images) {
                let y = h.mul(x, s);
                let ax = act[x].as_ref().unwrap();
                let composed: Vec<usize> = n.elements().map(|v| ax[perm[v]]).collect();
                match &act[y] {
                    None => {
                        act[y] = Some(composed);
                        queue.push(y);
                    }
                    Some(existing) if *existing != composed => {
                        return Err(Error::InvalidAction(format!(
                            "relation fails at element {y} of H"
                        )));
                    }
                    Some(_) => {}
                }
            }
            i += 1;
        }
        if queue.len() != h.order() {
            return Err(Error::InvalidAction("listed elements do not generate H".into()));
        }
        Ok(act.into_iter().map(Option::unwrap).collect())
    }
}

/// `N ⋊ H` on pairs `(n, h)` at index `n + |N| h`, with
/// `(n1, h1)(n2, h2) = (n1 · h1(n2), h1 h2)`.
pub fn semidirect(n: &FiniteGroup, h: &FiniteGroup, action: &ActionTable) -> Result<FiniteGroup> {
    let act = if action.generators.is_empty() {
        vec![n.elements().collect::<Vec<_>>(); h.order()]
    } else {
        action.resolve(n, h)?
    };
    let m = n.order();
    table_from(m * h.order(), format!("{}:{}", n.name(), h.name()), |x, y| {
        let (n1, h1) = (x % m, x / m);
        let (n2, h2) = (y % m, y / m);
        n.mul(n1, act[h1][n2]) + m * h.mul(h1, h2)
    })
}

/// `(G1 x G2) / {(z, ι(z)^{-1})}` for an isomorphism `ι` between central subgroups,
/// given as pairs `(z, ι(z))`.
pub fn central_product(g1: &FiniteGroup, g2: &FiniteGroup, iso: &[(usize, usize)]) -> Result<FiniteGroup> {
    let z1 = center(g1);
    let z2 = center(g2);
    if iso.iter().any(|&(a, b)| !z1.contains(a) || !z2.contains(b)) {
        return Err(Error::NotCentral);
    }
    let dom: Vec<usize> = iso.iter().map(|p| p.0).collect();
    let img: Vec<usize> = iso.iter().map(|p| p.1).collect();
    let s1 = Subgroup::from_elements(g1, &dom)?;
    let s2 = Subgroup::from_elements(g2, &img)?;
    if s1.order() != iso.len() || s2.order() != iso.len() {
        return Err(Error::HypothesisViolation("identification is not a bijection of subgroups".into()));
    }
    for &(a, fa) in iso {
        for &(b, fb) in iso {
            let ab = g1.mul(a, b);
            let fab = iso.iter().find(|p| p.0 == ab).map(|p| p.1);
            if fab != Some(g2.mul(fa, fb)) {
                return Err(Error::HypothesisViolation("identification is not a homomorphism".into()));
            }
        }
    }
    let d = direct_product(g1, g2)?;
    let n = g1.order();
    let kernel: Vec<usize> = iso.iter().map(|&(a, b)| a + n * g2.inv(b)).collect();
    let k = Subgroup::from_elements(&d, &kernel)?;
    let q = quotient(&d, &k)?;
    Ok(q.group.renamed(format!("{}*{}", g1.name(), g2.name())))
}

/// `C_n ⋊ (Z/n)^×` on pairs `(a, u)` with `(a, u)(b, v) = (a + u b, u v)`.
pub fn holomorph_cyclic(n: usize) -> Result<FiniteGroup> {
    if n < 2 {
        return Err(Error::OrderTooSmall {
            family: "holomorph",
            order: n,
        });
    }
    let units: Vec<usize> = (1..n).filter(|&u| gcd(u, n) == 1).collect();
    let mut unit_index = vec![usize::MAX; n];
    for (i, &u) in units.iter().enumerate() {
        unit_index[u] = i;
    }
    table_from(n * units.len(), format!("Hol(C{n})"), |x, y| {
        let (a, u) = (x % n, units[x / n]);
        let (b, v) = (y % n, units[y / n]);
        (a + u * b) % n + n * unit_index[u * v % n]
    })
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Subgroup of `Sym(degree)` generated by `generators`, as a Cayley table in
/// the regular representation. Elements are indexed by closure order.
pub fn from_permutations(degree: usize, generators: &[Vec<usize>], name: impl Into<String>) -> Result<FiniteGroup> {
    for (i, g) in generators.iter().enumerate() {
        let mut seen = vec![false; degree];
        if g.len() != degree || g.iter().any(|&x| x >= degree || std::mem::replace(&mut seen[x], true)) {
            return Err(Error::Parse(format!("generator {i} is not a permutation of degree {degree}")));
        }
    }
    let identity: Vec<usize> = (0..degree).collect();
    let mut elements = vec![identity.clone()];
    let mut index = std::collections::HashMap::new();
    index.insert(identity, 0usize);
    let mut i = 0;
    // Composition convention: (g h)(x) = g(h(x)).
    let compose = |g: &[usize], h: &[usize]| -> Vec<usize> { h.iter().map(|&x| g[x]).collect() };
    while i < elements.len() {
        for s in generators {
            let y = compose(&elements[i], s);
            if !index.contains_key(&y) {
                index.insert(y.clone(), elements.len());
                elements.push(y);
            }
        }
        i += 1;
    }
    let n = elements.len();
    let table: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| index[&compose(&elements[a], &elements[b])]).collect())
        .collect();
    make_group(&table, name)
}

pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    let mut gens = Vec::new();
    if n >= 2 {
        let mut cycle: Vec<usize> = (1..n).collect();
        cycle.push(0);
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        gens.push(cycle);
        gens.push(swap);
    }
    from_permutations(n.max(1), &gens, format!("S{n}"))
}

pub fn alternating4() -> FiniteGroup {
    from_permutations(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]], "A4").expect("valid permutations")
}

/// `SL(2,3)` acting on the 9 vectors of `F_3^2`.
pub fn sl23() -> FiniteGroup {
    let act = |m: [[usize; 2]; 2]| -> Vec<usize> {
        (0..9)
            .map(|v| {
                let (x, y) = (v % 3, v / 3);
                let x2 = (m[0][0] * x + m[0][1] * y) % 3;
                let y2 = (m[1][0] * x + m[1][1] * y) % 3;
                x2 + 3 * y2
            })
            .collect()
    };
    from_permutations(9, &[act([[1, 1], [0, 1]]), act([[1, 0], [1, 1]])], "SL(2,3)").expect("valid permutations")
}

/// `(C_p)^p ⋊ C_p` with the generator cycling coordinates.
pub fn wreath_cyclic(p: usize) -> Result<FiniteGroup> {
    let base = abelian(&vec![p; p])?;
    let top = cyclic(p)?;
    let shift: Vec<usize> = base
        .elements()
        .map(|x| {
            // Digits are little-endian; move digit i to position i + 1.
            let hi = x / p.pow(p as u32 - 1);
            (x * p) % p.pow(p as u32) + hi
        })
        .collect();
    let action = ActionTable {
        generators: vec![1],
        images: vec![shift],
    };
    Ok(semidirect(&base, &top, &action)?.renamed(format!("C{p}wrC{p}")))
}

/// `E ⋊ C_8` with `E` extraspecial of order 27 and exponent 3, where the
/// generator of `C_8` acts by an automorphism of order 8 that is transitive
/// on `E/Z(E) ∖ 1` and inverts `Z(E)`.
pub fn smallgroup_216_86() -> Result<FiniteGroup> {
    let e = extraspecial_27_exp3();
    let alpha = find_singer_automorphism(&e)?;
    let c8 = cyclic(8)?;
    let action = ActionTable {
        generators: vec![1],
        images: vec![alpha],
    };
    Ok(semidirect(&e, &c8, &action)?.renamed("SmallGroup(216,86)"))
}

fn find_singer_automorphism(e: &FiniteGroup) -> Result<Vec<usize>> {
    let z = center(e);
    let gens = e.generators().to_vec();
    if gens.len() != 2 || derived_subgroup(e) != z {
        return Err(Error::SearchFailed("expected a 2-generated group with G' = Z".into()));
    }
    let q = quotient(e, &z)?;
    for u in e.elements() {
        for v in e.elements() {
            let Some(map) = extend_homomorphism(e, e, &gens, &[u, v]) else {
                continue;
            };
            if map.contains(&usize::MAX) {
                continue;
            }
            if automorphism_order(&map) != 8 {
                continue;
            }
            if !z.elements().iter().all(|&c| map[c] == e.inv(c)) {
                continue;
            }
            // Orbit of one nontrivial coset must cover all 8 nontrivial cosets.
            let start = e.elements().find(|&x| !z.contains(x)).unwrap();
            let mut orbit = vec![q.projection[start]];
            let mut x = map[start];
            while q.projection[x] != orbit[0] {
                orbit.push(q.projection[x]);
                x = map[x];
            }
            if orbit.len() == 8 {
                return Ok(map);
            }
        }
    }
    Err(Error::SearchFailed("no automorphism of order 8 with the required action".into()))
}

fn automorphism_order(map: &[usize]) -> usize {
    let mut k = 1;
    let mut cur = map.to_vec();
    while cur.iter().enumerate().any(|(i, &x)| i != x) {
        cur = cur.iter().map(|&x| map[x]).collect();
        k += 1;
    }
    k
}
