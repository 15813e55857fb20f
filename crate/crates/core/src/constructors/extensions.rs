//! Central extensions by `C_2`, used to enumerate all 2-groups of a given order.
//!
//! Every nontrivial 2-group `G` has a central subgroup `Z` of order 2, so `G`
//! is a central extension of `Z` by `G/Z`. Walking one representative cocycle
//! per class of `H^2(Q, F_2)` for every `Q` of half the order and discarding
//! isomorphic duplicates yields each isomorphism type exactly once.

use super::*;
use crate::fp::{nullspace, FpMatrix, FpSubspace, PrimeField};
use crate::group::isoclinism::are_isomorphic;

fn f2() -> PrimeField {
    PrimeField::new(2).expect("2 is prime")
}

/// Cocycles `f: Q x Q -> F_2` with `f(a,b) + f(ab,c) = f(b,c) + f(a,bc)`,
/// coordinates `f(a,b)` at `a n + b`.
fn cocycles(q: &FiniteGroup) -> FpSubspace {
    let n = q.order();
    let mut eqs = FpMatrix::zero(f2(), 0, n * n);
    let mut row = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            let ab = q.mul(a, b);
            for c in 0..n {
                let bc = q.mul(b, c);
                row.iter_mut().for_each(|x| *x = 0);
                for idx in [a * n + b, ab * n + c, b * n + c, a * n + bc] {
                    row[idx] ^= 1;
                }
                if row.iter().any(|&x| x != 0) {
                    eqs.push_row(&row);
                }
            }
        }
    }
    nullspace(&eqs)
}

/// Coboundaries `(a,b) -> φ(a) + φ(b) + φ(ab)`.
fn coboundaries(q: &FiniteGroup) -> FpSubspace {
    let n = q.order();
    let rows: Vec<Vec<u32>> = (0..n)
        .map(|x| {
            let mut v = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    let hits = (a == x) as u32 + (b == x) as u32 + (q.mul(a, b) == x) as u32;
                    v[a * n + b] = hits % 2;
                }
            }
            v
        })
        .collect();
    FpSubspace::span(f2(), n * n, &rows)
}

/// One cocycle per cohomology class, as 0/1 tables.
pub fn cohomology_representatives(q: &FiniteGroup) -> Vec<Vec<u32>> {
    let z = cocycles(q);
    let b = coboundaries(q);
    let mut span = b.clone();
    let mut complement: Vec<Vec<u32>> = Vec::new();
    for v in z.basis_vectors() {
        if !span.contains(v).expect("same ambient") {
            complement.push(v.to_vec());
            span = span.join(&FpSubspace::span(f2(), v.len(), &[v])).expect("same ambient");
        }
    }
    debug_assert_eq!(span.dim(), z.dim());
    let len = q.order() * q.order();
    (0u64..1 << complement.len())
        .map(|mask| {
            let mut f = vec![0u32; len];
            for (i, c) in complement.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    f.iter_mut().zip(c).for_each(|(x, y)| *x ^= y);
                }
            }
            f
        })
        .collect()
}

/// `(q1, e1)(q2, e2) = (q1 q2, e1 + e2 + f(q1, q2))` on index `q + |Q| e`.
pub fn central_extension(q: &FiniteGroup, cocycle: &[u32], name: impl Into<String>) -> Result<FiniteGroup> {
    let n = q.order();
    if cocycle.len() != n * n {
        return Err(Error::HypothesisViolation("cocycle has the wrong size".into()));
    }
    table_from(2 * n, name, |x, y| {
        let (q1, e1) = (x % n, x / n);
        let (q2, e2) = (y % n, y / n);
        q.mul(q1, q2) + n * ((e1 + e2 + cocycle[q1 * n + q2] as usize) % 2)
    })
}

/// Cheap isomorphism invariants used to bucket candidates before the full test.
fn fingerprint(g: &FiniteGroup) -> Vec<usize> {
    let cl = g.conjugacy_classes();
    let mut stats: Vec<(usize, usize)> = g
        .elements()
        .map(|x| (g.element_order(x), cl.class(cl.class_of(x)).len()))
        .collect();
    stats.sort_unstable();
    let mut out = vec![
        g.order(),
        cl.len(),
        center(g).order(),
        derived_subgroup(g).order(),
        crate::group::frattini(g).order(),
    ];
    out.extend(stats.into_iter().flat_map(|(a, b)| [a, b]));
    out
}

/// All groups of order `2^k`, one per isomorphism type, in a deterministic order.
/// Names are `"<order>#<position>"`.
pub fn two_groups_of_order(order: usize) -> Result<Vec<FiniteGroup>> {
    if !order.is_power_of_two() {
        return Err(Error::HypothesisViolation(format!("{order} is not a power of 2")));
    }
    if order == 1 {
        return Ok(vec![abelian(&[1])?.renamed("1#1")]);
    }
    let smaller = two_groups_of_order(order / 2)?;
    let mut found: Vec<(Vec<usize>, FiniteGroup)> = Vec::new();
    for q in &smaller {
        for f in cohomology_representatives(q) {
            let g = central_extension(q, &f, "")?;
            let fp = fingerprint(&g);
            let duplicate = found
                .iter()
                .any(|(other_fp, other)| *other_fp == fp && are_isomorphic(&g, other));
            if !duplicate {
                let name = format!("{order}#{}", found.len() + 1);
                found.push((fp, g.renamed(name)));
            }
        }
    }
    Ok(found.into_iter().map(|(_, g)| g).collect())
}
