//! Dense linear algebra over prime fields.
//!
//! Every subspace is stored by its reduced row-echelon basis, so two
//! subspaces of the same ambient space are equal exactly when their
//! basis matrices are equal.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The prime field `F_p`. Scalars are plain `u32` residues in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p > (1 << 16) || !is_prime(p as u64) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn modulus(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, x: u64) -> u32 {
        (x % self.p as u64) as u32
    }

    /// Reduces a signed integer into `[0, p)`.
    #[inline]
    pub fn from_i64(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(a % self.p != 0, "zero has no inverse in F_{}", self.p);
        self.pow(a, self.p as u64 - 2)
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Row-major dense matrix with entries reduced modulo the field prime.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FpMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FpMatrix {
    pub fn zero(field: PrimeField, rows: usize, cols: usize) -> Self {
        FpMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from rows of arbitrary (unreduced) integers.
    pub fn from_rows<R: AsRef<[u32]>>(field: PrimeField, cols: usize, rows: &[R]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "row length does not match column count");
            data.extend(r.iter().map(|&x| x % field.p));
        }
        FpMatrix {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.field.p;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u32]> {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }

    pub fn push_row(&mut self, row: &[u32]) {
        assert_eq!(row.len(), self.cols);
        self.data.extend(row.iter().map(|&x| x % self.field.p));
        self.rows += 1;
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &FpMatrix) -> Result<FpMatrix> {
        if self.cols != other.cols || self.field != other.field {
            return Err(Error::DimensionMismatch {
                left: self.cols,
                right: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(FpMatrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let p = self.field.p as u64;
        self.row_iter()
            .map(|row| {
                let s: u64 = row
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| a as u64 * b as u64 % p)
                    .sum();
                (s % p) as u32
            })
            .collect()
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.rows);
        let p = self.field.p as u64;
        let mut out = FpMatrix::zero(self.field, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for (slot, &b) in acc.iter_mut().zip(other.row(k)) {
                    *slot = (*slot + a * b as u64) % p;
                }
            }
            for (j, &a) in acc.iter().enumerate() {
                out.data[i * other.cols + j] = a as u32;
            }
        }
        out
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut out = FpMatrix::zero(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.get(r, c);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix<{}> {}x{} [", self.field, self.rows, self.cols)?;
        for row in self.row_iter() {
            writeln!(f, "  {:?}", row)?;
        }
        write!(f, "]")
    }
}

/// Reduced row-echelon form with zero rows dropped, together with the rank.
pub fn rref(m: &FpMatrix) -> (FpMatrix, usize) {
    let (r, pivots) = rref_with_pivots(m);
    let rank = pivots.len();
    (r, rank)
}

fn rref_with_pivots(m: &FpMatrix) -> (FpMatrix, Vec<usize>) {
    let field = m.field;
    let cols = m.cols;
    let mut rows: Vec<Vec<u32>> = m.row_iter().map(|r| r.to_vec()).collect();
    let mut pivots = Vec::new();
    let mut next = 0;
    for c in 0..cols {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(next, found);
        let inv = field.inv(rows[next][c]);
        if inv != 1 {
            for x in rows[next][c..].iter_mut() {
                *x = field.mul(*x, inv);
            }
        }
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, &y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *x = field.sub(*x, field.mul(f, y));
            }
        }
        pivots.push(c);
        next += 1;
    }
    rows.truncate(next);
    (FpMatrix::from_rows(field, cols, &rows), pivots)
}

/// `{v : m v = 0}`.
pub fn nullspace(m: &FpMatrix) -> FpSubspace {
    let field = m.field;
    let cols = m.cols;
    let (r, pivots) = rref_with_pivots(m);
    let mut is_pivot = vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u32; cols];
        v[free] = 1;
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = field.neg(r.get(i, free));
        }
        basis.push(v);
    }
    FpSubspace::span(field, cols, &basis)
}

/// Vectors killed by every map in `maps`. All maps must have `ambient` columns.
pub fn common_nullspace(field: PrimeField, ambient: usize, maps: &[FpMatrix]) -> Result<FpSubspace> {
    let mut stacked = FpMatrix::zero(field, 0, ambient);
    for m in maps {
        stacked = stacked.stack(m)?;
    }
    Ok(nullspace(&stacked))
}

/// A subspace of `F_p^n`, held as a reduced row-echelon basis.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FpSubspace {
    basis: FpMatrix,
    pivots: Vec<usize>,
}

impl FpSubspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        FpSubspace {
            basis: FpMatrix::zero(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        FpSubspace {
            basis: FpMatrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Row space of `m`.
    pub fn row_space(m: &FpMatrix) -> Self {
        let (basis, pivots) = rref_with_pivots(m);
        FpSubspace { basis, pivots }
    }

    pub fn span<R: AsRef<[u32]>>(field: PrimeField, ambient: usize, vectors: &[R]) -> Self {
        Self::row_space(&FpMatrix::from_rows(field, ambient, vectors))
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.basis.field
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.basis.cols
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn basis(&self) -> &FpMatrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[u32]> {
        self.basis.row_iter()
    }

    fn check_compatible(&self, other: &FpSubspace) -> Result<()> {
        if self.ambient_dim() != other.ambient_dim() || self.field() != other.field() {
            return Err(Error::DimensionMismatch {
                left: self.ambient_dim(),
                right: other.ambient_dim(),
            });
        }
        Ok(())
    }

    /// Reduces `v` against the basis; the result is zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let field = self.field();
        let mut w: Vec<u32> = v.iter().map(|&x| x % field.p).collect();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let f = w[pc];
            if f == 0 {
                continue;
            }
            for (x, &y) in w.iter_mut().zip(self.basis.row(i)).skip(pc) {
                *x = field.sub(*x, field.mul(f, y));
            }
        }
        w
    }

    pub fn contains(&self, v: &[u32]) -> Result<bool> {
        if v.len() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                left: self.ambient_dim(),
                right: v.len(),
            });
        }
        Ok(self.reduce(v).iter().all(|&x| x == 0))
    }

    pub fn is_subspace_of(&self, other: &FpSubspace) -> Result<bool> {
        self.check_compatible(other)?;
        for v in self.basis_vectors() {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn join(&self, other: &FpSubspace) -> Result<FpSubspace> {
        self.check_compatible(other)?;
        Ok(FpSubspace::row_space(&self.basis.stack(&other.basis)?))
    }

    /// Orthogonal complement under the standard bilinear form.
    pub fn perp(&self) -> FpSubspace {
        nullspace(&self.basis)
    }

    /// Intersection, computed as `(A^⊥ + B^⊥)^⊥`.
    pub fn meet(&self, other: &FpSubspace) -> Result<FpSubspace> {
        self.check_compatible(other)?;
        let constraints = self.perp().basis.stack(&other.perp().basis)?;
        Ok(nullspace(&constraints))
    }

    /// Image of the subspace under the linear map `m` (acting on column vectors).
    pub fn image_under(&self, m: &FpMatrix) -> FpSubspace {
        let rows: Vec<Vec<u32>> = self.basis_vectors().map(|v| m.apply(v)).collect();
        FpSubspace::span(self.field(), m.rows(), &rows)
    }
}

impl fmt::Debug for FpSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FpSubspace(dim {} in {}^{}) {:?}",
            self.dim(),
            self.field(),
            self.ambient_dim(),
            self.basis
        )
    }
}

/// Echelon basis grown one vector at a time.
///
/// Each stored row is reduced against the earlier ones, so membership costs
/// one pass over the rows in insertion order.
#[derive(Clone, Debug)]
pub struct EchelonBuilder {
    field: PrimeField,
    ambient: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl EchelonBuilder {
    pub fn new(field: PrimeField, ambient: usize) -> Self {
        EchelonBuilder {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let field = self.field;
        let mut w: Vec<u32> = v.iter().map(|&x| x % field.p).collect();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let f = w[pc];
            if f != 0 {
                for (x, &y) in w.iter_mut().zip(row) {
                    if y != 0 {
                        *x = field.sub(*x, field.mul(f, y));
                    }
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v` if it is independent of the current rows; reports whether it was.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length");
        let mut w = self.reduce(v);
        let Some(pc) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.field.inv(w[pc]);
        for x in w.iter_mut() {
            *x = self.field.mul(*x, inv);
        }
        self.rows.push(w);
        self.pivots.push(pc);
        true
    }

    pub fn into_subspace(self) -> FpSubspace {
        FpSubspace::span(self.field, self.ambient, &self.rows)
    }
}
