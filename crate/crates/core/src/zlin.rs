//! Exact integer linear algebra: Hermite and Smith normal forms, lattices,
//! integer kernels and integer linear systems.
//!
//! All arithmetic is done with [`BigInt`]. The row Hermite normal form uses
//! one convention everywhere: echelon rows, positive pivots, and entries above
//! each pivot reduced into `[0, pivot)`. Two generating sets of the same
//! lattice therefore produce identical bases.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows; every row must have `cols` entries.
    pub fn from_rows<T: Clone + Into<BigInt>>(cols: usize, rows: &[Vec<T>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
            data.extend(r.iter().cloned().map(Into::into));
        }
        Ok(IntMatrix { rows: rows.len(), cols, data })
    }

    pub fn from_i64_rows(cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(cols, rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<BigInt> {
        self.row(i).to_vec()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row_vec(i)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Determinant of a square matrix by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&r| !a[(r, k)].is_zero()) {
                    Some(r) => {
                        a.swap_rows(k, r);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = v / &prev;
                }
                a[(i, k)] = BigInt::zero();
            }
            prev = a[(k, k)].clone();
        }
        Ok(sign * &a[(n - 1, n - 1)])
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self[(src, j)] * factor;
            self[(dst, j)] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -&self[(r, j)];
            self[(r, j)] = v;
        }
    }

    /// Replaces rows (a, b) by (x·a + y·b, -q·a + p·b); unimodular when x·p + y·q = 1.
    fn combine_rows(&mut self, a: usize, b: usize, x: &BigInt, y: &BigInt, q: &BigInt, p: &BigInt) {
        for j in 0..self.cols {
            let ra = self[(a, j)].clone();
            let rb = self[(b, j)].clone();
            self[(a, j)] = x * &ra + y * &rb;
            self[(b, j)] = p * &rb - q * &ra;
        }
    }

    fn combine_cols(&mut self, a: usize, b: usize, x: &BigInt, y: &BigInt, q: &BigInt, p: &BigInt) {
        for i in 0..self.rows {
            let ca = self[(i, a)].clone();
            let cb = self[(i, b)].clone();
            self[(i, a)] = x * &ca + y * &cb;
            self[(i, b)] = p * &cb - q * &ca;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(|v| v.to_string()).collect()).collect();
        write!(f, "{rows:?}")
    }
}

/// Returns (g, x, y) with x·a + y·b = g = gcd(a, b) ≥ 0.
pub fn egcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let nr = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, nr);
        let ns = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, ns);
        let nt = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, nt);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Row Hermite normal form: returns `(H, U)` with `U` unimodular and `H = U·M`.
///
/// Zero rows of `H` are at the bottom; the corresponding rows of `U` span the
/// left kernel of `M`.
pub fn hnf(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut pr = 0;
    for col in 0..m.cols {
        if pr == m.rows {
            break;
        }
        for r in pr + 1..m.rows {
            if h[(r, col)].is_zero() {
                continue;
            }
            let a = h[(pr, col)].clone();
            let b = h[(r, col)].clone();
            let (g, x, y) = egcd(&a, &b);
            let p = &a / &g;
            let q = &b / &g;
            h.combine_rows(pr, r, &x, &y, &q, &p);
            u.combine_rows(pr, r, &x, &y, &q, &p);
        }
        if h[(pr, col)].is_zero() {
            continue;
        }
        if h[(pr, col)].is_negative() {
            h.negate_row(pr);
            u.negate_row(pr);
        }
        let piv = h[(pr, col)].clone();
        for r in 0..pr {
            let f = -h[(r, col)].div_floor(&piv);
            h.add_row_multiple(r, pr, &f);
            u.add_row_multiple(r, pr, &f);
        }
        pr += 1;
    }
    (h, u)
}

/// Number of nonzero rows of a matrix in echelon form.
fn echelon_rank(h: &IntMatrix) -> usize {
    (0..h.rows).take_while(|&i| h.row(i).iter().any(|v| !v.is_zero())).count()
}

/// Smith normal form: returns `(D, U, V)` with `D = U·M·V` diagonal,
/// nonnegative, and `d₁ | d₂ | …`.
pub fn snf(m: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let mut d = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut v = IntMatrix::identity(m.cols);
    let n = m.rows.min(m.cols);
    for t in 0..n {
        // Smallest nonzero entry of the trailing block goes to (t, t).
        let mut best: Option<(usize, usize)> = None;
        for i in t..m.rows {
            for j in t..m.cols {
                if !d[(i, j)].is_zero()
                    && best.is_none_or(|(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        d.swap_rows(t, bi);
        u.swap_rows(t, bi);
        d.swap_cols(t, bj);
        v.swap_cols(t, bj);
        loop {
            let mut changed = false;
            for i in t + 1..m.rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let a = d[(t, t)].clone();
                let b = d[(i, t)].clone();
                let (g, x, y) = egcd(&a, &b);
                let (p, q) = (&a / &g, &b / &g);
                d.combine_rows(t, i, &x, &y, &q, &p);
                u.combine_rows(t, i, &x, &y, &q, &p);
                changed = true;
            }
            for j in t + 1..m.cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let a = d[(t, t)].clone();
                let b = d[(t, j)].clone();
                let (g, x, y) = egcd(&a, &b);
                let (p, q) = (&a / &g, &b / &g);
                d.combine_cols(t, j, &x, &y, &q, &p);
                v.combine_cols(t, j, &x, &y, &q, &p);
                changed = true;
            }
            if changed {
                continue;
            }
            // Divisibility: fold an offending row into row t and repeat.
            let piv = d[(t, t)].clone();
            let bad = (t + 1..m.rows)
                .find(|&i| (t + 1..m.cols).any(|j| !d[(i, j)].is_multiple_of(&piv)));
            match bad {
                Some(i) => {
                    d.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    (d, u, v)
}

/// Inverse of a unimodular matrix.
pub fn unimodular_inverse(m: &IntMatrix) -> Result<IntMatrix> {
    if m.rows != m.cols {
        return Err(Error::DimensionMismatch { expected: m.rows, found: m.cols });
    }
    let (h, u) = hnf(m);
    if h != IntMatrix::identity(m.rows) {
        return Err(Error::InvalidInput("matrix is not unimodular".into()));
    }
    Ok(u)
}

/// Integer kernel `{x : x·M = 0}` (row vectors), as a lattice in ℤ^rows.
pub fn left_kernel(m: &IntMatrix) -> Lattice {
    let (h, u) = hnf(m);
    let r = echelon_rank(&h);
    let gens: Vec<Vec<BigInt>> = (r..m.rows).map(|i| u.row_vec(i)).collect();
    Lattice::from_generators_big(m.rows, &gens).expect("kernel rows have ambient length")
}

/// All integer solutions of `A·x = b`: a particular solution and a kernel
/// basis, or `None` when no integer solution exists.
pub fn solve_integer(a: &IntMatrix, b: &[BigInt]) -> Result<Option<(Vec<BigInt>, Vec<Vec<BigInt>>)>> {
    if b.len() != a.rows {
        return Err(Error::DimensionMismatch { expected: a.rows, found: b.len() });
    }
    let k = a.cols;
    // H = U·Aᵀ; A·x = b ⇔ Hᵀ·y = b with x = Uᵀ·y.
    let (h, u) = hnf(&a.transpose());
    let r = echelon_rank(&h);
    let mut y = vec![BigInt::zero(); k];
    for i in 0..r {
        let p = (0..a.rows).find(|&c| !h[(i, c)].is_zero()).expect("nonzero echelon row");
        let mut rhs = b[p].clone();
        for (j, yj) in y.iter().enumerate().take(i) {
            rhs -= &h[(j, p)] * yj;
        }
        let (q, rem) = rhs.div_rem(&h[(i, p)]);
        if !rem.is_zero() {
            return Ok(None);
        }
        y[i] = q;
    }
    for c in 0..a.rows {
        let mut s = BigInt::zero();
        for (i, yi) in y.iter().enumerate().take(r) {
            s += &h[(i, c)] * yi;
        }
        if s != b[c] {
            return Ok(None);
        }
    }
    let mut x = vec![BigInt::zero(); k];
    for (i, yi) in y.iter().enumerate().take(r) {
        for (j, xj) in x.iter_mut().enumerate() {
            *xj += yi * &u[(i, j)];
        }
    }
    let kernel = (r..k).map(|i| u.row_vec(i)).collect();
    Ok(Some((x, kernel)))
}

/// A sublattice of ℤ^n stored by its row Hermite basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Lattice {
    ambient_rank: usize,
    basis: Vec<Vec<BigInt>>,
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b: Vec<Vec<String>> =
            self.basis.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
        write!(f, "Lattice(n={}, {:?})", self.ambient_rank, b)
    }
}

/// Index of a sublattice: finite or infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Index {
    Finite(BigInt),
    Infinite,
}

/// Structure of a quotient of lattices `L2 / L1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeQuotient {
    pub index: Index,
    /// Invariant factors greater than one.
    pub torsion_invariants: Vec<BigInt>,
    pub free_rank: usize,
}

impl Lattice {
    pub fn zero(ambient_rank: usize) -> Self {
        Lattice { ambient_rank, basis: Vec::new() }
    }

    pub fn full(ambient_rank: usize) -> Self {
        let basis = (0..ambient_rank)
            .map(|i| (0..ambient_rank).map(|j| BigInt::from((i == j) as i64)).collect())
            .collect();
        Lattice { ambient_rank, basis }
    }

    pub fn from_generators(ambient_rank: usize, gens: &[Vec<i64>]) -> Result<Self> {
        let big: Vec<Vec<BigInt>> =
            gens.iter().map(|g| g.iter().map(|&v| BigInt::from(v)).collect()).collect();
        Self::from_generators_big(ambient_rank, &big)
    }

    pub fn from_generators_big(ambient_rank: usize, gens: &[Vec<BigInt>]) -> Result<Self> {
        if gens.is_empty() {
            return Ok(Self::zero(ambient_rank));
        }
        let m = IntMatrix::from_rows(ambient_rank, gens)?;
        let (h, _) = hnf(&m);
        let r = echelon_rank(&h);
        Ok(Lattice { ambient_rank, basis: (0..r).map(|i| h.row_vec(i)).collect() })
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn basis_i64(&self) -> Result<Vec<Vec<i64>>> {
        self.basis.iter().map(|r| to_i64_vec(r)).collect()
    }

    fn check_dim(&self, v: usize) -> Result<()> {
        if v != self.ambient_rank {
            return Err(Error::DimensionMismatch { expected: self.ambient_rank, found: v });
        }
        Ok(())
    }

    /// Coordinates of `v` in the Hermite basis, if `v` lies in the lattice.
    pub fn member(&self, v: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        self.check_dim(v.len())?;
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        for row in &self.basis {
            let p = row.iter().position(|x| !x.is_zero()).expect("basis rows are nonzero");
            let (q, rem) = rest[p].div_rem(&row[p]);
            if !rem.is_zero() {
                return Ok(None);
            }
            for (r, b) in rest.iter_mut().zip(row) {
                *r -= &q * b;
            }
            coords.push(q);
        }
        Ok(if rest.iter().all(Zero::is_zero) { Some(coords) } else { None })
    }

    pub fn member_i64(&self, v: &[i64]) -> Result<Option<Vec<i64>>> {
        let big: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        match self.member(&big)? {
            Some(c) => Ok(Some(to_i64_vec(&c)?)),
            None => Ok(None),
        }
    }

    pub fn contains_i64(&self, v: &[i64]) -> Result<bool> {
        Ok(self.member_i64(v)?.is_some())
    }

    /// Canonical representative of the coset `v + L`: pivot coordinates reduced into `[0, pivot)`.
    pub fn reduce(&self, v: &[i64]) -> Vec<i64> {
        let mut out: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        for row in &self.basis {
            let p = row.iter().position(|x| !x.is_zero()).expect("basis rows are nonzero");
            let q = out[p].div_floor(&row[p]);
            if !q.is_zero() {
                for (o, b) in out.iter_mut().zip(row) {
                    *o -= &q * b;
                }
            }
        }
        out.iter().map(|x| x.to_i64().expect("coset representative fits in i64")).collect()
    }

    /// Linear combination of basis vectors with the given coordinates.
    pub fn combine(&self, coords: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.ambient_rank];
        for (c, row) in coords.iter().zip(&self.basis) {
            for (o, b) in out.iter_mut().zip(row) {
                *o += c * b;
            }
        }
        out
    }

    pub fn is_sublattice_of(&self, other: &Lattice) -> Result<bool> {
        self.check_dim(other.ambient_rank)?;
        for b in &self.basis {
            if other.member(b)?.is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Lattice) -> Result<Lattice> {
        self.check_dim(other.ambient_rank)?;
        let gens: Vec<Vec<BigInt>> = self.basis.iter().chain(&other.basis).cloned().collect();
        Lattice::from_generators_big(self.ambient_rank, &gens)
    }

    /// Coordinates of the basis of `self` in the basis of `outer`.
    fn coordinates_in(&self, outer: &Lattice) -> Result<IntMatrix> {
        let mut rows = Vec::with_capacity(self.rank());
        for b in &self.basis {
            rows.push(outer.member(b)?.ok_or(Error::NotASublattice)?);
        }
        IntMatrix::from_rows(outer.rank(), &rows)
    }

    /// Structure of `outer / self`; `self` must be contained in `outer`.
    pub fn quotient_in(&self, outer: &Lattice) -> Result<LatticeQuotient> {
        self.check_dim(outer.ambient_rank)?;
        let c = self.coordinates_in(outer)?;
        let (d, _, _) = snf(&c);
        let diag: Vec<BigInt> =
            (0..d.rows().min(d.cols())).map(|i| d[(i, i)].clone()).filter(|x| !x.is_zero()).collect();
        let free_rank = outer.rank() - diag.len();
        let torsion_invariants: Vec<BigInt> = diag.iter().filter(|x| !x.is_one()).cloned().collect();
        let index = if free_rank > 0 {
            Index::Infinite
        } else {
            Index::Finite(diag.iter().fold(BigInt::one(), |a, b| a * b))
        };
        Ok(LatticeQuotient { index, torsion_invariants, free_rank })
    }

    /// Saturation of `self` inside `outer`: `{v ∈ outer : k·v ∈ self for some k ≠ 0}`.
    pub fn saturation_in(&self, outer: &Lattice) -> Result<Lattice> {
        self.check_dim(outer.ambient_rank)?;
        if self.rank() == 0 {
            return Ok(Lattice::zero(self.ambient_rank));
        }
        let c = self.coordinates_in(outer)?;
        let (d, _, v) = snf(&c);
        let r = (0..d.rows().min(d.cols())).filter(|&i| !d[(i, i)].is_zero()).count();
        // C = U⁻¹·D·V⁻¹, so the first r rows of V⁻¹ span the rational row space of C saturatedly.
        let vinv = unimodular_inverse(&v)?;
        let gens: Vec<Vec<BigInt>> = (0..r).map(|i| outer.combine(vinv.row(i))).collect();
        Lattice::from_generators_big(self.ambient_rank, &gens)
    }

    pub fn saturation(&self) -> Result<Lattice> {
        self.saturation_in(&Lattice::full(self.ambient_rank))
    }

    /// Image of the lattice under a coordinate map sending `e_i` to `images[i]`.
    pub fn map(&self, target_rank: usize, images: &[Vec<i64>]) -> Result<Lattice> {
        if images.len() != self.ambient_rank {
            return Err(Error::DimensionMismatch { expected: self.ambient_rank, found: images.len() });
        }
        let mut gens = Vec::with_capacity(self.rank());
        for b in &self.basis {
            let mut out = vec![BigInt::zero(); target_rank];
            for (c, img) in b.iter().zip(images) {
                if img.len() != target_rank {
                    return Err(Error::DimensionMismatch { expected: target_rank, found: img.len() });
                }
                for (o, x) in out.iter_mut().zip(img) {
                    *o += c * BigInt::from(*x);
                }
            }
            gens.push(out);
        }
        Lattice::from_generators_big(target_rank, &gens)
    }
}

pub fn to_i64_vec(v: &[BigInt]) -> Result<Vec<i64>> {
    v.iter().map(|x| x.to_i64().ok_or(Error::Overflow)).collect()
}

pub fn big_vec(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(cols: usize, rows: &[&[i64]]) -> IntMatrix {
        let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        IntMatrix::from_i64_rows(cols, &rows).unwrap()
    }

    fn check_hnf(mat: &IntMatrix, expected: &IntMatrix) {
        let (h, u) = hnf(mat);
        assert_eq!(&h, expected);
        assert_eq!(u.mul(mat).unwrap(), h);
        assert!(u.determinant().unwrap().abs().is_one());
    }

    #[test]
    fn hnf_examples() {
        check_hnf(&m(2, &[&[1, 0], &[0, 1]]), &m(2, &[&[1, 0], &[0, 1]]));
        check_hnf(&m(2, &[&[1, 2], &[3, 4]]), &m(2, &[&[1, 0], &[0, 2]]));
        check_hnf(&m(2, &[&[2, 4]]), &m(2, &[&[2, 4]]));
        assert_eq!(hnf(&m(2, &[&[1, 0], &[0, 1]])).1, IntMatrix::identity(2));
    }

    #[test]
    fn snf_examples() {
        let (d, u, v) = snf(&m(2, &[&[2, 0], &[0, 3]]));
        assert_eq!(d, m(2, &[&[1, 0], &[0, 6]]));
        assert_eq!(u.mul(&m(2, &[&[2, 0], &[0, 3]])).unwrap().mul(&v).unwrap(), d);
        assert!(snf(&IntMatrix::zeros(2, 3)).0.is_zero());
        assert_eq!(snf(&m(2, &[&[2, 0], &[0, 2]])).0, m(2, &[&[2, 0], &[0, 2]]));
    }

    #[test]
    fn lattice_membership() {
        let l = Lattice::from_generators(2, &[vec![2, 0], vec![0, 2]]).unwrap();
        assert_eq!(l.member_i64(&[4, 2]).unwrap(), Some(vec![2, 1]));
        assert_eq!(l.member_i64(&[1, 0]).unwrap(), None);
        assert_eq!(l.member_i64(&[0, 0]).unwrap(), Some(vec![0, 0]));
        assert!(l.member_i64(&[1, 0, 0]).is_err());
    }

    #[test]
    fn lattice_quotients() {
        let two = Lattice::from_generators(2, &[vec![2, 0], vec![0, 2]]).unwrap();
        let full = Lattice::full(2);
        let q = two.quotient_in(&full).unwrap();
        assert_eq!(q.index, Index::Finite(BigInt::from(4)));
        assert_eq!(q.torsion_invariants, vec![BigInt::from(2), BigInt::from(2)]);
        assert_eq!(full.quotient_in(&full).unwrap().index, Index::Finite(BigInt::one()));
        let line = Lattice::from_generators(2, &[vec![1, 0]]).unwrap();
        assert_eq!(line.quotient_in(&full).unwrap().index, Index::Infinite);
        assert_eq!(full.quotient_in(&line), Err(Error::NotASublattice));
    }

    #[test]
    fn saturation_of_index_two_line() {
        let l = Lattice::from_generators(2, &[vec![2, 0]]).unwrap();
        let s = l.saturation().unwrap();
        assert_eq!(s, Lattice::from_generators(2, &[vec![1, 0]]).unwrap());
        let l = Lattice::from_generators(3, &[vec![2, 4, 6], vec![0, 3, 3]]).unwrap();
        let s = l.saturation().unwrap();
        assert_eq!(s.rank(), 2);
        assert!(s.contains_i64(&[1, 2, 3]).unwrap());
        assert!(s.contains_i64(&[0, 1, 1]).unwrap());
    }

    #[test]
    fn integer_systems() {
        let a = m(2, &[&[2, 4]]);
        let (x, ker) = solve_integer(&a, &[BigInt::from(6)]).unwrap().unwrap();
        assert_eq!(&x[0] * 2 + &x[1] * 4, BigInt::from(6));
        assert_eq!(ker.len(), 1);
        assert!(solve_integer(&a, &[BigInt::from(3)]).unwrap().is_none());
        let k = left_kernel(&m(1, &[&[2], &[3]]));
        assert_eq!(k, Lattice::from_generators(2, &[vec![3, -2]]).unwrap());
    }

    #[test]
    fn coset_reduction_is_canonical() {
        let l = Lattice::from_generators(2, &[vec![2, 0]]).unwrap();
        assert_eq!(l.reduce(&[5, 1]), vec![1, 1]);
        assert_eq!(l.reduce(&[-3, 1]), vec![1, 1]);
    }
}
