//! Exact integer lattice algebra.
//!
//! Everything here runs on arbitrary-precision integers: Smith and Hermite
//! normal forms, saturated kernels, sublattices of `Z^n` stored in a canonical
//! (Hermite) basis, and the finitely generated abelian groups that arise as
//! quotients.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::RankMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from `i64` rows; `cols` is needed when there are no rows.
    pub fn from_i64_rows(cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::RankMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_big_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::RankMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(IntMatrix {
            rows: n,
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<BigInt> {
        self.row(i).to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    /// Entries as `i64`, or `None` if any entry does not fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_i64()).collect())
            .collect()
    }

    /// Matrix-vector product `self * v` on `i64` coordinates.
    pub fn apply_i64(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let s: BigInt = self
                    .row(i)
                    .iter()
                    .zip(v)
                    .map(|(a, &b)| a * BigInt::from(b))
                    .sum();
                s.to_i64().expect("matrix-vector product overflows i64")
            })
            .collect()
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &IntMatrix) -> IntMatrix {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row[dst] += k * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = self.get(src, c) * k;
            self.data[dst * self.cols + c] += v;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = self.get(r, src) * k;
            self.data[r * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = -self.get(i, c);
            self.set(i, c, v);
        }
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs.get(k, j);
                }
            }
        }
        out
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Smith normal form: returns `(U, D, V)` with `U * m * V = D`, `U` and `V`
/// unimodular, `D` diagonal with nonnegative entries `d_1 | d_2 | ...`.
pub fn smith_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let (rows, cols) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let Some((pi, pj)) = min_abs_entry(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let mut clean = true;
            for i in t + 1..rows {
                let q = d.get(i, t).div_floor(d.get(t, t));
                let q = -q;
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                if !d.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = d.get(t, j).div_floor(d.get(t, t));
                let q = -q;
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                if !d.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                let (pi, pj) = min_abs_entry_cross(&d, t);
                d.swap_rows(t, pi);
                u.swap_rows(t, pi);
                d.swap_cols(t, pj);
                v.swap_cols(t, pj);
                continue;
            }
            // divisibility: fold an offending row into the pivot row
            let piv = d.get(t, t).clone();
            let bad = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !d.get(i, j).is_multiple_of(&piv)));
            match bad {
                Some(i) => {
                    d.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    (u, d, v)
}

fn min_abs_entry(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows {
        for j in t..d.cols {
            let e = d.get(i, j);
            if e.is_zero() {
                continue;
            }
            if best.map_or(true, |(bi, bj)| e.abs() < d.get(bi, bj).abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn min_abs_entry_cross(d: &IntMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let consider = |i: usize, j: usize, best: &mut (usize, usize)| {
        let e = d.get(i, j);
        if !e.is_zero() && (d.get(best.0, best.1).is_zero() || e.abs() < d.get(best.0, best.1).abs())
        {
            *best = (i, j);
        }
    };
    for i in t..d.rows {
        consider(i, t, &mut best);
    }
    for j in t..d.cols {
        consider(t, j, &mut best);
    }
    best
}

/// Row Hermite form with transform: returns `(H, U)` with `U * m = H`,
/// `U` unimodular and `H` in reduced row echelon form over `Z` (positive
/// pivots, entries above a pivot reduced into `[0, pivot)`).
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let (rows, cols) = (m.rows, m.cols);
    let mut h = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let mut found = false;
        loop {
            let pick = (r..rows)
                .filter(|&i| !h.get(i, c).is_zero())
                .min_by(|&a, &b| h.get(a, c).abs().cmp(&h.get(b, c).abs()));
            let Some(i) = pick else { break };
            found = true;
            h.swap_rows(r, i);
            u.swap_rows(r, i);
            let mut done = true;
            for i in r + 1..rows {
                let q = -h.get(i, c).div_floor(h.get(r, c));
                h.add_row_multiple(i, r, &q);
                u.add_row_multiple(i, r, &q);
                if !h.get(i, c).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if !found {
            continue;
        }
        if h.get(r, c).is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = -h.get(i, c).div_floor(h.get(r, c));
            h.add_row_multiple(i, r, &q);
            u.add_row_multiple(i, r, &q);
        }
        r += 1;
    }
    (h, u)
}

/// Saturated integer kernel `{x : m x = 0}` as a sublattice of `Z^cols`.
pub fn kernel(m: &IntMatrix) -> Sublattice {
    let (h, u) = hermite_normal_form(&m.transpose());
    let gens: Vec<Vec<BigInt>> = (0..h.rows)
        .filter(|&i| h.row(i).iter().all(Zero::is_zero))
        .map(|i| u.row_vec(i))
        .collect();
    Sublattice::from_big_generators(m.cols, gens).expect("kernel rows have matching length")
}

/// Solves `a x = b` over the rationals; returns a solution when `a` has full
/// column rank and the system is consistent.
pub fn solve_rational(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigRational>> {
    let (rows, cols) = (a.rows, a.cols);
    assert_eq!(b.len(), rows);
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| {
            let mut r: Vec<BigRational> = a
                .row(i)
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect();
            r.push(BigRational::from_integer(b[i].clone()));
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            return None;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..=cols {
                    let v = &m[r][j] * &f;
                    m[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if (r..rows).any(|i| !m[i][cols].is_zero()) {
        return None;
    }
    Some((0..cols).map(|c| m[c][cols].clone()).collect())
}

/// Inverse over the rationals, `None` when singular.
pub fn inverse_rational(a: &IntMatrix) -> Option<Vec<Vec<BigRational>>> {
    let (adj, d) = scaled_inverse(a)?;
    Some(
        adj.into_iter()
            .map(|row| row.into_iter().map(|x| BigRational::new(x, d.clone())).collect())
            .collect(),
    )
}

/// `(d a^{-1}, d)` with `d = det a`, `None` when singular.
///
/// Fraction-free Gauss-Jordan on `[a | I]`; every division is exact.
pub fn scaled_inverse(a: &IntMatrix) -> Option<(Vec<Vec<BigInt>>, BigInt)> {
    assert!(a.is_square());
    let n = a.rows;
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.extend((0..n).map(|j| BigInt::from((i == j) as i64)));
            r
        })
        .collect();
    let mut prev = BigInt::one();
    for k in 0..n {
        let p = (k..n).find(|&i| !m[i][k].is_zero())?;
        m.swap(k, p);
        let (pivot_row, pivot) = (m[k].clone(), m[k][k].clone());
        for (i, row) in m.iter_mut().enumerate() {
            if i == k {
                continue;
            }
            let f = row[k].clone();
            for j in 0..2 * n {
                if j != k {
                    row[j] = (&pivot * &row[j] - &f * &pivot_row[j]) / &prev;
                }
            }
            row[k] = BigInt::zero();
        }
        prev = pivot;
    }
    // every diagonal entry now equals det a
    let d = prev;
    let adj = m.into_iter().map(|row| row[n..].to_vec()).collect();
    Some((adj, d))
}

/// Sublattice of `Z^n` with a basis in Hermite normal form, so two sublattices
/// are equal exactly when their stored bases are.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Sublattice {
    ambient_rank: usize,
    basis: IntMatrix,
}

impl Sublattice {
    pub fn from_generators(ambient_rank: usize, gens: &[Vec<i64>]) -> Result<Self> {
        let m = IntMatrix::from_i64_rows(ambient_rank, gens)?;
        Ok(Self::from_matrix(m))
    }

    pub fn from_big_generators(ambient_rank: usize, gens: Vec<Vec<BigInt>>) -> Result<Self> {
        let m = IntMatrix::from_big_rows(ambient_rank, gens)?;
        Ok(Self::from_matrix(m))
    }

    /// The rows of `m` generate the sublattice.
    pub fn from_matrix(m: IntMatrix) -> Self {
        let (h, _) = hermite_normal_form(&m);
        let rows: Vec<Vec<BigInt>> = (0..h.rows)
            .filter(|&i| !h.row(i).iter().all(Zero::is_zero))
            .map(|i| h.row_vec(i))
            .collect();
        let basis = IntMatrix::from_big_rows(m.cols, rows).expect("consistent widths");
        Sublattice {
            ambient_rank: m.cols,
            basis,
        }
    }

    pub fn full(n: usize) -> Self {
        Sublattice {
            ambient_rank: n,
            basis: IntMatrix::identity(n),
        }
    }

    pub fn zero(n: usize) -> Self {
        Sublattice {
            ambient_rank: n,
            basis: IntMatrix::zeros(0, n),
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.rows
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn basis_i64(&self) -> Vec<Vec<i64>> {
        self.basis.to_i64_rows().expect("basis fits in i64")
    }

    /// Coordinates of `v` in the stored basis, or `None` if `v` is not in the lattice.
    pub fn coordinates_big(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        if v.len() != self.ambient_rank {
            return None;
        }
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        for i in 0..self.rank() {
            let row = self.basis.row(i);
            let p = row.iter().position(|x| !x.is_zero()).expect("nonzero basis row");
            let (q, r) = rest[p].div_rem(&row[p]);
            if !r.is_zero() {
                return None;
            }
            for (x, b) in rest.iter_mut().zip(row) {
                *x -= &q * b;
            }
            coords.push(q);
        }
        rest.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn coordinates(&self, v: &[i64]) -> Option<Vec<i64>> {
        let big: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        self.coordinates_big(&big)?
            .into_iter()
            .map(|x| x.to_i64())
            .collect()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_lattice(&self, other: &Sublattice) -> bool {
        other.ambient_rank == self.ambient_rank
            && (0..other.rank()).all(|i| self.coordinates_big(other.basis.row(i)).is_some())
    }

    pub fn intersect(&self, other: &Sublattice) -> Result<Sublattice> {
        self.check_same_ambient(other)?;
        let k1 = self.rank();
        let neg = IntMatrix {
            rows: other.basis.rows,
            cols: other.basis.cols,
            data: other.basis.data.iter().map(|x| -x).collect(),
        };
        let stacked = IntMatrix {
            rows: self.basis.rows + neg.rows,
            cols: self.ambient_rank,
            data: self.basis.data.iter().cloned().chain(neg.data).collect(),
        };
        // x with x * stacked = 0; first k1 coordinates give the combination of self
        let ker = kernel(&stacked.transpose());
        let mut gens = Vec::with_capacity(ker.rank());
        for i in 0..ker.rank() {
            let x = ker.basis.row(i);
            let mut v = vec![BigInt::zero(); self.ambient_rank];
            for (a, coef) in x.iter().take(k1).enumerate() {
                for (c, b) in v.iter_mut().zip(self.basis.row(a)) {
                    *c += coef * b;
                }
            }
            gens.push(v);
        }
        Sublattice::from_big_generators(self.ambient_rank, gens)
    }

    pub fn sum(&self, other: &Sublattice) -> Result<Sublattice> {
        self.check_same_ambient(other)?;
        let rows: Vec<Vec<BigInt>> = (0..self.rank())
            .map(|i| self.basis.row_vec(i))
            .chain((0..other.rank()).map(|i| other.basis.row_vec(i)))
            .collect();
        Sublattice::from_big_generators(self.ambient_rank, rows)
    }

    /// Re-expresses `self` in the coordinates of `ambient`'s basis, giving a
    /// sublattice of `Z^{ambient.rank()}`.
    pub fn relative_to(&self, ambient: &Sublattice) -> Result<Sublattice> {
        self.check_same_ambient(ambient)?;
        let mut gens = Vec::with_capacity(self.rank());
        for i in 0..self.rank() {
            let c = ambient.coordinates_big(self.basis.row(i)).ok_or_else(|| {
                Error::InvariantViolation("sublattice is not contained in the ambient lattice".into())
            })?;
            gens.push(c);
        }
        Sublattice::from_big_generators(ambient.rank(), gens)
    }

    /// True when `Z^n / self` is torsion free.
    pub fn is_saturated(&self) -> bool {
        let (_, d, _) = smith_normal_form(&self.basis);
        d.diagonal().iter().all(|x| x.is_zero() || x.is_one())
    }

    fn check_same_ambient(&self, other: &Sublattice) -> Result<()> {
        if self.ambient_rank != other.ambient_rank {
            return Err(Error::RankMismatch {
                expected: self.ambient_rank,
                found: other.ambient_rank,
            });
        }
        Ok(())
    }
}

/// `Z^free_rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k` with `d_1 | d_2 | ... | d_k`, all `d_i ≥ 2`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FiniteAbelianGroup {
    invariant_factors: Vec<BigInt>,
    free_rank: usize,
}

impl FiniteAbelianGroup {
    pub fn new(invariant_factors: Vec<BigInt>, free_rank: usize) -> Result<Self> {
        let two = BigInt::from(2);
        if invariant_factors.iter().any(|d| d < &two) {
            return Err(Error::InvariantViolation(
                "invariant factors must be at least 2".into(),
            ));
        }
        if invariant_factors
            .windows(2)
            .any(|w| !w[1].is_multiple_of(&w[0]))
        {
            return Err(Error::InvariantViolation(
                "invariant factors must form a divisibility chain".into(),
            ));
        }
        Ok(FiniteAbelianGroup {
            invariant_factors,
            free_rank,
        })
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroup {
            invariant_factors: Vec::new(),
            free_rank: 0,
        }
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty() && self.free_rank == 0
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.invariant_factors.iter().product())
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|d| format!("Z/{d}"))
            .collect();
        if self.free_rank == 1 {
            parts.push("Z".into());
        } else if self.free_rank > 1 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Quotient `Z^ambient_rank / sub`.
pub fn quotient(ambient_rank: usize, sub: &Sublattice) -> Result<FiniteAbelianGroup> {
    if sub.ambient_rank != ambient_rank {
        return Err(Error::RankMismatch {
            expected: ambient_rank,
            found: sub.ambient_rank,
        });
    }
    let (_, d, _) = smith_normal_form(&sub.basis);
    let factors: Vec<BigInt> = d
        .diagonal()
        .into_iter()
        .filter(|x| !x.is_zero() && !x.is_one())
        .collect();
    FiniteAbelianGroup::new(factors, ambient_rank - sub.rank())
}

/// Fixed points of an involution of `Z^n`: the saturated kernel of `inv - 1`.
pub fn fixed_sublattice(inv: &IntMatrix) -> Result<Sublattice> {
    if !inv.is_square() {
        return Err(Error::NotInvolution);
    }
    if !(inv * inv).is_identity() {
        return Err(Error::NotInvolution);
    }
    Ok(kernel(&inv.sub(&IntMatrix::identity(inv.rows))))
}
