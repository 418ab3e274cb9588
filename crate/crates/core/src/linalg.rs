//! Exact rational linear algebra.
//!
//! [`RationalMatrix`] is a dense matrix over `ℚ` with Bareiss (fraction-free)
//! elimination for determinants and null spaces. [`SparseSystem`] is an exact
//! row-by-row solver for large, very sparse homogeneous systems such as the
//! commutator equations of a module.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = Self::zeros(k, k);
        for i in 0..k {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Ok(RationalMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigRational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Result<Vec<BigRational>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Rows scaled to integers (each row multiplied by the lcm of its
    /// denominators), together with the product of the scale factors.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut scale = BigInt::one();
        let rows = (0..self.rows)
            .map(|r| {
                let lcm = self
                    .row(r)
                    .iter()
                    .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                scale *= &lcm;
                self.row(r)
                    .iter()
                    .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
                    .collect()
            })
            .collect();
        (rows, scale)
    }

    /// Determinant by Bareiss fraction-free elimination.
    pub fn determinant(&self) -> Result<BigRational> {
        self.require_square()?;
        let (mut a, scale) = self.integer_rows();
        let det = bareiss_determinant(&mut a);
        Ok(BigRational::new(det, scale))
    }

    /// Determinant by ordinary Gaussian elimination over `ℚ`.
    pub fn determinant_by_fractions(&self) -> Result<BigRational> {
        self.require_square()?;
        let n = self.rows;
        let mut a: Vec<Vec<BigRational>> = (0..n).map(|r| self.row(r).to_vec()).collect();
        let mut det = BigRational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Ok(BigRational::zero());
            };
            if p != col {
                a.swap(p, col);
                det = -det;
            }
            let pivot = a[col][col].clone();
            det *= &pivot;
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let factor = &a[r][col] / &pivot;
                for c in col..n {
                    let delta = &factor * &a[col][c];
                    a[r][c] -= delta;
                }
            }
        }
        Ok(det)
    }

    pub fn multiply(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let idx = r * out.cols + c;
                        out.entries[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Inverse by Gauss-Jordan elimination over `ℚ`.
    pub fn invert(&self) -> Result<RationalMatrix> {
        self.require_square()?;
        let n = self.rows;
        let mut a: Vec<Vec<BigRational>> = (0..n).map(|r| self.row(r).to_vec()).collect();
        let mut inv: Vec<Vec<BigRational>> = (0..n).map(|r| Self::identity(n).row(r).to_vec()).collect();
        for col in 0..n {
            let p = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(Error::SingularMatrix)?;
            a.swap(p, col);
            inv.swap(p, col);
            let pivot = a[col][col].clone();
            for c in 0..n {
                a[col][c] /= &pivot;
                inv[col][c] /= &pivot;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for c in 0..n {
                    let da = &factor * &a[col][c];
                    a[r][c] -= da;
                    let di = &factor * &inv[col][c];
                    inv[r][c] -= di;
                }
            }
        }
        RationalMatrix::from_rows(inv)
    }

    /// Exact basis of `{v : Mv = 0}`, one vector per free column.
    ///
    /// The row space is brought to echelon form by Bareiss elimination on the
    /// integer-scaled rows; pivots are the first nonzero entry in scan order.
    pub fn nullspace(&self) -> Vec<Vec<BigRational>> {
        let (mut a, _) = self.integer_rows();
        let pivots = bareiss_echelon(&mut a, self.cols);
        let rank = pivots.len();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![BigRational::zero(); self.cols];
            v[free] = BigRational::one();
            for k in (0..rank).rev() {
                let pc = pivots[k];
                let mut s = BigRational::zero();
                for c in pc + 1..self.cols {
                    if !a[k][c].is_zero() && !v[c].is_zero() {
                        s += BigRational::from_integer(a[k][c].clone()) * &v[c];
                    }
                }
                v[pc] = -s / BigRational::from_integer(a[k][pc].clone());
            }
            basis.push(v);
        }
        basis
    }

    pub fn rank(&self) -> usize {
        let (mut a, _) = self.integer_rows();
        bareiss_echelon(&mut a, self.cols).len()
    }

    fn require_square(&self) -> Result<()> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} is not square",
                self.rows, self.cols
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn bareiss_determinant(a: &mut [Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Fraction-free row echelon form; returns the pivot column of each nonzero row.
fn bareiss_echelon(a: &mut [Vec<BigInt>], cols: usize) -> Vec<usize> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&a[i][j] * &a[r][c] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    // keep entries small for the back substitution
    for row in a.iter_mut().take(r) {
        let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if !g.is_zero() && !g.is_one() {
            for x in row.iter_mut() {
                *x = &*x / &g;
            }
        }
    }
    pivots
}

/// A sparse row: `(column, coefficient)` pairs with strictly increasing columns
/// and no zero coefficients.
pub type SparseRow = Vec<(usize, BigRational)>;

/// Incremental exact solver for a homogeneous system `A x = 0` with many
/// sparse equations.
///
/// Each pushed equation is reduced against the stored pivot rows; surviving
/// rows are normalised to a leading coefficient of 1 and kept.
#[derive(Debug, Clone)]
pub struct SparseSystem {
    cols: usize,
    // pivot column -> row whose leading entry (coefficient 1) is that column
    pivots: BTreeMap<usize, SparseRow>,
}

impl SparseSystem {
    pub fn new(cols: usize) -> Self {
        SparseSystem {
            cols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.pivots.len()
    }

    /// Adds the equation `Σ coeff · x_col = 0`. Duplicate columns are summed.
    pub fn push(&mut self, terms: impl IntoIterator<Item = (usize, BigRational)>) -> Result<()> {
        let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (c, v) in terms {
            if c >= self.cols {
                return Err(Error::ShapeMismatch(format!(
                    "column {c} outside a system with {} unknowns",
                    self.cols
                )));
            }
            *acc.entry(c).or_insert_with(BigRational::zero) += v;
        }
        let mut row: SparseRow = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        while let Some((lead, coeff)) = row.first().cloned() {
            match self.pivots.get(&lead) {
                Some(pivot_row) => row = axpy(&row, &-coeff, pivot_row),
                None => {
                    let inv = coeff.recip();
                    for (_, v) in row.iter_mut() {
                        *v *= &inv;
                    }
                    self.pivots.insert(lead, row);
                    return Ok(());
                }
            }
        }
        Ok(())
    }

    /// Basis of the solution space, one vector per free column (in increasing
    /// column order), each as a sparse row.
    pub fn nullspace(&self) -> Vec<SparseRow> {
        // back-substitute from the last pivot so every pivot row only
        // mentions free columns
        let mut reduced: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for (&p, row) in self.pivots.iter().rev() {
            let mut r = row.clone();
            loop {
                let next = r
                    .iter()
                    .skip(1)
                    .find(|(c, _)| reduced.contains_key(c))
                    .cloned();
                match next {
                    Some((c, v)) => r = axpy(&r, &-v, &reduced[&c]),
                    None => break,
                }
            }
            reduced.insert(p, r);
        }
        let mut by_free: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for c in (0..self.cols).filter(|c| !self.pivots.contains_key(c)) {
            by_free.insert(c, vec![(c, BigRational::one())]);
        }
        for (&p, row) in &reduced {
            for (c, v) in row.iter().skip(1) {
                if let Some(vec) = by_free.get_mut(c) {
                    vec.push((p, -v.clone()));
                }
            }
        }
        by_free
            .into_values()
            .map(|mut v| {
                v.sort_by_key(|(c, _)| *c);
                v
            })
            .collect()
    }
}

/// `x + a·y` for sparse rows.
fn axpy(x: &SparseRow, a: &BigRational, y: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i].clone());
            i += 1;
        } else if take_y {
            out.push((y[j].0, a * &y[j].1));
            j += 1;
        } else {
            let v = &x[i].1 + a * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// `true` when every entry is an integer.
pub fn is_integral(m: &RationalMatrix) -> bool {
    m.entries.iter().all(|x| x.is_integer())
}

/// `|det| == 1`.
pub fn is_unimodular(det: &BigRational) -> bool {
    det.abs().is_one()
}
