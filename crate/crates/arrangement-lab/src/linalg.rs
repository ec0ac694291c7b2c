//! Exact rational linear algebra: ranks, null spaces, affine solution sets.
//!
//! Rank goes through fraction-free (Bareiss-style) elimination over the
//! integers so intermediate entries stay determinant-sized. Null spaces and
//! affine solves use rational Gauss-Jordan; both routes are exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rat::Rat;

/// Dense row-major matrix of rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        RatMatrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Rat>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
        }
        RatMatrix {
            rows: rows.len(),
            cols,
            entries: rows.iter().flatten().cloned().collect(),
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut Rat {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Solution set of an affine system `m x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AffineSolution {
    Empty,
    Nonempty {
        point: Vec<Rat>,
        /// Canonical basis of the direction space (integer entries,
        /// content 1, positive leading entry).
        direction_basis: Vec<Vec<Rat>>,
    },
}

impl AffineSolution {
    pub fn dim(&self) -> Option<usize> {
        match self {
            AffineSolution::Empty => None,
            AffineSolution::Nonempty { direction_basis, .. } => Some(direction_basis.len()),
        }
    }
}

/// Exact rank over the rationals via fraction-free elimination.
pub fn rank(m: &RatMatrix) -> usize {
    // Clear denominators row by row; row scaling leaves the rank alone.
    let mut a: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|r| {
            let row = m.row(r);
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect()
        })
        .collect();

    let (rows, cols) = (m.rows, m.cols);
    let mut prev = BigInt::one();
    let mut pivot_row = 0usize;
    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        let Some(src) = (pivot_row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(pivot_row, src);
        for r in pivot_row + 1..rows {
            for c in col + 1..cols {
                let num = &a[pivot_row][col] * &a[r][c] - &a[r][col] * &a[pivot_row][c];
                a[r][c] = num / &prev; // exact by the Bareiss identity
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[pivot_row][col].clone();
        pivot_row += 1;
    }
    pivot_row
}

/// Reduced row echelon form; returns the reduced matrix and pivot columns.
fn rref(m: &RatMatrix) -> (RatMatrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut pivot_row = 0usize;
    for col in 0..a.cols {
        if pivot_row == a.rows {
            break;
        }
        let Some(src) = (pivot_row..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        for c in 0..a.cols {
            let tmp = a.get(src, c).clone();
            *a.get_mut(src, c) = a.get(pivot_row, c).clone();
            *a.get_mut(pivot_row, c) = tmp;
        }
        let inv = a.get(pivot_row, col).recip();
        for c in col..a.cols {
            let v = a.get(pivot_row, c) * &inv;
            *a.get_mut(pivot_row, c) = v;
        }
        for r in 0..a.rows {
            if r == pivot_row || a.get(r, col).is_zero() {
                continue;
            }
            let factor = a.get(r, col).clone();
            for c in col..a.cols {
                let v = a.get(r, c) - &(&factor * a.get(pivot_row, c));
                *a.get_mut(r, c) = v;
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    (a, pivots)
}

/// Scales a rational vector to integer entries with content 1 and a positive
/// leading (first nonzero) entry.
pub fn canonicalize_vector(v: &[Rat]) -> Vec<Rat> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut content = BigInt::zero();
    for x in &ints {
        content = content.gcd(x);
    }
    if content.is_zero() {
        return v.to_vec();
    }
    let flip = ints
        .iter()
        .find(|x| !x.is_zero())
        .map(|x| x.is_negative())
        .unwrap_or(false);
    ints.iter()
        .map(|x| {
            let mut y = x / &content;
            if flip {
                y = -y;
            }
            Rat::from_bigint(y)
        })
        .collect()
}

/// Canonical basis of the right null space of `m`.
pub fn nullspace(m: &RatMatrix) -> Vec<Vec<Rat>> {
    let (red, pivots) = rref(m);
    let mut basis = Vec::new();
    let mut pivot_of_col = vec![None; m.cols];
    for (i, &p) in pivots.iter().enumerate() {
        pivot_of_col[p] = Some(i);
    }
    for free in 0..m.cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![Rat::zero(); m.cols];
        v[free] = Rat::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -red.get(i, free);
        }
        basis.push(canonicalize_vector(&v));
    }
    basis
}

/// Solves `m x = b` exactly, returning the full affine solution set.
pub fn solve_affine(m: &RatMatrix, b: &[Rat]) -> AffineSolution {
    assert_eq!(b.len(), m.rows, "rhs length mismatch");
    let mut aug = RatMatrix::zero(m.rows, m.cols + 1);
    for (r, rhs) in b.iter().enumerate() {
        for c in 0..m.cols {
            *aug.get_mut(r, c) = m.get(r, c).clone();
        }
        *aug.get_mut(r, m.cols) = rhs.clone();
    }
    let (red, pivots) = rref(&aug);
    if pivots.contains(&m.cols) {
        return AffineSolution::Empty;
    }
    let mut point = vec![Rat::zero(); m.cols];
    for (i, &p) in pivots.iter().enumerate() {
        point[p] = red.get(i, m.cols).clone();
    }
    AffineSolution::Nonempty {
        point,
        direction_basis: nullspace(m),
    }
}
