//! Arbitrary-precision rationals and small exact linear algebra.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Returns `Some(n)` when `r` is an integer that fits in `i64`.
pub fn as_i64(r: &Rat) -> Option<i64> {
    if r.is_integer() {
        let n = r.numer();
        i64::try_from(n.clone()).ok()
    } else {
        None
    }
}

pub fn is_nonneg_integer(r: &Rat) -> bool {
    r.is_integer() && !r.is_negative()
}

/// Dense matrix of rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Rat>,
}

impl RatMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMat::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Rat>]) -> Self {
        let r = rows.len();
        let c = if r > 0 { rows[0].len() } else { 0 };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().cloned());
        }
        RatMat { rows: r, cols: c, data }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &RatMat) -> RatMat {
        assert_eq!(self.cols, other.rows);
        let mut out = RatMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        *out.at_mut(i, j) += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Rat {
        assert_eq!(self.rows, self.cols);
        let mut t = Rat::zero();
        for i in 0..self.rows {
            t += self.at(i, i);
        }
        t
    }

    /// Solves `A x = b` for an exactly consistent (possibly overdetermined)
    /// system whose solution, when it exists, is unique.
    ///
    /// Returns `None` when the system is inconsistent or underdetermined.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(b.len(), self.rows);
        let m = self.rows;
        let n = self.cols;
        // Augmented elimination.
        let mut a: Vec<Vec<Rat>> = (0..m)
            .map(|i| {
                let mut row: Vec<Rat> = self.row(i).to_vec();
                row.push(b[i].clone());
                row
            })
            .collect();
        let mut pivot_col_of_row = Vec::new();
        let mut r = 0usize;
        for c in 0..n {
            let piv = (r..m).find(|&i| !a[i][c].is_zero());
            let Some(p) = piv else { continue };
            a.swap(r, p);
            let inv = a[r][c].clone();
            for x in a[r].iter_mut() {
                *x = &*x / &inv;
            }
            for i in 0..m {
                if i != r && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    for j in c..=n {
                        let t = &a[r][j] * &f;
                        a[i][j] -= t;
                    }
                }
            }
            pivot_col_of_row.push(c);
            r += 1;
            if r == m {
                break;
            }
        }
        // Inconsistent if any zero row has nonzero rhs.
        for i in r..m {
            if !a[i][n].is_zero() {
                return None;
            }
        }
        if pivot_col_of_row.len() < n {
            return None; // underdetermined
        }
        let mut x = vec![Rat::zero(); n];
        for (row, &c) in pivot_col_of_row.iter().enumerate() {
            x[c] = a[row][n].clone();
        }
        Some(x)
    }

    pub fn rank(&self) -> usize {
        let m = self.rows;
        let n = self.cols;
        let mut a: Vec<Vec<Rat>> = (0..m).map(|i| self.row(i).to_vec()).collect();
        let mut r = 0usize;
        for c in 0..n {
            let piv = (r..m).find(|&i| !a[i][c].is_zero());
            let Some(p) = piv else { continue };
            a.swap(r, p);
            let inv = a[r][c].clone();
            for x in a[r].iter_mut() {
                *x = &*x / &inv;
            }
            for i in (r + 1)..m {
                if !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    for j in c..n {
                        let t = &a[r][j] * &f;
                        a[i][j] -= t;
                    }
                }
            }
            r += 1;
            if r == m {
                break;
            }
        }
        r
    }
}

/// Deterministic 64-bit generator (SplitMix64).  Seeded numeric paths must
/// reproduce bit-for-bit across platforms, so we avoid platform RNGs.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound`.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}
