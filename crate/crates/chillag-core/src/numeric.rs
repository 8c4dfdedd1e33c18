//! Small dense complex linear algebra for the generic numeric table path:
//! eigenvalues via shifted QR on a complexified Hessenberg form, and
//! eigenvectors via nullspace extraction with complex Gaussian elimination.

use alloc::vec;
use alloc::vec::Vec;

/// Complex number in rectangular form.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct C64 {
    pub re: f64,
    pub im: f64,
}

impl C64 {
    pub const ZERO: C64 = C64 { re: 0.0, im: 0.0 };
    pub const ONE: C64 = C64 { re: 1.0, im: 0.0 };

    pub fn new(re: f64, im: f64) -> Self {
        C64 { re, im }
    }

    pub fn real(re: f64) -> Self {
        C64 { re, im: 0.0 }
    }

    pub fn add(self, o: C64) -> C64 {
        C64::new(self.re + o.re, self.im + o.im)
    }

    pub fn sub(self, o: C64) -> C64 {
        C64::new(self.re - o.re, self.im - o.im)
    }

    pub fn mul(self, o: C64) -> C64 {
        C64::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }

    pub fn conj(self) -> C64 {
        C64::new(self.re, -self.im)
    }

    pub fn norm(self) -> f64 {
        libm::hypot(self.re, self.im)
    }

    pub fn norm_sqr(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    pub fn div(self, o: C64) -> C64 {
        let d = o.norm_sqr();
        C64::new(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )
    }

    pub fn scale(self, s: f64) -> C64 {
        C64::new(self.re * s, self.im * s)
    }

    pub fn sqrt(self) -> C64 {
        let r = self.norm();
        let re = libm::sqrt((r + self.re) / 2.0);
        let im = libm::sqrt((r - self.re) / 2.0);
        C64::new(re, if self.im < 0.0 { -im } else { im })
    }
}

/// Row-major dense complex matrix.
#[derive(Clone, Debug)]
pub struct CMat {
    pub n: usize,
    pub data: Vec<C64>,
}

impl CMat {
    pub fn zero(n: usize) -> Self {
        CMat {
            n,
            data: vec![C64::ZERO; n * n],
        }
    }

    pub fn from_real(rows: &[Vec<f64>]) -> Self {
        let n = rows.len();
        let mut m = CMat::zero(n);
        for i in 0..n {
            for j in 0..n {
                m.data[i * n + j] = C64::real(rows[i][j]);
            }
        }
        m
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> C64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: C64) {
        self.data[i * self.n + j] = v;
    }

    pub fn mul_vec(&self, x: &[C64]) -> Vec<C64> {
        let n = self.n;
        (0..n)
            .map(|i| {
                let mut acc = C64::ZERO;
                for j in 0..n {
                    acc = acc.add(self.at(i, j).mul(x[j]));
                }
                acc
            })
            .collect()
    }

    /// Eigenvalues by shifted QR on the Hessenberg form.  Intended for the
    /// small commuting-matrix problems in this crate (n well below 100).
    pub fn eigenvalues(&self) -> Vec<C64> {
        let n = self.n;
        if n == 0 {
            return Vec::new();
        }
        let mut h = self.clone();
        hessenberg(&mut h);
        let mut eigs = Vec::with_capacity(n);
        let mut hi = n; // active block is 0..hi
        let mut iters = 0usize;
        let max_iters = 80 * n + 200;
        while hi > 0 {
            if hi == 1 {
                eigs.push(h.at(0, 0));
                hi = 0;
                continue;
            }
            // deflation scan
            let mut deflated = false;
            for k in (1..hi).rev() {
                let off = h.at(k, k - 1).norm();
                let scale = h.at(k, k).norm() + h.at(k - 1, k - 1).norm() + 1e-300;
                if off <= 1e-14 * scale {
                    h.set(k, k - 1, C64::ZERO);
                    if k == hi - 1 {
                        eigs.push(h.at(hi - 1, hi - 1));
                        hi -= 1;
                        deflated = true;
                    }
                    break;
                }
            }
            if deflated {
                continue;
            }
            iters += 1;
            assert!(iters < max_iters, "QR iteration failed to converge");
            // Wilkinson shift from the trailing 2x2 block
            let a = h.at(hi - 2, hi - 2);
            let b = h.at(hi - 2, hi - 1);
            let c = h.at(hi - 1, hi - 2);
            let d = h.at(hi - 1, hi - 1);
            let tr = a.add(d);
            let det = a.mul(d).sub(b.mul(c));
            let disc = tr.mul(tr).sub(det.scale(4.0)).sqrt();
            let l1 = tr.add(disc).scale(0.5);
            let l2 = tr.sub(disc).scale(0.5);
            let shift = if l1.sub(d).norm() < l2.sub(d).norm() { l1 } else { l2 };
            // exceptional shift to break symmetry stalls
            let shift = if iters % 37 == 0 {
                shift.add(C64::new(h.at(hi - 1, hi - 2).norm(), 0.0))
            } else {
                shift
            };
            qr_step(&mut h, hi, shift);
        }
        eigs
    }

    /// One vector spanning the (numerical) nullspace of `self - lambda I`,
    /// via Gaussian elimination with partial pivoting.
    pub fn eigenvector(&self, lambda: C64) -> Vec<C64> {
        let n = self.n;
        let mut a = self.clone();
        for i in 0..n {
            a.set(i, i, a.at(i, i).sub(lambda));
        }
        // forward elimination
        let mut pivot_cols: Vec<usize> = Vec::new();
        let mut row = 0usize;
        let mut free_col = None;
        for col in 0..n {
            let (piv, mag) = (row..n)
                .map(|r| (r, a.at(r, col).norm()))
                .fold((row, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
            if mag <= 1e-10 {
                if free_col.is_none() {
                    free_col = Some(col);
                }
                continue;
            }
            if piv != row {
                for j in 0..n {
                    let t = a.at(row, j);
                    a.set(row, j, a.at(piv, j));
                    a.set(piv, j, t);
                }
            }
            let inv = C64::ONE.div(a.at(row, col));
            for j in col..n {
                a.set(row, j, a.at(row, j).mul(inv));
            }
            for r in 0..n {
                if r != row {
                    let f = a.at(r, col);
                    if f.norm() > 0.0 {
                        for j in col..n {
                            let t = a.at(r, j).sub(f.mul(a.at(row, j)));
                            a.set(r, j, t);
                        }
                    }
                }
            }
            pivot_cols.push(col);
            row += 1;
        }
        let free = free_col.unwrap_or(n - 1);
        let mut x = vec![C64::ZERO; n];
        x[free] = C64::ONE;
        for (r, &pc) in pivot_cols.iter().enumerate() {
            if pc != free {
                x[pc] = C64::ZERO.sub(a.at(r, free));
            }
        }
        // one round of inverse-iteration polish on the original matrix
        let polished = self.inverse_iteration(lambda, &x);
        polished.unwrap_or(x)
    }

    fn inverse_iteration(&self, lambda: C64, x0: &[C64]) -> Option<Vec<C64>> {
        let n = self.n;
        let mut a = self.clone();
        let eps = 1e-12
            * (1.0
                + (0..n * n).map(|i| self.data[i].norm()).fold(0.0f64, f64::max));
        for i in 0..n {
            let d = a.at(i, i).sub(lambda);
            // keep the shifted matrix barely nonsingular
            let d = if d.norm() < eps { C64::new(eps, 0.0) } else { d };
            a.set(i, i, d);
        }
        let mut x = x0.to_vec();
        for _ in 0..2 {
            x = solve_dense(&a, &x)?;
            let nrm = x.iter().map(|c| c.norm_sqr()).sum::<f64>();
            let nrm = libm::sqrt(nrm);
            if !(nrm.is_finite() && nrm > 0.0) {
                return None;
            }
            for c in x.iter_mut() {
                *c = c.scale(1.0 / nrm);
            }
        }
        Some(x)
    }
}

fn solve_dense(m: &CMat, b: &[C64]) -> Option<Vec<C64>> {
    let n = m.n;
    let mut a = m.clone();
    let mut rhs = b.to_vec();
    for col in 0..n {
        let (piv, mag) = (col..n)
            .map(|r| (r, a.at(r, col).norm()))
            .fold((col, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if mag <= 0.0 {
            return None;
        }
        if piv != col {
            for j in 0..n {
                let t = a.at(col, j);
                a.set(col, j, a.at(piv, j));
                a.set(piv, j, t);
            }
            rhs.swap(col, piv);
        }
        let inv = C64::ONE.div(a.at(col, col));
        for r in col + 1..n {
            let f = a.at(r, col).mul(inv);
            if f.norm() > 0.0 {
                for j in col..n {
                    let t = a.at(r, j).sub(f.mul(a.at(col, j)));
                    a.set(r, j, t);
                }
                rhs[r] = rhs[r].sub(f.mul(rhs[col]));
            }
        }
    }
    let mut x = vec![C64::ZERO; n];
    for r in (0..n).rev() {
        let mut acc = rhs[r];
        for j in r + 1..n {
            acc = acc.sub(a.at(r, j).mul(x[j]));
        }
        x[r] = acc.div(a.at(r, r));
    }
    Some(x)
}

fn hessenberg(h: &mut CMat) {
    let n = h.n;
    for col in 0..n.saturating_sub(2) {
        // zero entries below the first subdiagonal with Givens rotations
        for row in (col + 2..n).rev() {
            apply_givens_zero(h, row - 1, row, col, 0);
        }
    }
}

/// Rotates rows (i, k) to zero h[k][col], applying the similarity transform
/// on columns as well.  `from` bounds the column range touched on rows.
fn apply_givens_zero(h: &mut CMat, i: usize, k: usize, col: usize, from: usize) {
    let n = h.n;
    let a = h.at(i, col);
    let b = h.at(k, col);
    if b.norm() == 0.0 {
        return;
    }
    let r = libm::hypot(a.norm(), b.norm());
    let c = a.scale(1.0 / r);
    let s = b.scale(1.0 / r);
    // rows
    for j in from..n {
        let x = h.at(i, j);
        let y = h.at(k, j);
        h.set(i, j, c.conj().mul(x).add(s.conj().mul(y)));
        h.set(k, j, C64::ZERO.sub(s.mul(x)).add(c.mul(y)));
    }
    // columns (similarity)
    for rix in 0..n {
        let x = h.at(rix, i);
        let y = h.at(rix, k);
        h.set(rix, i, x.mul(c).add(y.mul(s)));
        h.set(rix, k, C64::ZERO.sub(x.mul(s.conj())).add(y.mul(c.conj())));
    }
}

fn qr_step(h: &mut CMat, hi: usize, shift: C64) {
    // implicit single-shift QR sweep on the leading hi x hi Hessenberg block
    for i in 0..hi {
        h.set(i, i, h.at(i, i).sub(shift));
    }
    // QR by Givens, then RQ
    let mut rotations: Vec<(usize, C64, C64)> = Vec::new();
    for k in 0..hi - 1 {
        let a = h.at(k, k);
        let b = h.at(k + 1, k);
        let r = libm::hypot(a.norm(), b.norm());
        if r == 0.0 {
            rotations.push((k, C64::ONE, C64::ZERO));
            continue;
        }
        let c = a.scale(1.0 / r);
        let s = b.scale(1.0 / r);
        for j in k..hi {
            let x = h.at(k, j);
            let y = h.at(k + 1, j);
            h.set(k, j, c.conj().mul(x).add(s.conj().mul(y)));
            h.set(k + 1, j, C64::ZERO.sub(s.mul(x)).add(c.mul(y)));
        }
        rotations.push((k, c, s));
    }
    for &(k, c, s) in &rotations {
        for i in 0..(k + 2).min(hi) {
            let x = h.at(i, k);
            let y = h.at(i, k + 1);
            h.set(i, k, x.mul(c).add(y.mul(s)));
            h.set(i, k + 1, C64::ZERO.sub(x.mul(s.conj())).add(y.mul(c.conj())));
        }
    }
    for i in 0..hi {
        h.set(i, i, h.at(i, i).add(shift));
    }
}
