//! Semisimple finite-dimensional commutative algebras with a distinguished
//! basis: validation, multiplication matrices, the eigenvalue table, exact
//! row/table sums, bound certificates, and the Galois column test.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::cyclo::{Cyclotomic, GaloisAutomorphism, Rationality};
use crate::numeric::{C64, CMat};
use crate::rat::{rat, Rat, RatMat, SplitMix64};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SfcaError {
    /// alpha_{ijk} != alpha_{jik} at the named triple.
    NotCommutative { i: usize, j: usize, k: usize },
    /// (b_i b_j) b_k != b_i (b_j b_k) at the named triple.
    NotAssociative { i: usize, j: usize, k: usize },
    /// Numeric diagonalization kept hitting clustered eigenvalues.
    DegenerateSpectrum,
    /// No strictly positive common eigenvector was found.
    NoPerronColumn,
    /// The basis has a negative structure constant where a nonnegative
    /// basis is required.
    NotNonnegative,
    /// u.X != v in a bounds certificate.
    RelationViolated { column: usize },
    NonPositiveU { index: usize },
    /// The claimed Galois row action fails at (row, column, k).
    ActionViolated { row: usize, column: usize, k: u64 },
    /// Supplied exact table is not a common eigenvector system.
    TableVerificationFailed { i: usize, j: usize },
    BadShape(String),
}

impl fmt::Display for SfcaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SfcaError::NotCommutative { i, j, k } => {
                write!(f, "not commutative at alpha({i},{j},{k})")
            }
            SfcaError::NotAssociative { i, j, k } => {
                write!(f, "not associative at triple ({i},{j},{k})")
            }
            SfcaError::DegenerateSpectrum => write!(f, "degenerate spectrum after retries"),
            SfcaError::NoPerronColumn => write!(f, "no positive common eigenvector"),
            SfcaError::NotNonnegative => write!(f, "basis is not nonnegative"),
            SfcaError::RelationViolated { column } => {
                write!(f, "u.X != v at column {column}")
            }
            SfcaError::NonPositiveU { index } => write!(f, "u[{index}] is not positive"),
            SfcaError::ActionViolated { row, column, k } => {
                write!(f, "Galois action fails at row {row}, column {column}, sigma k={k}")
            }
            SfcaError::TableVerificationFailed { i, j } => {
                write!(f, "table column {j} is not an eigenvector of M(b_{i})")
            }
            SfcaError::BadShape(msg) => write!(f, "{msg}"),
        }
    }
}

/// A validated SFCA basis presentation: `b_i b_j = sum_k alpha_{ijk} b_k`.
#[derive(Clone, Debug)]
pub struct Sfca {
    n: usize,
    labels: Vec<String>,
    alpha: Vec<Rat>,
    nonnegative: bool,
}

impl Sfca {
    /// Validates commutativity and associativity over all basis triples.
    pub fn new(labels: Vec<String>, alpha: Vec<Rat>) -> Result<Self, SfcaError> {
        let n = labels.len();
        if alpha.len() != n * n * n {
            return Err(SfcaError::BadShape(format!(
                "expected {} structure constants, got {}",
                n * n * n,
                alpha.len()
            )));
        }
        let at = |i: usize, j: usize, k: usize| &alpha[(i * n + j) * n + k];
        for i in 0..n {
            for j in 0..i {
                for k in 0..n {
                    if at(i, j, k) != at(j, i, k) {
                        return Err(SfcaError::NotCommutative { i, j, k });
                    }
                }
            }
        }
        // associativity: M(b_i) M(b_j) = sum_k alpha_{ijk} M(b_k)
        let ints: Option<Vec<i64>> = alpha.iter().map(crate::rat::as_i64).collect();
        if let Some(ai) = ints {
            let at_i = |i: usize, j: usize, k: usize| ai[(i * n + j) * n + k];
            for i in 0..n {
                for j in i..n {
                    for r in 0..n {
                        for l in 0..n {
                            let mut lhs = 0i128;
                            let mut rhs = 0i128;
                            for m in 0..n {
                                lhs += at_i(i, r, m) as i128 * at_i(j, m, l) as i128;
                                rhs += at_i(i, j, m) as i128 * at_i(m, r, l) as i128;
                            }
                            if lhs != rhs {
                                return Err(SfcaError::NotAssociative { i, j, k: r });
                            }
                        }
                    }
                }
            }
        } else {
            for i in 0..n {
                for j in i..n {
                    for r in 0..n {
                        for l in 0..n {
                            let mut lhs = Rat::zero();
                            let mut rhs = Rat::zero();
                            for m in 0..n {
                                lhs += at(i, r, m) * at(j, m, l);
                                rhs += at(i, j, m) * at(m, r, l);
                            }
                            if lhs != rhs {
                                return Err(SfcaError::NotAssociative { i, j, k: r });
                            }
                        }
                    }
                }
            }
        }
        let nonnegative = alpha.iter().all(|a| !a.is_negative());
        Ok(Sfca {
            n,
            labels,
            alpha,
            nonnegative,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_nonnegative_basis(&self) -> bool {
        self.nonnegative
    }

    #[inline]
    pub fn alpha(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.alpha[(i * self.n + j) * self.n + k]
    }

    /// `M(a, B)`: row `i` holds the coordinates of `a * b_i`.
    pub fn mult_matrix(&self, a: &[Rat]) -> RatMat {
        assert_eq!(a.len(), self.n);
        let mut m = RatMat::zero(self.n, self.n);
        for (t, coeff) in a.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for i in 0..self.n {
                for j in 0..self.n {
                    let al = self.alpha(t, i, j);
                    if !al.is_zero() {
                        *m.at_mut(i, j) += coeff * al;
                    }
                }
            }
        }
        m
    }

    pub fn basis_mult_matrix(&self, i: usize) -> RatMat {
        let mut a = vec![Rat::zero(); self.n];
        a[i] = rat(1);
        self.mult_matrix(&a)
    }

    /// Row sums `s_i = Tr M(b_i, B) = sum_j alpha_{ijj}` and the table sum,
    /// computed without any eigendecomposition.
    pub fn row_sums_exact(&self) -> (Vec<Rat>, Rat) {
        let rows: Vec<Rat> = (0..self.n)
            .map(|i| {
                let mut s = Rat::zero();
                for j in 0..self.n {
                    s += self.alpha(i, j, j);
                }
                s
            })
            .collect();
        let total = rows.iter().fold(Rat::zero(), |acc, r| acc + r);
        (rows, total)
    }
}

/// Element coordinates in the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement(pub Vec<Rat>);

impl AlgebraElement {
    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }
}

#[derive(Clone, Debug)]
pub enum Entries {
    Exact(Vec<Vec<Cyclotomic>>),
    Numeric(Vec<Vec<C64>>),
}

/// The table X(A,B): entry (i, j) is the eigenvalue `b_i(j)` of `M(b_i,B)`
/// on the j-th common eigenvector.  Column 0 is the Perron column.
#[derive(Clone, Debug)]
pub struct Table {
    pub n: usize,
    pub entries: Entries,
    pub column_meaning: Vec<String>,
    pub perron_column: usize,
    /// max diagonalization defect on the float path (0 for exact tables)
    pub residual: f64,
}

impl Table {
    /// Verifies a supplied exact table: every column must be a common
    /// eigenvector system (`M(b_i) x_j = b_i(j) x_j` exactly, with `x_j`
    /// the j-th table column), and the Perron column must be strictly
    /// positive real.
    pub fn exact_verified(
        algebra: &Sfca,
        entries: Vec<Vec<Cyclotomic>>,
        column_meaning: Vec<String>,
    ) -> Result<Table, SfcaError> {
        let n = algebra.n();
        if entries.len() != n || entries.iter().any(|r| r.len() != n) {
            return Err(SfcaError::BadShape("table shape mismatch".into()));
        }
        for i in 0..n {
            for r in i..n {
                for j in 0..n {
                    // (M(b_i) x_j)[r] = sum_c alpha_{irc} b_c(j) = b_i(j) b_r(j)
                    let mut lhs = Cyclotomic::zero();
                    for c in 0..n {
                        let al = algebra.alpha(i, r, c);
                        if !al.is_zero() {
                            lhs = lhs.add(&entries[c][j].scale(al));
                        }
                    }
                    let rhs = entries[i][j].mul(&entries[r][j]);
                    if lhs != rhs {
                        return Err(SfcaError::TableVerificationFailed { i, j });
                    }
                }
            }
        }
        // Perron column: real and strictly positive.
        for row in &entries {
            let x = &row[0];
            if *x != x.conj() {
                return Err(SfcaError::NoPerronColumn);
            }
            let (re, _) = x.embed();
            if re <= 0.0 {
                return Err(SfcaError::NoPerronColumn);
            }
        }
        Ok(Table {
            n,
            entries: Entries::Exact(entries),
            column_meaning,
            perron_column: 0,
            residual: 0.0,
        })
    }

    /// Builds the table numerically from a seeded random nonnegative
    /// combination: eigenvectors of `M(a,B)` give the common eigenbasis,
    /// entries are Rayleigh quotients of the `M(b_i,B)`.
    pub fn numeric(algebra: &Sfca, seed: u64, tol: f64) -> Result<Table, SfcaError> {
        if !algebra.is_nonnegative_basis() {
            return Err(SfcaError::NotNonnegative);
        }
        let n = algebra.n();
        if n == 0 {
            return Err(SfcaError::BadShape("empty algebra".into()));
        }
        let sep_tol = 1e-8;
        let mut rng = SplitMix64::new(seed);
        let basis_mats: Vec<CMat> = (0..n)
            .map(|i| {
                let m = algebra.basis_mult_matrix(i);
                CMat::from_real(
                    &(0..n)
                        .map(|r| (0..n).map(|c| crate::cyclo::rat_to_f64(m.at(r, c))).collect())
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        for _attempt in 0..32 {
            let coeffs: Vec<Rat> = (0..n).map(|_| rat(1 + rng.below(997) as i64)).collect();
            let m = algebra.mult_matrix(&coeffs);
            let mf = CMat::from_real(
                &(0..n)
                    .map(|r| (0..n).map(|c| crate::cyclo::rat_to_f64(m.at(r, c))).collect())
                    .collect::<Vec<_>>(),
            );
            let eigs = mf.eigenvalues();
            let scale = eigs.iter().map(|e| e.norm()).fold(1.0f64, f64::max);
            let mut separated = true;
            for i in 0..n {
                for j in 0..i {
                    if eigs[i].sub(eigs[j]).norm() < sep_tol * scale {
                        separated = false;
                    }
                }
            }
            if !separated {
                continue;
            }
            let vectors: Vec<Vec<C64>> = eigs.iter().map(|&l| mf.eigenvector(l)).collect();
            // entries via Rayleigh quotients
            let mut entries = vec![vec![C64::ZERO; n]; n];
            let mut residual = 0.0f64;
            for j in 0..n {
                let x = &vectors[j];
                let xx: f64 = x.iter().map(|c| c.norm_sqr()).sum();
                for i in 0..n {
                    let mx = basis_mats[i].mul_vec(x);
                    let mut num = C64::ZERO;
                    for (a, b) in x.iter().zip(&mx) {
                        num = num.add(a.conj().mul(*b));
                    }
                    let val = num.scale(1.0 / xx);
                    entries[i][j] = val;
                    for (a, b) in mx.iter().zip(x) {
                        residual = residual.max(a.sub(val.mul(*b)).norm());
                    }
                }
            }
            if residual > tol {
                continue;
            }
            // locate the Perron column: strictly positive after normalizing
            // by the largest-modulus entry
            let mut perron = None;
            'cols: for j in 0..n {
                let x = &vectors[j];
                let (mut big, mut idx) = (-1.0, 0);
                for (i, c) in x.iter().enumerate() {
                    if c.norm() > big {
                        big = c.norm();
                        idx = i;
                    }
                }
                let pivot = x[idx];
                for c in x {
                    let y = c.div(pivot);
                    if y.re <= 1e-9 || y.im.abs() > 1e-6 {
                        continue 'cols;
                    }
                }
                perron = Some(j);
                break;
            }
            let Some(perron) = perron else {
                return Err(SfcaError::NoPerronColumn);
            };
            // column order: perron first, rest by the eigenvalue of M(a)
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by(|&a, &b| {
                let key = |j: usize| {
                    if j == perron {
                        (0, 0.0, 0.0)
                    } else {
                        (1, eigs[j].re, eigs[j].im)
                    }
                };
                let (ka, ra, ia) = key(a);
                let (kb, rb, ib) = key(b);
                ka.cmp(&kb)
                    .then(ra.partial_cmp(&rb).unwrap())
                    .then(ia.partial_cmp(&ib).unwrap())
            });
            let permuted: Vec<Vec<C64>> = (0..n)
                .map(|i| order.iter().map(|&j| entries[i][j]).collect())
                .collect();
            let meanings: Vec<String> = order
                .iter()
                .enumerate()
                .map(|(pos, &j)| {
                    if pos == 0 {
                        String::from("perron")
                    } else {
                        format!("eig({:.6},{:.6})", eigs[j].re, eigs[j].im)
                    }
                })
                .collect();
            return Ok(Table {
                n,
                entries: Entries::Numeric(permuted),
                column_meaning: meanings,
                perron_column: 0,
                residual,
            });
        }
        Err(SfcaError::DegenerateSpectrum)
    }

    pub fn exact_entries(&self) -> Option<&Vec<Vec<Cyclotomic>>> {
        match &self.entries {
            Entries::Exact(e) => Some(e),
            Entries::Numeric(_) => None,
        }
    }

    pub fn numeric_entries(&self) -> Option<&Vec<Vec<C64>>> {
        match &self.entries {
            Entries::Numeric(e) => Some(e),
            Entries::Exact(_) => None,
        }
    }

    /// Exact column sums `c_j = sum_i b_i(j)`.
    pub fn column_sums_exact(&self) -> Option<Vec<Cyclotomic>> {
        let e = self.exact_entries()?;
        Some(
            (0..self.n)
                .map(|j| {
                    let mut s = Cyclotomic::zero();
                    for row in e {
                        s = s.add(&row[j]);
                    }
                    s
                })
                .collect(),
        )
    }

    pub fn column_sums_numeric(&self) -> Option<Vec<C64>> {
        let e = self.numeric_entries()?;
        Some(
            (0..self.n)
                .map(|j| {
                    let mut s = C64::ZERO;
                    for row in e {
                        s = s.add(row[j]);
                    }
                    s
                })
                .collect(),
        )
    }

    /// Exact row sums from the table itself (for trace-consistency checks).
    pub fn row_sums_from_table(&self) -> Option<Vec<Cyclotomic>> {
        let e = self.exact_entries()?;
        Some(
            e.iter()
                .map(|row| {
                    let mut s = Cyclotomic::zero();
                    for v in row {
                        s = s.add(v);
                    }
                    s
                })
                .collect(),
        )
    }

    /// lcm of the orders of all entries (1 for rational tables).
    pub fn exponent(&self) -> Option<u64> {
        let e = self.exact_entries()?;
        let mut l = 1u64;
        for row in e {
            for v in row {
                l = num_integer::lcm(l, v.order());
            }
        }
        Some(l)
    }
}

/// Certificate for the two-sided table-sum bound from a linear relation
/// `u . X = v` with positive `u` and nonnegative `v`.
#[derive(Clone, Debug)]
pub struct BoundsCertificate {
    pub u: Vec<Rat>,
    pub v: Vec<Rat>,
    pub u_min: Rat,
    pub u_max: Rat,
    pub v_sum: Rat,
    pub lower: Rat,
    pub upper: Rat,
    pub s: Rat,
    pub verdict: bool,
}

/// Verifies the relation `sum_i u_i b_i(j) = v_j` against the table and
/// produces the certificate `v_sum/u_max <= s <= v_sum/u_min`.
pub fn bounds_certificate(
    algebra: &Sfca,
    table: &Table,
    u: &[Rat],
    v: &[Rat],
    tol: f64,
) -> Result<BoundsCertificate, SfcaError> {
    let n = algebra.n();
    assert!(u.len() == n && v.len() == n);
    for (i, ui) in u.iter().enumerate() {
        if !ui.is_positive() {
            return Err(SfcaError::NonPositiveU { index: i });
        }
    }
    match &table.entries {
        Entries::Exact(entries) => {
            for j in 0..n {
                let mut acc = Cyclotomic::zero();
                for i in 0..n {
                    acc = acc.add(&entries[i][j].scale(&u[i]));
                }
                if acc != Cyclotomic::from_rat(v[j].clone()) {
                    return Err(SfcaError::RelationViolated { column: j });
                }
            }
        }
        Entries::Numeric(entries) => {
            for j in 0..n {
                let mut re = 0.0;
                let mut im = 0.0;
                for i in 0..n {
                    let ui = crate::cyclo::rat_to_f64(&u[i]);
                    re += ui * entries[i][j].re;
                    im += ui * entries[i][j].im;
                }
                let vj = crate::cyclo::rat_to_f64(&v[j]);
                if (re - vj).abs() > tol || im.abs() > tol {
                    return Err(SfcaError::RelationViolated { column: j });
                }
            }
        }
    }
    let u_min = u.iter().min().unwrap().clone();
    let u_max = u.iter().max().unwrap().clone();
    let v_sum = v.iter().fold(Rat::zero(), |a, b| a + b);
    let (_, s) = algebra.row_sums_exact();
    let lower = &v_sum / &u_max;
    let upper = &v_sum / &u_min;
    let verdict = lower <= s && s <= upper;
    Ok(BoundsCertificate {
        u: u.to_vec(),
        v: v.to_vec(),
        u_min,
        u_max,
        v_sum,
        lower,
        upper,
        s,
        verdict,
    })
}

/// Outcome of the Galois column test on an exact table.
#[derive(Clone, Debug)]
pub struct GaloisColumnReport {
    /// For each automorphism: the row permutation, if one exists.
    pub actions: Vec<(GaloisAutomorphism, Option<Vec<usize>>)>,
    /// First witness of a failed action, if any: (row, column, k).
    pub violation: Option<(usize, usize, u64)>,
    pub column_sums: Vec<Cyclotomic>,
    /// Indices of columns whose sum is irrational.
    pub irrational_columns: Vec<usize>,
}

impl GaloisColumnReport {
    pub fn all_actions_exist(&self) -> bool {
        self.actions.iter().all(|(_, a)| a.is_some())
    }
}

/// Checks whether each automorphism permutes the table rows
/// (`sigma(b_i(j)) = b_{pi(i)}(j)` for all j) and reports exact column
/// sums with rationality verdicts.
pub fn galois_column_test(
    table: &Table,
    sigmas: &[GaloisAutomorphism],
) -> Result<GaloisColumnReport, SfcaError> {
    let entries = table
        .exact_entries()
        .ok_or_else(|| SfcaError::BadShape("Galois column test requires an exact table".into()))?;
    let n = table.n;
    let mut actions = Vec::new();
    let mut violation = None;
    for sigma in sigmas {
        let mut perm: Vec<usize> = Vec::with_capacity(n);
        let mut ok = true;
        for i in 0..n {
            let image: Vec<Cyclotomic> = entries[i].iter().map(|x| x.galois(sigma)).collect();
            let target = (0..n).find(|&r| entries[r] == image);
            match target {
                Some(r) => perm.push(r),
                None => {
                    if violation.is_none() {
                        // find a witness column: one where no row matches
                        let col = (0..n)
                            .find(|&j| entries.iter().all(|row| row[j] != image[j]))
                            .unwrap_or(0);
                        violation = Some((i, col, sigma.k));
                    }
                    ok = false;
                    break;
                }
            }
        }
        actions.push((*sigma, if ok { Some(perm) } else { None }));
    }
    let column_sums = table.column_sums_exact().unwrap();
    let irrational_columns = column_sums
        .iter()
        .enumerate()
        .filter(|(_, c)| matches!(c.rationality(), Rationality::Irrational))
        .map(|(j, _)| j)
        .collect();
    Ok(GaloisColumnReport {
        actions,
        violation,
        column_sums,
        irrational_columns,
    })
}
