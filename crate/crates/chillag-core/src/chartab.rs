//! Exact ordinary character tables by the Dixon-Schneider method: class
//! matrices over a suitable prime field, common eigenspace splitting, and
//! cyclotomic lifting of the modular character values.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::cyclo::{Cyclotomic, GaloisAutomorphism};
use crate::group::{ConjClass, GroupError, PermGroup};
use crate::rat::{rat, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChartabError {
    /// Eigenspace refinement stopped before all spaces were 1-dimensional.
    SplitFailed,
    /// A lifted root-of-unity multiplicity fell outside `0..=degree`.
    LiftOutOfRange { row: usize, class: usize },
    /// No integer degree matched the modular degree equation.
    NoDegree { row: usize },
    /// `<chi_i chi_j, chi_k>` is not a nonnegative integer.
    NonIntegralConstant { i: usize, j: usize, k: usize },
    Group(GroupError),
}

impl fmt::Display for ChartabError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChartabError::SplitFailed => write!(f, "common eigenspace splitting failed"),
            ChartabError::LiftOutOfRange { row, class } => {
                write!(f, "lift out of range at character {row}, class {class}")
            }
            ChartabError::NoDegree { row } => {
                write!(f, "no integer degree for character {row}")
            }
            ChartabError::NonIntegralConstant { i, j, k } => {
                write!(f, "non-integral product multiplicity at ({i},{j},{k})")
            }
            ChartabError::Group(e) => write!(f, "{e}"),
        }
    }
}

impl From<GroupError> for ChartabError {
    fn from(e: GroupError) -> Self {
        ChartabError::Group(e)
    }
}

/// Smallest prime `l` with `l = 1 mod exponent` and `l^2 > 4 * order`.
pub fn dixon_prime(order: u64, exponent: u64) -> u64 {
    let mut l = exponent + 1;
    loop {
        if l * l > 4 * order && is_prime(l) {
            return l;
        }
        l += exponent;
    }
}

fn is_prime(n: u64) -> bool {
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

// arithmetic in F_l (l < 2^31, so products fit u64 via u128 is unnecessary
// only for l < 2^32; use u128 to stay safe)
#[inline]
fn mulm(a: u64, b: u64, l: u64) -> u64 {
    ((a as u128 * b as u128) % l as u128) as u64
}

fn powm(mut b: u64, mut e: u64, l: u64) -> u64 {
    let mut acc = 1u64;
    b %= l;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulm(acc, b, l);
        }
        b = mulm(b, b, l);
        e >>= 1;
    }
    acc
}

fn invm(a: u64, l: u64) -> u64 {
    powm(a, l - 2, l)
}

fn primitive_root(l: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = l - 1;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            factors.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    'outer: for g in 2..l {
        for &p in &factors {
            if powm(g, (l - 1) / p, l) == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    unreachable!("no primitive root")
}

/// Nullspace basis of an n x n matrix over F_l (column vectors).
fn nullspace(mat: &[Vec<u64>], l: u64) -> Vec<Vec<u64>> {
    let n = mat.len();
    let mut a: Vec<Vec<u64>> = mat.to_vec();
    let mut pivot_col_of_row = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(pr) = (row..n).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(row, pr);
        let inv = invm(a[row][col], l);
        for c in col..n {
            a[row][c] = mulm(a[row][c], inv, l);
        }
        for r in 0..n {
            if r != row && a[r][col] != 0 {
                let f = a[r][col];
                for c in col..n {
                    let sub = mulm(f, a[row][c], l);
                    a[r][c] = (a[r][c] + l - sub) % l;
                }
            }
        }
        pivot_col_of_row.push(col);
        row += 1;
        if row == n {
            break;
        }
    }
    let pivots: Vec<usize> = pivot_col_of_row;
    let mut basis = Vec::new();
    for free in 0..n {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = (l - a[r][free] % l) % l;
        }
        basis.push(v);
    }
    basis
}

/// Solves `B x = c` where B is n x d with independent columns (basis of a
/// subspace) and c is in the span; returns the d coordinates.
fn coords_in_basis(b: &[Vec<u64>], c: &[u64], l: u64) -> Vec<u64> {
    let n = c.len();
    let d = b.len();
    // augmented [B | c] with B's columns = b[j]
    let mut a: Vec<Vec<u64>> = (0..n)
        .map(|r| {
            let mut row: Vec<u64> = (0..d).map(|j| b[j][r]).collect();
            row.push(c[r]);
            row
        })
        .collect();
    let mut x = vec![0u64; d];
    let mut row = 0;
    let mut pivots = Vec::new();
    for col in 0..d {
        let Some(pr) = (row..n).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(row, pr);
        let inv = invm(a[row][col], l);
        for cc in col..=d {
            a[row][cc] = mulm(a[row][cc], inv, l);
        }
        for r in 0..n {
            if r != row && a[r][col] != 0 {
                let f = a[r][col];
                for cc in col..=d {
                    let sub = mulm(f, a[row][cc], l);
                    a[r][cc] = (a[r][cc] + l - sub) % l;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = a[r][d];
    }
    x
}

#[derive(Clone, Debug)]
pub struct ClassInfo {
    pub label: String,
    pub size: u64,
    pub element_order: u64,
    pub inverse_class: usize,
}

/// An exact ordinary character table: rows are irreducible characters
/// (trivial first, then sorted by degree and entries), columns follow the
/// conjugacy class order with the identity class first.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub group_order: u64,
    pub exponent: u64,
    pub classes: Vec<ClassInfo>,
    pub degrees: Vec<u64>,
    pub entries: Vec<Vec<Cyclotomic>>,
    pub modular_prime: u64,
}

/// Class labels in "order + letter" style: 1a, 2a, 2b, 3a, ...
fn class_labels(classes: &[ConjClass]) -> Vec<String> {
    let mut counts: alloc::collections::BTreeMap<u64, u32> = alloc::collections::BTreeMap::new();
    classes
        .iter()
        .map(|c| {
            let idx = counts.entry(c.element_order).or_insert(0);
            let letter = (b'a' + (*idx % 26) as u8) as char;
            *idx += 1;
            format!("{}{}", c.element_order, letter)
        })
        .collect()
}

pub fn character_table(g: &PermGroup) -> Result<CharacterTable, ChartabError> {
    let classes = g.conjugacy_classes();
    let n = classes.len();
    let order = g.order();
    let e = g.exponent();
    let l = dixon_prime(order, e);
    let tensor = g.class_structure_constants(&classes);
    let class_map = g.class_map(&classes);
    let inverse_class: Vec<usize> = classes
        .iter()
        .map(|c| class_map[g.inverse(c.representative) as usize] as usize)
        .collect();

    // class matrices (M_i)_{jk} = a_{ijk} over F_l, acting on column vectors
    let to_fl = |v: i64| -> u64 { v.rem_euclid(l as i64) as u64 };
    let class_mat = |i: usize| -> Vec<Vec<u64>> {
        (0..n)
            .map(|j| (0..n).map(|k| to_fl(tensor.at(i, j, k))).collect())
            .collect()
    };

    // refine the full space into common one-dimensional eigenspaces
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..n)
        .map(|i| {
            let mut v = vec![0u64; n];
            v[i] = 1;
            v
        })
        .collect()];
    for i in 1..n {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let m = class_mat(i);
        let mut next = Vec::new();
        for space in spaces {
            let d = space.len();
            if d == 1 {
                next.push(space);
                continue;
            }
            // restriction X of M_i to the subspace: M_i B = B X
            let mut x = vec![vec![0u64; d]; d];
            for (jcol, bvec) in space.iter().enumerate() {
                let mb: Vec<u64> = (0..n)
                    .map(|r| {
                        let mut acc = 0u64;
                        for c in 0..n {
                            acc = (acc + mulm(m[r][c], bvec[c], l)) % l;
                        }
                        acc
                    })
                    .collect();
                let co = coords_in_basis(&space, &mb, l);
                for r in 0..d {
                    x[r][jcol] = co[r];
                }
            }
            let mut found = 0;
            for lam in 0..l {
                let shifted: Vec<Vec<u64>> = (0..d)
                    .map(|r| {
                        (0..d)
                            .map(|c| {
                                if r == c {
                                    (x[r][c] + l - lam) % l
                                } else {
                                    x[r][c]
                                }
                            })
                            .collect()
                    })
                    .collect();
                let ns = nullspace(&shifted, l);
                if ns.is_empty() {
                    continue;
                }
                found += ns.len();
                // map coordinates back to ambient vectors
                let sub: Vec<Vec<u64>> = ns
                    .iter()
                    .map(|co| {
                        (0..n)
                            .map(|r| {
                                let mut acc = 0u64;
                                for (j, bvec) in space.iter().enumerate() {
                                    acc = (acc + mulm(co[j], bvec[r], l)) % l;
                                }
                                acc
                            })
                            .collect()
                    })
                    .collect();
                next.push(sub);
                if found == d {
                    break;
                }
            }
            if found != d {
                return Err(ChartabError::SplitFailed);
            }
        }
        spaces = next;
    }
    if spaces.len() != n || spaces.iter().any(|s| s.len() != 1) {
        return Err(ChartabError::SplitFailed);
    }

    // normalize so the identity-class coordinate is 1: these are the
    // central character values omega(K_j) mod l
    let omegas: Vec<Vec<u64>> = spaces
        .iter()
        .map(|s| {
            let v = &s[0];
            let inv = invm(v[0], l);
            v.iter().map(|&c| mulm(c, inv, l)).collect()
        })
        .collect();

    // degrees: sum_j omega_j * omega_{j'} / |K_j| = |G| / d^2 mod l,
    // with the unique integer root 0 < d <= sqrt|G|
    let order_m = order % l;
    let mut degrees_m = Vec::new();
    let mut degrees = Vec::new();
    for (row, om) in omegas.iter().enumerate() {
        let mut c = 0u64;
        for j in 0..n {
            let term = mulm(om[j], om[inverse_class[j]], l);
            c = (c + mulm(term, invm(classes[j].size % l, l), l)) % l;
        }
        let dsq = mulm(order_m, invm(c, l), l);
        let mut deg = None;
        let mut d = 1u64;
        while d * d <= order {
            if mulm(d, d, l) == dsq {
                deg = Some(d);
                break;
            }
            d += 1;
        }
        let Some(deg) = deg else {
            return Err(ChartabError::NoDegree { row });
        };
        degrees.push(deg);
        degrees_m.push(deg % l);
    }

    // modular character values chi(g_j) = deg * omega_j / |K_j|
    let chim: Vec<Vec<u64>> = omegas
        .iter()
        .enumerate()
        .map(|(row, om)| {
            (0..n)
                .map(|j| {
                    mulm(
                        degrees_m[row],
                        mulm(om[j], invm(classes[j].size % l, l), l),
                        l,
                    )
                })
                .collect()
        })
        .collect();

    // power-class map: for each class j and each exponent m < order of g_j,
    // the class of g_j^m
    let theta = powm(primitive_root(l), (l - 1) / e, l);
    let mut entries: Vec<Vec<Cyclotomic>> = Vec::with_capacity(n);
    for row in 0..n {
        let mut vals = Vec::with_capacity(n);
        for j in 0..n {
            let o = classes[j].element_order;
            let theta_o = powm(theta, e / o, l);
            // multiplicity of zeta_o^t: (1/o) * sum_m chi(g^m) theta_o^{-mt}
            let inv_o = invm(o % l, l);
            let mut val = Cyclotomic::zero();
            let mut total = 0u64;
            // classes of the powers of the representative
            let rep = classes[j].representative;
            let mut pow_classes = Vec::with_capacity(o as usize);
            let mut cur = 0u32;
            for _ in 0..o {
                pow_classes.push(class_map[cur as usize] as usize);
                cur = g.product(cur, rep);
            }
            for t in 0..o {
                let mut acc = 0u64;
                for (m, &pc) in pow_classes.iter().enumerate() {
                    let tw = powm(theta_o, (o - (m as u64 * t) % o) % o, l);
                    acc = (acc + mulm(chim[row][pc], tw, l)) % l;
                }
                let mt = mulm(acc, inv_o, l);
                if mt == 0 {
                    continue;
                }
                if mt > degrees[row] {
                    return Err(ChartabError::LiftOutOfRange { row, class: j });
                }
                total += mt;
                val = val.add(&Cyclotomic::root_of_unity(o, t).scale(&rat(mt as i64)));
            }
            if total != degrees[row] {
                return Err(ChartabError::LiftOutOfRange { row, class: j });
            }
            vals.push(val);
        }
        entries.push(vals);
    }

    // order rows: trivial character first, then by degree and entries
    let trivial: Vec<Cyclotomic> = (0..n).map(|_| Cyclotomic::one()).collect();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| {
        let ka = (entries[a] != trivial, degrees[a], &entries[a]);
        let kb = (entries[b] != trivial, degrees[b], &entries[b]);
        ka.cmp(&kb)
    });
    let entries: Vec<Vec<Cyclotomic>> = idx.iter().map(|&i| entries[i].clone()).collect();
    let degrees: Vec<u64> = idx.iter().map(|&i| degrees[i]).collect();

    let labels = class_labels(&classes);
    let infos: Vec<ClassInfo> = classes
        .iter()
        .enumerate()
        .map(|(j, c)| ClassInfo {
            label: labels[j].clone(),
            size: c.size,
            element_order: c.element_order,
            inverse_class: inverse_class[j],
        })
        .collect();
    Ok(CharacterTable {
        group_order: order,
        exponent: e,
        classes: infos,
        degrees,
        entries,
        modular_prime: l,
    })
}

impl CharacterTable {
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// `<f, h> = (1/|G|) sum_j |K_j| f(g_j) conj(h(g_j))` for class
    /// functions given by their value rows.
    pub fn inner_product(&self, f: &[Cyclotomic], h: &[Cyclotomic]) -> Cyclotomic {
        let mut acc = Cyclotomic::zero();
        for j in 0..self.classes.len() {
            let term = f[j].mul(&h[j].conj()).scale(&rat(self.classes[j].size as i64));
            acc = acc.add(&term);
        }
        acc.scale(&Rat::new(1.into(), (self.group_order as i64).into()))
    }

    /// Product multiplicity tensor for the irreducible-character basis:
    /// `alpha_{ijk} = <chi_i chi_j, chi_k>`, each verified to be a
    /// nonnegative integer.
    pub fn irr_structure_constants(&self) -> Result<(Vec<String>, Vec<Rat>), ChartabError> {
        let n = self.n();
        let mut alpha = vec![Rat::zero(); n * n * n];
        for i in 0..n {
            for j in i..n {
                let prod: Vec<Cyclotomic> = (0..self.classes.len())
                    .map(|c| self.entries[i][c].mul(&self.entries[j][c]))
                    .collect();
                for k in 0..n {
                    let m = self.inner_product(&prod, &self.entries[k]);
                    let Some(r) = m.as_rat() else {
                        return Err(ChartabError::NonIntegralConstant { i, j, k });
                    };
                    if !crate::rat::is_nonneg_integer(&r) {
                        return Err(ChartabError::NonIntegralConstant { i, j, k });
                    }
                    alpha[(i * n + j) * n + k] = r.clone();
                    alpha[(j * n + i) * n + k] = r;
                }
            }
        }
        let labels = (0..n).map(|i| format!("chi{}", i + 1)).collect();
        Ok((labels, alpha))
    }

    /// The row permutation induced by a Galois automorphism of the
    /// cyclotomic field of the table exponent, if it exists.
    pub fn galois_action_on_irr(&self, sigma: &GaloisAutomorphism) -> Option<Vec<usize>> {
        let n = self.n();
        let mut perm = Vec::with_capacity(n);
        for i in 0..n {
            let image: Vec<Cyclotomic> =
                self.entries[i].iter().map(|x| x.galois(sigma)).collect();
            perm.push((0..n).find(|&r| self.entries[r] == image)?);
        }
        Some(perm)
    }
}
