//! Pi-partial characters of pi-separable groups, decomposition matrices,
//! and projective indecomposable tables.  For pi the complement of {p}
//! this specializes to Brauer characters of p-solvable groups.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::chartab::{character_table, ChartabError, CharacterTable};
use crate::cyclo::{Cyclotomic, GaloisAutomorphism};
use crate::group::{GroupError, PermGroup};
#[cfg(test)]
use crate::group::pi_part;
use crate::rat::{is_nonneg_integer, rat, Rat, RatMat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PipartError {
    NotPiSeparable,
    /// Greedy acceptance ended with the wrong basis size.
    BasisSizeMismatch { expected: usize, got: usize },
    SingularSolve,
    NonIntegralDecomposition { row: usize },
    /// A projective indecomposable fails to vanish off the pi-classes.
    VanishingViolated { pim: usize, class: usize },
    /// One of the regular-character identities fails.
    RegularIdentityViolated,
    NonIntegralConstant { i: usize, j: usize, k: usize },
    /// A basis member is missing from an induced character where the
    /// theory requires it.
    ConstituentMissing { index: usize },
    /// A Galois image of a basis member is not a basis member.
    ActionViolated { index: usize, k: u64 },
    Group(GroupError),
    Chartab(ChartabError),
}

impl fmt::Display for PipartError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PipartError::NotPiSeparable => write!(f, "group is not pi-separable"),
            PipartError::BasisSizeMismatch { expected, got } => {
                write!(f, "basis size {got}, expected {expected}")
            }
            PipartError::SingularSolve => write!(f, "singular solve in basis expansion"),
            PipartError::NonIntegralDecomposition { row } => {
                write!(f, "non-integral decomposition for character {row}")
            }
            PipartError::VanishingViolated { pim, class } => {
                write!(f, "projective {pim} does not vanish on class {class}")
            }
            PipartError::RegularIdentityViolated => {
                write!(f, "regular character identity violated")
            }
            PipartError::NonIntegralConstant { i, j, k } => {
                write!(f, "non-integral product multiplicity at ({i},{j},{k})")
            }
            PipartError::ConstituentMissing { index } => {
                write!(f, "basis member {index} missing as constituent")
            }
            PipartError::ActionViolated { index, k } => {
                write!(f, "Galois image of basis member {index} (k={k}) not in basis")
            }
            PipartError::Group(e) => write!(f, "{e}"),
            PipartError::Chartab(e) => write!(f, "{e}"),
        }
    }
}

impl From<GroupError> for PipartError {
    fn from(e: GroupError) -> Self {
        PipartError::Group(e)
    }
}

impl From<ChartabError> for PipartError {
    fn from(e: ChartabError) -> Self {
        PipartError::Chartab(e)
    }
}

/// A character restricted to the pi-classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialCharacter {
    pub values: Vec<Cyclotomic>,
    pub degree: u64,
    /// Rows of the ordinary table restricting to these values.
    pub preimages: Vec<usize>,
}

/// The irreducible pi-partial characters, a basis of the pi-class functions.
#[derive(Clone, Debug)]
pub struct IpiSet {
    pub irreducibles: Vec<PartialCharacter>,
    pub pi: Vec<u64>,
    /// Indices of the pi-classes in the full class list (identity first).
    pub class_ids: Vec<usize>,
}

/// Rows indexed by ordinary irreducibles, columns by the pi-partial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionMatrix {
    pub d: Vec<Vec<u64>>,
}

/// Projective indecomposable class functions on all classes of the group.
#[derive(Clone, Debug)]
pub struct PimSet {
    pub pims: Vec<Vec<Cyclotomic>>,
    pub degrees: Vec<u64>,
}

/// Exact rational solve of `sum_k x_k basis_k = target` by expanding every
/// entry in a common cyclotomic coordinate system.  `None` when the target
/// is outside the span; basis entries must be linearly independent.
pub fn solve_in_cyclotomic_basis(
    basis: &[&[Cyclotomic]],
    target: &[Cyclotomic],
) -> Option<Vec<Rat>> {
    let m = target.len();
    let mut e = 1u64;
    for v in basis.iter().flat_map(|b| b.iter()).chain(target.iter()) {
        e = num_integer::lcm(e, v.order());
    }
    // coordinate keys: (position, basis exponent at order e)
    let mut keys: alloc::collections::BTreeSet<(usize, u64)> = alloc::collections::BTreeSet::new();
    let coords = |v: &Cyclotomic, j: usize| {
        v.coordinates_at_order(e)
            .into_iter()
            .map(move |(exp, c)| ((j, exp), c))
    };
    let mut basis_coords: Vec<alloc::collections::BTreeMap<(usize, u64), Rat>> =
        vec![Default::default(); basis.len()];
    let mut target_coords: alloc::collections::BTreeMap<(usize, u64), Rat> = Default::default();
    for j in 0..m {
        for (k, b) in basis.iter().enumerate() {
            for (key, c) in coords(&b[j], j) {
                keys.insert(key);
                basis_coords[k].insert(key, c);
            }
        }
        for (key, c) in coords(&target[j], j) {
            keys.insert(key);
            target_coords.insert(key, c);
        }
    }
    let rows: Vec<(usize, u64)> = keys.into_iter().collect();
    let mut mat = RatMat::zero(rows.len(), basis.len());
    let mut rhs = vec![Rat::zero(); rows.len()];
    for (r, key) in rows.iter().enumerate() {
        for k in 0..basis.len() {
            if let Some(c) = basis_coords[k].get(key) {
                *mat.at_mut(r, k) = c.clone();
            }
        }
        if let Some(c) = target_coords.get(key) {
            rhs[r] = c.clone();
        }
    }
    mat.solve(&rhs)
}

fn nonneg_integers(sol: &[Rat]) -> Option<Vec<u64>> {
    sol.iter()
        .map(|x| {
            if is_nonneg_integer(x) {
                crate::rat::as_i64(x).map(|v| v as u64)
            } else {
                None
            }
        })
        .collect()
}

/// Restrictions of the irreducible characters to the pi-classes,
/// deduplicated and sorted by (degree, values).
pub fn restricted_characters(
    g: &PermGroup,
    t: &CharacterTable,
    pi: &[u64],
) -> Result<(Vec<usize>, Vec<PartialCharacter>), PipartError> {
    if !g.is_pi_separable(pi, g.order())? {
        return Err(PipartError::NotPiSeparable);
    }
    let classes = g.conjugacy_classes();
    let class_ids = g.pi_classes(&classes, pi);
    let mut out: Vec<PartialCharacter> = Vec::new();
    for (row, chi) in t.entries.iter().enumerate() {
        let values: Vec<Cyclotomic> = class_ids.iter().map(|&c| chi[c].clone()).collect();
        if let Some(existing) = out.iter_mut().find(|p| p.values == values) {
            existing.preimages.push(row);
        } else {
            out.push(PartialCharacter {
                values,
                degree: t.degrees[row],
                preimages: vec![row],
            });
        }
    }
    out.sort_by(|a, b| (a.degree, &a.values).cmp(&(b.degree, &b.values)));
    Ok((class_ids, out))
}

/// Greedy basis extraction in increasing degree: a candidate is reducible
/// exactly when it is a nonnegative-integer combination of the already
/// accepted members.
pub fn irreducible_pi_partials(
    class_ids: &[usize],
    restrictions: &[PartialCharacter],
    pi: &[u64],
) -> Result<IpiSet, PipartError> {
    let n = class_ids.len();
    let mut accepted: Vec<PartialCharacter> = Vec::new();
    for cand in restrictions {
        let basis: Vec<&[Cyclotomic]> =
            accepted.iter().map(|p| p.values.as_slice()).collect();
        let reducible = if basis.is_empty() {
            false
        } else {
            match solve_in_cyclotomic_basis(&basis, &cand.values) {
                Some(sol) => nonneg_integers(&sol).is_some(),
                None => false,
            }
        };
        if !reducible {
            accepted.push(cand.clone());
        }
    }
    if accepted.len() != n {
        return Err(PipartError::BasisSizeMismatch {
            expected: n,
            got: accepted.len(),
        });
    }
    // put the trivial restriction first
    if let Some(pos) = accepted
        .iter()
        .position(|p| p.values.iter().all(|v| *v == Cyclotomic::one()))
    {
        accepted[..=pos].rotate_right(1);
    }
    Ok(IpiSet {
        irreducibles: accepted,
        pi: pi.to_vec(),
        class_ids: class_ids.to_vec(),
    })
}

/// Solves every ordinary irreducible's restriction in the pi-partial basis.
pub fn decomposition_matrix(
    t: &CharacterTable,
    ipi: &IpiSet,
) -> Result<DecompositionMatrix, PipartError> {
    let basis: Vec<&[Cyclotomic]> = ipi
        .irreducibles
        .iter()
        .map(|p| p.values.as_slice())
        .collect();
    let mut d = Vec::with_capacity(t.entries.len());
    for (row, chi) in t.entries.iter().enumerate() {
        let target: Vec<Cyclotomic> =
            ipi.class_ids.iter().map(|&c| chi[c].clone()).collect();
        let sol = solve_in_cyclotomic_basis(&basis, &target)
            .ok_or(PipartError::NonIntegralDecomposition { row })?;
        let ints =
            nonneg_integers(&sol).ok_or(PipartError::NonIntegralDecomposition { row })?;
        d.push(ints);
    }
    Ok(DecompositionMatrix { d })
}

/// Projective indecomposables `Phi_i = sum_chi d_{chi,i} chi`, with the
/// vanishing and regular-character identities verified.
pub fn pims(
    g: &PermGroup,
    t: &CharacterTable,
    ipi: &IpiSet,
    d: &DecompositionMatrix,
) -> Result<PimSet, PipartError> {
    let n = ipi.irreducibles.len();
    let n_classes = t.classes.len();
    let mut pims = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = vec![Cyclotomic::zero(); n_classes];
        for (chi, chi_row) in t.entries.iter().enumerate() {
            let mult = d.d[chi][i];
            if mult == 0 {
                continue;
            }
            let m = rat(mult as i64);
            for (c, slot) in row.iter_mut().enumerate() {
                *slot = slot.add(&chi_row[c].scale(&m));
            }
        }
        pims.push(row);
    }
    // vanishing off the pi-classes
    for (i, row) in pims.iter().enumerate() {
        for c in 0..n_classes {
            if !ipi.class_ids.contains(&c) && !row[c].is_zero() {
                return Err(PipartError::VanishingViolated { pim: i, class: c });
            }
        }
    }
    let degrees: Vec<u64> = pims
        .iter()
        .map(|row| {
            let r = row[0].as_rat().expect("degree is rational");
            crate::rat::as_i64(&r).expect("degree is an integer") as u64
        })
        .collect();
    // rho* = sum_i Phi_i(1) phi_i  and  rho = sum_i phi_i(1) Phi_i
    let order = rat(g.order() as i64);
    for (pos, &c) in ipi.class_ids.iter().enumerate() {
        let mut acc = Cyclotomic::zero();
        for i in 0..n {
            acc = acc.add(
                &ipi.irreducibles[i].values[pos].scale(&rat(degrees[i] as i64)),
            );
        }
        let want = if c == 0 {
            Cyclotomic::from_rat(order.clone())
        } else {
            Cyclotomic::zero()
        };
        if acc != want {
            return Err(PipartError::RegularIdentityViolated);
        }
    }
    for c in 0..n_classes {
        let mut acc = Cyclotomic::zero();
        for i in 0..n {
            acc = acc.add(&pims[i][c].scale(&rat(ipi.irreducibles[i].degree as i64)));
        }
        let want = if c == 0 {
            Cyclotomic::from_rat(order.clone())
        } else {
            Cyclotomic::zero()
        };
        if acc != want {
            return Err(PipartError::RegularIdentityViolated);
        }
    }
    Ok(PimSet { pims, degrees })
}

/// Structure constants of the pi-partial basis under pointwise product,
/// cross-checked on sampled pairs against the preimage decomposition
/// `chi_a chi_b = sum_gamma m_gamma gamma`, which gives
/// `alpha_{ij tau} = sum_gamma m_gamma d_{gamma tau}`.
pub fn pipartial_structure_constants(
    t: &CharacterTable,
    ipi: &IpiSet,
    d: &DecompositionMatrix,
) -> Result<(Vec<String>, Vec<Rat>), PipartError> {
    let n = ipi.irreducibles.len();
    let basis: Vec<&[Cyclotomic]> = ipi
        .irreducibles
        .iter()
        .map(|p| p.values.as_slice())
        .collect();
    let mut alpha = vec![Rat::zero(); n * n * n];
    let mut mults = vec![vec![vec![0u64; n]; n]; n];
    for i in 0..n {
        for j in i..n {
            let prod: Vec<Cyclotomic> = (0..ipi.class_ids.len())
                .map(|c| ipi.irreducibles[i].values[c].mul(&ipi.irreducibles[j].values[c]))
                .collect();
            let sol = solve_in_cyclotomic_basis(&basis, &prod)
                .ok_or(PipartError::NonIntegralConstant { i, j, k: 0 })?;
            for (k, x) in sol.iter().enumerate() {
                if !is_nonneg_integer(x) {
                    return Err(PipartError::NonIntegralConstant { i, j, k });
                }
                alpha[(i * n + j) * n + k] = x.clone();
                alpha[(j * n + i) * n + k] = x.clone();
                mults[i][j][k] = crate::rat::as_i64(x).unwrap() as u64;
            }
        }
    }
    // sampled cross-check through ordinary preimages
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        for j in i..n {
            pairs.push((i, j));
        }
    }
    pairs.truncate(12);
    for (i, j) in pairs {
        let a = ipi.irreducibles[i].preimages[0];
        let b = ipi.irreducibles[j].preimages[0];
        let prod: Vec<Cyclotomic> = (0..t.classes.len())
            .map(|c| t.entries[a][c].mul(&t.entries[b][c]))
            .collect();
        for tau in 0..n {
            let mut acc = 0u64;
            for (gamma, row) in t.entries.iter().enumerate() {
                let m = t.inner_product(&prod, row);
                let m = m
                    .as_rat()
                    .and_then(|r| crate::rat::as_i64(&r))
                    .ok_or(PipartError::NonIntegralConstant { i, j, k: tau })?;
                acc += m as u64 * d.d[gamma][tau];
            }
            if acc != mults[i][j][tau] {
                return Err(PipartError::NonIntegralConstant { i, j, k: tau });
            }
        }
    }
    let labels = (0..n).map(|i| format!("phi{}", i + 1)).collect();
    Ok((labels, alpha))
}

/// Structure constants of the projective indecomposable basis: products
/// are taken pointwise on all classes, checked to vanish off the
/// pi-classes, and solved in the restricted basis.
pub fn pim_structure_constants(
    ipi: &IpiSet,
    p: &PimSet,
) -> Result<(Vec<String>, Vec<Rat>), PipartError> {
    let n = p.pims.len();
    let n_classes = p.pims[0].len();
    let restricted: Vec<Vec<Cyclotomic>> = p
        .pims
        .iter()
        .map(|row| ipi.class_ids.iter().map(|&c| row[c].clone()).collect())
        .collect();
    let basis: Vec<&[Cyclotomic]> = restricted.iter().map(|r| r.as_slice()).collect();
    let mut alpha = vec![Rat::zero(); n * n * n];
    for i in 0..n {
        for j in i..n {
            for c in 0..n_classes {
                if !ipi.class_ids.contains(&c)
                    && !p.pims[i][c].mul(&p.pims[j][c]).is_zero()
                {
                    return Err(PipartError::VanishingViolated { pim: i, class: c });
                }
            }
            let prod: Vec<Cyclotomic> = ipi
                .class_ids
                .iter()
                .map(|&c| p.pims[i][c].mul(&p.pims[j][c]))
                .collect();
            let sol = solve_in_cyclotomic_basis(&basis, &prod)
                .ok_or(PipartError::NonIntegralConstant { i, j, k: 0 })?;
            for (k, x) in sol.iter().enumerate() {
                if !is_nonneg_integer(x) {
                    return Err(PipartError::NonIntegralConstant { i, j, k });
                }
                alpha[(i * n + j) * n + k] = x.clone();
                alpha[(j * n + i) * n + k] = x.clone();
            }
        }
    }
    let labels = (0..n).map(|i| format!("Phi{}", i + 1)).collect();
    Ok((labels, alpha))
}

#[derive(Clone, Debug)]
pub struct LemmaCheck {
    /// Which linear character of the subgroup was induced.
    pub mu_index: usize,
    pub pim_degree: u64,
    pub bound: u64,
    pub degree_ok: bool,
}

/// Degree-bound report from inducing linear constituents off a maximal
/// abelian pi-subgroup.
#[derive(Clone, Debug)]
pub struct LemmaReport {
    pub subgroup_order: u64,
    pub index: u64,
    pub checks: Vec<LemmaCheck>,
}

impl LemmaReport {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.degree_ok)
    }
}

/// For each basis member phi_i: picks a linear constituent mu of phi_i
/// restricted to a maximal abelian pi-subgroup H, verifies that Phi_i is a
/// constituent of the induced character mu^G, and that
/// `Phi_i(1) <= |G:H|`.
pub fn lemma_upper_bound_check(
    g: &PermGroup,
    t: &CharacterTable,
    ipi: &IpiSet,
    d: &DecompositionMatrix,
    p: &PimSet,
) -> Result<LemmaReport, PipartError> {
    let (h_order, ids) = g.max_abelian_pi_subgroup(&ipi.pi);
    let h = g.subgroup(&ids)?;
    debug_assert_eq!(h.order(), h_order);
    let th = character_table(&h)?;
    let h_classes = h.conjugacy_classes();
    let g_classes = g.conjugacy_classes();
    let g_map = g.class_map(&g_classes);
    // position of each G-class among the pi-classes
    let mut pi_pos = vec![usize::MAX; g_classes.len()];
    for (pos, &c) in ipi.class_ids.iter().enumerate() {
        pi_pos[c] = pos;
    }
    // restriction of each phi to H, as values on H-classes
    let h_class_in_g: Vec<usize> = h_classes
        .iter()
        .map(|c| {
            let gid = g.id_of(h.element(c.representative)).unwrap();
            pi_pos[g_map[gid as usize]]
        })
        .collect();
    let index = g.order() / h.order();
    let mut checks = Vec::new();
    for (i, phi) in ipi.irreducibles.iter().enumerate() {
        let phi_h: Vec<Cyclotomic> = h_class_in_g
            .iter()
            .map(|&pos| phi.values[pos].clone())
            .collect();
        // linear constituent of (phi_i)_H
        let mut mu_index = None;
        for (row, mu) in th.entries.iter().enumerate() {
            if th.degrees[row] != 1 {
                continue;
            }
            let m = th.inner_product(&phi_h, mu);
            let m = m.as_rat().and_then(|r| crate::rat::as_i64(&r));
            match m {
                Some(v) if v > 0 => {
                    mu_index = Some(row);
                    break;
                }
                Some(_) => {}
                None => return Err(PipartError::ConstituentMissing { index: i }),
            }
        }
        let Some(mu_index) = mu_index else {
            return Err(PipartError::ConstituentMissing { index: i });
        };
        let mu_g =
            g.induce_class_function(&h, &h_classes, &th.entries[mu_index], &g_classes)?;
        // Phi_i must be a constituent of mu^G
        for (chi, row) in t.entries.iter().enumerate() {
            let m = t.inner_product(&mu_g, row);
            let m = m
                .as_rat()
                .and_then(|r| crate::rat::as_i64(&r))
                .ok_or(PipartError::ConstituentMissing { index: i })?;
            if m < 0 || (m as u64) < d.d[chi][i] {
                return Err(PipartError::ConstituentMissing { index: i });
            }
        }
        checks.push(LemmaCheck {
            mu_index,
            pim_degree: p.degrees[i],
            bound: index,
            degree_ok: p.degrees[i] <= index,
        });
    }
    Ok(LemmaReport {
        subgroup_order: h_order,
        index,
        checks,
    })
}

/// The row permutation induced on the pi-partial basis by a Galois
/// automorphism; its absence contradicts the closure of the basis.
pub fn galois_action_on_ipi(
    ipi: &IpiSet,
    sigma: &GaloisAutomorphism,
) -> Result<Vec<usize>, PipartError> {
    let n = ipi.irreducibles.len();
    let mut perm = Vec::with_capacity(n);
    for (i, phi) in ipi.irreducibles.iter().enumerate() {
        let image: Vec<Cyclotomic> = phi.values.iter().map(|x| x.galois(sigma)).collect();
        match (0..n).find(|&r| ipi.irreducibles[r].values == image) {
            Some(r) => perm.push(r),
            None => return Err(PipartError::ActionViolated { index: i, k: sigma.k }),
        }
    }
    Ok(perm)
}

/// Full pipeline for one (group, pi) pair.
#[derive(Clone, Debug)]
pub struct PiAnalysis {
    pub class_ids: Vec<usize>,
    pub ipi: IpiSet,
    pub decomposition: DecompositionMatrix,
    pub pims: PimSet,
}

pub fn analyze_pi(
    g: &PermGroup,
    t: &CharacterTable,
    pi: &[u64],
) -> Result<PiAnalysis, PipartError> {
    let (class_ids, restrictions) = restricted_characters(g, t, pi)?;
    let ipi = irreducible_pi_partials(&class_ids, &restrictions, pi)?;
    let decomposition = decomposition_matrix(t, &ipi)?;
    let pims = pims(g, t, &ipi, &decomposition)?;
    Ok(PiAnalysis {
        class_ids,
        ipi,
        decomposition,
        pims,
    })
}

/// The prime set whose partial characters are the p-Brauer characters:
/// all primes dividing the order except p.
pub fn brauer_pi(order: u64, p: u64) -> Vec<u64> {
    crate::group::primes_of(order).into_iter().filter(|&q| q != p).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog_group;
    use crate::sfca::{bounds_certificate, Sfca, Table};

    fn setup(name: &str, pi: &[u64]) -> (PermGroup, CharacterTable, PiAnalysis) {
        let g = catalog_group(name, 5000).unwrap();
        let t = character_table(&g).unwrap();
        let a = analyze_pi(&g, &t, pi).unwrap();
        (g, t, a)
    }

    fn rows_as_ints(vals: &[Cyclotomic]) -> Vec<i64> {
        vals.iter()
            .map(|v| crate::rat::as_i64(&v.as_rat().unwrap()).unwrap())
            .collect()
    }

    #[test]
    fn s3_pi3_pipeline() {
        let (_, _, a) = setup("S3", &[3]);
        assert_eq!(a.class_ids, vec![0, 2]);
        assert_eq!(a.ipi.irreducibles.len(), 2);
        assert_eq!(rows_as_ints(&a.ipi.irreducibles[0].values), vec![1, 1]);
        assert_eq!(rows_as_ints(&a.ipi.irreducibles[1].values), vec![2, -1]);
        assert_eq!(
            a.decomposition.d,
            vec![vec![1, 0], vec![1, 0], vec![0, 1]]
        );
        assert_eq!(a.pims.degrees, vec![2, 2]);
        assert_eq!(rows_as_ints(&a.pims.pims[0]), vec![2, 0, 2]);
        assert_eq!(rows_as_ints(&a.pims.pims[1]), vec![2, 0, -1]);
    }

    #[test]
    fn s4_pi3_matches_s3_algebra() {
        let (_, t, a) = setup("S4", &[3]);
        assert_eq!(a.ipi.irreducibles.len(), 2);
        assert_eq!(rows_as_ints(&a.ipi.irreducibles[1].values), vec![2, -1]);
        // the degree-3 restrictions decompose as (1,1)
        let deg3_rows: Vec<usize> = t
            .degrees
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == 3)
            .map(|(r, _)| r)
            .collect();
        for r in deg3_rows {
            assert_eq!(a.decomposition.d[r], vec![1, 1]);
        }
        let (labels, alpha) = pipartial_structure_constants(&t, &a.ipi, &a.decomposition).unwrap();
        let alg = Sfca::new(labels, alpha).unwrap();
        let (_, s) = alg.row_sums_exact();
        assert_eq!(s, rat(3));
    }

    #[test]
    fn full_pi_gives_ordinary_table() {
        let (_, t, a) = setup("S3", &[2, 3]);
        assert_eq!(a.ipi.irreducibles.len(), 3);
        // decomposition is a permutation matrix and each Phi is a single chi
        for row in &a.decomposition.d {
            assert_eq!(row.iter().sum::<u64>(), 1);
        }
        assert_eq!(a.pims.degrees.len(), 3);
        let degs: alloc::collections::BTreeSet<u64> = a.pims.degrees.iter().copied().collect();
        let tdegs: alloc::collections::BTreeSet<u64> = t.degrees.iter().copied().collect();
        assert_eq!(degs, tdegs);
    }

    #[test]
    fn not_pi_separable_rejected() {
        let g = catalog_group("A5", 5000).unwrap();
        let t = character_table(&g).unwrap();
        assert_eq!(
            analyze_pi(&g, &t, &[5]).unwrap_err(),
            PipartError::NotPiSeparable
        );
    }

    #[test]
    fn pipartial_tensor_s3() {
        let (_, t, a) = setup("S3", &[3]);
        let (labels, alpha) = pipartial_structure_constants(&t, &a.ipi, &a.decomposition).unwrap();
        let alg = Sfca::new(labels, alpha).unwrap();
        // phi2*phi2 = 2 phi1 + phi2
        assert_eq!(alg.alpha(1, 1, 0), &rat(2));
        assert_eq!(alg.alpha(1, 1, 1), &rat(1));
        // phi1 is the identity
        for j in 0..2 {
            for k in 0..2 {
                assert_eq!(alg.alpha(0, j, k), &rat(i64::from(j == k)));
            }
        }
        let (rows, s) = alg.row_sums_exact();
        assert_eq!(rows, vec![rat(2), rat(1)]);
        assert_eq!(s, rat(3));
    }

    #[test]
    fn pim_tensor_s3() {
        let (_, _, a) = setup("S3", &[3]);
        let (labels, alpha) = pim_structure_constants(&a.ipi, &a.pims).unwrap();
        let alg = Sfca::new(labels, alpha).unwrap();
        // Phi1*Phi1 = 2 Phi1, Phi1*Phi2 = 2 Phi2, Phi2^2 = Phi1 + Phi2
        assert_eq!(alg.alpha(0, 0, 0), &rat(2));
        assert_eq!(alg.alpha(0, 1, 1), &rat(2));
        assert_eq!(alg.alpha(1, 1, 0), &rat(1));
        assert_eq!(alg.alpha(1, 1, 1), &rat(1));
        let (_, s) = alg.row_sums_exact();
        assert_eq!(s, rat(5));
    }

    #[test]
    fn bounds_and_tables_for_catalog_pairs() {
        let cases: &[(&str, &[u64])] = &[
            ("S3", &[2]),
            ("S3", &[3]),
            ("S4", &[2]),
            ("S4", &[3]),
            ("A4", &[3]),
            ("A4", &[2]),
            ("SL(2,3)", &[2]),
            ("Q8", &[2]),
            ("C12", &[2]),
            ("C12", &[3]),
        ];
        for &(name, pi) in cases {
            let (g, t, a) = setup(name, pi);
            let n = a.ipi.irreducibles.len();
            let order = g.order();
            // I_pi table
            let (labels, alpha) =
                pipartial_structure_constants(&t, &a.ipi, &a.decomposition).unwrap();
            let alg = Sfca::new(labels, alpha).unwrap();
            let entries: Vec<Vec<Cyclotomic>> = a
                .ipi
                .irreducibles
                .iter()
                .map(|p| p.values.clone())
                .collect();
            let meanings: Vec<String> =
                a.class_ids.iter().map(|c| format!("c{c}")).collect();
            let table = Table::exact_verified(&alg, entries, meanings.clone()).unwrap();
            let u: Vec<Rat> = a.pims.degrees.iter().map(|&d| rat(d as i64)).collect();
            let mut v = vec![Rat::zero(); n];
            v[0] = rat(order as i64);
            let cert = bounds_certificate(&alg, &table, &u, &v, 1e-9).unwrap();
            assert!(cert.verdict, "{name} pi={pi:?}");
            let s = cert.s.clone();
            let (h_order, _) = g.max_abelian_pi_subgroup(pi);
            let lower = rat(core::cmp::max(n as u64, h_order) as i64);
            let upper = rat(pi_part(order, pi) as i64);
            assert!(lower <= s && s <= upper, "{name} pi={pi:?}: s={s}");
            // integer column sums for pi-separable groups
            for cs in table.column_sums_exact().unwrap() {
                assert!(cs.is_rational_integer(), "{name} pi={pi:?}");
            }
            // PIM table
            let (plabels, palpha) = pim_structure_constants(&a.ipi, &a.pims).unwrap();
            let palg = Sfca::new(plabels, palpha).unwrap();
            let pentries: Vec<Vec<Cyclotomic>> = a
                .pims
                .pims
                .iter()
                .map(|row| a.class_ids.iter().map(|&c| row[c].clone()).collect())
                .collect();
            let ptable = Table::exact_verified(&palg, pentries, meanings).unwrap();
            let pu: Vec<Rat> = a
                .ipi
                .irreducibles
                .iter()
                .map(|p| rat(p.degree as i64))
                .collect();
            let mut pv = vec![Rat::zero(); n];
            pv[0] = rat(order as i64);
            let pcert = bounds_certificate(&palg, &ptable, &pu, &pv, 1e-9).unwrap();
            assert!(pcert.verdict, "{name} pi={pi:?} pim");
            let (a_max, _) = g.max_abelian_pi_subgroup(&crate::group::primes_of(order));
            assert!(
                rat(a_max as i64) <= pcert.s && pcert.s <= rat(order as i64),
                "{name} pi={pi:?} pim s={}",
                pcert.s
            );
            for cs in ptable.column_sums_exact().unwrap() {
                assert!(cs.is_rational_integer(), "{name} pi={pi:?} pim");
            }
            // PIM degree lower bound |G|_{pi'}
            let copi = pi_part(order, &crate::group::pi_complement(order, pi));
            for &dg in &a.pims.degrees {
                assert!(dg >= copi, "{name} pi={pi:?}");
            }
            // lemma checks
            let report = lemma_upper_bound_check(&g, &t, &a.ipi, &a.decomposition, &a.pims)
                .unwrap();
            assert!(report.all_ok(), "{name} pi={pi:?}");
        }
    }

    #[test]
    fn brauer_oracle_small_groups() {
        // brute force: the valid basis (every restriction decomposes with
        // nonnegative integers) must be unique and match the greedy result
        let cases: &[(&str, u64)] = &[
            ("S3", 2),
            ("S3", 3),
            ("S4", 2),
            ("S4", 3),
            ("A4", 2),
            ("SL(2,3)", 3),
        ];
        for &(name, p) in cases {
            let g = catalog_group(name, 5000).unwrap();
            let t = character_table(&g).unwrap();
            let pi = brauer_pi(g.order(), p);
            let (class_ids, restrictions) = restricted_characters(&g, &t, &pi).unwrap();
            let greedy = irreducible_pi_partials(&class_ids, &restrictions, &pi).unwrap();
            let n = class_ids.len();
            let m = restrictions.len();
            let mut valid: Vec<Vec<usize>> = Vec::new();
            let mut pick = vec![0usize; n];
            // iterate all n-subsets of the m restrictions
            fn subsets(m: usize, n: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
                if cur.len() == n {
                    out.push(cur.clone());
                    return;
                }
                for i in start..m {
                    cur.push(i);
                    subsets(m, n, i + 1, cur, out);
                    cur.pop();
                }
            }
            let mut all = Vec::new();
            pick.clear();
            subsets(m, n, 0, &mut pick, &mut all);
            for subset in all {
                let basis: Vec<&[Cyclotomic]> = subset
                    .iter()
                    .map(|&i| restrictions[i].values.as_slice())
                    .collect();
                let ok = restrictions.iter().all(|r| {
                    match solve_in_cyclotomic_basis(&basis, &r.values) {
                        Some(sol) => nonneg_integers(&sol).is_some(),
                        None => false,
                    }
                });
                if ok {
                    valid.push(subset);
                }
            }
            assert_eq!(valid.len(), 1, "{name} p={p}");
            let oracle: Vec<&PartialCharacter> =
                valid[0].iter().map(|&i| &restrictions[i]).collect();
            for phi in &greedy.irreducibles {
                assert!(oracle.iter().any(|o| o.values == phi.values), "{name} p={p}");
            }
        }
    }

    #[test]
    fn sl23_mod3_brauer_degrees() {
        let g = catalog_group("SL(2,3)", 5000).unwrap();
        let t = character_table(&g).unwrap();
        let pi = brauer_pi(24, 3);
        let a = analyze_pi(&g, &t, &pi).unwrap();
        let mut degs: Vec<u64> = a.ipi.irreducibles.iter().map(|p| p.degree).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 2, 3]);
    }

    #[test]
    fn galois_action_on_pi_partials() {
        let (_, _, a) = setup("S3", &[3]);
        for sigma in GaloisAutomorphism::all(6) {
            let perm = galois_action_on_ipi(&a.ipi, &sigma).unwrap();
            assert_eq!(perm, vec![0, 1]);
        }
        // C5 with pi = {5}: conjugation permutes the nontrivial members
        let (_, _, c5) = setup("C5", &[5]);
        let sigma = GaloisAutomorphism::new(5, 2);
        let perm = galois_action_on_ipi(&c5.ipi, &sigma).unwrap();
        assert_eq!(perm[0], 0);
        let mut seen = alloc::collections::BTreeSet::new();
        let mut p = 1usize;
        for _ in 0..4 {
            seen.insert(p);
            p = perm[p];
        }
        assert_eq!(seen.len(), 4);
    }

    #[test]
    fn induction_example() {
        let g = catalog_group("S3", 5000).unwrap();
        let h_ids: Vec<u32> = (0..6u32)
            .filter(|&i| {
                let o = g.element(i).order();
                o == 1 || o == 3
            })
            .collect();
        let h = g.subgroup(&h_ids).unwrap();
        assert_eq!(h.order(), 3);
        let h_classes = h.conjugacy_classes();
        let g_classes = g.conjugacy_classes();
        let mu = vec![Cyclotomic::one(); h_classes.len()];
        let ind = g.induce_class_function(&h, &h_classes, &mu, &g_classes).unwrap();
        assert_eq!(rows_as_ints(&ind), vec![2, 0, 2]);
    }
}
