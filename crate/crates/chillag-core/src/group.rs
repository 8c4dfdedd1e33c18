//! Finite permutation groups: enumeration, conjugacy classes, class-algebra
//! structure constants, power maps, pi-structure, and subgroup search.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclo::Cyclotomic;
use crate::perm::{PermError, Permutation};

pub const DEFAULT_CAP: u64 = 5000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupError {
    /// Enumeration exceeded the configured order cap.
    CapExceeded { cap: u64 },
    InvalidPermutation,
    /// The claimed subgroup is not closed inside the ambient group.
    NotSubgroup,
    UnknownGroup(String),
    Parse(String),
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::CapExceeded { cap } => write!(f, "group order exceeds cap {cap}"),
            GroupError::InvalidPermutation => write!(f, "invalid permutation"),
            GroupError::NotSubgroup => write!(f, "not a subgroup"),
            GroupError::UnknownGroup(name) => write!(f, "unknown group: {name}"),
            GroupError::Parse(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<PermError> for GroupError {
    fn from(e: PermError) -> Self {
        match e {
            PermError::InvalidPermutation => GroupError::InvalidPermutation,
            PermError::Parse(msg) => GroupError::Parse(msg),
        }
    }
}

/// A fully enumerated finite permutation group.
#[derive(Clone, Debug)]
pub struct PermGroup {
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: BTreeMap<Vec<u16>, u32>,
    exponent: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    pub id: usize,
    pub representative: u32,
    pub members: Vec<u32>,
    pub size: u64,
    pub element_order: u64,
}

/// Class-algebra structure constants: `a_{ijk}` counts pairs
/// `(x, y) in K_i x K_j` with `xy = z` for a fixed `z in K_k`.
#[derive(Clone, Debug)]
pub struct ClassTensor {
    pub n: usize,
    a: Vec<i64>,
}

impl ClassTensor {
    #[inline]
    pub fn at(&self, i: usize, j: usize, k: usize) -> i64 {
        self.a[(i * self.n + j) * self.n + k]
    }
}

impl PermGroup {
    /// Enumerates the closure of `gens` up to `cap` elements.
    pub fn from_generators(gens: &[Permutation], cap: u64) -> Result<Self, GroupError> {
        if gens.is_empty() {
            return Err(GroupError::Parse("no generators given".to_string()));
        }
        let degree = gens[0].degree();
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(GroupError::Parse("generators have mixed degrees".to_string()));
        }
        let mut elements = vec![Permutation::identity(degree)];
        let mut index = BTreeMap::new();
        index.insert(elements[0].images().to_vec(), 0u32);
        let mut frontier = 0usize;
        while frontier < elements.len() {
            let current = elements[frontier].clone();
            for g in gens {
                let prod = g.compose(&current);
                if !index.contains_key(prod.images()) {
                    if elements.len() as u64 >= cap {
                        return Err(GroupError::CapExceeded { cap });
                    }
                    index.insert(prod.images().to_vec(), elements.len() as u32);
                    elements.push(prod);
                }
            }
            frontier += 1;
        }
        let mut exponent = 1u64;
        for e in &elements {
            exponent = num_integer::lcm(exponent, e.order());
        }
        Ok(PermGroup {
            generators: gens.to_vec(),
            elements,
            index,
            exponent,
        })
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn degree(&self) -> usize {
        self.elements[0].degree()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, id: u32) -> &Permutation {
        &self.elements[id as usize]
    }

    pub fn id_of(&self, p: &Permutation) -> Option<u32> {
        self.index.get(p.images()).copied()
    }

    #[inline]
    pub fn product(&self, a: u32, b: u32) -> u32 {
        let p = self.elements[a as usize].compose(&self.elements[b as usize]);
        self.index[p.images()]
    }

    #[inline]
    pub fn inverse(&self, a: u32) -> u32 {
        self.index[self.elements[a as usize].inverse().images()]
    }

    pub fn pow(&self, a: u32, k: i64) -> u32 {
        self.index[self.elements[a as usize].pow(k).images()]
    }

    /// Conjugacy classes in a fixed deterministic order: identity class
    /// first, then ascending `(element_order, size, smallest member id)`.
    pub fn conjugacy_classes(&self) -> Vec<ConjClass> {
        let n = self.elements.len();
        let mut assigned = vec![false; n];
        let mut classes: Vec<ConjClass> = Vec::new();
        for start in 0..n as u32 {
            if assigned[start as usize] {
                continue;
            }
            // Orbit of `start` under conjugation by generators.
            let mut members = vec![start];
            assigned[start as usize] = true;
            let mut frontier = 0usize;
            while frontier < members.len() {
                let x = members[frontier];
                for g in &self.generators {
                    let gid = self.index[g.images()];
                    let conj = self.product(self.product(gid, x), self.inverse(gid));
                    if !assigned[conj as usize] {
                        assigned[conj as usize] = true;
                        members.push(conj);
                    }
                }
                frontier += 1;
            }
            members.sort_unstable();
            let order = self.elements[members[0] as usize].order();
            classes.push(ConjClass {
                id: 0,
                representative: members[0],
                members: members.clone(),
                size: members.len() as u64,
                element_order: order,
            });
        }
        classes.sort_by_key(|c| {
            let ident = c.members.contains(&0);
            (!ident, c.element_order, c.size, c.members[0])
        });
        for (i, c) in classes.iter_mut().enumerate() {
            c.id = i;
        }
        classes
    }

    /// Maps element id to class id for a given class list.
    pub fn class_map(&self, classes: &[ConjClass]) -> Vec<usize> {
        let mut map = vec![usize::MAX; self.elements.len()];
        for c in classes {
            for &m in &c.members {
                map[m as usize] = c.id;
            }
        }
        map
    }

    pub fn class_structure_constants(&self, classes: &[ConjClass]) -> ClassTensor {
        let n = classes.len();
        let class_of = self.class_map(classes);
        let mut a = vec![0i64; n * n * n];
        for k in 0..n {
            let z = classes[k].representative;
            for x in 0..self.elements.len() as u32 {
                let i = class_of[x as usize];
                let y = self.product(self.inverse(x), z);
                let j = class_of[y as usize];
                a[(i * n + j) * n + k] += 1;
            }
        }
        ClassTensor { n, a }
    }

    /// Image class of the class of `g` under `g -> g^m`.
    pub fn power_map(&self, classes: &[ConjClass], m: i64) -> Vec<usize> {
        let class_of = self.class_map(classes);
        classes
            .iter()
            .map(|c| class_of[self.pow(c.representative, m) as usize])
            .collect()
    }

    /// Class ids whose element order is a pi-number.  The identity class is
    /// always included.
    pub fn pi_classes(&self, classes: &[ConjClass], pi: &[u64]) -> Vec<usize> {
        classes
            .iter()
            .filter(|c| is_pi_number(c.element_order, pi))
            .map(|c| c.id)
            .collect()
    }

    /// Closure of a set of element ids as a sorted id vector.
    pub fn closure_of(&self, seed: &[u32]) -> Vec<u32> {
        let mut set: BTreeSet<u32> = seed.iter().copied().collect();
        set.insert(0);
        let mut queue: Vec<u32> = set.iter().copied().collect();
        let mut frontier = 0usize;
        while frontier < queue.len() {
            let x = queue[frontier];
            for s in seed {
                for y in [self.product(*s, x), self.product(x, *s)] {
                    if set.insert(y) {
                        queue.push(y);
                    }
                }
            }
            frontier += 1;
        }
        // seed elements' inverses are powers, so the closure above suffices
        // for finite groups.
        set.into_iter().collect()
    }

    /// Normal closure of a single element's conjugacy class.
    pub fn normal_closure(&self, class: &ConjClass) -> Vec<u32> {
        self.closure_of(&class.members)
    }

    /// `O_pi(G)`: the largest normal pi-subgroup, computed as the subgroup
    /// generated by all pi-elements whose class normal closure is a pi-group.
    pub fn o_pi(&self, classes: &[ConjClass], pi: &[u64]) -> Vec<u32> {
        let mut seeds: Vec<u32> = Vec::new();
        for c in classes {
            if !is_pi_number(c.element_order, pi) {
                continue;
            }
            let nc = self.normal_closure(c);
            if is_pi_number(nc.len() as u64, pi) {
                seeds.extend(&c.members);
            }
        }
        if seeds.is_empty() {
            return vec![0];
        }
        self.closure_of(&seeds)
    }

    /// Builds the quotient `G/N` as the permutation action on left cosets.
    pub fn coset_action_quotient(&self, normal: &[u32], cap: u64) -> Result<PermGroup, GroupError> {
        let nset: BTreeSet<u32> = normal.iter().copied().collect();
        let mut coset_of = vec![usize::MAX; self.elements.len()];
        let mut reps: Vec<u32> = Vec::new();
        for g in 0..self.elements.len() as u32 {
            if coset_of[g as usize] != usize::MAX {
                continue;
            }
            let c = reps.len();
            for &h in &nset {
                coset_of[self.product(g, h) as usize] = c;
            }
            reps.push(g);
        }
        let deg = reps.len();
        let mut images: Vec<Permutation> = Vec::new();
        for s in &self.generators {
            let sid = self.index[s.images()];
            let mut im = vec![0u16; deg];
            for (c, &r) in reps.iter().enumerate() {
                im[c] = coset_of[self.product(sid, r) as usize] as u16;
            }
            images.push(Permutation::from_images(im).expect("coset action is a permutation"));
        }
        PermGroup::from_generators(&images, cap)
    }

    /// True iff iterating `N <- O_pi` then `O_pi'` on successive quotients
    /// reaches the trivial group.
    pub fn is_pi_separable(&self, pi: &[u64], cap: u64) -> Result<bool, GroupError> {
        let pi_prime = |g: &PermGroup| -> Vec<u64> {
            primes_of(g.order()).into_iter().filter(|p| !pi.contains(p)).collect()
        };
        let mut current = self.clone();
        loop {
            if current.order() == 1 {
                return Ok(true);
            }
            let classes = current.conjugacy_classes();
            let npi = current.o_pi(&classes, pi);
            if npi.len() > 1 {
                current = current.coset_action_quotient(&npi, cap)?;
                continue;
            }
            let pp = pi_prime(&current);
            let npp = current.o_pi(&classes, &pp);
            if npp.len() > 1 {
                current = current.coset_action_quotient(&npp, cap)?;
                continue;
            }
            return Ok(false);
        }
    }

    /// Maximum order of an abelian subgroup whose order is a pi-number,
    /// together with the element ids of one subgroup attaining it.
    ///
    /// BFS over centralizer extensions: seed with cyclic subgroups generated
    /// by pi-elements, extend each abelian pi-subgroup by pi-elements of its
    /// centralizer.
    pub fn max_abelian_pi_subgroup(&self, pi: &[u64]) -> (u64, Vec<u32>) {
        let pi_elems: Vec<u32> = (0..self.elements.len() as u32)
            .filter(|&g| is_pi_number(self.elements[g as usize].order(), pi))
            .collect();
        let mut best: (u64, Vec<u32>) = (1, vec![0]);
        let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
        let mut queue: Vec<Vec<u32>> = Vec::new();
        for &g in &pi_elems {
            let cyc = self.closure_of(&[g]);
            if seen.insert(cyc.clone()) {
                queue.push(cyc);
            }
        }
        let mut frontier = 0usize;
        while frontier < queue.len() {
            let sub = queue[frontier].clone();
            frontier += 1;
            if sub.len() as u64 > best.0 {
                best = (sub.len() as u64, sub.clone());
            }
            for &x in &pi_elems {
                if sub.binary_search(&x).is_ok() {
                    continue;
                }
                if !sub.iter().all(|&h| self.product(h, x) == self.product(x, h)) {
                    continue;
                }
                let mut ext: BTreeSet<u32> = sub.iter().copied().collect();
                let xcyc = self.closure_of(&[x]);
                for &h in &sub {
                    for &xk in &xcyc {
                        ext.insert(self.product(h, xk));
                    }
                }
                let ext: Vec<u32> = ext.into_iter().collect();
                if seen.insert(ext.clone()) {
                    queue.push(ext);
                }
            }
        }
        best
    }

    /// Builds the subgroup generated by the given element ids as its own
    /// `PermGroup` (same degree).
    pub fn subgroup(&self, ids: &[u32]) -> Result<PermGroup, GroupError> {
        let gens: Vec<Permutation> = if ids.is_empty() {
            vec![Permutation::identity(self.degree())]
        } else {
            ids.iter().map(|&i| self.elements[i as usize].clone()).collect()
        };
        PermGroup::from_generators(&gens, self.order())
    }

    /// True iff every element of `h` lies in `self`.
    pub fn contains_group(&self, h: &PermGroup) -> bool {
        h.degree() == self.degree() && h.elements.iter().all(|e| self.id_of(e).is_some())
    }

    /// Induces a class function from a subgroup: `mu` is indexed by
    /// `h_classes`, the result by `g_classes`.  The degree scales by the
    /// subgroup index.
    pub fn induce_class_function(
        &self,
        h: &PermGroup,
        h_classes: &[ConjClass],
        mu: &[Cyclotomic],
        g_classes: &[ConjClass],
    ) -> Result<Vec<Cyclotomic>, GroupError> {
        if !self.contains_group(h) {
            return Err(GroupError::NotSubgroup);
        }
        let h_map = h.class_map(h_classes);
        let g_map = self.class_map(g_classes);
        let mut acc = vec![Cyclotomic::zero(); g_classes.len()];
        for x in 0..h.order() as u32 {
            let gid = self.id_of(h.element(x)).unwrap();
            let c = g_map[gid as usize];
            acc[c] = acc[c].add(&mu[h_map[x as usize]]);
        }
        // mu^G(g) = |C_G(g)|/|H| * (sum of mu over K_g intersect H)
        Ok(g_classes
            .iter()
            .map(|c| {
                let scale = crate::rat::Rat::new(
                    (self.order() as i64).into(),
                    ((h.order() * c.size) as i64).into(),
                );
                acc[c.id].scale(&scale)
            })
            .collect())
    }
}

pub fn primes_of(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// True iff every prime factor of `n` lies in `pi` (vacuously true for 1).
pub fn is_pi_number(n: u64, pi: &[u64]) -> bool {
    primes_of(n).iter().all(|p| pi.contains(p))
}

/// Largest divisor of `n` all of whose prime factors lie in `pi`.
pub fn pi_part(mut n: u64, pi: &[u64]) -> u64 {
    let mut part = 1u64;
    for &p in pi {
        while n % p == 0 {
            n /= p;
            part *= p;
        }
    }
    part
}

/// Complement of `pi` inside the primes dividing `n`.
pub fn pi_complement(n: u64, pi: &[u64]) -> Vec<u64> {
    primes_of(n).into_iter().filter(|p| !pi.contains(p)).collect()
}

// ---------------------------------------------------------------------------
// Group catalog
// ---------------------------------------------------------------------------

pub fn catalog_names() -> Vec<String> {
    let mut names: Vec<String> = (1..=24).map(|n| format!("C{n}")).collect();
    for n in ["S3", "S4", "S5", "A4", "A5", "D8", "Q8", "SL(2,3)", "F20", "PSL(2,7)"] {
        names.push(n.to_string());
    }
    names
}

/// Catalog groups used throughout the acceptance suite.
pub fn catalog_group(name: &str, cap: u64) -> Result<PermGroup, GroupError> {
    let canon = name.trim().to_uppercase().replace(' ', "");
    let gens: Vec<Permutation> = if let Some(num) = canon.strip_prefix('C') {
        if let Ok(n) = num.parse::<usize>() {
            if n == 0 || n > 24 {
                return Err(GroupError::UnknownGroup(name.to_string()));
            }
            if n == 1 {
                vec![Permutation::identity(1)]
            } else {
                let cycle: Vec<u16> = (1..n as u16).chain([0]).collect();
                vec![Permutation::from_images(cycle)?]
            }
        } else {
            return Err(GroupError::UnknownGroup(name.to_string()));
        }
    } else {
        match canon.as_str() {
            "S3" => parse_gen_list(&["(1,2,3)", "(1,2)"])?,
            "S4" => parse_gen_list(&["(1,2,3,4)", "(1,2)"])?,
            "S5" => parse_gen_list(&["(1,2,3,4,5)", "(1,2)"])?,
            "A4" => parse_gen_list(&["(1,2,3)", "(2,3,4)"])?,
            "A5" => parse_gen_list(&["(1,2,3,4,5)", "(1,2,3)"])?,
            "D8" => parse_gen_list(&["(1,2,3,4)", "(2,4)"])?,
            "Q8" => quaternion_gens(),
            "SL(2,3)" | "SL23" => sl23_gens(),
            "F20" => parse_gen_list(&["(1,2,3,4,5)", "(2,3,5,4)"])?,
            "PSL(2,7)" | "PSL27" => parse_gen_list(&["(1,2,3,4,5,6,7)", "(1,8)(2,7)(3,4)(5,6)"])?,
            _ => return Err(GroupError::UnknownGroup(name.to_string())),
        }
    };
    let degree = gens.iter().map(|g| g.degree()).max().unwrap_or(1);
    let gens: Vec<Permutation> = gens.into_iter().map(|g| g.extended(degree)).collect();
    PermGroup::from_generators(&gens, cap)
}

/// Parses a semicolon- or whitespace-separated list of cycle expressions,
/// e.g. `(1,2,3)(4,5); (1,2)`.
pub fn parse_generators(text: &str, cap: u64) -> Result<PermGroup, GroupError> {
    let parts: Vec<&str> = text
        .split(';')
        .flat_map(|chunk| chunk.split_whitespace())
        .filter(|s| !s.is_empty())
        .collect();
    if parts.is_empty() {
        return Err(GroupError::Parse("empty generator list".to_string()));
    }
    let mut gens = Vec::new();
    for p in &parts {
        gens.push(Permutation::parse_cycles(p, 0)?);
    }
    let degree = gens.iter().map(|g| g.degree()).max().unwrap();
    let gens: Vec<Permutation> = gens.into_iter().map(|g| g.extended(degree)).collect();
    PermGroup::from_generators(&gens, cap)
}

fn parse_gen_list(texts: &[&str]) -> Result<Vec<Permutation>, GroupError> {
    let mut gens = Vec::new();
    for t in texts {
        gens.push(Permutation::parse_cycles(t, 0)?);
    }
    Ok(gens)
}

/// Q8 in its degree-8 right regular representation.
fn quaternion_gens() -> Vec<Permutation> {
    // elements: (sign, unit) with units e,i,j,k; index = unit*2 + (sign<0)
    // unit products with sign: e=0, i=1, j=2, k=3
    let unit_mul = |a: usize, b: usize| -> (usize, bool) {
        match (a, b) {
            (0, x) => (x, false),
            (x, 0) => (x, false),
            (1, 1) | (2, 2) | (3, 3) => (0, true),
            (1, 2) => (3, false),
            (2, 1) => (3, true),
            (2, 3) => (1, false),
            (3, 2) => (1, true),
            (3, 1) => (2, false),
            (1, 3) => (2, true),
            _ => unreachable!(),
        }
    };
    let idx = |unit: usize, neg: bool| -> u16 { (unit * 2 + neg as usize) as u16 };
    let right_mul = |by: usize| -> Permutation {
        let mut images = vec![0u16; 8];
        for unit in 0..4 {
            for neg in [false, true] {
                let (u, s) = unit_mul(unit, by);
                images[idx(unit, neg) as usize] = idx(u, s ^ neg);
            }
        }
        Permutation::from_images(images).expect("regular representation")
    };
    vec![right_mul(1), right_mul(2)]
}

/// SL(2,3) acting on the 8 nonzero vectors of F_3^2.
fn sl23_gens() -> Vec<Permutation> {
    let vecs: Vec<(i32, i32)> = (0..3)
        .flat_map(|x| (0..3).map(move |y| (x, y)))
        .filter(|&(x, y)| x != 0 || y != 0)
        .collect();
    let pos = |v: (i32, i32)| vecs.iter().position(|&w| w == v).unwrap() as u16;
    let act = |m: [[i32; 2]; 2]| -> Permutation {
        let images: Vec<u16> = vecs
            .iter()
            .map(|&(x, y)| {
                let nx = (m[0][0] * x + m[0][1] * y).rem_euclid(3);
                let ny = (m[1][0] * x + m[1][1] * y).rem_euclid(3);
                pos((nx, ny))
            })
            .collect();
        Permutation::from_images(images).expect("linear action")
    };
    vec![act([[1, 1], [0, 1]]), act([[0, -1], [1, 0]])]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> PermGroup {
        catalog_group("S3", DEFAULT_CAP).unwrap()
    }

    #[test]
    fn s3_order_and_classes() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert_eq!(g.exponent(), 6);
        let classes = g.conjugacy_classes();
        assert_eq!(classes.len(), 3);
        let sizes: Vec<u64> = classes.iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        assert_eq!(classes[0].element_order, 1);
        assert_eq!(classes[1].element_order, 2);
        assert_eq!(classes[2].element_order, 3);
    }

    #[test]
    fn trivial_group() {
        let g = catalog_group("C1", DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.conjugacy_classes().len(), 1);
    }

    #[test]
    fn q8_order_exponent() {
        let g = catalog_group("Q8", DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.exponent(), 4);
        assert_eq!(g.conjugacy_classes().len(), 5);
    }

    #[test]
    fn catalog_orders() {
        for (name, order) in [
            ("S4", 24),
            ("S5", 120),
            ("A4", 12),
            ("A5", 60),
            ("D8", 8),
            ("SL(2,3)", 24),
            ("F20", 20),
            ("PSL(2,7)", 168),
            ("C12", 12),
        ] {
            let g = catalog_group(name, DEFAULT_CAP).unwrap();
            assert_eq!(g.order(), order, "{name}");
        }
    }

    #[test]
    fn cap_exceeded() {
        assert_eq!(
            catalog_group("S5", 50).unwrap_err(),
            GroupError::CapExceeded { cap: 50 }
        );
    }

    #[test]
    fn s4_has_five_classes() {
        let g = catalog_group("S4", DEFAULT_CAP).unwrap();
        assert_eq!(g.conjugacy_classes().len(), 5);
    }

    #[test]
    fn class_equation() {
        for name in ["S3", "S4", "A5", "Q8", "D8", "PSL(2,7)"] {
            let g = catalog_group(name, DEFAULT_CAP).unwrap();
            let classes = g.conjugacy_classes();
            let total: u64 = classes.iter().map(|c| c.size).sum();
            assert_eq!(total, g.order(), "{name}");
            for c in &classes {
                assert_eq!(g.order() % c.size, 0, "{name} class size divides order");
            }
        }
    }

    #[test]
    fn s3_structure_constants() {
        let g = s3();
        let classes = g.conjugacy_classes();
        let t = g.class_structure_constants(&classes);
        // K_2 * K_2 = 3 K_1 + 3 K_3 (transpositions squared)
        assert_eq!(t.at(1, 1, 0), 3);
        assert_eq!(t.at(1, 1, 1), 0);
        assert_eq!(t.at(1, 1, 2), 3);
        // identity class is the algebra identity
        for j in 0..3 {
            for k in 0..3 {
                assert_eq!(t.at(0, j, k), i64::from(j == k));
            }
        }
        // counting identity for (2,2)
        let total: i64 = (0..3).map(|k| t.at(1, 1, k) * classes[k].size as i64).sum();
        assert_eq!(total, 9);
    }

    #[test]
    fn tensor_invariants_all_catalog() {
        for name in ["S3", "S4", "A4", "Q8", "F20"] {
            let g = catalog_group(name, DEFAULT_CAP).unwrap();
            let classes = g.conjugacy_classes();
            let t = g.class_structure_constants(&classes);
            let n = classes.len();
            for i in 0..n {
                for j in 0..n {
                    let mut tot = 0i64;
                    for k in 0..n {
                        assert_eq!(t.at(i, j, k), t.at(j, i, k), "{name} symmetry");
                        tot += t.at(i, j, k) * classes[k].size as i64;
                    }
                    assert_eq!(
                        tot,
                        (classes[i].size * classes[j].size) as i64,
                        "{name} counting identity"
                    );
                }
            }
        }
    }

    #[test]
    fn power_map_s3() {
        let g = s3();
        let classes = g.conjugacy_classes();
        let pm2 = g.power_map(&classes, 2);
        assert_eq!(pm2, vec![0, 0, 2]);
        let pm1 = g.power_map(&classes, 1);
        assert_eq!(pm1, vec![0, 1, 2]);
    }

    #[test]
    fn pi_classes_examples() {
        let g = s3();
        let classes = g.conjugacy_classes();
        assert_eq!(g.pi_classes(&classes, &[3]), vec![0, 2]);
        assert_eq!(g.pi_classes(&classes, &[2, 3]), vec![0, 1, 2]);
        let s4 = catalog_group("S4", DEFAULT_CAP).unwrap();
        let c4 = s4.conjugacy_classes();
        assert_eq!(s4.pi_classes(&c4, &[3]).len(), 2);
    }

    #[test]
    fn o_pi_s3() {
        let g = s3();
        let classes = g.conjugacy_classes();
        assert_eq!(g.o_pi(&classes, &[3]).len(), 3);
        assert_eq!(g.o_pi(&classes, &[2]).len(), 1);
    }

    /// Oracle: maximum over all normal pi-subgroups, with the normal
    /// subgroup lattice generated by joins of class normal closures.
    fn o_pi_oracle(g: &PermGroup, pi: &[u64]) -> usize {
        let classes = g.conjugacy_classes();
        let mut normals: BTreeSet<Vec<u32>> = BTreeSet::new();
        for c in &classes {
            normals.insert(g.normal_closure(c));
        }
        loop {
            let snapshot: Vec<Vec<u32>> = normals.iter().cloned().collect();
            let mut grew = false;
            for a in &snapshot {
                for b in &snapshot {
                    let joined: Vec<u32> = {
                        let mut seed: Vec<u32> = a.clone();
                        seed.extend(b);
                        g.closure_of(&seed)
                    };
                    if normals.insert(joined) {
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        normals
            .iter()
            .filter(|n| is_pi_number(n.len() as u64, pi))
            .map(|n| n.len())
            .max()
            .unwrap_or(1)
    }

    #[test]
    fn o_pi_matches_oracle() {
        for name in ["S3", "S4", "A4", "A5", "Q8", "D8", "SL(2,3)", "F20", "C12", "PSL(2,7)"] {
            let g = catalog_group(name, DEFAULT_CAP).unwrap();
            let classes = g.conjugacy_classes();
            for pi in [vec![2], vec![3], vec![5], vec![2, 3], vec![2, 5], vec![3, 5], vec![7]] {
                let got = g.o_pi(&classes, &pi).len();
                let want = o_pi_oracle(&g, &pi);
                assert_eq!(got, want, "{name} pi={pi:?}");
            }
        }
    }

    #[test]
    fn pi_separable_examples() {
        let s4 = catalog_group("S4", DEFAULT_CAP).unwrap();
        assert!(s4.is_pi_separable(&[2], DEFAULT_CAP).unwrap());
        let a5 = catalog_group("A5", DEFAULT_CAP).unwrap();
        assert!(!a5.is_pi_separable(&[2], DEFAULT_CAP).unwrap());
        assert!(a5.is_pi_separable(&[2, 3, 5], DEFAULT_CAP).unwrap());
        let psl = catalog_group("PSL(2,7)", DEFAULT_CAP).unwrap();
        assert!(!psl.is_pi_separable(&[2], DEFAULT_CAP).unwrap());
        assert!(!psl.is_pi_separable(&[7], DEFAULT_CAP).unwrap());
        assert!(!psl.is_pi_separable(&[2, 3], DEFAULT_CAP).unwrap());
    }

    /// Oracle: exhaustive subgroup enumeration via BFS over extensions.
    fn max_abelian_oracle(g: &PermGroup, pi: &[u64]) -> u64 {
        let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
        let trivial = vec![0u32];
        seen.insert(trivial.clone());
        let mut queue = vec![trivial];
        let mut best = 1u64;
        let mut frontier = 0;
        while frontier < queue.len() {
            let sub = queue[frontier].clone();
            frontier += 1;
            let abelian = sub
                .iter()
                .all(|&a| sub.iter().all(|&b| g.product(a, b) == g.product(b, a)));
            if abelian && is_pi_number(sub.len() as u64, pi) {
                best = best.max(sub.len() as u64);
            }
            for x in 1..g.order() as u32 {
                if sub.binary_search(&x).is_ok() {
                    continue;
                }
                let mut seed = sub.clone();
                seed.push(x);
                let ext = g.closure_of(&seed);
                if seen.insert(ext.clone()) {
                    queue.push(ext);
                }
            }
        }
        best
    }

    #[test]
    fn max_abelian_examples() {
        let g = s3();
        assert_eq!(g.max_abelian_pi_subgroup(&[2, 3]).0, 3);
        assert_eq!(g.max_abelian_pi_subgroup(&[2]).0, 2);
        let a5 = catalog_group("A5", DEFAULT_CAP).unwrap();
        assert_eq!(a5.max_abelian_pi_subgroup(&[2, 3, 5]).0, 5);
    }

    #[test]
    fn max_abelian_matches_oracle_small() {
        for name in ["S3", "S4", "A4", "Q8", "D8", "SL(2,3)", "F20", "C12"] {
            let g = catalog_group(name, DEFAULT_CAP).unwrap();
            let all = primes_of(g.order());
            for pi in [all.clone(), vec![2], vec![3], vec![5]] {
                let got = g.max_abelian_pi_subgroup(&pi).0;
                let want = max_abelian_oracle(&g, &pi);
                assert_eq!(got, want, "{name} pi={pi:?}");
            }
        }
    }

    #[test]
    fn max_abelian_matches_oracle_larger() {
        for name in ["A5", "S5", "PSL(2,7)"] {
            let g = catalog_group(name, DEFAULT_CAP).unwrap();
            let all = primes_of(g.order());
            let got = g.max_abelian_pi_subgroup(&all).0;
            let want = max_abelian_oracle(&g, &all);
            assert_eq!(got, want, "{name}");
        }
    }

    #[test]
    fn quotient_of_s4_by_v4() {
        let g = catalog_group("S4", DEFAULT_CAP).unwrap();
        let classes = g.conjugacy_classes();
        let v4 = g.o_pi(&classes, &[2]);
        assert_eq!(v4.len(), 4);
        let q = g.coset_action_quotient(&v4, DEFAULT_CAP).unwrap();
        assert_eq!(q.order(), 6);
    }

    #[test]
    fn pi_number_helpers() {
        assert!(is_pi_number(1, &[]));
        assert!(is_pi_number(12, &[2, 3]));
        assert!(!is_pi_number(12, &[2]));
        assert_eq!(pi_part(360, &[2, 3]), 72);
        assert_eq!(pi_complement(360, &[2, 3]), vec![5]);
    }

    #[test]
    fn parse_generator_lists() {
        let g = parse_generators("(1,2,3)(4,5); (1,2)", DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 12); // <(123)(45),(12)> = S3 x C2
        assert!(parse_generators("", DEFAULT_CAP).is_err());
    }
}
