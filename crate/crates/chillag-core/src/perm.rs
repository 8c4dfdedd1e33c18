//! Permutations on `0..degree` with cycle-notation parsing.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A permutation given by its image sequence: point `p` maps to `images[p]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u16>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PermError {
    /// The image sequence is not a bijection on `0..degree`.
    InvalidPermutation,
    /// Cycle-notation text failed to parse.
    Parse(String),
}

impl fmt::Display for PermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermError::InvalidPermutation => write!(f, "image list is not a bijection"),
            PermError::Parse(msg) => write!(f, "cycle notation parse error: {msg}"),
        }
    }
}

impl Permutation {
    pub fn from_images(images: Vec<u16>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &p in &images {
            let p = p as usize;
            if p >= n || seen[p] {
                return Err(PermError::InvalidPermutation);
            }
            seen[p] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, p: u16) -> u16 {
        self.images[p as usize]
    }

    /// `self * other` acts as "apply `other` first, then `self`".
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&p| self.images[p as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.images.len()];
        for (p, &q) in self.images.iter().enumerate() {
            inv[q as usize] = p as u16;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(p, &q)| p as u16 == q)
    }

    pub fn order(&self) -> u64 {
        // lcm of cycle lengths
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut ord: u64 = 1;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len: u64 = 0;
            let mut p = start as u16;
            loop {
                seen[p as usize] = true;
                len += 1;
                p = self.apply(p);
                if p as usize == start {
                    break;
                }
            }
            ord = num_integer::lcm(ord, len);
        }
        ord
    }

    pub fn pow(&self, k: i64) -> Permutation {
        let ord = self.order() as i64;
        let mut k = k % ord;
        if k < 0 {
            k += ord;
        }
        let mut acc = Permutation::identity(self.degree());
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = base.compose(&acc);
            }
            base = base.compose(&base.clone());
            k >>= 1;
        }
        acc
    }

    /// Extends the permutation to act on a larger point set, fixing new points.
    pub fn extended(&self, degree: usize) -> Permutation {
        assert!(degree >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() as u16..degree as u16);
        Permutation { images }
    }

    /// Parses cycle notation, e.g. `(1,2,3)(4,5)`.  Points are 1-based in
    /// text and converted to 0-based internally.  `degree` is grown to the
    /// largest point mentioned unless `min_degree` demands more.
    pub fn parse_cycles(text: &str, min_degree: usize) -> Result<Self, PermError> {
        let text = text.trim();
        let mut cycles: Vec<Vec<u16>> = Vec::new();
        let mut max_point = 0usize;
        let mut rest = text;
        if rest.is_empty() || rest == "()" {
            return Ok(Permutation::identity(min_degree.max(1)));
        }
        while !rest.is_empty() {
            let Some(open) = rest.find('(') else {
                if rest.trim().is_empty() {
                    break;
                }
                return Err(PermError::Parse(format!("unexpected text: {rest}")));
            };
            if !rest[..open].trim().is_empty() {
                return Err(PermError::Parse(format!("unexpected text: {}", &rest[..open])));
            }
            let Some(close_rel) = rest[open..].find(')') else {
                return Err(PermError::Parse(String::from("unclosed cycle")));
            };
            let close = open + close_rel;
            let inner = &rest[open + 1..close];
            let mut cycle = Vec::new();
            for tok in inner.split(',') {
                let tok = tok.trim();
                if tok.is_empty() {
                    continue;
                }
                let p: usize = tok
                    .parse()
                    .map_err(|_| PermError::Parse(format!("bad point: {tok}")))?;
                if p == 0 {
                    return Err(PermError::Parse(String::from("points are 1-based")));
                }
                max_point = max_point.max(p);
                cycle.push((p - 1) as u16);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = &rest[close + 1..];
        }
        let degree = max_point.max(min_degree).max(1);
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for cycle in &cycles {
            let mut seen = vec![false; degree];
            for &p in cycle {
                if seen[p as usize] {
                    return Err(PermError::Parse(String::from("repeated point in cycle")));
                }
                seen[p as usize] = true;
            }
            for w in 0..cycle.len() {
                let from = cycle[w];
                let to = cycle[(w + 1) % cycle.len()];
                images[from as usize] = to;
            }
        }
        Permutation::from_images(images)
    }

    /// Prints disjoint-cycle notation with 1-based points; identity is `()`.
    pub fn cycle_string(&self) -> String {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut p = start;
            let mut first = true;
            loop {
                seen[p] = true;
                if !first {
                    out.push(',');
                }
                out.push_str(&format!("{}", p + 1));
                first = false;
                p = self.images[p] as usize;
                if p == start {
                    break;
                }
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}
