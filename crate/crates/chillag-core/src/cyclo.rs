//! Exact arithmetic in cyclotomic fields Q(zeta_e).
//!
//! Elements are kept in a canonical form: coefficients over a Zumbroich-style
//! integral basis of Q(zeta_e) (for each prime power p^v exactly dividing e,
//! one residue layer of exponents is eliminated via the vanishing sum of
//! p-th roots of unity), at the minimal order e (never 2 mod 4, rationals at
//! order 1).  Equality and rationality are therefore syntactic.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rat::{rat, Rat, RatMat};

/// An exact element of Q(zeta_e), canonical (minimal order, basis coeffs).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cyclotomic {
    order: u64,
    coeffs: BTreeMap<u64, Rat>,
}

/// zeta_e -> zeta_e^k with gcd(k, e) = 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GaloisAutomorphism {
    pub order: u64,
    pub k: u64,
}

impl GaloisAutomorphism {
    pub fn new(order: u64, k: u64) -> Self {
        let k = k.rem_euclid(order.max(1));
        assert!(gcd(k.max(1), order) == 1, "k must be coprime to order");
        GaloisAutomorphism { order, k }
    }

    /// All automorphisms of Q(zeta_e) over Q.
    pub fn all(order: u64) -> Vec<GaloisAutomorphism> {
        (1..=order.max(1))
            .filter(|&k| gcd(k, order.max(1)) == 1)
            .map(|k| GaloisAutomorphism { order: order.max(1), k })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rationality {
    Rational(Rat),
    Irrational,
}

fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

fn prime_powers(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut v = 0u32;
            while n % p == 0 {
                n /= p;
                v += 1;
            }
            out.push((p, v));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    // extended euclid; m small
    let (mut t, mut new_t): (i64, i64) = (0, 1);
    let (mut r, mut new_r): (i64, i64) = (m as i64, (a % m) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "not invertible");
    t.rem_euclid(m as i64) as u64
}

struct OrderData {
    /// (p, v, p^v, p^{v-1}, cofactor n/p^v, inverse of cofactor mod p^v)
    local: Vec<(u64, u32, u64, u64, u64, u64)>,
}

impl OrderData {
    fn new(n: u64) -> Self {
        let local = prime_powers(n)
            .into_iter()
            .map(|(p, v)| {
                let pv = p.pow(v);
                let cof = n / pv;
                let inv = mod_inverse(cof % pv, pv);
                (p, v, pv, pv / p, cof, inv)
            })
            .collect();
        OrderData { local }
    }

    fn digit(&self, j: u64, li: usize) -> u64 {
        let (_, _, pv, _, _, inv) = self.local[li];
        j % pv * inv % pv
    }

    /// Index of the first prime whose digit is outside the basis window.
    fn offending_prime(&self, j: u64) -> Option<usize> {
        for (li, &(p, _, _, pv1, _, _)) in self.local.iter().enumerate() {
            let d = self.digit(j, li);
            if p == 2 {
                if pv1 >= 2 && d >= pv1 {
                    return Some(li);
                }
            } else if d < pv1 {
                return Some(li);
            }
        }
        None
    }
}

/// Reduces a coefficient map at order `n` (n not 2 mod 4) to the basis.
fn canon_at_order(n: u64, raw: BTreeMap<u64, Rat>) -> BTreeMap<u64, Rat> {
    debug_assert!(n == 1 || n % 4 != 2);
    if n == 1 {
        let mut total = Rat::zero();
        for (_, c) in raw {
            total += c;
        }
        let mut out = BTreeMap::new();
        if !total.is_zero() {
            out.insert(0, total);
        }
        return out;
    }
    let od = OrderData::new(n);
    let mut map: BTreeMap<u64, Rat> = BTreeMap::new();
    let mut work: Vec<(u64, Rat)> = raw.into_iter().map(|(j, c)| (j % n, c)).collect();
    while let Some((j, c)) = work.pop() {
        if c.is_zero() {
            continue;
        }
        match od.offending_prime(j) {
            None => {
                let slot = map.entry(j).or_insert_with(Rat::zero);
                *slot += c;
                if slot.is_zero() {
                    map.remove(&j);
                }
            }
            Some(li) => {
                let (p, _, pv, pv1, cof, _) = od.local[li];
                if p == 2 {
                    // digit >= 2^{v-1}: zeta^{j} = -zeta^{j - 2^{v-1} * cof}
                    let step = pv1 % pv * cof % n;
                    let j2 = (j + n - step % n) % n;
                    work.push((j2, -c));
                } else {
                    // digit < p^{v-1}: expand via vanishing p-th root sum
                    for t in 1..p {
                        let j2 = (j + t * pv1 % n * cof % n) % n;
                        work.push((j2, -c.clone()));
                    }
                }
            }
        }
    }
    map
}

/// Basis exponents of Q(zeta_n) in ascending order.
fn basis_exponents(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![0];
    }
    let od = OrderData::new(n);
    (0..n).filter(|&j| od.offending_prime(j).is_none()).collect()
}

fn normalize_order(e: u64, terms: BTreeMap<u64, Rat>) -> (u64, BTreeMap<u64, Rat>) {
    let e = e.max(1);
    if e == 1 || e % 4 != 2 {
        let mut m = BTreeMap::new();
        for (j, c) in terms {
            *m.entry(j % e).or_insert_with(Rat::zero) += c;
        }
        return (e, m);
    }
    // e = 2m with m odd: zeta_e^j = (-1)^j * zeta_m^{j * inv(2) mod m}
    let m = e / 2;
    let inv2 = mod_inverse(2 % m, m);
    let mut out: BTreeMap<u64, Rat> = BTreeMap::new();
    for (j, c) in terms {
        let j = j % e;
        let sign = if j % 2 == 1 { -c } else { c };
        let nj = j % m * inv2 % m;
        *out.entry(nj).or_insert_with(Rat::zero) += sign;
    }
    (m.max(1), out)
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            order: 1,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Cyclotomic::from_rat(Rat::one())
    }

    pub fn from_rat(r: Rat) -> Self {
        let mut coeffs = BTreeMap::new();
        if !r.is_zero() {
            coeffs.insert(0, r);
        }
        Cyclotomic { order: 1, coeffs }
    }

    pub fn from_int(n: i64) -> Self {
        Cyclotomic::from_rat(rat(n))
    }

    /// `zeta_e^k`
    pub fn root_of_unity(e: u64, k: u64) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(k % e.max(1), Rat::one());
        Cyclotomic::make(e, terms)
    }

    /// Builds an element of Q(zeta_e) from `(exponent, coefficient)` terms
    /// and puts it in canonical form.
    pub fn make(e: u64, terms: BTreeMap<u64, Rat>) -> Self {
        let (e, terms) = normalize_order(e, terms);
        let coeffs = canon_at_order(e, terms);
        Cyclotomic { order: e, coeffs }.reduced()
    }

    fn reduced(self) -> Self {
        if self.order == 1 {
            return self;
        }
        if self.coeffs.is_empty() {
            return Cyclotomic::zero();
        }
        let e = self.order;
        // precompute all Galois images at order e
        let autos: Vec<u64> = (1..e).filter(|&k| gcd(k, e) == 1).collect();
        let images: Vec<(u64, BTreeMap<u64, Rat>)> = autos
            .iter()
            .map(|&k| {
                let mut m = BTreeMap::new();
                for (&j, c) in &self.coeffs {
                    *m.entry(j * k % e).or_insert_with(Rat::zero) += c.clone();
                }
                (k, canon_at_order(e, m))
            })
            .collect();
        let mut divisors: Vec<u64> = (1..=e).filter(|d| e % d == 0).collect();
        divisors.retain(|&d| d == 1 || d % 4 != 2);
        divisors.sort_unstable();
        for &d in &divisors {
            if d == e {
                return self;
            }
            let fixed = images
                .iter()
                .filter(|(k, _)| k % d == 1 % d)
                .all(|(_, img)| *img == self.coeffs);
            if !fixed {
                continue;
            }
            // Element lies in Q(zeta_d): solve for its coordinates there.
            let be = basis_exponents(e);
            let bd = basis_exponents(d);
            let col_index: BTreeMap<u64, usize> =
                be.iter().enumerate().map(|(i, &j)| (j, i)).collect();
            let mut lift = RatMat::zero(be.len(), bd.len());
            for (c, &i) in bd.iter().enumerate() {
                let mut m = BTreeMap::new();
                m.insert(i * (e / d) % e, Rat::one());
                for (j, coeff) in canon_at_order(e, m) {
                    *lift.at_mut(col_index[&j], c) = coeff;
                }
            }
            let rhs: Vec<Rat> = be
                .iter()
                .map(|j| self.coeffs.get(j).cloned().unwrap_or_else(Rat::zero))
                .collect();
            let sol = lift.solve(&rhs).expect("Galois-fixed element must descend");
            let mut coeffs = BTreeMap::new();
            for (c, &i) in bd.iter().enumerate() {
                if !sol[c].is_zero() {
                    coeffs.insert(i, sol[c].clone());
                }
            }
            return Cyclotomic { order: d, coeffs };
        }
        self
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &BTreeMap<u64, Rat> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn lifted_terms(&self, e: u64) -> BTreeMap<u64, Rat> {
        let f = e / self.order;
        self.coeffs.iter().map(|(&j, c)| (j * f, c.clone())).collect()
    }

    /// Canonical rational coordinates of the value inside `Q(zeta_e)`;
    /// `e` must be a multiple of the order (and never 2 mod 4, which holds
    /// for any lcm of canonical orders).
    pub fn coordinates_at_order(&self, e: u64) -> BTreeMap<u64, Rat> {
        debug_assert!(e % self.order == 0 && (e == 1 || e % 4 != 2));
        canon_at_order(e, self.lifted_terms(e))
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        let e = num_integer::lcm(self.order, other.order);
        let mut terms = self.lifted_terms(e);
        for (j, c) in other.lifted_terms(e) {
            *terms.entry(j).or_insert_with(Rat::zero) += c;
        }
        let coeffs = canon_at_order(e, terms);
        Cyclotomic { order: e, coeffs }.reduced()
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(&j, c)| (j, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        let e = num_integer::lcm(self.order, other.order);
        let a = self.lifted_terms(e);
        let b = other.lifted_terms(e);
        let mut terms: BTreeMap<u64, Rat> = BTreeMap::new();
        for (&ja, ca) in &a {
            for (&jb, cb) in &b {
                *terms.entry((ja + jb) % e).or_insert_with(Rat::zero) += ca * cb;
            }
        }
        let coeffs = canon_at_order(e, terms);
        Cyclotomic { order: e, coeffs }.reduced()
    }

    pub fn scale(&self, r: &Rat) -> Cyclotomic {
        if r.is_zero() {
            return Cyclotomic::zero();
        }
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(&j, c)| (j, c * r)).collect(),
        }
    }

    /// Applies `zeta -> zeta^k`.  The automorphism's order must be a
    /// multiple of this element's order (lift as needed by the caller);
    /// automorphisms of a larger field restrict to the subfield.
    pub fn galois(&self, sigma: &GaloisAutomorphism) -> Cyclotomic {
        let e = self.order;
        if e == 1 {
            return self.clone();
        }
        debug_assert!(
            sigma.order % e == 0 || gcd(sigma.k % e, e) == 1,
            "automorphism does not restrict"
        );
        let k = sigma.k % e;
        assert!(gcd(k, e) == 1, "automorphism does not restrict to Q(zeta_{e})");
        let mut terms = BTreeMap::new();
        for (&j, c) in &self.coeffs {
            *terms.entry(j * k % e).or_insert_with(Rat::zero) += c.clone();
        }
        let coeffs = canon_at_order(e, terms);
        Cyclotomic { order: e, coeffs }.reduced()
    }

    /// Complex conjugation.
    pub fn conj(&self) -> Cyclotomic {
        if self.order == 1 {
            return self.clone();
        }
        self.galois(&GaloisAutomorphism::new(self.order, self.order - 1))
    }

    pub fn rationality(&self) -> Rationality {
        if self.order == 1 {
            Rationality::Rational(self.coeffs.get(&0).cloned().unwrap_or_else(Rat::zero))
        } else {
            Rationality::Irrational
        }
    }

    pub fn as_rat(&self) -> Option<Rat> {
        match self.rationality() {
            Rationality::Rational(r) => Some(r),
            Rationality::Irrational => None,
        }
    }

    pub fn is_rational_integer(&self) -> bool {
        matches!(self.rationality(), Rationality::Rational(r) if r.is_integer())
    }

    /// Embedding zeta_e -> exp(2 pi i / e); returns (re, im).
    pub fn embed(&self) -> (f64, f64) {
        let e = self.order as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (&j, c) in &self.coeffs {
            let c = rat_to_f64(c);
            let theta = core::f64::consts::TAU * (j as f64) / e;
            re += c * libm::cos(theta);
            im += c * libm::sin(theta);
        }
        (re, im)
    }

    // ----- E(n,k) literal grammar -------------------------------------

    /// Parses the textual grammar used by table files: sums of terms
    /// `c*E(n,k)`, `E(n,k)`, or bare rationals `p/q`.
    pub fn parse(text: &str) -> Result<Cyclotomic, String> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err("empty cyclotomic literal".to_string());
        }
        let mut acc = Cyclotomic::zero();
        let bytes = s.as_bytes();
        let mut i = 0usize;
        let mut sign = 1i64;
        // leading sign
        if bytes[0] == b'+' || bytes[0] == b'-' {
            sign = if bytes[0] == b'-' { -1 } else { 1 };
            i = 1;
        }
        while i < bytes.len() {
            // parse one term
            let start = i;
            let mut coeff = Rat::one();
            let mut has_coeff = false;
            // number?
            let num_end = {
                let mut j = i;
                while j < bytes.len() && (bytes[j].is_ascii_digit() || bytes[j] == b'/') {
                    j += 1;
                }
                j
            };
            if num_end > i {
                let tok = &s[i..num_end];
                coeff = parse_rat(tok).ok_or_else(|| format!("bad rational: {tok}"))?;
                has_coeff = true;
                i = num_end;
            }
            let mut term = if i < bytes.len() && (bytes[i] == b'E' || bytes[i] == b'*') {
                if bytes[i] == b'*' {
                    i += 1;
                }
                if i >= bytes.len() || bytes[i] != b'E' {
                    return Err(format!("expected E(...) at: {}", &s[i.min(s.len())..]));
                }
                i += 1;
                if i >= bytes.len() || bytes[i] != b'(' {
                    return Err("expected ( after E".to_string());
                }
                i += 1;
                let comma = s[i..].find(',').ok_or("expected , in E(n,k)")? + i;
                let close = s[i..].find(')').ok_or("expected ) in E(n,k)")? + i;
                if comma >= close {
                    return Err("malformed E(n,k)".to_string());
                }
                let n: u64 = s[i..comma].parse().map_err(|_| "bad n in E(n,k)")?;
                let k: u64 = s[comma + 1..close].parse().map_err(|_| "bad k in E(n,k)")?;
                if n == 0 {
                    return Err("E(0,k) is invalid".to_string());
                }
                i = close + 1;
                Cyclotomic::root_of_unity(n, k).scale(&coeff)
            } else if has_coeff {
                Cyclotomic::from_rat(coeff)
            } else {
                return Err(format!("unexpected character at: {}", &s[start..]));
            };
            if sign < 0 {
                term = term.neg();
            }
            acc = acc.add(&term);
            if i < bytes.len() {
                sign = match bytes[i] {
                    b'+' => 1,
                    b'-' => -1,
                    _ => return Err(format!("expected + or - at: {}", &s[i..])),
                };
                i += 1;
                if i >= bytes.len() {
                    return Err("dangling sign".to_string());
                }
            }
        }
        Ok(acc)
    }

    /// Prints the canonical form in the `E(n,k)` grammar; rationals print
    /// as `p/q` in lowest terms.
    pub fn literal(&self) -> String {
        if self.order == 1 {
            return fmt_rat(&self.coeffs.get(&0).cloned().unwrap_or_else(Rat::zero));
        }
        let mut out = String::new();
        for (&j, c) in &self.coeffs {
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            if !mag.is_one() {
                out.push_str(&fmt_rat(&mag));
                out.push('*');
            }
            out.push_str(&format!("E({},{})", self.order, j));
        }
        out
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.literal())
    }
}

fn parse_rat(tok: &str) -> Option<Rat> {
    if let Some((n, d)) = tok.split_once('/') {
        let n: i64 = n.parse().ok()?;
        let d: i64 = d.parse().ok()?;
        if d == 0 {
            return None;
        }
        Some(crate::rat::ratio(n, d))
    } else {
        let n: i64 = tok.parse().ok()?;
        Some(rat(n))
    }
}

pub fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    // adequate for reporting; exact paths never round-trip through floats
    let n = r.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
    let d = r.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
    n / d
}
