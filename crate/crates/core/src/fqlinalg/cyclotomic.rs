//! Exact arithmetic in cyclotomic fields.
//!
//! An element is stored in the power basis `1, z, ..., z^(phi(n)-1)` of
//! Q(z_n) reduced modulo the cyclotomic polynomial, and is always kept at its
//! minimal conductor `n` (never `2 mod 4`). Two equal numbers therefore have
//! identical representations.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

use super::prime::prime_factors;

type Q = Rational64;

struct FieldData {
    phi: usize,
    /// `reduce[j]` = coefficients of `z^j mod Phi_n` for `0 <= j < n`.
    reduce: Vec<Vec<i64>>,
}

/// Data for recognising elements of Q(z_n) that lie in Q(z_m), `m | n`.
struct Embedding {
    /// Image of the basis of Q(z_m): `phi(n) x phi(m)` integer matrix.
    e: Vec<Vec<i64>>,
    /// Rows of `e` forming an invertible square block.
    rows: Vec<usize>,
    /// Inverse of that block.
    inv: Vec<Vec<Q>>,
}

fn field_cache() -> &'static Mutex<HashMap<u32, Arc<FieldData>>> {
    static C: OnceLock<Mutex<HashMap<u32, Arc<FieldData>>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

fn embed_cache() -> &'static Mutex<HashMap<(u32, u32), Arc<Embedding>>> {
    static C: OnceLock<Mutex<HashMap<(u32, u32), Arc<Embedding>>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, low degree first.
fn cyclotomic_poly(n: u32) -> Vec<i64> {
    // x^n - 1 divided by Phi_d for every proper divisor d
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            p = exact_div(&p, &cyclotomic_poly(d));
        }
    }
    p
}

fn exact_div(a: &[i64], b: &[i64]) -> Vec<i64> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![0i64; a.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db];
        q[i] = c;
        for (j, &bj) in b.iter().enumerate() {
            r[i + j] -= c * bj;
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

fn field_data(n: u32) -> Arc<FieldData> {
    if let Some(d) = field_cache().lock().unwrap().get(&n) {
        return d.clone();
    }
    let phi_poly = cyclotomic_poly(n);
    let phi = phi_poly.len() - 1;
    let mut reduce = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..n {
        reduce.push(cur.clone());
        // multiply by z: shift up and fold the top coefficient back
        let top = cur[phi - 1];
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for i in 0..phi {
                cur[i] -= top * phi_poly[i];
            }
        }
        if phi == 1 {
            // n = 1: z = 1
            cur = vec![1];
        }
    }
    let d = Arc::new(FieldData { phi, reduce });
    field_cache().lock().unwrap().insert(n, d.clone());
    d
}

fn embedding(n: u32, m: u32) -> Arc<Embedding> {
    if let Some(d) = embed_cache().lock().unwrap().get(&(n, m)) {
        return d.clone();
    }
    let fm = field_data(m);
    let fnn = field_data(n);
    let step = (n / m) as usize;
    let mut e = vec![vec![0i64; fm.phi]; fnn.phi];
    for j in 0..fm.phi {
        let col = &fnn.reduce[(j * step) % n as usize];
        for i in 0..fnn.phi {
            e[i][j] = col[i];
        }
    }
    // choose independent rows greedily by elimination on a rational copy
    let mut rows = Vec::new();
    let mut basis: Vec<Vec<Q>> = Vec::new();
    let mut piv: Vec<usize> = Vec::new();
    for (i, row) in e.iter().enumerate() {
        let mut v: Vec<Q> = row.iter().map(|&x| Q::from_integer(x)).collect();
        for (b, &p) in basis.iter().zip(&piv) {
            if !v[p].is_zero() {
                let t = v[p];
                for k in 0..v.len() {
                    v[k] -= t * b[k];
                }
            }
        }
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            let t = v[p];
            for x in v.iter_mut() {
                *x /= t;
            }
            basis.push(v);
            piv.push(p);
            rows.push(i);
            if rows.len() == fm.phi {
                break;
            }
        }
    }
    let block: Vec<Vec<Q>> = rows.iter().map(|&i| e[i].iter().map(|&x| Q::from_integer(x)).collect()).collect();
    let inv = invert(&block);
    let d = Arc::new(Embedding { e, rows, inv });
    embed_cache().lock().unwrap().insert((n, m), d.clone());
    d
}

fn invert(a: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut r = r.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero()).expect("singular embedding block");
        m.swap(p, c);
        let t = m[c][c];
        for x in m[c].iter_mut() {
            *x /= t;
        }
        let pr = m[c].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != c && !row[c].is_zero() {
                let t = row[c];
                for k in 0..2 * n {
                    row[k] -= t * pr[k];
                }
            }
        }
    }
    m.into_iter().map(|r| r[n..].to_vec()).collect()
}

fn normalize_conductor(n: u32) -> u32 {
    if n % 4 == 2 {
        n / 2
    } else {
        n
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    n: u32,
    c: Vec<Q>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::from_rational(Q::zero())
    }
    pub fn one() -> Self {
        Self::from_rational(Q::one())
    }
    pub fn from_int(a: i64) -> Self {
        Self::from_rational(Q::from_integer(a))
    }
    pub fn from_rational(a: Q) -> Self {
        Cyclotomic { n: 1, c: vec![a] }
    }

    /// `z_n^k` where `z_n = exp(2 pi i / n)`.
    pub fn zeta(n: u32, k: i64) -> Self {
        assert!(n > 0);
        if n % 4 == 2 {
            // z_{2m} = -z_m^((m+1)/2) for odd m
            let m = n / 2;
            let base = Self::zeta(m, k.rem_euclid(n as i64) * ((m as i64 + 1) / 2));
            return if k.rem_euclid(2) == 1 { -base } else { base };
        }
        let d = field_data(n);
        let j = k.rem_euclid(n as i64) as usize;
        let c = d.reduce[j].iter().map(|&x| Q::from_integer(x)).collect();
        Cyclotomic { n, c }.reduced()
    }

    /// Builds an element from power-basis coefficients at conductor `n`.
    pub fn from_coeffs(n: u32, coeffs: Vec<Q>) -> Option<Self> {
        if n == 0 {
            return None;
        }
        let n = normalize_conductor(n);
        if field_data(n).phi != coeffs.len() {
            return None;
        }
        Some(Cyclotomic { n, c: coeffs }.reduced())
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }
    pub fn coeffs(&self) -> &[Q] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.n == 1 && self.c[0].is_zero()
    }

    pub fn to_rational(&self) -> Option<Q> {
        (self.n == 1).then(|| self.c[0])
    }

    pub fn to_integer(&self) -> Option<i64> {
        self.to_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    /// Power-basis coefficients at conductor `m` (normalized to `m / 2` when
    /// `m = 2 mod 4`), or `None` if the element does not live there.
    pub fn coeffs_at(&self, m: u32) -> Option<Vec<Q>> {
        let m = normalize_conductor(m);
        (m % self.n == 0).then(|| self.lift(m))
    }

    /// Re-expresses the element at conductor `m`, a multiple of `self.n`.
    fn lift(&self, m: u32) -> Vec<Q> {
        debug_assert_eq!(m % self.n, 0);
        let d = field_data(m);
        let step = (m / self.n) as usize;
        let mut out = vec![Q::zero(); d.phi];
        for (i, &a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (o, &r) in out.iter_mut().zip(&d.reduce[(i * step) % m as usize]) {
                if r != 0 {
                    *o += a * r;
                }
            }
        }
        out
    }

    fn reduced(mut self) -> Self {
        'outer: loop {
            if self.n == 1 {
                return self;
            }
            for p in prime_factors(self.n as u64) {
                let m = normalize_conductor(self.n / p as u32);
                let emb = embedding(self.n, m);
                let c: Vec<Q> = emb
                    .inv
                    .iter()
                    .map(|row| row.iter().zip(&emb.rows).fold(Q::zero(), |s, (&a, &r)| s + a * self.c[r]))
                    .collect();
                let fits = emb
                    .e
                    .iter()
                    .zip(&self.c)
                    .all(|(row, &x)| row.iter().zip(&c).fold(Q::zero(), |s, (&a, &b)| s + b * a) == x);
                if fits {
                    self = Cyclotomic { n: m, c };
                    continue 'outer;
                }
            }
            return self;
        }
    }

    fn binary(&self, o: &Self, f: impl Fn(&[Q], &[Q], u32) -> Vec<Q>) -> Self {
        let n = self.n.lcm(&o.n);
        let a = if self.n == n { self.c.clone() } else { self.lift(n) };
        let b = if o.n == n { o.c.clone() } else { o.lift(n) };
        Cyclotomic { n, c: f(&a, &b, n) }.reduced()
    }

    pub fn scale(&self, q: Q) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Cyclotomic { n: self.n, c: self.c.iter().map(|&x| x * q).collect() }
    }

    /// Image under the Galois automorphism `z -> z^k`, `gcd(k, n) = 1`.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.n as i64;
        assert_eq!(k.gcd(&n), 1, "not a Galois automorphism");
        let d = field_data(self.n);
        let mut out = vec![Q::zero(); d.phi];
        for (i, &a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let j = (i as i64 * k).rem_euclid(n) as usize;
            for (o, &r) in out.iter_mut().zip(&d.reduce[j]) {
                if r != 0 {
                    *o += a * r;
                }
            }
        }
        Cyclotomic { n: self.n, c: out }.reduced()
    }

    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    fn units(&self) -> Vec<i64> {
        let n = self.n as i64;
        (1..n.max(2)).filter(|k| k.gcd(&n) == 1).collect()
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.to_rational() {
            return Some(Self::from_rational(q.recip()));
        }
        // product of the other conjugates, divided by the norm
        let mut rest = Self::one();
        for k in self.units().into_iter().skip(1) {
            rest = &rest * &self.galois(k);
        }
        let norm = (&rest * self).to_rational().expect("norm is rational");
        Some(rest.scale(norm.recip()))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// True iff the characteristic polynomial over Q has integer coefficients.
    pub fn is_algebraic_integer(&self) -> bool {
        // coefficients of prod_k (X - sigma_k(x)), highest first
        let mut poly = vec![Self::one()];
        for k in self.units() {
            let r = self.galois(k);
            let mut next = poly.clone();
            next.push(Self::zero());
            for (i, c) in poly.iter().enumerate() {
                next[i + 1] = &next[i + 1] - &(c * &r);
            }
            poly = next;
        }
        poly.iter().all(|c| c.to_integer().is_some())
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, o: &Cyclotomic) -> Cyclotomic {
        self.binary(o, |a, b, _| a.iter().zip(b).map(|(x, y)| x + y).collect())
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, o: &Cyclotomic) -> Cyclotomic {
        self.binary(o, |a, b, _| a.iter().zip(b).map(|(x, y)| x - y).collect())
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, o: &Cyclotomic) -> Cyclotomic {
        if let Some(q) = self.to_rational() {
            return o.scale(q);
        }
        if let Some(q) = o.to_rational() {
            return self.scale(q);
        }
        self.binary(o, |a, b, n| {
            let d = field_data(n);
            let mut conv = vec![Q::zero(); n as usize];
            for (i, &x) in a.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, &y) in b.iter().enumerate() {
                    if !y.is_zero() {
                        conv[(i + j) % n as usize] += x * y;
                    }
                }
            }
            let mut out = vec![Q::zero(); d.phi];
            for (j, &x) in conv.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (o, &r) in out.iter_mut().zip(&d.reduce[j]) {
                    if r != 0 {
                        *o += x * r;
                    }
                }
            }
            out
        })
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { n: self.n, c: self.c.iter().map(|x| -x).collect() }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, o: Cyclotomic) -> Cyclotomic {
        &self + &o
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, o: Cyclotomic) -> Cyclotomic {
        &self - &o
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, o: Cyclotomic) -> Cyclotomic {
        &self * &o
    }
}

impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A total order used only for canonical sorting: rationals first by value,
/// then by conductor and coefficient vector.
impl Ord for Cyclotomic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| self.c.cmp(&other.c))
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.to_rational() {
            return write!(f, "{q}");
        }
        let mut first = true;
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let sign = if a.is_negative() {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = a.abs();
            let coeff = if mag.is_one() && i > 0 { String::new() } else { mag.to_string() };
            let term = match i {
                0 => String::new(),
                1 => format!("z{}", self.n),
                _ => format!("z{}^{}", self.n, i),
            };
            let sep = if !coeff.is_empty() && !term.is_empty() { "*" } else { "" };
            write!(f, "{sign}{coeff}{sep}{term}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for n in [3u32, 4, 5, 6, 12, 15] {
            let s = (0..n as i64).fold(Cyclotomic::zero(), |acc, k| &acc + &Cyclotomic::zeta(n, k));
            assert!(s.is_zero(), "n = {n}");
        }
        assert_eq!(Cyclotomic::zeta(2, 1), Cyclotomic::from_int(-1));
        assert_eq!(Cyclotomic::zeta(6, 2), Cyclotomic::zeta(3, 1));
    }

    #[test]
    fn conductor_reduction() {
        // z5 + z5^4 generates the real subfield, not Q
        let a = &Cyclotomic::zeta(5, 1) + &Cyclotomic::zeta(5, 4);
        assert_eq!(a.conductor(), 5);
        // (z5 + z5^4)(z5^2 + z5^3) = -1
        let b = &Cyclotomic::zeta(5, 2) + &Cyclotomic::zeta(5, 3);
        assert_eq!((&a * &b).to_integer(), Some(-1));
        // sqrt(-3) = z3 - z3^2 lives at conductor 3 even when built at 12
        let s = &Cyclotomic::zeta(12, 4) - &Cyclotomic::zeta(12, 8);
        assert_eq!(s.conductor(), 3);
        assert_eq!((&s * &s).to_integer(), Some(-3));
    }

    #[test]
    fn inverse_and_integrality() {
        let a = &Cyclotomic::zeta(5, 1) + &Cyclotomic::zeta(5, 4);
        let ai = a.inv().unwrap();
        assert_eq!(&a * &ai, Cyclotomic::one());
        assert!(a.is_algebraic_integer());
        assert!(!a.scale(Q::new(1, 2)).is_algebraic_integer());
        assert_eq!(Cyclotomic::zeta(7, 3).conj(), Cyclotomic::zeta(7, 4));
    }

    proptest! {
        #[test]
        fn rational_round_trip(p in -1000i64..1000, q in 1i64..1000, n in 1u32..40) {
            let r = Cyclotomic::from_rational(Q::new(p, q));
            let z = Cyclotomic::zeta(n, 1);
            let back = &(&r * &z) * &z.inv().unwrap();
            prop_assert_eq!(back.to_rational(), Some(Q::new(p, q)));
        }

        #[test]
        fn add_sub_inverse(a in proptest::collection::vec(-5i64..5, 4), b in proptest::collection::vec(-5i64..5, 4)) {
            let mk = |v: &[i64]| v.iter().enumerate().fold(Cyclotomic::zero(), |acc, (k, &c)| {
                &acc + &Cyclotomic::zeta(12, k as i64).scale(Q::from_integer(c))
            });
            let (x, y) = (mk(&a), mk(&b));
            prop_assert_eq!(&(&x + &y) - &y, x);
        }
    }
}

impl serde::Serialize for Cyclotomic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
