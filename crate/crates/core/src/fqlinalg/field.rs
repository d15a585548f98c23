//! Finite fields GF(2^e) backed by log/antilog tables.
//!
//! Elements are the residues of GF(2)[x] modulo the Conway polynomial of
//! degree `e`, packed into the low `e` bits of a `u32`. The class of `x` is
//! a primitive element, which fixes the root-of-unity convention used when
//! eigenvalues are lifted to characteristic zero.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};

/// Largest supported extension degree.
pub const MAX_DEGREE: u32 = 20;

/// Conway polynomials over GF(2), bit `i` set for the coefficient of `x^i`.
const CONWAY: [u32; 21] = [
    0, 0x3, 0x7, 0xb, 0x13, 0x25, 0x5b, 0x83, 0x11d, 0x211, 0x46f, 0x805, 0x10eb, 0x201b, 0x40a9, 0x8035, 0x1002d,
    0x20009, 0x41403, 0x80027, 0x1006f3,
];

pub type FieldElem = u32;

struct Tables {
    e: u32,
    modulus: u32,
    size: u32,
    /// `log[a]` for `a != 0`; `log[0]` is unused.
    log: Vec<u32>,
    /// `exp[i] = alpha^i` for `0 <= i < 2(q-1)`.
    exp: Vec<u32>,
}

/// Handle to GF(2^e). Cloning is cheap; equal degree means equal field.
#[derive(Clone)]
pub struct Gf2e(Arc<Tables>);

impl PartialEq for Gf2e {
    fn eq(&self, other: &Self) -> bool {
        self.0.e == other.0.e
    }
}
impl Eq for Gf2e {}

impl fmt::Debug for Gf2e {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{})", self.0.e)
    }
}

fn cache() -> &'static Mutex<HashMap<u32, Gf2e>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Gf2e>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

impl Gf2e {
    pub fn new(e: u32) -> Result<Self> {
        if e == 0 || e > MAX_DEGREE {
            return Err(Error::FieldUnsupported { degree: e });
        }
        let mut guard = cache().lock().expect("field cache poisoned");
        if let Some(f) = guard.get(&e) {
            return Ok(f.clone());
        }
        let f = Gf2e(Arc::new(Self::build(e)));
        guard.insert(e, f.clone());
        Ok(f)
    }

    /// Smallest field GF(2^e) containing the `m`-th roots of unity, `m` odd.
    pub fn splitting_for_odd(m: u64) -> Result<Self> {
        assert!(m % 2 == 1, "odd modulus expected");
        let mut e = 1u32;
        loop {
            if ((1u64 << e) - 1) % m == 0 {
                return Self::new(e);
            }
            e += 1;
            if e > MAX_DEGREE {
                return Err(Error::FieldUnsupported { degree: e });
            }
        }
    }

    fn build(e: u32) -> Tables {
        let modulus = CONWAY[e as usize];
        let size = 1u32 << e;
        let n = (size - 1) as usize;
        let mut exp = vec![0u32; 2 * n.max(1)];
        let mut log = vec![0u32; size as usize];
        let mut x: u32 = 1;
        for i in 0..n {
            exp[i] = x;
            log[x as usize] = i as u32;
            x <<= 1;
            if x & size != 0 {
                x ^= modulus;
            }
        }
        assert_eq!(x, 1, "modulus of degree {e} is not primitive");
        for i in n..2 * n {
            exp[i] = exp[i - n];
        }
        Tables { e, modulus, size, log, exp }
    }

    pub fn degree(&self) -> u32 {
        self.0.e
    }

    /// Field size `q = 2^e`.
    pub fn size(&self) -> u32 {
        self.0.size
    }

    pub fn modulus(&self) -> u32 {
        self.0.modulus
    }

    /// Order of the multiplicative group.
    pub fn unit_order(&self) -> u32 {
        self.0.size - 1
    }

    /// The fixed primitive element (class of `x`).
    pub fn primitive(&self) -> FieldElem {
        self.0.exp[1]
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        a ^ b
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a == 0 || b == 0 {
            0
        } else {
            let t = &self.0;
            t.exp[(t.log[a as usize] + t.log[b as usize]) as usize]
        }
    }

    #[inline]
    pub fn inv(&self, a: FieldElem) -> FieldElem {
        assert!(a != 0, "inverse of zero");
        let t = &self.0;
        let n = t.size - 1;
        t.exp[((n - t.log[a as usize]) % n.max(1)) as usize]
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.mul(a, self.inv(b))
    }

    /// Discrete logarithm to the base of the primitive element.
    pub fn log(&self, a: FieldElem) -> u32 {
        assert!(a != 0, "log of zero");
        self.0.log[a as usize]
    }

    /// `alpha^k` for the primitive element `alpha`.
    pub fn alpha_pow(&self, k: u64) -> FieldElem {
        let n = (self.0.size - 1) as u64;
        self.0.exp[(k % n) as usize]
    }

    pub fn pow(&self, a: FieldElem, k: u64) -> FieldElem {
        if k == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = (self.0.size - 1) as u64;
        self.0.exp[((self.0.log[a as usize] as u64 * (k % n)) % n) as usize]
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: FieldElem) -> u64 {
        let n = self.unit_order() as u64;
        let l = self.log(a) as u64;
        n / num_integer::gcd(n, l)
    }

    /// The canonical primitive `m`-th root of unity `alpha^((q-1)/m)`.
    pub fn root_of_unity(&self, m: u64) -> Option<FieldElem> {
        let n = self.unit_order() as u64;
        if m == 0 || n % m != 0 {
            return None;
        }
        Some(self.alpha_pow(n / m))
    }

    pub fn contains(&self, a: FieldElem) -> bool {
        a < self.0.size
    }

    /// `dst += a * src`, entrywise.
    #[inline]
    pub fn axpy(&self, dst: &mut [FieldElem], a: FieldElem, src: &[FieldElem]) {
        if a == 0 {
            return;
        }
        let t = &self.0;
        if a == 1 {
            for (d, &s) in dst.iter_mut().zip(src) {
                *d ^= s;
            }
            return;
        }
        let la = t.log[a as usize];
        for (d, &s) in dst.iter_mut().zip(src) {
            if s != 0 {
                *d ^= t.exp[(la + t.log[s as usize]) as usize];
            }
        }
    }

    /// `v *= a`, entrywise.
    pub fn scale_in_place(&self, v: &mut [FieldElem], a: FieldElem) {
        if a == 1 {
            return;
        }
        for x in v.iter_mut() {
            *x = self.mul(*x, a);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conway_polynomials_are_primitive() {
        for e in 1..=MAX_DEGREE {
            let f = Gf2e::new(e).unwrap();
            assert_eq!(f.order(f.primitive()), f.unit_order() as u64, "e = {e}");
        }
    }

    #[test]
    fn field_axioms_small() {
        let f = Gf2e::new(4).unwrap();
        for a in 0..16 {
            for b in 0..16 {
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..16 {
                    assert_eq!(f.mul(a, b ^ c), f.mul(a, b) ^ f.mul(a, c));
                }
            }
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
                // element order divides q - 1
                assert_eq!(15 % f.order(a), 0);
            }
        }
    }

    #[test]
    fn splitting_field_degrees() {
        assert_eq!(Gf2e::splitting_for_odd(1).unwrap().degree(), 1);
        assert_eq!(Gf2e::splitting_for_odd(3).unwrap().degree(), 2);
        assert_eq!(Gf2e::splitting_for_odd(15).unwrap().degree(), 4);
        assert_eq!(Gf2e::splitting_for_odd(165).unwrap().degree(), 20);
    }

    #[test]
    fn gf2_is_trivial_unit_group() {
        let f = Gf2e::new(1).unwrap();
        assert_eq!(f.primitive(), 1);
        assert_eq!(f.mul(1, 1), 1);
        assert_eq!(f.inv(1), 1);
    }
}
