//! Arithmetic modulo an odd prime, used by the character table computation.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

pub fn is_prime(n: u64) -> bool {
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

/// Prime factors of `n` in increasing order, without repetition.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!(is_prime(p) && p < (1 << 31), "modulus must be a prime below 2^31");
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }
    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }
    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }
    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a % self.p) % self.p
    }

    pub fn pow(&self, a: u64, mut k: u64) -> u64 {
        let mut base = a % self.p;
        let mut acc = 1;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }

    pub fn from_i64(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    /// Symmetric representative in `(-p/2, p/2]`.
    pub fn to_i64(&self, a: u64) -> i64 {
        let a = a % self.p;
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    /// Smallest generator of the multiplicative group.
    pub fn generator(&self) -> u64 {
        let n = self.p - 1;
        let fs = prime_factors(n);
        (2..self.p).find(|&g| fs.iter().all(|&q| self.pow(g, n / q) != 1)).unwrap_or(1)
    }

    /// Basis of the right kernel of a dense matrix (rows of `m`), as vectors.
    pub fn nullspace(&self, m: &[Vec<u64>], cols: usize) -> Vec<Vec<u64>> {
        let mut a: Vec<Vec<u64>> = m.to_vec();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..a.len()).find(|&i| a[i][c] != 0) else { continue };
            a.swap(p, r);
            let inv = self.inv(a[r][c]);
            for x in a[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            let pr = a[r].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i != r && row[c] != 0 {
                    let t = row[c];
                    for (x, &y) in row.iter_mut().zip(&pr) {
                        *x = self.sub(*x, self.mul(t, y));
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == a.len() {
                break;
            }
        }
        let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![0; cols];
                v[fc] = 1;
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = self.neg(a[i][fc]);
                }
                v
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(is_prime(31) && is_prime(331) && !is_prime(1) && !is_prime(91));
        assert_eq!(prime_factors(660), vec![2, 3, 5, 11]);
    }

    #[test]
    fn generator_has_full_order() {
        for p in [5u64, 7, 31, 331] {
            let f = PrimeField::new(p);
            let g = f.generator();
            let order = (1..p).find(|&k| f.pow(g, k) == 1).unwrap();
            assert_eq!(order, p - 1);
        }
    }

    #[test]
    fn nullspace_small() {
        let f = PrimeField::new(7);
        let m = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ns = f.nullspace(&m, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let s: u64 = m[0].iter().zip(&v).map(|(a, b)| a * b).sum();
            assert_eq!(s % 7, 0);
        }
    }
}
