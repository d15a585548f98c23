//! Univariate polynomials over GF(2^e) and their factorization.

use rand::Rng;

use super::field::{FieldElem, Gf2e};

/// Coefficients low degree first, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly(Vec<FieldElem>);

impl Poly {
    pub fn zero() -> Self {
        Poly(vec![])
    }
    pub fn one() -> Self {
        Poly(vec![1])
    }
    pub fn x() -> Self {
        Poly(vec![0, 1])
    }
    pub fn constant(a: FieldElem) -> Self {
        Poly::from_coeffs(vec![a])
    }
    /// `x - a` (equal to `x + a` in characteristic 2).
    pub fn linear(a: FieldElem) -> Self {
        Poly(vec![a, 1])
    }

    pub fn from_coeffs(mut c: Vec<FieldElem>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        Poly(c)
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> FieldElem {
        self.0.last().copied().unwrap_or(0)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        let c = (0..n).map(|i| self.0.get(i).copied().unwrap_or(0) ^ o.0.get(i).copied().unwrap_or(0)).collect();
        Poly::from_coeffs(c)
    }

    pub fn scale(&self, f: &Gf2e, a: FieldElem) -> Poly {
        if a == 0 {
            return Poly::zero();
        }
        Poly(self.0.iter().map(|&c| f.mul(c, a)).collect())
    }

    pub fn mul(&self, f: &Gf2e, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![0; self.0.len() + o.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a != 0 {
                f.axpy(&mut c[i..i + o.0.len()], a, &o.0);
            }
        }
        Poly::from_coeffs(c)
    }

    pub fn monic(&self, f: &Gf2e) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(f, f.inv(self.lead()))
    }

    pub fn divrem(&self, f: &Gf2e, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.0.len() - 1;
        if self.0.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let inv = f.inv(d.lead());
        let mut r = self.0.clone();
        let mut q = vec![0; r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = r[i + dd];
            if c == 0 {
                continue;
            }
            let t = f.mul(c, inv);
            q[i] = t;
            f.axpy(&mut r[i..i + dd + 1], t, &d.0);
        }
        r.truncate(dd);
        (Poly::from_coeffs(q), Poly::from_coeffs(r))
    }

    pub fn rem(&self, f: &Gf2e, d: &Poly) -> Poly {
        self.divrem(f, d).1
    }

    /// Monic gcd.
    pub fn gcd(&self, f: &Gf2e, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(f, &b);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    pub fn derivative(&self) -> Poly {
        // char 2: only odd-degree terms survive, with coefficient 1 * c
        let c = (1..self.0.len()).map(|i| if i % 2 == 1 { self.0[i] } else { 0 }).collect();
        Poly::from_coeffs(c)
    }

    pub fn eval(&self, f: &Gf2e, x: FieldElem) -> FieldElem {
        self.0.iter().rev().fold(0, |acc, &c| f.mul(acc, x) ^ c)
    }

    /// `self^k mod m`.
    pub fn powmod(&self, f: &Gf2e, mut k: u128, m: &Poly) -> Poly {
        let mut base = self.rem(f, m);
        let mut acc = Poly::one().rem(f, m);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(f, &base).rem(f, m);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(f, &base).rem(f, m);
            }
        }
        acc
    }

    /// `self^(2^k) mod m`, by repeated squaring.
    fn frobenius_pow(&self, f: &Gf2e, k: u64, m: &Poly) -> Poly {
        let mut p = self.rem(f, m);
        for _ in 0..k {
            p = p.mul(f, &p).rem(f, m);
        }
        p
    }

    /// The square root of a polynomial that is a perfect square (all odd
    /// coefficients zero). Coefficient roots are taken with `a -> a^(q/2)`.
    fn sqrt(&self, f: &Gf2e) -> Poly {
        let half = (f.size() / 2) as u64;
        let c = self.0.iter().step_by(2).map(|&a| f.pow(a, half)).collect();
        Poly::from_coeffs(c)
    }

    /// Distinct monic irreducible factors with multiplicities, sorted.
    pub fn factor<R: Rng + ?Sized>(&self, f: &Gf2e, rng: &mut R) -> Vec<(Poly, usize)> {
        assert!(!self.is_zero());
        let mut out: Vec<(Poly, usize)> = Vec::new();
        for (sq, mult) in self.monic(f).squarefree(f) {
            for (g, d) in sq.distinct_degree(f) {
                for irr in g.equal_degree(f, d, rng) {
                    out.push((irr, mult));
                }
            }
        }
        out.sort();
        out
    }

    /// Squarefree decomposition of a monic polynomial: pairs `(g, i)` with
    /// `self = prod g^i`, each `g` squarefree.
    fn squarefree(&self, f: &Gf2e) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        if self.degree() == Some(0) {
            return out;
        }
        let d = self.derivative();
        if d.is_zero() {
            for (g, i) in self.sqrt(f).squarefree(f) {
                out.push((g, 2 * i));
            }
            return out;
        }
        let mut c = self.gcd(f, &d);
        let mut w = self.divrem(f, &c).0;
        let mut i = 1;
        while w.degree() != Some(0) {
            let y = w.gcd(f, &c);
            let z = w.divrem(f, &y).0;
            if z.degree() != Some(0) {
                out.push((z.monic(f), i));
            }
            i += 1;
            w = y;
            c = c.divrem(f, &w).0;
        }
        if c.degree() != Some(0) {
            for (g, j) in c.sqrt(f).squarefree(f) {
                out.push((g, 2 * j));
            }
        }
        // merge equal factors that arrive from both routes
        out.sort();
        let mut merged: Vec<(Poly, usize)> = Vec::new();
        for (g, i) in out {
            match merged.iter_mut().find(|(h, _)| *h == g) {
                Some(e) => e.1 += i,
                None => merged.push((g, i)),
            }
        }
        merged
    }

    /// Distinct-degree factorization of a monic squarefree polynomial.
    fn distinct_degree(&self, f: &Gf2e) -> Vec<(Poly, usize)> {
        let e = f.degree() as u64;
        let mut out = Vec::new();
        let mut rest = self.clone();
        let mut h = Poly::x();
        let mut d = 0;
        while let Some(deg) = rest.degree() {
            if deg < 2 * (d + 1) {
                if deg > 0 {
                    out.push((rest.clone(), deg));
                }
                break;
            }
            d += 1;
            h = h.frobenius_pow(f, e, &rest);
            let g = h.add(&Poly::x()).gcd(f, &rest);
            if g.degree() != Some(0) {
                rest = rest.divrem(f, &g).0;
                h = h.rem(f, &rest);
                out.push((g, d));
            }
        }
        out
    }

    /// Splits a monic squarefree product of degree-`d` irreducibles.
    fn equal_degree<R: Rng + ?Sized>(&self, f: &Gf2e, d: usize, rng: &mut R) -> Vec<Poly> {
        let n = self.degree().unwrap();
        if n == d {
            return vec![self.clone()];
        }
        let ed = f.degree() as usize * d;
        loop {
            let a = Poly::from_coeffs((0..n).map(|_| rng.gen_range(0..f.size())).collect());
            if a.degree().unwrap_or(0) == 0 {
                continue;
            }
            // trace map a + a^2 + ... + a^(2^(ed-1))
            let mut t = a.rem(f, self);
            let mut acc = t.clone();
            for _ in 1..ed {
                t = t.mul(f, &t).rem(f, self);
                acc = acc.add(&t);
            }
            let g = acc.gcd(f, self);
            let gd = g.degree().unwrap_or(0);
            if gd > 0 && gd < n {
                let h = self.divrem(f, &g).0.monic(f);
                let mut out = g.equal_degree(f, d, rng);
                out.extend(h.equal_degree(f, d, rng));
                return out;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn expand(f: &Gf2e, fs: &[(Poly, usize)]) -> Poly {
        let mut p = Poly::one();
        for (g, m) in fs {
            for _ in 0..*m {
                p = p.mul(f, g);
            }
        }
        p
    }

    #[test]
    fn divrem_roundtrip() {
        let f = Gf2e::new(3).unwrap();
        let a = Poly::from_coeffs(vec![1, 2, 3, 4, 5, 6, 7]);
        let b = Poly::from_coeffs(vec![3, 0, 1]);
        let (q, r) = a.divrem(&f, &b);
        assert_eq!(q.mul(&f, &b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 2);
    }

    #[test]
    fn factor_x15_minus_1_over_gf2() {
        // x^15 - 1 splits over GF(2) as 1 + 1 + 2 + 4 + 4 + 4 (degrees)
        let f = Gf2e::new(1).unwrap();
        let mut c = vec![0; 16];
        c[0] = 1;
        c[15] = 1;
        let p = Poly::from_coeffs(c);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let fs = p.factor(&f, &mut rng);
        let mut degs: Vec<usize> = fs.iter().map(|(g, _)| g.degree().unwrap()).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 2, 4, 4, 4]);
        assert_eq!(expand(&f, &fs), p);
    }

    #[test]
    fn factor_with_multiplicities() {
        let f = Gf2e::new(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let a = Poly::linear(2);
        let b = Poly::from_coeffs(vec![2, 1, 1]); // irreducible? checked below
        let p = a.mul(&f, &a).mul(&f, &a).mul(&f, &b).mul(&f, &b);
        let fs = p.factor(&f, &mut rng);
        assert_eq!(expand(&f, &fs), p);
        for (g, _) in &fs {
            assert_eq!(g.factor(&f, &mut rng).len(), 1);
        }
    }

    #[test]
    fn splits_completely_over_extension() {
        // x^3 - 1 over GF(4) has three linear factors
        let f = Gf2e::new(2).unwrap();
        let p = Poly::from_coeffs(vec![1, 0, 0, 1]);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let fs = p.factor(&f, &mut rng);
        assert_eq!(fs.len(), 3);
        assert!(fs.iter().all(|(g, m)| g.degree() == Some(1) && *m == 1));
    }
}
