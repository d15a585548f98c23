//! Permutations acting on the right: `x^(pq) = (x^p)^q`.

use std::fmt;

use num_integer::Integer;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u32).collect())
    }

    /// Builds a permutation from its image list, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let s = seen.get_mut(x as usize)?;
            if *s {
                return None;
            }
            *s = true;
        }
        Some(Perm(images))
    }

    /// Cycles on 0-based points.
    pub fn from_cycles(n: usize, cycles: &[Vec<u32>]) -> Option<Self> {
        let mut img: Vec<u32> = (0..n as u32).collect();
        let mut touched = vec![false; n];
        for cyc in cycles {
            for (i, &x) in cyc.iter().enumerate() {
                let x = x as usize;
                if x >= n || touched[x] {
                    return None;
                }
                touched[x] = true;
                img[x] = cyc[(i + 1) % cyc.len()];
            }
        }
        Some(Perm(img))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.0[x as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Product `self * other`: first `self`, then `other`.
    pub fn mul(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inv(&self) -> Perm {
        let mut out = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            out[x as usize] = i as u32;
        }
        Perm(out)
    }

    pub fn pow(&self, k: i64) -> Perm {
        let base = if k < 0 { self.inv() } else { self.clone() };
        let mut acc = Perm::identity(self.degree());
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// `other^-1 * self * other`.
    pub fn conj(&self, other: &Perm) -> Perm {
        let mut out = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            out[other.0[i] as usize] = other.0[x as usize];
        }
        Perm(out)
    }

    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start as u32];
            seen[start] = true;
            let mut x = self.0[start];
            while x as usize != start {
                seen[x as usize] = true;
                cyc.push(x);
                x = self.0[x as usize];
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    /// Extends to a larger degree by fixing the new points.
    pub fn extend(&self, n: usize) -> Perm {
        let mut v = self.0.clone();
        v.extend(self.0.len() as u32..n as u32);
        Perm(v)
    }

    /// Shifts the support by `offset` inside a permutation of degree `n`.
    pub fn shifted(&self, offset: usize, n: usize) -> Perm {
        let mut v: Vec<u32> = (0..n as u32).collect();
        for (i, &x) in self.0.iter().enumerate() {
            v[i + offset] = x + offset as u32;
        }
        Perm(v)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let s: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", s.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn right_action_product() {
        let a = Perm::from_cycles(3, &[vec![0, 1]]).unwrap();
        let b = Perm::from_cycles(3, &[vec![1, 2]]).unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.mul(&b).apply(0), 2);
        assert_eq!(a.mul(&b).order(), 3);
        assert!(a.mul(&a.inv()).is_identity());
        let c = a.mul(&b);
        assert_eq!(c.conj(&a), a.inv().mul(&c).mul(&a));
    }
}
