//! Dixon-Schneider character tables.
//!
//! Central characters are found as common eigenvectors of the class
//! matrices modulo a prime `l = 1 mod exp(G)`, then lifted to cyclotomic
//! values through eigenvalue multiplicities of each element.

use crate::error::{Error, Result};
use crate::fqlinalg::prime::{is_prime, PrimeField};
use crate::fqlinalg::Cyclotomic;
use crate::group::PermGroup;

/// `a[j][i][k]` = number of `x` in class `j` with `x^-1 z_k` in class `i`,
/// where `z_k` is the representative of class `k`. Equivalently
/// `C_j C_i = sum_k a[j][i][k] C_k` in the centre of the group algebra.
pub fn structure_constants(g: &PermGroup) -> Vec<Vec<Vec<u64>>> {
    let cl = g.classes();
    let r = cl.len();
    let mut a = vec![vec![vec![0u64; r]; r]; r];
    for k in 0..r {
        let z = cl.rep(k);
        for x in 0..g.order() as usize {
            let y = g.mul(g.inv(x), z);
            a[cl.class_of(x)][cl.class_of(y)][k] += 1;
        }
    }
    a
}

/// Smallest prime `l = 1 mod e` with `l > 2 sqrt(n)`.
pub fn default_aux_prime(order: u64, exponent: u64) -> u64 {
    let mut l = 1;
    while l <= 2 || (l * l) <= 4 * order || !is_prime(l) {
        l += exponent;
    }
    l
}

pub fn check_aux_prime(order: u64, exponent: u64, l: u64) -> Result<()> {
    if !is_prime(l) || l % exponent != 1 % exponent || l * l <= 4 * order || l >= 1 << 31 {
        return Err(Error::Invalid(format!(
            "auxiliary prime {l} must be a prime = 1 mod {exponent} above 2 sqrt({order})"
        )));
    }
    Ok(())
}

/// Row subspace of F_l^r kept in reduced echelon form.
struct Space {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Space {
    fn echelon(f: &PrimeField, mut rows: Vec<Vec<u64>>) -> Space {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
            rows.swap(p, r);
            let inv = f.inv(rows[r][c]);
            for x in rows[r].iter_mut() {
                *x = f.mul(*x, inv);
            }
            let pr = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row[c] != 0 {
                    let t = row[c];
                    for (x, &y) in row.iter_mut().zip(&pr) {
                        *x = f.sub(*x, f.mul(t, y));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        Space { rows, pivots }
    }

    /// Matrix of `v -> v t` on this (invariant) space.
    fn restrict(&self, f: &PrimeField, t: &[Vec<u64>]) -> Vec<Vec<u64>> {
        self.rows
            .iter()
            .map(|b| {
                let img = vec_mat(f, b, t);
                self.pivots.iter().map(|&p| img[p]).collect()
            })
            .collect()
    }
}

fn vec_mat(f: &PrimeField, v: &[u64], m: &[Vec<u64>]) -> Vec<u64> {
    let mut out = vec![0u64; m[0].len()];
    for (k, &a) in v.iter().enumerate() {
        if a != 0 {
            for (o, &b) in out.iter_mut().zip(&m[k]) {
                *o = (*o + a * b) % f.modulus();
            }
        }
    }
    out
}

/// Left eigenvectors of `a` (square, over F_l) for eigenvalue `lambda`.
fn eigenspace(f: &PrimeField, a: &[Vec<u64>], lambda: u64) -> Vec<Vec<u64>> {
    let d = a.len();
    // v (a - lambda) = 0  <=>  (a - lambda)^T v^T = 0
    let m: Vec<Vec<u64>> =
        (0..d).map(|j| (0..d).map(|i| if i == j { f.sub(a[i][j], lambda) } else { a[i][j] }).collect()).collect();
    f.nullspace(&m, d)
}

/// Splits F_l^r into common left eigenvectors of the transposed class matrices.
fn common_eigenvectors(f: &PrimeField, mats: &[Vec<Vec<u64>>], r: usize) -> Result<Vec<Vec<u64>>> {
    let identity: Vec<Vec<u64>> = (0..r).map(|i| (0..r).map(|j| (i == j) as u64).collect()).collect();
    let mut spaces = vec![Space::echelon(f, identity)];
    for t in mats {
        if spaces.iter().all(|s| s.rows.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for s in spaces {
            if s.rows.len() == 1 {
                next.push(s);
                continue;
            }
            let a = s.restrict(f, t);
            let mut found = 0;
            for lambda in 0..f.modulus() {
                let es = eigenspace(f, &a, lambda);
                if es.is_empty() {
                    continue;
                }
                found += es.len();
                // coordinates back to F_l^r
                let rows = es
                    .iter()
                    .map(|c| {
                        let mut v = vec![0u64; r];
                        for (coef, b) in c.iter().zip(&s.rows) {
                            for (x, &y) in v.iter_mut().zip(b) {
                                *x = f.add(*x, f.mul(*coef, y));
                            }
                        }
                        v
                    })
                    .collect();
                next.push(Space::echelon(f, rows));
                if found == a.len() {
                    break;
                }
            }
            if found != a.len() {
                return Err(Error::Invalid("class matrix not diagonalizable modulo the auxiliary prime".into()));
            }
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.rows.len() != 1) {
        return Err(Error::Invalid("class matrices do not separate the characters".into()));
    }
    Ok(spaces.into_iter().map(|s| s.rows.into_iter().next().unwrap()).collect())
}

/// Irreducible characters, unsorted, as value vectors over the classes.
pub fn irreducibles(g: &PermGroup, aux_prime: Option<u64>) -> Result<Vec<Vec<Cyclotomic>>> {
    let cl = g.classes();
    let r = cl.len();
    let order = g.order();
    let exp = g.exponent();
    let l = match aux_prime {
        Some(l) => {
            check_aux_prime(order, exp, l)?;
            l
        }
        None => default_aux_prime(order, exp),
    };
    let f = PrimeField::new(l);
    let a = structure_constants(g);
    // left-eigenvector form: w M_j^T = omega_j w, with (M_j)[i][k] = a[j][i][k]
    let mats: Vec<Vec<Vec<u64>>> =
        (0..r).map(|j| (0..r).map(|k| (0..r).map(|i| a[j][i][k] % l).collect()).collect()).collect();
    // skip the identity class, whose matrix is scalar
    let mut vecs = common_eigenvectors(&f, &mats[1..], r)?;
    for v in vecs.iter_mut() {
        // normalize omega(1) = 1
        let inv = f.inv(v[0]);
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
    }
    let z = f.pow(f.generator(), (l - 1) / exp);
    let mut out = Vec::with_capacity(r);
    for w in vecs {
        let mut s = 0;
        for i in 0..r {
            let t = f.mul(w[i], w[cl.inverse_class(i)]);
            s = f.add(s, f.mul(t, f.inv(cl.size(i) % l)));
        }
        let d2 = f.mul(order % l, f.inv(s));
        let d = (1..=((order as f64).sqrt() as u64 + 1))
            .find(|&d| (d * d) % l == d2)
            .ok_or_else(|| Error::Invalid("degree is not a square root".into()))?;
        let chi_mod: Vec<u64> = (0..r).map(|i| f.mul(f.mul(d % l, w[i]), f.inv(cl.size(i) % l))).collect();
        let mut row = Vec::with_capacity(r);
        for c in 0..r {
            let o = cl.order(c);
            let zo = f.pow(z, exp / o);
            let pm: Vec<usize> = (0..o).map(|k| cl.power(g, c, k)).collect();
            let mut value = Cyclotomic::zero();
            let inv_o = f.inv(o % l);
            for j in 0..o {
                let mut m = 0;
                for k in 0..o {
                    let e = (j * k) % o;
                    let root = f.pow(zo, (o - e) % o);
                    m = f.add(m, f.mul(chi_mod[pm[k as usize]], root));
                }
                let m = f.mul(m, inv_o);
                if m > d {
                    return Err(Error::Invalid(format!("eigenvalue multiplicity {m} out of range")));
                }
                if m > 0 {
                    let term = Cyclotomic::zeta(o as u32, j as i64).scale((m as i64).into());
                    value = &value + &term;
                }
            }
            row.push(value);
        }
        if row[0].to_integer() != Some(d as i64) || (order % d) != 0 {
            return Err(Error::Invalid("inconsistent lifted degree".into()));
        }
        out.push(row);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aux_primes() {
        assert_eq!(default_aux_prime(12, 6), 7);
        assert_eq!(default_aux_prime(60, 30), 31);
        assert_eq!(default_aux_prime(4, 2), 5);
        assert_eq!(default_aux_prime(660, 330), 331);
        assert!(check_aux_prime(60, 30, 61).is_ok());
        assert!(check_aux_prime(60, 30, 37).is_err());
    }
}
