//! Dense matrices over GF(2^e).
//!
//! Vectors are rows. A module acts on row vectors from the right, so the
//! submodule/quotient helpers here all work with row spaces.

use std::fmt;

use rand::Rng;

use super::field::{FieldElem, Gf2e};
use super::poly::Poly;

#[derive(Clone, PartialEq, Eq)]
pub struct FqMatrix {
    field: Gf2e,
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl fmt::Debug for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {:?}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows.min(16) {
            writeln!(f, "  {:?}", &self.row(r)[..self.cols.min(16)])?;
        }
        Ok(())
    }
}

impl FqMatrix {
    pub fn zeros(field: &Gf2e, rows: usize, cols: usize) -> Self {
        FqMatrix { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &Gf2e, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn scalar(field: &Gf2e, n: usize, a: FieldElem) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = a;
        }
        m
    }

    pub fn from_vec(field: &Gf2e, rows: usize, cols: usize, data: Vec<FieldElem>) -> Self {
        assert_eq!(data.len(), rows * cols);
        debug_assert!(data.iter().all(|&x| field.contains(x)));
        FqMatrix { field: field.clone(), rows, cols, data }
    }

    pub fn from_rows(field: &Gf2e, cols: usize, rows: &[Vec<FieldElem>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend_from_slice(r);
        }
        Self::from_vec(field, rows.len(), cols, data)
    }

    pub fn random<R: Rng + ?Sized>(field: &Gf2e, rows: usize, cols: usize, rng: &mut R) -> Self {
        let q = field.size();
        let data = (0..rows * cols).map(|_| rng.gen_range(0..q)).collect();
        Self::from_vec(field, rows, cols, data)
    }

    pub fn field(&self) -> &Gf2e {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
    pub fn data(&self) -> &[FieldElem] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElem {
        self.data[r * self.cols + c]
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElem) {
        self.data[r * self.cols + c] = v;
    }
    #[inline]
    pub fn row(&self, r: usize) -> &[FieldElem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [FieldElem] {
        let c = self.cols;
        &mut self.data[r * c..(r + 1) * c]
    }

    pub fn row_vectors(&self) -> Vec<Vec<FieldElem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && (0..self.rows).all(|r| (0..self.cols).all(|c| self.get(r, c) == (r == c) as u32))
    }

    pub fn mul(&self, other: &FqMatrix) -> FqMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = FqMatrix::zeros(&self.field, self.rows, other.cols);
        let oc = other.cols;
        for i in 0..self.rows {
            let dst = &mut out.data[i * oc..(i + 1) * oc];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a != 0 {
                    self.field.axpy(dst, a, &other.data[k * oc..(k + 1) * oc]);
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![0; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a != 0 {
                self.field.axpy(&mut out, a, self.row(k));
            }
        }
        out
    }

    pub fn add(&self, other: &FqMatrix) -> FqMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a ^ b).collect();
        FqMatrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn add_assign_scaled(&mut self, a: FieldElem, other: &FqMatrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field.clone();
        f.axpy(&mut self.data, a, &other.data);
    }

    pub fn scale(&self, a: FieldElem) -> FqMatrix {
        let mut m = self.clone();
        self.field.scale_in_place(&mut m.data, a);
        m
    }

    /// `self + a * I`.
    pub fn add_scalar(&self, a: FieldElem) -> FqMatrix {
        assert!(self.is_square());
        let mut m = self.clone();
        for i in 0..self.rows {
            m.data[i * self.cols + i] ^= a;
        }
        m
    }

    pub fn transpose(&self) -> FqMatrix {
        let mut out = FqMatrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        out
    }

    pub fn pow(&self, mut k: u64) -> FqMatrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = FqMatrix::identity(&self.field, self.rows);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Kronecker product: entry `((i,k),(j,l)) = a[i][j] * b[k][l]`.
    pub fn kronecker(&self, b: &FqMatrix) -> FqMatrix {
        let (ra, ca, rb, cb) = (self.rows, self.cols, b.rows, b.cols);
        let mut out = FqMatrix::zeros(&self.field, ra * rb, ca * cb);
        let oc = ca * cb;
        for i in 0..ra {
            for j in 0..ca {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..rb {
                    let start = (i * rb + k) * oc + j * cb;
                    self.field.axpy(&mut out.data[start..start + cb], a, b.row(k));
                }
            }
        }
        out
    }

    pub fn block_diag(field: &Gf2e, blocks: &[&FqMatrix]) -> FqMatrix {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = FqMatrix::zeros(field, r, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &FqMatrix) {
        for i in 0..b.rows {
            let start = (r0 + i) * self.cols + c0;
            self.data[start..start + b.cols].copy_from_slice(b.row(i));
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> FqMatrix {
        let mut out = FqMatrix::zeros(&self.field, rows, cols);
        for i in 0..rows {
            let start = (r0 + i) * self.cols + c0;
            out.row_mut(i).copy_from_slice(&self.data[start..start + cols]);
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> FqMatrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        FqMatrix::from_vec(&self.field, idx.len(), self.cols, data)
    }

    pub fn select_cols(&self, idx: &[usize]) -> FqMatrix {
        let mut out = FqMatrix::zeros(&self.field, self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                out.data[r * idx.len() + j] = self.get(r, c);
            }
        }
        out
    }

    pub fn vstack(&self, other: &FqMatrix) -> FqMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        FqMatrix::from_vec(&self.field, self.rows + other.rows, self.cols, data)
    }

    pub fn hstack(&self, other: &FqMatrix) -> FqMatrix {
        assert_eq!(self.rows, other.rows);
        let mut out = FqMatrix::zeros(&self.field, self.rows, self.cols + other.cols);
        out.set_block(0, 0, self);
        out.set_block(0, self.cols, other);
        out
    }

    /// Reduced row echelon form; returns the nonzero rows and pivot columns.
    pub fn echelon(&self) -> (FqMatrix, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| m.get(i, c) != 0) else { continue };
            if p != r {
                for j in 0..self.cols {
                    m.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c));
            f.scale_in_place(m.row_mut(r), inv);
            let pivot_row = m.row(r).to_vec();
            for i in 0..self.rows {
                if i != r {
                    let a = m.get(i, c);
                    if a != 0 {
                        f.axpy(m.row_mut(i), a, &pivot_row);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let basis = m.block(0, 0, r, self.cols);
        (basis, pivots)
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        if self.rows > self.cols {
            return self.transpose().echelon().1.len();
        }
        self.echelon().1.len()
    }

    /// Basis of the right kernel `{v : self * v = 0}`, as the columns of the result.
    pub fn nullspace(&self) -> FqMatrix {
        let (e, pivots) = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = FqMatrix::zeros(&self.field, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            out.set(fc, j, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                // char 2: negation is the identity
                out.set(pc, j, e.get(i, fc));
            }
        }
        out
    }

    /// Basis of the left kernel `{v : v * self = 0}`, as rows in echelon form.
    pub fn left_nullspace(&self) -> FqMatrix {
        let k = self.transpose().nullspace().transpose();
        k.echelon().0
    }

    pub fn inverse(&self) -> Option<FqMatrix> {
        assert!(self.is_square());
        let n = self.rows;
        let aug = self.hstack(&FqMatrix::identity(&self.field, n));
        let (e, pivots) = aug.echelon();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(e.block(0, n, n, n))
    }

    /// Characteristic polynomial via reduction to upper Hessenberg form.
    pub fn charpoly(&self) -> Poly {
        assert!(self.is_square());
        let f = &self.field;
        let n = self.rows;
        let mut h = self.clone();
        // similarity transforms to Hessenberg form
        for c in 0..n.saturating_sub(2) {
            let Some(p) = (c + 1..n).find(|&i| h.get(i, c) != 0) else { continue };
            if p != c + 1 {
                // swap rows p, c+1 and columns p, c+1
                for j in 0..n {
                    h.data.swap(p * n + j, (c + 1) * n + j);
                }
                for i in 0..n {
                    h.data.swap(i * n + p, i * n + c + 1);
                }
            }
            let inv = f.inv(h.get(c + 1, c));
            for i in c + 2..n {
                let t = f.mul(h.get(i, c), inv);
                if t == 0 {
                    continue;
                }
                // row_i -= t * row_{c+1}
                let src = h.row(c + 1).to_vec();
                f.axpy(h.row_mut(i), t, &src);
                // col_{c+1} += t * col_i
                for r in 0..n {
                    let v = h.get(r, i);
                    if v != 0 {
                        let cur = h.get(r, c + 1);
                        h.set(r, c + 1, cur ^ f.mul(t, v));
                    }
                }
            }
        }
        // p_k = (x - h_kk) p_{k-1} - sum ...
        let mut polys: Vec<Poly> = vec![Poly::one()];
        for k in 0..n {
            let mut pk = Poly::x().mul(f, &polys[k]).add(&polys[k].scale(f, h.get(k, k)));
            let mut prod = 1u32;
            for i in (0..k).rev() {
                prod = f.mul(prod, h.get(i + 1, i));
                if prod == 0 {
                    break;
                }
                let coeff = f.mul(prod, h.get(i, k));
                if coeff != 0 {
                    pk = pk.add(&polys[i].scale(f, coeff));
                }
            }
            polys.push(pk);
        }
        polys.pop().unwrap()
    }

    /// Evaluate a polynomial at this (square) matrix by Horner's rule.
    pub fn eval_poly(&self, p: &Poly) -> FqMatrix {
        let n = self.rows;
        let mut acc = FqMatrix::zeros(&self.field, n, n);
        for &c in p.coeffs().iter().rev() {
            acc = acc.mul(self).add_scalar(c);
        }
        acc
    }
}

/// Basis of `{X : b_i X = X c_i for all i}` as `d1 x d2` matrices.
pub fn solve_sylvester(field: &Gf2e, d1: usize, d2: usize, bs: &[FqMatrix], cs: &[FqMatrix]) -> Vec<FqMatrix> {
    assert_eq!(bs.len(), cs.len());
    let unknowns = d1 * d2;
    let mut eqs = FqMatrix::zeros(field, bs.len() * unknowns, unknowns);
    for (t, (b, c)) in bs.iter().zip(cs).enumerate() {
        assert_eq!((b.rows(), b.cols()), (d1, d1));
        assert_eq!((c.rows(), c.cols()), (d2, d2));
        for r in 0..d1 {
            for col in 0..d2 {
                let eq = t * unknowns + r * d2 + col;
                for k in 0..d1 {
                    let v = b.get(r, k);
                    if v != 0 {
                        let x = k * d2 + col;
                        eqs.set(eq, x, eqs.get(eq, x) ^ v);
                    }
                }
                for k in 0..d2 {
                    let v = c.get(k, col);
                    if v != 0 {
                        let x = r * d2 + k;
                        eqs.set(eq, x, eqs.get(eq, x) ^ v);
                    }
                }
            }
        }
    }
    let ker = if bs.is_empty() { FqMatrix::identity(field, unknowns) } else { eqs.nullspace() };
    (0..ker.cols())
        .map(|j| {
            let data = (0..unknowns).map(|i| ker.get(i, j)).collect();
            FqMatrix::from_vec(field, d1, d2, data)
        })
        .collect()
}

/// A subspace of row vectors held in reduced echelon form.
#[derive(Clone, Debug)]
pub struct RowSpace {
    basis: FqMatrix,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(m: &FqMatrix) -> Self {
        let (basis, pivots) = m.echelon();
        RowSpace { basis, pivots }
    }

    pub fn empty(field: &Gf2e, dim: usize) -> Self {
        RowSpace { basis: FqMatrix::zeros(field, 0, dim), pivots: vec![] }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }
    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }
    pub fn basis(&self) -> &FqMatrix {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduce `v` modulo the space; returns the residue.
    pub fn reduce(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        let f = self.basis.field();
        let mut w = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let a = w[p];
            if a != 0 {
                f.axpy(&mut w, a, self.basis.row(i));
            }
        }
        w
    }

    pub fn contains(&self, v: &[FieldElem]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates of a vector known to lie in the space.
    pub fn coords(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        self.pivots.iter().map(|&p| v[p]).collect()
    }

    /// Adds a vector; returns false if it was already in the span.
    pub fn insert(&mut self, v: &[FieldElem]) -> bool {
        let f = self.basis.field().clone();
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|&x| x != 0) else { return false };
        let inv = f.inv(w[p]);
        f.scale_in_place(&mut w, inv);
        // clear column p in existing rows
        let n = self.basis.cols();
        let mut rows: Vec<Vec<FieldElem>> = self.basis.row_vectors();
        for r in rows.iter_mut() {
            let a = r[p];
            if a != 0 {
                f.axpy(r, a, &w);
            }
        }
        let pos = self.pivots.iter().position(|&q| q > p).unwrap_or(self.pivots.len());
        rows.insert(pos, w);
        self.pivots.insert(pos, p);
        self.basis = FqMatrix::from_rows(&f, n, &rows);
        true
    }

    /// Matrix of `gen` restricted to this (invariant) subspace.
    pub fn restrict(&self, gen: &FqMatrix) -> FqMatrix {
        let f = self.basis.field();
        let k = self.dim();
        let mut out = FqMatrix::zeros(f, k, k);
        for i in 0..k {
            let img = gen.vec_mul(self.basis.row(i));
            debug_assert!(self.contains(&img), "subspace is not invariant");
            out.row_mut(i).copy_from_slice(&self.coords(&img));
        }
        out
    }

    /// Indices of the standard basis vectors spanning a complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient()).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Matrix of `gen` acting on the quotient by this (invariant) subspace,
    /// in the basis of standard vectors at non-pivot positions.
    pub fn quotient_action(&self, gen: &FqMatrix) -> FqMatrix {
        let f = self.basis.field();
        let comp = self.complement_indices();
        let mut out = FqMatrix::zeros(f, comp.len(), comp.len());
        for (i, &c) in comp.iter().enumerate() {
            let img = self.reduce(gen.row(c));
            for (j, &d) in comp.iter().enumerate() {
                out.set(i, j, img[d]);
            }
        }
        out
    }

    /// Annihilator `{x : x . w = 0 for all w in self}`, as a row space.
    pub fn annihilator(&self) -> RowSpace {
        let k = self.basis.transpose(); // columns are the basis vectors
        RowSpace::new(&k.left_nullspace())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gf(e: u32) -> Gf2e {
        Gf2e::new(e).unwrap()
    }

    #[test]
    fn rank_examples() {
        let f = gf(1);
        assert_eq!(FqMatrix::zeros(&f, 0, 0).rank(), 0);
        assert_eq!(FqMatrix::identity(&f, 4).rank(), 4);
        let ones = FqMatrix::from_vec(&f, 4, 4, vec![1; 16]);
        assert_eq!(ones.rank(), 1);
    }

    #[test]
    fn nullspace_examples() {
        let f = gf(2);
        assert_eq!(FqMatrix::identity(&f, 3).nullspace().cols(), 0);
        let z = FqMatrix::zeros(&f, 2, 5);
        let n = z.nullspace();
        assert_eq!(n.cols(), 5);
        assert_eq!(n.rank(), 5);
        // seeded rank-4 6x6 matrix as a product of 6x4 and 4x6 factors
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let m = loop {
            let a = FqMatrix::random(&f, 6, 4, &mut rng);
            let b = FqMatrix::random(&f, 4, 6, &mut rng);
            let m = a.mul(&b);
            if m.rank() == 4 {
                break m;
            }
        };
        let n = m.nullspace();
        assert_eq!(n.cols(), 2);
        assert!(m.mul(&n).is_zero());
        assert_eq!(n.rank(), 2);
    }

    #[test]
    fn kronecker_examples() {
        let f = gf(2);
        let i2 = FqMatrix::identity(&f, 2);
        let i3 = FqMatrix::identity(&f, 3);
        assert_eq!(i2.kronecker(&i3), FqMatrix::identity(&f, 6));
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = FqMatrix::random(&f, 3, 3, &mut rng);
        assert_eq!(a.kronecker(&FqMatrix::identity(&f, 1)), a);
        let (a, b) = loop {
            let a = FqMatrix::random(&f, 3, 2, &mut rng).mul(&FqMatrix::random(&f, 2, 4, &mut rng));
            let b = FqMatrix::random(&f, 4, 3, &mut rng).mul(&FqMatrix::random(&f, 3, 4, &mut rng));
            if a.rank() == 2 && b.rank() == 3 {
                break (a, b);
            }
        };
        assert_eq!(a.kronecker(&b).rank(), 6);
    }

    #[test]
    fn kronecker_is_associative() {
        let f = gf(2);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let a = FqMatrix::random(&f, 2, 3, &mut rng);
        let b = FqMatrix::random(&f, 2, 2, &mut rng);
        let c = FqMatrix::random(&f, 3, 1, &mut rng);
        assert_eq!(a.kronecker(&b).kronecker(&c), a.kronecker(&b.kronecker(&c)));
    }

    #[test]
    fn sylvester_examples() {
        let f = gf(1);
        let i2 = FqMatrix::identity(&f, 2);
        assert_eq!(solve_sylvester(&f, 2, 2, &[i2.clone()], &[i2]).len(), 4);
        // non-isomorphic 1-dim modules of C3 over GF(4)
        let f4 = gf(2);
        let w = f4.root_of_unity(3).unwrap();
        let b = FqMatrix::scalar(&f4, 1, w);
        let c = FqMatrix::scalar(&f4, 1, f4.mul(w, w));
        assert!(solve_sylvester(&f4, 1, 1, &[b], &[c]).is_empty());
        // Hom(k, kC2): k is 1x1 [1], the regular module of C2 is the swap
        let one = FqMatrix::identity(&f, 1);
        let swap = FqMatrix::from_vec(&f, 2, 2, vec![0, 1, 1, 0]);
        assert_eq!(solve_sylvester(&f, 1, 2, &[one], &[swap]).len(), 1);
    }

    #[test]
    fn inverse_and_charpoly() {
        let f = gf(4);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 1..8 {
            let a = FqMatrix::random(&f, n, n, &mut rng);
            let p = a.charpoly();
            assert_eq!(p.degree(), Some(n));
            // Cayley-Hamilton
            assert!(a.eval_poly(&p).is_zero());
            if let Some(inv) = a.inverse() {
                assert!(a.mul(&inv).is_identity());
            } else {
                assert!(a.rank() < n);
            }
        }
    }

    #[test]
    fn rowspace_quotient_and_restriction() {
        let f = gf(1);
        // upper triangular 2x2 unipotent: span{e2} is invariant for row action
        let g = FqMatrix::from_vec(&f, 2, 2, vec![1, 1, 0, 1]);
        let sub = RowSpace::new(&FqMatrix::from_vec(&f, 1, 2, vec![0, 1]));
        assert_eq!(sub.restrict(&g), FqMatrix::identity(&f, 1));
        assert_eq!(sub.quotient_action(&g), FqMatrix::identity(&f, 1));
        assert_eq!(sub.annihilator().dim(), 1);
    }
}
