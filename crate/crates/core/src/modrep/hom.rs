//! Homomorphism spaces by spinning.
//!
//! A homomorphism out of `M` is fixed by the images of a set of spinning
//! seeds. Each non-tree edge of the spinning forest gives one linear
//! condition on those images, so the unknowns number `seeds * dim N`
//! instead of `dim M * dim N`.

use crate::error::Result;
use crate::fqlinalg::{FqMatrix, RowSpace};

use super::ModuleRep;

/// A spin basis of a module: every basis vector is a seed times a word.
pub(crate) struct SpinBasis {
    /// Basis vectors as rows.
    pub basis: FqMatrix,
    /// Seed index of each basis vector.
    pub seed_of: Vec<usize>,
    /// `(parent basis vector, generator)`, `None` for seeds.
    pub parent: Vec<Option<(usize, usize)>>,
    /// Standard-basis positions used as seeds.
    pub seeds: Vec<usize>,
}

pub(crate) fn spin_basis(m: &ModuleRep) -> SpinBasis {
    let d = m.dim();
    let f = m.field();
    let mut space = RowSpace::empty(f, d);
    let mut rows: Vec<Vec<u32>> = Vec::with_capacity(d);
    let mut seed_of = Vec::with_capacity(d);
    let mut parent = Vec::with_capacity(d);
    let mut seeds = Vec::new();
    for r in 0..d {
        if space.dim() == d {
            break;
        }
        let mut e = vec![0; d];
        e[r] = 1;
        if !space.insert(&e) {
            continue;
        }
        let s = seeds.len();
        seeds.push(r);
        let start = rows.len();
        rows.push(e);
        seed_of.push(s);
        parent.push(None);
        let mut next = start;
        while next < rows.len() {
            for (g, mat) in m.gens().iter().enumerate() {
                let w = mat.vec_mul(&rows[next]);
                if space.insert(&w) {
                    rows.push(w);
                    seed_of.push(s);
                    parent.push(Some((next, g)));
                }
            }
            next += 1;
        }
    }
    SpinBasis { basis: FqMatrix::from_rows(f, d, &rows), seed_of, parent, seeds }
}

/// Basis of `Hom_kG(M, N)`; each `X` satisfies `M_g X = X N_g`.
pub fn hom_space(m: &ModuleRep, n: &ModuleRep) -> Result<Vec<FqMatrix>> {
    m.same_context(n)?;
    let (dm, dn) = (m.dim(), n.dim());
    let f = m.field();
    if dm == 0 || dn == 0 {
        return Ok(Vec::new());
    }
    let sb = spin_basis(m);
    let t = sb.seeds.len();
    let binv = sb.basis.inverse().expect("spin basis is a basis");
    // W_k: image of basis vector k is u_{seed(k)} W_k
    let mut w: Vec<FqMatrix> = Vec::with_capacity(dm);
    for k in 0..dm {
        match sb.parent[k] {
            None => w.push(FqMatrix::identity(f, dn)),
            Some((p, g)) => {
                let x = w[p].mul(&n.gens()[g]);
                w.push(x);
            }
        }
    }
    let mut tree = vec![vec![false; m.gens().len()]; dm];
    for k in 0..dm {
        if let Some((p, g)) = sb.parent[k] {
            tree[p][g] = true;
        }
    }
    let mut blocks: Vec<FqMatrix> = Vec::new();
    for j in 0..dm {
        for (g, mg) in m.gens().iter().enumerate() {
            if tree[j][g] {
                continue;
            }
            let img = mg.vec_mul(sb.basis.row(j));
            let coords = binv.vec_mul(&img);
            let mut col = FqMatrix::zeros(f, t * dn, dn);
            let lhs = w[j].mul(&n.gens()[g]);
            add_block(&mut col, sb.seed_of[j] * dn, &lhs, 1);
            for (k, &a) in coords.iter().enumerate() {
                if a != 0 {
                    add_block(&mut col, sb.seed_of[k] * dn, &w[k], a);
                }
            }
            blocks.push(col);
        }
    }
    let sols = if blocks.is_empty() {
        FqMatrix::identity(f, t * dn)
    } else {
        let mut c = FqMatrix::zeros(f, t * dn, blocks.len() * dn);
        for (i, b) in blocks.iter().enumerate() {
            c.set_block(0, i * dn, b);
        }
        c.left_nullspace()
    };
    let mut out = Vec::with_capacity(sols.rows());
    for r in 0..sols.rows() {
        let u = sols.row(r);
        let mut xs = FqMatrix::zeros(f, dm, dn);
        for k in 0..dm {
            let s = sb.seed_of[k];
            let img = w[k].vec_mul(&u[s * dn..(s + 1) * dn]);
            xs.row_mut(k).copy_from_slice(&img);
        }
        out.push(binv.mul(&xs));
    }
    Ok(out)
}

fn add_block(dst: &mut FqMatrix, r0: usize, src: &FqMatrix, a: u32) {
    let f = dst.field().clone();
    for i in 0..src.rows() {
        let row = src.row(i).to_vec();
        f.axpy(&mut dst.row_mut(r0 + i)[..row.len()], a, &row);
    }
}

pub fn endomorphisms(m: &ModuleRep) -> Result<Vec<FqMatrix>> {
    hom_space(m, m)
}
