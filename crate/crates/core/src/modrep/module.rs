//! Matrix representations of permutation groups over GF(2^e).
//!
//! Modules are right modules on row vectors: `v . g = v * M_g` and
//! `M_{gh} = M_g M_h`, matching the right action of permutations.

use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fqlinalg::{FieldElem, FqMatrix, Gf2e, RowSpace};
use crate::group::PermGroup;

/// Largest module dimension handled by default.
pub const DEFAULT_DIM_CAP: usize = 2_500;

/// Budget (entries) for caching one matrix per group element.
const ELEMENT_CACHE_ENTRIES: usize = 1 << 22;

#[derive(Clone)]
pub struct ModuleRep {
    group: Arc<PermGroup>,
    field: Gf2e,
    dim: usize,
    gens: Vec<FqMatrix>,
    elements: Arc<OnceLock<Vec<FqMatrix>>>,
}

impl fmt::Debug for ModuleRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleRep(dim {} over {:?} for {})", self.dim, self.field, self.group.name())
    }
}

impl ModuleRep {
    /// Builds a module and checks that the matrices define a representation.
    pub fn new(group: Arc<PermGroup>, field: Gf2e, gens: Vec<FqMatrix>) -> Result<Self> {
        let m = Self::from_parts(group, field, gens)?;
        m.verify(0x5eed)?;
        Ok(m)
    }

    /// Builds a module without the relation check (for constructions that
    /// are representations by design).
    pub fn from_parts(group: Arc<PermGroup>, field: Gf2e, gens: Vec<FqMatrix>) -> Result<Self> {
        if gens.len() != group.gens().len() {
            return Err(Error::Invalid(format!("{} matrices for {} generators", gens.len(), group.gens().len())));
        }
        let dim = gens.first().map_or(0, |g| g.rows());
        for g in &gens {
            if g.rows() != dim || g.cols() != dim || g.field() != &field {
                return Err(Error::Invalid("generator matrices of inconsistent shape or field".into()));
            }
        }
        Ok(ModuleRep { group, field, dim, gens, elements: Arc::new(OnceLock::new()) })
    }

    /// Checks the Schreier relations `M_x M_s = M_{xs}`: all of them when the
    /// element cache fits, else a seeded random sample.
    pub fn verify(&self, seed: u64) -> Result<()> {
        let n = self.group.order() as usize;
        if self.gens.iter().any(|g| g.inverse().is_none()) {
            return Err(Error::Invalid("generator matrix is singular".into()));
        }
        let pairs: Vec<(usize, usize)> = if n * self.dim * self.dim <= ELEMENT_CACHE_ENTRIES {
            (0..n).flat_map(|x| (0..self.gens.len()).map(move |s| (x, s))).collect()
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..32).map(|_| (rng.gen_range(0..n), rng.gen_range(0..self.gens.len()))).collect()
        };
        for (x, s) in pairs {
            let xs = self.group.mul(x, self.group.gen_index(s));
            if self.matrix(x).mul(&self.gens[s]) != self.matrix(xs) {
                return Err(Error::Invalid(format!(
                    "matrices violate a relation of {} (element {x}, generator {s})",
                    self.group.name()
                )));
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }
    pub fn field(&self) -> &Gf2e {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn gens(&self) -> &[FqMatrix] {
        &self.gens
    }

    /// Matrix of group element `i` (index in the group's element table).
    pub fn matrix(&self, i: usize) -> FqMatrix {
        if let Some(all) = self.element_matrices() {
            return all[i].clone();
        }
        let mut m = FqMatrix::identity(&self.field, self.dim);
        for g in self.group.word(i) {
            m = m.mul(&self.gens[g]);
        }
        m
    }

    /// All element matrices, when they fit in the cache budget.
    pub fn element_matrices(&self) -> Option<&[FqMatrix]> {
        let n = self.group.order() as usize;
        if n * self.dim * self.dim > ELEMENT_CACHE_ENTRIES {
            return None;
        }
        let all = self.elements.get_or_init(|| {
            let mut v: Vec<FqMatrix> = Vec::with_capacity(n);
            v.push(FqMatrix::identity(&self.field, self.dim));
            for i in 1..n {
                let (p, g) = self.group.parent(i).unwrap();
                let m = v[p].mul(&self.gens[g]);
                v.push(m);
            }
            v
        });
        Some(all)
    }

    /// Sum of the matrices of a set of elements.
    pub fn sum_of(&self, elems: &[usize]) -> FqMatrix {
        let mut s = FqMatrix::zeros(&self.field, self.dim, self.dim);
        for &x in elems {
            s.add_assign_scaled(1, &self.matrix(x));
        }
        s
    }

    /// Matrix of a group-algebra element given by class-sum coefficients.
    pub fn class_sum_combination(&self, coeffs: &[FieldElem]) -> FqMatrix {
        let cl = self.group.classes();
        let mut s = FqMatrix::zeros(&self.field, self.dim, self.dim);
        for (c, &a) in coeffs.iter().enumerate() {
            if a != 0 {
                s.add_assign_scaled(a, &self.sum_of(cl.members(c)));
            }
        }
        s
    }

    pub fn same_context(&self, other: &ModuleRep) -> Result<()> {
        if !(Arc::ptr_eq(&self.group, &other.group) || self.group.fingerprint() == other.group.fingerprint())
            || self.field != other.field
        {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    // ---- constructions ----

    pub fn trivial(group: &Arc<PermGroup>, field: &Gf2e) -> Self {
        let gens = group.gens().iter().map(|_| FqMatrix::identity(field, 1)).collect();
        Self::from_parts(group.clone(), field.clone(), gens).unwrap()
    }

    /// One-dimensional module with the given generator scalars.
    pub fn one_dim(group: &Arc<PermGroup>, field: &Gf2e, scalars: &[FieldElem]) -> Result<Self> {
        let gens = scalars.iter().map(|&a| FqMatrix::scalar(field, 1, a)).collect();
        Self::new(group.clone(), field.clone(), gens)
    }

    pub fn zero(group: &Arc<PermGroup>, field: &Gf2e) -> Self {
        let gens = group.gens().iter().map(|_| FqMatrix::zeros(field, 0, 0)).collect();
        Self::from_parts(group.clone(), field.clone(), gens).unwrap()
    }

    /// Regular module: basis `e_x`, `e_x . g = e_{xg}`.
    pub fn regular(group: &Arc<PermGroup>, field: &Gf2e) -> Self {
        let n = group.order() as usize;
        let gens = (0..group.gens().len())
            .map(|k| {
                let s = group.gen_index(k);
                let mut m = FqMatrix::zeros(field, n, n);
                for x in 0..n {
                    m.set(x, group.mul(x, s), 1);
                }
                m
            })
            .collect();
        Self::from_parts(group.clone(), field.clone(), gens).unwrap()
    }

    pub fn direct_sum(&self, other: &ModuleRep) -> Result<Self> {
        self.same_context(other)?;
        let gens = self.gens.iter().zip(&other.gens).map(|(a, b)| FqMatrix::block_diag(&self.field, &[a, b])).collect();
        Self::from_parts(self.group.clone(), self.field.clone(), gens)
    }

    pub fn direct_sum_all(group: &Arc<PermGroup>, field: &Gf2e, parts: &[&ModuleRep]) -> Self {
        let gens = (0..group.gens().len())
            .map(|k| {
                let blocks: Vec<&FqMatrix> = parts.iter().map(|p| &p.gens[k]).collect();
                FqMatrix::block_diag(field, &blocks)
            })
            .collect();
        Self::from_parts(group.clone(), field.clone(), gens).unwrap()
    }

    pub fn tensor(&self, other: &ModuleRep) -> Result<Self> {
        self.same_context(other)?;
        let gens = self.gens.iter().zip(&other.gens).map(|(a, b)| a.kronecker(b)).collect();
        Self::from_parts(self.group.clone(), self.field.clone(), gens)
    }

    /// Dual module: inverse transposes.
    pub fn dual(&self) -> Self {
        let gens = self.gens.iter().map(|g| g.inverse().expect("invertible").transpose()).collect();
        Self::from_parts(self.group.clone(), self.field.clone(), gens).unwrap()
    }

    /// Restriction to a subgroup of the same degree.
    pub fn restrict(&self, h: &Arc<PermGroup>) -> Result<Self> {
        if !h.is_subgroup_of(&self.group) {
            return Err(Error::NotSubgroup(format!("{} in {}", h.name(), self.group.name())));
        }
        let gens = h.gens().iter().map(|p| self.matrix(self.group.index_of(p).unwrap())).collect();
        Self::from_parts(h.clone(), self.field.clone(), gens)
    }

    /// Induction `M (x)_{kH} kG` along a right transversal of `H` in `G`.
    pub fn induce(&self, g: &Arc<PermGroup>) -> Result<Self> {
        let h = &self.group;
        if !h.is_subgroup_of(g) {
            return Err(Error::NotSubgroup(format!("{} in {}", h.name(), g.name())));
        }
        let n = g.order() as usize;
        let emb = g.embedding(h)?;
        // coset_of[x] and transversal, cosets H t in discovery order
        let mut coset_of = vec![usize::MAX; n];
        let mut transversal = Vec::new();
        for x in 0..n {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let c = transversal.len();
            transversal.push(x);
            for &hh in &emb {
                coset_of[g.mul(hh, x)] = c;
            }
        }
        let m = transversal.len();
        let d = self.dim;
        let gens = (0..g.gens().len())
            .map(|k| {
                let s = g.gen_index(k);
                let mut out = FqMatrix::zeros(&self.field, m * d, m * d);
                for (i, &t) in transversal.iter().enumerate() {
                    let ts = g.mul(t, s);
                    let j = coset_of[ts];
                    let hprime = g.mul(ts, g.inv(transversal[j]));
                    let hi = h.index_of(g.element(hprime)).expect("coset representative");
                    out.set_block(i * d, j * d, &self.matrix(hi));
                }
                out
            })
            .collect();
        Self::from_parts(g.clone(), self.field.clone(), gens)
    }

    /// Module of `g` whose generators act as the given elements of this
    /// module's group (inflation along a surjection, for instance).
    pub fn pull_back(&self, g: &Arc<PermGroup>, images: &[usize]) -> Result<Self> {
        let gens = images.iter().map(|&i| self.matrix(i)).collect();
        Self::new(g.clone(), self.field.clone(), gens)
    }

    /// Submodule spanned by an invariant row space.
    pub fn submodule(&self, space: &RowSpace) -> Self {
        let gens = self.gens.iter().map(|g| space.restrict(g)).collect();
        Self::from_parts(self.group.clone(), self.field.clone(), gens).unwrap()
    }

    /// Quotient by an invariant row space.
    pub fn quotient(&self, space: &RowSpace) -> Self {
        let gens = self.gens.iter().map(|g| space.quotient_action(g)).collect();
        Self::from_parts(self.group.clone(), self.field.clone(), gens).unwrap()
    }

    /// Module in a new basis (rows of `b`, invertible).
    pub fn change_basis(&self, b: &FqMatrix) -> Self {
        let bi = b.inverse().expect("basis change must be invertible");
        let gens = self.gens.iter().map(|g| b.mul(g).mul(&bi)).collect();
        Self::from_parts(self.group.clone(), self.field.clone(), gens).unwrap()
    }

    /// Smallest submodule containing the given vectors.
    pub fn spin(&self, seeds: &[Vec<FieldElem>]) -> RowSpace {
        let mut space = RowSpace::empty(&self.field, self.dim);
        let mut queue: Vec<Vec<FieldElem>> = Vec::new();
        for s in seeds {
            if space.insert(s) {
                queue.push(s.clone());
            }
        }
        while let Some(v) = queue.pop() {
            for g in &self.gens {
                let w = g.vec_mul(&v);
                if space.insert(&w) {
                    queue.push(w);
                }
            }
            if space.dim() == self.dim {
                break;
            }
        }
        space
    }

    /// Same as [`spin`](Self::spin) for the transposed action, i.e. the
    /// submodule of the dual generated by functionals.
    pub fn spin_dual(&self, seeds: &[Vec<FieldElem>]) -> RowSpace {
        let t: Vec<FqMatrix> = self.gens.iter().map(|g| g.transpose()).collect();
        let mut space = RowSpace::empty(&self.field, self.dim);
        let mut queue: Vec<Vec<FieldElem>> = Vec::new();
        for s in seeds {
            if space.insert(s) {
                queue.push(s.clone());
            }
        }
        while let Some(v) = queue.pop() {
            for g in &t {
                let w = g.vec_mul(&v);
                if space.insert(&w) {
                    queue.push(w);
                }
            }
        }
        space
    }

    /// Fixed points of the whole group.
    pub fn fixed_points(&self) -> RowSpace {
        let mut stacked = FqMatrix::zeros(&self.field, self.dim, 0);
        for g in &self.gens {
            stacked = stacked.hstack(&g.add_scalar(1));
        }
        RowSpace::new(&stacked.left_nullspace())
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::spec::{build_group, GroupSpec};

    fn setup(r: &str) -> (Arc<PermGroup>, Gf2e) {
        let g = build_group(&GroupSpec::recipe(r), u64::MAX).unwrap();
        let f = Gf2e::splitting_for_odd({
            let e = g.exponent();
            e >> e.trailing_zeros()
        })
        .unwrap();
        (g, f)
    }

    #[test]
    fn regular_and_induced_are_representations() {
        let (g, f) = setup("A4");
        ModuleRep::regular(&g, &f).verify(1).unwrap();
        let p = g.sylow2();
        let ind = ModuleRep::trivial(&p, &f).induce(&g).unwrap();
        assert_eq!(ind.dim(), 3);
        ind.verify(2).unwrap();
        let res = ind.restrict(&g).unwrap();
        assert_eq!(res.gens(), ind.gens());
    }

    #[test]
    fn bad_matrices_are_rejected() {
        let (g, f) = setup("A4");
        // generator of order 3 sent to a scalar of order 1 but involution to a non-involution
        let w = f.root_of_unity(3).unwrap();
        assert!(ModuleRep::one_dim(&g, &f, &[1, w]).is_err());
        assert!(ModuleRep::one_dim(&g, &f, &[w, 1]).is_ok());
    }

    #[test]
    fn dual_and_tensor_dims() {
        let (g, f) = setup("A5");
        let n = g.sylow_context().unwrap().n;
        let ind = ModuleRep::trivial(&n, &f).induce(&g).unwrap();
        assert_eq!(ind.dim(), 5);
        let t = ind.tensor(&ind.dual()).unwrap();
        assert_eq!(t.dim(), 25);
        t.verify(3).unwrap();
        ind.dual().verify(4).unwrap();
    }
}

/// All one-dimensional modules, trivial first, then by the discrete logs of
/// the generator scalars.
pub fn one_dim_modules(group: &Arc<PermGroup>, field: &Gf2e) -> Vec<ModuleRep> {
    let q1 = field.unit_order() as u64;
    let choices: Vec<Vec<FieldElem>> = (0..group.gens().len())
        .map(|k| {
            let o = num_integer::gcd(group.elem_order(group.gen_index(k)), q1);
            let z = field.alpha_pow(q1 / o);
            (0..o).map(|j| field.pow(z, j)).collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; choices.len()];
    loop {
        let scalars: Vec<FieldElem> = idx.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
        if let Ok(m) = ModuleRep::one_dim(group, field, &scalars) {
            out.push(m);
        }
        let mut k = 0;
        while k < idx.len() {
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == idx.len() {
            break;
        }
    }
    out.sort_by_key(|m| {
        m.gens().iter().map(|g| if g.get(0, 0) == 1 { 0 } else { field.log(g.get(0, 0)) }).collect::<Vec<_>>()
    });
    out
}
