//! Direct-sum decomposition and composition series.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fqlinalg::{FqMatrix, Poly, RowSpace};

use super::hom::{endomorphisms, hom_space};
use super::ModuleRep;

/// Retry budget for the randomized searches.
pub const RETRY_BUDGET: usize = 64;

/// One indecomposable summand with its basis inside the decomposed module.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: ModuleRep,
    pub basis: FqMatrix,
    /// Index into [`Decomposition::classes`].
    pub class: usize,
}

#[derive(Clone, Debug)]
pub struct IsoClass {
    pub label: String,
    pub dim: usize,
    pub multiplicity: usize,
    /// First summand of this class.
    pub representative: usize,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub summands: Vec<Summand>,
    pub classes: Vec<IsoClass>,
}

impl Decomposition {
    pub fn is_indecomposable(&self) -> bool {
        self.summands.len() == 1
    }

    pub fn dims(&self) -> Vec<usize> {
        self.summands.iter().map(|s| s.module.dim()).collect()
    }

    pub fn representative(&self, class: usize) -> &ModuleRep {
        &self.summands[self.classes[class].representative].module
    }
}

fn flatten(m: &FqMatrix) -> Vec<u32> {
    m.data().to_vec()
}

/// True when `End(M)` is local with residue field `k`: every basis element
/// is a scalar plus a nilpotent, and those nilpotent parts generate a
/// nilpotent algebra of codimension one.
pub fn is_local(m: &ModuleRep, end: &[FqMatrix]) -> bool {
    let d = m.dim();
    let f = m.field();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut nil: Vec<FqMatrix> = Vec::new();
    let mut span = RowSpace::empty(f, d * d);
    for e in end {
        let factors = e.charpoly().factor(f, &mut rng);
        if factors.len() != 1 || factors[0].0.degree() != Some(1) {
            return false;
        }
        let lambda = factors[0].0.coeffs()[0];
        let n = e.add_scalar(lambda);
        if span.insert(&flatten(&n)) {
            nil.push(n);
        }
    }
    if nil.len() + 1 != end.len() {
        return false;
    }
    let mut layer = nil.clone();
    for _ in 0..=d {
        if layer.is_empty() {
            return true;
        }
        let mut next_span = RowSpace::empty(f, d * d);
        let mut next = Vec::new();
        for a in &layer {
            for b in &nil {
                let p = a.mul(b);
                if next_span.insert(&flatten(&p)) {
                    next.push(p);
                }
            }
        }
        layer = next;
    }
    layer.is_empty()
}

fn random_combination<R: Rng>(m: &ModuleRep, basis: &[FqMatrix], rng: &mut R) -> FqMatrix {
    let f = m.field();
    let mut t = FqMatrix::zeros(f, m.dim(), m.dim());
    for b in basis {
        let c = rng.gen_range(0..f.size());
        if c != 0 {
            t.add_assign_scaled(c, b);
        }
    }
    t
}

/// Splits `m` by the Fitting decomposition of random endomorphisms.
/// Returns summands with bases in `m`'s coordinates.
fn split<R: Rng>(m: &ModuleRep, rng: &mut R) -> Result<Vec<(ModuleRep, FqMatrix)>> {
    let d = m.dim();
    let f = m.field().clone();
    let whole = || vec![(m.clone(), FqMatrix::identity(&f, d))];
    if d <= 1 {
        return Ok(whole());
    }
    let end = endomorphisms(m)?;
    if end.len() <= 1 || is_local(m, &end) {
        return Ok(whole());
    }
    for _ in 0..RETRY_BUDGET {
        let theta = random_combination(m, &end, rng);
        let factors = theta.charpoly().factor(&f, rng);
        if factors.len() < 2 {
            continue;
        }
        let (f1, e1) = &factors[0];
        let p1 = pow_poly(&f, f1, *e1);
        let rest = factors[1..].iter().fold(Poly::one(), |acc, (g, e)| acc.mul(&f, &pow_poly(&f, g, *e)));
        let k1 = RowSpace::new(&theta.eval_poly(&p1).left_nullspace());
        let k2 = RowSpace::new(&theta.eval_poly(&rest).left_nullspace());
        debug_assert_eq!(k1.dim() + k2.dim(), d);
        let mut out = Vec::new();
        for k in [k1, k2] {
            let sub = m.submodule(&k);
            for (s, b) in split(&sub, rng)? {
                out.push((s, b.mul(k.basis())));
            }
        }
        return Ok(out);
    }
    Err(Error::RandomizationExhausted(format!("no splitting endomorphism for a module of dimension {d}")))
}

fn pow_poly(f: &crate::fqlinalg::Gf2e, p: &Poly, e: usize) -> Poly {
    (0..e).fold(Poly::one(), |acc, _| acc.mul(f, p))
}

/// Krull-Schmidt decomposition with isomorphism classes.
pub fn decompose(m: &ModuleRep, seed: u64) -> Result<Decomposition> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let parts = split(m, &mut rng)?;
    let mut summands: Vec<Summand> = Vec::new();
    let mut classes: Vec<IsoClass> = Vec::new();
    for (module, basis) in parts {
        let mut class = None;
        for (ci, c) in classes.iter().enumerate() {
            if c.dim == module.dim() && is_isomorphic_seeded(&summands[c.representative].module, &module, &mut rng)? {
                class = Some(ci);
                break;
            }
        }
        let ci = match class {
            Some(ci) => {
                classes[ci].multiplicity += 1;
                ci
            }
            None => {
                let same_dim = classes.iter().filter(|c| c.dim == module.dim()).count();
                classes.push(IsoClass {
                    label: format!("{}{}", module.dim(), letter(same_dim)),
                    dim: module.dim(),
                    multiplicity: 1,
                    representative: summands.len(),
                });
                classes.len() - 1
            }
        };
        summands.push(Summand { module, basis, class: ci });
    }
    Ok(Decomposition { summands, classes })
}

fn letter(i: usize) -> String {
    let mut s = String::new();
    let mut i = i;
    loop {
        s.insert(0, (b'a' + (i % 26) as u8) as char);
        if i < 26 {
            break;
        }
        i = i / 26 - 1;
    }
    s
}

/// Errors with `NotIndecomposable` unless `End(m)` is local.
pub fn ensure_indecomposable(m: &ModuleRep) -> Result<()> {
    if m.dim() == 0 {
        return Err(Error::NotIndecomposable);
    }
    if m.dim() == 1 {
        return Ok(());
    }
    let end = endomorphisms(m)?;
    if end.len() == 1 || is_local(m, &end) {
        Ok(())
    } else {
        Err(Error::NotIndecomposable)
    }
}

pub fn is_isomorphic(a: &ModuleRep, b: &ModuleRep) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x150);
    is_isomorphic_seeded(a, b, &mut rng)
}

fn is_isomorphic_seeded<R: Rng>(a: &ModuleRep, b: &ModuleRep, rng: &mut R) -> Result<bool> {
    a.same_context(b)?;
    if a.dim() != b.dim() {
        return Ok(false);
    }
    if a.dim() == 0 {
        return Ok(true);
    }
    if invariants(a) != invariants(b) {
        return Ok(false);
    }
    let hom = hom_space(a, b)?;
    if hom.is_empty() {
        return Ok(false);
    }
    if hom.iter().any(|x| x.rank() == a.dim()) {
        return Ok(true);
    }
    for _ in 0..RETRY_BUDGET {
        if random_combination(a, &hom, rng).rank() == a.dim() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Cheap isomorphism invariants: ranks of `M_g - 1` on the generators and
/// on their pairwise products.
fn invariants(m: &ModuleRep) -> Vec<usize> {
    let mut out = Vec::new();
    for a in m.gens() {
        out.push(a.add_scalar(1).rank());
        for b in m.gens() {
            out.push(a.mul(b).add_scalar(1).rank());
        }
    }
    out
}

/// A random element of the algebra generated by the module's matrices.
fn random_algebra_element<R: Rng>(m: &ModuleRep, rng: &mut R) -> FqMatrix {
    let f = m.field();
    let gens = m.gens();
    let mut words: Vec<FqMatrix> = gens.to_vec();
    for _ in 0..4 {
        let a = &words[rng.gen_range(0..words.len())];
        let b = &gens[rng.gen_range(0..gens.len())];
        let p = a.mul(b);
        words.push(p);
    }
    let mut t = FqMatrix::zeros(f, m.dim(), m.dim());
    for w in &words {
        let c = rng.gen_range(0..f.size());
        if c != 0 {
            t.add_assign_scaled(c, w);
        }
    }
    t
}

/// A proper nonzero submodule, or `None` if `m` is irreducible.
pub fn find_submodule<R: Rng>(m: &ModuleRep, rng: &mut R) -> Result<Option<RowSpace>> {
    let d = m.dim();
    if d <= 1 {
        return Ok(None);
    }
    let f = m.field().clone();
    for _ in 0..RETRY_BUDGET {
        let theta = random_algebra_element(m, rng);
        let mut factors = theta.charpoly().factor(&f, rng);
        factors.sort_by_key(|(p, _)| p.degree());
        for (p, _) in factors {
            let pt = theta.eval_poly(&p);
            let ker = pt.left_nullspace();
            let s = m.spin(&[ker.row(0).to_vec()]);
            if s.dim() < d {
                return Ok(Some(s));
            }
            let deg = p.degree().unwrap_or(0);
            if ker.rows() != deg {
                continue;
            }
            let kt = pt.transpose().left_nullspace();
            let sd = m.spin_dual(&[kt.row(0).to_vec()]);
            if sd.dim() < d {
                return Ok(Some(sd.annihilator()));
            }
            return Ok(None);
        }
    }
    Err(Error::RandomizationExhausted(format!("irreducibility test for dimension {d}")))
}

/// Composition factors, bottom to top.
pub fn composition_factors(m: &ModuleRep, seed: u64) -> Result<Vec<ModuleRep>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    chop(m, &mut rng, &mut out)?;
    Ok(out)
}

fn chop<R: Rng>(m: &ModuleRep, rng: &mut R, out: &mut Vec<ModuleRep>) -> Result<()> {
    if m.dim() == 0 {
        return Ok(());
    }
    match find_submodule(m, rng)? {
        None => out.push(m.clone()),
        Some(s) => {
            chop(&m.submodule(&s), rng, out)?;
            chop(&m.quotient(&s), rng, out)?;
        }
    }
    Ok(())
}

/// Distinct composition factors with multiplicities, ordered by dimension
/// and then by first appearance.
pub fn distinct_factors(m: &ModuleRep, seed: u64) -> Result<Vec<(ModuleRep, usize)>> {
    let mut out: Vec<(ModuleRep, usize)> = Vec::new();
    for s in composition_factors(m, seed)? {
        let mut hit = false;
        for (t, c) in out.iter_mut() {
            if is_isomorphic(t, &s)? {
                *c += 1;
                hit = true;
                break;
            }
        }
        if !hit {
            out.push((s, 1));
        }
    }
    out.sort_by_key(|(s, _)| s.dim());
    Ok(out)
}

/// Socle series length one test: `m` is simple.
pub fn is_irreducible(m: &ModuleRep, seed: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(m.dim() > 0 && find_submodule(m, &mut rng)?.is_none())
}

/// Socle and radical layers are not needed beyond the head: the largest
/// semisimple quotient's factors, found as simple quotients.
pub fn head_factors(m: &ModuleRep, simples: &[ModuleRep]) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for s in simples {
        out.push(hom_space(m, s)?.len());
    }
    Ok(out)
}

/// Socle multiplicities against a list of simple modules.
pub fn socle_factors(m: &ModuleRep, simples: &[ModuleRep]) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for s in simples {
        out.push(hom_space(s, m)?.len());
    }
    Ok(out)
}
