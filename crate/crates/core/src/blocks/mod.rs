//! 2-blocks of group algebras over GF(2^e).
//!
//! Blocks are found as classes of ordinary characters with equal central
//! characters modulo 2. The block idempotents are the reductions of the
//! sums of the character idempotents; they are then checked inside `Z(kG)`
//! against the class structure constants.

mod report;
mod simples;

use std::sync::{Arc, OnceLock};

use num_integer::Integer;
use num_rational::Rational64;

use crate::chartab::dixon::structure_constants;
use crate::chartab::CharacterTable;
use crate::error::{Error, Result};
use crate::fqlinalg::{Cyclotomic, FieldElem, Gf2e};
use crate::group::{PermGroup, SylowContext};
use crate::modrep::ModuleRep;

pub use report::{block_report, BlockReport, BlockSummary};
pub use simples::{generalized_decomposition, simples_of_block, GenDecEntry, SimpleModule};

/// Reduction modulo the prime above 2 fixed by `zeta_m -> alpha^((q-1)/m)`
/// for odd `m`; 2-power roots of unity go to 1.
pub fn reduce_mod2(c: &Cyclotomic, field: &Gf2e) -> Result<FieldElem> {
    let n = c.conductor() as u64;
    let a = n.trailing_zeros();
    let odd = n >> a;
    let q1 = field.unit_order() as u64;
    if q1 % odd != 0 {
        return Err(Error::FieldTooSmall(format!("no roots of unity of order {odd} in {field:?}")));
    }
    // zeta_n = zeta_{2^a}^x zeta_odd^y with y = (2^a)^-1 mod odd
    let y = if odd == 1 { 0 } else { mod_inverse((1u64 << a) % odd, odd) };
    let z = field.alpha_pow(q1 / odd * y);
    let mut out = 0;
    let mut zi = 1;
    for coef in c.coeffs() {
        let r = reduce_rational(coef)?;
        if r != 0 {
            out ^= zi;
        }
        zi = field.mul(zi, z);
    }
    Ok(out)
}

fn reduce_rational(q: &Rational64) -> Result<u32> {
    if q.denom() % 2 == 0 {
        return Err(Error::Invalid(format!("{q} is not 2-integral")));
    }
    Ok((q.numer().rem_euclid(2)) as u32)
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    let e = (a as i64).extended_gcd(&(m as i64));
    e.x.rem_euclid(m as i64) as u64
}

#[derive(Clone, Debug)]
pub struct BlockIdempotent {
    /// Coefficients on the class sums, in canonical class order.
    pub coefficients: Vec<FieldElem>,
    pub label: String,
    pub defect: u32,
}

#[derive(Clone, Debug)]
pub struct BlockData {
    pub idempotent: BlockIdempotent,
    /// Row indices into the character table.
    pub irr: Vec<usize>,
    /// `lambda_B(C_j)` for each class sum.
    pub central_character: Vec<FieldElem>,
    pub principal: bool,
    /// `dim_k(e kG) = sum chi(1)^2`.
    pub algebra_dim: u64,
}

impl BlockData {
    pub fn label(&self) -> &str {
        &self.idempotent.label
    }
    pub fn defect(&self) -> u32 {
        self.idempotent.defect
    }
}

/// The block decomposition of one group.
pub struct Blocks {
    group: Arc<PermGroup>,
    field: Gf2e,
    table: Arc<CharacterTable>,
    blocks: Vec<BlockData>,
    simples: Vec<OnceLock<Vec<SimpleModule>>>,
}

impl std::fmt::Debug for Blocks {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Blocks({}, {} blocks)", self.group.name(), self.blocks.len())
    }
}

/// Multiplication in `Z(kG)` in the class-sum basis.
struct Centre {
    /// `a[j][i][k] mod 2`
    a: Vec<Vec<Vec<u8>>>,
}

impl Centre {
    fn new(g: &PermGroup) -> Self {
        let a = structure_constants(g)
            .into_iter()
            .map(|m| m.into_iter().map(|row| row.into_iter().map(|x| (x % 2) as u8).collect()).collect())
            .collect();
        Centre { a }
    }

    fn mul(&self, f: &Gf2e, x: &[FieldElem], y: &[FieldElem]) -> Vec<FieldElem> {
        let r = x.len();
        let mut out = vec![0; r];
        for j in 0..r {
            if x[j] == 0 {
                continue;
            }
            for i in 0..r {
                if y[i] == 0 {
                    continue;
                }
                let c = f.mul(x[j], y[i]);
                for (k, o) in out.iter_mut().enumerate() {
                    if self.a[j][i][k] == 1 {
                        *o ^= c;
                    }
                }
            }
        }
        out
    }
}

pub fn block_decomposition(g: &Arc<PermGroup>, field: &Gf2e, aux_prime: Option<u64>) -> Result<Blocks> {
    let table = Arc::new(CharacterTable::compute(g, aux_prime)?);
    Blocks::from_table(g, field, table)
}

impl Blocks {
    pub fn from_table(g: &Arc<PermGroup>, field: &Gf2e, table: Arc<CharacterTable>) -> Result<Blocks> {
        let cl = g.classes();
        let r = cl.len();
        let order = g.order();
        let two_part = order.trailing_zeros();
        // central characters mod 2
        let mut omegas: Vec<Vec<FieldElem>> = Vec::with_capacity(r);
        for chi in table.irr() {
            let d = chi.degree().unwrap();
            let row = (0..r)
                .map(|j| {
                    let w = chi.value(j).scale(Rational64::new(cl.size(j) as i64, d));
                    reduce_mod2(&w, field)
                })
                .collect::<Result<Vec<_>>>()?;
            omegas.push(row);
        }
        let mut groups: Vec<(Vec<FieldElem>, Vec<usize>)> = Vec::new();
        for (i, w) in omegas.into_iter().enumerate() {
            match groups.iter_mut().find(|(v, _)| *v == w) {
                Some((_, members)) => members.push(i),
                None => groups.push((w, vec![i])),
            }
        }
        let centre = Centre::new(g);
        let mut blocks = Vec::with_capacity(groups.len());
        for (bi, (lambda, irr)) in groups.into_iter().enumerate() {
            let mut coefficients = Vec::with_capacity(r);
            for j in 0..r {
                let mut s = Cyclotomic::zero();
                for &c in &irr {
                    let chi = &table.irr()[c];
                    let d = chi.degree().unwrap();
                    s = &s + &chi.value(j).conj().scale(Rational64::new(d, order as i64));
                }
                coefficients.push(reduce_mod2(&s, field)?);
            }
            let min_height = irr.iter().map(|&c| table.irr()[c].degree().unwrap().trailing_zeros()).min().unwrap();
            let defect = two_part - min_height;
            let class_defect = (0..r)
                .filter(|&j| coefficients[j] != 0)
                .map(|j| cl.centralizer_order(j).trailing_zeros())
                .max()
                .unwrap_or(0);
            if class_defect != defect {
                return Err(Error::Invalid(format!("block {bi}: defect {defect} but class defect {class_defect}")));
            }
            let algebra_dim = irr.iter().map(|&c| table.irr()[c].degree().unwrap().pow(2) as u64).sum();
            blocks.push(BlockData {
                idempotent: BlockIdempotent { coefficients, label: format!("B{bi}"), defect },
                principal: irr.contains(&0),
                irr,
                central_character: lambda,
                algebra_dim,
            });
        }
        if !blocks[0].principal || table.irr()[0].values().iter().any(|v| v.to_integer() != Some(1)) {
            return Err(Error::Invalid("first row of the table is not the trivial character".into()));
        }
        let out = Blocks {
            group: g.clone(),
            field: field.clone(),
            table,
            simples: (0..blocks.len()).map(|_| OnceLock::new()).collect(),
            blocks,
        };
        out.check_idempotents(&centre)?;
        Ok(out)
    }

    /// `e^2 = e`, `e e' = 0`, `sum e = 1` and `lambda_B(e_B') = delta`.
    fn check_idempotents(&self, centre: &Centre) -> Result<()> {
        let f = &self.field;
        let r = self.group.classes().len();
        let mut total = vec![0; r];
        for (i, b) in self.blocks.iter().enumerate() {
            let e = &b.idempotent.coefficients;
            for (t, x) in total.iter_mut().zip(e) {
                *t ^= x;
            }
            for (j, c) in self.blocks.iter().enumerate() {
                let prod = centre.mul(f, e, &c.idempotent.coefficients);
                let expect: &[FieldElem] = if i == j { e } else { &vec![0; r] };
                if prod != expect {
                    return Err(Error::Invalid(format!("block idempotents {i}, {j} fail orthogonality")));
                }
                let lam = self.lambda(j, e);
                if lam != (i == j) as u32 {
                    return Err(Error::Invalid(format!("central character {j} on idempotent {i} is {lam}")));
                }
            }
        }
        let mut one = vec![0; r];
        one[0] = 1;
        if total != one {
            return Err(Error::Invalid("block idempotents do not sum to 1".into()));
        }
        Ok(())
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }
    pub fn field(&self) -> &Gf2e {
        &self.field
    }
    pub fn table(&self) -> &Arc<CharacterTable> {
        &self.table
    }
    pub fn blocks(&self) -> &[BlockData] {
        &self.blocks
    }
    pub fn block(&self, b: usize) -> &BlockData {
        &self.blocks[b]
    }
    pub fn len(&self) -> usize {
        self.blocks.len()
    }
    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// `lambda_b` applied to a central element in the class-sum basis.
    pub fn lambda(&self, b: usize, x: &[FieldElem]) -> FieldElem {
        let f = &self.field;
        x.iter().zip(&self.blocks[b].central_character).fold(0, |acc, (&a, &l)| acc ^ f.mul(a, l))
    }

    /// Block containing the character in row `chi`.
    pub fn block_of_character(&self, chi: usize) -> usize {
        self.blocks.iter().position(|b| b.irr.contains(&chi)).expect("every character lies in a block")
    }

    /// The block whose idempotent acts as the identity on `m`.
    pub fn block_of(&self, m: &ModuleRep) -> Result<usize> {
        if m.group().fingerprint() != self.group.fingerprint() || m.field() != &self.field {
            return Err(Error::GroupMismatch);
        }
        let mut found = None;
        for (i, b) in self.blocks.iter().enumerate() {
            let e = m.class_sum_combination(&b.idempotent.coefficients);
            if e.is_identity() {
                found = Some(i);
            } else if !e.is_zero() {
                return Err(Error::NotIndecomposable);
            }
        }
        found.ok_or(Error::NotIndecomposable)
    }

    /// Block of this group induced from block `b` of a subgroup, by
    /// matching `lambda_b` on the intersections of class sums with the
    /// subgroup. `None` when the induced map is no central character.
    pub fn induce_block(&self, sub: &Blocks, b: usize) -> Result<Option<usize>> {
        let g = &self.group;
        let h = &sub.group;
        if !h.is_subgroup_of(g) {
            return Err(Error::NotSubgroup(format!("{} in {}", h.name(), g.name())));
        }
        let hc = h.classes();
        let gc = g.classes();
        let mut induced = vec![0; gc.len()];
        for k in 0..hc.len() {
            let j = gc.class_of(g.index_of(h.element(hc.rep(k))).unwrap());
            induced[j] ^= sub.blocks[b].central_character[k];
        }
        Ok(self.blocks.iter().position(|bl| bl.central_character == induced))
    }

    /// Brauer map `Br_Q`: truncation of the idempotent of block `b` to
    /// `C_G(Q)`, whose blocks are given by `cq`.
    pub fn brauer_map(&self, b: usize, cq: &Blocks) -> Result<BrauerImage> {
        let g = &self.group;
        let c = &cq.group;
        if !c.is_subgroup_of(g) {
            return Err(Error::NotSubgroup(format!("{} in {}", c.name(), g.name())));
        }
        let gc = g.classes();
        let cc = c.classes();
        let e = &self.blocks[b].idempotent.coefficients;
        let image: Vec<FieldElem> =
            (0..cc.len()).map(|k| e[gc.class_of(g.index_of(c.element(cc.rep(k))).unwrap())]).collect();
        let mut parts = Vec::new();
        let mut sum = vec![0; cc.len()];
        let mut ok = true;
        for j in 0..cq.blocks.len() {
            match cq.lambda(j, &image) {
                0 => {}
                1 => {
                    parts.push(j);
                    for (s, x) in sum.iter_mut().zip(&cq.blocks[j].idempotent.coefficients) {
                        *s ^= x;
                    }
                }
                _ => ok = false,
            }
        }
        let is_idempotent_sum = ok && sum == image;
        Ok(BrauerImage {
            is_block_idempotent: is_idempotent_sum && parts.len() == 1,
            blocks: if is_idempotent_sum { parts } else { Vec::new() },
            coefficients: image,
        })
    }

    /// Simple modules of block `b`, computed on first use.
    pub fn simples(&self, b: usize) -> Result<&[SimpleModule]> {
        if let Some(s) = self.simples[b].get() {
            return Ok(s);
        }
        let s = simples_of_block(self, b)?;
        Ok(self.simples[b].get_or_init(|| s))
    }

    /// All simple modules with their block indices.
    pub fn all_simples(&self) -> Result<Vec<(usize, &SimpleModule)>> {
        let mut out = Vec::new();
        for b in 0..self.blocks.len() {
            for s in self.simples(b)? {
                out.push((b, s));
            }
        }
        Ok(out)
    }

    /// Algebra shape of a block with a single simple module of dimension
    /// `n`, when `dim = n^2 2^defect`: `Mat_n(kD)` with `D` its defect group.
    pub fn shape(&self, b: usize) -> Result<Option<String>> {
        let simples = self.simples(b)?;
        if simples.len() != 1 {
            return Ok(None);
        }
        let n = simples[0].module.dim() as u64;
        let d = self.blocks[b].defect();
        if n * n * (1 << d) != self.blocks[b].algebra_dim {
            return Ok(None);
        }
        let base = match d {
            0 => "k".to_string(),
            1 => "kC2".to_string(),
            2 => "kP".to_string(),
            _ => format!("kD{}", 1u64 << d),
        };
        Ok(Some(if n == 1 { base } else { format!("Mat{n}({base})") }))
    }
}

#[derive(Clone, Debug)]
pub struct BrauerImage {
    /// Coefficients on the class sums of `C_G(Q)`.
    pub coefficients: Vec<FieldElem>,
    /// Blocks of `C_G(Q)` whose idempotents sum to the image.
    pub blocks: Vec<usize>,
    pub is_block_idempotent: bool,
}

/// Per-subgroup evidence of the principal-type test.
#[derive(Clone, Debug, serde::Serialize)]
pub struct PrincipalTypeEvidence {
    /// `(Q, flag)` for `Q = 1, <u>, <v>, <uv>, P`.
    pub entries: Vec<(String, bool)>,
    pub passed: bool,
}

/// Blocks of the centralizers needed for the principal-type test and the
/// block criterion, computed once per group.
pub struct LocalBlocks {
    /// Blocks of `C_G(u)`, `C_G(v)`, `C_G(uv)` in the order of
    /// [`SylowContext::involutions`].
    pub involutions: Vec<Blocks>,
    /// Blocks of `C_G(P)`.
    pub p: Blocks,
}

impl LocalBlocks {
    pub fn new(g: &Arc<PermGroup>, field: &Gf2e, ctx: &SylowContext) -> Result<Self> {
        let involutions = ctx
            .involutions
            .iter()
            .map(|&t| block_decomposition(&g.centralizer(&[t]), field, None))
            .collect::<Result<Vec<_>>>()?;
        let p = block_decomposition(&ctx.c, field, None)?;
        Ok(LocalBlocks { involutions, p })
    }
}

/// `B` is of principal type when every `Br_Q(1_B)` is a block idempotent.
pub fn principal_type_check(blocks: &Blocks, b: usize, local: &LocalBlocks) -> Result<PrincipalTypeEvidence> {
    if blocks.block(b).defect() != 2 {
        return Err(Error::NotFullDefect);
    }
    let mut entries = vec![("1".to_string(), true)];
    for (name, cb) in ["<u>", "<v>", "<uv>"].iter().zip(&local.involutions) {
        entries.push((name.to_string(), blocks.brauer_map(b, cb)?.is_block_idempotent));
    }
    entries.push(("P".to_string(), blocks.brauer_map(b, &local.p)?.is_block_idempotent));
    let passed = entries.iter().all(|(_, f)| *f);
    Ok(PrincipalTypeEvidence { entries, passed })
}

#[cfg(test)]
mod tests;
