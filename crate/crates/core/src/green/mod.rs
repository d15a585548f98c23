//! Green correspondents of one-dimensional modules of `N_G(P)` and the
//! three endo-triviality tests.

mod tt;

use std::sync::Arc;

use serde::Serialize;

use crate::blocks::{
    block_decomposition, generalized_decomposition, principal_type_check, Blocks, GenDecEntry, LocalBlocks,
    PrincipalTypeEvidence,
};
use crate::chartab::inner_product;
use crate::error::{Error, Result};
use crate::fqlinalg::{FqMatrix, Gf2e, RowSpace};
use crate::group::{Perm, PermGroup, SylowContext};
use crate::modrep::vertex::{strip_projectives, trivial_summands};
use crate::modrep::{
    decompose, is_isomorphic, is_projective, lift_character, one_dim_modules, vertex, ModuleRep, Vertex, VertexReport,
    DEFAULT_DIM_CAP,
};

pub use tt::{tt_group, RecordSummary, TorsionGroupStructure};

/// Largest module for which `dual(m) (x) m` is decomposed.
pub const DIRECT_TEST_DIM_CAP: usize = 50;

/// Everything computed once per group: Sylow data, blocks of `G`, `N` and
/// the relevant centralizers.
pub struct Analysis {
    pub group: Arc<PermGroup>,
    /// Offset for the seeds of the randomized decompositions.
    pub seed: u64,
    pub direct: bool,
    pub field: Gf2e,
    pub ctx: SylowContext,
    pub blocks: Blocks,
    pub n_blocks: Blocks,
    pub local: LocalBlocks,
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub aux_prime: Option<u64>,
    pub seed: u64,
    /// Largest module built: the regular module and the induced modules.
    pub dim_cap: usize,
    /// Run the tensor-product test on correspondents within its cap.
    pub direct: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { aux_prime: None, seed: 0, dim_cap: DEFAULT_DIM_CAP, direct: true }
    }
}

impl Analysis {
    pub fn new(g: &Arc<PermGroup>, aux_prime: Option<u64>) -> Result<Self> {
        Self::with_options(g, Options { aux_prime, ..Options::default() })
    }

    pub fn with_options(g: &Arc<PermGroup>, opts: Options) -> Result<Self> {
        let aux_prime = opts.aux_prime;
        let ctx = g.sylow_context()?;
        if g.order() as usize > opts.dim_cap {
            return Err(Error::SizeCapExceeded(format!(
                "regular module of dimension {} above cap {}",
                g.order(),
                opts.dim_cap
            )));
        }
        let e = g.exponent();
        let field = Gf2e::splitting_for_odd(e >> e.trailing_zeros())?;
        let blocks = block_decomposition(g, &field, aux_prime)?;
        let n_blocks = block_decomposition(&ctx.n, &field, None)?;
        let local = LocalBlocks::new(g, &field, &ctx)?;
        Ok(Analysis { group: g.clone(), seed: opts.seed, direct: opts.direct, field, ctx, blocks, n_blocks, local })
    }

    /// One-dimensional kN-modules in canonical order (trivial first).
    pub fn x_n(&self) -> Vec<ModuleRep> {
        one_dim_modules(&self.ctx.n, &self.field)
    }
}

#[derive(Clone, Debug)]
pub struct GreenRecord {
    /// Position of the source in [`Analysis::x_n`].
    pub index: usize,
    pub label: String,
    pub source: ModuleRep,
    pub correspondent: ModuleRep,
    pub block: usize,
    /// Lifted character at `1, u, v, uv`.
    pub chi: [i64; 4],
    /// Row of the lifted character in the character table.
    pub chi_row: usize,
    pub chi_norm: i64,
    pub vertex: VertexReport,
    /// The vertex-P summand of `Res_N` of the correspondent is the source.
    pub round_trip: bool,
    /// Dimensions of the summands of `Ind_N^G` of the source.
    pub induced_dims: Vec<usize>,
}

impl GreenRecord {
    pub fn dim(&self) -> usize {
        self.correspondent.dim()
    }
}

/// Labels for one-dimensional modules: `1a` for the trivial one, then
/// the logs of the generator scalars.
pub fn one_dim_label(m: &ModuleRep) -> String {
    let f = m.field();
    let logs: Vec<String> = m
        .gens()
        .iter()
        .map(|g| match g.get(0, 0) {
            1 => "0".to_string(),
            x => f.log(x).to_string(),
        })
        .collect();
    if logs.iter().all(|l| l == "0") {
        "1a".to_string()
    } else {
        format!("1[{}]", logs.join(","))
    }
}

/// The Green correspondent of a one-dimensional kN-module: the unique
/// summand of `Ind_N^G` with vertex P.
pub fn green_inverse(a: &Analysis, index: usize, one_dim: &ModuleRep) -> Result<GreenRecord> {
    if one_dim.dim() != 1 {
        return Err(Error::Invalid("source must be one-dimensional".into()));
    }
    let g = &a.group;
    let ind = one_dim.induce(g)?;
    let dec = decompose(&ind, a.seed.wrapping_add(0x6ee2 + index as u64))?;
    let mut found: Vec<(ModuleRep, VertexReport)> = Vec::new();
    for s in &dec.summands {
        if is_projective(&s.module)? {
            continue;
        }
        let rep = vertex(&s.module)?;
        if rep.vertex == Vertex::P {
            found.push((s.module.clone(), rep));
        }
    }
    if found.len() > 1 {
        return Err(Error::AmbiguousCorrespondent(format!("{} summands with vertex P", found.len())));
    }
    let (correspondent, vreport) = found.pop().ok_or_else(|| Error::Invalid("no summand with vertex P".into()))?;
    let block = a.blocks.block_of(&correspondent)?;
    let [u, v, w] = a.ctx.involutions;
    let chi = [
        correspondent.dim() as i64,
        trivial_summands(&correspondent, u),
        trivial_summands(&correspondent, v),
        trivial_summands(&correspondent, w),
    ];
    let lifted = lift_character(&correspondent)?;
    let chi_norm = inner_product(&lifted, &lifted)?
        .to_integer()
        .ok_or_else(|| Error::Invalid("norm of lifted character is not an integer".into()))?;
    let chi_row = a
        .blocks
        .table()
        .position(&lifted)
        .ok_or_else(|| Error::Invalid("lifted character is not irreducible".into()))?;
    let round_trip = round_trip(&correspondent, one_dim, &a.ctx.n)?;
    Ok(GreenRecord {
        index,
        label: one_dim_label(one_dim),
        source: one_dim.clone(),
        correspondent,
        block,
        chi,
        chi_row,
        chi_norm,
        vertex: vreport,
        round_trip,
        induced_dims: {
            let mut d = dec.dims();
            d.sort_unstable();
            d
        },
    })
}

fn round_trip(m: &ModuleRep, source: &ModuleRep, n: &Arc<PermGroup>) -> Result<bool> {
    let res = m.restrict(n)?;
    let dec = decompose(&res, 0x7e5)?;
    let mut hits = 0;
    let mut full = 0;
    for s in &dec.summands {
        if is_projective(&s.module)? || vertex(&s.module)?.vertex != Vertex::P {
            continue;
        }
        full += 1;
        if is_isomorphic(&s.module, source)? {
            hits += 1;
        }
    }
    Ok(full == 1 && hits == 1)
}

/// `End_k(m) = dual(m) (x) m` is `k` plus projectives.
pub fn endotrivial_direct(m: &ModuleRep) -> Result<bool> {
    if m.dim() > DIRECT_TEST_DIM_CAP {
        return Err(Error::SizeCapExceeded(format!("dimension {} above {DIRECT_TEST_DIM_CAP}", m.dim())));
    }
    let end = m.dual().tensor(m)?;
    let dec = decompose(&end, 0xe4d)?;
    let mut rest = Vec::new();
    for s in &dec.summands {
        if !is_projective(&s.module)? {
            rest.push(&s.module);
        }
    }
    Ok(rest.len() == 1 && is_isomorphic(rest[0], &ModuleRep::trivial(m.group(), m.field()))?)
}

/// Character criterion: the lift has value 1 at every involution of P.
pub fn endotrivial_character(m: &ModuleRep) -> Result<bool> {
    if m.dim() % 2 == 0 {
        return Err(Error::EvenDimension);
    }
    if !vertex(m)?.trivial_source {
        return Err(Error::NotTrivialSource);
    }
    let ctx = m.group().sylow_context()?;
    Ok(ctx.involutions.iter().all(|&u| trivial_summands(m, u) == 1))
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockVerdict {
    pub passed: bool,
    pub principal_type: PrincipalTypeEvidence,
    /// For `u, v, uv`: dimensions of the simple modules in the blocks of
    /// `C_G(u)` inducing to the block of the record.
    pub phi_degrees: Vec<Vec<usize>>,
}

/// Block criterion: principal type and `phi_u(1) = 1` for each involution.
pub fn endotrivial_block(a: &Analysis, rec: &GreenRecord) -> Result<BlockVerdict> {
    let principal_type = principal_type_check(&a.blocks, rec.block, &a.local)?;
    let mut phi_degrees = Vec::new();
    for cu in &a.local.involutions {
        let mut dims = Vec::new();
        for b in 0..cu.len() {
            if a.blocks.induce_block(cu, b)? == Some(rec.block) {
                dims.extend(cu.simples(b)?.iter().map(|s| s.module.dim()));
            }
        }
        phi_degrees.push(dims);
    }
    let passed = principal_type.passed && phi_degrees.iter().all(|d| d == &[1]);
    Ok(BlockVerdict { passed, principal_type, phi_degrees })
}

/// Sum over the blocks of `C_G(u)` inducing to the record's block of
/// `d^u_{chi, phi} phi(1)`, for `u, v, uv`.
pub fn brauer_second_main_sums(a: &Analysis, rec: &GreenRecord) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    for (&u, cu) in a.ctx.involutions.iter().zip(&a.local.involutions) {
        let entries = generalized_decomposition(&a.blocks, rec.chi_row, u, cu)?;
        let mut s = 0;
        for e in entries.iter().filter(|e| e.inducing) {
            let d = e
                .value
                .to_integer()
                .ok_or_else(|| Error::Invalid(format!("non-integral decomposition number {}", e.value)))?;
            s += d * e.phi_degree as i64;
        }
        out.push(s);
    }
    Ok(out)
}

/// Generalized decomposition numbers `d^u` of the principal block, for
/// the `i`-th involution of the Sylow context, restricted to the blocks of
/// `C_G(u)` inducing to the principal block.
pub fn principal_decomposition_column(a: &Analysis, i: usize) -> Result<Vec<GenDecEntry>> {
    let u = a.ctx.involutions[i];
    let cu = &a.local.involutions[i];
    let mut out = Vec::new();
    for &chi in &a.blocks.block(0).irr {
        out.extend(generalized_decomposition(&a.blocks, chi, u, cu)?.into_iter().filter(|e| e.inducing));
    }
    Ok(out)
}

/// Outer tensor product `m (x) k_H` on `G x H`, tested for endo-triviality
/// through the values of its lifted character at 2-elements.
pub fn gxh_tensor_test(m: &ModuleRep, h: &Arc<PermGroup>) -> Result<bool> {
    if h.order() % 2 != 0 {
        return Err(Error::Invalid("H must have even order".into()));
    }
    let g = m.group();
    if !vertex(m)?.trivial_source {
        return Err(Error::NotTrivialSource);
    }
    let (gxh, _) = direct_product(g, h)?;
    let f = m.field();
    let mut gens: Vec<FqMatrix> = m.gens().to_vec();
    gens.extend(h.gens().iter().map(|_| FqMatrix::identity(f, m.dim())));
    let mh = ModuleRep::from_parts(gxh.clone(), f.clone(), gens)?;
    let cl = gxh.classes();
    for c in 0..cl.len() {
        let o = cl.order(c);
        if o > 1 && o.is_power_of_two() && brauer_quotient_dim(&mh, cl.rep(c)) != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `G x H` on disjoint points; returns the group and the offset of `H`.
pub fn direct_product(g: &Arc<PermGroup>, h: &Arc<PermGroup>) -> Result<(Arc<PermGroup>, usize)> {
    let n = g.degree() + h.degree();
    let mut gens: Vec<Perm> = g.gens().iter().map(|p| p.extend(n)).collect();
    gens.extend(h.gens().iter().map(|p| p.shifted(g.degree(), n)));
    let mut names: Vec<String> = g.gen_names().iter().map(|s| format!("{s}_1")).collect();
    names.extend(h.gen_names().iter().map(|s| format!("{s}_2")));
    let gh = PermGroup::new(format!("{}x{}", g.name(), h.name()), n, gens, names, u64::MAX)?;
    Ok((gh, g.degree()))
}

/// Dimension of the Brauer quotient `m^<x> / Tr(m^<x^2>)` for a 2-element
/// `x`: the character value at `x` of the lift of a trivial-source module.
pub fn brauer_quotient_dim(m: &ModuleRep, x: usize) -> usize {
    let g = m.group();
    let a = m.matrix(x).add_scalar(1);
    let fixed = a.rank();
    let sq = m.matrix(g.mul(x, x)).add_scalar(1);
    let fixed_sq = RowSpace::new(&sq.left_nullspace());
    let traces = fixed_sq.basis().mul(&a).rank();
    m.dim() - fixed - traces
}

/// Restriction to P minus projectives is trivial.
pub fn restricts_to_trivial(m: &ModuleRep, p: &Arc<PermGroup>) -> Result<bool> {
    let r = strip_projectives(&m.restrict(p)?)?;
    Ok(r.dim() == 1 && r.gens().iter().all(|g| g.is_identity()))
}
