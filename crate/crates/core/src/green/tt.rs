//! The torsion subgroup `TT(G)` of the group of endo-trivial modules.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::abelian::invariant_factors_from_table;
use crate::modrep::vertex::strip_projectives;
use crate::modrep::{is_isomorphic, omega, one_dim_modules, ModuleRep, VertexReport};

use super::{
    brauer_second_main_sums, endotrivial_block, endotrivial_character, endotrivial_direct, green_inverse,
    restricts_to_trivial, Analysis, BlockVerdict, GreenRecord, DIRECT_TEST_DIM_CAP,
};

#[derive(Clone, Debug, Serialize)]
pub struct RecordSummary {
    pub source: String,
    pub dim: usize,
    pub block: String,
    pub chi: [i64; 4],
    pub chi_label: String,
    pub chi_norm: i64,
    pub vertex: VertexReport,
    pub round_trip: bool,
    pub induced_dims: Vec<usize>,
    /// `None` when the dimension is above the cap of the direct test.
    pub direct: Option<bool>,
    pub character: bool,
    pub block_test: BlockVerdict,
    /// Generalized decomposition sums at `u, v, uv`.
    pub second_main_sums: Vec<i64>,
    pub endotrivial: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TorsionGroupStructure {
    pub group: String,
    pub order: u64,
    pub sylow_tag: u64,
    pub x_n: Vec<String>,
    pub x_n_invariant_factors: Vec<u64>,
    pub records: Vec<RecordSummary>,
    /// Record indices of the endo-trivial correspondents.
    pub tt: Vec<usize>,
    pub tt_order: usize,
    pub tt_invariant_factors: Vec<u64>,
    /// Record index of each one-dimensional kG-module.
    pub x_g: Vec<usize>,
    /// Each member of TT restricts to `k` plus projectives on P.
    pub tt_in_restriction_kernel: bool,
    pub tf_rank: u32,
    /// Dimension of `Omega(k)` over `kP`, the torsion-free generator.
    pub tf_generator_dim: usize,
    #[serde(skip)]
    pub full_records: Vec<GreenRecord>,
}

/// Records for all of `X(N)`, their verdicts, and the group structure of
/// the endo-trivial ones under tensor product.
pub fn tt_group(a: &Analysis) -> Result<TorsionGroupStructure> {
    let xs = a.x_n();
    let labels = a.blocks.table().labels();
    let mut records = Vec::with_capacity(xs.len());
    let mut summaries = Vec::with_capacity(xs.len());
    for (i, x) in xs.iter().enumerate() {
        let rec = green_inverse(a, i, x)?;
        let direct = if a.direct && rec.dim() <= DIRECT_TEST_DIM_CAP {
            Some(endotrivial_direct(&rec.correspondent)?)
        } else {
            None
        };
        let character = endotrivial_character(&rec.correspondent)?;
        let block_test = endotrivial_block(a, &rec)?;
        if direct.is_some_and(|d| d != character) || character != block_test.passed {
            return Err(Error::Invalid(format!(
                "verdicts disagree for {}: direct {direct:?}, character {character}, block {}",
                rec.label, block_test.passed
            )));
        }
        let second_main_sums = brauer_second_main_sums(a, &rec)?;
        summaries.push(RecordSummary {
            source: rec.label.clone(),
            dim: rec.dim(),
            block: a.blocks.block(rec.block).label().to_string(),
            chi: rec.chi,
            chi_label: labels[rec.chi_row].clone(),
            chi_norm: rec.chi_norm,
            vertex: rec.vertex.clone(),
            round_trip: rec.round_trip,
            induced_dims: rec.induced_dims.clone(),
            direct,
            character,
            block_test,
            second_main_sums,
            endotrivial: character,
        });
        records.push(rec);
    }
    for (i, r) in records.iter().enumerate() {
        for (j, s) in records.iter().enumerate().skip(i + 1) {
            if r.block == s.block && summaries[i].endotrivial != summaries[j].endotrivial {
                return Err(Error::Invalid(format!("verdicts differ inside block {}", r.block)));
            }
        }
    }

    let xn_table = one_dim_table(&xs)?;
    let x_n_invariant_factors = invariant_factors_from_table(&xn_table, 0);

    let tt: Vec<usize> = (0..records.len()).filter(|&i| summaries[i].endotrivial).collect();
    let mut table = vec![vec![0usize; tt.len()]; tt.len()];
    for (i, &ri) in tt.iter().enumerate() {
        for (j, &rj) in tt.iter().enumerate() {
            let expect = xn_table[ri][rj];
            let pos = tt
                .iter()
                .position(|&k| k == expect)
                .ok_or_else(|| Error::Invalid("endo-trivial records are not closed under the law of X(N)".into()))?;
            let a_mod = &records[ri].correspondent;
            let b_mod = &records[rj].correspondent;
            let prod = if a_mod.dim() == 1 || b_mod.dim() == 1 {
                a_mod.tensor(b_mod)?
            } else {
                strip_projectives(&a_mod.tensor(b_mod)?)?
            };
            if !is_isomorphic(&prod, &records[expect].correspondent)? {
                return Err(Error::Invalid(format!(
                    "tensor of {} and {} is not the correspondent of their product",
                    records[ri].label, records[rj].label
                )));
            }
            table[i][j] = pos;
        }
    }
    let tt_invariant_factors = invariant_factors_from_table(&table, 0);

    let mut x_g = Vec::new();
    for m in one_dim_modules(&a.group, &a.field) {
        let res = m.restrict(&a.ctx.n)?;
        let k = xs
            .iter()
            .position(|x| x.gens() == res.gens())
            .ok_or_else(|| Error::Invalid("restriction of a one-dimensional module is missing from X(N)".into()))?;
        if !summaries[k].endotrivial || !is_isomorphic(&records[k].correspondent, &m)? {
            return Err(Error::Invalid(format!(
                "one-dimensional module {} is not its own correspondent",
                records[k].label
            )));
        }
        x_g.push(k);
    }

    let mut in_kernel = true;
    for &i in &tt {
        in_kernel &= restricts_to_trivial(&records[i].correspondent, &a.ctx.p)?;
    }
    let tf = omega(&ModuleRep::trivial(&a.ctx.p, &a.field), 1)?;

    Ok(TorsionGroupStructure {
        group: a.group.name().to_string(),
        order: a.group.order(),
        sylow_tag: a.ctx.tag,
        x_n: records.iter().map(|r| r.label.clone()).collect(),
        x_n_invariant_factors,
        records: summaries,
        tt_order: tt.len(),
        tt,
        tt_invariant_factors,
        x_g,
        tt_in_restriction_kernel: in_kernel,
        tf_rank: 1,
        tf_generator_dim: tf.dim(),
        full_records: records,
    })
}

/// Multiplication table of one-dimensional modules by their scalars.
fn one_dim_table(xs: &[ModuleRep]) -> Result<Vec<Vec<usize>>> {
    let mut table = vec![vec![0; xs.len()]; xs.len()];
    for (i, a) in xs.iter().enumerate() {
        for (j, b) in xs.iter().enumerate() {
            let prod = a.tensor(b)?;
            table[i][j] = xs
                .iter()
                .position(|x| x.gens() == prod.gens())
                .ok_or_else(|| Error::Invalid("X(N) is not closed under tensor".into()))?;
        }
    }
    Ok(table)
}
