//! Serializable block summaries.

use serde::Serialize;

use crate::error::Result;

use super::{principal_type_check, Blocks, LocalBlocks, PrincipalTypeEvidence};

#[derive(Clone, Debug, Serialize)]
pub struct BlockSummary {
    pub id: String,
    pub defect: u32,
    pub principal: bool,
    pub algebra_dim: u64,
    pub irr: Vec<String>,
    pub irr_degrees: Vec<i64>,
    pub ibr_dims: Vec<usize>,
    pub shape: Option<String>,
    pub principal_type: Option<PrincipalTypeEvidence>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockReport {
    pub group: String,
    pub order: u64,
    pub field: String,
    pub blocks: Vec<BlockSummary>,
}

/// Summaries of all blocks; the principal-type table is filled for blocks
/// of full defect when local block data is given.
pub fn block_report(blocks: &Blocks, local: Option<&LocalBlocks>) -> Result<BlockReport> {
    let labels = blocks.table().labels();
    let degrees = blocks.table().degrees();
    let mut out = Vec::new();
    for (i, b) in blocks.blocks().iter().enumerate() {
        let ibr_dims = blocks.simples(i)?.iter().map(|s| s.module.dim()).collect();
        let principal_type = match local {
            Some(l) if b.defect() == 2 => Some(principal_type_check(blocks, i, l)?),
            _ => None,
        };
        out.push(BlockSummary {
            id: b.label().to_string(),
            defect: b.defect(),
            principal: b.principal,
            algebra_dim: b.algebra_dim,
            irr: b.irr.iter().map(|&c| labels[c].clone()).collect(),
            irr_degrees: b.irr.iter().map(|&c| degrees[c]).collect(),
            ibr_dims,
            shape: blocks.shape(i)?,
            principal_type,
        });
    }
    Ok(BlockReport {
        group: blocks.group().name().to_string(),
        order: blocks.group().order(),
        field: format!("GF(2^{})", blocks.field().degree()),
        blocks: out,
    })
}
