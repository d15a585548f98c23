//! Simple modules per block, Brauer characters and generalized
//! decomposition numbers.

use serde::Serialize;

use crate::chartab::ClassFunction;
use crate::error::{Error, Result};
use crate::fqlinalg::Cyclotomic;
use crate::modrep::{brauer_character, distinct_factors, ModuleRep, DEFAULT_DIM_CAP};

use super::Blocks;

#[derive(Clone, Debug)]
pub struct SimpleModule {
    pub label: String,
    pub module: ModuleRep,
    pub brauer: ClassFunction,
}

/// Composition factors of the block ideal `e kG`, up to isomorphism.
pub fn simples_of_block(blocks: &Blocks, b: usize) -> Result<Vec<SimpleModule>> {
    let g = blocks.group();
    let n = g.order() as usize;
    if n > DEFAULT_DIM_CAP {
        return Err(Error::SizeCapExceeded(format!("regular module of dimension {n}")));
    }
    let cl = g.classes();
    let coef = &blocks.block(b).idempotent.coefficients;
    let e: Vec<u32> = (0..n).map(|x| coef[cl.class_of(x)]).collect();
    let reg = ModuleRep::regular(g, blocks.field());
    let ideal = reg.spin(&[e]);
    if ideal.dim() as u64 != blocks.block(b).algebra_dim {
        return Err(Error::Invalid(format!(
            "block ideal has dimension {} instead of {}",
            ideal.dim(),
            blocks.block(b).algebra_dim
        )));
    }
    let m = reg.submodule(&ideal);
    let mut out: Vec<SimpleModule> = Vec::new();
    for (s, _) in distinct_factors(&m, 0x51e + b as u64)? {
        let brauer = brauer_character(&s)?;
        out.push(SimpleModule { label: String::new(), module: s, brauer });
    }
    out.sort_by(|x, y| (x.module.dim(), x.brauer.values()).cmp(&(y.module.dim(), y.brauer.values())));
    for i in 0..out.len() {
        let d = out[i].module.dim();
        let k = out[..i].iter().filter(|s| s.module.dim() == d).count();
        out[i].label = format!("{d}{}", (b'a' + (k % 26) as u8) as char);
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct GenDecEntry {
    pub chi: String,
    /// Element index of the involution in G.
    pub u: usize,
    /// Block of `C_G(u)` and label of the simple module there.
    pub phi_block: String,
    pub phi: String,
    pub phi_degree: usize,
    pub value: Cyclotomic,
    /// Whether the block of `phi` induces to the block of `chi`.
    pub inducing: bool,
}

/// Solves `chi(u s) = sum_phi d^u_{chi,phi} phi(s)` over the 2-regular
/// classes `s` of `C_G(u)`, whose blocks are `cu`.
pub fn generalized_decomposition(blocks: &Blocks, chi: usize, u: usize, cu: &Blocks) -> Result<Vec<GenDecEntry>> {
    let g = blocks.group();
    let c = cu.group();
    if g.elem_order(u) != 2 {
        return Err(Error::NotInvolution);
    }
    let ue = g.element(u);
    if !c.contains(ue) || c.gens().iter().any(|x| &x.mul(ue) != &ue.mul(x)) {
        return Err(Error::Invalid("second group is not the centralizer of u".into()));
    }
    let simples = cu.all_simples()?;
    let cc = c.classes();
    let regular = cc.two_regular();
    if simples.len() != regular.len() {
        return Err(Error::SingularSystem(format!(
            "{} Brauer characters for {} 2-regular classes",
            simples.len(),
            regular.len()
        )));
    }
    let chi_row = &blocks.table().irr()[chi];
    let gc = g.classes();
    let a: Vec<Vec<Cyclotomic>> =
        regular.iter().map(|&s| simples.iter().map(|(_, phi)| phi.brauer.value(s).clone()).collect()).collect();
    let rhs: Vec<Cyclotomic> = regular
        .iter()
        .map(|&s| {
            let se = g.index_of(c.element(cc.rep(s))).unwrap();
            chi_row.value(gc.class_of(g.mul(u, se))).clone()
        })
        .collect();
    let d = solve(a, rhs).ok_or_else(|| Error::SingularSystem("Brauer character matrix is singular".into()))?;
    let target = blocks.block_of_character(chi);
    let labels = blocks.table().labels();
    let mut out = Vec::with_capacity(d.len());
    for ((cb, phi), value) in simples.iter().zip(d) {
        out.push(GenDecEntry {
            chi: labels[chi].clone(),
            u,
            phi_block: cu.block(*cb).label().to_string(),
            phi: phi.label.clone(),
            phi_degree: phi.module.dim(),
            value,
            inducing: blocks.induce_block(cu, *cb)? == Some(target),
        });
    }
    Ok(out)
}

/// Exact Gaussian elimination for a square system.
fn solve(mut a: Vec<Vec<Cyclotomic>>, mut b: Vec<Cyclotomic>) -> Option<Vec<Cyclotomic>> {
    let n = b.len();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(p, col);
        b.swap(p, col);
        let inv = a[col][col].inv()?;
        for x in a[col].iter_mut() {
            *x = &*x * &inv;
        }
        b[col] = &b[col] * &inv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let t = a[r][col].clone();
                for k in 0..n {
                    let sub = &t * &a[col][k];
                    a[r][k] = &a[r][k] - &sub;
                }
                let sub = &t * &b[col];
                b[r] = &b[r] - &sub;
            }
        }
    }
    Some(b)
}
