//! Projectivity, vertices, sources and Heller translates.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fqlinalg::{FqMatrix, RowSpace};
use crate::group::PermGroup;

use super::hom::spin_basis;
use super::meataxe::{decompose, ensure_indecomposable, is_isomorphic};
use super::ModuleRep;

/// `m` is projective iff the norm element of a Sylow 2-subgroup acts with
/// rank `dim / |P|`.
pub fn is_projective(m: &ModuleRep) -> Result<bool> {
    let g = m.group();
    let p = g.sylow2();
    let idx = g.embedding(&p)?;
    let size = idx.len();
    if m.dim() % size != 0 {
        return Ok(false);
    }
    Ok(m.sum_of(&idx).rank() * size == m.dim())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Vertex {
    #[serde(rename = "1")]
    Trivial,
    C2,
    P,
}

#[derive(Clone, Debug, Serialize)]
pub struct VertexReport {
    pub vertex: Vertex,
    /// For a cyclic vertex, the involution (element index of G) generating it.
    pub involution: Option<usize>,
    pub trivial_source: bool,
    /// Dimensions of the summands of the restriction to P.
    pub restriction_dims: Vec<usize>,
}

/// Vertex and source type of an indecomposable module for a group with
/// Klein-four Sylow 2-subgroup, read off from the summands of `Res_P m`.
///
/// Over `kP` the indecomposable permutation modules are `k`, the three
/// modules `Ind_<t>^P k` and `kP`; every other non-free summand has vertex P.
pub fn vertex(m: &ModuleRep) -> Result<VertexReport> {
    ensure_indecomposable(m)?;
    let g = m.group();
    let ctx = g.sylow_context()?;
    let p = &ctx.p;
    let res = m.restrict(p)?;
    if is_projective(m)? {
        return Ok(VertexReport {
            vertex: Vertex::Trivial,
            involution: None,
            trivial_source: true,
            restriction_dims: vec![4; m.dim() / 4],
        });
    }
    let induced: Vec<(usize, ModuleRep)> = ctx
        .involutions
        .iter()
        .map(|&t| {
            let pt = p.index_of(g.element(t)).unwrap();
            let c2 = p.subgroup("C2", &[pt]);
            (t, ModuleRep::trivial(&c2, m.field()).induce(p).unwrap())
        })
        .collect();
    let dec = decompose(&res, 0xdec)?;
    let mut vertex_c2: Option<usize> = None;
    let mut has_p = false;
    let mut trivial_source = true;
    for class in 0..dec.classes.len() {
        let s = dec.representative(class);
        match s.dim() {
            1 => has_p = true,
            4 if is_projective(s)? => {}
            2 => {
                let mut hit = None;
                for (t, ind) in &induced {
                    if is_isomorphic(s, ind)? {
                        hit = Some(*t);
                        break;
                    }
                }
                match hit {
                    Some(t) => {
                        vertex_c2.get_or_insert(t);
                    }
                    None => {
                        has_p = true;
                        trivial_source = false;
                    }
                }
            }
            _ => {
                has_p = true;
                trivial_source = false;
            }
        }
    }
    let (vertex, involution) = if has_p {
        (Vertex::P, None)
    } else if let Some(t) = vertex_c2 {
        (Vertex::C2, Some(t))
    } else {
        (Vertex::Trivial, None)
    };
    let mut restriction_dims = dec.dims();
    restriction_dims.sort_unstable();
    Ok(VertexReport { vertex, involution, trivial_source, restriction_dims })
}

/// Value at `u` of the character of the lift of a trivial-source module:
/// the number of trivial summands of `Res_<u> m`, i.e. `dim - 2 rank(u - 1)`.
pub fn lift_char_value(m: &ModuleRep, u: usize) -> Result<i64> {
    let g = m.group();
    if g.elem_order(u) > 2 {
        return Err(Error::NotInvolution);
    }
    if !vertex(m)?.trivial_source {
        return Err(Error::NotTrivialSource);
    }
    Ok(trivial_summands(m, u))
}

pub(crate) fn trivial_summands(m: &ModuleRep, u: usize) -> i64 {
    m.dim() as i64 - 2 * m.matrix(u).add_scalar(1).rank() as i64
}

/// Heller translate `Omega^n(m)` with projective summands removed;
/// negative `n` goes through duals.
pub fn omega(m: &ModuleRep, n: i32) -> Result<ModuleRep> {
    let mut cur = m.clone();
    if n >= 0 {
        for _ in 0..n {
            cur = omega_once(&cur)?;
        }
    } else {
        cur = cur.dual();
        for _ in 0..(-n) {
            cur = omega_once(&cur)?;
        }
        cur = cur.dual();
    }
    Ok(cur)
}

/// Kernel of a free cover, minus its projective summands.
fn omega_once(m: &ModuleRep) -> Result<ModuleRep> {
    let g = m.group();
    let f = m.field();
    let seeds = spin_basis(m).seeds;
    let n = g.order() as usize;
    let d = m.dim();
    let mut phi = FqMatrix::zeros(f, seeds.len() * n, d);
    for (i, &s) in seeds.iter().enumerate() {
        for x in 0..n {
            phi.row_mut(i * n + x).copy_from_slice(m.matrix(x).row(s));
        }
    }
    let regular = ModuleRep::regular(g, f);
    let copies: Vec<&ModuleRep> = seeds.iter().map(|_| &regular).collect();
    let free = ModuleRep::direct_sum_all(g, f, &copies);
    let kernel = RowSpace::new(&phi.left_nullspace());
    let k = free.submodule(&kernel);
    strip_projectives(&k)
}

/// Direct sum of the non-projective summands.
pub fn strip_projectives(m: &ModuleRep) -> Result<ModuleRep> {
    if m.dim() == 0 {
        return Ok(m.clone());
    }
    let dec = decompose(m, 0x0e6a)?;
    let mut keep = Vec::new();
    for s in &dec.summands {
        if !is_projective(&s.module)? {
            keep.push(&s.module);
        }
    }
    Ok(ModuleRep::direct_sum_all(m.group(), m.field(), &keep))
}

/// `Ind_Q^G k` for the subgroup generated by the given element indices.
pub fn permutation_module(g: &Arc<PermGroup>, field: &crate::fqlinalg::Gf2e, gens: &[usize]) -> Result<ModuleRep> {
    let q = g.subgroup("Q", gens);
    ModuleRep::trivial(&q, field).induce(g)
}
