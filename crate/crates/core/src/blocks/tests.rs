use std::sync::Arc;

use super::*;
use crate::fqlinalg::Gf2e;
use crate::group::spec::example_108;
use crate::group::{build_group, GroupSpec, PermGroup};
use crate::modrep::{one_dim_modules, ModuleRep};

fn setup(spec: &GroupSpec) -> (Arc<PermGroup>, Gf2e, Blocks) {
    let g = build_group(spec, u64::MAX).unwrap();
    let e = g.exponent();
    let f = Gf2e::splitting_for_odd(e >> e.trailing_zeros()).unwrap();
    let b = block_decomposition(&g, &f, None).unwrap();
    (g, f, b)
}

fn degrees(b: &Blocks, i: usize) -> Vec<i64> {
    let d = b.table().degrees();
    b.block(i).irr.iter().map(|&c| d[c]).collect()
}

#[test]
fn a5_blocks() {
    let (g, f, b) = setup(&GroupSpec::recipe("A5"));
    assert_eq!(b.len(), 2);
    assert_eq!(degrees(&b, 0), vec![1, 3, 3, 5]);
    assert_eq!(degrees(&b, 1), vec![4]);
    assert_eq!((b.block(0).defect(), b.block(1).defect()), (2, 0));
    let dims: Vec<usize> = b.simples(0).unwrap().iter().map(|s| s.module.dim()).collect();
    assert_eq!(dims, vec![1, 2, 2]);
    assert_eq!(b.simples(1).unwrap()[0].module.dim(), 4);
    assert_eq!(b.shape(1).unwrap().as_deref(), Some("Mat4(k)"));

    let ctx = g.sylow_context().unwrap();
    let local = LocalBlocks::new(&g, &f, &ctx).unwrap();
    let ev = principal_type_check(&b, 0, &local).unwrap();
    assert!(ev.passed);
    assert_eq!(ev.entries.len(), 5);
    let img = b.brauer_map(1, &local.p).unwrap();
    assert!(!img.is_block_idempotent);
    assert!(img.coefficients.iter().all(|&x| x == 0));
    assert!(matches!(principal_type_check(&b, 1, &local), Err(crate::Error::NotFullDefect)));

    assert_eq!(b.block_of(&ModuleRep::trivial(&g, &f)).unwrap(), 0);
    let ind = one_dim_modules(&ctx.n, &f)[1].induce(&g).unwrap();
    assert_eq!(b.block_of(&ind).unwrap(), 0);
    let perm = ModuleRep::trivial(&ctx.n, &f).induce(&g).unwrap();
    assert!(matches!(b.block_of(&perm), Err(crate::Error::NotIndecomposable)));

    let nb = block_decomposition(&ctx.n, &f, None).unwrap();
    assert_eq!(nb.len(), 1);
    assert_eq!(b.induce_block(&nb, 0).unwrap(), Some(0));
}

#[test]
fn a4_and_klein4_have_one_block() {
    let (_, _, b) = setup(&GroupSpec::recipe("A4"));
    assert_eq!(b.len(), 1);
    let dims: Vec<usize> = b.simples(0).unwrap().iter().map(|s| s.module.dim()).collect();
    assert_eq!(dims, vec![1, 1, 1]);
    let (_, _, b) = setup(&GroupSpec::recipe("klein4"));
    assert_eq!(b.len(), 1);
    assert_eq!(b.shape(0).unwrap().as_deref(), Some("kP"));
}

#[test]
fn order_108_block_shapes() {
    let (g, f, b) = setup(&example_108());
    assert_eq!(b.len(), 7);
    let mut dims: Vec<u64> = b.blocks().iter().map(|x| x.algebra_dim).collect();
    assert_eq!(dims.iter().sum::<u64>(), 108);
    dims.sort();
    assert_eq!(dims, vec![4, 8, 8, 8, 8, 36, 36]);
    let mut shapes: Vec<String> = (0..b.len()).map(|i| b.shape(i).unwrap().unwrap()).collect();
    shapes.sort();
    assert_eq!(shapes, vec!["Mat2(kC2)", "Mat2(kC2)", "Mat2(kC2)", "Mat2(kC2)", "Mat3(kP)", "Mat3(kP)", "kP"]);
    // the Mat3(kP) blocks map to single blocks of C_G(u) under Br_u
    let ctx = g.sylow_context().unwrap();
    let local = LocalBlocks::new(&g, &f, &ctx).unwrap();
    for i in 0..b.len() {
        if b.block(i).algebra_dim == 36 {
            for cb in &local.involutions {
                assert!(b.brauer_map(i, cb).unwrap().is_block_idempotent);
            }
        }
    }
}

#[test]
fn generalized_decomposition_numbers() {
    for (r, expect) in [("A4", vec![(3, -1)]), ("A5", vec![(5, 1), (3, -1)])] {
        let (g, f, b) = setup(&GroupSpec::recipe(r));
        let ctx = g.sylow_context().unwrap();
        let u = ctx.involutions[0];
        let cu = block_decomposition(&g.centralizer(&[u]), &f, None).unwrap();
        let degrees = b.table().degrees();
        for (deg, d) in expect {
            let chi = degrees.iter().position(|&x| x == deg).unwrap();
            let entries = generalized_decomposition(&b, chi, u, &cu).unwrap();
            assert_eq!(entries.len(), 1);
            assert_eq!(entries[0].value.to_integer(), Some(d), "{r} chi {deg}");
            assert!(entries[0].inducing);
        }
    }
}

#[test]
fn brauer_correspondence_for_full_defect() {
    for spec in [GroupSpec::recipe("A5"), example_108(), GroupSpec::recipe("L2(11)")] {
        let (g, f, b) = setup(&spec);
        let ctx = g.sylow_context().unwrap();
        let nb = block_decomposition(&ctx.n, &f, None).unwrap();
        let full_g: Vec<usize> = (0..b.len()).filter(|&i| b.block(i).defect() == 2).collect();
        let full_n: Vec<usize> = (0..nb.len()).filter(|&i| nb.block(i).defect() == 2).collect();
        assert_eq!(full_g.len(), full_n.len(), "{}", g.name());
        let mut images: Vec<usize> = full_n.iter().map(|&j| b.induce_block(&nb, j).unwrap().unwrap()).collect();
        images.sort();
        assert_eq!(images, full_g);
        // principal to principal
        assert_eq!(b.induce_block(&nb, 0).unwrap(), Some(0));
    }
}
