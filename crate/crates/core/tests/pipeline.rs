use std::sync::Arc;

use endotriv::blocks::block_decomposition;
use endotriv::fqlinalg::{FqMatrix, Gf2e};
use endotriv::green::{endotrivial_direct, green_inverse, tt_group, Analysis};
use endotriv::group::{build_group, GroupSpec, PermGroup};
use endotriv::modrep::{decompose, is_isomorphic, is_projective, ModuleRep};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn group(name: &str) -> Arc<PermGroup> {
    build_group(&GroupSpec::recipe(name), u64::MAX).unwrap()
}

#[test]
fn end_of_the_a5_five_dimensional_module() {
    let a = Analysis::new(&group("A5"), None).unwrap();
    let xs = a.x_n();
    let rec = green_inverse(&a, 1, &xs[1]).unwrap();
    assert_eq!(rec.dim(), 5);
    assert!(endotrivial_direct(&rec.correspondent).unwrap());

    let m = &rec.correspondent;
    let end = m.dual().tensor(m).unwrap();
    let dec = decompose(&end, 3).unwrap();
    let mut proj = 0;
    let mut rest = Vec::new();
    for s in &dec.summands {
        if is_projective(&s.module).unwrap() {
            proj += s.module.dim();
        } else {
            rest.push(&s.module);
        }
    }
    assert_eq!(proj, 24);
    assert_eq!(rest.len(), 1);
    assert!(is_isomorphic(rest[0], &ModuleRep::trivial(m.group(), m.field())).unwrap());
}

#[test]
fn correspondents_of_trivial_modules_are_trivial() {
    for name in ["A4", "A5", "L2(11)"] {
        let a = Analysis::new(&group(name), None).unwrap();
        let rec = green_inverse(&a, 0, &a.x_n()[0]).unwrap();
        let k = ModuleRep::trivial(&a.group, &a.field);
        assert!(is_isomorphic(&rec.correspondent, &k).unwrap(), "{name}");
    }
}

#[test]
fn tensor_law_matches_x_n() {
    let a = Analysis::new(&group("L2(11)"), None).unwrap();
    let t = tt_group(&a).unwrap();
    assert_eq!(t.tt_order, 3);
    assert_eq!(t.x_g, vec![0]);
    assert!(t.tt_in_restriction_kernel);
}

#[test]
fn block_idempotents_for_every_aux_prime() {
    let g = group("A5");
    let f = Gf2e::splitting_for_odd(15).unwrap();
    let a = block_decomposition(&g, &f, Some(31)).unwrap();
    let b = block_decomposition(&g, &f, Some(61)).unwrap();
    assert_eq!(a.len(), b.len());
    for (x, y) in a.blocks().iter().zip(b.blocks()) {
        assert_eq!(x.idempotent.coefficients, y.idempotent.coefficients);
    }
}

#[test]
fn spec_matrix_examples() {
    let f = Gf2e::new(1).unwrap();
    assert_eq!(FqMatrix::zeros(&f, 0, 0).rank(), 0);
    assert_eq!(FqMatrix::identity(&f, 4).rank(), 4);
    assert_eq!(FqMatrix::from_vec(&f, 4, 4, vec![1; 16]).rank(), 1);
    let z = FqMatrix::zeros(&f, 2, 5);
    assert_eq!(z.nullspace().cols(), 5);
    assert_eq!(FqMatrix::identity(&f, 2).kronecker(&FqMatrix::identity(&f, 3)), FqMatrix::identity(&f, 6));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_of_products_and_kronecker(seed in any::<u64>(), e in 1u32..5, n in 1usize..7) {
        let f = Gf2e::new(e).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = FqMatrix::random(&f, n, n + 1, &mut rng);
        let b = FqMatrix::random(&f, n + 1, n, &mut rng);
        let ab = a.mul(&b);
        prop_assert!(ab.rank() <= a.rank().min(b.rank()));
        prop_assert_eq!(a.kronecker(&b).rank(), a.rank() * b.rank());
        let null = a.nullspace();
        prop_assert_eq!(null.cols(), a.cols() - a.rank());
        prop_assert!(a.mul(&null).is_zero());
    }
}
