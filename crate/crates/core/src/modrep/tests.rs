use std::sync::Arc;

use super::*;
use crate::chartab::{CharacterTable, ClassFunction};
use crate::fqlinalg::{solve_sylvester, Gf2e};
use crate::group::{build_group, GroupSpec, PermGroup};

fn setup(r: &str) -> (Arc<PermGroup>, Gf2e) {
    let g = build_group(&GroupSpec::recipe(r), u64::MAX).unwrap();
    let e = g.exponent();
    let f = Gf2e::splitting_for_odd(e >> e.trailing_zeros()).unwrap();
    (g, f)
}

#[test]
fn one_dimensional_modules() {
    let (a4, f) = setup("A4");
    assert_eq!(one_dim_modules(&a4, &f).len(), 3);
    let (a5, f) = setup("A5");
    assert_eq!(one_dim_modules(&a5, &f).len(), 1);
    let (k4, f) = setup("klein4");
    assert_eq!(one_dim_modules(&k4, &f).len(), 1);
}

#[test]
fn permutation_module_on_sylow_cosets_splits() {
    let (a4, f) = setup("A4");
    let p = a4.sylow2();
    let ind = ModuleRep::trivial(&p, &f).induce(&a4).unwrap();
    let dec = decompose(&ind, 1).unwrap();
    assert_eq!(dec.dims(), vec![1, 1, 1]);
    assert_eq!(dec.classes.len(), 3);
}

#[test]
fn regular_a4_is_three_projectives() {
    let (a4, f) = setup("A4");
    let reg = ModuleRep::regular(&a4, &f);
    let dec = decompose(&reg, 2).unwrap();
    assert_eq!(dec.dims(), vec![4, 4, 4]);
    assert_eq!(dec.classes.len(), 3);
    for s in &dec.summands {
        assert!(is_projective(&s.module).unwrap());
        assert_eq!(vertex(&s.module).unwrap().vertex, Vertex::Trivial);
    }
}

#[test]
fn induced_from_normalizer_in_a5() {
    let (a5, f) = setup("A5");
    let n = a5.sylow_context().unwrap().n;
    let ones = one_dim_modules(&n, &f);
    assert_eq!(ones.len(), 3);
    let ind = ones[1].induce(&a5).unwrap();
    assert_eq!(ind.dim(), 5);
    let dec = decompose(&ind, 3).unwrap();
    assert!(dec.is_indecomposable());
    let rep = vertex(&ind).unwrap();
    assert_eq!(rep.vertex, Vertex::P);
    assert!(rep.trivial_source);
    let ctx = a5.sylow_context().unwrap();
    for &u in &ctx.involutions {
        assert_eq!(lift_char_value(&ind, u).unwrap(), 1);
    }
    // Ind k = k + 4, the 4 projective simple
    let triv = ones[0].induce(&a5).unwrap();
    let dec = decompose(&triv, 4).unwrap();
    let mut dims = dec.dims();
    dims.sort();
    assert_eq!(dims, vec![1, 4]);
}

#[test]
fn hom_spaces_agree_with_sylvester() {
    let (a4, f) = setup("A4");
    let p = a4.sylow2();
    let m = ModuleRep::trivial(&p, &f).induce(&a4).unwrap();
    let reg = ModuleRep::regular(&a4, &f);
    for (a, b) in [(&m, &reg), (&reg, &m), (&m, &m)] {
        let h = hom_space(a, b).unwrap();
        let s = solve_sylvester(&f, a.dim(), b.dim(), a.gens(), b.gens());
        assert_eq!(h.len(), s.len());
        for x in &h {
            for (ga, gb) in a.gens().iter().zip(b.gens()) {
                assert_eq!(ga.mul(x), x.mul(gb));
            }
        }
    }
}

#[test]
fn heller_translates_of_trivial() {
    for r in ["klein4", "A4"] {
        let (g, f) = setup(r);
        let k = ModuleRep::trivial(&g, &f);
        let om = omega(&k, 1).unwrap();
        assert_eq!(om.dim(), 3, "{r}");
        let back = omega(&om, -1).unwrap();
        assert!(is_isomorphic(&back, &k).unwrap());
        let rep = vertex(&om).unwrap();
        assert_eq!(rep.vertex, Vertex::P);
        assert!(!rep.trivial_source);
        assert!(lift_char_value(&om, g.sylow_context().unwrap().involutions[0]).is_err());
    }
}

#[test]
fn vertices_over_klein_four() {
    let (p, f) = setup("klein4");
    let c2 = p.subgroup("C2", &[p.index_of(&p.gens()[0]).unwrap()]);
    let ind = ModuleRep::trivial(&c2, &f).induce(&p).unwrap();
    let rep = vertex(&ind).unwrap();
    assert_eq!(rep.vertex, Vertex::C2);
    assert!(rep.trivial_source);
    assert_eq!(vertex(&ModuleRep::trivial(&p, &f)).unwrap().vertex, Vertex::P);
    let sum = ind.direct_sum(&ind).unwrap();
    assert!(matches!(vertex(&sum), Err(crate::Error::NotIndecomposable)));
}

#[test]
fn simples_of_a5_and_brauer_characters() {
    let (a5, f) = setup("A5");
    let reg = ModuleRep::regular(&a5, &f);
    let simples = distinct_factors(&reg, 5).unwrap();
    let dims: Vec<usize> = simples.iter().map(|(s, _)| s.dim()).collect();
    assert_eq!(dims, vec![1, 2, 2, 4]);
    let mults: Vec<usize> = simples.iter().map(|(_, m)| *m).collect();
    // Cartan matrix of the principal block times the simple dimensions
    assert_eq!(mults, vec![12, 8, 8, 4]);
    let t = CharacterTable::compute(&a5, None).unwrap();
    let four = &simples[3].0;
    let phi = brauer_character(four).unwrap();
    let chi4 = t.irr().iter().find(|c| c.degree() == Some(4)).unwrap();
    let cl = a5.classes();
    for c in cl.two_regular() {
        assert_eq!(phi.value(c), chi4.value(c));
    }
    assert!(is_irreducible(four, 1).unwrap());
}

#[test]
fn lifted_character_of_trivial_source_module() {
    let (a5, f) = setup("A5");
    let n = a5.sylow_context().unwrap().n;
    let ind = one_dim_modules(&n, &f)[1].induce(&a5).unwrap();
    let chi = lift_character(&ind).unwrap();
    let t = CharacterTable::compute(&a5, None).unwrap();
    assert!(t.position(&chi).is_some());
    assert_eq!(chi.degree(), Some(5));
    let perm = ModuleRep::trivial(&n, &f).induce(&a5).unwrap();
    let chi = lift_character(&perm).unwrap();
    let expected = crate::chartab::induce(&ClassFunction::trivial(crate::chartab::ClassInfo::of(&n)), &n, &a5).unwrap();
    assert_eq!(chi, expected);
}

#[test]
fn save_and_load() {
    let (a4, f) = setup("A4");
    let m = omega(&ModuleRep::trivial(&a4, &f), 1).unwrap();
    let doc = save_module(&m);
    let back = load_module(&a4, &doc).unwrap();
    assert_eq!(back.gens(), m.gens());
    let (a5, _) = setup("A5");
    assert!(matches!(load_module(&a5, &doc), Err(crate::Error::GroupMismatch)));
    let mut bad = doc.clone();
    bad["generators"][0] = serde_json::json!("AAAA");
    assert!(matches!(load_module(&a4, &bad), Err(crate::Error::SchemaError(_))));
}
