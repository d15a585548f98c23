//! Group specifications (JSON) and named recipes.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::perm::Perm;
use super::PermGroup;
use crate::error::{Error, Result};

/// Largest group realized through its regular action inside a semidirect product.
pub const REGULAR_DEGREE_CAP: usize = 5_000;

/// Exactly one of `recipe`, `generators`, `product`, `semidirect` is set.
#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recipe: Option<String>,
    /// Generators as lists of cycles on points `1..=degree`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<Vec<u32>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator_names: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub product: Option<Vec<GroupSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub semidirect: Option<Box<Semidirect>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct Semidirect {
    pub normal: GroupSpec,
    pub acting: GroupSpec,
    /// For each acting generator, the images of the normal generators as
    /// words such as `"a^-1*b"`. Omitted generators act trivially.
    #[serde(default)]
    pub action: BTreeMap<String, BTreeMap<String, String>>,
}

impl GroupSpec {
    pub fn recipe(name: &str) -> Self {
        GroupSpec { recipe: Some(name.to_string()), ..Default::default() }
    }

    pub fn direct(factors: Vec<GroupSpec>) -> Self {
        GroupSpec { product: Some(factors), ..Default::default() }
    }

    pub fn semidirect(normal: GroupSpec, acting: GroupSpec, action: &[(&str, &[(&str, &str)])]) -> Self {
        let action = action
            .iter()
            .map(|(h, imgs)| (h.to_string(), imgs.iter().map(|(a, w)| (a.to_string(), w.to_string())).collect()))
            .collect();
        GroupSpec { semidirect: Some(Box::new(Semidirect { normal, acting, action })), ..Default::default() }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::SchemaError(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serializes")
    }

    /// Display name: explicit name, else derived from the structure.
    pub fn display_name(&self) -> String {
        if let Some(n) = &self.name {
            return n.clone();
        }
        if let Some(r) = &self.recipe {
            return r.clone();
        }
        if let Some(fs) = &self.product {
            return fs.iter().map(|f| f.display_name()).collect::<Vec<_>>().join("x");
        }
        if let Some(sd) = &self.semidirect {
            return format!("({}):({})", sd.normal.display_name(), sd.acting.display_name());
        }
        "G".to_string()
    }
}

/// Generators as 0-based permutations plus their names.
struct Raw {
    degree: usize,
    gens: Vec<Perm>,
    names: Vec<String>,
}

fn cycles(n: usize, cs: &[&[u32]]) -> Perm {
    let cs: Vec<Vec<u32>> = cs.iter().map(|c| c.iter().map(|x| x - 1).collect()).collect();
    Perm::from_cycles(n, &cs).unwrap()
}

fn named(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn default_names(k: usize) -> Vec<String> {
    (1..=k).map(|i| format!("g{i}")).collect()
}

fn recipe(name: &str) -> Result<(Raw, u64)> {
    let raw = |degree, gens: Vec<Perm>, names: Vec<String>| Raw { degree, gens, names };
    match name {
        "klein4" => {
            Ok((raw(4, vec![cycles(4, &[&[1, 2], &[3, 4]]), cycles(4, &[&[1, 3], &[2, 4]])], named(&["u", "v"])), 4))
        }
        "A4" => Ok((raw(4, vec![cycles(4, &[&[1, 2, 3]]), cycles(4, &[&[1, 2], &[3, 4]])], default_names(2)), 12)),
        "A5" => Ok((raw(5, vec![cycles(5, &[&[1, 2, 3, 4, 5]]), cycles(5, &[&[1, 2, 3]])], default_names(2)), 60)),
        "extraspecial_3_plus" => {
            // Heisenberg group on F_3^2, point (x, y) numbered 3x + y + 1
            let pt = |x: u32, y: u32| 3 * (x % 3) + (y % 3);
            let mk =
                |f: &dyn Fn(u32, u32) -> u32| Perm::from_images((0..9).map(|p| f(p / 3, p % 3)).collect()).unwrap();
            let a = mk(&|x, y| pt(x + 1, y));
            let b = mk(&|x, y| pt(x, y + x));
            let c = a.inv().mul(&b.inv()).mul(&a).mul(&b);
            Ok((raw(9, vec![a, b, c], named(&["a", "b", "c"])), 27))
        }
        "S4" => Err(Error::UnsupportedRecipe("S4 has dihedral Sylow 2-subgroups".into())),
        _ => {
            if let Some(n) = name.strip_prefix('C').and_then(|s| s.parse::<usize>().ok()) {
                if n == 0 {
                    return Err(Error::UnsupportedRecipe(name.into()));
                }
                let p = Perm::from_images((0..n as u32).map(|i| (i + 1) % n as u32).collect()).unwrap();
                return Ok((raw(n, vec![p], named(&["g"])), n as u64));
            }
            if let Some(q) =
                name.strip_prefix("L2(").and_then(|s| s.strip_suffix(')')).and_then(|s| s.parse::<u32>().ok())
            {
                return l2(q).map(|(r, o)| (raw(r.0, r.1, default_names(2)), o));
            }
            Err(Error::UnsupportedRecipe(name.into()))
        }
    }
}

/// PSL(2, q), q prime, on the projective line `0..q-1, infinity = q`.
fn l2(q: u32) -> Result<((usize, Vec<Perm>), u64)> {
    if !crate::fqlinalg::prime::is_prime(q as u64) || q > 13 {
        return Err(Error::UnsupportedRecipe(format!("L2({q}): only primes q <= 13")));
    }
    let inf = q;
    let t = Perm::from_images((0..=q).map(|x| if x == inf { inf } else { (x + 1) % q }).collect()).unwrap();
    let inv = |x: u32| (1..q).find(|y| x * y % q == 1).unwrap();
    let s = Perm::from_images(
        (0..=q)
            .map(|x| match x {
                _ if x == inf => 0,
                0 => inf,
                _ => (q - inv(x)) % q,
            })
            .collect(),
    )
    .unwrap();
    let order = if q == 2 { 6 } else { (q as u64) * (q as u64 * q as u64 - 1) / 2 };
    Ok(((q as usize + 1, vec![t, s]), order))
}

/// Parses a word like `a^-1*b^2*c` into (generator index, exponent) pairs.
fn parse_word(word: &str, names: &[String]) -> Result<Vec<(usize, i64)>> {
    let word = word.trim();
    if word.is_empty() || word == "1" || word == "e" {
        return Ok(vec![]);
    }
    word.split('*')
        .map(|tok| {
            let tok = tok.trim();
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => {
                    let e: i64 =
                        e.trim().parse().map_err(|_| Error::SchemaError(format!("bad exponent in {tok:?}")))?;
                    (n.trim(), e)
                }
                None => (tok, 1),
            };
            let i = names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Error::SchemaError(format!("unknown generator {name:?}")))?;
            Ok((i, exp))
        })
        .collect()
}

fn build_raw(spec: &GroupSpec, cap: u64) -> Result<(Raw, Option<u64>)> {
    let set = [spec.recipe.is_some(), spec.generators.is_some(), spec.product.is_some(), spec.semidirect.is_some()];
    if set.iter().filter(|&&b| b).count() != 1 {
        return Err(Error::SchemaError(
            "group spec needs exactly one of recipe, generators, product, semidirect".into(),
        ));
    }
    if let Some(r) = &spec.recipe {
        let (raw, order) = recipe(r)?;
        return Ok((raw, Some(order)));
    }
    if let Some(gens) = &spec.generators {
        let max_pt = gens.iter().flatten().flatten().copied().max().unwrap_or(0) as usize;
        let degree = spec.degree.unwrap_or(max_pt);
        if gens.iter().flatten().flatten().any(|&x| x == 0 || x as usize > degree) {
            return Err(Error::SchemaError("points are numbered 1..=degree".into()));
        }
        let perms = gens
            .iter()
            .map(|cs| {
                let cs: Vec<Vec<u32>> = cs.iter().map(|c| c.iter().map(|x| x - 1).collect()).collect();
                Perm::from_cycles(degree, &cs).ok_or_else(|| Error::SchemaError("cycles overlap".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let names = spec.generator_names.clone().unwrap_or_else(|| default_names(perms.len()));
        if names.len() != perms.len() {
            return Err(Error::SchemaError("generator_names length mismatch".into()));
        }
        return Ok((Raw { degree, gens: perms, names }, None));
    }
    if let Some(factors) = &spec.product {
        let mut parts = Vec::new();
        for f in factors {
            parts.push(build_raw(f, cap)?);
        }
        let degree: usize = parts.iter().map(|p| p.0.degree).sum();
        let (mut gens, mut names, mut offset) = (Vec::new(), Vec::new(), 0);
        let mut order = Some(1u64);
        for (i, (raw, o)) in parts.iter().enumerate() {
            for (g, n) in raw.gens.iter().zip(&raw.names) {
                gens.push(g.shifted(offset, degree));
                names.push(if factors.len() > 1 { format!("{n}_{}", i + 1) } else { n.clone() });
            }
            offset += raw.degree;
            order = order.zip(*o).map(|(a, b)| a * b);
        }
        // keep recipe names when they do not collide
        let plain: Vec<String> = parts.iter().flat_map(|p| p.0.names.clone()).collect();
        let mut sorted = plain.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() == plain.len() {
            names = plain;
        }
        return Ok((Raw { degree, gens, names }, order));
    }
    let sd = spec.semidirect.as_ref().unwrap();
    let n = build_group(&sd.normal, cap)?;
    let h_raw = build_raw(&sd.acting, cap)?.0;
    let h = PermGroup::new("H", h_raw.degree, h_raw.gens.clone(), h_raw.names.clone(), cap)?;
    let nn = n.order() as usize;
    if nn > REGULAR_DEGREE_CAP {
        return Err(Error::SizeCapExceeded(format!("regular degree {nn} exceeds {REGULAR_DEGREE_CAP}")));
    }
    for key in sd.action.keys() {
        if !h.gen_names().contains(key) {
            return Err(Error::SchemaError(format!("unknown acting generator {key:?}")));
        }
    }
    let degree = nn + h.degree();
    let mut gens = Vec::new();
    // normal part: right regular action on its own elements
    for k in 0..n.gens().len() {
        let s = n.gen_index(k);
        let mut img: Vec<u32> = (0..nn).map(|x| n.mul(x, s) as u32).collect();
        img.extend((nn..degree).map(|x| x as u32));
        gens.push(Perm::from_images(img).unwrap());
    }
    for (k, hname) in h.gen_names().iter().enumerate() {
        let images = sd.action.get(hname);
        let phi = automorphism(&n, images)?;
        let mut img: Vec<u32> = phi.iter().map(|&x| x as u32).collect();
        img.extend(h.gens()[k].images().iter().map(|&x| x + nn as u32));
        gens.push(Perm::from_images(img).unwrap());
    }
    let mut names: Vec<String> = n.gen_names().to_vec();
    names.extend(h.gen_names().iter().cloned());
    let order = n.order().checked_mul(h.order());
    let group = PermGroup::new("check", degree, gens.clone(), names.clone(), cap.saturating_mul(64))?;
    if Some(group.order()) != order {
        return Err(Error::InvalidAction(format!(
            "generated group has order {} instead of {}",
            group.order(),
            n.order() * h.order()
        )));
    }
    Ok((Raw { degree, gens, names }, order))
}

/// The map on element indices of `n` determined by generator images; checks
/// that it is a well-defined bijective homomorphism.
fn automorphism(n: &PermGroup, images: Option<&BTreeMap<String, String>>) -> Result<Vec<usize>> {
    let k = n.gens().len();
    let mut gen_img: Vec<usize> = (0..k).map(|i| n.gen_index(i)).collect();
    if let Some(images) = images {
        for (gname, word) in images {
            let i = n
                .gen_names()
                .iter()
                .position(|x| x == gname)
                .ok_or_else(|| Error::SchemaError(format!("unknown normal generator {gname:?}")))?;
            let mut acc = n.element(0).clone();
            for (j, e) in parse_word(word, n.gen_names())? {
                acc = acc.mul(&n.gens()[j].pow(e));
            }
            gen_img[i] = n.index_of(&acc).unwrap();
        }
    }
    let size = n.order() as usize;
    let mut phi = vec![0usize; size];
    for x in 1..size {
        let (p, g) = n.parent(x).unwrap();
        phi[x] = n.mul(phi[p], gen_img[g]);
    }
    for x in 0..size {
        for (g, &img) in gen_img.iter().enumerate() {
            if phi[n.mul(x, n.gen_index(g))] != n.mul(phi[x], img) {
                return Err(Error::InvalidAction("generator images violate a relation".into()));
            }
        }
    }
    let mut seen = vec![false; size];
    for &y in &phi {
        if std::mem::replace(&mut seen[y], true) {
            return Err(Error::InvalidAction("generator images do not define a bijection".into()));
        }
    }
    Ok(phi)
}

/// Builds and verifies the group described by `spec`.
pub fn build_group(spec: &GroupSpec, order_cap: u64) -> Result<Arc<PermGroup>> {
    let (raw, expected) = build_raw(spec, order_cap)?;
    let g = PermGroup::new(spec.display_name(), raw.degree, raw.gens, raw.names, order_cap)?;
    if let Some(o) = expected {
        if o != g.order() {
            return Err(Error::Invalid(format!("{} has order {} but {} was expected", g.name(), g.order(), o)));
        }
    }
    Ok(g)
}

/// `3^(1+2)_+ : (C2 x C2)` of order 108, where `u`
/// inverts `a` and `b` and centralizes `c`, and `v` acts trivially.
pub fn example_108() -> GroupSpec {
    let mut s = GroupSpec::semidirect(
        GroupSpec::recipe("extraspecial_3_plus"),
        GroupSpec::recipe("klein4"),
        &[("u", &[("a", "a^-1"), ("b", "b^-1"), ("c", "c")])],
    );
    s.name = Some("3^(1+2):2^2".into());
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(spec: &GroupSpec) -> u64 {
        build_group(spec, u64::MAX).unwrap().order()
    }

    #[test]
    fn recipe_orders() {
        assert_eq!(order(&GroupSpec::recipe("A5")), 60);
        assert_eq!(order(&GroupSpec::recipe("A4")), 12);
        assert_eq!(order(&GroupSpec::recipe("klein4")), 4);
        assert_eq!(order(&GroupSpec::recipe("extraspecial_3_plus")), 27);
        for (q, o) in [(2, 6), (3, 12), (5, 60), (7, 168), (11, 660), (13, 1092)] {
            assert_eq!(order(&GroupSpec::recipe(&format!("L2({q})"))), o);
        }
        assert!(matches!(build_group(&GroupSpec::recipe("S4"), u64::MAX), Err(Error::UnsupportedRecipe(_))));
        assert!(matches!(build_group(&GroupSpec::recipe("L2(9)"), u64::MAX), Err(Error::UnsupportedRecipe(_))));
    }

    #[test]
    fn products() {
        let g =
            build_group(&GroupSpec::direct(vec![GroupSpec::recipe("A4"), GroupSpec::recipe("C5")]), u64::MAX).unwrap();
        assert_eq!(g.order(), 60);
        // Sylow 2 lives on the A4 points
        let p = g.sylow2();
        assert!(p.gens().iter().all(|x| (4..9).all(|pt| x.apply(pt) == pt)));
        assert_eq!(order(&example_108()), 108);
    }

    #[test]
    fn invalid_actions() {
        // u: a -> b is not an automorphism of order dividing 2 compatible with c
        let bad = GroupSpec::semidirect(
            GroupSpec::recipe("extraspecial_3_plus"),
            GroupSpec::recipe("klein4"),
            &[("u", &[("a", "a^-1"), ("b", "b^-1"), ("c", "c^-1")])],
        );
        assert!(matches!(build_group(&bad, u64::MAX), Err(Error::InvalidAction(_))));
        // v: a -> a*b has order 3 in Aut, incompatible with v^2 = 1
        let bad = GroupSpec::semidirect(
            GroupSpec::recipe("extraspecial_3_plus"),
            GroupSpec::recipe("klein4"),
            &[("v", &[("a", "a*b")])],
        );
        assert!(matches!(build_group(&bad, u64::MAX), Err(Error::InvalidAction(_))));
    }

    #[test]
    fn json_round_trip() {
        let s = example_108();
        assert_eq!(GroupSpec::from_json(&s.to_json()).unwrap(), s);
        let text = r#"{"generators": [[[1,2,3]], [[1,2],[3,4]]]}"#;
        assert_eq!(order(&GroupSpec::from_json(text).unwrap()), 12);
        assert!(matches!(GroupSpec::from_json(r#"{"recipe": 5}"#), Err(Error::SchemaError(_))));
    }
}
