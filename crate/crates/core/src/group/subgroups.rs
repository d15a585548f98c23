//! Subgroup computations by filtering and closing element sets.

use std::sync::Arc;

use super::abelian::invariant_factors;
use super::PermGroup;
use crate::error::{Error, Result};

/// Sylow 2-subgroup data for the Klein-four case.
#[derive(Clone, Debug)]
pub struct SylowContext {
    pub p: Arc<PermGroup>,
    pub n: Arc<PermGroup>,
    pub c: Arc<PermGroup>,
    /// Element indices in G of `u`, `v`, `uv`.
    pub involutions: [usize; 3],
    /// `|N : C|`, either 1 or 3.
    pub tag: u64,
}

impl PermGroup {
    /// Closure of a set of elements under multiplication, as a sorted list.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let n = self.order() as usize;
        let mut inside = vec![false; n];
        inside[0] = true;
        let mut list = vec![0usize];
        let mut i = 0;
        while i < list.len() {
            for &s in gens {
                let y = self.mul(list[i], s);
                if !inside[y] {
                    inside[y] = true;
                    list.push(y);
                }
            }
            i += 1;
        }
        list.sort_unstable();
        list
    }

    /// Normal closure of a set of elements.
    pub fn normal_closure(&self, gens: &[usize]) -> Vec<usize> {
        let g_gens: Vec<usize> = (0..self.gens().len()).map(|k| self.gen_index(k)).collect();
        let mut gens = gens.to_vec();
        loop {
            let set = self.closure(&gens);
            let mut member = vec![false; self.order() as usize];
            for &x in &set {
                member[x] = true;
            }
            let mut added = false;
            for &s in gens.clone().iter() {
                for &t in &g_gens {
                    let c = self.conj(s, t);
                    if !member[c] {
                        gens.push(c);
                        added = true;
                    }
                }
            }
            if !added {
                return set;
            }
        }
    }

    /// A small generating set for a subgroup given as an element set.
    pub fn generators_of(&self, set: &[usize]) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![0usize];
        for &x in set {
            if span.binary_search(&x).is_err() {
                gens.push(x);
                span = self.closure(&gens);
            }
        }
        gens
    }

    pub fn subgroup_of_set(&self, name: &str, set: &[usize]) -> Arc<PermGroup> {
        self.subgroup(name, &self.generators_of(set))
    }

    pub fn centralizer_set(&self, xs: &[usize]) -> Vec<usize> {
        (0..self.order() as usize).filter(|&g| xs.iter().all(|&x| self.mul(g, x) == self.mul(x, g))).collect()
    }

    /// Centralizer of a set of elements (or of the subgroup they generate).
    pub fn centralizer(&self, xs: &[usize]) -> Arc<PermGroup> {
        self.subgroup_of_set(&format!("C_{}", self.name()), &self.centralizer_set(xs))
    }

    /// Normalizer of the subgroup generated by `xs`.
    pub fn normalizer(&self, xs: &[usize]) -> Arc<PermGroup> {
        let h = self.closure(xs);
        let set: Vec<usize> = (0..self.order() as usize)
            .filter(|&g| xs.iter().all(|&x| h.binary_search(&self.conj(x, g)).is_ok()))
            .collect();
        self.subgroup_of_set(&format!("N_{}", self.name()), &set)
    }

    /// Sylow 2-subgroup grown one involution-mod-Q at a time; returns the
    /// chosen generators in the order they were found.
    pub fn sylow2_generators(&self) -> Vec<usize> {
        let order = self.order();
        let target = 1u64 << order.trailing_zeros();
        let mut gens: Vec<usize> = Vec::new();
        let mut q = vec![0usize];
        while (q.len() as u64) < target {
            let found = (0..order as usize).find(|&g| {
                q.binary_search(&g).is_err()
                    && q.binary_search(&self.mul(g, g)).is_ok()
                    && gens.iter().all(|&x| q.binary_search(&self.conj(x, g)).is_ok())
            });
            let g = found.expect("normalizer of a non-Sylow 2-subgroup has even index");
            gens.push(g);
            q = self.closure(&gens);
        }
        gens
    }

    pub fn sylow2(&self) -> Arc<PermGroup> {
        self.subgroup(&format!("Syl2({})", self.name()), &self.sylow2_generators())
    }

    pub fn sylow_context(&self) -> Result<SylowContext> {
        let gens = self.sylow2_generators();
        let p_set = self.closure(&gens);
        if p_set.len() != 4 || p_set.iter().any(|&x| self.elem_order(x) > 2) {
            return Err(Error::NotKleinFour(format!(
                "{} has Sylow 2-subgroup of order {} with {} generators",
                self.name(),
                p_set.len(),
                gens.len()
            )));
        }
        let (u, v) = (gens[0], gens[1]);
        let p = self.subgroup("P", &gens);
        let n = self.normalizer(&gens);
        let c = self.centralizer(&gens);
        let tag = n.order() / c.order();
        debug_assert!(tag == 1 || tag == 3);
        Ok(SylowContext { p, n, c, involutions: [u, v, self.mul(u, v)], tag })
    }

    /// Largest normal subgroup of odd order.
    pub fn odd_core(&self) -> Arc<PermGroup> {
        let cl = self.classes();
        let mut core = vec![0usize];
        let mut gens: Vec<usize> = Vec::new();
        loop {
            let mut changed = false;
            for c in 0..cl.len() {
                let x = cl.rep(c);
                if cl.order(c) % 2 == 0 || core.binary_search(&x).is_ok() {
                    continue;
                }
                let mut trial = gens.clone();
                trial.push(x);
                let closure = self.normal_closure(&trial);
                if closure.len() % 2 == 1 {
                    gens = trial;
                    core = closure;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        self.subgroup_of_set(&format!("O2'({})", self.name()), &core)
    }

    pub fn derived_subgroup(&self) -> Vec<usize> {
        let k = self.gens().len();
        let mut comms = Vec::new();
        for i in 0..k {
            for j in 0..k {
                let (a, b) = (self.gen_index(i), self.gen_index(j));
                let c = self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b));
                if c != 0 {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
    }

    /// Invariant factors of the odd part of `G/[G,G]`.
    pub fn abelianization_odd(&self) -> Vec<u64> {
        let d = self.derived_subgroup();
        let m = self.order() / d.len() as u64;
        let odd = m >> m.trailing_zeros();
        invariant_factors(odd, |k| {
            let count = (0..self.order() as usize).filter(|&g| d.binary_search(&self.pow(g, k)).is_ok()).count();
            (count / d.len()) as u64
        })
        .into_iter()
        .collect()
    }
}

#[cfg(test)]
mod tests {
    use crate::group::spec::{build_group, GroupSpec};

    fn g(recipe: &str) -> std::sync::Arc<crate::group::PermGroup> {
        build_group(&GroupSpec::recipe(recipe), u64::MAX).unwrap()
    }

    #[test]
    fn sylow_subgroups() {
        assert_eq!(g("A4").sylow2().order(), 4);
        assert_eq!(g("A5").sylow2().order(), 4);
        assert_eq!(g("C3").sylow2().order(), 1);
        let a4 = g("A4");
        // unique Sylow 2 of A4 is normal
        assert_eq!(a4.normalizer(&a4.sylow2_generators()).order(), 12);
    }

    #[test]
    fn sylow_context_tags() {
        let c = g("A5").sylow_context().unwrap();
        assert_eq!((c.n.order(), c.tag), (12, 3));
        let c = g("klein4").sylow_context().unwrap();
        assert_eq!((c.n.order(), c.c.order(), c.tag), (4, 4, 1));
        assert!(matches!(g("C3").sylow_context(), Err(crate::Error::NotKleinFour(_))));
        assert!(matches!(g("C4").sylow_context(), Err(crate::Error::NotKleinFour(_))));
    }

    #[test]
    fn involutions_conjugate_iff_tag_three() {
        for r in ["A4", "A5", "klein4", "L2(11)"] {
            let gr = g(r);
            let ctx = gr.sylow_context().unwrap();
            let cl = gr.classes();
            let cls: Vec<usize> = ctx.involutions.iter().map(|&x| cl.class_of(x)).collect();
            let all_same = cls.iter().all(|&c| c == cls[0]);
            assert_eq!(all_same, ctx.tag == 3, "{r}");
        }
    }

    #[test]
    fn centralizers() {
        let a4 = g("A4");
        let u = a4.sylow2_generators()[0];
        assert_eq!(a4.centralizer(&[u]).order(), 4);
        assert_eq!(a4.centralizer(&[0]).order(), 12);
    }

    #[test]
    fn odd_cores() {
        assert_eq!(g("A5").odd_core().order(), 1);
        assert_eq!(g("A4").odd_core().order(), 1);
        let spec = GroupSpec::direct(vec![GroupSpec::recipe("A4"), GroupSpec::recipe("C3")]);
        let a4c3 = build_group(&spec, u64::MAX).unwrap();
        assert_eq!(a4c3.odd_core().order(), 3);
        // brute force: largest normal odd-order subgroup among normal closures
        let n = a4c3.order() as usize;
        let best = (0..n)
            .filter(|&x| a4c3.elem_order(x) % 2 == 1)
            .map(|x| a4c3.normal_closure(&[x]))
            .filter(|s| s.len() % 2 == 1)
            .map(|s| s.len())
            .max()
            .unwrap();
        assert_eq!(best, 3);
    }

    #[test]
    fn abelianizations() {
        assert_eq!(g("A4").abelianization_odd(), vec![3]);
        assert_eq!(g("A5").abelianization_odd(), Vec::<u64>::new());
        assert_eq!(g("C15").abelianization_odd(), vec![15]);
    }
}
