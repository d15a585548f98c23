//! Permutation groups: construction, element tables, classes and subgroups.

pub mod abelian;
pub mod chain;
pub mod classes;
pub mod perm;
pub mod spec;
pub mod subgroups;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
pub use chain::StabChain;
pub use classes::ConjugacyClasses;
pub use perm::Perm;
pub use spec::{build_group, GroupSpec};
pub use subgroups::SylowContext;

/// Default bound on the group order.
pub const DEFAULT_ORDER_CAP: u64 = 200_000;
/// Default bound on the number of conjugacy classes.
pub const DEFAULT_CLASS_CAP: usize = 120;

/// A permutation group with its full element table.
///
/// Elements are numbered in breadth-first order over the right Cayley graph;
/// element 0 is the identity and every other element is `parent * gen`.
pub struct PermGroup {
    name: String,
    degree: usize,
    gens: Vec<Perm>,
    gen_names: Vec<String>,
    chain: StabChain,
    elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
    parent: Vec<(u32, u32)>,
    classes: OnceLock<ConjugacyClasses>,
    inverses: OnceLock<Vec<u32>>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {}, degree {})", self.name, self.order(), self.degree)
    }
}

impl PermGroup {
    pub fn new(
        name: impl Into<String>,
        degree: usize,
        gens: Vec<Perm>,
        gen_names: Vec<String>,
        order_cap: u64,
    ) -> Result<Arc<Self>> {
        let name = name.into();
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(Error::Invalid(format!("{name}: generator of wrong degree")));
        }
        assert_eq!(gens.len(), gen_names.len());
        let chain = StabChain::new(degree, &gens);
        let order = chain.order();
        if order > order_cap as u128 {
            return Err(Error::SizeCapExceeded(format!("|{name}| = {order} exceeds cap {order_cap}")));
        }
        let mut elements = vec![Perm::identity(degree)];
        let mut index = HashMap::new();
        index.insert(elements[0].clone(), 0u32);
        let mut parent = vec![(0u32, 0u32)];
        let mut i = 0;
        while i < elements.len() {
            for (k, s) in gens.iter().enumerate() {
                let h = elements[i].mul(s);
                if !index.contains_key(&h) {
                    index.insert(h.clone(), elements.len() as u32);
                    elements.push(h);
                    parent.push((i as u32, k as u32));
                }
            }
            i += 1;
        }
        assert_eq!(elements.len() as u128, order, "stabilizer chain disagrees with enumeration");
        Ok(Arc::new(PermGroup {
            name,
            degree,
            gens,
            gen_names,
            chain,
            elements,
            index,
            parent,
            classes: OnceLock::new(),
            inverses: OnceLock::new(),
        }))
    }

    /// Subgroup generated by the given elements of `self`, with those
    /// elements as its generators.
    pub fn subgroup(&self, name: impl Into<String>, gens: &[usize]) -> Arc<PermGroup> {
        let perms: Vec<Perm> = gens.iter().map(|&i| self.elements[i].clone()).collect();
        let names = (1..=perms.len()).map(|i| format!("g{i}")).collect();
        PermGroup::new(name, self.degree, perms, names, u64::MAX).expect("subgroup of a capped group")
    }

    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn degree(&self) -> usize {
        self.degree
    }
    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }
    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }
    pub fn gen_names(&self) -> &[String] {
        &self.gen_names
    }
    pub fn chain(&self) -> &StabChain {
        &self.chain
    }
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }
    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.chain.contains(p)
    }

    /// Index of generator `k` in the element table.
    pub fn gen_index(&self, k: usize) -> usize {
        self.index_of(&self.gens[k]).unwrap()
    }

    /// `(parent, generator)` with `element(i) = element(parent) * gens[generator]`.
    pub fn parent(&self, i: usize) -> Option<(usize, usize)> {
        (i > 0).then(|| (self.parent[i].0 as usize, self.parent[i].1 as usize))
    }

    /// Word in the generators (left to right) spelling element `i`.
    pub fn word(&self, mut i: usize) -> Vec<usize> {
        let mut w = Vec::new();
        while let Some((p, g)) = self.parent(i) {
            w.push(g);
            i = p;
        }
        w.reverse();
        w
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].mul(&self.elements[b])] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        let t = self.inverses.get_or_init(|| self.elements.iter().map(|p| self.index[&p.inv()]).collect());
        t[a] as usize
    }

    /// `b^-1 a b`.
    pub fn conj(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].conj(&self.elements[b])] as usize
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let mut acc = Perm::identity(self.degree);
        for _ in 0..k {
            acc = acc.mul(&self.elements[a]);
        }
        self.index[&acc] as usize
    }

    pub fn elem_order(&self, a: usize) -> u64 {
        self.elements[a].order()
    }

    /// Exponent of the group.
    pub fn exponent(&self) -> u64 {
        self.classes().orders().iter().fold(1, |acc, &o| num_integer::lcm(acc, o))
    }

    pub fn classes(&self) -> &ConjugacyClasses {
        self.classes.get_or_init(|| ConjugacyClasses::compute(self))
    }

    /// Element indices of a subgroup `h` of the same degree, in `h`'s order.
    pub fn embedding(&self, h: &PermGroup) -> Result<Vec<usize>> {
        if h.degree != self.degree {
            return Err(Error::NotSubgroup(format!("{} in {}", h.name, self.name)));
        }
        h.elements
            .iter()
            .map(|p| self.index_of(p).ok_or_else(|| Error::NotSubgroup(format!("{} in {}", h.name, self.name))))
            .collect()
    }

    pub fn is_subgroup_of(&self, g: &PermGroup) -> bool {
        self.degree == g.degree && self.gens.iter().all(|p| g.contains(p))
    }

    /// Stable content hash of the generating permutations.
    pub fn fingerprint(&self) -> String {
        let mut h = Sha256::new();
        h.update((self.degree as u64).to_le_bytes());
        for g in &self.gens {
            for &x in g.images() {
                h.update(x.to_le_bytes());
            }
        }
        h.finalize().iter().take(8).map(|b| format!("{b:02x}")).collect()
    }

    /// Point ordering used for canonical representatives: base points first,
    /// then the remaining points in increasing order.
    pub fn point_order(&self) -> Vec<u32> {
        let base = self.chain.base();
        let mut out = base.clone();
        out.extend((0..self.degree as u32).filter(|x| !base.contains(x)));
        out
    }
}
