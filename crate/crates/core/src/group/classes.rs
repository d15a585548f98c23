//! Conjugacy classes in canonical order.

use super::PermGroup;

#[derive(Clone, Debug)]
pub struct ConjugacyClasses {
    reps: Vec<usize>,
    sizes: Vec<u64>,
    orders: Vec<u64>,
    members: Vec<Vec<usize>>,
    class_of: Vec<u32>,
    inverse: Vec<usize>,
    group_order: u64,
}

impl ConjugacyClasses {
    pub(crate) fn compute(g: &PermGroup) -> Self {
        let n = g.order() as usize;
        let gens: Vec<usize> = (0..g.gens().len()).map(|k| g.gen_index(k)).collect();
        let mut assigned = vec![u32::MAX; n];
        let mut raw: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if assigned[x] != u32::MAX {
                continue;
            }
            let id = raw.len() as u32;
            let mut orbit = vec![x];
            assigned[x] = id;
            let mut i = 0;
            while i < orbit.len() {
                for &s in &gens {
                    let y = g.conj(orbit[i], s);
                    if assigned[y] == u32::MAX {
                        assigned[y] = id;
                        orbit.push(y);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            raw.push(orbit);
        }
        let order = g.point_order();
        let key = |e: usize| -> Vec<u32> { order.iter().map(|&p| g.element(e).apply(p)).collect() };
        let mut entries: Vec<(u64, u64, Vec<u32>, usize, Vec<usize>)> = raw
            .into_iter()
            .map(|m| {
                let rep = *m.iter().min_by_key(|&&e| key(e)).unwrap();
                (g.elem_order(rep), m.len() as u64, key(rep), rep, m)
            })
            .collect();
        entries.sort_by(|a, b| (a.0, a.1, &a.2).cmp(&(b.0, b.1, &b.2)));
        let mut class_of = vec![0u32; n];
        for (c, e) in entries.iter().enumerate() {
            for &x in &e.4 {
                class_of[x] = c as u32;
            }
        }
        let inverse = entries.iter().map(|e| class_of[g.inv(e.3)] as usize).collect();
        ConjugacyClasses {
            reps: entries.iter().map(|e| e.3).collect(),
            sizes: entries.iter().map(|e| e.1).collect(),
            orders: entries.iter().map(|e| e.0).collect(),
            members: entries.into_iter().map(|e| e.4).collect(),
            class_of,
            inverse,
            group_order: n as u64,
        }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }
    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }
    pub fn reps(&self) -> &[usize] {
        &self.reps
    }
    pub fn rep(&self, c: usize) -> usize {
        self.reps[c]
    }
    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }
    pub fn size(&self, c: usize) -> u64 {
        self.sizes[c]
    }
    pub fn orders(&self) -> &[u64] {
        &self.orders
    }
    pub fn order(&self, c: usize) -> u64 {
        self.orders[c]
    }
    pub fn members(&self, c: usize) -> &[usize] {
        &self.members[c]
    }
    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x] as usize
    }
    pub fn inverse_class(&self, c: usize) -> usize {
        self.inverse[c]
    }
    pub fn centralizer_order(&self, c: usize) -> u64 {
        self.group_order / self.sizes[c]
    }
    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    /// Class of `rep(c)^k`.
    pub fn power(&self, g: &PermGroup, c: usize, k: u64) -> usize {
        let k = k % self.orders[c];
        self.class_of(g.pow(self.reps[c], k))
    }

    /// Power map for exponent `k` over all classes.
    pub fn power_map(&self, g: &PermGroup, k: u64) -> Vec<usize> {
        (0..self.len()).map(|c| self.power(g, c, k)).collect()
    }

    /// Classes of odd element order (the 2-regular classes).
    pub fn two_regular(&self) -> Vec<usize> {
        (0..self.len()).filter(|&c| self.orders[c] % 2 == 1).collect()
    }
}

#[cfg(test)]
mod tests {
    use crate::group::spec::{build_group, GroupSpec};

    fn sizes(recipe: &str) -> Vec<u64> {
        let g = build_group(&GroupSpec::recipe(recipe), u64::MAX).unwrap();
        g.classes().sizes().to_vec()
    }

    #[test]
    fn class_sizes() {
        assert_eq!(sizes("A4"), vec![1, 3, 4, 4]);
        assert_eq!(sizes("klein4"), vec![1, 1, 1, 1]);
        assert_eq!(sizes("A5"), vec![1, 15, 20, 12, 12]);
    }

    #[test]
    fn classes_partition_the_group() {
        for r in ["A4", "A5", "L2(7)", "extraspecial_3_plus"] {
            let g = build_group(&GroupSpec::recipe(r), u64::MAX).unwrap();
            let cl = g.classes();
            assert_eq!(cl.sizes().iter().sum::<u64>(), g.order());
            assert_eq!(cl.rep(0), 0);
            for c in 0..cl.len() {
                assert_eq!(g.order() % cl.size(c), 0);
                // brute-force centralizer size
                let x = cl.rep(c);
                let cent = (0..g.order() as usize).filter(|&y| g.mul(x, y) == g.mul(y, x)).count();
                assert_eq!(cent as u64, cl.centralizer_order(c));
            }
        }
    }
}
