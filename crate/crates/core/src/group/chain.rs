//! Deterministic Schreier-Sims: base and strong generating set.

use super::perm::Perm;

#[derive(Clone, Debug)]
struct Level {
    point: u32,
    gens: Vec<Perm>,
    /// `transversal[b]` maps the level point to `b`, for `b` in the orbit.
    transversal: Vec<Option<Perm>>,
    orbit: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl Level {
    fn new(point: u32, degree: usize) -> Self {
        Level { point, gens: Vec::new(), transversal: vec![None; degree], orbit: Vec::new() }
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        self.transversal = vec![None; degree];
        self.transversal[self.point as usize] = Some(Perm::identity(degree));
        self.orbit = vec![self.point];
        let mut i = 0;
        while i < self.orbit.len() {
            let b = self.orbit[i];
            for s in &self.gens {
                let c = s.apply(b);
                if self.transversal[c as usize].is_none() {
                    let t = self.transversal[b as usize].as_ref().unwrap().mul(s);
                    self.transversal[c as usize] = Some(t);
                    self.orbit.push(c);
                }
            }
            i += 1;
        }
    }
}

impl StabChain {
    pub fn new(degree: usize, gens: &[Perm]) -> Self {
        let mut chain = StabChain { degree, levels: Vec::new() };
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        if gens.is_empty() {
            return chain;
        }
        for g in &gens {
            if chain.levels.iter().all(|l| g.apply(l.point) == l.point) {
                let p = (0..degree as u32).find(|&x| g.apply(x) != x).unwrap();
                chain.levels.push(Level::new(p, degree));
            }
        }
        chain.levels[0].gens = gens;
        // distribute generators to deeper levels where they fix the base prefix
        for j in 1..chain.levels.len() {
            let prev = chain.levels[j - 1].point;
            let keep: Vec<Perm> = chain.levels[j - 1].gens.iter().filter(|g| g.apply(prev) == prev).cloned().collect();
            chain.levels[j].gens = keep;
        }
        for l in chain.levels.iter_mut() {
            l.rebuild_orbit(degree);
        }
        let mut i = chain.levels.len() as isize - 1;
        while i >= 0 {
            match chain.check_level(i as usize) {
                None => i -= 1,
                Some((h, j)) => {
                    if j == chain.levels.len() {
                        let p = (0..degree as u32).find(|&x| h.apply(x) != x).unwrap();
                        chain.levels.push(Level::new(p, degree));
                    }
                    for l in (i as usize + 1)..=j {
                        chain.levels[l].gens.push(h.clone());
                        chain.levels[l].rebuild_orbit(degree);
                    }
                    i = j as isize;
                }
            }
        }
        chain
    }

    /// Finds a Schreier generator of level `i` that does not sift through
    /// the deeper levels; returns the residue and the level where it stuck.
    fn check_level(&self, i: usize) -> Option<(Perm, usize)> {
        let level = &self.levels[i];
        for &b in &level.orbit {
            let ub = level.transversal[b as usize].as_ref().unwrap();
            for s in &level.gens {
                let c = s.apply(b);
                let uc = level.transversal[c as usize].as_ref().unwrap();
                let g = ub.mul(s).mul(&uc.inv());
                if g.is_identity() {
                    continue;
                }
                let (h, j) = self.strip_from(&g, i + 1);
                if j < self.levels.len() || !h.is_identity() {
                    return Some((h, j));
                }
            }
        }
        None
    }

    fn strip_from(&self, g: &Perm, start: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for (j, l) in self.levels.iter().enumerate().skip(start) {
            let b = h.apply(l.point);
            match &l.transversal[b as usize] {
                None => return (h, j),
                Some(u) => h = h.mul(&u.inv()),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, j) = self.strip_from(g, 0);
        j == self.levels.len() && h.is_identity()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.point).collect()
    }
}
