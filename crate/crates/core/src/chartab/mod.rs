//! Ordinary character tables and class functions.

pub mod dixon;
mod io;

use std::sync::Arc;

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::fqlinalg::Cyclotomic;
use crate::group::PermGroup;
pub use io::{export_table, import_table};

/// Class metadata shared by all class functions of one group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassInfo {
    pub fingerprint: String,
    pub group_order: u64,
    pub orders: Vec<u64>,
    pub sizes: Vec<u64>,
    /// `power_maps[i] = (p, map)` for each prime `p` dividing the group order.
    pub power_maps: Vec<(u64, Vec<usize>)>,
}

impl ClassInfo {
    pub fn of(g: &PermGroup) -> Arc<ClassInfo> {
        let cl = g.classes();
        let power_maps =
            crate::fqlinalg::prime::prime_factors(g.order()).into_iter().map(|p| (p, cl.power_map(g, p))).collect();
        Arc::new(ClassInfo {
            fingerprint: g.fingerprint(),
            group_order: g.order(),
            orders: cl.orders().to_vec(),
            sizes: cl.sizes().to_vec(),
            power_maps,
        })
    }

    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    /// Classes of odd element order.
    pub fn two_regular(&self) -> Vec<usize> {
        (0..self.len()).filter(|&c| self.orders[c] % 2 == 1).collect()
    }
}

/// A class function with exact cyclotomic values in canonical class order.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    info: Arc<ClassInfo>,
    values: Vec<Cyclotomic>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.info == other.info && self.values == other.values
    }
}

impl ClassFunction {
    pub fn new(info: Arc<ClassInfo>, values: Vec<Cyclotomic>) -> Self {
        assert_eq!(info.len(), values.len());
        ClassFunction { info, values }
    }

    pub fn zero(info: Arc<ClassInfo>) -> Self {
        let n = info.len();
        ClassFunction { info, values: vec![Cyclotomic::zero(); n] }
    }

    pub fn trivial(info: Arc<ClassInfo>) -> Self {
        let n = info.len();
        ClassFunction { info, values: vec![Cyclotomic::one(); n] }
    }

    /// Regular character: `|G|` at the identity, zero elsewhere.
    pub fn regular(info: Arc<ClassInfo>) -> Self {
        let mut f = Self::zero(info.clone());
        f.values[0] = Cyclotomic::from_int(info.group_order as i64);
        f
    }

    pub fn info(&self) -> &Arc<ClassInfo> {
        &self.info
    }
    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }
    pub fn value(&self, c: usize) -> &Cyclotomic {
        &self.values[c]
    }

    pub fn degree(&self) -> Option<i64> {
        self.values[0].to_integer()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.info, &other.info) || self.info == other.info {
            Ok(())
        } else {
            Err(Error::ClassMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(ClassFunction { info: self.info.clone(), values })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect();
        Ok(ClassFunction { info: self.info.clone(), values })
    }

    pub fn scale(&self, q: Rational64) -> Self {
        ClassFunction { info: self.info.clone(), values: self.values.iter().map(|v| v.scale(q)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect();
        Ok(ClassFunction { info: self.info.clone(), values })
    }

    pub fn conj(&self) -> Self {
        ClassFunction { info: self.info.clone(), values: self.values.iter().map(|v| v.conj()).collect() }
    }
}

/// `<a, b> = (1/|G|) sum_C |C| a(C) conj(b(C))`.
pub fn inner_product(a: &ClassFunction, b: &ClassFunction) -> Result<Cyclotomic> {
    a.check(b)?;
    let mut s = Cyclotomic::zero();
    for c in 0..a.values.len() {
        let t = &a.values[c] * &b.values[c].conj();
        s = &s + &t.scale(Rational64::from_integer(a.info.sizes[c] as i64));
    }
    Ok(s.scale(Rational64::new(1, a.info.group_order as i64)))
}

/// Class of each `h`-class representative inside `g`.
pub fn fusion(h: &PermGroup, g: &PermGroup) -> Result<Vec<usize>> {
    let emb = g.embedding(h)?;
    let hc = h.classes();
    Ok((0..hc.len()).map(|c| g.classes().class_of(emb[hc.rep(c)])).collect())
}

fn check_info(f: &ClassFunction, grp: &PermGroup) -> Result<()> {
    if f.info.fingerprint != grp.fingerprint() || f.info.len() != grp.classes().len() {
        return Err(Error::ClassMismatch);
    }
    Ok(())
}

/// Induced class function from a subgroup `h` to `g`.
pub fn induce(f: &ClassFunction, h: &PermGroup, g: &PermGroup) -> Result<ClassFunction> {
    check_info(f, h)?;
    let fus = fusion(h, g)?;
    let gi = ClassInfo::of(g);
    let mut values = vec![Cyclotomic::zero(); gi.len()];
    let hc = h.classes();
    for (d, &c) in fus.iter().enumerate() {
        values[c] = &values[c] + &f.values[d].scale(Rational64::from_integer(hc.size(d) as i64));
    }
    for (c, v) in values.iter_mut().enumerate() {
        let factor = Rational64::new((gi.group_order / gi.sizes[c]) as i64, h.order() as i64);
        *v = v.scale(factor);
    }
    Ok(ClassFunction { info: gi, values })
}

/// Restriction of a class function of `g` to a subgroup `h`.
pub fn restrict(f: &ClassFunction, g: &PermGroup, h: &PermGroup) -> Result<ClassFunction> {
    check_info(f, g)?;
    let fus = fusion(h, g)?;
    let values = fus.iter().map(|&c| f.values[c].clone()).collect();
    Ok(ClassFunction { info: ClassInfo::of(h), values })
}

/// The ordinary character table of a group.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    info: Arc<ClassInfo>,
    irr: Vec<ClassFunction>,
    conductor: u64,
}

impl PartialEq for CharacterTable {
    fn eq(&self, other: &Self) -> bool {
        self.info == other.info && self.conductor == other.conductor && self.irr == other.irr
    }
}

/// Sort key for canonical row order: the trivial character, then by
/// degree and values.
fn row_key(f: &ClassFunction) -> (i64, bool, Vec<Cyclotomic>) {
    let trivial = f.values.iter().all(|v| v.to_integer() == Some(1));
    (f.degree().unwrap_or(i64::MAX), !trivial, f.values.clone())
}

impl CharacterTable {
    pub fn compute(g: &PermGroup, aux_prime: Option<u64>) -> Result<Self> {
        let r = g.classes().len();
        if r > crate::group::DEFAULT_CLASS_CAP {
            return Err(Error::SizeCapExceeded(format!("{r} classes exceed cap {}", crate::group::DEFAULT_CLASS_CAP)));
        }
        let info = ClassInfo::of(g);
        let rows = dixon::irreducibles(g, aux_prime)?;
        let irr = rows.into_iter().map(|v| ClassFunction::new(info.clone(), v)).collect();
        let t = Self::from_parts(info, irr, g.exponent())?;
        Ok(t)
    }

    /// Assembles a table, sorting rows canonically and checking orthogonality.
    pub fn from_parts(info: Arc<ClassInfo>, mut irr: Vec<ClassFunction>, conductor: u64) -> Result<Self> {
        irr.sort_by_key(row_key);
        let t = CharacterTable { info, irr, conductor };
        t.verify()?;
        Ok(t)
    }

    pub fn info(&self) -> &Arc<ClassInfo> {
        &self.info
    }
    pub fn irr(&self) -> &[ClassFunction] {
        &self.irr
    }
    pub fn conductor(&self) -> u64 {
        self.conductor
    }
    pub fn degrees(&self) -> Vec<i64> {
        self.irr.iter().map(|c| c.degree().unwrap()).collect()
    }

    /// Row and column orthogonality, exactly.
    pub fn verify(&self) -> Result<()> {
        let r = self.info.len();
        if self.irr.len() != r {
            return Err(Error::OrthogonalityError(format!("{} rows for {} classes", self.irr.len(), r)));
        }
        for (i, a) in self.irr.iter().enumerate() {
            match a.degree() {
                Some(d) if d > 0 && self.info.group_order % d as u64 == 0 => {}
                _ => return Err(Error::OrthogonalityError(format!("row {i} has invalid degree"))),
            }
            for (j, b) in self.irr.iter().enumerate().skip(i) {
                let ip = inner_product(a, b)?;
                if ip.to_integer() != Some((i == j) as i64) {
                    return Err(Error::OrthogonalityError(format!("<chi{i}, chi{j}> = {ip}")));
                }
            }
        }
        for x in 0..r {
            for y in x..r {
                let mut s = Cyclotomic::zero();
                for chi in &self.irr {
                    s = &s + &(&chi.values[x] * &chi.values[y].conj());
                }
                let expect = if x == y { (self.info.group_order / self.info.sizes[x]) as i64 } else { 0 };
                if s.to_integer() != Some(expect) {
                    return Err(Error::OrthogonalityError(format!("columns {x}, {y} give {s}")));
                }
            }
        }
        Ok(())
    }

    /// Labels `1a, 3a, 3b, ...`: degree, then a letter in row order.
    pub fn labels(&self) -> Vec<String> {
        let degrees = self.degrees();
        let mut out = Vec::with_capacity(degrees.len());
        for (i, d) in degrees.iter().enumerate() {
            let k = degrees[..i].iter().filter(|&&e| e == *d).count();
            out.push(format!("{d}{}", (b'a' + (k % 26) as u8) as char));
        }
        out
    }

    /// Index of the row equal to `f`, if `f` is irreducible.
    pub fn position(&self, f: &ClassFunction) -> Option<usize> {
        self.irr.iter().position(|c| c == f)
    }

    /// Decomposition of a class function into irreducible constituents.
    pub fn constituents(&self, f: &ClassFunction) -> Result<Vec<Cyclotomic>> {
        self.irr.iter().map(|chi| inner_product(f, chi)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::spec::{build_group, example_108, GroupSpec};

    fn table(spec: &GroupSpec) -> (Arc<PermGroup>, CharacterTable) {
        let g = build_group(spec, u64::MAX).unwrap();
        let t = CharacterTable::compute(&g, None).unwrap();
        (g, t)
    }

    #[test]
    fn degrees_of_small_groups() {
        let (_, t) = table(&GroupSpec::recipe("A5"));
        assert_eq!(t.degrees(), vec![1, 3, 3, 4, 5]);
        let (_, t) = table(&GroupSpec::recipe("A4"));
        assert_eq!(t.degrees(), vec![1, 1, 1, 3]);
        let (_, t) = table(&GroupSpec::recipe("klein4"));
        assert_eq!(t.degrees(), vec![1, 1, 1, 1]);
        let (_, t) = table(&example_108());
        assert_eq!(t.degrees().iter().map(|d| d * d).sum::<i64>(), 108);
        let (_, t) = table(&GroupSpec::recipe("L2(11)"));
        assert_eq!(t.degrees(), vec![1, 5, 5, 10, 10, 11, 12, 12]);
    }

    #[test]
    fn inner_products() {
        let (_, t) = table(&GroupSpec::recipe("A5"));
        let chi5 = &t.irr()[4];
        assert_eq!(inner_product(chi5, chi5).unwrap(), Cyclotomic::one());
        let one = ClassFunction::trivial(t.info().clone());
        let reg = ClassFunction::regular(t.info().clone());
        assert_eq!(inner_product(&one, &reg).unwrap(), Cyclotomic::one());
        let (_, t4) = table(&GroupSpec::recipe("A4"));
        assert!(matches!(inner_product(&one, &t4.irr()[0]), Err(Error::ClassMismatch)));
    }

    #[test]
    fn induction_and_restriction() {
        let (a5, t) = table(&GroupSpec::recipe("A5"));
        let ctx = a5.sylow_context().unwrap();
        let n = ctx.n.clone();
        let one_n = ClassFunction::trivial(ClassInfo::of(&n));
        let ind = induce(&one_n, &n, &a5).unwrap();
        assert_eq!(ind.degree(), Some(5));
        // permutation character on 5 points: fixed points brute force
        for (c, &rep) in a5.classes().reps().iter().enumerate() {
            let fixed = a5.element(rep).images().iter().enumerate().filter(|(i, &x)| *i as u32 == x).count();
            assert_eq!(ind.value(c).to_integer(), Some(fixed as i64));
        }
        let res = restrict(&t.irr()[4], &a5, &ctx.p).unwrap();
        let vals: Vec<i64> = res.values().iter().map(|v| v.to_integer().unwrap()).collect();
        assert_eq!(vals, vec![5, 1, 1, 1]);
        let z = ClassFunction::zero(ClassInfo::of(&n));
        let back = restrict(&induce(&z, &n, &a5).unwrap(), &a5, &n).unwrap();
        assert_eq!(back, z);
        // Frobenius reciprocity
        let tn = CharacterTable::compute(&n, None).unwrap();
        for psi in tn.irr() {
            let ind = induce(psi, &n, &a5).unwrap();
            for chi in t.irr() {
                let lhs = inner_product(&ind, chi).unwrap();
                let rhs = inner_product(psi, &restrict(chi, &a5, &n).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn aux_prime_independence() {
        for (r, l) in [("A4", 13u64), ("A5", 61)] {
            let g = build_group(&GroupSpec::recipe(r), u64::MAX).unwrap();
            assert_eq!(CharacterTable::compute(&g, None).unwrap(), CharacterTable::compute(&g, Some(l)).unwrap());
        }
    }

    #[test]
    fn values_are_integral_and_involutions_rational() {
        for r in ["A4", "A5"] {
            let (g, t) = table(&GroupSpec::recipe(r));
            let cl = g.classes();
            for chi in t.irr() {
                let d = chi.degree().unwrap();
                for c in 0..cl.len() {
                    let v = chi.value(c).scale(Rational64::new(cl.size(c) as i64, d));
                    assert!(v.is_algebraic_integer(), "{r} class {c}");
                    if cl.order(c) == 2 {
                        assert!(chi.value(c).to_integer().is_some());
                    }
                }
            }
        }
    }
}
