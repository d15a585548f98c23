//! Brauer characters and characters of trivial-source lifts.
//!
//! Eigenvalues in GF(2^e) are lifted with `alpha^((q-1)/m) -> zeta_m`,
//! which is compatible across all odd `m` dividing `q - 1`.

use crate::chartab::{ClassFunction, ClassInfo};
use crate::error::{Error, Result};
use crate::fqlinalg::{Cyclotomic, FqMatrix, RowSpace};
use crate::group::PermGroup;

use super::ModuleRep;

/// Lifted trace of a matrix of odd order `o`.
pub fn brauer_value(a: &FqMatrix, o: u64) -> Result<Cyclotomic> {
    let f = a.field();
    let d = a.rows();
    if d == 0 {
        return Ok(Cyclotomic::zero());
    }
    let z = f.root_of_unity(o).ok_or_else(|| Error::FieldTooSmall(format!("no element of order {o} in {f:?}")))?;
    let mut value = Cyclotomic::zero();
    let mut total = 0;
    let mut lambda = 1;
    for j in 0..o {
        let mult = d - a.add_scalar(lambda).rank();
        if mult > 0 {
            total += mult;
            value = &value + &Cyclotomic::zeta(o as u32, j as i64).scale((mult as i64).into());
        }
        lambda = f.mul(lambda, z);
    }
    if total != d {
        return Err(Error::Invalid("matrix of odd order is not diagonalizable over the field".into()));
    }
    Ok(value)
}

/// Brauer character on the 2-regular classes (zero elsewhere).
pub fn brauer_character(m: &ModuleRep) -> Result<ClassFunction> {
    let g = m.group();
    let info = ClassInfo::of(g);
    let cl = g.classes();
    let mut values = vec![Cyclotomic::zero(); cl.len()];
    for c in cl.two_regular() {
        values[c] = brauer_value(&m.matrix(cl.rep(c)), cl.order(c))?;
    }
    Ok(ClassFunction::new(info, values))
}

/// Splits `x` into its 2-part and 2'-part.
pub fn two_parts(g: &PermGroup, x: usize) -> (usize, usize) {
    let o = g.elem_order(x);
    let two = 1u64 << o.trailing_zeros();
    let odd = o / two;
    // a = 1 mod two, a = 0 mod odd
    let a = (0..o).find(|&a| a % two == 1 % two && a % odd == 0).unwrap_or(0);
    let b = (0..o).find(|&b| b % two == 0 && b % odd == 1 % odd).unwrap_or(0);
    (g.pow(x, a), g.pow(x, b))
}

/// Character of the lift of a trivial-source module. At `x = u s` with `u`
/// the 2-part, the value is the Brauer character at `s` of the Brauer
/// quotient `m^u / (1 + u) m`.
pub fn lift_character(m: &ModuleRep) -> Result<ClassFunction> {
    let g = m.group();
    let info = ClassInfo::of(g);
    let cl = g.classes();
    let mut values = Vec::with_capacity(cl.len());
    for c in 0..cl.len() {
        let (u, s) = two_parts(g, cl.rep(c));
        let odd = g.elem_order(s);
        let ms = m.matrix(s);
        if u == 0 {
            values.push(brauer_value(&ms, odd)?);
            continue;
        }
        if g.elem_order(u) != 2 {
            return Err(Error::Invalid("lift character needs 2-parts of order at most 2".into()));
        }
        let t = m.matrix(u).add_scalar(1);
        let fixed = RowSpace::new(&t.left_nullspace());
        let image = RowSpace::new(&t);
        // the image lies in the fixed space since (1+u)^2 = 0
        let on_fixed = fixed.restrict(&ms);
        let image_coords: Vec<Vec<u32>> = (0..image.dim()).map(|i| fixed.coords(image.basis().row(i))).collect();
        let sub = RowSpace::new(&FqMatrix::from_rows(m.field(), fixed.dim(), &image_coords));
        let q = sub.quotient_action(&on_fixed);
        values.push(brauer_value(&q, odd)?);
    }
    Ok(ClassFunction::new(info, values))
}
