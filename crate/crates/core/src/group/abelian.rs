//! Invariant factors of finite abelian groups from element-order counts.

use crate::fqlinalg::prime::prime_factors;

/// Invariant factors `d1 | d2 | ...` (all > 1) of an abelian group of the
/// given order, where `killed(m)` counts the elements with `x^m = 1`.
pub fn invariant_factors(order: u64, killed: impl Fn(u64) -> u64) -> Vec<u64> {
    // per prime: exponents of the cyclic p-factors, largest first
    let mut columns: Vec<Vec<u64>> = Vec::new();
    for p in prime_factors(order) {
        let mut ranks = Vec::new(); // ranks[k-1] = #factors of order >= p^k
        let mut prev = 1u64;
        let mut pk = 1u64;
        loop {
            pk *= p;
            let c = killed(pk);
            let mut r = 0;
            let mut q = c / prev;
            while q > 1 {
                q /= p;
                r += 1;
            }
            if r == 0 {
                break;
            }
            ranks.push(r);
            prev = c;
        }
        let n = ranks.first().copied().unwrap_or(0);
        let mut sizes = vec![1u64; n];
        for &r in &ranks {
            for s in sizes.iter_mut().take(r) {
                *s *= p;
            }
        }
        columns.push(sizes);
    }
    let width = columns.iter().map(|c| c.len()).max().unwrap_or(0);
    let mut out: Vec<u64> =
        (0..width).map(|i| columns.iter().map(|c| c.get(i).copied().unwrap_or(1)).product()).collect();
    out.reverse();
    out
}

/// Invariant factors of an abelian group given by its Cayley table.
pub fn invariant_factors_from_table(table: &[Vec<usize>], identity: usize) -> Vec<u64> {
    let n = table.len();
    let pow = |x: usize, m: u64| (0..m).fold(identity, |acc, _| table[acc][x]);
    invariant_factors(n as u64, |m| (0..n).filter(|&x| pow(x, m) == identity).count() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic_product(ns: &[usize]) -> Vec<Vec<usize>> {
        // elements as mixed-radix tuples
        let total: usize = ns.iter().product();
        let decode = |mut x: usize| {
            ns.iter()
                .map(|&n| {
                    let d = x % n;
                    x /= n;
                    d
                })
                .collect::<Vec<_>>()
        };
        let encode = |v: &[usize]| v.iter().zip(ns).rev().fold(0, |acc, (&d, &n)| acc * n + d);
        (0..total)
            .map(|a| {
                (0..total)
                    .map(|b| {
                        let (va, vb) = (decode(a), decode(b));
                        let s: Vec<usize> = va.iter().zip(&vb).zip(ns).map(|((x, y), n)| (x + y) % n).collect();
                        encode(&s)
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn known_groups() {
        assert_eq!(invariant_factors_from_table(&cyclic_product(&[3]), 0), vec![3]);
        assert_eq!(invariant_factors_from_table(&cyclic_product(&[3, 5]), 0), vec![15]);
        assert_eq!(invariant_factors_from_table(&cyclic_product(&[2, 4]), 0), vec![2, 4]);
        assert_eq!(invariant_factors_from_table(&cyclic_product(&[3, 3, 9]), 0), vec![3, 3, 9]);
        assert_eq!(invariant_factors_from_table(&cyclic_product(&[1]), 0), Vec::<u64>::new());
    }
}
