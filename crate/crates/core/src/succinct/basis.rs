use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Gcd-free basis of `ints` by iterated gcd splitting.
///
/// Returns pairwise-coprime basis elements in ascending order and, for every
/// input, its exponent row over the basis. No factoring is performed.
pub fn coprime_basis(ints: &[BigInt]) -> Result<(Vec<BigInt>, Vec<Vec<u64>>)> {
    let two = BigInt::from(2);
    let mut basis: Vec<BigInt> = Vec::new();
    for x in ints {
        if *x < two {
            return Err(Error::domain(format!("coprime basis input {x} is below 2")));
        }
        let mut stack = vec![x.clone()];
        while let Some(y) = stack.pop() {
            if y.is_one() {
                continue;
            }
            let hit = basis.iter().enumerate().find_map(|(i, b)| {
                let g = b.gcd(&y);
                (!g.is_one()).then_some((i, g))
            });
            match hit {
                None => basis.push(y),
                Some((i, g)) => {
                    if g == basis[i] && g == y {
                        continue;
                    }
                    let b = basis.swap_remove(i);
                    stack.push(&y / &g);
                    stack.push(&b / &g);
                    stack.push(g);
                }
            }
        }
    }
    basis.sort();
    let rows = ints.iter().map(|x| exponent_row(x, &basis)).collect();
    Ok((basis, rows))
}

/// Multiplicities of each basis element in `x`.
pub(crate) fn exponent_row(x: &BigInt, basis: &[BigInt]) -> Vec<u64> {
    let mut rest = x.clone();
    basis
        .iter()
        .map(|p| {
            let mut k = 0;
            loop {
                let (q, r) = rest.div_rem(p);
                if !r.is_zero() {
                    break k;
                }
                rest = q;
                k += 1;
            }
        })
        .collect()
}
