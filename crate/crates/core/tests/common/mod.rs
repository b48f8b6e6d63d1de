#![allow(dead_code)]

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::index::sample;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use trisep::oracle::DensePoly;
use trisep::trinomial::{SparsePoly, Term};

pub fn nonzero(rng: &mut ChaCha8Rng, max: i64) -> BigInt {
    let v = rng.gen_range(1..=max);
    BigInt::from(if rng.gen_bool(0.5) { -v } else { v })
}

/// Three distinct exponents in `0..=max_exp` with the top one at least 2.
pub fn trinomial(rng: &mut ChaCha8Rng, max_exp: u64, max_coeff: i64) -> SparsePoly {
    loop {
        let mut e: Vec<u64> = sample(rng, max_exp as usize + 1, 3).into_iter().map(|v| v as u64).collect();
        e.sort_unstable();
        if e[2] < 2 {
            continue;
        }
        let terms = e.iter().map(|&x| Term::new(nonzero(rng, max_coeff), x)).collect();
        return SparsePoly::new(terms).expect("distinct exponents");
    }
}

pub fn nonzero_big(rng: &mut ChaCha8Rng, bits: u64) -> BigInt {
    loop {
        let mut bytes = vec![0u8; bits.div_ceil(8) as usize];
        rng.fill(&mut bytes[..]);
        let mag = BigUint::from_bytes_le(&bytes) >> (bytes.len() as u64 * 8 - bits);
        if !mag.is_zero() {
            let s = if rng.gen_bool(0.5) { Sign::Minus } else { Sign::Plus };
            return BigInt::from_biguint(s, mag);
        }
    }
}

pub fn dense(f: &SparsePoly) -> DensePoly {
    DensePoly::from_sparse(f, 2000).expect("small degree")
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn pow2_rat(k: i64) -> BigRational {
    let one = BigInt::one();
    if k >= 0 {
        BigRational::from_integer(one << k as usize)
    } else {
        BigRational::new(one.clone(), one << (-k) as usize)
    }
}

pub fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

/// Strict lower bound on `ln q` for `q > 0`, from bit lengths alone.
pub fn ln_floor(q: &BigRational) -> f64 {
    let e = q.numer().bits() as f64 - 1.0 - q.denom().bits() as f64;
    let ln2 = if e >= 0.0 { 0.693_147_18 } else { 0.693_147_19 };
    e * ln2
}
