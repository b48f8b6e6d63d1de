use std::fmt;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::trinomial::SparsePoly;
use crate::{Error, Result};

pub const DEFAULT_DEGREE_CAP: usize = 2000;

/// Polynomial with rational coefficients stored by ascending degree.
///
/// The loops below skip zero coefficients, so expansions of sparse inputs
/// stay cheap to divide and evaluate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensePoly {
    coeffs: Vec<BigRational>,
}

impl DensePoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Result<Self> {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::domain("zero polynomial"));
        }
        Ok(DensePoly { coeffs })
    }

    pub fn from_ints(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    /// Dense expansion of a sparse polynomial of degree at most `cap`.
    pub fn from_sparse(f: &SparsePoly, cap: usize) -> Result<Self> {
        let deg = f
            .degree()
            .to_usize()
            .filter(|&d| d <= cap)
            .ok_or_else(|| Error::budget(format!("degree {} exceeds the oracle cap {cap}", f.degree())))?;
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        for t in f.terms() {
            let e = t.exp.to_usize().expect("bounded by degree");
            coeffs[e] = BigRational::from_integer(t.coeff.clone());
        }
        Self::new(coeffs)
    }

    /// `Π (x − r)` over the given roots.
    pub fn from_roots(roots: &[BigRational]) -> Self {
        let mut p = DensePoly { coeffs: vec![BigRational::one()] };
        for r in roots {
            p = p.mul(&DensePoly { coeffs: vec![-r.clone(), BigRational::one()] });
        }
        p
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &BigRational {
        self.coeffs.last().expect("nonzero")
    }

    /// Largest coefficient magnitude.
    pub fn height(&self) -> BigRational {
        self.coeffs.iter().map(|c| c.abs()).max().expect("nonzero")
    }

    /// `(degree, coefficient)` of every nonzero term.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn derivative(&self) -> Option<DensePoly> {
        if self.is_constant() {
            return None;
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i + 1)))
            .collect();
        DensePoly::new(coeffs).ok()
    }

    pub fn mul(&self, other: &DensePoly) -> DensePoly {
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.terms() {
            for (j, b) in other.terms() {
                out[i + j] += a * b;
            }
        }
        DensePoly { coeffs: out }
    }

    pub fn scale(&self, k: &BigRational) -> DensePoly {
        DensePoly { coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    /// Quotient and remainder; the remainder is `None` when it vanishes.
    pub fn div_rem(&self, divisor: &DensePoly) -> (Vec<BigRational>, Option<DensePoly>) {
        let n = divisor.degree();
        let lead = divisor.leading();
        let lower: Vec<(usize, &BigRational)> = divisor.terms().filter(|&(i, _)| i < n).collect();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.degree().saturating_sub(n) + 1];
        for k in (n..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] / lead;
            for &(i, c) in &lower {
                let prod = &q * c;
                rem[k - n + i] -= prod;
            }
            rem[k] = BigRational::zero();
            quot[k - n] = q;
        }
        rem.truncate(n.max(1));
        (quot, DensePoly::new(rem).ok())
    }

    /// Exact value at `x`, summing only the nonzero terms.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        if x.is_zero() {
            return self.coeffs[0].clone();
        }
        let (n, d) = (x.numer(), x.denom());
        let mut acc = BigRational::zero();
        for (i, c) in self.terms() {
            let e = i as u32;
            acc += c * BigRational::new_raw(n.pow(e), d.pow(e));
        }
        acc
    }

    pub fn sign_at(&self, x: &BigRational) -> Sign {
        let v = self.eval(x);
        if v.is_zero() {
            Sign::NoSign
        } else if v.is_positive() {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// Sign of the value as `x → +∞` (`positive`) or `x → −∞`.
    pub fn sign_at_infinity(&self, positive: bool) -> Sign {
        let s = if self.leading().is_positive() { Sign::Plus } else { Sign::Minus };
        if positive || self.degree() % 2 == 0 {
            s
        } else {
            -s
        }
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }
}

impl fmt::Display for DensePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms().map(|(i, c)| format!("{c}*x^{i}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn division_identity() {
        let a = DensePoly::from_ints(&[-1, 0, 0, 0, 1]).unwrap();
        let b = DensePoly::from_ints(&[1, 0, 1]).unwrap();
        let (quot, rem) = a.div_rem(&b);
        assert_eq!(quot, vec![q(-1), q(0), q(1)]);
        assert!(rem.is_none());
        let (_, rem) = DensePoly::from_ints(&[2, -3, 1]).unwrap().div_rem(&DensePoly::from_ints(&[0, 1]).unwrap());
        assert_eq!(rem.unwrap(), DensePoly::from_ints(&[2]).unwrap());
    }

    #[test]
    fn roots_expand_and_evaluate() {
        let p = DensePoly::from_roots(&[q(1), q(2)]);
        assert_eq!(p, DensePoly::from_ints(&[2, -3, 1]).unwrap());
        assert_eq!(p.eval(&BigRational::new(3.into(), 2.into())), BigRational::new((-1).into(), 4.into()));
        assert_eq!(p.sign_at(&q(2)), Sign::NoSign);
    }

    #[test]
    fn sparse_expansion_respects_cap() {
        let f: SparsePoly = "1,0;1,3000".parse().unwrap();
        assert!(matches!(DensePoly::from_sparse(&f, DEFAULT_DEGREE_CAP), Err(Error::Budget { .. })));
        let g: SparsePoly = "2,0;-3,1;1,2".parse().unwrap();
        assert_eq!(DensePoly::from_sparse(&g, 10).unwrap().degree(), 2);
    }
}
