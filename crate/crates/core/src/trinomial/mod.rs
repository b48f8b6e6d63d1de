//! Integer polynomials with at most three terms.
//!
//! Exponents are arbitrary-size integers and are never expanded. Root counts
//! are exact, sign decisions at critical points go through succinct integer
//! comparison, and separation bounds are returned as exact logarithms.

mod bounds;
mod constants;
mod count;
mod eval;

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

pub use bounds::{
    binomial_min_lower_bound, cauchy_bounds, derivative_sup_bound, separation_bound_binomial,
    separation_bound_complex, separation_bound_real, SeparationBound, SeparationKind,
};
pub use constants::{ConstantLedger, LedgerEntry};
pub use count::{count_real_roots, count_real_roots_with, critical_point, critical_point_with, CriticalPoint, RootCountReport};
pub use eval::{sign_at_rational, sign_at_rational_with, SignRoute};

use crate::bigmath::parse_int;
use crate::{Error, Result};

/// One term `coeff·x^exp`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    #[serde(with = "crate::serde_str")]
    pub coeff: BigInt,
    #[serde(with = "crate::serde_str")]
    pub exp: BigUint,
}

impl Term {
    pub fn new(coeff: impl Into<BigInt>, exp: impl Into<BigUint>) -> Self {
        Term {
            coeff: coeff.into(),
            exp: exp.into(),
        }
    }
}

/// A nonzero polynomial with one to three terms, sorted by exponent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SparsePoly {
    terms: Vec<Term>,
}

#[derive(Deserialize)]
struct RawPoly {
    terms: Vec<Term>,
}

impl<'de> Deserialize<'de> for SparsePoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawPoly::deserialize(d)?;
        SparsePoly::new(raw.terms).map_err(serde::de::Error::custom)
    }
}

impl SparsePoly {
    /// Drops zero coefficients and sorts by exponent.
    pub fn new(raw: Vec<Term>) -> Result<Self> {
        let mut exps: Vec<&BigUint> = raw.iter().map(|t| &t.exp).collect();
        exps.sort();
        if let Some(w) = exps.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::domain(format!("duplicate exponent {}", w[0])));
        }
        let mut terms: Vec<Term> = raw.into_iter().filter(|t| !t.coeff.is_zero()).collect();
        if terms.is_empty() {
            return Err(Error::domain("zero polynomial"));
        }
        if terms.len() > 3 {
            return Err(Error::Unsupported(format!(
                "{} nonzero terms; at most three are supported",
                terms.len()
            )));
        }
        terms.sort_by(|x, y| x.exp.cmp(&y.exp));
        Ok(SparsePoly { terms })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn degree(&self) -> &BigUint {
        &self.terms.last().expect("nonempty").exp
    }

    /// Largest coefficient magnitude.
    pub fn max_coeff(&self) -> BigInt {
        self.terms.iter().map(|t| t.coeff.abs()).max().expect("nonempty")
    }

    /// `f(−x)`.
    pub fn flip(&self) -> SparsePoly {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let coeff = if t.exp.is_odd() { -&t.coeff } else { t.coeff.clone() };
                Term { coeff, exp: t.exp.clone() }
            })
            .collect();
        SparsePoly { terms }
    }

    /// Factor out the lowest power of `x`.
    pub fn normalize(&self) -> Normalized {
        let alpha = self.terms[0].exp.clone();
        let shifted: Vec<Term> = self
            .terms
            .iter()
            .map(|t| Term { coeff: t.coeff.clone(), exp: &t.exp - &alpha })
            .collect();
        let stripped = match shifted.as_slice() {
            [m] => Stripped::Monomial(m.coeff.clone()),
            [lo, hi] => Stripped::Binomial(Binomial {
                b: lo.coeff.clone(),
                c: hi.coeff.clone(),
                beta: BigUint::zero(),
                gamma: hi.exp.clone(),
            }),
            [lo, mid, hi] => Stripped::Trinomial(Trinomial {
                a: lo.coeff.clone(),
                b: mid.coeff.clone(),
                c: hi.coeff.clone(),
                alpha: BigUint::zero(),
                beta: mid.exp.clone(),
                gamma: hi.exp.clone(),
            }),
            _ => unreachable!("one to three terms"),
        };
        Normalized {
            stripped,
            zero_multiplicity: alpha,
        }
    }

    /// Parse either the text form or the structured JSON form.
    pub fn parse_any(s: &str) -> Result<Self> {
        if s.trim_start().starts_with('{') {
            serde_json::from_str(s).map_err(|e| Error::parse(e.to_string()))
        } else {
            s.parse()
        }
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{},{}", t.coeff, t.exp)?;
        }
        Ok(())
    }
}

impl FromStr for SparsePoly {
    type Err = Error;

    /// `coeff,exp;coeff,exp;...`
    fn from_str(s: &str) -> Result<Self> {
        let mut raw = Vec::new();
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (c, e) = part
                .split_once(',')
                .ok_or_else(|| Error::parse(format!("expected `coeff,exp` but found `{part}`")))?;
            let exp = parse_int(e)?
                .to_biguint()
                .ok_or_else(|| Error::parse(format!("negative exponent in `{part}`")))?;
            raw.push(Term { coeff: parse_int(c)?, exp });
        }
        if raw.is_empty() {
            return Err(Error::parse("empty polynomial"));
        }
        SparsePoly::new(raw)
    }
}

/// `a·x^α + b·x^β + c·x^γ` with nonzero coefficients and `α < β < γ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trinomial {
    #[serde(with = "crate::serde_str")]
    pub a: BigInt,
    #[serde(with = "crate::serde_str")]
    pub b: BigInt,
    #[serde(with = "crate::serde_str")]
    pub c: BigInt,
    #[serde(with = "crate::serde_str")]
    pub alpha: BigUint,
    #[serde(with = "crate::serde_str")]
    pub beta: BigUint,
    #[serde(with = "crate::serde_str")]
    pub gamma: BigUint,
}

/// `b·x^β + c·x^γ` with nonzero coefficients and `β < γ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Binomial {
    #[serde(with = "crate::serde_str")]
    pub b: BigInt,
    #[serde(with = "crate::serde_str")]
    pub c: BigInt,
    #[serde(with = "crate::serde_str")]
    pub beta: BigUint,
    #[serde(with = "crate::serde_str")]
    pub gamma: BigUint,
}

impl Trinomial {
    pub fn new(
        a: BigInt,
        b: BigInt,
        c: BigInt,
        alpha: BigUint,
        beta: BigUint,
        gamma: BigUint,
    ) -> Result<Self> {
        if a.is_zero() || b.is_zero() || c.is_zero() {
            return Err(Error::domain("trinomial coefficients must be nonzero"));
        }
        if !(alpha < beta && beta < gamma) {
            return Err(Error::domain("trinomial exponents must satisfy α < β < γ"));
        }
        Ok(Trinomial { a, b, c, alpha, beta, gamma })
    }

    pub fn to_poly(&self) -> SparsePoly {
        SparsePoly {
            terms: vec![
                Term { coeff: self.a.clone(), exp: self.alpha.clone() },
                Term { coeff: self.b.clone(), exp: self.beta.clone() },
                Term { coeff: self.c.clone(), exp: self.gamma.clone() },
            ],
        }
    }

    /// The same trinomial divided by `x^α`.
    pub fn strip(&self) -> Trinomial {
        Trinomial {
            a: self.a.clone(),
            b: self.b.clone(),
            c: self.c.clone(),
            alpha: BigUint::zero(),
            beta: &self.beta - &self.alpha,
            gamma: &self.gamma - &self.alpha,
        }
    }

    /// `x^γ·f(1/x) = c + b·x^(γ−β) + a·x^γ`; requires `α = 0`.
    pub fn reciprocal(&self) -> Result<Trinomial> {
        if !self.alpha.is_zero() {
            return Err(Error::domain("reciprocal requires α = 0"));
        }
        Ok(Trinomial {
            a: self.c.clone(),
            b: self.b.clone(),
            c: self.a.clone(),
            alpha: BigUint::zero(),
            beta: &self.gamma - &self.beta,
            gamma: self.gamma.clone(),
        })
    }

    /// `max(|a|, |b|, |c|, α, β, γ)`.
    pub fn height(&self) -> BigInt {
        [
            self.a.abs(),
            self.b.abs(),
            self.c.abs(),
            BigInt::from(self.alpha.clone()),
            BigInt::from(self.beta.clone()),
            BigInt::from(self.gamma.clone()),
        ]
        .into_iter()
        .max()
        .expect("nonempty")
    }

    /// Sum of bit sizes of coefficients and exponents.
    pub fn sparse_size(&self) -> u64 {
        [&self.a, &self.b, &self.c].iter().map(|v| v.bits() + 1).sum::<u64>()
            + [&self.alpha, &self.beta, &self.gamma].iter().map(|v| v.bits() + 1).sum::<u64>()
    }
}

impl Binomial {
    pub fn new(b: BigInt, c: BigInt, beta: BigUint, gamma: BigUint) -> Result<Self> {
        if b.is_zero() || c.is_zero() {
            return Err(Error::domain("binomial coefficients must be nonzero"));
        }
        if beta >= gamma {
            return Err(Error::domain("binomial exponents must satisfy β < γ"));
        }
        Ok(Binomial { b, c, beta, gamma })
    }

    pub fn to_poly(&self) -> SparsePoly {
        SparsePoly {
            terms: vec![
                Term { coeff: self.b.clone(), exp: self.beta.clone() },
                Term { coeff: self.c.clone(), exp: self.gamma.clone() },
            ],
        }
    }
}

/// The polynomial after dividing by its lowest power of `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "shape")]
pub enum Stripped {
    Monomial(#[serde(with = "crate::serde_str")] BigInt),
    Binomial(Binomial),
    Trinomial(Trinomial),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Normalized {
    pub stripped: Stripped,
    #[serde(with = "crate::serde_str")]
    pub zero_multiplicity: BigUint,
}

/// `normalize` on raw `(coeff, exp)` pairs.
pub fn normalize(raw: Vec<Term>) -> Result<Normalized> {
    Ok(SparsePoly::new(raw)?.normalize())
}
