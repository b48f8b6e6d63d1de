use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{Binomial, ConstantLedger, SparsePoly, Stripped, Trinomial};
use crate::bigmath::{cos_interval, ln_interval, pi_interval, Dyadic};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeparationKind {
    Real,
    Complex,
    Binomial,
}

/// `ln` of a certified lower bound on the distance between distinct roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationBound {
    #[serde(with = "crate::serde_str")]
    pub log_bound: BigRational,
    pub kind: SeparationKind,
    /// Ledger entry the bound was computed from, if any.
    pub constant: Option<String>,
    /// Log-height parameter `s`.
    #[serde(with = "crate::serde_str")]
    pub s: BigRational,
}

impl SeparationBound {
    pub fn approx(&self) -> f64 {
        self.log_bound.to_f64().unwrap_or(f64::NEG_INFINITY)
    }
}

/// `max(1, ln v)` rounded up to a rational.
pub(crate) fn ln_upper(v: &BigInt) -> BigRational {
    if v <= &BigInt::one() {
        return BigRational::one();
    }
    let hi = ln_interval(&BigRational::from_integer(v.clone()), 40)
        .expect("positive")
        .hi()
        .to_rational();
    hi.max(BigRational::one())
}

/// `max(|coefficients|, exponents)` of `f`.
fn height(f: &SparsePoly) -> BigInt {
    f.terms()
        .iter()
        .flat_map(|t| [t.coeff.abs(), BigInt::from(t.exp.clone())])
        .max()
        .expect("nonempty")
}

/// Annulus `lower ≤ |ρ| ≤ upper` containing every nonzero complex root.
///
/// `lower = 1/(M+1)` with `M` the largest coefficient magnitude, and
/// `upper = 1 + max_i |c_i| / |c_lead|` on the lower-order coefficients.
pub fn cauchy_bounds(f: &SparsePoly) -> (BigRational, BigRational) {
    let m = f.max_coeff();
    let lower = BigRational::new(BigInt::one(), m + 1);
    let terms = f.terms();
    let (lead, rest) = terms.split_last().expect("nonempty");
    let ratio = rest
        .iter()
        .map(|t| BigRational::new(t.coeff.abs(), lead.coeff.abs()))
        .max()
        .unwrap_or_else(BigRational::zero);
    (lower, ratio + BigRational::one())
}

/// `b²β`, which bounds `|f′|` on `[0, m]` when `α = 0`, `γ ≥ 2β` and `f′`
/// has a positive zero `m`.
pub fn derivative_sup_bound(f: &Trinomial) -> Result<BigRational> {
    if !f.alpha.is_zero() {
        return Err(Error::domain("derivative bound requires α = 0"));
    }
    if f.gamma < &f.beta * 2u8 {
        return Err(Error::domain("derivative bound requires γ ≥ 2β; use the reciprocal"));
    }
    if f.b.sign() == f.c.sign() {
        return Err(Error::domain("derivative has no positive zero"));
    }
    let beta = BigInt::from(f.beta.clone());
    Ok(BigRational::from_integer(&f.b * &f.b * beta))
}

/// `−C1·t·s²`, a lower bound on `ln|a1·x^β + a2|` whenever that value is nonzero.
pub fn binomial_min_lower_bound(
    a1: &BigInt,
    a2: &BigInt,
    beta: &BigRational,
    x: &BigRational,
) -> Result<BigRational> {
    if a1.is_zero() || a2.is_zero() {
        return Err(Error::domain("binomial coefficients must be nonzero"));
    }
    if !beta.is_positive() || !x.is_positive() {
        return Err(Error::domain("exponent and point must be positive"));
    }
    let s_arg = [x.numer().clone(), x.denom().clone(), a1.abs(), a2.abs()]
        .into_iter()
        .max()
        .expect("nonempty");
    let t_arg = beta.numer().clone().max(beta.denom().clone());
    let s = ln_upper(&s_arg);
    let t = ln_upper(&t_arg);
    Ok(-(ConstantLedger::get().binomial_value() * t * &s * &s))
}

/// `−C·s³` for any two distinct real roots.
pub fn separation_bound_real(f: &SparsePoly) -> Result<SeparationBound> {
    let s = ln_upper(&height(f));
    Ok(SeparationBound {
        log_bound: -(ConstantLedger::get().real_separation() * &s * &s * &s),
        kind: SeparationKind::Real,
        constant: Some("real_separation".into()),
        s,
    })
}

/// `−C6·s³` for any two distinct complex roots; binomials use the exact
/// roots-of-unity bound instead.
pub fn separation_bound_complex(f: &SparsePoly) -> Result<SeparationBound> {
    if let [lo, hi] = f.terms() {
        let bin = Binomial::new(lo.coeff.clone(), hi.coeff.clone(), lo.exp.clone(), hi.exp.clone())?;
        return separation_bound_binomial(&bin);
    }
    let n = f.normalize();
    debug_assert!(!matches!(n.stripped, Stripped::Binomial(_)));
    let s = ln_upper(&height(f));
    Ok(SeparationBound {
        log_bound: -(ConstantLedger::get().complex_separation() * &s * &s * &s),
        kind: SeparationKind::Complex,
        constant: Some("complex_separation".into()),
        s,
    })
}

/// Lower bound on `ln(2(1 − cos(2π/d)))` for `d ≥ 2`.
fn ln_chord_sq_lower(d: &BigUint) -> BigRational {
    let mut p = 2 * d.bits() + 96;
    loop {
        let two_pi = pi_interval(p + 8).shl(1);
        let angle = two_pi.div_int(&BigInt::from(d.clone()));
        let cos_hi = cos_interval(&angle, p).hi().clone();
        let v = Dyadic::from(2).sub_exact(&cos_hi.shl(1));
        if v.sign() == Sign::Plus {
            let iv = ln_interval(&v.to_rational(), p).expect("positive");
            return iv.lo().to_rational();
        }
        p *= 2;
    }
}

/// `ln(1/|c|) + ½·ln(2(1 − cos(2π/(γ−β))))` for `b·x^β + c·x^γ`.
///
/// The root-of-unity term is capped at `0` when `0` is also a root, since
/// the nonzero roots are only known to be `≥ 1/|c|` from the origin. For
/// `γ − β = 1` the bound is `ln(1/|c|)`.
pub fn separation_bound_binomial(f: &Binomial) -> Result<SeparationBound> {
    let d = &f.gamma - &f.beta;
    let ln_c = ln_interval(&BigRational::from_integer(f.c.abs()), 64)?;
    let mut log_bound = -ln_c.hi().to_rational();
    if d > BigUint::one() {
        let mut chord = ln_chord_sq_lower(&d) / BigRational::from_integer(2.into());
        if !f.beta.is_zero() && chord.is_positive() {
            chord = BigRational::zero();
        }
        log_bound += chord;
    }
    let s = ln_upper(&height(&f.to_poly()));
    Ok(SeparationBound {
        log_bound,
        kind: SeparationKind::Binomial,
        constant: None,
        s,
    })
}
