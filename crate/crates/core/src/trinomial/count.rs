use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{SparsePoly, Stripped, Trinomial};
use crate::bigmath::Budget;
use crate::succinct::{compare_succinct_with, SuccinctInt};
use crate::{Error, Result};

/// Distinct real roots by sign; multiplicities are reported separately.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootCountReport {
    pub negative: u32,
    pub zero: u32,
    pub positive: u32,
    #[serde(with = "crate::serde_str")]
    pub zero_multiplicity: BigUint,
    pub positive_double: bool,
    pub negative_double: bool,
}

impl RootCountReport {
    pub fn total(&self) -> u32 {
        self.negative + self.zero + self.positive
    }
}

/// The unique positive zero `m = ratio^(1/root_index)` of the derivative of
/// an α-stripped trinomial, with the exact sign of `f(m)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalPoint {
    #[serde(with = "crate::serde_str")]
    pub ratio: BigRational,
    #[serde(with = "crate::serde_str")]
    pub root_index: BigUint,
    #[serde(skip)]
    pub value_sign: Sign,
    /// Outcome of comparing `(|a|γ)^(γ−β)·(|c|γ)^β` with `|bβ|^β·|b(γ−β)|^(γ−β)`.
    #[serde(skip)]
    pub discriminant: Ordering,
}

/// Both sides of the critical-value comparison for `a + b·x^β + c·x^γ`.
fn critical_sides(f: &Trinomial) -> (SuccinctInt, SuccinctInt) {
    let gamma = BigInt::from(f.gamma.clone());
    let beta = BigInt::from(f.beta.clone());
    let gap = &gamma - &beta;
    let gap_u = gap.to_biguint().expect("γ > β");
    let lhs = SuccinctInt::from_parts(
        Sign::Plus,
        vec![
            (f.a.abs() * &gamma, gap_u.clone()),
            (f.c.abs() * &gamma, f.beta.clone()),
        ],
    )
    .expect("positive bases");
    let rhs = SuccinctInt::from_parts(
        Sign::Plus,
        vec![
            (f.b.abs() * &beta, f.beta.clone()),
            (f.b.abs() * &gap, gap_u),
        ],
    )
    .expect("positive bases");
    (lhs, rhs)
}

/// Critical point of the α-stripped trinomial, if it has a positive one.
pub fn critical_point(f: &Trinomial) -> Result<Option<CriticalPoint>> {
    critical_point_with(f, &Budget::default())
}

pub fn critical_point_with(f: &Trinomial, budget: &Budget) -> Result<Option<CriticalPoint>> {
    let f = f.strip();
    if f.b.sign() == f.c.sign() {
        return Ok(None);
    }
    let gamma = BigInt::from(f.gamma.clone());
    let beta = BigInt::from(f.beta.clone());
    let ratio = BigRational::new((&f.b * &beta).abs(), (&f.c * &gamma).abs());
    let (lhs, rhs) = critical_sides(&f);
    let (discriminant, _) = compare_succinct_with(&lhs, &rhs, budget)?;
    let value_sign = if f.a.sign() == f.b.sign() {
        f.a.sign()
    } else {
        match discriminant {
            Ordering::Less => f.b.sign(),
            Ordering::Equal => Sign::NoSign,
            Ordering::Greater => f.a.sign(),
        }
    };
    Ok(Some(CriticalPoint {
        ratio,
        root_index: &f.gamma - &f.beta,
        value_sign,
        discriminant,
    }))
}

/// `(distinct positive roots, is a double root)` of an α-stripped polynomial.
fn positive_roots(g: &Stripped, budget: &Budget) -> Result<(u32, bool)> {
    Ok(match g {
        Stripped::Monomial(_) => (0, false),
        Stripped::Binomial(bin) => ((bin.b.sign() != bin.c.sign()) as u32, false),
        Stripped::Trinomial(t) => {
            if t.a.sign() != t.c.sign() {
                (1, false)
            } else if t.b.sign() == t.a.sign() {
                (0, false)
            } else {
                let cp = critical_point_with(t, budget)?.expect("b and c have opposite signs");
                match cp.discriminant {
                    Ordering::Less => (2, false),
                    Ordering::Equal => (1, true),
                    Ordering::Greater => (0, false),
                }
            }
        }
    })
}

/// Exact distinct real-root counts.
pub fn count_real_roots(f: &SparsePoly) -> Result<RootCountReport> {
    count_real_roots_with(f, &Budget::default())
}

pub fn count_real_roots_with(f: &SparsePoly, budget: &Budget) -> Result<RootCountReport> {
    let n = f.normalize();
    let (positive, positive_double) = positive_roots(&n.stripped, budget)?;
    let flipped = f.flip().normalize();
    let (negative, negative_double) = positive_roots(&flipped.stripped, budget)?;
    let report = RootCountReport {
        negative,
        zero: (!n.zero_multiplicity.is_zero()) as u32,
        positive,
        zero_multiplicity: n.zero_multiplicity,
        positive_double,
        negative_double,
    };
    if report.total() > 5 {
        return Err(Error::Domain("more than five real roots reported".into()));
    }
    Ok(report)
}
