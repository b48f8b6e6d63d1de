use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::basis::{coprime_basis, exponent_row};
use crate::bigmath::{ln_interval, refine, Budget, DyadicInterval, RefineTarget};
use crate::{Error, Result};

/// Upper bound on `ln 2`, used to turn bit lengths into log-size bounds.
pub(crate) fn ln2_up() -> BigRational {
    BigRational::new(6_931_471_806u64.into(), 10_000_000_000u64.into())
}

/// Lower bound on `ln 2`.
pub(crate) fn ln2_lo() -> BigRational {
    BigRational::new(6_931_471_805u64.into(), 10_000_000_000u64.into())
}

/// `max(1, bits(x)·ln 2)`, an upper bound on `max(1, ln x)`.
pub(crate) fn log_size(x: &BigInt) -> BigRational {
    let v = BigRational::from_integer(x.bits().into()) * ln2_up();
    v.max(BigRational::one())
}

/// `Σ b_i·ln a_i` with positive rationals `a_i` and integers `b_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFormInLogs {
    terms: Vec<(BigRational, BigInt)>,
    s: BigRational,
    t: BigRational,
}

/// How a sign was certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Certificate {
    /// Decided from signs or exact exponent vectors alone.
    Structural,
    /// Interval evaluation at the given precision excluded zero.
    Numeric { precision: u64 },
}

/// `ln|Λ| ≥ log_floor` for every nonzero form of the given shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BakerFloor {
    pub n: usize,
    pub constant: BigRational,
    pub log_floor: BigRational,
}

/// Upper bound on `ln(2n)` rounded up to four decimals.
fn ln_2n_up(n: usize) -> BigRational {
    let iv = ln_interval(&BigRational::from_integer((2 * n).into()), 48)
        .expect("2n is positive");
    let scaled = iv.hi().to_rational() * BigRational::from_integer(10_000.into());
    BigRational::new(scaled.ceil().to_integer(), 10_000.into())
}

/// `18·(n+1)!·n^(n+1)·32^(n+2)·ln(2n)` with `ln(2n)` over-approximated.
pub fn baker_constant(n: usize) -> BigRational {
    let n_big = BigInt::from(n);
    let fact: BigInt = (1..=n + 1).map(BigInt::from).product();
    let int = BigInt::from(18) * fact * num_traits::pow(n_big, n + 1) * num_traits::pow(BigInt::from(32), n + 2);
    BigRational::from_integer(int) * ln_2n_up(n)
}

impl LinearFormInLogs {
    /// Terms with `a = 1` or `b = 0` are dropped; `a ≤ 0` is a domain error.
    pub fn new(terms: Vec<(BigRational, BigInt)>) -> Result<Self> {
        if let Some((a, _)) = terms.iter().find(|(a, _)| !a.is_positive()) {
            return Err(Error::domain(format!("logarithm of non-positive rational {a}")));
        }
        let terms: Vec<_> = terms
            .into_iter()
            .filter(|(a, b)| !a.is_one() && !b.is_zero())
            .collect();
        let max_pq = terms
            .iter()
            .flat_map(|(a, _)| [a.numer().clone(), a.denom().clone()])
            .max()
            .unwrap_or_else(BigInt::one);
        let max_b = terms
            .iter()
            .map(|(_, b)| b.abs())
            .max()
            .unwrap_or_else(BigInt::one);
        Ok(LinearFormInLogs {
            s: log_size(&max_pq),
            t: log_size(&max_b),
            terms,
        })
    }

    pub fn terms(&self) -> &[(BigRational, BigInt)] {
        &self.terms
    }

    pub fn n(&self) -> usize {
        self.terms.len()
    }

    pub fn s(&self) -> &BigRational {
        &self.s
    }

    pub fn t(&self) -> &BigRational {
        &self.t
    }

    pub fn baker_floor(&self) -> BakerFloor {
        let n = self.n().max(1);
        let constant = baker_constant(n);
        let log_floor = -(&constant * &self.t * num_traits::pow(self.s.clone(), n));
        BakerFloor {
            n,
            constant,
            log_floor,
        }
    }

    /// Whether `Π a_i^b_i = 1` exactly, via exponent vectors over a coprime basis.
    pub fn is_structurally_zero(&self) -> Result<bool> {
        let mut nums = Vec::new();
        for (a, _) in &self.terms {
            for v in [a.numer(), a.denom()] {
                if !v.is_one() {
                    nums.push(v.clone());
                }
            }
        }
        if nums.is_empty() {
            return Ok(true);
        }
        let (basis, _) = coprime_basis(&nums)?;
        let mut total = vec![BigInt::zero(); basis.len()];
        for (a, b) in &self.terms {
            for (v, sgn) in [(a.numer(), 1), (a.denom(), -1)] {
                if v.is_one() {
                    continue;
                }
                for (acc, e) in total.iter_mut().zip(exponent_row(v, &basis)) {
                    *acc += b * BigInt::from(e) * sgn;
                }
            }
        }
        Ok(total.iter().all(Zero::is_zero))
    }

    /// Interval for `Λ` with absolute width at most `2^-precision`.
    pub fn enclose(&self, precision: u64) -> Result<DyadicInterval> {
        let guard = 8 + bit_len(self.n() as u64);
        let mut acc = DyadicInterval::zero(precision);
        for (a, b) in &self.terms {
            let size = a.numer().bits().max(a.denom().bits());
            let p = precision + b.bits() + bit_len(size) + guard;
            let l = ln_interval(a, p)?.mul_int(b);
            acc = acc.add(&l);
        }
        Ok(acc.with_precision(precision))
    }
}

fn bit_len(v: u64) -> u64 {
    64 - v.leading_zeros() as u64
}

impl BakerFloor {
    /// Smallest precision whose enclosure width is below `exp(log_floor)/2`.
    pub fn required_precision(&self) -> u64 {
        let bits: BigInt = (-&self.log_floor / ln2_lo()).ceil().to_integer() + 2;
        bits.to_u64().unwrap_or(u64::MAX)
    }
}

/// Exact sign of `Σ b_i·ln a_i` under the default budget.
pub fn sign_linear_form(form: &LinearFormInLogs) -> Result<Sign> {
    sign_linear_form_with(form, &Budget::default()).map(|(s, _)| s)
}

/// Exact sign of `Σ b_i·ln a_i` together with how it was certified.
///
/// Zero is detected only structurally. A nonzero form is refined until its
/// enclosure excludes zero; the Baker floor guarantees this happens by
/// [`BakerFloor::required_precision`]. If `precision_cap` lies below that
/// requirement and is reached first, a budget error is returned.
pub fn sign_linear_form_with(form: &LinearFormInLogs, budget: &Budget) -> Result<(Sign, Certificate)> {
    if form.is_structurally_zero()? {
        return Ok((Sign::NoSign, Certificate::Structural));
    }
    let floor = form.baker_floor();
    let required = floor.required_precision();
    let start = budget.start_precision.max(8);
    let cap = if required <= budget.precision_cap {
        let mut p = start;
        while p < required {
            p = p.saturating_mul(2);
        }
        p
    } else {
        budget.precision_cap
    };
    let iv = refine(|p| form.enclose(p), &RefineTarget::SignDetermined, start, cap).map_err(|e| match e {
        Error::Budget { last, .. } => Error::Budget {
            reason: format!(
                "linear form sign undetermined at {cap} bits; the certified floor needs {required}"
            ),
            last,
        },
        other => other,
    })?;
    let sign = iv.sign().expect("refine stops on a determined sign");
    if sign == Sign::NoSign {
        return Err(Error::Domain(
            "nonzero linear form enclosed by [0, 0]".into(),
        ));
    }
    Ok((sign, Certificate::Numeric { precision: iv.precision() }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Pow;

    fn form(terms: &[(i64, i64, i64)]) -> LinearFormInLogs {
        LinearFormInLogs::new(
            terms
                .iter()
                .map(|&(p, q, b)| (BigRational::new(p.into(), q.into()), BigInt::from(b)))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn cube_of_two_cancels_eight() {
        let f = form(&[(2, 1, 3), (8, 1, -1)]);
        let (s, cert) = sign_linear_form_with(&f, &Budget::default()).unwrap();
        assert_eq!(s, Sign::NoSign);
        assert_eq!(cert, Certificate::Structural);
    }

    #[test]
    fn nine_beats_eight() {
        assert_eq!(sign_linear_form(&form(&[(3, 1, 2), (2, 1, -3)])).unwrap(), Sign::Plus);
    }

    #[test]
    fn ten_pow_thirty_below_two_pow_hundred() {
        // oracle: 10^30 < 2^100 as big integers
        let lhs: BigInt = Pow::pow(BigInt::from(10), 30u32);
        let rhs: BigInt = Pow::pow(BigInt::from(2), 100u32);
        assert!(lhs < rhs);
        assert_eq!(sign_linear_form(&form(&[(10, 1, 30), (2, 1, -100)])).unwrap(), Sign::Minus);
    }

    #[test]
    fn rational_terms_stay_paired() {
        // (2/3)^2·(9/4) = 1
        let f = form(&[(2, 3, 2), (9, 4, 1)]);
        assert!(f.is_structurally_zero().unwrap());
        assert_eq!(f.n(), 2);
    }

    #[test]
    fn two_term_constant_envelope() {
        // 18·3!·2^3·32^4 = 905969664, times an upper bound on ln 4
        let c = baker_constant(2);
        assert_eq!(c, BigRational::from_integer(905_969_664.into()) * BigRational::new(13_863.into(), 10_000.into()));
        let ln4 = 4f64.ln();
        assert!(c.to_f64().unwrap() >= 905_969_664.0 * ln4);
    }

    #[test]
    fn size_parameters_are_clamped() {
        let f = form(&[(2, 1, 1), (3, 1, -1)]);
        assert_eq!(f.s(), &(BigRational::from_integer(2.into()) * ln2_up()));
        assert_eq!(f.t(), &BigRational::one());
    }

    #[test]
    fn tiny_cap_reports_budget() {
        // a cap below the start precision never evaluates
        let f = form(&[(3, 1, 2), (2, 1, -3)]);
        let budget = Budget {
            start_precision: 64,
            precision_cap: 8,
            ..Budget::default()
        };
        assert!(matches!(sign_linear_form_with(&f, &budget), Err(Error::Budget { .. })));
    }
}
