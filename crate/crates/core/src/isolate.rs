//! Certified isolation of the real roots of a trinomial.
//!
//! The positive axis of the α-stripped polynomial is split at the unique
//! positive critical point, so every piece is monotone and holds at most one
//! root. Each piece is bisected at dyadic points with exact sign evaluation.
//! The negative axis is handled through `x ↦ −x`.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bigmath::{exp_interval, ln_interval, refine, Budget, Dyadic, DyadicInterval, RefineTarget, Round};
use crate::trinomial::{cauchy_bounds, critical_point_with, sign_at_rational_with, SparsePoly, Stripped, Trinomial};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RootCertificate {
    /// The polynomial has strictly opposite signs at the two endpoints.
    SignChange,
    /// The interval brackets the critical point, which is a root.
    DoubleRoot,
    /// The interval is the exact root.
    ExactRationalRoot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RootSign {
    Negative,
    Zero,
    Positive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsolatedRoot {
    pub interval: DyadicInterval,
    pub certificate: RootCertificate,
    pub sign: RootSign,
}

/// Disjoint intervals, one per distinct real root, in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsolationReport {
    pub intervals: Vec<IsolatedRoot>,
    #[serde(with = "crate::serde_str")]
    pub requested_width: Dyadic,
}

/// Isolate every distinct real root of `f` in an interval of width at most
/// `width`.
pub fn isolate_real_roots(f: &SparsePoly, width: &Dyadic) -> Result<IsolationReport> {
    isolate_real_roots_with(f, width, &Budget::default())
}

pub fn isolate_real_roots_with(f: &SparsePoly, width: &Dyadic, budget: &Budget) -> Result<IsolationReport> {
    if width.sign() != Sign::Plus {
        return Err(Error::domain("isolation width must be positive"));
    }
    let n = f.normalize();
    let mut intervals: Vec<IsolatedRoot> = positive_axis(&f.flip().normalize().stripped, width, budget)?
        .into_iter()
        .rev()
        .map(|(iv, certificate)| IsolatedRoot {
            interval: DyadicInterval::new(iv.hi().neg(), iv.lo().neg(), iv.precision()),
            certificate,
            sign: RootSign::Negative,
        })
        .collect();
    if !n.zero_multiplicity.is_zero() {
        intervals.push(IsolatedRoot {
            interval: DyadicInterval::zero(budget.start_precision),
            certificate: RootCertificate::ExactRationalRoot,
            sign: RootSign::Zero,
        });
    }
    intervals.extend(
        positive_axis(&n.stripped, width, budget)?
            .into_iter()
            .map(|(interval, certificate)| IsolatedRoot {
                interval,
                certificate,
                sign: RootSign::Positive,
            }),
    );
    Ok(IsolationReport {
        intervals,
        requested_width: width.clone(),
    })
}

/// Dyadic interval of width at most `width` containing the positive zero
/// `m = |bβ/cγ|^(1/(γ−β))` of the derivative of the α-stripped trinomial.
pub fn bracket_critical_point(f: &Trinomial, width: &Dyadic) -> Result<DyadicInterval> {
    bracket_critical_point_with(f, width, &Budget::default())
}

pub fn bracket_critical_point_with(f: &Trinomial, width: &Dyadic, budget: &Budget) -> Result<DyadicInterval> {
    if width.sign() != Sign::Plus {
        return Err(Error::domain("bracket width must be positive"));
    }
    let f = f.strip();
    if f.b.sign() == f.c.sign() {
        return Err(Error::domain("no positive critical point: b and c have the same sign"));
    }
    let beta = BigInt::from(f.beta.clone());
    let gamma = BigInt::from(f.gamma.clone());
    let ratio = BigRational::new((&f.b * &beta).abs(), (&f.c * &gamma).abs());
    let k = &gamma - &beta;
    let compute = |p: u64| -> Result<DyadicInterval> {
        if ratio.is_one() {
            return Ok(DyadicInterval::point(Dyadic::one(), p));
        }
        if k.is_one() {
            return Ok(DyadicInterval::from_rational(&ratio, p));
        }
        let ln_m = ln_interval(&ratio, p + 8)?.div_int(&k);
        exp_interval(&ln_m, p)
    };
    let target = RefineTarget::Width(width.clone());
    refine(compute, &target, budget.start_precision, budget.precision_cap)
}

/// Largest power of two not above `x > 0`.
fn floor_pow2(x: &Dyadic) -> Dyadic {
    Dyadic::pow2(x.msb().expect("positive") - 1)
}

struct Axis<'a> {
    poly: SparsePoly,
    width: &'a Dyadic,
    budget: &'a Budget,
}

impl Axis<'_> {
    fn sign(&self, x: &Dyadic) -> Result<Sign> {
        sign_at_rational_with(&self.poly, &x.to_rational(), self.budget).map(|(s, _)| s)
    }

    fn interval(&self, lo: Dyadic, hi: Dyadic) -> DyadicInterval {
        DyadicInterval::new(lo, hi, self.budget.start_precision)
    }

    /// Bisect `[lo, hi]`, on which the polynomial is monotone with nonzero
    /// endpoint signs `s_lo` and `−s_lo`.
    fn bisect(&self, mut lo: Dyadic, mut hi: Dyadic, s_lo: Sign) -> Result<DyadicInterval> {
        loop {
            if hi.sub_exact(&lo) <= *self.width {
                return Ok(self.interval(lo, hi));
            }
            let mid = Dyadic::midpoint(&lo, &hi);
            match self.sign(&mid)? {
                Sign::NoSign => return self.around_exact_root(&lo, &mid, &hi),
                s if s == s_lo => lo = mid,
                _ => hi = mid,
            }
        }
    }

    /// A sign-change interval strictly inside `(lo, hi)` around the unique
    /// root `mid` of that range.
    fn around_exact_root(&self, lo: &Dyadic, mid: &Dyadic, hi: &Dyadic) -> Result<DyadicInterval> {
        let reach = self.width.shl(-1).min(mid.sub_exact(lo)).min(hi.sub_exact(mid));
        let delta = floor_pow2(&reach).shl(-1);
        Ok(self.interval(mid.sub_exact(&delta), mid.add_exact(&delta)))
    }

    /// Endpoints of a bracket of the critical point at which the polynomial
    /// has the sign of its value there.
    fn isolate_critical(&self, t: &Trinomial, value_sign: Sign, floor: &Dyadic) -> Result<(Dyadic, Dyadic)> {
        let mut w = self.width.clone();
        loop {
            let br = bracket_critical_point_with(t, &w, self.budget)?;
            if br.lo() > floor && self.sign(br.lo())? == value_sign && self.sign(br.hi())? == value_sign {
                return Ok((br.lo().clone(), br.hi().clone()));
            }
            w = w.shl(-4);
        }
    }
}

/// Isolating intervals of the positive roots of an α-stripped polynomial.
fn positive_axis(g: &Stripped, width: &Dyadic, budget: &Budget) -> Result<Vec<(DyadicInterval, RootCertificate)>> {
    let poly = match g {
        Stripped::Monomial(_) => return Ok(Vec::new()),
        Stripped::Binomial(b) => b.to_poly(),
        Stripped::Trinomial(t) => t.to_poly(),
    };
    let (lower, upper) = cauchy_bounds(&poly);
    let two = BigRational::from_integer(2.into());
    let lo = Dyadic::from_rational(&(lower / &two), 64, Round::Down);
    let hi = Dyadic::from_rational(&(upper * &two), 64, Round::Up);
    let axis = Axis { poly, width, budget };
    let sign_change = |iv| (iv, RootCertificate::SignChange);
    match g {
        Stripped::Monomial(_) => unreachable!(),
        Stripped::Binomial(b) => {
            if b.b.sign() == b.c.sign() {
                return Ok(Vec::new());
            }
            Ok(vec![sign_change(axis.bisect(lo, hi, b.b.sign())?)])
        }
        Stripped::Trinomial(t) => {
            if t.a.sign() != t.c.sign() {
                return Ok(vec![sign_change(axis.bisect(lo, hi, t.a.sign())?)]);
            }
            if t.b.sign() == t.a.sign() {
                return Ok(Vec::new());
            }
            let cp = critical_point_with(t, budget)?.expect("b and c have opposite signs");
            match cp.discriminant {
                Ordering::Greater => Ok(Vec::new()),
                Ordering::Equal => {
                    let br = bracket_critical_point_with(t, width, budget)?;
                    Ok(vec![(br.clamp(&lo, &hi), RootCertificate::DoubleRoot)])
                }
                Ordering::Less => {
                    let (m_lo, m_hi) = axis.isolate_critical(t, cp.value_sign, &lo)?;
                    let left = axis.bisect(lo, m_lo, t.a.sign())?;
                    let right = axis.bisect(m_hi, hi, cp.value_sign)?;
                    Ok(vec![sign_change(left), sign_change(right)])
                }
            }
        }
    }
}
