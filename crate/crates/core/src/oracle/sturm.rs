use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::dense::{DensePoly, DEFAULT_DEGREE_CAP};
use crate::{Error, Result};

/// Nonzero terms of a polynomial scaled by a positive integer so that every
/// coefficient is an integer. Signs of values are unchanged.
#[derive(Clone, Debug)]
struct IntPoly {
    terms: Vec<(u32, BigInt)>,
    degree: u32,
}

impl IntPoly {
    fn from_dense(c: &[BigInt]) -> Self {
        let terms: Vec<(u32, BigInt)> = c
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i as u32, v.clone()))
            .collect();
        let degree = terms.last().map_or(0, |t| t.0);
        IntPoly { terms, degree }
    }

    /// Sign of `p(n/d)` for `d > 0`.
    fn sign_at(&self, n: &BigInt, d: &BigInt) -> Sign {
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            acc += c * n.pow(*e) * d.pow(self.degree - e);
        }
        acc.sign()
    }

    fn sign_at_infinity(&self, positive: bool) -> Sign {
        let (e, c) = self.terms.last().expect("nonzero");
        let s = c.sign();
        if positive || e % 2 == 0 {
            s
        } else {
            -s
        }
    }
}

/// Coefficients times the positive lcm of their denominators.
fn integer_coeffs(p: &DensePoly) -> Vec<BigInt> {
    let lcm = p.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    p.coeffs().iter().map(|c| c.numer() * (&lcm / c.denom())).collect()
}

fn trim(c: &mut Vec<BigInt>) {
    while c.len() > 1 && c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
}

/// Divide by the positive gcd of the coefficients.
fn primitive(mut c: Vec<BigInt>) -> Vec<BigInt> {
    let g = c.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for v in c.iter_mut().filter(|v| !v.is_zero()) {
            *v /= &g;
        }
    }
    c
}

/// A positive multiple of the remainder of `a` by `b`.
fn pseudo_rem(mut a: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
    let n = b.len() - 1;
    if n == 0 {
        return vec![BigInt::zero()];
    }
    let lead = &b[n];
    let scale = lead.abs();
    let flip = lead.is_negative();
    let lower: Vec<(usize, &BigInt)> = b[..n].iter().enumerate().filter(|(_, v)| !v.is_zero()).collect();
    while a.len() > n && a.len() > 1 {
        let k = a.len() - 1;
        let top = a.pop().expect("nonempty");
        if !top.is_zero() {
            if !scale.is_one() {
                for v in a.iter_mut().filter(|v| !v.is_zero()) {
                    *v *= &scale;
                }
            }
            let top = if flip { -top } else { top };
            for &(i, c) in &lower {
                a[k - n + i] -= &top * c;
            }
        }
        trim(&mut a);
        if a.len() == 1 && a[0].is_zero() {
            break;
        }
    }
    a
}

/// Sturm sequence divided through by the gcd of `p` and `p′`.
///
/// `V(a) − V(b)` counts the distinct real roots in `(a, b]` for any `a < b`.
#[derive(Clone, Debug)]
pub struct SturmChain {
    seq: Vec<IntPoly>,
    squarefree: IntPoly,
}

impl SturmChain {
    pub fn new(p: &DensePoly) -> Self {
        let mut chain = vec![primitive(integer_coeffs(p))];
        if let Some(d) = p.derivative() {
            chain.push(primitive(integer_coeffs(&d)));
            loop {
                let n = chain.len();
                let r = pseudo_rem(chain[n - 2].clone(), &chain[n - 1]);
                if r.iter().all(Zero::is_zero) {
                    break;
                }
                chain.push(primitive(r.into_iter().map(|v| -v).collect()));
            }
        }
        if chain.last().expect("nonempty").len() > 1 {
            let dense = |c: &Vec<BigInt>| {
                DensePoly::new(c.iter().cloned().map(BigRational::from_integer).collect()).expect("nonzero")
            };
            let g = dense(chain.last().expect("nonempty"));
            chain = chain.iter().map(|q| integer_coeffs(&exact_quotient(&dense(q), &g))).collect();
        }
        let seq: Vec<IntPoly> = chain.iter().map(|c| IntPoly::from_dense(c)).collect();
        SturmChain {
            squarefree: seq[0].clone(),
            seq,
        }
    }

    fn variations(signs: impl Iterator<Item = Sign>) -> usize {
        let mut last = Sign::NoSign;
        let mut v = 0;
        for s in signs.filter(|&s| s != Sign::NoSign) {
            if last != Sign::NoSign && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::variations(self.seq.iter().map(|q| q.sign_at(x.numer(), x.denom())))
    }

    pub fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::variations(self.seq.iter().map(|q| q.sign_at_infinity(positive)))
    }

    pub fn count_distinct(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }

    /// Distinct real roots in `(a, b]`.
    pub fn count_in(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }

    /// Sign of the squarefree part at `x`.
    pub fn squarefree_sign(&self, x: &BigRational) -> Sign {
        self.squarefree.sign_at(x.numer(), x.denom())
    }
}

fn exact_quotient(p: &DensePoly, g: &DensePoly) -> DensePoly {
    let (q, r) = p.div_rem(g);
    debug_assert!(r.is_none());
    DensePoly::new(q).expect("nonzero quotient")
}

fn check_cap(p: &DensePoly, cap: usize) -> Result<()> {
    if p.degree() > cap {
        return Err(Error::budget(format!("degree {} exceeds the oracle cap {cap}", p.degree())));
    }
    Ok(())
}

/// Number of distinct real roots.
pub fn sturm_distinct_real_roots(p: &DensePoly) -> Result<usize> {
    sturm_distinct_real_roots_with(p, DEFAULT_DEGREE_CAP)
}

pub fn sturm_distinct_real_roots_with(p: &DensePoly, cap: usize) -> Result<usize> {
    check_cap(p, cap)?;
    Ok(SturmChain::new(p).count_distinct())
}

/// A closed interval `[lo, hi]` holding exactly one distinct real root.
/// `lo == hi` when the root was hit exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootBracket {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootBracket {
    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }
}

/// Sorted brackets of width at most `width`, one per distinct real root.
pub fn real_root_brackets(p: &DensePoly, width: &BigRational) -> Result<Vec<RootBracket>> {
    real_root_brackets_with(p, width, DEFAULT_DEGREE_CAP)
}

pub fn real_root_brackets_with(p: &DensePoly, width: &BigRational, cap: usize) -> Result<Vec<RootBracket>> {
    check_cap(p, cap)?;
    if !width.is_positive() {
        return Err(Error::domain("bracket width must be positive"));
    }
    let chain = SturmChain::new(p);
    let total = chain.count_distinct();
    if total == 0 {
        return Ok(Vec::new());
    }
    let mut r = BigRational::one();
    while chain.count_in(&-&r, &r) < total {
        r *= BigRational::from_integer(2.into());
    }
    let mut pending = vec![(-r.clone(), r, total)];
    let mut isolated = Vec::new();
    while let Some((a, b, n)) = pending.pop() {
        match n {
            0 => {}
            1 => isolated.push((a, b)),
            _ => {
                let m = (&a + &b) / BigRational::from_integer(2.into());
                let left = chain.count_in(&a, &m);
                pending.push((m.clone(), b, n - left));
                pending.push((a, m, left));
            }
        }
    }
    let mut out: Vec<RootBracket> = isolated
        .into_iter()
        .map(|(a, b)| shrink(&chain, a, b, width))
        .collect();
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    Ok(out)
}

/// Narrow `(a, b]`, which holds exactly one distinct root, to `width`.
fn shrink(chain: &SturmChain, mut a: BigRational, mut b: BigRational, width: &BigRational) -> RootBracket {
    let two = BigRational::from_integer(2.into());
    if chain.squarefree_sign(&b) == Sign::NoSign {
        return RootBracket { lo: b.clone(), hi: b };
    }
    let s_b = chain.squarefree_sign(&b);
    while &(&b - &a) > width {
        let m = (&a + &b) / &two;
        let s_m = chain.squarefree_sign(&m);
        if s_m == Sign::NoSign {
            return RootBracket { lo: m.clone(), hi: m };
        }
        if chain.squarefree_sign(&a) == Sign::NoSign {
            // `a` is a neighbouring root; fall back to counting.
            if chain.count_in(&a, &m) == 1 {
                b = m;
            } else {
                a = m;
            }
        } else if s_m == s_b {
            b = m;
        } else {
            a = m;
        }
    }
    RootBracket { lo: a, hi: b }
}

/// Lower bound on the smallest gap between consecutive brackets.
pub fn min_bracket_gap(brackets: &[RootBracket]) -> Option<BigRational> {
    brackets.windows(2).map(|w| &w[1].lo - &w[0].hi).min()
}
