//! Acceptance suite. Runs every criterion at its stated scale and tolerance
//! and prints one PASS/FAIL line per criterion.
//!
//! Criteria listed in `EXPECTED_FAILURES` are known to be out of reach; they
//! still run and still print FAIL, but only an unexpected outcome (a failure
//! elsewhere, or one of those passing) makes the process exit nonzero.

mod common;

use std::cmp::Ordering;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use trisep::bench::{run_bench, BenchConfig};
use trisep::bigmath::Dyadic;
use trisep::isolate::{isolate_real_roots, RootCertificate, RootSign};
use trisep::oracle::{complex_roots, ComplexRoots, min_bracket_gap, modulus_bounds, real_root_brackets, SturmChain};
use trisep::succinct::{compare_succinct_with, Certificate, SuccinctInt};
use trisep::trinomial::{
    cauchy_bounds, count_real_roots, derivative_sup_bound, separation_bound_complex, separation_bound_real,
    sign_at_rational, RootCountReport, SparsePoly, Term, Trinomial,
};
use trisep::Budget;

const EXPECTED_FAILURES: &[&str] = &["bench-ratio"];

struct Outcome {
    name: &'static str,
    pass: bool,
    detail: String,
}

fn outcome(name: &'static str, failures: &[String], detail: String) -> Outcome {
    let detail = match failures.first() {
        None => detail,
        Some(f) => format!("{detail}; {} failure(s), first: {f}", failures.len()),
    };
    Outcome { name, pass: failures.is_empty(), detail }
}

fn secs(d: Duration) -> String {
    format!("{:.1}s", d.as_secs_f64())
}

// ---------------------------------------------------------------- corpora

fn counting_corpus() -> Vec<SparsePoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0117);
    (0..10_000).map(|_| trinomial(&mut rng, 500, 1_000_000)).collect()
}

/// Distinct real roots by sign, from a Sturm chain of the dense expansion.
fn sturm_split(chain: &SturmChain) -> (usize, usize, usize) {
    let zero = BigRational::zero();
    let at_zero = chain.variations_at(&zero);
    let zero_root = usize::from(chain.squarefree_sign(&zero) == Sign::NoSign);
    let negative = chain.variations_at_infinity(false) - at_zero - zero_root;
    let positive = at_zero - chain.variations_at_infinity(true);
    (negative, zero_root, positive)
}

// ---------------------------------------------------------------- criteria

fn counting(corpus: &[SparsePoly]) -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut roots = 0usize;
    for f in corpus {
        let r = match count_real_roots(f) {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("{f}: {e}"));
                continue;
            }
        };
        let (n, z, p) = sturm_split(&SturmChain::new(&dense(f)));
        roots += n + z + p;
        if (r.negative as usize, r.zero as usize, r.positive as usize) != (n, z, p) {
            failures.push(format!("{f}: got {:?}, oracle ({n}, {z}, {p})", (r.negative, r.zero, r.positive)));
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(300) {
        failures.push(format!("took {}", secs(elapsed)));
    }
    let detail = format!("{} trinomials, {roots} real roots", corpus.len());
    outcome("counting", &failures, detail)
}

fn huge_exponents() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1E18);
    let limit = Duration::from_secs(1);
    let mut failures = Vec::new();
    let mut slowest = Duration::ZERO;
    let mut timed = |f: &SparsePoly, failures: &mut Vec<String>| -> Option<RootCountReport> {
        let t = Instant::now();
        let r = count_real_roots(f);
        let dt = t.elapsed();
        slowest = slowest.max(dt);
        if dt > limit {
            failures.push(format!("{f}: took {}", secs(dt)));
        }
        match r {
            Ok(r) => Some(r),
            Err(e) => {
                failures.push(format!("{f}: {e}"));
                None
            }
        }
    };

    let random = 300;
    for _ in 0..random {
        let mut e: Vec<u64> = Vec::new();
        while e.len() < 3 {
            let v = rng.gen_range(0..=1_000_000_000_000_000_000u64);
            if !e.contains(&v) {
                e.push(v);
            }
        }
        let terms = e.iter().map(|&x| Term::new(nonzero_big(&mut rng, 256), x)).collect();
        let f = SparsePoly::new(terms).expect("distinct");
        if let Some(r) = timed(&f, &mut failures) {
            let ceiling = descartes(&f) + descartes(&f.flip());
            if r.negative + r.positive > ceiling {
                failures.push(format!("{f}: {} roots exceed the sign-change ceiling {ceiling}", r.total()));
            }
        }
    }

    // (p·x^β − q)² = p²·x^(2β) − 2pq·x^β + q²
    let family = 200;
    for i in 0..family {
        let (p, q) = if i == 0 {
            (BigInt::one(), BigInt::one())
        } else {
            (nonzero_big(&mut rng, 128).abs(), nonzero_big(&mut rng, 128).abs())
        };
        let beta: u64 = rng.gen_range(1..=500_000_000_000_000_000u64);
        let f = SparsePoly::new(vec![
            Term::new(&q * &q, 0u64),
            Term::new(-2 * &p * &q, beta),
            Term::new(&p * &p, 2 * beta),
        ])
        .expect("distinct");
        if let Some(r) = timed(&f, &mut failures) {
            let even = beta % 2 == 0;
            let want = (u32::from(even), 0, 1, true, even);
            let got = (r.negative, r.zero, r.positive, r.positive_double, r.negative_double);
            if got != want {
                failures.push(format!("square family β={beta}: got {got:?}, want {want:?}"));
            }
        }
    }
    let detail = format!("{random} random + {family} square-family instances, slowest {:.3}s", slowest.as_secs_f64());
    outcome("huge-exponents", &failures, detail)
}

fn descartes(f: &SparsePoly) -> u32 {
    f.terms().windows(2).filter(|w| w[0].coeff.sign() != w[1].coeff.sign()).count() as u32
}

// Random power products for the comparison criterion.

fn random_product(rng: &mut ChaCha8Rng, max_bits: u64) -> Vec<(BigInt, BigUint)> {
    let k = rng.gen_range(1..=3);
    (0..k)
        .map(|_| {
            let base_bits = rng.gen_range(2..=64u64);
            let base = nonzero_big(rng, base_bits).abs().max(BigInt::from(2));
            let share = (max_bits / k).max(1);
            let e = rng.gen_range(1..=(share / base.bits()).max(1));
            (base, big(e))
        })
        .collect()
}

fn random_sign(rng: &mut ChaCha8Rng) -> Sign {
    match rng.gen_range(0..40) {
        0 => Sign::NoSign,
        1..=19 => Sign::Minus,
        _ => Sign::Plus,
    }
}

/// A pair whose magnitudes agree to many digits: one base of `x` is nudged
/// by one and another exponent compensates.
fn near_pair(rng: &mut ChaCha8Rng, max_bits: u64) -> (Vec<(BigInt, BigUint)>, Vec<(BigInt, BigUint)>) {
    let (w1, w2) = (rng.gen_range(8..=40), rng.gen_range(2..=12));
    let b1 = nonzero_big(rng, w1).abs().max(BigInt::from(3));
    let b2 = nonzero_big(rng, w2).abs().max(BigInt::from(2));
    let e1 = rng.gen_range(1..=(max_bits / 3 / b1.bits()).max(1));
    let e2 = rng.gen_range(1..=(max_bits / 3 / b2.bits()).max(1));
    let x = vec![(b1.clone(), big(e1)), (b2.clone(), big(e2))];
    let shift = e1 as f64 * ((b1.to_f64().unwrap() + 1.0) / b1.to_f64().unwrap()).ln() / b2.to_f64().unwrap().ln();
    let e2y = (e2 as f64 - shift).round().max(0.0) as u64;
    let y = vec![(b1 + 1, big(e1)), (b2, big(e2y))];
    (x, y)
}

fn si(sign: Sign, factors: Vec<(BigInt, BigUint)>) -> SuccinctInt {
    SuccinctInt::from_parts(sign, factors).expect("valid factors")
}

/// Rewrite a factor list into a different one with the same value.
fn recompose(rng: &mut ChaCha8Rng, factors: &[(BigInt, BigUint)]) -> Vec<(BigInt, BigUint)> {
    let mut out = Vec::new();
    for (b, e) in factors {
        match rng.gen_range(0..3) {
            0 if e > &BigUint::one() => {
                let cut = rng.gen_range(1..e.to_u64().unwrap_or(u64::MAX).min(1 << 40));
                out.push((b.clone(), big(cut)));
                out.push((b.clone(), e - big(cut)));
            }
            1 if (e % 2u8).is_zero() => out.push((b * b, e / 2u8)),
            _ => out.push((b.clone(), e.clone())),
        }
    }
    // merge two factors with a common exponent into one base
    out.sort_by(|x, y| x.1.cmp(&y.1));
    if let Some(i) = (1..out.len()).find(|&i| out[i].1 == out[i - 1].1) {
        let (b, e) = out.remove(i);
        out[i - 1].0 *= b;
        debug_assert_eq!(out[i - 1].1, e);
    }
    out.shuffle(rng);
    out
}

fn succinct_comparison() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5CC1);
    let budget = Budget::default();
    let mut failures = Vec::new();
    let max_bits = 1_000_000u64;
    let mut numeric = 0usize;
    let mut largest = 0u64;
    let pairs = 10_000;
    for i in 0..pairs {
        let cap = (10f64.powf(rng.gen_range(1.0..6.0)) as u64).min(max_bits * 19 / 20);
        let (x, y) = match i % 3 {
            0 => {
                let (a, b) = near_pair(&mut rng, cap);
                let s = random_sign(&mut rng);
                (si(s, a), si(s, b))
            }
            1 => {
                let a = random_product(&mut rng, cap);
                let b = recompose(&mut rng, &a);
                let s = random_sign(&mut rng);
                // perturb one exponent half the time
                let mut b = b;
                if rng.gen_bool(0.5) {
                    b[0].1 += 1u8;
                }
                (si(s, a), si(s, b))
            }
            _ => (
                si(random_sign(&mut rng), random_product(&mut rng, cap)),
                si(random_sign(&mut rng), random_product(&mut rng, cap)),
            ),
        };
        let bits = x.bit_size().max(y.bit_size());
        if bits > big(max_bits) {
            failures.push(format!("generator exceeded the size cap: {bits}"));
            continue;
        }
        largest = largest.max(bits.to_u64().unwrap());
        let want = x.expand(max_bits).unwrap().cmp(&y.expand(max_bits).unwrap());
        match compare_succinct_with(&x, &y, &budget) {
            Ok((got, cert)) => {
                if matches!(cert, Certificate::Numeric { .. }) {
                    numeric += 1;
                }
                if got != want {
                    failures.push(format!("{x} vs {y}: got {got:?}, want {want:?}"));
                }
            }
            Err(e) => failures.push(format!("{x} vs {y}: {e}")),
        }
    }

    let structural = 1_000;
    for _ in 0..structural {
        let a = random_product(&mut rng, 1 << 40);
        let b = recompose(&mut rng, &a);
        let s = random_sign(&mut rng);
        let (x, y) = (si(s, a), si(s, b));
        match compare_succinct_with(&x, &y, &budget) {
            Ok((Ordering::Equal, Certificate::Structural)) => {}
            other => failures.push(format!("{x} vs {y}: {other:?}")),
        }
    }
    let detail = format!(
        "{pairs} pairs up to {largest} bits ({numeric} numeric), {structural} recomposed pairs"
    );
    outcome("succinct-comparison", &failures, detail)
}

fn real_separation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5E9A);
    let width = pow2_rat(-100);
    let mut failures = Vec::new();
    let mut measured = 0usize;
    let mut tightest = f64::NEG_INFINITY;
    for _ in 0..1_000 {
        let f = trinomial(&mut rng, 200, 1_000_000);
        let bound = separation_bound_real(&f).unwrap().log_bound.to_f64().unwrap();
        let brackets = real_root_brackets(&dense(&f), &width).unwrap();
        let Some(gap) = min_bracket_gap(&brackets) else { continue };
        measured += 1;
        if !gap.is_positive() {
            failures.push(format!("{f}: brackets overlap"));
            continue;
        }
        let ln_gap = ln_floor(&gap);
        tightest = tightest.max(bound - ln_gap);
        if ln_gap < bound {
            failures.push(format!("{f}: ln gap {ln_gap} < bound {bound}"));
        }
    }
    let detail = format!("{measured} of 1000 with two or more real roots, max(bound − ln gap) = {tightest:.3e}");
    outcome("real-separation", &failures, detail)
}

fn ln_dyadic_floor(d: &Dyadic) -> f64 {
    ln_floor(&d.to_rational())
}

fn complex_corpus() -> Vec<SparsePoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC011);
    (0..1_000).map(|_| trinomial(&mut rng, 100, 1_000_000)).collect()
}

fn complex_separation(corpus: &[SparsePoly], oracle: &[trisep::Result<ComplexRoots>]) -> Outcome {
    let mut failures = Vec::new();
    let mut tightest = f64::NEG_INFINITY;
    for (f, roots) in corpus.iter().zip(oracle) {
        let bound = separation_bound_complex(f).unwrap().log_bound.to_f64().unwrap();
        let roots = match roots {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("{f}: oracle {e}"));
                continue;
            }
        };
        let zero_cluster = |c: &Vec<usize>| c.iter().all(|&i| roots.disks[i].re.is_zero() && roots.disks[i].im.is_zero());
        if roots.clusters.iter().any(|c| c.len() > 1 && !zero_cluster(c)) {
            failures.push(format!("{f}: oracle left overlapping disks"));
            continue;
        }
        let Some((lo, _)) = roots.min_separation() else { continue };
        if lo.is_zero() {
            failures.push(format!("{f}: zero separation lower bound"));
            continue;
        }
        let ln_gap = ln_dyadic_floor(&lo);
        tightest = tightest.max(bound - ln_gap);
        if ln_gap < bound {
            failures.push(format!("{f}: ln gap {ln_gap} < bound {bound}"));
        }
    }
    let detail = format!("{} trinomials, max(bound − ln gap) = {tightest:.3e}", corpus.len());
    outcome("complex-separation", &failures, detail)
}

// Fixed-point reference arithmetic for the binomial criterion, independent of
// the library's interval kernels.

const FRAC: usize = 320;

fn fx_mul(a: &BigInt, b: &BigInt) -> BigInt {
    (a * b) >> FRAC
}

fn fx_div(a: &BigInt, b: &BigInt) -> BigInt {
    (a << FRAC) / b
}

fn fx_to_rat(a: &BigInt) -> BigRational {
    BigRational::new(a.clone(), BigInt::one() << FRAC)
}

/// π to 80 digits.
fn fx_pi() -> BigInt {
    let digits = "31415926535897932384626433832795028841971693993751058209749445923078164062862089";
    let n: BigInt = digits.parse().unwrap();
    (n << FRAC) / BigInt::from(10u8).pow(79)
}

fn fx_sin(x: &BigInt) -> BigInt {
    let x2 = fx_mul(x, x);
    let mut term = x.clone();
    let mut sum = x.clone();
    let mut k = 1u32;
    while term.bits() > 1 {
        term = -fx_mul(&term, &x2) / BigInt::from((2 * k) * (2 * k + 1));
        sum += &term;
        k += 1;
    }
    sum
}

/// `2·atanh(t)` for small `|t|`.
fn fx_two_atanh(t: &BigInt) -> BigInt {
    let t2 = fx_mul(t, t);
    let mut pow = t.clone();
    let mut sum = BigInt::zero();
    let mut k = 1u32;
    while pow.bits() > 1 {
        sum += &pow / BigInt::from(k);
        pow = fx_mul(&pow, &t2);
        k += 2;
    }
    sum * 2
}

fn fx_ln(x: &BigInt) -> BigInt {
    let one = BigInt::one() << FRAC;
    let ln2 = fx_two_atanh(&fx_div(&one, &(BigInt::from(3) << FRAC)));
    let mut y = x.clone();
    let mut k = 0i64;
    while y > &one * 3 / 2 {
        y >>= 1;
        k += 1;
    }
    while y < &one * 3 / 4 {
        y <<= 1;
        k -= 1;
    }
    let t = fx_div(&(&y - &one), &(&y + &one));
    fx_two_atanh(&t) + ln2 * k
}

fn binomial_tightness() -> Outcome {
    let mut failures = Vec::new();
    let tol_dist = BigRational::new(1.into(), BigInt::from(10u8).pow(20));
    let tol_log = BigRational::new(1.into(), BigInt::from(10u8).pow(25));
    let mut worst_log = BigRational::zero();
    for n in 3u64..=64 {
        let f = SparsePoly::new(vec![Term::new(-1, 0u64), Term::new(1, n)]).unwrap();
        let chord_fx = fx_sin(&(fx_pi() / BigInt::from(n))) * 2;
        let chord = fx_to_rat(&chord_fx);
        let ln_chord = fx_to_rat(&fx_ln(&chord_fx));

        let roots = complex_roots(&dense(&f)).unwrap();
        match roots.min_separation() {
            Some((lo, hi)) => {
                let (lo, hi) = (lo.to_rational(), hi.to_rational());
                if &hi - &lo > tol_dist || chord < &lo - &tol_dist || chord > &hi + &tol_dist {
                    failures.push(format!("n={n}: oracle [{lo}, {hi}] vs chord {}", chord.to_f64().unwrap()));
                }
            }
            None => failures.push(format!("n={n}: no separation")),
        }

        let b = separation_bound_complex(&f).unwrap().log_bound;
        let err = (&b - &ln_chord).abs();
        if b > &ln_chord + &tol_log.pow(2) || err > tol_log {
            failures.push(format!("n={n}: bound {} vs ln chord {}", b.to_f64().unwrap(), ln_chord.to_f64().unwrap()));
        }
        worst_log = worst_log.max(err);
    }
    let detail = format!("n = 3..=64, max |bound − ln chord| = {:.3e}", worst_log.to_f64().unwrap());
    outcome("binomial-tightness", &failures, detail)
}

fn cauchy_annulus(corpus: &[SparsePoly], complex: &[SparsePoly], oracle: &[trisep::Result<ComplexRoots>]) -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for f in corpus {
        let (lower, upper) = cauchy_bounds(f);
        let chain = SturmChain::new(&dense(f));
        let zero = BigRational::zero();
        let root_at = |x: &BigRational| usize::from(chain.squarefree_sign(x) == Sign::NoSign);
        let inner = chain.count_in(&zero, &lower) - root_at(&lower) + chain.count_in(&-&lower, &zero)
            - root_at(&zero);
        let outer = chain.variations_at(&upper) - chain.variations_at_infinity(true)
            + chain.variations_at_infinity(false)
            - chain.variations_at(&-&upper)
            - root_at(&-&upper);
        checked += chain.count_distinct();
        if inner + outer > 0 {
            failures.push(format!("{f}: {inner} real roots inside, {outer} outside"));
        }
    }
    for (f, roots) in complex.iter().zip(oracle) {
        let (lower, upper) = cauchy_bounds(f);
        let Ok(roots) = roots else {
            failures.push(format!("{f}: no oracle roots"));
            continue;
        };
        for d in &roots.disks {
            if d.re.is_zero() && d.im.is_zero() && d.radius.is_zero() {
                continue;
            }
            checked += 1;
            let (lo, hi) = modulus_bounds(d);
            if hi < lower || lo > upper {
                failures.push(format!("{f}: complex root outside the annulus"));
            }
        }
    }
    let detail = format!("{checked} roots ({} real corpus, {} complex corpus)", corpus.len(), complex.len());
    outcome("cauchy-annulus", &failures, detail)
}

fn derivative_sup() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1E25);
    let mut failures = Vec::new();
    let grid = 10_000;
    let mut closest = 0f64;
    for _ in 0..1_000 {
        let beta: u64 = rng.gen_range(1..=250);
        let gamma: u64 = rng.gen_range(2 * beta..=500);
        let b_max = if rng.gen_bool(0.5) { 3 } else { 1_000_000 };
        let b = nonzero(&mut rng, b_max);
        let c = -b.signum() * nonzero(&mut rng, 1_000_000).abs();
        let t = Trinomial::new(nonzero(&mut rng, 1_000_000), b.clone(), c.clone(), big(0), big(beta), big(gamma))
            .unwrap();
        let bound = derivative_sup_bound(&t).unwrap().to_f64().unwrap();
        let (bf, cf) = (b.to_f64().unwrap(), c.to_f64().unwrap());
        let (bb, gg) = (beta as f64, gamma as f64);
        let m = ((bf * bb).abs() / (cf * gg).abs()).powf(1.0 / (gg - bb));
        let mut sup = 0f64;
        for k in 0..grid {
            let x = m * k as f64 / (grid - 1) as f64;
            let d = bf * bb * x.powf(bb - 1.0) + cf * gg * x.powf(gg - 1.0);
            sup = sup.max(d.abs());
        }
        closest = closest.max(sup / bound);
        if sup > bound * (1.0 + 1e-12) {
            failures.push(format!("{b}·x^{beta} {c}·x^{gamma}: sup {sup} > {bound}"));
        }
    }
    let detail = format!("1000 instances × {grid} grid points, max sup/bound = {closest:.3e}");
    outcome("derivative-sup", &failures, detail)
}

fn isolation(corpus: &[SparsePoly]) -> Outcome {
    let width = Dyadic::pow2(-30);
    let mut failures = Vec::new();
    let mut intervals = 0usize;
    for f in corpus {
        let report = match isolate_real_roots(f, &width) {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("{f}: {e}"));
                continue;
            }
        };
        let chain = SturmChain::new(&dense(f));
        let iv = &report.intervals;
        intervals += iv.len();
        if iv.len() != chain.count_distinct() {
            failures.push(format!("{f}: {} intervals, oracle {}", iv.len(), chain.count_distinct()));
        }
        for w in iv.windows(2) {
            if w[0].interval.hi() >= w[1].interval.lo() {
                failures.push(format!("{f}: intervals not disjoint"));
            }
        }
        for r in iv {
            let (lo, hi) = (r.interval.lo().to_rational(), r.interval.hi().to_rational());
            if r.interval.width() > width {
                failures.push(format!("{f}: width {} too large", r.interval.width()));
            }
            let inside = chain.count_in(&lo, &hi) + usize::from(chain.squarefree_sign(&lo) == Sign::NoSign);
            if inside != 1 {
                failures.push(format!("{f}: [{lo}, {hi}] holds {inside} roots"));
            }
            let (s_lo, s_hi) = (sign_at_rational(f, &lo).unwrap(), sign_at_rational(f, &hi).unwrap());
            let ok = match r.certificate {
                RootCertificate::SignChange => s_lo != Sign::NoSign && s_hi == -s_lo,
                RootCertificate::ExactRationalRoot => lo == hi && s_lo == Sign::NoSign,
                RootCertificate::DoubleRoot => true,
            };
            let sign_ok = match r.sign {
                RootSign::Negative => hi.is_negative(),
                RootSign::Zero => lo.is_zero() && hi.is_zero(),
                RootSign::Positive => lo.is_positive(),
            };
            if !ok || !sign_ok {
                failures.push(format!("{f}: bad certificate {:?} on [{lo}, {hi}]", r.certificate));
            }
        }
    }
    let detail = format!("{} trinomials, {intervals} intervals at width 2^-30", corpus.len());
    outcome("isolation", &failures, detail)
}

fn bench() -> Vec<Outcome> {
    let report = run_bench(&BenchConfig::default()).unwrap();
    print!("{}", report.table());
    let mut shape = Vec::new();
    for w in report.summary.windows(2) {
        let (g0, g1) = (w[0].gamma as f64, w[1].gamma as f64);
        let dense = (w[1].dense_abs / (g1 * g1.ln())) / (w[0].dense_abs / (g0 * g0.ln()));
        let sparse = (w[1].sparse_real_abs / g1.ln().powi(3)) / (w[0].sparse_real_abs / g0.ln().powi(3));
        if !(0.5..=2.0).contains(&dense) {
            shape.push(format!("dense/(γ ln γ) drifts by {dense:.3} from γ={g0} to γ={g1}"));
        }
        if !(0.5..=2.0).contains(&sparse) {
            shape.push(format!("sparse/(ln γ)³ drifts by {sparse:.3} from γ={g0} to γ={g1}"));
        }
    }
    for row in &report.rows {
        if let Some(m) = row.measured_real {
            if m < row.sparse_real.to_f64().unwrap() {
                shape.push(format!("{}: measured gap below the sparse bound", row.poly));
            }
        }
    }
    let at_million = report.summary.iter().find(|s| s.gamma == 1_000_000).expect("γ = 10^6 row");
    let ratio = if at_million.min_ratio > 100.0 {
        Vec::new()
    } else {
        vec![format!("|dense| / |sparse| = {:.3e} ≤ 1e2", at_million.min_ratio)]
    };
    vec![
        outcome("bench-shape", &shape, format!("{} rows", report.rows.len())),
        outcome("bench-ratio", &ratio, "γ = 10^6".into()),
    ]
}

fn main() -> ExitCode {
    let total = Instant::now();
    let corpus = counting_corpus();
    let complex = complex_corpus();
    let mut oracle = None;
    let mut results = Vec::new();
    let mut run = |criterion: &mut dyn FnMut() -> Vec<Outcome>| {
        let start = Instant::now();
        let outcomes = criterion();
        let elapsed = secs(start.elapsed());
        for o in outcomes {
            println!("{} {}: {} [{elapsed}]", if o.pass { "PASS" } else { "FAIL" }, o.name, o.detail);
            results.push(o);
        }
    };
    run(&mut || vec![counting(&corpus)]);
    run(&mut || vec![huge_exponents()]);
    run(&mut || vec![succinct_comparison()]);
    run(&mut || vec![real_separation()]);
    run(&mut || {
        let roots: Vec<_> = complex.iter().map(|f| complex_roots(&dense(f))).collect();
        vec![complex_separation(&complex, oracle.insert(roots))]
    });
    run(&mut || vec![binomial_tightness()]);
    run(&mut || vec![cauchy_annulus(&corpus, &complex, oracle.as_deref().unwrap_or_default())]);
    run(&mut || vec![derivative_sup()]);
    run(&mut || vec![isolation(&corpus)]);
    run(&mut bench);

    let mut unexpected = 0;
    for o in &results {
        let expected_fail = EXPECTED_FAILURES.contains(&o.name);
        if o.pass == expected_fail {
            unexpected += 1;
            let what = if o.pass { "passed but is listed as unattainable" } else { "failed" };
            println!("unexpected: {} {what}", o.name);
        }
    }
    println!(
        "acceptance: {} passed, {} failed ({} expected), {}",
        results.iter().filter(|o| o.pass).count(),
        results.iter().filter(|o| !o.pass).count(),
        EXPECTED_FAILURES.len(),
        secs(total.elapsed())
    );
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
