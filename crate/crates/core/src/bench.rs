//! Seeded comparison of the sparse separation bounds with the classical
//! dense bound on trinomials of growing degree.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::oracle::{min_bracket_gap, real_root_brackets, DensePoly, DEFAULT_DEGREE_CAP};
use crate::trinomial::{separation_bound_complex, separation_bound_real, SparsePoly, Term};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchConfig {
    pub seed: u64,
    pub gammas: Vec<u64>,
    pub per_gamma: usize,
    /// Coefficients are drawn from `[−max_coeff, max_coeff] \ {0}`.
    pub max_coeff: i64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            seed: 1,
            gammas: vec![1_000, 1_000_000, 1_000_000_000],
            per_gamma: 4,
            max_coeff: 9,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub gamma: u64,
    pub poly: String,
    #[serde(with = "crate::serde_str")]
    pub sparse_real: BigRational,
    #[serde(with = "crate::serde_str")]
    pub sparse_complex: BigRational,
    #[serde(with = "crate::serde_str")]
    pub dense: BigRational,
    /// `|dense| / |sparse_real|`.
    pub ratio: f64,
    /// `ln` of the measured smallest gap between real roots, when the
    /// degree is within the oracle cap and there are two real roots.
    pub measured_real: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchSummary {
    pub gamma: u64,
    /// Largest `|sparse_real|` over the instances.
    pub sparse_real_abs: f64,
    /// Smallest `|dense|` over the instances.
    pub dense_abs: f64,
    /// Smallest per-instance ratio.
    pub min_ratio: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub config: BenchConfig,
    pub rows: Vec<BenchRow>,
    pub summary: Vec<BenchSummary>,
}

fn nonzero(rng: &mut ChaCha8Rng, max: i64) -> i64 {
    let v = rng.gen_range(1..=max);
    if rng.gen_bool(0.5) {
        -v
    } else {
        v
    }
}

/// `a + b·x^β + c·x^γ` with `0 < β < γ` and random nonzero coefficients.
pub fn random_trinomial(rng: &mut ChaCha8Rng, gamma: u64, max_coeff: i64) -> SparsePoly {
    let beta = rng.gen_range(1..gamma);
    let terms = vec![
        Term::new(nonzero(rng, max_coeff), 0u64),
        Term::new(nonzero(rng, max_coeff), beta),
        Term::new(nonzero(rng, max_coeff), gamma),
    ];
    SparsePoly::new(terms).expect("distinct exponents")
}

fn measured_real(f: &SparsePoly) -> Result<Option<f64>> {
    if f.degree() > &BigUint::from(DEFAULT_DEGREE_CAP) {
        return Ok(None);
    }
    let p = DensePoly::from_sparse(f, DEFAULT_DEGREE_CAP)?;
    let width = BigRational::new(1.into(), BigInt::from(1u64 << 60));
    let brackets = real_root_brackets(&p, &width)?;
    Ok(min_bracket_gap(&brackets).and_then(|g| g.to_f64()).map(f64::ln))
}

pub fn run_bench(cfg: &BenchConfig) -> Result<BenchReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut rows = Vec::new();
    let mut summary = Vec::new();
    for &gamma in &cfg.gammas {
        let mut group = Vec::new();
        for _ in 0..cfg.per_gamma {
            let f = random_trinomial(&mut rng, gamma.max(2), cfg.max_coeff);
            let real = separation_bound_real(&f)?.log_bound;
            let complex = separation_bound_complex(&f)?.log_bound;
            let dense = crate::oracle::mahler_log_bound_for(f.degree(), &f.max_coeff())?;
            let ratio = (dense.abs() / real.abs()).to_f64().unwrap_or(f64::NAN);
            group.push(BenchRow {
                gamma,
                poly: f.to_string(),
                sparse_real: real,
                sparse_complex: complex,
                dense,
                ratio,
                measured_real: measured_real(&f)?,
            });
        }
        let abs = |q: &BigRational| q.abs().to_f64().unwrap_or(f64::INFINITY);
        summary.push(BenchSummary {
            gamma,
            sparse_real_abs: group.iter().map(|r| abs(&r.sparse_real)).fold(0.0, f64::max),
            dense_abs: group.iter().map(|r| abs(&r.dense)).fold(f64::INFINITY, f64::min),
            min_ratio: group.iter().map(|r| r.ratio).fold(f64::INFINITY, f64::min),
        });
        rows.extend(group);
    }
    Ok(BenchReport {
        config: cfg.clone(),
        rows,
        summary,
    })
}

impl BenchReport {
    /// Plain-text table, one line per γ.
    pub fn table(&self) -> String {
        let mut out = format!(
            "{:>12}  {:>14}  {:>14}  {:>12}\n",
            "gamma", "|sparse ln|", "|dense ln|", "min ratio"
        );
        for s in &self.summary {
            out += &format!(
                "{:>12}  {:>14.6e}  {:>14.6e}  {:>12.6e}\n",
                s.gamma, s.sparse_real_abs, s.dense_abs, s.min_ratio
            );
        }
        out
    }
}
