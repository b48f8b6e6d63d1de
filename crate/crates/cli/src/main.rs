use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::Sign;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Value};

use trisep::bench::{run_bench, BenchConfig};
use trisep::bigmath::{parse_rational, Dyadic};
use trisep::isolate::isolate_real_roots_with;
use trisep::succinct::{compare_succinct_with, SuccinctInt};
use trisep::trinomial::{
    count_real_roots_with, separation_bound_binomial, separation_bound_complex, separation_bound_real,
    sign_at_rational_with, SparsePoly, Stripped,
};
use trisep::{Budget, Error};

#[derive(Parser, Debug)]
#[command(name = "trisep", version, about = "Exact root counting, isolation and separation bounds for sparse trinomials")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Cap on interval precision, in bits.
    #[arg(long, global = true)]
    budget_bits: Option<u64>,
    /// Report wall-clock time; off by default so output is reproducible.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
enum Kind {
    Real,
    Complex,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count distinct real roots by sign.
    Count {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Isolate every real root in an interval of at most the given width.
    Isolate {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        /// Dyadic width: `2^-30`, `3*2^-40` or `1/1024`.
        #[arg(long, default_value = "2^-30")]
        width: String,
    },
    /// Lower bound on the distance between distinct roots, as a natural log.
    Sep {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long, value_enum, default_value_t = Kind::Real)]
        kind: Kind,
    },
    /// Compare two signed power products `[-]b^e*b^e*...`.
    Compare {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Exact sign of the polynomial at a rational point.
    EvalSign {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(allow_hyphen_values = true)]
        point: String,
    },
    /// Sparse bounds against the dense bound on seeded random trinomials.
    Bench {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Comma-separated degrees.
        #[arg(long, value_delimiter = ',', default_values_t = [1_000u64, 1_000_000, 1_000_000_000])]
        gammas: Vec<u64>,
        #[arg(long, default_value_t = 4)]
        per_gamma: usize,
    },
}

#[derive(Serialize)]
struct Envelope {
    command: &'static str,
    input: Value,
    options: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<ErrorBody>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<f64>,
}

#[derive(Serialize)]
struct ErrorBody {
    kind: &'static str,
    message: String,
}

/// A computed result with its plain-text rendering.
struct Done {
    value: Value,
    text: String,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => 2,
        Error::Budget { .. } => 3,
        _ => 4,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse(_) => "parse",
        Error::Budget { .. } => "budget",
        _ => "domain",
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn approx(q: &BigRational) -> String {
    format!("{:.6e}", q.to_f64().unwrap_or(f64::NAN))
}

fn sign_number(s: Sign) -> i8 {
    match s {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

fn run(command: &Command, budget: &Budget) -> trisep::Result<Done> {
    match command {
        Command::Count { poly } => {
            let f = SparsePoly::parse_any(poly)?;
            let r = count_real_roots_with(&f, budget)?;
            let dbl = |d: bool| if d { " (double)" } else { "" };
            let text = format!(
                "negative: {}{}\nzero: {} (multiplicity {})\npositive: {}{}",
                r.negative,
                dbl(r.negative_double),
                r.zero,
                r.zero_multiplicity,
                r.positive,
                dbl(r.positive_double)
            );
            Ok(Done { value: to_value(&r), text })
        }
        Command::Isolate { poly, width } => {
            let f = SparsePoly::parse_any(poly)?;
            let w: Dyadic = width.parse()?;
            let r = isolate_real_roots_with(&f, &w, budget)?;
            let mut text = format!("{} root(s)", r.intervals.len());
            for iv in &r.intervals {
                let (lo, hi) = (iv.interval.lo(), iv.interval.hi());
                text += &format!(
                    "\n[{}, {}]  {:?}  ~{:.12e}",
                    lo.to_rational(),
                    hi.to_rational(),
                    iv.certificate,
                    Dyadic::midpoint(lo, hi).to_f64()
                );
            }
            Ok(Done { value: to_value(&r), text })
        }
        Command::Sep { poly, kind } => {
            let f = SparsePoly::parse_any(poly)?;
            let b = match (kind, &f.normalize().stripped) {
                (Kind::Real, _) => separation_bound_real(&f)?,
                (Kind::Complex, Stripped::Binomial(bin)) => separation_bound_binomial(bin)?,
                (Kind::Complex, _) => separation_bound_complex(&f)?,
            };
            let mut value = to_value(&b);
            value["log_bound_approx"] = json!(approx(&b.log_bound));
            let text = format!("ln bound: {} (~{})", b.log_bound, approx(&b.log_bound));
            Ok(Done { value, text })
        }
        Command::Compare { x, y } => {
            let (x, y): (SuccinctInt, SuccinctInt) = (x.parse()?, y.parse()?);
            let (o, cert) = compare_succinct_with(&x, &y, budget)?;
            let ord = format!("{o:?}");
            Ok(Done { value: json!({ "ordering": ord, "certificate": cert }), text: ord })
        }
        Command::EvalSign { poly, point } => {
            let f = SparsePoly::parse_any(poly)?;
            let x = parse_rational(point)?;
            let (s, route) = sign_at_rational_with(&f, &x, budget)?;
            let n = sign_number(s);
            Ok(Done { value: json!({ "sign": n, "route": route }), text: n.to_string() })
        }
        Command::Bench { seed, gammas, per_gamma } => {
            let cfg = BenchConfig { seed: *seed, gammas: gammas.clone(), per_gamma: *per_gamma, ..Default::default() };
            let r = run_bench(&cfg)?;
            Ok(Done { value: to_value(&r), text: r.table().trim_end().to_string() })
        }
    }
}

fn describe(command: &Command) -> (&'static str, Value, Value) {
    match command {
        Command::Count { poly } => ("count", json!({ "poly": poly }), json!({})),
        Command::Isolate { poly, width } => ("isolate", json!({ "poly": poly }), json!({ "width": width })),
        Command::Sep { poly, kind } => ("sep", json!({ "poly": poly }), json!({ "kind": kind })),
        Command::Compare { x, y } => ("compare", json!({ "x": x, "y": y }), json!({})),
        Command::EvalSign { poly, point } => ("eval-sign", json!({ "poly": poly, "point": point }), json!({})),
        Command::Bench { seed, gammas, per_gamma } => (
            "bench",
            json!({}),
            json!({ "seed": seed, "gammas": gammas, "per_gamma": per_gamma }),
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = match cli.budget_bits {
        Some(bits) => Budget::default().with_precision_cap(bits),
        None => Budget::default(),
    };
    let start = Instant::now();
    let outcome = run(&cli.command, &budget);
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    let (command, input, mut options) = describe(&cli.command);
    if let Some(bits) = cli.budget_bits {
        options["budget_bits"] = json!(bits);
    }
    let code = outcome.as_ref().err().map_or(0, exit_code);
    let timing_ms = cli.timing.then_some(elapsed);
    match cli.format {
        Format::Structured => {
            let (result, error) = match outcome {
                Ok(d) => (Some(d.value), None),
                Err(e) => (None, Some(ErrorBody { kind: error_kind(&e), message: e.to_string() })),
            };
            let env = Envelope { command, input, options, result, error, timing_ms };
            println!("{}", serde_json::to_string_pretty(&env).expect("serializable"));
        }
        Format::Text => {
            match outcome {
                Ok(d) => println!("{}", d.text),
                Err(e) => eprintln!("error ({}): {e}", error_kind(&e)),
            }
            if let Some(ms) = timing_ms {
                eprintln!("time: {ms:.3} ms");
            }
        }
    }
    ExitCode::from(code)
}
