//! Exact real-root counting, real-root isolation and certified root-separation
//! bounds for integer trinomials `a·x^α + b·x^β + c·x^γ` whose exponents may be
//! far too large to expand.
//!
//! Every sign decision is exact. Numeric work happens on dyadic intervals with
//! outward rounding, and equality of huge power products is decided
//! structurally over a coprime basis. Nonzero signs of linear forms in
//! logarithms are certified by the Baker–Wüstholz lower bound.
//!
//! ```
//! use trisep::trinomial::{count_real_roots, SparsePoly};
//!
//! let f: SparsePoly = "1,0;-2,500000000000;1,1000000000000".parse().unwrap();
//! let report = count_real_roots(&f).unwrap();
//! assert_eq!((report.negative, report.zero, report.positive), (1, 0, 1));
//! assert!(report.positive_double);
//! ```

pub mod bench;
pub mod bigmath;
mod error;
pub mod isolate;
pub mod oracle;
pub mod serde_str;
pub mod succinct;
pub mod trinomial;

pub use bigmath::Budget;
pub use error::{Error, Result};
pub use num_bigint::Sign;
