//! Brute-force reference answers for dense expansions of small inputs:
//! Sturm-sequence root counting and bracketing, certified complex roots,
//! and the classical dense separation bound.
//!
//! Nothing outside this module expands a sparse polynomial.

mod complex;
mod dense;
mod mahler;
mod sturm;

pub use complex::{
    center_f64, complex_roots, complex_roots_with, modulus_bounds, ComplexConfig, ComplexRoots, RootDisk,
    DEFAULT_COMPLEX_DEGREE_CAP,
};
pub use dense::{DensePoly, DEFAULT_DEGREE_CAP};
pub use mahler::{mahler_log_bound, mahler_log_bound_for};
pub use sturm::{
    min_bracket_gap, real_root_brackets, real_root_brackets_with, sturm_distinct_real_roots,
    sturm_distinct_real_roots_with, RootBracket, SturmChain,
};
