use num_bigint::Sign;

use super::dyadic::Dyadic;
use super::interval::DyadicInterval;
use crate::{Error, Result};

/// Stopping condition for [`refine`].
#[derive(Clone, Debug)]
pub enum RefineTarget {
    /// Stop once the interval width is at most the given value.
    Width(Dyadic),
    /// Stop once the interval excludes zero or collapses to exactly zero.
    SignDetermined,
}

impl RefineTarget {
    fn met(&self, iv: &DyadicInterval) -> bool {
        match self {
            RefineTarget::Width(w) => iv.width() <= *w,
            RefineTarget::SignDetermined => match iv.sign() {
                Some(Sign::NoSign) => iv.lo().is_zero() && iv.hi().is_zero(),
                Some(_) => true,
                None => false,
            },
        }
    }
}

/// Re-evaluate `compute` at doubling precisions until `target` holds.
///
/// Returns the first interval meeting the target, or a budget error carrying
/// the last interval once `cap` is exceeded.
pub fn refine<F>(mut compute: F, target: &RefineTarget, start: u64, cap: u64) -> Result<DyadicInterval>
where
    F: FnMut(u64) -> Result<DyadicInterval>,
{
    let mut p = start.max(8);
    let mut last = None;
    while p <= cap {
        let iv = compute(p)?;
        if target.met(&iv) {
            return Ok(iv);
        }
        last = Some(Box::new(iv));
        p = p.saturating_mul(2);
    }
    Err(Error::Budget {
        reason: format!("precision cap of {cap} bits reached"),
        last,
    })
}
