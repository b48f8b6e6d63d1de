use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::succinct::baker_constant;

/// A named constant with its derivation.
#[derive(Clone, Debug, Serialize)]
pub struct LedgerEntry {
    pub name: &'static str,
    #[serde(with = "crate::serde_str")]
    pub value: BigRational,
    pub note: &'static str,
}

/// Exact values of every constant used by the separation bounds.
///
/// Each value over-approximates the constant required by its step, so a
/// bound computed from it stays valid. All steps assume `s, t ≥ 1`.
#[derive(Clone, Debug, Serialize)]
pub struct ConstantLedger {
    pub entries: Vec<LedgerEntry>,
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl ConstantLedger {
    pub fn get() -> &'static ConstantLedger {
        static LEDGER: OnceLock<ConstantLedger> = OnceLock::new();
        LEDGER.get_or_init(ConstantLedger::derive)
    }

    fn derive() -> ConstantLedger {
        let two_term = baker_constant(2);
        let binomial_value = &two_term + int(2);
        let critical_value = &binomial_value * int(4) + int(1);
        let real_separation = &critical_value + int(7);
        let complex_critical_value = critical_value.clone();
        let squarefree_separation = &complex_critical_value + int(9);
        let complex_separation = squarefree_separation.clone();
        let entries = vec![
            LedgerEntry {
                name: "two_term_baker",
                value: two_term,
                note: "18·3!·2^3·32^4 = 905969664 times 1.3863 ≥ ln 4.",
            },
            LedgerEntry {
                name: "binomial_value",
                value: binomial_value,
                note: "|a1·(p/q)^β + a2| ≥ (1 − 1/e)·exp(−C(2)·t·s² − t); \
                       t + 0.46 ≤ 2·t·s², so C(2) + 2 suffices.",
            },
            LedgerEntry {
                name: "critical_value",
                value: critical_value,
                note: "γ·f(m) is a binomial value with heights ≤ e^(2s) and exponent \
                       β/(γ−β) of height ≤ e^s, giving exp(−4·C1·s³); dividing by γ ≤ e^s \
                       costs s ≤ s³.",
            },
            LedgerEntry {
                name: "real_separation",
                value: real_separation,
                note: "Case γ ≥ 2β: divide by b²β ≤ e^(3s). Case γ < 2β: pass to the reciprocal \
                       and multiply by x1·x2 ≥ (1 + e^s)^(−2) ≥ e^(−2s − 2 ln 2). \
                       5s + 1.39 ≤ 7s³. Zero and opposite-sign pairs are ≥ 1/(1 + e^s).",
            },
            LedgerEntry {
                name: "complex_critical_value",
                value: complex_critical_value,
                note: "Real ξ^β reduces to the real case. Otherwise |f(m)|² ≥ (a ± r)², or \
                       2(1 − cos θ) ≥ 4/γ² when a ± r = 0, using 1 − cos x ≥ 2x²/π² on [0, π]; \
                       e^(−s) is dominated by the real constant.",
            },
            LedgerEntry {
                name: "squarefree_separation",
                value: squarefree_separation,
                note: "sup|f′| ≤ 2e·b²β on the segment, 1 + cot(π/γ) ≤ γ for γ ≥ 2, and the \
                       reciprocal transfer: 6s + 1 + 2 ln 2 ≤ 9s³.",
            },
            LedgerEntry {
                name: "linear_remainder",
                value: int(8),
                note: "Cases m = 0 and |x1| ≥ (1 + 1/γ)|m| give |x1 − x2| ≥ e^(−4s) directly, \
                       e^(−6s − 2 ln 2) ≥ e^(−8s) after the reciprocal transfer.",
            },
            LedgerEntry {
                name: "complex_separation",
                value: complex_separation,
                note: "Double-root case gives exp(−(derivative_root_gap + gap_transfer)·s) \
                       before the reciprocal transfer and exp(−9s) after it, dominated by \
                       squarefree_separation·s³.",
            },
            LedgerEntry {
                name: "derivative_root_gap",
                value: int(3),
                note: "Distinct roots of f′ are ≥ min(1, 4/(γ−β))/|cγ| ≥ e^(−3s) apart, \
                       with the origin handled as a root of f′.",
            },
            LedgerEntry {
                name: "gap_transfer",
                value: int(2),
                note: "(1 + cot(π/γ))(1 + cot(π/(2(γ−2))))/4 ≤ γ²/4 ≤ e^(2s).",
            },
        ];
        ConstantLedger { entries }
    }

    pub fn value(&self, name: &str) -> &BigRational {
        &self
            .entries
            .iter()
            .find(|e| e.name == name)
            .unwrap_or_else(|| panic!("no ledger entry `{name}`"))
            .value
    }

    pub fn real_separation(&self) -> &BigRational {
        self.value("real_separation")
    }

    pub fn complex_separation(&self) -> &BigRational {
        self.value("complex_separation")
    }

    pub fn binomial_value(&self) -> &BigRational {
        self.value("binomial_value")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn chain_is_monotone() {
        let l = ConstantLedger::get();
        let order = [
            "two_term_baker",
            "binomial_value",
            "critical_value",
            "real_separation",
        ];
        for w in order.windows(2) {
            assert!(l.value(w[0]) < l.value(w[1]), "{} < {}", w[0], w[1]);
        }
        assert!(l.complex_separation() >= l.value("complex_critical_value"));
        let linear = l.value("linear_remainder") + l.value("derivative_root_gap") + l.value("gap_transfer");
        assert!(l.complex_separation() >= &linear);
    }

    #[test]
    fn two_term_constant_envelope() {
        let c = ConstantLedger::get().value("two_term_baker").to_f64().unwrap();
        assert!(c >= 18.0 * 6.0 * 8.0 * 32f64.powi(4) * 4f64.ln());
        assert!((c / 1.2560e9 - 1.0).abs() < 1e-3);
    }

    #[test]
    fn every_entry_has_a_note() {
        for e in &ConstantLedger::get().entries {
            assert!(!e.note.is_empty(), "{}", e.name);
        }
    }
}
