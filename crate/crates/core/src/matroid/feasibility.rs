//! Necessary conditions on the field size.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::constructions::BiUniformParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FeasibilityVerdict {
    PossiblyRepresentable,
    NotRepresentable,
    BoundViolated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Reason {
    /// `q <= k <= m + l - 2`: no representation over `F_q`.
    SmallField { q: String, k: usize, m: usize, l: usize },
    /// `k <= m + l - 2` forces `|E| <= q + k - 1`.
    GroundSetBound { ground_set: usize, bound: String },
    /// `d <= 1` reduces to representing a uniform matroid.
    LowOverlap { d: usize },
    /// `k = m = l` (or both classes independent): the matroid and its dual are uniform.
    Uniform,
}

impl std::fmt::Display for Reason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Reason::SmallField { q, k, m, l } => {
                write!(f, "q = {q} <= k = {k} <= m + l - 2 = {}: not representable over F_{q}", m + l - 2)
            }
            Reason::GroundSetBound { ground_set, bound } => {
                write!(f, "|E| = {ground_set} exceeds q + k - 1 = {bound}")
            }
            Reason::LowOverlap { d } => write!(f, "d = {d}: reduces to a uniform matroid"),
            Reason::Uniform => write!(f, "uniform matroid (so is its dual)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Feasibility {
    pub verdict: FeasibilityVerdict,
    pub reasons: Vec<Reason>,
}

/// Evaluates the field-size obstructions for `F_q`; `q` should be a prime power.
pub fn check_feasibility(params: &BiUniformParams, q: &BigUint) -> Feasibility {
    let (k, m, l) = (params.k(), params.m(), params.l());
    let mut reasons = Vec::new();
    let mut verdict = FeasibilityVerdict::PossiblyRepresentable;
    // k <= m + l - 2 is d >= 2
    let overlap = params.d() >= 2;

    if overlap && q <= &BigUint::from(k) {
        reasons.push(Reason::SmallField { q: q.to_string(), k, m, l });
        verdict = FeasibilityVerdict::NotRepresentable;
    }
    if overlap {
        let bound = q + BigUint::from(k) - 1u32;
        if BigUint::from(params.n()) > bound {
            reasons.push(Reason::GroundSetBound { ground_set: params.n(), bound: bound.to_string() });
            if verdict == FeasibilityVerdict::PossiblyRepresentable {
                verdict = FeasibilityVerdict::BoundViolated;
            }
        }
    }
    if params.is_uniform() {
        reasons.push(Reason::Uniform);
    } else if params.d() <= 1 {
        reasons.push(Reason::LowOverlap { d: params.d() });
    }
    Feasibility { verdict, reasons }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(k: usize, m: usize, l: usize, n1: usize, n2: usize) -> BiUniformParams {
        BiUniformParams::new(k, m, l, n1, n2).unwrap()
    }

    #[test]
    fn small_field_obstruction() {
        let f = check_feasibility(&params(4, 3, 3, 5, 5), &4u32.into());
        assert_eq!(f.verdict, FeasibilityVerdict::NotRepresentable);
        assert!(matches!(f.reasons[0], Reason::SmallField { .. }));
    }

    #[test]
    fn ground_set_bound() {
        let f = check_feasibility(&params(4, 3, 3, 10, 10), &11u32.into());
        assert_eq!(f.verdict, FeasibilityVerdict::BoundViolated);
        assert_eq!(f.reasons, vec![Reason::GroundSetBound { ground_set: 20, bound: "14".into() }]);
    }

    #[test]
    fn nothing_triggered() {
        let f = check_feasibility(&params(4, 3, 3, 5, 5), &11u32.into());
        assert_eq!(f.verdict, FeasibilityVerdict::PossiblyRepresentable);
        assert!(f.reasons.is_empty());
    }

    #[test]
    fn both_triggered_keeps_stronger_verdict() {
        let f = check_feasibility(&params(4, 3, 3, 10, 10), &4u32.into());
        assert_eq!(f.verdict, FeasibilityVerdict::NotRepresentable);
        assert_eq!(f.reasons.len(), 2);
    }

    #[test]
    fn notes() {
        let f = check_feasibility(&params(4, 2, 2, 5, 5), &2u32.into());
        assert_eq!(f.verdict, FeasibilityVerdict::PossiblyRepresentable);
        assert_eq!(f.reasons, vec![Reason::LowOverlap { d: 0 }]);
        let f = check_feasibility(&params(3, 3, 3, 4, 4), &7u32.into());
        assert_eq!(f.reasons, vec![Reason::Uniform]);
    }
}
