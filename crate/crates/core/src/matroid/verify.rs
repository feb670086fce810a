//! Exhaustive verification.
//!
//! A matrix represents the bi-uniform matroid iff
//! (a) the `E1` columns have rank `m` and the `E2` columns rank `l`, and
//! (b) every constrained `k`-subset (`a` columns of `E1`, `k - a` of `E2`,
//!     `k - l <= a <= m`) has nonzero determinant.
//! Every independent set of the matroid extends to such a `k`-subset, and a
//! set meeting a class in more than its sub-rank is dependent by (a).

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::{binomial, Representation};
use crate::linalg;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Maximum number of determinants to evaluate.
    pub budget: u64,
    /// Ignore the budget.
    pub force: bool,
}

impl VerifyOptions {
    pub const DEFAULT_BUDGET: u64 = 1_000_000;
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { budget: Self::DEFAULT_BUDGET, force: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("{count} subsets to check exceed the budget of {budget}")]
    BudgetExceeded { count: u64, budget: u64 },
    #[error("ground set of {n} elements is too large for the all-subsets oracle (max {max})")]
    TooLarge { n: usize, max: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A constrained `k`-subset whose columns are dependent.
    DependentSubset { columns: Vec<usize>, e1_count: usize, e2_count: usize },
    /// A class whose columns do not span a space of its sub-rank.
    SubRank { class: u8, columns: Vec<usize>, expected: usize, actual: usize },
    /// A subset on which matrix independence disagrees with the matroid.
    OracleMismatch { columns: Vec<usize>, independent: bool, expected_independent: bool },
}

impl Witness {
    /// Re-derives the failure from the matrix.
    pub fn recheck(&self, rep: &Representation) -> bool {
        let field = rep.field();
        match self {
            Witness::DependentSubset { columns, .. } => {
                let sub = rep.matrix().select_columns(columns);
                linalg::rank(field, &sub) < columns.len()
            }
            Witness::SubRank { columns, expected, actual, .. } => {
                let r = linalg::rank(field, &rep.matrix().select_columns(columns));
                r == *actual && r != *expected
            }
            Witness::OracleMismatch { columns, independent, expected_independent } => {
                let r = linalg::rank(field, &rep.matrix().select_columns(columns));
                (r == columns.len()) == *independent && independent != expected_independent
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub ok: bool,
    /// Subsets examined. On failure, the position of the witness in the
    /// deterministic sweep order (so the count does not depend on threading).
    pub checked: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn pass(checked: u64) -> Self {
        Verdict { ok: true, checked, witness: None }
    }

    pub fn fail(checked: u64, witness: Witness) -> Self {
        Verdict { ok: false, checked, witness: Some(witness) }
    }
}

/// Sweep order: `t1 = 0..=d` (so `a = m - t1` descending), then `E1`
/// combinations, then `E2` combinations, each lexicographic. The reported
/// witness is the first failure in that order even when run in parallel.
pub fn verify_representation(rep: &Representation, options: &VerifyOptions) -> Result<Verdict, VerifyError> {
    let params = rep.params();
    let field = rep.field();
    let matrix = rep.matrix();

    for (class, cols, expected) in [
        (1u8, rep.e1_columns().collect::<Vec<_>>(), params.m()),
        (2u8, rep.e2_columns().collect::<Vec<_>>(), params.l()),
    ] {
        let actual = linalg::rank(field, &matrix.select_columns(&cols));
        if actual != expected {
            return Ok(Verdict::fail(0, Witness::SubRank { class, columns: cols, expected, actual }));
        }
    }

    let count = params.constrained_subset_count();
    if count > options.budget && !options.force {
        return Err(VerifyError::BudgetExceeded { count, budget: options.budget });
    }

    let mut tasks = Vec::new();
    let mut offsets = Vec::new();
    let mut offset = 0u64;
    for (a, b) in params.splits() {
        let per_task = binomial(params.n2(), b);
        for e1 in rep.e1_columns().combinations(a) {
            offsets.push(offset);
            offset = offset.saturating_add(per_task);
            tasks.push((b, e1));
        }
    }

    let failure = tasks.par_iter().enumerate().find_map_first(|(ti, (b, e1))| {
        rep.e2_columns().combinations(*b).enumerate().find_map(|(pos, e2)| {
            let columns: Vec<usize> = e1.iter().copied().chain(e2).collect();
            let det = linalg::determinant(field, &matrix.select_columns(&columns)).expect("square submatrix");
            det.is_zero().then_some((ti, pos as u64, columns))
        })
    });

    Ok(match failure {
        None => Verdict::pass(count),
        Some((ti, pos, columns)) => {
            let e1_count = tasks[ti].1.len();
            let e2_count = tasks[ti].0;
            Verdict::fail(offsets[ti] + pos + 1, Witness::DependentSubset { columns, e1_count, e2_count })
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{construct_d2_squares, eval_code_generator, BiUniformParams, EvalCodeSpec};
    use crate::fields::FieldDesc;

    fn d2_instance() -> Representation {
        let p = BiUniformParams::new(4, 3, 3, 5, 5).unwrap();
        construct_d2_squares(&p, &11u32.into()).unwrap()
    }

    #[test]
    fn d2_instance_passes_with_200_subsets() {
        let v = verify_representation(&d2_instance(), &VerifyOptions::default()).unwrap();
        assert_eq!(v, Verdict::pass(200));
    }

    #[test]
    fn duplicated_column_is_caught() {
        let rep = d2_instance();
        let f = rep.field().clone();
        let mut rows = rep.matrix().to_rows();
        for row in rows.iter_mut() {
            row[1] = row[0].clone();
        }
        let m = crate::linalg::Matrix::from_rows(10, rows).unwrap();
        let bad = Representation::new(f, *rep.params(), m, rep.provenance().clone()).unwrap();
        let v = verify_representation(&bad, &VerifyOptions::default()).unwrap();
        assert!(!v.ok);
        let w = v.witness.unwrap();
        assert!(w.recheck(&bad));
        match w {
            Witness::DependentSubset { columns, .. } => {
                assert!(columns.contains(&0) && columns.contains(&1));
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn block_vandermonde_d0_passes() {
        let f = FieldDesc::prime_u64(7).unwrap();
        let p = BiUniformParams::new(4, 2, 2, 4, 4).unwrap();
        let pts: Vec<_> = (1..=4).map(|i| f.from_u64(i)).collect();
        let spec = EvalCodeSpec { f1_points: pts.clone(), f2_points: pts, beta: f.one() };
        let rep = eval_code_generator(&p, &spec, &f).unwrap();
        assert!(verify_representation(&rep, &VerifyOptions::default()).unwrap().ok);
    }

    #[test]
    fn sub_rank_violation() {
        let rep = d2_instance();
        // claim m = 2: the E1 columns actually span 3 dimensions
        let p = BiUniformParams::new(4, 2, 3, 5, 5).unwrap();
        let bad = Representation::new(rep.field().clone(), p, rep.matrix().clone(), rep.provenance().clone()).unwrap();
        let v = verify_representation(&bad, &VerifyOptions::default()).unwrap();
        assert!(matches!(v.witness, Some(Witness::SubRank { class: 1, expected: 2, actual: 3, .. })));
        assert!(v.witness.unwrap().recheck(&bad));
    }

    #[test]
    fn budget() {
        let rep = d2_instance();
        let err = verify_representation(&rep, &VerifyOptions { budget: 199, force: false }).unwrap_err();
        assert_eq!(err, VerifyError::BudgetExceeded { count: 200, budget: 199 });
        assert!(verify_representation(&rep, &VerifyOptions { budget: 199, force: true }).unwrap().ok);
    }

    #[test]
    fn witness_is_first_in_sweep_order() {
        let rep = d2_instance();
        let f = rep.field().clone();
        let zero_col = rep.matrix().with_entry(0, 9, f.zero()).with_entry(1, 9, f.zero());
        let zero_col = zero_col.with_entry(2, 9, f.zero()).with_entry(3, 9, f.zero());
        let p = BiUniformParams::new(4, 3, 3, 5, 5).unwrap();
        let bad = Representation::new(f, p, zero_col, rep.provenance().clone()).unwrap();
        // column 9 zero: E2 still has rank 3 from columns 5..9
        let v = verify_representation(&bad, &VerifyOptions::default()).unwrap();
        // first split (3, 1): E1 {0,1,2}, E2 combos {5},{6},{7},{8},{9} -> fifth
        assert_eq!(v.checked, 5);
        assert_eq!(
            v.witness,
            Some(Witness::DependentSubset { columns: vec![0, 1, 2, 9], e1_count: 3, e2_count: 1 })
        );
    }
}
