//! All-subsets comparison against the combinatorial definition. Independent
//! of the constrained-subset reduction used by [`verify_representation`].
//!
//! [`verify_representation`]: super::verify_representation

use rayon::prelude::*;

use super::{Verdict, VerifyError, Witness};
use crate::constructions::Representation;
use crate::linalg;

pub const ORACLE_MAX_ELEMENTS: usize = 20;

/// A set `B` is independent in the matroid iff `|B| <= k`, `|B ∩ E1| <= m`
/// and `|B ∩ E2| <= l`; compares that with the rank of every column subset.
pub fn full_independence_oracle(rep: &Representation) -> Result<Verdict, VerifyError> {
    let params = rep.params();
    let n = params.n();
    if n > ORACLE_MAX_ELEMENTS {
        return Err(VerifyError::TooLarge { n, max: ORACLE_MAX_ELEMENTS });
    }
    let field = rep.field();
    let e1_mask: u64 = (1u64 << params.n1()) - 1;
    let total = 1u64 << n;
    let mismatch = (0..total).into_par_iter().find_map_first(|mask| {
        let size = mask.count_ones() as usize;
        let in_e1 = (mask & e1_mask).count_ones() as usize;
        let in_e2 = size - in_e1;
        let expected = size <= params.k() && in_e1 <= params.m() && in_e2 <= params.l();
        let columns: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let independent = linalg::rank(field, &rep.matrix().select_columns(&columns)) == size;
        (independent != expected).then_some((mask, Witness::OracleMismatch { columns, independent, expected_independent: expected }))
    });
    Ok(match mismatch {
        None => Verdict::pass(total),
        Some((mask, w)) => Verdict::fail(mask + 1, w),
    })
}
