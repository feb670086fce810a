//! Evaluation-code construction over a prime field `F_p`, `p > K^h`.
//!
//! With `N = max(n1, n2)`, `K = ceil(N/2) + 1` and `h = m d (1 + d(d-1)/2)`,
//! integer points from `[-(K-1), K-1] \ {0}` and `β = K^(md)` make the
//! integer `φ(β)` nonzero with `|φ(β)| < K^h`, so it stays nonzero mod `p`.
//! The formulas assume `m >= l`; otherwise the classes are swapped for the
//! build and swapped back in the result.

use num_bigint::{BigInt, BigUint};
use serde::Serialize;
use serde_json::json;

use super::{eval_code_generator, BiUniformParams, ConstructionError, EvalCodeSpec, Method, Representation};
use crate::fields::{next_prime, FieldDesc};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeFieldPlan {
    #[serde(rename = "K")]
    pub base: u64,
    pub h: u64,
    #[serde(serialize_with = "decimal")]
    pub p: BigUint,
    #[serde(serialize_with = "decimal")]
    pub beta_int: BigUint,
    pub f1_ints: Vec<i64>,
    pub f2_ints: Vec<i64>,
    /// The classes were exchanged so that the larger sub-rank comes first.
    pub swapped: bool,
}

fn decimal<S: serde::Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

/// `1, -1, 2, -2, ...`, the first `count` terms.
pub fn alternating_points(count: usize) -> Vec<i64> {
    (0..count as i64).map(|i| if i % 2 == 0 { i / 2 + 1 } else { -(i / 2 + 1) }).collect()
}

/// Computes `K`, `h`, `p` and `β` without building the matrix.
pub fn prime_field_plan(params: &BiUniformParams) -> Result<PrimeFieldPlan, ConstructionError> {
    let d = params.d();
    if d < 2 {
        return Err(ConstructionError::ParamsOutOfRange(format!("prime-field construction needs d >= 2, got d = {d}")));
    }
    if !params.has_positive_subranks() {
        return Err(ConstructionError::ParamsOutOfRange("sub-ranks must be positive".into()));
    }
    let swapped = params.m() < params.l();
    let m = params.m().max(params.l()) as u64;
    let d = d as u64;
    let n = params.max_class() as u64;
    let base = n.div_ceil(2) + 1;
    let h = m * d * (1 + d * (d - 1) / 2);
    let bound = num_traits::pow(BigUint::from(base), h as usize);
    let p = next_prime(&bound);
    let beta_int = num_traits::pow(BigUint::from(base), (m * d) as usize);
    Ok(PrimeFieldPlan {
        base,
        h,
        p,
        beta_int,
        f1_ints: alternating_points(params.n1()),
        f2_ints: alternating_points(params.n2()),
        swapped,
    })
}

pub fn construct_prime_field(params: &BiUniformParams) -> Result<(PrimeFieldPlan, Representation), ConstructionError> {
    let plan = prime_field_plan(params)?;
    let field = FieldDesc::prime(plan.p.clone())?;
    let embed = |ints: &[i64]| ints.iter().map(|&v| field.from_bigint(&BigInt::from(v))).collect::<Vec<_>>();
    let beta = field.from_biguint(plan.beta_int.clone());

    let rep = if plan.swapped {
        let sw = params.swapped();
        let spec = EvalCodeSpec { f1_points: embed(&plan.f2_ints), f2_points: embed(&plan.f1_ints), beta };
        let inner = eval_code_generator(&sw, &spec, &field)?;
        // inner columns are [E2 | E1]
        let order: Vec<usize> = (params.n2()..params.n()).chain(0..params.n2()).collect();
        let matrix = inner.matrix().select_columns(&order);
        Representation::new(field, *params, matrix, inner.provenance().clone())?
    } else {
        let spec = EvalCodeSpec { f1_points: embed(&plan.f1_ints), f2_points: embed(&plan.f2_ints), beta };
        eval_code_generator(params, &spec, &field)?
    };
    let mut rep = rep;
    let prov = rep.provenance_mut();
    prov.method = Method::Prime;
    prov.spec = json!({ "plan": plan });
    Ok((plan, rep))
}
