//! Evaluation-code construction over `F_{q0^s}` with `s > d(d-1)/2`: points
//! from the prime subfield, β the class of `x` (minimal polynomial of degree
//! `s`). `φ` has prime-subfield coefficients and degree `< s`, so `φ(β) != 0`.

use num_bigint::BigUint;
use serde_json::json;

use super::{eval_code_generator, BiUniformParams, ConstructionError, EvalCodeSpec, Method, Representation};
use crate::fields::FieldDesc;

pub fn construct_ext_field(params: &BiUniformParams, q0: &BigUint, s: usize) -> Result<Representation, ConstructionError> {
    if !params.has_positive_subranks() {
        return Err(ConstructionError::ParamsOutOfRange("sub-ranks must be positive".into()));
    }
    if q0 <= &BigUint::from(params.max_class()) {
        return Err(ConstructionError::BaseFieldTooSmall { q0: q0.clone(), max_class: params.max_class() });
    }
    let d = params.d();
    let min_s = d * d.saturating_sub(1) / 2;
    if s == 0 || (d >= 2 && s <= min_s) {
        return Err(ConstructionError::DegreeTooSmall { s, bound: min_s });
    }
    let field = FieldDesc::with_degree(q0.clone(), s)?;
    let beta = field.generator().unwrap_or_else(|| field.one());
    let spec = EvalCodeSpec {
        f1_points: (1..=params.n1() as u64).map(|i| field.from_u64(i)).collect(),
        f2_points: (1..=params.n2() as u64).map(|i| field.from_u64(i)).collect(),
        beta,
    };
    let mut rep = eval_code_generator(params, &spec, &field)?;
    let p = rep.provenance_mut();
    p.method = Method::Ext;
    p.spec = json!({
        "q0": q0.to_string(),
        "s": s,
        "modulus": field.modulus().map(|m| m.iter().map(ToString::to_string).collect::<Vec<_>>()),
        "beta": spec.beta,
        "f1": spec.f1_points,
        "f2": spec.f2_points,
    });
    Ok(rep)
}
