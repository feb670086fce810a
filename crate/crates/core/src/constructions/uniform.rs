use num_bigint::BigUint;
use serde_json::json;

use super::{BiUniformParams, ConstructionError, Method, Provenance, Representation};
use crate::fields::{prime_at_least, FieldDesc};
use crate::linalg::Matrix;

/// `k × n` Vandermonde matrix on the first `n` field elements in canonical
/// order (zero included); every `k` columns are independent.
pub fn construct_uniform(n: usize, k: usize, field: &FieldDesc) -> Result<Matrix, ConstructionError> {
    if k > n {
        return Err(ConstructionError::ParamsOutOfRange(format!("rank {k} exceeds ground-set size {n}")));
    }
    if field.order() < BigUint::from(n) {
        return Err(ConstructionError::FieldTooSmall { order: field.order(), needed: n });
    }
    let points = (0..n)
        .map(|i| field.element_from_index(&BigUint::from(i)))
        .collect::<Result<Vec<_>, _>>()?;
    let rows = (0..k).map(|i| points.iter().map(|x| field.pow_u64(x, i as u64)).collect()).collect();
    Ok(Matrix::from_rows(n, rows)?)
}

/// Uniform representation over the smallest prime field with at least `n` elements.
pub fn uniform_representation(params: &BiUniformParams) -> Result<Representation, ConstructionError> {
    if !params.is_uniform() {
        return Err(ConstructionError::ParamsOutOfRange(format!("{params} is not a uniform matroid")));
    }
    let p = prime_at_least(&BigUint::from(params.n().max(2)));
    let field = FieldDesc::prime(p.clone())?;
    let matrix = construct_uniform(params.n(), params.k(), &field)?;
    let mut prov = Provenance::new(Method::Uniform, json!({ "q": p.to_string(), "n": params.n(), "k": params.k() }));
    prov.notes.push(if params.k() == params.m() && params.k() == params.l() {
        "degenerate: k = m = l, the matroid is uniform".to_string()
    } else {
        "degenerate: m = n1 and l = n2, the matroid is uniform".to_string()
    });
    Representation::new(field, *params, matrix, prov)
}
