//! The evaluation code `C(F1, F2, β)`.
//!
//! `V` is the space of pairs `(f, g)` with `f(x) = f1(x) + x^(m-d) g1(βx)` and
//! `g(y) = g1(y) + y^d g2(y)`, where `deg f1 <= m-d-1`, `deg g1 <= d-1` and
//! `deg g2 <= l-d-1`. A codeword evaluates `f` on `F1` and `g` on `F2`; the
//! generator matrix has one row per basis vector of `V`, so `k` rows.

use serde_json::json;

use super::{BiUniformParams, ConstructionError, Method, Provenance, Representation};
use crate::fields::{Element, FieldDesc};
use crate::linalg::Matrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalCodeSpec {
    pub f1_points: Vec<Element>,
    pub f2_points: Vec<Element>,
    pub beta: Element,
}

fn check_points(points: &[Element], expected: usize) -> Result<(), ConstructionError> {
    if points.len() != expected {
        return Err(ConstructionError::ParamsOutOfRange(format!(
            "{} evaluation points for a class of size {expected}",
            points.len()
        )));
    }
    if points.iter().any(Element::is_zero) {
        return Err(ConstructionError::ZeroPoint);
    }
    let mut sorted: Vec<&Element> = points.iter().collect();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(ConstructionError::DuplicatePoints);
    }
    Ok(())
}

/// Generator matrix of `C(F1, F2, β)`. The result is a valid representation
/// only when β meets the condition-matrix criterion; this function does not
/// check that.
pub fn eval_code_matrix(
    params: &BiUniformParams,
    spec: &EvalCodeSpec,
    field: &FieldDesc,
) -> Result<Matrix, ConstructionError> {
    check_points(&spec.f1_points, params.n1())?;
    check_points(&spec.f2_points, params.n2())?;
    if [&spec.beta].into_iter().chain(&spec.f1_points).chain(&spec.f2_points).any(|e| !field.contains(e)) {
        return Err(ConstructionError::Field(crate::fields::FieldError::FieldMismatch));
    }
    let (m, l, d) = (params.m(), params.l(), params.d());
    let zero = field.zero();
    let pow = |e: &Element, n: usize| field.pow_u64(e, n as u64);
    let mut rows: Vec<Vec<Element>> = Vec::with_capacity(params.k());

    for i in 0..m - d {
        let row = spec.f1_points.iter().map(|x| pow(x, i)).chain(spec.f2_points.iter().map(|_| zero.clone()));
        rows.push(row.collect());
    }
    for j in 0..d {
        let left = spec.f1_points.iter().map(|x| {
            let bx = field.mul(&spec.beta, x);
            field.mul(&pow(x, m - d), &pow(&bx, j))
        });
        let right = spec.f2_points.iter().map(|y| pow(y, j));
        rows.push(left.chain(right).collect());
    }
    for t in 0..l - d {
        let row = spec.f1_points.iter().map(|_| zero.clone()).chain(spec.f2_points.iter().map(|y| pow(y, d + t)));
        rows.push(row.collect());
    }
    Ok(Matrix::from_rows(params.n(), rows)?)
}

pub fn eval_code_generator(
    params: &BiUniformParams,
    spec: &EvalCodeSpec,
    field: &FieldDesc,
) -> Result<Representation, ConstructionError> {
    let matrix = eval_code_matrix(params, spec, field)?;
    let provenance = Provenance::new(
        Method::EvalCode,
        json!({ "f1": spec.f1_points, "f2": spec.f2_points, "beta": spec.beta }),
    );
    Representation::new(field.clone(), *params, matrix, provenance)
}
