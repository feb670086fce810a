//! Direct construction for `d = 2` over an odd prime field `F_q` with both
//! classes of size at most `(q - 1) / 2`, indexed by the nonzero squares `L`.
//!
//! `E1` columns: `(t, t^2, ..., t^(m-2), 1, t^(m-1), 0, ..., 0)`
//! `E2` columns: `(0, ..., 0, η, t^(l-1), t^(l-2), ..., t)`
//! where `(-1)^(l+m) η` is a non-square.

use num_bigint::BigUint;
use num_integer::Integer;
use serde_json::json;

use super::{BiUniformParams, ConstructionError, Method, Provenance, Representation};
use crate::fields::{find_eta, is_square, Element, FieldDesc};
use crate::linalg::Matrix;

/// The first `count` nonzero squares of `F_q` in ascending order.
pub fn ascending_squares(field: &FieldDesc, count: usize) -> Result<Vec<Element>, ConstructionError> {
    let mut out = Vec::with_capacity(count);
    let mut a = BigUint::from(1u32);
    while out.len() < count {
        if &a >= field.characteristic() {
            return Err(ConstructionError::FieldTooSmall { order: field.order(), needed: count });
        }
        let e = field.from_biguint(a.clone());
        if is_square(field, &e)? {
            out.push(e);
        }
        a += 1u32;
    }
    Ok(out)
}

pub fn construct_d2_squares(params: &BiUniformParams, q: &BigUint) -> Result<Representation, ConstructionError> {
    if !params.has_positive_subranks() {
        return Err(ConstructionError::ParamsOutOfRange("sub-ranks must be positive".into()));
    }
    if params.d() != 2 {
        return Err(ConstructionError::ParamsOutOfRange(format!("this construction needs d = 2, got d = {}", params.d())));
    }
    if q.is_even() {
        return Err(ConstructionError::FieldNotOdd);
    }
    let half: BigUint = (q - 1u32) >> 1;
    if BigUint::from(params.max_class()) > half {
        return Err(ConstructionError::ParamsOutOfRange(format!(
            "class size {} exceeds (q - 1)/2 = {half}",
            params.max_class()
        )));
    }
    let field = FieldDesc::prime(q.clone())?;
    let (k, m, l) = (params.k(), params.m(), params.l());
    let eta = find_eta(&field, m, l)?;
    let squares = ascending_squares(&field, params.max_class())?;
    let pow = |t: &Element, e: usize| field.pow_u64(t, e as u64);

    let s_column = |t: &Element| -> Vec<Element> {
        let mut v: Vec<Element> = (1..=m - 2).map(|i| pow(t, i)).collect();
        v.push(field.one());
        v.push(pow(t, m - 1));
        v.resize(k, field.zero());
        v
    };
    let t_column = |t: &Element| -> Vec<Element> {
        let mut v = vec![field.zero(); m - 2];
        v.push(eta.clone());
        v.extend((1..l).rev().map(|i| pow(t, i)));
        v
    };

    let columns: Vec<Vec<Element>> = squares[..params.n1()]
        .iter()
        .map(s_column)
        .chain(squares[..params.n2()].iter().map(t_column))
        .collect();
    let rows = (0..k).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
    let matrix = Matrix::from_rows(params.n(), rows)?;
    let provenance = Provenance::new(
        Method::D2,
        json!({
            "q": q.to_string(),
            "eta": eta,
            "squares": squares,
        }),
    );
    Representation::new(field, *params, matrix, provenance)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q11_layout() {
        let p = BiUniformParams::new(4, 3, 3, 5, 5).unwrap();
        let rep = construct_d2_squares(&p, &11u32.into()).unwrap();
        let f = rep.field();
        let sq: Vec<u64> = ascending_squares(f, 5).unwrap().iter().map(|e| f.to_u64(e).unwrap()).collect();
        assert_eq!(sq, vec![1, 3, 4, 5, 9]);
        let col = |c: usize| -> Vec<u64> { rep.matrix().column(c).iter().map(|e| f.to_u64(e).unwrap()).collect() };
        assert_eq!(col(0), vec![1, 1, 1, 0]);
        assert_eq!(col(5), vec![0, 2, 1, 1]);
        // t = 3: S = (3, 1, 9, 0), T = (0, 2, 9, 3)
        assert_eq!(col(1), vec![3, 1, 9, 0]);
        assert_eq!(col(6), vec![0, 2, 9, 3]);
    }

    #[test]
    fn rejects_out_of_range() {
        let p = BiUniformParams::new(4, 3, 3, 5, 5).unwrap();
        assert!(matches!(construct_d2_squares(&p, &9u32.into()), Err(ConstructionError::ParamsOutOfRange(_))));
        assert!(matches!(construct_d2_squares(&p, &16u32.into()), Err(ConstructionError::FieldNotOdd)));
        // 21 passes the size check but is not prime
        assert!(matches!(construct_d2_squares(&p, &21u32.into()), Err(ConstructionError::Field(_))));
        let d3 = BiUniformParams::new(5, 4, 4, 5, 5).unwrap();
        assert!(matches!(construct_d2_squares(&d3, &11u32.into()), Err(ConstructionError::ParamsOutOfRange(_))));
    }
}
