//! The `d × d` condition matrix of a constrained subset of `C(F1, F2, β)`.
//!
//! Pick `m - t1` points of `F1` and `l - t2` points of `F2` (`t1 + t2 = d`)
//! and let `r`, `s` be the monic polynomials vanishing on them. The top `t1`
//! rows hold shifted coefficients of `r`, the bottom `t2` rows shifted
//! coefficients of `s` scaled by `β^j` in column `j`. The chosen columns of
//! the generator matrix are independent iff this matrix is nonsingular.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;

use super::{BiUniformParams, ConstructionError};
use crate::fields::{Element, FieldDesc};
use crate::linalg::{self, Matrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionMatrixSpec {
    /// `r_0, ..., r_{m - t1}`, monic.
    pub r_coeffs: Vec<Element>,
    /// `s_0, ..., s_{l - t2}`, monic with `s_0 != 0`.
    pub s_coeffs: Vec<Element>,
    pub t1: usize,
    pub t2: usize,
    pub beta: Element,
}

impl ConditionMatrixSpec {
    pub fn d(&self) -> usize {
        self.t1 + self.t2
    }

    fn validate(&self, field: &FieldDesc) -> Result<(), ConstructionError> {
        if self.t1 == 0 || self.t2 == 0 {
            return Err(ConstructionError::DegenerateSplit);
        }
        let one = field.one();
        if self.r_coeffs.last() != Some(&one) || self.s_coeffs.last() != Some(&one) {
            return Err(ConstructionError::ParamsOutOfRange("r and s must be monic".into()));
        }
        if self.s_coeffs[0].is_zero() {
            return Err(ConstructionError::ParamsOutOfRange("s must have a nonzero constant term".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Entry {
    Zero,
    /// `r_i`
    R(usize),
    /// `s_i · β^j`
    S(usize, usize),
}

/// Row `i < t1` carries `r_{m-d+j-i}` in column `j` (with `m - d = deg r - t2`);
/// row `t1 + i` carries `s_{j-i} β^j` for `j >= i`.
fn entry(deg_r: usize, deg_s: usize, t1: usize, t2: usize, row: usize, col: usize) -> Entry {
    if row < t1 {
        let idx = deg_r as isize - t2 as isize + col as isize - row as isize;
        if (0..=deg_r as isize).contains(&idx) {
            Entry::R(idx as usize)
        } else {
            Entry::Zero
        }
    } else {
        let i = row - t1;
        if col >= i && col - i <= deg_s {
            Entry::S(col - i, col)
        } else {
            Entry::Zero
        }
    }
}

pub fn condition_matrix(spec: &ConditionMatrixSpec, field: &FieldDesc) -> Result<Matrix, ConstructionError> {
    spec.validate(field)?;
    let d = spec.d();
    let (deg_r, deg_s) = (spec.r_coeffs.len() - 1, spec.s_coeffs.len() - 1);
    let rows = (0..d)
        .map(|row| {
            (0..d)
                .map(|col| match entry(deg_r, deg_s, spec.t1, spec.t2, row, col) {
                    Entry::Zero => field.zero(),
                    Entry::R(i) => spec.r_coeffs[i].clone(),
                    Entry::S(i, j) => field.mul(&spec.s_coeffs[i], &field.pow_u64(&spec.beta, j as u64)),
                })
                .collect()
        })
        .collect();
    Ok(Matrix::from_rows(d, rows)?)
}

/// `φ(β)`: the determinant of the condition matrix.
pub fn varphi(spec: &ConditionMatrixSpec, field: &FieldDesc) -> Result<Element, ConstructionError> {
    let m = condition_matrix(spec, field)?;
    Ok(linalg::determinant(field, &m)?)
}

/// `φ` as an integer polynomial in β (ascending coefficients), for integer
/// `r` and `s`, by the permutation expansion. Each entry is a monomial in β,
/// so every permutation contributes a single monomial.
pub fn varphi_integer_poly(
    r: &[BigInt],
    s: &[BigInt],
    t1: usize,
    t2: usize,
) -> Result<Vec<BigInt>, ConstructionError> {
    if t1 == 0 || t2 == 0 {
        return Err(ConstructionError::DegenerateSplit);
    }
    if r.is_empty() || s.is_empty() {
        return Err(ConstructionError::ParamsOutOfRange("r and s must be nonzero polynomials".into()));
    }
    let d = t1 + t2;
    let (deg_r, deg_s) = (r.len() - 1, s.len() - 1);
    let max_power = d * d;
    let mut out = vec![BigInt::zero(); max_power + 1];
    for perm in (0..d).permutations(d) {
        let mut coeff = BigInt::from(1);
        let mut power = 0;
        for (row, &col) in perm.iter().enumerate() {
            match entry(deg_r, deg_s, t1, t2, row, col) {
                Entry::Zero => {
                    coeff = BigInt::zero();
                    break;
                }
                Entry::R(i) => coeff *= &r[i],
                Entry::S(i, j) => {
                    coeff *= &s[i];
                    power += j;
                }
            }
        }
        if coeff.is_zero() {
            continue;
        }
        let inversions = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        if inversions % 2 == 1 {
            coeff = -coeff;
        }
        out[power] += coeff;
    }
    while out.len() > 1 && out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    Ok(out)
}

/// Monic polynomial with the given roots, ascending coefficients.
pub fn poly_from_roots(field: &FieldDesc, roots: &[Element]) -> Vec<Element> {
    let mut coeffs = vec![field.one()];
    for root in roots {
        let neg = field.neg(root);
        let mut next = vec![field.zero(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] = field.add(&next[i + 1], c);
            next[i] = field.add(&next[i], &field.mul(c, &neg));
        }
        coeffs = next;
    }
    coeffs
}

/// The condition spec for the subset using `e1_points` from `F1` and
/// `e2_points` from `F2`.
pub fn condition_spec_for_subset(
    params: &BiUniformParams,
    field: &FieldDesc,
    e1_points: &[Element],
    e2_points: &[Element],
    beta: &Element,
) -> Result<ConditionMatrixSpec, ConstructionError> {
    let (a, b) = (e1_points.len(), e2_points.len());
    if a > params.m() || b > params.l() || a + b != params.k() {
        return Err(ConstructionError::ParamsOutOfRange(format!(
            "subset with split ({a}, {b}) is not a constrained {}-subset",
            params.k()
        )));
    }
    Ok(ConditionMatrixSpec {
        r_coeffs: poly_from_roots(field, e1_points),
        s_coeffs: poly_from_roots(field, e2_points),
        t1: params.m() - a,
        t2: params.l() - b,
        beta: beta.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(f: &FieldDesc, v: &[i64]) -> Vec<Element> {
        v.iter().map(|&x| f.from_i64(x)).collect()
    }

    #[test]
    fn two_by_two_layout() {
        // m = 3, t1 = t2 = 1: r has degree 2, s degree l - 1 = 2
        let f = FieldDesc::prime_u64(101).unwrap();
        let spec = ConditionMatrixSpec {
            r_coeffs: el(&f, &[5, 7, 1]),
            s_coeffs: el(&f, &[3, 9, 1]),
            t1: 1,
            t2: 1,
            beta: f.from_u64(10),
        };
        let m = condition_matrix(&spec, &f).unwrap();
        // [[r_{m-2}, r_{m-1}], [s_0, s_1 β]] = [[7, 1], [3, 90]]
        assert_eq!(m.to_rows(), vec![el(&f, &[7, 1]), el(&f, &[3, 90])]);
        // r_{m-2} s_1 β - r_{m-1} s_0 = 630 - 3
        assert_eq!(varphi(&spec, &f).unwrap(), f.from_u64(627 % 101));
        let ints = varphi_integer_poly(
            &[5.into(), 7.into(), 1.into()],
            &[3.into(), 9.into(), 1.into()],
            1,
            1,
        )
        .unwrap();
        assert_eq!(ints, vec![BigInt::from(-3), BigInt::from(63)]);
    }

    #[test]
    fn all_roots_one() {
        // r = (x-1)^2, s = (y-1)^2 with m = l = 3, β = 1: 3 = (-2)(-2) - 1·1
        let f = FieldDesc::prime_u64(7).unwrap();
        let spec = ConditionMatrixSpec {
            r_coeffs: el(&f, &[1, -2, 1]),
            s_coeffs: el(&f, &[1, -2, 1]),
            t1: 1,
            t2: 1,
            beta: f.one(),
        };
        assert_eq!(varphi(&spec, &f).unwrap(), f.from_u64(3));
    }

    #[test]
    fn displayed_last_rows() {
        // d = 3, t1 = 1, t2 = 2; r degree m - 1, s degree l - 2
        let f = FieldDesc::prime_u64(101).unwrap();
        let spec = ConditionMatrixSpec {
            r_coeffs: el(&f, &[2, 3, 4, 1]), // m = 4
            s_coeffs: el(&f, &[5, 6, 1]),    // l = 4
            t1: 1,
            t2: 2,
            beta: f.from_u64(2),
        };
        let m = condition_matrix(&spec, &f).unwrap();
        // top: r_{m-3}, r_{m-2}, r_{m-1} = r_1, r_2, r_3
        assert_eq!(m.row(0), el(&f, &[3, 4, 1]).as_slice());
        // s_0, s_1 β, s_2 β^2
        assert_eq!(m.row(1), el(&f, &[5, 12, 4]).as_slice());
        // 0, s_0 β, s_1 β^2 = s_{t1} β^{d-1}
        assert_eq!(m.row(2), el(&f, &[0, 10, 24]).as_slice());
    }

    #[test]
    fn vacuous_split_rejected() {
        let f = FieldDesc::prime_u64(7).unwrap();
        let spec = ConditionMatrixSpec {
            r_coeffs: el(&f, &[1, 1]),
            s_coeffs: el(&f, &[1, 1]),
            t1: 0,
            t2: 2,
            beta: f.one(),
        };
        assert!(matches!(condition_matrix(&spec, &f), Err(ConstructionError::DegenerateSplit)));
        assert!(matches!(varphi_integer_poly(&[1.into()], &[1.into()], 2, 0), Err(ConstructionError::DegenerateSplit)));
    }

    #[test]
    fn roots_polynomial() {
        let f = FieldDesc::prime_u64(11).unwrap();
        // (x - 2)(x - 3) = x^2 - 5x + 6
        assert_eq!(poly_from_roots(&f, &el(&f, &[2, 3])), el(&f, &[6, -5, 1]));
    }
}
