//! Quadratic residues in odd prime fields.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use super::{Element, FieldDesc, FieldError};

fn require_odd_prime(field: &FieldDesc) -> Result<(), FieldError> {
    if !field.is_prime_field() {
        return Err(FieldError::NotApplicable("quadratic residues need a prime field"));
    }
    if field.characteristic().is_even() {
        return Err(FieldError::NotApplicable("quadratic residues need odd characteristic"));
    }
    Ok(())
}

/// Euler's criterion: `a` is a nonzero square iff `a^((q-1)/2) = 1`.
pub fn is_square(field: &FieldDesc, a: &Element) -> Result<bool, FieldError> {
    require_odd_prime(field)?;
    if !field.contains(a) {
        return Err(FieldError::FieldMismatch);
    }
    if a.is_zero() {
        return Err(FieldError::ZeroInput);
    }
    let half = (field.characteristic() - 1u32) >> 1;
    Ok(a.coeffs()[0].modpow(&half, field.characteristic()).is_one())
}

/// Least non-square in `2, 3, ...`.
pub fn smallest_nonsquare(field: &FieldDesc) -> Result<Element, FieldError> {
    require_odd_prime(field)?;
    let mut candidate = BigUint::from(2u32);
    loop {
        let e = field.from_biguint(candidate.clone());
        if !is_square(field, &e)? {
            return Ok(e);
        }
        candidate += 1u32;
    }
}

/// `eta = (-1)^(l+m) * nu` for the least non-square `nu`, so that
/// `(-1)^(l+m) * eta = nu` is a non-square.
pub fn find_eta(field: &FieldDesc, m: usize, l: usize) -> Result<Element, FieldError> {
    let nu = smallest_nonsquare(field)?;
    if (l + m).is_multiple_of(2) {
        Ok(nu)
    } else {
        Ok(field.neg(&nu))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::is_prime;
    use std::collections::BTreeSet;

    fn field(p: u64) -> FieldDesc {
        FieldDesc::prime_u64(p).unwrap()
    }

    #[test]
    fn squares_mod_7() {
        let f = field(7);
        let squares: BTreeSet<u64> = (1..7u64).map(|y| y * y % 7).collect();
        assert_eq!(squares, BTreeSet::from([1, 2, 4]));
        assert!(is_square(&f, &f.from_u64(2)).unwrap());
        assert!(!is_square(&f, &f.from_u64(3)).unwrap());
    }

    #[test]
    fn euler_matches_enumeration_up_to_101() {
        for p in (3..=101u64).filter(|&p| is_prime(&p.into())) {
            let f = field(p);
            let squares: BTreeSet<u64> = (1..p).map(|y| y * y % p).collect();
            let euler: BTreeSet<u64> = (1..p).filter(|&a| is_square(&f, &f.from_u64(a)).unwrap()).collect();
            assert_eq!(euler, squares, "p = {p}");
            assert_eq!(euler.len() as u64, (p - 1) / 2);
            assert!(is_square(&f, &f.one()).unwrap());
        }
    }

    #[test]
    fn eta_examples() {
        let f11 = field(11);
        assert_eq!(find_eta(&f11, 3, 3).unwrap(), f11.from_u64(2));
        let f7 = field(7);
        assert_eq!(find_eta(&f7, 2, 3).unwrap(), f7.from_u64(4));
        for (m, l) in [(2, 2), (3, 2), (4, 3), (4, 4)] {
            for p in [3u64, 5, 7, 11, 13, 19] {
                let f = field(p);
                let eta = find_eta(&f, m, l).unwrap();
                let signed = if (m + l) % 2 == 0 { eta } else { f.neg(&eta) };
                assert!(!is_square(&f, &signed).unwrap());
            }
        }
    }

    #[test]
    fn errors() {
        let f2 = field(2);
        assert!(matches!(is_square(&f2, &f2.one()), Err(FieldError::NotApplicable(_))));
        let f49 = FieldDesc::with_degree(7u32.into(), 2).unwrap();
        assert!(matches!(is_square(&f49, &f49.one()), Err(FieldError::NotApplicable(_))));
        assert!(matches!(find_eta(&f2, 1, 1), Err(FieldError::NotApplicable(_))));
        let f7 = field(7);
        assert_eq!(is_square(&f7, &f7.zero()), Err(FieldError::ZeroInput));
    }
}
