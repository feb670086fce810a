use num_bigint::BigUint;

use super::{
    construct_d2_squares, construct_ext_field, construct_prime_field, eval_code_generator, prime_field_plan,
    uniform_representation, BiUniformParams, ConstructionError, EvalCodeSpec, Representation,
};
use crate::fields::{next_prime, FieldDesc};
use crate::matroid::{verify_representation, VerifyOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Preference {
    #[default]
    SmallestField,
    PrimeField,
    ExtField,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AutoOptions {
    pub preference: Preference,
    /// Verify exhaustively when the constrained-subset count is at most this.
    pub budget: u64,
}

impl Default for AutoOptions {
    fn default() -> Self {
        AutoOptions { preference: Preference::SmallestField, budget: VerifyOptions::DEFAULT_BUDGET }
    }
}

/// Smallest odd prime `q` with `(q - 1)/2 >= max_class`.
pub fn smallest_d2_prime(max_class: usize) -> BigUint {
    let lower = BigUint::from(2 * max_class);
    next_prime(&lower)
}

/// Smallest admissible extension-field parameters: `q0` the smallest
/// prime above the larger class and `s = d(d-1)/2 + 1`.
pub fn smallest_ext_params(params: &BiUniformParams) -> (BigUint, usize) {
    let d = params.d();
    let q0 = next_prime(&BigUint::from(params.max_class()));
    (q0, d * d.saturating_sub(1) / 2 + 1)
}

/// `d <= 1`: the condition matrix is vacuous, so any nonzero β works. Points
/// `1..=n` over the smallest prime above `max(n1, n2) + 1`.
fn low_overlap(params: &BiUniformParams) -> Result<Representation, ConstructionError> {
    let p = next_prime(&BigUint::from(params.max_class() + 1));
    let field = FieldDesc::prime(p)?;
    let spec = EvalCodeSpec {
        f1_points: (1..=params.n1() as u64).map(|i| field.from_u64(i)).collect(),
        f2_points: (1..=params.n2() as u64).map(|i| field.from_u64(i)).collect(),
        beta: field.one(),
    };
    let mut rep = eval_code_generator(params, &spec, &field)?;
    rep.provenance_mut().notes.push(format!("d = {}: condition matrix vacuous, beta = 1", params.d()));
    Ok(rep)
}

/// The construction [`auto_construct`] would pick, without verification.
pub fn construct_unverified(params: &BiUniformParams, preference: Preference) -> Result<Representation, ConstructionError> {
    if !params.has_positive_subranks() {
        return Err(ConstructionError::ParamsOutOfRange("sub-ranks must be positive".into()));
    }
    if params.is_uniform() {
        return uniform_representation(params);
    }
    let d = params.d();
    if d <= 1 {
        return low_overlap(params);
    }
    let ext = || {
        let (q0, s) = smallest_ext_params(params);
        construct_ext_field(params, &q0, s)
    };
    match preference {
        Preference::SmallestField if d == 2 => construct_d2_squares(params, &smallest_d2_prime(params.max_class())),
        Preference::SmallestField => {
            let (q0, s) = smallest_ext_params(params);
            let ext_order = num_traits::pow(q0, s);
            let plan = prime_field_plan(params)?;
            if plan.p < ext_order {
                construct_prime_field(params).map(|(_, rep)| rep)
            } else {
                ext()
            }
        }
        Preference::ExtField => ext(),
        Preference::PrimeField => construct_prime_field(params).map(|(_, rep)| rep),
    }
}

/// Picks a construction for `params` and verifies the result when the
/// exhaustive check fits in `options.budget`; otherwise the result is
/// returned with `verified = false` and a note in its provenance.
pub fn auto_construct(params: &BiUniformParams, options: AutoOptions) -> Result<Representation, ConstructionError> {
    let mut rep = construct_unverified(params, options.preference)?;
    let count = params.constrained_subset_count();
    if count <= options.budget {
        let verdict = verify_representation(&rep, &VerifyOptions { budget: options.budget, force: false })?;
        if !verdict.ok {
            return Err(ConstructionError::VerificationFailed(Box::new(verdict)));
        }
        rep.set_verified(true);
    } else {
        rep.provenance_mut().notes.push(format!("not exhaustively verified: {count} subsets exceed budget {}", options.budget));
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::Method;

    #[test]
    fn d2_picks_f11() {
        let p = BiUniformParams::new(4, 3, 3, 5, 5).unwrap();
        let rep = auto_construct(&p, AutoOptions::default()).unwrap();
        assert_eq!(rep.provenance().method, Method::D2);
        assert_eq!(rep.field().characteristic(), &BigUint::from(11u32));
        assert!(rep.is_verified());
    }

    #[test]
    fn d0_uses_f7() {
        let p = BiUniformParams::new(4, 2, 2, 4, 4).unwrap();
        let rep = auto_construct(&p, AutoOptions::default()).unwrap();
        assert_eq!(rep.provenance().method, Method::EvalCode);
        assert_eq!(rep.field().characteristic(), &BigUint::from(7u32));
        assert!(rep.is_verified());
    }

    #[test]
    fn uniform_degenerate() {
        let p = BiUniformParams::new(3, 3, 3, 3, 3).unwrap();
        let rep = auto_construct(&p, AutoOptions::default()).unwrap();
        assert_eq!(rep.provenance().method, Method::Uniform);
        assert!(!rep.provenance().notes.is_empty());
        assert!(rep.is_verified());
    }

    #[test]
    fn budget_flag() {
        let p = BiUniformParams::new(4, 3, 3, 5, 5).unwrap();
        let rep = auto_construct(&p, AutoOptions { budget: 10, ..AutoOptions::default() }).unwrap();
        assert!(!rep.is_verified());
        assert!(rep.provenance().notes.iter().any(|n| n.contains("not exhaustively verified")));
    }

    #[test]
    fn preferences() {
        let p = BiUniformParams::new(4, 3, 3, 4, 4).unwrap();
        let ext = auto_construct(&p, AutoOptions { preference: Preference::ExtField, ..Default::default() }).unwrap();
        assert_eq!(ext.provenance().method, Method::Ext);
        let prime = auto_construct(&p, AutoOptions { preference: Preference::PrimeField, ..Default::default() }).unwrap();
        assert_eq!(prime.provenance().method, Method::Prime);
        let d3 = BiUniformParams::new(5, 4, 4, 5, 5).unwrap();
        let small = auto_construct(&d3, AutoOptions::default()).unwrap();
        assert_eq!(small.provenance().method, Method::Ext);
    }

    #[test]
    fn smallest_parameters() {
        assert_eq!(smallest_d2_prime(5), BigUint::from(11u32));
        assert_eq!(smallest_d2_prime(3), BigUint::from(7u32));
        assert_eq!(smallest_d2_prime(6), BigUint::from(13u32));
        let p = BiUniformParams::new(5, 4, 4, 5, 5).unwrap();
        assert_eq!(smallest_ext_params(&p), (BigUint::from(7u32), 4));
    }
}
