use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde_json::{json, Value};

use biuniform::constructions::{
    auto_construct, construct_d2_squares, construct_ext_field, construct_prime_field, AutoOptions, BiUniformParams,
    Representation,
};
use biuniform::matroid::{check_feasibility, dual_representation, verify_representation, DualOptions, Verdict, VerifyOptions};
use biuniform::sharing::{self, ShareBundle};
use biuniform::FieldDesc;

fn all_methods() -> Vec<Representation> {
    let p = BiUniformParams::new(4, 3, 3, 5, 5).unwrap();
    let d2 = construct_d2_squares(&p, &BigUint::from(11u32)).unwrap();
    let dual = dual_representation(&d2, &DualOptions::default()).unwrap();
    vec![
        d2,
        dual,
        construct_ext_field(&p, &BigUint::from(7u32), 2).unwrap(),
        construct_prime_field(&BiUniformParams::new(3, 3, 2, 3, 3).unwrap()).unwrap().1,
        auto_construct(&BiUniformParams::new(3, 3, 3, 3, 3).unwrap(), AutoOptions::default()).unwrap(),
        auto_construct(&BiUniformParams::new(4, 2, 2, 4, 4).unwrap(), AutoOptions::default()).unwrap(),
    ]
}

#[test]
fn representations_round_trip() {
    for rep in all_methods() {
        let text = rep.to_json();
        let back = Representation::from_json(&text).unwrap();
        assert_eq!(back, rep);
        assert_eq!(back.to_json(), text);
        let v: Value = serde_json::from_str(&text).unwrap();
        for key in ["field", "params", "split", "matrix", "provenance"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["split"], rep.params().n1());
    }
}

#[test]
fn document_layout() {
    let p = BiUniformParams::new(4, 3, 3, 5, 5).unwrap();
    let rep = construct_d2_squares(&p, &BigUint::from(11u32)).unwrap();
    let v: Value = serde_json::from_str(&rep.to_json()).unwrap();
    assert_eq!(v["field"], json!({ "p": "11", "s": 1, "modulus": null }));
    assert_eq!(v["params"], json!({ "k": 4, "m": 3, "l": 3, "n1": 5, "n2": 5 }));
    assert_eq!(v["provenance"]["method"], "d2");
    assert_eq!(v["matrix"].as_array().unwrap().len(), 4);
    assert_eq!(v["matrix"][0][0], json!(["1"]));
}

#[test]
fn large_primes_stay_exact() {
    let field = FieldDesc::prime("340282366920938463463374607431768211297".parse().unwrap()).unwrap();
    let text = serde_json::to_string(&field).unwrap();
    assert!(text.contains("\"340282366920938463463374607431768211297\""));
    assert_eq!(serde_json::from_str::<FieldDesc>(&text).unwrap(), field);
    let e = field.from_biguint("340282366920938463463374607431768211296".parse().unwrap());
    let back: biuniform::Element = serde_json::from_str(&serde_json::to_string(&e).unwrap()).unwrap();
    assert_eq!(back, e);
}

#[test]
fn malformed_documents_are_rejected() {
    let p = BiUniformParams::new(4, 3, 3, 5, 5).unwrap();
    let rep = construct_d2_squares(&p, &BigUint::from(11u32)).unwrap();
    let good: Value = serde_json::from_str(&rep.to_json()).unwrap();
    let mutate = |f: &dyn Fn(&mut Value)| {
        let mut v = good.clone();
        f(&mut v);
        Representation::from_json(&v.to_string())
    };
    assert!(mutate(&|v| v["split"] = json!(4)).is_err());
    assert!(mutate(&|v| v["matrix"][0][0] = json!(["11"])).is_err());
    assert!(mutate(&|v| v["field"]["p"] = json!("12")).is_err());
    assert!(mutate(&|v| v["params"]["k"] = json!(7)).is_err());
    assert!(mutate(&|v| v["matrix"][0] = json!([["1"]])).is_err());
    assert!(mutate(&|v| v["field"] = json!({ "p": "7", "s": 2, "modulus": ["0", "0", "1"] })).is_err());
    assert!(mutate(&|_| {}).is_ok());
}

#[test]
fn verdicts_bundles_and_feasibility_round_trip() {
    let p = BiUniformParams::new(4, 3, 3, 5, 5).unwrap();
    let mut rep = construct_d2_squares(&p, &BigUint::from(11u32)).unwrap();
    let verdict = verify_representation(&rep, &VerifyOptions::default()).unwrap();
    let back: Verdict = serde_json::from_str(&serde_json::to_string(&verdict).unwrap()).unwrap();
    assert_eq!(back, verdict);

    rep.set_verified(true);
    let bundle = sharing::split(&rep, 3, &rep.field().from_u64(2), &mut ChaCha20Rng::seed_from_u64(5)).unwrap();
    let text = serde_json::to_string(&bundle).unwrap();
    assert_eq!(serde_json::from_str::<ShareBundle>(&text).unwrap(), bundle);

    let f = check_feasibility(&BiUniformParams::new(4, 3, 3, 10, 10).unwrap(), &BigUint::from(4u32));
    let v = serde_json::to_value(&f).unwrap();
    assert_eq!(v["verdict"], "not_representable");
    assert_eq!(v["reasons"][0]["kind"], "small_field");
}
