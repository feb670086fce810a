//! Exact arithmetic in prime fields `F_p` and their extensions `F_p[x]/(f)`.
//!
//! Elements are plain coefficient vectors; every operation goes through the
//! [`FieldDesc`] that owns them. Residues are arbitrary precision, so prime
//! fields well beyond the machine word (as needed by the prime-field
//! construction) work without special casing.

mod poly;
mod primes;
mod residues;

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub use poly::{find_irreducible, is_irreducible, PrimePoly};
pub use primes::{is_prime, next_prime, prime_at_least};
pub use residues::{find_eta, is_square, smallest_nonsquare};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element does not belong to this field")]
    FieldMismatch,
    #[error("operation not applicable: {0}")]
    NotApplicable(&'static str),
    #[error("zero input where a nonzero element is required")]
    ZeroInput,
    #[error("{0} is not prime")]
    NotPrime(BigUint),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("malformed element: {0}")]
    Malformed(String),
}

/// A finite field `F_{p^s}`: the characteristic, the extension degree and,
/// for `s > 1`, a monic irreducible modulus in ascending-power order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldDesc {
    p: BigUint,
    s: usize,
    modulus: Option<Vec<BigUint>>,
}

/// Canonical coefficient vector, ascending powers, every residue in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    coeffs: Vec<BigUint>,
}

impl Element {
    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Builds an element from raw coefficients. The result is only meaningful
    /// once checked against a field with [`FieldDesc::contains`].
    pub fn from_raw(coeffs: Vec<BigUint>) -> Self {
        Element { coeffs }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.len() == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let term = match (i, c.is_one()) {
                (0, _) => c.to_string(),
                (1, true) => "x".to_string(),
                (1, false) => format!("{c}x"),
                (_, true) => format!("x^{i}"),
                (_, false) => format!("{c}x^{i}"),
            };
            terms.push(term);
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let digits: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        digits.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let digits = Vec::<String>::deserialize(deserializer)?;
        let coeffs = digits
            .iter()
            .map(|d| parse_decimal(d).map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Element { coeffs })
    }
}

pub(crate) fn parse_decimal(s: &str) -> Result<BigUint, FieldError> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(FieldError::Malformed(format!("not a decimal natural: {s:?}")));
    }
    BigUint::parse_bytes(s.as_bytes(), 10)
        .ok_or_else(|| FieldError::Malformed(format!("not a decimal natural: {s:?}")))
}

/// Operations accepted by [`FieldDesc::apply`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
    Pow(BigUint),
}

impl FieldDesc {
    /// The prime field `F_p`.
    pub fn prime(p: BigUint) -> Result<Self, FieldError> {
        if !is_prime(&p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(FieldDesc { p, s: 1, modulus: None })
    }

    pub fn prime_u64(p: u64) -> Result<Self, FieldError> {
        Self::prime(BigUint::from(p))
    }

    /// `F_p[x]/(f)` for a monic irreducible `f` of degree at least 2.
    pub fn extension(p: BigUint, modulus: &PrimePoly) -> Result<Self, FieldError> {
        if !is_prime(&p) {
            return Err(FieldError::NotPrime(p));
        }
        let s = match modulus.degree() {
            Some(deg) if deg >= 2 => deg,
            _ => return Err(FieldError::InvalidModulus("degree must be at least 2".into())),
        };
        if modulus.coeffs().iter().any(|c| c >= &p) {
            return Err(FieldError::InvalidModulus("coefficient out of range".into()));
        }
        if !modulus.is_monic() {
            return Err(FieldError::InvalidModulus("modulus must be monic".into()));
        }
        if !is_irreducible(modulus, &p) {
            return Err(FieldError::InvalidModulus("modulus is reducible".into()));
        }
        Ok(FieldDesc { p, s, modulus: Some(modulus.coeffs().to_vec()) })
    }

    /// `F_{p^s}` with the first irreducible modulus found by [`find_irreducible`].
    pub fn with_degree(p: BigUint, s: usize) -> Result<Self, FieldError> {
        if s == 1 {
            return Self::prime(p);
        }
        if s == 0 {
            return Err(FieldError::InvalidModulus("degree must be positive".into()));
        }
        if !is_prime(&p) {
            return Err(FieldError::NotPrime(p));
        }
        let f = find_irreducible(&p, s);
        Ok(FieldDesc { p, s, modulus: Some(f.coeffs().to_vec()) })
    }

    pub fn characteristic(&self) -> &BigUint {
        &self.p
    }

    pub fn degree(&self) -> usize {
        self.s
    }

    pub fn modulus(&self) -> Option<&[BigUint]> {
        self.modulus.as_deref()
    }

    /// Number of elements, `p^s`.
    pub fn order(&self) -> BigUint {
        num_traits::pow(self.p.clone(), self.s)
    }

    pub fn is_prime_field(&self) -> bool {
        self.s == 1
    }

    pub fn zero(&self) -> Element {
        Element { coeffs: vec![BigUint::zero(); self.s] }
    }

    pub fn one(&self) -> Element {
        self.from_biguint(BigUint::one())
    }

    /// Embeds a natural number through the prime subfield.
    pub fn from_biguint(&self, n: BigUint) -> Element {
        let mut coeffs = vec![BigUint::zero(); self.s];
        coeffs[0] = n % &self.p;
        Element { coeffs }
    }

    pub fn from_u64(&self, n: u64) -> Element {
        self.from_biguint(BigUint::from(n))
    }

    /// Embeds a signed integer through the prime subfield.
    pub fn from_bigint(&self, n: &BigInt) -> Element {
        let p = BigInt::from_biguint(Sign::Plus, self.p.clone());
        let r = n.mod_floor(&p);
        self.from_biguint(r.to_biguint().expect("mod_floor is non-negative"))
    }

    pub fn from_i64(&self, n: i64) -> Element {
        self.from_bigint(&BigInt::from(n))
    }

    /// Validates raw coefficients and wraps them as an element.
    pub fn element(&self, coeffs: Vec<BigUint>) -> Result<Element, FieldError> {
        let e = Element { coeffs };
        if self.contains(&e) {
            Ok(e)
        } else {
            Err(FieldError::FieldMismatch)
        }
    }

    pub fn contains(&self, e: &Element) -> bool {
        e.coeffs.len() == self.s && e.coeffs.iter().all(|c| c < &self.p)
    }

    /// The element whose base-`p` digits (least significant first) are the
    /// coefficients of `index`. Enumerating `0..order()` walks the field in
    /// canonical ascending order.
    pub fn element_from_index(&self, index: &BigUint) -> Result<Element, FieldError> {
        if index >= &self.order() {
            return Err(FieldError::Malformed(format!("index {index} exceeds field order")));
        }
        let mut rest = index.clone();
        let mut coeffs = Vec::with_capacity(self.s);
        for _ in 0..self.s {
            let (q, r) = rest.div_rem(&self.p);
            coeffs.push(r);
            rest = q;
        }
        Ok(Element { coeffs })
    }

    /// The class of `x` in `F_p[x]/(f)`; its minimal polynomial is the modulus.
    pub fn generator(&self) -> Option<Element> {
        if self.s < 2 {
            return None;
        }
        let mut coeffs = vec![BigUint::zero(); self.s];
        coeffs[1] = BigUint::one();
        Some(Element { coeffs })
    }

    /// Uniformly random element.
    pub fn random<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> Element {
        use num_bigint::RandBigInt;
        Element { coeffs: (0..self.s).map(|_| rng.gen_biguint_below(&self.p)).collect() }
    }

    /// Returns the residue of a prime-field element as a machine word, if it fits.
    pub fn to_u64(&self, e: &Element) -> Option<u64> {
        if e.coeffs[1..].iter().any(|c| !c.is_zero()) {
            return None;
        }
        e.coeffs[0].to_u64()
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| {
                let s = x + y;
                if s >= self.p {
                    s - &self.p
                } else {
                    s
                }
            })
            .collect();
        Element { coeffs }
    }

    pub fn neg(&self, a: &Element) -> Element {
        let coeffs = a
            .coeffs
            .iter()
            .map(|x| if x.is_zero() { BigUint::zero() } else { &self.p - x })
            .collect();
        Element { coeffs }
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Element {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| if x >= y { x - y } else { &self.p + x - y })
            .collect();
        Element { coeffs }
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        if self.s == 1 {
            return Element { coeffs: vec![(&a.coeffs[0] * &b.coeffs[0]) % &self.p] };
        }
        let modulus = self.modulus.as_ref().expect("extension field has a modulus");
        let mut prod = vec![BigUint::zero(); 2 * self.s - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        // x^s = -(f_0 + ... + f_{s-1} x^{s-1}) for monic f
        for top in (self.s..prod.len()).rev() {
            let lead = std::mem::take(&mut prod[top]) % &self.p;
            if lead.is_zero() {
                continue;
            }
            for (i, f) in modulus[..self.s].iter().enumerate() {
                let t = (&lead * f) % &self.p;
                let slot = &mut prod[top - self.s + i];
                *slot = (&*slot + &self.p - t) % &self.p;
            }
        }
        prod.truncate(self.s);
        for c in prod.iter_mut() {
            *c %= &self.p;
        }
        Element { coeffs: prod }
    }

    pub fn pow(&self, a: &Element, e: &BigUint) -> Element {
        let mut result = self.one();
        let bits = e.bits();
        for i in (0..bits).rev() {
            result = self.mul(&result, &result);
            if e.bit(i) {
                result = self.mul(&result, a);
            }
        }
        result
    }

    pub fn pow_u64(&self, a: &Element, e: u64) -> Element {
        self.pow(a, &BigUint::from(e))
    }

    pub fn inv(&self, a: &Element) -> Result<Element, FieldError> {
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if self.s == 1 {
            let e = &self.p - 2u32;
            return Ok(Element { coeffs: vec![a.coeffs[0].modpow(&e, &self.p)] });
        }
        let e = self.order() - 2u32;
        Ok(self.pow(a, &e))
    }

    pub fn div(&self, a: &Element, b: &Element) -> Result<Element, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Checked entry point: validates field membership of every operand and
    /// dispatches on `op`. Unary operations ignore `b`.
    pub fn apply(&self, op: &FieldOp, a: &Element, b: Option<&Element>) -> Result<Element, FieldError> {
        if !self.contains(a) {
            return Err(FieldError::FieldMismatch);
        }
        let binary = |b: Option<&Element>| -> Result<Element, FieldError> {
            let b = b.ok_or(FieldError::NotApplicable("binary operation needs two operands"))?;
            if self.contains(b) {
                Ok(b.clone())
            } else {
                Err(FieldError::FieldMismatch)
            }
        };
        match op {
            FieldOp::Add => Ok(self.add(a, &binary(b)?)),
            FieldOp::Sub => Ok(self.sub(a, &binary(b)?)),
            FieldOp::Mul => Ok(self.mul(a, &binary(b)?)),
            FieldOp::Div => self.div(a, &binary(b)?),
            FieldOp::Neg => Ok(self.neg(a)),
            FieldOp::Inv => self.inv(a),
            FieldOp::Pow(e) => Ok(self.pow(a, e)),
        }
    }

    /// Parses `"3"` or comma separated coefficients `"1,0,2"` (ascending powers).
    pub fn parse_element(&self, text: &str) -> Result<Element, FieldError> {
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        if parts.len() == 1 && self.s > 1 {
            return Ok(self.from_biguint(parse_decimal(parts[0])?));
        }
        if parts.len() != self.s {
            return Err(FieldError::Malformed(format!(
                "expected {} coefficients, got {}",
                self.s,
                parts.len()
            )));
        }
        let coeffs = parts.iter().map(|t| parse_decimal(t)).collect::<Result<Vec<_>, _>>()?;
        self.element(coeffs)
    }
}

impl fmt::Display for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.modulus {
            None => write!(f, "F_{}", self.p),
            Some(m) => {
                let e = Element { coeffs: m[..self.s].to_vec() };
                write!(f, "F_{}^{} (mod x^{}+{})", self.p, self.s, self.s, e)
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
struct FieldWire {
    p: String,
    s: usize,
    modulus: Option<Vec<String>>,
}

impl Serialize for FieldDesc {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        FieldWire {
            p: self.p.to_string(),
            s: self.s,
            modulus: self.modulus.as_ref().map(|m| m.iter().map(ToString::to_string).collect()),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FieldDesc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let wire = FieldWire::deserialize(deserializer)?;
        let p = parse_decimal(&wire.p).map_err(D::Error::custom)?;
        match (wire.s, wire.modulus) {
            (1, None) => FieldDesc::prime(p).map_err(D::Error::custom),
            (s, Some(m)) if s >= 2 => {
                let coeffs = m
                    .iter()
                    .map(|c| parse_decimal(c))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(D::Error::custom)?;
                if coeffs.len() != s + 1 {
                    return Err(D::Error::custom("modulus length must be s + 1"));
                }
                let f = PrimePoly::from_coeffs(coeffs.clone(), &p);
                if f.coeffs() != coeffs.as_slice() {
                    return Err(D::Error::custom("modulus coefficients must be reduced"));
                }
                FieldDesc::extension(p, &f).map_err(D::Error::custom)
            }
            _ => Err(D::Error::custom("modulus must be present exactly when s > 1")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f49() -> FieldDesc {
        let f = PrimePoly::from_u64s(&[1, 0, 1], &BigUint::from(7u32));
        FieldDesc::extension(BigUint::from(7u32), &f).unwrap()
    }

    #[test]
    fn inverse_in_f11() {
        let f = FieldDesc::prime_u64(11).unwrap();
        assert_eq!(f.inv(&f.from_u64(3)).unwrap(), f.from_u64(4));
    }

    #[test]
    fn x_squared_is_minus_one_in_f49() {
        let f = f49();
        let x = f.generator().unwrap();
        assert_eq!(f.mul(&x, &x), f.from_u64(6));
    }

    #[test]
    fn additive_inverse() {
        for p in [2u64, 3, 5, 101] {
            let f = FieldDesc::prime_u64(p).unwrap();
            for a in 0..p {
                let a = f.from_u64(a);
                assert!(f.add(&a, &f.neg(&a)).is_zero());
            }
        }
    }

    #[test]
    fn zero_has_no_inverse() {
        let f = f49();
        assert_eq!(f.inv(&f.zero()), Err(FieldError::DivisionByZero));
        assert_eq!(f.div(&f.one(), &f.zero()), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn apply_rejects_foreign_elements() {
        let f7 = FieldDesc::prime_u64(7).unwrap();
        let f49 = f49();
        let a = f49.generator().unwrap();
        let b = f7.from_u64(3);
        assert_eq!(f7.apply(&FieldOp::Add, &a, Some(&b)), Err(FieldError::FieldMismatch));
        assert_eq!(f49.apply(&FieldOp::Mul, &a, Some(&b)), Err(FieldError::FieldMismatch));
        let e = f7.apply(&FieldOp::Pow(BigUint::from(3u32)), &b, None).unwrap();
        assert_eq!(e, f7.from_u64(6));
    }

    #[test]
    fn every_nonzero_element_of_f49_is_invertible() {
        let f = f49();
        for i in 1..49u32 {
            let a = f.element_from_index(&BigUint::from(i)).unwrap();
            let inv = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &inv), f.one());
        }
    }

    #[test]
    fn signed_embedding() {
        let f = FieldDesc::prime_u64(7).unwrap();
        assert_eq!(f.from_i64(-3), f.from_u64(4));
        assert_eq!(f.from_i64(-14), f.zero());
    }

    #[test]
    fn composite_characteristic_rejected() {
        assert!(matches!(FieldDesc::prime_u64(9), Err(FieldError::NotPrime(_))));
        let f = PrimePoly::from_u64s(&[1, 0, 1], &BigUint::from(5u32));
        // x^2 + 1 = (x - 2)(x - 3) over F_5
        assert!(matches!(
            FieldDesc::extension(BigUint::from(5u32), &f),
            Err(FieldError::InvalidModulus(_))
        ));
    }

    #[test]
    fn json_shape() {
        let f = f49();
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"{"p":"7","s":2,"modulus":["1","0","1"]}"#);
        let back: FieldDesc = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
        let p = FieldDesc::prime_u64(11).unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"p":"11","s":1,"modulus":null}"#);
        let e = f.generator().unwrap();
        assert_eq!(serde_json::to_string(&e).unwrap(), r#"["0","1"]"#);
    }

    #[test]
    fn reducible_modulus_rejected_on_parse() {
        let bad = r#"{"p":"5","s":2,"modulus":["1","0","1"]}"#;
        assert!(serde_json::from_str::<FieldDesc>(bad).is_err());
        let missing = r#"{"p":"5","s":2,"modulus":null}"#;
        assert!(serde_json::from_str::<FieldDesc>(missing).is_err());
    }

    #[test]
    fn parse_element_text() {
        let f = f49();
        assert_eq!(f.parse_element("3,1").unwrap().coeffs(), &[3u32.into(), 1u32.into()]);
        assert_eq!(f.parse_element("5").unwrap(), f.from_u64(5));
        assert!(f.parse_element("1,2,3").is_err());
        assert!(f.parse_element("7,0").is_err());
    }
}
