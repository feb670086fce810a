//! Dense univariate polynomials over a prime field, used to find and check
//! extension-field moduli.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::primes::prime_factors;

/// Polynomial over `F_p`, ascending powers, no trailing zero coefficients.
/// The zero polynomial has no coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimePoly {
    coeffs: Vec<BigUint>,
}

impl PrimePoly {
    pub fn from_coeffs(coeffs: Vec<BigUint>, p: &BigUint) -> Self {
        let mut coeffs: Vec<BigUint> = coeffs.into_iter().map(|c| c % p).collect();
        trim(&mut coeffs);
        PrimePoly { coeffs }
    }

    pub fn from_u64s(coeffs: &[u64], p: &BigUint) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigUint::from(c)).collect(), p)
    }

    pub fn zero() -> Self {
        PrimePoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PrimePoly { coeffs: vec![BigUint::one()] }
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        PrimePoly { coeffs: vec![BigUint::zero(), BigUint::one()] }
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn sub(&self, other: &Self, p: &BigUint) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigUint::zero();
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&zero);
                let b = other.coeffs.get(i).unwrap_or(&zero);
                (a + p - b) % p
            })
            .collect();
        Self::from_coeffs(coeffs, p)
    }

    pub fn mul(&self, other: &Self, p: &BigUint) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigUint::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out, p)
    }

    /// Remainder of division by a nonzero `divisor`.
    pub fn rem(&self, divisor: &Self, p: &BigUint) -> Self {
        self.div_rem(divisor, p).1
    }

    pub fn div_rem(&self, divisor: &Self, p: &BigUint) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = mod_inverse(&divisor.coeffs[dd], p);
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigUint::zero(); rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = (&rem[top] * &lead_inv) % p;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                let slot = &mut rem[top - dd + i];
                *slot = (&*slot + p - (&c * d) % p) % p;
            }
            quot[top - dd] = c;
        }
        rem.truncate(dd);
        (Self::from_coeffs(quot, p), Self::from_coeffs(rem, p))
    }

    pub fn monic(&self, p: &BigUint) -> Self {
        match self.coeffs.last() {
            None => Self::zero(),
            Some(lead) => {
                let inv = mod_inverse(lead, p);
                Self::from_coeffs(self.coeffs.iter().map(|c| c * &inv).collect(), p)
            }
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self, p: &BigUint) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b, p);
            a = b;
            b = r;
        }
        a.monic(p)
    }

    /// `self^e mod f`.
    pub fn pow_mod(&self, e: &BigUint, f: &Self, p: &BigUint) -> Self {
        let mut result = Self::one().rem(f, p);
        let base = self.rem(f, p);
        for i in (0..e.bits()).rev() {
            result = result.mul(&result, p).rem(f, p);
            if e.bit(i) {
                result = result.mul(&base, p).rem(f, p);
            }
        }
        result
    }

    pub fn eval(&self, x: &BigUint, p: &BigUint) -> BigUint {
        self.coeffs.iter().rev().fold(BigUint::zero(), |acc, c| (acc * x + c) % p)
    }
}

fn trim(coeffs: &mut Vec<BigUint>) {
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
}

fn mod_inverse(a: &BigUint, p: &BigUint) -> BigUint {
    a.modpow(&(p - 2u32), p)
}

/// Rabin's test: a monic `f` of degree `n` over `F_p` is irreducible iff
/// `x^(p^n) = x mod f` and `gcd(x^(p^(n/r)) - x, f) = 1` for each prime `r | n`.
pub fn is_irreducible(f: &PrimePoly, p: &BigUint) -> bool {
    let n = match f.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let f = f.monic(p);
    let x = PrimePoly::x().rem(&f, p);
    // frob[i] = x^(p^i) mod f
    let mut frob = Vec::with_capacity(n + 1);
    frob.push(x.clone());
    for i in 0..n {
        let next = frob[i].pow_mod(p, &f, p);
        frob.push(next);
    }
    if frob[n] != x {
        return false;
    }
    prime_factors(n as u64).into_iter().all(|r| {
        let h = frob[n / r as usize].sub(&x, p);
        h.gcd(&f, p).degree() == Some(0)
    })
}

/// First monic irreducible polynomial of degree `s >= 2` over `F_p`,
/// enumerating the lower coefficients as base-`p` digits of 0, 1, 2, ...
/// (constant term least significant).
pub fn find_irreducible(p: &BigUint, s: usize) -> PrimePoly {
    assert!(s >= 2, "irreducible search needs degree at least 2");
    let mut index = BigUint::zero();
    loop {
        let mut coeffs = Vec::with_capacity(s + 1);
        let mut rest = index.clone();
        for _ in 0..s {
            let (q, r) = rest.div_rem(p);
            coeffs.push(r);
            rest = q;
        }
        coeffs.push(BigUint::one());
        let f = PrimePoly { coeffs };
        // a root at 0 makes f reducible; skip cheaply before Rabin
        if !f.coeffs[0].is_zero() && is_irreducible(&f, p) {
            return f;
        }
        index += 1u32;
    }
}
