//! Primality testing and prime search on arbitrary-precision naturals.
//!
//! Below 2^64 Miller-Rabin with the first twelve prime bases is exact. Above
//! that, 40 rounds with bases drawn from a ChaCha stream seeded by the
//! candidate itself, so results are reproducible; the error probability for
//! a composite is below 4^-40.

use num_bigint::{BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

const SMALL_PRIMES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const RANDOM_ROUNDS: usize = 40;

pub fn is_prime(n: &BigUint) -> bool {
    if n < &BigUint::from(2u32) {
        return false;
    }
    for &sp in &SMALL_PRIMES {
        if n == &BigUint::from(sp) {
            return true;
        }
        if (n % sp).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let twos = n_minus_1.trailing_zeros().expect("n - 1 is nonzero");
    let odd = &n_minus_1 >> twos;

    let passes = |a: &BigUint| -> bool {
        let mut x = a.modpow(&odd, n);
        if x == one || x == n_minus_1 {
            return true;
        }
        for _ in 1..twos {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                return true;
            }
            if x == one {
                return false;
            }
        }
        false
    };

    if n.bits() <= 64 {
        return SMALL_PRIMES.iter().all(|&a| passes(&BigUint::from(a)));
    }
    let mut seed = [0u8; 32];
    for (slot, byte) in seed.iter_mut().zip(n.to_bytes_le()) {
        *slot = byte;
    }
    let mut rng = ChaCha20Rng::from_seed(seed);
    let two = BigUint::from(2u32);
    (0..RANDOM_ROUNDS).all(|_| passes(&rng.gen_biguint_range(&two, &n_minus_1)))
}

/// Smallest prime strictly greater than `lower`.
pub fn next_prime(lower: &BigUint) -> BigUint {
    let two = BigUint::from(2u32);
    if lower < &two {
        return two;
    }
    let mut candidate = lower + 1u32;
    if candidate.is_even() && candidate != two {
        candidate += 1u32;
    }
    while !is_prime(&candidate) {
        candidate += 2u32;
    }
    candidate
}

/// Smallest prime `>= lower`.
pub fn prime_at_least(lower: &BigUint) -> BigUint {
    if is_prime(lower) {
        lower.clone()
    } else {
        next_prime(lower)
    }
}

/// Distinct prime factors of a small natural, ascending.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
