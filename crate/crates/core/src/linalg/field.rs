use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// The Mersenne prime `2^61 - 1`, the default modulus.
pub const MERSENNE_61: u64 = (1 << 61) - 1;

/// Arithmetic over a field whose elements are plain values.
///
/// Implementations are cheap to clone and shareable across threads; the
/// field description (for example the modulus) lives in `self`.
pub trait Field: Clone + Send + Sync + Debug {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn element(&self, v: i64) -> Self::Elem;
    /// A random element standing in for an algebraically independent entry.
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    /// 0 for characteristic zero, otherwise the prime.
    fn characteristic(&self) -> u64;

    /// `a - b * c`, the elimination step.
    fn sub_mul(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Self::Elem {
        self.sub(a, &self.mul(b, c))
    }
}

/// Integers modulo a prime `p < 2^63`.
///
/// Multiplication by `2^61 - 1` uses the Mersenne folding reduction; other
/// moduli go through a 128-bit remainder.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 63 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub const fn mersenne61() -> Self {
        PrimeField { p: MERSENNE_61 }
    }

    pub const fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, v: u128) -> u64 {
        if self.p == MERSENNE_61 {
            let lo = (v as u64) & MERSENNE_61;
            // valid for v < 2^122, which covers products of reduced values
            let hi = (v >> 61) as u64;
            let r = lo + (hi & MERSENNE_61) + (hi >> 61);
            let r = (r & MERSENNE_61) + (r >> 61);
            if r >= MERSENNE_61 {
                r - MERSENNE_61
            } else {
                r
            }
        } else {
            (v % self.p as u128) as u64
        }
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        Self::mersenne61()
    }
}

impl Field for PrimeField {
    type Elem = u64;

    #[inline]
    fn zero(&self) -> u64 {
        0
    }

    #[inline]
    fn one(&self) -> u64 {
        1
    }

    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.reduce(*a as u128 * *b as u128)
    }

    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (self.p as i128, *a as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        t0.rem_euclid(self.p as i128) as u64
    }

    fn element(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.p as i128) as u64
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.random_range(0..self.p)
    }

    fn characteristic(&self) -> u64 {
        self.p
    }
}

/// Exact rationals; random entries are integers drawn from `[1, 2^31]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct RationalField;

impl Field for RationalField {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }

    fn element(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        let v: i64 = rng.random_range(1..=(1i64 << 31));
        self.element(v)
    }

    fn characteristic(&self) -> u64 {
        0
    }
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mulmod = |a: u64, b: u64| (a as u128 * b as u128 % n as u128) as u64;
    let powmod = |mut base: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, base);
            }
            base = mulmod(base, base);
            e >>= 1;
        }
        acc
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Modulus and base seed for randomized genericity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldConfig {
    pub prime: u64,
    pub seed: u64,
}

impl FieldConfig {
    pub const DEFAULT_SEED: u64 = 0x5eed_a15e;

    pub fn new(prime: u64, seed: u64) -> Result<Self> {
        PrimeField::new(prime)?;
        Ok(FieldConfig { prime, seed })
    }

    pub fn with_seed(seed: u64) -> Self {
        FieldConfig {
            prime: MERSENNE_61,
            seed,
        }
    }

    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.prime).expect("validated at construction")
    }

    /// The first `count` seeds of the schedule, see [`derive_seed`].
    pub fn seeds(&self, count: usize) -> Vec<u64> {
        seed_schedule(self.seed, count)
    }
}

impl Default for FieldConfig {
    fn default() -> Self {
        Self::with_seed(Self::DEFAULT_SEED)
    }
}

/// `seed_i = splitmix64(base ^ (i * 0x9E3779B97F4A7C15))`.
///
/// Reports list the derived seeds so any run can be replayed exactly.
pub fn derive_seed(base: u64, index: u64) -> u64 {
    let mut z = base ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn seed_schedule(base: u64, count: usize) -> Vec<u64> {
    (0..count as u64).map(|i| derive_seed(base, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn primality() {
        let primes = [2u64, 3, 5, 101, 65_537, MERSENNE_61, 4_294_967_311];
        for p in primes {
            assert!(is_prime(p), "{p}");
        }
        let composites = [0u64, 1, 4, 561, 1_000_000_007 * 3, 3_215_031_751, MERSENNE_61 - 2];
        for c in composites {
            assert!(!is_prime(c), "{c}");
        }
        assert!(PrimeField::new(100).is_err());
    }

    #[test]
    fn small_field_inverse() {
        let f = PrimeField::new(101).unwrap();
        for a in 1..101 {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
    }

    #[test]
    fn seeds_are_distinct() {
        let s = seed_schedule(7, 16);
        let mut d = s.clone();
        d.sort_unstable();
        d.dedup();
        assert_eq!(d.len(), 16);
        assert_eq!(s, seed_schedule(7, 16));
    }

    fn naive(f: &PrimeField, a: u64, b: u64) -> u64 {
        (a as u128 * b as u128 % f.modulus() as u128) as u64
    }

    proptest! {
        #[test]
        fn mersenne_mul_matches_naive(a in 0..MERSENNE_61, b in 0..MERSENNE_61) {
            let f = PrimeField::mersenne61();
            prop_assert_eq!(f.mul(&a, &b), naive(&f, a, b));
        }

        #[test]
        fn inverse_roundtrip(a in 1..MERSENNE_61) {
            let f = PrimeField::mersenne61();
            prop_assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }

        #[test]
        fn add_sub_roundtrip(a in 0..MERSENNE_61, b in 0..MERSENNE_61) {
            let f = PrimeField::mersenne61();
            prop_assert_eq!(f.sub(&f.add(&a, &b), &b), a);
            prop_assert_eq!(f.add(&a, &f.neg(&a)), 0);
        }
    }
}
