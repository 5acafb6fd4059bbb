//! Exact field scalars: arbitrary-precision rationals and prime-field residues.
//!
//! All arithmetic in this crate is exact; there is no floating point anywhere.
//! The [`Field`] trait abstracts the two scalar kinds:
//!
//! - [`Rat`]: `num::BigRational`, always kept canonical (reduced, positive
//!   denominator) by the underlying crate. This is the default field and the
//!   one every verification sweep uses for unconditional correctness.
//! - [`Fp`]: residues modulo a prime, offered as a fast mode for large sweeps.
//!   The modulus is thread-local (default `2^31 - 1`) so that library code can
//!   stay generic; set it once per thread via [`Fp::set_modulus`] before
//!   constructing values.

use std::cell::Cell;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::traits::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number in lowest terms.
pub type Rat = num::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar from {0:?}")]
    Parse(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
}

/// An exact field element.
///
/// Everything downstream (matrices, polynomials, sequences, models) is generic
/// over this trait. Concrete aliases live at the crate root.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + std::hash::Hash
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    /// Embed a signed integer into the field.
    fn from_i64(n: i64) -> Self;

    /// Multiplicative inverse; errors on zero.
    fn try_inv(&self) -> Result<Self, ScalarError>;

    /// Exact division; errors when `rhs` is zero.
    fn try_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        Ok(self.clone() * rhs.try_inv()?)
    }

    /// Nonnegative integer power by repeated squaring.
    fn pow_usize(&self, mut k: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base.clone();
            }
            k >>= 1;
            if k > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    /// Parse from a decimal string, accepting `num` or `num/den`.
    fn parse(text: &str) -> Result<Self, ScalarError>;

    /// Ratio of two integers.
    fn ratio(num: i64, den: i64) -> Result<Self, ScalarError> {
        Self::from_i64(num).try_div(&Self::from_i64(den))
    }
}

impl Field for Rat {
    fn from_i64(n: i64) -> Self {
        Rat::from_integer(BigInt::from(n))
    }

    fn try_inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(self.recip())
    }

    fn parse(text: &str) -> Result<Self, ScalarError> {
        text.trim()
            .parse::<Rat>()
            .map_err(|_| ScalarError::Parse(text.to_string()))
    }
}

// ---- Prime field ----

/// Default prime modulus: the Mersenne prime 2^31 - 1.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

thread_local! {
    static MODULUS: Cell<u64> = const { Cell::new(DEFAULT_PRIME) };
}

/// A residue modulo the thread-local prime.
///
/// The invariant `0 <= value < modulus` holds for every constructed value.
/// Mixing residues built under different moduli is a logic error; the modulus
/// is intended to be configured once per thread, before any computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp(u64);

impl Fp {
    /// The prime modulus currently in effect on this thread.
    pub fn modulus() -> u64 {
        MODULUS.with(|m| m.get())
    }

    /// Install a new prime modulus for this thread.
    pub fn set_modulus(p: u64) -> Result<(), ScalarError> {
        if !is_prime_u64(p) {
            return Err(ScalarError::NotPrime(p));
        }
        MODULUS.with(|m| m.set(p));
        Ok(())
    }

    pub fn new(v: i64) -> Fp {
        <Fp as Field>::from_i64(v)
    }

    pub fn residue(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        let p = Fp::modulus();
        Fp(((self.0 as u128 + rhs.0 as u128) % p as u128) as u64)
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        let p = Fp::modulus();
        Fp(((self.0 as u128 + (p - rhs.0) as u128) % p as u128) as u64)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        let p = Fp::modulus();
        Fp(((self.0 as u128 * rhs.0 as u128) % p as u128) as u64)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        if self.0 == 0 {
            self
        } else {
            Fp(Fp::modulus() - self.0)
        }
    }
}

impl Zero for Fp {
    fn zero() -> Fp {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl One for Fp {
    fn one() -> Fp {
        Fp(1 % Fp::modulus())
    }
}

impl Field for Fp {
    fn from_i64(n: i64) -> Self {
        let p = Fp::modulus() as i128;
        Fp((((n as i128 % p) + p) % p) as u64)
    }

    fn try_inv(&self) -> Result<Self, ScalarError> {
        if self.0 == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        // Fermat: a^(p-2) mod p.
        let p = Fp::modulus();
        Ok(Fp(pow_mod(self.0, p - 2, p)))
    }

    fn parse(text: &str) -> Result<Self, ScalarError> {
        let text = text.trim();
        if let Some((n, d)) = text.split_once('/') {
            let n = n
                .trim()
                .parse::<i64>()
                .map_err(|_| ScalarError::Parse(text.to_string()))?;
            let d = d
                .trim()
                .parse::<i64>()
                .map_err(|_| ScalarError::Parse(text.to_string()))?;
            Fp::new(n).try_div(&Fp::new(d))
        } else {
            text.parse::<i64>()
                .map(Fp::new)
                .map_err(|_| ScalarError::Parse(text.to_string()))
        }
    }
}

fn pow_mod(base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut b = base as u128 % p as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p as u128;
        }
        b = b * b % p as u128;
        exp >>= 1;
    }
    acc as u64
}

/// Deterministic Miller-Rabin, valid for all u64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n) as u128;
        if x == 1 || x == (n - 1) as u128 {
            continue;
        }
        for _ in 0..r - 1 {
            x = x * x % n as u128;
            if x == (n - 1) as u128 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Convenience constructor for rational scalars in tests and examples.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_field_ops() {
        let half = rat(1, 2);
        let third = rat(1, 3);
        assert_eq!(half.clone() + third, rat(5, 6));
        assert_eq!(rat(2, 3) * rat(3, 2), rat(1, 1));
        assert_eq!(rat(2, 3).try_inv().unwrap(), rat(3, 2));
        assert_eq!(Rat::zero().try_inv(), Err(ScalarError::DivisionByZero));
        assert_eq!(half.try_div(&Rat::zero()), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn rational_canonical_form() {
        let x = rat(4, -6);
        assert_eq!(x, rat(-2, 3));
        assert_eq!(x.to_string(), "-2/3");
        assert_eq!(Rat::parse("-2/3").unwrap(), x);
        assert_eq!(Rat::parse("7").unwrap(), rat(7, 1));
        assert!(Rat::parse("a/b").is_err());
    }

    #[test]
    fn inverse_of_seven_mod_eleven() {
        Fp::set_modulus(11).unwrap();
        let seven = Fp::new(7);
        assert_eq!(seven.try_inv().unwrap(), Fp::new(8));
        assert_eq!(seven * Fp::new(8), Fp::new(1));
    }

    #[test]
    fn prime_field_ops_default_modulus() {
        // This test runs on its own thread, so the default modulus applies.
        assert_eq!(Fp::modulus(), DEFAULT_PRIME);
        let a = Fp::new(-1);
        assert_eq!(a, Fp(DEFAULT_PRIME - 1));
        assert_eq!(a + Fp::new(1), Fp::zero());
        let x = Fp::new(123_456_789);
        assert_eq!(x.try_inv().unwrap() * x, Fp::one());
        assert_eq!(Fp::parse("1/2").unwrap() * Fp::new(2), Fp::one());
    }

    #[test]
    fn modulus_must_be_prime() {
        assert_eq!(Fp::set_modulus(10), Err(ScalarError::NotPrime(10)));
        assert!(Fp::set_modulus(2_147_483_647).is_ok());
    }

    #[test]
    fn pow_by_squaring() {
        assert_eq!(rat(2, 1).pow_usize(10), rat(1024, 1));
        assert_eq!(rat(5, 3).pow_usize(0), Rat::one());
        assert_eq!(Rat::zero().pow_usize(0), Rat::one());
    }

    #[test]
    fn primality_checker() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(2_147_483_647));
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(2_147_483_649));
    }
}
