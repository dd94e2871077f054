//! 2-adic and binary-digit arithmetic.
//!
//! Writing `n = ε + 2^{k_1} + ... + 2^{k_r}` with `ε ∈ {0,1}` and
//! `1 ≤ k_1 < ... < k_r`, most counting formulas in this crate depend on
//! `n` only through `ε`, `k = k_1 = ord(n - ε)`, the digit count `ν(n)` and
//! the exponent sum `α(n) = k_1 + ... + k_r`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{domain, Result};

/// Binary profile of a nonnegative integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinProfile {
    pub n: u64,
    /// Parity bit of `n`.
    pub eps: u8,
    /// Exponents of the powers of two summing to `n`, ascending.
    pub bin_set: Vec<u32>,
    /// Number of binary ones.
    pub nu: u32,
    /// `ord(n - eps)`; `None` when `n - eps = 0`.
    pub k: Option<u32>,
}

impl BinProfile {
    pub fn new(n: u64) -> Self {
        let eps = (n & 1) as u8;
        let n_prime = n - u64::from(eps);
        BinProfile {
            n,
            eps,
            bin_set: bin_set(n),
            nu: nu(n),
            k: (n_prime > 0).then(|| n_prime.trailing_zeros()),
        }
    }

    /// `n' = n - eps`.
    pub fn n_prime(&self) -> u64 {
        self.n - u64::from(self.eps)
    }
}

/// Exponent of the largest power of two dividing `a`.
pub fn ord2(a: u64) -> Result<u32> {
    if a == 0 {
        return domain("ord(0) is undefined");
    }
    Ok(a.trailing_zeros())
}

/// `ν(n)`, the number of ones in the binary expansion.
pub fn nu(n: u64) -> u32 {
    n.count_ones()
}

/// `bin(n)`, the exponents present in the binary expansion, ascending.
pub fn bin_set(n: u64) -> Vec<u32> {
    (0..64).filter(|&j| n >> j & 1 == 1).collect()
}

/// `k = ord(n')` where `n' = n - (n mod 2)`, or `None` when `n' = 0`.
pub fn k_of(n: u64) -> Option<u32> {
    let n_prime = n & !1;
    (n_prime > 0).then(|| n_prime.trailing_zeros())
}

/// True iff `a + b` involves no binary carry.
pub fn is_neat(a: u64, b: u64) -> bool {
    a & b == 0
}

/// Parity of the multinomial `n! / (a! b!)`.
///
/// Indices that are negative or do not sum to `n` give 0. By Kummer the
/// 2-adic valuation is the carry count `ν(a) + ν(b) - ν(n)`.
pub fn binom_parity(n: i64, a: i64, b: i64) -> u8 {
    if a < 0 || b < 0 || a + b != n {
        return 0;
    }
    let (a, b) = (a as u64, b as u64);
    let carries = nu(a) + nu(b) - nu(a + b);
    u8::from(carries == 0)
}

/// Exact multinomial `n! / (a! b!)` with the same vanishing convention as
/// [`binom_parity`].
pub fn multinomial(n: i64, a: i64, b: i64) -> BigUint {
    if a < 0 || b < 0 || a + b != n {
        return BigUint::zero();
    }
    let (small, large) = if a < b { (a, b) } else { (b, a) };
    let mut acc = BigUint::one();
    for i in 1..=small as u64 {
        acc *= large as u64 + i;
        acc /= i;
    }
    acc
}

/// `α(n)`, the sum of the exponents `≥ 1` in the binary expansion of `n`.
pub fn alpha_exp(n: u64) -> u32 {
    bin_set(n).into_iter().sum()
}

/// `A(n) = 2^{α(n)}`, the number of odd-dimensional irreducibles of `S_n`.
pub fn count_a(n: u64) -> BigUint {
    BigUint::one() << alpha_exp(n)
}

/// `C(m, 2)` for possibly large `m`.
pub(crate) fn choose2(m: u32) -> i64 {
    let m = i64::from(m);
    m * (m - 1) / 2
}

/// `2^e` as an exact rational; negative exponents allowed.
pub(crate) fn pow2(e: i64) -> BigRational {
    let p = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

pub(crate) fn rat(x: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(x.clone()))
}

/// Converts an exact rational that must be a nonnegative integer.
pub(crate) fn to_count(x: BigRational, what: &str) -> BigUint {
    assert!(
        x.is_integer() && !x.is_negative(),
        "{what} evaluated to non-integral or negative value {x}"
    );
    x.to_integer().to_biguint().expect("nonnegative")
}

/// Base-2 logarithm of a positive big integer.
pub fn log2_big(x: &BigUint) -> f64 {
    assert!(!x.is_zero(), "log2 of zero");
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().expect("finite").log2();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().expect("finite");
    top.log2() + shift as f64
}

/// Halves an even big integer, panicking otherwise.
pub(crate) fn half(x: &BigUint) -> BigUint {
    let (q, r) = x.div_rem(&BigUint::from(2u8));
    assert!(r.is_zero(), "halving odd value {x}");
    q
}
