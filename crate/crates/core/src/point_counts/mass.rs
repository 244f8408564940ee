//! Bernoulli numbers, `ζ(1-2i)`, `#Sp_{2g}(Z/N)` and the superspecial mass.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Bernoulli numbers `B_0, …, B_m` (with `B_1 = -1/2`) from the recurrence
/// `Σ_{k=0}^{m} C(m+1, k) B_k = 0`.
pub fn bernoulli_numbers(m: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(m + 1);
    b.push(BigRational::one());
    for n in 1..=m {
        let mut binom = BigInt::one();
        let mut acc = BigRational::zero();
        for (k, bk) in b.iter().enumerate() {
            acc += BigRational::from_integer(binom.clone()) * bk;
            // C(n+1, k+1) from C(n+1, k)
            binom = binom * BigInt::from(n + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(n + 1)));
    }
    b
}

pub fn bernoulli(m: usize) -> BigRational {
    bernoulli_numbers(m).pop().expect("non-empty")
}

/// `ζ(1-2i) = -B_{2i}/(2i)` for `i ≥ 1`.
pub fn zeta_negative_odd(i: usize) -> Result<BigRational> {
    if i == 0 {
        return Err(Error::InvalidArithmetic("zeta(1-2i) needs i >= 1".into()));
    }
    Ok(-bernoulli(2 * i) / BigRational::from_integer(BigInt::from(2 * i)))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn to_integer(value: BigRational, context: &str) -> Result<BigInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NonIntegral { context: context.to_string(), value: value.to_string() })
    }
}

/// `#Sp_{2g}(Z/N) = N^{g(2g+1)} ∏_{p | N} ∏_{i=1}^{g} (1 - p^{-2i})`.
pub fn sp_order_mod_n(g: usize, n: u64) -> Result<BigInt> {
    if n < 3 {
        return Err(Error::InvalidArithmetic(format!("level N = {n} must be at least 3")));
    }
    let big_n = BigInt::from(n);
    let mut value = BigRational::from_integer(num_traits::pow(big_n, g * (2 * g + 1)));
    for p in prime_divisors(n) {
        for i in 1..=g {
            let p2i = num_traits::pow(BigInt::from(p), 2 * i);
            value *= BigRational::new(&p2i - 1, p2i);
        }
    }
    to_integer(value, "#Sp_2g(Z/N)")
}

fn check_level(p: u64, n: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::InvalidArithmetic(format!("p = {p} is not prime")));
    }
    if n < 3 {
        return Err(Error::InvalidArithmetic(format!("level N = {n} must be at least 3")));
    }
    if p.gcd(&n) != 1 {
        return Err(Error::InvalidArithmetic(format!("p = {p} divides N = {n}")));
    }
    Ok(())
}

/// The mass-formula product before the integrality check.
pub fn lambda_mass_rational(g: usize, p: u64, n: u64) -> Result<BigRational> {
    if g == 0 {
        return Err(Error::GenusOutOfRange { g, min: 1, max: usize::MAX });
    }
    check_level(p, n)?;
    let sign = if (g * (g + 1) / 2).is_multiple_of(2) { 1 } else { -1 };
    let mut value = BigRational::new(
        sp_order_mod_n(g, n)? * sign,
        num_traits::pow(BigInt::from(2), g),
    );
    for i in 1..=g {
        let local = num_traits::pow(BigInt::from(p), i) + if i % 2 == 0 { 1 } else { -1 };
        value *= zeta_negative_odd(i)? * BigRational::from_integer(local);
    }
    Ok(value)
}

/// `#Λ_{g,1,N}`: the number of superspecial principally polarized abelian
/// varieties of genus `g` with level-`N` structure in characteristic `p`.
///
/// Fails with [`Error::NonIntegral`] if the product is not a positive integer.
pub fn lambda_mass(g: usize, p: u64, n: u64) -> Result<BigInt> {
    let value = lambda_mass_rational(g, p, n)?;
    let int = to_integer(value, "mass formula")?;
    if !int.is_positive() {
        return Err(Error::NonIntegral {
            context: "mass formula (non-positive)".into(),
            value: int.to_string(),
        });
    }
    Ok(int)
}
