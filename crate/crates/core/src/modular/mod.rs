//! Exact residue arithmetic: powers, inverses, factorization, unit-group
//! structure, quadratic residues and discrete logarithms.
//!
//! Residues are `u64` values already reduced into `0..m`; functions that take
//! an arbitrary integer (`i64`) reduce it themselves. Products are formed in
//! `u128`, so every routine here is exact for `m < 2^63`.

mod dlog;
mod factor;
mod residue;
mod subgroup;

pub use dlog::{discrete_log, LogTable};
pub use factor::{euler_phi, factorize, is_prime, nth_prime, Factorization};
pub use residue::{legendre, sqrt_mod};
pub use subgroup::{
    full_unit_group, multiplicative_order, odd_prime_power, primitive_root,
    subgroup_from_generator, subgroup_of_order, UnitSubgroup,
};

use crate::{Error, Result};

#[inline]
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Reduces an arbitrary integer into `0..m`.
#[inline]
pub fn reduce(x: i64, m: u64) -> u64 {
    (x as i128).rem_euclid(m as i128) as u64
}

#[inline]
pub fn mod_mul(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `base^exp mod m` by binary exponentiation. `m = 1` yields 0.
pub fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    assert!(m >= 1, "modulus must be positive");
    if m == 1 {
        return 0;
    }
    let mut base = base % m;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, m);
        }
        base = mod_mul(base, base, m);
        exp >>= 1;
    }
    acc
}

/// The inverse `v` of `u` modulo `m`, with `0 < v < m`.
pub fn mod_inv(u: u64, m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::InvalidArgument("modulus must be at least 2"));
    }
    let (mut r0, mut r1) = (m as i128, (u % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return Err(Error::NotInvertible { value: u, modulus: m });
    }
    Ok(t0.rem_euclid(m as i128) as u64)
}

/// Cross inverses `(r1, r2)` with `r1 ≡ m1⁻¹ (mod m2)` and `r2 ≡ m2⁻¹ (mod m1)`.
///
/// Anything is invertible modulo 1 with inverse 0, so a trivial factor makes
/// the corresponding inverse 0.
pub fn crt_split(m1: u64, m2: u64) -> Result<(u64, u64)> {
    if m1 == 0 || m2 == 0 {
        return Err(Error::InvalidArgument("moduli must be positive"));
    }
    if gcd(m1, m2) != 1 {
        return Err(Error::NotCoprime(m1, m2));
    }
    let inverse = |x: u64, m: u64| if m == 1 { Ok(0) } else { mod_inv(x, m) };
    Ok((inverse(m1, m2)?, inverse(m2, m1)?))
}

pub(crate) fn check_modulus(m: u64) -> Result<()> {
    if (2..crate::MAX_MODULUS).contains(&m) {
        Ok(())
    } else {
        Err(Error::ModulusOutOfRange(m))
    }
}
