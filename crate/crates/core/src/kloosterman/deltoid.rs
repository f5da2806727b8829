use alloc::vec::Vec;

use super::{unit_root, ComplexValue};
use crate::modular::{is_prime, mod_pow, odd_prime_power, reduce, subgroup_of_order};
use crate::{Error, Result};

/// The three deltoid summands of `K(a, b, q, 9)` for `q = p^α`, `p ≡ 1 (mod 9)`:
/// `ζ_j + ζ_{j+3} + 1/(ζ_j ζ_{j+3})` for `j = 1, 2, 3`, where
/// `ζ_k = e((a·u^k + b·u^{−k})/q)` and `u` generates the order-9 subgroup.
///
/// Each summand is the torus map for three cusps, so it lies in the filled
/// deltoid; their sum is the full order-9 sum.
pub fn deltoid_triples(a: i64, b: i64, q: u64) -> Result<[ComplexValue; 3]> {
    let (p, _) = odd_prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if p % 9 != 1 {
        return Err(Error::WrongResidueClass { value: p, residue: 1, modulus: 9 });
    }
    let subgroup = subgroup_of_order(q, 9)?;
    let (a, b) = (reduce(a, q) as u128, reduce(b, q) as u128);
    let zeta = |k: usize| {
        let t = (a * subgroup.elements()[k] as u128 + b * subgroup.inverse_at(k) as u128) % q as u128;
        unit_root(t as u64, q)
    };
    let one = ComplexValue::new(1.0, 0.0);
    let mut triples = [ComplexValue::new(0.0, 0.0); 3];
    for (j, slot) in triples.iter_mut().enumerate() {
        let (z1, z2) = (zeta(j + 1), zeta(j + 4));
        *slot = z1 + z2 + one / (z1 * z2);
    }
    Ok(triples)
}

/// `1 + u + … + u^{d−1} ≡ 0 (mod q)` for the canonical generator `u` of the
/// order-`d` subgroup, `d` a prime dividing `p − 1`.
pub fn cyclotomic_relation_check(q: u64, d: u64) -> Result<bool> {
    let (p, _) = odd_prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if !is_prime(d) {
        return Err(Error::NotPrime(d));
    }
    if (p - 1) % d != 0 {
        return Err(Error::OrderDoesNotDivide { order: d, group_order: p - 1 });
    }
    let u = subgroup_of_order(q, d)?.generator();
    let powers: Vec<u64> = (0..d).map(|k| mod_pow(u, k, q)).collect();
    Ok(powers.iter().fold(0u64, |acc, &x| (acc + x) % q) == 0)
}
