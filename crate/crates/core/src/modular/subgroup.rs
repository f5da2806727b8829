use alloc::vec::Vec;

use super::{check_modulus, factorize, gcd, mod_mul, mod_pow};
use crate::{Error, Result};

/// A cyclic subgroup `⟨ω⟩` of `(Z/mZ)ˣ`.
///
/// Elements are stored as consecutive powers `[ω⁰, ω¹, …, ω^{d−1}]`; the grid
/// evaluators index into this order, and the inverse of `ω^k` is `ω^{d−k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitSubgroup {
    modulus: u64,
    generator: u64,
    elements: Vec<u64>,
}

impl UnitSubgroup {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn generator(&self) -> u64 {
        self.generator
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    /// Inverse of `elements()[k]`, read off the power enumeration.
    #[inline]
    pub fn inverse_at(&self, k: usize) -> u64 {
        let d = self.elements.len();
        self.elements[(d - k % d) % d]
    }

    /// Inverses in element order.
    pub fn inverses(&self) -> Vec<u64> {
        (0..self.order()).map(|k| self.inverse_at(k)).collect()
    }

    pub fn contains(&self, u: u64) -> bool {
        self.elements.contains(&(u % self.modulus))
    }
}

/// `Some((p, α))` when `q = p^α` for an odd prime `p`.
pub fn odd_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 3 || q % 2 == 0 {
        return None;
    }
    factorize(q).as_prime_power()
}

fn require_odd_prime_power(q: u64) -> Result<(u64, u32)> {
    odd_prime_power(q).ok_or(Error::NotPrimePower(q))
}

/// Least `k ≥ 1` with `u^k ≡ 1 (mod m)`, found by stripping prime factors
/// from `φ(m)`.
pub fn multiplicative_order(u: u64, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::InvalidArgument("modulus must be positive"));
    }
    if m == 1 {
        return Ok(1);
    }
    let u = u % m;
    if gcd(u, m) != 1 {
        return Err(Error::NotAUnit { value: u, modulus: m });
    }
    let phi = factorize(m).euler_phi();
    let mut order = phi;
    for p in factorize(phi).primes() {
        while order % p == 0 && mod_pow(u, order / p, m) == 1 {
            order /= p;
        }
    }
    Ok(order)
}

/// The smallest primitive root modulo an odd prime power.
pub fn primitive_root(q: u64) -> Result<u64> {
    let (p, alpha) = require_odd_prime_power(q)?;
    let phi = p.pow(alpha - 1) * (p - 1);
    let phi_primes: Vec<u64> = factorize(phi).primes().collect();
    (2..q)
        .filter(|g| g % p != 0)
        .find(|&g| phi_primes.iter().all(|&r| mod_pow(g, phi / r, q) != 1))
        .ok_or(Error::NotPrimePower(q))
}

/// `⟨ω⟩ ≤ (Z/mZ)ˣ`, enumerated as successive powers of `ω`.
pub fn subgroup_from_generator(m: u64, omega: u64) -> Result<UnitSubgroup> {
    check_modulus(m)?;
    let omega = omega % m;
    if gcd(omega, m) != 1 {
        return Err(Error::NotAUnit { value: omega, modulus: m });
    }
    let mut elements = Vec::new();
    let mut x = 1u64;
    loop {
        elements.push(x);
        x = mod_mul(x, omega, m);
        if x == 1 {
            break;
        }
    }
    Ok(UnitSubgroup {
        modulus: m,
        generator: omega,
        elements,
    })
}

/// The unique subgroup of order `d` modulo an odd prime power `q`, generated
/// by `g^{φ(q)/d}` for the smallest primitive root `g`.
pub fn subgroup_of_order(q: u64, d: u64) -> Result<UnitSubgroup> {
    let (p, alpha) = require_odd_prime_power(q)?;
    let phi = p.pow(alpha - 1) * (p - 1);
    if d == 0 || phi % d != 0 {
        return Err(Error::OrderDoesNotDivide {
            order: d,
            group_order: phi,
        });
    }
    let g = primitive_root(q)?;
    subgroup_from_generator(q, mod_pow(g, phi / d, q))
}

/// The full unit group modulo a prime, generated by its smallest primitive root.
pub fn full_unit_group(p: u64) -> Result<UnitSubgroup> {
    if !super::is_prime(p) || p == 2 {
        return Err(Error::NotPrime(p));
    }
    subgroup_of_order(p, p - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modular::mod_inv;
    use proptest::prelude::*;

    fn order_by_iteration(u: u64, m: u64) -> u64 {
        let mut x = u % m;
        let mut k = 1;
        while x != 1 {
            x = x * u % m;
            k += 1;
        }
        k
    }

    fn is_primitive_by_exhaustion(g: u64, q: u64, phi: u64) -> bool {
        order_by_iteration(g, q) == phi
    }

    #[test]
    fn primitive_root_examples() {
        assert_eq!(primitive_root(7), Ok(3));
        assert_eq!(primitive_root(11), Ok(2));
        assert_eq!(primitive_root(4), Err(Error::NotPrimePower(4)));
        assert_eq!(primitive_root(15), Err(Error::NotPrimePower(15)));
        // smallest: nothing below it has full order
        for q in [7u64, 11, 13, 23, 25, 27, 49, 199, 1907, 6053] {
            let g = primitive_root(q).unwrap();
            let phi = crate::modular::euler_phi(q);
            assert!(is_primitive_by_exhaustion(g, q, phi), "q={q}");
            for h in 2..g {
                if gcd(h, q) == 1 {
                    assert!(!is_primitive_by_exhaustion(h, q, phi), "q={q} h={h}");
                }
            }
        }
    }

    #[test]
    fn order_examples() {
        assert_eq!(multiplicative_order(2, 15), Ok(order_by_iteration(2, 15)));
        assert_eq!(multiplicative_order(2, 15), Ok(4));
        assert_eq!(multiplicative_order(1, 97), Ok(1));
        assert_eq!(multiplicative_order(5, 22), Ok(order_by_iteration(5, 22)));
        assert_eq!(multiplicative_order(5, 22), Ok(5));
        assert_eq!(
            multiplicative_order(6, 15),
            Err(Error::NotAUnit { value: 6, modulus: 15 })
        );
    }

    #[test]
    fn subgroup_from_generator_examples() {
        let s = subgroup_from_generator(22, 5).unwrap();
        assert_eq!(s.elements(), &[1, 5, 3, 15, 9]);
        assert_eq!(s.order(), 5);
        assert_eq!(subgroup_from_generator(97, 1).unwrap().elements(), &[1]);
        let big = subgroup_from_generator(4820, 1209).unwrap();
        assert_eq!(big.order() as u64, order_by_iteration(1209, 4820));
        assert_eq!(
            subgroup_from_generator(22, 11),
            Err(Error::NotAUnit { value: 11, modulus: 22 })
        );
        assert_eq!(
            subgroup_from_generator(1 << 31, 3),
            Err(Error::ModulusOutOfRange(1 << 31))
        );
    }

    #[test]
    fn subgroup_of_order_examples() {
        let mut cube_roots = subgroup_of_order(7, 3).unwrap().elements().to_vec();
        cube_roots.sort();
        assert_eq!(cube_roots, [1, 2, 4]);
        assert_eq!(subgroup_of_order(13, 1).unwrap().elements(), &[1]);
        let s = subgroup_of_order(199, 3).unwrap();
        assert_eq!(s.order(), 3);
        assert!(s.elements().iter().all(|&u| u * u % 199 * u % 199 == 1));
        assert_eq!(
            subgroup_of_order(7, 4),
            Err(Error::OrderDoesNotDivide { order: 4, group_order: 6 })
        );
        assert_eq!(subgroup_of_order(21, 2), Err(Error::NotPrimePower(21)));
    }

    #[test]
    fn subgroup_of_order_is_unique() {
        for (q, d) in [(7u64, 3u64), (13, 4), (49, 7), (199, 3), (2221, 5), (9349, 19)] {
            let s = subgroup_of_order(q, d).unwrap();
            assert!(s.elements().iter().all(|&u| mod_pow(u, d, q) == 1));
            let solutions = (1..q).filter(|&u| mod_pow(u, d, q) == 1).count();
            assert_eq!(solutions as u64, d, "q={q} d={d}");
        }
    }

    #[test]
    fn inverse_lookup() {
        let s = subgroup_from_generator(4378, 291).unwrap();
        for (k, &u) in s.elements().iter().enumerate() {
            assert_eq!(s.inverse_at(k), mod_inv(u, 4378).unwrap());
        }
    }

    proptest! {
        #[test]
        fn subgroup_is_the_orbit(m in 2u64..3000, w in 1u64..3000) {
            let w = w % m;
            prop_assume!(gcd(w, m) == 1);
            let s = subgroup_from_generator(m, w).unwrap();
            prop_assert_eq!(s.order() as u64, multiplicative_order(w, m).unwrap());
            prop_assert_eq!(s.elements()[0], 1);
            let mut sorted = s.elements().to_vec();
            sorted.sort();
            sorted.dedup();
            prop_assert_eq!(sorted.len(), s.order());
            for &x in s.elements() {
                prop_assert_eq!(gcd(x, m), 1);
                prop_assert!(s.contains(mod_inv(x, m).unwrap()));
                for &y in s.elements() {
                    prop_assert!(s.contains(x * y % m));
                }
            }
        }
    }
}
