use alloc::vec::Vec;

use super::{mod_mul, mod_pow};

/// Prime factorization `value = Π prime^exponent`, primes ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub value: u64,
    pub prime_powers: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.prime_powers.iter().map(|&(p, _)| p)
    }

    /// `Some((p, k))` when `value = p^k` with `k ≥ 1`.
    pub fn as_prime_power(&self) -> Option<(u64, u32)> {
        match self.prime_powers.as_slice() {
            [single] => Some(*single),
            _ => None,
        }
    }

    pub fn euler_phi(&self) -> u64 {
        self.prime_powers
            .iter()
            .map(|&(p, e)| p.pow(e - 1) * (p - 1))
            .product()
    }
}

/// Trial division by 2, 3 and then `6k ± 1`.
///
/// # Panics
/// If `n == 0`.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "cannot factor zero");
    let mut rest = n;
    let mut prime_powers = Vec::new();
    let mut take = |rest: &mut u64, p: u64| {
        let mut e = 0;
        while *rest % p == 0 {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            prime_powers.push((p, e));
        }
    };
    take(&mut rest, 2);
    take(&mut rest, 3);
    let mut d = 5u64;
    while d.saturating_mul(d) <= rest {
        take(&mut rest, d);
        take(&mut rest, d + 2);
        d += 6;
    }
    if rest > 1 {
        prime_powers.push((rest, 1));
    }
    Factorization {
        value: n,
        prime_powers,
    }
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n).euler_phi()
}

/// Deterministic Miller–Rabin; the first twelve prime bases are exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in BASES {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mod_mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The `n`-th prime, 1-based: `nth_prime(1) = 2`.
pub fn nth_prime(n: usize) -> u64 {
    assert!(n >= 1);
    (2u64..).filter(|&k| is_prime(k)).nth(n - 1).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modular::gcd;
    use proptest::prelude::*;

    fn trial_division_oracle(mut n: u64) -> Vec<(u64, u32)> {
        let mut out: Vec<(u64, u32)> = Vec::new();
        let mut p = 2;
        while n > 1 {
            if n % p == 0 {
                n /= p;
                match out.last_mut() {
                    Some((q, e)) if *q == p => *e += 1,
                    _ => out.push((p, 1)),
                }
            } else {
                p += 1;
            }
        }
        out
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(
            factorize(3570).prime_powers,
            vec![(2, 1), (3, 1), (5, 1), (7, 1), (17, 1)]
        );
        assert_eq!(factorize(3570).prime_powers, trial_division_oracle(3570));
        assert!(factorize(1).prime_powers.is_empty());
        assert_eq!(factorize(4378).prime_powers, vec![(2, 1), (11, 1), (199, 1)]);
        assert_eq!(factorize(4378).prime_powers, trial_division_oracle(4378));
        // 1149851 = 59 · 19489
        assert_eq!(factorize(1149851).prime_powers, vec![(59, 1), (19489, 1)]);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(euler_phi(3571), 3570);
        assert_eq!(euler_phi(9349), 9348);
        assert_eq!(euler_phi(1), 1);
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            small,
            [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime(3010349));
        assert!(!is_prime(1149851));
        assert!(is_prime((1 << 61) - 1));
        assert_eq!(nth_prime(11), 31);
    }

    proptest! {
        #[test]
        fn factorization_multiplies_back(n in 1u64..2_000_000) {
            let f = factorize(n);
            let product: u64 = f.prime_powers.iter().map(|&(p, e)| p.pow(e)).product();
            prop_assert_eq!(product, n);
            prop_assert!(f.primes().all(is_prime));
            prop_assert_eq!(f.prime_powers, trial_division_oracle(n));
        }

        #[test]
        fn phi_is_multiplicative(m in 1u64..=10_000, n in 1u64..=10_000) {
            prop_assume!(gcd(m, n) == 1);
            prop_assert_eq!(euler_phi(m * n), euler_phi(m) * euler_phi(n));
        }
    }
}
