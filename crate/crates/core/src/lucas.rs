//! Lucas and Fibonacci numbers, the order of appearance, and the rows of the
//! table of Lucas numbers at prime indices (the "spider" moduli).
//!
//! Values are `u64` and overflow is reported rather than wrapped: `L_k` fits
//! for `k ≤ 92` and `F_k` for `k ≤ 93`.

use alloc::vec::Vec;

use crate::modular::{euler_phi, factorize, is_prime, legendre, mod_mul, nth_prime};
use crate::{Error, Result};

fn sequence(mut x: u64, mut y: u64, k: u64) -> Result<u64> {
    if k == 0 {
        return Ok(x);
    }
    for _ in 1..k {
        let next = x.checked_add(y).ok_or(Error::Overflow)?;
        x = y;
        y = next;
    }
    Ok(y)
}

/// `L_0 = 2, L_1 = 1, L_k = L_{k−1} + L_{k−2}`.
pub fn lucas_number(k: u64) -> Result<u64> {
    sequence(2, 1, k)
}

/// `F_0 = 0, F_1 = F_2 = 1`.
pub fn fibonacci_number(k: u64) -> Result<u64> {
    sequence(0, 1, k)
}

/// `(F_k mod n, F_{k+1} mod n)` by fast doubling.
pub fn fibonacci_mod(k: u64, n: u64) -> (u64, u64) {
    if n == 1 {
        return (0, 0);
    }
    let (mut f, mut g) = (0u64, 1u64);
    for bit in (0..64 - k.leading_zeros()).rev() {
        // F_{2j} = F_j(2F_{j+1} − F_j), F_{2j+1} = F_j² + F_{j+1}²
        let two_g_minus_f = ((2 * g as u128 + n as u128 - f as u128) % n as u128) as u64;
        let even = mod_mul(f, two_g_minus_f, n);
        let odd = ((mod_mul(f, f, n) as u128 + mod_mul(g, g, n) as u128) % n as u128) as u64;
        if (k >> bit) & 1 == 1 {
            f = odd;
            g = ((even as u128 + odd as u128) % n as u128) as u64;
        } else {
            f = even;
            g = odd;
        }
    }
    (f, g)
}

/// Least `k ≥ 1` with `n | F_k`, by scanning `F_k mod n`. The scan stops
/// after `6n` steps, which is never reached for a correct implementation.
pub fn order_of_appearance(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("order of appearance needs n ≥ 1"));
    }
    if n == 1 {
        return Ok(1);
    }
    let limit = n.saturating_mul(6);
    let (mut f, mut g) = (1u64, 1u64 % n);
    for k in 1..=limit {
        if f == 0 {
            return Ok(k);
        }
        let next = ((f as u128 + g as u128) % n as u128) as u64;
        f = g;
        g = next;
    }
    Err(Error::ScanLimitExceeded(limit))
}

/// `L_k mod 8` over the first 24 terms, and whether each `L_p` with
/// `5 ≤ p ≤ limit` has an odd prime factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mod8Report {
    /// `L_k mod 8` for `k = 0..24`.
    pub residues: Vec<u8>,
    pub periodic: bool,
    /// Some `k ≤ limit` with `8 | L_k`.
    pub zero_at: Option<u64>,
    /// Primes `5 ≤ p ≤ limit` whose `L_p` is a power of two.
    pub no_odd_factor: Vec<u64>,
}

impl Mod8Report {
    pub fn holds(&self) -> bool {
        self.periodic && self.zero_at.is_none() && self.no_odd_factor.is_empty()
    }
}

pub fn mod8_lemma_check(limit: u64) -> Result<Mod8Report> {
    if limit < 12 {
        return Err(Error::InvalidArgument("the mod-8 check needs limit ≥ 12"));
    }
    let mut residues = Vec::new();
    let mut zero_at = None;
    let (mut x, mut y) = (2u8, 1u8);
    for k in 0..=limit.max(23) {
        if k < 24 {
            residues.push(x);
        }
        if x == 0 && k <= limit && zero_at.is_none() {
            zero_at = Some(k);
        }
        let next = (x + y) % 8;
        x = y;
        y = next;
    }
    let periodic = (0..12).all(|k| residues[k] == residues[k + 12]);
    let mut no_odd_factor = Vec::new();
    for p in (5..=limit).filter(|&p| is_prime(p)) {
        let l = lucas_number(p)?;
        if l >> l.trailing_zeros() == 1 {
            no_odd_factor.push(p);
        }
    }
    Ok(Mod8Report {
        residues,
        periodic,
        zero_at,
        no_odd_factor,
    })
}

/// Facts about one odd prime factor `q` of `L_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorWitness {
    pub q: u64,
    pub divides_f_2p: bool,
    /// Order of appearance of `q`.
    pub appearance: u64,
    /// Legendre symbol `(q/5)`.
    pub legendre_q_5: i8,
}

impl FactorWitness {
    pub fn holds(&self, p: u64) -> bool {
        self.divides_f_2p && self.appearance % (2 * p) == 0 && self.legendre_q_5 == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisibilityReport {
    pub p: u64,
    pub lucas: u64,
    pub phi: u64,
    /// `L_p² − 5F_p² = 4(−1)^p`.
    pub norm_identity: bool,
    pub factors: Vec<FactorWitness>,
}

impl DivisibilityReport {
    /// `p | φ(L_p)`.
    pub fn divides(&self) -> bool {
        self.phi % self.p == 0
    }

    pub fn holds(&self) -> bool {
        self.divides() && self.norm_identity && !self.factors.is_empty() && self.factors.iter().all(|w| w.holds(self.p))
    }
}

/// Checks `p | φ(L_p)` together with the facts its proof rests on, for every
/// odd prime factor `q` of `L_p`.
pub fn lucas_divisibility_check(p: u64) -> Result<DivisibilityReport> {
    if p < 5 || !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let lucas = lucas_number(p)?;
    let fib = fibonacci_number(p)?;
    let sign: i128 = if p % 2 == 0 { 4 } else { -4 };
    let norm_identity = (lucas as i128).pow(2) - 5 * (fib as i128).pow(2) == sign;
    let factorization = factorize(lucas);
    let factors = factorization
        .primes()
        .filter(|&q| q != 2)
        .map(|q| {
            let divides_f_2p = fibonacci_mod(2 * p, q).0 == 0;
            // z(q) divides any k with q | F_k, so search the divisors of 2p.
            let appearance = if divides_f_2p {
                [1, 2, p, 2 * p].into_iter().find(|&k| fibonacci_mod(k, q).0 == 0).unwrap_or(2 * p)
            } else {
                order_of_appearance(q).unwrap_or(0)
            };
            FactorWitness {
                q,
                divides_f_2p,
                appearance,
                legendre_q_5: legendre(q as i64, 5),
            }
        })
        .collect();
    Ok(DivisibilityReport {
        p,
        lucas,
        phi: factorization.euler_phi(),
        norm_identity,
        factors,
    })
}

/// `n`, the `n`th prime `p(n)`, `L_{p(n)}` and `φ(L_{p(n)})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LucasRow {
    pub n: usize,
    pub p_n: u64,
    pub lucas: u64,
    pub phi: u64,
}

/// Rows `n = 3..=n_max`.
pub fn spider_table(n_max: usize) -> Result<Vec<LucasRow>> {
    if n_max < 3 {
        return Err(Error::InvalidArgument("the table starts at n = 3"));
    }
    (3..=n_max)
        .map(|n| {
            let p_n = nth_prime(n);
            let lucas = lucas_number(p_n)?;
            Ok(LucasRow {
                n,
                p_n,
                lucas,
                phi: euler_phi(lucas),
            })
        })
        .collect()
}
