use alloc::vec;
use alloc::vec::Vec;

use super::{euler_phi, gcd, mod_inv, mod_mul, mod_pow};
use crate::{Error, Result};

/// Least `r ≥ 0` with `g^r ≡ a (mod q)`, by baby-step/giant-step in
/// `O(√φ(q))` multiplications.
pub fn discrete_log(g: u64, a: u64, q: u64) -> Result<u64> {
    let a = a % q;
    if gcd(a, q) != 1 {
        return Err(Error::NotAUnit { value: a, modulus: q });
    }
    let g = g % q;
    let phi = euler_phi(q);
    let step = (libm::sqrt(phi as f64) as u64 + 1).max(1);

    let mut baby: Vec<(u64, u64)> = Vec::with_capacity(step as usize);
    let mut x = 1u64;
    for j in 0..step {
        baby.push((x, j));
        x = mod_mul(x, g, q);
    }
    baby.sort_unstable();

    let giant = mod_pow(mod_inv(g, q)?, step, q);
    let mut gamma = a;
    for i in 0..=step {
        let at = baby.partition_point(|&(v, _)| v < gamma);
        if let Some(&(v, j)) = baby.get(at) {
            if v == gamma {
                return Ok(i * step + j);
            }
        }
        gamma = mod_mul(gamma, giant, q);
    }
    Err(Error::InvalidArgument("a is not a power of g"))
}

/// Full logarithm table for a primitive root, for bulk lookups such as
/// per-point color classes.
#[derive(Debug, Clone)]
pub struct LogTable {
    modulus: u64,
    generator: u64,
    logs: Vec<u32>,
}

impl LogTable {
    const ABSENT: u32 = u32::MAX;

    pub fn new(g: u64, q: u64) -> Result<Self> {
        crate::modular::check_modulus(q)?;
        let phi = euler_phi(q);
        let mut logs = vec![Self::ABSENT; q as usize];
        let mut x = 1u64;
        for k in 0..phi {
            if logs[x as usize] != Self::ABSENT {
                return Err(Error::InvalidArgument("generator is not a primitive root"));
            }
            logs[x as usize] = k as u32;
            x = mod_mul(x, g % q, q);
        }
        Ok(Self {
            modulus: q,
            generator: g % q,
            logs,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn generator(&self) -> u64 {
        self.generator
    }

    pub fn log(&self, a: u64) -> Result<u64> {
        match self.logs[(a % self.modulus) as usize] {
            Self::ABSENT => Err(Error::NotAUnit {
                value: a % self.modulus,
                modulus: self.modulus,
            }),
            r => Ok(r as u64),
        }
    }
}
