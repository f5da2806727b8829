use super::{unit_root, ComplexValue, SumEvaluator};
use crate::modular::{full_unit_group, is_prime, legendre, mod_inv, reduce, sqrt_mod, subgroup_of_order};
use crate::{CompensatedSum, Error, Result};

fn require_odd_prime(p: u64) -> Result<()> {
    if p > 2 && is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// `τ_n = √n` for `n ≡ 1 (mod 4)`, `i√n` for `n ≡ 3 (mod 4)`.
pub fn tau(n: u64) -> Result<ComplexValue> {
    let root = libm::sqrt(n as f64);
    match n % 4 {
        1 => Ok(ComplexValue::new(root, 0.0)),
        3 => Ok(ComplexValue::new(0.0, root)),
        _ => Err(Error::InvalidParity(n)),
    }
}

/// Classical Kloosterman sum `K(a, b, p)` over the full unit group.
pub fn classical(a: i64, b: i64, p: u64) -> Result<ComplexValue> {
    require_odd_prime(p)?;
    Ok(SumEvaluator::new(&full_unit_group(p)?).eval(a, b))
}

/// Salié sum `T(a, b, p) = Σ_{u=1}^{p-1} (u/p)·e((a·u + b·u⁻¹)/p)`, term by term.
pub fn salie_direct(a: i64, b: i64, p: u64) -> Result<ComplexValue> {
    require_odd_prime(p)?;
    let (a, b) = (reduce(a, p), reduce(b, p));
    let mut re = CompensatedSum::new();
    let mut im = CompensatedSum::new();
    for u in 1..p {
        let sign = legendre(u as i64, p) as f64;
        let t = ((a as u128 * u as u128 + b as u128 * mod_inv(u, p)? as u128) % p as u128) as u64;
        let z = unit_root(t, p);
        re.add(sign * z.re);
        im.add(sign * z.im);
    }
    Ok(ComplexValue::new(re.value(), im.value()))
}

/// Closed form of the Salié sum for `p ∤ ab`:
/// `±2·τ_p·cos(2πk/p)` with `k² ≡ 4ab`, or 0 when `a` and `b` have
/// opposite quadratic character.
///
/// Either square root `k` gives the same cosine, so the smaller one is used.
pub fn salie_explicit(a: i64, b: i64, p: u64) -> Result<ComplexValue> {
    require_odd_prime(p)?;
    let (la, lb) = (legendre(a, p), legendre(b, p));
    if la == 0 || lb == 0 {
        return Err(Error::DividesAB { prime: p });
    }
    if la != lb {
        return Ok(ComplexValue::new(0.0, 0.0));
    }
    let four_ab = (4 * reduce(a, p) as u128 * reduce(b, p) as u128 % p as u128) as u64;
    let k = sqrt_mod(four_ab, p)?;
    let cos = unit_root(k, p).re;
    Ok(tau(p)? * (2.0 * la as f64 * cos))
}

/// Both sides of `K(a, b, p, (p−1)/2) = ½(T(a, b, p) + K(a, b, p))`.
pub fn half_subgroup_identity(a: i64, b: i64, p: u64) -> Result<(ComplexValue, ComplexValue)> {
    require_odd_prime(p)?;
    let lhs = SumEvaluator::new(&subgroup_of_order(p, (p - 1) / 2)?).eval(a, b);
    let rhs = (salie_direct(a, b, p)? + classical(a, b, p)?) * 0.5;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    const PRIMES: [u64; 6] = [5, 7, 11, 13, 19, 23];

    /// Salié sum with the residue set found by squaring, std transcendentals.
    fn salie_oracle(a: i64, b: i64, p: u64) -> (f64, f64) {
        let squares: Vec<u64> = (1..p).map(|x| x * x % p).collect();
        let (mut re, mut im) = (0.0, 0.0);
        for u in 1..p {
            let inv = (1..p).find(|v| u * v % p == 1).unwrap();
            let sign = if squares.contains(&u) { 1.0 } else { -1.0 };
            let t = (a as i128 * u as i128 + b as i128 * inv as i128).rem_euclid(p as i128);
            let angle = 2.0 * std::f64::consts::PI * t as f64 / p as f64;
            re += sign * angle.cos();
            im += sign * angle.sin();
        }
        (re, im)
    }

    fn close(z: ComplexValue, w: ComplexValue, tol: f64) -> bool {
        (z - w).norm() <= tol
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(5), Ok(ComplexValue::new(5f64.sqrt(), 0.0)));
        assert_eq!(tau(7), Ok(ComplexValue::new(0.0, 7f64.sqrt())));
        assert_eq!(tau(2), Err(Error::InvalidParity(2)));
    }

    #[test]
    fn classical_examples() {
        let k = classical(1, 1, 5).unwrap();
        assert!((k.re - 0.381_966_011_250_105).abs() < 1e-12);
        assert_eq!(classical(0, 0, 13).unwrap(), ComplexValue::new(12.0, 0.0));
        let weil = 2.0 * 11f64.sqrt();
        for a in 0..11 {
            for b in 0..11 {
                let k = classical(a, b, 11).unwrap();
                assert!(k.im.abs() <= 1e-9);
                if a * b % 11 != 0 {
                    assert!(k.norm() <= weil + 1e-6);
                }
            }
        }
        assert_eq!(classical(1, 1, 15), Err(Error::NotPrime(15)));
    }

    #[test]
    fn salie_direct_examples() {
        assert!(salie_direct(0, 0, 11).unwrap().norm() < 1e-12);
        let (re, im) = salie_oracle(1, 3, 7);
        assert!(re.abs() < 1e-12 && im.abs() < 1e-12);
        assert!(salie_direct(1, 3, 7).unwrap().norm() < 1e-12);
        for p in PRIMES {
            for (a, b) in [(1, 1), (2, 5), (3, 3), (-1, 4)] {
                let (re, im) = salie_oracle(a, b, p);
                let t = salie_direct(a, b, p).unwrap();
                assert!((t.re - re).abs() < 1e-10 && (t.im - im).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn salie_explicit_examples() {
        let t = salie_explicit(1, 1, 13).unwrap();
        let expected = 2.0 * 13f64.sqrt() * (2.0 * std::f64::consts::PI * 2.0 / 13.0).cos();
        assert!((t.re - expected).abs() < 1e-12 && t.im == 0.0);
        let (re, im) = salie_oracle(1, 1, 13);
        assert!((t.re - re).abs() < 1e-9 && (t.im - im).abs() < 1e-9);

        assert_eq!(salie_explicit(1, 3, 7), Ok(ComplexValue::new(0.0, 0.0)));

        let t = salie_explicit(3, 3, 7).unwrap();
        let expected = -2.0 * 7f64.sqrt() * (2.0 * std::f64::consts::PI / 7.0).cos();
        assert!(t.re == 0.0 && (t.im - expected).abs() < 1e-12);
        let (re, im) = salie_oracle(3, 3, 7);
        assert!((t.re - re).abs() < 1e-9 && (t.im - im).abs() < 1e-9);

        assert_eq!(salie_explicit(0, 3, 7), Err(Error::DividesAB { prime: 7 }));
    }

    #[test]
    fn explicit_matches_direct_for_all_unit_pairs() {
        for p in PRIMES {
            for a in 1..p as i64 {
                for b in 1..p as i64 {
                    let e = salie_explicit(a, b, p).unwrap();
                    let d = salie_direct(a, b, p).unwrap();
                    assert!(close(e, d, 1e-8), "p={p} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn half_subgroup_examples() {
        for a in 0..7 {
            for b in 0..7 {
                let (l, r) = half_subgroup_identity(a, b, 7).unwrap();
                assert!(close(l, r, 1e-8));
            }
        }
        let (l, r) = half_subgroup_identity(0, 0, 23).unwrap();
        assert_eq!(l, ComplexValue::new(11.0, 0.0));
        assert!(close(r, ComplexValue::new(11.0, 0.0), 1e-12));
        let (l, r) = half_subgroup_identity(1, 2, 11).unwrap();
        assert!(close(l, r, 1e-8));
    }
}
