use super::{mod_mul, mod_pow, reduce};
use crate::{Error, Result};

/// Legendre symbol `(a/p)` by Euler's criterion. `p` must be an odd prime.
pub fn legendre(a: i64, p: u64) -> i8 {
    debug_assert!(p % 2 == 1);
    match mod_pow(reduce(a, p), (p - 1) / 2, p) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

/// The smaller square root of `a` modulo an odd prime `p` (Tonelli–Shanks).
pub fn sqrt_mod(a: u64, p: u64) -> Result<u64> {
    let a = a % p;
    if a == 0 {
        return Ok(0);
    }
    if legendre(a as i64, p) != 1 {
        return Err(Error::NotAResidue { value: a, prime: p });
    }
    let root = if p % 4 == 3 {
        mod_pow(a, (p + 1) / 4, p)
    } else {
        let s = (p - 1).trailing_zeros();
        let q = (p - 1) >> s;
        let z = (2..p).find(|&z| legendre(z as i64, p) == -1).unwrap();
        let mut m = s;
        let mut c = mod_pow(z, q, p);
        let mut t = mod_pow(a, q, p);
        let mut r = mod_pow(a, (q + 1) / 2, p);
        while t != 1 {
            let mut i = 0;
            let mut t2 = t;
            while t2 != 1 {
                t2 = mod_mul(t2, t2, p);
                i += 1;
            }
            let b = mod_pow(c, 1 << (m - i - 1), p);
            m = i;
            c = mod_mul(b, b, p);
            t = mod_mul(t, c, p);
            r = mod_mul(r, b, p);
        }
        r
    };
    Ok(root.min(p - root))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const PRIMES: [u64; 12] = [3, 5, 7, 11, 13, 17, 97, 193, 257, 433, 997, 7681];

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(2, 7), 1);
        assert_eq!(legendre(3, 7), -1);
        assert_eq!(legendre(14, 7), 0);
        assert_eq!(legendre(-1, 7), -1);
        assert_eq!(legendre(-1, 13), 1);
    }

    #[test]
    fn legendre_matches_square_enumeration() {
        for p in PRIMES {
            let squares: Vec<u64> = (1..p).map(|x| x * x % p).collect();
            for a in 0..p {
                let expected = if a == 0 {
                    0
                } else if squares.contains(&a) {
                    1
                } else {
                    -1
                };
                assert_eq!(legendre(a as i64, p), expected, "a={a} p={p}");
            }
        }
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(sqrt_mod(2, 7), Ok(3));
        assert_eq!(sqrt_mod(0, 13), Ok(0));
        assert_eq!(sqrt_mod(3, 7), Err(Error::NotAResidue { value: 3, prime: 7 }));
        assert_eq!(sqrt_mod(4, 13), Ok(2));
    }

    #[test]
    fn sqrt_round_trip_exhaustive() {
        // 7681 = 2^9·15 + 1 exercises the full Tonelli–Shanks loop
        for p in PRIMES {
            for a in 0..p {
                match sqrt_mod(a, p) {
                    Ok(r) => {
                        assert_eq!(r * r % p, a);
                        assert!(r <= p - r || r == 0);
                    }
                    Err(_) => assert_eq!(legendre(a as i64, p), -1),
                }
            }
        }
    }

    proptest! {
        #[test]
        fn legendre_is_multiplicative(a in -1000i64..1000, b in -1000i64..1000, i in 0usize..PRIMES.len()) {
            let p = PRIMES[i];
            prop_assert_eq!(legendre(a * b, p), legendre(a, p) * legendre(b, p));
        }
    }
}
