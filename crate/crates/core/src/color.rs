//! Color classes for plotted sums: `a + b mod k`, the Legendre symbol of
//! `ab`, the difference of discrete logarithms mod 4, or a single class.

use crate::modular::{factorize, is_prime, legendre, reduce, LogTable};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColorScheme {
    SumModK { k: u64 },
    /// 0 when `(ab/p) = 1`, 1 when `−1`, 2 when `p | ab`.
    LegendreAb { p: u64 },
    /// `(r − s) mod 4` where `a = g^r`, `b = g^s` modulo `p`.
    DlogDiffMod4 { p: u64, g: u64 },
    Constant,
}

impl ColorScheme {
    /// Number of classes the scheme can produce.
    pub fn class_count(&self) -> u64 {
        match *self {
            ColorScheme::SumModK { k } => k,
            ColorScheme::LegendreAb { .. } => 3,
            ColorScheme::DlogDiffMod4 { .. } => 4,
            ColorScheme::Constant => 1,
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            ColorScheme::SumModK { k: 0 } => Err(Error::InvalidArgument("k must be positive")),
            ColorScheme::LegendreAb { p } | ColorScheme::DlogDiffMod4 { p, .. } if p == 2 || !is_prime(p) => {
                Err(Error::NotPrime(p))
            }
            _ => Ok(()),
        }
    }
}

/// Class of the point `(a, b)`.
pub fn classify(a: i64, b: i64, scheme: &ColorScheme) -> Result<u32> {
    scheme.validate()?;
    match *scheme {
        ColorScheme::SumModK { k } => Ok(((reduce(a, k) + reduce(b, k)) % k) as u32),
        ColorScheme::LegendreAb { p } => Ok(legendre_class(a, b, p)),
        ColorScheme::DlogDiffMod4 { p, g } => {
            let r = crate::modular::discrete_log(g, reduce(a, p), p)?;
            let s = crate::modular::discrete_log(g, reduce(b, p), p)?;
            Ok(((r + 4 * p - s) % 4) as u32)
        }
        ColorScheme::Constant => Ok(0),
    }
}

fn legendre_class(a: i64, b: i64, p: u64) -> u32 {
    let ab = crate::modular::mod_mul(reduce(a, p), reduce(b, p), p);
    match legendre(ab as i64, p) {
        1 => 0,
        -1 => 1,
        _ => 2,
    }
}

/// A scheme prepared for classifying many points; the discrete-log scheme
/// builds a full log table once.
#[derive(Debug, Clone)]
pub enum Classifier {
    Simple(ColorScheme),
    Logs(LogTable),
}

impl Classifier {
    pub fn new(scheme: &ColorScheme) -> Result<Self> {
        scheme.validate()?;
        Ok(match *scheme {
            ColorScheme::DlogDiffMod4 { p, g } => Classifier::Logs(LogTable::new(g, p)?),
            other => Classifier::Simple(other),
        })
    }

    pub fn classify(&self, a: i64, b: i64) -> Result<u32> {
        match self {
            Classifier::Simple(scheme) => classify(a, b, scheme),
            Classifier::Logs(table) => {
                let p = table.modulus();
                let r = table.log(reduce(a, p))?;
                let s = table.log(reduce(b, p))?;
                Ok(((r + 4 * p - s) % 4) as u32)
            }
        }
    }
}

/// `m` divided by its largest prime-power factor, the coloring modulus that
/// separates the small CRT component (22 for `m = 4378 = 22·199`). `None`
/// when `m` is a prime power.
pub fn suggested_k(m: u64) -> Option<u64> {
    if m < 2 {
        return None;
    }
    let largest = factorize(m).prime_powers.iter().map(|&(p, e)| p.pow(e)).max()?;
    Some(m / largest).filter(|&k| k > 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modular::{mod_pow, primitive_root};

    #[test]
    fn examples() {
        assert_eq!(classify(3, 8, &ColorScheme::SumModK { k: 22 }), Ok(11));
        assert_eq!(classify(1, 3, &ColorScheme::LegendreAb { p: 7 }), Ok(1));
        assert_eq!(classify(2, 4, &ColorScheme::LegendreAb { p: 7 }), Ok(0));
        assert_eq!(classify(0, 4, &ColorScheme::LegendreAb { p: 7 }), Ok(2));
        let scheme = ColorScheme::DlogDiffMod4 { p: 13, g: 2 };
        assert_eq!(classify(mod_pow(2, 5, 13) as i64, 2, &scheme), Ok(0));
        assert_eq!(classify(1, 2, &scheme), Ok(3));
        assert_eq!(classify(0, 2, &scheme), Err(Error::NotAUnit { value: 0, modulus: 13 }));
        assert_eq!(classify(5, -7, &ColorScheme::Constant), Ok(0));
        assert_eq!(classify(-1, 0, &ColorScheme::SumModK { k: 5 }), Ok(4));
        assert!(classify(1, 1, &ColorScheme::SumModK { k: 0 }).is_err());
        assert_eq!(classify(1, 1, &ColorScheme::LegendreAb { p: 9 }), Err(Error::NotPrime(9)));
    }

    #[test]
    fn classifier_matches_classify() {
        for p in [13u64, 29, 101] {
            let g = primitive_root(p).unwrap();
            for scheme in [
                ColorScheme::DlogDiffMod4 { p, g },
                ColorScheme::LegendreAb { p },
                ColorScheme::SumModK { k: 6 },
                ColorScheme::Constant,
            ] {
                let prepared = Classifier::new(&scheme).unwrap();
                for a in 1..p as i64 {
                    for b in 1..p as i64 {
                        let class = classify(a, b, &scheme).unwrap();
                        assert_eq!(prepared.classify(a, b).unwrap(), class);
                        assert!((class as u64) < scheme.class_count());
                    }
                }
            }
        }
        assert!(Classifier::new(&ColorScheme::DlogDiffMod4 { p: 13, g: 3 }).is_err());
    }

    #[test]
    fn suggested_modulus() {
        assert_eq!(suggested_k(4378), Some(22));
        assert_eq!(suggested_k(15), Some(3));
        assert_eq!(suggested_k(49), None);
        assert_eq!(suggested_k(1), None);
    }
}
