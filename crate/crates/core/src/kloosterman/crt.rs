use super::{ComplexValue, SumEvaluator};
use crate::modular::{crt_split, gcd, mod_mul, reduce, subgroup_from_generator};
use crate::{Error, Result};

/// Factors of `K(a, b, m1·m2, ⟨ω⟩)` under the Chinese remainder splitting.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrtDecomposition {
    /// `K(r₂a, r₂b, m₁, ⟨ω mod m₁⟩)`.
    pub left: ComplexValue,
    /// `K(r₁a, r₁b, m₂, ⟨ω mod m₂⟩)`.
    pub right: ComplexValue,
    pub product: ComplexValue,
    /// Whether `⟨ω⟩` is all of `⟨ω mod m₁⟩ × ⟨ω mod m₂⟩`, i.e. the two factor
    /// orders are coprime. The product equals the direct sum only in that case.
    pub splits: bool,
}

/// A factor modulus of 1 contributes the empty-exponent sum `e(0) = 1` and
/// order 1.
fn factor_sum(a: i64, b: i64, m: u64, omega: u64) -> Result<(ComplexValue, usize)> {
    if m == 1 {
        return Ok((ComplexValue::new(1.0, 0.0), 1));
    }
    let subgroup = subgroup_from_generator(m, omega % m)?;
    Ok((SumEvaluator::new(&subgroup).eval(a, b), subgroup.order()))
}

pub fn crt_decompose(a: i64, b: i64, m1: u64, m2: u64, omega: u64) -> Result<CrtDecomposition> {
    let (r1, r2) = crt_split(m1, m2)?;
    let m = m1
        .checked_mul(m2)
        .filter(|&m| m < crate::MAX_MODULUS)
        .ok_or(Error::ModulusOutOfRange(m1.saturating_mul(m2)))?;
    if gcd(omega % m, m) != 1 {
        return Err(Error::NotAUnit { value: omega % m, modulus: m });
    }
    let scaled = |r: u64, f: u64, x: i64| mod_mul(r, reduce(x, f.max(1)), f.max(1)) as i64;
    let (left, left_order) = factor_sum(scaled(r2, m1, a), scaled(r2, m1, b), m1, omega)?;
    let (right, right_order) = factor_sum(scaled(r1, m2, a), scaled(r1, m2, b), m2, omega)?;
    Ok(CrtDecomposition {
        left,
        right,
        product: left * right,
        splits: gcd(left_order as u64, right_order as u64) == 1,
    })
}
