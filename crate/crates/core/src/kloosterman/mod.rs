//! Generalized Kloosterman sums and the identities and bounds they satisfy.
//!
//! Every term `e((a·u + b·u⁻¹)/m)` is a lookup into a shared [`RootTable`] at
//! the exact integer index `(a·u + b·u⁻¹) mod m`. Terms are accumulated in
//! subgroup-element order with compensated summation, so a value does not
//! depend on how or where it was evaluated: a grid cell and a single
//! [`gks`] call for the same `(a, b)` agree bit for bit.

mod checks;
mod crt;
mod deltoid;
mod salie;

pub use checks::{
    conjecture_report, halving_check, real_halving, theorem3_check, theorem5_check, CheckTally, BOUND_SLACK, IDENTITY_TOL,
    ClassStats, ConjectureReport, HalvingPair, HalvingReport, PairCoverage, Theorem3Report,
    Theorem5Report,
};
pub use crt::{crt_decompose, CrtDecomposition};
pub use deltoid::{cyclotomic_relation_check, deltoid_triples};
pub use salie::{classical, half_subgroup_identity, salie_direct, salie_explicit, tau};

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::TAU;
use core::ops::Range;

use crate::modular::{reduce, UnitSubgroup};
use crate::{CompensatedSum, Error, Result};

pub type ComplexValue = num_complex::Complex64;

/// Largest modulus for which a [`RootTable`] is materialized (16 bytes per entry).
pub const TABLE_LIMIT: u64 = 100_000_000;

/// `e(t/m) = exp(2πi·t/m)` for a residue `t`, with the angle folded into
/// `[-π, π]` before the transcendental call.
#[inline]
pub fn unit_root(t: u64, m: u64) -> ComplexValue {
    let t = t % m;
    if t == 0 {
        return ComplexValue::new(1.0, 0.0);
    }
    let signed = if 2 * t > m { t as f64 - m as f64 } else { t as f64 };
    let (s, c) = libm::sincos(TAU * (signed / m as f64));
    ComplexValue::new(c, s)
}

/// `roots[t] = e(t/m)` for `t ∈ 0..m`.
#[derive(Debug, Clone)]
pub struct RootTable {
    modulus: u64,
    roots: Vec<ComplexValue>,
}

impl RootTable {
    pub fn new(m: u64) -> Result<Self> {
        if m == 0 || m > TABLE_LIMIT {
            return Err(Error::ModulusOutOfRange(m));
        }
        let roots = (0..m).map(|t| unit_root(t, m)).collect();
        Ok(Self { modulus: m, roots })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    #[inline(always)]
    pub fn get(&self, t: u64) -> ComplexValue {
        self.roots[t as usize]
    }

    pub fn as_slice(&self) -> &[ComplexValue] {
        &self.roots
    }
}

/// Evaluates `K(a, b, m, Λ)` for one fixed subgroup.
#[derive(Debug, Clone)]
pub struct SumEvaluator {
    modulus: u64,
    elements: Vec<u64>,
    inverses: Vec<u64>,
    roots: Option<RootTable>,
}

impl SumEvaluator {
    /// Uses a root table when `m ≤ TABLE_LIMIT`, per-term `sincos` otherwise.
    pub fn new(subgroup: &UnitSubgroup) -> Self {
        let mut eval = Self::direct(subgroup);
        eval.roots = RootTable::new(subgroup.modulus()).ok();
        eval
    }

    /// Per-term transcendental evaluation, no table.
    pub fn direct(subgroup: &UnitSubgroup) -> Self {
        Self {
            modulus: subgroup.modulus(),
            elements: subgroup.elements().to_vec(),
            inverses: subgroup.inverses(),
            roots: None,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    #[inline(always)]
    fn phase(&self, t: u64) -> ComplexValue {
        match &self.roots {
            Some(table) => table.get(t),
            None => unit_root(t, self.modulus),
        }
    }

    pub fn eval(&self, a: i64, b: i64) -> ComplexValue {
        let m = self.modulus as u128;
        let a = reduce(a, self.modulus) as u128;
        let b = reduce(b, self.modulus) as u128;
        let mut re = CompensatedSum::new();
        let mut im = CompensatedSum::new();
        for (&u, &v) in self.elements.iter().zip(&self.inverses) {
            let t = ((a * u as u128 + b * v as u128) % m) as u64;
            let z = self.phase(t);
            re.add(z.re);
            im.add(z.im);
        }
        ComplexValue::new(re.value(), im.value())
    }

    /// Fills `out[j] = K(a, b_start + j)`. Indices advance by `u⁻¹` per column
    /// instead of being recomputed, which yields the same integers as [`eval`](Self::eval).
    pub fn eval_row(&self, a: i64, b_start: u64, out: &mut [ComplexValue]) {
        let m = self.modulus;
        let a = reduce(a, m) as u128;
        let b0 = (b_start % m) as u128;
        let mut idx: Vec<u64> = self
            .elements
            .iter()
            .zip(&self.inverses)
            .map(|(&u, &v)| ((a * u as u128 + b0 * v as u128) % m as u128) as u64)
            .collect();
        match &self.roots {
            Some(table) => {
                let roots = table.as_slice();
                for slot in out.iter_mut() {
                    let mut re = CompensatedSum::new();
                    let mut im = CompensatedSum::new();
                    for (t, &step) in idx.iter_mut().zip(&self.inverses) {
                        let z = roots[*t as usize];
                        re.add(z.re);
                        im.add(z.im);
                        // wrap without a branch: the carry is unpredictable
                        let next = *t + step;
                        *t = next - m * (next >= m) as u64;
                    }
                    *slot = ComplexValue::new(re.value(), im.value());
                }
            }
            None => {
                for slot in out.iter_mut() {
                    let mut re = CompensatedSum::new();
                    let mut im = CompensatedSum::new();
                    for (t, &step) in idx.iter_mut().zip(&self.inverses) {
                        let z = unit_root(*t, m);
                        re.add(z.re);
                        im.add(z.im);
                        *t = (*t + step) % m;
                    }
                    *slot = ComplexValue::new(re.value(), im.value());
                }
            }
        }
    }
}

/// `K(a, b, m, Λ)` for a single pair.
pub fn gks(a: i64, b: i64, subgroup: &UnitSubgroup) -> ComplexValue {
    SumEvaluator::new(subgroup).eval(a, b)
}

/// Strategy for filling the rows of a grid. Each row is written by exactly
/// one call of `fill`, and rows never read each other.
pub trait RowExecutor: Sync {
    fn fill_rows(
        &self,
        out: &mut [ComplexValue],
        row_len: usize,
        fill: &(dyn Fn(usize, &mut [ComplexValue]) + Sync),
    );
}

/// Fills rows in order on the calling thread.
#[derive(Debug, Default, Clone, Copy)]
pub struct Sequential;

impl RowExecutor for Sequential {
    fn fill_rows(
        &self,
        out: &mut [ComplexValue],
        row_len: usize,
        fill: &(dyn Fn(usize, &mut [ComplexValue]) + Sync),
    ) {
        for (i, row) in out.chunks_mut(row_len).enumerate() {
            fill(i, row);
        }
    }
}

/// Values `K(a, b, m, Λ)` over `a_range × b_range`, row-major in `a`, with a
/// color class per cell (all zero until [`SumGrid::set_classes`] is called).
#[derive(Debug, Clone)]
pub struct SumGrid {
    subgroup: UnitSubgroup,
    a_range: Range<u64>,
    b_range: Range<u64>,
    values: Vec<ComplexValue>,
    classes: Vec<u32>,
}

/// One cell of a [`SumGrid`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridCell {
    pub a: u64,
    pub b: u64,
    pub value: ComplexValue,
    pub class: u32,
}

impl SumGrid {
    pub fn modulus(&self) -> u64 {
        self.subgroup.modulus()
    }

    pub fn subgroup(&self) -> &UnitSubgroup {
        &self.subgroup
    }

    pub fn a_range(&self) -> Range<u64> {
        self.a_range.clone()
    }

    pub fn b_range(&self) -> Range<u64> {
        self.b_range.clone()
    }

    pub fn rows(&self) -> usize {
        (self.a_range.end - self.a_range.start) as usize
    }

    pub fn cols(&self) -> usize {
        (self.b_range.end - self.b_range.start) as usize
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[ComplexValue] {
        &self.values
    }

    pub fn classes(&self) -> &[u32] {
        &self.classes
    }

    pub fn get(&self, a: u64, b: u64) -> Option<ComplexValue> {
        if !self.a_range.contains(&a) || !self.b_range.contains(&b) {
            return None;
        }
        let i = (a - self.a_range.start) as usize * self.cols() + (b - self.b_range.start) as usize;
        Some(self.values[i])
    }

    /// Cells in `(a, b)` lexicographic order.
    pub fn cells(&self) -> impl Iterator<Item = GridCell> + '_ {
        let cols = self.cols();
        self.values
            .iter()
            .zip(&self.classes)
            .enumerate()
            .map(move |(i, (&value, &class))| GridCell {
                a: self.a_range.start + (i / cols) as u64,
                b: self.b_range.start + (i % cols) as u64,
                value,
                class,
            })
    }

    /// Recomputes every cell's class from its indices.
    pub fn set_classes<F>(&mut self, mut class_of: F) -> Result<()>
    where
        F: FnMut(u64, u64) -> Result<u32>,
    {
        let cols = self.cols() as u64;
        for (i, class) in self.classes.iter_mut().enumerate() {
            let i = i as u64;
            *class = class_of(self.a_range.start + i / cols, self.b_range.start + i % cols)?;
        }
        Ok(())
    }
}

/// Full evaluation of `a_range × b_range` on the calling thread.
pub fn gks_grid(subgroup: &UnitSubgroup, a_range: Range<u64>, b_range: Range<u64>) -> Result<SumGrid> {
    gks_grid_with(subgroup, a_range, b_range, &Sequential)
}

/// As [`gks_grid`], with rows distributed by `executor`.
pub fn gks_grid_with(
    subgroup: &UnitSubgroup,
    a_range: Range<u64>,
    b_range: Range<u64>,
    executor: &dyn RowExecutor,
) -> Result<SumGrid> {
    let m = subgroup.modulus();
    for r in [&a_range, &b_range] {
        if r.start >= r.end || r.end > m {
            return Err(Error::BadRange {
                start: r.start,
                end: r.end,
                modulus: m,
            });
        }
    }
    let evaluator = SumEvaluator::new(subgroup);
    let cols = (b_range.end - b_range.start) as usize;
    let rows = (a_range.end - a_range.start) as usize;
    let mut values = vec![ComplexValue::new(0.0, 0.0); rows * cols];
    let (a0, b0) = (a_range.start, b_range.start);
    executor.fill_rows(&mut values, cols, &|i, row| {
        evaluator.eval_row((a0 + i as u64) as i64, b0, row)
    });
    Ok(SumGrid {
        subgroup: subgroup.clone(),
        a_range,
        b_range,
        classes: vec![0; values.len()],
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modular::{full_unit_group, mod_inv, subgroup_from_generator, subgroup_of_order};
    use proptest::prelude::*;

    /// Term-by-term evaluation with std transcendentals and brute-force inverses.
    fn brute_force(a: i64, b: i64, m: u64, elements: &[u64]) -> (f64, f64) {
        let (mut re, mut im) = (0.0, 0.0);
        for &u in elements {
            let inv = (1..m).find(|v| u * v % m == 1).unwrap();
            let t = (a as i128 * u as i128 + b as i128 * inv as i128).rem_euclid(m as i128);
            let angle = 2.0 * std::f64::consts::PI * t as f64 / m as f64;
            re += angle.cos();
            im += angle.sin();
        }
        (re, im)
    }

    #[test]
    fn gks_examples() {
        let s = subgroup_from_generator(22, 5).unwrap();
        assert_eq!(gks(0, 0, &s), ComplexValue::new(5.0, 0.0));

        let full5 = full_unit_group(5).unwrap();
        let (re, im) = brute_force(1, 1, 5, full5.elements());
        let k = gks(1, 1, &full5);
        assert!((k.re - re).abs() < 1e-12 && (k.im - im).abs() < 1e-12);
        assert!((k.re - 0.381_966_011_250_105).abs() < 1e-12);
        assert!((k.re - (2.0 + 2.0 * (4.0 * std::f64::consts::PI / 5.0).cos())).abs() < 1e-12);

        let qr7 = subgroup_of_order(7, 3).unwrap();
        let (re, im) = brute_force(0, 1, 7, qr7.elements());
        let k = gks(0, 1, &qr7);
        assert!((k.re - re).abs() < 1e-12 && (k.im - im).abs() < 1e-12);
        assert!((k.re + 0.5).abs() < 1e-12);
        assert!((k.im - 7f64.sqrt() / 2.0).abs() < 1e-12);
    }

    #[test]
    fn root_table_invariants() {
        for m in [1u64, 2, 7, 1907, 4820] {
            let t = RootTable::new(m).unwrap();
            assert_eq!(t.get(0), ComplexValue::new(1.0, 0.0));
            for k in 0..m {
                assert!((t.get(k).norm() - 1.0).abs() <= 4.0 * f64::EPSILON);
                let prod = t.get(k) * t.get((m - k) % m);
                assert!((prod - ComplexValue::new(1.0, 0.0)).norm() < 1e-15);
            }
        }
        assert!(RootTable::new(TABLE_LIMIT + 1).is_err());
    }

    #[test]
    fn table_and_direct_paths_agree() {
        let s = subgroup_from_generator(9015, 596).unwrap();
        let table = SumEvaluator::new(&s);
        let direct = SumEvaluator::direct(&s);
        for (a, b) in [(0, 0), (1, 2), (4000, 77), (-5, 9014)] {
            let d = (table.eval(a, b) - direct.eval(a, b)).norm();
            assert!(d <= s.order() as f64 * 1e-12);
        }
    }

    #[test]
    fn row_evaluation_matches_pointwise_bitwise() {
        for (m, w) in [(199u64, 92u64), (4378, 291), (3087, 1010)] {
            let s = subgroup_from_generator(m, w).unwrap();
            let e = SumEvaluator::new(&s);
            let d = SumEvaluator::direct(&s);
            for a in [0i64, 1, 57, m as i64 - 1] {
                let mut row = vec![ComplexValue::new(0.0, 0.0); 40];
                e.eval_row(a, m - 20, &mut row);
                let mut row_d = row.clone();
                d.eval_row(a, m - 20, &mut row_d);
                for (j, (z, zd)) in row.iter().zip(&row_d).enumerate() {
                    let b = (m - 20 + j as u64) as i64;
                    assert_eq!(z.re.to_bits(), e.eval(a, b).re.to_bits());
                    assert_eq!(z.im.to_bits(), e.eval(a, b).im.to_bits());
                    assert_eq!(zd.re.to_bits(), d.eval(a, b).re.to_bits());
                }
            }
        }
    }

    #[test]
    fn grid_examples() {
        let g = gks_grid(&full_unit_group(5).unwrap(), 0..5, 0..5).unwrap();
        assert_eq!(g.len(), 25);
        assert_eq!(g.get(0, 0), Some(ComplexValue::new(4.0, 0.0)));
        assert_eq!(g.get(5, 0), None);

        let s = subgroup_of_order(7, 3).unwrap();
        let g = gks_grid(&s, 0..7, 0..7).unwrap();
        for a in 0..7 {
            for b in 0..7 {
                let z = g.get(a, b).unwrap();
                let w = g.get((7 - a) % 7, (7 - b) % 7).unwrap();
                assert!((z.conj() - w).norm() < 1e-12);
            }
        }
        let cells: Vec<_> = g.cells().collect();
        assert_eq!((cells[8].a, cells[8].b), (1, 1));
        assert!(gks_grid(&s, 3..3, 0..7).is_err());
        assert!(gks_grid(&s, 0..8, 0..7).is_err());
    }

    proptest! {
        #[test]
        fn sum_symmetries(m in 3u64..600, w in 1u64..600, a in -700i64..700, b in -700i64..700) {
            let w = w % m;
            prop_assume!(crate::modular::gcd(w, m) == 1);
            let s = subgroup_from_generator(m, w).unwrap();
            let e = SumEvaluator::new(&s);
            let k = e.eval(a, b);
            prop_assert!((k.conj() - e.eval(-a, -b)).norm() <= 1e-9);
            prop_assert!((k - e.eval(b, a)).norm() <= 1e-9);
            prop_assert!(k.norm() <= s.order() as f64 + 1e-9);
            for (i, &v) in s.elements().iter().enumerate() {
                let av = a as i128 * v as i128 % m as i128;
                let bv = b as i128 * s.inverse_at(i) as i128 % m as i128;
                prop_assert!((k - e.eval(av as i64, bv as i64)).norm() <= 1e-9);
            }
            let (re, im) = brute_force(a, b, m, s.elements());
            prop_assert!((k.re - re).abs() <= s.order() as f64 * 1e-12);
            prop_assert!((k.im - im).abs() <= s.order() as f64 * 1e-12);
            prop_assert_eq!(mod_inv(s.inverse_at(1 % s.order()), m).unwrap(), s.elements()[1 % s.order()]);
        }
    }
}
