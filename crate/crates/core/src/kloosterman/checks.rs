//! Exhaustive and sampled verification of the bounds satisfied by the
//! sums over index-2 and index-4 subgroups of `(Z/pZ)ˣ`.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{gks_grid_with, salie::tau, ComplexValue, RowExecutor, SumEvaluator};
use crate::modular::{is_prime, legendre, primitive_root, subgroup_of_order, LogTable};
use crate::{Error, Result};

/// Slack added to every proven inequality.
pub const BOUND_SLACK: f64 = 1e-9;
/// Tolerance for every proven identity.
pub const IDENTITY_TOL: f64 = 1e-8;

/// Count of checks and failures, with the largest observed deviation
/// (excess over a bound, or distance from an identity).
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CheckTally {
    pub checked: u64,
    pub failed: u64,
    pub worst: f64,
}

impl CheckTally {
    pub fn record(&mut self, deviation: f64, limit: f64) {
        self.checked += 1;
        if !(deviation <= limit) {
            self.failed += 1;
        }
        if deviation > self.worst || deviation.is_nan() {
            self.worst = deviation;
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

/// Which `(a, b)` pairs of units a check visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairCoverage {
    Exhaustive,
    /// `count` pairs drawn uniformly from `[1, p−1]²` with a seeded ChaCha8 stream.
    Sampled { count: usize, seed: u64 },
}

impl PairCoverage {
    fn pairs(self, p: u64) -> Vec<(u64, u64)> {
        match self {
            PairCoverage::Exhaustive => (1..p).flat_map(|a| (1..p).map(move |b| (a, b))).collect(),
            PairCoverage::Sampled { count, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..count)
                    .map(|_| (rng.random_range(1..p), rng.random_range(1..p)))
                    .collect()
            }
        }
    }
}

fn require_prime_class(p: u64, residue: u64, modulus: u64) -> Result<()> {
    if !is_prime(p) || p == 2 {
        return Err(Error::NotPrime(p));
    }
    if p % modulus != residue {
        return Err(Error::WrongResidueClass {
            value: p,
            residue,
            modulus,
        });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct Theorem3Report {
    pub p: u64,
    /// `|Re K|, |Im K| ≤ √p/2` over all `p ∤ ab`, the bound as stated; one
    /// record per pair, worst component.
    pub half_root_box: CheckTally,
    /// `|Re K|, |Im K| ≤ √p`, the bound delivered by the Salié and Weil
    /// estimates (`|T|/2 ≤ √p`, `|K(a,b,p)|/2 ≤ √p`).
    pub root_box: CheckTally,
    /// `K = ½((b/p)τ_p − 1)` for `a = 0`, and the swapped form for `b = 0`.
    pub axis: CheckTally,
    /// `K(0, 0) = (p−1)/2`.
    pub origin: CheckTally,
}

impl Theorem3Report {
    pub fn passed(&self) -> bool {
        self.half_root_box.passed() && self.root_box.passed() && self.axis.passed() && self.origin.passed()
    }
}

/// Full-grid check of `K(a, b, p, (p−1)/2)` for a prime `p ≡ 3 (mod 4)`.
pub fn theorem3_check(p: u64, executor: &dyn RowExecutor) -> Result<Theorem3Report> {
    require_prime_class(p, 3, 4)?;
    let subgroup = subgroup_of_order(p, (p - 1) / 2)?;
    let grid = gks_grid_with(&subgroup, 0..p, 0..p, executor)?;
    let half_root = libm::sqrt(p as f64) / 2.0;
    let tau_p = tau(p)?;
    let axis_value = |c: u64| (tau_p * legendre(c as i64, p) as f64 - 1.0) * 0.5;

    let mut report = Theorem3Report {
        p,
        half_root_box: CheckTally::default(),
        root_box: CheckTally::default(),
        axis: CheckTally::default(),
        origin: CheckTally::default(),
    };
    for cell in grid.cells() {
        let k = cell.value;
        match (cell.a, cell.b) {
            (0, 0) => report
                .origin
                .record((k - ComplexValue::new((p - 1) as f64 / 2.0, 0.0)).norm(), IDENTITY_TOL),
            (0, b) => report.axis.record((k - axis_value(b)).norm(), IDENTITY_TOL),
            (a, 0) => report.axis.record((k - axis_value(a)).norm(), IDENTITY_TOL),
            _ => {
                let component = k.re.abs().max(k.im.abs());
                report.half_root_box.record(component - half_root, BOUND_SLACK);
                report.root_box.record(component - 2.0 * half_root, BOUND_SLACK);
            }
        }
    }
    Ok(report)
}

/// `K` over the subgroups of order `(p−1)/2^{n−1}` and `(p−1)/2^n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalvingPair {
    pub full: ComplexValue,
    pub halved: ComplexValue,
}

impl HalvingPair {
    /// `|full − 2·Re(halved)|`.
    pub fn defect(&self) -> f64 {
        (self.full - ComplexValue::new(2.0 * self.halved.re, 0.0)).norm()
    }
}

fn halving_orders(p: u64, n: u32) -> Result<(u64, u64)> {
    if !is_prime(p) || p == 2 {
        return Err(Error::NotPrime(p));
    }
    let bad = Error::BadForm { prime: p, n };
    if n == 0 || n >= 63 || (p - 1) % (1 << n) != 0 {
        return Err(bad);
    }
    let odd = (p - 1) >> n;
    if odd % 2 == 0 {
        return Err(bad);
    }
    Ok((2 * odd, odd))
}

/// Both sides of `K(a, b, p, (p−1)/2^{n−1}) = 2·Re K(a, b, p, (p−1)/2^n)` for
/// `p = 2^n·d + 1` with `d` odd.
pub fn real_halving(a: i64, b: i64, p: u64, n: u32) -> Result<HalvingPair> {
    let (full, halved) = halving_orders(p, n)?;
    Ok(HalvingPair {
        full: SumEvaluator::new(&subgroup_of_order(p, full)?).eval(a, b),
        halved: SumEvaluator::new(&subgroup_of_order(p, halved)?).eval(a, b),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct HalvingReport {
    pub p: u64,
    pub n: u32,
    pub identity: CheckTally,
    /// `|Im|` of the sum over the even-order subgroup.
    pub realness: CheckTally,
}

impl HalvingReport {
    pub fn passed(&self) -> bool {
        self.identity.passed() && self.realness.passed()
    }
}

/// [`real_halving`] over all `0 ≤ a, b < p`.
pub fn halving_check(p: u64, n: u32) -> Result<HalvingReport> {
    let (full, halved) = halving_orders(p, n)?;
    let full = SumEvaluator::new(&subgroup_of_order(p, full)?);
    let halved = SumEvaluator::new(&subgroup_of_order(p, halved)?);
    let mut report = HalvingReport {
        p,
        n,
        identity: CheckTally::default(),
        realness: CheckTally::default(),
    };
    for a in 0..p as i64 {
        for b in 0..p as i64 {
            let pair = HalvingPair {
                full: full.eval(a, b),
                halved: halved.eval(a, b),
            };
            report.identity.record(pair.defect(), IDENTITY_TOL);
            report.realness.record(pair.full.im.abs(), BOUND_SLACK);
        }
    }
    Ok(report)
}

/// Per-class extremes of `K(g^r, g^s, p, (p−1)/4)`, classed by `r − s mod 4`.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ClassStats {
    pub count: u64,
    pub max_abs_re: f64,
    pub max_abs_im: f64,
}

/// Visits `(class, K(a, b, p, (p−1)/4))` for every covered pair and returns
/// per-class extremes.
fn visit_quarter_sums(
    p: u64,
    coverage: PairCoverage,
    mut visit: impl FnMut(usize, ComplexValue),
) -> Result<[ClassStats; 4]> {
    require_prime_class(p, 5, 8)?;
    let g = primitive_root(p)?;
    let logs = LogTable::new(g, p)?;
    let eval = SumEvaluator::new(&subgroup_of_order(p, (p - 1) / 4)?);
    let mut stats = [ClassStats::default(); 4];
    for (a, b) in coverage.pairs(p) {
        let class = ((logs.log(a)? + 4 - logs.log(b)? % 4) % 4) as usize;
        let k = eval.eval(a as i64, b as i64);
        let s = &mut stats[class];
        s.count += 1;
        s.max_abs_re = s.max_abs_re.max(k.re.abs());
        s.max_abs_im = s.max_abs_im.max(k.im.abs());
        visit(class, k);
    }
    Ok(stats)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Theorem5Report {
    pub p: u64,
    pub generator: u64,
    pub classes: [ClassStats; 4],
    /// `|Re K| ≤ √p` in classes 0, 2 and `≤ √p/2` in classes 1, 3.
    pub real_bound: CheckTally,
    /// `|Im K| = 0` in class 2.
    pub imaginary_zero: CheckTally,
}

impl Theorem5Report {
    pub fn passed(&self) -> bool {
        self.real_bound.passed() && self.imaginary_zero.passed()
    }
}

/// Bounds on `K(a, b, p, (p−1)/4)` for `p ≡ 5 (mod 8)` by the class of
/// `r − s mod 4`, where `a = g^r`, `b = g^s` for the smallest primitive root `g`.
pub fn theorem5_check(p: u64, coverage: PairCoverage) -> Result<Theorem5Report> {
    require_prime_class(p, 5, 8)?;
    let root = libm::sqrt(p as f64);
    let mut real_bound = CheckTally::default();
    let mut imaginary_zero = CheckTally::default();
    let classes = visit_quarter_sums(p, coverage, |class, k| {
        let bound = if class % 2 == 0 { root } else { root / 2.0 };
        real_bound.record(k.re.abs() - bound, BOUND_SLACK);
        if class == 2 {
            imaginary_zero.record(k.im.abs(), IDENTITY_TOL);
        }
    })?;
    Ok(Theorem5Report {
        p,
        generator: primitive_root(p)?,
        classes,
        real_bound,
        imaginary_zero,
    })
}

/// Observed imaginary extremes against the conjectured bounds
/// `√(2p)/2` (classes 1, 3) and `√p` (class 0). Informational only.
#[derive(Debug, Clone, PartialEq)]
pub struct ConjectureReport {
    pub p: u64,
    pub classes: [ClassStats; 4],
    /// Conjectured bound per class; `None` for class 2 where `Im K = 0` is proven.
    pub bounds: [Option<f64>; 4],
}

impl ConjectureReport {
    /// Whether the observed maximum respects the conjectured bound, per class.
    pub fn holds(&self) -> [Option<bool>; 4] {
        let mut out = [None; 4];
        for c in 0..4 {
            out[c] = self.bounds[c].map(|bound| self.classes[c].max_abs_im <= bound + BOUND_SLACK);
        }
        out
    }
}

pub fn conjecture_report(p: u64, coverage: PairCoverage) -> Result<ConjectureReport> {
    let classes = visit_quarter_sums(p, coverage, |_, _| {})?;
    let root = libm::sqrt(p as f64);
    let odd = libm::sqrt(2.0 * p as f64) / 2.0;
    Ok(ConjectureReport {
        p,
        classes,
        bounds: [Some(root), Some(odd), None, Some(odd)],
    })
}
