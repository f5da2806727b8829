//! Point sets `S_q = {({(aω^k + bω^{−k})/q})_k : a mod q}` and the
//! diagnostics used to watch them spread out: Weyl sums, box discrepancy and
//! cell coverage of the hypocycloid by sum values.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::HypocycloidRegion;
use crate::kloosterman::ComplexValue;
use crate::modular::{euler_phi, mod_mul, odd_prime_power, reduce, subgroup_of_order};
use crate::{CompensatedSum, Error, Result};

/// Where a point set came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Provenance {
    pub q: u64,
    pub d: u64,
    pub omega: u64,
    pub b: i64,
}

/// Points of `[0,1)^dimension`, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticePointSet {
    dimension: usize,
    coords: Vec<f64>,
    provenance: Option<Provenance>,
}

impl LatticePointSet {
    /// Wraps arbitrary points; every coordinate must lie in `[0,1)`.
    pub fn from_points(dimension: usize, coords: Vec<f64>) -> Result<Self> {
        if dimension == 0 || coords.len() % dimension != 0 {
            return Err(Error::InvalidArgument("coordinate count is not a multiple of the dimension"));
        }
        if coords.iter().any(|x| !(0.0..1.0).contains(x)) {
            return Err(Error::InvalidArgument("coordinates must lie in [0, 1)"));
        }
        Ok(Self {
            dimension,
            coords,
            provenance: None,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dimension
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dimension..(i + 1) * self.dimension]
    }

    pub fn points(&self) -> impl Iterator<Item = &[f64]> + '_ {
        self.coords.chunks_exact(self.dimension)
    }

    pub fn provenance(&self) -> Option<Provenance> {
        self.provenance
    }
}

/// `S_q` for the order-`d` subgroup generated by the canonical `ω`
/// (see [`subgroup_of_order`]), with `φ(d)` coordinates per point.
pub fn build_s_q(q: u64, d: u64, b: i64) -> Result<LatticePointSet> {
    let (p, _) = odd_prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if d == 0 || (p - 1) % d != 0 {
        return Err(Error::WrongResidueClass { value: p, residue: 1, modulus: d });
    }
    let subgroup = subgroup_of_order(q, d)?;
    let dimension = euler_phi(d) as usize;
    let b_mod = reduce(b, q);
    let qf = q as f64;
    let mut coords = Vec::with_capacity(q as usize * dimension);
    for a in 0..q {
        for k in 0..dimension {
            let r = (mod_mul(a, subgroup.elements()[k], q) + mod_mul(b_mod, subgroup.inverse_at(k), q)) % q;
            coords.push(r as f64 / qf);
        }
    }
    Ok(LatticePointSet {
        dimension,
        coords,
        provenance: Some(Provenance {
            q,
            d,
            omega: subgroup.generator(),
            b,
        }),
    })
}

/// `|(1/|S|) Σ_{x∈S} e(x·y)|`.
pub fn weyl_sum(points: &LatticePointSet, y: &[i64]) -> Result<f64> {
    if y.len() != points.dimension {
        return Err(Error::DimensionMismatch {
            expected: points.dimension,
            got: y.len(),
        });
    }
    if y.iter().all(|&c| c == 0) {
        return Err(Error::ZeroVector);
    }
    if points.is_empty() {
        return Err(Error::InvalidArgument("empty point set"));
    }
    let mut re = CompensatedSum::new();
    let mut im = CompensatedSum::new();
    for x in points.points() {
        let phase: f64 = x.iter().zip(y).map(|(xi, &yi)| xi * yi as f64).sum();
        let frac = phase - libm::round(phase);
        let (s, c) = libm::sincos(core::f64::consts::TAU * frac);
        re.add(c);
        im.add(s);
    }
    let n = points.len() as f64;
    Ok((libm::hypot(re.value(), im.value()) / n).min(1.0))
}

/// Every nonzero integer vector of length `dimension` with entries in −2..=2.
pub fn weyl_battery(dimension: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut v = vec![-2i64; dimension];
    loop {
        if v.iter().any(|&c| c != 0) {
            out.push(v.clone());
        }
        let mut i = 0;
        loop {
            if i == dimension {
                return out;
            }
            if v[i] < 2 {
                v[i] += 1;
                break;
            }
            v[i] = -2;
            i += 1;
        }
    }
}

/// `|#{x ∈ box}/|S| − vol(box)|` for the half-open box `[lo, hi)`.
pub fn box_discrepancy(points: &LatticePointSet, lo: &[f64], hi: &[f64]) -> Result<f64> {
    let dim = points.dimension;
    if lo.len() != dim || hi.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: if lo.len() != dim { lo.len() } else { hi.len() },
        });
    }
    if points.is_empty() {
        return Err(Error::InvalidArgument("empty point set"));
    }
    let volume: f64 = lo.iter().zip(hi).map(|(l, h)| (h - l).max(0.0)).product();
    let inside = points
        .points()
        .filter(|x| x.iter().zip(lo.iter().zip(hi)).all(|(xi, (l, h))| l <= xi && xi < h))
        .count();
    Ok((inside as f64 / points.len() as f64 - volume).abs())
}

/// Largest [`box_discrepancy`] over `n_boxes` boxes drawn from a seeded
/// generator. A lower bound on the true discrepancy.
pub fn discrepancy_estimate(points: &LatticePointSet, n_boxes: usize, seed: u64) -> Result<f64> {
    if n_boxes == 0 {
        return Err(Error::InvalidArgument("at least one box is required"));
    }
    let dim = points.dimension;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut lo, mut hi) = (vec![0.0; dim], vec![0.0; dim]);
    let mut worst = 0.0f64;
    for _ in 0..n_boxes {
        for k in 0..dim {
            let (s, t): (f64, f64) = (rng.random(), rng.random());
            lo[k] = s.min(t);
            hi[k] = s.max(t);
        }
        worst = worst.max(box_discrepancy(points, &lo, &hi)?);
    }
    Ok(worst)
}

/// Cells of an `n × n` grid over `[−d, d]²` whose centers lie in the region.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Coverage {
    pub covered: usize,
    pub total: usize,
}

impl Coverage {
    pub fn fraction(&self) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            self.covered as f64 / self.total as f64
        }
    }
}

/// How many in-region cells contain at least one of `values`.
pub fn cell_coverage(values: &[ComplexValue], region: &HypocycloidRegion, n: usize) -> Result<Coverage> {
    if n == 0 {
        return Err(Error::InvalidArgument("cell grid must be nonempty"));
    }
    let d = region.outer_radius();
    let width = 2.0 * d / n as f64;
    let mut hit = vec![false; n * n];
    for z in values {
        let col = libm::floor((z.re + d) / width);
        let row = libm::floor((z.im + d) / width);
        if (0.0..n as f64).contains(&col) && (0.0..n as f64).contains(&row) {
            hit[row as usize * n + col as usize] = true;
        }
    }
    let mut coverage = Coverage { covered: 0, total: 0 };
    for row in 0..n {
        for col in 0..n {
            let center = ComplexValue::new(-d + (col as f64 + 0.5) * width, -d + (row as f64 + 0.5) * width);
            if region.contains(center) {
                coverage.total += 1;
                coverage.covered += hit[row * n + col] as usize;
            }
        }
    }
    Ok(coverage)
}
