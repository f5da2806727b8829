//! The filled `d`-cusped hypocycloid `H_d`, bounded by
//! `θ ↦ (d−1)e^{iθ} + e^{(1−d)iθ}`, and the torus map whose image it is.
//!
//! Membership is decided against a sampled boundary polygon by winding
//! number, with a tolerance band around the boundary counted as inside.
//! Edges are bucketed by height so a query only visits the edges that can
//! cross its horizontal ray or lie within the tolerance of it.

use alloc::vec;
use alloc::vec::Vec;

use crate::kloosterman::ComplexValue;
use crate::{Error, Result};

/// Boundary sample count used for membership decisions (rounded up to a
/// multiple of `d` so every cusp is a vertex).
pub const MEMBERSHIP_SAMPLES: usize = 8192;
pub const MEMBERSHIP_TOLERANCE: f64 = 1e-6;
/// Torus inputs may deviate this far from modulus 1.
pub const TORUS_TOLERANCE: f64 = 1e-6;

const BANDS: usize = 1024;

/// A point of the hypocycloid boundary.
pub fn hypocycloid_point(d: u32, theta: f64) -> ComplexValue {
    let (s1, c1) = libm::sincos(theta);
    let (s2, c2) = libm::sincos((1.0 - d as f64) * theta);
    ComplexValue::new((d - 1) as f64 * c1 + c2, (d - 1) as f64 * s1 + s2)
}

#[derive(Debug, Clone)]
pub struct HypocycloidRegion {
    cusps: u32,
    boundary: Vec<ComplexValue>,
    tolerance: f64,
    y_min: f64,
    band_height: f64,
    bands: Vec<Vec<u32>>,
}

/// `n` boundary samples at `θ_j = 2πj/n`, tolerance [`MEMBERSHIP_TOLERANCE`].
pub fn boundary_samples(d: u32, n: usize) -> Result<HypocycloidRegion> {
    if d < 3 {
        return Err(Error::InvalidArgument("a hypocycloid needs at least 3 cusps"));
    }
    if n < 64 {
        return Err(Error::InvalidArgument("at least 64 boundary samples are required"));
    }
    let boundary = (0..n)
        .map(|j| hypocycloid_point(d, core::f64::consts::TAU * j as f64 / n as f64))
        .collect();
    Ok(HypocycloidRegion::build(d, boundary, MEMBERSHIP_TOLERANCE))
}

impl HypocycloidRegion {
    /// The region used for containment checks: at least
    /// [`MEMBERSHIP_SAMPLES`] samples, a multiple of `d`.
    pub fn for_membership(d: u32) -> Result<Self> {
        let d_usize = (d as usize).max(1);
        boundary_samples(d, MEMBERSHIP_SAMPLES.div_ceil(d_usize) * d_usize)
    }

    pub fn with_tolerance(self, tolerance: f64) -> Self {
        Self::build(self.cusps, self.boundary, tolerance.max(0.0))
    }

    fn build(cusps: u32, boundary: Vec<ComplexValue>, tolerance: f64) -> Self {
        let reach = cusps as f64 + tolerance;
        let y_min = -reach;
        let band_height = 2.0 * reach / BANDS as f64;
        let mut bands = vec![Vec::new(); BANDS];
        let n = boundary.len();
        for i in 0..n {
            let (p, q) = (boundary[i], boundary[(i + 1) % n]);
            let lo = p.im.min(q.im) - tolerance;
            let hi = p.im.max(q.im) + tolerance;
            let first = libm::floor((lo - y_min) / band_height).max(0.0) as usize;
            let last = (libm::floor((hi - y_min) / band_height) as usize).min(BANDS - 1);
            for band in &mut bands[first..=last] {
                band.push(i as u32);
            }
        }
        Self {
            cusps,
            boundary,
            tolerance,
            y_min,
            band_height,
            bands,
        }
    }

    pub fn cusps(&self) -> u32 {
        self.cusps
    }

    pub fn boundary(&self) -> &[ComplexValue] {
        &self.boundary
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    /// Radius of the circle through the cusps.
    pub fn outer_radius(&self) -> f64 {
        self.cusps as f64
    }

    fn edge(&self, i: usize) -> (ComplexValue, ComplexValue) {
        (self.boundary[i], self.boundary[(i + 1) % self.boundary.len()])
    }

    /// Inside the polygon, or within `tolerance` of it.
    pub fn contains(&self, z: ComplexValue) -> bool {
        let r = z.norm();
        let d = self.cusps as f64;
        if !r.is_finite() || r > d + self.tolerance {
            return false;
        }
        // The boundary never comes closer to the center than d − 2.
        if r < d - 2.0 - self.tolerance {
            return true;
        }
        let band = libm::floor((z.im - self.y_min) / self.band_height);
        if band < 0.0 || band >= BANDS as f64 {
            return false;
        }
        let mut winding = 0i32;
        let mut nearest = f64::INFINITY;
        for &i in &self.bands[band as usize] {
            let (p, q) = self.edge(i as usize);
            let side = cross(q - p, z - p);
            if p.im <= z.im {
                if q.im > z.im && side > 0.0 {
                    winding += 1;
                }
            } else if q.im <= z.im && side < 0.0 {
                winding -= 1;
            }
            nearest = nearest.min(segment_distance_sq(p, q, z));
        }
        winding != 0 || nearest <= self.tolerance * self.tolerance
    }

    /// Distance from `z` to the boundary polygon, scanning every edge.
    pub fn distance_to_boundary(&self, z: ComplexValue) -> f64 {
        let nearest = (0..self.boundary.len())
            .map(|i| {
                let (p, q) = self.edge(i);
                segment_distance_sq(p, q, z)
            })
            .fold(f64::INFINITY, f64::min);
        libm::sqrt(nearest)
    }
}

#[inline]
fn cross(u: ComplexValue, v: ComplexValue) -> f64 {
    u.re * v.im - u.im * v.re
}

fn segment_distance_sq(p: ComplexValue, q: ComplexValue, z: ComplexValue) -> f64 {
    let edge = q - p;
    let len_sq = edge.norm_sqr();
    let t = if len_sq > 0.0 {
        (((z - p).re * edge.re + (z - p).im * edge.im) / len_sq).clamp(0.0, 1.0)
    } else {
        0.0
    };
    (p + edge * t - z).norm_sqr()
}

/// `z₁ + … + z_{d−1} + 1/(z₁⋯z_{d−1})` for points of the unit circle.
pub fn f_map(zs: &[ComplexValue]) -> Result<ComplexValue> {
    if zs.is_empty() {
        return Err(Error::InvalidArgument("torus map needs at least one coordinate"));
    }
    if let Some(z) = zs.iter().find(|z| (z.norm() - 1.0).abs() > TORUS_TOLERANCE) {
        return Err(Error::NotOnTorus { modulus: z.norm() });
    }
    let sum: ComplexValue = zs.iter().sum();
    let product: ComplexValue = zs.iter().product();
    Ok(sum + ComplexValue::new(1.0, 0.0) / product)
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::{PI, TAU};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    fn random_torus(rng: &mut ChaCha8Rng, n: usize) -> Vec<ComplexValue> {
        (0..n).map(|_| ComplexValue::from_polar(1.0, rng.random_range(0.0..TAU))).collect()
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(hypocycloid_point(3, 0.0), c(3.0, 0.0));
        let half_turn = hypocycloid_point(3, PI);
        assert!((half_turn - c(-1.0, 0.0)).norm() < 1e-12);

        let r = boundary_samples(5, 50_000).unwrap();
        let max = r.boundary().iter().map(|z| z.norm()).fold(0.0, f64::max);
        let min = r.boundary().iter().map(|z| z.norm()).fold(f64::INFINITY, f64::min);
        assert!((max - 5.0).abs() < 1e-6);
        assert!((min - 3.0).abs() < 1e-6);

        assert!(boundary_samples(2, 100).is_err());
        assert!(boundary_samples(3, 63).is_err());
        assert_eq!(HypocycloidRegion::for_membership(3).unwrap().boundary().len(), 8193);
        assert_eq!(HypocycloidRegion::for_membership(4).unwrap().boundary().len(), 8192);
    }

    #[test]
    fn contains_examples() {
        let h3 = HypocycloidRegion::for_membership(3).unwrap();
        assert!(h3.contains(c(0.0, 0.0)));
        assert!(h3.contains(c(3.0, 0.0)));
        assert!(h3.contains(ComplexValue::from_polar(3.0, TAU / 3.0)));
        assert!(!h3.contains(c(3.1, 0.0)));
        // between the inscribed circle and the cusp circle, on both sides of a side
        assert!(h3.contains(c(-0.99, 0.0)));
        assert!(!h3.contains(c(-1.01, 0.0)));
        assert!(!h3.contains(c(f64::NAN, 0.0)));
    }

    #[test]
    fn banded_membership_matches_full_winding() {
        fn full_winding(r: &HypocycloidRegion, z: ComplexValue) -> bool {
            let b = r.boundary();
            let mut wn = 0;
            for i in 0..b.len() {
                let (p, q) = (b[i], b[(i + 1) % b.len()]);
                let side = cross(q - p, z - p);
                if p.im <= z.im {
                    if q.im > z.im && side > 0.0 {
                        wn += 1;
                    }
                } else if q.im <= z.im && side < 0.0 {
                    wn -= 1;
                }
            }
            wn != 0 || r.distance_to_boundary(z) <= r.tolerance()
        }
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for d in [3, 5, 7] {
            let region = boundary_samples(d, 1024).unwrap();
            for _ in 0..2000 {
                let z = c(rng.random_range(-7.5..7.5), rng.random_range(-7.5..7.5));
                assert_eq!(region.contains(z), full_winding(&region, z), "d={d} z={z}");
            }
        }
    }

    #[test]
    fn f_map_examples() {
        let one = c(1.0, 0.0);
        assert_eq!(f_map(&[one, one]).unwrap(), c(3.0, 0.0));
        let w = ComplexValue::from_polar(1.0, TAU / 3.0);
        assert!((f_map(&[w, w]).unwrap() - w * 3.0).norm() < 1e-12);
        assert!(matches!(f_map(&[one, c(1.1, 0.0)]), Err(Error::NotOnTorus { .. })));
        assert!(f_map(&[]).is_err());
    }

    #[test]
    fn torus_image_is_contained() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let h5 = HypocycloidRegion::for_membership(5).unwrap();
        for _ in 0..100_000 {
            assert!(h5.contains(f_map(&random_torus(&mut rng, 4)).unwrap()));
        }
        for d in [3u32, 4, 7] {
            let region = HypocycloidRegion::for_membership(d).unwrap();
            for _ in 0..20_000 {
                let z = f_map(&random_torus(&mut rng, d as usize - 1)).unwrap();
                assert!(region.contains(z), "d={d} z={z}");
            }
        }
    }

    #[test]
    fn boundary_is_rotation_invariant() {
        for d in [3u32, 4, 5, 7] {
            let n = 64 * d as usize;
            let region = boundary_samples(d, n).unwrap();
            let rot = ComplexValue::from_polar(1.0, TAU / d as f64);
            let shift = n / d as usize;
            for (j, &z) in region.boundary().iter().enumerate() {
                let target = region.boundary()[(j + shift) % n];
                assert!((z * rot - target).norm() < 1e-9);
            }
        }
    }

    #[test]
    fn refinement_keeps_clear_verdicts() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for d in [3u32, 5] {
            let coarse = boundary_samples(d, 2048).unwrap();
            let fine = boundary_samples(d, 4096).unwrap();
            // beyond the chord sagitta of the coarse polygon
            let band = 1e-2;
            let mut compared = 0;
            for _ in 0..3000 {
                let z = c(rng.random_range(-5.2..5.2), rng.random_range(-5.2..5.2));
                if coarse.distance_to_boundary(z) > band && fine.distance_to_boundary(z) > band {
                    assert_eq!(coarse.contains(z), fine.contains(z));
                    compared += 1;
                }
            }
            assert!(compared > 2500);
        }
    }
}
