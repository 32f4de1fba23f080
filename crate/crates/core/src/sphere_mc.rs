//! Monte Carlo over products of unit spheres for the classical-variable
//! representation of the VBS state.
//!
//! Each chunk of [`CHUNK`] samples draws from its own ChaCha8 stream
//! (`seed`, stream = chunk index). Chunk statistics are merged in a fixed
//! pairwise tree, so results are bit-identical for a given seed and sample
//! count regardless of thread scheduling.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::closed_forms::{z_of, CHANNEL_SIGNS};
use crate::error::{Error, Result};

pub const MIN_SAMPLES: usize = 1000;

/// Samples per RNG stream.
pub const CHUNK: usize = 4096;

/// Unit vectors and their spinor coordinates `u = e^{iφ/2} cos(θ/2)`, `v = e^{-iφ/2} sin(θ/2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SphereConfig {
    pub points: Vec<[f64; 3]>,
    pub spinors: Vec<(Complex64, Complex64)>,
}

impl SphereConfig {
    /// `sites` independent uniform points.
    pub fn sample(sites: usize, rng: &mut impl Rng) -> Self {
        let mut points = Vec::with_capacity(sites);
        let mut spinors = Vec::with_capacity(sites);
        for _ in 0..sites {
            let z: f64 = 2.0 * rng.random::<f64>() - 1.0;
            let phi = 2.0 * std::f64::consts::PI * rng.random::<f64>();
            let r = (1.0 - z * z).max(0.0).sqrt();
            points.push([r * phi.cos(), r * phi.sin(), z]);
            let (c, s) = (((1.0 + z) / 2.0).sqrt(), ((1.0 - z) / 2.0).sqrt());
            spinors.push((
                Complex64::from_polar(c, phi / 2.0),
                Complex64::from_polar(s, -phi / 2.0),
            ));
        }
        Self { points, spinors }
    }

    /// `Π_i (1 - Ω_i · Ω_{i+1})` over consecutive points.
    pub fn bond_product(&self) -> f64 {
        self.points
            .windows(2)
            .map(|w| 1.0 - (w[0][0] * w[1][0] + w[0][1] * w[1][1] + w[0][2] * w[1][2]))
            .product()
    }

    /// `φ_first^a (σ_μ)_ab φ_last^b / sqrt(2)` with `φ = (u, v)`.
    pub fn mode_amplitude(&self, mu: usize) -> Complex64 {
        let (u1, v1) = self.spinors[0];
        let (ul, vl) = self.spinors[self.spinors.len() - 1];
        let i = Complex64::new(0.0, 1.0);
        let form = match mu {
            0 => i * (u1 * ul + v1 * vl),
            1 => u1 * vl + v1 * ul,
            2 => -i * u1 * vl + i * v1 * ul,
            _ => u1 * ul - v1 * vl,
        };
        form * std::f64::consts::FRAC_1_SQRT_2
    }
}

/// Running mean and squared deviations of a complex sample, per component.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
struct Stats {
    n: f64,
    mean: Complex64,
    m2_re: f64,
    m2_im: f64,
}

impl Stats {
    fn push(&mut self, x: Complex64) {
        self.n += 1.0;
        let d = x - self.mean;
        self.mean += d / self.n;
        let d2 = x - self.mean;
        self.m2_re += d.re * d2.re;
        self.m2_im += d.im * d2.im;
    }

    fn merge(a: Stats, b: Stats) -> Stats {
        if a.n == 0.0 {
            return b;
        }
        if b.n == 0.0 {
            return a;
        }
        let n = a.n + b.n;
        let d = b.mean - a.mean;
        Stats {
            n,
            mean: a.mean + d * (b.n / n),
            m2_re: a.m2_re + b.m2_re + d.re * d.re * a.n * b.n / n,
            m2_im: a.m2_im + b.m2_im + d.im * d.im * a.n * b.n / n,
        }
    }
}

fn pairwise(stats: &[Stats]) -> Stats {
    match stats.len() {
        0 => Stats::default(),
        1 => stats[0],
        n => Stats::merge(pairwise(&stats[..n / 2]), pairwise(&stats[n / 2..])),
    }
}

/// Monte Carlo mean with its standard error.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct McEstimate {
    pub mean: Complex64,
    /// `sqrt((var_re + var_im) / samples)` with the unbiased sample variance.
    pub standard_error: f64,
    pub samples: usize,
    pub seed: u64,
}

impl McEstimate {
    /// `|mean - target| / standard_error`; 0 for an exact hit with zero error.
    pub fn z_score(&self, target: Complex64) -> f64 {
        let d = (self.mean - target).norm();
        if d == 0.0 {
            0.0
        } else {
            d / self.standard_error
        }
    }

    pub fn within(&self, target: Complex64, sigmas: f64) -> bool {
        self.z_score(target) <= sigmas
    }
}

fn estimate(
    sites: usize,
    samples: usize,
    seed: u64,
    f: impl Fn(&SphereConfig) -> Complex64 + Sync,
) -> Result<McEstimate> {
    if samples < MIN_SAMPLES {
        return Err(Error::InvalidArgument(format!(
            "at least {MIN_SAMPLES} samples required, got {samples}"
        )));
    }
    let chunks = samples.div_ceil(CHUNK);
    let stats: Vec<Stats> = (0..chunks)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(k as u64);
            let count = CHUNK.min(samples - k * CHUNK);
            let mut s = Stats::default();
            for _ in 0..count {
                s.push(f(&SphereConfig::sample(sites, &mut rng)));
            }
            s
        })
        .collect();
    let total = pairwise(&stats);
    let var = (total.m2_re + total.m2_im) / (total.n - 1.0);
    Ok(McEstimate {
        mean: total.mean,
        standard_error: (var / total.n).sqrt(),
        samples,
        seed,
    })
}

/// Estimates `Π_{i=0}^{N} (1 - Ω_i · Ω_{i+1})` over `N + 2` uniform points,
/// whose exact mean is 1.
pub fn estimate_vbs_norm(n: usize, samples: usize, seed: u64) -> Result<McEstimate> {
    if n == 0 {
        return Err(Error::InvalidArgument("N must be at least 1".into()));
    }
    estimate(n + 2, samples, seed, |c| Complex64::new(c.bond_product(), 0.0))
}

/// Estimates the overlap `<A_μ|A_ν>` of a block of `length` sites.
pub fn estimate_block_overlap(
    mu: usize,
    nu: usize,
    length: usize,
    samples: usize,
    seed: u64,
) -> Result<McEstimate> {
    if mu > 3 || nu > 3 {
        return Err(Error::InvalidArgument("mode indices must be in 0..4".into()));
    }
    if length == 0 {
        return Err(Error::InvalidArgument("block length must be at least 1".into()));
    }
    estimate(length, samples, seed, |c| {
        c.mode_amplitude(mu).conj() * c.mode_amplitude(nu) * c.bond_product()
    })
}

/// `δ_μν (1 + sign · s_μ (-1/3)^L) / 4`; `sign = +1` is the physical convention.
pub fn overlap_target(mu: usize, nu: usize, length: u32, sign: f64) -> f64 {
    if mu != nu {
        return 0.0;
    }
    0.25 * (1.0 + sign * CHANNEL_SIGNS[mu] as f64 * z_of(length))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn spinors_are_normalized() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let c = SphereConfig::sample(50, &mut rng);
        for ((u, v), p) in c.spinors.iter().zip(&c.points) {
            assert!((u.norm_sqr() + v.norm_sqr() - 1.0).abs() < 1e-14);
            assert!((p[0] * p[0] + p[1] * p[1] + p[2] * p[2] - 1.0).abs() < 1e-14);
            // Ω_z = |u|^2 - |v|^2
            assert!((u.norm_sqr() - v.norm_sqr() - p[2]).abs() < 1e-14);
        }
    }

    #[test]
    fn singlet_mode_vanishes_on_one_site() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let c = SphereConfig::sample(1, &mut rng);
        assert_eq!(c.mode_amplitude(2), Complex64::new(0.0, 0.0));
        let e = estimate_block_overlap(2, 2, 1, 2000, 3).unwrap();
        assert_eq!(e.standard_error, 0.0);
        assert!(e.within(real(0.0), 4.0));
        assert!(!e.within(real(overlap_target(2, 2, 1, -1.0)), 4.0));
    }

    #[test]
    fn norm_is_one() {
        for n in [1, 4] {
            let e = estimate_vbs_norm(n, 20_000, 11).unwrap();
            assert!(e.within(real(1.0), 4.0), "{e:?}");
        }
    }

    #[test]
    fn error_shrinks_with_samples() {
        let small = estimate_vbs_norm(2, 1_000, 5).unwrap();
        let large = estimate_vbs_norm(2, 100_000, 5).unwrap();
        let ratio = small.standard_error / large.standard_error;
        assert!((5.0..20.0).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn deterministic() {
        let a = estimate_block_overlap(0, 0, 2, 10_000, 42).unwrap();
        let b = estimate_block_overlap(0, 0, 2, 10_000, 42).unwrap();
        assert_eq!(a, b);
        let c = estimate_block_overlap(0, 0, 2, 10_000, 43).unwrap();
        assert_ne!(a.mean, c.mean);
    }

    #[test]
    fn diagonal_overlaps() {
        let e = estimate_block_overlap(0, 0, 2, 20_000, 8).unwrap();
        assert!(e.within(real(2.0 / 9.0), 4.0), "{e:?}");
        let e = estimate_block_overlap(0, 3, 2, 20_000, 9).unwrap();
        assert!(e.within(real(0.0), 4.0), "{e:?}");
    }

    #[test]
    fn argument_checks() {
        assert!(estimate_vbs_norm(1, 999, 0).is_err());
        assert!(estimate_vbs_norm(0, 1000, 0).is_err());
        assert!(estimate_block_overlap(4, 0, 1, 1000, 0).is_err());
        assert!(estimate_block_overlap(0, 0, 0, 1000, 0).is_err());
    }

    #[test]
    fn stats_merge_matches_sequential() {
        let xs: Vec<Complex64> = (0..100).map(|k| Complex64::new(k as f64, (k * k % 7) as f64)).collect();
        let mut all = Stats::default();
        xs.iter().for_each(|&x| all.push(x));
        let mut a = Stats::default();
        let mut b = Stats::default();
        xs[..37].iter().for_each(|&x| a.push(x));
        xs[37..].iter().for_each(|&x| b.push(x));
        let m = Stats::merge(a, b);
        assert!((m.mean - all.mean).norm() < 1e-12);
        assert!((m.m2_re - all.m2_re).abs() < 1e-9 && (m.m2_im - all.m2_im).abs() < 1e-9);
    }
}
