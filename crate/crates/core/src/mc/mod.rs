//! Seeded Monte Carlo over the cyclic polytopes
//! `Δ_n = {u_i > 0, u_i + u_{i+1} < 1, u_{n+1} = u_1}`.
//!
//! Samples are split into fixed chunks of `chunk_size` consecutive indices.
//! Chunk `c` draws from its own stream ([`rng::chunk_stream`]) and the
//! per-chunk statistics are merged in chunk order, so an estimate depends
//! only on the [`McConfig`], never on how many worker threads ran it.

pub mod rng;

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct McConfig {
    pub dimension: usize,
    pub samples: u64,
    pub seed: u64,
    pub chunk_size: u64,
}

pub const DEFAULT_CHUNK_SIZE: u64 = 1 << 16;

impl McConfig {
    pub fn new(dimension: usize, samples: u64, seed: u64) -> Self {
        McConfig { dimension, samples, seed, chunk_size: DEFAULT_CHUNK_SIZE }
    }

    pub fn validate(&self) -> Result<()> {
        if self.dimension < 2 {
            return Err(Error::InvalidConfig("dimension must be >= 2".into()));
        }
        if self.samples < 1 {
            return Err(Error::InvalidConfig("samples must be >= 1".into()));
        }
        if self.chunk_size < 1 {
            return Err(Error::InvalidConfig("chunk_size must be >= 1".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct McEstimate {
    pub mean: f64,
    pub stderr: f64,
    pub samples: u64,
    pub seed: u64,
    /// Samples whose integrand had to be clamped to stay finite.
    pub clamped: u64,
}

impl McEstimate {
    /// Normal-approximation 95% interval.
    pub fn interval95(&self) -> (f64, f64) {
        (self.mean - 1.959_963_984_540_054 * self.stderr, self.mean + 1.959_963_984_540_054 * self.stderr)
    }

    /// `(mean - reference) / stderr`; infinite when the estimate has zero
    /// spread but misses the reference.
    pub fn z_score(&self, reference: f64) -> f64 {
        let diff = self.mean - reference;
        if self.stderr > 0.0 {
            diff / self.stderr
        } else if diff == 0.0 {
            0.0
        } else {
            f64::INFINITY.copysign(diff)
        }
    }

    pub fn within(&self, reference: f64, sigmas: f64) -> bool {
        self.z_score(reference).abs() <= sigmas
    }
}

/// Membership in the open polytope. Boundary points count as outside.
pub fn in_delta(point: &[f64], n: usize) -> Result<bool> {
    if point.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: point.len() });
    }
    Ok(in_delta_unchecked(point))
}

fn in_delta_unchecked(point: &[f64]) -> bool {
    let n = point.len();
    (0..n).all(|i| point[i] > 0.0 && point[i] + point[(i + 1) % n] < 1.0)
}

/// Running mean and sum of squared deviations.
#[derive(Clone, Copy, Debug, Default)]
struct Moments {
    count: u64,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, x: f64) {
        self.count += 1;
        let d = x - self.mean;
        self.mean += d / self.count as f64;
        self.m2 += d * (x - self.mean);
    }

    fn merge(self, other: Moments) -> Moments {
        if self.count == 0 {
            return other;
        }
        if other.count == 0 {
            return self;
        }
        let count = self.count + other.count;
        let d = other.mean - self.mean;
        let w = other.count as f64 / count as f64;
        Moments { count, mean: self.mean + d * w, m2: self.m2 + other.m2 + d * d * self.count as f64 * w }
    }
}

#[derive(Clone, Copy, Debug, Default)]
struct ChunkResult {
    hits: u64,
    moments: Moments,
    clamped: u64,
}

/// Runs `sample` for every index, chunked and reduced in chunk order.
/// `sample` fills the point buffer from the stream and returns the
/// integrand value (or `None` when the point is outside), plus whether it
/// was clamped.
fn run_chunks<F>(cfg: &McConfig, sample: F) -> ChunkResult
where
    F: Fn(&[f64]) -> Option<(f64, bool)> + Sync,
{
    let chunks = cfg.samples.div_ceil(cfg.chunk_size);
    let parts: Vec<ChunkResult> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * cfg.chunk_size;
            let len = cfg.chunk_size.min(cfg.samples - start);
            let mut rng = rng::chunk_stream(cfg.seed, c);
            let mut point = vec![0.0; cfg.dimension];
            let mut out = ChunkResult::default();
            for _ in 0..len {
                for x in point.iter_mut() {
                    *x = rng.next_f64();
                }
                match sample(&point) {
                    Some((value, clamped)) => {
                        out.hits += 1;
                        out.clamped += clamped as u64;
                        out.moments.push(value);
                    }
                    None => out.moments.push(0.0),
                }
            }
            out
        })
        .collect();
    parts.into_iter().fold(ChunkResult::default(), |acc, p| ChunkResult {
        hits: acc.hits + p.hits,
        moments: acc.moments.merge(p.moments),
        clamped: acc.clamped + p.clamped,
    })
}

/// Hit-or-miss estimate of `δ_n` with `n = cfg.dimension`.
pub fn mc_volume(cfg: &McConfig) -> Result<McEstimate> {
    cfg.validate()?;
    let r = run_chunks(cfg, |p| in_delta_unchecked(p).then_some((1.0, false)));
    let n = cfg.samples as f64;
    let p = r.hits as f64 / n;
    Ok(McEstimate { mean: p, stderr: (p * (1.0 - p) / n).sqrt(), samples: cfg.samples, seed: cfg.seed, clamped: 0 })
}

/// Scale taking the mean of `ln tan(πu_1/2) · 1_{Δ_{2n}}` over the unit cube
/// to `ζ(2n+1)`: `-(2^{2n+1}/(2^{2n+1} - 1)) (π/2)^{2n}`.
pub fn zeta_odd_scale(n: u32) -> f64 {
    let p = 2f64.powi(2 * n as i32 + 1);
    -(p / (p - 1.0)) * (0.5 * PI).powi(2 * n as i32)
}

/// `ln tan(πu/2)` is finite for every double in `(0, 1)`; this bound only
/// matters if rounding ever produced `0` or `∞` from `tan`.
const LOG_TAN_CLAMP: f64 = 745.0;

/// Estimate of `ζ(2n+1)` from the log-tan integral over `Δ_{2n}`.
pub fn mc_zeta_odd(n: u32, cfg: &McConfig) -> Result<McEstimate> {
    cfg.validate()?;
    if n == 0 || cfg.dimension != 2 * n as usize {
        return Err(Error::InvalidConfig(format!(
            "zeta-odd estimate for n = {n} needs dimension {}, got {}",
            2 * n,
            cfg.dimension
        )));
    }
    let r = run_chunks(cfg, |p| {
        if !in_delta_unchecked(p) {
            return None;
        }
        let v = (0.5 * PI * p[0]).tan().ln();
        if v.is_finite() {
            Some((v, false))
        } else {
            Some((v.clamp(-LOG_TAN_CLAMP, LOG_TAN_CLAMP), true))
        }
    });
    let m = r.moments;
    let var = if m.count > 1 { m.m2 / (m.count - 1) as f64 } else { 0.0 };
    let scale = zeta_odd_scale(n);
    Ok(McEstimate {
        mean: scale * m.mean,
        stderr: scale.abs() * (var / m.count as f64).sqrt(),
        samples: cfg.samples,
        seed: cfg.seed,
        clamped: r.clamped,
    })
}
