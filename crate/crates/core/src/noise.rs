//! Seeded noise generators: additive white (Gaussian/uniform), correlated
//! moving-average, multiplicative, Beer-Lambert CT, and Poisson.
//!
//! Reproducibility contract: every generator is a pure function of its
//! parameters and a 64-bit seed. Streams are ChaCha8 seeded from the 64-bit
//! value; independent trial streams come from [`derive_trial_seed`], a
//! splitmix64 finalizer applied to `seed XOR trial`, so trials can be
//! generated independently and in any order.

use crate::grid::{Mat, Sinogram};
use crate::{invalid, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Poisson, StandardNormal};

/// Identifier of the RNG scheme, echoed into run-report headers.
pub const RNG_ID: &str = "chacha8(splitmix64(seed xor trial))";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dist {
    Gaussian,
    /// Uniform on `[-sqrt(3) sigma, sqrt(3) sigma]`, variance-matched to sigma^2.
    Uniform,
}

impl Dist {
    pub fn as_str(&self) -> &'static str {
        match self {
            Dist::Gaussian => "gaussian",
            Dist::Uniform => "uniform",
        }
    }
}

/// Noise model specification, serialized into run-report headers.
#[derive(Debug, Clone, PartialEq)]
pub enum NoiseKind {
    AdditiveWhite { dist: Dist, sigma: f64 },
    Correlated { taps: Vec<f64>, sigma_w: f64 },
    Multiplicative { sigma: f64 },
    BeerLambertCt { sigma: f64 },
    Poisson { scale: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct NoiseSpec {
    pub kind: NoiseKind,
    pub seed: u64,
}

impl NoiseSpec {
    /// One-line header form: `kind(params) seed=... rng=...`.
    pub fn describe(&self) -> String {
        let body = match &self.kind {
            NoiseKind::AdditiveWhite { dist, sigma } => {
                format!("additive-white({}, sigma={sigma})", dist.as_str())
            }
            NoiseKind::Correlated { taps, sigma_w } => {
                format!("correlated(taps={taps:?}, sigma_w={sigma_w})")
            }
            NoiseKind::Multiplicative { sigma } => format!("multiplicative(sigma={sigma})"),
            NoiseKind::BeerLambertCt { sigma } => format!("beer-lambert-ct(sigma={sigma})"),
            NoiseKind::Poisson { scale } => format!("poisson(scale={scale})"),
        };
        format!("{body} seed={} rng={RNG_ID}", self.seed)
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Stream seed for trial `t`: `splitmix64(seed XOR t)`, then one more mix so
/// adjacent trials share no low-bit structure.
pub fn derive_trial_seed(seed: u64, trial: u64) -> u64 {
    splitmix64(splitmix64(seed ^ trial))
}

pub(crate) fn rng_from(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn draw(rng: &mut ChaCha8Rng, dist: Dist, sigma: f64) -> f64 {
    match dist {
        Dist::Gaussian => {
            let z: f64 = StandardNormal.sample(rng);
            sigma * z
        }
        Dist::Uniform => {
            let u: f64 = rng.random();
            3f64.sqrt() * sigma * (2.0 * u - 1.0)
        }
    }
}

/// I.i.d. zero-mean draws with standard deviation `sigma` on a
/// `rows x cols` matrix; deterministic for a fixed seed.
pub fn gen_white(rows: usize, cols: usize, dist: Dist, sigma: f64, seed: u64) -> Result<Mat> {
    if !(sigma > 0.0) {
        return Err(invalid("white noise needs sigma > 0"));
    }
    let mut rng = rng_from(seed);
    let mut m = Mat::zeros(rows, cols);
    for v in m.as_mut_slice() {
        *v = draw(&mut rng, dist, sigma);
    }
    Ok(m)
}

/// Moving average `f_k = sum_j c_j w_{k+j}` of white Gaussian `w` with
/// standard deviation `sigma_w`, along a 1-D sequence. The implied
/// autocovariance is [`correlated_autocovariance`] and its transform
/// [`correlated_spectrum`].
pub fn gen_correlated_1d(len: usize, taps: &[f64], sigma_w: f64, seed: u64) -> Result<Vec<f64>> {
    if taps.is_empty() {
        return Err(invalid("correlated noise needs at least one tap"));
    }
    let w = gen_white(1, len + taps.len() - 1, Dist::Gaussian, sigma_w, seed)?;
    let w = w.as_slice();
    let out = (0..len)
        .map(|k| taps.iter().enumerate().map(|(j, c)| c * w[k + j]).sum())
        .collect();
    Ok(out)
}

/// Row-wise moving average over a white matrix (each row an independent
/// 1-D correlated sequence).
pub fn gen_correlated_rows(
    rows: usize,
    cols: usize,
    taps: &[f64],
    sigma_w: f64,
    seed: u64,
) -> Result<Mat> {
    if taps.is_empty() {
        return Err(invalid("correlated noise needs at least one tap"));
    }
    let w = gen_white(rows, cols + taps.len() - 1, Dist::Gaussian, sigma_w, seed)?;
    let mut out = Mat::zeros(rows, cols);
    for r in 0..rows {
        let src = w.row(r);
        let dst = out.row_mut(r);
        for (k, d) in dst.iter_mut().enumerate() {
            *d = taps.iter().enumerate().map(|(j, c)| c * src[k + j]).sum();
        }
    }
    Ok(out)
}

/// `beta(m) = sigma_w^2 sum_j c_j c_{j+m}`, the autocovariance implied by the
/// moving-average taps.
pub fn correlated_autocovariance(taps: &[f64], sigma_w: f64, lag: i64) -> f64 {
    let m = lag.unsigned_abs() as usize;
    if m >= taps.len() {
        return 0.0;
    }
    sigma_w * sigma_w * (0..taps.len() - m).map(|j| taps[j] * taps[j + m]).sum::<f64>()
}

/// `beta_check(u) = sum_m beta(m) e^{i m u} = sigma_w^2 |sum_j c_j e^{i j u}|^2`,
/// real and nonnegative; `u` is the frequency in radians per sample.
pub fn correlated_spectrum(taps: &[f64], sigma_w: f64, u: f64) -> f64 {
    let (mut re, mut im) = (0.0, 0.0);
    for (j, c) in taps.iter().enumerate() {
        re += c * (j as f64 * u).cos();
        im += c * (j as f64 * u).sin();
    }
    sigma_w * sigma_w * (re * re + im * im)
}

/// Samplewise gain noise `(1 + w) g` with `w` white Gaussian of std `sigma`,
/// the detector response non-uniformity model.
pub fn apply_multiplicative(sino: &Sinogram, sigma: f64, seed: u64) -> Result<Sinogram> {
    if !(sigma > 0.0) {
        return Err(invalid("multiplicative noise needs sigma > 0"));
    }
    let mut rng = rng_from(seed);
    let mut out = sino.clone();
    for v in out.values_mut().as_mut_slice() {
        let w: f64 = StandardNormal.sample(&mut rng);
        *v *= 1.0 + sigma * w;
    }
    Ok(out)
}

/// Clamp floor for nonpositive intensities in the CT model.
pub const CT_CLAMP_FLOOR: f64 = 1e-6;

/// Beer-Lambert CT noise with unit source intensity: the intensity
/// `exp(-g)` picks up additive Gaussian noise of std `sigma` and is
/// re-logged, `out = -log(exp(-g) + noise)`. Nonpositive intensities are
/// clamped to [`CT_CLAMP_FLOOR`]; the clamp count is returned alongside.
pub fn apply_ct(sino: &Sinogram, sigma: f64, seed: u64) -> Result<(Sinogram, usize)> {
    if sigma < 0.0 {
        return Err(invalid("ct noise needs sigma >= 0"));
    }
    let mut rng = rng_from(seed);
    let mut out = sino.clone();
    let mut clamps = 0usize;
    for v in out.values_mut().as_mut_slice() {
        let w: f64 = StandardNormal.sample(&mut rng);
        let intensity = (-*v).exp() + sigma * w;
        let floored = if intensity > CT_CLAMP_FLOOR {
            intensity
        } else {
            clamps += 1;
            CT_CLAMP_FLOOR
        };
        *v = -floored.ln();
    }
    Ok((out, clamps))
}

/// Photon-count noise: each sample becomes `Poisson(scale * g) / scale`.
/// Negative sinogram values are rejected (line integrals of `f >= 0`).
pub fn apply_poisson(sino: &Sinogram, scale: f64, seed: u64) -> Result<Sinogram> {
    if !(scale > 0.0) {
        return Err(invalid("poisson noise needs scale > 0"));
    }
    if sino.values().as_slice().iter().any(|&v| v < 0.0) {
        return Err(invalid("poisson noise needs a nonnegative sinogram"));
    }
    let mut rng = rng_from(seed);
    let mut out = sino.clone();
    for v in out.values_mut().as_mut_slice() {
        let lambda = scale * *v;
        *v = if lambda > 0.0 {
            let p = Poisson::new(lambda)
                .map_err(|e| invalid(format!("poisson parameter {lambda}: {e}")))?;
            p.sample(&mut rng) / scale
        } else {
            0.0
        };
    }
    Ok(out)
}
