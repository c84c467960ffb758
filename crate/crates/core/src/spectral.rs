//! Power-spectrum estimation: periodograms, radial and angular binning,
//! windowed local spectra, and flatness/autocovariance statistics of
//! discrete noise.
//!
//! All transforms use the unitary DFT convention, so the total periodogram
//! power equals the discrete energy of the input.

use crate::fft;
use crate::grid::{Image, Mat};
use crate::noise::{derive_trial_seed, gen_white, Dist};
use crate::{invalid, Result};
use std::f64::consts::PI;

/// 2-D periodogram with the zero mode at the center of the `power` matrix.
#[derive(Debug, Clone)]
pub struct SpectrumEstimate {
    /// `|DFT|^2`, centered: row `r` has signed row-frequency index `r - rows/2`.
    pub power: Mat,
    /// Frequency step per axis in radians per physical unit `(d_xi_x, d_xi_y)`.
    pub freq_step: (f64, f64),
}

impl SpectrumEstimate {
    pub fn total_power(&self) -> f64 {
        self.power.as_slice().iter().sum()
    }

    /// Signed frequency indices of a centered matrix entry.
    #[inline]
    pub fn index_of(&self, r: usize, c: usize) -> (i64, i64) {
        (
            r as i64 - (self.power.rows() / 2) as i64,
            c as i64 - (self.power.cols() / 2) as i64,
        )
    }

    /// Physical frequency vector `(xi_x, xi_y)` of an entry (column index is x).
    #[inline]
    pub fn freq_of(&self, r: usize, c: usize) -> (f64, f64) {
        let (kr, kc) = self.index_of(r, c);
        (kc as f64 * self.freq_step.0, kr as f64 * self.freq_step.1)
    }

    /// Smaller of the two axis Nyquist frequencies.
    pub fn axis_nyquist(&self) -> f64 {
        let nx = self.power.cols() as f64 / 2.0 * self.freq_step.0;
        let ny = self.power.rows() as f64 / 2.0 * self.freq_step.1;
        nx.min(ny)
    }
}

/// Periodogram of a raw matrix whose samples sit `phys_step` apart
/// (column step, row step).
pub fn periodogram(data: &Mat, phys_step: (f64, f64)) -> SpectrumEstimate {
    let rows = data.rows();
    let cols = data.cols();
    let mut buf = fft::to_complex(data.as_slice());
    fft::fft2_unitary(&mut buf, rows, cols);
    // Shift zero frequency to the center.
    let power = Mat::from_fn(rows, cols, |r, c| {
        let src_r = (r + rows - rows / 2) % rows;
        let src_c = (c + cols - cols / 2) % cols;
        buf[src_r * cols + src_c].norm_sqr()
    });
    let freq_step = (
        2.0 * PI / (cols as f64 * phys_step.0),
        2.0 * PI / (rows as f64 * phys_step.1),
    );
    SpectrumEstimate { power, freq_step }
}

/// Periodogram of an image on its physical grid.
pub fn periodogram_image(img: &Image) -> SpectrumEstimate {
    periodogram(img.values(), (img.grid().step_x(), img.grid().step_y()))
}

/// One annulus of a radial average.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialBin {
    pub center: f64,
    pub mean_power: f64,
    pub n_modes: usize,
}

/// Mean power over `n_bins` annuli of equal width from 0 to the axis
/// Nyquist; corner modes beyond it are returned as a separate overflow bin.
pub fn radial_profile(
    spec: &SpectrumEstimate,
    n_bins: usize,
) -> Result<(Vec<RadialBin>, RadialBin)> {
    if n_bins == 0 {
        return Err(invalid("radial profile needs n_bins >= 1"));
    }
    let nyq = spec.axis_nyquist();
    let width = nyq / n_bins as f64;
    let mut sums = vec![0.0; n_bins];
    let mut counts = vec![0usize; n_bins];
    let mut over_sum = 0.0;
    let mut over_count = 0usize;
    let mut over_r = 0.0;
    for r in 0..spec.power.rows() {
        for c in 0..spec.power.cols() {
            let (fx, fy) = spec.freq_of(r, c);
            let rho = (fx * fx + fy * fy).sqrt();
            let p = spec.power.get(r, c);
            if rho <= nyq {
                let b = ((rho / width) as usize).min(n_bins - 1);
                sums[b] += p;
                counts[b] += 1;
            } else {
                over_sum += p;
                over_count += 1;
                over_r += rho;
            }
        }
    }
    let bins = (0..n_bins)
        .map(|b| RadialBin {
            center: (b as f64 + 0.5) * width,
            mean_power: if counts[b] > 0 { sums[b] / counts[b] as f64 } else { 0.0 },
            n_modes: counts[b],
        })
        .collect();
    let overflow = RadialBin {
        center: if over_count > 0 { over_r / over_count as f64 } else { nyq },
        mean_power: if over_count > 0 { over_sum / over_count as f64 } else { 0.0 },
        n_modes: over_count,
    };
    Ok((bins, overflow))
}

/// Polar map of the spectrum: mean power over `(radius bin, angle bin)`
/// cells, radii up to the axis Nyquist, angles folded to `[0, pi)` since the
/// power of a real field is even.
pub fn polar_map(spec: &SpectrumEstimate, n_r: usize, n_theta: usize) -> Result<Mat> {
    if n_r == 0 || n_theta == 0 {
        return Err(invalid("polar map needs n_r >= 1 and n_theta >= 1"));
    }
    let nyq = spec.axis_nyquist();
    let mut sums = Mat::zeros(n_r, n_theta);
    let mut counts = Mat::zeros(n_r, n_theta);
    for r in 0..spec.power.rows() {
        for c in 0..spec.power.cols() {
            let (fx, fy) = spec.freq_of(r, c);
            let rho = (fx * fx + fy * fy).sqrt();
            if rho == 0.0 || rho > nyq {
                continue;
            }
            let mut theta = fy.atan2(fx);
            if theta < 0.0 {
                theta += PI;
            }
            if theta >= PI {
                theta -= PI;
            }
            let rb = (((rho / nyq) * n_r as f64) as usize).min(n_r - 1);
            let tb = (((theta / PI) * n_theta as f64) as usize).min(n_theta - 1);
            sums.set(rb, tb, sums.get(rb, tb) + spec.power.get(r, c));
            counts.set(rb, tb, counts.get(rb, tb) + 1.0);
        }
    }
    Ok(Mat::from_fn(n_r, n_theta, |r, t| {
        let n = counts.get(r, t);
        if n > 0.0 {
            sums.get(r, t) / n
        } else {
            0.0
        }
    }))
}

/// Windowed local spectrum: crop a `side x side` square centered at the
/// pixel nearest to the physical `center`, taper with a raised-cosine
/// (Hann) window, and take its periodogram.
pub fn windowed_local_spectrum(
    img: &Image,
    center: (f64, f64),
    side: usize,
) -> Result<SpectrumEstimate> {
    let g = img.grid();
    if side < 4 || side > g.nx() || side > g.ny() {
        return Err(invalid("window side must be in [4, image side]"));
    }
    let cj = ((center.0 + g.half_width()) / g.step_x() - 0.5).round() as i64;
    let ci = ((center.1 + g.half_height()) / g.step_y() - 0.5).round() as i64;
    let half = side as i64 / 2;
    let j0 = cj - half;
    let i0 = ci - half;
    if j0 < 0 || i0 < 0 || j0 + side as i64 > g.nx() as i64 || i0 + side as i64 > g.ny() as i64 {
        return Err(invalid(format!(
            "window of side {side} at ({}, {}) leaves the image",
            center.0, center.1
        )));
    }
    let taper: Vec<f64> = (0..side)
        .map(|k| (PI * (k as f64 + 0.5) / side as f64).sin().powi(2))
        .collect();
    let crop = Mat::from_fn(side, side, |r, c| {
        img.values().get((i0 + r as i64) as usize, (j0 + c as i64) as usize) * taper[r] * taper[c]
    });
    Ok(periodogram(&crop, (g.step_x(), g.step_y())))
}

/// Principal axis of the power second-moment tensor, excluding modes within
/// a 2-index radius of zero frequency. Returns `(angle, eccentricity)` with
/// the angle of the largest-variance direction in `(-pi/2, pi/2]` and the
/// eigenvalue ratio `lambda_max / lambda_min >= 1`.
pub fn anisotropy_axis(spec: &SpectrumEstimate) -> (f64, f64) {
    let mut mxx = 0.0;
    let mut mxy = 0.0;
    let mut myy = 0.0;
    for r in 0..spec.power.rows() {
        for c in 0..spec.power.cols() {
            let (kr, kc) = spec.index_of(r, c);
            if kr * kr + kc * kc <= 4 {
                continue;
            }
            let (fx, fy) = spec.freq_of(r, c);
            let p = spec.power.get(r, c);
            mxx += p * fx * fx;
            mxy += p * fx * fy;
            myy += p * fy * fy;
        }
    }
    let tr = mxx + myy;
    let det = mxx * myy - mxy * mxy;
    let disc = (tr * tr / 4.0 - det).max(0.0).sqrt();
    let l1 = tr / 2.0 + disc;
    let l2 = (tr / 2.0 - disc).max(f64::MIN_POSITIVE);
    let mut angle = 0.5 * (2.0 * mxy).atan2(mxx - myy);
    if angle <= -PI / 2.0 {
        angle += PI;
    } else if angle > PI / 2.0 {
        angle -= PI;
    }
    (angle, l1 / l2)
}

/// Mean power over the double sector of half-opening `half_width` around
/// `dir_angle` (and its opposite), restricted to radii in `[r_min, r_max]`.
pub fn sector_mean_power(
    spec: &SpectrumEstimate,
    dir_angle: f64,
    half_width: f64,
    r_min: f64,
    r_max: f64,
) -> f64 {
    let mut sum = 0.0;
    let mut count = 0usize;
    for r in 0..spec.power.rows() {
        for c in 0..spec.power.cols() {
            let (fx, fy) = spec.freq_of(r, c);
            let rho = (fx * fx + fy * fy).sqrt();
            if rho < r_min || rho > r_max {
                continue;
            }
            let theta = fy.atan2(fx);
            let mut d = (theta - dir_angle).rem_euclid(PI);
            if d > PI / 2.0 {
                d = PI - d;
            }
            if d <= half_width {
                sum += spec.power.get(r, c);
                count += 1;
            }
        }
    }
    if count > 0 {
        sum / count as f64
    } else {
        0.0
    }
}

/// Unitary 1-D periodogram `|f_hat(k)|^2` in natural DFT order.
pub fn periodogram_1d(values: &[f64]) -> Vec<f64> {
    let mut buf = fft::to_complex(values);
    fft::fft_unitary(&mut buf);
    buf.iter().map(|c| c.norm_sqr()).collect()
}

/// Averages the one-sided power `|f_hat(k)|^2`, `k = 0..n/2`, over `n_bins`
/// equal index bins.
pub fn binned_profile_1d(power: &[f64], n_bins: usize) -> Result<Vec<f64>> {
    if n_bins == 0 || power.len() / 2 < n_bins {
        return Err(invalid("need at least one mode per bin"));
    }
    let half = power.len() / 2;
    let mut sums = vec![0.0; n_bins];
    let mut counts = vec![0usize; n_bins];
    for k in 0..=half {
        let b = ((k as f64 / (half as f64 + 1.0)) * n_bins as f64) as usize;
        let b = b.min(n_bins - 1);
        sums[b] += power[k];
        counts[b] += 1;
    }
    Ok(sums.iter().zip(&counts).map(|(s, &c)| s / c as f64).collect())
}

/// The weighted spectral mean `mu_N(alpha) = N^{-1} sum_k alpha(k/N) |f_hat(k)|^2`
/// for a 1-D sequence; `alpha` is a function on the unit torus `[0, 1)`.
pub fn flatness_statistic(data: &[f64], alpha: impl Fn(f64) -> f64) -> f64 {
    let n = data.len();
    let power = periodogram_1d(data);
    power
        .iter()
        .enumerate()
        .map(|(k, p)| alpha(k as f64 / n as f64) * p)
        .sum::<f64>()
        / n as f64
}

/// Monte-Carlo estimate of `cov(|f_hat(k)|^2, |f_hat(m)|^2)` for one probe
/// pair of 1-D DFT indices, with its standard error and the white-noise
/// prediction `sigma^4 d(k-m) + sigma^4 d(k+m) + (mu4 - 3 sigma^4)/N`.
#[derive(Debug, Clone, Copy)]
pub struct ProbeCovariance {
    pub k: i64,
    pub m: i64,
    pub cov: f64,
    pub std_err: f64,
    pub predicted: f64,
}

/// Runs `n_trials` independent draws of length-`n` white noise and estimates
/// the periodogram autocovariance on the probe pairs
/// `(1,1), (1,-1), (0,0), (1,3)`.
pub fn power_autocovariance(
    dist: Dist,
    sigma: f64,
    n: usize,
    n_trials: usize,
    seed: u64,
) -> Result<Vec<ProbeCovariance>> {
    if n_trials < 1000 {
        return Err(invalid("autocovariance probe needs n_trials >= 1000"));
    }
    let probes: [(i64, i64); 4] = [(1, 1), (1, -1), (0, 0), (1, 3)];
    let idx = |k: i64| -> usize {
        if k >= 0 {
            k as usize
        } else {
            (n as i64 + k) as usize
        }
    };
    // Per trial, the periodogram at indices 0, 1, -1, 3.
    let mut rows: Vec<[f64; 4]> = Vec::with_capacity(n_trials);
    for t in 0..n_trials {
        let w = gen_white(1, n, dist, sigma, derive_trial_seed(seed, t as u64))?;
        let p = periodogram_1d(w.as_slice());
        rows.push([p[idx(0)], p[idx(1)], p[idx(-1)], p[idx(3)]]);
    }
    let slot = |k: i64| -> usize {
        match k {
            0 => 0,
            1 => 1,
            -1 => 2,
            3 => 3,
            _ => unreachable!(),
        }
    };
    let mu4 = match dist {
        Dist::Gaussian => 3.0 * sigma.powi(4),
        Dist::Uniform => 1.8 * sigma.powi(4),
    };
    let correction = (mu4 - 3.0 * sigma.powi(4)) / n as f64;
    let s4 = sigma.powi(4);
    let mut out = Vec::new();
    for probe in probes {
        let (sk, sm) = (slot(probe.0), slot(probe.1));
        let mut mx = 0.0;
        let mut my = 0.0;
        for row in &rows {
            mx += row[sk];
            my += row[sm];
        }
        mx /= n_trials as f64;
        my /= n_trials as f64;
        let mut cov = 0.0;
        let mut cov_sq = 0.0;
        for row in &rows {
            let prod = (row[sk] - mx) * (row[sm] - my);
            cov += prod;
            cov_sq += prod * prod;
        }
        cov /= n_trials as f64;
        let var_of_prod = (cov_sq / n_trials as f64 - cov * cov).max(0.0);
        let std_err = (var_of_prod / n_trials as f64).sqrt();
        let delta_minus = if probe.0 == probe.1 { 1.0 } else { 0.0 };
        let delta_plus = if probe.0 == -probe.1 { 1.0 } else { 0.0 };
        let predicted = s4 * delta_minus + s4 * delta_plus + correction;
        out.push(ProbeCovariance { k: probe.0, m: probe.1, cov, std_err, predicted });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridSpec;

    #[test]
    fn delta_input_flat_power() {
        let n = 16;
        let mut m = Mat::zeros(n, n);
        m.set(3, 7, 1.0);
        let spec = periodogram(&m, (1.0, 1.0));
        let expect = 1.0 / (n * n) as f64;
        for &p in spec.power.as_slice() {
            assert!((p - expect).abs() < 1e-15);
        }
    }

    #[test]
    fn constant_input_single_mode() {
        let n = 12;
        let c = 2.5;
        let m = Mat::from_fn(n, n, |_, _| c);
        let spec = periodogram(&m, (1.0, 1.0));
        // Zero mode sits at the center after the shift.
        let center = spec.power.get(n / 2, n / 2);
        assert!((center - c * c * (n * n) as f64).abs() < 1e-9);
        let rest: f64 = spec.total_power() - center;
        assert!(rest.abs() < 1e-9);
    }

    #[test]
    fn parseval_on_random_matrix() {
        let w = gen_white(31, 44, Dist::Gaussian, 1.3, 9).unwrap();
        let spec = periodogram(&w, (0.5, 0.25));
        let energy = w.sum_sq();
        assert!((spec.total_power() - energy).abs() < 1e-8 * energy);
    }

    #[test]
    fn radial_profile_flat_spectrum() {
        let n = 64;
        let mut m = Mat::zeros(n, n);
        m.set(20, 31, 1.0);
        // Delta input -> exactly flat power.
        let spec = periodogram(&m, (1.0, 1.0));
        let (bins, _) = radial_profile(&spec, 10).unwrap();
        let expect = 1.0 / (n * n) as f64;
        for b in &bins {
            assert!((b.mean_power - expect).abs() < 1e-15, "{b:?}");
        }
    }

    #[test]
    fn radial_profile_linear_power() {
        // Synthetic |xi| power; bin means approximate the bin centers.
        let n = 128;
        let mut spec = SpectrumEstimate { power: Mat::zeros(n, n), freq_step: (1.0, 1.0) };
        for r in 0..n {
            for c in 0..n {
                let (fx, fy) = spec.freq_of(r, c);
                spec.power.set(r, c, (fx * fx + fy * fy).sqrt());
            }
        }
        let (bins, _) = radial_profile(&spec, 25).unwrap();
        let width = spec.axis_nyquist() / 25.0;
        for b in bins.iter().skip(1) {
            assert!(
                (b.mean_power - b.center).abs() < 0.5 * width,
                "bin {b:?}, width {width}"
            );
        }
    }

    #[test]
    fn radial_profile_white_noise_flat() {
        let w = gen_white(512, 512, Dist::Gaussian, 1.0, 21).unwrap();
        let spec = periodogram(&w, (1.0, 1.0));
        let (bins, _) = radial_profile(&spec, 25).unwrap();
        for b in bins.iter().skip(1) {
            assert!((b.mean_power - 1.0).abs() < 0.05, "{b:?}");
        }
    }

    #[test]
    fn windowed_spectrum_concentrates_constant() {
        let g = GridSpec::square(64, 1.0).unwrap();
        let img = Image::from_fn(g, |_, _| 1.0);
        let spec = windowed_local_spectrum(&img, (0.0, 0.0), 32).unwrap();
        let total = spec.total_power();
        let mut outside = 0.0;
        for r in 0..spec.power.rows() {
            for c in 0..spec.power.cols() {
                let (kr, kc) = spec.index_of(r, c);
                if kr * kr + kc * kc > 9 {
                    outside += spec.power.get(r, c);
                }
            }
        }
        assert!(outside < 0.01 * total, "leakage {}", outside / total);
    }

    #[test]
    fn windowed_spectrum_peaks_at_plane_wave_mode() {
        let g = GridSpec::square(128, 1.0).unwrap();
        // Mode index 6 of the 64-point window along x.
        let side = 64usize;
        let k_win = 6.0;
        let kx = 2.0 * PI * k_win / (side as f64 * g.step_x());
        let img = Image::from_fn(g, |x, _| (kx * x).cos());
        let spec = windowed_local_spectrum(&img, (0.0, 0.0), side).unwrap();
        let mut best = (0usize, 0usize);
        let mut best_p = -1.0;
        for r in 0..side {
            for c in 0..side {
                if spec.power.get(r, c) > best_p {
                    best_p = spec.power.get(r, c);
                    best = (r, c);
                }
            }
        }
        let (kr, kc) = spec.index_of(best.0, best.1);
        assert_eq!(kr, 0, "peak at {best:?}");
        assert_eq!(kc.abs(), 6, "peak at {best:?}");
    }

    #[test]
    fn windowed_spectrum_out_of_bounds() {
        let g = GridSpec::square(64, 1.0).unwrap();
        let img = Image::zeros(g);
        assert!(windowed_local_spectrum(&img, (0.95, 0.0), 32).is_err());
    }

    #[test]
    fn anisotropy_isotropic_and_axis_aligned() {
        let n = 64;
        let mut spec = SpectrumEstimate { power: Mat::zeros(n, n), freq_step: (1.0, 1.0) };
        // Isotropic Gaussian power.
        for r in 0..n {
            for c in 0..n {
                let (fx, fy) = spec.freq_of(r, c);
                spec.power.set(r, c, (-(fx * fx + fy * fy) / 50.0).exp());
            }
        }
        let (_, ecc) = anisotropy_axis(&spec);
        assert!((ecc - 1.0).abs() < 0.05, "eccentricity {ecc}");

        // Power supported on the xi_1 (x) axis only.
        let mut axis = SpectrumEstimate { power: Mat::zeros(n, n), freq_step: (1.0, 1.0) };
        for c in 0..n {
            axis.power.set(n / 2, c, 1.0);
        }
        let (angle, ecc) = anisotropy_axis(&axis);
        assert!(angle.abs() < 1e-9, "angle {angle}");
        assert!(ecc > 100.0, "eccentricity {ecc}");
    }

    #[test]
    fn anisotropy_elliptical_gaussian() {
        let n = 128;
        let theta0 = 30f64.to_radians();
        let (s, c) = theta0.sin_cos();
        let (sig_major, sig_minor) = (16.0, 8.0);
        let mut spec = SpectrumEstimate { power: Mat::zeros(n, n), freq_step: (1.0, 1.0) };
        for r in 0..n {
            for cc in 0..n {
                let (fx, fy) = spec.freq_of(r, cc);
                let u = c * fx + s * fy;
                let v = -s * fx + c * fy;
                spec.power.set(
                    r,
                    cc,
                    (-(u * u) / (2.0 * sig_major * sig_major)
                        - (v * v) / (2.0 * sig_minor * sig_minor))
                        .exp(),
                );
            }
        }
        let (angle, ecc) = anisotropy_axis(&spec);
        assert!((angle - theta0).abs() < 2f64.to_radians(), "angle {}", angle.to_degrees());
        // Moment ratio equals the squared axis ratio.
        assert!((ecc - 4.0).abs() < 0.4, "eccentricity {ecc}");
    }

    #[test]
    fn flatness_statistic_limits() {
        let n = 10_000;
        let w = gen_white(1, n, Dist::Gaussian, 1.0, 33).unwrap();
        let full = flatness_statistic(w.as_slice(), |_| 1.0);
        assert!((full - 1.0).abs() < 0.02, "mu(1) = {full}");
        let half = flatness_statistic(w.as_slice(), |t| if t < 0.5 { 1.0 } else { 0.0 });
        assert!((half - 0.5).abs() < 0.03, "mu(half) = {half}");
        assert_eq!(flatness_statistic(&vec![0.0; 64], |_| 1.0), 0.0);
    }

    #[test]
    fn binned_profile_flattens_with_n() {
        let devs: Vec<f64> = [100usize, 10_000]
            .iter()
            .map(|&n| {
                let w = gen_white(1, n, Dist::Gaussian, 1.0, 8).unwrap();
                let p = periodogram_1d(w.as_slice());
                let bins = binned_profile_1d(&p, 25).unwrap();
                bins.iter().map(|b| (b - 1.0).abs()).fold(0.0f64, f64::max)
            })
            .collect();
        assert!(devs[0] > devs[1], "deviations {devs:?}");
    }

    #[test]
    fn autocovariance_gaussian_probes() {
        let probes = power_autocovariance(Dist::Gaussian, 1.0, 128, 4000, 17).unwrap();
        for p in &probes {
            assert!(
                (p.cov - p.predicted).abs() < 5.0 * p.std_err,
                "probe ({}, {}): cov {} predicted {} se {}",
                p.k,
                p.m,
                p.cov,
                p.predicted,
                p.std_err
            );
        }
        // Zero-mode variance is 2 sigma^4.
        let zero = probes.iter().find(|p| p.k == 0 && p.m == 0).unwrap();
        assert!((zero.predicted - 2.0).abs() < 1e-12);
    }

    #[test]
    fn spectrum_of_upsampled_noise_follows_kernel_profile() {
        // 1-D white noise upsampled 2x with Lanczos-3: the binned
        // periodogram is proportional to |chi_hat(u)|^2 at u = 2 pi k / n.
        use crate::kernels::Kernel;
        use crate::sampling::{upsample, SampleSet1D};
        let n = 100_000;
        let w = gen_white(1, n, Dist::Gaussian, 1.0, 55).unwrap();
        let samples = SampleSet1D::new(w.as_slice().to_vec(), 1.0, 0.0).unwrap();
        let up = upsample(&samples, 2, Kernel::LANCZOS3).unwrap();
        let p = periodogram_1d(&up.values);
        let n_bins = 25;
        let bins = binned_profile_1d(&p, n_bins).unwrap();
        // One-sided index k of the 2n grid maps to u = 2 pi k / (2n) * 2 = 2
        // pi k / n radians per original sample; the bins span [0, 2 pi].
        let theory: Vec<f64> = (0..n_bins)
            .map(|b| {
                let u = 2.0 * PI * (b as f64 + 0.5) / n_bins as f64;
                Kernel::LANCZOS3.fourier_profile(u).powi(2)
            })
            .collect();
        let corr = pearson(&bins, &theory);
        assert!(corr > 0.99, "correlation {corr}");
    }

    #[test]
    fn spectrum_of_correlated_noise_includes_beta() {
        use crate::kernels::Kernel;
        use crate::noise::{correlated_spectrum, gen_correlated_1d};
        use crate::sampling::{upsample, SampleSet1D};
        let n = 100_000;
        let f = gen_correlated_1d(n, &[1.0, 1.0], 1.0, 56).unwrap();
        let samples = SampleSet1D::new(f, 1.0, 0.0).unwrap();
        let up = upsample(&samples, 2, Kernel::LANCZOS3).unwrap();
        let p = periodogram_1d(&up.values);
        let n_bins = 25;
        let bins = binned_profile_1d(&p, n_bins).unwrap();
        let theory: Vec<f64> = (0..n_bins)
            .map(|b| {
                let u = 2.0 * PI * (b as f64 + 0.5) / n_bins as f64;
                correlated_spectrum(&[1.0, 1.0], 1.0, u)
                    * Kernel::LANCZOS3.fourier_profile(u).powi(2)
            })
            .collect();
        let corr = pearson(&bins, &theory);
        assert!(corr > 0.99, "correlation {corr}");
    }

    fn pearson(a: &[f64], b: &[f64]) -> f64 {
        let n = a.len() as f64;
        let ma = a.iter().sum::<f64>() / n;
        let mb = b.iter().sum::<f64>() / n;
        let mut num = 0.0;
        let mut da = 0.0;
        let mut db = 0.0;
        for (x, y) in a.iter().zip(b) {
            num += (x - ma) * (y - mb);
            da += (x - ma) * (x - ma);
            db += (y - mb) * (y - mb);
        }
        num / (da * db).sqrt()
    }
}
