//! Parallel-geometry Radon transform, ramp filtering with apodization
//! windows, backprojection, and filtered backprojection.
//!
//! Conventions: angles phi cover the full circle `[-pi, pi)`, so every
//! geometric line appears twice and the inversion constant is `1/(4 pi)`
//! (the half-circle mode restricts to `[0, pi)` with constant `1/(2 pi)`;
//! the two agree by the evenness symmetry `Rf(phi + pi, -p) = Rf(phi, p)`).

use crate::fft;
use crate::grid::{Geometry, GridSpec, Image, Mat, Sinogram, SinogramSpec};
use crate::kernels::{Kernel, KernelLut};
use crate::quad;
use crate::{invalid, Result};
use rustfft::num_complex::Complex64;
use std::f64::consts::PI;

/// Apodization window `nu0` on `[0, 1]` multiplying the ramp `|p_hat|`.
#[derive(Debug, Clone, PartialEq)]
pub enum FilterWindow {
    /// No apodization, `nu0 = 1`.
    Ramp,
    /// `cos^2(pi rho / 2)`.
    Hann,
    /// `cos(pi rho / 2)`.
    Cosine,
    /// Piecewise-linear table of `(rho, nu0)` pairs on `[0, 1]`, sorted by rho.
    Custom(Vec<(f64, f64)>),
}

impl FilterWindow {
    /// Window value at `rho = |p_hat| / B_p`; zero outside `[0, 1]`.
    pub fn nu0(&self, rho: f64) -> f64 {
        let rho = rho.abs();
        if rho > 1.0 {
            return 0.0;
        }
        match self {
            FilterWindow::Ramp => 1.0,
            FilterWindow::Hann => {
                let c = (PI * rho / 2.0).cos();
                c * c
            }
            FilterWindow::Cosine => (PI * rho / 2.0).cos(),
            FilterWindow::Custom(table) => {
                if table.is_empty() {
                    return 0.0;
                }
                if rho <= table[0].0 {
                    return table[0].1;
                }
                for w in table.windows(2) {
                    let (r0, v0) = w[0];
                    let (r1, v1) = w[1];
                    if rho <= r1 {
                        let t = if r1 > r0 { (rho - r0) / (r1 - r0) } else { 0.0 };
                        return v0 + t * (v1 - v0);
                    }
                }
                table[table.len() - 1].1
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FilterWindow::Ramp => "ramp",
            FilterWindow::Hann => "hann",
            FilterWindow::Cosine => "cosine",
            FilterWindow::Custom(_) => "custom",
        }
    }
}

/// Window plus the band limit it is applied over.
#[derive(Debug, Clone, PartialEq)]
pub struct FilterProfile {
    pub window: FilterWindow,
    /// Band limit `B_p` in radians per unit length; `None` means the p-grid
    /// Nyquist `pi / s_p`.
    pub band: Option<f64>,
}

impl FilterProfile {
    pub fn ramp() -> Self {
        FilterProfile { window: FilterWindow::Ramp, band: None }
    }

    pub fn hann() -> Self {
        FilterProfile { window: FilterWindow::Hann, band: None }
    }

    pub fn cosine() -> Self {
        FilterProfile { window: FilterWindow::Cosine, band: None }
    }

    pub fn with_band(mut self, band: f64) -> Self {
        self.band = Some(band);
        self
    }

    pub fn band_for(&self, spec: &SinogramSpec) -> f64 {
        self.band.unwrap_or(PI / spec.offset_step())
    }
}

/// `c_nu = 3 Int_0^1 rho^2 nu0^2(rho) d rho`, the window's variance factor.
pub fn c_nu(window: &FilterWindow) -> f64 {
    quad::adaptive_simpson(|rho| 3.0 * rho * rho * window.nu0(rho).powi(2), 0.0, 1.0, 1e-12)
}

fn check_parallel(spec: &SinogramSpec) -> Result<()> {
    if spec.geometry != Geometry::Parallel {
        return Err(invalid("operation needs a parallel-geometry sinogram"));
    }
    Ok(())
}

/// Separable kernel interpolator over an image with zero extension.
pub(crate) struct Interp2<'a> {
    values: &'a Mat,
    lut: KernelLut,
    nx: i64,
    ny: i64,
    inv_sx: f64,
    inv_sy: f64,
    x0: f64,
    y0: f64,
}

impl<'a> Interp2<'a> {
    pub fn new(img: &'a Image, kernel: Kernel) -> Result<Self> {
        let g = img.grid();
        Ok(Interp2 {
            values: img.values(),
            lut: KernelLut::build(kernel)?,
            nx: g.nx() as i64,
            ny: g.ny() as i64,
            inv_sx: 1.0 / g.step_x(),
            inv_sy: 1.0 / g.step_y(),
            x0: g.x(0),
            y0: g.y(0),
        })
    }

    /// Kernel-interpolated image value at the physical point `(x, y)`.
    pub fn at(&self, x: f64, y: f64, wx: &mut [f64], wy: &mut [f64]) -> f64 {
        let tx = (x - self.x0) * self.inv_sx;
        let ty = (y - self.y0) * self.inv_sy;
        let jx = tx.floor();
        let jy = ty.floor();
        self.lut.weights_at(tx - jx, wx);
        self.lut.weights_at(ty - jy, wy);
        let first = self.lut.first_tap_offset();
        let taps = self.lut.taps();
        let jx = jx as i64 + first;
        let jy = jy as i64 + first;
        let mut acc = 0.0;
        for t in 0..taps {
            let row = jy + t as i64;
            if row < 0 || row >= self.ny {
                continue;
            }
            let base = self.values.row(row as usize);
            let mut rowacc = 0.0;
            for u in 0..taps {
                let col = jx + u as i64;
                if col >= 0 && col < self.nx {
                    rowacc += wx[u] * base[col as usize];
                }
            }
            acc += wy[t] * rowacc;
        }
        acc
    }

    pub fn taps(&self) -> usize {
        self.lut.taps()
    }
}

/// Clips the line `point + t * dir` to the rectangle `[-a, a] x [-b, b]`;
/// returns the parameter interval or `None` when the line misses.
fn clip_to_rect(px: f64, py: f64, dx: f64, dy: f64, a: f64, b: f64) -> Option<(f64, f64)> {
    let mut t0 = f64::NEG_INFINITY;
    let mut t1 = f64::INFINITY;
    for (p, d, half) in [(px, dx, a), (py, dy, b)] {
        if d.abs() < 1e-300 {
            if p.abs() > half {
                return None;
            }
        } else {
            let ta = (-half - p) / d;
            let tb = (half - p) / d;
            let (lo, hi) = if ta < tb { (ta, tb) } else { (tb, ta) };
            t0 = t0.max(lo);
            t1 = t1.min(hi);
        }
    }
    if t0 < t1 {
        Some((t0, t1))
    } else {
        None
    }
}

/// Discrete Radon transform: for each `(phi_i, p_j)` the line integral of
/// the Lanczos-3 interpolant of `img` along `x . omega(phi) = p`, rectangle
/// rule with substep `pixel / oversample`, line clipped to the image square.
pub fn forward(img: &Image, spec: SinogramSpec, oversample: usize) -> Result<Sinogram> {
    check_parallel(&spec)?;
    if oversample < 1 {
        return Err(invalid("oversample factor must be >= 1"));
    }
    let g = img.grid();
    let interp = Interp2::new(img, Kernel::LANCZOS3)?;
    let mut wx = vec![0.0; interp.taps()];
    let mut wy = vec![0.0; interp.taps()];
    let dt = g.step_x().min(g.step_y()) / oversample as f64;
    let a = g.half_width();
    let b = g.half_height();
    let mut out = Sinogram::zeros(spec);
    for i in 0..spec.n_angle {
        let phi = spec.angle(i);
        let (sin_phi, cos_phi) = phi.sin_cos();
        // omega = (cos, sin); line direction is omega^perp.
        let (ex, ey) = (-sin_phi, cos_phi);
        let row = out.values_mut().row_mut(i);
        for (j, slot) in row.iter_mut().enumerate() {
            let p = spec.offset(j);
            let (px, py) = (p * cos_phi, p * sin_phi);
            let Some((t0, t1)) = clip_to_rect(px, py, ex, ey, a, b) else {
                continue;
            };
            let n_steps = ((t1 - t0) / dt).ceil() as usize;
            if n_steps == 0 {
                continue;
            }
            let step = (t1 - t0) / n_steps as f64;
            let mut acc = 0.0;
            for k in 0..n_steps {
                let t = t0 + (k as f64 + 0.5) * step;
                acc += interp.at(px + t * ex, py + t * ey, &mut wx, &mut wy);
            }
            *slot = acc * step;
        }
    }
    Ok(out)
}

fn padded_len(n: usize) -> usize {
    (2 * n).next_power_of_two()
}

fn filter_rows(sino: &Sinogram, multiplier: impl Fn(f64) -> f64, pad: bool) -> Sinogram {
    let spec = sino.spec();
    let n = spec.n_offset;
    let len = if pad { padded_len(n) } else { n };
    let s_p = spec.offset_step();
    let dxi = 2.0 * PI / (len as f64 * s_p);
    let mults: Vec<f64> = (0..len)
        .map(|k| multiplier(fft::signed_index(k, len) as f64 * dxi))
        .collect();
    let mut out = Sinogram::zeros(spec);
    let mut buf = vec![Complex64::default(); len];
    for i in 0..spec.n_angle {
        for v in buf.iter_mut() {
            *v = Complex64::default();
        }
        for (j, &v) in sino.values().row(i).iter().enumerate() {
            buf[j] = Complex64::new(v, 0.0);
        }
        fft::fft_raw(&mut buf);
        for (v, &m) in buf.iter_mut().zip(&mults) {
            *v *= m;
        }
        fft::ifft_raw(&mut buf);
        let scale = 1.0 / len as f64;
        let row = out.values_mut().row_mut(i);
        for (j, slot) in row.iter_mut().enumerate() {
            *slot = buf[j].re * scale;
        }
    }
    out
}

/// Ramp filter per angle row: zero-padded DFT (at least twice the row length,
/// power of two), multiply by `|p_hat| nu0(|p_hat| / B_p)`, inverse DFT,
/// truncate the padding.
pub fn ramp_filter(sino: &Sinogram, profile: &FilterProfile) -> Result<Sinogram> {
    check_parallel(&sino.spec())?;
    let band = profile.band_for(&sino.spec());
    Ok(filter_rows(
        sino,
        |xi| xi.abs() * profile.window.nu0(xi.abs() / band),
        true,
    ))
}

/// Circular (unpadded) variant of [`ramp_filter`]: exact discrete multiplier
/// semantics on the periodic row, no truncation effects. A constant row is a
/// pure zero mode here and filters to exactly zero.
pub fn ramp_filter_circular(sino: &Sinogram, profile: &FilterProfile) -> Result<Sinogram> {
    check_parallel(&sino.spec())?;
    let band = profile.band_for(&sino.spec());
    Ok(filter_rows(
        sino,
        |xi| xi.abs() * profile.window.nu0(xi.abs() / band),
        false,
    ))
}

/// Half-order filter `|p_hat|^{1/2}` per row (no window), used by the exact
/// norm identity `4 pi ||f||^2 = || |D_p|^{1/2} R f ||^2`.
pub fn half_ramp_filter(sino: &Sinogram) -> Result<Sinogram> {
    check_parallel(&sino.spec())?;
    Ok(filter_rows(sino, |xi| xi.abs().sqrt(), true))
}

/// Angle coverage of the backprojection sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AngleRange {
    /// All rows, phi over `[-pi, pi)`.
    #[default]
    FullCircle,
    /// Rows with phi in `[0, pi)` only.
    HalfCircle,
}

/// Options of [`fbp_invert`]: interpolation kernel in p and angle coverage.
#[derive(Debug, Clone)]
pub struct FbpOptions {
    pub interp: Kernel,
    pub angles: AngleRange,
}

impl Default for FbpOptions {
    fn default() -> Self {
        FbpOptions { interp: Kernel::Linear, angles: AngleRange::FullCircle }
    }
}

impl FbpOptions {
    pub fn lanczos3() -> Self {
        FbpOptions { interp: Kernel::LANCZOS3, angles: AngleRange::FullCircle }
    }
}

/// Densification factor for non-linear interpolation kernels in the
/// backprojection: rows are first resampled onto this many points per
/// original step with the exact kernel, then queried linearly.
const BACKPROJECT_DENSIFY: usize = 8;

fn angle_rows(spec: &SinogramSpec, range: AngleRange) -> std::ops::Range<usize> {
    match range {
        AngleRange::FullCircle => 0..spec.n_angle,
        // Cell-centered angles over [-pi, pi): the second half covers (0, pi).
        AngleRange::HalfCircle => spec.n_angle / 2..spec.n_angle,
    }
}

/// Discrete backprojection `f(x) = dphi * sum_i g(phi_i, x . omega(phi_i))`
/// with the selected kernel interpolating each row in p.
pub fn backproject(sino: &Sinogram, grid: GridSpec, kernel: Kernel) -> Result<Image> {
    backproject_rows(sino, grid, kernel, AngleRange::FullCircle)
}

fn backproject_rows(
    sino: &Sinogram,
    grid: GridSpec,
    kernel: Kernel,
    range: AngleRange,
) -> Result<Image> {
    check_parallel(&sino.spec())?;
    let spec = sino.spec();
    let s_p = spec.offset_step();
    let radius = spec.radius;
    let nx = grid.nx();
    let ny = grid.ny();
    let mut acc = vec![0.0f64; nx * ny];
    let xs: Vec<f64> = (0..nx).map(|j| grid.x(j)).collect();
    let ys: Vec<f64> = (0..ny).map(|i| grid.y(i)).collect();

    let use_dense = kernel != Kernel::Linear;
    let lut = if use_dense { Some(KernelLut::build(kernel)?) } else { None };
    let mut dense = if use_dense {
        vec![0.0f64; (spec.n_offset - 1) * BACKPROJECT_DENSIFY + 1]
    } else {
        Vec::new()
    };
    // Weight rows for the densified fractions, precomputed once.
    let dense_weights: Vec<Vec<f64>> = if let Some(lut) = &lut {
        (0..BACKPROJECT_DENSIFY)
            .map(|r| {
                let mut w = vec![0.0; lut.taps()];
                lut.weights_at(r as f64 / BACKPROJECT_DENSIFY as f64, &mut w);
                w
            })
            .collect()
    } else {
        Vec::new()
    };

    for i in angle_rows(&spec, range) {
        let phi = spec.angle(i);
        let (sin_phi, cos_phi) = phi.sin_cos();
        let row = sino.values().row(i);
        let n = row.len() as i64;

        if let Some(lut) = &lut {
            // Resample the row onto the dense grid with the exact kernel.
            let taps = lut.taps();
            let first = lut.first_tap_offset();
            for (di, slot) in dense.iter_mut().enumerate() {
                let k0 = (di / BACKPROJECT_DENSIFY) as i64;
                let r = di % BACKPROJECT_DENSIFY;
                if r == 0 {
                    *slot = row[k0 as usize];
                    continue;
                }
                let w = &dense_weights[r];
                let mut v = 0.0;
                for (t, &wt) in w.iter().enumerate().take(taps) {
                    let k = k0 + first + t as i64;
                    if k >= 0 && k < n {
                        v += row[k as usize] * wt;
                    }
                }
                *slot = v;
            }
            let dlen = dense.len() as i64;
            let scale = BACKPROJECT_DENSIFY as f64 / s_p;
            let offset = (radius / s_p - 0.5) * BACKPROJECT_DENSIFY as f64;
            for (iy, &y) in ys.iter().enumerate() {
                let base = y * sin_phi;
                let out_row = &mut acc[iy * nx..(iy + 1) * nx];
                for (ix, slot) in out_row.iter_mut().enumerate() {
                    let p = xs[ix] * cos_phi + base;
                    let td = p * scale + offset;
                    let j = td.floor();
                    let ji = j as i64;
                    if ji < 0 || ji + 1 >= dlen {
                        continue;
                    }
                    let frac = td - j;
                    let lo = dense[ji as usize];
                    let hi = dense[ji as usize + 1];
                    *slot += lo + frac * (hi - lo);
                }
            }
        } else {
            let scale = 1.0 / s_p;
            let offset = radius / s_p - 0.5;
            for (iy, &y) in ys.iter().enumerate() {
                let base = y * sin_phi;
                let out_row = &mut acc[iy * nx..(iy + 1) * nx];
                for (ix, slot) in out_row.iter_mut().enumerate() {
                    let t = (xs[ix] * cos_phi + base) * scale + offset;
                    let j = t.floor();
                    let ji = j as i64;
                    if ji < 0 || ji + 1 >= n {
                        continue;
                    }
                    let frac = t - j;
                    let lo = row[ji as usize];
                    let hi = row[ji as usize + 1];
                    *slot += lo + frac * (hi - lo);
                }
            }
        }
    }

    let dphi = spec.angle_step();
    for v in &mut acc {
        *v *= dphi;
    }
    Image::new(grid, Mat::from_vec(ny, nx, acc)?)
}

/// Filtered backprojection `f = c * R' nu(D_p) |D_p| g` with `c = 1/(4 pi)`
/// over the full circle (or `1/(2 pi)` over the half circle).
pub fn fbp_invert(
    sino: &Sinogram,
    grid: GridSpec,
    profile: &FilterProfile,
    opts: &FbpOptions,
) -> Result<Image> {
    let filtered = ramp_filter(sino, profile)?;
    let mut img = backproject_rows(&filtered, grid, opts.interp, opts.angles)?;
    let c = match opts.angles {
        AngleRange::FullCircle => 1.0 / (4.0 * PI),
        AngleRange::HalfCircle => 1.0 / (2.0 * PI),
    };
    img.values_mut().scale(c);
    Ok(img)
}

/// Angular count `ceil(2 pi n)` rounded up to even, the sharp sampling rate
/// for an `n x n` image.
pub fn sharp_angle_count(n: usize) -> usize {
    let v = (2.0 * PI * n as f64).ceil() as usize;
    v + v % 2
}

/// The sharp sinogram layout for an `n x n` image on `[-a, a]^2`:
/// `ceil(2 pi n)` (even) angles by `2n` offsets over `[-sqrt(2) a, sqrt(2) a]`.
pub fn sharp_parallel_spec(n: usize, a: f64) -> Result<SinogramSpec> {
    SinogramSpec::parallel(sharp_angle_count(n), 2 * n, 2f64.sqrt() * a)
}
