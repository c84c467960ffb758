//! Grids, images, sinograms, and empirical statistics.
//!
//! Sample positions are cell-centered everywhere: an axis of extent
//! `[-a, a]` with `n` samples has step `s = 2a/n` and coordinates
//! `-a + (j + 1/2) s`. This avoids duplicating the periodic endpoints
//! of the angle axis and keeps index reversal an exact sign flip.

use crate::{invalid, Error, Result};
use std::f64::consts::PI;

/// Dense row-major matrix of `f64`, the backing store for images and sinograms.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "expected {}x{}={} values, got {}",
                rows,
                cols,
                rows * cols,
                data.len()
            )));
        }
        Ok(Mat { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: f64) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [f64] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn scale(&mut self, k: f64) {
        for v in &mut self.data {
            *v *= k;
        }
    }

    pub fn sum_sq(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum()
    }
}

/// Uniform cell-centered grid over the rectangle `[-a, a] x [-b, b]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    nx: usize,
    ny: usize,
    half_width: f64,
    half_height: f64,
}

impl GridSpec {
    pub fn new(nx: usize, ny: usize, half_width: f64, half_height: f64) -> Result<Self> {
        if nx < 2 || ny < 2 {
            return Err(invalid("grid needs nx >= 2 and ny >= 2"));
        }
        if !(half_width > 0.0) || !(half_height > 0.0) {
            return Err(invalid("grid extents must be positive"));
        }
        Ok(GridSpec { nx, ny, half_width, half_height })
    }

    /// Square grid on `[-a, a]^2` with `n` samples per axis.
    pub fn square(n: usize, a: f64) -> Result<Self> {
        Self::new(n, n, a, a)
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn half_height(&self) -> f64 {
        self.half_height
    }

    pub fn step_x(&self) -> f64 {
        2.0 * self.half_width / self.nx as f64
    }

    pub fn step_y(&self) -> f64 {
        2.0 * self.half_height / self.ny as f64
    }

    #[inline]
    pub fn x(&self, j: usize) -> f64 {
        -self.half_width + (j as f64 + 0.5) * self.step_x()
    }

    #[inline]
    pub fn y(&self, i: usize) -> f64 {
        -self.half_height + (i as f64 + 0.5) * self.step_y()
    }

    pub fn cell_area(&self) -> f64 {
        self.step_x() * self.step_y()
    }
}

/// Real scalar field sampled on a [`GridSpec`]; row `i` is the `y(i)` line.
#[derive(Debug, Clone, PartialEq)]
pub struct Image {
    grid: GridSpec,
    values: Mat,
}

impl Image {
    pub fn zeros(grid: GridSpec) -> Self {
        Image { grid, values: Mat::zeros(grid.ny, grid.nx) }
    }

    pub fn new(grid: GridSpec, values: Mat) -> Result<Self> {
        if values.rows() != grid.ny || values.cols() != grid.nx {
            return Err(Error::DimensionMismatch(format!(
                "image values {}x{} do not match grid {}x{}",
                values.rows(),
                values.cols(),
                grid.ny,
                grid.nx
            )));
        }
        Ok(Image { grid, values })
    }

    /// Evaluates `f(x, y)` at every cell center.
    pub fn from_fn(grid: GridSpec, mut f: impl FnMut(f64, f64) -> f64) -> Self {
        let values = Mat::from_fn(grid.ny, grid.nx, |i, j| f(grid.x(j), grid.y(i)));
        Image { grid, values }
    }

    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    pub fn values(&self) -> &Mat {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut Mat {
        &mut self.values
    }

    pub fn into_values(self) -> Mat {
        self.values
    }

    /// Discrete L2 norm `sqrt((4ab/(nx ny)) * sum v^2)`, the quadrature
    /// approximation of the continuous norm over the rectangle.
    pub fn l2_norm(&self) -> f64 {
        let w = 4.0 * self.grid.half_width * self.grid.half_height
            / (self.grid.nx as f64 * self.grid.ny as f64);
        (w * self.values.sum_sq()).sqrt()
    }

    /// Empirical statistics of all pixel values.
    pub fn stats(&self) -> Stats {
        stats(self.values.as_slice()).expect("image is nonempty")
    }

    /// Statistics restricted to pixels with `|x| <= radius`.
    pub fn stats_in_disk(&self, radius: f64) -> Result<Stats> {
        let mut vals = Vec::new();
        for i in 0..self.grid.ny {
            let y = self.grid.y(i);
            for j in 0..self.grid.nx {
                let x = self.grid.x(j);
                if x * x + y * y <= radius * radius {
                    vals.push(self.values.get(i, j));
                }
            }
        }
        stats(&vals)
    }
}

/// Sinogram geometry: parallel lines `(phi, p)` or fan-beam rays `(alpha, beta)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Geometry {
    Parallel,
    Fan,
}

impl Geometry {
    pub fn as_str(&self) -> &'static str {
        match self {
            Geometry::Parallel => "Parallel",
            Geometry::Fan => "Fan",
        }
    }
}

/// Sampling layout of a sinogram.
///
/// Angles always cover `[-pi, pi)` uniformly, cell-centered. Offsets cover
/// `[-R, R]` (parallel, `R = radius`) or `[-pi/2, pi/2]` (fan angle beta;
/// `radius` is then the source-circle radius).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SinogramSpec {
    pub geometry: Geometry,
    pub n_angle: usize,
    pub n_offset: usize,
    pub radius: f64,
}

impl SinogramSpec {
    pub fn new(geometry: Geometry, n_angle: usize, n_offset: usize, radius: f64) -> Result<Self> {
        if n_angle < 2 || n_offset < 2 {
            return Err(invalid("sinogram needs n_angle >= 2 and n_offset >= 2"));
        }
        if !(radius > 0.0) {
            return Err(invalid("sinogram radius must be positive"));
        }
        Ok(SinogramSpec { geometry, n_angle, n_offset, radius })
    }

    pub fn parallel(n_angle: usize, n_offset: usize, radius: f64) -> Result<Self> {
        Self::new(Geometry::Parallel, n_angle, n_offset, radius)
    }

    pub fn fan(n_angle: usize, n_offset: usize, radius: f64) -> Result<Self> {
        Self::new(Geometry::Fan, n_angle, n_offset, radius)
    }

    pub fn angle_step(&self) -> f64 {
        2.0 * PI / self.n_angle as f64
    }

    /// Half-extent of the offset axis: `R` for parallel, `pi/2` for fan.
    pub fn offset_half_extent(&self) -> f64 {
        match self.geometry {
            Geometry::Parallel => self.radius,
            Geometry::Fan => PI / 2.0,
        }
    }

    pub fn offset_step(&self) -> f64 {
        2.0 * self.offset_half_extent() / self.n_offset as f64
    }

    #[inline]
    pub fn angle(&self, i: usize) -> f64 {
        -PI + (i as f64 + 0.5) * self.angle_step()
    }

    #[inline]
    pub fn offset(&self, j: usize) -> f64 {
        -self.offset_half_extent() + (j as f64 + 0.5) * self.offset_step()
    }

    /// Measure of one sinogram cell, `s_angle * s_offset`.
    pub fn cell_measure(&self) -> f64 {
        self.angle_step() * self.offset_step()
    }
}

/// Uniform cell-centered sample coordinates `(angles, offsets)` of a sinogram.
pub fn sinogram_grid(spec: &SinogramSpec) -> (Vec<f64>, Vec<f64>) {
    let angles = (0..spec.n_angle).map(|i| spec.angle(i)).collect();
    let offsets = (0..spec.n_offset).map(|j| spec.offset(j)).collect();
    (angles, offsets)
}

/// Real field over angle x offset; row `i` is the angle `spec.angle(i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Sinogram {
    spec: SinogramSpec,
    values: Mat,
}

impl Sinogram {
    pub fn zeros(spec: SinogramSpec) -> Self {
        Sinogram { spec, values: Mat::zeros(spec.n_angle, spec.n_offset) }
    }

    pub fn new(spec: SinogramSpec, values: Mat) -> Result<Self> {
        if values.rows() != spec.n_angle || values.cols() != spec.n_offset {
            return Err(Error::DimensionMismatch(format!(
                "sinogram values {}x{} do not match spec {}x{}",
                values.rows(),
                values.cols(),
                spec.n_angle,
                spec.n_offset
            )));
        }
        Ok(Sinogram { spec, values })
    }

    pub fn spec(&self) -> SinogramSpec {
        self.spec
    }

    pub fn values(&self) -> &Mat {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut Mat {
        &mut self.values
    }

    pub fn into_values(self) -> Mat {
        self.values
    }

    /// Discrete L2 norm with the cell measure of the `(angle, offset)` domain.
    pub fn l2_norm(&self) -> f64 {
        (self.spec.cell_measure() * self.values.sum_sq()).sqrt()
    }

    pub fn stats(&self) -> Stats {
        stats(self.values.as_slice()).expect("sinogram is nonempty")
    }
}

/// Empirical mean, variance, standard deviation, and plain Euclidean norm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Stats {
    pub mean: f64,
    pub var: f64,
    pub std: f64,
    pub l2_norm: f64,
}

/// Statistics with the default convention `var = E[v^2] - (E[v])^2`.
///
/// Accumulation is in f64 regardless of input size; collections up to 10^6
/// samples appear in the spectrum experiments.
pub fn stats(values: &[f64]) -> Result<Stats> {
    stats_with(values, false)
}

/// Statistics with `var = E[v^2]` (the zero-mean convention used for noise).
pub fn stats_about_zero(values: &[f64]) -> Result<Stats> {
    stats_with(values, true)
}

fn stats_with(values: &[f64], about_zero: bool) -> Result<Stats> {
    if values.is_empty() {
        return Err(invalid("stats of an empty collection"));
    }
    let n = values.len() as f64;
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    for &v in values {
        sum += v;
        sum_sq += v * v;
    }
    let mean = sum / n;
    let mean_sq = sum_sq / n;
    let var = if about_zero { mean_sq } else { (mean_sq - mean * mean).max(0.0) };
    Ok(Stats { mean, var, std: var.sqrt(), l2_norm: sum_sq.sqrt() })
}
