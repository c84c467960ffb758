//! Analytic test images and their closed-form line integrals.

use crate::grid::{GridSpec, Image};
use std::f64::consts::PI;

/// A disk of amplitude `amplitude` centered at `(cx, cy)` with radius `r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disk {
    pub cx: f64,
    pub cy: f64,
    pub r: f64,
    pub amplitude: f64,
}

impl Disk {
    /// Chord length through the disk of the line `x . omega(phi) = p`,
    /// times the amplitude: the analytic Radon transform of the disk.
    pub fn radon(&self, phi: f64, p: f64) -> f64 {
        let q = p - self.cx * phi.cos() - self.cy * phi.sin();
        let d2 = self.r * self.r - q * q;
        if d2 > 0.0 {
            self.amplitude * 2.0 * d2.sqrt()
        } else {
            0.0
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum PhantomKind {
    /// Standard ten-ellipse head phantom, rescaled to the range [0, 1].
    SheppLogan,
    Disks(Vec<Disk>),
    /// `amplitude * exp(-|x|^2 / (2 w^2))`.
    GaussianBump { width: f64, amplitude: f64 },
    /// `cos(kx x + ky y)`.
    PlaneWave { kx: f64, ky: f64 },
}

/// Ellipse table entry: center, semi-axes, rotation (degrees), additive value.
struct Ellipse {
    x0: f64,
    y0: f64,
    a: f64,
    b: f64,
    theta_deg: f64,
    value: f64,
}

/// The classic Shepp-Logan parameters; summed values range over [0, 2].
const SHEPP_LOGAN: [Ellipse; 10] = [
    Ellipse { x0: 0.0, y0: 0.0, a: 0.69, b: 0.92, theta_deg: 0.0, value: 2.0 },
    Ellipse { x0: 0.0, y0: -0.0184, a: 0.6624, b: 0.874, theta_deg: 0.0, value: -0.98 },
    Ellipse { x0: 0.22, y0: 0.0, a: 0.11, b: 0.31, theta_deg: -18.0, value: -0.02 },
    Ellipse { x0: -0.22, y0: 0.0, a: 0.16, b: 0.41, theta_deg: 18.0, value: -0.02 },
    Ellipse { x0: 0.0, y0: 0.35, a: 0.21, b: 0.25, theta_deg: 0.0, value: 0.01 },
    Ellipse { x0: 0.0, y0: 0.1, a: 0.046, b: 0.046, theta_deg: 0.0, value: 0.01 },
    Ellipse { x0: 0.0, y0: -0.1, a: 0.046, b: 0.046, theta_deg: 0.0, value: 0.01 },
    Ellipse { x0: -0.08, y0: -0.605, a: 0.046, b: 0.023, theta_deg: 0.0, value: 0.01 },
    Ellipse { x0: 0.0, y0: -0.605, a: 0.023, b: 0.023, theta_deg: 0.0, value: 0.01 },
    Ellipse { x0: 0.06, y0: -0.605, a: 0.023, b: 0.046, theta_deg: 0.0, value: 0.01 },
];

/// Pointwise value of the continuous phantom at `(x, y)`.
pub fn eval(kind: &PhantomKind, x: f64, y: f64) -> f64 {
    match kind {
        PhantomKind::SheppLogan => {
            let mut v = 0.0;
            for e in &SHEPP_LOGAN {
                let t = e.theta_deg * PI / 180.0;
                let (st, ct) = t.sin_cos();
                let dx = x - e.x0;
                let dy = y - e.y0;
                let u = (ct * dx + st * dy) / e.a;
                let w = (-st * dx + ct * dy) / e.b;
                if u * u + w * w <= 1.0 {
                    v += e.value;
                }
            }
            v / 2.0
        }
        PhantomKind::Disks(disks) => disks
            .iter()
            .map(|d| {
                let dx = x - d.cx;
                let dy = y - d.cy;
                if dx * dx + dy * dy <= d.r * d.r {
                    d.amplitude
                } else {
                    0.0
                }
            })
            .sum(),
        PhantomKind::GaussianBump { width, amplitude } => {
            amplitude * (-(x * x + y * y) / (2.0 * width * width)).exp()
        }
        PhantomKind::PlaneWave { kx, ky } => (kx * x + ky * y).cos(),
    }
}

/// Renders the phantom at the cell centers of `grid`.
pub fn render(kind: &PhantomKind, grid: GridSpec) -> Image {
    Image::from_fn(grid, |x, y| eval(kind, x, y))
}

/// Analytic Radon transform of a Gaussian bump of width `w`:
/// `amplitude * sqrt(2 pi) w exp(-p^2 / (2 w^2))`, independent of the angle.
pub fn gaussian_bump_radon(width: f64, amplitude: f64, p: f64) -> f64 {
    amplitude * (2.0 * PI).sqrt() * width * (-p * p / (2.0 * width * width)).exp()
}

/// Three disks of different size and intensity inside the unit square,
/// values in [0, 1].
pub fn three_disks() -> PhantomKind {
    PhantomKind::Disks(vec![
        Disk { cx: -0.35, cy: 0.3, r: 0.38, amplitude: 0.6 },
        Disk { cx: 0.42, cy: 0.05, r: 0.22, amplitude: 1.0 },
        Disk { cx: -0.05, cy: -0.5, r: 0.12, amplitude: 0.8 },
    ])
}
