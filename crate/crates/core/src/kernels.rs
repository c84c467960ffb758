//! Interpolation kernels: sinc, Lanczos-k, linear, nearest, Catmull-Rom.
//!
//! All kernels are even cardinal functions in sample units: `eval(j)` is 1 at
//! `j = 0` and 0 at every other integer inside the support. `fourier_profile`
//! returns the continuous Fourier transform `chi_hat(xi) = Int chi(x) e^{-i xi x} dx`
//! (real by evenness), closed-form for sinc/linear/nearest and by
//! Gauss-Legendre panel quadrature (absolute error < 1e-8) for the rest.

use crate::quad;
use crate::{invalid, Result};
use std::f64::consts::PI;

/// `sin(pi x) / (pi x)`, the engineering sinc.
pub fn sinc(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        let px = PI * x;
        px.sin() / px
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kernel {
    /// Ideal low-pass kernel; infinite support, Fourier-domain use only.
    Sinc,
    /// `Lanczos(k)`: `sinc(x) sinc(x/k)` on `|x| < k`.
    Lanczos(u32),
    /// Tent function on `|x| <= 1`.
    Linear,
    /// Box of width 1.
    Nearest,
    /// Piecewise-cubic Catmull-Rom spline on `|x| <= 2`.
    CatmullRom,
}

impl Kernel {
    pub const LANCZOS3: Kernel = Kernel::Lanczos(3);

    /// Half-width of the support in sample units; infinite for `Sinc`.
    pub fn support_radius(&self) -> f64 {
        match self {
            Kernel::Sinc => f64::INFINITY,
            Kernel::Lanczos(k) => *k as f64,
            Kernel::Linear => 1.0,
            Kernel::Nearest => 0.5,
            Kernel::CatmullRom => 2.0,
        }
    }

    /// True when the kernel can drive a finite convolution interpolation loop.
    pub fn has_finite_support(&self) -> bool {
        !matches!(self, Kernel::Sinc)
    }

    /// Spatial kernel value at `x` (sample units); zero outside the support.
    pub fn eval(&self, x: f64) -> f64 {
        let ax = x.abs();
        match self {
            Kernel::Sinc => sinc(ax),
            Kernel::Lanczos(k) => {
                let k = *k as f64;
                if ax < k {
                    sinc(ax) * sinc(ax / k)
                } else {
                    0.0
                }
            }
            Kernel::Linear => {
                if ax < 1.0 {
                    1.0 - ax
                } else {
                    0.0
                }
            }
            Kernel::Nearest => {
                if ax < 0.5 {
                    1.0
                } else if ax == 0.5 {
                    0.5
                } else {
                    0.0
                }
            }
            Kernel::CatmullRom => {
                if ax < 1.0 {
                    ((1.5 * ax - 2.5) * ax) * ax + 1.0
                } else if ax < 2.0 {
                    (((-0.5 * ax) + 2.5) * ax - 4.0) * ax + 2.0
                } else {
                    0.0
                }
            }
        }
    }

    /// Fourier transform `chi_hat(xi)`, `xi` in radians per sample unit.
    pub fn fourier_profile(&self, xi: f64) -> f64 {
        let axi = xi.abs();
        match self {
            Kernel::Sinc => {
                if axi < PI {
                    1.0
                } else if axi == PI {
                    0.5
                } else {
                    0.0
                }
            }
            Kernel::Linear => {
                let s = sinc(axi / (2.0 * PI));
                s * s
            }
            Kernel::Nearest => sinc(axi / (2.0 * PI)),
            Kernel::Lanczos(_) | Kernel::CatmullRom => self.quadrature_profile(axi),
        }
    }

    /// `Int chi^2` over the real line; closed form where available.
    pub fn l2_norm_sq(&self) -> f64 {
        match self {
            Kernel::Sinc => 1.0,
            Kernel::Linear => 2.0 / 3.0,
            Kernel::Nearest => 1.0,
            Kernel::Lanczos(_) | Kernel::CatmullRom => {
                let r = self.support_radius();
                let panels = (2.0 * r).ceil() as usize * 4;
                2.0 * quad::gauss_legendre(|x| self.eval(x).powi(2), 0.0, r, panels)
            }
        }
    }

    /// Supremum of `|chi_hat|`, the constant in the sampling norm bound.
    pub fn fourier_sup(&self) -> f64 {
        match self {
            Kernel::Sinc | Kernel::Linear | Kernel::Nearest => 1.0,
            _ => {
                // Dense scan; the profiles decay like O(xi^-2), so the sup
                // sits inside the first two periods.
                let n = 4096;
                let mut sup: f64 = 0.0;
                for i in 0..=n {
                    let xi = 4.0 * PI * i as f64 / n as f64;
                    sup = sup.max(self.fourier_profile(xi).abs());
                }
                sup
            }
        }
    }

    /// Even-function quadrature `2 Int_0^r chi(x) cos(xi x) dx` with
    /// Gauss-Legendre panels per unit interval, refined with frequency.
    fn quadrature_profile(&self, xi: f64) -> f64 {
        let r = self.support_radius();
        let per_unit = 2 + (xi / PI).ceil() as usize;
        let panels = (r.ceil() as usize) * per_unit;
        2.0 * quad::gauss_legendre(|x| self.eval(x) * (xi * x).cos(), 0.0, r, panels)
    }
}

/// Precomputed interpolation weights for a finite-support kernel, tabulated
/// over the fractional offset and linearly interpolated between table rows.
/// Tap `t` of `weights_at(frac)` multiplies the sample at `floor(x) + t + 1 - k`
/// where `k = taps/2`.
#[derive(Debug, Clone)]
pub struct KernelLut {
    taps: usize,
    res: usize,
    /// (res + 1) rows by `taps` weights.
    table: Vec<f64>,
}

pub const LUT_RESOLUTION: usize = 2048;

impl KernelLut {
    pub fn build(kernel: Kernel) -> Result<Self> {
        if !kernel.has_finite_support() {
            return Err(invalid("sinc kernel has no finite interpolation support"));
        }
        let radius = kernel.support_radius();
        // Taps cover offsets 1-k .. k around floor(x).
        let k = radius.ceil() as usize;
        let taps = 2 * k;
        let res = LUT_RESOLUTION;
        let mut table = vec![0.0; (res + 1) * taps];
        for row in 0..=res {
            let frac = row as f64 / res as f64;
            for t in 0..taps {
                let offset = t as f64 + 1.0 - k as f64;
                table[row * taps + t] = kernel.eval(frac - offset);
            }
        }
        Ok(KernelLut { taps, res, table })
    }

    #[inline]
    pub fn taps(&self) -> usize {
        self.taps
    }

    /// Index of the first tap relative to `floor(x)`.
    #[inline]
    pub fn first_tap_offset(&self) -> i64 {
        1 - (self.taps as i64) / 2
    }

    /// Writes the `taps` weights for fractional offset `frac` in [0, 1] into `out`.
    #[inline]
    pub fn weights_at(&self, frac: f64, out: &mut [f64]) {
        let pos = frac * self.res as f64;
        let row = (pos as usize).min(self.res - 1);
        let t = pos - row as f64;
        let lo = &self.table[row * self.taps..(row + 1) * self.taps];
        let hi = &self.table[(row + 1) * self.taps..(row + 2) * self.taps];
        for i in 0..self.taps {
            out[i] = lo[i] + t * (hi[i] - lo[i]);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const FAMILIES: [Kernel; 5] =
        [Kernel::Sinc, Kernel::LANCZOS3, Kernel::Linear, Kernel::Nearest, Kernel::CatmullRom];

    #[test]
    fn lanczos3_cardinality_and_support() {
        let k = Kernel::LANCZOS3;
        assert!((k.eval(0.0) - 1.0).abs() < 1e-15);
        assert!(k.eval(1.0).abs() < 1e-15);
        assert!(k.eval(2.0).abs() < 1e-15);
        assert_eq!(k.eval(3.5), 0.0);
        assert_eq!(k.eval(3.0), 0.0);
    }

    #[test]
    fn sinc_at_half() {
        assert!((Kernel::Sinc.eval(0.5) - 2.0 / PI).abs() < 1e-15);
    }

    #[test]
    fn linear_tent_value() {
        assert!((Kernel::Linear.eval(0.25) - 0.75).abs() < 1e-15);
    }

    #[test]
    fn cardinality_all_families() {
        for k in FAMILIES {
            let r = k.support_radius();
            let jmax = if r.is_finite() { r as i64 } else { 25 };
            for j in -jmax..=jmax {
                let expect = if j == 0 { 1.0 } else { 0.0 };
                assert!(
                    (k.eval(j as f64) - expect).abs() < 1e-12,
                    "{k:?} at {j}: {}",
                    k.eval(j as f64)
                );
            }
        }
    }

    #[test]
    fn linear_partition_of_unity() {
        for i in 0..=20 {
            let x = i as f64 / 20.0;
            assert!((Kernel::Linear.eval(x) + Kernel::Linear.eval(1.0 - x) - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn sinc_profile_is_indicator() {
        assert_eq!(Kernel::Sinc.fourier_profile(0.0), 1.0);
        assert_eq!(Kernel::Sinc.fourier_profile(1.1 * PI), 0.0);
        assert_eq!(Kernel::Sinc.fourier_profile(0.99 * PI), 1.0);
    }

    #[test]
    fn lanczos3_profile_at_zero_is_unit_mass() {
        // Oracle: the integral of the kernel itself, by independent adaptive
        // quadrature. The untruncated product sinc(x) sinc(x/3) has unit
        // integral by Parseval; the |x| > 3 tail is cut by the support.
        let oracle = quad::adaptive_simpson(|x| Kernel::LANCZOS3.eval(x), -3.0, 3.0, 1e-12);
        let profile = Kernel::LANCZOS3.fourier_profile(0.0);
        assert!((profile - oracle).abs() < 1e-8, "profile {profile} oracle {oracle}");
        assert!((profile - 1.0).abs() < 1e-2);
    }

    #[test]
    fn lanczos3_profile_near_flat_passband() {
        let v = Kernel::LANCZOS3.fourier_profile(0.4 * PI);
        assert!((v - 1.0).abs() < 0.05, "profile at 0.4 pi = {v}");
    }

    #[test]
    fn l2_norms() {
        assert_eq!(Kernel::Sinc.l2_norm_sq(), 1.0);
        assert!((Kernel::Linear.l2_norm_sq() - 2.0 / 3.0).abs() < 1e-12);
        let lan3 = Kernel::LANCZOS3.l2_norm_sq();
        assert!((lan3 - 0.888).abs() < 1e-3, "||Lan3||^2 = {lan3}");
    }

    #[test]
    fn parseval_consistency_numeric() {
        // ||chi||^2 = (1/2pi) Int |chi_hat|^2, truncated where the profile
        // has decayed (|xi| <= 40 pi covers the O(xi^-2) tails).
        for k in [Kernel::LANCZOS3, Kernel::CatmullRom, Kernel::Linear] {
            let spatial = k.l2_norm_sq();
            let freq = quad::gauss_legendre(
                |xi| k.fourier_profile(xi).powi(2),
                0.0,
                40.0 * PI,
                600,
            ) / PI;
            assert!(
                (spatial - freq).abs() < 1e-4,
                "{k:?}: spatial {spatial} vs freq {freq}"
            );
        }
    }

    #[test]
    fn lut_matches_exact_eval() {
        for k in [Kernel::LANCZOS3, Kernel::Linear, Kernel::CatmullRom] {
            let lut = KernelLut::build(k).unwrap();
            let mut w = vec![0.0; lut.taps()];
            for i in 0..100 {
                let frac = i as f64 / 99.0;
                lut.weights_at(frac, &mut w);
                for t in 0..lut.taps() {
                    let offset = t as i64 + lut.first_tap_offset();
                    let exact = k.eval(frac - offset as f64);
                    assert!(
                        (w[t] - exact).abs() < 2e-6,
                        "{k:?} frac {frac} tap {t}: {} vs {exact}",
                        w[t]
                    );
                }
            }
        }
    }

    #[test]
    fn lut_rejects_sinc() {
        assert!(KernelLut::build(Kernel::Sinc).is_err());
    }

    proptest! {
        #[test]
        fn evenness(x in -8.0f64..8.0) {
            for k in FAMILIES {
                prop_assert_eq!(k.eval(x), k.eval(-x));
                prop_assert_eq!(k.fourier_profile(x), k.fourier_profile(-x));
            }
        }

        #[test]
        fn zero_outside_support(x in 0.0f64..10.0) {
            for k in FAMILIES {
                let r = k.support_radius();
                if r.is_finite() && x > r {
                    prop_assert_eq!(k.eval(x), 0.0);
                }
            }
        }
    }
}
