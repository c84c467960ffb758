//! Thin wrappers around `rustfft` with cached plans.
//!
//! The repo-wide DFT convention is unitary: forward and inverse are both
//! scaled by `1/sqrt(n)` so that Parseval holds with equal discrete norms.

use rustfft::num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

type PlanKey = (usize, bool);

fn plan(n: usize, inverse: bool) -> Arc<dyn Fft<f64>> {
    static CACHE: OnceLock<Mutex<HashMap<PlanKey, Arc<dyn Fft<f64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut lock = cache.lock().unwrap();
    lock.entry((n, inverse))
        .or_insert_with(|| {
            let mut planner = FftPlanner::new();
            if inverse {
                planner.plan_fft_inverse(n)
            } else {
                planner.plan_fft_forward(n)
            }
        })
        .clone()
}

/// In-place unnormalized forward FFT.
pub fn fft_raw(buf: &mut [Complex64]) {
    plan(buf.len(), false).process(buf);
}

/// In-place unnormalized inverse FFT (no 1/n).
pub fn ifft_raw(buf: &mut [Complex64]) {
    plan(buf.len(), true).process(buf);
}

/// In-place unitary forward FFT.
pub fn fft_unitary(buf: &mut [Complex64]) {
    fft_raw(buf);
    let s = 1.0 / (buf.len() as f64).sqrt();
    for v in buf.iter_mut() {
        *v *= s;
    }
}

/// In-place unitary inverse FFT.
pub fn ifft_unitary(buf: &mut [Complex64]) {
    ifft_raw(buf);
    let s = 1.0 / (buf.len() as f64).sqrt();
    for v in buf.iter_mut() {
        *v *= s;
    }
}

pub fn to_complex(values: &[f64]) -> Vec<Complex64> {
    values.iter().map(|&v| Complex64::new(v, 0.0)).collect()
}

/// Signed frequency index of DFT bin `k` on an `n`-point grid:
/// `0..n/2` stay, the rest map to negatives.
#[inline]
pub fn signed_index(k: usize, n: usize) -> i64 {
    if k <= (n - 1) / 2 {
        k as i64
    } else {
        k as i64 - n as i64
    }
}

/// Unitary 2-D FFT of a row-major `rows x cols` complex buffer, in place.
pub fn fft2_unitary(buf: &mut [Complex64], rows: usize, cols: usize) {
    fft2_dir(buf, rows, cols, false);
}

/// Unitary 2-D inverse FFT, in place.
pub fn ifft2_unitary(buf: &mut [Complex64], rows: usize, cols: usize) {
    fft2_dir(buf, rows, cols, true);
}

fn fft2_dir(buf: &mut [Complex64], rows: usize, cols: usize, inverse: bool) {
    assert_eq!(buf.len(), rows * cols);
    let row_plan = plan(cols, inverse);
    for r in 0..rows {
        row_plan.process(&mut buf[r * cols..(r + 1) * cols]);
    }
    let col_plan = plan(rows, inverse);
    let mut col = vec![Complex64::default(); rows];
    for c in 0..cols {
        for r in 0..rows {
            col[r] = buf[r * cols + c];
        }
        col_plan.process(&mut col);
        for r in 0..rows {
            buf[r * cols + c] = col[r];
        }
    }
    let s = 1.0 / ((rows * cols) as f64).sqrt();
    for v in buf.iter_mut() {
        *v *= s;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unitary_parseval_1d() {
        let data: Vec<f64> = (0..37).map(|i| ((i * 7919) % 13) as f64 - 6.0).collect();
        let mut buf = to_complex(&data);
        fft_unitary(&mut buf);
        let power: f64 = buf.iter().map(|c| c.norm_sqr()).sum();
        let energy: f64 = data.iter().map(|v| v * v).sum();
        assert!((power - energy).abs() < 1e-10 * energy);
    }

    #[test]
    fn round_trip_2d() {
        let rows = 6;
        let cols = 10;
        let data: Vec<f64> = (0..60).map(|i| (i as f64 * 0.37).sin()).collect();
        let mut buf = to_complex(&data);
        fft2_unitary(&mut buf, rows, cols);
        ifft2_unitary(&mut buf, rows, cols);
        for (c, v) in buf.iter().zip(&data) {
            assert!((c.re - v).abs() < 1e-12);
            assert!(c.im.abs() < 1e-12);
        }
    }

    #[test]
    fn signed_indices() {
        assert_eq!(signed_index(0, 8), 0);
        assert_eq!(signed_index(3, 8), 3);
        assert_eq!(signed_index(4, 8), -4);
        assert_eq!(signed_index(7, 8), -1);
        assert_eq!(signed_index(2, 5), 2);
        assert_eq!(signed_index(3, 5), -2);
    }
}
