//! File formats: image CSV, sinogram CSV, and binary PGM for visualization.

use crate::grid::{Geometry, GridSpec, Image, Mat, Sinogram, SinogramSpec};
use crate::{Error, Result};
use std::io::{BufRead, BufWriter, Write};
use std::path::Path;

/// Writes an image as CSV: a `nx,ny,a,b` header pair of lines followed by
/// `ny` rows of `nx` comma-separated values (row-major).
pub fn write_image_csv(img: &Image, path: &Path) -> Result<()> {
    let mut w = BufWriter::new(std::fs::File::create(path)?);
    let g = img.grid();
    writeln!(w, "nx,ny,a,b")?;
    writeln!(w, "{},{},{},{}", g.nx(), g.ny(), g.half_width(), g.half_height())?;
    write_rows(&mut w, img.values())?;
    Ok(())
}

pub fn read_image_csv(path: &Path) -> Result<Image> {
    let f = std::fs::File::open(path)?;
    let mut lines = std::io::BufReader::new(f).lines();
    let header = next_line(&mut lines)?;
    if header.trim() != "nx,ny,a,b" {
        return Err(Error::Parse(format!("expected image header 'nx,ny,a,b', got '{header}'")));
    }
    let dims = next_line(&mut lines)?;
    let parts: Vec<&str> = dims.trim().split(',').collect();
    if parts.len() != 4 {
        return Err(Error::Parse("image header needs nx,ny,a,b values".into()));
    }
    let nx: usize = parse(parts[0])?;
    let ny: usize = parse(parts[1])?;
    let a: f64 = parse(parts[2])?;
    let b: f64 = parse(parts[3])?;
    let grid = GridSpec::new(nx, ny, a, b)?;
    let values = read_rows(&mut lines, ny, nx)?;
    Image::new(grid, values)
}

/// Writes a sinogram as CSV with a 4-line header
/// (`geometry`, `n_angle`, `n_offset`, `radius`) followed by the value rows.
pub fn write_sinogram_csv(sino: &Sinogram, path: &Path) -> Result<()> {
    let mut w = BufWriter::new(std::fs::File::create(path)?);
    let s = sino.spec();
    writeln!(w, "geometry,{}", s.geometry.as_str())?;
    writeln!(w, "n_angle,{}", s.n_angle)?;
    writeln!(w, "n_offset,{}", s.n_offset)?;
    writeln!(w, "radius,{}", s.radius)?;
    write_rows(&mut w, sino.values())?;
    Ok(())
}

pub fn read_sinogram_csv(path: &Path) -> Result<Sinogram> {
    let f = std::fs::File::open(path)?;
    let mut lines = std::io::BufReader::new(f).lines();
    let geometry = match header_value(&mut lines, "geometry")?.as_str() {
        "Parallel" => Geometry::Parallel,
        "Fan" => Geometry::Fan,
        other => return Err(Error::Parse(format!("unknown geometry '{other}'"))),
    };
    let n_angle: usize = parse(&header_value(&mut lines, "n_angle")?)?;
    let n_offset: usize = parse(&header_value(&mut lines, "n_offset")?)?;
    let radius: f64 = parse(&header_value(&mut lines, "radius")?)?;
    let spec = SinogramSpec::new(geometry, n_angle, n_offset, radius)?;
    let values = read_rows(&mut lines, n_angle, n_offset)?;
    Sinogram::new(spec, values)
}

/// Writes a binary PGM (magic `P5`, width, height, 255, raw bytes) after
/// an affine rescale of the values to `[0, 255]`.
pub fn write_image_pgm(img: &Image, path: &Path) -> Result<()> {
    let m = img.values();
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for &v in m.as_slice() {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    let span = if hi > lo { hi - lo } else { 1.0 };
    let mut w = BufWriter::new(std::fs::File::create(path)?);
    write!(w, "P5\n{} {}\n255\n", m.cols(), m.rows())?;
    let bytes: Vec<u8> = m
        .as_slice()
        .iter()
        .map(|&v| (255.0 * (v - lo) / span).round().clamp(0.0, 255.0) as u8)
        .collect();
    w.write_all(&bytes)?;
    Ok(())
}

fn write_rows(w: &mut impl Write, m: &Mat) -> Result<()> {
    let mut line = String::new();
    for r in 0..m.rows() {
        line.clear();
        for (j, v) in m.row(r).iter().enumerate() {
            if j > 0 {
                line.push(',');
            }
            line.push_str(&format!("{v:.17e}"));
        }
        writeln!(w, "{line}")?;
    }
    Ok(())
}

fn read_rows(
    lines: &mut std::io::Lines<impl BufRead>,
    rows: usize,
    cols: usize,
) -> Result<Mat> {
    let mut data = Vec::with_capacity(rows * cols);
    for _ in 0..rows {
        let line = next_line(lines)?;
        for tok in line.trim().split(',') {
            data.push(parse::<f64>(tok)?);
        }
    }
    Mat::from_vec(rows, cols, data)
}

fn next_line(lines: &mut std::io::Lines<impl BufRead>) -> Result<String> {
    match lines.next() {
        Some(l) => Ok(l?),
        None => Err(Error::Parse("unexpected end of file".into())),
    }
}

fn header_value(lines: &mut std::io::Lines<impl BufRead>, key: &str) -> Result<String> {
    let line = next_line(lines)?;
    let (k, v) = line
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("expected '{key},<value>' line")))?;
    if k.trim() != key {
        return Err(Error::Parse(format!("expected header key '{key}', got '{k}'")));
    }
    Ok(v.trim().to_string())
}

fn parse<T: std::str::FromStr>(s: &str) -> Result<T> {
    s.trim().parse().map_err(|_| Error::Parse(format!("cannot parse '{s}'")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridSpec;

    #[test]
    fn image_csv_round_trip() {
        let g = GridSpec::new(5, 3, 1.5, 0.75).unwrap();
        let img = Image::from_fn(g, |x, y| x * y + 0.123456789012345);
        let dir = std::env::temp_dir().join("radonlab_io_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("img.csv");
        write_image_csv(&img, &path).unwrap();
        let back = read_image_csv(&path).unwrap();
        assert_eq!(back.grid(), img.grid());
        for (a, b) in back.values().as_slice().iter().zip(img.values().as_slice()) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn sinogram_csv_round_trip() {
        let spec = SinogramSpec::fan(6, 4, 2f64.sqrt()).unwrap();
        let mut sino = Sinogram::zeros(spec);
        for i in 0..6 {
            for j in 0..4 {
                sino.values_mut().set(i, j, (i * 4 + j) as f64 / 7.0);
            }
        }
        let dir = std::env::temp_dir().join("radonlab_io_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("sino.csv");
        write_sinogram_csv(&sino, &path).unwrap();
        let back = read_sinogram_csv(&path).unwrap();
        assert_eq!(back.spec(), sino.spec());
        assert_eq!(back.values(), sino.values());
    }

    #[test]
    fn pgm_has_magic_and_size() {
        let g = GridSpec::square(4, 1.0).unwrap();
        let img = Image::from_fn(g, |x, y| x + y);
        let dir = std::env::temp_dir().join("radonlab_io_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("img.pgm");
        write_image_pgm(&img, &path).unwrap();
        let bytes = std::fs::read(&path).unwrap();
        assert!(bytes.starts_with(b"P5\n4 4\n255\n"));
        assert_eq!(bytes.len(), b"P5\n4 4\n255\n".len() + 16);
    }
}
