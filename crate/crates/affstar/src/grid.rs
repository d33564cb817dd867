//! Sampled complex functions on the 4-D product grid
//! (z-plane box) × (w-plane box), with centered FFTs over the z axes,
//! finite differences along the w axes, and row-major CSV dumps.

use num_complex::Complex64;
use rustfft::FftPlanner;
use std::io::Write;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum GridError {
    #[error("expected a function on the {expected:?} side, got {got:?}")]
    SideMismatch { expected: Side, got: Side },
    #[error("grid axes need at least {need} points, got {got}")]
    TooFewPoints { need: usize, got: usize },
    #[error("axis sizes must be powers of two, got {got}")]
    NotPowerOfTwo { got: usize },
}

/// Which variable pair the samples currently live on. The tag flips only
/// through the transform operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `(z, w)` samples.
    Position,
    /// `(ξ, w)` samples.
    Frequency,
}

/// Uniform grid geometry: the z axes cover `[−extent_z, extent_z)` with
/// `n_z` points each, and likewise for the w axes. The frequency axes are
/// the conjugate grid `[−π/h_z, π/h_z)` with spacing `π/extent_z`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    pub extent_z: f64,
    pub n_z: usize,
    pub extent_w: f64,
    pub n_w: usize,
}

impl GridSpec {
    pub fn new(extent_z: f64, n_z: usize, extent_w: f64, n_w: usize) -> Result<Self, GridError> {
        for n in [n_z, n_w] {
            if !n.is_power_of_two() {
                return Err(GridError::NotPowerOfTwo { got: n });
            }
        }
        // The centered-transform phase bookkeeping assumes n_z ≡ 0 (mod 4).
        if n_z < 4 {
            return Err(GridError::TooFewPoints { need: 4, got: n_z });
        }
        assert!(extent_z > 0.0 && extent_w > 0.0);
        Ok(Self {
            extent_z,
            n_z,
            extent_w,
            n_w,
        })
    }

    pub fn step_z(&self) -> f64 {
        2.0 * self.extent_z / self.n_z as f64
    }

    pub fn step_w(&self) -> f64 {
        2.0 * self.extent_w / self.n_w as f64
    }

    pub fn step_xi(&self) -> f64 {
        std::f64::consts::PI / self.extent_z
    }

    pub fn z_axis(&self, i: usize) -> f64 {
        -self.extent_z + i as f64 * self.step_z()
    }

    pub fn w_axis(&self, i: usize) -> f64 {
        -self.extent_w + i as f64 * self.step_w()
    }

    pub fn xi_axis(&self, i: usize) -> f64 {
        let h = self.step_z();
        -std::f64::consts::PI / h + i as f64 * self.step_xi()
    }

    pub fn len(&self) -> usize {
        self.n_z * self.n_z * self.n_w * self.n_w
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Complex samples over a [`GridSpec`], tagged with the active variable
/// pair. Index order is `(i₁, i₂, i₃, i₄)` for `(p₁/ξ₁, p₂/ξ₂, q₁, q₂)`,
/// row-major with `i₄` fastest.
#[derive(Clone, Debug)]
pub struct GridFunction {
    pub spec: GridSpec,
    pub side: Side,
    data: Vec<Complex64>,
}

impl GridFunction {
    pub fn zeros(spec: GridSpec, side: Side) -> Self {
        Self {
            spec,
            side,
            data: vec![Complex64::new(0.0, 0.0); spec.len()],
        }
    }

    /// Sample a closure of the active complex pair: on the position side it
    /// receives `(z, w)`, on the frequency side `(ξ, w)`.
    pub fn from_fn(
        spec: GridSpec,
        side: Side,
        f: impl Fn(Complex64, Complex64) -> Complex64,
    ) -> Self {
        let mut out = Self::zeros(spec, side);
        let n_z = spec.n_z;
        let n_w = spec.n_w;
        let mut idx = 0;
        for i1 in 0..n_z {
            for i2 in 0..n_z {
                let first = match side {
                    Side::Position => Complex64::new(spec.z_axis(i1), spec.z_axis(i2)),
                    Side::Frequency => Complex64::new(spec.xi_axis(i1), spec.xi_axis(i2)),
                };
                for i3 in 0..n_w {
                    for i4 in 0..n_w {
                        let w = Complex64::new(spec.w_axis(i3), spec.w_axis(i4));
                        out.data[idx] = f(first, w);
                        idx += 1;
                    }
                }
            }
        }
        out
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [Complex64] {
        &mut self.data
    }

    pub fn index(&self, i1: usize, i2: usize, i3: usize, i4: usize) -> usize {
        ((i1 * self.spec.n_z + i2) * self.spec.n_w + i3) * self.spec.n_w + i4
    }

    pub fn expect_side(&self, side: Side) -> Result<(), GridError> {
        if self.side == side {
            Ok(())
        } else {
            Err(GridError::SideMismatch {
                expected: side,
                got: self.side,
            })
        }
    }

    /// Pointwise product with a function of the active complex pair.
    pub fn map_pointwise(&self, f: impl Fn(Complex64, Complex64, Complex64) -> Complex64) -> Self {
        let spec = self.spec;
        let mut out = self.clone();
        let n_z = spec.n_z;
        let n_w = spec.n_w;
        let mut idx = 0;
        for i1 in 0..n_z {
            for i2 in 0..n_z {
                let first = match self.side {
                    Side::Position => Complex64::new(spec.z_axis(i1), spec.z_axis(i2)),
                    Side::Frequency => Complex64::new(spec.xi_axis(i1), spec.xi_axis(i2)),
                };
                for i3 in 0..n_w {
                    for i4 in 0..n_w {
                        let w = Complex64::new(spec.w_axis(i3), spec.w_axis(i4));
                        out.data[idx] = f(self.data[idx], first, w);
                        idx += 1;
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let mut out = self.clone();
        for v in &mut out.data {
            *v *= c;
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.spec, other.spec);
        let mut out = self.clone();
        for (v, o) in out.data.iter_mut().zip(&other.data) {
            *v += o;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.spec, other.spec);
        let mut out = self.clone();
        for (v, o) in out.data.iter_mut().zip(&other.data) {
            *v -= o;
        }
        out
    }

    /// Discrete L² norm with the cell measure of the active side.
    pub fn norm_l2(&self) -> f64 {
        let cell = match self.side {
            Side::Position => self.spec.step_z() * self.spec.step_z(),
            Side::Frequency => self.spec.step_xi() * self.spec.step_xi(),
        };
        (self.data.iter().map(|v| v.norm_sqr()).sum::<f64>() * cell).sqrt()
    }

    pub fn sup_norm(&self) -> f64 {
        self.data.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Relative L² distance `‖self − other‖ / ‖other‖`.
    pub fn rel_l2_error(&self, other: &Self) -> f64 {
        self.sub(other).norm_l2() / other.norm_l2()
    }

    /// Row-major CSV dump: `idx1,idx2,idx3,idx4,re,im`, one row per sample.
    pub fn write_csv(&self, path: &Path) -> std::io::Result<()> {
        let file = std::fs::File::create(path)?;
        let mut out = std::io::BufWriter::new(file);
        writeln!(out, "idx1,idx2,idx3,idx4,re,im")?;
        let n_z = self.spec.n_z;
        let n_w = self.spec.n_w;
        let mut idx = 0;
        for i1 in 0..n_z {
            for i2 in 0..n_z {
                for i3 in 0..n_w {
                    for i4 in 0..n_w {
                        let v = self.data[idx];
                        writeln!(out, "{i1},{i2},{i3},{i4},{:.17e},{:.17e}", v.re, v.im)?;
                        idx += 1;
                    }
                }
            }
        }
        out.flush()
    }
}

/// Unnormalized FFT along one of the two leading (z or ξ) axes.
/// `axis` is 0 or 1; `forward` picks the kernel sign `e^{−2πi jk/n}`.
pub(crate) fn fft_z_axis(f: &mut GridFunction, axis: usize, forward: bool) {
    let n = f.spec.n_z;
    let n_w2 = f.spec.n_w * f.spec.n_w;
    let mut planner = FftPlanner::<f64>::new();
    let fft = if forward {
        planner.plan_fft_forward(n)
    } else {
        planner.plan_fft_inverse(n)
    };
    let mut line = vec![Complex64::new(0.0, 0.0); n];
    // Stride between consecutive points along the chosen axis.
    let stride = if axis == 0 { f.spec.n_z * n_w2 } else { n_w2 };
    let outer = if axis == 0 { f.spec.n_z } else { f.spec.n_z };
    for other in 0..outer {
        for inner in 0..n_w2 {
            let base = if axis == 0 {
                other * n_w2 + inner
            } else {
                other * f.spec.n_z * n_w2 + inner
            };
            for j in 0..n {
                line[j] = f.data[base + j * stride];
            }
            fft.process(&mut line);
            for j in 0..n {
                f.data[base + j * stride] = line[j];
            }
        }
    }
}

/// Multiply sample `(i1, i2, …)` by `(−1)^{i1+i2}`; conjugating the FFT by
/// this flip centers both the spatial and the frequency grids.
pub(crate) fn checkerboard_z(f: &mut GridFunction) {
    let n_z = f.spec.n_z;
    let n_w2 = f.spec.n_w * f.spec.n_w;
    for i1 in 0..n_z {
        for i2 in 0..n_z {
            if (i1 + i2) % 2 == 1 {
                let base = (i1 * n_z + i2) * n_w2;
                for v in &mut f.data_mut()[base..base + n_w2] {
                    *v = -*v;
                }
            }
        }
    }
}

/// 4th-order first derivative along a w axis (`axis` = 2 for `q₁`, 3 for
/// `q₂`), central in the interior with one-sided stencils at the edges.
pub(crate) fn diff_w_axis(f: &GridFunction, axis: usize) -> GridFunction {
    let n = f.spec.n_w;
    assert!(n >= 5, "w-axis finite differences need at least 5 points");
    let h = f.spec.step_w();
    let mut out = f.clone();
    let n_z = f.spec.n_z;
    let n_w = f.spec.n_w;
    let stride = if axis == 2 { n_w } else { 1 };
    let lines = if axis == 2 {
        n_z * n_z * n_w
    } else {
        n_z * n_z * n_w
    };
    let mut src = vec![Complex64::new(0.0, 0.0); n];
    for line in 0..lines {
        // Base index of this line: enumerate all index tuples with the
        // chosen axis at zero.
        let base = if axis == 2 {
            let i4 = line % n_w;
            let rest = line / n_w;
            let i2 = rest % n_z;
            let i1 = rest / n_z;
            ((i1 * n_z + i2) * n_w) * n_w + i4
        } else {
            let i3 = line % n_w;
            let rest = line / n_w;
            let i2 = rest % n_z;
            let i1 = rest / n_z;
            ((i1 * n_z + i2) * n_w + i3) * n_w
        };
        for j in 0..n {
            src[j] = f.data[base + j * stride];
        }
        let d = diff5(&src, h);
        for j in 0..n {
            out.data[base + j * stride] = d[j];
        }
    }
    out
}

/// 5-point 4th-order first-derivative stencils on a uniform line.
pub(crate) fn diff5(src: &[Complex64], h: f64) -> Vec<Complex64> {
    let n = src.len();
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    let s = 1.0 / (12.0 * h);
    out[0] = (-25.0 * src[0] + 48.0 * src[1] - 36.0 * src[2] + 16.0 * src[3] - 3.0 * src[4]) * s;
    out[1] = (-3.0 * src[0] - 10.0 * src[1] + 18.0 * src[2] - 6.0 * src[3] + src[4]) * s;
    for j in 2..n - 2 {
        out[j] = (src[j - 2] - 8.0 * src[j - 1] + 8.0 * src[j + 1] - src[j + 2]) * s;
    }
    out[n - 2] =
        (3.0 * src[n - 1] + 10.0 * src[n - 2] - 18.0 * src[n - 3] + 6.0 * src[n - 4] - src[n - 5])
            * s;
    out[n - 1] = (25.0 * src[n - 1] - 48.0 * src[n - 2] + 36.0 * src[n - 3] - 16.0 * src[n - 4]
        + 3.0 * src[n - 5])
        * s;
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn spec_axes() {
        let spec = GridSpec::new(8.0, 32, 0.5, 8).unwrap();
        assert_eq!(spec.step_z(), 0.5);
        assert_eq!(spec.z_axis(0), -8.0);
        assert_eq!(spec.z_axis(16), 0.0);
        let h = spec.step_z();
        assert!((spec.xi_axis(0) + std::f64::consts::PI / h).abs() < 1e-15);
        assert!((spec.xi_axis(16)).abs() < 1e-12);
    }

    #[test]
    fn spec_rejects_bad_sizes() {
        assert!(GridSpec::new(8.0, 33, 0.5, 8).is_err());
        assert!(GridSpec::new(8.0, 2, 0.5, 8).is_err());
    }

    #[test]
    fn side_guard() {
        let spec = GridSpec::new(4.0, 8, 0.5, 8).unwrap();
        let f = GridFunction::zeros(spec, Side::Position);
        assert!(f.expect_side(Side::Position).is_ok());
        assert_eq!(
            f.expect_side(Side::Frequency),
            Err(GridError::SideMismatch {
                expected: Side::Frequency,
                got: Side::Position
            })
        );
    }

    #[test]
    fn finite_difference_derivative_of_exponential() {
        // d/dq₁ e^{q₁} on the w-grid, fourth order.
        let spec = GridSpec::new(4.0, 4, 0.5, 16).unwrap();
        let f = GridFunction::from_fn(spec, Side::Position, |_, w| c(w.re.exp(), 0.0));
        let d = diff_w_axis(&f, 2);
        let err = d
            .data()
            .iter()
            .zip(f.data())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        assert!(err < 2e-7, "fd error {err}");
    }

    #[test]
    fn csv_dump_shape() {
        let spec = GridSpec::new(1.0, 4, 0.5, 8).unwrap();
        let f = GridFunction::from_fn(spec, Side::Position, |z, w| z + w);
        let dir = std::env::temp_dir().join("affstar_grid_csv_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("dump.csv");
        f.write_csv(&path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), "idx1,idx2,idx3,idx4,re,im");
        assert_eq!(text.lines().count(), 1 + spec.len());
        // Deterministic ordering: second row is (0,0,0,1).
        assert!(text.lines().nth(2).unwrap().starts_with("0,0,0,1,"));
        std::fs::remove_dir_all(&dir).ok();
    }
}
