//! The partial Fourier transform in the `z` variable on sampled grids,
//! spectral and finite-difference derivative operators, and the
//! transformed bidifferential operators that assemble the conjugated
//! representation operator.
//!
//! Conventions: `ℱ_z(f)(ξ, w) = (1/2π) ∬ e^{−i·Re(ξ z̄)} f(z, w) dp₁ dp₂`
//! with `Re(ξ z̄) = ξ₁p₁ + ξ₂p₂`, so the transform is a plain centered 2-D
//! transform with a symmetric `1/2π` split, applied to every w-slice
//! independently.

use crate::grid::{checkerboard_z, diff_w_axis, fft_z_axis, GridError, GridFunction, Side};
use crate::lie::AffAlgebraElement;
use crate::moyal::TruncationPolicy;
use num_complex::Complex64;
use std::f64::consts::TAU;

/// Forward transform `(z, w) → (ξ, w)`.
pub fn partial_fourier(f: &GridFunction) -> Result<GridFunction, GridError> {
    f.expect_side(Side::Position)?;
    let mut out = f.clone();
    let h = f.spec.step_z();
    checkerboard_z(&mut out);
    fft_z_axis(&mut out, 0, true);
    fft_z_axis(&mut out, 1, true);
    checkerboard_z(&mut out);
    let scale = Complex64::new(h * h / TAU, 0.0);
    out = out.scale(scale);
    out.side = Side::Frequency;
    Ok(out)
}

/// Inverse transform `(ξ, w) → (z, w)`.
pub fn partial_fourier_inverse(f: &GridFunction) -> Result<GridFunction, GridError> {
    f.expect_side(Side::Frequency)?;
    let mut out = f.clone();
    let dxi = f.spec.step_xi();
    checkerboard_z(&mut out);
    fft_z_axis(&mut out, 0, false);
    fft_z_axis(&mut out, 1, false);
    checkerboard_z(&mut out);
    let scale = Complex64::new(dxi * dxi / TAU, 0.0);
    out = out.scale(scale);
    out.side = Side::Position;
    Ok(out)
}

/// Spectral `∂_z^r` on the position side: multiply by `((i/2) ξ̄)^r` in
/// frequency space.
pub fn dz_spectral(g: &GridFunction, r: u32) -> Result<GridFunction, GridError> {
    let hat = partial_fourier(g)?;
    let hat = hat.map_pointwise(|v, xi, _| v * (Complex64::new(0.0, 0.5) * xi.conj()).powu(r));
    partial_fourier_inverse(&hat)
}

/// Spectral `∂_{z̄}^r` on the position side: multiply by `((i/2) ξ)^r`.
pub fn dzbar_spectral(g: &GridFunction, r: u32) -> Result<GridFunction, GridError> {
    let hat = partial_fourier(g)?;
    let hat = hat.map_pointwise(|v, xi, _| v * (Complex64::new(0.0, 0.5) * xi).powu(r));
    partial_fourier_inverse(&hat)
}

/// Spectral `∂_ξ` on the frequency side: multiply by `(−i/2) z̄` downstairs.
pub fn dxi_spectral(f: &GridFunction) -> Result<GridFunction, GridError> {
    let g = partial_fourier_inverse(f)?;
    let g = g.map_pointwise(|v, z, _| v * Complex64::new(0.0, -0.5) * z.conj());
    partial_fourier(&g)
}

/// Spectral `∂_{ξ̄}` on the frequency side: multiply by `(−i/2) z` downstairs.
pub fn dxibar_spectral(f: &GridFunction) -> Result<GridFunction, GridError> {
    let g = partial_fourier_inverse(f)?;
    let g = g.map_pointwise(|v, z, _| v * Complex64::new(0.0, -0.5) * z);
    partial_fourier(&g)
}

/// `∂_w = ½(∂_{q₁} − i ∂_{q₂})` by 4th-order differences, on either side.
pub fn dw(f: &GridFunction) -> GridFunction {
    let d1 = diff_w_axis(f, 2);
    let d2 = diff_w_axis(f, 3);
    d1.sub(&d2.scale(Complex64::new(0.0, 1.0)))
        .scale(Complex64::new(0.5, 0.0))
}

/// `∂_{w̄} = ½(∂_{q₁} + i ∂_{q₂})` by 4th-order differences.
pub fn dwbar(f: &GridFunction) -> GridFunction {
    let d1 = diff_w_axis(f, 2);
    let d2 = diff_w_axis(f, 3);
    d1.add(&d2.scale(Complex64::new(0.0, 1.0)))
        .scale(Complex64::new(0.5, 0.0))
}

/// `P^r(Ã, ·)` on position-side grid samples, through the closed z-side
/// forms of the Λ-contraction (spectral in z, finite differences in w):
///
/// - `P⁰(Ã, g) = Ã·g`
/// - `P¹(Ã, g) = α g_w + ᾱ g_{w̄} − β e^w g_z − β̄ e^{w̄} g_{z̄}`
/// - `P^r(Ã, g) = (−1)^r 2^{r−1} [β e^w ∂_z^r g + β̄ e^{w̄} ∂_{z̄}^r g]`, r ≥ 2.
pub fn p_r_grid_hamiltonian(
    a: &AffAlgebraElement,
    g: &GridFunction,
    r: u32,
) -> Result<GridFunction, GridError> {
    g.expect_side(Side::Position)?;
    let alpha = a.alpha;
    let beta = a.beta;
    match r {
        0 => Ok(g.map_pointwise(|v, z, w| {
            v * (alpha * z + beta * w.exp()).re
        })),
        1 => {
            let gw = dw(g).scale(alpha);
            let gwb = dwbar(g).scale(alpha.conj());
            let gz = dz_spectral(g, 1)?.map_pointwise(|v, _, w| -v * beta * w.exp());
            let gzb = dzbar_spectral(g, 1)?.map_pointwise(|v, _, w| -v * beta.conj() * w.conj().exp());
            Ok(gw.add(&gwb).add(&gz).add(&gzb))
        }
        _ => {
            let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
            let scale = sign * 2f64.powi(r as i32 - 1);
            let gz = dz_spectral(g, r)?.map_pointwise(|v, _, w| v * beta * w.exp());
            let gzb = dzbar_spectral(g, r)?.map_pointwise(|v, _, w| v * beta.conj() * w.conj().exp());
            Ok(gz.add(&gzb).scale(Complex64::new(scale, 0.0)))
        }
    }
}

/// The transform of `P^r(Ã, ·)` acting directly on the frequency side:
///
/// - r = 0: `i(α ∂_{ξ̄} + ᾱ ∂_ξ)f + ½ β e^w f + ½ β̄ e^{w̄} f`
/// - r = 1: `ᾱ ∂_{w̄} f + α ∂_w f − β̄ e^{w̄} (i/2)ξ f − β e^w (i/2)ξ̄ f`
/// - r ≥ 2: `(−1)^r 2^{r−1} [β̄ e^{w̄} ((i/2)ξ)^r + β e^w ((i/2)ξ̄)^r] f`
pub fn transformed_p_r(
    a: &AffAlgebraElement,
    f: &GridFunction,
    r: u32,
) -> Result<GridFunction, GridError> {
    f.expect_side(Side::Frequency)?;
    let alpha = a.alpha;
    let beta = a.beta;
    let i = Complex64::new(0.0, 1.0);
    match r {
        0 => {
            let d = dxibar_spectral(f)?
                .scale(alpha)
                .add(&dxi_spectral(f)?.scale(alpha.conj()))
                .scale(i);
            Ok(d.add(&f.map_pointwise(|v, _, w| {
                v * 0.5 * (beta * w.exp() + beta.conj() * w.conj().exp())
            })))
        }
        1 => {
            let d = dwbar(f).scale(alpha.conj()).add(&dw(f).scale(alpha));
            Ok(d.add(&f.map_pointwise(|v, xi, w| {
                let half_i = Complex64::new(0.0, 0.5);
                -v * (beta.conj() * w.conj().exp() * half_i * xi
                    + beta * w.exp() * half_i * xi.conj())
            })))
        }
        _ => {
            let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
            let scale = sign * 2f64.powi(r as i32 - 1);
            Ok(f.map_pointwise(|v, xi, w| {
                let half_i = Complex64::new(0.0, 0.5);
                v * scale
                    * (beta.conj() * w.conj().exp() * (half_i * xi).powu(r)
                        + beta * w.exp() * (half_i * xi.conj()).powu(r))
            }))
        }
    }
}

/// The conjugated representation operator
/// `ℓ_A f = ℱ_z ∘ (iÃ ⋆ ·) ∘ ℱ_z⁻¹ (f) = Σ_{r ≤ R} (i/r!) (1/2i)^r ℱ_z(P^r(Ã, ℱ_z⁻¹ f))`,
/// with every order taken in its transformed closed form.
pub fn conjugated_ell(
    a: &AffAlgebraElement,
    f: &GridFunction,
    policy: &TruncationPolicy,
) -> Result<GridFunction, GridError> {
    f.expect_side(Side::Frequency)?;
    let i = Complex64::new(0.0, 1.0);
    let half_over_i = Complex64::new(0.0, -0.5);
    let mut acc = GridFunction::zeros(f.spec, Side::Frequency);
    let mut coeff = i;
    for r in 0..=policy.r_max {
        if r > 0 {
            coeff *= half_over_i / r as f64;
        }
        acc = acc.add(&transformed_p_r(a, f, r as u32)?.scale(coeff));
    }
    Ok(acc)
}

/// The Gaussian test family `e^{−|z−z₀|²/2} e^{−σ|w−w₀|²}` on the position
/// side: smooth, rapidly decaying, analytic transform known in closed form.
pub fn gaussian(spec: crate::grid::GridSpec, z0: Complex64, sigma: f64, w0: Complex64) -> GridFunction {
    GridFunction::from_fn(spec, Side::Position, move |z, w| {
        let dz = z - z0;
        let dw = w - w0;
        Complex64::new((-0.5 * dz.norm_sqr() - sigma * dw.norm_sqr()).exp(), 0.0)
    })
}

/// The exact transform of [`gaussian`]: `e^{−i Re(ξ z̄₀)} e^{−|ξ|²/2} e^{−σ|w−w₀|²}`.
pub fn gaussian_hat(
    spec: crate::grid::GridSpec,
    z0: Complex64,
    sigma: f64,
    w0: Complex64,
) -> GridFunction {
    GridFunction::from_fn(spec, Side::Frequency, move |xi, w| {
        let dw = w - w0;
        let phase = -(xi * z0.conj()).re;
        Complex64::from_polar(
            (-0.5 * xi.norm_sqr() - sigma * dw.norm_sqr()).exp(),
            phase,
        )
    })
}
