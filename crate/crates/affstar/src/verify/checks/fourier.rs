//! Transform-layer checks: the discrete transform pair against analytic
//! Gaussian oracles, the derivative/multiplication rules, and the
//! transformed contraction operators against their closed forms.

use crate::fourier::{
    conjugated_ell, dw, dxibar_spectral, dz_spectral, dzbar_spectral, gaussian, gaussian_hat,
    p_r_grid_hamiltonian, partial_fourier, partial_fourier_inverse, transformed_p_r,
};
use crate::grid::{GridFunction, GridSpec, Side};
use crate::lie::AffAlgebraElement;
use crate::moyal::TruncationPolicy;
use crate::rep::ell_closed_apply;
use crate::sampling;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// 2-D identity checks live on a thin w-box: the transform only touches
/// the z axes.
fn plane_spec(n_z: usize) -> GridSpec {
    GridSpec::new(8.0, n_z, 0.125, 8).expect("valid spec")
}

/// 4-D pipeline grid with the w-box kept small so `e^w` stays tame.
fn pipeline_spec(n_z: usize, n_w: usize) -> GridSpec {
    GridSpec::new(8.0, n_z, 0.5, n_w).expect("valid spec")
}

pub fn gaussian_fixed_point(n_z: usize) -> f64 {
    let spec = plane_spec(n_z);
    let g = gaussian(spec, c(0.0, 0.0), 1.0, c(0.0, 0.0));
    let hat = partial_fourier(&g).expect("position side");
    hat.rel_l2_error(&gaussian_hat(spec, c(0.0, 0.0), 1.0, c(0.0, 0.0)))
}

pub fn round_trip(n_z: usize) -> f64 {
    let spec = plane_spec(n_z);
    let g = gaussian(spec, c(0.3, 0.2), 1.0, c(0.0, 0.05));
    let hat = partial_fourier(&g).expect("position side");
    let back = partial_fourier_inverse(&hat).expect("frequency side");
    let e1 = back.rel_l2_error(&g);
    let fwd = partial_fourier(&back).expect("position side");
    e1.max(fwd.rel_l2_error(&hat))
}

pub fn parseval(n_z: usize) -> f64 {
    let spec = plane_spec(n_z);
    let g = gaussian(spec, c(-0.4, 0.7), 1.0, c(0.0, 0.0));
    let hat = partial_fourier(&g).expect("position side");
    (hat.norm_l2() - g.norm_l2()).abs() / g.norm_l2()
}

/// `∂_z` and `∂_z̄` through the transform against the analytic Gaussian
/// derivatives.
pub fn derivative_rule_z(n_z: usize) -> f64 {
    let spec = plane_spec(n_z);
    let z0 = c(0.2, 0.1);
    let g = gaussian(spec, z0, 1.0, c(0.0, 0.0));
    let dz = dz_spectral(&g, 1).expect("position side");
    let want = g.map_pointwise(|v, z, _| v * (-(z.conj() - z0.conj()) * 0.5));
    let e1 = dz.sub(&want).norm_l2() / want.norm_l2();
    let dzb = dzbar_spectral(&g, 1).expect("position side");
    let want = g.map_pointwise(|v, z, _| v * (-(z - z0) * 0.5));
    e1.max(dzb.sub(&want).norm_l2() / want.norm_l2())
}

/// Transform of `z·g` against both the analytic image and the spectral
/// `2i ∂_{ξ̄}` route.
pub fn multiplication_rule(n_z: usize) -> f64 {
    let spec = plane_spec(n_z);
    let g = gaussian(spec, c(0.0, 0.0), 1.0, c(0.0, 0.0));
    let lhs = partial_fourier(&g.map_pointwise(|v, z, _| v * z)).expect("position side");
    let analytic = GridFunction::from_fn(spec, Side::Frequency, |xi, _| {
        -c(0.0, 1.0) * xi * c((-0.5 * xi.norm_sqr()).exp(), 0.0)
    });
    let e1 = lhs.rel_l2_error(&analytic);
    let rhs = dxibar_spectral(&partial_fourier(&g).expect("position side"))
        .expect("frequency side")
        .scale(c(0.0, 2.0));
    e1.max(lhs.rel_l2_error(&rhs))
}

/// `∂_w` commutes with the inverse transform, against the analytic
/// `w`-derivative of the Gaussian factor.
pub fn dw_commutes(n_z: usize) -> f64 {
    let spec = plane_spec(n_z);
    let sigma = 0.5;
    let w0 = c(0.02, -0.03);
    let hat = gaussian_hat(spec, c(0.0, 0.0), sigma, w0);
    let dw_analytic = hat.map_pointwise(|v, _, w| v * (-(sigma) * (w.conj() - w0.conj())));
    let lhs = dw(&partial_fourier_inverse(&hat).expect("frequency side"));
    let rhs = partial_fourier_inverse(&dw_analytic).expect("frequency side");
    lhs.sub(&rhs).norm_l2() / rhs.norm_l2()
}

/// Analytic image of `ℱ_z ∘ P^r(Ã, ·) ∘ ℱ_z⁻¹` on the Gaussian family.
fn analytic_transformed_p_r(
    a: &AffAlgebraElement,
    f: &GridFunction,
    sigma: f64,
    r: u32,
) -> GridFunction {
    let alpha = a.alpha;
    let beta = a.beta;
    f.map_pointwise(move |v, xi, w| {
        let factor = match r {
            // i(α ∂_ξ̄ + ᾱ ∂_ξ) pulls down −(i/2)(αξ + ᾱξ̄) = −i·Re(αξ).
            0 => c(0.0, -(alpha * xi).re) + c((beta * w.exp()).re, 0.0),
            // ∂_w, ∂_w̄ pull down −σw̄, −σw.
            1 => {
                -sigma * (alpha * w.conj() + alpha.conj() * w)
                    - c(0.0, 0.5) * (beta.conj() * w.conj().exp() * xi + beta * w.exp() * xi.conj())
            }
            _ => {
                let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
                let half_i = c(0.0, 0.5);
                c(sign * 2f64.powi(r as i32 - 1), 0.0)
                    * (beta.conj() * w.conj().exp() * (half_i * xi).powu(r)
                        + beta * w.exp() * (half_i * xi.conj()).powu(r))
            }
        };
        v * factor
    })
}

/// Full pipeline `ℱ_z(P^r(Ã, ℱ_z⁻¹ f))` against the analytic closed form.
pub fn pipeline_vs_closed(seed: u64, n_z: usize, n_w: usize, r: u32) -> f64 {
    let spec = pipeline_spec(n_z, n_w);
    let sigma = 0.5;
    let f = gaussian_hat(spec, c(0.0, 0.0), sigma, c(0.0, 0.0));
    let a = sampling::algebra_element(&mut ChaCha8Rng::seed_from_u64(seed));
    let g = partial_fourier_inverse(&f).expect("frequency side");
    let pr = p_r_grid_hamiltonian(&a, &g, r).expect("position side");
    let got = partial_fourier(&pr).expect("position side");
    let want = analytic_transformed_p_r(&a, &f, sigma, r);
    let direct = transformed_p_r(&a, &f, r).expect("frequency side");
    // Both the pipeline and the direct frequency-side operator must match
    // the analytic image.
    got.rel_l2_error(&want).max(direct.rel_l2_error(&want))
}

pub fn conjugated_vs_closed(seed: u64, n_z: usize, n_w: usize, r_max: usize) -> f64 {
    let spec = pipeline_spec(n_z, n_w);
    let f = gaussian_hat(spec, c(0.0, 0.0), 0.5, c(0.0, 0.0));
    let a = sampling::algebra_element(&mut ChaCha8Rng::seed_from_u64(seed));
    let policy = TruncationPolicy::new(r_max, 4.0);
    let got = conjugated_ell(&a, &f, &policy).expect("frequency side");
    let want = ell_closed_apply(&a, &f).expect("frequency side");
    got.rel_l2_error(&want)
}

/// Consecutive truncation-error ratios over the cutoff sweep {2, 5, 10, 20};
/// strictly below one means the error still decreases toward the tail floor.
pub fn truncation_monotone(seed: u64, n_z: usize, n_w: usize) -> f64 {
    let errs: Vec<f64> = [2usize, 5, 10, 20]
        .iter()
        .map(|&r| conjugated_vs_closed(seed, n_z, n_w, r))
        .collect();
    errs.windows(2)
        .map(|pair| pair[1] / pair[0])
        .fold(0.0, f64::max)
}
