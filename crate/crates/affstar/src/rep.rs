//! Operators of the unitary representations on the twisted strip: the
//! infinitesimal generator `ℓ̂_A`, the closed-form conjugated operator on
//! the frequency grid, the group action `T_θ`, the characters `U_λ`, and
//! the characteristic-flow exponential with its comparison report.
//!
//! Representation-space functions are stored in the logarithmic
//! coordinate `u = q₁ + i q₂` on the strip `q₂ ∈ [0, 2π)`, with the
//! twisted extension `f(u + 2πi·m) = e^{2πiθm} f(u)`. Group translations
//! act additively on `u`, and every phase of the form `Re(w·x)` is
//! evaluated as `Re(w·e^u)`.

use crate::fourier::{dw, dwbar, dxi_spectral, dxibar_spectral};
use crate::grid::{diff5, GridError, GridFunction, Side};
use crate::lie::{phi1, AffAlgebraElement, CoverGroupElement};
use num_complex::Complex64;
use rustfft::FftPlanner;
use std::f64::consts::TAU;

/// Strip grid: `q₁ ∈ [−l, l)` with `n1` points, `q₂ ∈ [0, 2π)` with `n2`
/// points (`n2` a power of two for the twisted spectral calculus).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StripSpec {
    pub l: f64,
    pub n1: usize,
    pub n2: usize,
}

impl StripSpec {
    pub fn new(l: f64, n1: usize, n2: usize) -> Self {
        assert!(l > 0.0 && n1 >= 5 && n2.is_power_of_two());
        Self { l, n1, n2 }
    }

    /// Defaults used by the verification suites.
    pub fn standard() -> Self {
        Self::new(6.0, 256, 64)
    }

    pub fn step_q1(&self) -> f64 {
        2.0 * self.l / self.n1 as f64
    }

    pub fn step_q2(&self) -> f64 {
        TAU / self.n2 as f64
    }

    pub fn q1(&self, i: usize) -> f64 {
        -self.l + i as f64 * self.step_q1()
    }

    pub fn q2(&self, j: usize) -> f64 {
        j as f64 * self.step_q2()
    }

    /// Signed spectral mode of FFT bin `m`.
    fn mode(&self, m: usize) -> i64 {
        if m < self.n2 / 2 {
            m as i64
        } else {
            m as i64 - self.n2 as i64
        }
    }
}

/// Complex samples on the strip with monodromy parameter `theta ∈ [0, 1)`.
#[derive(Clone, Debug)]
pub struct RepSpaceFunction {
    pub spec: StripSpec,
    pub theta: f64,
    data: Vec<Complex64>,
}

impl RepSpaceFunction {
    pub fn zeros(spec: StripSpec, theta: f64) -> Self {
        Self {
            spec,
            theta,
            data: vec![Complex64::new(0.0, 0.0); spec.n1 * spec.n2],
        }
    }

    pub fn from_fn(spec: StripSpec, theta: f64, f: impl Fn(f64, f64) -> Complex64) -> Self {
        let mut out = Self::zeros(spec, theta);
        for i in 0..spec.n1 {
            for j in 0..spec.n2 {
                out.data[i * spec.n2 + j] = f(spec.q1(i), spec.q2(j));
            }
        }
        out
    }

    /// Gaussian in `q₁` times a twist-compatible trigonometric polynomial:
    /// `e^{−q₁²/(2 width²)} Σ_k c_k e^{i(k+θ)q₂}`.
    pub fn gaussian_trig(
        spec: StripSpec,
        theta: f64,
        modes: &[(i64, Complex64)],
        width: f64,
    ) -> Self {
        Self::from_fn(spec, theta, |q1, q2| {
            let envelope = (-0.5 * q1 * q1 / (width * width)).exp();
            let mut osc = Complex64::new(0.0, 0.0);
            for (k, c) in modes {
                osc += c * Complex64::from_polar(1.0, (*k as f64 + theta) * q2);
            }
            envelope * osc
        })
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn value(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.spec.n2 + j]
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

    /// Pointwise map receiving `(value, u)` with `u = q₁ + i q₂`.
    pub fn map_pointwise(&self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        let mut out = self.clone();
        for i in 0..self.spec.n1 {
            for j in 0..self.spec.n2 {
                let u = Complex64::new(self.spec.q1(i), self.spec.q2(j));
                let idx = i * self.spec.n2 + j;
                out.data[idx] = f(self.data[idx], u);
            }
        }
        out
    }

    /// Discrete L² norm with cell measure `h₁ h₂`.
    pub fn norm_l2(&self) -> f64 {
        let cell = self.spec.step_q1() * self.spec.step_q2();
        (self.data.iter().map(|v| v.norm_sqr()).sum::<f64>() * cell).sqrt()
    }

    pub fn sup_norm(&self) -> f64 {
        self.data.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Derivative `∂_{q₁}` by 4th-order differences (one-sided at the ends).
    pub fn dq1(&self) -> Self {
        let n1 = self.spec.n1;
        let n2 = self.spec.n2;
        let h = self.spec.step_q1();
        let mut out = self.clone();
        let mut line = vec![Complex64::new(0.0, 0.0); n1];
        for j in 0..n2 {
            for i in 0..n1 {
                line[i] = self.data[i * n2 + j];
            }
            let d = diff5(&line, h);
            for i in 0..n1 {
                out.data[i * n2 + j] = d[i];
            }
        }
        out
    }

    /// Twisted spectral derivative `∂_{q₂}`: mode `k` of the periodic part
    /// carries the factor `i(k + θ)`.
    pub fn dq2(&self) -> Self {
        self.spectral_q2(|k, theta| Complex64::new(0.0, k as f64 + theta))
    }

    /// Twisted spectral translation `f ↦ f_ext(· + iσ)`; winding through the
    /// strip top picks up `e^{2πiθ}` per sheet automatically.
    pub fn shift_q2(&self, sigma: f64) -> Self {
        self.spectral_q2(|k, theta| Complex64::from_polar(1.0, (k as f64 + theta) * sigma))
    }

    fn spectral_q2(&self, factor: impl Fn(i64, f64) -> Complex64) -> Self {
        let n1 = self.spec.n1;
        let n2 = self.spec.n2;
        let theta = self.theta;
        let mut planner = FftPlanner::<f64>::new();
        let fwd = planner.plan_fft_forward(n2);
        let inv = planner.plan_fft_inverse(n2);
        let mut out = self.clone();
        let mut line = vec![Complex64::new(0.0, 0.0); n2];
        for i in 0..n1 {
            for j in 0..n2 {
                // Strip the twist so the line is periodic.
                let q2 = self.spec.q2(j);
                line[j] = self.data[i * n2 + j] * Complex64::from_polar(1.0, -theta * q2);
            }
            fwd.process(&mut line);
            for (m, v) in line.iter_mut().enumerate() {
                *v *= factor(self.spec.mode(m), theta) / n2 as f64;
            }
            inv.process(&mut line);
            for j in 0..n2 {
                let q2 = self.spec.q2(j);
                out.data[i * n2 + j] = line[j] * Complex64::from_polar(1.0, theta * q2);
            }
        }
        out
    }

    /// Translation in `q₁` by `s` via 4-point cubic interpolation; samples
    /// shifted past the box are taken as zero.
    pub fn shift_q1(&self, s: f64) -> Self {
        let n1 = self.spec.n1 as i64;
        let n2 = self.spec.n2;
        let h = self.spec.step_q1();
        let mut out = self.clone();
        // Target value is f(q1_i + s): offset in index units.
        let offset = s / h;
        let base = offset.floor();
        let t = offset - base;
        let base = base as i64;
        let w = if t == 0.0 {
            // Aligned shift: plain sample relabeling.
            [0.0, 1.0, 0.0, 0.0]
        } else {
            [
                -t * (t - 1.0) * (t - 2.0) / 6.0,
                (t - 1.0) * (t + 1.0) * (t - 2.0) / 2.0,
                -t * (t + 1.0) * (t - 2.0) / 2.0,
                t * (t - 1.0) * (t + 1.0) / 6.0,
            ]
        };
        for i in 0..self.spec.n1 as i64 {
            for j in 0..n2 {
                let mut acc = Complex64::new(0.0, 0.0);
                for (di, wt) in (-1i64..=2).zip(w) {
                    if wt == 0.0 {
                        continue;
                    }
                    let src = i + base + di;
                    if (0..n1).contains(&src) {
                        acc += wt * self.data[src as usize * n2 + j];
                    }
                }
                out.data[i as usize * n2 + j] = acc;
            }
        }
        out
    }

    /// The shared action machinery: `f ↦ e^{i Re(w·e^u)} f_ext(u + z)`.
    pub fn transported_by(&self, g: &CoverGroupElement) -> Self {
        let shifted = self.shift_q1(g.z.re).shift_q2(g.z.im);
        let w = g.w;
        shifted.map_pointwise(|v, u| v * Complex64::from_polar(1.0, (w * u.exp()).re))
    }
}

/// Decompose `u = u_wrapped + 2πi·m` with `Im(u_wrapped) ∈ [0, 2π)`.
pub fn wrap_to_strip(u: Complex64) -> (Complex64, i64) {
    let m = (u.im / TAU).floor();
    (Complex64::new(u.re, u.im - TAU * m), m as i64)
}

/// Character `U_λ(z, w) = e^{i·Re(z λ̄)}` of the cover group.
pub fn u_lambda(lambda: Complex64, g: &CoverGroupElement) -> Complex64 {
    Complex64::from_polar(1.0, (g.z * lambda.conj()).re)
}

/// The representation `T_θ`:
/// `[T_θ(z, w) f](u) = e^{i(Re(w·e^u) + 2πθ·⌊Im(u+z)/2π⌋)} f(u ⊕ z)`,
/// realized through the twisted extension of `f`.
pub fn t_theta_apply(theta: f64, g: &CoverGroupElement, f: &RepSpaceFunction) -> RepSpaceFunction {
    assert!(
        (theta - f.theta).abs() < 1e-14,
        "monodromy parameter must match the function's twist"
    );
    f.transported_by(g)
}

/// Literal sample-by-sample evaluation of the action formula, valid when
/// both components of the translation are grid-aligned. Test oracle for
/// the spectral path, windings and twist phases included.
pub fn t_theta_literal_aligned(
    theta: f64,
    g: &CoverGroupElement,
    f: &RepSpaceFunction,
) -> RepSpaceFunction {
    let spec = f.spec;
    let h1 = spec.step_q1();
    let h2 = spec.step_q2();
    let steps1 = (g.z.re / h1).round();
    let steps2 = (g.z.im / h2).round();
    assert!((g.z.re - steps1 * h1).abs() < 1e-12, "q1 shift must be grid-aligned");
    assert!((g.z.im - steps2 * h2).abs() < 1e-12, "q2 shift must be grid-aligned");
    let mut out = RepSpaceFunction::zeros(spec, theta);
    for i in 0..spec.n1 {
        for j in 0..spec.n2 {
            let u = Complex64::new(spec.q1(i), spec.q2(j));
            let target = u + g.z;
            let (wrapped, m) = wrap_to_strip(target);
            let si = i as i64 + steps1 as i64;
            let sj = ((wrapped.im / h2).round() as i64).rem_euclid(spec.n2 as i64) as usize;
            let sample = if (0..spec.n1 as i64).contains(&si) {
                f.value(si as usize, sj)
            } else {
                Complex64::new(0.0, 0.0)
            };
            let phase = (g.w * u.exp()).re + TAU * theta * m as f64;
            out.data[i * spec.n2 + j] = Complex64::from_polar(1.0, phase) * sample;
        }
    }
    out
}

/// Generator `ℓ̂_A = α ∂_u + ᾱ ∂_ū + (i/2)(β e^u + β̄ e^{ū})`, with
/// `∂_u = ½(∂_{q₁} − i ∂_{q₂})` taken by differences in `q₁` and the
/// twisted spectral derivative in `q₂`.
pub fn ell_hat_apply(a: &AffAlgebraElement, f: &RepSpaceFunction) -> RepSpaceFunction {
    let d1 = f.dq1();
    let d2 = f.dq2();
    let i = Complex64::new(0.0, 1.0);
    let du = d1.sub(&d2.scale(i)).scale(Complex64::new(0.5, 0.0));
    let dub = d1.add(&d2.scale(i)).scale(Complex64::new(0.5, 0.0));
    let beta = a.beta;
    let transport = du.scale(a.alpha).add(&dub.scale(a.alpha.conj()));
    transport.add(&f.map_pointwise(|v, u| v * i * (beta * u.exp()).re))
}

/// Closed form of the conjugated operator on the frequency grid:
/// `α(½∂_w − ∂_ξ̄)f + ᾱ(½∂_w̄ − ∂_ξ)f + (i/2)(β e^{w−ξ̄/2} + β̄ e^{w̄−ξ/2})f`.
pub fn ell_closed_apply(
    a: &AffAlgebraElement,
    f: &GridFunction,
) -> Result<GridFunction, GridError> {
    f.expect_side(Side::Frequency)?;
    let half = Complex64::new(0.5, 0.0);
    let alpha_part = dw(f)
        .scale(half)
        .sub(&dxibar_spectral(f)?)
        .scale(a.alpha)
        .add(&dwbar(f).scale(half).sub(&dxi_spectral(f)?).scale(a.alpha.conj()));
    let beta = a.beta;
    let mult = f.map_pointwise(|v, xi, w| {
        let i_half = Complex64::new(0.0, 0.5);
        v * i_half
            * (beta * (w - 0.5 * xi.conj()).exp() + beta.conj() * (w.conj() - 0.5 * xi).exp())
    });
    Ok(alpha_part.add(&mult))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlowMethod {
    ClosedForm,
    NumericQuadrature,
}

/// Configuration of the characteristic-flow exponential.
#[derive(Clone, Copy, Debug)]
pub struct FlowConfig {
    pub t_final: f64,
    pub n_q: usize,
    pub method: FlowMethod,
}

impl Default for FlowConfig {
    fn default() -> Self {
        Self {
            t_final: 1.0,
            n_q: 1000,
            method: FlowMethod::ClosedForm,
        }
    }
}

impl FlowConfig {
    pub fn new(t_final: f64, n_q: usize, method: FlowMethod) -> Self {
        assert!(n_q >= 1);
        Self {
            t_final,
            n_q,
            method,
        }
    }
}

/// `∫₀^t e^{sα} ds`, in closed form `t·φ₁(tα)` or by composite Simpson
/// quadrature over `n_q` panels.
fn exp_integral(alpha: Complex64, cfg: &FlowConfig) -> Complex64 {
    match cfg.method {
        FlowMethod::ClosedForm => cfg.t_final * phi1(alpha * cfg.t_final),
        FlowMethod::NumericQuadrature => {
            let h = cfg.t_final / cfg.n_q as f64;
            let mut acc = Complex64::new(0.0, 0.0);
            for p in 0..cfg.n_q {
                let a = p as f64 * h;
                let m = a + 0.5 * h;
                let b = a + h;
                acc += (h / 6.0)
                    * ((alpha * a).exp() + 4.0 * (alpha * m).exp() + (alpha * b).exp());
            }
            acc
        }
    }
}

/// Solve `∂_t F = ℓ̂_A F`, `F(0) = f`, by the method of characteristics:
/// straight-line transport `u ↦ u + tα` (re-wrapped through the twisted
/// extension) and the accumulated phase `exp(i·Re(β S e^{u}))` with
/// `S = ∫₀^t e^{sα} ds`.
pub fn exp_flow(a: &AffAlgebraElement, f: &RepSpaceFunction, cfg: &FlowConfig) -> RepSpaceFunction {
    let s = exp_integral(a.alpha, cfg);
    let g_eff = CoverGroupElement::new(a.alpha * cfg.t_final, a.beta * s);
    f.transported_by(&g_eff)
}

/// Residuals of the flow-versus-action comparison.
#[derive(Clone, Copy, Debug)]
pub struct FlowComparison {
    pub sup_error: f64,
    pub l2_error: f64,
}

/// Compare the characteristic-flow solution at `t_final` against the group
/// action of the corresponding exponential.
pub fn compare_group_action(
    a: &AffAlgebraElement,
    theta: f64,
    f: &RepSpaceFunction,
    cfg: &FlowConfig,
) -> FlowComparison {
    let flow = exp_flow(a, f, cfg);
    let g = a.scale(cfg.t_final).exp_to_cover();
    let action = t_theta_apply(theta, &g, f);
    let diff = flow.sub(&action);
    FlowComparison {
        sup_error: diff.sup_norm(),
        l2_error: diff.norm_l2(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridSpec;
    use crate::sampling;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn test_strip() -> StripSpec {
        StripSpec::new(6.0, 128, 32)
    }

    fn test_function(theta: f64) -> RepSpaceFunction {
        RepSpaceFunction::gaussian_trig(
            test_strip(),
            theta,
            &[(0, c(1.0, 0.0)), (1, c(0.4, 0.2)), (-2, c(-0.3, 0.5))],
            1.0,
        )
    }

    #[test]
    fn wrap_examples() {
        let (w, m) = wrap_to_strip(c(1.0, 1.0));
        assert_eq!((w, m), (c(1.0, 1.0), 0));

        let (w, m) = wrap_to_strip(c(0.0, 2.5 * PI));
        assert!((w - c(0.0, 0.5 * PI)).norm() < 1e-15);
        assert_eq!(m, 1);

        let (w, m) = wrap_to_strip(c(0.0, -0.5 * PI));
        assert!((w - c(0.0, 1.5 * PI)).norm() < 1e-15);
        assert_eq!(m, -1);
    }

    #[test]
    fn character_examples_and_homomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let g = CoverGroupElement::new(c(1.0, 1.0), c(7.0, 0.0));
        assert_eq!(u_lambda(c(0.0, 0.0), &g), c(1.0, 0.0));
        let v = u_lambda(c(1.0, 0.0), &g);
        assert!((v - Complex64::from_polar(1.0, 1.0)).norm() < 1e-15);

        for _ in 0..1000 {
            let lam = sampling::unit_disk(&mut rng);
            let g = sampling::cover_group_element(&mut rng);
            let h = sampling::cover_group_element(&mut rng);
            let lhs = u_lambda(lam, &g.multiply(&h));
            let rhs = u_lambda(lam, &g) * u_lambda(lam, &h);
            assert!((lhs - rhs).norm() < 1e-14);
        }
    }

    #[test]
    fn identity_acts_trivially() {
        let f = test_function(0.25);
        let out = t_theta_apply(0.25, &CoverGroupElement::identity(), &f);
        let err = out.sub(&f).sup_norm();
        assert!(err < 1e-12, "identity action error {err}");
    }

    #[test]
    fn pure_w_component_is_multiplication() {
        let f = test_function(0.6);
        let w0 = c(0.3, -0.8);
        let g = CoverGroupElement::new(c(0.0, 0.0), w0);
        let out = t_theta_apply(0.6, &g, &f);
        let want = f.map_pointwise(|v, u| v * Complex64::from_polar(1.0, (w0 * u.exp()).re));
        assert!(out.sub(&want).sup_norm() < 1e-12);
    }

    #[test]
    fn winding_example_with_quarter_twist() {
        // θ = 1/4, g = (iπ, 0): at u = i·3π/2 the result is i·f(iπ/2).
        let theta = 0.25;
        let f = test_function(theta);
        let g = CoverGroupElement::new(c(0.0, PI), c(0.0, 0.0));
        let out = t_theta_apply(theta, &g, &f);
        let spec = f.spec;
        let j_34 = 3 * spec.n2 / 4; // q₂ = 3π/2
        let j_14 = spec.n2 / 4; // q₂ = π/2
        for i in (0..spec.n1).step_by(17) {
            let got = out.value(i, j_34);
            let want = c(0.0, 1.0) * f.value(i, j_14);
            assert!((got - want).norm() < 1e-12);
        }
    }

    #[test]
    fn winding_representative_consistency() {
        // Replacing z by z + 2πi multiplies the action by e^{2πiθ} exactly.
        let theta = 0.618;
        let f = test_function(theta);
        let z = c(0.4, 1.1);
        let w = c(0.2, -0.5);
        let base = t_theta_apply(theta, &CoverGroupElement::new(z, w), &f);
        let lifted = t_theta_apply(theta, &CoverGroupElement::new(z + c(0.0, TAU), w), &f);
        let want = base.scale(Complex64::from_polar(1.0, TAU * theta));
        assert!(lifted.sub(&want).sup_norm() < 1e-14);
    }

    #[test]
    fn spectral_path_matches_literal_formula() {
        let theta = 0.37;
        let f = test_function(theta);
        let spec = f.spec;
        let z = c(5.0 * spec.step_q1(), 7.0 * spec.step_q2());
        let g = CoverGroupElement::new(z, c(0.6, 0.1));
        let fast = t_theta_apply(theta, &g, &f);
        let slow = t_theta_literal_aligned(theta, &g, &f);
        // Differences only from samples pulled across the q₁ boundary,
        // where the Gaussian envelope has already decayed.
        assert!(fast.sub(&slow).sup_norm() < 1e-12);
    }

    #[test]
    fn group_law_with_aligned_shifts() {
        let theta = 0.25;
        let f = test_function(theta);
        let spec = f.spec;
        let h1 = spec.step_q1();
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..10 {
            let g = CoverGroupElement::new(
                c(
                    rng.gen_range(-10..=10i32) as f64 * h1,
                    rng.gen_range(-2.0..2.0),
                ),
                sampling::unit_disk(&mut rng),
            );
            let h = CoverGroupElement::new(
                c(
                    rng.gen_range(-10..=10i32) as f64 * h1,
                    rng.gen_range(-2.0..2.0),
                ),
                sampling::unit_disk(&mut rng),
            );
            let lhs = t_theta_apply(theta, &g, &t_theta_apply(theta, &h, &f));
            let rhs = t_theta_apply(theta, &g.multiply(&h), &f);
            let err = lhs.sub(&rhs).sup_norm();
            assert!(err < 1e-10, "group law error {err}");
        }
    }

    #[test]
    fn generator_examples() {
        let spec = test_strip();
        let zero = AffAlgebraElement::zero();
        let f = test_function(0.25);
        assert!(ell_hat_apply(&zero, &f).sup_norm() < 1e-14);

        // α = 1, θ = 0: the generator is ∂_{q₁}; on e^{q₁}·(mode 0) it
        // reproduces the function.
        let f = RepSpaceFunction::from_fn(spec, 0.0, |q1, _| c(q1.exp(), 0.0));
        let a = AffAlgebraElement::new(c(1.0, 0.0), c(0.0, 0.0));
        let out = ell_hat_apply(&a, &f);
        let rel = out
            .data()
            .iter()
            .zip(f.data())
            .map(|(o, v)| (o - v).norm() / v.norm())
            .fold(0.0, f64::max);
        assert!(rel < 1e-6, "relative error {rel}");

        // α = 0, β = 1: pure multiplication by i e^{q₁} cos q₂.
        let f = test_function(0.25);
        let a = AffAlgebraElement::new(c(0.0, 0.0), c(1.0, 0.0));
        let out = ell_hat_apply(&a, &f);
        let want = f.map_pointwise(|v, u| v * c(0.0, 1.0) * (u.re.exp() * u.im.cos()));
        assert!(out.sub(&want).sup_norm() < 1e-12);
    }

    #[test]
    fn generator_commutator_represents_bracket() {
        // [ℓ̂_A, ℓ̂_B] f = ℓ̂_{[A,B]} f with grid derivatives; finer q₁ grid
        // keeps the nested finite-difference error inside the bound.
        let spec = StripSpec::new(6.0, 512, 32);
        let theta = 0.25;
        let f = RepSpaceFunction::gaussian_trig(
            spec,
            theta,
            &[(0, c(1.0, 0.0)), (1, c(0.3, -0.2))],
            1.0,
        );
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..5 {
            let a = sampling::algebra_element(&mut rng);
            let b = sampling::algebra_element(&mut rng);
            let lhs = ell_hat_apply(&a, &ell_hat_apply(&b, &f))
                .sub(&ell_hat_apply(&b, &ell_hat_apply(&a, &f)));
            let rhs = ell_hat_apply(&a.bracket(&b), &f);
            let err = lhs.sub(&rhs).norm_l2() / f.norm_l2();
            assert!(err < 1e-6, "bracket representation error {err}");
        }
    }

    #[test]
    fn flow_trivial_and_multiplication_cases() {
        let f = test_function(0.25);
        let cfg = FlowConfig::default();
        let out = exp_flow(&AffAlgebraElement::zero(), &f, &cfg);
        assert!(out.sub(&f).sup_norm() < 1e-13);

        // β-only: no transport, pure phase e^{i Re(β e^u)}.
        let a = AffAlgebraElement::new(c(0.0, 0.0), c(0.7, -0.3));
        let beta = a.beta;
        let out = exp_flow(&a, &f, &cfg);
        let want = f.map_pointwise(|v, u| v * Complex64::from_polar(1.0, (beta * u.exp()).re));
        assert!(out.sub(&want).sup_norm() < 1e-12);

        // Quadrature agrees with the closed form.
        let quad = FlowConfig::new(1.0, 1000, FlowMethod::NumericQuadrature);
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..5 {
            let a = sampling::algebra_element(&mut rng);
            let lhs = exp_flow(&a, &f, &cfg);
            let rhs = exp_flow(&a, &f, &quad);
            assert!(lhs.sub(&rhs).sup_norm() < 1e-12);
        }
    }

    #[test]
    fn flow_winding_factor() {
        // α = iπ, β = 0, θ = 1/4: rows with q₂ ∈ [π, 2π) pick up the factor i.
        let theta = 0.25;
        let f = test_function(theta);
        let a = AffAlgebraElement::new(c(0.0, PI), c(0.0, 0.0));
        let out = exp_flow(&a, &f, &FlowConfig::default());
        let spec = f.spec;
        for i in (0..spec.n1).step_by(13) {
            for j in (0..spec.n2).step_by(5) {
                let q2 = spec.q2(j);
                let target = q2 + PI;
                let (wrapped, m) = wrap_to_strip(c(0.0, target));
                let jj = (wrapped.im / spec.step_q2()).round() as usize % spec.n2;
                let factor = Complex64::from_polar(1.0, TAU * theta * m as f64);
                let want = factor * f.value(i, jj);
                assert!((out.value(i, j) - want).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn flow_one_parameter_property() {
        let theta = 0.618;
        let f = test_function(theta);
        let h1 = f.spec.step_q1();
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for _ in 0..5 {
            // Re α an even grid multiple so the half-time transport stays aligned.
            let a = AffAlgebraElement::new(
                c(
                    2.0 * rng.gen_range(-5..=5i32) as f64 * h1,
                    rng.gen_range(-1.0..1.0),
                ),
                sampling::unit_disk(&mut rng),
            );
            let full = exp_flow(&a, &f, &FlowConfig::default());
            let half_cfg = FlowConfig::new(0.5, 1, FlowMethod::ClosedForm);
            let half = exp_flow(&a, &exp_flow(&a, &f, &half_cfg), &half_cfg);
            let err = full.sub(&half).sup_norm();
            assert!(err < 1e-10, "one-parameter error {err}");
        }
    }

    #[test]
    fn flow_unitarity_with_aligned_transport() {
        let theta = 0.25;
        let f = test_function(theta);
        let h1 = f.spec.step_q1();
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        for _ in 0..5 {
            let a = AffAlgebraElement::new(
                c(rng.gen_range(-15..=15i32) as f64 * h1, rng.gen_range(-1.0..1.0)),
                sampling::unit_disk(&mut rng),
            );
            let out = exp_flow(&a, &f, &FlowConfig::default());
            let ratio = out.norm_l2() / f.norm_l2();
            assert!((ratio - 1.0).abs() < 1e-10, "norm ratio {ratio}");
        }
    }

    #[test]
    fn generator_is_the_derivative_of_the_action() {
        // First-order convergence of (T(exp(εA))f − f)/ε to ℓ̂_A f with
        // error ratios ≈ 2 when ε halves.
        let theta = 0.25;
        let f = test_function(theta);
        let a = AffAlgebraElement::new(c(0.31, -0.44), c(0.52, 0.27));
        let lhat = ell_hat_apply(&a, &f);
        let mut errs = Vec::new();
        for eps in [1e-2, 5e-3, 2.5e-3] {
            let g = a.scale(eps).exp_to_cover();
            let diff = t_theta_apply(theta, &g, &f)
                .sub(&f)
                .scale(c(1.0 / eps, 0.0));
            errs.push(diff.sub(&lhat).norm_l2());
        }
        for pair in errs.windows(2) {
            let ratio = pair[0] / pair[1];
            assert!(
                (ratio - 2.0).abs() < 0.2,
                "first-order ratio {ratio}, errors {errs:?}"
            );
        }
    }

    #[test]
    fn flow_matches_group_action() {
        let theta = 0.618;
        let f = test_function(theta);
        let quad = FlowConfig::new(1.0, 1000, FlowMethod::NumericQuadrature);
        let zero = compare_group_action(&AffAlgebraElement::zero(), theta, &f, &quad);
        assert!(zero.sup_error < 1e-14);

        let mut rng = ChaCha8Rng::seed_from_u64(53);
        for _ in 0..5 {
            let a = sampling::algebra_element(&mut rng);
            let r = compare_group_action(&a, theta, &f, &quad);
            assert!(r.sup_error < 1e-8, "residual {}", r.sup_error);
            assert!(r.l2_error < 1e-8);
        }
    }

    #[test]
    fn closed_operator_in_logarithmic_variable() {
        // Under u = w − ξ̄/2 the frequency-side operator is the strip
        // generator: check against the analytic image of a Gaussian of u.
        let spec = GridSpec::new(8.0, 32, 0.5, 8).unwrap();
        let s = 2.0;
        let f = GridFunction::from_fn(spec, Side::Frequency, move |xi, w| {
            let u = w - 0.5 * xi.conj();
            c((-s * u.norm_sqr()).exp(), 0.0)
        });
        let a = AffAlgebraElement::new(c(0.4, -0.7), c(0.8, 0.3));
        let got = ell_closed_apply(&a, &f).unwrap();
        let alpha = a.alpha;
        let beta = a.beta;
        let want = f.map_pointwise(move |v, xi, w| {
            let u = w - 0.5 * xi.conj();
            let du = -s * u.conj(); // ∂_u of the Gaussian over the Gaussian
            let dub = -s * u;
            let i_half = c(0.0, 0.5);
            v * (alpha * du
                + alpha.conj() * dub
                + i_half * (beta * u.exp() + beta.conj() * u.conj().exp()))
        });
        let err = got.sub(&want).norm_l2() / want.norm_l2();
        assert!(err < 1e-5, "change-of-variables error {err}");
    }
}
