//! Representation-layer checks: the strip action and its group law, the
//! characters, the characteristic flow, and the generator consistency.

use crate::grid::{GridFunction, GridSpec, Side};
use crate::lie::{AffAlgebraElement, CoverGroupElement};
use crate::rep::{
    compare_group_action, ell_closed_apply, ell_hat_apply, exp_flow, t_theta_apply,
    t_theta_literal_aligned, u_lambda, FlowConfig, FlowMethod, RepSpaceFunction, StripSpec,
};
use crate::sampling;
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn strip_function(theta: f64) -> RepSpaceFunction {
    RepSpaceFunction::gaussian_trig(
        StripSpec::standard(),
        theta,
        &[(0, c(1.0, 0.0)), (1, c(0.4, 0.2)), (-2, c(-0.3, 0.5))],
        1.0,
    )
}

/// Grid-aligned `q₁` steps keep the transport an exact sample shift, so the
/// composition law is probed at interpolation-free precision.
fn aligned_cover_element(rng: &mut ChaCha8Rng, h1: f64) -> CoverGroupElement {
    CoverGroupElement::new(
        c(rng.gen_range(-10..=10i32) as f64 * h1, rng.gen_range(-2.0..2.0)),
        sampling::unit_disk(rng),
    )
}

pub fn group_law(seed: u64, theta: f64, samples: usize) -> f64 {
    let f = strip_function(theta);
    let h1 = f.spec.step_q1();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let g = aligned_cover_element(&mut rng, h1);
        let h = aligned_cover_element(&mut rng, h1);
        let lhs = t_theta_apply(theta, &g, &t_theta_apply(theta, &h, &f));
        let rhs = t_theta_apply(theta, &g.multiply(&h), &f);
        worst = worst.max(lhs.sub(&rhs).sup_norm());
    }
    worst
}

pub fn winding_consistency(theta: f64) -> f64 {
    let f = strip_function(theta);
    let z = c(0.4, 1.1);
    let w = c(0.2, -0.5);
    let base = t_theta_apply(theta, &CoverGroupElement::new(z, w), &f);
    let mut worst = 0.0f64;
    for m in [-2i32, 1, 3] {
        let lifted = t_theta_apply(
            theta,
            &CoverGroupElement::new(z + c(0.0, TAU * m as f64), w),
            &f,
        );
        let want = base.scale(Complex64::from_polar(1.0, TAU * theta * m as f64));
        worst = worst.max(lifted.sub(&want).sup_norm());
    }
    worst
}

pub fn literal_oracle(seed: u64, theta: f64, samples: usize) -> f64 {
    let f = strip_function(theta);
    let spec = f.spec;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let g = CoverGroupElement::new(
            c(
                rng.gen_range(-8..=8i32) as f64 * spec.step_q1(),
                rng.gen_range(-12..=12i32) as f64 * spec.step_q2(),
            ),
            sampling::unit_disk(&mut rng),
        );
        let fast = t_theta_apply(theta, &g, &f);
        let slow = t_theta_literal_aligned(theta, &g, &f);
        worst = worst.max(fast.sub(&slow).sup_norm());
    }
    worst
}

pub fn character_homomorphism(seed: u64, samples: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let lam = sampling::unit_disk(&mut rng);
        let g = sampling::cover_group_element(&mut rng);
        let h = sampling::cover_group_element(&mut rng);
        let lhs = u_lambda(lam, &g.multiply(&h));
        let rhs = u_lambda(lam, &g) * u_lambda(lam, &h);
        worst = worst.max((lhs - rhs).norm());
    }
    worst
}

pub fn flow_unitarity(seed: u64, theta: f64, samples: usize) -> f64 {
    let f = strip_function(theta);
    let h1 = f.spec.step_q1();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let a = AffAlgebraElement::new(
            c(rng.gen_range(-15..=15i32) as f64 * h1, rng.gen_range(-1.0..1.0)),
            sampling::unit_disk(&mut rng),
        );
        let out = exp_flow(&a, &f, &FlowConfig::default());
        worst = worst.max((out.norm_l2() / f.norm_l2() - 1.0).abs());
    }
    worst
}

pub fn flow_one_parameter(seed: u64, theta: f64, samples: usize) -> f64 {
    let f = strip_function(theta);
    let h1 = f.spec.step_q1();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
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
        worst = worst.max(full.sub(&half).sup_norm());
    }
    worst
}

pub fn flow_modes_agree(seed: u64, theta: f64, samples: usize, n_q: usize) -> f64 {
    let f = strip_function(theta);
    let closed = FlowConfig::default();
    let quad = FlowConfig::new(1.0, n_q, FlowMethod::NumericQuadrature);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let a = sampling::algebra_element(&mut rng);
        let lhs = exp_flow(&a, &f, &closed);
        let rhs = exp_flow(&a, &f, &quad);
        worst = worst.max(lhs.sub(&rhs).sup_norm());
    }
    worst
}

/// Quadrature-converged flow against the group action of the exponential,
/// across random algebra elements and the listed monodromy values.
pub fn flow_vs_action(seed: u64, n_elements: usize, thetas: &[f64], n_q: usize) -> f64 {
    let cfg = FlowConfig::new(1.0, n_q, FlowMethod::NumericQuadrature);
    let mut worst = 0.0f64;
    for &theta in thetas {
        let f = strip_function(theta);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..n_elements {
            let a = sampling::algebra_element(&mut rng);
            let r = compare_group_action(&a, theta, &f, &cfg);
            worst = worst.max(r.sup_error);
        }
    }
    worst
}

/// Deviation of the first-order convergence ratios from 2 across the
/// halving sequence ε ∈ {1e-2, 5e-3, 2.5e-3}.
pub fn generator_first_order(theta: f64) -> f64 {
    let f = strip_function(theta);
    let a = AffAlgebraElement::new(c(0.31, -0.44), c(0.52, 0.27));
    let lhat = ell_hat_apply(&a, &f);
    let errs: Vec<f64> = [1e-2, 5e-3, 2.5e-3]
        .iter()
        .map(|&eps| {
            let g = a.scale(eps).exp_to_cover();
            t_theta_apply(theta, &g, &f)
                .sub(&f)
                .scale(c(1.0 / eps, 0.0))
                .sub(&lhat)
                .norm_l2()
        })
        .collect();
    errs.windows(2)
        .map(|pair| (pair[0] / pair[1] - 2.0).abs())
        .fold(0.0, f64::max)
}

pub fn generator_commutator(seed: u64, theta: f64, samples: usize) -> f64 {
    let spec = StripSpec::new(6.0, 512, 32);
    let f = RepSpaceFunction::gaussian_trig(
        spec,
        theta,
        &[(0, c(1.0, 0.0)), (1, c(0.3, -0.2))],
        1.0,
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let a = sampling::algebra_element(&mut rng);
        let b = sampling::algebra_element(&mut rng);
        let lhs = ell_hat_apply(&a, &ell_hat_apply(&b, &f))
            .sub(&ell_hat_apply(&b, &ell_hat_apply(&a, &f)));
        let rhs = ell_hat_apply(&a.bracket(&b), &f);
        worst = worst.max(lhs.sub(&rhs).norm_l2() / f.norm_l2());
    }
    worst
}

/// Frequency-side operator against the analytic generator image of a
/// Gaussian of the logarithmic variable `u = w − ξ̄/2`.
pub fn variable_change(seed: u64, n_z: usize, n_w: usize) -> f64 {
    let spec = GridSpec::new(8.0, n_z, 0.5, n_w).expect("valid spec");
    let s = 2.0;
    let f = GridFunction::from_fn(spec, Side::Frequency, move |xi, w| {
        let u = w - 0.5 * xi.conj();
        c((-s * u.norm_sqr()).exp(), 0.0)
    });
    let a = sampling::algebra_element(&mut ChaCha8Rng::seed_from_u64(seed));
    let got = ell_closed_apply(&a, &f).expect("frequency side");
    let alpha = a.alpha;
    let beta = a.beta;
    let want = f.map_pointwise(move |v, xi, w| {
        let u = w - 0.5 * xi.conj();
        let i_half = c(0.0, 0.5);
        v * (alpha * (-s * u.conj())
            + alpha.conj() * (-s * u)
            + i_half * (beta * u.exp() + beta.conj() * u.conj().exp()))
    });
    got.sub(&want).norm_l2() / want.norm_l2()
}
