//! Orbit-layer checks: charts, Poisson structure, the Kirillov identity,
//! and the coadjoint orbit classes.

use crate::lie::CoadjointPoint;
use crate::orbit::{
    chart_forward, chart_inverse, hamiltonian_eval, hamiltonian_gradient_fd, kirillov_pairing,
    poisson_bracket, poisson_bracket_real, SymplecticStructure,
};
use crate::sampling;
use crate::symbol::{SymbolFunction, TermKey};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random_symbol(rng: &mut ChaCha8Rng) -> SymbolFunction {
    let mut f = SymbolFunction::zero();
    for _ in 0..3 {
        let key = TermKey::new(
            rng.gen_range(0..3),
            rng.gen_range(0..3),
            rng.gen_range(0..2),
            rng.gen_range(0..2),
        );
        f = &f + &SymbolFunction::monomial(sampling::unit_disk(rng), key);
    }
    f
}

pub fn chart_round_trip(seed: u64, samples: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let k = rng.gen_range(-2..3);
        let p = sampling::chart_point(&mut rng, k);
        let q = chart_forward(&p).expect("sampled point is valid");
        let back = chart_inverse(k, &q).expect("image avoids the cut");
        worst = worst.max((back.z - p.z).norm().max((back.w - p.w).norm()));
    }
    worst
}

pub fn symplectic_matrix() -> f64 {
    let s = SymplecticStructure::standard();
    let mut worst = 0.0f64;
    for i in 0..4 {
        for j in 0..4 {
            worst = worst.max((s.lambda[i][j] + s.lambda[j][i]).abs());
            let mut prod = 0.0;
            for k in 0..4 {
                prod += s.lambda[i][k] * s.lambda_inv[k][j];
            }
            worst = worst.max((prod - if i == j { 1.0 } else { 0.0 }).abs());
        }
    }
    worst
}

pub fn poisson_antisymmetry(seed: u64, samples: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let f = random_symbol(&mut rng);
        let g = random_symbol(&mut rng);
        let p = sampling::chart_point(&mut rng, 0);
        let sum = &poisson_bracket(&f, &g) + &poisson_bracket(&g, &f);
        worst = worst.max(sum.eval(p.z, p.w).norm());
    }
    worst
}

pub fn poisson_leibniz(seed: u64, samples: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let f = random_symbol(&mut rng);
        let g = random_symbol(&mut rng);
        let h = random_symbol(&mut rng);
        let p = sampling::chart_point(&mut rng, 0);
        let lhs = poisson_bracket(&f, &(&g * &h));
        let rhs = &(&poisson_bracket(&f, &g) * &h) + &(&g * &poisson_bracket(&f, &h));
        worst = worst.max((lhs.eval(p.z, p.w) - rhs.eval(p.z, p.w)).norm());
    }
    worst
}

pub fn poisson_jacobi(seed: u64, samples: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let f = random_symbol(&mut rng);
        let g = random_symbol(&mut rng);
        let h = random_symbol(&mut rng);
        let p = sampling::chart_point(&mut rng, 0);
        let jac = &(&poisson_bracket(&f, &poisson_bracket(&g, &h))
            + &poisson_bracket(&g, &poisson_bracket(&h, &f)))
            + &poisson_bracket(&h, &poisson_bracket(&f, &g));
        worst = worst.max(jac.eval(p.z, p.w).norm());
    }
    worst
}

pub fn poisson_real_contraction(seed: u64, samples: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let f = random_symbol(&mut rng);
        let g = random_symbol(&mut rng);
        let p = sampling::chart_point(&mut rng, 0);
        let d = poisson_bracket(&f, &g).eval(p.z, p.w)
            - poisson_bracket_real(&f, &g).eval(p.z, p.w);
        worst = worst.max(d.norm());
    }
    worst
}

pub fn hamiltonian_linearity(seed: u64, samples: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let a = sampling::algebra_element(&mut rng);
        let b = sampling::algebra_element(&mut rng);
        let p = sampling::chart_point(&mut rng, 0);
        let s = rng.gen_range(-2.0..2.0);
        let lhs = hamiltonian_eval(&a.scale(s).add(&b), &p);
        let rhs = s * hamiltonian_eval(&a, &p) + hamiltonian_eval(&b, &p);
        worst = worst.max((lhs - rhs).abs());
    }
    worst
}

pub fn trace_pairing_agreement(seed: u64, samples: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let f = sampling::coadjoint_point(&mut rng);
        let a = sampling::algebra_element(&mut rng);
        worst = worst.max((f.pair(&a) - f.pair_via_trace(&a)).abs());
    }
    worst
}

pub fn kirillov_identity(seed: u64, samples: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let a = sampling::algebra_element(&mut rng);
        let b = sampling::algebra_element(&mut rng);
        let p = sampling::chart_point(&mut rng, 0);
        let lhs = kirillov_pairing(&a, &b, &p);
        let rhs = hamiltonian_eval(&a.bracket(&b), &p);
        worst = worst.max((lhs - rhs).abs());
    }
    worst
}

/// Gradients of the Hamiltonians by central differences, contracted to
/// Hamiltonian vectors and paired through the symplectic form.
pub fn kirillov_finite_difference(seed: u64, samples: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s = SymplecticStructure::standard();
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let a = sampling::algebra_element(&mut rng);
        let b = sampling::algebra_element(&mut rng);
        let p = sampling::chart_point(&mut rng, 0);
        let xa = s.hamiltonian_vector(&hamiltonian_gradient_fd(&a, &p, 1e-5));
        let xb = s.hamiltonian_vector(&hamiltonian_gradient_fd(&b, &p, 1e-5));
        worst = worst.max((s.omega(&xa, &xb) - kirillov_pairing(&a, &b, &p)).abs());
    }
    worst
}

pub fn coadjoint_fixed_points(seed: u64, samples: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let g = sampling::matrix_group_element(&mut rng);
        let f = CoadjointPoint::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            0.0,
            0.0,
        );
        let kf = g.coadjoint(&f);
        let d = kf
            .coords()
            .iter()
            .zip(f.coords())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max);
        worst = worst.max(d);
    }
    worst
}

/// The `Y*`-part never vanishes under the action: its modulus scales by
/// exactly `1/|a|`, so the rescaled ratio must return to one.
pub fn open_orbit_invariance(seed: u64, samples: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let g = sampling::matrix_group_element(&mut rng);
        let f = sampling::open_orbit_point(&mut rng);
        let kf = g.coadjoint(&f);
        assert!(kf.y_part_norm_sq() > 0.0, "open orbit left invariant");
        let ratio = (kf.y_part_norm_sq() / f.y_part_norm_sq()).sqrt() * g.a.norm();
        worst = worst.max((ratio - 1.0).abs());
    }
    worst
}
