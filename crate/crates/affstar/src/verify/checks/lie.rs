//! Algebra- and group-layer checks: exact identities sampled at scale.

use crate::lie::{phi1_direct, phi1_series, AffAlgebraElement, CoverGroupElement};
use crate::sampling;
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn coord_norm(a: &AffAlgebraElement) -> f64 {
    a.alpha.norm().max(a.beta.norm())
}

fn cover_dist(g: &CoverGroupElement, h: &CoverGroupElement) -> f64 {
    (g.z - h.z).norm().max((g.w - h.w).norm())
}

pub fn bracket_antisymmetry(seed: u64, samples: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let a = sampling::algebra_element(&mut rng);
        let b = sampling::algebra_element(&mut rng);
        let sum = a.bracket(&b).add(&b.bracket(&a));
        worst = worst.max(coord_norm(&sum));
    }
    worst
}

pub fn bracket_jacobi(seed: u64, samples: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let a = sampling::algebra_element(&mut rng);
        let b = sampling::algebra_element(&mut rng);
        let c = sampling::algebra_element(&mut rng);
        let jac = a
            .bracket(&b.bracket(&c))
            .add(&b.bracket(&c.bracket(&a)))
            .add(&c.bracket(&a.bracket(&b)));
        worst = worst.max(coord_norm(&jac));
    }
    worst
}

pub fn cover_associativity(seed: u64, samples: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let g = sampling::cover_group_element(&mut rng);
        let h = sampling::cover_group_element(&mut rng);
        let k = sampling::cover_group_element(&mut rng);
        let lhs = g.multiply(&h).multiply(&k);
        let rhs = g.multiply(&h.multiply(&k));
        worst = worst.max(cover_dist(&lhs, &rhs));
    }
    worst
}

pub fn covering_homomorphism(seed: u64, samples: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let g = sampling::cover_group_element(&mut rng);
        let h = sampling::cover_group_element(&mut rng);
        let lhs = g.multiply(&h).project();
        let rhs = g.project().multiply(&h.project());
        worst = worst.max((lhs.a - rhs.a).norm().max((lhs.b - rhs.b).norm()));
    }
    worst
}

pub fn one_parameter_subgroup(seed: u64, samples: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let a = sampling::algebra_element(&mut rng);
        let t = rng.gen_range(-1.0..1.0);
        let s = rng.gen_range(-1.0..1.0);
        let lhs = a.scale(t).exp_to_cover().multiply(&a.scale(s).exp_to_cover());
        let rhs = a.scale(t + s).exp_to_cover();
        worst = worst.max(cover_dist(&lhs, &rhs));
    }
    worst
}

pub fn phi1_branch_consistency(seed: u64, samples: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let dir = Complex64::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU));
        let mag = 10f64.powf(rng.gen_range(-8.0..0.0));
        let z = dir * mag;
        worst = worst.max((phi1_series(z) - phi1_direct(z)).norm());
    }
    worst
}

pub fn coadjoint_left_action(seed: u64, samples: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let g = sampling::matrix_group_element(&mut rng);
        let h = sampling::matrix_group_element(&mut rng);
        let f = sampling::coadjoint_point(&mut rng);
        let lhs = g.multiply(&h).coadjoint(&f);
        let rhs = g.coadjoint(&h.coadjoint(&f));
        let d = lhs
            .coords()
            .iter()
            .zip(rhs.coords())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        worst = worst.max(d);
    }
    worst
}
