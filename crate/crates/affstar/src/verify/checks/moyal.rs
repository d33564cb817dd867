//! Star-product checks: the commutator identity, the operator
//! representation property, and the structure of the contraction operators.

use crate::moyal::{
    ell_apply, p_r, p_r_enumerated, p_r_hamiltonian, p_r_multinomial, star_commutator_hamiltonians,
    star_truncated, TruncationPolicy,
};
use crate::orbit::hamiltonian_symbol;
use crate::sampling;
use crate::symbol::{SymbolFunction, TermKey};
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random_symbol(rng: &mut ChaCha8Rng) -> SymbolFunction {
    let mut f = SymbolFunction::zero();
    for _ in 0..rng.gen_range(1..4) {
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

pub fn star_commutator_identity(seed: u64, samples: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let a = sampling::algebra_element(&mut rng);
        let b = sampling::algebra_element(&mut rng);
        let lhs = star_commutator_hamiltonians(&a, &b);
        let rhs = hamiltonian_symbol(&a.bracket(&b)).scale(Complex64::new(0.0, 1.0));
        worst = worst.max(lhs.coeff_distance(&rhs));
    }
    worst
}

pub fn operator_commutator(seed: u64, samples: usize, r_max: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let policy = TruncationPolicy::new(r_max, 4.0);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let a = sampling::algebra_element(&mut rng);
        let b = sampling::algebra_element(&mut rng);
        let g = random_symbol(&mut rng);
        let lhs = &ell_apply(&a, &ell_apply(&b, &g, &policy), &policy)
            - &ell_apply(&b, &ell_apply(&a, &g, &policy), &policy);
        let rhs = ell_apply(&a.bracket(&b), &g, &policy);
        worst = worst.max(lhs.coeff_distance(&rhs));
    }
    worst
}

pub fn swap_parity(seed: u64, samples: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let f = random_symbol(&mut rng);
        let g = random_symbol(&mut rng);
        for r in 0..=3usize {
            let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
            let lhs = p_r(&f, &g, r);
            let rhs = p_r(&g, &f, r).scale(Complex64::new(sign, 0.0));
            worst = worst.max(lhs.coeff_distance(&rhs));
        }
    }
    worst
}

pub fn bilinearity(seed: u64, samples: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let f1 = random_symbol(&mut rng);
        let f2 = random_symbol(&mut rng);
        let g = random_symbol(&mut rng);
        let s = sampling::unit_disk(&mut rng);
        for r in 0..=3usize {
            let lhs = p_r(&(&f1.scale(s) + &f2), &g, r);
            let rhs = &p_r(&f1, &g, r).scale(s) + &p_r(&f2, &g, r);
            worst = worst.max(lhs.coeff_distance(&rhs));
        }
    }
    worst
}

pub fn hamiltonian_closed_form(seed: u64, samples: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let a = sampling::algebra_element(&mut rng);
        let at = hamiltonian_symbol(&a);
        let g = random_symbol(&mut rng);
        for r in 2..=5usize {
            let closed = p_r_hamiltonian(&a, &g, r).expect("r >= 2");
            let generic = p_r(&at, &g, r);
            worst = worst.max(closed.coeff_distance(&generic));
        }
    }
    worst
}

pub fn contraction_routes_agree(seed: u64, samples: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let f = random_symbol(&mut rng);
        let g = random_symbol(&mut rng);
        for r in 0..=4usize {
            let a = p_r_enumerated(&f, &g, r);
            let b = p_r_multinomial(&f, &g, r);
            worst = worst.max(a.coeff_distance(&b));
        }
    }
    worst
}

pub fn star_unit(seed: u64, samples: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let policy = TruncationPolicy::default();
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let f = random_symbol(&mut rng);
        let starred = star_truncated(&f, &SymbolFunction::one(), &policy);
        worst = worst.max(starred.coeff_distance(&f));
    }
    worst
}

pub fn tail_bound(r_max: usize, xi_max: f64) -> f64 {
    TruncationPolicy::new(r_max, xi_max).tail_bound()
}
