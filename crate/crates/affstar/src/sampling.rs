//! Seeded random sampling of algebra elements, group elements, chart points
//! and functionals, shared by the verification suites and the tests.
//!
//! Complex coordinates are drawn uniformly from the closed unit disk; chart
//! points from a compact sub-box of the strip so that `e^w` factors stay
//! bounded.

use crate::lie::{AffAlgebraElement, CoadjointPoint, CoverGroupElement, MatrixGroupElement};
use crate::orbit::ChartPoint;
use num_complex::Complex64;
use rand::Rng;
use std::f64::consts::TAU;

/// Uniform sample from the closed unit disk.
pub fn unit_disk(rng: &mut impl Rng) -> Complex64 {
    let r = rng.gen_range(0.0f64..=1.0).sqrt();
    let t = rng.gen_range(0.0..TAU);
    Complex64::from_polar(r, t)
}

pub fn algebra_element(rng: &mut impl Rng) -> AffAlgebraElement {
    AffAlgebraElement::new(unit_disk(rng), unit_disk(rng))
}

pub fn cover_group_element(rng: &mut impl Rng) -> CoverGroupElement {
    CoverGroupElement::new(unit_disk(rng), unit_disk(rng))
}

/// Matrix group element with `|a| ∈ [1/2, 2]`, keeping inverses well scaled.
pub fn matrix_group_element(rng: &mut impl Rng) -> MatrixGroupElement {
    let a = Complex64::from_polar(rng.gen_range(0.5..2.0), rng.gen_range(0.0..TAU));
    MatrixGroupElement::new(a, unit_disk(rng))
}

pub fn coadjoint_point(rng: &mut impl Rng) -> CoadjointPoint {
    CoadjointPoint::new(
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
    )
}

/// Functional on the open orbit: the `Y*`-part is kept away from zero.
pub fn open_orbit_point(rng: &mut impl Rng) -> CoadjointPoint {
    let y = Complex64::from_polar(rng.gen_range(0.1..1.0), rng.gen_range(0.0..TAU));
    CoadjointPoint::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), y.re, y.im)
}

/// Chart point on sheet `k`, with `z` in the unit box and `q₂` kept a safe
/// margin away from the strip boundary.
pub fn chart_point(rng: &mut impl Rng, k: i32) -> ChartPoint {
    let z = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    let q1 = rng.gen_range(-1.0..1.0);
    let q2 = TAU * k as f64 + rng.gen_range(0.1..TAU - 0.1);
    ChartPoint::new(z, Complex64::new(q1, q2), k).expect("sampled point is inside the strip")
}
