//! The Lie algebra of affine transformations of the complex line, the
//! matrix group, its universal cover, exponential maps and the
//! adjoint/coadjoint actions.
//!
//! The algebra is spanned over ℝ by `X₁, X₂, Y₁, Y₂` with
//! `X = X₁ + iX₂`, `Y = Y₁ + iY₂` and the nonzero brackets
//! `[X₁,Y₁] = Y₁`, `[X₁,Y₂] = Y₂`, `[X₂,Y₁] = Y₂`, `[X₂,Y₂] = −Y₁`;
//! equivalently `[X,Y] = Y` in the complex coordinates used below.

use num_complex::Complex64;

/// Elements of the algebra in complex coordinates: `A = α·X + β·Y`,
/// identified with the matrix `[[α, β], [0, 0]]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AffAlgebraElement {
    pub alpha: Complex64,
    pub beta: Complex64,
}

impl AffAlgebraElement {
    pub fn new(alpha: Complex64, beta: Complex64) -> Self {
        Self { alpha, beta }
    }

    pub fn zero() -> Self {
        Self::new(Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0))
    }

    /// Basis element `X₁` (α = 1).
    pub fn x1() -> Self {
        Self::new(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))
    }

    /// Basis element `X₂` (α = i).
    pub fn x2() -> Self {
        Self::new(Complex64::new(0.0, 1.0), Complex64::new(0.0, 0.0))
    }

    /// Basis element `Y₁` (β = 1).
    pub fn y1() -> Self {
        Self::new(Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0))
    }

    /// Basis element `Y₂` (β = i).
    pub fn y2() -> Self {
        Self::new(Complex64::new(0.0, 0.0), Complex64::new(0.0, 1.0))
    }

    /// Real coordinates `(α₁, α₂, β₁, β₂)` with respect to `X₁, X₂, Y₁, Y₂`.
    pub fn to_real(&self) -> [f64; 4] {
        [self.alpha.re, self.alpha.im, self.beta.re, self.beta.im]
    }

    pub fn from_real(r: [f64; 4]) -> Self {
        Self::new(Complex64::new(r[0], r[1]), Complex64::new(r[2], r[3]))
    }

    /// Lie bracket `[A, B] = (0, α_A β_B − α_B β_A)`.
    pub fn bracket(&self, other: &Self) -> Self {
        Self::new(
            Complex64::new(0.0, 0.0),
            self.alpha * other.beta - other.alpha * self.beta,
        )
    }

    pub fn scale(&self, t: f64) -> Self {
        Self::new(self.alpha * t, self.beta * t)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.alpha + other.alpha, self.beta + other.beta)
    }

    /// Exponential into the universal cover: `exp(A) = (α, φ₁(α)·β)`.
    pub fn exp_to_cover(&self) -> CoverGroupElement {
        CoverGroupElement {
            z: self.alpha,
            w: phi1(self.alpha) * self.beta,
        }
    }
}

/// `φ₁(z) = (e^z − 1)/z`, extended by `φ₁(0) = 1`.
///
/// Direct formula for `|z| ≥ 1e-4` (through a stable `exp(z) − 1`),
/// converged Taylor series below; the two branches agree to full
/// precision across the unit disk.
pub fn phi1(z: Complex64) -> Complex64 {
    if z.norm() >= PHI1_SERIES_CUTOFF {
        phi1_direct(z)
    } else {
        phi1_series(z)
    }
}

pub(crate) const PHI1_SERIES_CUTOFF: f64 = 1e-4;

pub(crate) fn phi1_direct(z: Complex64) -> Complex64 {
    complex_exp_m1(z) / z
}

pub(crate) fn phi1_series(z: Complex64) -> Complex64 {
    // Σ_k z^k / (k+1)!, summed to convergence (3 terms suffice below the
    // branch cutoff; 25 cover the whole unit disk).
    let mut acc = Complex64::new(0.0, 0.0);
    let mut pow = Complex64::new(1.0, 0.0);
    let mut fact = 1.0;
    for k in 0..25u32 {
        fact *= (k + 1) as f64;
        let next = acc + pow / fact;
        if next == acc {
            break;
        }
        acc = next;
        pow *= z;
    }
    acc
}

/// `e^z − 1` without cancellation for small `z`.
pub(crate) fn complex_exp_m1(z: Complex64) -> Complex64 {
    let ex_m1 = z.re.exp_m1();
    // e^x cos y − 1 = expm1(x) − e^x · 2 sin²(y/2)
    let half = (0.5 * z.im).sin();
    let re = ex_m1 - (ex_m1 + 1.0) * 2.0 * half * half;
    let im = (ex_m1 + 1.0) * z.im.sin();
    Complex64::new(re, im)
}

/// Element `(a, b)` of the matrix group `{[[a, b], [0, 1]] : a ≠ 0}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MatrixGroupElement {
    pub a: Complex64,
    pub b: Complex64,
}

impl MatrixGroupElement {
    /// Requires `a ≠ 0`.
    pub fn new(a: Complex64, b: Complex64) -> Self {
        assert!(a.norm() > 0.0, "matrix group element needs a != 0");
        Self { a, b }
    }

    pub fn identity() -> Self {
        Self::new(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))
    }

    pub fn multiply(&self, other: &Self) -> Self {
        Self {
            a: self.a * other.a,
            b: self.b + self.a * other.b,
        }
    }

    pub fn inverse(&self) -> Self {
        let ai = Complex64::new(1.0, 0.0) / self.a;
        Self {
            a: ai,
            b: -ai * self.b,
        }
    }

    /// Adjoint action on the algebra: `Ad(g)(α, β) = (α, a·β − b·α)`,
    /// obtained from `g · M · g⁻¹` on 2×2 matrices.
    pub fn adjoint(&self, m: &AffAlgebraElement) -> AffAlgebraElement {
        AffAlgebraElement::new(m.alpha, self.a * m.beta - self.b * m.alpha)
    }

    /// The 4×4 real matrix of `Ad(g⁻¹)` in the basis `X₁, X₂, Y₁, Y₂`.
    pub fn adjoint_inverse_realified(&self) -> [[f64; 4]; 4] {
        // Ad(g⁻¹)(α, β) = (α, (β + bα)/a); realify the complex multipliers.
        let p = Complex64::new(1.0, 0.0) / self.a;
        let pb = p * self.b;
        let mut r = [[0.0; 4]; 4];
        r[0][0] = 1.0;
        r[1][1] = 1.0;
        // β'-rows: β' = pb·α + p·β with mult-by-λ block [[λ₁, −λ₂], [λ₂, λ₁]].
        r[2][0] = pb.re;
        r[2][1] = -pb.im;
        r[3][0] = pb.im;
        r[3][1] = pb.re;
        r[2][2] = p.re;
        r[2][3] = -p.im;
        r[3][2] = p.im;
        r[3][3] = p.re;
        r
    }

    /// Coadjoint action `K(g)F = F ∘ Ad(g⁻¹)` through the realified matrix.
    pub fn coadjoint(&self, f: &CoadjointPoint) -> CoadjointPoint {
        let r = self.adjoint_inverse_realified();
        let fv = f.coords();
        let mut out = [0.0; 4];
        for j in 0..4 {
            for i in 0..4 {
                // f'_j = Σ_i f_i R_{ij}
                out[j] += fv[i] * r[i][j];
            }
        }
        CoadjointPoint::from_coords(out)
    }
}

/// Element `(z, w)` of the universal cover `ℂ ⋉ ℂ` with product
/// `(z, w)(z', w') = (z + z', w + e^z w')`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoverGroupElement {
    pub z: Complex64,
    pub w: Complex64,
}

impl CoverGroupElement {
    pub fn new(z: Complex64, w: Complex64) -> Self {
        Self { z, w }
    }

    pub fn identity() -> Self {
        Self::new(Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0))
    }

    pub fn multiply(&self, other: &Self) -> Self {
        Self {
            z: self.z + other.z,
            w: self.w + self.z.exp() * other.w,
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            z: -self.z,
            w: -((-self.z).exp()) * self.w,
        }
    }

    /// Covering projection onto the matrix group: `(z, w) ↦ (e^z, w)`.
    pub fn project(&self) -> MatrixGroupElement {
        MatrixGroupElement::new(self.z.exp(), self.w)
    }
}

/// A linear functional on the algebra, in coordinates with respect to the
/// dual basis `(X₁*, X₂*, Y₁*, Y₂*)`.
///
/// The orbit class is decided by `f_y1² + f_y2²`: zero means a fixed point
/// of the coadjoint action, nonzero puts the functional on the single open
/// four-dimensional orbit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoadjointPoint {
    pub f_x1: f64,
    pub f_x2: f64,
    pub f_y1: f64,
    pub f_y2: f64,
}

impl CoadjointPoint {
    pub fn new(f_x1: f64, f_x2: f64, f_y1: f64, f_y2: f64) -> Self {
        Self {
            f_x1,
            f_x2,
            f_y1,
            f_y2,
        }
    }

    pub fn coords(&self) -> [f64; 4] {
        [self.f_x1, self.f_x2, self.f_y1, self.f_y2]
    }

    pub fn from_coords(c: [f64; 4]) -> Self {
        Self::new(c[0], c[1], c[2], c[3])
    }

    /// Pairing `⟨F, A⟩ = Σᵢ fᵢ · (real coordinate i of A)`.
    pub fn pair(&self, a: &AffAlgebraElement) -> f64 {
        let r = a.to_real();
        self.f_x1 * r[0] + self.f_x2 * r[1] + self.f_y1 * r[2] + self.f_y2 * r[3]
    }

    /// The same pairing evaluated as `Re tr(F · A)` with `F` in matrix form
    /// `[[u, 0], [v, 0]]`, `u = f_x1 − i·f_x2`, `v = f_y1 − i·f_y2`.
    pub fn pair_via_trace(&self, a: &AffAlgebraElement) -> f64 {
        let (u, v) = self.matrix_form();
        (u * a.alpha + v * a.beta).re
    }

    /// Matrix entries `(u, v)` of `F = [[u, 0], [v, 0]]` under the trace pairing.
    pub fn matrix_form(&self) -> (Complex64, Complex64) {
        (
            Complex64::new(self.f_x1, -self.f_x2),
            Complex64::new(self.f_y1, -self.f_y2),
        )
    }

    /// Squared distance of the `Y*`-part from the origin; zero means the
    /// functional is a 0-dimensional orbit.
    pub fn y_part_norm_sq(&self) -> f64 {
        self.f_y1 * self.f_y1 + self.f_y2 * self.f_y2
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    // Scaled-and-squared Taylor exponential of [[alpha, beta], [0, 0]],
    // independent of the phi1 route used by exp_to_cover.
    fn matrix_exp_oracle(a: &AffAlgebraElement) -> [[Complex64; 2]; 2] {
        let mut m = [
            [a.alpha, a.beta],
            [c(0.0, 0.0), c(0.0, 0.0)],
        ];
        let norm = m.iter().flatten().map(|e| e.norm()).sum::<f64>();
        let s = (norm.log2().ceil().max(0.0)) as u32 + 1;
        let scale = (2.0f64).powi(-(s as i32));
        for row in m.iter_mut() {
            for e in row.iter_mut() {
                *e *= scale;
            }
        }
        fn mat_mul(a: &[[Complex64; 2]; 2], b: &[[Complex64; 2]; 2]) -> [[Complex64; 2]; 2] {
            let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
            for i in 0..2 {
                for j in 0..2 {
                    for k in 0..2 {
                        out[i][j] += a[i][k] * b[k][j];
                    }
                }
            }
            out
        }
        let mut result = [
            [c(1.0, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(1.0, 0.0)],
        ];
        let mut term = result;
        for k in 1..=20 {
            term = mat_mul(&term, &m);
            for i in 0..2 {
                for j in 0..2 {
                    term[i][j] /= k as f64;
                    result[i][j] += term[i][j];
                }
            }
        }
        for _ in 0..s {
            result = mat_mul(&result, &result);
        }
        result
    }

    // Adaptive Simpson for w(1) with w'(t) = e^{t·alpha}·beta, w(0) = 0.
    fn quadrature_oracle(a: &AffAlgebraElement) -> Complex64 {
        fn integrand(a: &AffAlgebraElement, t: f64) -> Complex64 {
            (a.alpha * t).exp() * a.beta
        }
        fn simpson(a: &AffAlgebraElement, lo: f64, hi: f64) -> Complex64 {
            let mid = 0.5 * (lo + hi);
            (integrand(a, lo) + 4.0 * integrand(a, mid) + integrand(a, hi)) * ((hi - lo) / 6.0)
        }
        fn adapt(
            a: &AffAlgebraElement,
            lo: f64,
            hi: f64,
            whole: Complex64,
            tol: f64,
            depth: u32,
        ) -> Complex64 {
            let mid = 0.5 * (lo + hi);
            let left = simpson(a, lo, mid);
            let right = simpson(a, mid, hi);
            let delta = left + right - whole;
            if delta.norm() < 15.0 * tol || depth > 40 {
                left + right + delta / 15.0
            } else {
                adapt(a, lo, mid, left, tol / 2.0, depth + 1)
                    + adapt(a, mid, hi, right, tol / 2.0, depth + 1)
            }
        }
        let whole = simpson(a, 0.0, 1.0);
        adapt(a, 0.0, 1.0, whole, 1e-13, 0)
    }

    #[test]
    fn bracket_on_basis() {
        let r = AffAlgebraElement::x1().bracket(&AffAlgebraElement::y1());
        assert_eq!(r.alpha, c(0.0, 0.0));
        assert_eq!(r.beta, c(1.0, 0.0));

        let a = AffAlgebraElement::new(c(0.3, -0.9), c(1.2, 0.4));
        assert_eq!(a.bracket(&a).beta.norm(), 0.0);

        // (α = i, β = 0) with (α = 0, β = 1) gives (0, i).
        let r = AffAlgebraElement::x2().bracket(&AffAlgebraElement::y1());
        assert!((r.beta - c(0.0, 1.0)).norm() < 1e-16);
    }

    #[test]
    fn bracket_matches_real_structure_constants() {
        // [X₁,Y₁]=Y₁ [X₁,Y₂]=Y₂ [X₂,Y₁]=Y₂ [X₂,Y₂]=−Y₁
        let x1 = AffAlgebraElement::x1();
        let x2 = AffAlgebraElement::x2();
        let y1 = AffAlgebraElement::y1();
        let y2 = AffAlgebraElement::y2();
        assert_eq!(x1.bracket(&y1), y1);
        assert_eq!(x1.bracket(&y2), y2);
        assert_eq!(x2.bracket(&y1), y2);
        assert_eq!(x2.bracket(&y2), y1.scale(-1.0));
        assert_eq!(x1.bracket(&x2), AffAlgebraElement::zero());
        assert_eq!(y1.bracket(&y2), AffAlgebraElement::zero());
    }

    #[test]
    fn exp_to_cover_examples() {
        let e = AffAlgebraElement::zero().exp_to_cover();
        assert_eq!(e.z, c(0.0, 0.0));
        assert_eq!(e.w, c(0.0, 0.0));

        let b = AffAlgebraElement::new(c(0.0, 0.0), c(0.7, -0.2)).exp_to_cover();
        assert_eq!(b.w, c(0.7, -0.2));

        // (α = ln 2, β = 1) -> (ln 2, 1/ln 2)
        let ln2 = std::f64::consts::LN_2;
        let g = AffAlgebraElement::new(c(ln2, 0.0), c(1.0, 0.0)).exp_to_cover();
        assert!((g.w - c(1.442_695_040_888_963_4, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn exp_to_cover_matches_quadrature_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let a = sampling::algebra_element(&mut rng);
            let g = a.exp_to_cover();
            let w = quadrature_oracle(&a);
            assert!((g.w - w).norm() < 1e-12, "quadrature mismatch: {}", (g.w - w).norm());
        }
        // The frozen example, through the oracle as well.
        let a = AffAlgebraElement::new(c(std::f64::consts::LN_2, 0.0), c(1.0, 0.0));
        assert!((quadrature_oracle(&a) - c(1.442_695_040_888_963_4, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn cover_multiplication_examples() {
        let g = CoverGroupElement::new(c(0.4, 1.3), c(-0.2, 0.8));
        assert_eq!(g.multiply(&CoverGroupElement::identity()), g);

        let h = CoverGroupElement::new(c(0.0, std::f64::consts::PI), c(0.0, 0.0));
        let hh = h.multiply(&h);
        assert!((hh.z - c(0.0, 2.0 * std::f64::consts::PI)).norm() < 1e-15);
        assert_eq!(hh.w, c(0.0, 0.0));

        // (1, 2)·(−1, −2e) = (0, 2 − 2e²)
        let e = std::f64::consts::E;
        let p = CoverGroupElement::new(c(1.0, 0.0), c(2.0, 0.0))
            .multiply(&CoverGroupElement::new(c(-1.0, 0.0), c(-2.0 * e, 0.0)));
        assert!((p.z).norm() < 1e-15);
        assert!((p.w - c(-12.778_112_197_861_3, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn cover_inverse_examples() {
        assert_eq!(
            CoverGroupElement::identity().inverse(),
            CoverGroupElement::identity()
        );
        let g = CoverGroupElement::new(c(0.3, -2.0), c(0.0, 0.0));
        assert_eq!(g.inverse().z, -g.z);
        assert_eq!(g.inverse().w, c(0.0, 0.0));

        let g = CoverGroupElement::new(c(1.0, 0.0), c(1.0, 0.0));
        let gi = g.inverse();
        assert!((gi.w - c(-(-1.0f64).exp(), 0.0)).norm() < 1e-15);
        let e = g.multiply(&gi);
        assert!(e.z.norm() < 1e-14 && e.w.norm() < 1e-14);
        let e = gi.multiply(&g);
        assert!(e.z.norm() < 1e-14 && e.w.norm() < 1e-14);
    }

    #[test]
    fn covering_projection_examples() {
        let p = CoverGroupElement::identity().project();
        assert_eq!(p.a, c(1.0, 0.0));

        let g = CoverGroupElement::new(c(0.0, 2.0 * std::f64::consts::PI), c(5.0, 0.0));
        let p = g.project();
        assert!((p.a - c(1.0, 0.0)).norm() < 1e-14);
        assert_eq!(p.b, c(5.0, 0.0));
    }

    #[test]
    fn projection_of_exponential_matches_matrix_exponential() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let a = sampling::algebra_element(&mut rng);
            let m = matrix_exp_oracle(&a);
            let p = a.exp_to_cover().project();
            assert!((m[0][0] - p.a).norm() < 1e-12);
            assert!((m[0][1] - p.b).norm() < 1e-12);
            assert!((m[1][1] - c(1.0, 0.0)).norm() < 1e-12);
        }
        // α = iπ, β = 0 projects onto a = −1, b = 0.
        let a = AffAlgebraElement::new(c(0.0, std::f64::consts::PI), c(0.0, 0.0));
        let p = a.exp_to_cover().project();
        assert!((p.a - c(-1.0, 0.0)).norm() < 1e-14);
        assert!(p.b.norm() < 1e-14);
    }

    #[test]
    fn phi1_branches_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut worst = 0.0f64;
        for _ in 0..2000 {
            let dir = sampling::unit_disk(&mut rng);
            let dir = if dir.norm() < 1e-3 { c(1.0, 0.0) } else { dir / dir.norm() };
            let mag = 10f64.powf(rand::Rng::gen_range(&mut rng, -8.0..0.0));
            let z = dir * mag;
            let d = (phi1_series(z) - phi1_direct(z)).norm();
            worst = worst.max(d);
        }
        assert!(worst < 1e-12, "phi1 branch disagreement {worst}");
    }

    #[test]
    fn coadjoint_fixed_points_and_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for _ in 0..200 {
            let g = sampling::matrix_group_element(&mut rng);
            // Functionals with vanishing Y*-part stay fixed.
            let f = CoadjointPoint::new(0.83, -1.41, 0.0, 0.0);
            let kf = g.coadjoint(&f);
            let d = kf
                .coords()
                .iter()
                .zip(f.coords())
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            assert!(d < 1e-14);

            // Identity fixes everything.
            let f = sampling::coadjoint_point(&mut rng);
            let kf = MatrixGroupElement::identity().coadjoint(&f);
            assert!(kf
                .coords()
                .iter()
                .zip(f.coords())
                .all(|(a, b)| (a - b).abs() < 1e-15));
        }
    }

    #[test]
    fn coadjoint_matches_complex_closed_form() {
        // K(g) in the trace picture sends (u, v) to (u + (b/a)·v, v/a).
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..500 {
            let g = sampling::matrix_group_element(&mut rng);
            let f = sampling::coadjoint_point(&mut rng);
            let kf = g.coadjoint(&f);
            let (u, v) = f.matrix_form();
            let (ku, kv) = kf.matrix_form();
            let b_over_a = g.b / g.a;
            assert!((ku - (u + b_over_a * v)).norm() < 1e-13);
            assert!((kv - v / g.a).norm() < 1e-13);
        }
    }

    #[test]
    fn coadjoint_is_left_action() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..500 {
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
            assert!(d < 1e-12);
        }
    }

    #[test]
    fn pairing_paths_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..500 {
            let f = sampling::coadjoint_point(&mut rng);
            let a = sampling::algebra_element(&mut rng);
            assert!((f.pair(&a) - f.pair_via_trace(&a)).abs() < 1e-13);
        }
    }

    #[test]
    fn real_complex_coordinate_round_trip() {
        let a = AffAlgebraElement::new(c(0.3, -1.7), c(2.5, 0.9));
        assert_eq!(AffAlgebraElement::from_real(a.to_real()), a);
    }
}
