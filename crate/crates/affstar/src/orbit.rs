//! The open coadjoint orbit `ℂ × ℂ*`, its sheet charts, the symplectic
//! structure in chart coordinates, Hamiltonian symbols and vector fields,
//! and the Poisson bracket on the symbol class.
//!
//! Chart `k` maps the strip `H_k = {2kπ < Im w < 2kπ + 2π}` onto the plane
//! cut along the positive real axis via `(z, w) ↦ (z, e^w)`.

use crate::lie::{AffAlgebraElement, CoadjointPoint};
use crate::symbol::{Axis, SymbolFunction, TermKey};
use num_complex::Complex64;
use std::f64::consts::TAU;
use thiserror::Error;

/// Points within this distance of the strip boundary (or of the cut) are
/// rejected as invalid.
pub const BOUNDARY_MARGIN: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum OrbitError {
    #[error("w = {w} lies outside the open strip of sheet {k}")]
    StripViolation { w: Complex64, k: i32 },
    #[error("x = {x} lies on the branch cut (positive real axis) or at the origin")]
    BranchCut { x: Complex64 },
}

/// Chart coordinates `(z, w)` on sheet `k`, with `2kπ < Im w < 2kπ + 2π`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChartPoint {
    pub z: Complex64,
    pub w: Complex64,
    pub k: i32,
}

impl ChartPoint {
    pub fn new(z: Complex64, w: Complex64, k: i32) -> Result<Self, OrbitError> {
        let p = Self { z, w, k };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), OrbitError> {
        let lo = TAU * self.k as f64;
        if self.w.im <= lo + BOUNDARY_MARGIN || self.w.im >= lo + TAU - BOUNDARY_MARGIN {
            return Err(OrbitError::StripViolation { w: self.w, k: self.k });
        }
        Ok(())
    }
}

/// A point `(z, x)` of the orbit `ℂ × ℂ*`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrbitPoint {
    pub z: Complex64,
    pub x: Complex64,
}

/// Chart map `(z, w) ↦ (z, e^w)`.
pub fn chart_forward(p: &ChartPoint) -> Result<OrbitPoint, OrbitError> {
    p.validate()?;
    Ok(OrbitPoint {
        z: p.z,
        x: p.w.exp(),
    })
}

/// Sheet-`k` inverse of the chart: `w = ln|x| + i·arg(x)` with
/// `arg ∈ (2kπ, 2kπ + 2π)`. Fails on the cut `L` (positive real axis) and
/// at the origin.
pub fn chart_inverse(k: i32, q: &OrbitPoint) -> Result<ChartPoint, OrbitError> {
    let r = q.x.norm();
    if r == 0.0 {
        return Err(OrbitError::BranchCut { x: q.x });
    }
    // atan2 range (−π, π]; move the branch so arg ∈ [0, 2π).
    let mut arg = q.x.arg();
    if arg < 0.0 {
        arg += TAU;
    }
    if arg <= BOUNDARY_MARGIN || arg >= TAU - BOUNDARY_MARGIN {
        return Err(OrbitError::BranchCut { x: q.x });
    }
    ChartPoint::new(q.z, Complex64::new(r.ln(), arg + TAU * k as f64), k)
}

/// Every chart point determines a functional `F = z X* + e^w Y*` on the open
/// orbit; real dual coordinates follow the trace-pairing convention.
pub fn chart_to_coadjoint(p: &ChartPoint) -> CoadjointPoint {
    let x = p.w.exp();
    CoadjointPoint::new(p.z.re, -p.z.im, x.re, -x.im)
}

/// Hamiltonian symbol `Ã = ½[αz + βe^w + ᾱz̄ + β̄e^{w̄}]` of an algebra element.
pub fn hamiltonian_symbol(a: &AffAlgebraElement) -> SymbolFunction {
    let half = Complex64::new(0.5, 0.0);
    SymbolFunction::from_terms([
        (TermKey::new(1, 0, 0, 0), half * a.alpha),
        (TermKey::new(0, 0, 1, 0), half * a.beta),
        (TermKey::new(0, 1, 0, 0), half * a.alpha.conj()),
        (TermKey::new(0, 0, 0, 1), half * a.beta.conj()),
    ])
}

/// Value of the Hamiltonian function of `A` at a chart point; always real.
pub fn hamiltonian_eval(a: &AffAlgebraElement, p: &ChartPoint) -> f64 {
    (a.alpha * p.z + a.beta * p.w.exp()).re
}

/// Coefficients of the Hamiltonian vector field
/// `ξ_A = α ∂_w − β e^w ∂_z − β̄ e^{w̄} ∂_z̄ + ᾱ ∂_w̄` as symbols.
#[derive(Clone, Debug)]
pub struct HamiltonianField {
    pub d_w: SymbolFunction,
    pub d_z: SymbolFunction,
    pub d_z_bar: SymbolFunction,
    pub d_w_bar: SymbolFunction,
}

pub fn hamiltonian_field(a: &AffAlgebraElement) -> HamiltonianField {
    HamiltonianField {
        d_w: SymbolFunction::constant(a.alpha),
        d_z: SymbolFunction::exp_w().scale(-a.beta),
        d_z_bar: SymbolFunction::exp_w_bar().scale(-a.beta.conj()),
        d_w_bar: SymbolFunction::constant(a.alpha.conj()),
    }
}

impl HamiltonianField {
    /// Real components `(V_{p₁}, V_{q₁}, V_{p₂}, V_{q₂})` at a chart point.
    /// A conjugate pair `λ∂_w + λ̄∂_w̄` is the real field `Re(λ)∂_{q₁} + Im(λ)∂_{q₂}`.
    pub fn real_components(&self, p: &ChartPoint) -> [f64; 4] {
        let dz = self.d_z.eval(p.z, p.w);
        let dw = self.d_w.eval(p.z, p.w);
        [dz.re, dw.re, dz.im, dw.im]
    }

    /// Apply the field to a symbol: `ξ_A f`.
    pub fn apply(&self, f: &SymbolFunction) -> SymbolFunction {
        &(&(&self.d_w * &f.dw()) + &(&self.d_z * &f.dz()))
            + &(&(&self.d_z_bar * &f.dz_bar()) + &(&self.d_w_bar * &f.dw_bar()))
    }
}

/// The constant symplectic data in real coordinates `(p₁, q₁, p₂, q₂)`:
/// the Poisson tensor `Λ` (with `Λ¹² = +1`, `Λ³⁴ = −1`, matching the
/// expanded bracket formula) and its inverse `Λ⁻¹ = −Λ`. In these
/// coordinates the matrix of the symplectic form coincides with `Λ`.
#[derive(Clone, Copy, Debug)]
pub struct SymplecticStructure {
    pub lambda: [[f64; 4]; 4],
    pub lambda_inv: [[f64; 4]; 4],
}

impl SymplecticStructure {
    pub fn standard() -> Self {
        let lambda = [
            [0.0, 1.0, 0.0, 0.0],
            [-1.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, -1.0],
            [0.0, 0.0, 1.0, 0.0],
        ];
        let mut lambda_inv = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                lambda_inv[i][j] = -lambda[i][j];
            }
        }
        Self { lambda, lambda_inv }
    }

    /// `{f, g} = Λ^{ij} (∂_i f)(∂_j g)` from gradient vectors.
    pub fn poisson_contract(&self, grad_f: &[f64; 4], grad_g: &[f64; 4]) -> f64 {
        let mut acc = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                acc += self.lambda[i][j] * grad_f[i] * grad_g[j];
            }
        }
        acc
    }

    /// Symplectic pairing `⟨ω, v ⊗ w⟩` of two tangent vectors.
    pub fn omega(&self, v: &[f64; 4], w: &[f64; 4]) -> f64 {
        let mut acc = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                acc += self.lambda[i][j] * v[i] * w[j];
            }
        }
        acc
    }

    /// Hamiltonian vector of a gradient: `ξ^j = Λ^{ij} ∂_i f`.
    pub fn hamiltonian_vector(&self, grad: &[f64; 4]) -> [f64; 4] {
        let mut out = [0.0; 4];
        for j in 0..4 {
            for i in 0..4 {
                out[j] += self.lambda[i][j] * grad[i];
            }
        }
        out
    }
}

/// Poisson bracket on the symbol class, in the complex-coordinate expansion
/// `{f, g} = 2[f_z g_w − f_w g_z + f_z̄ g_w̄ − f_w̄ g_z̄]`.
pub fn poisson_bracket(f: &SymbolFunction, g: &SymbolFunction) -> SymbolFunction {
    let two = Complex64::new(2.0, 0.0);
    (&(&(&f.dz() * &g.dw()) - &(&f.dw() * &g.dz()))
        + &(&(&f.dz_bar() * &g.dw_bar()) - &(&f.dw_bar() * &g.dz_bar())))
        .scale(two)
}

/// The same bracket computed as the `Λ`-contraction in real coordinates.
pub fn poisson_bracket_real(f: &SymbolFunction, g: &SymbolFunction) -> SymbolFunction {
    let s = SymplecticStructure::standard();
    let axes = [Axis::P1, Axis::Q1, Axis::P2, Axis::Q2];
    let mut acc = SymbolFunction::zero();
    for (i, ai) in axes.iter().enumerate() {
        for (j, aj) in axes.iter().enumerate() {
            if s.lambda[i][j] != 0.0 {
                acc = &acc
                    + &(&f.d_axis(*ai) * &g.d_axis(*aj))
                        .scale(Complex64::new(s.lambda[i][j], 0.0));
            }
        }
    }
    acc
}

/// Kirillov pairing `⟨ω, ξ_A ⊗ ξ_B⟩ = ½[(α_A β_B − α_B β_A) e^w + conj.]`,
/// which must equal the Hamiltonian of `[A, B]` at the same point.
pub fn kirillov_pairing(a: &AffAlgebraElement, b: &AffAlgebraElement, p: &ChartPoint) -> f64 {
    ((a.alpha * b.beta - b.alpha * a.beta) * p.w.exp()).re
}

/// Gradient of the Hamiltonian of `A` at `p` by central differences in
/// `(p₁, q₁, p₂, q₂)`.
pub fn hamiltonian_gradient_fd(a: &AffAlgebraElement, p: &ChartPoint, step: f64) -> [f64; 4] {
    let eval = |dz: Complex64, dw: Complex64| {
        hamiltonian_eval(
            a,
            &ChartPoint {
                z: p.z + dz,
                w: p.w + dw,
                k: p.k,
            },
        )
    };
    let re = Complex64::new(step, 0.0);
    let im = Complex64::new(0.0, step);
    let zero = Complex64::new(0.0, 0.0);
    [
        (eval(re, zero) - eval(-re, zero)) / (2.0 * step),
        (eval(zero, re) - eval(zero, -re)) / (2.0 * step),
        (eval(im, zero) - eval(-im, zero)) / (2.0 * step),
        (eval(zero, im) - eval(zero, -im)) / (2.0 * step),
    ]
}
