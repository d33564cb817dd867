//! Exact calculus on the closed function class spanned by terms
//! `c · z^m z̄^n e^{p·w} e^{q·w̄}` with complex coefficient `c` and
//! nonnegative integer exponents.
//!
//! The class is closed under sums, products, the four Wirtinger
//! derivatives and the real coordinate derivatives built from them, so
//! every operation here is exact up to floating-point rounding of the
//! coefficients. Terms are kept in a canonically ordered map with
//! duplicate keys merged and coefficients below [`COEFF_PRUNE`] dropped.

use num_complex::Complex64;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Coefficients with modulus below this are pruned during normalization.
pub const COEFF_PRUNE: f64 = 1e-15;

/// Exponent tuple of one term: `z^z_pow z̄^zbar_pow e^{ew_pow·w} e^{ewbar_pow·w̄}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TermKey {
    pub z_pow: u32,
    pub zbar_pow: u32,
    pub ew_pow: u32,
    pub ewbar_pow: u32,
}

impl TermKey {
    pub const fn new(z_pow: u32, zbar_pow: u32, ew_pow: u32, ewbar_pow: u32) -> Self {
        Self {
            z_pow,
            zbar_pow,
            ew_pow,
            ewbar_pow,
        }
    }
}

/// A finite sum of terms `c · z^m z̄^n e^{p·w} e^{q·w̄}` in canonical form.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SymbolFunction {
    terms: BTreeMap<TermKey, Complex64>,
}

impl SymbolFunction {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Complex64) -> Self {
        Self::monomial(c, TermKey::new(0, 0, 0, 0))
    }

    pub fn one() -> Self {
        Self::constant(Complex64::new(1.0, 0.0))
    }

    /// The coordinate function `z`.
    pub fn var_z() -> Self {
        Self::monomial(Complex64::new(1.0, 0.0), TermKey::new(1, 0, 0, 0))
    }

    /// The coordinate function `z̄`.
    pub fn var_z_bar() -> Self {
        Self::monomial(Complex64::new(1.0, 0.0), TermKey::new(0, 1, 0, 0))
    }

    /// The exponential `e^w`.
    pub fn exp_w() -> Self {
        Self::monomial(Complex64::new(1.0, 0.0), TermKey::new(0, 0, 1, 0))
    }

    /// The exponential `e^{w̄}`.
    pub fn exp_w_bar() -> Self {
        Self::monomial(Complex64::new(1.0, 0.0), TermKey::new(0, 0, 0, 1))
    }

    pub fn monomial(c: Complex64, key: TermKey) -> Self {
        let mut terms = BTreeMap::new();
        if c.norm() >= COEFF_PRUNE {
            terms.insert(key, c);
        }
        Self { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (TermKey, Complex64)>) -> Self {
        let mut s = Self::zero();
        for (k, c) in it {
            s.add_term(k, c);
        }
        s.prune();
        s
    }

    fn add_term(&mut self, key: TermKey, c: Complex64) {
        let entry = self.terms.entry(key).or_insert(Complex64::new(0.0, 0.0));
        *entry += c;
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| c.norm() >= COEFF_PRUNE);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &Complex64)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: TermKey) -> Complex64 {
        self.terms
            .get(&key)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(*k, v * c);
        }
        out.prune();
        out
    }

    /// Complex conjugate: swaps `z ↔ z̄` and `e^w ↔ e^{w̄}` exponents and
    /// conjugates coefficients.
    pub fn conj(&self) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(
                TermKey::new(k.zbar_pow, k.z_pow, k.ewbar_pow, k.ew_pow),
                v.conj(),
            );
        }
        out
    }

    /// Wirtinger derivative `∂/∂z`.
    pub fn dz(&self) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            if k.z_pow > 0 {
                out.add_term(
                    TermKey::new(k.z_pow - 1, k.zbar_pow, k.ew_pow, k.ewbar_pow),
                    v * k.z_pow as f64,
                );
            }
        }
        out.prune();
        out
    }

    /// Wirtinger derivative `∂/∂z̄`.
    pub fn dz_bar(&self) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            if k.zbar_pow > 0 {
                out.add_term(
                    TermKey::new(k.z_pow, k.zbar_pow - 1, k.ew_pow, k.ewbar_pow),
                    v * k.zbar_pow as f64,
                );
            }
        }
        out.prune();
        out
    }

    /// Wirtinger derivative `∂/∂w` (multiplies each term by its `e^{pw}` rate).
    pub fn dw(&self) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            if k.ew_pow > 0 {
                out.add_term(*k, v * k.ew_pow as f64);
            }
        }
        out.prune();
        out
    }

    /// Wirtinger derivative `∂/∂w̄`.
    pub fn dw_bar(&self) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            if k.ewbar_pow > 0 {
                out.add_term(*k, v * k.ewbar_pow as f64);
            }
        }
        out.prune();
        out
    }

    /// Derivative along a real phase-space axis, `(x¹,x²,x³,x⁴) = (p₁,q₁,p₂,q₂)`
    /// with `z = p₁ + i p₂` and `w = q₁ + i q₂`.
    pub fn d_axis(&self, axis: Axis) -> Self {
        let i = Complex64::new(0.0, 1.0);
        match axis {
            Axis::P1 => &self.dz() + &self.dz_bar(),
            Axis::Q1 => &self.dw() + &self.dw_bar(),
            Axis::P2 => (&self.dz() - &self.dz_bar()).scale(i),
            Axis::Q2 => (&self.dw() - &self.dw_bar()).scale(i),
        }
    }

    /// Iterated real-axis derivative `∂_{p₁}^a ∂_{q₁}^b ∂_{p₂}^c ∂_{q₂}^d`.
    pub fn d_multi(&self, a: u32, b: u32, c: u32, d: u32) -> Self {
        let mut out = self.clone();
        for _ in 0..a {
            out = out.d_axis(Axis::P1);
        }
        for _ in 0..b {
            out = out.d_axis(Axis::Q1);
        }
        for _ in 0..c {
            out = out.d_axis(Axis::P2);
        }
        for _ in 0..d {
            out = out.d_axis(Axis::Q2);
        }
        out
    }

    pub fn eval(&self, z: Complex64, w: Complex64) -> Complex64 {
        let zb = z.conj();
        let wb = w.conj();
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in &self.terms {
            let mut t = *c;
            t *= z.powu(k.z_pow);
            t *= zb.powu(k.zbar_pow);
            t *= (w * k.ew_pow as f64).exp();
            t *= (wb * k.ewbar_pow as f64).exp();
            acc += t;
        }
        acc
    }

    /// Largest coefficient modulus.
    pub fn max_coeff(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Largest coefficient difference against `other`, without pruning, so
    /// residuals below [`COEFF_PRUNE`] are still reported.
    pub fn coeff_distance(&self, other: &Self) -> f64 {
        let mut keys: Vec<TermKey> = self.terms.keys().copied().collect();
        keys.extend(other.terms.keys().copied());
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter()
            .map(|k| (self.coefficient(k) - other.coefficient(k)).norm())
            .fold(0.0, f64::max)
    }
}

impl Add for &SymbolFunction {
    type Output = SymbolFunction;
    fn add(self, rhs: &SymbolFunction) -> SymbolFunction {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(*k, *v);
        }
        out.prune();
        out
    }
}

impl Sub for &SymbolFunction {
    type Output = SymbolFunction;
    fn sub(self, rhs: &SymbolFunction) -> SymbolFunction {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(*k, -v);
        }
        out.prune();
        out
    }
}

impl Mul for &SymbolFunction {
    type Output = SymbolFunction;
    fn mul(self, rhs: &SymbolFunction) -> SymbolFunction {
        let mut out = SymbolFunction::zero();
        for (ka, va) in &self.terms {
            for (kb, vb) in &rhs.terms {
                out.add_term(
                    TermKey::new(
                        ka.z_pow + kb.z_pow,
                        ka.zbar_pow + kb.zbar_pow,
                        ka.ew_pow + kb.ew_pow,
                        ka.ewbar_pow + kb.ewbar_pow,
                    ),
                    va * vb,
                );
            }
        }
        out.prune();
        out
    }
}

impl Neg for &SymbolFunction {
    type Output = SymbolFunction;
    fn neg(self) -> SymbolFunction {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

/// Real phase-space axes in the fixed order `(p₁, q₁, p₂, q₂)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    P1,
    Q1,
    P2,
    Q2,
}

impl fmt::Display for SymbolFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({:.6}{:+.6}i)", c.re, c.im)?;
            if k.z_pow > 0 {
                write!(f, "·z^{}", k.z_pow)?;
            }
            if k.zbar_pow > 0 {
                write!(f, "·zb^{}", k.zbar_pow)?;
            }
            if k.ew_pow > 0 {
                write!(f, "·e^{}w", k.ew_pow)?;
            }
            if k.ewbar_pow > 0 {
                write!(f, "·e^{}wb", k.ewbar_pow)?;
            }
        }
        Ok(())
    }
}
