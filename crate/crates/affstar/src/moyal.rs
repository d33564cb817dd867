//! The Moyal star product on the chart: bidifferential operators `P^r`
//! acting exactly on the symbol class, truncated star products, star
//! commutators, and the left multiplication operator `ℓ_A = i Ã ⋆ ·`.
//!
//! `P^r(f, g)` is the r-fold contraction
//! `Λ^{i₁j₁} ⋯ Λ^{i_r j_r} (∂_{i₁…i_r} f)(∂_{j₁…j_r} g)` against the
//! constant Poisson tensor in `(p₁, q₁, p₂, q₂)`, and the star product is
//! `f ⋆ g = Σ_r (1/r!) (1/2i)^r P^r(f, g)`.

use crate::lie::AffAlgebraElement;
use crate::orbit::hamiltonian_symbol;
use crate::symbol::{Axis, SymbolFunction};
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum MoyalError {
    #[error("closed Hamiltonian form of P^r needs r >= 2, got r = {r}")]
    OrderTooLow { r: usize },
}

/// Series cutoff for the truncated star product, with the grid box
/// `ξ_max` used for the tail estimate.
#[derive(Clone, Copy, Debug)]
pub struct TruncationPolicy {
    pub r_max: usize,
    pub xi_max: f64,
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        Self {
            r_max: 20,
            xi_max: 4.0,
        }
    }
}

impl TruncationPolicy {
    pub fn new(r_max: usize, xi_max: f64) -> Self {
        Self { r_max, xi_max }
    }

    /// `Σ_{r > r_max} (ξ_max/2)^r / r!`, the sup bound on the dropped
    /// multiplication-part tail over `|ξ| ≤ ξ_max`.
    pub fn tail_bound(&self) -> f64 {
        let x = 0.5 * self.xi_max;
        let mut term = 1.0;
        for r in 1..=self.r_max {
            term *= x / r as f64;
        }
        // term = x^R / R!; sum the remainder until it stops contributing.
        let mut acc = 0.0;
        let mut r = self.r_max + 1;
        loop {
            term *= x / r as f64;
            let next = acc + term;
            if next == acc || r > self.r_max + 200 {
                return next;
            }
            acc = next;
            r += 1;
        }
    }
}

// Contraction pairs (axis on f, axis on g, sign) of the Poisson tensor:
// the four nonzero entries of Λ.
const PAIRS: [(Axis, Axis, f64); 4] = [
    (Axis::P1, Axis::Q1, 1.0),
    (Axis::Q1, Axis::P1, -1.0),
    (Axis::P2, Axis::Q2, -1.0),
    (Axis::Q2, Axis::P2, 1.0),
];

/// `P^r(f, g)` on the symbol class. `P⁰` is the pointwise product.
///
/// Small orders run the literal 4^r index walk; higher orders use the
/// multinomial regrouping of the same contraction (derivatives commute,
/// so the 4^r sequences collapse into ≤ (r+1)³ distinct derivative pairs).
pub fn p_r(f: &SymbolFunction, g: &SymbolFunction, r: usize) -> SymbolFunction {
    if r <= 4 {
        p_r_enumerated(f, g, r)
    } else {
        p_r_multinomial(f, g, r)
    }
}

pub(crate) fn p_r_enumerated(f: &SymbolFunction, g: &SymbolFunction, r: usize) -> SymbolFunction {
    if r == 0 {
        return f * g;
    }
    let mut acc = SymbolFunction::zero();
    let mut choice = vec![0usize; r];
    loop {
        let mut sign = 1.0;
        let mut df = f.clone();
        let mut dg = g.clone();
        for &c in &choice {
            let (af, ag, s) = PAIRS[c];
            sign *= s;
            df = df.d_axis(af);
            dg = dg.d_axis(ag);
        }
        acc = &acc + &(&df * &dg).scale(Complex64::new(sign, 0.0));

        // Advance the base-4 counter over contraction sequences.
        let mut pos = 0;
        loop {
            if pos == r {
                return acc;
            }
            choice[pos] += 1;
            if choice[pos] < 4 {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

pub(crate) fn p_r_multinomial(f: &SymbolFunction, g: &SymbolFunction, r: usize) -> SymbolFunction {
    let mut tf = DerivTable::new(f);
    let mut tg = DerivTable::new(g);
    p_r_with_tables(&mut tf, &mut tg, r).0
}

/// Memoized iterated real-axis derivatives of one symbol.
struct DerivTable<'a> {
    base: &'a SymbolFunction,
    memo: std::collections::HashMap<[u32; 4], SymbolFunction>,
}

impl<'a> DerivTable<'a> {
    fn new(base: &'a SymbolFunction) -> Self {
        Self {
            base,
            memo: std::collections::HashMap::new(),
        }
    }

    fn get(&mut self, idx: [u32; 4]) -> SymbolFunction {
        if idx == [0, 0, 0, 0] {
            return self.base.clone();
        }
        if let Some(s) = self.memo.get(&idx) {
            return s.clone();
        }
        let axes = [Axis::P1, Axis::Q1, Axis::P2, Axis::Q2];
        let slot = idx.iter().position(|&n| n > 0).unwrap();
        let mut parent = idx;
        parent[slot] -= 1;
        let value = self.get(parent).d_axis(axes[slot]);
        self.memo.insert(idx, value.clone());
        value
    }
}

/// One series order through shared derivative tables. The second value
/// reports whether any r-th derivative of the first argument survives;
/// once none do, every later order vanishes identically.
fn p_r_with_tables(
    tf: &mut DerivTable<'_>,
    tg: &mut DerivTable<'_>,
    r: usize,
) -> (SymbolFunction, bool) {
    if r == 0 {
        return (&tf.get([0; 4]) * &tg.get([0; 4]), true);
    }
    let mut acc = SymbolFunction::zero();
    let mut any_f = false;
    for a in 0..=r {
        for b in 0..=(r - a) {
            for c in 0..=(r - a - b) {
                let d = r - a - b - c;
                let df = tf.get([a as u32, b as u32, c as u32, d as u32]);
                if df.is_zero() {
                    continue;
                }
                any_f = true;
                // Pair axes swap within each (p, q) couple.
                let dg = tg.get([b as u32, a as u32, d as u32, c as u32]);
                if dg.is_zero() {
                    continue;
                }
                let coeff = multinomial(r, [a, b, c, d])
                    * if (b + c) % 2 == 0 { 1.0 } else { -1.0 };
                acc = &acc + &(&df * &dg).scale(Complex64::new(coeff, 0.0));
            }
        }
    }
    (acc, any_f)
}

fn multinomial(r: usize, parts: [usize; 4]) -> f64 {
    // Product of binomials keeps every intermediate integer exact in f64.
    let mut rest = r;
    let mut acc = 1.0;
    for p in parts {
        acc *= binomial(rest, p);
        rest -= p;
    }
    acc
}

fn binomial(n: usize, k: usize) -> f64 {
    let k = k.min(n - k);
    let mut acc = 1.0;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc.round()
}

/// Closed form of `P^r(Ã, g)` for `r ≥ 2`:
/// `(−1)^r · 2^{r−1} [β̄ e^{w̄} ∂_{z̄}^r g + β e^w ∂_z^r g]`.
pub fn p_r_hamiltonian(
    a: &AffAlgebraElement,
    g: &SymbolFunction,
    r: usize,
) -> Result<SymbolFunction, MoyalError> {
    if r < 2 {
        return Err(MoyalError::OrderTooLow { r });
    }
    let mut dzg = g.clone();
    let mut dzbg = g.clone();
    for _ in 0..r {
        dzg = dzg.dz();
        dzbg = dzbg.dz_bar();
    }
    let scale = if r % 2 == 0 { 1.0 } else { -1.0 } * 2f64.powi(r as i32 - 1);
    let out = &(&SymbolFunction::exp_w_bar() * &dzbg).scale(a.beta.conj())
        + &(&SymbolFunction::exp_w() * &dzg).scale(a.beta);
    Ok(out.scale(Complex64::new(scale, 0.0)))
}

/// Truncated Moyal product `Σ_{r ≤ R} (1/r!) (1/2i)^r P^r(f, g)`.
///
/// Stops early once every r-th derivative of `f` vanishes identically,
/// which kills all later orders as well.
pub fn star_truncated(
    f: &SymbolFunction,
    g: &SymbolFunction,
    policy: &TruncationPolicy,
) -> SymbolFunction {
    let half_over_i = Complex64::new(0.0, -0.5); // 1/(2i)
    let mut tf = DerivTable::new(f);
    let mut tg = DerivTable::new(g);
    let mut acc = SymbolFunction::zero();
    let mut coeff = Complex64::new(1.0, 0.0); // (1/r!) (1/2i)^r
    for r in 0..=policy.r_max {
        if r > 0 {
            coeff *= half_over_i / r as f64;
        }
        let (term, alive) = p_r_with_tables(&mut tf, &mut tg, r);
        if !term.is_zero() {
            acc = &acc + &term.scale(coeff);
        }
        if r > 0 && !alive {
            break;
        }
    }
    acc
}

/// `i Ã ⋆ i B̃ − i B̃ ⋆ i Ã`, exact because the series terminates at `r = 1`
/// on a pair of Hamiltonian symbols; equals `i` times the Hamiltonian
/// symbol of `[A, B]`.
pub fn star_commutator_hamiltonians(
    a: &AffAlgebraElement,
    b: &AffAlgebraElement,
) -> SymbolFunction {
    let i = Complex64::new(0.0, 1.0);
    let ia = hamiltonian_symbol(a).scale(i);
    let ib = hamiltonian_symbol(b).scale(i);
    let policy = TruncationPolicy::new(2, 0.0);
    &star_truncated(&ia, &ib, &policy) - &star_truncated(&ib, &ia, &policy)
}

/// The representation operator `ℓ_A g = i Ã ⋆ g` on the symbol class.
pub fn ell_apply(
    a: &AffAlgebraElement,
    g: &SymbolFunction,
    policy: &TruncationPolicy,
) -> SymbolFunction {
    let ia = hamiltonian_symbol(a).scale(Complex64::new(0.0, 1.0));
    star_truncated(&ia, g, policy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling;
    use crate::symbol::TermKey;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

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

    #[test]
    fn p0_is_pointwise_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let a = sampling::algebra_element(&mut rng);
        let g = random_symbol(&mut rng);
        let lhs = p_r(&hamiltonian_symbol(&a), &g, 0);
        let rhs = &hamiltonian_symbol(&a) * &g;
        assert!(lhs.coeff_distance(&rhs) < 1e-15);
    }

    #[test]
    fn p1_of_hamiltonian_pair() {
        // P¹(Ã, B̃) = ½[(α_A β_B − α_B β_A) e^w + conj.]
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..100 {
            let a = sampling::algebra_element(&mut rng);
            let b = sampling::algebra_element(&mut rng);
            let lhs = p_r(&hamiltonian_symbol(&a), &hamiltonian_symbol(&b), 1);
            let coeff = (a.alpha * b.beta - b.alpha * a.beta) * 0.5;
            let rhs = SymbolFunction::from_terms([
                (TermKey::new(0, 0, 1, 0), coeff),
                (TermKey::new(0, 0, 0, 1), coeff.conj()),
            ]);
            assert!(lhs.coeff_distance(&rhs) < 1e-14);
        }
    }

    #[test]
    fn p_r_of_hamiltonian_pair_vanishes_beyond_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let a = hamiltonian_symbol(&sampling::algebra_element(&mut rng));
            let b = hamiltonian_symbol(&sampling::algebra_element(&mut rng));
            for r in 2..=4 {
                assert!(p_r(&a, &b, r).max_coeff() < 1e-15);
            }
        }
    }

    #[test]
    fn parity_under_argument_swap() {
        // P^r(f, g) = (−1)^r P^r(g, f) for the constant antisymmetric tensor.
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..30 {
            let f = random_symbol(&mut rng);
            let g = random_symbol(&mut rng);
            for r in 0..=3 {
                let lhs = p_r(&f, &g, r);
                let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
                let rhs = p_r(&g, &f, r).scale(c(sign, 0.0));
                assert!(lhs.coeff_distance(&rhs) < 1e-12);
            }
        }
    }

    #[test]
    fn bilinearity() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let f1 = random_symbol(&mut rng);
            let f2 = random_symbol(&mut rng);
            let g = random_symbol(&mut rng);
            let s = sampling::unit_disk(&mut rng);
            for r in 0..=3 {
                let lhs = p_r(&(&f1.scale(s) + &f2), &g, r);
                let rhs = &p_r(&f1, &g, r).scale(s) + &p_r(&f2, &g, r);
                assert!(lhs.coeff_distance(&rhs) < 1e-12);
            }
        }
    }

    #[test]
    fn enumerated_and_multinomial_routes_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..10 {
            let f = random_symbol(&mut rng);
            let g = random_symbol(&mut rng);
            for r in 0..=4 {
                let a = p_r_enumerated(&f, &g, r);
                let b = p_r_multinomial(&f, &g, r);
                assert!(a.coeff_distance(&b) < 1e-11, "r = {r}");
            }
        }
    }

    #[test]
    fn hamiltonian_closed_form_matches_contraction() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let g = SymbolFunction::monomial(c(1.0, 0.0), TermKey::new(2, 0, 1, 0)); // z² e^w
        for _ in 0..50 {
            let a = sampling::algebra_element(&mut rng);
            let at = hamiltonian_symbol(&a);
            for r in 2..=4 {
                let closed = p_r_hamiltonian(&a, &g, r).unwrap();
                let generic = p_r(&at, &g, r);
                assert!(closed.coeff_distance(&generic) < 1e-12);
            }
            // Multinomial route keeps matching beyond the enumerated range.
            let g6 = random_symbol(&mut rng);
            for r in 5..=6 {
                let closed = p_r_hamiltonian(&a, &g6, r).unwrap();
                let generic = p_r_multinomial(&at, &g6, r);
                assert!(closed.coeff_distance(&generic) < 1e-11);
            }
        }
    }

    #[test]
    fn hamiltonian_form_rejects_low_order() {
        let a = sampling::algebra_element(&mut ChaCha8Rng::seed_from_u64(8));
        let g = SymbolFunction::one();
        assert_eq!(
            p_r_hamiltonian(&a, &g, 1),
            Err(MoyalError::OrderTooLow { r: 1 })
        );
    }

    #[test]
    fn hamiltonian_form_vanishes_without_beta() {
        let a = AffAlgebraElement::new(c(0.7, -0.4), c(0.0, 0.0));
        let g = SymbolFunction::monomial(c(1.0, 0.0), TermKey::new(3, 2, 1, 1));
        for r in 2..=5 {
            assert!(p_r_hamiltonian(&a, &g, r).unwrap().is_zero());
        }
    }

    #[test]
    fn star_identity_element() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let f = random_symbol(&mut rng);
        let star = star_truncated(&f, &SymbolFunction::one(), &TruncationPolicy::default());
        assert!(star.coeff_distance(&f) < 1e-14);
    }

    #[test]
    fn star_of_hamiltonians_terminates() {
        // Ã ⋆ B̃ is already exact at R = 2.
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..20 {
            let a = hamiltonian_symbol(&sampling::algebra_element(&mut rng));
            let b = hamiltonian_symbol(&sampling::algebra_element(&mut rng));
            let low = star_truncated(&a, &b, &TruncationPolicy::new(2, 4.0));
            let high = star_truncated(&a, &b, &TruncationPolicy::new(12, 4.0));
            assert!(low.coeff_distance(&high) < 1e-15);
        }
    }

    #[test]
    fn star_commutator_equals_bracket_symbol() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let a = sampling::algebra_element(&mut rng);
            let b = sampling::algebra_element(&mut rng);
            let lhs = star_commutator_hamiltonians(&a, &b);
            let rhs = hamiltonian_symbol(&a.bracket(&b)).scale(c(0.0, 1.0));
            assert!(lhs.coeff_distance(&rhs) < 1e-13);
        }
        // A = B collapses to zero, and (X, Y) gives (i/2)(e^w + e^{w̄}).
        let x = AffAlgebraElement::x1();
        assert!(star_commutator_hamiltonians(&x, &x).is_zero());
        let xy = star_commutator_hamiltonians(&x, &AffAlgebraElement::y1());
        let want = SymbolFunction::from_terms([
            (TermKey::new(0, 0, 1, 0), c(0.0, 0.5)),
            (TermKey::new(0, 0, 0, 1), c(0.0, 0.5)),
        ]);
        assert!(xy.coeff_distance(&want) < 1e-15);
    }

    #[test]
    fn operator_commutator_represents_bracket() {
        // [ℓ_A, ℓ_B] g = ℓ_{[A,B]} g; the series terminates on symbols.
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let policy = TruncationPolicy::default();
        for _ in 0..20 {
            let a = sampling::algebra_element(&mut rng);
            let b = sampling::algebra_element(&mut rng);
            let g = random_symbol(&mut rng);
            let lhs = &ell_apply(&a, &ell_apply(&b, &g, &policy), &policy)
                - &ell_apply(&b, &ell_apply(&a, &g, &policy), &policy);
            let rhs = ell_apply(&a.bracket(&b), &g, &policy);
            assert!(lhs.coeff_distance(&rhs) < 1e-12);
        }
    }

    #[test]
    fn default_tail_bound_is_tiny() {
        let policy = TruncationPolicy::default();
        let tail = policy.tail_bound();
        assert!(tail < 1e-13, "tail bound {tail}");
        assert!(tail > 0.0);
    }
}
