//! Pinned tolerances for every verification check and acceptance gate.
//!
//! Exact algebraic identities (symbol arithmetic, group laws evaluated in
//! closed form) sit a few digits above machine rounding of unit-scale
//! inputs; grid identities budget the dominant discretization error
//! (4th-order differences in `w`/`q₁`, Gaussian aliasing in spectral
//! directions) at the reference resolutions noted per constant.

/// Exact algebra with unit-disk coordinates: rounding only.
pub const BRACKET_TOL: f64 = 1e-14;

/// Group-law compositions pick up `e^z` factors of size ≤ e.
pub const LIE_LAYER_TOL: f64 = 1e-12;

/// φ₁ series-versus-direct agreement across `|α| ∈ [1e-8, 1]`.
pub const PHI1_BRANCH_TOL: f64 = 1e-12;

/// Chart round trip through `exp`/`Ln`, off the cut.
pub const CHART_ROUND_TRIP_TOL: f64 = 1e-12;

/// Poisson bracket identities evaluated at random bounded points.
pub const POISSON_TOL: f64 = 1e-10;

/// Kirillov pairing against the Hamiltonian of the bracket.
pub const KIRILLOV_IDENTITY_TOL: f64 = 1e-10;

/// Finite-difference symplectic pairing, central differences at step 1e-5:
/// truncation O(h²) = 1e-10 amplified by cancellation to ~1e-8.
pub const KIRILLOV_FD_TOL: f64 = 1e-6;

/// Real-linearity of the Hamiltonian and the two pairing routes.
pub const PAIRING_TOL: f64 = 1e-12;

/// Term-by-term symbol equality of the star commutator identity.
pub const STAR_COMMUTATOR_TOL: f64 = 1e-13;

/// Operator commutator on the symbol class (series terminate exactly).
pub const OPERATOR_COMMUTATOR_TOL: f64 = 1e-12;

/// Parity/bilinearity/closed-form agreement of the contraction operators.
pub const CONTRACTION_TOL: f64 = 1e-12;

/// Series tail with cutoff 20 over `|ξ| ≤ 4`: 2^21/21! < 1e-13.
pub const TAIL_BOUND_TOL: f64 = 1e-13;

/// Transform identities on Gaussians, 128² z-grid at extent 8; the
/// Gaussian aliasing floor is ~1e-9, leaving three digits of margin.
pub const TRANSFORM_IDENTITY_TOL: f64 = 1e-6;

/// Unitarity-grade checks of the discrete transform pair.
pub const TRANSFORM_ROUND_TRIP_TOL: f64 = 1e-10;

/// Transformed contraction pipeline vs closed forms, 32²×32² grid.
pub const PIPELINE_TOL: f64 = 1e-5;

/// Conjugated operator at cutoff 20 vs its resummed closed form.
pub const CONJUGATED_ELL_TOL: f64 = 1e-6;

/// Consecutive truncation-error ratios must strictly decrease.
pub const TRUNCATION_RATIO_TOL: f64 = 0.999;

/// Flow versus group action, quadrature at 1000 panels.
pub const FLOW_ACTION_SUP_TOL: f64 = 1e-8;

/// Closed-form and quadrature phase integrals.
pub const FLOW_MODES_TOL: f64 = 1e-11;

/// Strip action group law with grid-aligned `q₁` translations.
pub const GROUP_LAW_TOL: f64 = 1e-10;

/// Flow unitarity with grid-aligned transport: spectral `q₂` shifts are
/// exactly unitary, the Gaussian tail lost over the `q₁` edge is ≤ 1e-12.
pub const UNITARITY_TOL: f64 = 1e-10;

/// One-parameter property of the flow.
pub const ONE_PARAMETER_TOL: f64 = 1e-10;

/// Character homomorphism: phases add exactly.
pub const CHARACTER_TOL: f64 = 1e-14;

/// Winding-representative consistency of the strip action.
pub const WINDING_TOL: f64 = 1e-14;

/// Allowed deviation of the first-order convergence ratio from 2.
pub const FIRST_ORDER_RATIO_SLACK: f64 = 0.2;

/// Generator commutator with nested grid derivatives (512-point q₁ grid).
pub const GENERATOR_COMMUTATOR_TOL: f64 = 1e-6;

/// Frequency-side operator against its analytic logarithmic-variable image.
pub const VARIABLE_CHANGE_TOL: f64 = 1e-5;

/// Coadjoint fixed points of the zero-`Y*` functionals.
pub const FIXED_POINT_TOL: f64 = 1e-12;

/// Open-orbit invariant: `|f_Y|` scales exactly by `1/|a|` under the action.
pub const ORBIT_INVARIANT_TOL: f64 = 1e-10;

/// Literal-versus-spectral evaluation of the strip action.
pub const ACTION_ORACLE_TOL: f64 = 1e-12;
