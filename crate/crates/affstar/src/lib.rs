//! Deformation quantization of the open coadjoint orbit of the group of
//! affine transformations of the complex line, together with the unitary
//! representations it produces, and numerical verification of every
//! identity along the way.
//!
//! The layers, bottom to top:
//!
//! - [`lie`] — the algebra, the matrix group, the universal cover,
//!   exponential maps, adjoint/coadjoint actions.
//! - [`orbit`] — sheet charts of the punctured plane, the Kirillov
//!   symplectic structure, Hamiltonian symbols, Poisson brackets.
//! - [`symbol`] / [`moyal`] — an exact calculus on a closed function class
//!   and the Moyal star product with its bidifferential operators `P^r`.
//! - [`grid`] / [`fourier`] — sampled 4-D grids, the partial Fourier
//!   transform in the `z` variable, and the transformed operators.
//! - [`rep`] — the operators on the twisted strip, the irreducible
//!   representations `T_θ`, the characters `U_λ`, and the
//!   characteristic-flow exponential.
//! - [`verify`] — seeded verification suites with machine-readable reports,
//!   driven by the `verify` binary.
//!
//! Every runnable capability has a matching example under `examples/`.

pub mod fourier;
pub mod grid;
pub mod lie;
pub mod moyal;
pub mod orbit;
pub mod rep;
pub mod sampling;
pub mod symbol;
pub mod verify;
