//! Check functions behind the verification suites. Each returns the
//! maximum observed error of one identity, sampled deterministically from
//! the given seed, so the suites and the acceptance tests share one
//! implementation.

pub mod fourier;
pub mod lie;
pub mod moyal;
pub mod orbit;
pub mod rep;
