//! Desk-scale verification toolkit for cancellation in cusp-form
//! coefficient sums twisted by sums-of-squares representation counts and
//! a Dirichlet character, organized around the circle method.
//!
//! The library computes every object in the chain exactly or to a pinned
//! tolerance: integer Fourier coefficients of the weight-12 form,
//! representation counts r_ell(n), character / Gauss / Kloosterman sums,
//! the dual-side integral transform of the summation formula, and the
//! major/minor arc decomposition, plus an exponent-fitting harness that
//! compares observed cancellation against the theoretical envelopes.
//!
//! See the `examples/` directory for one runnable walkthrough per
//! capability, and the `verify` CLI subcommand for the full check suite.

pub mod characters;
pub mod error;
pub mod expsums;
pub mod forms;
pub mod ntheory;
pub mod theta;
pub mod util;

pub use error::{Error, Result};
