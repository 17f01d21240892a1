//! Alexander polynomial Δ₀ of virtual knots and links.
//!
//! * [`laurent`]: exact Laurent polynomials in `u, v`.
//! * [`diagram`]: signed Gauss codes and diagram transforms.
//! * [`alexander`]: Alexander matrices, determinants, Δ₀ and Δ̄₀.
//! * [`twist`]: virtual twist knots, closed forms and the recursive evaluator.
//! * [`verify`]: cross-checks, grids, lemma suites and batch files.
//! * [`cli`]: the `vknot` command line.

pub mod alexander;
pub mod cli;
pub mod diagram;
pub mod laurent;
pub mod twist;
pub mod verify;

pub use alexander::{delta0_diagram, delta_bar, determinant, invariant_report, InvariantReport};
pub use diagram::{parse_gauss, Diagram};
pub use laurent::{parse_poly, LaurentPoly};
pub use twist::{Clasp, TwistSpec};
