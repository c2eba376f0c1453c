//! Left-invariant Einstein metrics on SO(n).
//!
//! For block sizes `(k, k, l)` the Einstein condition on a six-parameter
//! family of left-invariant metrics on SO(2k+l) reduces to a system of three
//! polynomial equations. This crate constructs that system exactly, eliminates
//! variables by resultants, isolates and certifies the positive real roots,
//! classifies each certified metric against the naturally-reductive criteria,
//! and counts solutions across block decompositions of SO(n).
//!
//! Modules:
//! - [`polyengine`]: exact rational/polynomial arithmetic, Sturm root
//!   isolation, certified refinement, Sylvester resultants.
//! - [`liestruct`]: the orthogonal Lie algebra with its block decomposition,
//!   structure constants, and a brute-force Ricci oracle.
//! - [`ricci`]: closed-form Ricci components, Einstein residuals, and the
//!   naturally-reductive classifier.
//! - [`einstein_solver`]: the end-to-end pipeline from block sizes to
//!   certified Einstein metrics and count reports.

pub mod einstein_solver;
pub mod liestruct;
pub mod polyengine;
pub mod ricci;
