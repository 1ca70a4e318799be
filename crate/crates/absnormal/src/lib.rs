//! Piecewise-affine functions in abs-normal form, the complementarity and
//! optimization problems derived from them, and complete desk-scale
//! solvers for those problems.
//!
//! A continuous piecewise-affine map is encoded by six constant blocks
//! `(c, b, Z, L, J, Y)` ([`anf::AbsNormalForm`]). From that encoding the
//! crate mechanically constructs:
//!
//! * a root-finding mixed LCP with no regularity requirements, and a plain
//!   LCP when the map is square with a nonsingular derived Jacobian
//!   ([`formulations`]),
//! * the older root formulations that need the plain Jacobian block to be
//!   nonsingular, kept as a comparison baseline,
//! * a linear program with complementarity constraints for global
//!   minimization of scalar-valued maps, with a big-M mixed-integer
//!   reformulation,
//! * a homogeneous system whose unsolvability certifies that a global
//!   minimum exists ([`analysis::existence_of_minimum`]).
//!
//! Everything is solved in-crate ([`solvers`]): Lemke pivoting and a
//! two-phase simplex for speed, sign-pattern enumeration for completeness,
//! and branch-and-bound for the binary reformulation. The [`analysis`]
//! pipelines chain these pieces and verify residuals end to end.

pub mod analysis;
pub mod anf;
pub mod formulations;
pub mod instances;
pub mod linalg;
pub mod solvers;

pub use anf::{AbsNormalForm, AnfError, AuxiliaryQuantities, ReducedData, SignDecomposition};
pub use linalg::{Matrix, Vector};
pub use solvers::{SolveOutcome, SolveStatus};
