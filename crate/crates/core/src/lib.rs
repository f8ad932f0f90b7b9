//! Exact integer-lattice machinery for deciding rationality of
//! three-dimensional monomial group actions.
//!
//! The crate is organised bottom-up:
//!
//! * [`matrix`] — arbitrary-precision integer matrices, Smith and Hermite
//!   normal forms, saturated kernels and quotient invariants;
//! * [`group`] — finite abelian groups of unimodular matrices acting on
//!   lattices by right multiplication of row vectors;
//! * [`cohomology`] — first cohomology and Tate cohomology in degree −1 of a
//!   lattice action, coboundary testing, and the non-vanishing certificate;
//! * [`parity`] — the two parity-style irrationality certificates;
//! * [`squareclass`] — square classes of rationals and multiquadratic field
//!   degrees;
//! * [`registry`] — the built-in library of lattice actions used by the
//!   certificate pipeline;
//! * [`decide`] — the decision procedures for the eight monomial group
//!   actions and the reduced subproblem families.
//!
//! Throughout, vectors are coordinate **rows** and matrices act by **right**
//! multiplication: row `i` of an action matrix is the image of the `i`-th
//! basis vector.  All arithmetic is exact; fixed-width overflow is
//! structurally impossible.

pub mod cohomology;
pub mod decide;
pub mod group;
pub mod matrix;
pub mod parity;
pub mod registry;
pub mod squareclass;

pub use cohomology::{
    adjoin_trivializer, h1, is_coboundary, nonvanishing_test, tate_minus1, Cocycle,
    CohomologyError, CohomologyResult, NonvanishingReport, Representatives, TestStatus,
};
pub use decide::{
    certify_negativity, decide_group, decide_r, decide_r1r2, CertificateEvidence, CertifyError,
    ChainStep, DecideError, GroupId, NegativityCertificate, Outcome, ProblemInstance,
    SubproblemVariant, Verdict, CERTIFY_CASES,
};
pub use group::{close_group, FiniteMatrixGroup, GroupError, LatticeAction};
pub use matrix::{
    kernel_basis, quotient_invariants, row_space_basis, smith_normal_form, solve_left,
    IntegerMatrix, MatrixError, QuotientStructure, SmithDecomposition,
};
pub use parity::{
    invariant_sublattice, norm_sum, parity_test_refined, parity_test_simple, ParityCertificate,
    ParityError, ParityReport,
};
pub use registry::{paper_module, registry_names, RegistryError};
pub use squareclass::{
    in_minus4_fourth_powers, is_square, multiquadratic_degree, parse_rational, square_class,
    SquareClass, SquareClassError,
};

/// Default cap on the order of a matrix group built by generator closure.
/// Closure aborts with [`GroupError::CapExceeded`] beyond this many elements.
pub const DEFAULT_MAX_GROUP_ORDER: usize = 1024;
