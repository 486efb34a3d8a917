//! Exact combinatorics of Macdonald polynomials and their joint cumulants.
//!
//! The crate computes, over arbitrary-precision integers:
//!
//! - transformed Macdonald polynomials via the filling formula with the
//!   `inv`/`maj` statistics ([`macdonald::haglund`]);
//! - Macdonald cumulants by their set-partition definition and by the
//!   combinatorial formula that attaches a graph-inversion polynomial to
//!   every filling of a colored diagram ([`macdonald::cumulant_by_definition`],
//!   [`macdonald::cumulant_combinatorial`]);
//! - the G-inversion polynomial of a loop-allowed multigraph in four
//!   equivalent forms: spanning trees with kappa-inversions, the Tutte
//!   specialization `T_G(1,q)`, a kappa-free tree expansion, and an
//!   alternating set-partition sum ([`graphs`]);
//! - G-parking functions and recurrent sandpile configurations with their
//!   weight/level generating functions ([`graphs::parking`]);
//! - hook q,t-Kostka coefficients, fully colored Macdonald polynomials and
//!   increasing-tree polynomials ([`macdonald`], [`graphs::trees`]);
//! - symmetric-function plumbing: monomial/Schur/power-sum conversions,
//!   Hall pairing, omega, plethystic specializations, and fundamental
//!   quasisymmetric expansions ([`symfunc`]).
//!
//! Everything is exact: scalars are sparse integer polynomials in `q`, `t`,
//! `u` ([`MPoly`]) and all identities between the routes above are checked by
//! the test suite rather than assumed. The [`verify`] module packages those
//! identity sweeps for the command-line `verify` subcommand.

pub mod graphs;
pub mod macdonald;
pub mod poly;
pub mod shapes;
pub mod symfunc;
pub mod verify;

pub use graphs::Multigraph;
pub use macdonald::CumulantProblem;
pub use poly::{Assignment, Exp, MPoly, RatMPoly, Var};
pub use shapes::{BoxPos, ColoredDiagram, Filling, Partition, SuperFilling, SuperLetter};
pub use symfunc::{Basis, QSymExpansion, SymFunc};

/// Crate-wide error type. Several variants double as failure detectors for
/// identities under test: a `NonDivisible` from the cumulant division or a
/// `NonIntegral` from a Schur expansion means a theorem check has failed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("no exact polynomial quotient exists")]
    NonDivisible,
    #[error("rational coefficients did not clear to integers")]
    NonIntegral,
    #[error("partition sizes differ")]
    SizeMismatch,
    #[error("symmetric function degrees differ")]
    DegreeMismatch,
    #[error("box lies outside the diagram")]
    BoxOutside,
    #[error("filling is not standard")]
    NotStandard,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("invalid input: {0}")]
    Invalid(String),
}
