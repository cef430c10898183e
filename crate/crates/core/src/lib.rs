//! Exact computations with symbolic powers and secants of combinatorially
//! defined ideals.
//!
//! The crate is organised bottom-up:
//!
//! * [`monomial`] holds monomials, monomial ideals and their lattice
//!   operations, symbolic powers of squarefree ideals and differential
//!   powers of arbitrary monomial ideals.
//! * [`combinat`] holds graphs and hypergraphs, their blowups and the exact
//!   invariants (independence, covering, clique and chromatic numbers),
//!   perfection and the Greene-graph test.
//! * [`poset`] holds finite posets, Greene–Kleitman sequences, blowup posets
//!   and the comparability/incomparability graphs.
//! * [`symbolic`] combines the above: edge ideals, secant ideals, product
//!   formulas for symbolic powers and the differential-perfection checks.
//! * [`groebner`] is a small Buchberger engine over the rationals together
//!   with the determinantal matrix families, joins and the Gröbner
//!   degeneration checks.
//! * [`sweep`] drives exhaustive and randomized sweeps over labeled graphs
//!   and posets.
//!
//! Vertices and variables are 1-based in every serialized form and 0-based
//! in memory.

pub mod bits;
pub mod combinat;
pub mod error;
pub mod groebner;
pub mod io;
pub mod monomial;
pub mod poset;
pub mod sweep;
pub mod symbolic;

pub use error::{Error, Result};

/// Version string embedded in every report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
