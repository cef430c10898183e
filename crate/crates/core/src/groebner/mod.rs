//! Exact Gröbner bases over the rationals, determinantal matrix families,
//! joins and the degeneration checks.

mod engine;
mod join;
mod matrix;
mod order;
mod poly;
mod verify;

pub use engine::{buchberger, buchberger_with, is_groebner, normal_form, GbLimits, GroebnerBasis, MAX_VARS};
pub use order::{OrderKind, TermOrder};
pub use poly::{default_names, int, Coeff, Polynomial, PolynomialJson, TermJson};
pub use matrix::{
    determinant, minors_at_least, minors_of_size, off_diagonal_leads, pfaffian, pfaffians_at_least, pfaffians_of_size, FamilyKind,
    MatrixFamily, PolyMatrix,
};
pub use join::{join_ideal, join_ideal_with, secant_via_join, symbolic_via_join};
pub use verify::{
    delightful_check, ideals_equal, product_candidates, squarefree_hypergraph, verify_product_groebner, DelightfulReport, ProductGbReport,
    CANDIDATE_LIMIT,
};
