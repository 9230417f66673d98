//! Hypergeometric summation: Gosper's algorithm for indefinite sums and
//! creative telescoping (Zeilberger's algorithm) for definite sums. Every
//! result carries a certificate that is checked as an identity of rational
//! functions.

mod factored;
mod gosper;
mod term;
mod zeilberger;

pub use gosper::{
    gosper, telescope_definite, verify_gosper, DefiniteSum, DefiniteValue, GosperCertificate, GosperStage, HyperTerm,
    NotGosperSummable,
};
pub use term::{join_last, split_last, Factor, LinearForm, ProductForm, ShiftFactors};
pub use zeilberger::{
    verify_zeilberger, zeilberger, BivariateHyperTerm, Inhomogeneous, TelescopedRecurrence, ZeilbergerError,
};
