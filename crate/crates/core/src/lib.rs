//! Exact verification workbench for a family of Catalan-number summation
//! identities.
//!
//! Two independent styles of verification are provided: enumerative
//! (brute-force sums and sign-reversing involutions on labeled binary
//! trees) and algebraic (Gosper and Zeilberger certificates checked as
//! rational-function identities).

pub mod cli;
pub mod exact_math;
pub mod identities;
pub mod summation;
pub mod trees;
