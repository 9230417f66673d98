//! Term parsing, certificate documents, and the `catalan` command line.

pub mod certificate;
mod commands;
pub mod expr;

pub use certificate::{canonical_fraction, parse_fraction, CertificateKind, CertificateRecord, RecordError, RecordVerdict};
pub use commands::{run, Cli, Command, Format, IntRange, F_SUMMAND};
pub use expr::{parse_term, Builtin, Expr, ParseError, TermExpression};
