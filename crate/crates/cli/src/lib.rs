//! Ring expression language and command-line front end for `finring-core`.

pub mod app;
pub mod expr;
pub mod paper;

pub use expr::{parse_ring_spec, ParseError, RingExpr};
