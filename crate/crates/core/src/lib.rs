//! Exact arithmetic for Fibonacci words.
//!
//! Builds finite Fibonacci words (`FW(0)="0"`, `FW(1)="1"`, `FW(2)="10"`,
//! `FW(k)=FW(k-1)FW(k-2)`), counts their symbols, and evaluates density
//! ratios, bounds, complexity profiles and generating-function identities
//! with exact rationals. Floating renderings only appear at the edges, through
//! the arbitrary-precision [`BigFloat`].
//!
//! Modules:
//!
//! - [`sequences`]: Fibonacci, k-Fibonacci and generalized sequences, Binet
//!   evaluation, combinatorial closed forms, the logarithmic series.
//! - [`fibword`]: materialized words, symbol counts, implicit infinite word.
//! - [`density`]: symbol densities and the ratio / bound evaluators.
//! - [`wordstats`]: factor and palindromic complexity, Sturmian index.
//! - [`genfunc`]: rational generating functions.
//! - [`cli`]: the `fibdense` command-line front end.
//!
//! Table sweeps run on rayon when the `parallel` feature is enabled (the
//! default); see [`exec`].

pub mod cli;
pub mod density;
pub mod error;
pub mod exec;
pub mod fibword;
pub mod genfunc;
pub mod num;
pub mod sequences;
pub mod wordstats;

pub use error::{Error, Result};
pub use exec::Strategy;
pub use num::{BigFloat, Complex, Nat, Rat};
