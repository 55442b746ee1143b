//! Exact computation of Iwasawa invariants (lambda, mu, nu) for towers of
//! `p^n`-fold cyclic branched covers of links.
//!
//! The input is a multivariate Alexander polynomial, a direction vector `z`
//! selecting an infinite cyclic cover, and a prime `p`. From these the crate
//! derives the one-variable reduced polynomial, the exact orders of
//! `H_1(M_{z,p^n})` level by level, and the invariants governing their
//! `p`-adic growth. It also ships constructors for a number of explicit link
//! families with closed-form predictions, and a sufficient criterion for
//! pseudonullity of the unramified link module.

pub mod catalog;
pub mod covers;
mod error;
pub mod expr;
pub mod greenberg;
pub mod laurent;
pub mod padic;
pub mod repro;

pub use error::{Error, Result};
pub use laurent::{MultiLaurent, Sign, UniPoly, UnitNormalForm};
pub use padic::{Prime, Valuation};
