//! Finite monoids from combinatorics on words: transformation families,
//! digraph closures, presented monoids, and equational checks over them.

pub mod error;
pub mod monoid;
pub mod presentation;
pub mod suite;
pub mod transform;
pub mod word;

pub use error::{Error, Result};
