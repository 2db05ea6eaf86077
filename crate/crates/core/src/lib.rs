//! Structure of the zero-divisor graph of `Z_n`.
//!
//! The graph has the nonzero zero divisors of `Z_n` as vertices, with two
//! distinct vertices adjacent when their product is `0 mod n`. This crate
//! answers questions about it two independent ways:
//!
//! * [`theorems`]: closed forms computed from the factorization of `n` and a
//!   few gcds. These scale to any `n < 2^63`.
//! * [`oracle`]: direct graph search (BFS, low-link bridges) on the
//!   materialized graph, bounded by an oracle cap.
//!
//! [`verify`] sweeps ranges of `n` through both engines and records where
//! they disagree.

pub mod arith;
mod error;
pub mod oracle;
pub mod theorems;
pub mod verify;
pub mod zdgraph;

pub use arith::{Factorization, Modulus};
pub use error::{Error, Result};
pub use oracle::{BridgeSet, EccentricityRecord};
pub use theorems::{CenterFormula, DiameterAnswer};
pub use verify::{CheckKind, Status, VerificationReport};
pub use zdgraph::{Edge, Vertex, ZdGraph, DEFAULT_ORACLE_CAP};
