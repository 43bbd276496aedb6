//! Cayley evolution algebras over exact fields.
//!
//! The crate builds evolution algebras `Cay(f)` out of group algebras (and
//! general associative basis algebras), realizes finite groups as the full
//! automorphism groups of absolutely simple evolution algebras, and checks
//! every claim by exact computation plus brute-force oracles.

pub mod autgrp;
pub mod cayley;
pub mod cli;
pub mod digraph;
pub mod error;
pub mod evoalg;
pub mod exactla;
pub mod field;
pub mod group;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
