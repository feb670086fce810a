//! Explicit linear representations of bi-uniform matroids over finite fields.
//!
//! A bi-uniform matroid has rank `k`, ground set `E1 ∪ E2` and sub-ranks `m`
//! and `l`: a set `B` is independent iff `|B| <= k`, `|B ∩ E1| <= m` and
//! `|B ∩ E2| <= l`. This crate builds `k × (|E1|+|E2|)` matrices over finite
//! fields whose column matroid is exactly that, checks them exhaustively,
//! dualizes them and turns them into ideal linear secret-sharing schemes.

pub mod cli;
pub mod constructions;
pub mod fields;
pub mod linalg;
pub mod matroid;
pub mod sharing;

pub use constructions::{BiUniformParams, Representation};
pub use fields::{Element, FieldDesc};
pub use linalg::Matrix;
