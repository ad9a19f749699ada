//! Brute-force machinery the engines are checked against.
//!
//! Nothing here calls into the reduction logic of [`crate::words`] or
//! [`crate::coxeter`] when computing ground truth: words are reduced by a
//! heap-of-pieces algorithm or by exhaustive rewriting, and finite and
//! Coxeter groups are handled through faithful representations.

pub mod ball;
pub mod catalog;
pub mod finite;
pub mod heap;
pub mod matrix;
pub mod rewrite;
pub mod verify;

pub use ball::{enumerate_ball, enumerate_subgroup_ball, Ball, BallEdge, DEFAULT_CAP};
pub use heap::heap_reduce;
pub use matrix::{integral_tits_rep, racg_matrix_rep, IntMatrix};
pub use rewrite::oracle_reduce;
