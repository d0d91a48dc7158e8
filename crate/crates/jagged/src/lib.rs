//! Exact arithmetic for jagged partitions.
//!
//! Jagged partitions are ordered tuples of non-negative integers obeying
//! relaxed weakly-decreasing conditions (for the basic family,
//! `n_j >= n_{j+1} - 1` and `n_j >= n_{j+2}`, last part positive). This crate
//! computes everything about them exactly, over arbitrary-precision integers:
//!
//! - [`qseries`]: truncated formal power series, Pochhammer products, theta
//!   sums, eta quotients, arithmetic-progression slicing.
//! - [`families`]: declarative family definitions, exhaustive enumeration,
//!   staircase bijections onto difference-restricted ordinary partitions.
//! - [`counting`]: recurrences, convolutions, the signed sum-of-squares
//!   expansion, and power-of-two congruence prediction/verification.
//! - [`genfun`]: bivariate (length-graded) generating functions, closed-form
//!   products, multi-sum expansions, and a fixed-point q-difference solver.
//! - [`identities`]: a registry of named series identities checked as exact
//!   equality of integer coefficient vectors.
//! - [`suite`]: the end-to-end verification suite tying all of the above
//!   together.

pub mod counting;
pub mod families;
pub mod genfun;
pub mod identities;
pub mod qseries;
pub mod suite;
