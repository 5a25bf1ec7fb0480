//! Generalized Alexander quandles `Q(G, psi)` built from symmetric groups and
//! their automorphisms: construction, invariants, double-coset counting, and
//! classification of the quandles up to isomorphism per conjugacy class of
//! `Aut(S_n)`.

pub mod alexander;
pub mod autgroup;
pub mod classify;
pub mod cli;
pub mod invariants;
pub mod iso;
pub mod perm;
pub mod quandle;
pub mod s6;
pub mod symgroup;

use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("image sequence is not a permutation")]
    NotAPermutation,
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("repeated point {point} in cycle list")]
    RepeatedPoint { point: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("budget exceeded: needed {needed}, budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("table cap exceeded: needed {needed} elements, cap {cap}")]
    TableCapExceeded { needed: u64, cap: u64 },
    #[error("closure cap exceeded: more than {cap} elements generated")]
    ClosureCapExceeded { cap: u64 },
    #[error("outer automorphisms only exist for n = 6 (got n = {0})")]
    OuterRequiresDegreeSix(usize),
    #[error("invalid quandle triplet: K is not contained in Fix(psi, G)")]
    SubgroupNotFixed,
    #[error("subgroup list is not closed under the group operation")]
    NotASubgroup,
    #[error("quandle rows have differing orders: row {row_a} has order {ord_a}, row {row_b} has order {ord_b}")]
    RowOrderMismatch {
        row_a: usize,
        ord_a: u64,
        row_b: usize,
        ord_b: u64,
    },
    #[error("quandle sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("isomorphism search cap exceeded: size {size} > cap {cap}")]
    IsoCapExceeded { size: usize, cap: usize },
    #[error("inexact division in double-coset count (inputs are not subgroups?)")]
    InexactDivision,
    #[error("not a unit: gcd({a}, {n}) != 1")]
    NotAUnit { a: u64, n: u64 },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Other(String),
}
