//! Finite groups as Cayley tables, the graphs their commuting structure
//! induces, and exact domination / total-domination numbers for those graphs.
//!
//! The crate is organized around the pipeline
//!
//! ```text
//! families  ->  group  ->  commuting  ->  graph  ->  domination
//!                                 \________ formulas ________/
//!                                           verify
//! ```
//!
//! `families` constructs the groups, `commuting` turns them into (proper)
//! commuting graphs or enhanced power graphs, `domination` solves for γ and
//! γ_t exactly with certificates, `formulas` evaluates every closed-form
//! prediction with its applicability gate, and `verify` cross-checks the two
//! against each other over a pinned corpus.

pub mod cache;
pub mod cli;
pub mod commuting;
pub mod domination;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod group;
pub mod mask;
pub mod verify;

pub use domination::{Budget, DominationKind, DominationResult, SolveMethod};
pub use families::FamilySpec;
pub use graph::{GraphError, SimpleGraph};
pub use group::{GroupError, GroupInvariants, GroupTable};
pub use mask::SubsetMask;
