//! Many-valued modal logics over finite complete distributive lattices.
//!
//! The crate builds finite lattices and operator algebras, evaluates a modal
//! propositional language under truth-invariance semantics, generates and
//! searches a binary sequent system, constructs the canonical set-based
//! representation `A⁺ = {↓⁺a | a ∈ A}`, derives Kripke frames whose worlds
//! are the lifted join-irreducibles of the carrier, and machine-checks that
//! the algebraic and relational readings agree: `‖φ‖ = ↓⁺ Ī(φ)`.

pub mod algebra;
pub mod bilattice;
pub mod error;
pub mod eval;
pub mod gentzen;
pub mod kripke;
pub mod lattice;
pub mod representation;
pub mod syntax;

pub mod cli;

pub use error::{Error, Result};
