//! Finite orthomodular posets given by Greechie diagrams.
//!
//! The crate validates diagrams, builds the small logic they describe,
//! enumerates two-valued and pure states exactly over the rationals, checks
//! fullness and regularity, and ships a catalog of (3,3)-homogeneous
//! constructions with the values they are expected to produce.

pub mod bitset;
pub mod catalog;
pub mod classify;
pub mod cli;
pub mod concrete;
pub mod diagram;
pub mod error;
pub mod linalg;
pub mod logic;
pub mod rational;
pub mod search;
pub mod simplex;
pub mod states;

pub use classify::{classify, Classification};
pub use concrete::ConcreteLogic;
pub use diagram::{homogeneity, validate, GreechieDiagram};
pub use error::{Error, Result};
pub use rational::Rational;
pub use states::{pure_states, state_polytope, two_valued_states, RationalState, TwoValuedState};
