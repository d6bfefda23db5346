//! Exact-arithmetic accept-reject uncertainty models over finite
//! possibility spaces.
//!
//! The library represents an agent's assessment as finite lists of accepted
//! and rejected gambles (rational-valued payoff vectors), closes them under
//! the deduction rules of the accept-reject calculus, and answers every
//! downstream question (confusion, limbo, natural extension, coherence,
//! gamble relations, framework characterisations, lower previsions,
//! symmetry projections) through an exact rational linear-programming
//! kernel. No floating point participates in any decision.

pub mod arrangement;
pub mod engine;
pub mod frameworks;
pub mod previsions;
pub mod rat;
pub mod ratlp;
pub mod region;
pub mod relations;
pub mod sampling;
pub mod space;
pub mod symmetry;

pub use rat::{format_rat, parse_rat, rat, rint, Rat};
pub use space::{vector_order, Gamble, OrderFlags, Space, SpaceError};
