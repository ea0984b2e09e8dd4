//! Exact computations with the symmetric inverse semigroup `IS_n`, the dual
//! symmetric inverse semigroup `I*_k`, its partial analogue `PI*_k` and two
//! deformations of the latter, together with their actions on tensor powers
//! of `V = C^n` and `U = V ⊕ C`.
//!
//! All arithmetic is exact over the rationals. The [`dualities`] and
//! [`morphisms`] modules turn the duality statements between these actions
//! into finite checks that can be run for small `n` and `k`.

pub mod algebra;
mod combinatorics;
pub mod diagrams;
pub mod dualities;
pub mod error;
pub mod exact_linalg;
pub mod limits;
pub mod morphisms;
pub mod notation;
pub mod semigroups;
pub mod tensor_actions;

pub use diagrams::{BoundaryPoint, HatElement, PartialInjection, SetPartition, Side};
pub use error::{Error, Result};
pub use exact_linalg::{ExactMatrix, Rational};
pub use limits::Limits;
pub use notation::{Element, Family, ParseError};
