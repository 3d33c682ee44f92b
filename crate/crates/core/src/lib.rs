//! Exact stratifications of the Grassmannian of polynomial spaces and of its
//! self-dual part.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`]: rationals, polynomials, rational functions, Wronskians and
//!   monic differential operators, all exact.
//! * [`weights`]: partitions, dominant weights of types A, B, C and the maps
//!   between them.
//! * [`rep`]: weight multiplicities, tensor product decompositions and
//!   invariant dimensions.
//! * [`strata`]: stratum labels, the degeneration poset, and Wronski degrees.
//! * [`spaces`]: concrete spaces of polynomials, their exponents, duals and
//!   associated operators.
//! * [`io`]: text notation, JSON files and DOT output used by the CLI.

pub mod algebra;
pub mod error;
pub mod io;
pub mod rep;
pub mod spaces;
pub mod strata;
pub mod weights;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/algebra.md")]
    mod algebra {}
    #[doc = include_str!("../../../book/src/weights.md")]
    mod weights {}
    #[doc = include_str!("../../../book/src/representations.md")]
    mod representations {}
    #[doc = include_str!("../../../book/src/strata.md")]
    mod strata {}
    #[doc = include_str!("../../../book/src/spaces.md")]
    mod spaces {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
