//! Quiver coefficients of Dynkin type.
//!
//! The crate computes the integers `c_μ(Ω)` expanding the Grothendieck class
//! of a quiver orbit closure `Ω` in products of stable Grothendieck
//! polynomials `G_{μ_1}(E_1 - M_1) ⋯ G_{μ_n}(E_n - M_n)`. The pieces are:
//!
//! - [`partitions`]: partitions, skew shapes, set-valued tableaux and words;
//! - [`gamma`]: the bialgebra `Γ` of stable Grothendieck polynomials;
//! - [`quiver`]: quivers, Euler form, root systems, orbits, hom dimensions;
//! - [`resolution`]: directed partitions and resolution pairs;
//! - [`engine`]: the operator recursion producing the coefficient tensors;
//! - [`oracle_a3`]: closed formulas for type A₂ and the two
//!   non-equioriented A₃ quivers, used to cross-check the engine.
//!
//! ```
//! use kquiver::part;
//! use kquiver::gamma::{mul, GammaElement};
//!
//! let box1 = GammaElement::basis(part![1]);
//! let sq = mul(&box1, &box1);
//! assert_eq!(sq.to_string(), "G(1,1) + G(2) - G(2,1)");
//! ```

pub mod engine;
pub mod error;
pub mod gamma;
mod linalg;
pub mod oracle_a3;
pub mod partitions;
pub mod quiver;
pub mod resolution;

pub use error::{Error, Result};
pub use gamma::{GammaElement, TensorElement};
pub use partitions::Partition;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/grothendieck.md")]
    mod grothendieck {}
    #[doc = include_str!("../../../book/src/straightening.md")]
    mod straightening {}
    #[doc = include_str!("../../../book/src/quivers.md")]
    mod quivers {}
    #[doc = include_str!("../../../book/src/resolutions.md")]
    mod resolutions {}
    #[doc = include_str!("../../../book/src/coefficients.md")]
    mod coefficients {}
    #[doc = include_str!("../../../book/src/oracles.md")]
    mod oracles {}
    #[doc = include_str!("../../../book/src/membership.md")]
    mod membership {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
