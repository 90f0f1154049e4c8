//! Exact computation of the Kauffman bracket and Jones polynomial from
//! Goeritz matrices, signed multigraphs, and planar-diagram codes of link
//! diagrams in closed orientable surfaces.
//!
//! The crate is organized around four layers:
//!
//! * [`laurent`] — exact Laurent polynomials in the bracket variable `A`,
//!   the twist polynomials `P_n`, and the substitution `t^(1/2) = A^(-2)`.
//! * [`zeta`] — exact arithmetic at the eighth root of unity `ζ = e^(iπ/4)`,
//!   used to recover link determinants from bracket-type polynomials.
//! * [`matrix`] — symmetric integer matrices, the recursive polynomial `μ`,
//!   and Jones-polynomial recovery from Goeritz data.
//! * [`graph`] — signed multigraphs, deletion/contraction, Thistlethwaite's
//!   polynomial `τ`, and realization of arbitrary symmetric matrices as
//!   Goeritz matrices of graphs.
//! * [`diagram`] — PD-coded link diagrams with a rotation system: faces and
//!   genus, checkerboard colorings, Tait graphs, the state-sum bracket,
//!   Jones and `ν` polynomials, determinant sets, the medial construction,
//!   and Reidemeister I/II move generation.

pub mod diagram;
pub mod error;
pub mod graph;
pub mod laurent;
pub mod matrix;
pub mod zeta;

pub use error::Error;
pub use laurent::{HalfTLaurent, LaurentPoly};
pub use matrix::SymmetricIntMatrix;
pub use graph::SignedMultigraph;
pub use diagram::Diagram;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

// Every code block in the book runs under `cargo test --doc`, one module
// per chapter so a failure names its source file.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/laurent.md")]
    mod laurent {}
    #[doc = include_str!("../../../book/src/matrices.md")]
    mod matrices {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/diagrams.md")]
    mod diagrams {}
    #[doc = include_str!("../../../book/src/surfaces.md")]
    mod surfaces {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
