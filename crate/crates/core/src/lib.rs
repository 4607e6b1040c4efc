//! Exact constructions and certificates for polynomial automorphisms of C³.
//!
//! - [`polyalg`]: sparse polynomials in `x, y, z` over the rationals.
//! - [`lnd`]: derivations and the Nagata maps `N_k`.
//! - [`autos`]: polynomial maps, generator words, and the wild-family
//!   constructors.
//! - [`classify`]: semigroup membership and the rule-based tameness
//!   classifier for multidegree triples.
//! - [`reduction`]: the degree inequalities ruling out elementary and
//!   type III reductions.

pub mod autos;
pub mod check;
pub mod classify;
pub mod lnd;
pub mod polyalg;
pub mod reduction;

pub use autos::{Generator, Multidegree, PolyMap};
pub use classify::{classify_tame, Classification, TameStatus};
pub use polyalg::{Degree, Monomial, Polynomial, Var};
