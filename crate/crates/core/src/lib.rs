//! Monomial ideals: primary decompositions, Noether exponents and
//! absorbing degrees.
//!
//! An ideal `I` is *n-absorbing* when any product of `n + 1` elements lying
//! in `I` already has a sub-product of `n` factors in `I`. The least such
//! `n` is the absorbing degree `ω(I)`. For monomial ideals it is computed
//! exactly in many structural cases and bracketed by certified bounds
//! otherwise; see [`omega::omega`].

pub mod certificate;
pub mod corpus;
pub mod decomposition;
pub mod error;
pub mod graph;
pub mod ideal;
pub mod json;
pub mod linear;
pub mod monomial;
pub mod omega;
pub mod oracle;
pub mod poly;
pub mod text;

pub use certificate::WitnessCertificate;
pub use decomposition::{
    canonical_primary_decomposition, standard_decomposition, IrreducibleComponent, PrimaryComponent,
};
pub use error::{Error, Result};
pub use graph::Graph;
pub use ideal::MonomialIdeal;
pub use monomial::{Exp, Monomial, Ring, VarSet};
pub use omega::{noether_exponent, omega, omega_with, OmegaOptions, OmegaResult, OmegaValue, Rule};
pub use poly::SparsePolynomial;
pub use text::parse_ideal;
