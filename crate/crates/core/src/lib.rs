//! Construction and verification of generalized torsion certificates for
//! finitely presented groups of link complements and their Dehn fillings.
//!
//! An element `g ≠ 1` is a generalized torsion element when some non-empty
//! product of its conjugates `g^{a₁}⋯g^{a_k}` is the identity. A
//! [`certify::GtCertificate`] carries an explicit proof of the product
//! relation (relator insertions replayed to the empty word) and a witness
//! that `g` survives in an abelian or finite permutation quotient.

pub mod abelian;
pub mod certify;
pub mod cli;
pub mod derive;
pub mod document;
pub mod error;
pub mod presentations;
pub mod quotients;
pub mod words;

pub use error::{Error, Result};
