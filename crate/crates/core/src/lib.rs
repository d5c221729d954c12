pub mod checks;
pub mod cli;
pub mod coeffring;
pub mod error;
pub mod extweyl;
pub mod heckebern;
pub mod heckeim;
pub mod json;
pub mod linalg;
pub mod lincomb;
pub mod rootdata;
pub mod satake;

pub use coeffring::{LaurentScalar, ScalarFraction};
pub use error::{Error, Result};
pub use extweyl::{ExtAffElt, ReducedWord};
pub use heckebern::{BernElement, BernKey, Commutator, Generator};
pub use heckeim::{AffineHecke, ImElement, DEFAULT_BUDGET};
pub use lincomb::{Coeff, LinComb};
pub use rootdata::{CartanType, LatticeElt, LatticeKind, RootDatum, WeylElt};
pub use satake::{CenterExhaustion, GroupAlgElement};
