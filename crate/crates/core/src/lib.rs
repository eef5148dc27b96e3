//! Exact star-operation calculus on semigroup models, together with
//! decision procedures for three monoid-level constructions: a dyadic
//! monoid in characteristic `p`, a weight-graded Laurent calculus and an
//! iterated extended-Rees tower.

pub mod charp;
pub mod error;
pub mod exact;
pub mod ideal;
pub mod numerical;
pub mod props;
pub mod rees;
pub mod s21;
pub mod weight;

pub use error::{Error, Result};
pub use exact::{Dyadic, Rat};
