//! Restricted matching field ideals of Schubert, opposite Schubert and
//! Richardson varieties in Grassmannians and flag varieties.
//!
//! The [`ideal`] module decides zero / toric / non-toric by brute force on
//! the degree-2 kernel of the monomial map; [`classifiers`] holds the
//! closed-form descriptions of the same sets. [`survey`] and [`verify`]
//! drive both over whole families.

pub mod cache;
pub mod classifiers;
pub mod combinatorics;
pub mod error;
pub mod ideal;
pub mod matching_field;
pub mod survey;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
