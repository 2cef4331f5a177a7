//! Finite categories, partial semigroups and finite locales as explicit tables.
//!
//! The crate builds two parallel completions over small, fully enumerated
//! structures and checks them against brute-force oracles:
//!
//! * categories and partial semigroups: the Karoubi envelope, skeleta, taut
//!   completions, the adjunction between categories and partial semigroups,
//!   and the equivalence between taut categories and catales;
//! * spaces and meet-semilattices: the opens/points adjunction, soberification
//!   and spatialization.
//!
//! Every structure is a table indexed by position. Morphisms, elements and
//! points are identified by their index, names are carried for display and
//! for the JSON documents in [`doc`].
//!
//! ```
//! use catale::fincat::FinCategory;
//! use catale::smallgen::fixtures;
//!
//! let t3 = fixtures::transformation_monoid(3).unwrap();
//! let taut = catale::fincat::taut_completion(&t3);
//! assert_eq!(taut.category.object_count(), 3);
//! assert!(taut.category.is_taut());
//! # let _: &FinCategory = &taut.category;
//! ```

pub mod bridge;
pub mod cli;
pub mod doc;
pub mod error;
pub mod fincat;
pub mod locales;
pub mod psemi;
pub mod smallgen;
pub mod suite;

pub use error::{Error, Result};
