//! Finite rings given by Cayley tables, their element classes and radicals,
//! nil-clean and weakly nil-clean decompositions, structural
//! classification, and a battery that checks characterization theorems
//! against concrete rings.

pub mod battery;
pub mod classes;
pub mod cleanness;
pub mod construct;
pub mod error;
pub mod expr;
pub mod graph;
pub mod group;
pub mod ideal;
pub mod iso;
pub mod map;
pub mod ring;
pub mod structure;
pub mod tablefile;

pub use error::{Error, Result};
pub use ring::{Elem, FiniteRing};
