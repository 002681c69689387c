//! Symbolic dynamics of Lorenz maps.
//!
//! Words over `{L, R}` (finite, closed by a terminal `0`, or periodic) are the
//! common currency. On top of them sit the symbolic Farey trees, Farey pairs and
//! kneading admissibility ([`farey`]), the renormalization `*`-product and the
//! torus syllable-permutation classifier ([`starprod`]), Lorenz braids and their
//! invariants ([`braids`]), and the ten hyperbolic families built from Farey
//! pairs together with their certificates ([`families`]).

pub mod braids;
pub mod error;
pub mod families;
pub mod farey;
pub mod starprod;
pub mod words;

pub use error::{Error, Result};
pub use words::{FiniteWord, Letter, PeriodicWord, Word};
