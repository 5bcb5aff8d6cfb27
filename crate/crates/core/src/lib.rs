//! Simple cubic graphs with long optimal graphic-TSP tours.
//!
//! The crate builds three families of cubic graphs from composable 2-pole
//! and 3-pole gadgets, computes the minimum excess `2c + v` over even
//! factors (`c` circuits, `v` isolated vertices), and from it the exact
//! graphic-TSP length `|V| - 2 + min excess` together with a tour certificate.

pub mod construct;
pub mod enumerate;
pub mod error;
pub mod excess;
pub mod factor;
pub mod graph;
pub mod io;
pub mod par;
pub mod planarity;
pub mod random;
mod search;
pub mod structure;
pub mod symmetry;
pub mod tsp;
pub mod verify;

pub use construct::{family, ClosedForm, Family, FamilyKind, Seed};
pub use error::{Error, Result};
pub use excess::{min_excess, per_pair_q2, pole_triple, ExcessTriple, SolverConfig, Strategy};
pub use factor::{factor_stats, EvenFactor, FactorStats};
pub use graph::{Edge, Graph, Pole, Vertex};
pub use par::Execution;
pub use tsp::{held_karp_tsp, tour_from_even_factor, tsp_length, Tour, TspResult};
