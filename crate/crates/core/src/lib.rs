//! Exact computation of chirotropical Dressians from ray data.
//!
//! The pipeline takes the rays of a Dressian `Dr(k, n)` modulo lineality,
//! keeps the rays that satisfy the chirotropical three-term relations of a
//! chirotope, links rays whose sum stays inside, and reads the maximal cones
//! off the maximal cliques of that compatibility graph. Lower-dimensional
//! faces come from intersecting maximal cones.
//!
//! All arithmetic is exact: coordinates are integers, ranks come from
//! fraction-free elimination, and the chart module uses big rationals.

pub mod bareiss;
pub mod catalog;
pub mod charts;
pub mod chirotope;
pub mod cliques;
pub mod dressian;
pub mod error;
pub mod fan;
pub mod graph;
pub mod lineality;
pub mod membership;
pub mod par;
pub mod pluecker;
pub mod rays;
pub mod realizability;
pub mod relations;
pub mod subsets;

pub use chirotope::{expand_orbit, full_orbit, Chirotope, ChirotopeSet};
pub use error::{Error, Result};
pub use fan::Fan;
pub use graph::{CompatibilityGraph, GraphMode};
pub use lineality::{equal_mod_lineality, rank_mod_lineality, LinealityBasis};
pub use membership::{satisfy_eqn, satisfy_eqn_chi, ChiPredicate};
pub use pluecker::PlueckerVector;
pub use relations::{generate_three_term, relations_containing, RelationSet, ThreeTermRelation};
pub use subsets::{lex_rank, lex_unrank, SubsetIndex};
