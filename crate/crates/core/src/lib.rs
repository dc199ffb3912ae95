//! Finite posets, the order on their antichains, and the embedding of a
//! poset into maps from the poset to its antichains via
//! `a ↦ f_a`, `f_a(x) = Max L(a, x)`.
//!
//! Modules:
//! - [`poset`]: construction, closure, covers, cones and maximal elements
//! - [`antichain`]: enumeration of antichains and the antichain poset
//! - [`cayley`]: the maps `f_a`, their pointwise order and the embedding check
//! - [`lattice`]: join/meet tables and homomorphism counterexamples
//! - [`oracle`]: seeded random posets and brute-force isomorphism
//! - [`cli`]: the `posetc` command line

pub mod antichain;
pub mod bits;
pub mod cayley;
pub mod cli;
mod error;
pub mod fixtures;
pub mod lattice;
pub mod oracle;
pub mod poset;
pub mod render;
pub mod text;
mod witness;

pub use antichain::{
    all_antichains, antichain_poset, powerset_order_status, subset_leq, Antichain,
    AntichainPoset, EnumLimit, PowersetOrderStatus, DEFAULT_ENUM_CAP,
};
pub use cayley::{cayley_map, embed, image_subposet, map_leq, verify_embedding, CayleyMap, MapFamily};
pub use error::{Error, OrderViolation, Result};
pub use lattice::{
    join_homomorphism_witness, lattice_tables, pointwise_join, singleton_meet_check,
    HomomorphismReport, LatticeOp, LatticeTables,
};
pub use oracle::{are_isomorphic, random_poset, GenConfig};
pub use poset::{validate_partial_order, ElementId, ElementSet, FinitePoset};
pub use text::{parse_poset, write_poset};
pub use witness::{Law, OrderWitness};
