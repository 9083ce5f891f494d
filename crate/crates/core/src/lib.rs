//! p-competition graphs of digraphs, p-edge clique covers, and the cover
//! constructions for cycles and complements of cycles.
//!
//! A graph `G` on `n` vertices is the p-competition graph of some digraph
//! exactly when it has a p-edge clique cover with at most `n` members; the
//! [`realization`] module turns such a cover into the digraph. The
//! [`oracle`] module holds exhaustive searches used to check the
//! constructions on small instances.

pub mod competition;
pub mod covers;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod realization;

pub use competition::{common_prey_count, competition_graph, p_competition_graph};
pub use covers::{
    complement_cycle_cover, complement_cycle_cover_size, cycle_cover, lift_cover, verify_ecc,
    verify_p_ecc, CliqueCover, Verdict, Witness,
};
pub use error::{Error, Result};
pub use graph::{complement, make_cycle, Digraph, Graph, Vertex, VertexSet};
pub use oracle::{
    exact_theta_e, exact_theta_e_p, is_p_competition, maximal_cliques, Decision, Method, Outcome,
    SearchResult,
};
pub use realization::{is_acyclic, realize, realize_acyclic, satisfies_acyclic_ordering};
