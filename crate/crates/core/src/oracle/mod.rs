//! Brute-force ground truth for small instances.
//!
//! Every search here is exhaustive up to an explicit vertex guard. The
//! guards are parameters with conservative defaults, not hard limits.

mod cliques;
mod decide;
mod theta_e;
mod theta_e_p;

pub use cliques::{maximal_cliques, maximal_cliques_with_guard, DEFAULT_CLIQUE_GUARD};
pub use decide::{
    decide_routes, is_p_competition, is_p_competition_with_guard, Decision, Method, Routes,
};
pub use theta_e::{exact_theta_e, exact_theta_e_with_guard, DEFAULT_THETA_E_GUARD};
pub use theta_e_p::{exact_theta_e_p, exact_theta_e_p_with_guard, DEFAULT_THETA_E_P_GUARD};

use serde::Serialize;

use crate::covers::CliqueCover;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// The minimum is exactly this value.
    Exact(usize),
    /// No cover of size at most this bound exists.
    ExceedsBound(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(into = "SearchResultRepr")]
pub struct SearchResult {
    pub outcome: Outcome,
    /// An optimal cover; present exactly when the outcome is `Exact`.
    pub certificate: Option<CliqueCover>,
    pub nodes_explored: u64,
}

impl SearchResult {
    pub fn value(&self) -> Option<usize> {
        match self.outcome {
            Outcome::Exact(k) => Some(k),
            Outcome::ExceedsBound(_) => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.outcome, Outcome::Exact(_))
    }
}

#[derive(Serialize)]
struct SearchResultRepr {
    outcome: &'static str,
    value: Option<usize>,
    certificate: Option<CliqueCover>,
    nodes: u64,
}

impl From<SearchResult> for SearchResultRepr {
    fn from(r: SearchResult) -> Self {
        SearchResultRepr {
            outcome: match r.outcome {
                Outcome::Exact(_) => "exact",
                Outcome::ExceedsBound(_) => "exceeds-bound",
            },
            value: r.value(),
            certificate: r.certificate,
            nodes: r.nodes_explored,
        }
    }
}
