//! Deciding whether a graph is a p-competition graph.
//!
//! `G` on `n` vertices is a p-competition graph iff it has a p-edge clique
//! cover with at most `n` members. Two routes answer this:
//!
//! * constructive, for graphs that are labeled exactly as `C_n` (`n >= 4`) or
//!   the complement of `C_n` (`n >= 5`): the cycle answer is `n >= p + 3`,
//!   and a complement is accepted when its lifted cover fits in `n` sets
//!   (otherwise this route has no answer);
//! * oracle, for `n` within the search guard: `exact_theta_e_p(g, p, n)`.
//!
//! When both routes answer they must agree.

use serde::Serialize;

use super::{exact_theta_e_p_with_guard, SearchResult, DEFAULT_THETA_E_P_GUARD};
use crate::covers::{complement_cycle_cover_size, cycle_cover};
use crate::error::{invalid, Error, Result};
use crate::graph::{complement, make_cycle, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Construct,
    Oracle,
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub answer: bool,
    pub method: Method,
    /// Size of the constructed p-edge clique cover, when one was built.
    pub constructed: Option<usize>,
    /// `θ_e^p(g)` from the oracle, when it ran and found a cover.
    pub oracle_value: Option<usize>,
}

impl Decision {
    /// Size of the cover backing a positive answer.
    pub fn cover_size(&self) -> Option<usize> {
        self.constructed.or(self.oracle_value)
    }
}

pub fn is_p_competition(g: &Graph, p: usize) -> Result<Decision> {
    is_p_competition_with_guard(g, p, DEFAULT_THETA_E_P_GUARD)
}

pub fn is_p_competition_with_guard(g: &Graph, p: usize, guard: usize) -> Result<Decision> {
    let routes = decide_routes(g, p, guard)?;
    let n = g.n();
    match (routes.constructive, routes.oracle) {
        (Some((answer, constructed)), Some(result)) => {
            if answer != result.is_exact() {
                return Err(Error::Disagreement(format!(
                    "n = {n}, p = {p}: construction says {answer}, exhaustive search says {}",
                    result.is_exact()
                )));
            }
            Ok(Decision { answer, method: Method::Both, constructed, oracle_value: result.value() })
        }
        (Some((answer, constructed)), None) => {
            Ok(Decision { answer, method: Method::Construct, constructed, oracle_value: None })
        }
        (None, Some(result)) => Ok(Decision {
            answer: result.is_exact(),
            method: Method::Oracle,
            constructed: None,
            oracle_value: result.value(),
        }),
        (None, None) => Err(Error::Unsupported(format!(
            "no construction settles this graph for p = {p} and n = {n} exceeds the search guard {guard}"
        ))),
    }
}

/// The answers of both routes, without reconciling them.
#[derive(Clone, Debug)]
pub struct Routes {
    /// `(answer, size of the constructed cover)` when a construction settles
    /// the question.
    pub constructive: Option<(bool, Option<usize>)>,
    /// Search for a cover of at most `n` members, when `n` is within the guard.
    pub oracle: Option<SearchResult>,
}

pub fn decide_routes(g: &Graph, p: usize, guard: usize) -> Result<Routes> {
    if p < 1 {
        return Err(invalid("p must be at least 1"));
    }
    let n = g.n();
    let constructive = constructive_answer(g, p)?;
    let oracle = if n <= guard {
        Some(exact_theta_e_p_with_guard(g, p, n, guard)?)
    } else {
        None
    };
    Ok(Routes {
        constructive,
        oracle,
    })
}

/// `Some((answer, cover size))` when a construction settles the question.
fn constructive_answer(g: &Graph, p: usize) -> Result<Option<(bool, Option<usize>)>> {
    let n = g.n();
    // C_3 = K_3 is a p-competition graph for p <= 3, so the cycle law starts at n = 4
    if n >= 4 && *g == make_cycle(n)? {
        return Ok(Some(match cycle_cover(n, p) {
            Ok(f) => (true, Some(f.len())),
            Err(Error::Infeasible(_)) => (false, None),
            Err(e) => return Err(e),
        }));
    }
    if n >= 5 && *g == complement(&make_cycle(n)?) {
        let lifted = complement_cycle_cover_size(n)? + p - 1;
        return Ok((lifted <= n).then_some((true, Some(lifted))));
    }
    Ok(None)
}
