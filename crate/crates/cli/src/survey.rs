use std::fmt::Write as _;
use std::ops::RangeInclusive;

use pcomp_core::oracle::decide_routes;
use pcomp_core::Method;
use serde::Serialize;

use crate::{family_graph, Family};

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub n: usize,
    pub p: usize,
    /// `None` when neither route applies.
    pub answer: Option<bool>,
    pub method: Option<Method>,
    pub cover_size: Option<usize>,
    /// Whether the routes agree; `None` unless both ran.
    pub agree: Option<bool>,
}

pub fn survey(
    family: Family,
    ns: RangeInclusive<usize>,
    ps: RangeInclusive<usize>,
    guard: usize,
) -> Vec<Row> {
    let mut rows = Vec::new();
    for n in ns {
        for p in ps.clone() {
            rows.push(row(family, n, p, guard));
        }
    }
    rows
}

fn row(family: Family, n: usize, p: usize, guard: usize) -> Row {
    let skipped = Row {
        n,
        p,
        answer: None,
        method: None,
        cover_size: None,
        agree: None,
    };
    let Ok(g) = family_graph(family, n) else {
        return skipped;
    };
    let Ok(routes) = decide_routes(&g, p, guard) else {
        return skipped;
    };
    match (routes.constructive, routes.oracle) {
        (Some((answer, size)), Some(result)) => Row {
            n,
            p,
            answer: Some(answer),
            method: Some(Method::Both),
            cover_size: size.or(result.value()),
            agree: Some(answer == result.is_exact()),
        },
        (Some((answer, size)), None) => Row {
            n,
            p,
            answer: Some(answer),
            method: Some(Method::Construct),
            cover_size: size,
            agree: None,
        },
        (None, Some(result)) => Row {
            n,
            p,
            answer: Some(result.is_exact()),
            method: Some(Method::Oracle),
            cover_size: result.value(),
            agree: None,
        },
        (None, None) => skipped,
    }
}

pub fn to_tsv(rows: &[Row]) -> String {
    let mut out = String::from("n\tp\tdecision\tmethod\tcover_size\tagree\n");
    for r in rows {
        let decision = match r.answer {
            Some(true) => "yes",
            Some(false) => "no",
            None => "skipped",
        };
        let method = match r.method {
            Some(Method::Construct) => "construct",
            Some(Method::Oracle) => "oracle",
            Some(Method::Both) => "both",
            None => "-",
        };
        let size = r
            .cover_size
            .map_or_else(|| "-".to_string(), |s| s.to_string());
        let agree = match r.agree {
            Some(true) => "yes",
            Some(false) => "no",
            None => "-",
        };
        let _ = writeln!(
            out,
            "{}\t{}\t{decision}\t{method}\t{size}\t{agree}",
            r.n, r.p
        );
    }
    out
}
