//! Benchmark fixtures shared by the criterion benches.

use pcomp_core::{complement, make_cycle, Graph};

pub fn cycle(n: usize) -> Graph {
    make_cycle(n).expect("n >= 3")
}

pub fn co_cycle(n: usize) -> Graph {
    complement(&cycle(n))
}
