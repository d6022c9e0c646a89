//! Fixtures shared by the benchmarks.

use std::sync::Arc;

use ltvcl_core::context::{parse_context, FuzzyContext};
use ltvcl_core::lia::{Algebra, Lia};

pub const TABLE2: &str = "alias paper\nattributes m1 m2 m3\ng1 a b I\ng2 b O a\n";

pub fn table2() -> FuzzyContext {
    parse_context(TABLE2).expect("fixture parses")
}

/// A context over L6 whose cells are taken from `cells`, cycling as needed.
pub fn context_from_indices(n_obj: usize, n_attr: usize, cells: &[usize]) -> FuzzyContext {
    let alg = Arc::new(Algebra::l6());
    let els = alg.elements();
    let matrix = (0..n_obj)
        .map(|g| {
            (0..n_attr)
                .map(|m| els[cells[(g * n_attr + m) % cells.len()] % els.len()].clone())
                .collect()
        })
        .collect();
    FuzzyContext::new(
        alg,
        (1..=n_obj).map(|g| format!("g{g}")).collect(),
        (1..=n_attr).map(|m| format!("m{m}")).collect(),
        matrix,
    )
    .expect("valid shape")
}
