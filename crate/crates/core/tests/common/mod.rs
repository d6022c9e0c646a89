#![allow(dead_code)]

use std::sync::Arc;

use ltvcl_core::context::{parse_context, FuzzyContext};
use ltvcl_core::lia::{Algebra, Lia, TruthValue};
use rand::Rng;

pub const TABLE2: &str = "alias paper\nattributes m1 m2 m3\ng1 a b I\ng2 b O a\n";

pub fn table2() -> FuzzyContext {
    parse_context(TABLE2).unwrap()
}

/// A context with random cells, named `g1..` and `m1..`.
pub fn random_context<R: Rng>(
    rng: &mut R,
    alg: &Arc<Algebra>,
    n_obj: usize,
    n_attr: usize,
) -> FuzzyContext {
    let elements = alg.elements();
    let matrix = (0..n_obj)
        .map(|_| {
            (0..n_attr)
                .map(|_| elements[rng.gen_range(0..elements.len())].clone())
                .collect()
        })
        .collect();
    FuzzyContext::new(
        alg.clone(),
        (1..=n_obj).map(|g| format!("g{g}")).collect(),
        (1..=n_attr).map(|m| format!("m{m}")).collect(),
        matrix,
    )
    .unwrap()
}

/// `ctx` with one more column named `name`.
pub fn with_column(ctx: &FuzzyContext, name: &str, column: Vec<TruthValue>) -> FuzzyContext {
    let mut attributes = ctx.attributes().to_vec();
    attributes.push(name.to_string());
    let matrix = ctx
        .matrix()
        .iter()
        .zip(column)
        .map(|(row, v)| {
            let mut row = row.clone();
            row.push(v);
            row
        })
        .collect();
    FuzzyContext::new(
        ctx.algebra().clone(),
        ctx.objects().to_vec(),
        attributes,
        matrix,
    )
    .unwrap()
}

/// Cellwise meet of the listed columns.
pub fn meet_column(ctx: &FuzzyContext, src: &[usize]) -> Vec<TruthValue> {
    let alg = ctx.algebra();
    (0..ctx.objects().len())
        .map(|g| {
            src.iter()
                .fold(alg.top(), |acc, &m| alg.meet(&acc, ctx.cell(g, m)).unwrap())
        })
        .collect()
}

/// Every fuzzy set of length `len` over `domain`, in odometer order.
pub fn all_vectors(domain: &[TruthValue], len: usize) -> Vec<Vec<TruthValue>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                domain.iter().map(move |x| {
                    let mut w = v.clone();
                    w.push(x.clone());
                    w
                })
            })
            .collect();
    }
    out
}
