use std::collections::HashSet;

use itertools::Itertools;

use crate::lia::{meet_all, Lia, TruthValue};

use super::{AttributeProvenance, ContextError, FuzzyContext};

/// Controls which candidate attributes [`extend_context`] generates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionConfig {
    /// Largest number of original attributes combined in one meet column.
    /// Must be at least 2; values above the attribute count are clamped.
    pub max_meet_arity: usize,
    /// Append the constant-top column.
    pub include_top_column: bool,
    /// Drop candidates whose column duplicates an existing or earlier one.
    pub novelty_filter: bool,
    /// Stop after this many meet columns have been added.
    pub meet_limit: Option<usize>,
}

impl Default for ExtensionConfig {
    fn default() -> Self {
        ExtensionConfig {
            max_meet_arity: 2,
            include_top_column: true,
            novelty_filter: true,
            meet_limit: None,
        }
    }
}

impl ExtensionConfig {
    /// The two-column extension of the worked example: the meet of the first
    /// novel attribute pair, then the top column.
    pub fn paper() -> Self {
        ExtensionConfig {
            meet_limit: Some(1),
            ..Self::default()
        }
    }
}

/// Generates an attribute-extended context.
///
/// Every subset of original attributes with between 2 and `max_meet_arity`
/// members yields a candidate column holding the cellwise meet of its
/// members; subsets are visited by ascending size, then lexicographically.
/// A constant-top column follows when configured. Original columns are left
/// untouched and each new column records its provenance. New attributes are
/// named `m{k}`, continuing after the original count and skipping taken names.
pub fn extend_context(
    base: &FuzzyContext,
    cfg: &ExtensionConfig,
) -> Result<FuzzyContext, ContextError> {
    if cfg.max_meet_arity < 2 {
        return Err(ContextError::Argument(format!(
            "max_meet_arity must be at least 2, got {}",
            cfg.max_meet_arity
        )));
    }
    if !base.is_original() {
        return Err(ContextError::Argument(
            "context already contains derived attributes".into(),
        ));
    }
    let alg = base.algebra().clone();
    let n_attr = base.attributes().len();
    let mut out = base.clone();
    let mut columns: HashSet<Vec<TruthValue>> = (0..n_attr).map(|m| base.column(m)).collect();
    let mut taken: HashSet<String> = base.attributes().iter().cloned().collect();
    let mut next_k = n_attr + 1;
    let mut fresh_name = || loop {
        let name = format!("m{next_k}");
        next_k += 1;
        if taken.insert(name.clone()) {
            return name;
        }
    };

    let mut added = 0usize;
    'arity: for k in 2..=cfg.max_meet_arity.min(n_attr) {
        for subset in (0..n_attr).combinations(k) {
            if cfg.meet_limit.is_some_and(|lim| added >= lim) {
                break 'arity;
            }
            let column = (0..base.objects().len())
                .map(|g| meet_all(alg.as_ref(), subset.iter().map(|&m| base.cell(g, m))))
                .collect::<Result<Vec<_>, _>>()?;
            if cfg.novelty_filter && columns.contains(&column) {
                continue;
            }
            columns.insert(column.clone());
            out.push_column(fresh_name(), column, AttributeProvenance::MeetOf(subset));
            added += 1;
        }
    }

    if cfg.include_top_column {
        let column = vec![alg.top(); base.objects().len()];
        if !(cfg.novelty_filter && columns.contains(&column)) {
            out.push_column(fresh_name(), column, AttributeProvenance::ConstantTop);
        }
    }
    Ok(out)
}
