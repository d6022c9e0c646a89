use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::context::{AttributeProvenance, FuzzyContext};
use crate::lia::{Lia, TruthValue};

use super::{Aligned, TacitError};

/// The sufficient condition a new attribute satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremKind {
    /// The column is the meet of two original columns.
    PairMeet,
    /// The column is the meet of some other number of original columns.
    KMeet,
    /// Every cell of the column is top.
    Top,
}

impl fmt::Display for TheoremKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TheoremKind::PairMeet => "pair-meet",
            TheoremKind::KMeet => "k-meet",
            TheoremKind::Top => "top",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCheck {
    pub attribute: String,
    /// `None` when no sufficient condition applies.
    pub theorem: Option<TheoremKind>,
    pub satisfied: bool,
    /// Original attributes whose meet the column equals.
    pub sources: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Smallest subset searched; 1 also accepts copies of an original column.
    pub min_arity: usize,
    /// Largest subset searched, `None` for all original attributes.
    pub max_arity: Option<usize>,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            min_arity: 2,
            max_arity: None,
        }
    }
}

fn meet_kind(arity: usize) -> TheoremKind {
    if arity == 2 {
        TheoremKind::PairMeet
    } else {
        TheoremKind::KMeet
    }
}

pub fn classify_columns(
    base: &FuzzyContext,
    ext: &FuzzyContext,
) -> Result<Vec<TheoremCheck>, TacitError> {
    classify_columns_with(base, ext, &ClassifyOptions::default())
}

/// Checks every attribute of `ext` absent from `base` against the sufficient
/// conditions for a congener extension.
///
/// An all-top column is `Top`. A column with recorded meet provenance is
/// checked against that meet. Otherwise original-column subsets are searched
/// by size, then lexicographically, for an exact meet match.
pub fn classify_columns_with(
    base: &FuzzyContext,
    ext: &FuzzyContext,
    opts: &ClassifyOptions,
) -> Result<Vec<TheoremCheck>, TacitError> {
    let al = Aligned::new(base, ext)?;
    Ok(classify_aligned(&al, opts))
}

pub(crate) fn classify_aligned(al: &Aligned, opts: &ClassifyOptions) -> Vec<TheoremCheck> {
    let ext = &al.ext;
    let alg = ext.algebra();
    let names = ext.attributes();
    let n_base = al.n_base();
    let meet_of = |src: &[usize], g: usize| -> TruthValue {
        src.iter().fold(alg.top(), |acc, &m| {
            alg.meet(&acc, ext.cell(g, m)).expect("closed")
        })
    };
    let sources = |src: &[usize]| src.iter().map(|&m| names[m].clone()).collect::<Vec<_>>();

    al.new_columns()
        .map(|n| {
            let column = ext.column(n);
            let rows = 0..column.len();
            let check = |theorem, satisfied, src: &[usize]| TheoremCheck {
                attribute: names[n].clone(),
                theorem,
                satisfied,
                sources: sources(src),
            };
            if column.iter().all(|v| *v == alg.top()) {
                return check(Some(TheoremKind::Top), true, &[]);
            }
            match &ext.provenance()[n] {
                AttributeProvenance::ConstantTop => {
                    return check(Some(TheoremKind::Top), false, &[])
                }
                AttributeProvenance::MeetOf(src) => {
                    let ok = rows.clone().all(|g| meet_of(src, g) == column[g]);
                    return check(Some(meet_kind(src.len())), ok, src);
                }
                AttributeProvenance::Original => {}
            }
            // only columns lying above the target can take part in its meet
            let above: Vec<usize> = (0..n_base)
                .filter(|&m| {
                    rows.clone()
                        .all(|g| alg.leq(&column[g], ext.cell(g, m)).expect("same algebra"))
                })
                .collect();
            let lo = opts.min_arity.max(1);
            let hi = opts.max_arity.unwrap_or(n_base).min(above.len());
            for k in lo..=hi {
                if let Some(src) = above
                    .iter()
                    .copied()
                    .combinations(k)
                    .find(|src| rows.clone().all(|g| meet_of(src, g) == column[g]))
                {
                    return check(Some(meet_kind(k)), true, &src);
                }
            }
            check(None, false, &[])
        })
        .collect()
}
