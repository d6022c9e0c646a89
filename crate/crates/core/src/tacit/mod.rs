//! Tacit attributes: extensions of a context that add attributes without
//! changing its concepts.
//!
//! An attribute-extended context `K_M` of `K` is *congener* when both have the
//! same family of extents. Every extent of `K` is an extent of `K_M`, so
//! congener means no new extents appear, and equivalently the two closure
//! operators on object sets coincide.

mod classify;
mod mine;

use std::collections::HashSet;
use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::context::{restrict_agrees, AttributeProvenance, ContextError, FuzzyContext};
use crate::galois::{
    domain_indices, enumerate_concepts, Compiled, ConceptLattice, Domain, FuzzySet, GaloisError,
    ScanOptions, Side,
};
use crate::lia::OpTables;

pub use classify::{
    classify_columns, classify_columns_with, ClassifyOptions, TheoremCheck, TheoremKind,
};
pub use mine::{
    extend_concepts_fast, mine, mine_detailed, MiningReport, MiningRun, TacitAttribute,
};

#[derive(Debug, Error)]
pub enum TacitError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("fast extension refused, unclassified attributes: {}", .0.join(", "))]
    Unclassified(Vec<String>),
    #[error(transparent)]
    Context(#[from] ContextError),
    #[error(transparent)]
    Galois(#[from] GaloisError),
}

/// The extended context rearranged to the base's object order, with the
/// base attributes first and the new ones after them.
#[derive(Debug, Clone)]
pub(crate) struct Aligned {
    pub(crate) base: FuzzyContext,
    pub(crate) ext: FuzzyContext,
}

impl Aligned {
    pub(crate) fn new(base: &FuzzyContext, ext: &FuzzyContext) -> Result<Self, TacitError> {
        if !restrict_agrees(base, ext).map_err(|e| TacitError::Precondition(e.to_string()))? {
            return Err(TacitError::Precondition(
                "extended context does not agree with the base on the base attributes".into(),
            ));
        }
        let base_names: HashSet<&str> = base.attributes().iter().map(String::as_str).collect();
        let mut order: Vec<usize> = base
            .attributes()
            .iter()
            .map(|a| ext.attribute_index(a).expect("checked by restrict_agrees"))
            .collect();
        order.extend(
            (0..ext.attributes().len())
                .filter(|&m| !base_names.contains(ext.attributes()[m].as_str())),
        );
        let position = |ext_m: usize| order.iter().position(|&m| m == ext_m);

        let rows = base
            .objects()
            .iter()
            .map(|o| ext.object_index(o).expect("checked by restrict_agrees"));
        let matrix = rows
            .map(|g| order.iter().map(|&m| ext.cell(g, m).clone()).collect())
            .collect();
        let attributes = order.iter().map(|&m| ext.attributes()[m].clone()).collect();
        let mut aligned = FuzzyContext::new(
            ext.algebra().clone(),
            base.objects().to_vec(),
            attributes,
            matrix,
        )?
        .with_aliases(ext.aliases().to_vec())?;
        let provenance = order
            .iter()
            .enumerate()
            .map(|(k, &m)| match &ext.provenance()[m] {
                _ if k < base.attributes().len() => AttributeProvenance::Original,
                AttributeProvenance::MeetOf(src) => {
                    let mapped: Option<Vec<usize>> = src.iter().map(|&s| position(s)).collect();
                    match mapped {
                        Some(mut v) if v.iter().all(|&i| i < base.attributes().len()) => {
                            v.sort_unstable();
                            AttributeProvenance::MeetOf(v)
                        }
                        _ => AttributeProvenance::Original,
                    }
                }
                p => p.clone(),
            })
            .collect();
        aligned.set_provenance(provenance);
        Ok(Aligned {
            base: base.clone(),
            ext: aligned,
        })
    }

    pub(crate) fn n_base(&self) -> usize {
        self.base.attributes().len()
    }

    pub(crate) fn new_columns(&self) -> std::ops::Range<usize> {
        self.n_base()..self.ext.attributes().len()
    }
}

/// The scan domain used for both contexts of a comparison: a generated
/// domain is widened to cover the cells of the extended context.
pub(crate) fn shared_options(opts: &ScanOptions, ext: &FuzzyContext) -> ScanOptions {
    let domain = match &opts.domain {
        Domain::Full => Domain::Full,
        Domain::Generated => Domain::GeneratedBy(ext.cell_values()),
        Domain::GeneratedBy(seeds) => {
            let mut all = seeds.clone();
            all.extend(ext.cell_values());
            Domain::GeneratedBy(all)
        }
    };
    ScanOptions {
        domain,
        ..opts.clone()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongenerReport {
    pub is_congener: bool,
    pub base_extent_count: usize,
    pub extended_extent_count: usize,
    /// Extents found in exactly one of the two lattices, base-only first.
    pub witnesses: Vec<FuzzySet>,
    /// Whether the Hasse diagrams coincide when matched by extent.
    pub covers_preserved: bool,
}

pub(crate) fn compare_lattices(base: &ConceptLattice, ext: &ConceptLattice) -> CongenerReport {
    let eb = base.extents();
    let ee = ext.extents();
    let witnesses: Vec<FuzzySet> = base
        .concepts()
        .iter()
        .filter(|c| !ee.contains(&c.extent))
        .chain(ext.concepts().iter().filter(|c| !eb.contains(&c.extent)))
        .map(|c| c.extent.clone())
        .collect();
    let edges = |l: &ConceptLattice| -> HashSet<(FuzzySet, FuzzySet)> {
        l.covers()
            .iter()
            .map(|&(i, j)| (l.concept(i).extent.clone(), l.concept(j).extent.clone()))
            .collect()
    };
    CongenerReport {
        is_congener: witnesses.is_empty(),
        base_extent_count: eb.len(),
        extended_extent_count: ee.len(),
        witnesses,
        covers_preserved: edges(base) == edges(ext),
    }
}

/// Compares the extent families of `base` and `ext` by enumerating both.
///
/// Objects and attributes are matched by name; `ext` must agree with `base`
/// on every base attribute. Witnesses are reported in the base's object order.
pub fn is_congener(
    base: &FuzzyContext,
    ext: &FuzzyContext,
    opts: &ScanOptions,
) -> Result<CongenerReport, TacitError> {
    let al = Aligned::new(base, ext)?;
    let opts = shared_options(opts, &al.ext);
    let lb = enumerate_concepts(&al.base, &opts)?;
    let le = enumerate_concepts(&al.ext, &opts)?;
    Ok(compare_lattices(&lb, &le))
}

/// Index-level view of an aligned pair for the pointwise condition.
struct Pointwise {
    tables: Arc<OpTables>,
    base: Compiled,
    ext: Compiled,
    new_columns: std::ops::Range<usize>,
}

impl Pointwise {
    fn new(al: &Aligned) -> Result<Self, TacitError> {
        let tables =
            Arc::new(OpTables::build(al.base.algebra().as_ref()).map_err(GaloisError::from)?);
        Ok(Pointwise {
            base: Compiled::with_tables(&al.base, tables.clone())?,
            ext: Compiled::with_tables(&al.ext, tables.clone())?,
            tables,
            new_columns: al.new_columns(),
        })
    }

    fn holds(&self, a: &[u16]) -> bool {
        let t = &self.tables;
        let closure = self.base.closure(a);
        let b_plus = self.ext.intent(a);
        self.new_columns.clone().all(|n| {
            closure
                .iter()
                .enumerate()
                .all(|(g, &c)| t.leq(c, t.imp(b_plus[n], self.ext.cell(g, n))))
        })
    }
}

/// For one object set `A`: whether the base closure of `A` lies, pointwise,
/// below the extent of every new attribute `n` taken to the degree `A` has it
/// in the extended context, i.e. `f2(f1 A)(g) ≤ f1⁺(A)(n) → I⁺(g, n)`.
///
/// This holds for every `A` exactly when `ext` is congener to `base`.
pub fn check_pointwise_condition(
    base: &FuzzyContext,
    ext: &FuzzyContext,
    a: &FuzzySet,
) -> Result<bool, TacitError> {
    let al = Aligned::new(base, ext)?;
    let pw = Pointwise::new(&al)?;
    crate::galois::derive_intent(base, a)?;
    let idx = pw.base.to_indices(a)?;
    Ok(pw.holds(&idx))
}

/// Which object sets the pointwise condition is quantified over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantifier {
    /// Every object set drawn from the scan domain.
    AllSets,
    /// Only the extents of the base context. The condition always holds
    /// there, so this reading never detects a new extent.
    BaseExtents,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointwiseSummary {
    pub quantifier: Quantifier,
    pub checked: u128,
    /// The first object set violating the condition, in scan order.
    pub counterexample: Option<FuzzySet>,
}

impl PointwiseSummary {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Evaluates the pointwise condition over every object set of a quantifier.
pub fn quantify_pointwise_condition(
    base: &FuzzyContext,
    ext: &FuzzyContext,
    quantifier: Quantifier,
    opts: &ScanOptions,
) -> Result<PointwiseSummary, TacitError> {
    let al = Aligned::new(base, ext)?;
    let pw = Pointwise::new(&al)?;
    let opts = shared_options(opts, &al.ext);
    let (checked, counterexample) = match quantifier {
        Quantifier::BaseExtents => {
            let lb = enumerate_concepts(&al.base, &opts)?;
            let bad = lb
                .concepts()
                .iter()
                .find(|c| !pw.holds(&pw.base.to_indices(&c.extent).expect("own values")))
                .map(|c| c.extent.clone());
            (lb.len() as u128, bad)
        }
        Quantifier::AllSets => {
            let domain = domain_indices(&pw.base, &al.ext, &opts.domain)?;
            let k = al.base.objects().len();
            let total = (domain.len() as u128)
                .checked_pow(k as u32)
                .unwrap_or(u128::MAX);
            if total > opts.budget || total > u64::MAX as u128 {
                return Err(GaloisError::Budget {
                    engine: opts.engine,
                    candidates: total,
                    budget: opts.budget,
                }
                .into());
            }
            let d = domain.len() as u64;
            let decode = |mut code: u64| -> Vec<u16> {
                (0..k)
                    .map(|_| {
                        let v = domain[(code % d) as usize];
                        code /= d;
                        v
                    })
                    .collect()
            };
            let bad = (0..total as u64)
                .into_par_iter()
                .find_first(|&c| !pw.holds(&decode(c)))
                .map(|c| pw.base.to_values(Side::Objects, &decode(c)));
            (total, bad)
        }
    };
    Ok(PointwiseSummary {
        quantifier,
        checked,
        counterexample,
    })
}
