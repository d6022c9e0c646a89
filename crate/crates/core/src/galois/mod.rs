//! The Galois connection of a fuzzy context and its concept lattice.
//!
//! For an object set `A` and attribute set `B`:
//!
//! ```text
//! f1(A)(m) = ⋀_g (A(g) → I(g, m))        derive_intent
//! f2(B)(g) = ⋀_m (B(m) → I(g, m))        derive_extent
//! ```
//!
//! An empty meet is top. Concepts are the pairs with `f1(A) = B` and
//! `f2(B) = A`; they are found by brute-force scanning of every candidate set
//! on one side and closing it (see [`enumerate_concepts`]).

mod enumerate;
mod export;
mod lattice;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::context::FuzzyContext;
use crate::lia::{Lia, LiaError, OpTables, TruthValue};

pub(crate) use enumerate::domain_indices;
pub use enumerate::{
    candidate_count, enumerate_concepts, resolve_domain, Domain, Engine, ScanOptions,
    DEFAULT_BUDGET,
};
pub use export::{export_dot, export_json, parse_lattice_json, ConceptDocument, LatticeDocument};
pub use lattice::{Concept, ConceptLattice};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaloisError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("{engine} scan needs {candidates} candidates, budget is {budget}")]
    Budget {
        engine: Engine,
        candidates: u128,
        budget: u128,
    },
    #[error("not a member of this lattice: {0}")]
    Membership(String),
    #[error(transparent)]
    Lia(#[from] LiaError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Objects,
    Attributes,
}

/// A fuzzy subset of the objects or of the attributes of one context.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FuzzySet {
    side: Side,
    values: Vec<TruthValue>,
}

impl FuzzySet {
    pub fn new(side: Side, values: Vec<TruthValue>) -> Self {
        FuzzySet { side, values }
    }

    pub fn objects(values: Vec<TruthValue>) -> Self {
        Self::new(Side::Objects, values)
    }

    pub fn attributes(values: Vec<TruthValue>) -> Self {
        Self::new(Side::Attributes, values)
    }

    /// Every member mapped to the same value.
    pub fn constant(side: Side, len: usize, v: TruthValue) -> Self {
        Self::new(side, vec![v; len])
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn values(&self) -> &[TruthValue] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Pointwise inclusion `self ⊆ other`.
    pub fn is_subset<A: Lia + ?Sized>(&self, other: &FuzzySet, alg: &A) -> Result<bool, LiaError> {
        if self.side != other.side || self.len() != other.len() {
            return Err(LiaError::Dimension("fuzzy sets of different shape".into()));
        }
        for (x, y) in self.values.iter().zip(&other.values) {
            if !alg.leq(x, y)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn labels<A: Lia + ?Sized>(&self, alg: &A) -> Vec<String> {
        self.values.iter().map(|v| alg.label(v)).collect()
    }
}

impl fmt::Display for FuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.values.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

fn check_set(ctx: &FuzzyContext, set: &FuzzySet, side: Side) -> Result<(), GaloisError> {
    let expected = match side {
        Side::Objects => ctx.objects().len(),
        Side::Attributes => ctx.attributes().len(),
    };
    if set.side != side {
        return Err(GaloisError::Dimension(format!(
            "expected a fuzzy set over {side:?}, got one over {:?}",
            set.side
        )));
    }
    if set.len() != expected {
        return Err(GaloisError::Dimension(format!(
            "fuzzy set has {} entries, context has {expected} {side:?}",
            set.len()
        )));
    }
    for v in &set.values {
        ctx.algebra().check(v)?;
    }
    Ok(())
}

/// `f1`: the attributes shared, to each degree, by the objects of `extent`.
pub fn derive_intent(ctx: &FuzzyContext, extent: &FuzzySet) -> Result<FuzzySet, GaloisError> {
    check_set(ctx, extent, Side::Objects)?;
    let alg = ctx.algebra();
    let values = (0..ctx.attributes().len())
        .map(|m| {
            extent
                .values
                .iter()
                .enumerate()
                .try_fold(alg.top(), |acc, (g, a)| {
                    alg.meet(&acc, &alg.imp(a, ctx.cell(g, m))?)
                })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FuzzySet::attributes(values))
}

/// `f2`: the objects having, to each degree, the attributes of `intent`.
pub fn derive_extent(ctx: &FuzzyContext, intent: &FuzzySet) -> Result<FuzzySet, GaloisError> {
    check_set(ctx, intent, Side::Attributes)?;
    let alg = ctx.algebra();
    let values = (0..ctx.objects().len())
        .map(|g| {
            intent
                .values
                .iter()
                .enumerate()
                .try_fold(alg.top(), |acc, (m, b)| {
                    alg.meet(&acc, &alg.imp(b, ctx.cell(g, m))?)
                })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FuzzySet::objects(values))
}

/// `f2 ∘ f1`
pub fn closure_extent(ctx: &FuzzyContext, extent: &FuzzySet) -> Result<FuzzySet, GaloisError> {
    derive_extent(ctx, &derive_intent(ctx, extent)?)
}

/// `f1 ∘ f2`
pub fn closure_intent(ctx: &FuzzyContext, intent: &FuzzySet) -> Result<FuzzySet, GaloisError> {
    derive_intent(ctx, &derive_extent(ctx, intent)?)
}

/// A context compiled against [`OpTables`] for the scanning hot paths.
#[derive(Debug, Clone)]
pub(crate) struct Compiled {
    pub(crate) tables: Arc<OpTables>,
    pub(crate) n_obj: usize,
    pub(crate) n_attr: usize,
    /// Row-major cell indices.
    cells: Vec<u16>,
}

impl Compiled {
    pub(crate) fn new(ctx: &FuzzyContext) -> Result<Self, GaloisError> {
        Self::with_tables(ctx, Arc::new(OpTables::build(ctx.algebra().as_ref())?))
    }

    pub(crate) fn with_tables(
        ctx: &FuzzyContext,
        tables: Arc<OpTables>,
    ) -> Result<Self, GaloisError> {
        let cells = ctx
            .matrix()
            .iter()
            .flatten()
            .map(|v| {
                tables
                    .index_of(v)
                    .ok_or_else(|| GaloisError::Dimension(format!("{v} not in algebra")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Compiled {
            tables,
            n_obj: ctx.objects().len(),
            n_attr: ctx.attributes().len(),
            cells,
        })
    }

    #[inline]
    pub(crate) fn cell(&self, g: usize, m: usize) -> u16 {
        self.cells[g * self.n_attr + m]
    }

    pub(crate) fn intent_into(&self, extent: &[u16], out: &mut Vec<u16>) {
        let t = &self.tables;
        out.clear();
        out.extend((0..self.n_attr).map(|m| {
            extent.iter().enumerate().fold(t.top(), |acc, (g, &a)| {
                t.meet(acc, t.imp(a, self.cell(g, m)))
            })
        }));
    }

    pub(crate) fn extent_into(&self, intent: &[u16], out: &mut Vec<u16>) {
        let t = &self.tables;
        out.clear();
        out.extend((0..self.n_obj).map(|g| {
            intent.iter().enumerate().fold(t.top(), |acc, (m, &b)| {
                t.meet(acc, t.imp(b, self.cell(g, m)))
            })
        }));
    }

    pub(crate) fn intent(&self, extent: &[u16]) -> Vec<u16> {
        let mut out = Vec::with_capacity(self.n_attr);
        self.intent_into(extent, &mut out);
        out
    }

    pub(crate) fn extent(&self, intent: &[u16]) -> Vec<u16> {
        let mut out = Vec::with_capacity(self.n_obj);
        self.extent_into(intent, &mut out);
        out
    }

    /// `f2 ∘ f1`
    pub(crate) fn closure(&self, extent: &[u16]) -> Vec<u16> {
        self.extent(&self.intent(extent))
    }

    pub(crate) fn to_indices(&self, set: &FuzzySet) -> Result<Vec<u16>, GaloisError> {
        set.values
            .iter()
            .map(|v| {
                self.tables
                    .index_of(v)
                    .ok_or_else(|| GaloisError::Dimension(format!("{v} not in algebra")))
            })
            .collect()
    }

    pub(crate) fn to_values(&self, side: Side, idx: &[u16]) -> FuzzySet {
        FuzzySet::new(
            side,
            idx.iter().map(|&i| self.tables.value(i).clone()).collect(),
        )
    }
}
