use std::collections::{HashMap, HashSet};

use crate::context::FuzzyContext;
use crate::lia::TruthValue;

use super::{Compiled, FuzzySet, GaloisError, Side};

/// A fixpoint `(A, B)` of the Galois connection.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Concept {
    pub extent: FuzzySet,
    pub intent: FuzzySet,
}

/// The concepts of a context ordered by extent inclusion.
///
/// Concepts are sorted by decreasing total rank of their extent, then by
/// extent coordinates in decreasing lexicographic order, so index 0 is the
/// top concept and the order is a linear extension of the lattice order.
#[derive(Debug, Clone)]
pub struct ConceptLattice {
    context: FuzzyContext,
    compiled: Compiled,
    concepts: Vec<Concept>,
    pairs: Vec<(Vec<u16>, Vec<u16>)>,
    by_extent: HashMap<Vec<u16>, usize>,
    /// `below[i][j]` iff concept i ≤ concept j.
    below: Vec<Vec<bool>>,
    covers: Vec<(usize, usize)>,
    candidates: u128,
}

impl ConceptLattice {
    pub(crate) fn from_pairs(
        ctx: &FuzzyContext,
        compiled: Compiled,
        pairs: Vec<(Vec<u16>, Vec<u16>)>,
        candidates: u128,
    ) -> Self {
        let t = compiled.tables.clone();
        type Keyed = (u32, Vec<TruthValue>, (Vec<u16>, Vec<u16>));
        let mut keyed: Vec<Keyed> = pairs
            .into_iter()
            .map(|p| {
                let rank = p.0.iter().map(|&x| t.rank(x)).sum();
                let values = p.0.iter().map(|&x| t.value(x).clone()).collect();
                (rank, values, p)
            })
            .collect();
        keyed.sort_by(|x, y| y.0.cmp(&x.0).then_with(|| y.1.cmp(&x.1)));
        let pairs: Vec<_> = keyed.into_iter().map(|(.., p)| p).collect();

        let n = pairs.len();
        let by_extent = pairs
            .iter()
            .enumerate()
            .map(|(i, p)| (p.0.clone(), i))
            .collect();
        let below: Vec<Vec<bool>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        pairs[i]
                            .0
                            .iter()
                            .zip(&pairs[j].0)
                            .all(|(&a, &b)| t.leq(a, b))
                    })
                    .collect()
            })
            .collect();

        let mut covers = Vec::new();
        for i in 0..n {
            let upper: Vec<usize> = (0..n).filter(|&j| j != i && below[i][j]).collect();
            for &j in &upper {
                if !upper.iter().any(|&k| k != j && below[k][j]) {
                    covers.push((i, j));
                }
            }
        }
        covers.sort_unstable();

        let concepts = pairs
            .iter()
            .map(|(a, b)| Concept {
                extent: compiled.to_values(Side::Objects, a),
                intent: compiled.to_values(Side::Attributes, b),
            })
            .collect();
        ConceptLattice {
            context: ctx.clone(),
            compiled,
            concepts,
            pairs,
            by_extent,
            below,
            covers,
            candidates,
        }
    }

    pub fn context(&self) -> &FuzzyContext {
        &self.context
    }

    pub fn len(&self) -> usize {
        self.concepts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.concepts.is_empty()
    }

    pub fn concepts(&self) -> &[Concept] {
        &self.concepts
    }

    pub fn concept(&self, i: usize) -> &Concept {
        &self.concepts[i]
    }

    /// Number of candidate sets scanned to build this lattice.
    pub fn candidates(&self) -> u128 {
        self.candidates
    }

    /// Extent inclusion between concepts `i` and `j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.below[i][j]
    }

    /// Hasse edges as `(lower, upper)` index pairs, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Every strict order pair `(i, j)` with concept i < concept j.
    pub fn order_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && self.below[i][j])
            .collect()
    }

    pub fn top(&self) -> usize {
        (0..self.len())
            .find(|&i| (0..self.len()).all(|j| self.below[j][i]))
            .expect("a concept lattice has a top")
    }

    pub fn bottom(&self) -> usize {
        (0..self.len())
            .find(|&i| (0..self.len()).all(|j| self.below[i][j]))
            .expect("a concept lattice has a bottom")
    }

    pub fn index_of(&self, c: &Concept) -> Option<usize> {
        let a = self.compiled.to_indices(&c.extent).ok()?;
        let i = *self.by_extent.get(&a)?;
        (self.concepts[i] == *c).then_some(i)
    }

    pub fn index_of_extent(&self, extent: &FuzzySet) -> Option<usize> {
        if extent.side() != Side::Objects {
            return None;
        }
        let a = self.compiled.to_indices(extent).ok()?;
        self.by_extent.get(&a).copied()
    }

    fn member(&self, c: &Concept) -> Result<usize, GaloisError> {
        self.index_of(c)
            .ok_or_else(|| GaloisError::Membership(format!("({} | {})", c.extent, c.intent)))
    }

    /// Infimum: pointwise meet of the extents, closed intent.
    pub fn meet(&self, i: usize, j: usize) -> Result<usize, GaloisError> {
        let t = &self.compiled.tables;
        let a: Vec<u16> = self.pairs[i]
            .0
            .iter()
            .zip(&self.pairs[j].0)
            .map(|(&x, &y)| t.meet(x, y))
            .collect();
        let b = self.compiled.intent(&a);
        self.locate(self.compiled.extent(&b))
    }

    /// Supremum: pointwise meet of the intents, closed extent.
    pub fn join(&self, i: usize, j: usize) -> Result<usize, GaloisError> {
        let t = &self.compiled.tables;
        let b: Vec<u16> = self.pairs[i]
            .1
            .iter()
            .zip(&self.pairs[j].1)
            .map(|(&x, &y)| t.meet(x, y))
            .collect();
        self.locate(self.compiled.extent(&b))
    }

    fn locate(&self, extent: Vec<u16>) -> Result<usize, GaloisError> {
        self.by_extent.get(&extent).copied().ok_or_else(|| {
            GaloisError::Membership(format!(
                "{} is not an extent of the enumerated concepts",
                self.compiled.to_values(Side::Objects, &extent)
            ))
        })
    }

    pub fn concept_meet(&self, c1: &Concept, c2: &Concept) -> Result<Concept, GaloisError> {
        let k = self.meet(self.member(c1)?, self.member(c2)?)?;
        Ok(self.concepts[k].clone())
    }

    pub fn concept_join(&self, c1: &Concept, c2: &Concept) -> Result<Concept, GaloisError> {
        let k = self.join(self.member(c1)?, self.member(c2)?)?;
        Ok(self.concepts[k].clone())
    }

    /// Whether `c` is a fixpoint of this lattice's context.
    pub fn is_fixpoint(&self, c: &Concept) -> bool {
        let (Ok(a), Ok(b)) = (
            self.compiled.to_indices(&c.extent),
            self.compiled.to_indices(&c.intent),
        ) else {
            return false;
        };
        a.len() == self.compiled.n_obj
            && b.len() == self.compiled.n_attr
            && self.compiled.intent(&a) == b
            && self.compiled.extent(&b) == a
    }

    pub fn extents(&self) -> HashSet<FuzzySet> {
        self.concepts.iter().map(|c| c.extent.clone()).collect()
    }

    /// Same concepts, regardless of how they were found.
    pub fn same_concepts(&self, other: &ConceptLattice) -> bool {
        self.concepts == other.concepts
    }

    pub(crate) fn compiled(&self) -> &Compiled {
        &self.compiled
    }

    pub(crate) fn index_pairs(&self) -> &[(Vec<u16>, Vec<u16>)] {
        &self.pairs
    }
}

impl PartialEq for ConceptLattice {
    fn eq(&self, other: &Self) -> bool {
        self.context == other.context && self.concepts == other.concepts
    }
}
