//! Finite lattice implication algebras.
//!
//! Two concrete carriers are provided: [`ProductAlgebra`], a product of
//! Łukasiewicz chains (the default `[3, 2]` product is the six-element
//! linguistic truth-value algebra), and [`TableAlgebra`], an algebra read
//! from explicit implication and negation tables. Both implement [`Lia`];
//! [`Algebra`] wraps either one.
//!
//! Truth values are plain coordinate records. For a product algebra there is
//! one 1-based index per factor chain; a table algebra uses a single
//! coordinate holding the 1-based position of the element in its declaration.

mod axioms;
mod label;
mod ops;
mod product;
mod table;

use std::fmt;

use smallvec::SmallVec;
use thiserror::Error;

pub use axioms::{
    check_axioms, check_axioms_with_budget, AxiomReport, Law, Violation, DEFAULT_AXIOM_BUDGET,
};
pub use label::{LinguisticLabel, Meta, Modifier, CANONICAL_LABELS};
pub use ops::{OpTables, MAX_TABLE_ELEMENTS};
pub use product::ProductAlgebra;
pub use table::{TableAlgebra, TableSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiaError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("not a lattice: {op} of `{left}` and `{right}` does not exist")]
    Structure {
        op: &'static str,
        left: String,
        right: String,
    },
    #[error("line {line}: {message}")]
    Load { line: usize, message: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("algebra has {size} elements, budget is {budget}")]
    Budget { size: usize, budget: usize },
}

/// An element of a finite product-of-chains algebra, as 1-based coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TruthValue(SmallVec<[u16; 4]>);

impl TruthValue {
    pub fn new(coords: impl IntoIterator<Item = u16>) -> Self {
        TruthValue(coords.into_iter().collect())
    }

    pub fn coords(&self) -> &[u16] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Debug for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Coordinate spelling, e.g. `(3,1)`.
impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Parses the coordinate spelling produced by `Display`.
pub(crate) fn parse_coords(s: &str) -> Option<TruthValue> {
    let inner = s.strip_prefix('(')?.strip_suffix(')')?;
    if inner.is_empty() {
        return None;
    }
    let coords = inner
        .split(',')
        .map(|p| p.trim().parse::<u16>().ok())
        .collect::<Option<SmallVec<[u16; 4]>>>()?;
    Some(TruthValue(coords))
}

/// Operations of a finite lattice implication algebra.
///
/// Every binary operation fails with [`LiaError::Dimension`] when an operand
/// does not belong to the algebra. Table algebras may additionally fail with
/// [`LiaError::Structure`] when their derived order has no bound for a pair.
pub trait Lia {
    fn size(&self) -> usize;

    /// All elements in canonical order (the order used for display and for
    /// positional aliases).
    fn elements(&self) -> Vec<TruthValue>;

    fn top(&self) -> TruthValue;

    fn bottom(&self) -> TruthValue;

    fn contains(&self, x: &TruthValue) -> bool;

    fn leq(&self, x: &TruthValue, y: &TruthValue) -> Result<bool, LiaError>;

    fn meet(&self, x: &TruthValue, y: &TruthValue) -> Result<TruthValue, LiaError>;

    fn join(&self, x: &TruthValue, y: &TruthValue) -> Result<TruthValue, LiaError>;

    fn imp(&self, x: &TruthValue, y: &TruthValue) -> Result<TruthValue, LiaError>;

    fn neg(&self, x: &TruthValue) -> Result<TruthValue, LiaError>;

    /// Canonical spelling of an element.
    fn label(&self, x: &TruthValue) -> String;

    /// Inverse of [`Lia::label`]. Returns `None` for unknown spellings.
    fn parse_label(&self, s: &str) -> Option<TruthValue>;

    /// Short description such as `product 3 2`.
    fn describe(&self) -> String;

    fn check(&self, x: &TruthValue) -> Result<(), LiaError> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(LiaError::Dimension(format!(
                "{x} is not an element of {}",
                self.describe()
            )))
        }
    }
}

/// Either kind of finite algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Algebra {
    Product(ProductAlgebra),
    Table(TableAlgebra),
}

impl Algebra {
    /// The six-element `[3, 2]` product.
    pub fn l6() -> Self {
        Algebra::Product(ProductAlgebra::l6())
    }

    pub fn product(chain_sizes: &[u16]) -> Result<Self, LiaError> {
        ProductAlgebra::new(chain_sizes).map(Algebra::Product)
    }

    pub fn is_l6(&self) -> bool {
        matches!(self, Algebra::Product(p) if p.is_l6())
    }
}

impl Default for Algebra {
    fn default() -> Self {
        Algebra::l6()
    }
}

impl From<ProductAlgebra> for Algebra {
    fn from(p: ProductAlgebra) -> Self {
        Algebra::Product(p)
    }
}

impl From<TableAlgebra> for Algebra {
    fn from(t: TableAlgebra) -> Self {
        Algebra::Table(t)
    }
}

macro_rules! delegate {
    ($self:ident, $inner:ident => $e:expr) => {
        match $self {
            Algebra::Product($inner) => $e,
            Algebra::Table($inner) => $e,
        }
    };
}

impl Lia for Algebra {
    fn size(&self) -> usize {
        delegate!(self, a => a.size())
    }

    fn elements(&self) -> Vec<TruthValue> {
        delegate!(self, a => a.elements())
    }

    fn top(&self) -> TruthValue {
        delegate!(self, a => a.top())
    }

    fn bottom(&self) -> TruthValue {
        delegate!(self, a => a.bottom())
    }

    fn contains(&self, x: &TruthValue) -> bool {
        delegate!(self, a => a.contains(x))
    }

    fn leq(&self, x: &TruthValue, y: &TruthValue) -> Result<bool, LiaError> {
        delegate!(self, a => a.leq(x, y))
    }

    fn meet(&self, x: &TruthValue, y: &TruthValue) -> Result<TruthValue, LiaError> {
        delegate!(self, a => a.meet(x, y))
    }

    fn join(&self, x: &TruthValue, y: &TruthValue) -> Result<TruthValue, LiaError> {
        delegate!(self, a => a.join(x, y))
    }

    fn imp(&self, x: &TruthValue, y: &TruthValue) -> Result<TruthValue, LiaError> {
        delegate!(self, a => a.imp(x, y))
    }

    fn neg(&self, x: &TruthValue) -> Result<TruthValue, LiaError> {
        delegate!(self, a => a.neg(x))
    }

    fn label(&self, x: &TruthValue) -> String {
        delegate!(self, a => a.label(x))
    }

    fn parse_label(&self, s: &str) -> Option<TruthValue> {
        delegate!(self, a => a.parse_label(s))
    }

    fn describe(&self) -> String {
        delegate!(self, a => a.describe())
    }
}

/// Meet of an arbitrary family; the empty meet is top.
pub fn meet_all<'a, A: Lia + ?Sized>(
    alg: &A,
    values: impl IntoIterator<Item = &'a TruthValue>,
) -> Result<TruthValue, LiaError> {
    values
        .into_iter()
        .try_fold(alg.top(), |acc, v| alg.meet(&acc, v))
}

/// Covering pairs `(lower, upper)` of the algebra's order, as indices into
/// [`Lia::elements`].
pub fn hasse_covers<A: Lia + ?Sized>(alg: &A) -> Result<Vec<(usize, usize)>, LiaError> {
    let elems = alg.elements();
    let n = elems.len();
    let mut lt = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            lt[i * n + j] = i != j && alg.leq(&elems[i], &elems[j])?;
        }
    }
    let mut covers = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if lt[i * n + j] && !(0..n).any(|k| lt[i * n + k] && lt[k * n + j]) {
                covers.push((i, j));
            }
        }
    }
    Ok(covers)
}
