//! Linguistic truth-valued formal contexts.
//!
//! A [`FuzzyContext`] is an objects × attributes matrix of truth values over
//! one shared [`Algebra`]. Contexts are immutable; [`extend_context`] builds a
//! new context with additional derived attributes.

mod extend;
mod format;

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::lia::{Algebra, Lia, LiaError, TruthValue};

pub use extend::{extend_context, ExtensionConfig};
pub use format::{load_context, parse_context, parse_context_in, serialize_context, PAPER_ALIASES};

#[derive(Debug, Error)]
pub enum ContextError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("structure mismatch: {0}")]
    Structure(String),
    #[error(transparent)]
    Lia(#[from] LiaError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// Where an attribute column came from.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AttributeProvenance {
    Original,
    /// Cellwise meet of the listed original attributes (strictly increasing
    /// indices, at least two).
    MeetOf(Vec<usize>),
    /// Every cell is top.
    ConstantTop,
}

impl AttributeProvenance {
    /// Human-readable formula, e.g. `meet(m1,m2)` or `top`.
    pub fn formula(&self, attributes: &[String]) -> Option<String> {
        match self {
            AttributeProvenance::Original => None,
            AttributeProvenance::ConstantTop => Some("top".into()),
            AttributeProvenance::MeetOf(src) => {
                let names: Vec<&str> = src.iter().map(|&i| attributes[i].as_str()).collect();
                Some(format!("meet({})", names.join(",")))
            }
        }
    }
}

/// How the algebra of a context was declared, kept for serialization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraSource {
    /// Built in code or from `algebra product ...`.
    Inline,
    /// `algebra table <path>`, path as written in the file.
    TableFile(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyContext {
    algebra: Arc<Algebra>,
    source: AlgebraSource,
    aliases: Vec<(String, TruthValue)>,
    objects: Vec<String>,
    attributes: Vec<String>,
    /// Row-major, one row per object.
    matrix: Vec<Vec<TruthValue>>,
    provenance: Vec<AttributeProvenance>,
}

const RESERVED: [&str; 3] = ["algebra", "alias", "attributes"];

fn check_names(kind: &str, names: &[String]) -> Result<(), ContextError> {
    let mut seen = HashSet::new();
    for n in names {
        if n.is_empty() || n.contains('#') || n.chars().any(char::is_whitespace) {
            return Err(ContextError::Argument(format!("invalid {kind} name `{n}`")));
        }
        if !seen.insert(n.as_str()) {
            return Err(ContextError::Argument(format!(
                "duplicate {kind} name `{n}`"
            )));
        }
    }
    Ok(())
}

impl FuzzyContext {
    pub fn new(
        algebra: Arc<Algebra>,
        objects: Vec<String>,
        attributes: Vec<String>,
        matrix: Vec<Vec<TruthValue>>,
    ) -> Result<Self, ContextError> {
        check_names("object", &objects)?;
        check_names("attribute", &attributes)?;
        if let Some(o) = objects.iter().find(|o| RESERVED.contains(&o.as_str())) {
            return Err(ContextError::Argument(format!(
                "object name `{o}` is reserved"
            )));
        }
        if matrix.len() != objects.len() {
            return Err(ContextError::Argument(format!(
                "{} rows for {} objects",
                matrix.len(),
                objects.len()
            )));
        }
        for (g, row) in matrix.iter().enumerate() {
            if row.len() != attributes.len() {
                return Err(ContextError::Argument(format!(
                    "row `{}` has {} values for {} attributes",
                    objects[g],
                    row.len(),
                    attributes.len()
                )));
            }
            for v in row {
                algebra.check(v)?;
            }
        }
        let provenance = vec![AttributeProvenance::Original; attributes.len()];
        Ok(FuzzyContext {
            algebra,
            source: AlgebraSource::Inline,
            aliases: Vec::new(),
            objects,
            attributes,
            matrix,
            provenance,
        })
    }

    /// Builds a context from label strings, resolved by the algebra.
    pub fn from_labels(
        algebra: Arc<Algebra>,
        objects: &[&str],
        attributes: &[&str],
        rows: &[&[&str]],
    ) -> Result<Self, ContextError> {
        let matrix = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| {
                        algebra
                            .parse_label(s)
                            .ok_or_else(|| ContextError::Argument(format!("unknown label `{s}`")))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(
            algebra,
            objects.iter().map(|s| s.to_string()).collect(),
            attributes.iter().map(|s| s.to_string()).collect(),
            matrix,
        )
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn algebra_source(&self) -> &AlgebraSource {
        &self.source
    }

    pub fn aliases(&self) -> &[(String, TruthValue)] {
        &self.aliases
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn provenance(&self) -> &[AttributeProvenance] {
        &self.provenance
    }

    pub fn matrix(&self) -> &[Vec<TruthValue>] {
        &self.matrix
    }

    pub fn cell(&self, g: usize, m: usize) -> &TruthValue {
        &self.matrix[g][m]
    }

    pub fn column(&self, m: usize) -> Vec<TruthValue> {
        self.matrix.iter().map(|row| row[m].clone()).collect()
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn attribute_index(&self, name: &str) -> Option<usize> {
        self.attributes.iter().position(|a| a == name)
    }

    pub fn is_original(&self) -> bool {
        self.provenance
            .iter()
            .all(|p| *p == AttributeProvenance::Original)
    }

    /// Every distinct cell value.
    pub fn cell_values(&self) -> Vec<TruthValue> {
        let mut out: Vec<TruthValue> = self.matrix.iter().flatten().cloned().collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn with_aliases(
        mut self,
        aliases: Vec<(String, TruthValue)>,
    ) -> Result<Self, ContextError> {
        let mut seen = HashSet::new();
        for (name, v) in &aliases {
            self.algebra.check(v)?;
            if !seen.insert(name.as_str()) {
                return Err(ContextError::Argument(format!("duplicate alias `{name}`")));
            }
            if let Some(canon) = self.algebra.parse_label(name) {
                if &canon != v {
                    return Err(ContextError::Argument(format!(
                        "alias `{name}` shadows a different canonical label"
                    )));
                }
            }
        }
        self.aliases = aliases;
        Ok(self)
    }

    pub fn with_table_path(mut self, path: impl Into<String>) -> Self {
        self.source = AlgebraSource::TableFile(path.into());
        self
    }

    /// Spelling used when writing a value back to a context file: the first
    /// alias naming it, otherwise the canonical label.
    pub fn spell(&self, v: &TruthValue) -> String {
        self.aliases
            .iter()
            .find(|(_, a)| a == v)
            .map(|(n, _)| n.clone())
            .unwrap_or_else(|| self.algebra.label(v))
    }

    /// Resolves a token through the aliases, then the algebra's labels.
    pub fn resolve(&self, token: &str) -> Option<TruthValue> {
        self.aliases
            .iter()
            .find(|(n, _)| n == token)
            .map(|(_, v)| v.clone())
            .or_else(|| self.algebra.parse_label(token))
    }

    pub(crate) fn push_column(
        &mut self,
        name: String,
        column: Vec<TruthValue>,
        provenance: AttributeProvenance,
    ) {
        debug_assert_eq!(column.len(), self.objects.len());
        for (row, v) in self.matrix.iter_mut().zip(column) {
            row.push(v);
        }
        self.attributes.push(name);
        self.provenance.push(provenance);
    }

    pub(crate) fn set_provenance(&mut self, provenance: Vec<AttributeProvenance>) {
        self.provenance = provenance;
    }

    pub(crate) fn set_source(&mut self, source: AlgebraSource) {
        self.source = source;
    }
}

impl fmt::Display for FuzzyContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_context(self))
    }
}

/// True iff `extended` restricted to the attributes of `base` equals `base`.
///
/// Objects and attributes are matched by name. Fails when `extended` lacks an
/// object or attribute of `base`, or the two use different algebras.
pub fn restrict_agrees(base: &FuzzyContext, extended: &FuzzyContext) -> Result<bool, ContextError> {
    if base.algebra != extended.algebra {
        return Err(ContextError::Structure(format!(
            "algebras differ: {} vs {}",
            base.algebra.describe(),
            extended.algebra.describe()
        )));
    }
    if base.objects.len() != extended.objects.len() {
        return Err(ContextError::Structure(format!(
            "{} objects vs {} objects",
            base.objects.len(),
            extended.objects.len()
        )));
    }
    let rows = base
        .objects
        .iter()
        .map(|o| {
            extended
                .object_index(o)
                .ok_or_else(|| ContextError::Structure(format!("object `{o}` missing")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let cols = base
        .attributes
        .iter()
        .map(|a| {
            extended
                .attribute_index(a)
                .ok_or_else(|| ContextError::Structure(format!("attribute `{a}` missing")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(rows.iter().enumerate().all(|(g, &eg)| {
        cols.iter()
            .enumerate()
            .all(|(m, &em)| base.matrix[g][m] == extended.matrix[eg][em])
    }))
}
