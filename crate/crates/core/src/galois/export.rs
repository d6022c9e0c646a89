use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::lia::Lia;

use super::{ConceptLattice, FuzzySet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConceptDocument {
    pub extent: Vec<String>,
    pub intent: Vec<String>,
}

/// JSON form of a concept lattice. Truth values use canonical labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeDocument {
    pub algebra: String,
    pub objects: Vec<String>,
    pub attributes: Vec<String>,
    pub concepts: Vec<ConceptDocument>,
    /// Strict order pairs `[i, j]` meaning concept i < concept j.
    pub order: Vec<[usize; 2]>,
    /// Hasse edges `[lower, upper]`.
    pub covers: Vec<[usize; 2]>,
}

impl LatticeDocument {
    pub fn from_lattice(l: &ConceptLattice) -> Self {
        let ctx = l.context();
        let alg = ctx.algebra();
        LatticeDocument {
            algebra: alg.describe(),
            objects: ctx.objects().to_vec(),
            attributes: ctx.attributes().to_vec(),
            concepts: l
                .concepts()
                .iter()
                .map(|c| ConceptDocument {
                    extent: c.extent.labels(alg.as_ref()),
                    intent: c.intent.labels(alg.as_ref()),
                })
                .collect(),
            order: l.order_pairs().into_iter().map(|(i, j)| [i, j]).collect(),
            covers: l.covers().iter().map(|&(i, j)| [i, j]).collect(),
        }
    }
}

pub fn export_json(l: &ConceptLattice) -> String {
    serde_json::to_string_pretty(&LatticeDocument::from_lattice(l)).expect("plain data serializes")
}

pub fn parse_lattice_json(text: &str) -> Result<LatticeDocument, serde_json::Error> {
    serde_json::from_str(text)
}

fn spell<A: Lia + ?Sized>(s: &FuzzySet, alg: &A) -> String {
    s.labels(alg).join(", ")
}

/// Graphviz digraph of the Hasse diagram, edges pointing upwards.
pub fn export_dot(l: &ConceptLattice) -> String {
    let alg = l.context().algebra();
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n");
    for (k, c) in l.concepts().iter().enumerate() {
        let _ = writeln!(
            out,
            "  c{k} [label=\"{k}# ({} | {})\"];",
            spell(&c.extent, alg.as_ref()),
            spell(&c.intent, alg.as_ref())
        );
    }
    for &(i, j) in l.covers() {
        let _ = writeln!(out, "  c{i} -> c{j};");
    }
    out.push_str("}\n");
    out
}
