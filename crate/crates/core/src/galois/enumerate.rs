use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::context::FuzzyContext;
use crate::lia::{Lia, TruthValue};

use super::{Compiled, ConceptLattice, GaloisError};

/// Default cap on the number of candidate sets a scan may visit.
pub const DEFAULT_BUDGET: u128 = 1_000_000;

/// Which side of the connection a scan enumerates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Engine {
    /// Close every object set `A` to `(f2 f1 A, f1 A)`.
    ExtentScan,
    /// Close every attribute set `B` to `(f2 B, f1 f2 B)`.
    IntentScan,
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::ExtentScan => "extent",
            Engine::IntentScan => "intent",
        })
    }
}

/// The truth values a scan draws candidate sets from.
///
/// Fixpoints of the connection whose values lie in a sub-algebra that
/// contains every cell are exactly the concepts found by scanning that
/// sub-algebra, so a smaller domain yields the concepts expressible in it.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum Domain {
    /// Every element of the algebra.
    Full,
    /// The sub-algebra generated by the context's cell values.
    #[default]
    Generated,
    /// The sub-algebra generated by the cell values and these extra seeds.
    GeneratedBy(Vec<TruthValue>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanOptions {
    pub engine: Engine,
    pub domain: Domain,
    pub budget: u128,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            engine: Engine::ExtentScan,
            domain: Domain::default(),
            budget: DEFAULT_BUDGET,
        }
    }
}

impl ScanOptions {
    pub fn new(engine: Engine, domain: Domain) -> Self {
        ScanOptions {
            engine,
            domain,
            ..Self::default()
        }
    }

    pub fn with_budget(mut self, budget: u128) -> Self {
        self.budget = budget;
        self
    }
}

pub(crate) fn domain_indices(
    c: &Compiled,
    ctx: &FuzzyContext,
    domain: &Domain,
) -> Result<Vec<u16>, GaloisError> {
    let t = &c.tables;
    let cells = (0..c.n_obj).flat_map(|g| (0..c.n_attr).map(move |m| (g, m)));
    match domain {
        Domain::Full => Ok((0..t.size() as u16).collect()),
        Domain::Generated => Ok(t.generated_subalgebra(cells.map(|(g, m)| c.cell(g, m)))),
        Domain::GeneratedBy(extra) => {
            let extra = extra
                .iter()
                .map(|v| {
                    ctx.algebra().check(v)?;
                    Ok(t.index_of(v).expect("checked"))
                })
                .collect::<Result<Vec<_>, GaloisError>>()?;
            Ok(t.generated_subalgebra(cells.map(|(g, m)| c.cell(g, m)).chain(extra)))
        }
    }
}

/// The truth values a scan of `ctx` over `domain` would use.
pub fn resolve_domain(ctx: &FuzzyContext, domain: &Domain) -> Result<Vec<TruthValue>, GaloisError> {
    let c = Compiled::new(ctx)?;
    Ok(domain_indices(&c, ctx, domain)?
        .into_iter()
        .map(|i| c.tables.value(i).clone())
        .collect())
}

fn count(domain_size: usize, positions: usize) -> u128 {
    (domain_size as u128)
        .checked_pow(positions as u32)
        .unwrap_or(u128::MAX)
}

/// Number of candidate sets `opts` would scan on `ctx`.
pub fn candidate_count(ctx: &FuzzyContext, opts: &ScanOptions) -> Result<u128, GaloisError> {
    let c = Compiled::new(ctx)?;
    let d = domain_indices(&c, ctx, &opts.domain)?.len();
    Ok(count(d, positions(&c, opts.engine)))
}

fn positions(c: &Compiled, engine: Engine) -> usize {
    match engine {
        Engine::ExtentScan => c.n_obj,
        Engine::IntentScan => c.n_attr,
    }
}

/// Enumerates every concept by exhaustive scan and closure.
///
/// Both engines return the same concept set; they differ only in which side
/// is scanned (`|D|^|G|` or `|D|^|M|` candidates for a domain `D`). The scan
/// runs in parallel; the result is canonically ordered and deterministic.
pub fn enumerate_concepts(
    ctx: &FuzzyContext,
    opts: &ScanOptions,
) -> Result<ConceptLattice, GaloisError> {
    let c = Compiled::new(ctx)?;
    let domain = domain_indices(&c, ctx, &opts.domain)?;
    let k = positions(&c, opts.engine);
    let total = count(domain.len(), k);
    if total > opts.budget || total > u64::MAX as u128 {
        return Err(GaloisError::Budget {
            engine: opts.engine,
            candidates: total,
            budget: opts.budget,
        });
    }
    let d = domain.len() as u64;
    let engine = opts.engine;

    let found: HashMap<Vec<u16>, Vec<u16>> = (0..total as u64)
        .into_par_iter()
        .fold(
            || {
                (
                    HashMap::new(),
                    Vec::with_capacity(k),
                    Vec::new(),
                    Vec::new(),
                )
            },
            |(mut acc, mut cand, mut a, mut b), mut code| {
                cand.clear();
                for _ in 0..k {
                    cand.push(domain[(code % d) as usize]);
                    code /= d;
                }
                match engine {
                    Engine::ExtentScan => {
                        c.intent_into(&cand, &mut b);
                        c.extent_into(&b, &mut a);
                    }
                    Engine::IntentScan => {
                        c.extent_into(&cand, &mut a);
                        c.intent_into(&a, &mut b);
                    }
                }
                // the extent determines the intent
                if !acc.contains_key(&a) {
                    acc.insert(a.clone(), b.clone());
                }
                (acc, cand, a, b)
            },
        )
        .map(|(acc, ..)| acc)
        .reduce(HashMap::new, |mut x, y| {
            x.extend(y);
            x
        });

    Ok(ConceptLattice::from_pairs(
        ctx,
        c,
        found.into_iter().collect(),
        total,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::parse_context;

    fn table2() -> FuzzyContext {
        parse_context("alias paper\nattributes m1 m2 m3\ng1 a b I\ng2 b O a\n").unwrap()
    }

    #[test]
    fn candidate_counts() {
        let k = table2();
        let full = |e| ScanOptions::new(e, Domain::Full);
        assert_eq!(candidate_count(&k, &full(Engine::ExtentScan)).unwrap(), 36);
        assert_eq!(candidate_count(&k, &full(Engine::IntentScan)).unwrap(), 216);
        let gen = ScanOptions::new(Engine::IntentScan, Domain::Generated);
        assert_eq!(candidate_count(&k, &gen).unwrap(), 64);
    }

    #[test]
    fn generated_domain_of_the_worked_example() {
        let k = table2();
        let labels: Vec<String> = resolve_domain(&k, &Domain::Generated)
            .unwrap()
            .iter()
            .map(|v| k.algebra().label(v))
            .collect();
        assert_eq!(labels, ["AbT", "SlT", "SlF", "AbF"]);
        let with_ve = Domain::GeneratedBy(vec![TruthValue::new([2, 2])]);
        assert_eq!(resolve_domain(&k, &with_ve).unwrap().len(), 6);
    }

    #[test]
    fn budget_errors_name_the_count() {
        let k = table2();
        let opts = ScanOptions::new(Engine::IntentScan, Domain::Full).with_budget(100);
        let err = enumerate_concepts(&k, &opts).unwrap_err();
        assert_eq!(
            err,
            GaloisError::Budget {
                engine: Engine::IntentScan,
                candidates: 216,
                budget: 100
            }
        );
        assert!(err.to_string().contains("216"));
    }

    #[test]
    fn single_cell_context_matches_pair_scan() {
        // every (A, B) pair of one object and one attribute, checked directly
        let k = parse_context("attributes m\ng AbT\n").unwrap();
        let alg = k.algebra();
        let mut expected = Vec::new();
        for a in alg.elements() {
            for b in alg.elements() {
                let f1 = alg.imp(&a, &alg.top()).unwrap();
                let f2 = alg.imp(&b, &alg.top()).unwrap();
                if f1 == b && f2 == a {
                    expected.push((a.clone(), b.clone()));
                }
            }
        }
        let l =
            enumerate_concepts(&k, &ScanOptions::new(Engine::ExtentScan, Domain::Full)).unwrap();
        let got: Vec<_> = l
            .concepts()
            .iter()
            .map(|c| (c.extent.values()[0].clone(), c.intent.values()[0].clone()))
            .collect();
        assert_eq!(got, expected);
        assert_eq!(got.len(), 1);
    }

    #[test]
    fn degenerate_contexts() {
        let no_objects = parse_context("attributes m1 m2\n").unwrap();
        let l = enumerate_concepts(&no_objects, &ScanOptions::default()).unwrap();
        assert_eq!(l.len(), 1);
        let no_attrs = parse_context("attributes\ng1\ng2\n").unwrap();
        for e in [Engine::ExtentScan, Engine::IntentScan] {
            let l = enumerate_concepts(&no_attrs, &ScanOptions::new(e, Domain::Full)).unwrap();
            assert_eq!(l.len(), 1);
            assert_eq!(
                l.concepts()[0].extent.values(),
                [alg_top(&no_attrs), alg_top(&no_attrs)]
            );
        }
    }

    fn alg_top(k: &FuzzyContext) -> TruthValue {
        k.algebra().top()
    }
}
