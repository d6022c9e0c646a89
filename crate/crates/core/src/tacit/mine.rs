use serde::{Deserialize, Serialize};

use crate::context::{extend_context, AttributeProvenance, ExtensionConfig, FuzzyContext};
use crate::galois::{enumerate_concepts, Compiled, ConceptLattice, ScanOptions};

use super::classify::{classify_aligned, ClassifyOptions, TheoremCheck, TheoremKind};
use super::{compare_lattices, shared_options, Aligned, CongenerReport, TacitError};

/// Extends every concept of `base` to a concept of `ext` without a scan.
///
/// Each intent gains, per new attribute, the meet of its components on the
/// attribute's source columns, or top for a top column. Extents are kept.
/// Refuses when some new column satisfies neither condition, since the
/// result would then not be the concept set of `ext`. The returned lattice
/// is over `ext` rearranged to `base`'s object order, base attributes first.
pub fn extend_concepts_fast(
    base: &ConceptLattice,
    ext: &FuzzyContext,
) -> Result<ConceptLattice, TacitError> {
    let al = Aligned::new(base.context(), ext)?;
    let checks = classify_aligned(&al, &ClassifyOptions::default());
    extend_with_checks(base, &al, &checks)
}

fn extend_with_checks(
    base: &ConceptLattice,
    al: &Aligned,
    checks: &[TheoremCheck],
) -> Result<ConceptLattice, TacitError> {
    let failed: Vec<String> = checks
        .iter()
        .filter(|c| !c.satisfied)
        .map(|c| c.attribute.clone())
        .collect();
    if !failed.is_empty() {
        return Err(TacitError::Unclassified(failed));
    }
    let compiled = base.compiled();
    let t = compiled.tables.clone();
    let plan: Vec<Option<Vec<usize>>> = checks
        .iter()
        .map(|c| match c.theorem {
            Some(TheoremKind::Top) => None,
            _ => Some(
                c.sources
                    .iter()
                    .map(|s| {
                        al.base
                            .attribute_index(s)
                            .expect("source is a base attribute")
                    })
                    .collect(),
            ),
        })
        .collect();
    let pairs = base
        .index_pairs()
        .iter()
        .map(|(a, b)| {
            let mut b_plus = b.clone();
            b_plus.extend(plan.iter().map(|p| match p {
                None => t.top(),
                Some(src) => src.iter().fold(t.top(), |acc, &m| t.meet(acc, b[m])),
            }));
            (a.clone(), b_plus)
        })
        .collect();
    let ext_compiled = Compiled::with_tables(&al.ext, t.clone())?;
    Ok(ConceptLattice::from_pairs(&al.ext, ext_compiled, pairs, 0))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TacitAttribute {
    pub name: String,
    /// `"meet"` or `"top"`.
    pub kind: String,
    pub sources: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MiningReport {
    pub tacit: Vec<TacitAttribute>,
    pub theorem_checks: Vec<TheoremCheck>,
    pub congener: bool,
    pub concepts_base: usize,
    pub concepts_ext: usize,
    /// The fast extension equals the full recomputation concept for concept.
    pub fast_verified: bool,
    /// Extents in exactly one lattice, as canonical labels.
    pub witnesses: Vec<Vec<String>>,
}

impl MiningReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// Both guarantees hold: no new concepts and a sound fast extension.
    pub fn succeeded(&self) -> bool {
        self.congener && self.fast_verified
    }
}

/// Everything a mining run produced.
#[derive(Debug, Clone)]
pub struct MiningRun {
    pub report: MiningReport,
    pub congener: CongenerReport,
    pub extended: FuzzyContext,
    pub base_lattice: ConceptLattice,
    pub extended_lattice: ConceptLattice,
    /// `None` when the fast extension refused.
    pub fast_lattice: Option<ConceptLattice>,
}

pub fn mine(
    base: &FuzzyContext,
    cfg: &ExtensionConfig,
    opts: &ScanOptions,
) -> Result<MiningReport, TacitError> {
    Ok(mine_detailed(base, cfg, opts)?.report)
}

/// Extends `base`, classifies the new columns, extends its concepts by the
/// fast path and checks the result against full enumeration of both contexts.
pub fn mine_detailed(
    base: &FuzzyContext,
    cfg: &ExtensionConfig,
    opts: &ScanOptions,
) -> Result<MiningRun, TacitError> {
    let extended = extend_context(base, cfg)?;
    let al = Aligned::new(base, &extended)?;
    let checks = classify_aligned(&al, &ClassifyOptions::default());
    let opts = shared_options(opts, &al.ext);
    let base_lattice = enumerate_concepts(&al.base, &opts)?;
    let extended_lattice = enumerate_concepts(&al.ext, &opts)?;
    let congener = compare_lattices(&base_lattice, &extended_lattice);
    let fast_lattice = match extend_with_checks(&base_lattice, &al, &checks) {
        Ok(l) => Some(l),
        Err(TacitError::Unclassified(_)) => None,
        Err(e) => return Err(e),
    };
    let fast_verified = fast_lattice
        .as_ref()
        .is_some_and(|l| l.same_concepts(&extended_lattice));

    let names = extended.attributes();
    let tacit = (base.attributes().len()..names.len())
        .filter_map(|m| match &extended.provenance()[m] {
            AttributeProvenance::Original => None,
            AttributeProvenance::ConstantTop => Some(TacitAttribute {
                name: names[m].clone(),
                kind: "top".into(),
                sources: vec![],
            }),
            AttributeProvenance::MeetOf(src) => Some(TacitAttribute {
                name: names[m].clone(),
                kind: "meet".into(),
                sources: src.iter().map(|&i| names[i].clone()).collect(),
            }),
        })
        .collect();
    let alg = base.algebra();
    let report = MiningReport {
        tacit,
        theorem_checks: checks,
        congener: congener.is_congener,
        concepts_base: base_lattice.len(),
        concepts_ext: extended_lattice.len(),
        fast_verified,
        witnesses: congener
            .witnesses
            .iter()
            .map(|w| w.labels(alg.as_ref()))
            .collect(),
    };
    Ok(MiningRun {
        report,
        congener,
        extended,
        base_lattice,
        extended_lattice,
        fast_lattice,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::parse_context;
    use crate::galois::{Domain, Engine};

    fn table2() -> FuzzyContext {
        parse_context("alias paper\nattributes m1 m2 m3\ng1 a b I\ng2 b O a\n").unwrap()
    }

    fn spelled(k: &FuzzyContext, s: &crate::galois::FuzzySet) -> String {
        s.values()
            .iter()
            .map(|v| k.spell(v))
            .collect::<Vec<_>>()
            .join(",")
    }

    #[test]
    fn paper_preset_end_to_end() {
        let run = mine_detailed(
            &table2(),
            &ExtensionConfig::paper(),
            &ScanOptions::default(),
        )
        .unwrap();
        let r = &run.report;
        assert_eq!(r.tacit.len(), 2);
        assert_eq!(
            (r.tacit[0].name.as_str(), r.tacit[0].kind.as_str()),
            ("m4", "meet")
        );
        assert_eq!(r.tacit[0].sources, ["m1", "m2"]);
        assert_eq!(
            (r.tacit[1].name.as_str(), r.tacit[1].kind.as_str()),
            ("m5", "top")
        );
        assert!(r.congener && r.fast_verified && r.succeeded());
        assert_eq!((r.concepts_base, r.concepts_ext), (12, 12));
        assert!(r.witnesses.is_empty());

        let fast = run.fast_lattice.unwrap();
        let k = &run.extended;
        let top = fast.concept(fast.top());
        assert_eq!(spelled(k, &top.intent), "O,O,a,O,I");
        let bottom = fast.concept(fast.bottom());
        assert_eq!(spelled(k, &bottom.intent), "I,I,I,I,I");
        let i = fast
            .concepts()
            .iter()
            .position(|c| spelled(k, &c.extent) == "a,O")
            .unwrap();
        assert_eq!(spelled(k, &fast.concept(i).intent), "I,b,I,b,I");
    }

    #[test]
    fn report_json_shape() {
        let r = mine(
            &table2(),
            &ExtensionConfig::paper(),
            &ScanOptions::default(),
        )
        .unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        for key in [
            "tacit",
            "congener",
            "concepts_base",
            "concepts_ext",
            "fast_verified",
            "witnesses",
        ] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["tacit"][1]["kind"], "top");
        assert_eq!(v["theorem_checks"][0]["theorem"], "pair-meet");
        let back: MiningReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn fast_path_refuses_unclassified_columns() {
        let k = table2();
        let base = enumerate_concepts(&k, &ScanOptions::default()).unwrap();
        let ext = parse_context("alias paper\nattributes m1 m2 m3 x\ng1 a b I VeT\ng2 b O a O\n")
            .unwrap();
        match extend_concepts_fast(&base, &ext) {
            Err(TacitError::Unclassified(names)) => assert_eq!(names, ["x"]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn all_top_single_cell() {
        let k = parse_context("attributes m1\ng1 AbT\n").unwrap();
        let r = mine(&k, &ExtensionConfig::default(), &ScanOptions::default()).unwrap();
        assert!(r.tacit.is_empty());
        assert!(r.congener && r.fast_verified);
    }

    #[test]
    fn full_domain_mining() {
        let opts = ScanOptions::new(Engine::ExtentScan, Domain::Full);
        let r = mine(&table2(), &ExtensionConfig::default(), &opts).unwrap();
        assert_eq!((r.concepts_base, r.concepts_ext), (27, 27));
        assert!(r.succeeded());
    }
}
