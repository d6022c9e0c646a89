//! Acceptance criteria, one line each. Runs without the test harness so the
//! lines always show; exits non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use itertools::Itertools;
use ltvcl_core::context::{extend_context, ExtensionConfig, FuzzyContext};
use ltvcl_core::galois::{
    candidate_count, derive_extent, derive_intent, enumerate_concepts, Domain, Engine, FuzzySet,
    ScanOptions,
};
use ltvcl_core::lia::{check_axioms, Algebra, Lia, TableAlgebra, TruthValue};
use ltvcl_core::tacit::{extend_concepts_fast, is_congener, mine_detailed};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

/// The twelve concepts of the worked example, in alias spelling.
const BASE_CONCEPTS: [(&str, &str); 12] = [
    ("I I", "O O a"),
    ("a I", "b O a"),
    ("I a", "O b I"),
    ("I b", "a O a"),
    ("a a", "b b I"),
    ("a b", "I O a"),
    ("b b", "a a a"),
    ("I O", "a b I"),
    ("a O", "I b I"),
    ("O b", "I a a"),
    ("b O", "a I I"),
    ("O O", "I I I"),
];

/// The same concepts after adding `m4 = m1 ∧ m2` and `m5 = top`.
const EXTENDED_CONCEPTS: [(&str, &str); 12] = [
    ("I I", "O O a O I"),
    ("a I", "b O a O I"),
    ("I a", "O b I O I"),
    ("I b", "a O a O I"),
    ("a a", "b b I b I"),
    ("a b", "I O a O I"),
    ("b b", "a a a a I"),
    ("I O", "a b I O I"),
    ("a O", "I b I b I"),
    ("O b", "I a a a I"),
    ("b O", "a I I a I"),
    ("O O", "I I I I I"),
];

const SEED: u64 = 0x5eed_1a77;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn resolve_all(ctx: &FuzzyContext, text: &str) -> Vec<TruthValue> {
    text.split_whitespace()
        .map(|t| ctx.resolve(t).unwrap())
        .collect()
}

fn expected_set(
    ctx: &FuzzyContext,
    list: &[(&str, &str)],
) -> BTreeSet<(Vec<TruthValue>, Vec<TruthValue>)> {
    list.iter()
        .map(|(a, b)| (resolve_all(ctx, a), resolve_all(ctx, b)))
        .collect()
}

fn full(engine: Engine) -> ScanOptions {
    ScanOptions::new(engine, Domain::Full)
}

/// The random contexts shared by the congener campaigns.
fn campaign_contexts() -> Vec<FuzzyContext> {
    let alg = Arc::new(Algebra::l6());
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..100)
        .map(|_| {
            let g = rand::Rng::gen_range(&mut rng, 1..=3);
            let m = rand::Rng::gen_range(&mut rng, 1..=3);
            random_context(&mut rng, &alg, g, m)
        })
        .collect()
}

fn criterion_1() -> Outcome {
    let k = table2();
    let l = enumerate_concepts(&k, &ScanOptions::default()).map_err(|e| e.to_string())?;
    let got: BTreeSet<_> = l
        .concepts()
        .iter()
        .map(|c| (c.extent.values().to_vec(), c.intent.values().to_vec()))
        .collect();
    check(l.len() == 12, || format!("{} concepts", l.len()))?;
    check(got == expected_set(&k, &BASE_CONCEPTS), || {
        "concept set differs".into()
    })?;
    Ok("12 concepts equal to the worked-example list".into())
}

fn criterion_2() -> Outcome {
    let k = table2();
    let n_ext = candidate_count(&k, &full(Engine::ExtentScan)).unwrap();
    let n_int = candidate_count(&k, &full(Engine::IntentScan)).unwrap();
    check((n_ext, n_int) == (36, 216), || {
        format!("candidates {n_ext}/{n_int}")
    })?;
    let agree = |ctx: &FuzzyContext| -> Result<usize, String> {
        let a = enumerate_concepts(ctx, &full(Engine::ExtentScan)).map_err(|e| e.to_string())?;
        let b = enumerate_concepts(ctx, &full(Engine::IntentScan)).map_err(|e| e.to_string())?;
        check(a.same_concepts(&b), || {
            format!("engines disagree on\n{ctx}")
        })?;
        Ok(a.len())
    };
    let n = agree(&k)?;
    check(n == 27, || format!("{n} full-domain concepts"))?;
    for ctx in campaign_contexts() {
        agree(&ctx)?;
    }
    Ok("engines agree on the worked example (36/216 candidates) and 100 random contexts".into())
}

fn criterion_3() -> Outcome {
    let k = table2();
    let run = mine_detailed(&k, &ExtensionConfig::paper(), &ScanOptions::default())
        .map_err(|e| e.to_string())?;
    let r = &run.report;
    let ext = &run.extended;
    check(ext.attributes() == ["m1", "m2", "m3", "m4", "m5"], || {
        format!("attributes {:?}", ext.attributes())
    })?;
    let labels = |m: usize| {
        ext.column(m)
            .iter()
            .map(|v| ext.algebra().label(v))
            .collect::<Vec<_>>()
    };
    check(labels(3) == ["AbF", "AbF"], || {
        format!("m4 = {:?}", labels(3))
    })?;
    check(labels(4) == ["AbT", "AbT"], || {
        format!("m5 = {:?}", labels(4))
    })?;
    check(
        r.tacit.len() == 2
            && r.tacit[0].kind == "meet"
            && r.tacit[0].sources == ["m1", "m2"]
            && r.tacit[1].kind == "top",
        || format!("tacit {:?}", r.tacit),
    )?;
    check(r.congener && r.fast_verified, || {
        "not congener or fast path unverified".into()
    })?;
    check((r.concepts_base, r.concepts_ext) == (12, 12), || {
        format!("{} / {} concepts", r.concepts_base, r.concepts_ext)
    })?;
    let fast = run.fast_lattice.as_ref().ok_or("fast extension refused")?;
    let got: BTreeSet<_> = fast
        .concepts()
        .iter()
        .map(|c| (c.extent.values().to_vec(), c.intent.values().to_vec()))
        .collect();
    check(got == expected_set(ext, &EXTENDED_CONCEPTS), || {
        "extended concepts differ".into()
    })?;
    check(run.extended_lattice.same_concepts(fast), || {
        "recomputation differs".into()
    })?;
    Ok("m4 = m1∧m2 = (AbF, AbF), m5 = top; 12 extended concepts match; congener, fast path verified".into())
}

fn criterion_4() -> Outcome {
    let mut triples = Vec::new();
    for sizes in [[2u16, 2], [3, 2], [4, 2], [5, 2]] {
        let alg = Algebra::product(&sizes).unwrap();
        let r = check_axioms(&alg).map_err(|e| e.to_string())?;
        check(r.passed && r.violations.is_empty(), || {
            format!("{sizes:?}: {}", r.describe(&alg).join("; "))
        })?;
        triples.push(r.triples);
    }
    check(triples == [64, 216, 512, 1000], || {
        format!("triples {triples:?}")
    })?;
    // imp(O, I) changed from I to O
    let corrupted = "elements O I\nimp O I O\nimp I O I\nneg O I\nneg I O\n";
    let alg = TableAlgebra::parse(corrupted).map_err(|e| e.to_string())?;
    let r = check_axioms(&alg).map_err(|e| e.to_string())?;
    check(!r.passed, || "corruption not detected".into())?;
    let v = &r.violations[0];
    check(!v.witness.is_empty(), || "violation without witness".into())?;
    Ok(format!(
        "products [2,2] [3,2] [4,2] [5,2] pass ({} triples); corrupted table caught: {}",
        triples.iter().sum::<usize>(),
        r.describe(&alg)[0]
    ))
}

/// Meet-column extensions of arity 2 and 3, singly and all together.
fn meet_extensions(k: &FuzzyContext) -> Vec<FuzzyContext> {
    let n = k.attributes().len();
    let mut out: Vec<FuzzyContext> = (2..=3.min(n))
        .flat_map(|arity| (0..n).combinations(arity))
        .map(|src| with_column(k, "n", meet_column(k, &src)))
        .collect();
    if n >= 2 {
        let cfg = ExtensionConfig {
            max_meet_arity: 3,
            include_top_column: false,
            novelty_filter: false,
            meet_limit: None,
        };
        out.push(extend_context(k, &cfg).unwrap());
    }
    out
}

fn top_extension(k: &FuzzyContext) -> FuzzyContext {
    with_column(k, "n", vec![k.algebra().top(); k.objects().len()])
}

fn congener_campaign(
    extensions: impl Fn(&FuzzyContext) -> Vec<FuzzyContext>,
) -> Result<usize, String> {
    let mut checked = 0;
    for k in campaign_contexts() {
        for km in extensions(&k) {
            let r = is_congener(&k, &km, &full(Engine::ExtentScan)).map_err(|e| e.to_string())?;
            check(r.is_congener, || format!("not congener:\n{k}\n{km}"))?;
            checked += 1;
        }
    }
    Ok(checked)
}

fn criterion_5() -> Outcome {
    let n = congener_campaign(meet_extensions)?;
    Ok(format!(
        "{n} meet-column extensions of 100 random contexts are congener"
    ))
}

fn criterion_6() -> Outcome {
    let n = congener_campaign(|k| vec![top_extension(k)])?;
    Ok(format!("{n} top-column extensions are congener"))
}

fn galois_laws(k: &FuzzyContext, domain: &[TruthValue]) -> Result<usize, String> {
    let alg = k.algebra();
    let sub = |x: &FuzzySet, y: &FuzzySet| x.is_subset(y, alg.as_ref()).unwrap();
    let ext_sets: Vec<FuzzySet> = all_vectors(domain, k.objects().len())
        .into_iter()
        .map(FuzzySet::objects)
        .collect();
    let int_sets: Vec<FuzzySet> = all_vectors(domain, k.attributes().len())
        .into_iter()
        .map(FuzzySet::attributes)
        .collect();
    let f1: Vec<FuzzySet> = ext_sets
        .iter()
        .map(|a| derive_intent(k, a).unwrap())
        .collect();
    let f2: Vec<FuzzySet> = int_sets
        .iter()
        .map(|b| derive_extent(k, b).unwrap())
        .collect();
    let mut checks = 0;
    for (i, a) in ext_sets.iter().enumerate() {
        let fa = &f1[i];
        let closed = derive_extent(k, fa).unwrap();
        check(sub(a, &closed), || format!("extensivity fails at {a}"))?;
        check(derive_intent(k, &closed).unwrap() == *fa, || {
            format!("f1 f2 f1 != f1 at {a}")
        })?;
        for (j, a2) in ext_sets.iter().enumerate() {
            if sub(a, a2) {
                check(sub(&f1[j], fa), || format!("f1 not antitone at {a} ⊆ {a2}"))?;
            }
        }
        checks += 1;
    }
    for (i, b) in int_sets.iter().enumerate() {
        let fb = &f2[i];
        let closed = derive_intent(k, fb).unwrap();
        check(sub(b, &closed), || format!("extensivity fails at {b}"))?;
        check(derive_extent(k, &closed).unwrap() == *fb, || {
            format!("f2 f1 f2 != f2 at {b}")
        })?;
        for (j, b2) in int_sets.iter().enumerate() {
            if sub(b, b2) {
                check(sub(&f2[j], fb), || format!("f2 not antitone at {b} ⊆ {b2}"))?;
            }
        }
        checks += 1;
    }
    Ok(checks)
}

fn criterion_7() -> Outcome {
    let alg = Arc::new(Algebra::product(&[2, 2]).unwrap());
    let domain = alg.elements();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    let mut sets = 0;
    for _ in 0..200 {
        let k = random_context(&mut rng, &alg, 2, 2);
        sets += galois_laws(&k, &domain)?;
    }
    let k = table2();
    sets += galois_laws(&k, &k.algebra().elements())?;
    Ok(format!(
        "antitonicity, extensivity and f1∘f2∘f1 = f1 hold on 200 random 2×2 contexts and the worked example ({sets} sets)"
    ))
}

fn criterion_8() -> Outcome {
    let mut n = 0;
    for k in campaign_contexts() {
        let base = enumerate_concepts(&k, &full(Engine::ExtentScan)).map_err(|e| e.to_string())?;
        for km in meet_extensions(&k).into_iter().chain([top_extension(&k)]) {
            let fast = extend_concepts_fast(&base, &km).map_err(|e| e.to_string())?;
            let slow =
                enumerate_concepts(&km, &full(Engine::ExtentScan)).map_err(|e| e.to_string())?;
            check(fast.same_concepts(&slow), || {
                format!("fast extension differs:\n{km}")
            })?;
            n += 1;
        }
    }
    Ok(format!(
        "fast extension equals full enumeration on {n} extensions"
    ))
}

fn criterion_9() -> Outcome {
    let alg = Algebra::l6();
    let els = alg.elements();
    let mut n = 0;
    for x in &els {
        for y in &els {
            for z in &els {
                let lhs = alg.imp(x, &alg.meet(y, z).unwrap()).unwrap();
                let rhs = alg
                    .meet(&alg.imp(x, y).unwrap(), &alg.imp(x, z).unwrap())
                    .unwrap();
                check(lhs == rhs, || format!("fails at ({x}, {y}, {z})"))?;
                n += 1;
            }
        }
    }
    Ok(format!("x→(y∧z) = (x→y)∧(x→z) on all {n} triples of [3,2]"))
}

fn main() -> ExitCode {
    let criteria: [(fn() -> Outcome, Duration); 9] = [
        (criterion_1, Duration::from_secs(1)),
        (criterion_2, Duration::from_secs(10)),
        (criterion_3, Duration::from_secs(1)),
        (criterion_4, Duration::from_secs(5)),
        (criterion_5, Duration::MAX),
        (criterion_6, Duration::MAX),
        (criterion_7, Duration::MAX),
        (criterion_8, Duration::MAX),
        (criterion_9, Duration::MAX),
    ];
    let mut failed = 0;
    for (i, (run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if took > *limit => {
                Err(format!("{msg}, but took {took:.2?} (limit {limit:.0?})"))
            }
            other => other,
        };
        match outcome {
            Ok(msg) => println!("criterion {}: PASS  {msg} [{took:.2?}]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL  {msg} [{took:.2?}]", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
