//! Line-oriented context files.
//!
//! ```text
//! algebra product 3 2             # or: algebra table <path>
//! alias a=SlT b=SlF I=AbT O=AbF   # optional
//! attributes m1 m2 m3
//! g1 a b I
//! g2 b O a
//! ```
//!
//! `#` starts a comment. Without an `algebra` line the six-element product is
//! used. `alias` accepts `name=Label` pairs, the built-in set `paper`, or a
//! positional list naming every element in canonical order.

use std::collections::HashSet;
use std::path::Path;
use std::sync::Arc;

use crate::lia::{Algebra, Lia, TableAlgebra, TruthValue};

use super::{AlgebraSource, AttributeProvenance, ContextError, FuzzyContext};

/// The label names used by the worked examples: `a` and `b` are the two
/// incomparable "slightly" values, `I` and `O` are top and bottom. This is the
/// only assignment of the four names to six-element values under which the
/// product algebra reproduces the published concept list.
pub const PAPER_ALIASES: [(&str, &str); 4] =
    [("a", "SlT"), ("b", "SlF"), ("I", "AbT"), ("O", "AbF")];

pub fn parse_context(text: &str) -> Result<FuzzyContext, ContextError> {
    parse_context_in(text, None)
}

/// Reads a context file; `algebra table` paths resolve against its directory.
pub fn load_context(path: impl AsRef<Path>) -> Result<FuzzyContext, ContextError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| ContextError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_context_in(&text, path.parent())
}

/// Parses context text, resolving relative table paths against `base`.
pub fn parse_context_in(text: &str, base: Option<&Path>) -> Result<FuzzyContext, ContextError> {
    let mut algebra: Option<(Arc<Algebra>, AlgebraSource)> = None;
    let mut aliases: Vec<(String, TruthValue)> = Vec::new();
    let mut attributes: Option<Vec<String>> = None;
    let mut objects: Vec<String> = Vec::new();
    let mut matrix: Vec<Vec<TruthValue>> = Vec::new();
    let mut seen_objects = HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |message: String| ContextError::Parse { line, message };
        let content = raw.split('#').next().unwrap_or("").trim();
        let words: Vec<&str> = content.split_whitespace().collect();
        let Some((&head, rest)) = words.split_first() else {
            continue;
        };

        match head {
            "algebra" => {
                if algebra.is_some() || !aliases.is_empty() || attributes.is_some() {
                    return Err(err("`algebra` must come first and only once".into()));
                }
                algebra = Some(parse_algebra(rest, base).map_err(|e| err(e.to_string()))?);
            }
            "alias" => {
                if attributes.is_some() {
                    return Err(err("`alias` must precede `attributes`".into()));
                }
                let alg = &algebra.get_or_insert_with(default_algebra).0;
                for (name, v) in parse_alias(alg, rest).map_err(err)? {
                    if aliases.iter().any(|(n, _)| *n == name) {
                        return Err(err(format!("duplicate alias `{name}`")));
                    }
                    if alg.parse_label(&name).is_some_and(|c| c != v) {
                        return Err(err(format!(
                            "alias `{name}` shadows a different canonical label"
                        )));
                    }
                    aliases.push((name, v));
                }
            }
            "attributes" => {
                if attributes.is_some() {
                    return Err(err("duplicate `attributes` line".into()));
                }
                let names: Vec<String> = rest.iter().map(|s| s.to_string()).collect();
                let mut seen = HashSet::new();
                if let Some(d) = names.iter().find(|n| !seen.insert(n.as_str())) {
                    return Err(err(format!("duplicate attribute name `{d}`")));
                }
                algebra.get_or_insert_with(default_algebra);
                attributes = Some(names);
            }
            name => {
                let Some(attrs) = &attributes else {
                    return Err(err(format!("row `{name}` before `attributes`")));
                };
                if rest.len() != attrs.len() {
                    return Err(err(format!(
                        "row `{name}` has {} values, expected {}",
                        rest.len(),
                        attrs.len()
                    )));
                }
                if !seen_objects.insert(name.to_string()) {
                    return Err(err(format!("duplicate object name `{name}`")));
                }
                let alg = &algebra.as_ref().expect("set with attributes").0;
                let row = rest
                    .iter()
                    .map(|tok| {
                        aliases
                            .iter()
                            .find(|(n, _)| n == tok)
                            .map(|(_, v)| v.clone())
                            .or_else(|| alg.parse_label(tok))
                            .ok_or_else(|| {
                                err(format!("unknown label `{tok}` for {}", alg.describe()))
                            })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                objects.push(name.to_string());
                matrix.push(row);
            }
        }
    }

    let attributes = attributes.ok_or(ContextError::Parse {
        line: text.lines().count().max(1),
        message: "missing `attributes` line".into(),
    })?;
    let (alg, source) = algebra.unwrap_or_else(default_algebra);
    let mut ctx = FuzzyContext::new(alg, objects, attributes, matrix)?.with_aliases(aliases)?;
    ctx.set_source(source);
    Ok(ctx)
}

fn default_algebra() -> (Arc<Algebra>, AlgebraSource) {
    (Arc::new(Algebra::l6()), AlgebraSource::Inline)
}

fn parse_algebra(
    rest: &[&str],
    base: Option<&Path>,
) -> Result<(Arc<Algebra>, AlgebraSource), ContextError> {
    match rest {
        ["product", sizes @ ..] if !sizes.is_empty() => {
            let sizes = sizes
                .iter()
                .map(|s| {
                    s.parse::<u16>()
                        .map_err(|_| ContextError::Argument(format!("bad chain size `{s}`")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok((Arc::new(Algebra::product(&sizes)?), AlgebraSource::Inline))
        }
        ["table", path] => {
            let full = match base {
                Some(b) => b.join(path),
                None => Path::new(path).to_path_buf(),
            };
            let text = std::fs::read_to_string(&full).map_err(|source| ContextError::Io {
                path: full.display().to_string(),
                source,
            })?;
            let table = TableAlgebra::parse(&text)?;
            Ok((
                Arc::new(Algebra::Table(table)),
                AlgebraSource::TableFile(path.to_string()),
            ))
        }
        _ => Err(ContextError::Argument(
            "expected `algebra product <sizes...>` or `algebra table <path>`".into(),
        )),
    }
}

fn parse_alias(alg: &Algebra, rest: &[&str]) -> Result<Vec<(String, TruthValue)>, String> {
    let label = |s: &str| {
        alg.parse_label(s)
            .ok_or_else(|| format!("unknown label `{s}` for {}", alg.describe()))
    };
    match rest {
        [] => Err("`alias` needs at least one mapping".into()),
        ["paper"] => {
            if !alg.is_l6() {
                return Err("the `paper` aliases need the product 3 2 algebra".into());
            }
            PAPER_ALIASES
                .iter()
                .map(|(n, l)| Ok((n.to_string(), label(l)?)))
                .collect()
        }
        pairs if pairs.iter().all(|p| p.contains('=')) => pairs
            .iter()
            .map(|p| {
                let (name, target) = p.split_once('=').expect("checked");
                if name.is_empty() {
                    return Err(format!("empty alias name in `{p}`"));
                }
                Ok((name.to_string(), label(target)?))
            })
            .collect(),
        names if names.iter().any(|p| p.contains('=')) => {
            Err("cannot mix `name=Label` pairs with positional aliases".into())
        }
        names => {
            let elems = alg.elements();
            if names.len() != elems.len() {
                return Err(format!(
                    "positional alias lists {} names for {} elements",
                    names.len(),
                    elems.len()
                ));
            }
            Ok(names.iter().map(|n| n.to_string()).zip(elems).collect())
        }
    }
}

/// Writes a context in the format read by [`parse_context`], with single
/// spaces between fields and provenance of derived attributes as comments.
pub fn serialize_context(ctx: &FuzzyContext) -> String {
    let mut out = String::new();
    match ctx.algebra_source() {
        AlgebraSource::TableFile(p) => out.push_str(&format!("algebra table {p}\n")),
        AlgebraSource::Inline => match ctx.algebra().as_ref() {
            Algebra::Product(_) => out.push_str(&format!("algebra {}\n", ctx.algebra().describe())),
            // not reloadable without a file path
            Algebra::Table(_) => out.push_str(&format!("# algebra {}\n", ctx.algebra().describe())),
        },
    }
    if !ctx.aliases().is_empty() {
        out.push_str("alias");
        for (n, v) in ctx.aliases() {
            out.push_str(&format!(" {n}={}", ctx.algebra().label(v)));
        }
        out.push('\n');
    }
    out.push_str("attributes");
    for a in ctx.attributes() {
        out.push(' ');
        out.push_str(a);
    }
    out.push('\n');
    for (name, p) in ctx.attributes().iter().zip(ctx.provenance()) {
        if *p != AttributeProvenance::Original {
            let formula = p.formula(ctx.attributes()).expect("derived attribute");
            out.push_str(&format!("# {name} = {formula}\n"));
        }
    }
    for (g, obj) in ctx.objects().iter().enumerate() {
        out.push_str(obj);
        for m in 0..ctx.attributes().len() {
            out.push(' ');
            out.push_str(&ctx.spell(ctx.cell(g, m)));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const TABLE2: &str = "\
algebra product 3 2
alias a=SlT b=SlF I=AbT O=AbF
attributes m1 m2 m3
g1 a b I
g2 b O a
";

    #[test]
    fn parses_the_worked_example() {
        let k = parse_context(TABLE2).unwrap();
        assert_eq!(k.objects(), ["g1", "g2"]);
        assert_eq!(k.attributes(), ["m1", "m2", "m3"]);
        assert_eq!(k.cell(0, 0), &TruthValue::new([1, 2]));
        assert_eq!(k.cell(1, 1), &TruthValue::new([1, 1]));
        assert!(k.is_original());
    }

    #[test]
    fn builtin_paper_alias_matches_explicit_pairs() {
        let explicit = parse_context(TABLE2).unwrap();
        let builtin =
            parse_context(&TABLE2.replace("alias a=SlT b=SlF I=AbT O=AbF", "alias paper")).unwrap();
        assert_eq!(explicit, builtin);
    }

    #[test]
    fn positional_alias_follows_canonical_order() {
        let text = "alias I A B C D O\nattributes m\ng C\nh B\n";
        let k = parse_context(text).unwrap();
        assert_eq!(k.cell(0, 0), &TruthValue::new([3, 1]));
        assert_eq!(k.cell(1, 0), &TruthValue::new([1, 2]));
        let short = "alias I A B\nattributes m\n";
        assert!(matches!(
            parse_context(short),
            Err(ContextError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn canonical_labels_work_without_aliases() {
        let k = parse_context("attributes x y\ng AbT VeF\n").unwrap();
        assert_eq!(k.cell(0, 1), &TruthValue::new([2, 1]));
        assert_eq!(k.algebra().describe(), "product 3 2");
    }

    #[test]
    fn empty_object_section_is_valid() {
        let k = parse_context("algebra product 3 2\nattributes m1 m2\n").unwrap();
        assert!(k.objects().is_empty());
        assert_eq!(k.attributes().len(), 2);
    }

    #[test]
    fn parse_errors_report_lines() {
        let cases = [
            ("attributes m1 m2 m3\ng1 AbT AbT\n", 2),
            ("attributes m1\ng1 Xyz\n", 2),
            ("attributes m1\ng1 AbT\ng1 AbF\n", 3),
            ("g1 AbT\nattributes m1\n", 1),
            ("attributes m1 m1\n", 1),
            ("attributes m\nalgebra product 3 2\n", 2),
            ("algebra product 1 2\nattributes m\n", 1),
            ("algebra product 3 2\nalias a=Zz\nattributes m\n", 2),
            ("algebra product 4 2\nalias paper\nattributes m\n", 2),
        ];
        for (text, line) in cases {
            match parse_context(text) {
                Err(ContextError::Parse { line: l, .. }) => assert_eq!(l, line, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
        assert!(matches!(
            parse_context("# nothing\n"),
            Err(ContextError::Parse { .. })
        ));
    }

    #[test]
    fn serialize_round_trips() {
        let k = parse_context(TABLE2).unwrap();
        let text = serialize_context(&k);
        assert_eq!(text, TABLE2);
        assert_eq!(parse_context(&text).unwrap(), k);
    }

    #[test]
    fn zero_attribute_context_serializes_header_only() {
        let k = parse_context("attributes\n").unwrap();
        assert_eq!(serialize_context(&k), "algebra product 3 2\nattributes\n");
        let with_rows = parse_context("attributes\ng1\ng2\n").unwrap();
        assert_eq!(with_rows.objects().len(), 2);
        assert_eq!(
            parse_context(&serialize_context(&with_rows)).unwrap(),
            with_rows
        );
    }

    #[test]
    fn table_algebra_paths_resolve_against_the_file() {
        let dir = std::env::temp_dir().join(format!("ltvcl-ctx-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        std::fs::write(
            dir.join("bool.lia"),
            "elements O I\nimp O I I\nimp I O I\nneg O I\nneg I O\n",
        )
        .unwrap();
        std::fs::write(
            dir.join("k.ctx"),
            "algebra table bool.lia\nattributes m\ng I\nh O\n",
        )
        .unwrap();
        let k = load_context(dir.join("k.ctx")).unwrap();
        assert_eq!(k.algebra().size(), 2);
        assert_eq!(
            k.algebra_source(),
            &AlgebraSource::TableFile("bool.lia".into())
        );
        assert_eq!(
            serialize_context(&k),
            "algebra table bool.lia\nattributes m\ng I\nh O\n"
        );
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
