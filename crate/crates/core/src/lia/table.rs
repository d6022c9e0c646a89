use std::collections::HashMap;

use super::{Lia, LiaError, TruthValue};

/// Raw description of a table algebra, before validation.
///
/// `imp` holds one row per element in declaration order; `neg` maps every
/// element to its negation. When `top`/`bottom` are absent the last/first
/// declared element is used.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TableSpec {
    pub element_names: Vec<String>,
    pub imp: Vec<(String, Vec<String>)>,
    pub neg: Vec<(String, String)>,
    pub top: Option<String>,
    pub bottom: Option<String>,
}

impl TableSpec {
    /// Reads the line-oriented table format:
    ///
    /// ```text
    /// elements O I
    /// imp O I I
    /// imp I O I
    /// neg O I
    /// neg I O
    /// ```
    ///
    /// `#` starts a comment. Optional `top <name>` and `bottom <name>` lines
    /// override the defaults.
    pub fn parse(text: &str) -> Result<Self, LiaError> {
        let mut spec = TableSpec::default();
        let mut seen_elements = false;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let err = |message: String| LiaError::Load { line, message };
            let content = raw.split('#').next().unwrap_or("").trim();
            let mut words = content.split_whitespace();
            let Some(head) = words.next() else { continue };
            let rest: Vec<String> = words.map(str::to_owned).collect();
            match head {
                "elements" => {
                    if seen_elements {
                        return Err(err("duplicate `elements` line".into()));
                    }
                    if rest.is_empty() {
                        return Err(err("`elements` needs at least one name".into()));
                    }
                    seen_elements = true;
                    spec.element_names = rest;
                }
                "imp" | "neg" | "top" | "bottom" if !seen_elements => {
                    return Err(err(format!("`{head}` before `elements`")));
                }
                "imp" => {
                    let (row, vals) = rest
                        .split_first()
                        .ok_or_else(|| err("`imp` needs a row name".into()))?;
                    spec.imp.push((row.clone(), vals.to_vec()));
                }
                "neg" => match rest.as_slice() {
                    [x, y] => spec.neg.push((x.clone(), y.clone())),
                    _ => return Err(err("`neg` takes exactly two names".into())),
                },
                "top" | "bottom" => {
                    let [name] = rest.as_slice() else {
                        return Err(err(format!("`{head}` takes exactly one name")));
                    };
                    if head == "top" {
                        spec.top = Some(name.clone());
                    } else {
                        spec.bottom = Some(name.clone());
                    }
                }
                other => return Err(err(format!("unknown directive `{other}`"))),
            }
        }
        if !seen_elements {
            return Err(LiaError::Load {
                line: 0,
                message: "missing `elements` line".into(),
            });
        }
        Ok(spec)
    }
}

/// A finite algebra given by explicit implication and negation tables.
///
/// The order is derived from implication: `x <= y` iff `x -> y` is top.
/// Loading only checks that the tables are total and that this order is
/// reflexive and antisymmetric; run [`super::check_axioms`] for the rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableAlgebra {
    names: Vec<String>,
    imp: Vec<usize>,
    neg: Vec<usize>,
    top: usize,
    bottom: usize,
}

impl TableAlgebra {
    pub fn parse(text: &str) -> Result<Self, LiaError> {
        Self::load(&TableSpec::parse(text)?)
    }

    pub fn load(spec: &TableSpec) -> Result<Self, LiaError> {
        let bad = |message: String| LiaError::Load { line: 0, message };
        let names = spec.element_names.clone();
        let n = names.len();
        if n == 0 {
            return Err(bad("no elements declared".into()));
        }
        if n > u16::MAX as usize {
            return Err(bad(format!("{n} elements exceed the supported maximum")));
        }
        let mut index = HashMap::with_capacity(n);
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.as_str(), i).is_some() {
                return Err(bad(format!("duplicate element `{name}`")));
            }
        }
        let lookup = |name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| bad(format!("unknown element `{name}`")))
        };

        let mut imp = vec![usize::MAX; n * n];
        let mut rows_seen = vec![false; n];
        for (row, vals) in &spec.imp {
            let r = lookup(row)?;
            if std::mem::replace(&mut rows_seen[r], true) {
                return Err(bad(format!("duplicate `imp` row for `{row}`")));
            }
            if vals.len() != n {
                return Err(bad(format!(
                    "`imp` row for `{row}` has {} entries, expected {n}",
                    vals.len()
                )));
            }
            for (c, v) in vals.iter().enumerate() {
                imp[r * n + c] = lookup(v)?;
            }
        }
        if let Some(r) = rows_seen.iter().position(|s| !s) {
            return Err(bad(format!("missing `imp` row for `{}`", names[r])));
        }

        let mut neg = vec![usize::MAX; n];
        for (x, y) in &spec.neg {
            let i = lookup(x)?;
            if neg[i] != usize::MAX {
                return Err(bad(format!("duplicate `neg` entry for `{x}`")));
            }
            neg[i] = lookup(y)?;
        }
        if let Some(i) = neg.iter().position(|&v| v == usize::MAX) {
            return Err(bad(format!("missing `neg` entry for `{}`", names[i])));
        }

        let top = match &spec.top {
            Some(t) => lookup(t)?,
            None => n - 1,
        };
        let bottom = match &spec.bottom {
            Some(b) => lookup(b)?,
            None => 0,
        };

        for i in 0..n {
            if imp[i * n + i] != top {
                return Err(bad(format!(
                    "derived order is not reflexive: `{0} -> {0}` is `{1}`, not top",
                    names[i],
                    names[imp[i * n + i]]
                )));
            }
            for j in (i + 1)..n {
                if imp[i * n + j] == top && imp[j * n + i] == top {
                    return Err(bad(format!(
                        "derived order is not antisymmetric: `{}` and `{}` are mutually below",
                        names[i], names[j]
                    )));
                }
            }
        }

        Ok(TableAlgebra {
            names,
            imp,
            neg,
            top,
            bottom,
        })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Serializes back to the line format accepted by [`TableAlgebra::parse`].
    pub fn to_text(&self) -> String {
        let n = self.names.len();
        let mut out = format!("elements {}\n", self.names.join(" "));
        for r in 0..n {
            out.push_str("imp ");
            out.push_str(&self.names[r]);
            for c in 0..n {
                out.push(' ');
                out.push_str(&self.names[self.imp[r * n + c]]);
            }
            out.push('\n');
        }
        for (i, &j) in self.neg.iter().enumerate() {
            out.push_str(&format!("neg {} {}\n", self.names[i], self.names[j]));
        }
        if self.top != n - 1 {
            out.push_str(&format!("top {}\n", self.names[self.top]));
        }
        if self.bottom != 0 {
            out.push_str(&format!("bottom {}\n", self.names[self.bottom]));
        }
        out
    }

    fn idx(&self, x: &TruthValue) -> Result<usize, LiaError> {
        self.check(x)?;
        Ok(x.coords()[0] as usize - 1)
    }

    fn value(i: usize) -> TruthValue {
        TruthValue::new([(i + 1) as u16])
    }

    fn le(&self, i: usize, j: usize) -> bool {
        self.imp[i * self.names.len() + j] == self.top
    }

    /// Greatest element below both (or least above both when `upper`).
    fn bound(&self, i: usize, j: usize, upper: bool) -> Result<usize, LiaError> {
        let n = self.names.len();
        let below = |a: usize, b: usize| if upper { self.le(b, a) } else { self.le(a, b) };
        let candidates: Vec<usize> = (0..n).filter(|&z| below(z, i) && below(z, j)).collect();
        let best: Vec<usize> = candidates
            .iter()
            .copied()
            .filter(|&z| candidates.iter().all(|&w| below(w, z)))
            .collect();
        match best.as_slice() {
            [z] => Ok(*z),
            _ => Err(LiaError::Structure {
                op: if upper { "join" } else { "meet" },
                left: self.names[i].clone(),
                right: self.names[j].clone(),
            }),
        }
    }
}

impl Lia for TableAlgebra {
    fn size(&self) -> usize {
        self.names.len()
    }

    fn elements(&self) -> Vec<TruthValue> {
        (0..self.names.len()).map(Self::value).collect()
    }

    fn top(&self) -> TruthValue {
        Self::value(self.top)
    }

    fn bottom(&self) -> TruthValue {
        Self::value(self.bottom)
    }

    fn contains(&self, x: &TruthValue) -> bool {
        matches!(x.coords(), [c] if (1..=self.names.len()).contains(&(*c as usize)))
    }

    fn leq(&self, x: &TruthValue, y: &TruthValue) -> Result<bool, LiaError> {
        Ok(self.le(self.idx(x)?, self.idx(y)?))
    }

    fn meet(&self, x: &TruthValue, y: &TruthValue) -> Result<TruthValue, LiaError> {
        self.bound(self.idx(x)?, self.idx(y)?, false)
            .map(Self::value)
    }

    fn join(&self, x: &TruthValue, y: &TruthValue) -> Result<TruthValue, LiaError> {
        self.bound(self.idx(x)?, self.idx(y)?, true)
            .map(Self::value)
    }

    fn imp(&self, x: &TruthValue, y: &TruthValue) -> Result<TruthValue, LiaError> {
        let n = self.names.len();
        Ok(Self::value(self.imp[self.idx(x)? * n + self.idx(y)?]))
    }

    fn neg(&self, x: &TruthValue) -> Result<TruthValue, LiaError> {
        Ok(Self::value(self.neg[self.idx(x)?]))
    }

    fn label(&self, x: &TruthValue) -> String {
        match self.idx(x) {
            Ok(i) => self.names[i].clone(),
            Err(_) => x.to_string(),
        }
    }

    fn parse_label(&self, s: &str) -> Option<TruthValue> {
        self.names.iter().position(|n| n == s).map(Self::value)
    }

    fn describe(&self) -> String {
        format!("table {}", self.names.join(" "))
    }
}
