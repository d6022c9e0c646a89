use std::fmt;

use super::{Lia, LiaError, TruthValue};

/// Largest algebra [`check_axioms`] accepts. The scan is cubic in the size.
pub const DEFAULT_AXIOM_BUDGET: usize = 64;

/// One law checked by [`check_axioms`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Law {
    /// `x ∧ y` or `x ∨ y` does not exist in the derived order.
    BoundExists,
    MeetAssociative,
    JoinAssociative,
    MeetCommutative,
    JoinCommutative,
    MeetIdempotent,
    JoinIdempotent,
    MeetAbsorbsJoin,
    JoinAbsorbsMeet,
    /// `x ≤ y ⇔ x ∧ y = x`
    OrderMatchesMeet,
    /// `O ≤ x ≤ I`
    Bounded,
    /// `x'' = x`
    InvolutionInvolutive,
    /// `x ≤ y ⇒ y' ≤ x'`
    InvolutionOrderReversing,
    /// `x → (y → z) = y → (x → z)`
    Exchange,
    /// `x → x = I`
    SelfImplication,
    /// `x → y = y' → x'`
    Contraposition,
    /// `x → y = y → x = I ⇒ x = y`
    ImplicationAntisymmetric,
    /// `(x → y) → y = (y → x) → x`
    Symmetric,
    /// `(x ∨ y) → z = (x → z) ∧ (y → z)`
    JoinImplication,
    /// `(x ∧ y) → z = (x → z) ∨ (y → z)`
    MeetImplication,
}

impl Law {
    /// Position in the seven implication axioms, if this is one of them.
    pub fn axiom_number(self) -> Option<u8> {
        match self {
            Law::Exchange => Some(1),
            Law::SelfImplication => Some(2),
            Law::Contraposition => Some(3),
            Law::ImplicationAntisymmetric => Some(4),
            Law::Symmetric => Some(5),
            Law::JoinImplication => Some(6),
            Law::MeetImplication => Some(7),
            _ => None,
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.axiom_number() {
            Some(k) => write!(f, "axiom {k} ({self:?})"),
            None => write!(f, "{self:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub law: Law,
    pub witness: Vec<TruthValue>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
    /// Number of element triples scanned (`n³`).
    pub triples: usize,
}

impl AxiomReport {
    /// Renders each violation with the algebra's labels.
    pub fn describe<A: Lia + ?Sized>(&self, alg: &A) -> Vec<String> {
        self.violations
            .iter()
            .map(|v| {
                let w: Vec<String> = v.witness.iter().map(|x| alg.label(x)).collect();
                format!("{}: ({})", v.law, w.join(", "))
            })
            .collect()
    }
}

pub fn check_axioms<A: Lia + ?Sized>(alg: &A) -> Result<AxiomReport, LiaError> {
    check_axioms_with_budget(alg, DEFAULT_AXIOM_BUDGET)
}

/// Exhaustively checks the bounded-lattice laws, the involution laws and the
/// seven implication axioms over every element pair and triple.
pub fn check_axioms_with_budget<A: Lia + ?Sized>(
    alg: &A,
    budget: usize,
) -> Result<AxiomReport, LiaError> {
    let n = alg.size();
    if n > budget {
        return Err(LiaError::Budget { size: n, budget });
    }
    let t = RawTables::build(alg)?;
    let mut out = Vec::new();
    let mut fail = |law: Law, w: &[usize]| {
        out.push(Violation {
            law,
            witness: w.iter().map(|&i| t.elems[i].clone()).collect(),
        })
    };

    for x in 0..n {
        if t.meet(x, x) != Some(x) {
            fail(Law::MeetIdempotent, &[x]);
        }
        if t.join(x, x) != Some(x) {
            fail(Law::JoinIdempotent, &[x]);
        }
        if !t.leq(t.bottom, x) || !t.leq(x, t.top) {
            fail(Law::Bounded, &[x]);
        }
        if t.neg[t.neg[x]] != x {
            fail(Law::InvolutionInvolutive, &[x]);
        }
        if t.imp(x, x) != t.top {
            fail(Law::SelfImplication, &[x]);
        }
    }

    for x in 0..n {
        for y in 0..n {
            let m = t.meet(x, y);
            let j = t.join(x, y);
            // each unordered pair reported once
            if m.is_none() && x <= y {
                fail(Law::BoundExists, &[x, y]);
            }
            if j.is_none() && x <= y {
                fail(Law::BoundExists, &[x, y]);
            }
            if m != t.meet(y, x) {
                fail(Law::MeetCommutative, &[x, y]);
            }
            if j != t.join(y, x) {
                fail(Law::JoinCommutative, &[x, y]);
            }
            if let Some(j) = j {
                if t.meet(x, j).is_some_and(|v| v != x) {
                    fail(Law::MeetAbsorbsJoin, &[x, y]);
                }
            }
            if let Some(m) = m {
                if t.join(x, m).is_some_and(|v| v != x) {
                    fail(Law::JoinAbsorbsMeet, &[x, y]);
                }
            }
            if m.is_some() && t.leq(x, y) != (m == Some(x)) {
                fail(Law::OrderMatchesMeet, &[x, y]);
            }
            if t.leq(x, y) && !t.leq(t.neg[y], t.neg[x]) {
                fail(Law::InvolutionOrderReversing, &[x, y]);
            }
            if t.imp(x, y) != t.imp(t.neg[y], t.neg[x]) {
                fail(Law::Contraposition, &[x, y]);
            }
            if x != y && t.imp(x, y) == t.top && t.imp(y, x) == t.top {
                fail(Law::ImplicationAntisymmetric, &[x, y]);
            }
            if t.imp(t.imp(x, y), y) != t.imp(t.imp(y, x), x) {
                fail(Law::Symmetric, &[x, y]);
            }
        }
    }

    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if let (Some(a), Some(b)) = (
                    t.meet(x, y).and_then(|xy| t.meet(xy, z)),
                    t.meet(y, z).and_then(|yz| t.meet(x, yz)),
                ) {
                    if a != b {
                        fail(Law::MeetAssociative, &[x, y, z]);
                    }
                }
                if let (Some(a), Some(b)) = (
                    t.join(x, y).and_then(|xy| t.join(xy, z)),
                    t.join(y, z).and_then(|yz| t.join(x, yz)),
                ) {
                    if a != b {
                        fail(Law::JoinAssociative, &[x, y, z]);
                    }
                }
                if t.imp(x, t.imp(y, z)) != t.imp(y, t.imp(x, z)) {
                    fail(Law::Exchange, &[x, y, z]);
                }
                if let Some(xy) = t.join(x, y) {
                    if t.meet(t.imp(x, z), t.imp(y, z))
                        .is_some_and(|r| r != t.imp(xy, z))
                    {
                        fail(Law::JoinImplication, &[x, y, z]);
                    }
                }
                if let Some(xy) = t.meet(x, y) {
                    if t.join(t.imp(x, z), t.imp(y, z))
                        .is_some_and(|r| r != t.imp(xy, z))
                    {
                        fail(Law::MeetImplication, &[x, y, z]);
                    }
                }
            }
        }
    }

    Ok(AxiomReport {
        passed: out.is_empty(),
        violations: out,
        triples: n * n * n,
    })
}

/// Index-based operation tables where missing bounds are `None`.
struct RawTables {
    n: usize,
    elems: Vec<TruthValue>,
    leq: Vec<bool>,
    meet: Vec<Option<usize>>,
    join: Vec<Option<usize>>,
    imp: Vec<usize>,
    neg: Vec<usize>,
    top: usize,
    bottom: usize,
}

impl RawTables {
    fn build<A: Lia + ?Sized>(alg: &A) -> Result<Self, LiaError> {
        let elems = alg.elements();
        let n = elems.len();
        let pos = |v: &TruthValue| {
            elems
                .iter()
                .position(|e| e == v)
                .ok_or_else(|| LiaError::Dimension(format!("operation produced foreign value {v}")))
        };
        let mut leq = Vec::with_capacity(n * n);
        let mut meet = Vec::with_capacity(n * n);
        let mut join = Vec::with_capacity(n * n);
        let mut imp = Vec::with_capacity(n * n);
        for x in &elems {
            for y in &elems {
                leq.push(alg.leq(x, y)?);
                meet.push(match alg.meet(x, y) {
                    Ok(v) => Some(pos(&v)?),
                    Err(LiaError::Structure { .. }) => None,
                    Err(e) => return Err(e),
                });
                join.push(match alg.join(x, y) {
                    Ok(v) => Some(pos(&v)?),
                    Err(LiaError::Structure { .. }) => None,
                    Err(e) => return Err(e),
                });
                imp.push(pos(&alg.imp(x, y)?)?);
            }
        }
        let neg = elems
            .iter()
            .map(|x| pos(&alg.neg(x)?))
            .collect::<Result<_, _>>()?;
        Ok(RawTables {
            n,
            top: pos(&alg.top())?,
            bottom: pos(&alg.bottom())?,
            elems,
            leq,
            meet,
            join,
            imp,
            neg,
        })
    }

    fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.n + y]
    }

    fn meet(&self, x: usize, y: usize) -> Option<usize> {
        self.meet[x * self.n + y]
    }

    fn join(&self, x: usize, y: usize) -> Option<usize> {
        self.join[x * self.n + y]
    }

    fn imp(&self, x: usize, y: usize) -> usize {
        self.imp[x * self.n + y]
    }
}
