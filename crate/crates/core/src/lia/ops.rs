use std::collections::HashMap;

use super::{Lia, LiaError, TruthValue};

/// Largest algebra that can be compiled into [`OpTables`].
pub const MAX_TABLE_ELEMENTS: usize = 1024;

/// An algebra compiled to dense `u16`-indexed operation tables.
///
/// Indices follow [`Lia::elements`]. Compilation fails if the algebra's order
/// is not a lattice, so every entry is defined.
#[derive(Debug, Clone)]
pub struct OpTables {
    n: usize,
    elems: Vec<TruthValue>,
    labels: Vec<String>,
    index: HashMap<TruthValue, u16>,
    meet: Vec<u16>,
    join: Vec<u16>,
    imp: Vec<u16>,
    neg: Vec<u16>,
    leq: Vec<bool>,
    rank: Vec<u32>,
    top: u16,
    bottom: u16,
}

impl OpTables {
    pub fn build<A: Lia + ?Sized>(alg: &A) -> Result<Self, LiaError> {
        let n = alg.size();
        if n > MAX_TABLE_ELEMENTS {
            return Err(LiaError::Budget {
                size: n,
                budget: MAX_TABLE_ELEMENTS,
            });
        }
        let elems = alg.elements();
        let index: HashMap<TruthValue, u16> = elems
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i as u16))
            .collect();
        let pos = |v: TruthValue| -> Result<u16, LiaError> {
            index
                .get(&v)
                .copied()
                .ok_or_else(|| LiaError::Dimension(format!("operation produced foreign value {v}")))
        };
        let mut meet = Vec::with_capacity(n * n);
        let mut join = Vec::with_capacity(n * n);
        let mut imp = Vec::with_capacity(n * n);
        let mut leq = Vec::with_capacity(n * n);
        for x in &elems {
            for y in &elems {
                meet.push(pos(alg.meet(x, y)?)?);
                join.push(pos(alg.join(x, y)?)?);
                imp.push(pos(alg.imp(x, y)?)?);
                leq.push(alg.leq(x, y)?);
            }
        }
        let neg = elems
            .iter()
            .map(|x| pos(alg.neg(x)?))
            .collect::<Result<Vec<_>, _>>()?;
        let rank = (0..n)
            .map(|i| (0..n).filter(|&j| leq[j * n + i]).count() as u32)
            .collect();
        Ok(OpTables {
            n,
            labels: elems.iter().map(|x| alg.label(x)).collect(),
            top: pos(alg.top())?,
            bottom: pos(alg.bottom())?,
            elems,
            index,
            meet,
            join,
            imp,
            neg,
            leq,
            rank,
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn index_of(&self, v: &TruthValue) -> Option<u16> {
        self.index.get(v).copied()
    }

    pub fn value(&self, i: u16) -> &TruthValue {
        &self.elems[i as usize]
    }

    pub fn label(&self, i: u16) -> &str {
        &self.labels[i as usize]
    }

    pub fn top(&self) -> u16 {
        self.top
    }

    pub fn bottom(&self) -> u16 {
        self.bottom
    }

    #[inline]
    pub fn meet(&self, x: u16, y: u16) -> u16 {
        self.meet[x as usize * self.n + y as usize]
    }

    #[inline]
    pub fn join(&self, x: u16, y: u16) -> u16 {
        self.join[x as usize * self.n + y as usize]
    }

    #[inline]
    pub fn imp(&self, x: u16, y: u16) -> u16 {
        self.imp[x as usize * self.n + y as usize]
    }

    #[inline]
    pub fn neg(&self, x: u16) -> u16 {
        self.neg[x as usize]
    }

    #[inline]
    pub fn leq(&self, x: u16, y: u16) -> bool {
        self.leq[x as usize * self.n + y as usize]
    }

    /// Number of elements at or below `x`; strictly monotone in the order.
    #[inline]
    pub fn rank(&self, x: u16) -> u32 {
        self.rank[x as usize]
    }

    /// The smallest subset containing `seeds`, top and bottom that is closed
    /// under meet, join, implication and negation. Returned in index order.
    pub fn generated_subalgebra(&self, seeds: impl IntoIterator<Item = u16>) -> Vec<u16> {
        let mut member = vec![false; self.n];
        let mut members = Vec::new();
        let push = |x: u16, member: &mut Vec<bool>, members: &mut Vec<u16>| {
            if !std::mem::replace(&mut member[x as usize], true) {
                members.push(x);
            }
        };
        push(self.top, &mut member, &mut members);
        push(self.bottom, &mut member, &mut members);
        for s in seeds {
            push(s, &mut member, &mut members);
        }
        let mut done = 0;
        while done < members.len() {
            let x = members[done];
            push(self.neg(x), &mut member, &mut members);
            let mut k = 0;
            while k <= done {
                let y = members[k];
                for z in [
                    self.meet(x, y),
                    self.join(x, y),
                    self.imp(x, y),
                    self.imp(y, x),
                ] {
                    push(z, &mut member, &mut members);
                }
                k += 1;
            }
            done += 1;
        }
        members.sort_unstable();
        members
    }
}
