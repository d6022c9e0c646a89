use smallvec::SmallVec;

use super::label::LinguisticLabel;
use super::{parse_coords, Lia, LiaError, TruthValue};

/// A product of Łukasiewicz chains.
///
/// On a chain of size `n` with elements `1..=n`, implication is
/// `i -> j = min(n - i + j, n)` and negation is `i' = n + 1 - i`. Products
/// take every operation coordinatewise and order elements componentwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProductAlgebra {
    chain_sizes: SmallVec<[u16; 4]>,
}

impl ProductAlgebra {
    pub fn new(chain_sizes: &[u16]) -> Result<Self, LiaError> {
        if chain_sizes.is_empty() {
            return Err(LiaError::Argument("at least one chain is required".into()));
        }
        if let Some(bad) = chain_sizes.iter().find(|&&n| n < 2) {
            return Err(LiaError::Argument(format!(
                "chain size {bad} is below the minimum of 2"
            )));
        }
        let size = chain_sizes
            .iter()
            .try_fold(1usize, |acc, &n| acc.checked_mul(n as usize));
        if size.is_none() {
            return Err(LiaError::Argument("product size overflows".into()));
        }
        Ok(ProductAlgebra {
            chain_sizes: chain_sizes.iter().copied().collect(),
        })
    }

    /// `L3 x L2`, the six linguistic truth values.
    pub fn l6() -> Self {
        ProductAlgebra {
            chain_sizes: SmallVec::from_slice(&[3, 2]),
        }
    }

    pub fn chain_sizes(&self) -> &[u16] {
        &self.chain_sizes
    }

    pub fn is_l6(&self) -> bool {
        self.chain_sizes.as_slice() == [3, 2]
    }

    fn zip_with(
        &self,
        x: &TruthValue,
        y: &TruthValue,
        f: impl Fn(u16, u16, u16) -> u16,
    ) -> Result<TruthValue, LiaError> {
        self.check(x)?;
        self.check(y)?;
        Ok(TruthValue::new(
            self.chain_sizes
                .iter()
                .zip(x.coords().iter().zip(y.coords()))
                .map(|(&n, (&i, &j))| f(n, i, j)),
        ))
    }
}

impl Lia for ProductAlgebra {
    fn size(&self) -> usize {
        self.chain_sizes.iter().map(|&n| n as usize).product()
    }

    /// Descending colexicographic order: the last chain is most significant.
    /// For `[3, 2]` this is `AbT VeT SlT SlF VeF AbF`.
    fn elements(&self) -> Vec<TruthValue> {
        let k = self.chain_sizes.len();
        let mut out = Vec::with_capacity(self.size());
        let mut cur: SmallVec<[u16; 4]> = self.chain_sizes.clone();
        loop {
            out.push(TruthValue(cur.clone()));
            // decrement, first coordinate fastest
            let mut pos = 0;
            loop {
                if pos == k {
                    return out;
                }
                if cur[pos] > 1 {
                    cur[pos] -= 1;
                    break;
                }
                cur[pos] = self.chain_sizes[pos];
                pos += 1;
            }
        }
    }

    fn top(&self) -> TruthValue {
        TruthValue(self.chain_sizes.clone())
    }

    fn bottom(&self) -> TruthValue {
        TruthValue::new(self.chain_sizes.iter().map(|_| 1))
    }

    fn contains(&self, x: &TruthValue) -> bool {
        x.arity() == self.chain_sizes.len()
            && x.coords()
                .iter()
                .zip(&self.chain_sizes)
                .all(|(&c, &n)| (1..=n).contains(&c))
    }

    fn leq(&self, x: &TruthValue, y: &TruthValue) -> Result<bool, LiaError> {
        self.check(x)?;
        self.check(y)?;
        Ok(x.coords().iter().zip(y.coords()).all(|(a, b)| a <= b))
    }

    fn meet(&self, x: &TruthValue, y: &TruthValue) -> Result<TruthValue, LiaError> {
        self.zip_with(x, y, |_, i, j| i.min(j))
    }

    fn join(&self, x: &TruthValue, y: &TruthValue) -> Result<TruthValue, LiaError> {
        self.zip_with(x, y, |_, i, j| i.max(j))
    }

    fn imp(&self, x: &TruthValue, y: &TruthValue) -> Result<TruthValue, LiaError> {
        self.zip_with(x, y, |n, i, j| (n - i + j).min(n))
    }

    fn neg(&self, x: &TruthValue) -> Result<TruthValue, LiaError> {
        self.check(x)?;
        Ok(TruthValue::new(
            self.chain_sizes
                .iter()
                .zip(x.coords())
                .map(|(&n, &i)| n + 1 - i),
        ))
    }

    fn label(&self, x: &TruthValue) -> String {
        if self.is_l6() {
            if let Some(l) = LinguisticLabel::decode_coords(x) {
                return l.to_string();
            }
        }
        x.to_string()
    }

    fn parse_label(&self, s: &str) -> Option<TruthValue> {
        if self.is_l6() {
            if let Ok(l) = s.parse::<LinguisticLabel>() {
                return Some(l.coords());
            }
        }
        parse_coords(s).filter(|v| self.contains(v))
    }

    fn describe(&self) -> String {
        let mut s = String::from("product");
        for n in &self.chain_sizes {
            s.push(' ');
            s.push_str(&n.to_string());
        }
        s
    }
}
