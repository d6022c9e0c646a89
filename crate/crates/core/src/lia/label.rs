use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Algebra, Lia, LiaError, TruthValue};

/// Canonical spellings of the six linguistic truth values, top first.
pub const CANONICAL_LABELS: [&str; 6] = ["AbT", "VeT", "SlT", "SlF", "VeF", "AbF"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Modifier {
    /// Slightly
    Sl,
    /// Very
    Ve,
    /// Absolutely
    Ab,
}

impl Modifier {
    pub fn rank(self) -> u16 {
        match self {
            Modifier::Sl => 1,
            Modifier::Ve => 2,
            Modifier::Ab => 3,
        }
    }

    fn from_rank(r: u16) -> Option<Self> {
        match r {
            1 => Some(Modifier::Sl),
            2 => Some(Modifier::Ve),
            3 => Some(Modifier::Ab),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Meta {
    Tr,
    Fa,
}

/// A hedged truth judgment such as (Very, False).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinguisticLabel {
    pub modifier: Modifier,
    pub meta: Meta,
}

impl LinguisticLabel {
    pub const fn new(modifier: Modifier, meta: Meta) -> Self {
        LinguisticLabel { modifier, meta }
    }

    /// A true-side label of rank `r` sits at `(r, 2)`; a false-side label of
    /// rank `r` at `(4 - r, 1)`, so "absolutely false" is the bottom.
    pub fn coords(self) -> TruthValue {
        let r = self.modifier.rank();
        match self.meta {
            Meta::Tr => TruthValue::new([r, 2]),
            Meta::Fa => TruthValue::new([4 - r, 1]),
        }
    }

    pub(crate) fn decode_coords(x: &TruthValue) -> Option<Self> {
        match *x.coords() {
            [i, 2] => Modifier::from_rank(i).map(|m| LinguisticLabel::new(m, Meta::Tr)),
            [i @ 1..=3, 1] => Modifier::from_rank(4 - i).map(|m| LinguisticLabel::new(m, Meta::Fa)),
            _ => None,
        }
    }

    pub fn encode(self, alg: &Algebra) -> Result<TruthValue, LiaError> {
        require_l6(alg)?;
        Ok(self.coords())
    }

    pub fn decode(alg: &Algebra, x: &TruthValue) -> Result<Self, LiaError> {
        require_l6(alg)?;
        alg.check(x)?;
        Ok(Self::decode_coords(x).expect("every L6 element has a label"))
    }
}

fn require_l6(alg: &Algebra) -> Result<(), LiaError> {
    if alg.is_l6() {
        Ok(())
    } else {
        Err(LiaError::Unsupported(format!(
            "linguistic labels need the product 3 2 algebra, not {}",
            alg.describe()
        )))
    }
}

impl fmt::Display for LinguisticLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = match self.modifier {
            Modifier::Sl => "Sl",
            Modifier::Ve => "Ve",
            Modifier::Ab => "Ab",
        };
        let t = match self.meta {
            Meta::Tr => "T",
            Meta::Fa => "F",
        };
        write!(f, "{m}{t}")
    }
}

impl FromStr for LinguisticLabel {
    type Err = LiaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || LiaError::Argument(format!("unknown linguistic label `{s}`"));
        if s.len() != 3 || !s.is_ascii() {
            return Err(bad());
        }
        let modifier = match &s[..2] {
            "Sl" => Modifier::Sl,
            "Ve" => Modifier::Ve,
            "Ab" => Modifier::Ab,
            _ => return Err(bad()),
        };
        let meta = match &s[2..] {
            "T" => Meta::Tr,
            "F" => Meta::Fa,
            _ => return Err(bad()),
        };
        Ok(LinguisticLabel { modifier, meta })
    }
}
