//! Exact arithmetic on finite sets of non-negative integers.
//!
//! A [`SetOfLengths`] records the possible factorization lengths of an
//! element: a non-empty, strictly increasing list of counts. The operations
//! here are the sumset `L1 + L2 = {a + b : a in L1, b in L2}`, the n-fold
//! iterated sumset `nL`, the dilation `n . L = {n a : a in L}`, and the set
//! of successive distances `delta(L)`.
//!
//! Everything is plain integer arithmetic on sorted dense lists, so equality
//! of canonical forms is structural equality.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Error raised when constructing an empty set of lengths.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LengthSetError {
    #[error("a set of lengths must be non-empty")]
    Empty,
}

/// A finite, non-empty set of non-negative integers in canonical form
/// (strictly increasing, no duplicates).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct SetOfLengths {
    elems: Vec<u64>,
}

impl SetOfLengths {
    /// Canonicalizes (sorts and deduplicates) the given lengths.
    pub fn new<I: IntoIterator<Item = u64>>(elems: I) -> Result<Self, LengthSetError> {
        let set: BTreeSet<u64> = elems.into_iter().collect();
        if set.is_empty() {
            return Err(LengthSetError::Empty);
        }
        Ok(SetOfLengths {
            elems: set.into_iter().collect(),
        })
    }

    /// The singleton `{k}`.
    pub fn singleton(k: u64) -> Self {
        SetOfLengths { elems: vec![k] }
    }

    pub fn elems(&self) -> &[u64] {
        &self.elems
    }

    pub fn min_len(&self) -> u64 {
        self.elems[0]
    }

    pub fn max_len(&self) -> u64 {
        *self.elems.last().unwrap()
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        false // non-empty by construction
    }

    pub fn is_singleton(&self) -> bool {
        self.elems.len() == 1
    }

    pub fn contains(&self, k: u64) -> bool {
        self.elems.binary_search(&k).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.elems.iter().copied()
    }

    /// The sumset `{a + b : a in self, b in other}`.
    pub fn sumset(&self, other: &SetOfLengths) -> SetOfLengths {
        let mut out = BTreeSet::new();
        for &a in &self.elems {
            for &b in &other.elems {
                out.insert(a + b);
            }
        }
        SetOfLengths {
            elems: out.into_iter().collect(),
        }
    }

    /// The n-fold sumset `L + ... + L`; `{0}` when `n = 0`.
    pub fn n_fold_sumset(&self, n: u64) -> SetOfLengths {
        let mut acc = SetOfLengths::singleton(0);
        for _ in 0..n {
            acc = acc.sumset(self);
        }
        acc
    }

    /// The dilation `{n a : a in L}`.
    pub fn dilate(&self, n: u64) -> SetOfLengths {
        let set: BTreeSet<u64> = self.elems.iter().map(|&a| n * a).collect();
        SetOfLengths {
            elems: set.into_iter().collect(),
        }
    }

    /// Shift by a constant: `{y} + L`.
    pub fn shift(&self, y: u64) -> SetOfLengths {
        SetOfLengths {
            elems: self.elems.iter().map(|&a| a + y).collect(),
        }
    }

    /// The set of successive distances `{l_{i+1} - l_i}`; empty for
    /// singletons, `{d}` for an arithmetic progression with difference `d`.
    pub fn delta_set(&self) -> BTreeSet<u64> {
        self.elems.windows(2).map(|w| w[1] - w[0]).collect()
    }
}

impl TryFrom<Vec<u64>> for SetOfLengths {
    type Error = LengthSetError;

    fn try_from(v: Vec<u64>) -> Result<Self, Self::Error> {
        SetOfLengths::new(v)
    }
}

impl From<SetOfLengths> for Vec<u64> {
    fn from(l: SetOfLengths) -> Vec<u64> {
        l.elems
    }
}

impl fmt::Debug for SetOfLengths {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SetOfLengths {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.elems.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}
