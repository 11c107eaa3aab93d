//! Factorization invariants: distances, catenary degrees, distance sets,
//! indecomposable length sets, and comparison of system slices.
//!
//! The distance between two factorizations cancels their common part and
//! takes the larger residual length. The catenary degree of an element is
//! the least `N` such that any two of its factorizations are linked by a
//! chain with consecutive distances at most `N`; an element with a single
//! factorization has catenary degree `0`, the chain condition being vacuous
//! there. Bounded variants take the maximum (or union) over an exhaustively
//! enumerated slice of elements and are exact for realized monoids as soon
//! as the slice contains the relation product.

use std::collections::BTreeSet;

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lengthsets::SetOfLengths;
use crate::monoid::{Factorization, MonoidElement, MonoidError, MonoidPresentation, Weight};
use crate::realization::system_of_lengths;
use crate::zerosum::{minimal_atoms, zs_system, GroupSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("factorization uses label {label} outside the presentation's alphabet")]
    AlphabetMismatch { label: String },
    #[error(transparent)]
    Monoid(#[from] MonoidError),
}

/// Distance between two factorizations over the same atom alphabet: cancel
/// the common part, then take the larger residual length.
pub fn distance(z1: &Factorization, z2: &Factorization) -> u64 {
    let mut res1 = 0u64;
    let mut res2 = 0u64;
    let labels: BTreeSet<&String> = z1
        .multiplicities()
        .keys()
        .chain(z2.multiplicities().keys())
        .collect();
    for label in labels {
        let a = z1.multiplicity(label);
        let b = z2.multiplicity(label);
        let common = a.min(b);
        res1 += a - common;
        res2 += b - common;
    }
    res1.max(res2)
}

/// [`distance`] with an explicit alphabet check against a presentation.
pub fn checked_distance(
    p: &MonoidPresentation,
    z1: &Factorization,
    z2: &Factorization,
) -> Result<u64, InvariantError> {
    for label in z1
        .multiplicities()
        .keys()
        .chain(z2.multiplicities().keys())
    {
        if p.atom_by_label(label).is_none() {
            return Err(InvariantError::AlphabetMismatch {
                label: label.clone(),
            });
        }
    }
    Ok(distance(z1, z2))
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, i: usize) -> usize {
        if self.parent[i] != i {
            let root = self.find(self.parent[i]);
            self.parent[i] = root;
        }
        self.parent[i]
    }

    fn union(&mut self, i: usize, j: usize) -> bool {
        let (ri, rj) = (self.find(i), self.find(j));
        if ri == rj {
            return false;
        }
        self.parent[ri] = rj;
        true
    }
}

/// Minimal `N` such that the factorization graph of `v` with edges of
/// distance at most `N` is connected; `0` when the factorization is unique.
/// Computed as the bottleneck of a sorted union-find sweep over pairwise
/// distances.
pub fn catenary_element(
    p: &MonoidPresentation,
    v: &MonoidElement,
) -> Result<u64, InvariantError> {
    let zs = p.factorizations(v)?;
    let n = zs.len();
    if n <= 1 {
        return Ok(0);
    }
    let mut edges: Vec<(u64, usize, usize)> = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            edges.push((distance(&zs[i], &zs[j]), i, j));
        }
    }
    edges.sort_unstable();
    let mut uf = UnionFind::new(n);
    let mut components = n;
    let mut bottleneck = 0;
    for (d, i, j) in edges {
        if uf.union(i, j) {
            components -= 1;
            bottleneck = d;
            if components == 1 {
                break;
            }
        }
    }
    Ok(bottleneck)
}

/// Maximum of [`catenary_element`] over the slice of grading at most
/// `bound`; a lower bound for the catenary degree of the monoid, exact for
/// realized monoids once the slice reaches the relation product.
pub fn catenary_bounded(p: &MonoidPresentation, bound: Weight) -> u64 {
    p.enumerate_elements(bound)
        .par_iter()
        .map(|v| catenary_element(p, v).expect("enumerated element"))
        .max()
        .unwrap_or(0)
}

/// Union of the distance sets of all length sets on the slice.
pub fn delta_bounded(p: &MonoidPresentation, bound: Weight) -> BTreeSet<u64> {
    system_of_lengths(p, bound)
        .iter()
        .flat_map(|l| l.delta_set())
        .collect()
}

/// A deduplicated collection of length sets observed on a bounded slice,
/// together with the bound and the largest factorization length the bound
/// can reach (used to trim comparisons).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemSlice {
    pub sets: BTreeSet<SetOfLengths>,
    /// grading (or sequence-length) bound the slice was computed at
    pub bound: String,
    /// no length set containing a value above this is observable
    pub max_length: u64,
}

impl SystemSlice {
    /// Slice of a presented monoid at a grading bound. A factorization of
    /// length `l` needs grading at least `l` times the cheapest atom, so
    /// lengths beyond `bound / min_atom_grading` cannot occur.
    pub fn from_monoid(p: &MonoidPresentation, bound: Weight) -> SystemSlice {
        let max_length = (bound / p.min_atom_grading())
            .floor()
            .to_integer()
            .to_u64()
            .unwrap_or(0);
        SystemSlice {
            sets: system_of_lengths(p, bound),
            bound: bound.to_string(),
            max_length,
        }
    }

    /// Slice of a zero-sum monoid at a sequence-length bound; atoms have
    /// length at least the shortest minimal zero-sum sequence.
    pub fn from_zero_sum(spec: &GroupSpec, bound: u64) -> SystemSlice {
        let min_atom = minimal_atoms(spec)
            .iter()
            .map(|a| a.length())
            .min()
            .unwrap_or(1);
        SystemSlice {
            sets: zs_system(spec, bound),
            bound: bound.to_string(),
            max_length: bound / min_atom,
        }
    }
}

/// Result of the bounded indecomposable-generator extraction.
#[derive(Debug, Clone, Serialize)]
pub struct GeneratorsReport {
    pub generators: Vec<SetOfLengths>,
    pub generated: bool,
    /// members that do not decompose over the generators (empty when
    /// `generated` is true)
    pub undecomposed: Vec<SetOfLengths>,
}

/// The members of the slice (other than `{0}`) with no representation as a
/// sumset of two non-`{0}` members, plus a report on whether those members
/// generate the whole slice under set addition.
pub fn irreducible_length_sets(slice: &SystemSlice) -> GeneratorsReport {
    let zero = SetOfLengths::singleton(0);
    let pool: Vec<&SetOfLengths> = slice.sets.iter().filter(|l| **l != zero).collect();
    let mut generators = Vec::new();
    for l in &pool {
        let mut decomposable = false;
        'outer: for (i, l1) in pool.iter().enumerate() {
            if l1.min_len() > l.min_len() {
                break;
            }
            for l2 in &pool[i..] {
                if l1.min_len() + l2.min_len() > l.min_len() {
                    break;
                }
                if l1.sumset(l2) == **l {
                    decomposable = true;
                    break 'outer;
                }
            }
        }
        if !decomposable {
            generators.push((*l).clone());
        }
    }

    // every member must be a sumset combination of the generators
    let nontrivial: Vec<SetOfLengths> = generators
        .iter()
        .filter(|g| g.elems() != [1])
        .cloned()
        .collect();
    let undecomposed: Vec<SetOfLengths> = match crate::families::FamilyPresentation::new(
        nontrivial,
    ) {
        Ok(family) => slice
            .sets
            .iter()
            .filter(|l| family.contains(l).is_none())
            .cloned()
            .collect(),
        // generators that do not form a valid family presentation (e.g. a
        // set meeting 1 other than {1}) cannot generate the slice
        Err(_) => slice.sets.iter().cloned().collect(),
    };
    GeneratorsReport {
        generated: undecomposed.is_empty(),
        generators,
        undecomposed,
    }
}

/// Comparison of two slices on their jointly trustworthy region.
#[derive(Debug, Clone, Serialize)]
pub struct CompareReport {
    pub agree: bool,
    /// sets with max element above this are ignored as truncation artifacts
    pub trim_max_length: u64,
    pub only_in_a: Vec<SetOfLengths>,
    pub only_in_b: Vec<SetOfLengths>,
}

/// Symmetric difference of two slices, restricted to sets whose maximum
/// stays within both slices' observable length range.
pub fn compare_systems(a: &SystemSlice, b: &SystemSlice) -> CompareReport {
    let trim = a.max_length.min(b.max_length);
    let restrict = |s: &BTreeSet<SetOfLengths>| -> BTreeSet<SetOfLengths> {
        s.iter().filter(|l| l.max_len() <= trim).cloned().collect()
    };
    let sa = restrict(&a.sets);
    let sb = restrict(&b.sets);
    let only_in_a: Vec<SetOfLengths> = sa.difference(&sb).cloned().collect();
    let only_in_b: Vec<SetOfLengths> = sb.difference(&sa).cloned().collect();
    CompareReport {
        agree: only_in_a.is_empty() && only_in_b.is_empty(),
        trim_max_length: trim,
        only_in_a,
        only_in_b,
    }
}
