//! Additively closed families of length sets, presented by finitely many
//! generators.
//!
//! A family always contains `{0}` (the identity under set addition) and
//! `{1}`; every other member lies in `N_{>=2}`. Closing `{1}` and the listed
//! generators under sumsets produces the whole family, so a presentation
//! records only the nontrivial generators. Singletons `{k}` with `k >= 2`
//! are never accepted as generators: `{k} = {1} + {k-1}` with both parts in
//! the family, so such a singleton is always decomposable. For the same
//! reason every nontrivial generator must have at least two elements.
//!
//! All queries are bound-parameterized and exhaustive, so a negative answer
//! from [`FamilyPresentation::contains`] is a certificate of non-membership.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lengthsets::SetOfLengths;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    /// A generator other than `{1}` contains 0 or 1.
    #[error("generator {0} is neither {{1}} nor a subset of N>=2")]
    GeneratorNotInNGe2(SetOfLengths),
    /// A singleton `{k}` with `k >= 2` was offered as a generator; it
    /// decomposes as `{1} + {k-1}`.
    #[error("singleton generator {{{0}}} is decomposable over {{1}} and a shorter singleton")]
    DecomposableSingleton(u64),
    #[error("duplicate generator {0}")]
    DuplicateGenerator(SetOfLengths),
    #[error("{0} is not a member of the family")]
    NotAMember(SetOfLengths),
}

/// A decomposition of a member as `{shift} + sum_i multiplicities[i] * G_i`
/// over the presentation's generators (sumset sense).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub shift: u64,
    pub multiplicities: Vec<u64>,
}

/// A finite presentation of an additively closed family: the nontrivial
/// indecomposable generators. `{0}` and `{1}` are implicit members.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FamilyFile", into = "FamilyFile")]
pub struct FamilyPresentation {
    generators: Vec<SetOfLengths>,
}

/// On-disk form: `{"generators": [[2,3],[2,5]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilyFile {
    pub generators: Vec<Vec<u64>>,
}

impl TryFrom<FamilyFile> for FamilyPresentation {
    type Error = String;

    fn try_from(f: FamilyFile) -> Result<Self, String> {
        let gens = f
            .generators
            .into_iter()
            .map(SetOfLengths::new)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        validate_presentation(gens).map_err(|e| e.to_string())
    }
}

impl From<FamilyPresentation> for FamilyFile {
    fn from(p: FamilyPresentation) -> FamilyFile {
        FamilyFile {
            generators: p.generators.into_iter().map(Vec::from).collect(),
        }
    }
}

/// Checks that every listed generator is `{1}` or a set of size >= 2 inside
/// `N_{>=2}`, and that no generator repeats. `{1}` entries are accepted and
/// normalized away since `{1}` is always a member.
pub fn validate_presentation(
    gens: Vec<SetOfLengths>,
) -> Result<FamilyPresentation, FamilyError> {
    let mut seen = BTreeSet::new();
    let mut kept = Vec::new();
    for gen in gens {
        if !seen.insert(gen.clone()) {
            return Err(FamilyError::DuplicateGenerator(gen));
        }
        if gen.elems() == [1] {
            continue;
        }
        if gen.min_len() < 2 {
            return Err(FamilyError::GeneratorNotInNGe2(gen));
        }
        if gen.is_singleton() {
            return Err(FamilyError::DecomposableSingleton(gen.min_len()));
        }
        kept.push(gen);
    }
    kept.sort();
    Ok(FamilyPresentation { generators: kept })
}

impl FamilyPresentation {
    /// Shorthand for [`validate_presentation`].
    pub fn new(gens: Vec<SetOfLengths>) -> Result<Self, FamilyError> {
        validate_presentation(gens)
    }

    pub fn empty() -> Self {
        FamilyPresentation { generators: vec![] }
    }

    /// The nontrivial generators, in canonical order.
    pub fn generators(&self) -> &[SetOfLengths] {
        &self.generators
    }

    /// All members `L` of the family with `max L <= bound`, computed by
    /// closing `{0}`, `{1}` and the generators under sumsets, pruning
    /// anything that exceeds the bound.
    pub fn enumerate(&self, bound: u64) -> BTreeSet<SetOfLengths> {
        let mut members: BTreeSet<SetOfLengths> = BTreeSet::new();
        members.insert(SetOfLengths::singleton(0));
        let mut frontier: Vec<SetOfLengths> = vec![SetOfLengths::singleton(0)];
        let mut seeds: Vec<SetOfLengths> = vec![SetOfLengths::singleton(1)];
        seeds.extend(self.generators.iter().cloned());
        while let Some(l) = frontier.pop() {
            for seed in &seeds {
                let s = l.sumset(seed);
                if s.max_len() <= bound && members.insert(s.clone()) {
                    frontier.push(s);
                }
            }
        }
        members
    }

    /// All decompositions `L = {y} + sum n_i * G_i`, exhaustively over
    /// `sum n_i * min G_i <= min L`.
    pub fn witnesses(&self, l: &SetOfLengths) -> Vec<Decomposition> {
        let mut out = Vec::new();
        let mut mults = vec![0u64; self.generators.len()];
        self.search_witnesses(l, 0, 0, &mut mults, &mut out, false);
        out
    }

    /// One decomposition witness if `L` is a member, `None` otherwise. The
    /// search is exhaustive, so `None` certifies non-membership.
    pub fn contains(&self, l: &SetOfLengths) -> Option<Decomposition> {
        let mut out = Vec::new();
        let mut mults = vec![0u64; self.generators.len()];
        self.search_witnesses(l, 0, 0, &mut mults, &mut out, true);
        out.into_iter().next()
    }

    fn search_witnesses(
        &self,
        l: &SetOfLengths,
        idx: usize,
        used_min: u64,
        mults: &mut [u64],
        out: &mut Vec<Decomposition>,
        first_only: bool,
    ) {
        if first_only && !out.is_empty() {
            return;
        }
        if idx == self.generators.len() {
            let y = l.min_len() - used_min;
            let mut candidate = SetOfLengths::singleton(y);
            for (n, gen) in mults.iter().zip(&self.generators) {
                candidate = candidate.sumset(&gen.n_fold_sumset(*n));
            }
            if &candidate == l {
                out.push(Decomposition {
                    shift: y,
                    multiplicities: mults.to_vec(),
                });
            }
            return;
        }
        let gen_min = self.generators[idx].min_len();
        let max_n = (l.min_len() - used_min) / gen_min;
        for n in 0..=max_n {
            mults[idx] = n;
            self.search_witnesses(l, idx + 1, used_min + n * gen_min, mults, out, first_only);
        }
        mults[idx] = 0;
    }

    /// All unordered pairs of non-`{0}` members whose sumset is `L`. The
    /// candidate pool is `enumerate(max L)`.
    pub fn decompositions(
        &self,
        l: &SetOfLengths,
    ) -> Result<Vec<(SetOfLengths, SetOfLengths)>, FamilyError> {
        if self.contains(l).is_none() {
            return Err(FamilyError::NotAMember(l.clone()));
        }
        let zero = SetOfLengths::singleton(0);
        let pool: Vec<SetOfLengths> = self
            .enumerate(l.max_len())
            .into_iter()
            .filter(|m| *m != zero)
            .collect();
        let mut out = Vec::new();
        for (i, l1) in pool.iter().enumerate() {
            for l2 in &pool[i..] {
                if l1.min_len() + l2.min_len() > l.min_len() {
                    continue;
                }
                if l1.sumset(l2) == *l {
                    out.push((l1.clone(), l2.clone()));
                }
            }
        }
        Ok(out)
    }

    /// True iff `L` is a member with no nontrivial sumset decomposition and
    /// `L != {0}`.
    pub fn is_indecomposable(&self, l: &SetOfLengths) -> Result<bool, FamilyError> {
        if l.elems() == [0] {
            return Ok(false);
        }
        Ok(self.decompositions(l)?.is_empty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sol(elems: &[u64]) -> SetOfLengths {
        SetOfLengths::new(elems.iter().copied()).unwrap()
    }

    fn family(gens: &[&[u64]]) -> FamilyPresentation {
        validate_presentation(gens.iter().map(|g| sol(g)).collect()).unwrap()
    }

    #[test]
    fn validate_accepts_simple_generator() {
        assert!(validate_presentation(vec![sol(&[2, 3])]).is_ok());
    }

    #[test]
    fn validate_rejects_sets_touching_one() {
        assert_eq!(
            validate_presentation(vec![sol(&[1, 3])]),
            Err(FamilyError::GeneratorNotInNGe2(sol(&[1, 3])))
        );
        assert_eq!(
            validate_presentation(vec![sol(&[0])]),
            Err(FamilyError::GeneratorNotInNGe2(sol(&[0])))
        );
    }

    #[test]
    fn validate_rejects_decomposable_singleton() {
        assert_eq!(
            validate_presentation(vec![sol(&[4])]),
            Err(FamilyError::DecomposableSingleton(4))
        );
    }

    #[test]
    fn validate_rejects_duplicates() {
        assert_eq!(
            validate_presentation(vec![sol(&[2, 3]), sol(&[2, 3])]),
            Err(FamilyError::DuplicateGenerator(sol(&[2, 3])))
        );
    }

    #[test]
    fn one_is_normalized_away() {
        let p = validate_presentation(vec![sol(&[1]), sol(&[2, 3])]).unwrap();
        assert_eq!(p.generators(), &[sol(&[2, 3])]);
    }

    /// Oracle for `gens = [{2,3}]`: members below the bound are exactly
    /// `{y} + n{2,3}` with `y + 3n <= bound`.
    fn interval_family_oracle(bound: u64) -> BTreeSet<SetOfLengths> {
        let base = sol(&[2, 3]);
        let mut out = BTreeSet::new();
        for n in 0..=bound / 3 {
            let part = base.n_fold_sumset(n);
            for y in 0..=bound.saturating_sub(part.max_len()) {
                out.insert(part.shift(y));
            }
        }
        out
    }

    #[test]
    fn enumerate_no_generators() {
        let expect: BTreeSet<SetOfLengths> =
            (0..=3).map(SetOfLengths::singleton).collect();
        assert_eq!(family(&[]).enumerate(3), expect);
    }

    #[test]
    fn enumerate_matches_closed_form_oracle() {
        let got = family(&[&[2, 3]]).enumerate(6);
        assert_eq!(got, interval_family_oracle(6));
        // Spot checks: singletons 0..=6, the shifts of {2,3}, and 2{2,3}.
        assert!(got.contains(&sol(&[4, 5, 6])));
        assert!(got.contains(&sol(&[5, 6])));
        assert!(!got.contains(&sol(&[5, 6, 7])));
        assert_eq!(got.len(), 12);
    }

    #[test]
    fn enumerate_sparse_generator() {
        let got = family(&[&[2, 5]]).enumerate(5);
        let mut expect: BTreeSet<SetOfLengths> =
            (0..=5).map(SetOfLengths::singleton).collect();
        expect.insert(sol(&[2, 5]));
        assert_eq!(got, expect);
    }

    #[test]
    fn contains_finds_shifted_double() {
        let w = family(&[&[2, 3]]).contains(&sol(&[5, 6, 7])).unwrap();
        assert_eq!(w.shift, 1);
        assert_eq!(w.multiplicities, vec![2]);
    }

    #[test]
    fn contains_identity() {
        let w = family(&[&[2, 3]]).contains(&sol(&[0])).unwrap();
        assert_eq!(w.shift, 0);
        assert_eq!(w.multiplicities, vec![0]);
    }

    #[test]
    fn contains_rejects_gapped_set() {
        assert!(family(&[&[2, 3]]).contains(&sol(&[2, 4])).is_none());
    }

    #[test]
    fn decompositions_of_double() {
        let d = family(&[&[2, 3]]).decompositions(&sol(&[4, 5, 6])).unwrap();
        assert_eq!(d, vec![(sol(&[2, 3]), sol(&[2, 3]))]);
    }

    #[test]
    fn generator_has_no_decomposition() {
        let d = family(&[&[2, 3]]).decompositions(&sol(&[2, 3])).unwrap();
        assert!(d.is_empty());
    }

    #[test]
    fn singleton_two_decomposes() {
        let d = family(&[]).decompositions(&sol(&[2])).unwrap();
        assert_eq!(d, vec![(sol(&[1]), sol(&[1]))]);
    }

    #[test]
    fn decompositions_requires_membership() {
        assert_eq!(
            family(&[&[2, 3]]).decompositions(&sol(&[2, 4])),
            Err(FamilyError::NotAMember(sol(&[2, 4])))
        );
    }

    #[test]
    fn indecomposability() {
        let f = family(&[&[2, 3]]);
        assert!(f.is_indecomposable(&sol(&[2, 3])).unwrap());
        assert!(!f.is_indecomposable(&sol(&[4, 5, 6])).unwrap());
        assert!(f.is_indecomposable(&sol(&[1])).unwrap());
        assert!(!f.is_indecomposable(&sol(&[0])).unwrap());
    }

    /// Families of two-element generators with pairwise distinct gaps.
    /// Every two-element member is a shift of exactly one generator, so the
    /// generators are mutually indecomposable by construction.
    fn arb_family() -> impl Strategy<Value = FamilyPresentation> {
        proptest::collection::btree_map(1u64..5, 2u64..6, 0..3).prop_map(|by_gap| {
            let gens = by_gap
                .into_iter()
                .map(|(gap, min)| SetOfLengths::new([min, min + gap]).unwrap())
                .collect();
            validate_presentation(gens).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        /// Sumsets of members stay members when they fit under the bound.
        #[test]
        fn enumerate_closed_under_sumset(f in arb_family(), bound in 4u64..9) {
            let members = f.enumerate(bound);
            for l1 in &members {
                for l2 in &members {
                    if l1.max_len() + l2.max_len() <= bound {
                        prop_assert!(members.contains(&l1.sumset(l2)));
                    }
                }
            }
        }

        /// Membership by closure agrees with membership by witness search.
        #[test]
        fn contains_agrees_with_enumerate(f in arb_family(), bound in 4u64..9) {
            let members = f.enumerate(bound);
            for l in &members {
                prop_assert!(f.contains(l).is_some());
            }
            // Some non-members for contrast: gapped sets near the bound.
            let probe = SetOfLengths::new([2, bound]).unwrap();
            prop_assert_eq!(
                members.contains(&probe),
                f.contains(&probe).is_some()
            );
        }

        /// Listed generators really are indecomposable.
        #[test]
        fn generators_are_indecomposable(f in arb_family()) {
            for gen in f.generators() {
                prop_assert!(f.is_indecomposable(gen).unwrap());
            }
        }

        /// Reassembling any reported decomposition gives back the set.
        #[test]
        fn decompositions_reassemble(f in arb_family(), bound in 4u64..8) {
            for l in f.enumerate(bound) {
                for (l1, l2) in f.decompositions(&l).unwrap() {
                    prop_assert_eq!(l1.sumset(&l2), l.clone());
                }
            }
        }

        /// A reported witness reassembles to the set.
        #[test]
        fn witnesses_reassemble(f in arb_family(), bound in 4u64..8) {
            for l in f.enumerate(bound) {
                for w in f.witnesses(&l) {
                    let mut got = SetOfLengths::singleton(w.shift);
                    for (n, gen) in w.multiplicities.iter().zip(f.generators()) {
                        got = got.sumset(&gen.n_fold_sumset(*n));
                    }
                    prop_assert_eq!(got, l.clone());
                }
            }
        }
    }
}
