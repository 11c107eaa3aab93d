//! Reduced finitely generated monoids presented by integer-vector atoms.
//!
//! A [`MonoidPresentation`] is an atom matrix inside `Z^d` together with a
//! rational grading that is strictly positive on every atom. The grading is
//! the termination device for all searches: a factorization of `v` uses at
//! most `weight(v) / min_j weight(a_j)` atoms, so factorization sets, slices
//! and membership queries are finite and exhaustively enumerable. Gradings
//! are computed automatically from the atoms when not supplied (see
//! [`positive_grading`]) and may be overridden in the presentation file.
//!
//! Elements are raw vectors; membership is certified on demand by bounded
//! search rather than carried as a proof token, which keeps the data model
//! serializable. Atoms must form a minimal generating set, which makes them
//! the atoms of the presented monoid in the factorization-theoretic sense.
//! Only the factorization combinatorics is modeled here: multiplicities and
//! lengths of atom multisets, with no divisor-theoretic data attached.

mod grading;

pub use grading::{positive_grading, Weight};

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lengthsets::SetOfLengths;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    /// No functional is strictly positive on all atoms: some non-negative
    /// combination of atoms vanishes, so factorization sets would be
    /// infinite.
    #[error("no strictly positive grading exists for these atoms")]
    NoPositiveGrading,
    #[error("atom {label} is a non-negative combination of the other atoms")]
    NonMinimalGeneratingSet { label: String },
    #[error("atom {label} is the zero vector")]
    ZeroAtom { label: String },
    #[error("duplicate atom label {label}")]
    DuplicateLabel { label: String },
    #[error("atom {label} has {found} coordinates, expected {expected}")]
    DimensionMismatch {
        label: String,
        expected: usize,
        found: usize,
    },
    #[error("supplied grading is not strictly positive on atom {label}")]
    InvalidGrading { label: String },
    #[error("grading entry {value} is not a valid rational")]
    UnparsableWeight { value: String },
    #[error("vector {0:?} is not an element of the monoid")]
    NotAnElement(Vec<i64>),
    #[error("unknown atom label {label}")]
    UnknownAtom { label: String },
}

/// A labeled generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Atom {
    pub label: String,
    pub vector: Vec<i64>,
}

impl Atom {
    pub fn new(label: impl Into<String>, vector: Vec<i64>) -> Self {
        Atom {
            label: label.into(),
            vector,
        }
    }
}

/// An element of the ambient group `Z^d`; membership in the monoid is
/// decided by [`MonoidPresentation::is_element`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MonoidElement {
    vector: Vec<i64>,
}

impl MonoidElement {
    pub fn new(vector: Vec<i64>) -> Self {
        MonoidElement { vector }
    }

    pub fn zero(dim: usize) -> Self {
        MonoidElement {
            vector: vec![0; dim],
        }
    }

    pub fn vector(&self) -> &[i64] {
        &self.vector
    }

    pub fn is_zero(&self) -> bool {
        self.vector.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &MonoidElement) -> MonoidElement {
        MonoidElement {
            vector: self
                .vector
                .iter()
                .zip(&other.vector)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &MonoidElement) -> MonoidElement {
        MonoidElement {
            vector: self
                .vector
                .iter()
                .zip(&other.vector)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scaled(&self, k: i64) -> MonoidElement {
        MonoidElement {
            vector: self.vector.iter().map(|c| c * k).collect(),
        }
    }
}

impl fmt::Display for MonoidElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.vector.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A factorization `z`: a multiset of atom labels with positive
/// multiplicities. Its length `|z|` is the total multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Factorization {
    multiplicities: BTreeMap<String, u64>,
}

impl Factorization {
    pub fn new(multiplicities: BTreeMap<String, u64>) -> Self {
        Factorization {
            multiplicities: multiplicities.into_iter().filter(|&(_, n)| n > 0).collect(),
        }
    }

    pub fn empty() -> Self {
        Factorization {
            multiplicities: BTreeMap::new(),
        }
    }

    pub fn length(&self) -> u64 {
        self.multiplicities.values().sum()
    }

    pub fn multiplicities(&self) -> &BTreeMap<String, u64> {
        &self.multiplicities
    }

    pub fn multiplicity(&self, label: &str) -> u64 {
        self.multiplicities.get(label).copied().unwrap_or(0)
    }
}

/// Provenance metadata carried in monoid files.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidMeta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target_set: Option<SetOfLengths>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<BlockMeta>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockMeta {
    pub prefix: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target_set: Option<SetOfLengths>,
}

/// On-disk form of a presentation. Rationals are strings like `"1"` or
/// `"1/2"`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MonoidFile {
    pub dim: usize,
    pub atoms: Vec<Atom>,
    pub grading: Vec<String>,
    #[serde(default)]
    pub meta: MonoidMeta,
}

/// A reduced finitely generated monoid inside `Z^d`, given by a minimal
/// generating set of atoms and a grading strictly positive on every atom.
#[derive(Clone)]
pub struct MonoidPresentation {
    dim: usize,
    atoms: Vec<Atom>,
    grading: Vec<Weight>,
    meta: MonoidMeta,
    /// lcm of the grading denominators; scaled weights are exact integers.
    scale: i64,
    scaled_coords: Vec<i64>,
    atom_weights: Vec<i64>,
    label_order: Vec<usize>,
    search: Search,
}

impl fmt::Debug for MonoidPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MonoidPresentation")
            .field("dim", &self.dim)
            .field("atoms", &self.atoms)
            .field("grading", &self.grading)
            .finish()
    }
}

impl PartialEq for MonoidPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.atoms == other.atoms
            && self.grading == other.grading
            && self.meta == other.meta
    }
}

impl MonoidPresentation {
    /// Builds a presentation, computing a strictly positive grading from the
    /// atoms by exact rational feasibility search and checking that the
    /// atoms form a minimal generating set.
    pub fn build(dim: usize, atoms: Vec<Atom>) -> Result<Self, MonoidError> {
        validate_atoms(dim, &atoms)?;
        let vectors: Vec<Vec<i64>> = atoms.iter().map(|a| a.vector.clone()).collect();
        let grading =
            positive_grading(dim, &vectors).ok_or(MonoidError::NoPositiveGrading)?;
        Self::assemble(dim, atoms, grading, MonoidMeta::default())
    }

    /// Builds a presentation with an explicit grading, validating that it is
    /// strictly positive on every atom.
    pub fn with_grading(
        dim: usize,
        atoms: Vec<Atom>,
        grading: Vec<Weight>,
        meta: MonoidMeta,
    ) -> Result<Self, MonoidError> {
        validate_atoms(dim, &atoms)?;
        assert_eq!(grading.len(), dim, "grading length must equal dim");
        Self::assemble(dim, atoms, grading, meta)
    }

    fn assemble(
        dim: usize,
        atoms: Vec<Atom>,
        grading: Vec<Weight>,
        meta: MonoidMeta,
    ) -> Result<Self, MonoidError> {
        let scale = grading
            .iter()
            .map(|w| *w.denom())
            .fold(1i64, lcm);
        let scaled_coords: Vec<i64> = grading
            .iter()
            .map(|w| w.numer() * (scale / w.denom()))
            .collect();
        let atom_weights: Vec<i64> = atoms
            .iter()
            .map(|a| dot(&scaled_coords, &a.vector))
            .collect();
        for (atom, &w) in atoms.iter().zip(&atom_weights) {
            if w <= 0 {
                return Err(MonoidError::InvalidGrading {
                    label: atom.label.clone(),
                });
            }
        }
        let mut label_order: Vec<usize> = (0..atoms.len()).collect();
        label_order.sort_by(|&i, &j| atoms[i].label.cmp(&atoms[j].label));
        let search = Search::new(dim, &atoms, &atom_weights);
        let p = MonoidPresentation {
            dim,
            atoms,
            grading,
            meta,
            scale,
            scaled_coords,
            atom_weights,
            label_order,
            search,
        };
        p.check_minimality()?;
        Ok(p)
    }

    /// No atom may be a non-negative combination of the others.
    fn check_minimality(&self) -> Result<(), MonoidError> {
        for skip in 0..self.atoms.len() {
            let others: Vec<usize> = (0..self.atoms.len()).filter(|&j| j != skip).collect();
            let sub = Search::for_subset(self.dim, &self.atoms, &self.atom_weights, &others);
            let target = &self.atoms[skip].vector;
            let w = self.atom_weights[skip];
            if !sub.solve(target, w, true).is_empty() {
                return Err(MonoidError::NonMinimalGeneratingSet {
                    label: self.atoms[skip].label.clone(),
                });
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn grading(&self) -> &[Weight] {
        &self.grading
    }

    pub fn meta(&self) -> &MonoidMeta {
        &self.meta
    }

    pub fn set_meta(&mut self, meta: MonoidMeta) {
        self.meta = meta;
    }

    pub fn atom_by_label(&self, label: &str) -> Option<&Atom> {
        self.atoms.iter().find(|a| a.label == label)
    }

    pub fn min_atom_grading(&self) -> Weight {
        self.atom_weights
            .iter()
            .map(|&w| Weight::new(w, self.scale))
            .min()
            .expect("presentation has at least one atom")
    }

    pub fn max_atom_grading(&self) -> Weight {
        self.atom_weights
            .iter()
            .map(|&w| Weight::new(w, self.scale))
            .max()
            .expect("presentation has at least one atom")
    }

    /// The grading value of an arbitrary vector.
    pub fn weight(&self, v: &MonoidElement) -> Weight {
        Weight::new(dot(&self.scaled_coords, v.vector()), self.scale)
    }

    /// The image of a formal atom multiset under the factorization map.
    pub fn element_of(&self, z: &Factorization) -> Result<MonoidElement, MonoidError> {
        let mut v = vec![0i64; self.dim];
        for (label, &n) in z.multiplicities() {
            let atom = self
                .atom_by_label(label)
                .ok_or_else(|| MonoidError::UnknownAtom {
                    label: label.clone(),
                })?;
            for (c, a) in v.iter_mut().zip(&atom.vector) {
                *c += a * n as i64;
            }
        }
        Ok(MonoidElement::new(v))
    }

    /// True iff some non-negative atom combination reaches `v`. The zero
    /// vector is always a member (empty product).
    pub fn is_element(&self, v: &MonoidElement) -> bool {
        assert_eq!(v.vector().len(), self.dim, "element has wrong dimension");
        let w = dot(&self.scaled_coords, v.vector());
        if w < 0 {
            return false;
        }
        !self.search.solve(v.vector(), w, true).is_empty()
    }

    /// The complete finite set of factorizations of `v`, sorted by the
    /// multiplicity vector read in atom-label order.
    pub fn factorizations(&self, v: &MonoidElement) -> Result<Vec<Factorization>, MonoidError> {
        assert_eq!(v.vector().len(), self.dim, "element has wrong dimension");
        let w = dot(&self.scaled_coords, v.vector());
        let mut raw = if w < 0 {
            Vec::new()
        } else {
            self.search.solve(v.vector(), w, false)
        };
        if raw.is_empty() {
            return Err(MonoidError::NotAnElement(v.vector().to_vec()));
        }
        raw.sort_by_key(|mults| {
            self.label_order
                .iter()
                .map(|&i| mults[i])
                .collect::<Vec<u64>>()
        });
        Ok(raw
            .into_iter()
            .map(|mults| {
                Factorization::new(
                    mults
                        .iter()
                        .enumerate()
                        .filter(|&(_, &n)| n > 0)
                        .map(|(i, &n)| (self.atoms[i].label.clone(), n))
                        .collect(),
                )
            })
            .collect())
    }

    /// The set of factorization lengths of `v`; `{0}` iff `v = 0`.
    pub fn lengths(&self, v: &MonoidElement) -> Result<SetOfLengths, MonoidError> {
        let lengths: BTreeSet<u64> = self
            .factorizations(v)?
            .iter()
            .map(Factorization::length)
            .collect();
        Ok(SetOfLengths::new(lengths).expect("at least one factorization"))
    }

    /// All elements with grading at most `bound`, in lexicographic vector
    /// order.
    pub fn enumerate_elements(&self, bound: Weight) -> Vec<MonoidElement> {
        let budget = scaled_budget(bound, self.scale);
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<(Vec<i64>, i64)> = VecDeque::new();
        let zero = vec![0i64; self.dim];
        if budget >= 0 {
            seen.insert(zero.clone());
            queue.push_back((zero, 0));
        }
        while let Some((v, w)) = queue.pop_front() {
            for (atom, &aw) in self.atoms.iter().zip(&self.atom_weights) {
                let nw = w + aw;
                if nw > budget {
                    continue;
                }
                let next: Vec<i64> = v.iter().zip(&atom.vector).map(|(a, b)| a + b).collect();
                if seen.insert(next.clone()) {
                    queue.push_back((next, nw));
                }
            }
        }
        let mut out: Vec<Vec<i64>> = seen.into_iter().collect();
        out.sort();
        out.into_iter().map(MonoidElement::new).collect()
    }

    /// Box test for root closure: for each `v` in `[-radius, radius]^d` and
    /// each `m in [2, max_root]`, if `m * v` is an element then `v` must be
    /// one. Returns all violations.
    pub fn root_closure_violations(
        &self,
        radius: i64,
        max_root: u32,
    ) -> Vec<(MonoidElement, u32)> {
        let mut out = Vec::new();
        let mut v = vec![-radius; self.dim];
        loop {
            let elem = MonoidElement::new(v.clone());
            for m in 2..=max_root {
                let power = elem.scaled(m as i64);
                if self.is_element(&power) && !self.is_element(&elem) {
                    out.push((elem.clone(), m));
                }
            }
            // odometer increment
            let mut i = 0;
            loop {
                if i == self.dim {
                    return out;
                }
                if v[i] < radius {
                    v[i] += 1;
                    break;
                }
                v[i] = -radius;
                i += 1;
            }
        }
    }

    pub fn to_file(&self) -> MonoidFile {
        MonoidFile {
            dim: self.dim,
            atoms: self.atoms.clone(),
            grading: self.grading.iter().map(|w| w.to_string()).collect(),
            meta: self.meta.clone(),
        }
    }

    pub fn from_file(file: MonoidFile) -> Result<Self, MonoidError> {
        let grading = file
            .grading
            .iter()
            .map(|s| {
                Weight::from_str(s).map_err(|_| MonoidError::UnparsableWeight {
                    value: s.clone(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        if grading.len() != file.dim {
            return Err(MonoidError::UnparsableWeight {
                value: format!("expected {} grading entries", file.dim),
            });
        }
        Self::with_grading(file.dim, file.atoms, grading, file.meta)
    }
}

fn validate_atoms(dim: usize, atoms: &[Atom]) -> Result<(), MonoidError> {
    assert!(!atoms.is_empty(), "presentation needs at least one atom");
    let mut labels = BTreeSet::new();
    for atom in atoms {
        if atom.vector.len() != dim {
            return Err(MonoidError::DimensionMismatch {
                label: atom.label.clone(),
                expected: dim,
                found: atom.vector.len(),
            });
        }
        if atom.vector.iter().all(|&c| c == 0) {
            return Err(MonoidError::ZeroAtom {
                label: atom.label.clone(),
            });
        }
        if !labels.insert(&atom.label) {
            return Err(MonoidError::DuplicateLabel {
                label: atom.label.clone(),
            });
        }
    }
    Ok(())
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

fn floor_div(a: i64, b: i64) -> i64 {
    let q = a / b;
    if a % b != 0 && (a < 0) != (b < 0) {
        q - 1
    } else {
        q
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    let q = a / b;
    if a % b != 0 && (a < 0) == (b < 0) {
        q + 1
    } else {
        q
    }
}

/// Scaled integer budget for a rational bound.
fn scaled_budget(bound: Weight, scale: i64) -> i64 {
    let scaled = bound * Weight::from_integer(scale);
    scaled.floor().to_integer()
}

/// Depth-first enumerator for `A x = v` over non-negative integers.
///
/// Atoms are visited with many-coordinate atoms first and unit vectors last;
/// once only "one-sided" atoms remain for a coordinate, the remaining
/// multiplicities are forced, so the branching is confined to the few atoms
/// with mixed signs. The per-atom weight bound from the grading guarantees
/// termination.
#[derive(Clone)]
struct Search {
    dim: usize,
    original_len: usize,
    /// original atom indices in search order
    order: Vec<usize>,
    vectors: Vec<Vec<i64>>,
    weights: Vec<i64>,
    /// pos_sup[k][c]: some atom at position >= k has a positive entry at c
    pos_sup: Vec<Vec<bool>>,
    neg_sup: Vec<Vec<bool>>,
}

impl Search {
    fn new(dim: usize, atoms: &[Atom], weights: &[i64]) -> Self {
        let all: Vec<usize> = (0..atoms.len()).collect();
        Self::for_subset(dim, atoms, weights, &all)
    }

    fn for_subset(dim: usize, atoms: &[Atom], weights: &[i64], subset: &[usize]) -> Self {
        let mut order: Vec<usize> = subset.to_vec();
        order.sort_by(|&i, &j| {
            let si = atoms[i].vector.iter().filter(|&&c| c != 0).count();
            let sj = atoms[j].vector.iter().filter(|&&c| c != 0).count();
            sj.cmp(&si).then_with(|| atoms[i].label.cmp(&atoms[j].label))
        });
        let vectors: Vec<Vec<i64>> = order.iter().map(|&i| atoms[i].vector.clone()).collect();
        let w: Vec<i64> = order.iter().map(|&i| weights[i]).collect();
        let m = order.len();
        let mut pos_sup = vec![vec![false; dim]; m + 1];
        let mut neg_sup = vec![vec![false; dim]; m + 1];
        for k in (0..m).rev() {
            for c in 0..dim {
                pos_sup[k][c] = pos_sup[k + 1][c] || vectors[k][c] > 0;
                neg_sup[k][c] = neg_sup[k + 1][c] || vectors[k][c] < 0;
            }
        }
        Search {
            dim,
            original_len: atoms.len(),
            order,
            vectors,
            weights: w,
            pos_sup,
            neg_sup,
        }
    }

    /// All solutions as multiplicity vectors indexed by original atom index.
    /// `budget` must equal the scaled grading of `target`.
    fn solve(&self, target: &[i64], budget: i64, first_only: bool) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        if budget < 0 {
            return out;
        }
        let mut rem = target.to_vec();
        let mut mults = vec![0u64; self.order.len()];
        self.dfs(0, &mut rem, budget, &mut mults, &mut out, first_only);
        out
    }

    fn dfs(
        &self,
        pos: usize,
        rem: &mut [i64],
        budget: i64,
        mults: &mut [u64],
        out: &mut Vec<Vec<u64>>,
        first_only: bool,
    ) -> bool {
        for ((&r, &ps), &ns) in rem
            .iter()
            .zip(&self.pos_sup[pos])
            .zip(&self.neg_sup[pos])
        {
            if (r > 0 && !ps) || (r < 0 && !ns) {
                return false;
            }
        }
        if pos == self.order.len() {
            // support checks above force rem == 0 here
            let mut by_original = vec![0u64; self.original_len];
            for (k, &orig) in self.order.iter().enumerate() {
                by_original[orig] = mults[k];
            }
            out.push(by_original);
            return first_only;
        }
        let a = &self.vectors[pos];
        let w = self.weights[pos];
        let mut t_lo: i64 = 0;
        let mut t_hi: i64 = budget / w;
        for c in 0..self.dim {
            let ac = a[c];
            if ac == 0 {
                continue;
            }
            if !self.pos_sup[pos + 1][c] {
                // nothing later can raise coordinate c: need rem - t*a <= 0
                if ac > 0 {
                    t_lo = t_lo.max(ceil_div(rem[c], ac));
                } else {
                    t_hi = t_hi.min(floor_div(rem[c], ac));
                }
            }
            if !self.neg_sup[pos + 1][c] {
                // nothing later can lower coordinate c: need rem - t*a >= 0
                if ac > 0 {
                    t_hi = t_hi.min(floor_div(rem[c], ac));
                } else {
                    t_lo = t_lo.max(ceil_div(rem[c], ac));
                }
            }
        }
        if t_lo > t_hi {
            return false;
        }
        for t in t_lo..=t_hi {
            let used = t * w;
            if used > budget {
                break;
            }
            for (r, &av) in rem.iter_mut().zip(a) {
                *r -= t * av;
            }
            mults[pos] = t as u64;
            let stop = self.dfs(pos + 1, rem, budget - used, mults, out, first_only);
            for (r, &av) in rem.iter_mut().zip(a) {
                *r += t * av;
            }
            mults[pos] = 0;
            if stop {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn unit(dim: usize, i: usize) -> Vec<i64> {
        let mut v = vec![0; dim];
        v[i] = 1;
        v
    }

    /// Hand-built presentation for the two-relation monoid on {2,3}: unit
    /// atoms plus w = (1,1,-1,-1), graded (1,1,1/2,1/2).
    fn two_three() -> MonoidPresentation {
        MonoidPresentation::with_grading(
            4,
            vec![
                Atom::new("u1,1", unit(4, 0)),
                Atom::new("u1,2", unit(4, 1)),
                Atom::new("u2,1", unit(4, 2)),
                Atom::new("u2,2", unit(4, 3)),
                Atom::new("u2,3", vec![1, 1, -1, -1]),
            ],
            vec![
                Weight::one(),
                Weight::one(),
                Weight::new(1, 2),
                Weight::new(1, 2),
            ],
            MonoidMeta::default(),
        )
        .unwrap()
    }

    #[test]
    fn build_free_rank_two() {
        let p =
            MonoidPresentation::build(2, vec![Atom::new("a", unit(2, 0)), Atom::new("b", unit(2, 1))])
                .unwrap();
        assert_eq!(p.grading(), &[Weight::one(), Weight::one()]);
    }

    #[test]
    fn build_rejects_invertible_directions() {
        let err = MonoidPresentation::build(
            1,
            vec![Atom::new("a", vec![1]), Atom::new("b", vec![-1])],
        )
        .unwrap_err();
        assert_eq!(err, MonoidError::NoPositiveGrading);
    }

    #[test]
    fn build_rejects_zero_atom() {
        let err = MonoidPresentation::build(2, vec![Atom::new("z", vec![0, 0])]).unwrap_err();
        assert_eq!(
            err,
            MonoidError::ZeroAtom {
                label: "z".into()
            }
        );
    }

    #[test]
    fn build_rejects_non_minimal_set() {
        let err = MonoidPresentation::build(
            1,
            vec![Atom::new("a", vec![1]), Atom::new("b", vec![2])],
        )
        .unwrap_err();
        assert_eq!(
            err,
            MonoidError::NonMinimalGeneratingSet {
                label: "b".into()
            }
        );
    }

    #[test]
    fn explicit_grading_checked_on_atoms() {
        let err = MonoidPresentation::with_grading(
            2,
            vec![Atom::new("a", vec![1, -1]), Atom::new("b", unit(2, 1))],
            vec![Weight::one(), Weight::one()],
            MonoidMeta::default(),
        )
        .unwrap_err();
        assert_eq!(err, MonoidError::InvalidGrading { label: "a".into() });
    }

    #[test]
    fn membership_examples() {
        let p = two_three();
        assert!(p.is_element(&MonoidElement::new(vec![1, 1, 0, 0])));
        assert!(p.is_element(&MonoidElement::zero(4)));
        assert!(p.is_element(&MonoidElement::new(vec![1, 1, -1, -1])));
        assert!(!p.is_element(&MonoidElement::new(vec![0, 0, -1, 0])));
    }

    #[test]
    fn factorization_counts() {
        let p = two_three();
        let ideal = MonoidElement::new(vec![1, 1, 0, 0]);
        let zs = p.factorizations(&ideal).unwrap();
        assert_eq!(zs.len(), 2);
        // ascending multiplicity vectors in label order: the u2 row first
        assert_eq!(zs[0].length(), 3);
        assert_eq!(
            zs[1].multiplicities(),
            &BTreeMap::from([("u1,1".into(), 1), ("u1,2".into(), 1)])
        );

        let twice = ideal.scaled(2);
        assert_eq!(p.factorizations(&twice).unwrap().len(), 3);

        let free = MonoidPresentation::build(
            2,
            vec![Atom::new("a", unit(2, 0)), Atom::new("b", unit(2, 1))],
        )
        .unwrap();
        assert_eq!(
            free.factorizations(&MonoidElement::new(vec![2, 1]))
                .unwrap()
                .len(),
            1
        );
    }

    #[test]
    fn factorizations_reject_non_elements() {
        let p = two_three();
        let err = p
            .factorizations(&MonoidElement::new(vec![0, 0, -1, 0]))
            .unwrap_err();
        assert_eq!(err, MonoidError::NotAnElement(vec![0, 0, -1, 0]));
    }

    #[test]
    fn lengths_examples() {
        let p = two_three();
        assert_eq!(
            p.lengths(&MonoidElement::zero(4)).unwrap(),
            SetOfLengths::singleton(0)
        );
        let ideal = MonoidElement::new(vec![1, 1, 0, 0]);
        assert_eq!(
            p.lengths(&ideal).unwrap(),
            SetOfLengths::new([2, 3]).unwrap()
        );
        assert_eq!(
            p.lengths(&ideal.scaled(2)).unwrap(),
            SetOfLengths::new([4, 5, 6]).unwrap()
        );
    }

    #[test]
    fn enumerate_free_rank_one() {
        let p = MonoidPresentation::build(1, vec![Atom::new("a", vec![1])]).unwrap();
        let elems = p.enumerate_elements(Weight::from_integer(3));
        let got: Vec<i64> = elems.iter().map(|e| e.vector()[0]).collect();
        assert_eq!(got, vec![0, 1, 2, 3]);
    }

    #[test]
    fn enumerate_below_min_grading_gives_zero_only() {
        let p = two_three();
        let elems = p.enumerate_elements(Weight::new(1, 4));
        assert_eq!(elems, vec![MonoidElement::zero(4)]);
    }

    #[test]
    fn enumerate_unit_slice_of_two_three() {
        // Elements of grading <= 1: zero, the five atoms, and the three
        // degree-one products of the weight-1/2 unit atoms.
        let p = two_three();
        let elems = p.enumerate_elements(Weight::one());
        assert_eq!(elems.len(), 9);
        for e in &elems {
            assert!(p.weight(e) <= Weight::one());
            assert!(p.is_element(e));
        }
        assert!(elems.contains(&MonoidElement::new(vec![0, 0, 2, 0])));
        assert!(elems.contains(&MonoidElement::new(vec![0, 0, 1, 1])));
    }

    #[test]
    fn factorizations_reconstruct_and_respect_weight_bound() {
        let p = two_three();
        let minw = p.min_atom_grading();
        for v in p.enumerate_elements(Weight::from_integer(2)) {
            let wv = p.weight(&v);
            for z in p.factorizations(&v).unwrap() {
                assert_eq!(p.element_of(&z).unwrap(), v);
                assert!(Weight::from_integer(z.length() as i64) * minw <= wv);
            }
        }
    }

    #[test]
    fn superadditivity_on_small_slice() {
        let p = two_three();
        let slice = p.enumerate_elements(Weight::one());
        for u in &slice {
            for v in &slice {
                let sum = u.add(v);
                let lu = p.lengths(u).unwrap();
                let lv = p.lengths(v).unwrap();
                let lsum = p.lengths(&sum).unwrap();
                for l in lu.sumset(&lv).iter() {
                    assert!(lsum.contains(l), "missing {l} in L({sum})");
                }
            }
        }
    }

    #[test]
    fn root_closure_box_clean_on_two_three() {
        let p = two_three();
        assert!(p.root_closure_violations(1, 3).is_empty());
    }

    #[test]
    fn file_round_trip() {
        let p = two_three();
        let json = serde_json::to_string(&p.to_file()).unwrap();
        let file: MonoidFile = serde_json::from_str(&json).unwrap();
        let q = MonoidPresentation::from_file(file).unwrap();
        assert_eq!(p, q);
        assert_eq!(
            p.to_file().grading,
            vec!["1".to_string(), "1".into(), "1/2".into(), "1/2".into()]
        );
    }
}
