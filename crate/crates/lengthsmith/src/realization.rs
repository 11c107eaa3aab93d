//! Construction of monoids with a prescribed system of sets of lengths.
//!
//! For a finite set `L = {k_1 < ... < k_r}` contained in `N_{>=2}`,
//! [`realize_single`] builds a reduced finitely generated monoid whose atoms
//! `u_{i,j}` (`j in [1, k_i]`, `i in [1, r]`) satisfy a single chain of
//! relations
//!
//! ```text
//! u_{1,1} ... u_{1,k_1} = u_{2,1} ... u_{2,k_2} = ... = u_{r,1} ... u_{r,k_r}
//! ```
//!
//! and nothing else. Its system of sets of lengths is
//! `{{0},{1}} ∪ {y + nL : y, n >= 0}`. The inductive quotient-group
//! construction is flattened into one closed-form atom matrix: the first
//! `k_1` coordinates carry the `u_{1,j}` as unit vectors, each later block
//! `i` contributes `k_i - 1` fresh unit vectors, and the closing atom
//! `u_{i,k_i}` has entry `1` on the first block, `-1` on block `i`. The
//! grading puts weight `1` on the first block and `(k_1-1)/(k_i-1)` on
//! block `i`, which is strictly positive on every atom and gives the
//! closing atoms weight exactly `1`.
//!
//! [`realize_family`] places one such monoid per family generator on
//! disjoint coordinate blocks; the coproduct realizes the whole additively
//! closed family. An empty generator list yields the free monoid on one
//! generator, whose system is all singletons.
//!
//! [`verify_properties`] exhaustively re-checks the structural claims on a
//! bounded slice: equality of the atom-row products, unique factorization
//! off the ideal generated by the relation product, the length formula
//! `L(v) = nL + L(b)` with the factorization-set product structure, and
//! root closure on a coordinate box. In the length formula the off-ideal
//! part `b` may be the zero vector (when `v` is a pure power of the
//! relation product), in which case `L(b) = {0}`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, ToPrimitive, Zero};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::families::FamilyPresentation;
use crate::lengthsets::SetOfLengths;
use crate::monoid::{
    Atom, BlockMeta, Factorization, MonoidElement, MonoidError, MonoidMeta, MonoidPresentation,
    Weight,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizationError {
    #[error("target set {0} must be contained in N>=2")]
    SetNotInNGe2(SetOfLengths),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error("presentation is not a recognized realization: {0}")]
    MalformedRealization(String),
}

/// First counterexample from a failed verification run.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("verification failed at element {element}: {detail}")]
pub struct VerificationFailure {
    pub element: MonoidElement,
    pub detail: String,
}

/// The realized monoid for a single target set, with its atom bookkeeping.
#[derive(Debug, Clone)]
pub struct RealizedMonoid {
    presentation: MonoidPresentation,
    target_set: SetOfLengths,
    atom_index: BTreeMap<(u32, u32), String>,
    ideal_generator: MonoidElement,
}

/// One coordinate block of a realized coproduct. `target_set` is `None` for
/// the rank-one free block emitted when the family has no generators.
#[derive(Debug, Clone)]
pub struct RealizedBlock {
    pub prefix: String,
    pub target_set: Option<SetOfLengths>,
    pub offset: usize,
    pub dim: usize,
    pub ideal: Option<MonoidElement>,
}

/// Block-diagonal coproduct of realized monoids, one per family generator.
#[derive(Debug, Clone)]
pub struct RealizedFamily {
    presentation: MonoidPresentation,
    family: FamilyPresentation,
    blocks: Vec<RealizedBlock>,
}

struct SingleLayout {
    dim: usize,
    atoms: Vec<((u32, u32), Vec<i64>)>,
    grading: Vec<Weight>,
    ideal: Vec<i64>,
}

/// Coordinates needed by one block: `k_1` plus `k_i - 1` per later row.
fn single_dim(ks: &[u64]) -> usize {
    ks[0] as usize + ks[1..].iter().map(|&k| k as usize - 1).sum::<usize>()
}

/// Closed-form atom matrix for one target set, laid out at `offset` inside
/// an ambient space of `total_dim` coordinates.
fn single_layout(ks: &[u64], offset: usize, total_dim: usize) -> SingleLayout {
    let k1 = ks[0] as usize;
    let dim = single_dim(ks);
    let mut grading = vec![Weight::zero(); dim];
    let mut atoms = Vec::new();
    let unit = |c: usize| {
        let mut v = vec![0i64; total_dim];
        v[offset + c] = 1;
        v
    };
    for (j, g) in grading.iter_mut().enumerate().take(k1) {
        *g = Weight::one();
        atoms.push(((1, j as u32 + 1), unit(j)));
    }
    let mut block_start = k1;
    for (i, &ki) in ks.iter().enumerate().skip(1) {
        let width = ki as usize - 1;
        for j in 0..width {
            grading[block_start + j] = Weight::new(k1 as i64 - 1, ki as i64 - 1);
            atoms.push(((i as u32 + 1, j as u32 + 1), unit(block_start + j)));
        }
        let mut closing = vec![0i64; total_dim];
        for c in 0..k1 {
            closing[offset + c] = 1;
        }
        for j in 0..width {
            closing[offset + block_start + j] = -1;
        }
        atoms.push(((i as u32 + 1, ki as u32), closing));
        block_start += width;
    }
    let mut ideal = vec![0i64; total_dim];
    for c in 0..k1 {
        ideal[offset + c] = 1;
    }
    SingleLayout {
        dim,
        atoms,
        grading,
        ideal,
    }
}

/// Builds the explicit monoid realizing `L` as described in the module
/// docs. `L` must be non-empty and contained in `N_{>=2}`.
pub fn realize_single(l: &SetOfLengths) -> Result<RealizedMonoid, RealizationError> {
    if l.min_len() < 2 {
        return Err(RealizationError::SetNotInNGe2(l.clone()));
    }
    let ks: Vec<u64> = l.elems().to_vec();
    let layout = single_layout(&ks, 0, single_dim(&ks));
    let atoms: Vec<Atom> = layout
        .atoms
        .iter()
        .map(|((i, j), v)| Atom::new(format!("u{i},{j}"), v.clone()))
        .collect();
    let meta = MonoidMeta {
        construction: Some("prop3.1".to_string()),
        target_set: Some(l.clone()),
        blocks: None,
    };
    let presentation =
        MonoidPresentation::with_grading(layout.dim, atoms, layout.grading, meta)?;
    let atom_index = layout
        .atoms
        .iter()
        .map(|((i, j), _)| ((*i, *j), format!("u{i},{j}")))
        .collect();
    Ok(RealizedMonoid {
        presentation,
        target_set: l.clone(),
        atom_index,
        ideal_generator: MonoidElement::new(layout.ideal),
    })
}

/// Builds the coproduct realizing a whole family: one block per generator,
/// or the free monoid on one generator when there are none.
pub fn realize_family(family: &FamilyPresentation) -> RealizedFamily {
    let gens = family.generators();
    if gens.is_empty() {
        let atoms = vec![Atom::new("b1.u1,1", vec![1])];
        let meta = MonoidMeta {
            construction: Some("coproduct".to_string()),
            target_set: None,
            blocks: Some(vec![BlockMeta {
                prefix: "b1".to_string(),
                target_set: None,
            }]),
        };
        let presentation =
            MonoidPresentation::with_grading(1, atoms, vec![Weight::one()], meta)
                .expect("free block is a valid presentation");
        return RealizedFamily {
            presentation,
            family: family.clone(),
            blocks: vec![RealizedBlock {
                prefix: "b1".to_string(),
                target_set: None,
                offset: 0,
                dim: 1,
                ideal: None,
            }],
        };
    }

    let total_dim: usize = gens.iter().map(|g| single_dim(g.elems())).sum();
    let mut atoms = Vec::new();
    let mut grading = vec![Weight::zero(); total_dim];
    let mut blocks = Vec::new();
    let mut block_meta = Vec::new();
    let mut offset = 0;
    for (idx, gen) in gens.iter().enumerate() {
        let prefix = format!("b{}", idx + 1);
        let layout = single_layout(gen.elems(), offset, total_dim);
        for ((i, j), v) in &layout.atoms {
            atoms.push(Atom::new(format!("{prefix}.u{i},{j}"), v.clone()));
        }
        grading[offset..offset + layout.dim].copy_from_slice(&layout.grading);
        blocks.push(RealizedBlock {
            prefix: prefix.clone(),
            target_set: Some(gen.clone()),
            offset,
            dim: layout.dim,
            ideal: Some(MonoidElement::new(layout.ideal)),
        });
        block_meta.push(BlockMeta {
            prefix,
            target_set: Some(gen.clone()),
        });
        offset += layout.dim;
    }
    let meta = MonoidMeta {
        construction: Some("coproduct".to_string()),
        target_set: None,
        blocks: Some(block_meta),
    };
    let presentation = MonoidPresentation::with_grading(total_dim, atoms, grading, meta)
        .expect("coproduct layout is a valid presentation");
    RealizedFamily {
        presentation,
        family: family.clone(),
        blocks,
    }
}

/// All length sets arising on the slice of elements with grading at most
/// `bound`, deduplicated.
pub fn system_of_lengths(p: &MonoidPresentation, bound: Weight) -> BTreeSet<SetOfLengths> {
    p.enumerate_elements(bound)
        .par_iter()
        .map(|v| p.lengths(v).expect("enumerated vectors are elements"))
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

impl RealizedMonoid {
    pub fn presentation(&self) -> &MonoidPresentation {
        &self.presentation
    }

    pub fn target_set(&self) -> &SetOfLengths {
        &self.target_set
    }

    pub fn ideal_generator(&self) -> &MonoidElement {
        &self.ideal_generator
    }

    pub fn atom_label(&self, i: u32, j: u32) -> Option<&str> {
        self.atom_index.get(&(i, j)).map(String::as_str)
    }

    pub fn atom_index(&self) -> &BTreeMap<(u32, u32), String> {
        &self.atom_index
    }

    pub fn system_of_lengths(&self, bound: Weight) -> BTreeSet<SetOfLengths> {
        system_of_lengths(&self.presentation, bound)
    }

    /// Reconstructs the bookkeeping from a presentation whose meta declares
    /// a single-set construction; the atom matrix must match the canonical
    /// layout for the recorded target set (the grading may differ).
    pub fn from_presentation(p: MonoidPresentation) -> Result<Self, RealizationError> {
        let target = p
            .meta()
            .target_set
            .clone()
            .ok_or_else(|| RealizationError::MalformedRealization("missing target_set".into()))?;
        let canonical = realize_single(&target)?;
        if canonical.presentation.atoms() != p.atoms() {
            return Err(RealizationError::MalformedRealization(format!(
                "atoms do not match the canonical construction for {target}"
            )));
        }
        Ok(RealizedMonoid {
            presentation: p,
            target_set: canonical.target_set,
            atom_index: canonical.atom_index,
            ideal_generator: canonical.ideal_generator,
        })
    }
}

impl RealizedFamily {
    pub fn presentation(&self) -> &MonoidPresentation {
        &self.presentation
    }

    pub fn family(&self) -> &FamilyPresentation {
        &self.family
    }

    pub fn blocks(&self) -> &[RealizedBlock] {
        &self.blocks
    }

    pub fn system_of_lengths(&self, bound: Weight) -> BTreeSet<SetOfLengths> {
        system_of_lengths(&self.presentation, bound)
    }

    /// Least grading of an element whose set of lengths is `l`, or `None`
    /// if `l` is not a family member. Minimized over all decomposition
    /// witnesses: a shift costs the cheapest atom weight per unit, and each
    /// generator application costs its block ideal.
    pub fn min_realization_cost(&self, l: &SetOfLengths) -> Option<Weight> {
        let cheapest = self.presentation.min_atom_grading();
        let ideal_costs: Vec<Weight> = self
            .blocks
            .iter()
            .filter_map(|b| b.ideal.as_ref().map(|g| self.presentation.weight(g)))
            .collect();
        self.family
            .witnesses(l)
            .into_iter()
            .map(|w| {
                let mut cost = Weight::from_integer(w.shift as i64) * cheapest;
                for (n, c) in w.multiplicities.iter().zip(&ideal_costs) {
                    cost += Weight::from_integer(*n as i64) * *c;
                }
                cost
            })
            .min()
    }

    /// Reconstructs a coproduct from a presentation with block metadata;
    /// the atoms must match the canonical layout.
    pub fn from_presentation(p: MonoidPresentation) -> Result<Self, RealizationError> {
        let blocks_meta = p
            .meta()
            .blocks
            .clone()
            .ok_or_else(|| RealizationError::MalformedRealization("missing blocks".into()))?;
        let gens: Vec<SetOfLengths> = blocks_meta
            .iter()
            .filter_map(|b| b.target_set.clone())
            .collect();
        if !gens.is_empty() && gens.len() != blocks_meta.len() {
            return Err(RealizationError::MalformedRealization(
                "mixed free and relation blocks are not produced by this construction".into(),
            ));
        }
        let family = FamilyPresentation::new(gens)
            .map_err(|e| RealizationError::MalformedRealization(e.to_string()))?;
        let canonical = realize_family(&family);
        if canonical.presentation.atoms() != p.atoms() {
            return Err(RealizationError::MalformedRealization(
                "atoms do not match the canonical coproduct layout".into(),
            ));
        }
        Ok(RealizedFamily {
            presentation: p,
            family,
            blocks: canonical.blocks,
        })
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k.min(n));
    let mut out = 1u64;
    for i in 0..k {
        out = out * (n - i) / (i + 1);
    }
    out
}

/// Options for [`verify_properties`].
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Radius of the root-closure coordinate box; `None` picks a radius
    /// that keeps the box affordable for the dimension at hand.
    pub box_radius: Option<i64>,
    /// Largest root exponent tested by the root-closure box test.
    pub max_root: u32,
    /// Seed for the sampled superadditivity check.
    pub seed: u64,
    /// Cap on sampled element pairs for the superadditivity check; below
    /// the cap all pairs are checked.
    pub max_sampled_pairs: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            box_radius: None,
            max_root: 3,
            seed: 0,
            max_sampled_pairs: 2000,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckSummary {
    pub checked: u64,
    pub failures: Vec<String>,
}

impl CheckSummary {
    fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RootClosureSummary {
    pub box_radius: i64,
    pub max_root: u32,
    pub checked: u64,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdealCount {
    pub power: u64,
    pub count: u64,
    pub expected: u64,
}

/// Exhaustive verification report for a realized monoid on a bounded slice.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub bound: String,
    pub property_a: String,
    pub property_b: CheckSummary,
    pub property_c: CheckSummary,
    pub ideal_factorization_counts: Vec<IdealCount>,
    pub root_closure: RootClosureSummary,
    pub superadditivity: CheckSummary,
    pub passed: bool,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn into_result(self) -> Result<(), VerificationFailure> {
        if self.passed {
            return Ok(());
        }
        let detail = [
            (self.property_a != "pass").then(|| "atom-row products differ".to_string()),
            self.property_b.failures.first().cloned(),
            self.property_c.failures.first().cloned(),
            self.root_closure.failures.first().cloned(),
            self.superadditivity.failures.first().cloned(),
        ]
        .into_iter()
        .flatten()
        .next()
        .unwrap_or_else(|| "verification failed".to_string());
        Err(VerificationFailure {
            element: MonoidElement::zero(0),
            detail,
        })
    }
}

/// Exhaustively checks, over the slice of grading at most `bound`:
///
/// * (a) the `r` atom-row products all equal the ideal generator;
/// * (b) every element not divisible by the ideal generator has exactly one
///   factorization;
/// * (c) with `n` maximal such that the `n`-th ideal power divides `v` and
///   `b` the quotient, `L(v) = nL + L(b)` and the factorization set is the
///   product of the ideal power's factorizations with `Z(b)`; the ideal
///   power itself has `C(n+r-1, r-1)` factorizations;
/// * root closure on a coordinate box (delegated to the presentation);
/// * superadditivity of length sets on sampled pairs.
pub fn verify_properties(
    r: &RealizedMonoid,
    bound: Weight,
    opts: &VerifyOptions,
) -> VerifyReport {
    let p = r.presentation();
    let target = r.target_set();
    let g = r.ideal_generator();
    let rank = target.len() as u64;

    // (a) each row product must reproduce the ideal generator
    let mut property_a = true;
    for i in 1..=rank as u32 {
        let mut sum = MonoidElement::zero(p.dim());
        let mut j = 1;
        while let Some(label) = r.atom_label(i, j) {
            sum = sum.add(&MonoidElement::new(
                p.atom_by_label(label).unwrap().vector.to_vec(),
            ));
            j += 1;
        }
        if sum != *g {
            property_a = false;
        }
    }

    let elements = p.enumerate_elements(bound);

    // cache factorization sets of ideal powers up to the slice's reach
    let g_weight = p.weight(g);
    let n_max = (bound / g_weight)
        .floor()
        .to_integer()
        .to_u64()
        .unwrap_or(0)
        .max(3);
    let ideal_factorizations: Vec<BTreeSet<Factorization>> = (0..=n_max)
        .map(|n| {
            p.factorizations(&g.scaled(n as i64))
                .expect("ideal powers are elements")
                .into_iter()
                .collect()
        })
        .collect();

    let ideal_counts: Vec<IdealCount> = (0..=3.min(n_max))
        .map(|n| IdealCount {
            power: n,
            count: ideal_factorizations[n as usize].len() as u64,
            expected: binomial(n + rank - 1, rank - 1),
        })
        .collect();
    let counts_ok = ideal_counts.iter().all(|c| c.count == c.expected);

    let per_element: Vec<(Vec<String>, Vec<String>)> = elements
        .par_iter()
        .map(|v| {
            let mut b_failures = Vec::new();
            let mut c_failures = Vec::new();
            let zs: BTreeSet<Factorization> =
                p.factorizations(v).expect("slice element").into_iter().collect();

            let mut n = 0u64;
            loop {
                let candidate = v.sub(&g.scaled(n as i64 + 1));
                if p.is_element(&candidate) {
                    n += 1;
                } else {
                    break;
                }
            }

            if n == 0 && zs.len() != 1 {
                b_failures.push(format!(
                    "element {v} is off the ideal but has {} factorizations",
                    zs.len()
                ));
            }

            let b = v.sub(&g.scaled(n as i64));
            let lb = p.lengths(&b).expect("quotient is an element");
            let expected_lengths = target.n_fold_sumset(n).sumset(&lb);
            let got_lengths = SetOfLengths::new(zs.iter().map(Factorization::length))
                .expect("non-empty factorization set");
            if got_lengths != expected_lengths {
                c_failures.push(format!(
                    "element {v}: lengths {got_lengths} != {n}L + L(b) = {expected_lengths}"
                ));
            }

            let zb = p.factorizations(&b).expect("quotient is an element");
            let mut product: BTreeSet<Factorization> = BTreeSet::new();
            for zi in &ideal_factorizations[n as usize] {
                for zbj in &zb {
                    let mut merged = zi.multiplicities().clone();
                    for (label, &count) in zbj.multiplicities() {
                        *merged.entry(label.clone()).or_insert(0) += count;
                    }
                    product.insert(Factorization::new(merged));
                }
            }
            if product != zs {
                c_failures.push(format!(
                    "element {v}: factorization set is not the ideal-power product structure"
                ));
            }
            (b_failures, c_failures)
        })
        .collect();

    let mut property_b = CheckSummary {
        checked: elements.len() as u64,
        failures: Vec::new(),
    };
    let mut property_c = CheckSummary {
        checked: elements.len() as u64,
        failures: Vec::new(),
    };
    for (bf, cf) in per_element {
        property_b.failures.extend(bf);
        property_c.failures.extend(cf);
    }
    if !counts_ok {
        property_c
            .failures
            .push("ideal power factorization counts differ from the composition count".to_string());
    }

    let radius = opts.box_radius.unwrap_or(match p.dim() {
        0..=6 => 2,
        7..=9 => 1,
        _ => 0,
    });
    let box_checked = (2 * radius as u64 + 1).pow(p.dim() as u32);
    let root_failures: Vec<String> = p
        .root_closure_violations(radius, opts.max_root)
        .into_iter()
        .map(|(v, m)| format!("{}-th power of {v} is an element but {v} is not", m))
        .collect();
    let root_closure = RootClosureSummary {
        box_radius: radius,
        max_root: opts.max_root,
        checked: box_checked,
        failures: root_failures,
    };

    let superadditivity = check_superadditivity(p, &elements, opts);

    let passed = property_a
        && property_b.ok()
        && property_c.ok()
        && root_closure.failures.is_empty()
        && superadditivity.ok();
    VerifyReport {
        bound: bound.to_string(),
        property_a: if property_a { "pass" } else { "fail" }.to_string(),
        property_b,
        property_c,
        ideal_factorization_counts: ideal_counts,
        root_closure,
        superadditivity,
        passed,
    }
}

/// `L(u) + L(v)` must be contained in `L(u v)`; checked on all pairs when
/// affordable, otherwise on a seeded sample.
fn check_superadditivity(
    p: &MonoidPresentation,
    elements: &[MonoidElement],
    opts: &VerifyOptions,
) -> CheckSummary {
    let total_pairs = elements.len().saturating_mul(elements.len());
    let pairs: Vec<(usize, usize)> = if total_pairs <= opts.max_sampled_pairs {
        (0..elements.len())
            .flat_map(|i| (0..elements.len()).map(move |j| (i, j)))
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        (0..opts.max_sampled_pairs)
            .map(|_| {
                (
                    rng.random_range(0..elements.len()),
                    rng.random_range(0..elements.len()),
                )
            })
            .collect()
    };
    let failures: Vec<String> = pairs
        .par_iter()
        .filter_map(|&(i, j)| {
            let u = &elements[i];
            let v = &elements[j];
            let lu = p.lengths(u).ok()?;
            let lv = p.lengths(v).ok()?;
            let lsum = p.lengths(&u.add(v)).ok()?;
            let sum = lu.sumset(&lv);
            let missing = sum.iter().any(|l| !lsum.contains(l));
            missing.then(|| format!("L({u}) + L({v}) not contained in L of the product"))
        })
        .collect();
    CheckSummary {
        checked: pairs.len() as u64,
        failures,
    }
}

/// Report for the coproduct composition checks.
#[derive(Debug, Clone, Serialize)]
pub struct CompositionReport {
    pub bound: String,
    pub observed_sets: u64,
    pub system_matches: bool,
    pub only_observed: Vec<SetOfLengths>,
    pub only_predicted: Vec<SetOfLengths>,
    pub closure_checked: u64,
    pub closure_violations: Vec<String>,
    pub passed: bool,
}

/// Checks that the coproduct's observed system on the slice equals the
/// family truncated to what the slice can reach, and that sumsets of
/// observed sets stay inside the family (and inside the slice whenever they
/// are cheap enough to appear there).
pub fn verify_composition(rf: &RealizedFamily, bound: Weight) -> CompositionReport {
    let p = rf.presentation();
    let observed = rf.system_of_lengths(bound);

    let max_len = (bound / p.min_atom_grading())
        .floor()
        .to_integer()
        .to_u64()
        .unwrap_or(0);
    let predicted: BTreeSet<SetOfLengths> = rf
        .family()
        .enumerate(max_len)
        .into_iter()
        .filter(|l| rf.min_realization_cost(l).is_some_and(|c| c <= bound))
        .collect();

    let only_observed: Vec<SetOfLengths> =
        observed.difference(&predicted).cloned().collect();
    let only_predicted: Vec<SetOfLengths> =
        predicted.difference(&observed).cloned().collect();
    let system_matches = only_observed.is_empty() && only_predicted.is_empty();

    let mut closure_checked = 0u64;
    let mut closure_violations = Vec::new();
    let observed_vec: Vec<&SetOfLengths> = observed.iter().collect();
    for (i, l1) in observed_vec.iter().enumerate() {
        for l2 in &observed_vec[i..] {
            closure_checked += 1;
            let s = l1.sumset(l2);
            let reachable = rf.min_realization_cost(&s).is_some_and(|c| c <= bound);
            if reachable && !observed.contains(&s) {
                closure_violations.push(format!(
                    "{l1} + {l2} = {s} is slice-reachable but unobserved"
                ));
            }
            if rf.family().contains(&s).is_none() {
                closure_violations
                    .push(format!("{l1} + {l2} = {s} is not a family member"));
            }
        }
    }

    let passed = system_matches && closure_violations.is_empty();
    CompositionReport {
        bound: bound.to_string(),
        observed_sets: observed.len() as u64,
        system_matches,
        only_observed,
        only_predicted,
        closure_checked,
        closure_violations,
        passed,
    }
}
