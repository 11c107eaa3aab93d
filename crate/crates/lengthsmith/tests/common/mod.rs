//! Shared test oracles, independent of the library's search machinery.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use lengthsmith::monoid::{Atom, MonoidElement, MonoidPresentation, Weight};
use lengthsmith::SetOfLengths;

pub fn sol(elems: &[u64]) -> SetOfLengths {
    SetOfLengths::new(elems.iter().copied()).unwrap()
}

pub fn atom_weight(p: &MonoidPresentation, atom: &Atom) -> Weight {
    p.weight(&MonoidElement::new(atom.vector.clone()))
}

type Combo = (Vec<i64>, BTreeMap<String, u64>);

/// All non-negative multisets over `atoms` with total weight at most
/// `budget`, with their vector sums.
fn combos(p: &MonoidPresentation, atoms: &[Atom], budget: Weight) -> Vec<Combo> {
    let mut out: Vec<Combo> = Vec::new();
    let dim = p.dim();
    fn rec(
        p: &MonoidPresentation,
        atoms: &[Atom],
        idx: usize,
        acc: &mut Vec<i64>,
        used: &mut BTreeMap<String, u64>,
        budget: Weight,
        out: &mut Vec<Combo>,
    ) {
        if idx == atoms.len() {
            out.push((acc.clone(), used.clone()));
            return;
        }
        let w = atom_weight(p, &atoms[idx]);
        let mut t = 0u64;
        loop {
            let cost = Weight::from_integer(t as i64) * w;
            if cost > budget {
                break;
            }
            if t > 0 {
                used.insert(atoms[idx].label.clone(), t);
            }
            for (a, &c) in acc.iter_mut().zip(&atoms[idx].vector) {
                *a += c * t as i64;
            }
            rec(p, atoms, idx + 1, acc, used, budget - cost, out);
            for (a, &c) in acc.iter_mut().zip(&atoms[idx].vector) {
                *a -= c * t as i64;
            }
            used.remove(&atoms[idx].label);
            t += 1;
        }
    }
    let mut acc = vec![0i64; dim];
    let mut used = BTreeMap::new();
    rec(p, atoms, 0, &mut acc, &mut used, budget, &mut out);
    out
}

/// Meet-in-the-middle factorization oracle: split the atom list in half,
/// enumerate all weight-bounded multisets of each half, and join the halves
/// on their vector sums. Entirely independent of the library's pruned
/// depth-first search.
pub fn mitm_factorizations(
    p: &MonoidPresentation,
    v: &MonoidElement,
) -> BTreeSet<BTreeMap<String, u64>> {
    let budget = p.weight(v);
    let mut out = BTreeSet::new();
    if budget < Weight::from_integer(0) {
        return out;
    }
    let atoms = p.atoms();
    let split = atoms.len() / 2;
    let left = combos(p, &atoms[..split], budget);
    let right = combos(p, &atoms[split..], budget);
    let mut by_sum: HashMap<Vec<i64>, Vec<&BTreeMap<String, u64>>> = HashMap::new();
    for (sum, used) in &left {
        by_sum.entry(sum.clone()).or_default().push(used);
    }
    for (sum, used) in &right {
        let need: Vec<i64> = v.vector().iter().zip(sum).map(|(a, b)| a - b).collect();
        if let Some(matches) = by_sum.get(&need) {
            for l in matches {
                let mut joined = (*l).clone();
                for (label, &n) in used {
                    *joined.entry(label.clone()).or_insert(0) += n;
                }
                out.insert(joined);
            }
        }
    }
    out
}
