//! Acceptance suite: one test per criterion, each printing a PASS line.
//!
//! Expected values are computed by independent oracles (closed-form system
//! truncation, meet-in-the-middle factorization join, simplex counts) and
//! compared exactly against the library's exhaustive searches.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use common::{mitm_factorizations, sol};
use lengthsmith::families::FamilyPresentation;
use lengthsmith::invariants::{catenary_bounded, catenary_element, irreducible_length_sets, SystemSlice};
use lengthsmith::lengthsets::SetOfLengths;
use lengthsmith::monoid::{MonoidElement, Weight};
use lengthsmith::realization::{realize_family, realize_single, system_of_lengths};
use lengthsmith::zerosum::{minimal_atoms, zs_lengths, zs_system, GroupSpec, ZeroSumSequence};

fn corpus() -> Vec<SetOfLengths> {
    vec![
        sol(&[2]),
        sol(&[2, 3]),
        sol(&[2, 5]),
        sol(&[3, 4]),
        sol(&[2, 3, 4]),
        sol(&[3, 5, 7]),
    ]
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Cheapest atom weight of the canonical construction, from the target set
/// alone: `(k_1 - 1)/(k_r - 1)` when `r >= 2`, otherwise `1`.
fn cheapest_atom(l: &SetOfLengths) -> Weight {
    if l.len() == 1 {
        Weight::from_integer(1)
    } else {
        Weight::new(l.min_len() as i64 - 1, l.max_len() as i64 - 1)
    }
}

/// Closed-form truncation oracle: the sets `y + nL` whose cheapest witness
/// element (n relation products plus y copies of the cheapest atom) fits
/// under the grading bound.
fn predicted_system(l: &SetOfLengths, bound: i64) -> BTreeSet<SetOfLengths> {
    let bound = Weight::from_integer(bound);
    let k1 = Weight::from_integer(l.min_len() as i64);
    let c_min = cheapest_atom(l);
    let mut out = BTreeSet::new();
    let mut n = 0u64;
    loop {
        let base_cost = Weight::from_integer(n as i64) * k1;
        if base_cost > bound {
            break;
        }
        let base = l.n_fold_sumset(n);
        let mut y = 0u64;
        loop {
            let cost = base_cost + Weight::from_integer(y as i64) * c_min;
            if cost > bound {
                break;
            }
            out.insert(base.shift(y));
            y += 1;
        }
        n += 1;
    }
    out
}

#[test]
fn criterion_01_realization_row_products() {
    let start = Instant::now();
    for l in corpus() {
        let r = realize_single(&l).unwrap();
        let p = r.presentation();
        let row_sum = |i: u32| {
            let mut sum = MonoidElement::zero(p.dim());
            let mut j = 1;
            while let Some(label) = r.atom_label(i, j) {
                sum = sum.add(&MonoidElement::new(
                    p.atom_by_label(label).unwrap().vector.clone(),
                ));
                j += 1;
            }
            sum
        };
        let first = row_sum(1);
        for i in 2..=l.len() as u32 {
            assert_eq!(row_sum(i), first, "row {i} of {l}");
        }
        assert_eq!(&first, r.ideal_generator());
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!("criterion 01 (realization row products, < 1 s): PASS");
}

#[test]
fn criterion_02_unique_factorization_off_ideal() {
    for l in corpus() {
        let start = Instant::now();
        let r = realize_single(&l).unwrap();
        let p = r.presentation();
        let g = r.ideal_generator();
        for v in p.enumerate_elements(Weight::from_integer(3)) {
            if !p.is_element(&v.sub(g)) {
                let count = p.factorizations(&v).unwrap().len();
                assert_eq!(count, 1, "off-ideal element {v} of {l} has {count} factorizations");
            }
        }
        let elapsed = start.elapsed();
        assert!(elapsed.as_secs_f64() < 30.0, "{l} took {elapsed:?}");
    }
    println!("criterion 02 (unique factorization off the ideal, slice bound 3): PASS");
}

#[test]
fn criterion_03_length_formula_and_ideal_counts() {
    for l in corpus() {
        let r = realize_single(&l).unwrap();
        let p = r.presentation();
        let g = r.ideal_generator();
        let rank = l.len() as u64;
        for v in p.enumerate_elements(Weight::from_integer(3)) {
            let mut n = 0u64;
            while p.is_element(&v.sub(&g.scaled(n as i64 + 1))) {
                n += 1;
            }
            let b = v.sub(&g.scaled(n as i64));
            let expected = l.n_fold_sumset(n).sumset(&p.lengths(&b).unwrap());
            assert_eq!(p.lengths(&v).unwrap(), expected, "element {v} of {l}");
        }
        for n in 0..=3u64 {
            let count = p.factorizations(&g.scaled(n as i64)).unwrap().len() as u64;
            assert_eq!(
                count,
                binomial(n + rank - 1, rank - 1),
                "ideal power {n} of {l}"
            );
        }
    }
    println!("criterion 03 (length formula and ideal factorization counts): PASS");
}

#[test]
fn criterion_04_catenary_degree() {
    for l in corpus() {
        let r = realize_single(&l).unwrap();
        let expected = if l.len() >= 2 { l.max_len() } else { 0 };
        assert_eq!(
            catenary_bounded(r.presentation(), Weight::from_integer(3)),
            expected,
            "catenary of {l}"
        );
    }
    println!("criterion 04 (catenary degree equals max of the target set): PASS");
}

#[test]
fn criterion_05_system_shape() {
    for l in corpus() {
        let r = realize_single(&l).unwrap();
        let observed = system_of_lengths(r.presentation(), Weight::from_integer(3));
        let predicted = predicted_system(&l, 3);
        assert_eq!(observed, predicted, "system of {l} at bound 3");
    }
    println!("criterion 05 (observed system equals the truncated prediction): PASS");
}

#[test]
fn criterion_06_coproduct_composition() {
    let family = FamilyPresentation::new(vec![sol(&[2, 3]), sol(&[2, 5])]).unwrap();
    let rf = realize_family(&family);
    let bound = Weight::from_integer(2);
    let observed = rf.system_of_lengths(bound);

    // expected side, from family data alone: cheapest atom is
    // min_i (k1_i - 1)/(k_i,max - 1), a generator application costs k1_i
    let c_min: Weight = family.generators().iter().map(cheapest_atom).min().unwrap();
    let ideal_costs: Vec<Weight> = family
        .generators()
        .iter()
        .map(|g| Weight::from_integer(g.min_len() as i64))
        .collect();
    let min_cost = |l: &SetOfLengths| -> Option<Weight> {
        family
            .witnesses(l)
            .into_iter()
            .map(|w| {
                let mut cost = Weight::from_integer(w.shift as i64) * c_min;
                for (n, c) in w.multiplicities.iter().zip(&ideal_costs) {
                    cost += Weight::from_integer(*n as i64) * *c;
                }
                cost
            })
            .min()
    };
    let max_len = 8; // bound / c_min = 2 / (1/4)
    let expected: BTreeSet<SetOfLengths> = family
        .enumerate(max_len)
        .into_iter()
        .filter(|l| min_cost(l).is_some_and(|c| c <= bound))
        .collect();
    assert_eq!(observed, expected, "coproduct system at bound 2");

    // sumset closure on observed sets, zero violations
    for l1 in &observed {
        for l2 in &observed {
            let s = l1.sumset(l2);
            assert!(family.contains(&s).is_some(), "{l1} + {l2} leaves the family");
            if min_cost(&s).is_some_and(|c| c <= bound) {
                assert!(observed.contains(&s), "{l1} + {l2} reachable but unobserved");
            }
        }
    }
    println!("criterion 06 (coproduct system equals the family truncation): PASS");
}

#[test]
fn criterion_07_root_closure_box() {
    let start = Instant::now();
    for l in [sol(&[2, 3]), sol(&[2, 5])] {
        let r = realize_single(&l).unwrap();
        let violations = r.presentation().root_closure_violations(2, 3);
        assert!(violations.is_empty(), "root closure fails for {l}: {violations:?}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}");
    println!("criterion 07 (root closure on the [-2,2] box, roots 2 and 3): PASS");
}

#[test]
fn criterion_08_zero_sum_cross_checks() {
    let c2 = GroupSpec::new(vec![2], vec![vec![0], vec![1]]).unwrap();
    for l in zs_system(&c2, 8) {
        assert!(l.is_singleton(), "non-singleton {l} over the two-element group");
    }

    let c3 = GroupSpec::new(vec![3], vec![vec![1], vec![2]]).unwrap();
    let seq = ZeroSumSequence::new(
        &c3,
        [(vec![1], 3u64), (vec![2], 3u64)].into_iter().collect(),
    )
    .unwrap();
    assert_eq!(zs_lengths(&c3, &seq).unwrap(), sol(&[2, 3]));
    assert_eq!(minimal_atoms(&c3).len(), 3);
    println!("criterion 08 (zero-sum cross-checks): PASS");
}

#[test]
fn criterion_09_elementwise_distance_inequality() {
    for l in corpus() {
        let r = realize_single(&l).unwrap();
        let p = r.presentation();
        for v in p.enumerate_elements(Weight::from_integer(3)) {
            let lengths = p.lengths(&v).unwrap();
            if let Some(&gap) = lengths.delta_set().iter().max() {
                let c = catenary_element(p, &v).unwrap();
                assert!(
                    c >= 2 + gap,
                    "element {v} of {l}: catenary {c} < 2 + {gap}"
                );
            }
        }
    }
    println!("criterion 09 (catenary >= 2 + max gap, elementwise): PASS");
}

#[test]
fn criterion_10_irreducible_length_sets() {
    let family = FamilyPresentation::new(vec![sol(&[2, 3]), sol(&[2, 5])]).unwrap();
    let rf = realize_family(&family);
    let slice = SystemSlice::from_monoid(rf.presentation(), Weight::from_integer(3));
    let report = irreducible_length_sets(&slice);
    assert_eq!(
        report.generators,
        vec![sol(&[1]), sol(&[2, 3]), sol(&[2, 5])]
    );
    assert!(report.generated, "undecomposed: {:?}", report.undecomposed);
    println!("criterion 10 (indecomposable length sets generate the slice): PASS");
}

#[test]
fn criterion_11_oracle_equivalence() {
    for l in corpus() {
        let r = realize_single(&l).unwrap();
        let p = r.presentation();
        for v in p.enumerate_elements(Weight::from_integer(2)) {
            let expected = mitm_factorizations(p, &v);
            let got: BTreeSet<_> = p
                .factorizations(&v)
                .unwrap()
                .into_iter()
                .map(|z| z.multiplicities().clone())
                .collect();
            assert_eq!(got, expected, "factorizations of {v} in {l}");
        }
    }
    println!("criterion 11 (search agrees with the meet-in-the-middle oracle): PASS");
}
