//! Compare systems of sets of lengths across independently built monoids,
//! and extract the indecomposable length sets of a slice.
//!
//! Run with: cargo run --example system_comparison

use lengthsmith::families::FamilyPresentation;
use lengthsmith::invariants::{compare_systems, irreducible_length_sets, SystemSlice};
use lengthsmith::monoid::Weight;
use lengthsmith::realization::{realize_family, realize_single};
use lengthsmith::zerosum::GroupSpec;
use lengthsmith::SetOfLengths;

fn sol(elems: &[u64]) -> SetOfLengths {
    SetOfLengths::new(elems.iter().copied()).unwrap()
}

fn main() {
    // two half-factorial monoids built by entirely different machinery
    let free = realize_family(&FamilyPresentation::empty());
    let free_slice = SystemSlice::from_monoid(free.presentation(), Weight::from_integer(6));
    let c2 = GroupSpec::new(vec![2], vec![vec![0], vec![1]]).unwrap();
    let c2_slice = SystemSlice::from_zero_sum(&c2, 6);
    let report = compare_systems(&free_slice, &c2_slice);
    println!(
        "free monoid vs Z/2 sequences: agree = {} (trimmed to max length {})",
        report.agree, report.trim_max_length
    );

    // the {2,3} realization against Z/3 sequences: the systems coincide in
    // full, but the sequence-length slice at bound 6 cannot reach {3}, so
    // the trimmed slice comparison reports the truncation
    let r = realize_single(&sol(&[2, 3])).unwrap();
    let a = SystemSlice::from_monoid(r.presentation(), Weight::from_integer(3));
    let c3 = GroupSpec::new(vec![3], vec![vec![1], vec![2]]).unwrap();
    let b = SystemSlice::from_zero_sum(&c3, 6);
    let report = compare_systems(&a, &b);
    println!(
        "\n{{2,3}} realization vs Z/3 sequences at desk bounds: agree = {}",
        report.agree
    );
    println!("  only in the realization slice: {:?}", report.only_in_a);
    println!("  only in the sequence slice   : {:?}", report.only_in_b);

    // widening the sequence bound brings {3} in (shortest witness has
    // length 7), though {4} still needs a length-10 sequence
    let b_wide = SystemSlice::from_zero_sum(&c3, 8);
    let wide = compare_systems(&a, &b_wide);
    println!(
        "  sequence bound 8: still only in the realization slice: {:?}",
        wide.only_in_a
    );

    // indecomposable length sets of a coproduct slice
    let family = FamilyPresentation::new(vec![sol(&[2, 3]), sol(&[2, 5])]).unwrap();
    let rf = realize_family(&family);
    let slice = SystemSlice::from_monoid(rf.presentation(), Weight::from_integer(3));
    let gens = irreducible_length_sets(&slice);
    println!(
        "\nindecomposable sets of the coproduct slice: {:?} (generate the slice: {})",
        gens.generators
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>(),
        gens.generated
    );
}
