//! Distances between factorizations, catenary degrees, and distance sets.
//!
//! Run with: cargo run --example catenary_and_delta

use lengthsmith::invariants::{catenary_bounded, catenary_element, delta_bounded, distance};
use lengthsmith::monoid::Weight;
use lengthsmith::realization::realize_single;
use lengthsmith::SetOfLengths;

fn main() {
    let target = SetOfLengths::new([2, 3]).unwrap();
    let realized = realize_single(&target).unwrap();
    let p = realized.presentation();
    let g = realized.ideal_generator();

    // the two factorizations of the ideal element have disjoint supports,
    // so their distance is the larger length
    let zs = p.factorizations(g).unwrap();
    println!(
        "d({:?}, {:?}) = {}",
        zs[0].multiplicities(),
        zs[1].multiplicities(),
        distance(&zs[0], &zs[1])
    );

    // catenary degree of elements: 0 for unique factorization, and the
    // maximum of the target set once the relation fires
    for n in 0..=3i64 {
        let v = g.scaled(n);
        println!("catenary(ideal^{n}) = {}", catenary_element(p, &v).unwrap());
    }

    // bounded invariants over whole slices
    for elems in [vec![2u64], vec![2, 3], vec![2, 5], vec![3, 5, 7]] {
        let l = SetOfLengths::new(elems).unwrap();
        let r = realize_single(&l).unwrap();
        let c = catenary_bounded(r.presentation(), Weight::from_integer(3));
        let d = delta_bounded(r.presentation(), Weight::from_integer(3));
        println!("target {l}: catenary degree {c}, distance set {d:?}");
    }

    // whenever a length set has a gap, the catenary degree of the element
    // exceeds it by at least 2
    let r = realize_single(&SetOfLengths::new([2, 5]).unwrap()).unwrap();
    let p = r.presentation();
    let v = r.ideal_generator().scaled(1);
    let lengths = p.lengths(&v).unwrap();
    let gap = *lengths.delta_set().iter().max().unwrap();
    println!(
        "L({v}) = {lengths}: max gap {gap}, catenary {} >= {}",
        catenary_element(p, &v).unwrap(),
        2 + gap
    );
}
