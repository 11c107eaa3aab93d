//! Complete factorization sets: membership certificates, exhaustive
//! enumeration, and the combinatorics of ideal powers.
//!
//! Run with: cargo run --example factorization_search

use lengthsmith::monoid::{MonoidElement, Weight};
use lengthsmith::realization::realize_single;
use lengthsmith::SetOfLengths;

fn main() {
    let target = SetOfLengths::new([2, 3]).unwrap();
    let realized = realize_single(&target).unwrap();
    let p = realized.presentation();
    let g = realized.ideal_generator();

    // membership of raw vectors, including negative coordinates
    for v in [
        MonoidElement::new(vec![1, 1, 0, 0]),
        MonoidElement::new(vec![1, 1, -1, -1]),
        MonoidElement::new(vec![0, 0, -1, 0]),
    ] {
        println!("{v} in H? {}", p.is_element(&v));
    }

    // powers of the ideal element have one factorization per way of
    // splitting the exponent across the two relation rows
    println!("\nfactorization counts of ideal powers:");
    for n in 0..=4i64 {
        let power = g.scaled(n);
        let zs = p.factorizations(&power).unwrap();
        println!(
            "  n = {n}: {} factorizations, lengths {}",
            zs.len(),
            p.lengths(&power).unwrap()
        );
    }

    // a mixed element: ideal power times an off-ideal part
    let extra = MonoidElement::new(p.atom_by_label("u2,1").unwrap().vector.clone());
    let v = g.scaled(2).add(&extra);
    println!("\nelement {v}:");
    for z in p.factorizations(&v).unwrap() {
        println!("  {:?}", z.multiplicities());
    }
    println!("lengths: {}", p.lengths(&v).unwrap());

    // every factorization reassembles to its element
    let slice = p.enumerate_elements(Weight::from_integer(2));
    println!("\nslice of grading <= 2 has {} elements", slice.len());
    for v in &slice {
        for z in p.factorizations(v).unwrap() {
            assert_eq!(&p.element_of(&z).unwrap(), v);
        }
    }
    println!("all factorizations reassemble exactly");
}
