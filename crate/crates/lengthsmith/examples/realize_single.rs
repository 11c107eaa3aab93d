//! Build the explicit monoid whose system of sets of lengths is
//! {{0},{1}} plus all shifts y + nL of iterated sumsets of a target L.
//!
//! Run with: cargo run --example realize_single

use lengthsmith::monoid::Weight;
use lengthsmith::realization::realize_single;
use lengthsmith::SetOfLengths;

fn main() {
    let target = SetOfLengths::new([2, 3]).unwrap();
    let realized = realize_single(&target).unwrap();
    let p = realized.presentation();

    println!("target set   : {target}");
    println!("dimension    : {}", p.dim());
    println!("atoms        :");
    for atom in p.atoms() {
        println!("  {:6} -> {:?}  (weight {})", atom.label, atom.vector, {
            let v = lengthsmith::MonoidElement::new(atom.vector.clone());
            p.weight(&v)
        });
    }
    println!("grading      : {:?}", p.grading().iter().map(Weight::to_string).collect::<Vec<_>>());
    println!("ideal element: {}", realized.ideal_generator());

    // the two defining relations: both atom rows multiply to the ideal
    let ideal = realized.ideal_generator();
    println!("\nfactorizations of the ideal element {ideal}:");
    for z in p.factorizations(ideal).unwrap() {
        println!("  {:?}  (length {})", z.multiplicities(), z.length());
    }

    // its system of sets of lengths, over the slice of grading <= 3
    println!("\nsystem of sets of lengths on the bound-3 slice:");
    for l in realized.system_of_lengths(Weight::from_integer(3)) {
        println!("  {l}");
    }

    // persisting and reloading the presentation is loss-free
    let file = p.to_file();
    let json = serde_json::to_string(&file).unwrap();
    println!("\nmonoid file: {json}");
}
