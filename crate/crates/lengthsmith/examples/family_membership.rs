//! Additively closed families: enumeration, membership certificates,
//! decompositions and indecomposable members.
//!
//! Run with: cargo run --example family_membership

use lengthsmith::families::FamilyPresentation;
use lengthsmith::SetOfLengths;

fn sol(elems: &[u64]) -> SetOfLengths {
    SetOfLengths::new(elems.iter().copied()).unwrap()
}

fn main() {
    let family = FamilyPresentation::new(vec![sol(&[2, 3]), sol(&[2, 5])]).unwrap();
    println!("generators: {:?}", family.generators());

    println!("\nmembers with max <= 7:");
    for member in family.enumerate(7) {
        println!("  {member}");
    }

    // membership comes with a witness: {y} + n1*{2,3} + n2*{2,5}
    for candidate in [sol(&[5, 6, 7]), sol(&[4, 5, 7, 8]), sol(&[2, 4])] {
        match family.contains(&candidate) {
            Some(w) => println!(
                "\n{candidate} = {{{}}} + {:?} applied to the generators",
                w.shift, w.multiplicities
            ),
            None => println!("\n{candidate} is not a member (exhaustive search)"),
        }
    }

    // all two-part decompositions of a member
    let target = sol(&[4, 5, 6]);
    println!("\ndecompositions of {target}:");
    for (l1, l2) in family.decompositions(&target).unwrap() {
        println!("  {l1} + {l2}");
    }

    for candidate in [sol(&[1]), sol(&[2, 3]), sol(&[4, 5, 6]), sol(&[7])] {
        println!(
            "{candidate} indecomposable? {}",
            family.is_indecomposable(&candidate).unwrap()
        );
    }

    // singleton generators above {1} are rejected: {4} = {1} + {3}
    let rejected = FamilyPresentation::new(vec![sol(&[4])]);
    println!("\noffering {{4}} as a generator: {rejected:?}");
}
