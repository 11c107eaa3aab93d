//! Zero-sum sequences over finite abelian groups: minimal atoms, sets of
//! lengths, and truncated systems.
//!
//! Run with: cargo run --example zero_sum_sequences

use lengthsmith::zerosum::{minimal_atoms, zs_lengths, zs_system, GroupSpec, ZeroSumSequence};

fn main() {
    // Z/3 with support {1, 2}
    let c3 = GroupSpec::new(vec![3], vec![vec![1], vec![2]]).unwrap();
    println!("minimal zero-sum sequences over Z/3, support {{1,2}}:");
    for atom in minimal_atoms(&c3) {
        println!("  {}  (length {})", serde_json::to_string(&atom).unwrap(), atom.length());
    }

    // 1^3 2^3 factors as (111)(222) and as (12)(12)(12)
    let seq = ZeroSumSequence::new(
        &c3,
        [(vec![1], 3u64), (vec![2], 3u64)].into_iter().collect(),
    )
    .unwrap();
    println!("\nL(1^3 2^3) = {}", zs_lengths(&c3, &seq).unwrap());

    println!("\nsystem over Z/3 up to sequence length 6:");
    for l in zs_system(&c3, 6) {
        println!("  {l}");
    }

    // Z/2 is half-factorial: every set of lengths is a singleton
    let c2 = GroupSpec::new(vec![2], vec![vec![0], vec![1]]).unwrap();
    let system = zs_system(&c2, 8);
    println!(
        "\nZ/2 system up to length 8 is all singletons: {}",
        system.iter().all(|l| l.is_singleton())
    );

    // the Klein four group: three squares and one triple
    let klein = GroupSpec::new(vec![2, 2], vec![vec![0, 1], vec![1, 0], vec![1, 1]]).unwrap();
    println!("\nminimal atoms over (Z/2)^2, all nonzero elements:");
    for atom in minimal_atoms(&klein) {
        println!("  {}", serde_json::to_string(&atom).unwrap());
    }
}
