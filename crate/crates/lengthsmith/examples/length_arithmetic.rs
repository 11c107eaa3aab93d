//! Arithmetic on finite sets of lengths: sumsets, iterated sumsets,
//! dilations, and distance sets.
//!
//! Run with: cargo run --example length_arithmetic

use lengthsmith::SetOfLengths;

fn main() {
    let a = SetOfLengths::new([2, 3]).unwrap();
    let b = SetOfLengths::new([2, 5]).unwrap();

    println!("a           = {a}");
    println!("b           = {b}");
    println!("a + b       = {}", a.sumset(&b));
    println!("a + a       = {}", a.sumset(&a));

    // iterated sumsets grow linearly in size for a two-element set
    for n in 0..=4 {
        let nfold = a.n_fold_sumset(n);
        println!("{n}a          = {nfold}  (size {})", nfold.len());
    }

    // dilation scales elements; it is not the iterated sumset
    println!("3 . a       = {}", a.dilate(3));
    println!("3a          = {}", a.n_fold_sumset(3));

    // distance sets: gaps between consecutive lengths
    let c = SetOfLengths::new([2, 5, 7]).unwrap();
    println!("delta({a}) = {:?}", a.delta_set());
    println!("delta({c}) = {:?}", c.delta_set());
    println!(
        "delta of a singleton is empty: {:?}",
        SetOfLengths::singleton(5).delta_set()
    );

    // the interval structure of iterated sumsets of {2,3}
    let tenfold = a.n_fold_sumset(10);
    println!(
        "10a         = [{}, {}] as an interval: delta = {:?}",
        tenfold.min_len(),
        tenfold.max_len(),
        tenfold.delta_set()
    );
}
