//! Exhaustive verification of a realized monoid's structural properties:
//! equal atom-row products, unique factorization off the ideal, the length
//! formula with its product structure, root closure, and superadditivity.
//!
//! Run with: cargo run --example verify_construction

use lengthsmith::monoid::Weight;
use lengthsmith::realization::{realize_single, verify_properties, VerifyOptions};
use lengthsmith::SetOfLengths;

fn main() {
    let target = SetOfLengths::new([2, 5]).unwrap();
    let realized = realize_single(&target).unwrap();

    let report = verify_properties(&realized, Weight::from_integer(3), &VerifyOptions::default());

    println!("target {target}, slice bound 3");
    println!("row products equal      : {}", report.property_a);
    println!(
        "unique off the ideal    : {} elements checked, {} failures",
        report.property_b.checked,
        report.property_b.failures.len()
    );
    println!(
        "length formula          : {} elements checked, {} failures",
        report.property_c.checked,
        report.property_c.failures.len()
    );
    for c in &report.ideal_factorization_counts {
        println!(
            "ideal power {}: {} factorizations (expected {})",
            c.power, c.count, c.expected
        );
    }
    println!(
        "root closure            : box radius {}, {} vectors, {} failures",
        report.root_closure.box_radius,
        report.root_closure.checked,
        report.root_closure.failures.len()
    );
    println!(
        "superadditivity         : {} pairs, {} failures",
        report.superadditivity.checked,
        report.superadditivity.failures.len()
    );
    println!("overall                 : {}", if report.passed() { "pass" } else { "fail" });

    println!("\nfull report as JSON:");
    println!(
        "{}",
        serde_json::to_string_pretty(&serde_json::to_value(&report).unwrap()).unwrap()
    );
}
