//! The commutant of the nilradical of so(5,C): P1..P5 and the two Casimir
//! operators, the exponent ambiguity in P2 resolved by the commutation oracle,
//! and the corrected dependence relation.
//!
//! Run with: cargo run --release --example b2_commutant

use enveloping::fixtures::{build_generator_set, load_generator_fixture, B2_FIXTURE};
use enveloping::parse::parse_element;
use enveloping::suites::b2_suite;
use enveloping::uea::Element;

fn main() -> enveloping::Result<()> {
    let fx = load_generator_fixture(B2_FIXTURE)?;
    let (alg, gs) = build_generator_set(&fx)?;

    // the oracle run for the P2 exponent: E3^2 commutes, E3^3 does not
    let e1 = alg.sc.index_of("E1").unwrap();
    for (label, expr) in [("E3^2", "E2 E4 - 1/2 E3^2"), ("E3^3", "E2 E4 - 1/2 E3^3")] {
        let cand = parse_element(&alg, expr)?;
        let resid = Element::generator(&alg, e1).commutator(&cand)?;
        println!("P2 with {label}: [E1, .] {}", if resid.is_zero() { "= 0" } else { "nonzero" });
    }

    println!("\nP2 as stored: {}", gs.get("P2").unwrap().element);
    println!("\nfull suite:");
    print!("{}", b2_suite()?.render());
    Ok(())
}
