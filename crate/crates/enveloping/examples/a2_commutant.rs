//! The commutant of the nilradical of sl(3,C): the six generators, their
//! commutators and the dependence relation, all verified exactly.
//!
//! Run with: cargo run --release --example a2_commutant

use enveloping::commutant::solve_block;
use enveloping::fixtures::{build_generator_set, load_generator_fixture, A2_FIXTURE};
use enveloping::rootsys::Weight;
use enveloping::suites::a2_suite;

fn main() -> enveloping::Result<()> {
    let fx = load_generator_fixture(A2_FIXTURE)?;
    let (alg, gs) = build_generator_set(&fx)?;
    println!("generators of the commutant of n = <E12, E23> in U(sl3):");
    for g in &gs.generators {
        println!("  {}: degree {} weight {} ({} terms)", g.name, g.degree, g.weight, g.element.len());
    }

    // solve the degree-3 weight-(3,0) block from scratch; it contains C1
    let simple = alg.sc.simple_root_indices.clone();
    let block = solve_block(&alg, &simple, 3, &Weight(vec![3, 0]))?;
    println!("\nblock (deg <= 3, weight (3,0)): dimension {}", block.dim());
    for b in &block.basis {
        println!("  {b}");
    }
    println!("contains the printed C1: {}", block.contains(&gs.get("C1").unwrap().element));

    println!("\nfull suite:");
    print!("{}", a2_suite()?.render());
    Ok(())
}
