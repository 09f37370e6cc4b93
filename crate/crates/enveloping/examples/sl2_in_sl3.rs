//! Commutant of a general (non-nilradical) chain: the regular sl(2,C) inside
//! sl(3,C) spanned by H1, E12, E21.
//!
//! Run with: cargo run --release --example sl2_in_sl3

use enveloping::commutant::chain_commutant;
use enveloping::fixtures::{build_generator_set, load_generator_fixture, SL2SL3_FIXTURE};
use enveloping::rootsys::Weight;
use enveloping::suites::sl2sl3_suite;

fn main() -> enveloping::Result<()> {
    let fx = load_generator_fixture(SL2SL3_FIXTURE)?;
    let (alg, gs) = build_generator_set(&fx)?;
    let subs: Vec<usize> = fx
        .subalgebra
        .iter()
        .map(|l| alg.sc.index_of(l).unwrap())
        .collect();

    println!("commutant generators of sl2 = <H1, E12, E21> in U(sl3):");
    for g in &gs.generators {
        println!("  {}: degree {} weight {}", g.name, g.degree, g.weight);
    }

    // the weight-(0,-3) block contains P4 (the paper prints the weight as (0,3))
    let block = chain_commutant(&alg, &subs, 3, &Weight(vec![0, -3]))?;
    println!("\nblock (deg <= 3, weight (0,-3)): dim {}", block.dim());
    println!("contains P4: {}", block.contains(&gs.get("P4").unwrap().element));

    println!("\nfull suite:");
    print!("{}", sl2sl3_suite()?.render());
    Ok(())
}
