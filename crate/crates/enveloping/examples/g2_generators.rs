//! The seventeen commutant generators of the G2 nilradical: the printed seven,
//! the derivation chain for the remaining ten (commutators and exact left
//! division), and the abelian subalgebra {Q1..Q5, C6}.
//!
//! The heavy steps (the degree-6 centralizer for C6, the degree-8 block for
//! Q15) are cached under fixtures/cache; the first run computes them.
//!
//! Run with: cargo run --release --example g2_generators

use enveloping::scalar::rat;
use enveloping::suites::g2_generator_set;

fn main() -> enveloping::Result<()> {
    let (_alg, gs) = g2_generator_set()?;
    println!("name degree weight terms");
    for g in &gs.generators {
        println!("{:>6} {:>3} {:>8} {:>6}", g.name, g.degree, format!("{}", g.weight), g.element.len());
    }

    // the defining identities of the chain hold by construction; show kla1
    let q1 = &gs.get("Q1").unwrap().element;
    let q4 = &gs.get("Q4").unwrap().element;
    let q7 = &gs.get("Q7").unwrap().element;
    let q10 = &gs.get("Q10").unwrap().element;
    let resid = q4.commutator(q7)?.sub(&q1.mul(q10)?.scale(&rat(-54)))?;
    println!("\n[Q4,Q7] + 54 Q1 Q10 = {}", if resid.is_zero() { "0" } else { "nonzero" });

    // the printed O5_31 differs from Q10 by exactly (1/6) Q1 Q4
    let o531 = &gs.get("O5_31").unwrap().element;
    let delta = q10.sub(o531)?;
    let sixth_q1q4 = q1.mul(q4)?.scale(&enveloping::scalar::ratio(1, 6));
    println!(
        "Q10 - printed O5_31 = (1/6) Q1 Q4: {}",
        delta.sub(&sixth_q1q4)?.is_zero()
    );

    // {Q1..Q5, Q13 = C6} commute pairwise: the maximal abelian subalgebra
    let set = ["Q1", "Q2", "Q3", "Q4", "Q5", "Q13"];
    let mut ok = true;
    for i in 0..set.len() {
        for j in (i + 1)..set.len() {
            let a = &gs.get(set[i]).unwrap().element;
            let b = &gs.get(set[j]).unwrap().element;
            ok &= a.commutator(b)?.is_zero();
        }
    }
    println!("{{Q1..Q5, C6}} pairwise commute: {ok}");
    Ok(())
}
