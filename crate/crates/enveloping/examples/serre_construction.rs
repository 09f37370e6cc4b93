//! Generate Lie algebras from Cartan matrices and check the Serre relations.
//!
//! Run with: cargo run --release --example serre_construction

use enveloping::rootsys::{from_cartan, CartanMatrix, SeriesTag};

fn main() -> enveloping::Result<()> {
    for (series, rank) in [
        (SeriesTag::A, 1),
        (SeriesTag::A, 2),
        (SeriesTag::B, 2),
        (SeriesTag::G2, 2),
        (SeriesTag::F4, 4),
        (SeriesTag::D, 4),
    ] {
        let cm = CartanMatrix::standard(series, rank)?;
        let (rs, sc) = from_cartan(&cm)?;
        let jacobi = sc.verify_jacobi();
        let serre = sc.verify_serre(&cm);
        println!(
            "{series:?}{rank}: dim {} |R+| {} highest root {:?} jacobi {} serre {}",
            sc.dim(),
            rs.positive.len(),
            rs.highest_root(),
            if jacobi.passed() { "ok" } else { "FAIL" },
            if serre.is_empty() { "ok" } else { "FAIL" },
        );
    }

    // the generated G2 positive roots match {a1, a2, a1+a2, 2a1+a2, 3a1+a2, 3a1+2a2}
    let cm = CartanMatrix::standard(SeriesTag::G2, 2)?;
    let (rs, _) = from_cartan(&cm)?;
    println!("G2 positive roots: {:?}", rs.positive);
    Ok(())
}
