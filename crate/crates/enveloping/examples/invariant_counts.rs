//! Maurer-Cartan two-forms of nilradicals and the invariant count
//! N(n) = dim n - 2 j0(n), against the closed-form table.
//!
//! Run with: cargo run --release --example invariant_counts

use enveloping::exterior::{invariant_count, maurer_cartan, proposition_table};
use enveloping::rootsys::{builtin_algebra, from_cartan, CartanMatrix, SeriesTag};

fn main() -> enveloping::Result<()> {
    // rank-two fixtures
    for tag in ["d2", "a2", "b2", "g2"] {
        let sc = builtin_algebra(tag)?;
        let forms = maurer_cartan(&sc, &sc.nilradical_indices)?;
        let nonzero = forms.iter().filter(|f| !f.is_zero()).count();
        let ic = invariant_count(&sc, &sc.nilradical_indices, 5, 0)?;
        println!(
            "{tag}: dim n = {}, nonzero dw = {nonzero}, j0 = {}, N(n) = {}",
            sc.nilradical_indices.len(),
            ic.j0,
            ic.invariants
        );
    }

    // classical series against the closed form
    println!("\nseries check (random-coefficient wedge rank vs closed form):");
    for l in 2..=6 {
        for series in [SeriesTag::A, SeriesTag::B, SeriesTag::C, SeriesTag::D] {
            let usable = match series {
                SeriesTag::C => l >= 3,
                SeriesTag::D => l >= 4,
                _ => true,
            };
            if !usable {
                continue;
            }
            let cm = CartanMatrix::standard(series, l)?;
            let (_, sc) = from_cartan(&cm)?;
            let got = invariant_count(&sc, &sc.nilradical_indices, 5, 1)?.invariants;
            let want = proposition_table(series, l)?;
            println!("  {series:?}{l}: N = {got} (closed form {want}) {}", if got == want { "ok" } else { "MISMATCH" });
        }
    }
    Ok(())
}
