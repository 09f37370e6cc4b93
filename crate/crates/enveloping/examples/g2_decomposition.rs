//! The graded decomposition of U(g2): admissible exponent tuples under the
//! constraint set, the dimension identity, and the counting sequences for
//! p = 1..16.
//!
//! Run with: cargo run --release --example g2_decomposition

use enveloping::decomp::{enumerate_admissible, tuple_weight_g2, verify_dek1, weyl_dim_g2, G2_DEGREES};
use enveloping::fixtures::load_g2_decomp;

fn main() -> enveloping::Result<()> {
    let fx = load_g2_decomp()?;
    let report = verify_dek1(&fx.constraints, 16);
    println!(" p  terms distinct  dim U^(p)          identity");
    for layer in &report.layers {
        println!(
            "{:>2} {:>6} {:>8}  {:>17} {}",
            layer.p,
            layer.total_terms,
            layer.distinct,
            layer.dimension_sum,
            if layer.holds { "ok" } else { "MISMATCH" }
        );
    }

    // the explicit decomposition at p = 4
    println!("\nU^(4) decomposes as:");
    let tuples = enumerate_admissible(&fx.constraints, &G2_DEGREES, 4, tuple_weight_g2);
    let mut by_label = std::collections::BTreeMap::new();
    for t in &tuples {
        let w = tuple_weight_g2(t);
        *by_label.entry((w.lambda, w.mu)).or_insert(0usize) += 1;
    }
    let line: Vec<String> = by_label
        .iter()
        .map(|(&(l, m), &c)| {
            let dim = weyl_dim_g2(l, m);
            if c == 1 {
                format!("[{l},{m}] (dim {dim})")
            } else {
                format!("[{l},{m}]^{c} (dim {dim})")
            }
        })
        .collect();
    println!("  {}", line.join(" + "));
    Ok(())
}
