//! The PDE system of a subalgebra chain, its generic rank, and the analytic
//! lower bound d0 = n - r' for the number of independent solutions.
//!
//! Run with: cargo run --release --example rank_bounds

use enveloping::rootsys::builtin_algebra;
use enveloping::symalg::{abelian_bound, build_system, d0_formula, generic_rank, pde_kernel};
use enveloping::rootsys::SeriesTag;
use enveloping::uea::AlgebraCtx;

fn main() -> enveloping::Result<()> {
    for (tag, n_sub) in [("d2", 2usize), ("a2", 1), ("b2", 2), ("g2", 2)] {
        let sc = builtin_algebra(tag)?;
        let vfs = build_system(&sc, &sc.nilradical_indices)?;
        let r = generic_rank(&vfs, 0);
        let xi = abelian_bound(&sc, &sc.nilradical_indices, n_sub)?;
        println!(
            "{tag}: m = {}, r' = {}, independent solutions = {}, abelian bound xi = {xi}",
            sc.nilradical_indices.len(),
            r.generic_rank,
            r.independent_solutions
        );
    }

    // the degree-1 kernel of the a2 chain is the centre of the nilradical
    let sc = builtin_algebra("a2")?;
    let vfs = build_system(&sc, &sc.nilradical_indices)?;
    let alg = AlgebraCtx::new(builtin_algebra("a2")?);
    for s in pde_kernel(&sc, &vfs, 1, None) {
        println!("degree-1 solution: {}", s.lift(&alg));
    }

    println!("\nclosed-form d0 table:");
    for l in 2..=8 {
        println!(
            "  rank {l}: A {} B/C {} D {}",
            d0_formula(SeriesTag::A, l)?,
            d0_formula(SeriesTag::B, l)?,
            d0_formula(SeriesTag::D, l)?
        );
    }
    println!(
        "  exceptional: G2 {} F4 {} E6 {} E7 {} E8 {}",
        d0_formula(SeriesTag::G2, 2)?,
        d0_formula(SeriesTag::F4, 4)?,
        d0_formula(SeriesTag::E6, 6)?,
        d0_formula(SeriesTag::E7, 7)?,
        d0_formula(SeriesTag::E8, 8)?
    );
    Ok(())
}
