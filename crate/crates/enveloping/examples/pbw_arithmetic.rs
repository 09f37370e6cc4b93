//! PBW normal-form arithmetic: products, commutators, orderings.
//!
//! Run with: cargo run --release --example pbw_arithmetic

use enveloping::parse::parse_element;
use enveloping::rootsys::builtin_algebra;
use enveloping::uea::{graded_dimension, symmetrize, AlgebraCtx, Element, Monomial, SymElement};

fn main() -> enveloping::Result<()> {
    let alg = AlgebraCtx::new(builtin_algebra("a2")?);

    // E21 * E12 reorders to E12 E21 - H1 (the table bracket [E12,E21] = H1)
    let e12 = parse_element(&alg, "E12")?;
    let e21 = parse_element(&alg, "E21")?;
    println!("E21 * E12          = {}", e21.mul(&e12)?);
    println!("[E12, E21]         = {}", e12.commutator(&e21)?);

    // the quadratic Casimir commutes with everything
    let i2 = parse_element(
        &alg,
        "1/3 (H1^2 + H1 H2 + H2^2) + H1 + H2 + E21 E12 + E31 E13 + E32 E23",
    )?;
    let all_commute = (0..alg.dim())
        .all(|i| Element::generator(&alg, i).commutator(&i2).unwrap().is_zero());
    println!("I2 central         = {all_commute}");

    // filtration dimensions: dim U^(p) = binomial(n + p - 1, p)
    println!("dim U^(2) of g2    = {}", graded_dimension(14, 2));
    println!("dim U^(3) of a2    = {}", graded_dimension(8, 3));

    // symmetrization of a commutative monomial, returned in normal form
    let mut m = Monomial::unit(alg.dim());
    m.0[2] = 1; // E12
    m.0[5] = 1; // E21
    let lam = symmetrize(&alg, &SymElement::from_monomial(m, enveloping::scalar::rat(1)))?;
    println!("sym(x_E12 x_E21)   = {lam}");

    // a second PBW ordering: X13 first (used for left division in g2)
    let g2 = AlgebraCtx::new(builtin_algebra("g2")?);
    let p = parse_element(&g2, "X3 X13")?;
    let alt = g2.reordered_generator_first(12);
    let q = p.convert(&alt)?;
    println!("X3 X13, X13-first  = every term carries X13: {}", q.terms.keys().all(|m| m.0[12] >= 1));
    Ok(())
}
