//! Decomposition bookkeeping: the Weyl dimension formula, admissible exponent
//! enumeration under a constraint set, and verification of the graded dimension
//! identity dim U^(p) = sum of irreducible dimensions over admissible tuples.
//!
//! Two independent routes are implemented: the tuple enumeration under the
//! constraint data, and a character-theoretic decomposition of Sym^p(adjoint)
//! through the Weyl group (Racah multiplicities). The second is the oracle that
//! pins down the corrections the printed constraint data needs from p = 11 on.

use crate::rootsys::RootSystem;
use crate::{Error, Result};
use num::bigint::BigInt;
use num::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Highest weight [lambda, mu] with a multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IrrepLabel {
    pub lambda: i64,
    pub mu: i64,
}

/// Admissibility data for exponent tuples: binary caps, product-zero conditions
/// and excluded-pattern vectors (componentwise dominance), plus block caps that
/// drop the lexicographically largest tuples of a given degree and weight.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConstraintSet {
    /// indices (0-based) forced into {0,1}
    pub binary: Vec<usize>,
    /// index sets whose exponents cannot all be simultaneously nonzero
    pub zero_products: Vec<Vec<usize>>,
    /// excluded patterns: a is inadmissible if a >= sum c_i v_i componentwise
    /// for nonnegative integers c_i, not all zero
    pub excluded_patterns: Vec<Vec<u32>>,
    /// (degree, lambda, mu, count): drop `count` lex-largest tuples per block
    #[serde(default)]
    pub block_caps: Vec<(usize, i64, i64, usize)>,
}

impl ConstraintSet {
    pub fn empty() -> Self {
        ConstraintSet {
            binary: Vec::new(),
            zero_products: Vec::new(),
            excluded_patterns: Vec::new(),
            block_caps: Vec::new(),
        }
    }

    fn admissible_pointwise(&self, a: &[u32], degrees: &[usize]) -> bool {
        for &i in &self.binary {
            if a[i] > 1 {
                return false;
            }
        }
        for zp in &self.zero_products {
            if zp.iter().all(|&i| a[i] > 0) {
                return false;
            }
        }
        // dominance exclusion with a bounded search over the c_i
        if !self.excluded_patterns.is_empty() {
            let deg_a: usize = a.iter().zip(degrees).map(|(&e, &d)| e as usize * d).sum();
            let pdeg: Vec<usize> = self
                .excluded_patterns
                .iter()
                .map(|v| v.iter().zip(degrees).map(|(&e, &d)| e as usize * d).sum())
                .collect();
            if self.dominated(a, deg_a, &pdeg, &mut vec![0u32; self.excluded_patterns.len()], 0) {
                return false;
            }
        }
        true
    }

    fn dominated(
        &self,
        a: &[u32],
        budget: usize,
        pdeg: &[usize],
        cs: &mut Vec<u32>,
        idx: usize,
    ) -> bool {
        if idx == self.excluded_patterns.len() {
            if cs.iter().all(|&c| c == 0) {
                return false;
            }
            let mut tot = vec![0u32; a.len()];
            for (c, v) in cs.iter().zip(&self.excluded_patterns) {
                for (t, &e) in tot.iter_mut().zip(v) {
                    *t += c * e;
                }
            }
            return a.iter().zip(&tot).all(|(&x, &t)| x >= t);
        }
        let max_c = if pdeg[idx] == 0 { 0 } else { budget / pdeg[idx] };
        for c in 0..=max_c as u32 {
            cs[idx] = c;
            if self.dominated(a, budget, pdeg, cs, idx + 1) {
                cs[idx] = 0;
                return true;
            }
        }
        cs[idx] = 0;
        false
    }
}

/// Weyl dimension of a G2 irrep from the printed product formula.
pub fn weyl_dim_g2(lambda: i64, mu: i64) -> BigInt {
    let (l, m) = (BigInt::from(lambda), BigInt::from(mu));
    let f = (l.clone() + 1)
        * (m.clone() + 1)
        * (l.clone() + m.clone() + 2)
        * (l.clone() + 2 * m.clone() + 3)
        * (l.clone() + 3 * m.clone() + 4)
        * (2 * l + 3 * m + 5);
    f / BigInt::from(120)
}

/// General Weyl dimension formula over the positive roots of a root system;
/// the weight is given in fundamental-weight coordinates.
pub fn weyl_dim_general(rs: &RootSystem, w: &[i64]) -> Result<BigInt> {
    if w.len() != rs.rank() || w.iter().any(|&x| x < 0) {
        return Err(Error::NonDominant(w.to_vec()));
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for alpha in &rs.positive {
        // (w + rho, alpha) = sum_j (w_j + 1) m_j d_j  with alpha = sum m_j alpha_j
        let mut a = 0i64;
        let mut b = 0i64;
        for (j, &mj) in alpha.iter().enumerate() {
            a += (w[j] + 1) * mj * rs.sym[j];
            b += mj * rs.sym[j];
        }
        num *= BigInt::from(a);
        den *= BigInt::from(b);
    }
    Ok(num / den)
}

/// The printed linear form for the weight of a G2 exponent tuple.
pub fn tuple_weight_g2(a: &[u32]) -> IrrepLabel {
    assert_eq!(a.len(), 17);
    let a = |i: usize| a[i - 1] as i64;
    IrrepLabel {
        lambda: 2 * a(2) + 3 * a(4) + a(5) + 2 * a(6) + a(9) + 3 * a(10) + 3 * a(11) + 2 * a(12)
            + a(14)
            + a(16),
        mu: a(1) + 2 * a(7) + a(8) + a(9) + a(10) + a(12) + a(14) + 2 * a(15) + 2 * a(16)
            + 3 * a(17),
    }
}

/// All tuples with sum a_k deg_k = p passing the admissibility predicate, in
/// lexicographic order. Block caps (when present) drop the lex-largest tuples
/// of the capped (degree, weight) blocks.
pub fn enumerate_admissible(
    cs: &ConstraintSet,
    degrees: &[usize],
    p: usize,
    weight_of: impl Fn(&[u32]) -> IrrepLabel,
) -> Vec<Vec<u32>> {
    let mut raw = Vec::new();
    let mut cur = vec![0u32; degrees.len()];
    fn rec(degrees: &[usize], cur: &mut Vec<u32>, idx: usize, left: usize, out: &mut Vec<Vec<u32>>) {
        if idx == degrees.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let d = degrees[idx];
        let max_e = if d == 0 { 0 } else { left / d };
        for e in 0..=max_e as u32 {
            cur[idx] = e;
            rec(degrees, cur, idx + 1, left - e as usize * d, out);
        }
        cur[idx] = 0;
    }
    rec(degrees, &mut cur, 0, p, &mut raw);
    let mut kept: Vec<Vec<u32>> = raw
        .into_iter()
        .filter(|a| cs.admissible_pointwise(a, degrees))
        .collect();
    // apply block caps: drop the lex-largest `count` tuples of each capped block
    for &(deg, lambda, mu, count) in &cs.block_caps {
        if deg != p {
            continue;
        }
        let mut in_block: Vec<usize> = kept
            .iter()
            .enumerate()
            .filter(|(_, a)| {
                let w = weight_of(a);
                w.lambda == lambda && w.mu == mu
            })
            .map(|(i, _)| i)
            .collect();
        in_block.sort_by(|&a, &b| kept[b].cmp(&kept[a])); // lex-descending
        let drop: Vec<usize> = in_block.into_iter().take(count).collect();
        let mut keep_mask = vec![true; kept.len()];
        for i in drop {
            keep_mask[i] = false;
        }
        kept = kept
            .into_iter()
            .zip(keep_mask)
            .filter(|(_, k)| *k)
            .map(|(a, _)| a)
            .collect();
    }
    kept
}

/// One graded layer of the verification report.
#[derive(Debug, Clone, Serialize)]
pub struct Dek1Layer {
    pub p: usize,
    pub total_terms: usize,
    pub distinct: usize,
    pub labels: Vec<(i64, i64, usize)>,
    pub dimension_sum: String,
    pub dimension_expected: String,
    pub holds: bool,
}

#[derive(Debug, Serialize)]
pub struct Dek1Report {
    pub layers: Vec<Dek1Layer>,
    pub all_hold: bool,
}

pub const G2_DEGREES: [usize; 17] = [1, 2, 2, 3, 3, 4, 4, 5, 5, 5, 6, 6, 6, 7, 8, 9, 12];

/// Check dim U^(p) = sum of irrep dimensions over admissible tuples for G2.
pub fn verify_dek1(cs: &ConstraintSet, p_max: usize) -> Dek1Report {
    let mut layers = Vec::new();
    for p in 1..=p_max {
        let tuples = enumerate_admissible(cs, &G2_DEGREES, p, tuple_weight_g2);
        let mut label_mult: BTreeMap<(i64, i64), usize> = BTreeMap::new();
        let mut total = BigInt::zero();
        for a in &tuples {
            let w = tuple_weight_g2(a);
            *label_mult.entry((w.lambda, w.mu)).or_insert(0) += 1;
            total += weyl_dim_g2(w.lambda, w.mu);
        }
        let expected = crate::uea::graded_dimension(14, p);
        layers.push(Dek1Layer {
            p,
            total_terms: tuples.len(),
            distinct: label_mult.len(),
            labels: label_mult.iter().map(|(&(l, m), &c)| (l, m, c)).collect(),
            dimension_sum: total.to_string(),
            dimension_expected: expected.to_string(),
            holds: total == expected,
        });
    }
    let all_hold = layers.iter().all(|l| l.holds);
    Dek1Report { layers, all_hold }
}

/// Admissible tuples for the classical rank-two bases.
pub fn basis_enumerator_classical(algebra: &str, p: usize) -> Result<Vec<Vec<u32>>> {
    let (degrees, cs) = match algebra {
        // D2: X2^a1 X5^a2 I21^a3 I22^a4, unconstrained
        "d2" => (vec![1usize, 1, 2, 2], ConstraintSet::empty()),
        // A2: B1 B2 C1 C2 I2 I3 with a3 a4 = 0
        "a2" => (
            vec![1, 2, 3, 3, 2, 3],
            ConstraintSet {
                binary: vec![],
                zero_products: vec![vec![2, 3]],
                excluded_patterns: vec![],
                block_caps: vec![],
            },
        ),
        // B2: P1..P5 C2 C4 with a5 = 0,1
        "b2" => (
            vec![1, 2, 2, 3, 4, 2, 4],
            ConstraintSet {
                binary: vec![4],
                zero_products: vec![],
                excluded_patterns: vec![],
                block_caps: vec![],
            },
        ),
        other => return Err(Error::UnknownAlgebra(other.to_string())),
    };
    let dummy = |_: &[u32]| IrrepLabel { lambda: 0, mu: 0 };
    Ok(enumerate_admissible(&cs, &degrees, p, dummy))
}

// ---------------------------------------------------------------------------
// Character-theoretic oracle: decomposition of Sym^p(adjoint) via the Weyl
// group (Racah multiplicities). Exact integers throughout.
// ---------------------------------------------------------------------------

/// Weyl group elements as 2x2 (rank x rank) integer matrices acting on
/// fundamental-weight coordinates, with determinant signs.
fn weyl_group(rs: &RootSystem) -> Vec<(Vec<Vec<i64>>, i64)> {
    let l = rs.rank();
    // simple reflections: s_i(w) = w - <w, alpha_i^v> alpha_i, with alpha_i in
    // fundamental coordinates given by the Cartan matrix columns
    let mut gens = Vec::new();
    for i in 0..l {
        // s_i(w)_j = w_j - w_i <alpha_i, alpha_j^v>: subtract the alpha_i column
        let mut m = vec![vec![0i64; l]; l];
        for (j, row) in m.iter_mut().enumerate() {
            row[j] = 1;
            row[i] -= rs.cartan.entries[j][i];
        }
        gens.push(m);
    }
    let mul = |a: &Vec<Vec<i64>>, b: &Vec<Vec<i64>>| -> Vec<Vec<i64>> {
        let mut r = vec![vec![0i64; l]; l];
        for i in 0..l {
            for j in 0..l {
                for k in 0..l {
                    r[i][j] += a[i][k] * b[k][j];
                }
            }
        }
        r
    };
    let id: Vec<Vec<i64>> = (0..l)
        .map(|i| (0..l).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut group: Vec<(Vec<Vec<i64>>, i64)> = vec![(id, 1)];
    let mut frontier = group.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (el, det) in &frontier {
            for g in &gens {
                let ne = mul(g, el);
                if !group.iter().any(|(m, _)| *m == ne) {
                    group.push((ne.clone(), -det));
                    next.push((ne, -det));
                }
            }
        }
        frontier = next;
        assert!(group.len() <= 1_000_000, "Weyl group generation runaway");
    }
    group
}

/// Weight multiplicities of Sym^p of a module with the given weights
/// (each weight in fundamental coordinates).
fn sym_weight_multiplicities(weights: &[Vec<i64>], p: usize) -> BTreeMap<(Vec<i64>, usize), BigInt> {
    let l = weights.first().map(|w| w.len()).unwrap_or(0);
    let mut table: BTreeMap<(Vec<i64>, usize), BigInt> = BTreeMap::new();
    table.insert((vec![0i64; l], 0), BigInt::one());
    for w in weights {
        let mut next: BTreeMap<(Vec<i64>, usize), BigInt> = BTreeMap::new();
        for ((wt, d), c) in &table {
            let mut e = 0usize;
            while d + e <= p {
                let nwt: Vec<i64> = wt.iter().zip(w).map(|(a, b)| a + b * e as i64).collect();
                let entry = next.entry((nwt, d + e)).or_insert_with(BigInt::zero);
                *entry += c;
                e += 1;
            }
        }
        table = next;
    }
    table
}

/// Multiplicities of irreducibles in Sym^p(adjoint) by the alternating-sum
/// formula c_lam = sum_w det(w) m(w(lam + rho) - rho).
pub fn symp_adjoint_decomposition(
    rs: &RootSystem,
    module_weights: &[Vec<i64>],
    p: usize,
) -> BTreeMap<Vec<i64>, BigInt> {
    let l = rs.rank();
    let group = weyl_group(rs);
    let table = sym_weight_multiplicities(module_weights, p);
    let m = |wt: &[i64]| -> BigInt {
        table
            .get(&(wt.to_vec(), p))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    };
    let mut out = BTreeMap::new();
    for ((wt, d), _) in &table {
        if *d != p || wt.iter().any(|&x| x < 0) {
            continue;
        }
        let lr: Vec<i64> = wt.iter().map(|&x| x + 1).collect();
        let mut c = BigInt::zero();
        for (el, det) in &group {
            let mut im = vec![0i64; l];
            for (i, row) in el.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    im[i] += v * lr[j];
                }
            }
            let tgt: Vec<i64> = im.iter().map(|&x| x - 1).collect();
            let term = m(&tgt);
            if *det > 0 {
                c += term;
            } else {
                c -= term;
            }
        }
        if !c.is_zero() {
            out.insert(wt.clone(), c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{CartanMatrix, SeriesTag};

    #[test]
    fn weyl_dims_g2() {
        assert_eq!(weyl_dim_g2(0, 0), BigInt::from(1));
        assert_eq!(weyl_dim_g2(1, 0), BigInt::from(7));
        assert_eq!(weyl_dim_g2(0, 1), BigInt::from(14));
    }

    #[test]
    fn general_formula_agrees_with_g2_product() {
        let cm = CartanMatrix::standard(SeriesTag::G2, 2).unwrap();
        let (rs, _) = crate::rootsys::from_cartan(&cm).unwrap();
        for l in 0..=10 {
            for m in 0..=10 {
                assert_eq!(
                    weyl_dim_general(&rs, &[l, m]).unwrap(),
                    weyl_dim_g2(l, m),
                    "({l},{m})"
                );
            }
        }
        assert!(weyl_dim_general(&rs, &[-1, 0]).is_err());
    }

    #[test]
    fn a2_adjoint_dimension() {
        let cm = CartanMatrix::standard(SeriesTag::A, 2).unwrap();
        let (rs, _) = crate::rootsys::from_cartan(&cm).unwrap();
        assert_eq!(weyl_dim_general(&rs, &[1, 1]).unwrap(), BigInt::from(8));
    }

    #[test]
    fn tuple_weights() {
        let mut a = [0u32; 17];
        assert_eq!(tuple_weight_g2(&a), IrrepLabel { lambda: 0, mu: 0 });
        a[0] = 1;
        assert_eq!(tuple_weight_g2(&a), IrrepLabel { lambda: 0, mu: 1 });
        a[0] = 0;
        a[1] = 1;
        assert_eq!(tuple_weight_g2(&a), IrrepLabel { lambda: 2, mu: 0 });
    }

    #[test]
    fn classical_enumerations() {
        // A2: a3 a4 = 0
        let ts = basis_enumerator_classical("a2", 6).unwrap();
        assert!(ts.iter().all(|a| a[2] == 0 || a[3] == 0));
        // B2: a5 binary
        let ts = basis_enumerator_classical("b2", 8).unwrap();
        assert!(ts.iter().all(|a| a[4] <= 1));
        // D2 degree-p count: compositions weighted by (1,1,2,2)
        let ts = basis_enumerator_classical("d2", 4).unwrap();
        let brute = {
            let mut n = 0;
            for a1 in 0..=4u32 {
                for a2 in 0..=4u32 {
                    for a3 in 0..=2u32 {
                        for a4 in 0..=2u32 {
                            if a1 + a2 + 2 * a3 + 2 * a4 == 4 {
                                n += 1;
                            }
                        }
                    }
                }
            }
            n
        };
        assert_eq!(ts.len(), brute);
    }

    #[test]
    fn weyl_group_order_g2() {
        let cm = CartanMatrix::standard(SeriesTag::G2, 2).unwrap();
        let (rs, _) = crate::rootsys::from_cartan(&cm).unwrap();
        assert_eq!(weyl_group(&rs).len(), 12);
    }
}
