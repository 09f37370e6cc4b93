//! Maurer-Cartan two-forms of a nilpotent subalgebra and the invariant count
//! N(n) = dim n - 2 j0(n), with the wedge index j0 computed as half the rank of
//! a generic rational combination of the dw matrices.

use crate::linalg::{rank, SparseVec};
use crate::rootsys::{SeriesTag, StructureConstants};
use crate::scalar::{rat, Rat};
use crate::{Error, Result};
use num::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Antisymmetric matrix of a two-form over the dual basis of the subalgebra.
#[derive(Debug, Clone)]
pub struct TwoForm {
    pub dim: usize,
    /// entries for i < j; antisymmetry supplies the rest
    pub entries: Vec<(usize, usize, Rat)>,
}

impl TwoForm {
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct InvariantCount {
    pub j0: usize,
    pub invariants: usize,
}

/// The two-forms dw_k = -C_ij^k w_i ^ w_j for each generator of the subalgebra;
/// closed (zero) exactly for the simple-root generators.
pub fn maurer_cartan(sc: &StructureConstants, sub: &[usize]) -> Result<Vec<TwoForm>> {
    // closure check
    for (a, &i) in sub.iter().enumerate() {
        for &j in &sub[a + 1..] {
            for (k, c) in sc.bracket(i, j) {
                if !c.is_zero() && !sub.contains(&(k as usize)) {
                    return Err(Error::NotASubalgebra(sc.labels[i].clone(), sc.labels[j].clone()));
                }
            }
        }
    }
    let m = sub.len();
    let mut forms = Vec::with_capacity(m);
    for &k in sub {
        let mut entries = Vec::new();
        for a in 0..m {
            for b in (a + 1)..m {
                for (t, c) in sc.bracket(sub[a], sub[b]) {
                    if t as usize == k && !c.is_zero() {
                        entries.push((a, b, -c));
                    }
                }
            }
        }
        forms.push(TwoForm { dim: m, entries });
    }
    Ok(forms)
}

/// Random-coefficient wedge index: theta_c = sum c_k dw_k with integer c drawn
/// from the seeded generator; j0 = rank(theta)/2 maximized over the trials.
pub fn invariant_count(
    sc: &StructureConstants,
    sub: &[usize],
    trials: usize,
    seed: u64,
) -> Result<InvariantCount> {
    assert!(trials >= 1);
    let forms = maurer_cartan(sc, sub)?;
    let m = sub.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best_rank = 0;
    for _ in 0..trials {
        let coeffs: Vec<i64> = (0..forms.len()).map(|_| rng.gen_range(-1000..=1000)).collect();
        // assemble the antisymmetric matrix
        let mut mat = vec![vec![Rat::zero(); m]; m];
        for (f, c) in forms.iter().zip(&coeffs) {
            for (i, j, v) in &f.entries {
                let add = v.clone() * rat(*c);
                mat[*i][*j] += add.clone();
                mat[*j][*i] -= add;
            }
        }
        let rows = mat.into_iter().map(|row| {
            SparseVec(
                row.into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j as u32, v))
                    .collect(),
            )
        });
        let r = rank(rows);
        // the rank of an exact antisymmetric matrix is even
        assert_eq!(r % 2, 0, "antisymmetric rank must be even");
        best_rank = best_rank.max(r);
    }
    Ok(InvariantCount { j0: best_rank / 2, invariants: m - best_rank })
}

/// Closed-form invariant counts for nilradicals of Borel subalgebras.
pub fn proposition_table(series: SeriesTag, rank: usize) -> Result<usize> {
    let l = rank;
    let ok = |v: usize| Ok(v);
    match series {
        SeriesTag::A if l >= 1 => ok((l + 1) / 2),
        SeriesTag::B if l >= 2 => ok(l),
        SeriesTag::C if l >= 3 => ok(l),
        SeriesTag::D if l >= 4 && l % 2 == 0 => ok(l),
        SeriesTag::D if l >= 5 => ok(l - 1),
        SeriesTag::G2 if l == 2 => ok(l),
        SeriesTag::F4 if l == 4 => ok(l),
        SeriesTag::E6 if l == 6 => ok(l),
        SeriesTag::E7 if l == 7 => ok(l),
        SeriesTag::E8 if l == 8 => ok(l),
        _ => Err(Error::SeriesRange(series, l)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::builtin_algebra;

    #[test]
    fn a2_forms_and_counts() {
        let sc = builtin_algebra("a2").unwrap();
        let n = &sc.nilradical_indices;
        let forms = maurer_cartan(&sc, n).unwrap();
        // dw is nonzero only for E13 (the non-simple positive root)
        let e13_pos = n.iter().position(|&i| sc.labels[i] == "E13").unwrap();
        for (k, f) in forms.iter().enumerate() {
            assert_eq!(f.is_zero(), k != e13_pos, "{}", sc.labels[n[k]]);
        }
        let ic = invariant_count(&sc, n, 5, 42).unwrap();
        assert_eq!(ic.invariants, 1);
        assert_eq!(ic, invariant_count(&sc, n, 5, 42).unwrap());
    }

    #[test]
    fn abelian_subalgebra_all_closed() {
        let sc = builtin_algebra("d2").unwrap();
        let forms = maurer_cartan(&sc, &sc.nilradical_indices).unwrap();
        assert!(forms.iter().all(|f| f.is_zero()));
        let ic = invariant_count(&sc, &sc.nilradical_indices, 3, 1).unwrap();
        assert_eq!(ic.j0, 0);
        assert_eq!(ic.invariants, 2);
    }

    #[test]
    fn g2_nonzero_form_count() {
        let sc = builtin_algebra("g2").unwrap();
        let forms = maurer_cartan(&sc, &sc.nilradical_indices).unwrap();
        let nonzero = forms.iter().filter(|f| !f.is_zero()).count();
        // exactly the four non-simple positive roots
        assert_eq!(nonzero, 4);
        let ic = invariant_count(&sc, &sc.nilradical_indices, 5, 3).unwrap();
        assert_eq!(ic.invariants, 2);
    }

    #[test]
    fn b2_count() {
        let sc = builtin_algebra("b2").unwrap();
        let ic = invariant_count(&sc, &sc.nilradical_indices, 5, 9).unwrap();
        assert_eq!(ic.invariants, 2);
    }

    #[test]
    fn proposition_values() {
        assert_eq!(proposition_table(SeriesTag::A, 5).unwrap(), 3);
        assert_eq!(proposition_table(SeriesTag::D, 5).unwrap(), 4);
        assert_eq!(proposition_table(SeriesTag::C, 3).unwrap(), 3);
        assert!(proposition_table(SeriesTag::C, 2).is_err());
        assert!(proposition_table(SeriesTag::D, 3).is_err());
    }
}
