//! Built-in rank-two algebras with a fixed printed basis order. The A2 table is
//! generated from the elementary 3x3 matrices; B2 and G2 are stored commutator
//! tables; D2 is the 6-dimensional direct sum of two copies of sl(2,C).
//!
//! All four tables pass the exhaustive Jacobi check exactly.

use super::StructureConstants;
use crate::scalar::{rat, Rat};
use crate::{Error, Result};

/// Return the structure constants of a built-in algebra: `d2`, `a2`, `b2`, `g2`.
pub fn builtin_algebra(name: &str) -> Result<StructureConstants> {
    match name.to_ascii_lowercase().as_str() {
        "d2" => Ok(d2()),
        "a2" => Ok(a2()),
        "b2" => Ok(b2()),
        "g2" => Ok(g2()),
        other => Err(Error::UnknownAlgebra(other.to_string())),
    }
}

fn d2() -> StructureConstants {
    let labels: Vec<String> = (1..=6).map(|i| format!("X{i}")).collect();
    // two commuting copies of sl2: (X1;X2,X3) and (X4;X5,X6)
    let entries = vec![
        (0, 1, vec![(1, rat(2))]),
        (0, 2, vec![(2, rat(-2))]),
        (1, 2, vec![(0, rat(1))]),
        (3, 4, vec![(4, rat(2))]),
        (3, 5, vec![(5, rat(-2))]),
        (4, 5, vec![(3, rat(1))]),
    ];
    // nilradical of the Borel subalgebra: the positive-root generators X2, X5
    StructureConstants::new("d2", labels, 2, vec![0, 3], vec![1, 4], vec![1, 4], entries)
}

fn a2() -> StructureConstants {
    // basis H1 = E11-E22, H2 = E22-E33, then E12, E13, E23, E21, E31, E32
    let labels: Vec<String> = ["H1", "H2", "E12", "E13", "E23", "E21", "E31", "E32"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    type M = [[i64; 3]; 3];
    fn e(i: usize, j: usize) -> M {
        let mut m = [[0i64; 3]; 3];
        m[i - 1][j - 1] = 1;
        m
    }
    fn sub(a: M, b: M) -> M {
        let mut r = [[0i64; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                r[i][j] = a[i][j] - b[i][j];
            }
        }
        r
    }
    fn mul(a: M, b: M) -> M {
        let mut r = [[0i64; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    r[i][j] += a[i][k] * b[k][j];
                }
            }
        }
        r
    }
    let mats: Vec<M> = vec![
        sub(e(1, 1), e(2, 2)),
        sub(e(2, 2), e(3, 3)),
        e(1, 2),
        e(1, 3),
        e(2, 3),
        e(2, 1),
        e(3, 1),
        e(3, 2),
    ];
    let offdiag = [(1usize, 2usize), (1, 3), (2, 3), (2, 1), (3, 1), (3, 2)];
    let expand = |m: M| -> Vec<(usize, Rat)> {
        // traceless diag(d1,d2,d3) = d1*H1 + (d1+d2)*H2
        let mut out = Vec::new();
        if m[0][0] != 0 {
            out.push((0, rat(m[0][0])));
        }
        if m[0][0] + m[1][1] != 0 {
            out.push((1, rat(m[0][0] + m[1][1])));
        }
        for (t, (i, j)) in offdiag.iter().enumerate() {
            if m[i - 1][j - 1] != 0 {
                out.push((2 + t, rat(m[i - 1][j - 1])));
            }
        }
        out
    };
    let mut entries = Vec::new();
    for i in 0..8 {
        for j in (i + 1)..8 {
            let c = sub(mul(mats[i], mats[j]), mul(mats[j], mats[i]));
            let v = expand(c);
            if !v.is_empty() {
                entries.push((i, j, v));
            }
        }
    }
    StructureConstants::new("a2", labels, 2, vec![0, 1], vec![2, 3, 4], vec![2, 4], entries)
}

fn b2() -> StructureConstants {
    let labels: Vec<String> = ["H1", "H2", "E1", "E2", "E3", "E4", "F1", "F2", "F3", "F4"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let ix = |s: &str| labels.iter().position(|l| l == s).unwrap();
    let t = |a: &str, b: &str, rhs: &[(i64, &str)]| -> (usize, usize, Vec<(usize, Rat)>) {
        let (i, j) = (ix(a), ix(b));
        assert!(i < j);
        (i, j, rhs.iter().map(|(c, l)| (ix(l), rat(*c))).collect())
    };
    let entries = vec![
        t("H1", "E2", &[(1, "E2")]),
        t("H1", "E3", &[(1, "E3")]),
        t("H1", "E4", &[(1, "E4")]),
        t("H1", "F2", &[(-1, "F2")]),
        t("H1", "F3", &[(-1, "F3")]),
        t("H1", "F4", &[(-1, "F4")]),
        t("H2", "E1", &[(1, "E1")]),
        t("H2", "E2", &[(-1, "E2")]),
        t("H2", "E4", &[(1, "E4")]),
        t("H2", "F1", &[(-1, "F1")]),
        t("H2", "F2", &[(1, "F2")]),
        t("H2", "F4", &[(-1, "F4")]),
        t("E1", "E2", &[(1, "E3")]),
        t("E1", "E3", &[(1, "E4")]),
        t("E1", "F1", &[(1, "H2")]),
        t("E1", "F3", &[(-1, "F2")]),
        t("E1", "F4", &[(-1, "F3")]),
        t("E2", "F2", &[(1, "H1"), (-1, "H2")]),
        t("E2", "F3", &[(1, "F1")]),
        t("E3", "F1", &[(-1, "E2")]),
        t("E3", "F2", &[(1, "E1")]),
        t("E3", "F3", &[(1, "H1")]),
        t("E3", "F4", &[(1, "F1")]),
        t("E4", "F1", &[(-1, "E3")]),
        t("E4", "F3", &[(1, "E1")]),
        t("E4", "F4", &[(1, "H1"), (1, "H2")]),
        t("F1", "F2", &[(-1, "F3")]),
        t("F1", "F3", &[(-1, "F4")]),
    ];
    StructureConstants::new("b2", labels, 2, vec![0, 1], vec![2, 3, 4, 5], vec![2, 3], entries)
}

fn g2() -> StructureConstants {
    let labels: Vec<String> = (1..=14).map(|i| format!("X{i}")).collect();
    let ix = |s: &str| -> usize { s[1..].parse::<usize>().unwrap() - 1 };
    let t = |a: &str, b: &str, rhs: &[(i64, &str)]| -> (usize, usize, Vec<(usize, Rat)>) {
        let (i, j) = (ix(a), ix(b));
        assert!(i < j);
        (i, j, rhs.iter().map(|(c, l)| (ix(l), rat(*c))).collect())
    };
    let entries = vec![
        t("X1", "X3", &[(2, "X3")]),
        t("X1", "X4", &[(-2, "X4")]),
        t("X1", "X5", &[(-3, "X5")]),
        t("X1", "X6", &[(3, "X6")]),
        t("X1", "X7", &[(-1, "X7")]),
        t("X1", "X8", &[(1, "X8")]),
        t("X1", "X9", &[(1, "X9")]),
        t("X1", "X10", &[(-1, "X10")]),
        t("X1", "X11", &[(3, "X11")]),
        t("X1", "X12", &[(-3, "X12")]),
        t("X2", "X3", &[(-1, "X3")]),
        t("X2", "X4", &[(1, "X4")]),
        t("X2", "X5", &[(2, "X5")]),
        t("X2", "X6", &[(-2, "X6")]),
        t("X2", "X7", &[(1, "X7")]),
        t("X2", "X8", &[(-1, "X8")]),
        t("X2", "X11", &[(-1, "X11")]),
        t("X2", "X12", &[(1, "X12")]),
        t("X2", "X13", &[(1, "X13")]),
        t("X2", "X14", &[(-1, "X14")]),
        t("X3", "X4", &[(1, "X1")]),
        t("X3", "X5", &[(1, "X7")]),
        t("X3", "X7", &[(2, "X9")]),
        t("X3", "X8", &[(-3, "X6")]),
        t("X3", "X9", &[(-3, "X11")]),
        t("X3", "X10", &[(-2, "X8")]),
        t("X3", "X12", &[(1, "X10")]),
        t("X4", "X6", &[(-1, "X8")]),
        t("X4", "X7", &[(3, "X5")]),
        t("X4", "X8", &[(-2, "X10")]),
        t("X4", "X9", &[(2, "X7")]),
        t("X4", "X10", &[(3, "X12")]),
        t("X4", "X11", &[(-1, "X9")]),
        t("X5", "X6", &[(1, "X2")]),
        t("X5", "X8", &[(1, "X4")]),
        t("X5", "X11", &[(-1, "X13")]),
        t("X5", "X14", &[(1, "X12")]),
        t("X6", "X7", &[(-1, "X3")]),
        t("X6", "X12", &[(1, "X14")]),
        t("X6", "X13", &[(-1, "X11")]),
        t("X7", "X8", &[(1, "X1"), (3, "X2")]),
        t("X7", "X9", &[(-3, "X13")]),
        t("X7", "X10", &[(2, "X4")]),
        t("X7", "X14", &[(1, "X10")]),
        t("X8", "X9", &[(-2, "X3")]),
        t("X8", "X10", &[(3, "X14")]),
        t("X8", "X13", &[(-1, "X9")]),
        t("X9", "X10", &[(2, "X1"), (3, "X2")]),
        t("X9", "X12", &[(-1, "X4")]),
        t("X9", "X14", &[(-1, "X8")]),
        t("X10", "X11", &[(1, "X3")]),
        t("X10", "X13", &[(1, "X7")]),
        t("X11", "X12", &[(1, "X1"), (1, "X2")]),
        t("X11", "X14", &[(-1, "X6")]),
        t("X12", "X13", &[(1, "X5")]),
        t("X13", "X14", &[(1, "X1"), (2, "X2")]),
    ];
    StructureConstants::new(
        "g2",
        labels,
        2,
        vec![0, 1],
        vec![2, 4, 6, 8, 10, 12],
        vec![2, 4],
        entries,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Weight;

    #[test]
    fn all_builtin_pass_jacobi() {
        for tag in ["d2", "a2", "b2", "g2"] {
            let sc = builtin_algebra(tag).unwrap();
            let rep = sc.verify_jacobi();
            assert!(rep.passed(), "{tag}: {:?}", rep.violations.first());
        }
        assert!(builtin_algebra("f4").is_err());
    }

    #[test]
    fn a2_table_entries() {
        let sc = builtin_algebra("a2").unwrap();
        let e12 = sc.index_of("E12").unwrap();
        let e21 = sc.index_of("E21").unwrap();
        // [E12,E21] = E11 - E22 = H1
        assert_eq!(sc.bracket(e12, e21), vec![(0, rat(1))]);
        let e13 = sc.index_of("E13").unwrap();
        assert_eq!(sc.generator_weight(e13).unwrap(), Weight(vec![1, 1]));
    }

    #[test]
    fn b2_g2_table_entries() {
        let sc = builtin_algebra("b2").unwrap();
        let e1 = sc.index_of("E1").unwrap();
        let f1 = sc.index_of("F1").unwrap();
        // [E1,F1] = H2
        assert_eq!(sc.bracket(e1, f1), vec![(1, rat(1))]);

        let sc = builtin_algebra("g2").unwrap();
        // [X3,X4] = X1
        assert_eq!(sc.bracket(2, 3), vec![(0, rat(1))]);
        // X13 has weight (0,1); X9 has weight (1,0)
        assert_eq!(sc.generator_weight(12).unwrap(), Weight(vec![0, 1]));
        assert_eq!(sc.generator_weight(8).unwrap(), Weight(vec![1, 0]));
        // negative simple partners of X3, X5 are X4, X6
        assert_eq!(sc.negative_simple_indices(), vec![3, 5]);
    }
}
