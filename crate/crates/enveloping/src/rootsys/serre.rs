//! Generation of a Chevalley-style basis from a Cartan matrix.
//!
//! Positive roots are produced by closing the simple roots under root strings;
//! structure constants come from the classical extraspecial-pair construction:
//! the sign of N(eps,eta) is fixed to +(p+1) for every extraspecial pair
//! (deterministically, pairs ordered by height-then-lex), and all remaining
//! constants follow from the four-root identity
//! N(a,b)N(c,d) + N(b,c)N(a,d) + N(c,a)N(b,d) = 0 for a+b+c+d = 0.
//!
//! The output is only pinned up to isomorphism; the built-in tables remain the
//! authoritative fixtures for the rank-two algebras.

use super::{CartanMatrix, RootSystem, StructureConstants};
use crate::scalar::{rat, Rat};
use crate::{Error, Result};
use std::collections::{BTreeMap, HashMap, HashSet};

pub const MAX_RANK: usize = 8;

/// Generate the root system and a Chevalley basis from a valid Cartan matrix.
pub fn from_cartan(cm: &CartanMatrix) -> Result<(RootSystem, StructureConstants)> {
    let l = cm.rank();
    if l == 0 || l > MAX_RANK {
        return Err(Error::RankBound(l, MAX_RANK));
    }
    let sym = symmetrizer(cm)?;
    let positive = positive_roots(cm)?;
    let rs = RootSystem { cartan: cm.clone(), sym, positive };
    let sc = chevalley(&rs)?;
    Ok((rs, sc))
}

/// Minimal positive integers d with d_i a_ij = d_j a_ji.
fn symmetrizer(cm: &CartanMatrix) -> Result<Vec<i64>> {
    let l = cm.rank();
    let mut d: Vec<Option<Rat>> = vec![None; l];
    // propagate over the Dynkin graph, component by component
    for start in 0..l {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(rat(1));
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..l {
                if i == j || cm.entries[i][j] == 0 {
                    continue;
                }
                let want = d[i].clone().unwrap() * rat(cm.entries[i][j]) / rat(cm.entries[j][i]);
                match &d[j] {
                    Some(v) if *v == want => {}
                    Some(_) => return Err(Error::InvalidCartan("not symmetrizable".into())),
                    None => {
                        d[j] = Some(want);
                        stack.push(j);
                    }
                }
            }
        }
    }
    // scale to smallest integers
    let mut lcm_den: i64 = 1;
    for v in d.iter().flatten() {
        let den: i64 = v.denom().try_into().map_err(|_| Error::InvalidCartan("overflow".into()))?;
        lcm_den = num::integer::lcm(lcm_den, den);
    }
    let ints: Vec<i64> = d
        .iter()
        .map(|v| {
            let v = v.clone().unwrap() * rat(lcm_den);
            v.numer().try_into().unwrap()
        })
        .collect();
    let g = ints.iter().fold(0i64, |a, &b| num::integer::gcd(a, b));
    Ok(ints.iter().map(|v| v / g).collect())
}

/// Close the simple roots under addition using root strings.
fn positive_roots(cm: &CartanMatrix) -> Result<Vec<Vec<i64>>> {
    let l = cm.rank();
    let mut roots: HashSet<Vec<i64>> = HashSet::new();
    let mut by_height: Vec<Vec<Vec<i64>>> = vec![Vec::new()];
    let mut simple_layer = Vec::new();
    for i in 0..l {
        let mut r = vec![0i64; l];
        r[i] = 1;
        roots.insert(r.clone());
        simple_layer.push(r);
    }
    simple_layer.sort();
    by_height.push(simple_layer);
    loop {
        let h = by_height.len() - 1;
        let mut next: Vec<Vec<i64>> = Vec::new();
        for gamma in by_height[h].clone() {
            for i in 0..l {
                // p = max k with gamma - k alpha_i a root
                let mut p = 0i64;
                let mut probe = gamma.clone();
                loop {
                    probe[i] -= 1;
                    if probe.iter().all(|&c| c == 0) || roots.contains(&probe) {
                        if probe.iter().all(|&c| c == 0) {
                            // gamma = alpha_i itself; the string through 0 stops here
                            break;
                        }
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..l).map(|j| gamma[j] * cm.entries[i][j]).sum();
                let q = p - pairing;
                if q >= 1 {
                    let mut nr = gamma.clone();
                    nr[i] += 1;
                    if roots.insert(nr.clone()) {
                        next.push(nr);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort();
        next.dedup();
        by_height.push(next);
        if by_height.len() > 256 {
            return Err(Error::InvalidCartan("root generation did not terminate".into()));
        }
    }
    Ok(by_height.into_iter().flatten().collect())
}

struct NTable<'a> {
    rs: &'a RootSystem,
    pos_index: HashMap<Vec<i64>, usize>,
    /// canonical positive pairs (i, j) with root_i < root_j in the fixed order
    n: HashMap<(usize, usize), i64>,
}

impl<'a> NTable<'a> {
    fn is_root(&self, r: &[i64]) -> bool {
        if r.iter().all(|&c| c == 0) {
            return false;
        }
        if r.iter().all(|&c| c >= 0) {
            self.pos_index.contains_key(r)
        } else if r.iter().all(|&c| c <= 0) {
            let neg: Vec<i64> = r.iter().map(|c| -c).collect();
            self.pos_index.contains_key(&neg)
        } else {
            false
        }
    }

    fn is_positive(r: &[i64]) -> bool {
        r.iter().all(|&c| c >= 0) && r.iter().any(|&c| c > 0)
    }

    /// max k >= 0 with beta - k alpha in R
    fn string_down(&self, alpha: &[i64], beta: &[i64]) -> i64 {
        let mut p = 0;
        let mut probe: Vec<i64> = beta.to_vec();
        loop {
            for (x, a) in probe.iter_mut().zip(alpha) {
                *x -= a;
            }
            if self.is_root(&probe) {
                p += 1;
            } else {
                return p;
            }
        }
    }

    fn lookup_pos(&self, a: &[i64], b: &[i64]) -> i64 {
        let ia = self.pos_index[a];
        let ib = self.pos_index[b];
        if ia < ib {
            self.n[&(ia, ib)]
        } else {
            -self.n[&(ib, ia)]
        }
    }

    /// N(x, y) for arbitrary roots with x + y a root.
    fn eval(&self, x: &[i64], y: &[i64]) -> Rat {
        let sum: Vec<i64> = x.iter().zip(y).map(|(a, b)| a + b).collect();
        if !self.is_root(&sum) {
            return rat(0);
        }
        let xp = Self::is_positive(x);
        let yp = Self::is_positive(y);
        if xp && yp {
            return rat(self.lookup_pos(x, y));
        }
        if !xp && !yp {
            let nx: Vec<i64> = x.iter().map(|c| -c).collect();
            let ny: Vec<i64> = y.iter().map(|c| -c).collect();
            return -rat(self.lookup_pos(&nx, &ny));
        }
        // mixed signs: rotate with z = -(x+y); N(x,y) = (z,z)/(x,x) N(y,z)
        //                                            = (z,z)/(y,y) N(z,x)
        let z: Vec<i64> = sum.iter().map(|c| -c).collect();
        let zp = Self::is_positive(&z);
        let zz = rat(self.rs.inner(&z, &z));
        if yp == zp {
            let sub = self.eval_same_sign(y, &z);
            zz / rat(self.rs.inner(x, x)) * sub
        } else {
            let sub = self.eval_same_sign(&z, x);
            zz / rat(self.rs.inner(y, y)) * sub
        }
    }

    fn eval_same_sign(&self, a: &[i64], b: &[i64]) -> Rat {
        if Self::is_positive(a) {
            rat(self.lookup_pos(a, b))
        } else {
            let na: Vec<i64> = a.iter().map(|c| -c).collect();
            let nb: Vec<i64> = b.iter().map(|c| -c).collect();
            -rat(self.lookup_pos(&na, &nb))
        }
    }
}

fn chevalley(rs: &RootSystem) -> Result<StructureConstants> {
    let l = rs.rank();
    let npos = rs.positive.len();
    let pos_index: HashMap<Vec<i64>, usize> =
        rs.positive.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
    let mut table = NTable { rs, pos_index, n: HashMap::new() };

    // induction over positive roots in the fixed (height, lex) order
    for (gi, gamma) in rs.positive.iter().enumerate() {
        let height: i64 = gamma.iter().sum();
        if height < 2 {
            continue;
        }
        // all decompositions gamma = alpha + beta with alpha <= beta positive
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for (ai, alpha) in rs.positive.iter().enumerate() {
            if ai >= gi {
                break;
            }
            let beta: Vec<i64> = gamma.iter().zip(alpha).map(|(g, a)| g - a).collect();
            if let Some(&bi) = table.pos_index.get(&beta) {
                if ai <= bi {
                    pairs.push((ai, bi));
                }
            }
        }
        pairs.sort();
        let (e_i, e_j) = pairs[0]; // extraspecial: minimal alpha
        let eps = rs.positive[e_i].clone();
        let eta = rs.positive[e_j].clone();
        let p = table.string_down(&eps, &eta);
        table.n.insert((e_i, e_j), p + 1);
        for &(ai, bi) in pairs.iter().skip(1) {
            let alpha = &rs.positive[ai];
            let beta = &rs.positive[bi];
            // norm-weighted four-root identity on (eps, eta, -alpha, -beta):
            //   N(eps,eta) N(-a,-b)/(g,g) + N(eta,-a) N(eps,-b)/(eta-a)^2
            //     + N(-a,eps) N(eta,-b)/(eps-a)^2 = 0
            let neg_a: Vec<i64> = alpha.iter().map(|c| -c).collect();
            let neg_b: Vec<i64> = beta.iter().map(|c| -c).collect();
            let eta_a: Vec<i64> = eta.iter().zip(alpha).map(|(x, y)| x - y).collect();
            let eps_a: Vec<i64> = eps.iter().zip(alpha).map(|(x, y)| x - y).collect();
            let mut acc = rat(0);
            if table.is_root(&eta_a) {
                acc += table.eval(&eta, &neg_a) * table.eval(&eps, &neg_b)
                    / rat(rs.inner(&eta_a, &eta_a));
            }
            if table.is_root(&eps_a) {
                acc += table.eval(&neg_a, &eps) * table.eval(&eta, &neg_b)
                    / rat(rs.inner(&eps_a, &eps_a));
            }
            let val = acc * rat(rs.inner(gamma, gamma)) / rat(p + 1);
            if !val.denom().eq(&1.into()) {
                return Err(Error::InvalidCartan("non-integer structure constant".into()));
            }
            let vi: i64 = val.numer().try_into().map_err(|_| Error::InvalidCartan("overflow".into()))?;
            table.n.insert((ai, bi), vi);
        }
    }

    // assemble the algebra over the basis [H_1..H_l, E_1..E_N, F_1..F_N]
    let dim = l + 2 * npos;
    let mut labels = Vec::with_capacity(dim);
    for i in 0..l {
        labels.push(format!("H{}", i + 1));
    }
    for i in 0..npos {
        labels.push(format!("E{}", i + 1));
    }
    for i in 0..npos {
        labels.push(format!("F{}", i + 1));
    }
    let e_idx = |r: usize| l + r;
    let f_idx = |r: usize| l + npos + r;

    // coroot expansion: alpha^v = sum_j (2 m_j d_j / |alpha|^2) alpha_j^v
    let coroot = |alpha: &Vec<i64>| -> Result<Vec<(usize, Rat)>> {
        let a2 = rs.inner(alpha, alpha);
        let mut out = Vec::new();
        for (j, &m) in alpha.iter().enumerate() {
            if m == 0 {
                continue;
            }
            let c = rat(2 * m * rs.sym[j]) / rat(a2);
            if !c.denom().eq(&1.into()) {
                return Err(Error::InvalidCartan("non-integer coroot".into()));
            }
            out.push((j, c));
        }
        Ok(out)
    };

    let mut entries: BTreeMap<(usize, usize), Vec<(usize, Rat)>> = BTreeMap::new();
    let mut push = |i: usize, j: usize, v: Vec<(usize, Rat)>| {
        if v.is_empty() {
            return;
        }
        if i < j {
            entries.insert((i, j), v);
        } else {
            entries.insert((j, i), v.into_iter().map(|(k, c)| (k, -c)).collect());
        }
    };

    // [H_i, E/F]
    for i in 0..l {
        for (r, alpha) in rs.positive.iter().enumerate() {
            let c = rs.pairing_with_simple_coroot(alpha, i);
            if c != 0 {
                push(i, e_idx(r), vec![(e_idx(r), rat(c))]);
                push(i, f_idx(r), vec![(f_idx(r), rat(-c))]);
            }
        }
    }
    // [E_a, E_b], [F_a, F_b], [E_a, F_b]
    for a in 0..npos {
        let ra = &rs.positive[a];
        for b in 0..npos {
            let rb = &rs.positive[b];
            if a < b {
                let sum: Vec<i64> = ra.iter().zip(rb).map(|(x, y)| x + y).collect();
                if let Some(&s) = table.pos_index.get(&sum) {
                    let nv = table.eval(ra, rb);
                    push(e_idx(a), e_idx(b), vec![(e_idx(s), nv.clone())]);
                    // [F_a, F_b] = N(-a,-b) F_{a+b} = -N(a,b) F_{a+b}
                    push(f_idx(a), f_idx(b), vec![(f_idx(s), -nv)]);
                }
            }
            if a == b {
                push(e_idx(a), f_idx(a), coroot(ra)?);
            } else {
                let diff: Vec<i64> = ra.iter().zip(rb).map(|(x, y)| x - y).collect();
                if table.is_root(&diff) {
                    let nrb: Vec<i64> = rb.iter().map(|c| -c).collect();
                    let nv = table.eval(ra, &nrb);
                    if NTable::is_positive(&diff) {
                        let s = table.pos_index[&diff];
                        push(e_idx(a), f_idx(b), vec![(e_idx(s), nv)]);
                    } else {
                        let neg: Vec<i64> = diff.iter().map(|c| -c).collect();
                        let s = table.pos_index[&neg];
                        push(e_idx(a), f_idx(b), vec![(f_idx(s), nv)]);
                    }
                }
            }
        }
    }

    let simple_idx: Vec<usize> = (0..l)
        .map(|i| {
            let mut r = vec![0i64; l];
            r[i] = 1;
            e_idx(table.pos_index[&r])
        })
        .collect();
    let nilrad: Vec<usize> = (0..npos).map(e_idx).collect();
    let name = format!("serre-{:?}{}", rs.cartan.series, l);
    Ok(StructureConstants::new(
        &name,
        labels,
        l,
        (0..l).collect(),
        nilrad,
        simple_idx,
        entries.into_iter().map(|((i, j), v)| (i, j, v)).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::SeriesTag;

    #[test]
    fn a1_is_sl2() {
        let cm = CartanMatrix::new(vec![vec![2]], SeriesTag::A).unwrap();
        let (rs, sc) = from_cartan(&cm).unwrap();
        assert_eq!(rs.positive.len(), 1);
        assert_eq!(sc.dim(), 3);
        // [X,Y] = H, [H,X] = 2X
        assert_eq!(sc.bracket(1, 2), vec![(0, rat(1))]);
        assert_eq!(sc.bracket(0, 1), vec![(1, rat(2))]);
        assert!(sc.verify_jacobi().passed());
    }

    #[test]
    fn positive_root_counts() {
        for (series, rank, want) in [
            (SeriesTag::A, 2, 3),
            (SeriesTag::A, 3, 6),
            (SeriesTag::B, 2, 4),
            (SeriesTag::B, 3, 9),
            (SeriesTag::C, 3, 9),
            (SeriesTag::D, 4, 12),
            (SeriesTag::G2, 2, 6),
            (SeriesTag::F4, 4, 24),
        ] {
            let cm = CartanMatrix::standard(series, rank).unwrap();
            let (rs, sc) = from_cartan(&cm).unwrap();
            assert_eq!(rs.positive.len(), want, "{series:?}{rank}");
            // |R+| = (dim - l)/2
            assert_eq!(rs.positive.len(), (sc.dim() - rank) / 2);
        }
    }

    #[test]
    fn g2_positive_roots_match_paper() {
        let cm = CartanMatrix::standard(SeriesTag::G2, 2).unwrap();
        let (rs, sc) = from_cartan(&cm).unwrap();
        let want: Vec<Vec<i64>> = vec![
            vec![1, 0],
            vec![0, 1],
            vec![1, 1],
            vec![2, 1],
            vec![3, 1],
            vec![3, 2],
        ];
        let mut got = rs.positive.clone();
        got.sort();
        let mut want_s = want.clone();
        want_s.sort();
        assert_eq!(got, want_s);
        assert_eq!(sc.dim(), 14);
        assert!(sc.verify_jacobi().passed());
    }

    #[test]
    fn jacobi_holds_for_generated_algebras() {
        for (series, rank) in [
            (SeriesTag::A, 3),
            (SeriesTag::B, 3),
            (SeriesTag::C, 3),
            (SeriesTag::D, 4),
            (SeriesTag::G2, 2),
        ] {
            let cm = CartanMatrix::standard(series, rank).unwrap();
            let (_, sc) = from_cartan(&cm).unwrap();
            let rep = sc.verify_jacobi();
            assert!(rep.passed(), "{series:?}{rank}: {:?}", rep.violations.first());
        }
    }

    #[test]
    fn serre_relations_hold() {
        for (series, rank) in [(SeriesTag::A, 2), (SeriesTag::B, 2), (SeriesTag::G2, 2)] {
            let cm = CartanMatrix::standard(series, rank).unwrap();
            let (_, sc) = from_cartan(&cm).unwrap();
            let bad = sc.verify_serre(&cm);
            assert!(bad.is_empty(), "{series:?}{rank}: {bad:?}");
        }
    }
}
