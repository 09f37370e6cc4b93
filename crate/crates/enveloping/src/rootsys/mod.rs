//! Lie-algebra data: Cartan matrices, root systems and structure constants,
//! either generated from the Serre presentation or loaded from the built-in
//! rank-two tables.

mod builtin;
mod serre;

pub use builtin::builtin_algebra;
pub use serre::from_cartan;

use crate::scalar::{rat, rat_from_str, rat_to_string, Rat};
use crate::{Error, Result};
use num::Zero;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

/// Integer weight vector: eigenvalues under the fixed Cartan generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }
}

impl std::fmt::Display for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({})",
            self.0.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

/// Series tag of a simple Lie algebra (or a custom Cartan matrix).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SeriesTag {
    A,
    B,
    C,
    D,
    G2,
    F4,
    E6,
    E7,
    E8,
    Custom,
}

impl SeriesTag {
    pub fn parse(s: &str) -> Option<SeriesTag> {
        Some(match s.to_ascii_uppercase().as_str() {
            "A" => SeriesTag::A,
            "B" => SeriesTag::B,
            "C" => SeriesTag::C,
            "D" => SeriesTag::D,
            "G" | "G2" => SeriesTag::G2,
            "F" | "F4" => SeriesTag::F4,
            "E6" => SeriesTag::E6,
            "E7" => SeriesTag::E7,
            "E8" => SeriesTag::E8,
            _ => return None,
        })
    }
}

/// An integer Cartan matrix with its series tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    pub entries: Vec<Vec<i64>>,
    pub series: SeriesTag,
}

impl CartanMatrix {
    pub fn new(entries: Vec<Vec<i64>>, series: SeriesTag) -> Result<Self> {
        let l = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != l {
                return Err(Error::InvalidCartan("matrix is not square".into()));
            }
            if row[i] != 2 {
                return Err(Error::InvalidCartan(format!("diagonal entry ({i},{i}) is not 2")));
            }
            for (j, &v) in row.iter().enumerate() {
                if i != j && !(-3..=0).contains(&v) {
                    return Err(Error::InvalidCartan(format!(
                        "off-diagonal entry ({i},{j}) = {v} outside {{0,-1,-2,-3}}"
                    )));
                }
                if i != j && ((v == 0) != (entries[j][i] == 0)) {
                    return Err(Error::InvalidCartan(format!(
                        "zero pattern not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        Ok(CartanMatrix { entries, series })
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// Standard Cartan matrix of a named series. Convention: `entries[i][j]` is
    /// the eigenvalue of the simple generator X_j under H_i.
    pub fn standard(series: SeriesTag, rank: usize) -> Result<Self> {
        let l = rank;
        let mut m = vec![vec![0i64; l]; l];
        for i in 0..l {
            m[i][i] = 2;
        }
        let chain = |m: &mut Vec<Vec<i64>>| {
            for i in 0..l - 1 {
                m[i][i + 1] = -1;
                m[i + 1][i] = -1;
            }
        };
        match series {
            SeriesTag::A => {
                if l < 1 {
                    return Err(Error::SeriesRange(series, l));
                }
                if l > 1 {
                    chain(&mut m);
                }
            }
            SeriesTag::B => {
                // short root last: <alpha_l, alpha_{l-1}^v> = -2
                if l < 2 {
                    return Err(Error::SeriesRange(series, l));
                }
                chain(&mut m);
                m[l - 2][l - 1] = -2;
            }
            SeriesTag::C => {
                if l < 2 {
                    return Err(Error::SeriesRange(series, l));
                }
                chain(&mut m);
                m[l - 1][l - 2] = -2;
                m[l - 2][l - 1] = -1;
            }
            SeriesTag::D => {
                if l < 3 {
                    return Err(Error::SeriesRange(series, l));
                }
                for i in 0..l - 2 {
                    m[i][i + 1] = -1;
                    m[i + 1][i] = -1;
                }
                m[l - 3][l - 1] = -1;
                m[l - 1][l - 3] = -1;
            }
            SeriesTag::G2 => {
                if l != 2 {
                    return Err(Error::SeriesRange(series, l));
                }
                // alpha_1 short, alpha_2 long: <alpha_2, alpha_1^v> = -3
                m[0][1] = -3;
                m[1][0] = -1;
            }
            SeriesTag::F4 => {
                if l != 4 {
                    return Err(Error::SeriesRange(series, l));
                }
                chain(&mut m);
                m[1][2] = -2;
            }
            SeriesTag::E6 | SeriesTag::E7 | SeriesTag::E8 => {
                let need = match series {
                    SeriesTag::E6 => 6,
                    SeriesTag::E7 => 7,
                    _ => 8,
                };
                if l != need {
                    return Err(Error::SeriesRange(series, l));
                }
                // Bourbaki numbering: node 2 attaches to node 4 of the chain 1-3-4-5-...
                for i in 0..l {
                    for j in 0..l {
                        m[i][j] = if i == j { 2 } else { 0 };
                    }
                }
                let edges: Vec<(usize, usize)> = match l {
                    6 => vec![(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)],
                    7 => vec![(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)],
                    _ => vec![(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)],
                };
                for (a, b) in edges {
                    m[a - 1][b - 1] = -1;
                    m[b - 1][a - 1] = -1;
                }
            }
            SeriesTag::Custom => return Err(Error::SeriesRange(series, l)),
        }
        CartanMatrix::new(m, series)
    }
}

/// Root system data: simple roots (as unit coordinate vectors in the simple-root
/// basis), positive roots as nonnegative integer combinations, highest root.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub cartan: CartanMatrix,
    /// symmetrizer d_i with d_i a_ij = d_j a_ji; (alpha_i, alpha_i) = 2 d_i
    pub sym: Vec<i64>,
    /// positive roots in simple-root coordinates, ordered by (height, lex)
    pub positive: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn highest_root(&self) -> &Vec<i64> {
        self.positive.last().expect("nonempty root system")
    }

    /// (beta, alpha_i^v) = sum_j beta_j a_ij
    pub fn pairing_with_simple_coroot(&self, beta: &[i64], i: usize) -> i64 {
        beta.iter()
            .enumerate()
            .map(|(j, &b)| b * self.cartan.entries[i][j])
            .sum()
    }

    /// Inner product (beta, gamma) from the symmetrized Cartan matrix.
    pub fn inner(&self, beta: &[i64], gamma: &[i64]) -> i64 {
        let mut s = 0;
        for (i, &b) in beta.iter().enumerate() {
            for (j, &g) in gamma.iter().enumerate() {
                s += b * g * self.sym[i] * self.cartan.entries[i][j];
            }
        }
        s
    }
}

type BracketMap = HashMap<(u16, u16), Vec<(u16, Rat)>>;

/// Structure constants of a Lie algebra over a fixed ordered basis, with the
/// designated index sets used throughout the crate.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    pub name: String,
    pub labels: Vec<String>,
    pub rank: usize,
    pub cartan_indices: Vec<usize>,
    pub nilradical_indices: Vec<usize>,
    pub simple_root_indices: Vec<usize>,
    /// sparse brackets for i < j; antisymmetry supplies the rest
    brackets: BracketMap,
    weights: Vec<Option<Weight>>,
}

impl StructureConstants {
    pub fn new(
        name: &str,
        labels: Vec<String>,
        rank: usize,
        cartan_indices: Vec<usize>,
        nilradical_indices: Vec<usize>,
        simple_root_indices: Vec<usize>,
        entries: Vec<(usize, usize, Vec<(usize, Rat)>)>,
    ) -> Self {
        let mut brackets: BracketMap = HashMap::new();
        for (i, j, v) in entries {
            assert!(i < j, "bracket entries must be given for i < j");
            let v: Vec<(u16, Rat)> = v
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k as u16, c))
                .collect();
            if !v.is_empty() {
                brackets.insert((i as u16, j as u16), v);
            }
        }
        let mut sc = StructureConstants {
            name: name.to_string(),
            labels,
            rank,
            cartan_indices,
            nilradical_indices,
            simple_root_indices,
            brackets,
            weights: Vec::new(),
        };
        sc.weights = (0..sc.dim()).map(|i| sc.compute_weight(i).ok()).collect();
        sc
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// [X_i, X_j] as a sparse vector of basis coefficients.
    pub fn bracket(&self, i: usize, j: usize) -> Vec<(u16, Rat)> {
        if i == j {
            return Vec::new();
        }
        if i < j {
            self.brackets.get(&(i as u16, j as u16)).cloned().unwrap_or_default()
        } else {
            self.brackets
                .get(&(j as u16, i as u16))
                .map(|v| v.iter().map(|(k, c)| (*k, -c.clone())).collect())
                .unwrap_or_default()
        }
    }

    fn compute_weight(&self, i: usize) -> Result<Weight> {
        let mut w = Vec::with_capacity(self.cartan_indices.len());
        for &h in &self.cartan_indices {
            let b = self.bracket(h, i);
            let mut eig = Rat::zero();
            for (k, c) in &b {
                if *k as usize == i {
                    eig = c.clone();
                } else if !c.is_zero() {
                    return Err(Error::NotWeightVector(self.labels[i].clone()));
                }
            }
            if !eig.denom().eq(&1.into()) {
                return Err(Error::NotWeightVector(self.labels[i].clone()));
            }
            let n: i64 = eig.numer().try_into().map_err(|_| Error::NotWeightVector(self.labels[i].clone()))?;
            w.push(n);
        }
        Ok(Weight(w))
    }

    /// Weight of a non-Cartan basis generator under the Cartan generators.
    pub fn generator_weight(&self, i: usize) -> Result<Weight> {
        self.weights[i]
            .clone()
            .ok_or_else(|| Error::NotWeightVector(self.labels[i].clone()))
    }

    /// Index of the label, if present.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Negative partners of the simple-root generators, located by weight.
    pub fn negative_simple_indices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for &s in &self.simple_root_indices {
            let w = self.weights[s].as_ref().expect("simple generator has a weight").neg();
            if let Some(i) = (0..self.dim()).find(|&i| i != s && self.weights[i].as_ref() == Some(&w)) {
                out.push(i);
            }
        }
        out
    }

    /// Exhaustive antisymmetry + Jacobi check over all index triples.
    pub fn verify_jacobi(&self) -> JacobiReport {
        let n = self.dim();
        let mut violations = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let mut acc: BTreeMap<u16, Rat> = BTreeMap::new();
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (l, cl) in self.bracket(a, b) {
                            for (m, cm) in self.bracket(l as usize, c) {
                                let e = acc.entry(m).or_insert_with(Rat::zero);
                                *e += cl.clone() * cm;
                            }
                        }
                    }
                    acc.retain(|_, v| !v.is_zero());
                    if !acc.is_empty() {
                        violations.push(JacobiViolation {
                            triple: (i, j, k),
                            residual: acc
                                .into_iter()
                                .map(|(m, v)| (self.labels[m as usize].clone(), rat_to_string(&v)))
                                .collect(),
                        });
                    }
                }
            }
        }
        JacobiReport { dim: n, violations }
    }

    /// Serre relations for a generated algebra: ad(X_i)^{1-n(i,j)} X_j = 0 etc.
    /// Checked directly through iterated brackets.
    pub fn verify_serre(&self, cm: &CartanMatrix) -> Vec<String> {
        let l = cm.rank();
        let mut bad = Vec::new();
        let h = &self.cartan_indices;
        let x = &self.simple_root_indices;
        let y = self.negative_simple_indices();
        let ad = |g: usize, v: &BTreeMap<u16, Rat>| -> BTreeMap<u16, Rat> {
            let mut out: BTreeMap<u16, Rat> = BTreeMap::new();
            for (k, c) in v {
                for (m, cm_) in self.bracket(g, *k as usize) {
                    let e = out.entry(m).or_insert_with(Rat::zero);
                    *e += c.clone() * cm_;
                }
            }
            out.retain(|_, v| !v.is_zero());
            out
        };
        let single = |i: usize| BTreeMap::from([(i as u16, rat(1))]);
        for i in 0..l {
            for j in 0..l {
                // [H_i, H_j] = 0
                if !self.bracket(h[i], h[j]).is_empty() {
                    bad.push(format!("[H{},H{}] != 0", i + 1, j + 1));
                }
                // [H_i, X_j] = n(i,j) X_j
                let b = self.bracket(h[i], x[j]);
                let want = cm.entries[i][j];
                let ok = b.len() <= 1
                    && b.iter().all(|(k, c)| *k as usize == x[j] && *c == rat(want))
                    && (want != 0 || b.is_empty());
                if !ok {
                    bad.push(format!("[H{},X{}] != n({},{}) X{}", i + 1, j + 1, i + 1, j + 1, j + 1));
                }
                // [X_i, Y_j] = delta_ij H_i
                let b = self.bracket(x[i], y[j]);
                if i == j {
                    let ok = b.len() == 1 && b[0].0 as usize == h[i] && b[0].1 == rat(1);
                    if !ok {
                        bad.push(format!("[X{},Y{}] != H{}", i + 1, j + 1, i + 1));
                    }
                } else if !b.is_empty() {
                    bad.push(format!("[X{},Y{}] != 0", i + 1, j + 1));
                }
                // ad(X_i)^{1-n(i,j)} X_j = 0 and the Y twin
                if i != j {
                    let pow = (1 - cm.entries[i][j]) as usize;
                    let mut v = single(x[j]);
                    for _ in 0..pow {
                        v = ad(x[i], &v);
                    }
                    if !v.is_empty() {
                        bad.push(format!("ad(X{})^{} X{} != 0", i + 1, pow, j + 1));
                    }
                    let mut v = single(y[j]);
                    for _ in 0..pow {
                        v = ad(y[i], &v);
                    }
                    if !v.is_empty() {
                        bad.push(format!("ad(Y{})^{} Y{} != 0", i + 1, pow, j + 1));
                    }
                }
            }
        }
        bad
    }

    pub fn to_schema(&self) -> AlgebraSchema {
        let mut brackets: Vec<(usize, usize, Vec<(usize, String)>)> = self
            .brackets
            .iter()
            .map(|((i, j), v)| {
                (
                    *i as usize,
                    *j as usize,
                    v.iter().map(|(k, c)| (*k as usize, rat_to_string(c))).collect(),
                )
            })
            .collect();
        brackets.sort();
        AlgebraSchema {
            name: self.name.clone(),
            dim: self.dim(),
            rank: self.rank,
            basis: self.labels.clone(),
            cartan_indices: self.cartan_indices.clone(),
            nilradical_indices: self.nilradical_indices.clone(),
            simple_root_indices: self.simple_root_indices.clone(),
            brackets,
        }
    }

    pub fn from_schema(s: AlgebraSchema) -> Result<Self> {
        let mut entries = Vec::new();
        for (i, j, v) in s.brackets {
            let mut row = Vec::new();
            for (k, c) in v {
                let c = rat_from_str(&c).ok_or_else(|| Error::Parse(format!("bad rational `{c}`")))?;
                row.push((k, c));
            }
            entries.push((i, j, row));
        }
        Ok(StructureConstants::new(
            &s.name,
            s.basis,
            s.rank,
            s.cartan_indices,
            s.nilradical_indices,
            s.simple_root_indices,
            entries,
        ))
    }
}

/// JSON schema for algebra files: rationals as decimal-free `p/q` strings.
#[derive(Debug, Serialize, Deserialize)]
pub struct AlgebraSchema {
    pub name: String,
    pub dim: usize,
    pub rank: usize,
    pub basis: Vec<String>,
    pub cartan_indices: Vec<usize>,
    pub nilradical_indices: Vec<usize>,
    pub simple_root_indices: Vec<usize>,
    pub brackets: Vec<(usize, usize, Vec<(usize, String)>)>,
}

#[derive(Debug, Serialize)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub residual: Vec<(String, String)>,
}

#[derive(Debug, Serialize)]
pub struct JacobiReport {
    pub dim: usize,
    pub violations: Vec<JacobiViolation>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_additivity_builtin() {
        for tag in ["d2", "a2", "b2", "g2"] {
            let sc = builtin_algebra(tag).unwrap();
            let cartan: Vec<usize> = sc.cartan_indices.clone();
            for i in 0..sc.dim() {
                for j in 0..sc.dim() {
                    if cartan.contains(&i) || cartan.contains(&j) {
                        continue;
                    }
                    let wi = sc.generator_weight(i).unwrap();
                    let wj = sc.generator_weight(j).unwrap();
                    for (k, _) in sc.bracket(i, j) {
                        if cartan.contains(&(k as usize)) {
                            continue;
                        }
                        let wk = sc.generator_weight(k as usize).unwrap();
                        assert_eq!(wk, wi.add(&wj), "{} in [{},{}]", sc.labels[k as usize], sc.labels[i], sc.labels[j]);
                    }
                }
            }
        }
    }

    #[test]
    fn sign_flip_breaks_jacobi() {
        let sc = builtin_algebra("g2").unwrap();
        let mut broken = sc.clone();
        // flip one sign: [X3,X4] = X1 -> -X1
        let key = (2u16, 3u16);
        let v = broken.brackets.get_mut(&key).unwrap();
        v[0].1 = -v[0].1.clone();
        let rep = broken.verify_jacobi();
        assert!(!rep.passed());
        assert!(rep.violations.iter().any(|v| v.triple.0 == 2 || v.triple.1 == 2));
    }

    #[test]
    fn schema_round_trip() {
        let sc = builtin_algebra("b2").unwrap();
        let s = sc.to_schema();
        let json = serde_json::to_string(&s).unwrap();
        let back: AlgebraSchema = serde_json::from_str(&json).unwrap();
        let sc2 = StructureConstants::from_schema(back).unwrap();
        assert_eq!(sc.labels, sc2.labels);
        for i in 0..sc.dim() {
            for j in 0..sc.dim() {
                assert_eq!(sc.bracket(i, j), sc2.bracket(i, j));
            }
        }
    }
}
