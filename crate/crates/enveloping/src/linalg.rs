//! Sparse exact linear algebra over the rationals: reduced row echelon form,
//! nullspace and rank. Deterministic: for a fixed column order the RREF is
//! unique, so every solver output is reproducible bit for bit.

use crate::scalar::Rat;
use num::Zero;
use std::collections::BTreeMap;

/// Sparse row vector: strictly increasing column indices, no zero entries.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SparseVec(pub Vec<(u32, Rat)>);

impl SparseVec {
    pub fn from_map(m: BTreeMap<u32, Rat>) -> Self {
        SparseVec(m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
    }

    pub fn leading(&self) -> Option<u32> {
        self.0.first().map(|(c, _)| *c)
    }

    pub fn get(&self, col: u32) -> Option<&Rat> {
        self.0
            .binary_search_by_key(&col, |(c, _)| *c)
            .ok()
            .map(|i| &self.0[i].1)
    }

    pub fn scale(&mut self, f: &Rat) {
        for (_, v) in &mut self.0 {
            *v *= f;
        }
    }

    /// self -= f * other, merging sparse entries.
    pub fn axpy(&mut self, f: &Rat, other: &SparseVec) {
        if f.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            match (self.0.get(i), other.0.get(j)) {
                (Some((ci, _)), Some((cj, vj))) if cj < ci => {
                    out.push((*cj, -(f.clone() * vj)));
                    j += 1;
                }
                (Some((ci, vi)), Some((cj, vj))) if ci == cj => {
                    let v = vi - f.clone() * vj;
                    if !v.is_zero() {
                        out.push((*ci, v));
                    }
                    i += 1;
                    j += 1;
                }
                (Some(_), _) => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                (None, Some((cj, vj))) => {
                    out.push((*cj, -(f.clone() * vj)));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        self.0 = out;
    }
}

/// Row echelon state with pivot bookkeeping.
pub struct Echelon {
    /// pivot column -> normalized row (pivot entry 1)
    pivots: BTreeMap<u32, SparseVec>,
}

impl Default for Echelon {
    fn default() -> Self {
        Self::new()
    }
}

impl Echelon {
    pub fn new() -> Self {
        Echelon { pivots: BTreeMap::new() }
    }

    /// Reduce a row against the current pivots; if a nonzero remainder is left,
    /// install it as a new pivot and return its column.
    pub fn insert(&mut self, mut row: SparseVec) -> Option<u32> {
        loop {
            let lead = match row.leading() {
                Some(c) => c,
                None => return None,
            };
            match self.pivots.get(&lead) {
                Some(p) => {
                    let f = row.0[0].1.clone();
                    row.axpy(&f, p);
                }
                None => {
                    let inv = {
                        let lv = &row.0[0].1;
                        Rat::new(lv.denom().clone(), lv.numer().clone())
                    };
                    row.scale(&inv);
                    self.pivots.insert(lead, row);
                    return Some(lead);
                }
            }
        }
    }

    /// Reduce a row fully without installing it; returns the remainder.
    pub fn reduce(&self, mut row: SparseVec) -> SparseVec {
        loop {
            let lead = match row.leading() {
                Some(c) => c,
                None => return row,
            };
            match self.pivots.get(&lead) {
                Some(p) => {
                    let f = row.0[0].1.clone();
                    row.axpy(&f, p);
                }
                None => return row,
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_cols(&self) -> Vec<u32> {
        self.pivots.keys().copied().collect()
    }

    /// Back-substitute to full reduced row echelon form.
    pub fn into_rref(mut self) -> BTreeMap<u32, SparseVec> {
        let cols: Vec<u32> = self.pivots.keys().copied().collect();
        for &c in cols.iter().rev() {
            let row = self.pivots.remove(&c).unwrap();
            for (_, other) in self.pivots.iter_mut() {
                if let Some(f) = other.get(c).cloned() {
                    other.axpy(&f, &row);
                }
            }
            self.pivots.insert(c, row);
        }
        self.pivots
    }
}

/// Rank of a sparse matrix given by rows.
pub fn rank(rows: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut ech = Echelon::new();
    for r in rows {
        ech.insert(r);
    }
    ech.rank()
}

/// Nullspace basis of the column space: all x with A x = 0, where `rows` are the
/// rows of A over `ncols` columns. The result is itself in reduced echelon form
/// with respect to the column order (each vector has leading coefficient 1 on a
/// distinct free column), so the basis is deterministic.
pub fn nullspace(rows: impl IntoIterator<Item = SparseVec>, ncols: u32) -> Vec<SparseVec> {
    let mut ech = Echelon::new();
    for r in rows {
        ech.insert(r);
    }
    let rref = ech.into_rref();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if rref.contains_key(&free) {
            continue;
        }
        let mut v: Vec<(u32, Rat)> = vec![(free, Rat::from_integer(1.into()))];
        for (pc, row) in rref.iter() {
            if let Some(coef) = row.get(free) {
                v.push((*pc, -coef.clone()));
            }
        }
        v.sort_by_key(|(c, _)| *c);
        basis.push(SparseVec(v));
    }
    basis
}

/// Reduced echelon basis of the span of the given vectors (deterministic
/// canonical form: pivot on the smallest column index, pivot coefficient 1).
pub fn echelon_basis(vecs: impl IntoIterator<Item = SparseVec>) -> Vec<SparseVec> {
    let mut ech = Echelon::new();
    for v in vecs {
        ech.insert(v);
    }
    ech.into_rref().into_values().collect()
}

/// Express `target` in the span of `basis` (columns): returns coefficients per
/// basis vector, or None if the target is outside the span.
pub fn solve_in_span(basis: &[SparseVec], target: &SparseVec) -> Option<Vec<Rat>> {
    // Build the augmented system column-wise: unknowns are the coefficients.
    // Row r of the system: sum_j basis[j][r] * x_j = target[r].
    let mut rows: BTreeMap<u32, Vec<(u32, Rat)>> = BTreeMap::new();
    for (j, b) in basis.iter().enumerate() {
        for (r, v) in &b.0 {
            rows.entry(*r).or_default().push((j as u32, v.clone()));
        }
    }
    for (r, v) in &target.0 {
        rows.entry(*r)
            .or_default()
            .push((basis.len() as u32, v.clone()));
    }
    let mut ech = Echelon::new();
    for (_, mut row) in rows {
        row.sort_by_key(|(c, _)| *c);
        ech.insert(SparseVec(row));
    }
    let rref = ech.into_rref();
    // Inconsistent iff a pivot sits on the augmented column.
    if rref.contains_key(&(basis.len() as u32)) {
        return None;
    }
    // [A | b] (x, -1)^T = 0: with free unknowns zero, x_pivot equals the
    // augmented entry of its reduced row
    let mut coeffs = vec![Rat::zero(); basis.len()];
    for (pc, row) in rref {
        if let Some(v) = row.get(basis.len() as u32) {
            coeffs[pc as usize] = v.clone();
        }
    }
    Some(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn sv(entries: &[(u32, i64)]) -> SparseVec {
        SparseVec(entries.iter().map(|(c, v)| (*c, rat(*v))).collect())
    }

    #[test]
    fn rank_and_nullspace() {
        // x + y + z = 0 ; x - y = 0  -> nullspace spanned by (1, 1, -2)
        let rows = vec![sv(&[(0, 1), (1, 1), (2, 1)]), sv(&[(0, 1), (1, -1)])];
        assert_eq!(rank(rows.clone()), 2);
        let ns = nullspace(rows, 3);
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        // leading coefficient on the free column (2) is 1
        assert_eq!(v.get(2).unwrap(), &rat(1));
        assert_eq!(v.get(0).unwrap(), &(rat(-1) / rat(2)));
        assert_eq!(v.get(1).unwrap(), &(rat(-1) / rat(2)));
    }

    #[test]
    fn span_membership() {
        let basis = vec![sv(&[(0, 1), (1, 2)]), sv(&[(1, 1), (2, 1)])];
        let t = sv(&[(0, 2), (1, 5), (2, 1)]);
        let c = solve_in_span(&basis, &t).unwrap();
        assert_eq!(c, vec![rat(2), rat(1)]);
        assert!(solve_in_span(&basis, &sv(&[(3, 1)])).is_none());
    }
}
