//! Incremental exact elimination over sparse integer rows.
//!
//! Equations are streamed in one at a time and reduced against the pivot
//! rows collected so far. Arithmetic is fraction-free: rows are kept as
//! primitive integer vectors (content 1, positive leading coefficient) and
//! a reduction step combines two rows by cross-multiplication followed by a
//! content gcd, so no rational division happens until the final
//! normalization pass. This is what keeps the n^4-scale cocycle systems
//! tractable.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::Scalar;

/// Sparse integer row: strictly increasing column indices, nonzero entries.
pub type IntRow = Vec<(usize, BigInt)>;
/// Sparse rational row, same layout.
pub type RatRow = Vec<(usize, Scalar)>;

#[derive(Debug, Clone, Default)]
pub struct Eliminator {
    rows: Vec<IntRow>,
    /// leading column -> index into `rows`
    pivots: BTreeMap<usize, usize>,
}

impl Eliminator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    /// Insert one equation given as (column, coefficient) terms in any
    /// order, possibly with repeats; returns true if it increased the rank.
    pub fn insert(&mut self, terms: Vec<(usize, BigInt)>) -> bool {
        let Some(mut row) = collect_int_row(terms) else {
            return false;
        };
        loop {
            let lead = row[0].0;
            match self.pivots.get(&lead) {
                Some(&idx) => {
                    row = combine(&row, &self.rows[idx]);
                    if row.is_empty() {
                        return false;
                    }
                }
                None => break,
            }
        }
        normalize_content(&mut row);
        self.pivots.insert(row[0].0, self.rows.len());
        self.rows.push(row);
        true
    }

    /// Insert a rational equation; denominators are cleared first.
    pub fn insert_rational(&mut self, terms: &[(usize, Scalar)]) -> bool {
        self.insert(clear_denominators(terms))
    }

    /// Does the vector lie in the row space collected so far?
    pub fn reduces_to_zero(&self, terms: &[(usize, Scalar)]) -> bool {
        let Some(mut row) = collect_int_row(clear_denominators(terms)) else {
            return true;
        };
        loop {
            let lead = row[0].0;
            match self.pivots.get(&lead) {
                Some(&idx) => {
                    row = combine(&row, &self.rows[idx]);
                    if row.is_empty() {
                        return true;
                    }
                }
                None => return false,
            }
        }
    }

    /// The unique reduced row-echelon form of the row space, as rational
    /// rows with leading coefficient 1, ordered by pivot column.
    pub fn rref_rows(&self) -> Vec<RatRow> {
        let mut rows: Vec<RatRow> = Vec::with_capacity(self.rows.len());
        for &idx in self.pivots.values() {
            let r = &self.rows[idx];
            let lead = Scalar::from_integer(r[0].1.clone());
            rows.push(
                r.iter()
                    .map(|(c, v)| (*c, Scalar::from_integer(v.clone()) / &lead))
                    .collect(),
            );
        }
        // Back-substitution: rows are sorted by pivot column, and a later
        // row never has support at an earlier pivot, so sweeping from the
        // bottom leaves every pivot column clean.
        for i in (0..rows.len()).rev() {
            let pivot_col = rows[i][0].0;
            let pivot_row = rows[i].clone();
            for j in 0..i {
                if let Ok(pos) = rows[j].binary_search_by_key(&pivot_col, |(c, _)| *c) {
                    let coeff = -rows[j][pos].1.clone();
                    rows[j] = axpy(&rows[j], &coeff, &pivot_row);
                }
            }
        }
        rows
    }

    /// Basis of the nullspace of the inserted system, restricted to
    /// `cols` unknowns, as sparse rational rows (one per free column, in
    /// ascending column order). Not canonicalized.
    pub fn nullspace_rows(&self, cols: usize) -> Vec<RatRow> {
        let rref = self.rref_rows();
        let mut out = Vec::with_capacity(cols - rref.len());
        let mut rref_iter_cols: Vec<usize> = rref.iter().map(|r| r[0].0).collect();
        debug_assert!(rref_iter_cols.iter().all(|&c| c < cols));
        rref_iter_cols.sort_unstable();
        let mut is_pivot = vec![false; cols];
        for &c in &rref_iter_cols {
            is_pivot[c] = true;
        }
        for free in (0..cols).filter(|&c| !is_pivot[c]) {
            let mut v: RatRow = Vec::new();
            for row in &rref {
                if let Ok(pos) = row.binary_search_by_key(&free, |(c, _)| *c) {
                    v.push((row[0].0, -row[pos].1.clone()));
                }
            }
            v.push((free, Scalar::one()));
            v.sort_by_key(|(c, _)| *c);
            out.push(v);
        }
        out
    }
}

/// `dst + c * src` on sorted sparse rational rows, dropping zeros.
pub fn axpy(dst: &[(usize, Scalar)], c: &Scalar, src: &[(usize, Scalar)]) -> RatRow {
    if c.is_zero() {
        return dst.to_vec();
    }
    let mut out = Vec::with_capacity(dst.len() + src.len());
    let (mut i, mut j) = (0, 0);
    while i < dst.len() || j < src.len() {
        match (dst.get(i), src.get(j)) {
            (Some((ci, vi)), Some((cj, vj))) if ci == cj => {
                let v = vi + c * vj;
                if !v.is_zero() {
                    out.push((*ci, v));
                }
                i += 1;
                j += 1;
            }
            (Some((ci, vi)), Some((cj, _))) if ci < cj => {
                out.push((*ci, vi.clone()));
                i += 1;
            }
            (Some(_), Some((cj, vj))) => {
                out.push((*cj, c * vj));
                j += 1;
            }
            (Some((ci, vi)), None) => {
                out.push((*ci, vi.clone()));
                i += 1;
            }
            (None, Some((cj, vj))) => {
                out.push((*cj, c * vj));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Fraction-free reduction of `row` by `pivot` at the shared leading
/// column: `pivot_lead * row - row_lead * pivot`, content-normalized.
fn combine(row: &IntRow, pivot: &IntRow) -> IntRow {
    debug_assert_eq!(row[0].0, pivot[0].0);
    let a = &row[0].1;
    let b = &pivot[0].1;
    let g = a.gcd(b);
    let row_m = b / &g;
    let piv_m = a / &g;
    let mut out: IntRow = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        match (row.get(i), pivot.get(j)) {
            (Some((ci, vi)), Some((cj, vj))) if ci == cj => {
                let v = vi * &row_m - vj * &piv_m;
                if !v.is_zero() {
                    out.push((*ci, v));
                }
                i += 1;
                j += 1;
            }
            (Some((ci, vi)), Some((cj, _))) if ci < cj => {
                out.push((*ci, vi * &row_m));
                i += 1;
            }
            (Some(_), Some((cj, vj))) => {
                out.push((*cj, -(vj * &piv_m)));
                j += 1;
            }
            (Some((ci, vi)), None) => {
                out.push((*ci, vi * &row_m));
                i += 1;
            }
            (None, Some((cj, vj))) => {
                out.push((*cj, -(vj * &piv_m)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    if !out.is_empty() {
        normalize_content(&mut out);
    }
    out
}

fn normalize_content(row: &mut IntRow) {
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    let negate = row[0].1.is_negative();
    if g.is_one() && !negate {
        return;
    }
    if negate {
        g = -g;
    }
    for (_, v) in row.iter_mut() {
        *v /= &g;
    }
}

/// Merge arbitrary (column, coefficient) terms into a sorted primitive row.
fn collect_int_row(mut terms: Vec<(usize, BigInt)>) -> Option<IntRow> {
    terms.sort_by_key(|(c, _)| *c);
    let mut row: IntRow = Vec::with_capacity(terms.len());
    for (c, v) in terms {
        match row.last_mut() {
            Some((lc, lv)) if *lc == c => *lv += v,
            _ => row.push((c, v)),
        }
    }
    row.retain(|(_, v)| !v.is_zero());
    if row.is_empty() {
        return None;
    }
    normalize_content(&mut row);
    Some(row)
}

fn clear_denominators(terms: &[(usize, Scalar)]) -> Vec<(usize, BigInt)> {
    let mut lcm = BigInt::one();
    for (_, v) in terms {
        if !v.is_zero() {
            lcm = lcm.lcm(v.denom());
        }
    }
    terms
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (*c, v.numer() * (&lcm / v.denom())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn irow(entries: &[(usize, i64)]) -> Vec<(usize, BigInt)> {
        entries.iter().map(|(c, v)| (*c, BigInt::from(*v))).collect()
    }

    #[test]
    fn rank_and_rref() {
        let mut el = Eliminator::new();
        assert!(el.insert(irow(&[(0, 2), (1, 4)])));
        assert!(!el.insert(irow(&[(0, 1), (1, 2)])));
        assert!(el.insert(irow(&[(1, 3), (2, 3)])));
        assert_eq!(el.rank(), 2);
        let rref = el.rref_rows();
        // x0 + 2 x1 = 0 reduced by x1 + x2 = 0 gives x0 - 2 x2 = 0.
        assert_eq!(rref[0], vec![(0, int(1)), (2, int(-2))]);
        assert_eq!(rref[1], vec![(1, int(1)), (2, int(1))]);
    }

    #[test]
    fn nullspace_of_single_equation() {
        let mut el = Eliminator::new();
        el.insert(irow(&[(0, 1), (1, 1)]));
        let ns = el.nullspace_rows(2);
        assert_eq!(ns, vec![vec![(0, int(-1)), (1, int(1))]]);
    }

    #[test]
    fn duplicate_and_cancelling_terms() {
        let mut el = Eliminator::new();
        assert!(!el.insert(irow(&[(3, 5), (3, -5)])));
        assert!(el.insert(irow(&[(2, 1), (2, 1)])));
        assert_eq!(el.rank(), 1);
    }
}
