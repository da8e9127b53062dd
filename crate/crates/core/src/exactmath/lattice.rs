//! Integer row lattices: echelon bases and exact membership.

use num_integer::Integer as _;
use num_traits::{Signed, Zero};

use super::integer::Integer;

/// Row-echelon basis of the Z-span of `rows` (Hermite-style, no reduction
/// above pivots). Pivots are positive and strictly increasing in column.
pub fn echelon_basis(rows: &[Vec<Integer>]) -> Vec<Vec<Integer>> {
    let mut work: Vec<Vec<Integer>> = rows
        .iter()
        .filter(|r| r.iter().any(|c| !c.is_zero()))
        .cloned()
        .collect();
    let width = work.first().map_or(0, |r| r.len());
    let mut basis = Vec::new();
    for col in 0..width {
        loop {
            // Smallest nonzero entry in this column becomes the pivot candidate.
            let pivot = work
                .iter()
                .enumerate()
                .filter(|(_, r)| !r[col].is_zero())
                .min_by(|a, b| a.1[col].abs().cmp(&b.1[col].abs()))
                .map(|(i, _)| i);
            let Some(p) = pivot else { break };
            let prow = work[p].clone();
            let mut all_reduced = true;
            for (i, row) in work.iter_mut().enumerate() {
                if i == p || row[col].is_zero() {
                    continue;
                }
                let q = row[col].div_floor(&prow[col]);
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &q * y;
                }
                if !row[col].is_zero() {
                    all_reduced = false;
                }
            }
            if all_reduced {
                let mut prow = work.swap_remove(p);
                if prow[col].is_negative() {
                    prow.iter_mut().for_each(|x| *x = -x.clone());
                }
                basis.push(prow);
                work.retain(|r| r.iter().any(|c| !c.is_zero()));
                break;
            }
        }
    }
    basis
}

/// Integer coordinates of `v` in an echelon basis, or `None` when `v` is
/// outside the lattice.
pub fn coordinates(basis: &[Vec<Integer>], v: &[Integer]) -> Option<Vec<Integer>> {
    let mut rest = v.to_vec();
    let mut coords = Vec::with_capacity(basis.len());
    for row in basis {
        let col = row.iter().position(|c| !c.is_zero())?;
        let (q, r) = rest[col].div_rem(&row[col]);
        if !r.is_zero() {
            return None;
        }
        for (x, y) in rest.iter_mut().zip(row) {
            *x -= &q * y;
        }
        coords.push(q);
    }
    rest.iter().all(Zero::is_zero).then_some(coords)
}
