//! Exact incremental rank computation.
//!
//! The store keeps a reduced row echelon basis: every row has value 1 at
//! its pivot column and value 0 at every other row's pivot column. Each
//! inserted vector is reduced against all rows (order does not matter in
//! reduced form), and on success is normalized and back-substituted into
//! the older rows. Full reduction matters for performance, not just
//! hygiene: the reduced basis of a span is canonical, so entry sizes are
//! intrinsic to the space rather than artifacts of insertion order, and
//! rows grow sparser as the rank approaches the ambient dimension.

use crate::scalar::Scalar;

/// Growing row-echelon store over one scalar field.
pub trait RankStore<S>: Send {
    fn new(dim: usize) -> Self;

    fn rank(&self) -> usize;

    /// Reduces `v` against the store. If independent, stores a new row and
    /// returns its index; otherwise returns None.
    fn insert(&mut self, v: Vec<S>) -> Option<usize>;

    /// A representative of stored row `idx`, up to nonzero scaling.
    fn representative(&self, idx: usize) -> Vec<S>;
}

/// Reduced-row-echelon store for any scalar field.
pub struct EchelonRankStore<S> {
    dim: usize,
    rows: Vec<Vec<S>>,
    pivots: Vec<usize>,
}

impl<S: Scalar> RankStore<S> for EchelonRankStore<S> {
    fn new(dim: usize) -> Self {
        EchelonRankStore {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn insert(&mut self, mut v: Vec<S>) -> Option<usize> {
        assert_eq!(v.len(), self.dim);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut v[p], S::zero());
            for (j, ri) in row.iter().enumerate() {
                if j != p && !ri.is_zero() {
                    let term = c.clone() * ri.clone();
                    v[j] -= term;
                }
            }
        }
        let pivot = v.iter().position(|x| !x.is_zero())?;
        let lead = std::mem::replace(&mut v[pivot], S::one());
        for (j, vi) in v.iter_mut().enumerate() {
            if j != pivot && !vi.is_zero() {
                *vi = vi.clone() / lead.clone();
            }
        }
        for row in self.rows.iter_mut() {
            if row[pivot].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut row[pivot], S::zero());
            for (j, vi) in v.iter().enumerate() {
                if j != pivot && !vi.is_zero() {
                    let term = c.clone() * vi.clone();
                    row[j] -= term;
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(pivot);
        Some(self.rows.len() - 1)
    }

    fn representative(&self, idx: usize) -> Vec<S> {
        self.rows[idx].clone()
    }
}

impl<S: Scalar> EchelonRankStore<S> {
    /// Largest nonzero-entry count over the stored rows, a density probe.
    pub fn max_row_entries(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.iter().filter(|x| !x.is_zero()).count())
            .max()
            .unwrap_or(0)
    }
}
