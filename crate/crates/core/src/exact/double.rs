//! Double complexes and their total complex.
//!
//! Raw horizontal and vertical differentials commute; the total complex
//! inserts the sign, `d_tot = d_h + (−1)^{h} d_v` with `h` the horizontal
//! degree, so the signed operators anticommute and `d_tot ∘ d_tot = 0`.

use crate::error::Error;
use crate::exact::complex::{Direction, GradedComplex};
use crate::exact::matrix::SparseMatrix;
use crate::scalar::Scalar;
use std::collections::BTreeMap;

/// First-quadrant-style bounded double complex. `ranks[(r, s)]` with `r`
/// the horizontal and `s` the vertical degree; both differentials raise
/// their degree by one (cochain orientation).
#[derive(Clone, Debug)]
pub struct DoubleComplex<T: Scalar> {
    ranks: BTreeMap<(isize, isize), usize>,
    horiz: BTreeMap<(isize, isize), SparseMatrix<T>>,
    vert: BTreeMap<(isize, isize), SparseMatrix<T>>,
}

impl<T: Scalar> DoubleComplex<T> {
    pub fn new(
        ranks: BTreeMap<(isize, isize), usize>,
        horiz: BTreeMap<(isize, isize), SparseMatrix<T>>,
        vert: BTreeMap<(isize, isize), SparseMatrix<T>>,
    ) -> Result<Self, Error> {
        let d = DoubleComplex { ranks, horiz, vert };
        d.validate()?;
        Ok(d)
    }

    pub fn rank(&self, r: isize, s: isize) -> usize {
        self.ranks.get(&(r, s)).copied().unwrap_or(0)
    }

    pub fn horizontal(&self, r: isize, s: isize) -> SparseMatrix<T> {
        self.horiz
            .get(&(r, s))
            .cloned()
            .unwrap_or_else(|| SparseMatrix::zero(self.rank(r + 1, s), self.rank(r, s)))
    }

    pub fn vertical(&self, r: isize, s: isize) -> SparseMatrix<T> {
        self.vert
            .get(&(r, s))
            .cloned()
            .unwrap_or_else(|| SparseMatrix::zero(self.rank(r, s + 1), self.rank(r, s)))
    }

    fn validate(&self) -> Result<(), Error> {
        for (&(r, s), m) in &self.horiz {
            if m.cols() != self.rank(r, s) || m.rows() != self.rank(r + 1, s) {
                return Err(Error::DimensionMismatch(format!("horizontal at ({r},{s})")));
            }
        }
        for (&(r, s), m) in &self.vert {
            if m.cols() != self.rank(r, s) || m.rows() != self.rank(r, s + 1) {
                return Err(Error::DimensionMismatch(format!("vertical at ({r},{s})")));
            }
        }
        for &(r, s) in self.ranks.keys() {
            // rows and columns are complexes
            let hh = self.horizontal(r + 1, s).mul(&self.horizontal(r, s))?;
            if !hh.is_zero_matrix() {
                return Err(Error::bad_input(format!(
                    "horizontal d∘d != 0 at ({r},{s})"
                )));
            }
            let vv = self.vertical(r, s + 1).mul(&self.vertical(r, s))?;
            if !vv.is_zero_matrix() {
                return Err(Error::bad_input(format!("vertical d∘d != 0 at ({r},{s})")));
            }
            // squares commute (the total-complex sign makes them anticommute)
            let a = self.vertical(r + 1, s).mul(&self.horizontal(r, s))?;
            let b = self.horizontal(r, s + 1).mul(&self.vertical(r, s))?;
            if a != b {
                return Err(Error::SignConvention(format!("({r},{s})")));
            }
        }
        Ok(())
    }

    pub fn bidegrees(&self) -> impl Iterator<Item = (isize, isize)> + '_ {
        self.ranks.keys().copied()
    }

    /// `Tot^m = ⊕_{r+s=m} D^{r,s}`, differential `d_h + (−1)^r d_v`.
    pub fn total_complex(&self) -> Result<GradedComplex<T>, Error> {
        if self.ranks.is_empty() {
            return GradedComplex::new(0, Vec::new(), BTreeMap::new(), Direction::Up);
        }
        let lo = self.ranks.keys().map(|&(r, s)| r + s).min().unwrap();
        let hi = self.ranks.keys().map(|&(r, s)| r + s).max().unwrap();
        // deterministic layout: within Tot^m, blocks ordered by r ascending
        let blocks = |m: isize| -> Vec<(isize, isize)> {
            let mut v: Vec<(isize, isize)> = self
                .ranks
                .keys()
                .copied()
                .filter(|&(r, s)| r + s == m && self.rank(r, s) > 0)
                .collect();
            v.sort();
            v
        };
        let offset = |bl: &[(isize, isize)], key: (isize, isize)| -> Option<usize> {
            let mut off = 0;
            for &b in bl {
                if b == key {
                    return Some(off);
                }
                off += self.rank(b.0, b.1);
            }
            None
        };
        let mut ranks = Vec::new();
        for m in lo..=hi {
            ranks.push(blocks(m).iter().map(|&(r, s)| self.rank(r, s)).sum());
        }
        let mut diffs = BTreeMap::new();
        for m in lo..hi {
            let src = blocks(m);
            let tgt = blocks(m + 1);
            let src_rank: usize = src.iter().map(|&(r, s)| self.rank(r, s)).sum();
            let tgt_rank: usize = tgt.iter().map(|&(r, s)| self.rank(r, s)).sum();
            let mut d = SparseMatrix::zero(tgt_rank, src_rank);
            for &(r, s) in &src {
                let co = offset(&src, (r, s)).unwrap();
                if let Some(ro) = offset(&tgt, (r + 1, s)) {
                    for (i, j, v) in self.horizontal(r, s).iter() {
                        d.set(ro + i, co + j, v.clone());
                    }
                }
                if let Some(ro) = offset(&tgt, (r, s + 1)) {
                    let sign = if r.rem_euclid(2) == 0 {
                        T::one()
                    } else {
                        -T::one()
                    };
                    for (i, j, v) in self.vertical(r, s).iter() {
                        d.set(ro + i, co + j, v.clone() * sign.clone());
                    }
                }
            }
            diffs.insert(m, d);
        }
        GradedComplex::new(lo, ranks, diffs, Direction::Up)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::group::FgAbGroup;
    use crate::scalar::{int, Integer};

    #[test]
    fn single_row_and_column() {
        // row: Z -2-> Z at s = 0
        let ranks = BTreeMap::from([((0, 0), 1), ((1, 0), 1)]);
        let m = SparseMatrix::from_entries(1, 1, [(0, 0, int(2))]).unwrap();
        let d = DoubleComplex::new(
            ranks,
            BTreeMap::from([((0, 0), m.clone())]),
            BTreeMap::new(),
        )
        .unwrap();
        let t = d.total_complex().unwrap();
        assert_eq!(t.rank(0), 1);
        assert_eq!(t.rank(1), 1);
        assert_eq!(t.differential(0), m);

        let ranks = BTreeMap::from([((0, 0), 1), ((0, 1), 1)]);
        let m = SparseMatrix::from_entries(1, 1, [(0, 0, int(3))]).unwrap();
        let d = DoubleComplex::new(
            ranks,
            BTreeMap::new(),
            BTreeMap::from([((0, 0), m.clone())]),
        )
        .unwrap();
        let t = d.total_complex().unwrap();
        assert_eq!(t.differential(0), m); // (−1)^0 = +
    }

    #[test]
    fn two_by_two_identity_grid_is_acyclic() {
        let one = SparseMatrix::<Integer>::identity(1);
        let ranks = BTreeMap::from([((0, 0), 1), ((1, 0), 1), ((0, 1), 1), ((1, 1), 1)]);
        let horiz = BTreeMap::from([((0, 0), one.clone()), ((0, 1), one.clone())]);
        let vert = BTreeMap::from([((0, 0), one.clone()), ((1, 0), one.clone())]);
        let d = DoubleComplex::new(ranks, horiz, vert).unwrap();
        let t = d.total_complex().unwrap();
        let h = t.homology().unwrap();
        for deg in t.degrees() {
            assert_eq!(h.group(deg), FgAbGroup::trivial(), "H^{deg}");
        }
    }

    #[test]
    fn non_commuting_square_rejected() {
        let one = SparseMatrix::<Integer>::identity(1);
        let two = SparseMatrix::from_entries(1, 1, [(0, 0, int(2))]).unwrap();
        let ranks = BTreeMap::from([((0, 0), 1), ((1, 0), 1), ((0, 1), 1), ((1, 1), 1)]);
        let horiz = BTreeMap::from([((0, 0), one.clone()), ((0, 1), two)]);
        let vert = BTreeMap::from([((0, 0), one.clone()), ((1, 0), one.clone())]);
        match DoubleComplex::new(ranks, horiz, vert) {
            Err(Error::SignConvention(_)) => {}
            other => panic!("expected sign-convention error, got {other:?}"),
        }
    }
}
