//! Smith normal form over the integers.
//!
//! `U · A · V = D` with `U`, `V` unimodular and `D` diagonal, entries
//! nonnegative with `d_1 | d_2 | …` and zeros trailing. Pivot rule:
//! smallest absolute value among nonzero entries of the working submatrix,
//! ties broken by lowest `(row, col)`, so the output is deterministic for a
//! fixed input. The inverses of `U` and `V` are accumulated alongside; much
//! of the lattice arithmetic downstream needs them.

use crate::exact::matrix::SparseMatrix;
use crate::scalar::Integer;
use num_integer::Integer as _;
use num_traits::{Signed, Zero};

pub type IntMatrix = SparseMatrix<Integer>;

#[derive(Clone, Debug)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SnfResult {
    /// Diagonal entries of `D` (length = min(rows, cols)).
    pub fn diagonal(&self) -> Vec<Integer> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d.get(i, i)).collect()
    }

    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

/// Dense working form with row/column transforms and their inverses.
struct Work {
    m: Vec<Vec<Integer>>,
    rows: usize,
    cols: usize,
    u: Vec<Vec<Integer>>,
    u_inv: Vec<Vec<Integer>>,
    v: Vec<Vec<Integer>>,
    v_inv: Vec<Vec<Integer>>,
}

fn dense_identity(n: usize) -> Vec<Vec<Integer>> {
    let mut id = vec![vec![Integer::zero(); n]; n];
    for (i, row) in id.iter_mut().enumerate() {
        row[i] = Integer::from(1);
    }
    id
}

impl Work {
    fn new(a: &IntMatrix) -> Self {
        Work {
            m: a.to_dense(),
            rows: a.rows(),
            cols: a.cols(),
            u: dense_identity(a.rows()),
            u_inv: dense_identity(a.rows()),
            v: dense_identity(a.cols()),
            v_inv: dense_identity(a.cols()),
        }
    }

    // row ops act on the left: M <- L M, U <- L U, U_inv <- U_inv L^{-1}

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.m.swap(i, j);
        self.u.swap(i, j);
        // inverse of a swap is the same swap, applied on columns of u_inv
        for row in self.u_inv.iter_mut() {
            row.swap(i, j);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for v in self.m[i].iter_mut() {
            *v = -v.clone();
        }
        for v in self.u[i].iter_mut() {
            *v = -v.clone();
        }
        for row in self.u_inv.iter_mut() {
            row[i] = -row[i].clone();
        }
    }

    /// row_j += q * row_i
    fn add_row(&mut self, j: usize, i: usize, q: &Integer) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let t = self.m[i][c].clone() * q.clone();
            self.m[j][c] += t;
        }
        for c in 0..self.rows {
            let t = self.u[i][c].clone() * q.clone();
            self.u[j][c] += t;
        }
        // inverse op: col_i -= q * col_j of u_inv
        for r in 0..self.rows {
            let t = self.u_inv[r][j].clone() * q.clone();
            self.u_inv[r][i] -= t;
        }
    }

    // column ops act on the right: M <- M R, V <- V R, V_inv <- R^{-1} V_inv

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in self.m.iter_mut() {
            row.swap(i, j);
        }
        for row in self.v.iter_mut() {
            row.swap(i, j);
        }
        self.v_inv.swap(i, j);
    }

    /// col_j += q * col_i
    fn add_col(&mut self, j: usize, i: usize, q: &Integer) {
        if q.is_zero() {
            return;
        }
        for row in self.m.iter_mut() {
            let t = row[i].clone() * q.clone();
            row[j] += t;
        }
        for row in self.v.iter_mut() {
            let t = row[i].clone() * q.clone();
            row[j] += t;
        }
        for c in 0..self.cols {
            let t = self.v_inv[j][c].clone() * q.clone();
            self.v_inv[i][c] -= t;
        }
    }

    /// Smallest-absolute-value nonzero entry of the submatrix at `(k.., k..)`,
    /// ties broken by lowest `(row, col)`. `None` when the submatrix is zero.
    fn pick_pivot(&self, k: usize) -> Option<(usize, usize)> {
        let mut best: Option<(Integer, usize, usize)> = None;
        for r in k..self.rows {
            for c in k..self.cols {
                let v = &self.m[r][c];
                if v.is_zero() {
                    continue;
                }
                let a = v.abs();
                match &best {
                    Some((b, _, _)) if *b <= a => {}
                    _ => best = Some((a, r, c)),
                }
            }
        }
        best.map(|(_, r, c)| (r, c))
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let mut w = Work::new(a);
    let steps = w.rows.min(w.cols);
    let mut k = 0;
    while k < steps {
        let Some((pr, pc)) = w.pick_pivot(k) else {
            break;
        };
        w.swap_rows(k, pr);
        w.swap_cols(k, pc);
        if w.m[k][k].is_negative() {
            w.negate_row(k);
        }
        // clear row and column k; restart if a reduction produced a smaller
        // remainder somewhere (the min-pivot rescan keeps entries small)
        let mut clean = true;
        for r in (k + 1)..w.rows {
            if !w.m[r][k].is_zero() {
                let q = -w.m[r][k].div_floor(&w.m[k][k]);
                w.add_row(r, k, &q);
                if !w.m[r][k].is_zero() {
                    clean = false;
                }
            }
        }
        for c in (k + 1)..w.cols {
            if !w.m[k][c].is_zero() {
                let q = -w.m[k][c].div_floor(&w.m[k][k]);
                w.add_col(c, k, &q);
                if !w.m[k][c].is_zero() {
                    clean = false;
                }
            }
        }
        if !clean {
            continue; // re-pick the pivot; remainders are strictly smaller
        }
        // enforce divisibility: pivot must divide the rest of the submatrix
        let mut divisible = true;
        'scan: for r in (k + 1)..w.rows {
            for c in (k + 1)..w.cols {
                if !(w.m[r][c].clone() % w.m[k][k].clone()).is_zero() {
                    let one = Integer::from(1);
                    w.add_row(k, r, &one);
                    divisible = false;
                    break 'scan;
                }
            }
        }
        if divisible {
            k += 1;
        }
    }
    let pack = |rows: usize, cols: usize, data: &[Vec<Integer>]| {
        let mut m = SparseMatrix::zero(rows, cols);
        for (r, row) in data.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    m.set(r, c, v.clone());
                }
            }
        }
        m
    };
    SnfResult {
        u: pack(w.rows, w.rows, &w.u),
        d: pack(w.rows, w.cols, &w.m),
        v: pack(w.cols, w.cols, &w.v),
        u_inv: pack(w.rows, w.rows, &w.u_inv),
        v_inv: pack(w.cols, w.cols, &w.v_inv),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        SparseMatrix::from_dense(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect::<Vec<_>>(),
        )
    }

    fn check(a: &IntMatrix) -> SnfResult {
        let s = smith_normal_form(a);
        // U A V = D
        let lhs = s.u.mul(a).unwrap().mul(&s.v).unwrap();
        assert_eq!(lhs, s.d, "UAV != D");
        // inverses
        assert_eq!(s.u.mul(&s.u_inv).unwrap(), SparseMatrix::identity(a.rows()));
        assert_eq!(s.u_inv.mul(&s.u).unwrap(), SparseMatrix::identity(a.rows()));
        assert_eq!(s.v.mul(&s.v_inv).unwrap(), SparseMatrix::identity(a.cols()));
        // divisibility chain, nonnegative, zeros trailing
        let diag = s.diagonal();
        for i in 0..diag.len() {
            assert!(diag[i] >= int(0));
            if i + 1 < diag.len() && !diag[i + 1].is_zero() {
                assert!(!diag[i].is_zero(), "zero before nonzero in diagonal");
                assert!(
                    (diag[i + 1].clone() % diag[i].clone()).is_zero(),
                    "divisibility"
                );
            }
        }
        // off-diagonal zero
        for (r, c, _) in s.d.iter() {
            assert_eq!(r, c);
        }
        s
    }

    #[test]
    fn zero_and_identity() {
        let s = check(&m(&[&[0]]));
        assert_eq!(s.diagonal(), vec![int(0)]);
        assert_eq!(s.u, SparseMatrix::identity(1));
        assert_eq!(s.v, SparseMatrix::identity(1));
        let s = check(&SparseMatrix::identity(3));
        assert_eq!(s.diagonal(), vec![int(1), int(1), int(1)]);
    }

    #[test]
    fn spec_example() {
        // d1 = gcd of entries = 2, d1 * d2 = |det| = 8
        let s = check(&m(&[&[2, 4], &[6, 8]]));
        assert_eq!(s.diagonal(), vec![int(2), int(4)]);
    }

    #[test]
    fn empty_matrices() {
        let s = check(&m(&[]));
        assert_eq!(s.d.rows(), 0);
        let a = SparseMatrix::zero(0, 3);
        let s = smith_normal_form(&a);
        assert_eq!(s.d.cols(), 3);
        assert_eq!(s.rank(), 0);
    }

    #[test]
    fn larger_entries_round_trip() {
        let mut rng = crate::rng::Rng::new(77);
        for _ in 0..10 {
            let rows = 4 + rng.index(5);
            let cols = 4 + rng.index(5);
            let mut a = SparseMatrix::zero(rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    a.set(r, c, int(rng.int_in(-50, 50)));
                }
            }
            check(&a);
        }
    }

    #[test]
    fn randomized_round_trip() {
        let mut rng = crate::rng::Rng::new(2024);
        for _ in 0..40 {
            let rows = 1 + rng.index(12);
            let cols = 1 + rng.index(12);
            let mut a = SparseMatrix::zero(rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    a.set(r, c, int(rng.int_in(-9, 9)));
                }
            }
            check(&a);
        }
    }
}
