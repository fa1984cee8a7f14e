//! Exact linear solving and lattice arithmetic.
//!
//! Over `Z` everything routes through Smith normal form; over `Q` through
//! fraction-exact Gaussian elimination. Lattices (subgroups of `Z^n`) are
//! handled as column-span of integer matrices.

use crate::error::Error;
use crate::exact::matrix::SparseMatrix;
use crate::exact::snf::{smith_normal_form, SnfResult};
use crate::scalar::{Integer, Rational};
use num_traits::Zero;

pub type IntMatrix = SparseMatrix<Integer>;
pub type RatMatrix = SparseMatrix<Rational>;

/// Solve `A x = b` over the integers. `None` when no integer solution exists.
pub fn solve_int(a: &IntMatrix, b: &[Integer]) -> Result<Option<Vec<Integer>>, Error> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "solve: {}x{} matrix, rhs length {}",
            a.rows(),
            a.cols(),
            b.len()
        )));
    }
    let s = smith_normal_form(a);
    solve_int_with(&s, a.cols(), b)
}

/// Solve using a precomputed SNF of `A`.
pub fn solve_int_with(
    s: &SnfResult,
    cols: usize,
    b: &[Integer],
) -> Result<Option<Vec<Integer>>, Error> {
    // U A V = D  =>  A (V y) = b with D y = U b
    let ub = s.u.mul_vec(b)?;
    let diag = s.diagonal();
    let mut y = vec![Integer::zero(); cols];
    for (i, ubi) in ub.iter().enumerate() {
        if i < diag.len() && !diag[i].is_zero() {
            let q = ubi.clone() / diag[i].clone();
            if !(ubi - &(q.clone() * diag[i].clone())).is_zero() {
                return Ok(None);
            }
            y[i] = q;
        } else if !ubi.is_zero() {
            return Ok(None);
        }
    }
    Ok(Some(s.v.mul_vec(&y)?))
}

/// Basis of the integer kernel lattice of `A` (columns). The kernel of a map
/// to a free module is saturated, so this basis also spans the rational
/// kernel.
pub fn kernel_int(a: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(a);
    let rank = s.rank();
    let cols: Vec<usize> = (rank..a.cols()).collect();
    s.v.select_cols(&cols)
}

/// Basis of the column-span lattice of `A` (a maximal-rank set of columns in
/// Hermite-like position): `im A = im basis`, basis columns independent.
pub fn image_basis(a: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(a);
    let rank = s.rank();
    // im A = U^{-1} · im D, and im D is spanned by d_i e_i for i < rank
    let cols: Vec<usize> = (0..rank).collect();
    let u_cols = s.u_inv.select_cols(&cols);
    let mut scaled = IntMatrix::zero(a.rows(), rank);
    let diag = s.diagonal();
    for (r, c, v) in u_cols.iter() {
        scaled.set(r, c, v.clone() * diag[c].clone());
    }
    scaled
}

/// Is `x` in the lattice spanned by the columns of `gens`?
pub fn in_lattice(gens: &IntMatrix, x: &[Integer]) -> Result<bool, Error> {
    Ok(solve_int(gens, x)?.is_some())
}

/// Lattice equality: mutual column membership.
pub fn lattice_eq(a: &IntMatrix, b: &IntMatrix) -> Result<bool, Error> {
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(
            "lattice ambient ranks differ".into(),
        ));
    }
    let sa = smith_normal_form(a);
    for c in 0..b.cols() {
        if solve_int_with(&sa, a.cols(), &b.col_vec(c))?.is_none() {
            return Ok(false);
        }
    }
    let sb = smith_normal_form(b);
    for c in 0..a.cols() {
        if solve_int_with(&sb, b.cols(), &a.col_vec(c))?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Generators of the preimage lattice `{x : A x ∈ im L}` where `L`'s columns
/// generate a lattice in the target. Includes `ker A`.
pub fn preimage_lattice(a: &IntMatrix, l: &IntMatrix) -> Result<IntMatrix, Error> {
    if a.rows() != l.rows() {
        return Err(Error::DimensionMismatch(
            "preimage: target ranks differ".into(),
        ));
    }
    let stacked = a.hstack(&l.neg())?;
    let k = kernel_int(&stacked);
    let rows: Vec<usize> = (0..a.cols()).collect();
    Ok(k.select_rows(&rows))
}

/// The quotient of the lattice spanned by `num` by the sublattice spanned by
/// `den` (must be contained in it), as an abstract group with generator
/// vectors in the ambient coordinates.
pub fn subquotient(
    num: &IntMatrix,
    den: &IntMatrix,
) -> Result<(crate::exact::group::FgAbGroup, Vec<Vec<Integer>>), Error> {
    use num_traits::One;
    let basis = image_basis(num);
    let s = smith_normal_form(&basis);
    let mut x = IntMatrix::zero(basis.cols(), den.cols());
    for c in 0..den.cols() {
        let col = den.col_vec(c);
        let sol = solve_int_with(&s, basis.cols(), &col)?
            .ok_or_else(|| Error::bad_input("denominator not inside numerator lattice"))?;
        for (r, v) in sol.into_iter().enumerate() {
            x.set(r, c, v);
        }
    }
    let q = smith_normal_form(&x);
    let mut diag = q.diagonal();
    diag.resize(basis.cols(), Integer::zero());
    let mut torsion = Vec::new();
    let mut free_rank = 0usize;
    let mut gens = Vec::new();
    for (i, d) in diag.iter().enumerate() {
        if d.is_one() {
            continue;
        }
        if d.is_zero() {
            free_rank += 1;
        } else {
            torsion.push(d.clone());
        }
        gens.push(basis.mul_vec(&q.u_inv.col_vec(i))?);
    }
    Ok((
        crate::exact::group::FgAbGroup::new(free_rank, torsion)?,
        gens,
    ))
}

/// Solve `A x = b` over the rationals via Gaussian elimination.
/// `None` when the system is inconsistent.
pub fn solve_rat(a: &RatMatrix, b: &[Rational]) -> Result<Option<Vec<Rational>>, Error> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "solve: {}x{} matrix, rhs length {}",
            a.rows(),
            a.cols(),
            b.len()
        )));
    }
    let rows = a.rows();
    let cols = a.cols();
    let mut m = a.to_dense();
    let mut rhs = b.to_vec();
    let mut pivot_col_of_row = vec![usize::MAX; rows];
    let mut row = 0;
    for col in 0..cols {
        // first nonzero in this column at or below `row` (deterministic)
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        rhs.swap(row, p);
        let inv = {
            let piv = m[row][col].clone();
            piv.recip()
        };
        for c in col..cols {
            let t = m[row][c].clone() * inv.clone();
            m[row][c] = t;
        }
        rhs[row] = rhs[row].clone() * inv.clone();
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..cols {
                    let t = m[row][c].clone() * f.clone();
                    m[r][c] -= t;
                }
                let t = rhs[row].clone() * f;
                rhs[r] -= t;
            }
        }
        pivot_col_of_row[row] = col;
        row += 1;
        if row == rows {
            break;
        }
    }
    // inconsistency: zero row with nonzero rhs
    for r in row..rows {
        if !rhs[r].is_zero() {
            return Ok(None);
        }
    }
    let mut x = vec![Rational::zero(); cols];
    for r in 0..row {
        x[pivot_col_of_row[r]] = rhs[r].clone();
    }
    Ok(Some(x))
}

/// Basis of the rational kernel of `A` (columns).
pub fn kernel_rat(a: &RatMatrix) -> RatMatrix {
    let rows = a.rows();
    let cols = a.cols();
    let mut m = a.to_dense();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].clone().recip();
        for c in col..cols {
            let t = m[row][c].clone() * inv.clone();
            m[row][c] = t;
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..cols {
                    let t = m[row][c].clone() * f.clone();
                    m[r][c] -= t;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    let mut k = RatMatrix::zero(cols, free.len());
    for (j, &fc) in free.iter().enumerate() {
        k.set(fc, j, Rational::from_integer(1.into()));
        for (r, &pc) in pivot_cols.iter().enumerate() {
            let v = -m[r][fc].clone();
            if !v.is_zero() {
                k.set(pc, j, v);
            }
        }
    }
    k
}

/// Rational rank.
pub fn rank_rat(a: &RatMatrix) -> usize {
    a.cols() - kernel_rat(a).cols()
}
