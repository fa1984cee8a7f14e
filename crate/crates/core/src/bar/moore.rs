//! Homotopy groups of a simplicial abelian group via the degeneracy
//! quotient.
//!
//! The quotient of each degree by the images of all degeneracies, with the
//! alternating face sum as differential, computes `π_n`. Everything is
//! lattice arithmetic in the presentation: cycles are a preimage lattice,
//! boundaries sit inside it, and the quotient comes out of one Smith form.

use crate::bar::simgroup::SimAbGroup;
use crate::error::Error;
use crate::exact::group::FgAbGroup;
use crate::exact::matrix::SparseMatrix;
use crate::exact::solve;
use crate::IntMatrix;

/// Relation lattice of the degeneracy quotient at degree `n`: the group's
/// own relations plus every degeneracy image from below.
fn quotient_relations(s: &SimAbGroup, n: usize) -> Result<IntMatrix, Error> {
    let mut rels = s.level(n).rels.clone();
    if n > 0 {
        for i in 0..n {
            rels = rels.hstack(s.degeneracy(n - 1, i))?;
        }
    }
    Ok(rels)
}

/// `π_n` for `n ≤ max_degree − 1` (the top degree lacks incoming
/// boundaries, so it is not computed).
pub fn homotopy_groups(s: &SimAbGroup) -> Result<Vec<FgAbGroup>, Error> {
    let top = s.max_degree();
    let mut out = Vec::new();
    for n in 0..top {
        let d_out = s.alternating_face_sum(n)?;
        let cycles = if n == 0 {
            SparseMatrix::identity(s.gens(0))
        } else {
            let target_rels = quotient_relations(s, n - 1)?;
            solve::preimage_lattice(&d_out, &target_rels)?
        };
        let d_in = s.alternating_face_sum(n + 1)?;
        let boundaries = d_in.hstack(&quotient_relations(s, n)?)?;
        // boundaries ⊆ cycles: d∘d lands in degenerate + relations
        let numerator = cycles;
        let (group, _gens) = solve::subquotient(&numerator, &boundaries)?;
        out.push(group);
    }
    Ok(out)
}
