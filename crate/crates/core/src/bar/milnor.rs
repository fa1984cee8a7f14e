//! The Milnor join model and the Dold–Lashof mapping-cylinder model.
//!
//! For a finite group `G`, the `(n+1)`-fold join of `|G|` points carries the
//! free diagonal translation action; its homology is the `E`-side of the
//! model, and the homology of the coinvariant chain complex is the `B`-side.
//! At point level, `DL(E) = G × C(E) ∪ G` and `G ∗ E` are identified by
//!
//! ```text
//! h|t|y ↦ t·h ⊕ (1−t)·(h·y)        x_0·h ⊕ x_1·y ↦ h|x_0|h⁻¹y
//! ```

use crate::bar::point::{GroupElt, PointGroup};
use crate::error::Error;
use crate::exact::complex::{Direction, GradedComplex};
use crate::exact::group::FgAbGroup;
use crate::exact::matrix::SparseMatrix;
use crate::scalar::{Integer, Rational};
use crate::simplicial::join::{join_complex, points};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// A point of the iterated join `G ∗ ⋯ ∗ G`/`G ∗ E`: barycentric weights
/// summing to 1 with one group letter per slot. Zero-weight slots carry the
/// identity letter in canonical form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JoinPoint {
    pub weights: Vec<Rational>,
    pub letters: Vec<GroupElt>,
}

impl JoinPoint {
    pub fn new(
        group: &PointGroup,
        weights: Vec<Rational>,
        letters: Vec<GroupElt>,
    ) -> Result<Self, Error> {
        if weights.len() != letters.len() || weights.is_empty() {
            return Err(Error::bad_input(
                "join point needs matching weights and letters",
            ));
        }
        let total: Rational = weights.iter().cloned().sum();
        if !total.is_one() {
            return Err(Error::bad_input("join weights must sum to 1"));
        }
        if weights.iter().any(|w| w < &Rational::zero()) {
            return Err(Error::bad_input("join weights must be nonnegative"));
        }
        let mut p = JoinPoint { weights, letters };
        p.canonicalize(group);
        Ok(p)
    }

    /// Neutralize letters at zero-weight slots.
    fn canonicalize(&mut self, group: &PointGroup) {
        for (w, l) in self.weights.iter().zip(self.letters.iter_mut()) {
            if w.is_zero() {
                *l = GroupElt::zero(group);
            }
        }
    }

    /// Diagonal translation.
    pub fn translate(&self, g: &GroupElt, group: &PointGroup) -> JoinPoint {
        let letters = self.letters.iter().map(|l| l.add(g, group)).collect();
        let mut p = JoinPoint {
            weights: self.weights.clone(),
            letters,
        };
        p.canonicalize(group);
        p
    }
}

/// A Dold–Lashof point `h|t|y` of `G × C(E) ∪ G`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DlPoint {
    pub h: GroupElt,
    pub t: Rational,
    pub y: JoinPoint,
}

/// `h|t|y ↦ t·h ⊕ (1−t)·(h·y)`.
pub fn dl_to_join(p: &DlPoint, group: &PointGroup) -> Result<JoinPoint, Error> {
    if p.t < Rational::zero() || p.t > Rational::one() {
        return Err(Error::bad_input("cone coordinate outside [0,1]"));
    }
    let hy = p.y.translate(&p.h, group);
    let mut weights = Vec::with_capacity(hy.weights.len() + 1);
    weights.push(p.t.clone());
    let rest = Rational::one() - p.t.clone();
    for w in &hy.weights {
        weights.push(w.clone() * rest.clone());
    }
    let mut letters = Vec::with_capacity(hy.letters.len() + 1);
    letters.push(p.h.clone());
    letters.extend(hy.letters.iter().cloned());
    JoinPoint::new(group, weights, letters)
}

/// `x_0·h ⊕ x_1·y ↦ h|x_0|h⁻¹y`, splitting off the first slot. Undefined
/// when the first weight is 1 (the cone collapses `y` there).
pub fn join_to_dl(p: &JoinPoint, group: &PointGroup) -> Result<DlPoint, Error> {
    let x0 = p.weights[0].clone();
    if x0.is_one() {
        return Err(Error::bad_input(
            "join point has weight 1 at the group slot",
        ));
    }
    let h = p.letters[0].clone();
    let rest = Rational::one() - x0.clone();
    let weights: Vec<Rational> = p.weights[1..]
        .iter()
        .map(|w| w.clone() / rest.clone())
        .collect();
    let letters: Vec<GroupElt> = p.letters[1..].iter().map(|l| l.sub(&h, group)).collect();
    let y = JoinPoint::new(group, weights, letters)?;
    Ok(DlPoint { h, t: x0, y })
}

pub fn translate_dl(p: &DlPoint, g: &GroupElt, group: &PointGroup) -> DlPoint {
    DlPoint {
        h: p.h.add(g, group),
        t: p.t.clone(),
        y: p.y.clone(),
    }
}

/// Random join point with strictly positive weights.
pub fn random_join_point(group: &PointGroup, slots: usize, rng: &mut crate::rng::Rng) -> JoinPoint {
    let mut raw: Vec<Rational> = (0..slots).map(|_| rng.unit_interval()).collect();
    let total: Rational = raw.iter().cloned().sum();
    for w in raw.iter_mut() {
        *w = w.clone() / total.clone();
    }
    let letters: Vec<GroupElt> = (0..slots)
        .map(|_| {
            let cs: Vec<Rational> = (0..group.arity())
                .map(|_| crate::scalar::to_rational(&Integer::from(rng.int_in(0, 5))))
                .collect();
            GroupElt::new(group, cs).expect("in group")
        })
        .collect();
    JoinPoint::new(group, raw, letters).expect("weights normalized")
}

pub fn random_group_elt(group: &PointGroup, rng: &mut crate::rng::Rng) -> GroupElt {
    let cs: Vec<Rational> = (0..group.arity())
        .map(|_| crate::scalar::to_rational(&Integer::from(rng.int_in(0, 7))))
        .collect();
    GroupElt::new(group, cs).expect("in group")
}

/// Enumerate the elements of a finite group as canonical coordinate tuples.
fn enumerate_elements(g: &FgAbGroup) -> Result<Vec<Vec<Integer>>, Error> {
    if !g.is_finite() {
        return Err(Error::bad_input("join model needs a finite group"));
    }
    let mut out: Vec<Vec<Integer>> = vec![Vec::new()];
    for m in g.torsion() {
        let mut next = Vec::new();
        let mut d = Integer::zero();
        while &d < m {
            for e in &out {
                let mut e2 = e.clone();
                e2.push(d.clone());
                next.push(e2);
            }
            d += Integer::one();
        }
        out = next;
    }
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct JoinModelHomology {
    pub e_homology: Vec<FgAbGroup>,
    pub b_homology: Vec<FgAbGroup>,
}

/// Homology of the `(n+1)`-fold join of `|G|` points (the `E`-side) and of
/// its quotient by the free diagonal action, computed as chain-level
/// coinvariants (the `B`-side).
pub fn milnor_join_homology(g: &FgAbGroup, n: usize) -> Result<JoinModelHomology, Error> {
    let elements = enumerate_elements(g)?;
    let order = elements.len();
    if order == 0 {
        return Err(Error::bad_input("empty group"));
    }
    // E: iterated join of |G| points
    let pts = points(order)?;
    let mut join = pts.clone();
    for _ in 0..n {
        join = join_complex(&pts, &join)?;
    }
    let e_cc: GradedComplex<Integer> = join.chain_complex();
    let e_hom = e_cc.homology()?;
    let e_homology: Vec<FgAbGroup> = (0..=n as isize).map(|d| e_hom.group(d)).collect();

    // B: coinvariants. The action translates the element index within each
    // factor; factors are preserved, so sorted orientation signs are +1 and
    // the coinvariant complex is free on orbit representatives.
    let index_of = |e: &Vec<Integer>| elements.binary_search(e).expect("element enumerated");
    let add = |a: &Vec<Integer>, b: &Vec<Integer>| -> Vec<Integer> {
        a.iter()
            .zip(b)
            .zip(g.torsion())
            .map(|((x, y), m)| num_integer::Integer::mod_floor(&(x + y), m))
            .collect()
    };
    // vertex id = factor * order + element index
    let orbit_rep = |simplex: &[usize]| -> Vec<usize> {
        let mut best: Option<Vec<usize>> = None;
        for shift in &elements {
            let translated: Vec<usize> = simplex
                .iter()
                .map(|&v| {
                    let factor = v / order;
                    let elt = &elements[v % order];
                    factor * order + index_of(&add(elt, shift))
                })
                .collect();
            // vertices stay sorted: factors are distinct within a simplex
            if best.as_ref().is_none_or(|b| &translated < b) {
                best = Some(translated);
            }
        }
        best.unwrap()
    };
    let mut orbit_bases: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut orbit_index: Vec<BTreeMap<Vec<usize>, usize>> = Vec::new();
    for d in 0..=join.dim() {
        let mut reps: Vec<Vec<usize>> = join
            .simplices(d)
            .iter()
            .map(|s| orbit_rep(s.vertices()))
            .collect();
        reps.sort();
        reps.dedup();
        let map: BTreeMap<Vec<usize>, usize> = reps
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, r)| (r, i))
            .collect();
        orbit_bases.push(reps);
        orbit_index.push(map);
    }
    let mut diffs = BTreeMap::new();
    for d in 1..=join.dim() {
        let mut m = SparseMatrix::zero(orbit_bases[d - 1].len(), orbit_bases[d].len());
        for (c, rep) in orbit_bases[d].iter().enumerate() {
            let mut sign = Integer::one();
            for i in 0..rep.len() {
                let mut face = rep.clone();
                face.remove(i);
                let fr = orbit_rep(&face);
                let r = orbit_index[d - 1][&fr];
                m.add_to(r, c, sign.clone());
                sign = -sign;
            }
        }
        diffs.insert(d as isize, m);
    }
    let ranks: Vec<usize> = orbit_bases.iter().map(Vec::len).collect();
    let b_cc = GradedComplex::new(0, ranks, diffs, Direction::Down)?;
    let b_hom = b_cc.homology()?;
    let b_homology: Vec<FgAbGroup> = (0..=n as isize).map(|d| b_hom.group(d)).collect();
    Ok(JoinModelHomology {
        e_homology,
        b_homology,
    })
}

/// Euler characteristic of the coinvariant complex, for the transfer-style
/// cross-checks.
pub fn join_quotient_euler(g: &FgAbGroup, n: usize) -> Result<i64, Error> {
    let order = enumerate_elements(g)?.len() as i64;
    let pts = points(order as usize)?;
    let mut join = pts.clone();
    for _ in 0..n {
        join = join_complex(&pts, &join)?;
    }
    Ok(join.euler_characteristic() / order)
}


#[cfg(test)]
mod rejection_tests {
    use super::*;

    #[test]
    fn infinite_group_rejected() {
        assert!(milnor_join_homology(&FgAbGroup::free(1), 1).is_err());
    }
}
