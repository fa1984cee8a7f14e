//! Integral periods and the homology/cohomology generator bookkeeping that
//! the Deligne module leans on.
//!
//! The period basis is the dual of the torsion-free quotient of integral
//! homology, fixed by the deterministic SNF generators, so period vectors
//! are reproducible.

use crate::error::Error;
use crate::exact::complex::{GradedComplex, HomologyResult};
use crate::exact::matrix::SparseMatrix;
use crate::exact::solve;
use crate::scalar::{is_integral, Integer, Rational};
use crate::simplicial::cochain::{Cochain, CoefRing};
use crate::simplicial::complex::Complex;

/// Cached homology and cohomology data for one complex.
#[derive(Clone, Debug)]
pub struct ComplexHomology {
    complex: Complex,
    chain_homology: HomologyResult,
    cochain_homology: HomologyResult,
}

impl ComplexHomology {
    pub fn new(complex: &Complex) -> Result<Self, Error> {
        let chain: GradedComplex<Integer> = complex.chain_complex();
        let chain_homology = chain.homology()?;
        let cochain_homology = chain.dualize().homology()?;
        Ok(ComplexHomology {
            complex: complex.clone(),
            chain_homology,
            cochain_homology,
        })
    }

    pub fn complex(&self) -> &Complex {
        &self.complex
    }

    pub fn homology(&self) -> &HomologyResult {
        &self.chain_homology
    }

    pub fn cohomology(&self) -> &HomologyResult {
        &self.cochain_homology
    }

    /// Representative cycles of the free part of `H_deg(X; Z)`.
    pub fn free_cycles(&self, deg: usize) -> Vec<Vec<Integer>> {
        match self.chain_homology.by_degree.get(&(deg as isize)) {
            None => Vec::new(),
            Some(h) => h
                .generators
                .iter()
                .zip(&h.orders)
                .filter(|(_, o)| o.is_none())
                .map(|(g, _)| g.clone())
                .collect(),
        }
    }

    /// Representative cocycles of the free part of `H^deg(X; Z)`.
    pub fn free_cocycles(&self, deg: usize) -> Vec<Vec<Integer>> {
        match self.cochain_homology.by_degree.get(&(deg as isize)) {
            None => Vec::new(),
            Some(h) => h
                .generators
                .iter()
                .zip(&h.orders)
                .filter(|(_, o)| o.is_none())
                .map(|(g, _)| g.clone())
                .collect(),
        }
    }

    /// All generator cocycles of `H^deg(X; Z)` with their orders
    /// (`None` = infinite order).
    pub fn cocycle_generators(&self, deg: usize) -> Vec<(Vec<Integer>, Option<Integer>)> {
        match self.cochain_homology.by_degree.get(&(deg as isize)) {
            None => Vec::new(),
            Some(h) => h
                .generators
                .iter()
                .cloned()
                .zip(h.orders.iter().cloned())
                .collect(),
        }
    }

    /// Pairing matrix `P[i][j] = ⟨g_i, z_j⟩` between free cocycle and free
    /// cycle generators in degree `deg`. Unimodular by universal
    /// coefficients.
    pub fn free_pairing(&self, deg: usize) -> SparseMatrix<Integer> {
        let cycles = self.free_cycles(deg);
        let cocycles = self.free_cocycles(deg);
        let mut p = SparseMatrix::zero(cocycles.len(), cycles.len());
        for (i, g) in cocycles.iter().enumerate() {
            for (j, z) in cycles.iter().enumerate() {
                let v: Integer = g.iter().zip(z).map(|(a, b)| a * b).sum();
                p.set(i, j, v);
            }
        }
        p
    }

    /// Periods of a rational cochain against the free homology basis.
    pub fn periods(&self, theta: &Cochain) -> Result<Vec<Rational>, Error> {
        let deg = theta.degree();
        self.free_cycles(deg)
            .iter()
            .map(|z| theta.pair(&self.complex, z))
            .collect()
    }

    /// Coordinates of an integral cocycle's class in the `H^deg(X; Z)`
    /// generators. `Ok(None)` when the vector is not a cocycle.
    pub fn cohomology_class(
        &self,
        deg: usize,
        cocycle: &[Integer],
    ) -> Result<Option<Vec<Integer>>, Error> {
        match self.cochain_homology.by_degree.get(&(deg as isize)) {
            None => Ok(Some(Vec::new())),
            Some(h) => h.express(cocycle),
        }
    }

    /// Find integer coefficients `n` with `Σ n_i [ι(free cocycle g_i)]`
    /// matching the given period vector; `None` when the periods are not in
    /// the integral lattice.
    pub fn solve_periods_integrally(
        &self,
        deg: usize,
        periods: &[Rational],
    ) -> Result<Option<Vec<Integer>>, Error> {
        if periods.iter().any(|p| !is_integral(p)) {
            return Ok(None);
        }
        let target: Vec<Integer> = periods.iter().map(Rational::to_integer).collect();
        let pt = self.free_pairing(deg).transpose();
        solve::solve_int(&pt, &target)
    }
}

#[derive(Clone, Debug)]
pub struct PeriodReport {
    pub is_closed: bool,
    /// Period against each free homology generator; absent when the cochain
    /// is not closed and closedness was requested.
    pub periods: Option<Vec<Rational>>,
    pub has_integral_periods: bool,
}

/// Periods of a rational cochain. With `check_closed`, a non-closed cochain
/// yields an explicit not-closed report with no periods; otherwise the raw
/// pairings are returned (they are only class invariants when closed).
pub fn integral_periods(
    homology: &ComplexHomology,
    theta: &Cochain,
    check_closed: bool,
) -> Result<PeriodReport, Error> {
    if theta.ring() != CoefRing::Rat {
        return Err(Error::bad_input("integral_periods expects a Q-cochain"));
    }
    let is_closed = theta.coboundary(homology.complex()).is_zero();
    if check_closed && !is_closed {
        return Ok(PeriodReport {
            is_closed: false,
            periods: None,
            has_integral_periods: false,
        });
    }
    let periods = homology.periods(theta)?;
    let integral = periods.iter().all(is_integral);
    Ok(PeriodReport {
        is_closed,
        periods: Some(periods),
        has_integral_periods: integral,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Rng;
    use crate::scalar::rat;
    use crate::simplicial::cochain::random_cochain;
    use crate::simplicial::spaces::{standard_space, SpaceName};
    use num_traits::One;

    #[test]
    fn zero_cochain_periods() {
        let x = standard_space(SpaceName::Circle);
        let h = ComplexHomology::new(&x).unwrap();
        let z = Cochain::zero(1, CoefRing::Rat);
        let r = integral_periods(&h, &z, true).unwrap();
        assert!(r.is_closed && r.has_integral_periods);
        assert!(r.periods.unwrap().iter().all(num_traits::Zero::is_zero));
    }

    #[test]
    fn exact_cochains_have_zero_periods() {
        let mut rng = Rng::new(9);
        let x = standard_space(SpaceName::Torus);
        let h = ComplexHomology::new(&x).unwrap();
        for _ in 0..10 {
            let eta = random_cochain(&x, 0, CoefRing::Rat, &mut rng);
            let theta = eta.coboundary(&x);
            let r = integral_periods(&h, &theta, true).unwrap();
            assert!(r.is_closed);
            assert!(r.periods.unwrap().iter().all(num_traits::Zero::is_zero));
        }
    }

    #[test]
    fn half_generator_on_circle() {
        let x = standard_space(SpaceName::Circle);
        let h = ComplexHomology::new(&x).unwrap();
        // half the integral generator cocycle in degree 1
        let gen = h.free_cocycles(1).remove(0);
        let rat_gen: Vec<Rational> = gen.iter().map(crate::scalar::to_rational).collect();
        let theta = Cochain::from_vec(&x, 1, CoefRing::Rat, &rat_gen)
            .unwrap()
            .scale(&rat(1, 2))
            .unwrap();
        let r = integral_periods(&h, &theta, true).unwrap();
        assert!(r.is_closed);
        assert!(!r.has_integral_periods);
        let p = r.periods.unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].denom(), &Integer::from(2));
    }

    #[test]
    fn periods_invariant_under_exact_shift() {
        let mut rng = Rng::new(21);
        let x = standard_space(SpaceName::Torus);
        let h = ComplexHomology::new(&x).unwrap();
        let gen = h.free_cocycles(1).remove(0);
        let theta = Cochain::from_int_vec(&x, 1, &gen)
            .retag(CoefRing::Rat)
            .unwrap();
        let base = h.periods(&theta).unwrap();
        for _ in 0..10 {
            let eta = random_cochain(&x, 0, CoefRing::Rat, &mut rng);
            let shifted = theta.add(&eta.coboundary(&x)).unwrap();
            assert_eq!(h.periods(&shifted).unwrap(), base);
        }
    }

    #[test]
    fn pairing_unimodular_on_corpus() {
        for name in [
            SpaceName::Circle,
            SpaceName::Torus,
            SpaceName::Sphere(2),
            SpaceName::Klein,
        ] {
            let x = standard_space(name);
            let h = ComplexHomology::new(&x).unwrap();
            for deg in 0..=x.dim() {
                let p = h.free_pairing(deg);
                assert_eq!(p.rows(), p.cols(), "{name} deg {deg}");
                if p.rows() > 0 {
                    let s = crate::exact::snf::smith_normal_form(&p);
                    assert!(s.diagonal().iter().all(Integer::is_one), "{name} deg {deg}");
                }
            }
        }
    }
}
