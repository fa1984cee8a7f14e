//! The cone-model Deligne complex.
//!
//! Degree-`n` term: `C^n(X; Z) ⊕ C^n_{≥q}(X; Q) ⊕ C^{n−1}(X; Q)` with
//! differential `d(c, ω, θ) = (δc, δω, ι(c) − ω − δθ)` — the cone over
//! `(Z-cochains ⊕ degree-≥q rational cochains) → rational cochains`. The
//! middle slot is the weight truncation: it vanishes below degree `q`.
//!
//! The terms mix `Z` and `Q` coefficients, so the complex is its own type;
//! a rationalized [`GradedComplex`] view is available for matrix-level
//! checks, and class questions are answered by membership tests.

use crate::error::Error;
use crate::exact::complex::{Direction, GradedComplex};
use crate::exact::matrix::SparseMatrix;
use crate::scalar::Rational;
use crate::simplicial::cochain::{Cochain, CoefRing};
use crate::simplicial::complex::Complex;
use num_traits::One;
use std::collections::BTreeMap;

#[derive(Clone, Debug)]
pub struct DeligneComplex {
    complex: Complex,
    q: usize,
    p_max: usize,
}

/// One homogeneous element of the Deligne complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeligneElement {
    pub degree: usize,
    pub c: Cochain,
    pub omega: Cochain,
    pub theta: Cochain,
}

impl DeligneElement {
    pub fn zero(degree: usize) -> Self {
        DeligneElement {
            degree,
            c: Cochain::zero(degree, CoefRing::Int),
            omega: Cochain::zero(degree, CoefRing::Rat),
            theta: Cochain::zero(degree.saturating_sub(1), CoefRing::Rat),
        }
    }
}

pub fn deligne_complex(complex: &Complex, q: usize, p_max: usize) -> Result<DeligneComplex, Error> {
    if q == 0 {
        return Err(Error::bad_input("deligne_complex needs weight q >= 1"));
    }
    Ok(DeligneComplex {
        complex: complex.clone(),
        q,
        p_max,
    })
}

impl DeligneComplex {
    pub fn complex(&self) -> &Complex {
        &self.complex
    }

    pub fn weight(&self) -> usize {
        self.q
    }

    pub fn p_max(&self) -> usize {
        self.p_max
    }

    /// `(Z-rank, ω-rank, θ-rank)` of the degree-`n` term.
    pub fn term_ranks(&self, n: usize) -> (usize, usize, usize) {
        let count = |d: usize| self.complex.simplices(d).len();
        let z = count(n);
        let omega = if n >= self.q { count(n) } else { 0 };
        let theta = if n >= 1 { count(n - 1) } else { 0 };
        (z, omega, theta)
    }

    /// Check that an element respects the weight truncation and shape.
    pub fn check_shape(&self, x: &DeligneElement) -> Result<(), Error> {
        if x.c.ring() != CoefRing::Int
            || x.omega.ring() != CoefRing::Rat
            || x.theta.ring() != CoefRing::Rat
        {
            return Err(Error::bad_input("Deligne element rings must be (Z, Q, Q)"));
        }
        if x.c.degree() != x.degree || x.omega.degree() != x.degree {
            return Err(Error::bad_input("c and ω must sit in the element degree"));
        }
        if x.degree >= 1 && x.theta.degree() != x.degree - 1 {
            return Err(Error::bad_input("θ must sit one degree below"));
        }
        if x.degree < self.q && !x.omega.is_zero() {
            return Err(Error::bad_input(format!(
                "ω must vanish below the weight: degree {} < q = {}",
                x.degree, self.q
            )));
        }
        Ok(())
    }

    /// `d(c, ω, θ) = (δc, δω, ι(c) − ω − δθ)`.
    pub fn apply_d(&self, x: &DeligneElement) -> Result<DeligneElement, Error> {
        self.check_shape(x)?;
        let dc = x.c.coboundary(&self.complex);
        let domega = x.omega.coboundary(&self.complex);
        // the ω-slot of the image must respect the truncation: δω of a
        // below-weight ω is zero anyway because ω itself is zero there
        let iota_c = x.c.retag(CoefRing::Rat)?;
        let theta_slot = iota_c
            .sub(&x.omega)?
            .sub(&x.theta.coboundary(&self.complex))?;
        Ok(DeligneElement {
            degree: x.degree + 1,
            c: dc,
            omega: domega,
            theta: theta_slot,
        })
    }

    /// `d ∘ d = 0` on a supplied element (exact arithmetic).
    pub fn verify_dd(&self, x: &DeligneElement) -> Result<bool, Error> {
        let ddx = self.apply_d(&self.apply_d(x)?)?;
        Ok(ddx.c.is_zero() && ddx.omega.is_zero() && ddx.theta.is_zero())
    }

    /// Rationalized view: the same shape over `Q` as an honest
    /// [`GradedComplex`], with `d∘d = 0` asserted at construction.
    pub fn rational_complex(&self) -> Result<GradedComplex<Rational>, Error> {
        let mut ranks = Vec::new();
        for n in 0..=self.p_max {
            let (z, o, t) = self.term_ranks(n);
            ranks.push(z + o + t);
        }
        let mut diffs = BTreeMap::new();
        for n in 0..self.p_max {
            let (z0, o0, t0) = self.term_ranks(n);
            let (z1, o1, t1) = self.term_ranks(n + 1);
            let mut d = SparseMatrix::zero(z1 + o1 + t1, z0 + o0 + t0);
            let delta_z = self.complex.boundary_matrix::<Rational>(n + 1).transpose();
            // δ on the Z slot
            for (r, c, v) in delta_z.iter() {
                if r < z1 {
                    d.set(r, c, v.clone());
                }
            }
            // δ on the ω slot
            if o0 > 0 && o1 > 0 {
                for (r, c, v) in delta_z.iter() {
                    d.set(z1 + r, z0 + c, v.clone());
                }
            }
            // θ slot of the target: ι(c) − ω − δθ
            // ι(c): identity from the Z slot (both indexed by n-simplices)
            for i in 0..z0 {
                d.set(z1 + o1 + i, i, Rational::one());
            }
            if o0 > 0 {
                for i in 0..o0 {
                    d.set(z1 + o1 + i, z0 + i, -Rational::one());
                }
            }
            if n >= 1 && t0 > 0 {
                let delta_theta = self.complex.boundary_matrix::<Rational>(n).transpose();
                for (r, c, v) in delta_theta.iter() {
                    d.set(z1 + o1 + r, z0 + o0 + c, -v.clone());
                }
            }
            diffs.insert(n as isize, d);
        }
        GradedComplex::new(0, ranks, diffs, Direction::Up)
    }
}
