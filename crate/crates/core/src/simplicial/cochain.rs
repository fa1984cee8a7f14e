//! Cochains over `Z`, `Q`, and `Q/Z`.
//!
//! Values are stored as exact rationals; the ring tag pins the semantics:
//! `Z`-cochains have integral values, `Q/Z`-cochains store the canonical
//! representative in `[0, 1)` and addition wraps. Absent key = 0.

use crate::error::Error;
use crate::scalar::{is_integral, mod_one, to_rational, Integer, Rational};
use crate::simplicial::complex::{Complex, SimplexKey};
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoefRing {
    Int,
    Rat,
    RatModZ,
}

impl CoefRing {
    pub fn label(self) -> &'static str {
        match self {
            CoefRing::Int => "Z",
            CoefRing::Rat => "Q",
            CoefRing::RatModZ => "QmodZ",
        }
    }

    pub fn parse(s: &str) -> Result<Self, Error> {
        match s {
            "Z" => Ok(CoefRing::Int),
            "Q" => Ok(CoefRing::Rat),
            "QmodZ" => Ok(CoefRing::RatModZ),
            _ => Err(Error::bad_input(format!("unknown ring `{s}`"))),
        }
    }

    fn normalize(self, v: Rational) -> Result<Rational, Error> {
        match self {
            CoefRing::Int => {
                if !is_integral(&v) {
                    return Err(Error::bad_input(format!(
                        "value {v} not an integer in a Z-cochain"
                    )));
                }
                Ok(v)
            }
            CoefRing::Rat => Ok(v),
            CoefRing::RatModZ => Ok(mod_one(&v)),
        }
    }
}

/// Degree-homogeneous cochain on a complex. Keys are exactly degree-`n`
/// simplices of the complex it was built against (checked on construction).
#[derive(Clone, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    ring: CoefRing,
    values: BTreeMap<SimplexKey, Rational>,
}

impl Cochain {
    pub fn zero(degree: usize, ring: CoefRing) -> Self {
        Cochain {
            degree,
            ring,
            values: BTreeMap::new(),
        }
    }

    pub fn from_values(
        complex: &Complex,
        degree: usize,
        ring: CoefRing,
        values: impl IntoIterator<Item = (SimplexKey, Rational)>,
    ) -> Result<Self, Error> {
        let mut map = BTreeMap::new();
        for (k, v) in values {
            if k.dim() != degree {
                return Err(Error::bad_input(format!(
                    "key {k:?} has dimension {} in a degree-{degree} cochain",
                    k.dim()
                )));
            }
            if !complex.contains(&k) {
                return Err(Error::bad_input(format!(
                    "key {k:?} not a simplex of the complex"
                )));
            }
            let v = ring.normalize(v)?;
            if !v.is_zero() {
                map.insert(k, v);
            }
        }
        Ok(Cochain {
            degree,
            ring,
            values: map,
        })
    }

    /// Build from a coefficient vector indexed like `complex.simplices(degree)`.
    pub fn from_vec(
        complex: &Complex,
        degree: usize,
        ring: CoefRing,
        coeffs: &[Rational],
    ) -> Result<Self, Error> {
        let simplices = complex.simplices(degree);
        if coeffs.len() != simplices.len() {
            return Err(Error::DimensionMismatch(format!(
                "cochain vector length {} vs {} simplices",
                coeffs.len(),
                simplices.len()
            )));
        }
        Self::from_values(
            complex,
            degree,
            ring,
            simplices.iter().cloned().zip(coeffs.iter().cloned()),
        )
    }

    pub fn from_int_vec(complex: &Complex, degree: usize, coeffs: &[Integer]) -> Self {
        let rat: Vec<Rational> = coeffs.iter().map(to_rational).collect();
        Self::from_vec(complex, degree, CoefRing::Int, &rat).expect("integral vector")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn ring(&self) -> CoefRing {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, key: &SimplexKey) -> Rational {
        self.values.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SimplexKey, &Rational)> {
        self.values.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &SimplexKey> {
        self.values.keys()
    }

    /// Coefficient vector in the canonical simplex order.
    pub fn to_vec(&self, complex: &Complex) -> Vec<Rational> {
        complex
            .simplices(self.degree)
            .iter()
            .map(|s| self.value(s))
            .collect()
    }

    pub fn to_int_vec(&self, complex: &Complex) -> Result<Vec<Integer>, Error> {
        self.to_vec(complex)
            .into_iter()
            .map(|v| {
                if is_integral(&v) {
                    Ok(v.to_integer())
                } else {
                    Err(Error::bad_input(format!("non-integral value {v}")))
                }
            })
            .collect()
    }

    /// Pointwise sum (rings must match; `Q/Z` wraps).
    pub fn add(&self, other: &Cochain) -> Result<Cochain, Error> {
        if self.degree != other.degree || self.ring != other.ring {
            return Err(Error::bad_input("cochain add: degree or ring mismatch"));
        }
        let mut out = self.clone();
        for (k, v) in &other.values {
            let sum = out.value(k) + v.clone();
            let sum = self.ring.normalize(sum)?;
            if sum.is_zero() {
                out.values.remove(k);
            } else {
                out.values.insert(k.clone(), sum);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Cochain {
        let mut out = Cochain::zero(self.degree, self.ring);
        for (k, v) in &self.values {
            let nv = self
                .ring
                .normalize(-v.clone())
                .expect("negation stays in ring");
            if !nv.is_zero() {
                out.values.insert(k.clone(), nv);
            }
        }
        out
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain, Error> {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Rational) -> Result<Cochain, Error> {
        let mut out = Cochain::zero(self.degree, self.ring);
        for (k, v) in &self.values {
            let sv = self.ring.normalize(v.clone() * s.clone())?;
            if !sv.is_zero() {
                out.values.insert(k.clone(), sv);
            }
        }
        Ok(out)
    }

    /// Reinterpret with another ring tag (`Z -> Q` inclusion, `Q -> Q/Z`
    /// reduction, …).
    pub fn retag(&self, ring: CoefRing) -> Result<Cochain, Error> {
        let mut out = Cochain::zero(self.degree, ring);
        for (k, v) in &self.values {
            let nv = ring.normalize(v.clone())?;
            if !nv.is_zero() {
                out.values.insert(k.clone(), nv);
            }
        }
        Ok(out)
    }

    /// Coboundary: `(δθ)(τ) = Σ_i (−1)^i θ(∂_i τ)`, degree raised by one.
    pub fn coboundary(&self, complex: &Complex) -> Cochain {
        let out_degree = self.degree + 1;
        let mut out = Cochain::zero(out_degree, self.ring);
        if out_degree > complex.dim() {
            return out; // no simplices above top degree
        }
        for tau in complex.simplices(out_degree) {
            let mut acc = Rational::zero();
            let mut negate = false;
            for i in 0..=out_degree {
                let f = tau.face(i);
                let v = self.value(&f);
                if negate {
                    acc -= v;
                } else {
                    acc += v;
                }
                negate = !negate;
            }
            let acc = self.ring.normalize(acc).expect("coboundary stays in ring");
            if !acc.is_zero() {
                out.values.insert(tau.clone(), acc);
            }
        }
        out
    }

    /// Pairing against a chain coefficient vector (canonical simplex order).
    pub fn pair(&self, complex: &Complex, chain: &[Integer]) -> Result<Rational, Error> {
        let simplices = complex.simplices(self.degree);
        if chain.len() != simplices.len() {
            return Err(Error::DimensionMismatch("pairing length mismatch".into()));
        }
        let mut acc = Rational::zero();
        for (s, c) in simplices.iter().zip(chain) {
            if !c.is_zero() {
                acc += self.value(s) * to_rational(c);
            }
        }
        Ok(acc)
    }

    /// Restrict to the keys inside the closed star of `base`.
    pub fn restrict_to_star(&self, complex: &Complex, base: &SimplexKey) -> Cochain {
        let mut out = Cochain::zero(self.degree, self.ring);
        for (k, v) in &self.values {
            if complex.in_star(base, k) {
                out.values.insert(k.clone(), v.clone());
            }
        }
        out
    }

    /// Largest absolute value (for reports and sanity checks).
    pub fn sup_norm(&self) -> Rational {
        self.values
            .values()
            .map(|v| v.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

/// Random cochain with small entries, deterministic from the generator.
pub fn random_cochain(
    complex: &Complex,
    degree: usize,
    ring: CoefRing,
    rng: &mut crate::rng::Rng,
) -> Cochain {
    let coeffs: Vec<Rational> = complex
        .simplices(degree)
        .iter()
        .map(|_| match ring {
            CoefRing::Int => to_rational(&Integer::from(rng.int_in(-5, 5))),
            _ => rng.rational(-5, 5, 4),
        })
        .collect();
    Cochain::from_vec(complex, degree, ring, &coeffs).expect("generated in ring")
}

impl fmt::Debug for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cochain(deg={}, {}, {{", self.degree, self.ring.label())?;
        for (i, (k, v)) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k:?}: {v}")?;
        }
        write!(f, "}})")
    }
}
