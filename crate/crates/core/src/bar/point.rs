//! Point-level arithmetic in `EG` and `BG`.
//!
//! A point is `|t_1, …, t_n, h_0[h_1|…|h_n]|` (or without `h_0` for a
//! `BG`-point) with nondecreasing rational coordinates in `[0, 1]` and
//! letters in the coefficient group. The canonical form applies the
//! collapsing relations in a fixed order — zero-coordinate collapse,
//! equal-coordinate merge left to right, identity-letter deletion, `t = 1`
//! truncation — so equality is normal-form equality.

use crate::error::Error;
use crate::exact::group::FgAbGroup;
use crate::scalar::{is_integral, Integer, Rational};
use num_integer::Integer as _;
use num_traits::{One, Zero};
use std::fmt;

/// Coefficient group for point-level arithmetic: a finitely generated
/// abelian group, or a rational vector space (the scalar-action case).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PointGroup {
    FgAb(FgAbGroup),
    QVec(usize),
}

impl PointGroup {
    pub fn arity(&self) -> usize {
        match self {
            PointGroup::FgAb(g) => g.generator_count(),
            PointGroup::QVec(d) => *d,
        }
    }

    /// Canonical coordinates: torsion coordinates reduced mod their
    /// modulus, integrality enforced for the finitely generated case.
    pub fn canonicalize(&self, coords: &[Rational]) -> Result<Vec<Rational>, Error> {
        if coords.len() != self.arity() {
            return Err(Error::bad_input("group element has wrong arity"));
        }
        match self {
            PointGroup::QVec(_) => Ok(coords.to_vec()),
            PointGroup::FgAb(g) => {
                let mut out = Vec::with_capacity(coords.len());
                for (i, c) in coords.iter().enumerate() {
                    if !is_integral(c) {
                        return Err(Error::bad_input(format!(
                            "non-integral coordinate {c} in a Z-based group"
                        )));
                    }
                    let v = c.to_integer();
                    if i < g.free_rank() {
                        out.push(crate::scalar::to_rational(&v));
                    } else {
                        let m = &g.torsion()[i - g.free_rank()];
                        out.push(crate::scalar::to_rational(&v.mod_floor(m)));
                    }
                }
                Ok(out)
            }
        }
    }
}

/// An element of the coefficient group, canonical coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupElt(pub Vec<Rational>);

impl GroupElt {
    pub fn zero(group: &PointGroup) -> GroupElt {
        GroupElt(vec![Rational::zero(); group.arity()])
    }

    pub fn new(group: &PointGroup, coords: Vec<Rational>) -> Result<GroupElt, Error> {
        Ok(GroupElt(group.canonicalize(&coords)?))
    }

    pub fn add(&self, other: &GroupElt, group: &PointGroup) -> GroupElt {
        let coords: Vec<Rational> = self
            .0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        GroupElt(group.canonicalize(&coords).expect("sum stays in group"))
    }

    pub fn neg(&self, group: &PointGroup) -> GroupElt {
        let coords: Vec<Rational> = self.0.iter().map(|a| -a.clone()).collect();
        GroupElt(
            group
                .canonicalize(&coords)
                .expect("negation stays in group"),
        )
    }

    pub fn sub(&self, other: &GroupElt, group: &PointGroup) -> GroupElt {
        self.add(&other.neg(group), group)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Scalar action; only a rational vector space admits one.
    pub fn scale(&self, c: &Rational, group: &PointGroup) -> Result<GroupElt, Error> {
        match group {
            PointGroup::QVec(_) => Ok(GroupElt(
                self.0.iter().map(|x| x.clone() * c.clone()).collect(),
            )),
            PointGroup::FgAb(_) => Err(Error::bad_input(
                "scalar action needs a rational vector space coefficient group",
            )),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PointKind {
    E,
    B,
}

/// A bar-construction point in canonical form.
#[derive(Clone, PartialEq, Eq)]
pub struct BarPoint {
    pub group: PointGroup,
    pub kind: PointKind,
    coords: Vec<Rational>,
    letters: Vec<GroupElt>,
}

impl BarPoint {
    /// Number of letters for `n` coordinates.
    fn letter_count(kind: PointKind, n: usize) -> usize {
        match kind {
            PointKind::E => n + 1,
            PointKind::B => n,
        }
    }

    pub fn new(
        group: PointGroup,
        kind: PointKind,
        coords: Vec<Rational>,
        letters: Vec<GroupElt>,
    ) -> Result<BarPoint, Error> {
        if letters.len() != Self::letter_count(kind, coords.len()) {
            return Err(Error::bad_input(
                "letter count does not match coordinate count",
            ));
        }
        let zero = Rational::zero();
        let one = Rational::one();
        for t in &coords {
            if *t < zero || *t > one {
                return Err(Error::bad_input(format!("coordinate {t} outside [0,1]")));
            }
        }
        if coords.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::bad_input("coordinates must be nondecreasing"));
        }
        let letters = letters
            .into_iter()
            .map(|l| GroupElt::new(&group, l.0))
            .collect::<Result<Vec<_>, _>>()?;
        let mut p = BarPoint {
            group,
            kind,
            coords,
            letters,
        };
        p.canonicalize();
        Ok(p)
    }

    pub fn basepoint(group: PointGroup, kind: PointKind) -> BarPoint {
        let letters = match kind {
            PointKind::E => vec![GroupElt::zero(&group)],
            PointKind::B => Vec::new(),
        };
        BarPoint {
            group,
            kind,
            coords: Vec::new(),
            letters,
        }
    }

    pub fn level(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn letters(&self) -> &[GroupElt] {
        &self.letters
    }

    /// Letter paired with coordinate `j` (0-based).
    fn letter_at(&self, j: usize) -> usize {
        match self.kind {
            PointKind::E => j + 1,
            PointKind::B => j,
        }
    }

    /// Apply the collapsing relations in the fixed order until stable.
    fn canonicalize(&mut self) {
        loop {
            // 1. zero-coordinate collapse
            if !self.coords.is_empty() && self.coords[0].is_zero() {
                self.coords.remove(0);
                match self.kind {
                    PointKind::E => {
                        let h1 = self.letters.remove(1);
                        self.letters[0] = self.letters[0].add(&h1, &self.group);
                    }
                    PointKind::B => {
                        self.letters.remove(0);
                    }
                }
                continue;
            }
            // 2. equal-coordinate merge, left to right
            if let Some(j) = self.coords.windows(2).position(|w| w[0] == w[1]) {
                let li = self.letter_at(j);
                let merged = self.letters[li].add(&self.letters[li + 1], &self.group);
                self.letters[li] = merged;
                self.letters.remove(li + 1);
                self.coords.remove(j + 1);
                continue;
            }
            // 3. identity-letter deletion (letters paired with coordinates)
            let first_zero =
                (0..self.coords.len()).find(|&j| self.letters[self.letter_at(j)].is_zero());
            if let Some(j) = first_zero {
                self.letters.remove(self.letter_at(j));
                self.coords.remove(j);
                continue;
            }
            // 4. t = 1 truncation
            if self.coords.last().is_some_and(Rational::is_one) {
                self.coords.pop();
                self.letters.pop();
                continue;
            }
            break;
        }
    }
}

impl fmt::Debug for BarPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        let hs: Vec<String> = self
            .letters
            .iter()
            .map(|l| {
                let cs: Vec<String> = l.0.iter().map(ToString::to_string).collect();
                format!("({})", cs.join(","))
            })
            .collect();
        match self.kind {
            PointKind::E => write!(f, "|{}; {}[{}]|", ts.join(","), hs[0], hs[1..].join("|")),
            PointKind::B => write!(f, "|{}; [{}]|", ts.join(","), hs.join("|")),
        }
    }
}

/// The abelian pairing: merge the coordinate lists into nondecreasing order
/// carrying letters along, multiply the `h_0` letters for `EG`-points, and
/// canonicalize.
pub fn shuffle_add(u: &BarPoint, v: &BarPoint) -> Result<BarPoint, Error> {
    if u.group != v.group || u.kind != v.kind {
        return Err(Error::bad_input(
            "shuffle_add needs the same group and model",
        ));
    }
    let group = u.group.clone();
    let mut coords = Vec::with_capacity(u.level() + v.level());
    let mut letters = Vec::new();
    if u.kind == PointKind::E {
        letters.push(u.letters[0].add(&v.letters[0], &group));
    }
    let (mut i, mut j) = (0usize, 0usize);
    while i < u.level() || j < v.level() {
        let take_left = if i == u.level() {
            false
        } else if j == v.level() {
            true
        } else {
            u.coords[i] <= v.coords[j]
        };
        if take_left {
            coords.push(u.coords[i].clone());
            letters.push(u.letters[u.letter_at(i)].clone());
            i += 1;
        } else {
            coords.push(v.coords[j].clone());
            letters.push(v.letters[v.letter_at(j)].clone());
            j += 1;
        }
    }
    BarPoint::new(group, u.kind, coords, letters)
}

/// Scalar action on a vector-space point: scales every letter.
pub fn scale_point(c: &Rational, p: &BarPoint) -> Result<BarPoint, Error> {
    let letters = p
        .letters
        .iter()
        .map(|l| l.scale(c, &p.group))
        .collect::<Result<Vec<_>, _>>()?;
    BarPoint::new(p.group.clone(), p.kind, p.coords.clone(), letters)
}

/// Projection `EG → BG`: drop `h_0`.
pub fn project_point(p: &BarPoint) -> Result<BarPoint, Error> {
    if p.kind != PointKind::E {
        return Err(Error::bad_input("projection is defined on EG-points"));
    }
    BarPoint::new(
        p.group.clone(),
        PointKind::B,
        p.coords.clone(),
        p.letters[1..].to_vec(),
    )
}

/// The contraction of `EG` at time `t`: coordinates move by
/// `Φ(x, t) = min(1, x + t)` with a fresh identity letter in front;
/// `t = 0` is the identity and `t = 1` lands on the basepoint.
pub fn contraction_point(x: &BarPoint, t: &Rational) -> Result<BarPoint, Error> {
    if x.kind != PointKind::E {
        return Err(Error::bad_input("the contraction lives on EG-points"));
    }
    if t < &Rational::zero() || t > &Rational::one() {
        return Err(Error::bad_input(format!(
            "contraction time {t} outside [0,1]"
        )));
    }
    let phi = |v: Rational| -> Rational {
        let s = v + t.clone();
        if s > Rational::one() {
            Rational::one()
        } else {
            s
        }
    };
    let mut coords = Vec::with_capacity(x.level() + 1);
    coords.push(phi(Rational::zero()));
    for c in &x.coords {
        coords.push(phi(c.clone()));
    }
    let mut letters = Vec::with_capacity(x.letters.len() + 1);
    letters.push(GroupElt::zero(&x.group));
    letters.extend(x.letters.iter().cloned());
    BarPoint::new(x.group.clone(), PointKind::E, coords, letters)
}

/// Random point with interior coordinates, deterministic from the
/// generator.
pub fn random_point(
    group: &PointGroup,
    kind: PointKind,
    max_level: usize,
    rng: &mut crate::rng::Rng,
) -> BarPoint {
    let n = rng.index(max_level + 1);
    let mut coords: Vec<Rational> = (0..n).map(|_| rng.unit_interval()).collect();
    coords.sort();
    let letters: Vec<GroupElt> = (0..BarPoint::letter_count(kind, n))
        .map(|_| {
            let cs: Vec<Rational> = (0..group.arity())
                .map(|_| match group {
                    PointGroup::FgAb(_) => {
                        crate::scalar::to_rational(&Integer::from(rng.int_in(-4, 4)))
                    }
                    PointGroup::QVec(_) => rng.rational(-4, 4, 3),
                })
                .collect();
            GroupElt::new(group, cs).expect("generated in group")
        })
        .collect();
    BarPoint::new(group.clone(), kind, coords, letters).expect("generated point is well-formed")
}
