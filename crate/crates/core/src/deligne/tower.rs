//! Čech cocycle towers over the closed-star cover.
//!
//! A tower of degree `p` and weight `q` holds local rational data
//! `T_{r,s}` — a degree-`s` cochain supported on the star intersection of
//! each `r`-simplex, for `r + s = p − 1` and `s ≤ min(q−1, p−1)` — plus a
//! locally constant integral Čech `p`-cochain `m`. The cocycle conditions
//! are, with the sign convention `D = δ̌ + (−1)^r δ`:
//!
//! * `δ̌m = 0`,
//! * `δ̌T_{p−1,0} = ι(m)` on every `(p+1)`-fold intersection,
//! * `δ̌T_{r−1,s} + (−1)^r δT_{r,s−1} = 0` at the interior bidegrees —
//!   the local-form descent equations; the `s = q` component is dropped by
//!   the weight truncation (that freedom is the curvature).
//!
//! The collapse onto a global cocycle follows the front-face/back-face rule
//! (the 0/1 discretization of a partition of unity): the Čech index of a
//! component is read off the first `r + 1` vertices of a global simplex and
//! the local cochain is evaluated on the back face.

use crate::deligne::cocycle::{cocycle_check, DeligneCocycle};
use crate::error::Error;
use crate::exact::solve;
use crate::rng::Rng;
use crate::scalar::{is_integral, to_rational, Integer, Rational};
use crate::simplicial::cochain::{Cochain, CoefRing};
use crate::simplicial::complex::{Complex, SimplexKey};
use crate::simplicial::periods::ComplexHomology;
use crate::IntMatrix;
use num_traits::Zero;
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CechTower {
    /// Total degree (the `p` of the modelled class).
    pub degree: usize,
    /// Weight: local data exists for `s ≤ q − 1`.
    pub q: usize,
    /// Integral Čech component: one integer per `degree`-simplex.
    pub m: BTreeMap<SimplexKey, Integer>,
    /// `components[(r, s)][S]`: degree-`s` local cochain on `St(S)`.
    pub components: BTreeMap<(usize, usize), BTreeMap<SimplexKey, Cochain>>,
}

impl CechTower {
    pub fn zero(degree: usize, q: usize) -> Self {
        CechTower {
            degree,
            q,
            m: BTreeMap::new(),
            components: BTreeMap::new(),
        }
    }

    /// Bidegrees a tower of this degree and weight may populate.
    pub fn bidegrees(degree: usize, q: usize) -> Vec<(usize, usize)> {
        if degree == 0 {
            return Vec::new();
        }
        let total = degree - 1;
        (0..=total.min(q - 1))
            .map(|s| (total - s, s))
            .rev()
            .collect()
    }

    pub fn local(&self, r: usize, s: usize, key: &SimplexKey) -> Cochain {
        self.components
            .get(&(r, s))
            .and_then(|m| m.get(key))
            .cloned()
            .unwrap_or_else(|| Cochain::zero(s, CoefRing::Rat))
    }

    pub fn m_value(&self, key: &SimplexKey) -> Integer {
        self.m.get(key).cloned().unwrap_or_else(Integer::zero)
    }

    pub fn set_local(&mut self, r: usize, s: usize, key: SimplexKey, value: Cochain) {
        if value.is_zero() {
            return;
        }
        self.components
            .entry((r, s))
            .or_default()
            .insert(key, value);
    }

    /// Componentwise sum (towers of one degree and weight form a group).
    pub fn add(&self, other: &CechTower) -> Result<CechTower, Error> {
        if self.degree != other.degree || self.q != other.q {
            return Err(Error::bad_input("tower sum needs matching degree and weight"));
        }
        let mut out = self.clone();
        for (key, v) in &other.m {
            let sum = out.m_value(key) + v.clone();
            if sum.is_zero() {
                out.m.remove(key);
            } else {
                out.m.insert(key.clone(), sum);
            }
        }
        for (&(r, s), locals) in &other.components {
            for (key, local) in locals {
                let sum = out.local(r, s, key).add(local)?;
                if let Some(bucket) = out.components.get_mut(&(r, s)) {
                    bucket.remove(key);
                }
                out.set_local(r, s, key.clone(), sum);
            }
        }
        Ok(out)
    }

    /// Shape and support: component keys are simplices of the right
    /// dimension, local cochains rational of the right degree and supported
    /// inside their star.
    pub fn check_support(&self, complex: &Complex) -> Result<(), Error> {
        for key in self.m.keys() {
            if key.dim() != self.degree || !complex.contains(key) {
                return Err(Error::InvalidTower(format!(
                    "integral component keyed by {key:?}, expected a {}-simplex",
                    self.degree
                )));
            }
        }
        let allowed = Self::bidegrees(self.degree, self.q);
        for (&(r, s), locals) in &self.components {
            if !allowed.contains(&(r, s)) {
                return Err(Error::InvalidTower(format!(
                    "component at bidegree ({r},{s}) outside the tower shape"
                )));
            }
            for (key, local) in locals {
                if key.dim() != r || !complex.contains(key) {
                    return Err(Error::InvalidTower(format!(
                        "component ({r},{s}) keyed by {key:?}"
                    )));
                }
                if local.degree() != s || local.ring() != CoefRing::Rat {
                    return Err(Error::InvalidTower(format!(
                        "local cochain at ({r},{s})[{key:?}] has wrong degree or ring"
                    )));
                }
                for simplex in local.support() {
                    if !complex.in_star(key, simplex) {
                        return Err(Error::InvalidTower(format!(
                            "local cochain at ({r},{s})[{key:?}] supported outside St({key:?})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Čech coboundary of the `(r, s)` component at an `(r+1)`-simplex.
    fn cech_delta_at(&self, complex: &Complex, r: usize, s: usize, key: &SimplexKey) -> Cochain {
        let mut acc = Cochain::zero(s, CoefRing::Rat);
        let mut negate = false;
        for j in 0..=key.dim() {
            let face = key.face(j);
            let term = self.local(r, s, &face).restrict_to_star(complex, key);
            acc = if negate {
                acc.sub(&term)
            } else {
                acc.add(&term)
            }
            .expect("same shape");
            negate = !negate;
        }
        acc
    }
}

#[derive(Clone, Debug)]
pub struct TowerReport {
    pub valid: bool,
    /// First violated equation with its intersection key.
    pub defect: Option<(String, String)>,
}

/// The cocycle conditions. The defect report names the first violated
/// equation and the intersection it fails on.
pub fn tower_check(complex: &Complex, t: &CechTower) -> Result<TowerReport, Error> {
    t.check_support(complex)?;
    let p = t.degree;
    let fail = |eq: &str, key: &SimplexKey| TowerReport {
        valid: false,
        defect: Some((eq.to_string(), key.label())),
    };
    // (i) δ̌m = 0 on (p+1)-simplices
    if p < complex.dim() {
        for key in complex.simplices(p + 1) {
            let mut acc = Integer::zero();
            let mut negate = false;
            for j in 0..=key.dim() {
                let v = t.m_value(&key.face(j));
                if negate {
                    acc -= v;
                } else {
                    acc += v;
                }
                negate = !negate;
            }
            if !acc.is_zero() {
                return Ok(fail("δ̌m = 0", key));
            }
        }
    }
    if p == 0 {
        return Ok(TowerReport {
            valid: true,
            defect: None,
        });
    }
    // (ii) δ̌T_{p−1,0} = ι(m) on every p-simplex, as constant 0-cochains
    for key in complex.simplices(p) {
        let lhs = t.cech_delta_at(complex, p - 1, 0, key);
        let m = to_rational(&t.m_value(key));
        for vertex in complex.star_of(key) {
            if vertex.dim() != 0 {
                continue;
            }
            if lhs.value(&vertex) != m {
                return Ok(fail("δ̌T_{p−1,0} = ι(m)", key));
            }
        }
    }
    // (iii) δ̌T_{r−1,s} + (−1)^r δT_{r,s−1} = 0 for interior bidegrees;
    // at r = 0 the Čech term is absent and the equation forces flatness
    let s_hi = (t.q - 1).min(p);
    for s in 1..=s_hi {
        let r = p - s;
        for key in complex.simplices(r) {
            let cech = if r == 0 {
                Cochain::zero(s, CoefRing::Rat)
            } else {
                t.cech_delta_at(complex, r - 1, s, key)
            };
            let local = t
                .local(r, s - 1, key)
                .coboundary(complex)
                .restrict_to_star(complex, key);
            let signed = if r.is_multiple_of(2) { local } else { local.neg() };
            let total = cech.add(&signed)?;
            if !total.is_zero() {
                let equation = if r == 0 {
                    format!("δT_{{0,{}}} = 0", s - 1)
                } else {
                    format!("δ̌T_{{{},{s}}} + (−1)^{r} δT_{{{r},{}}} = 0", r - 1, s - 1)
                };
                return Ok(fail(&equation, key));
            }
        }
    }
    Ok(TowerReport {
        valid: true,
        defect: None,
    })
}

/// The tower differential `D(m, T) = (δ̌m, ι(m) − Trunc D_tot T)`; towers
/// are cocycles exactly when it vanishes, and `D ∘ D = 0`.
pub fn tower_differential(complex: &Complex, t: &CechTower) -> Result<CechTower, Error> {
    t.check_support(complex)?;
    let p = t.degree;
    let mut out = CechTower::zero(p + 1, t.q);
    // δ̌m
    if p < complex.dim() {
        for key in complex.simplices(p + 1) {
            let mut acc = Integer::zero();
            let mut negate = false;
            for j in 0..=key.dim() {
                let v = t.m_value(&key.face(j));
                if negate {
                    acc -= v;
                } else {
                    acc += v;
                }
                negate = !negate;
            }
            if !acc.is_zero() {
                out.m.insert(key.clone(), acc);
            }
        }
    }
    // ι(m) at bidegree (p, 0)
    for (key, v) in &t.m {
        let mut constant = Cochain::zero(0, CoefRing::Rat);
        for simplex in complex.star_of(key) {
            if simplex.dim() == 0 {
                constant = constant
                    .add(&Cochain::from_values(
                        complex,
                        0,
                        CoefRing::Rat,
                        [(simplex, to_rational(v))],
                    )?)
                    .expect("same shape");
            }
        }
        out.set_local(p, 0, key.clone(), constant);
    }
    // − Trunc D_tot T
    let s_hi = (t.q - 1).min(p);
    for s in 0..=s_hi {
        let r = p - s;
        for key in complex.simplices(r) {
            let mut acc = out.local(r, s, key);
            if r >= 1 {
                let cech = t.cech_delta_at(complex, r - 1, s, key);
                acc = acc.sub(&cech)?;
            }
            if s >= 1 {
                let local = t
                    .local(r, s - 1, key)
                    .coboundary(complex)
                    .restrict_to_star(complex, key);
                let signed = if r.is_multiple_of(2) { local } else { local.neg() };
                acc = acc.sub(&signed)?;
            }
            if let Some(bucket) = out.components.get_mut(&(r, s)) {
                bucket.remove(key);
            }
            out.set_local(r, s, key.clone(), acc);
        }
    }
    Ok(out)
}

/// The linear collapse of arbitrary towers onto Deligne data: front-face
/// Čech indices, back-face evaluation, curvature from the weight-truncated
/// component. A chain map: `collapse(D T) = d(collapse T)`.
pub fn tower_collapse_raw(complex: &Complex, t: &CechTower) -> Result<DeligneCocycle, Error> {
    let p = t.degree;
    // c from the integral component
    let mut c = Cochain::zero(p, CoefRing::Int);
    for (key, v) in &t.m {
        c = c.add(&Cochain::from_values(
            complex,
            p,
            CoefRing::Int,
            [(key.clone(), to_rational(v))],
        )?)?;
    }
    // θ = Σ_r AW_r(T_{r,s})
    let mut theta = Cochain::zero(p.saturating_sub(1), CoefRing::Rat);
    if p >= 1 {
        let mut values = Vec::new();
        for tau in complex.simplices(p - 1) {
            let mut acc = Rational::zero();
            for &(r, s) in CechTower::bidegrees(p, t.q).iter() {
                let front = tau.front(r);
                let back = tau.back(r);
                acc += t.local(r, s, &front).value(&back);
            }
            if !acc.is_zero() {
                values.push((tau.clone(), acc));
            }
        }
        theta = Cochain::from_values(complex, p - 1, CoefRing::Rat, values)?;
    }
    // ω = (−1)^{p−q+1} AW_{p−q}(δ T_{p−q, q−1})
    let mut omega = Cochain::zero(p, CoefRing::Rat);
    if p >= t.q {
        let r = p - t.q;
        let s = t.q - 1;
        let mut values = Vec::new();
        for tau in complex.simplices(p) {
            let front = tau.front(r);
            let back = tau.back(r);
            let local_delta = t.local(r, s, &front).coboundary(complex);
            let v = local_delta.value(&back);
            if !v.is_zero() {
                values.push((tau.clone(), v));
            }
        }
        omega = Cochain::from_values(complex, p, CoefRing::Rat, values)?;
        if (p - t.q).is_multiple_of(2) {
            omega = omega.neg();
        }
    }
    Ok(DeligneCocycle {
        p,
        q: t.q,
        c,
        omega,
        theta,
    })
}

/// Collapse of a valid tower; rejects towers failing `tower_check`.
pub fn tower_collapse(hom: &ComplexHomology, t: &CechTower) -> Result<DeligneCocycle, Error> {
    let complex = hom.complex();
    let report = tower_check(complex, t)?;
    if !report.valid {
        let (eq, key) = report.defect.unwrap();
        return Err(Error::InvalidTower(format!("{eq} fails at {key}")));
    }
    let x = tower_collapse_raw(complex, t)?;
    debug_assert!(cocycle_check(hom, &x)?.valid);
    Ok(x)
}

/// Integral solve of `δy = rhs` inside the star of `base`; the star is a
/// cone, so closed local data always solves.
fn solve_local_int(
    complex: &Complex,
    base: &SimplexKey,
    degree: usize,
    rhs: &Cochain,
) -> Result<Cochain, Error> {
    let star = complex.star_of(base);
    let cols: Vec<&SimplexKey> = star.iter().filter(|s| s.dim() == degree).collect();
    let rows: Vec<&SimplexKey> = star.iter().filter(|s| s.dim() == degree + 1).collect();
    let mut matrix = IntMatrix::zero(rows.len(), cols.len());
    let col_index: BTreeMap<&SimplexKey, usize> =
        cols.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    for (ri, row) in rows.iter().enumerate() {
        let mut sign = Integer::from(1);
        for i in 0..=row.dim() {
            let f = row.face(i);
            if let Some(&ci) = col_index.get(&f) {
                matrix.add_to(ri, ci, sign.clone());
            }
            sign = -sign;
        }
    }
    let rhs_vec: Vec<Integer> = rows
        .iter()
        .map(|s| {
            let v = rhs.value(s);
            if is_integral(&v) {
                Ok(v.to_integer())
            } else {
                Err(Error::bad_input("local solve expects integral data"))
            }
        })
        .collect::<Result<_, _>>()?;
    let sol = solve::solve_int(&matrix, &rhs_vec)?
        .ok_or_else(|| Error::bad_input(format!("local data not solvable on St({base:?})")))?;
    Cochain::from_values(
        complex,
        degree,
        CoefRing::Int,
        cols.iter()
            .zip(sol)
            .map(|(s, v)| ((*s).clone(), to_rational(&v))),
    )
}

/// Localize a valid global cocycle over the star cover (`p ≤ q`): the
/// staircase solves `δ b_v = c` on each star, sets
/// `T_{0,p−1} = θ − ι(b)` and descends through integral solves on the
/// acyclic intersections; `m` is read off the constants of
/// `δ̌T_{p−1,0}`.
pub fn localize_cocycle(hom: &ComplexHomology, x: &DeligneCocycle) -> Result<CechTower, Error> {
    let complex = hom.complex();
    let check = cocycle_check(hom, x)?;
    if !check.valid {
        return Err(Error::InvalidCocycle(check.violations.join("; ")));
    }
    if x.p > x.q {
        return Err(Error::bad_input("localization implemented for p ≤ q"));
    }
    let p = x.p;
    if p == 0 {
        return Ok(CechTower::zero(0, x.q));
    }
    let mut tower = CechTower::zero(p, x.q);
    // W_0[v] = b_v with δ b_v = c on St(v); T_{0,p−1} = θ − ι(b_v)
    let mut walls: BTreeMap<SimplexKey, Cochain> = BTreeMap::new();
    for v in complex.simplices(0) {
        let local_c = x.c.retag(CoefRing::Rat)?.restrict_to_star(complex, v);
        let b_v = solve_local_int(complex, v, p - 1, &local_c)?;
        walls.insert(v.clone(), b_v.clone());
        let t0 = x
            .theta
            .restrict_to_star(complex, v)
            .sub(&b_v.retag(CoefRing::Rat)?.restrict_to_star(complex, v))?;
        tower.set_local(0, p - 1, v.clone(), t0);
    }
    // staircase: W_r[S] solves δW_r = δ̌W_{r−1} on St(S); T_r = ε_r ι(W_r)
    let mut epsilon = Integer::from(-1);
    for r in 1..p {
        let s = p - 1 - r;
        let mut next: BTreeMap<SimplexKey, Cochain> = BTreeMap::new();
        for key in complex.simplices(r) {
            // δ̌W_{r−1} at key
            let mut rhs = Cochain::zero(s + 1, CoefRing::Rat);
            let mut negate = false;
            for j in 0..=key.dim() {
                let face = key.face(j);
                let term = walls
                    .get(&face)
                    .map(|w| w.retag(CoefRing::Rat).expect("integral"))
                    .unwrap_or_else(|| Cochain::zero(s + 1, CoefRing::Rat))
                    .restrict_to_star(complex, key);
                rhs = if negate {
                    rhs.sub(&term)
                } else {
                    rhs.add(&term)
                }?;
                negate = !negate;
            }
            let w_r = solve_local_int(complex, key, s, &rhs)?;
            let t_r = w_r.retag(CoefRing::Rat)?.scale(&to_rational(&epsilon))?;
            tower.set_local(r, s, key.clone(), t_r);
            next.insert(key.clone(), w_r);
        }
        walls = next;
        // ε_{r+1} = (−1)^{r+2} ε_r
        if r % 2 == 1 {
            epsilon = -epsilon;
        }
    }
    // m from the constants of δ̌T_{p−1,0}
    for key in complex.simplices(p) {
        let lhs = tower.cech_delta_at(complex, p - 1, 0, key);
        // evaluate at any vertex of the star; constancy is guaranteed by
        // the staircase and checked by tower_check downstream
        let vertex = complex
            .star_of(key)
            .into_iter()
            .find(|s| s.dim() == 0)
            .expect("stars contain vertices");
        let v = lhs.value(&vertex);
        if !is_integral(&v) {
            return Err(Error::bad_input(
                "localization produced a non-integral obstruction",
            ));
        }
        let v = v.to_integer();
        if !v.is_zero() {
            tower.m.insert(key.clone(), v);
        }
    }
    Ok(tower)
}

/// The degree-3 gerbe dictionary: transition data `g = exp(T_{2,0})` on
/// triple intersections, connective data `A = T_{1,1}` on double
/// intersections, curvings `B = T_{0,2}` on stars, and the glued global
/// curvature 3-cochain `δB`.
#[derive(Clone, Debug)]
pub struct GerbeData {
    pub g: BTreeMap<SimplexKey, Cochain>,
    pub a: BTreeMap<SimplexKey, Cochain>,
    pub b: BTreeMap<SimplexKey, Cochain>,
    pub curvature: Cochain,
}

pub fn gerbe_view(complex: &Complex, t: &CechTower) -> Result<GerbeData, Error> {
    if t.degree != 3 {
        return Err(Error::GerbeDegree(t.degree));
    }
    let report = tower_check(complex, t)?;
    if !report.valid {
        let (eq, key) = report.defect.unwrap();
        return Err(Error::InvalidTower(format!("{eq} fails at {key}")));
    }
    let mut g = BTreeMap::new();
    for key in complex.simplices(2) {
        let local = t.local(2, 0, key);
        g.insert(key.clone(), local.retag(CoefRing::RatModZ)?);
    }
    let mut a = BTreeMap::new();
    for key in complex.simplices(1) {
        a.insert(key.clone(), t.local(1, 1, key));
    }
    let mut b = BTreeMap::new();
    for key in complex.simplices(0) {
        b.insert(key.clone(), t.local(0, 2, key));
    }
    // glued curvature: δB on the star of the least vertex (the local
    // curvatures agree on overlaps, glued by the min-vertex rule)
    let mut values = Vec::new();
    if complex.dim() >= 3 {
        for tau in complex.simplices(3) {
            let v0 = tau.front(0);
            let local = t.local(0, 2, &v0).coboundary(complex);
            let val = local.value(tau);
            if !val.is_zero() {
                values.push((tau.clone(), val));
            }
        }
    }
    let curvature = Cochain::from_values(complex, 3, CoefRing::Rat, values)?;
    Ok(GerbeData { g, a, b, curvature })
}

/// Random tower (not generally a cocycle), deterministic from the seed.
pub fn random_tower(complex: &Complex, degree: usize, q: usize, rng: &mut Rng) -> CechTower {
    let mut t = CechTower::zero(degree, q);
    for key in complex.simplices(degree) {
        let v = rng.int_in(-3, 3);
        if v != 0 {
            t.m.insert(key.clone(), Integer::from(v));
        }
    }
    for (r, s) in CechTower::bidegrees(degree, q) {
        for key in complex.simplices(r) {
            let star = complex.star_of(key);
            let mut values = Vec::new();
            for simplex in star.iter().filter(|x| x.dim() == s) {
                let v = rng.rational(-3, 3, 3);
                if !v.is_zero() {
                    values.push((simplex.clone(), v));
                }
            }
            if !values.is_empty() {
                let local =
                    Cochain::from_values(complex, s, CoefRing::Rat, values).expect("keys in star");
                t.set_local(r, s, key.clone(), local);
            }
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deligne::cocycle::{class_is_trivial, weil_kostant_lift};
    use crate::simplicial::spaces::{standard_space, SpaceName};

    #[test]
    fn zero_tower_is_valid_and_collapses_to_zero() {
        let x = standard_space(SpaceName::Torus);
        let t = CechTower::zero(2, 2);
        assert!(tower_check(&x, &t).unwrap().valid);
        let z = tower_collapse_raw(&x, &t).unwrap();
        assert!(z.c.is_zero() && z.omega.is_zero() && z.theta.is_zero());
    }

    #[test]
    fn differential_of_lower_tower_is_valid() {
        let mut rng = Rng::new(70);
        let x = standard_space(SpaceName::Torus);
        for _ in 0..10 {
            let lower = random_tower(&x, 1, 2, &mut rng);
            let d = tower_differential(&x, &lower).unwrap();
            let r = tower_check(&x, &d).unwrap();
            assert!(r.valid, "{:?}", r.defect);
            // D ∘ D = 0
            let dd = tower_differential(&x, &d).unwrap();
            assert!(dd.m.is_empty());
            for locals in dd.components.values() {
                for c in locals.values() {
                    assert!(c.is_zero());
                }
            }
        }
    }

    #[test]
    fn collapse_is_chain_map() {
        let mut rng = Rng::new(71);
        let x = standard_space(SpaceName::Torus);
        let hom = ComplexHomology::new(&x).unwrap();
        let dc = crate::deligne::complex::deligne_complex(&x, 2, 3).unwrap();
        for _ in 0..20 {
            let t = random_tower(&x, 1, 2, &mut rng);
            let dt = tower_differential(&x, &t).unwrap();
            let lhs = tower_collapse_raw(&x, &dt).unwrap();
            let collapsed = tower_collapse_raw(&x, &t).unwrap();
            let elt = crate::deligne::complex::DeligneElement {
                degree: 1,
                c: collapsed.c.clone(),
                omega: collapsed.omega.clone(),
                theta: collapsed.theta.clone(),
            };
            let rhs = dc.apply_d(&elt).unwrap();
            assert_eq!(lhs.c, rhs.c);
            assert_eq!(lhs.omega, rhs.omega, "ω slot of the chain map");
            assert_eq!(lhs.theta, rhs.theta, "θ slot of the chain map");
        }
        let _ = hom;
    }

    #[test]
    fn localization_round_trip_on_torus() {
        let x = standard_space(SpaceName::Torus);
        let hom = ComplexHomology::new(&x).unwrap();
        let tri = x.simplices(2)[0].clone();
        let omega =
            Cochain::from_values(&x, 2, CoefRing::Rat, [(tri, crate::scalar::rat_int(1))]).unwrap();
        let lift = weil_kostant_lift(&hom, &omega).unwrap();
        let tower = localize_cocycle(&hom, &lift).unwrap();
        let r = tower_check(&x, &tower).unwrap();
        assert!(r.valid, "{:?}", r.defect);
        let back = tower_collapse(&hom, &tower).unwrap();
        // equivalent to the original: the difference is trivial
        let diff = back.sub(&lift).unwrap();
        assert!(class_is_trivial(&hom, &diff).unwrap().is_some());
        // and the curvature is recovered exactly
        assert_eq!(back.omega, lift.omega);
    }

    #[test]
    fn gerbe_on_three_sphere() {
        let x = standard_space(SpaceName::Sphere(3));
        let hom = ComplexHomology::new(&x).unwrap();
        let cell = x.simplices(3)[0].clone();
        let omega = Cochain::from_values(&x, 3, CoefRing::Rat, [(cell, crate::scalar::rat_int(1))])
            .unwrap();
        let lift = weil_kostant_lift(&hom, &omega).unwrap();
        let tower = localize_cocycle(&hom, &lift).unwrap();
        assert!(tower_check(&x, &tower).unwrap().valid);
        let gerbe = gerbe_view(&x, &tower).unwrap();
        // total period of the glued curvature against the fundamental cycle
        let fund = hom.free_cycles(3).remove(0);
        let period = gerbe.curvature.pair(&x, &fund).unwrap();
        assert!(
            period == crate::scalar::rat_int(1) || period == crate::scalar::rat_int(-1),
            "total period {period}"
        );
        // wrong degree rejected
        let t2 = CechTower::zero(2, 2);
        assert!(matches!(gerbe_view(&x, &t2), Err(Error::GerbeDegree(2))));
    }

    #[test]
    fn collapse_preserves_triviality() {
        let mut rng = Rng::new(72);
        let x = standard_space(SpaceName::Sphere(2));
        let hom = ComplexHomology::new(&x).unwrap();
        for _ in 0..5 {
            let y = crate::deligne::cocycle::random_valid_cocycle(&hom, 2, &mut rng).unwrap();
            let t = localize_cocycle(&hom, &y).unwrap();
            assert!(tower_check(&x, &t).unwrap().valid);
            let back = tower_collapse(&hom, &t).unwrap();
            let diff = back.sub(&y).unwrap();
            assert!(class_is_trivial(&hom, &diff).unwrap().is_some());
        }
    }
}

#[cfg(test)]
mod defect_tests {
    use super::*;
    use crate::deligne::cocycle::cocycle_check;
    use crate::scalar::rat_int;
    use crate::simplicial::spaces::{standard_space, SpaceName};
    use num_traits::One;

    #[test]
    fn corrupted_tower_reports_first_defect() {
        let x = standard_space(SpaceName::Torus);
        let hom = ComplexHomology::new(&x).unwrap();
        let tri = x.simplices(2)[0].clone();
        let omega = Cochain::from_values(&x, 2, CoefRing::Rat, [(tri, rat_int(1))]).unwrap();
        let lift = crate::deligne::cocycle::weil_kostant_lift(&hom, &omega).unwrap();
        let mut tower = localize_cocycle(&hom, &lift).unwrap();
        // corrupt the integral component on one 2-simplex
        let key = x.simplices(2)[3].clone();
        let v = tower.m.remove(&key).unwrap_or_else(Integer::zero) + Integer::one();
        tower.m.insert(key.clone(), v);
        let report = tower_check(&x, &tower).unwrap();
        assert!(!report.valid);
        let (eq, at) = report.defect.unwrap();
        assert!(
            eq.contains("δ̌m") || eq.contains("ι(m)"),
            "equation named: {eq}"
        );
        assert!(!at.is_empty());
    }

    #[test]
    fn zero_tower_gerbe_is_trivial() {
        let x = standard_space(SpaceName::Sphere(3));
        let t = CechTower::zero(3, 3);
        let gerbe = gerbe_view(&x, &t).unwrap();
        assert!(gerbe.curvature.is_zero());
        assert!(gerbe.g.values().all(Cochain::is_zero));
    }

    /// `H^3(S^2) = 0`: the collapse of any valid degree-3 tower on the
    /// 2-sphere has vanishing characteristic class (the flat `Q/Z` part can
    /// still be nonzero).
    #[test]
    fn sphere_two_towers_have_zero_char_class() {
        let mut rng = Rng::new(90);
        let x = standard_space(SpaceName::Sphere(2));
        let hom = ComplexHomology::new(&x).unwrap();
        for _ in 0..10 {
            // valid towers from differentials of random lower towers
            let lower = random_tower(&x, 2, 3, &mut rng);
            let t = tower_differential(&x, &lower).unwrap();
            assert!(tower_check(&x, &t).unwrap().valid);
            let y = tower_collapse(&hom, &t).unwrap();
            let class = cocycle_check(&hom, &y).unwrap().char_class.unwrap();
            assert!(class.iter().all(Zero::is_zero));
        }
    }
}

#[cfg(test)]
mod equivalence_tests {
    use super::*;
    use crate::deligne::cocycle::{class_is_trivial, random_flat_cocycle};
    use crate::simplicial::spaces::{standard_space, SpaceName};

    /// Towers differing by a differential collapse to equivalent cocycles.
    #[test]
    fn equivalent_towers_collapse_to_equivalent_classes() {
        let mut rng = Rng::new(95);
        let x = standard_space(SpaceName::Torus);
        let hom = ComplexHomology::new(&x).unwrap();
        let tri = x.simplices(2)[0].clone();
        let omega =
            Cochain::from_values(&x, 2, CoefRing::Rat, [(tri, crate::scalar::rat_int(1))])
                .unwrap();
        let base = crate::deligne::cocycle::weil_kostant_lift(&hom, &omega).unwrap();
        let tower = localize_cocycle(&hom, &base).unwrap();
        for _ in 0..5 {
            let lower = random_tower(&x, 1, 2, &mut rng);
            let shifted = tower.add(&tower_differential(&x, &lower).unwrap()).unwrap();
            assert!(tower_check(&x, &shifted).unwrap().valid);
            let a = tower_collapse(&hom, &tower).unwrap();
            let b = tower_collapse(&hom, &shifted).unwrap();
            let diff = b.sub(&a).unwrap();
            assert!(class_is_trivial(&hom, &diff).unwrap().is_some());
        }
    }

    /// Localization also covers the flat case `p < q` (the weight
    /// truncation then forces the local curvatures to vanish).
    #[test]
    fn localization_of_flat_classes() {
        let mut rng = Rng::new(96);
        let x = standard_space(SpaceName::Klein);
        let hom = ComplexHomology::new(&x).unwrap();
        for _ in 0..5 {
            let flat = random_flat_cocycle(&hom, 2, 3, &mut rng).unwrap();
            let tower = localize_cocycle(&hom, &flat).unwrap();
            let report = tower_check(&x, &tower).unwrap();
            assert!(report.valid, "{:?}", report.defect);
            let back = tower_collapse(&hom, &tower).unwrap();
            assert!(back.omega.is_zero());
            let diff = back.sub(&flat).unwrap();
            assert!(class_is_trivial(&hom, &diff).unwrap().is_some());
        }
    }
}
