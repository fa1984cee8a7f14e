//! Bounded complexes of free modules, their homology, and mapping cones.

use crate::error::Error;
use crate::exact::group::FgAbGroup;
use crate::exact::matrix::SparseMatrix;
use crate::exact::snf::smith_normal_form;
use crate::exact::solve;
use crate::scalar::{Integer, Rational, Scalar};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Which way the differential runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Cochain orientation: `d_n : C^n -> C^{n+1}`.
    Up,
    /// Chain orientation: `d_n : C_n -> C_{n-1}`.
    Down,
}

impl Direction {
    pub fn step(self) -> isize {
        match self {
            Direction::Up => 1,
            Direction::Down => -1,
        }
    }
}

/// A bounded complex of free modules over the scalar ring `T`, given by its
/// ranks and sparse differential matrices. `d ∘ d = 0` is asserted at
/// construction.
#[derive(Clone, Debug)]
pub struct GradedComplex<T: Scalar> {
    lo: isize,
    ranks: Vec<usize>,
    /// `diffs[i]` maps degree `lo + i` toward `lo + i ± 1`; the map out of
    /// the last degree in the direction of travel is implicitly zero.
    diffs: BTreeMap<isize, SparseMatrix<T>>,
    direction: Direction,
}

impl<T: Scalar> GradedComplex<T> {
    /// Build from ranks (degree `lo` upward) and the differentials out of
    /// each degree that has a successor in the travel direction.
    pub fn new(
        lo: isize,
        ranks: Vec<usize>,
        diffs: BTreeMap<isize, SparseMatrix<T>>,
        direction: Direction,
    ) -> Result<Self, Error> {
        let c = GradedComplex {
            lo,
            ranks,
            diffs,
            direction,
        };
        c.validate()?;
        Ok(c)
    }

    fn validate(&self) -> Result<(), Error> {
        for (&deg, d) in &self.diffs {
            let src = self.rank(deg);
            let tgt = self.rank(deg + self.direction.step());
            if d.cols() != src || d.rows() != tgt {
                return Err(Error::DimensionMismatch(format!(
                    "differential at degree {deg}: {}x{} but ranks are {tgt}x{src}",
                    d.rows(),
                    d.cols()
                )));
            }
        }
        for (&deg, d) in &self.diffs {
            let next = deg + self.direction.step();
            if let Some(d2) = self.diffs.get(&next) {
                if !d2.mul(d)?.is_zero_matrix() {
                    return Err(Error::bad_input(format!(
                        "d∘d != 0 between degrees {deg} and {next}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn lo(&self) -> isize {
        self.lo
    }

    pub fn hi(&self) -> isize {
        self.lo + self.ranks.len() as isize - 1
    }

    pub fn degrees(&self) -> impl Iterator<Item = isize> {
        self.lo..=self.hi()
    }

    pub fn rank(&self, degree: isize) -> usize {
        if degree < self.lo {
            return 0;
        }
        self.ranks
            .get((degree - self.lo) as usize)
            .copied()
            .unwrap_or(0)
    }

    /// The differential out of `degree` (zero matrix when absent).
    pub fn differential(&self, degree: isize) -> SparseMatrix<T> {
        self.diffs.get(&degree).cloned().unwrap_or_else(|| {
            SparseMatrix::zero(self.rank(degree + self.direction.step()), self.rank(degree))
        })
    }

    /// Differential INTO `degree`.
    pub fn incoming(&self, degree: isize) -> SparseMatrix<T> {
        self.differential(degree - self.direction.step())
    }

    /// Euler characteristic `Σ (−1)^n rank C_n`.
    pub fn euler_characteristic(&self) -> i64 {
        self.degrees()
            .map(|d| {
                let sign = if d.rem_euclid(2) == 0 { 1 } else { -1 };
                sign * self.rank(d) as i64
            })
            .sum()
    }

    /// Reverse the arrow direction without touching the data (used to view a
    /// chain complex as the cochain complex of its duals' transposes).
    pub fn dualize(&self) -> Self {
        let direction = match self.direction {
            Direction::Up => Direction::Down,
            Direction::Down => Direction::Up,
        };
        let mut diffs = BTreeMap::new();
        for (&deg, d) in &self.diffs {
            // map out of `deg` toward deg+step becomes map out of deg+step toward deg
            diffs.insert(deg + self.direction.step(), d.transpose());
        }
        GradedComplex {
            lo: self.lo,
            ranks: self.ranks.clone(),
            diffs,
            direction,
        }
    }

    /// Shift all degrees by `k`.
    pub fn shift(&self, k: isize) -> Self {
        let mut diffs = BTreeMap::new();
        for (&deg, d) in &self.diffs {
            diffs.insert(deg + k, d.clone());
        }
        GradedComplex {
            lo: self.lo + k,
            ranks: self.ranks.clone(),
            diffs,
            direction: self.direction,
        }
    }
}

/// A chain map between two complexes with the same direction, checked to
/// commute with the differentials.
#[derive(Clone, Debug)]
pub struct ChainMap<T: Scalar> {
    pub source: GradedComplex<T>,
    pub target: GradedComplex<T>,
    pub components: BTreeMap<isize, SparseMatrix<T>>,
}

impl<T: Scalar> ChainMap<T> {
    pub fn new(
        source: GradedComplex<T>,
        target: GradedComplex<T>,
        components: BTreeMap<isize, SparseMatrix<T>>,
    ) -> Result<Self, Error> {
        if source.direction != target.direction {
            return Err(Error::NotChainMap(
                "source and target directions differ".into(),
            ));
        }
        let map = ChainMap {
            source,
            target,
            components,
        };
        map.validate()?;
        Ok(map)
    }

    pub fn component(&self, degree: isize) -> SparseMatrix<T> {
        self.components.get(&degree).cloned().unwrap_or_else(|| {
            SparseMatrix::zero(self.target.rank(degree), self.source.rank(degree))
        })
    }

    fn validate(&self) -> Result<(), Error> {
        let step = self.source.direction.step();
        let lo = self.source.lo().min(self.target.lo());
        let hi = self.source.hi().max(self.target.hi());
        for deg in lo..=hi {
            let f = self.component(deg);
            if f.cols() != self.source.rank(deg) || f.rows() != self.target.rank(deg) {
                return Err(Error::DimensionMismatch(format!(
                    "chain map component at {deg}"
                )));
            }
            let lhs = self.target.differential(deg).mul(&f)?;
            let rhs = self
                .component(deg + step)
                .mul(&self.source.differential(deg))?;
            if lhs != rhs {
                return Err(Error::NotChainMap(format!(
                    "does not commute with differentials at degree {deg}"
                )));
            }
        }
        Ok(())
    }
}

/// Mapping cone. For the cochain orientation `Cone(f)^n = A^{n+1} ⊕ B^n`
/// with `d(a, b) = (−d_A a, f(a) + d_B b)`; the chain orientation mirrors it
/// (`Cone(f)_n = A_{n−1} ⊕ B_n`), so in both cases the long exact sequence
/// has sign-free connecting maps.
pub fn mapping_cone<T: Scalar>(f: &ChainMap<T>) -> Result<GradedComplex<T>, Error> {
    let step = f.source.direction.step();
    let a = &f.source;
    let b = &f.target;
    // degree n holds A at degree n + step and B at degree n
    let lo = (a.lo() - step).min(b.lo()).min(a.hi() - step).min(b.hi());
    let hi = (a.hi() - step).max(b.hi()).max(a.lo() - step).max(b.lo());
    let mut ranks = Vec::new();
    for n in lo..=hi {
        ranks.push(a.rank(n + step) + b.rank(n));
    }
    let mut diffs = BTreeMap::new();
    for n in lo..=hi {
        let a_deg = n + step;
        let src_a = a.rank(a_deg);
        let src_b = b.rank(n);
        let tgt_a = a.rank(a_deg + step);
        let tgt_b = b.rank(n + step);
        if tgt_a + tgt_b == 0 || src_a + src_b == 0 {
            continue;
        }
        let mut d = SparseMatrix::zero(tgt_a + tgt_b, src_a + src_b);
        for (r, c, v) in a.differential(a_deg).iter() {
            d.set(r, c, -v.clone());
        }
        for (r, c, v) in f.component(a_deg).iter() {
            d.set(tgt_a + r, c, v.clone());
        }
        for (r, c, v) in b.differential(n).iter() {
            d.set(tgt_a + r, src_a + c, v.clone());
        }
        diffs.insert(n, d);
    }
    GradedComplex::new(lo, ranks, diffs, a.direction)
}

/// Homology at one degree, with generator bookkeeping.
#[derive(Clone, Debug)]
pub struct DegreeHomology {
    pub group: FgAbGroup,
    /// One representative cycle per invariant factor of `group`, torsion
    /// generators first (aligned with `orders`), then free generators.
    pub generators: Vec<Vec<Integer>>,
    /// Invariant factor per generator: `Some(d)` for a `Z/d` generator,
    /// `None` for a free generator.
    pub orders: Vec<Option<Integer>>,
    cycle_basis: SparseMatrix<Integer>,
    to_class: SparseMatrix<Integer>,
    kept: Vec<usize>,
}

impl DegreeHomology {
    /// Coordinates of a cycle in the chosen generators (torsion coordinates
    /// reduced mod their order). `Ok(None)` when the vector is not a cycle.
    pub fn express(&self, z: &[Integer]) -> Result<Option<Vec<Integer>>, Error> {
        let Some(y) = solve::solve_int(&self.cycle_basis, z)? else {
            return Ok(None);
        };
        let w = self.to_class.mul_vec(&y)?;
        let mut coords = Vec::with_capacity(self.kept.len());
        for (slot, &i) in self.kept.iter().enumerate() {
            let mut c = w[i].clone();
            if let Some(d) = &self.orders[slot] {
                c = num_integer::Integer::mod_floor(&c, d);
            }
            coords.push(c);
        }
        Ok(Some(coords))
    }

    /// Is the cycle a boundary?
    pub fn is_boundary(&self, z: &[Integer]) -> Result<bool, Error> {
        match self.express(z)? {
            None => Ok(false),
            Some(coords) => Ok(coords.iter().all(Zero::is_zero)),
        }
    }
}

/// Homology of a complex over `Z`, per degree.
#[derive(Clone, Debug)]
pub struct HomologyResult {
    pub by_degree: BTreeMap<isize, DegreeHomology>,
}

impl HomologyResult {
    pub fn group(&self, degree: isize) -> FgAbGroup {
        self.by_degree
            .get(&degree)
            .map_or_else(FgAbGroup::trivial, |h| h.group.clone())
    }

    pub fn table(&self, lo: isize, hi: isize) -> Vec<FgAbGroup> {
        (lo..=hi).map(|d| self.group(d)).collect()
    }
}

impl GradedComplex<Integer> {
    /// Integral homology with generator representatives: at each degree,
    /// `ker(outgoing) / im(incoming)` in Smith form.
    pub fn homology(&self) -> Result<HomologyResult, Error> {
        let mut by_degree = BTreeMap::new();
        for deg in self.degrees() {
            if self.rank(deg) == 0 {
                continue;
            }
            let h = self.homology_at(deg)?;
            by_degree.insert(deg, h);
        }
        Ok(HomologyResult { by_degree })
    }

    pub fn homology_at(&self, deg: isize) -> Result<DegreeHomology, Error> {
        let out = self.differential(deg);
        let inc = self.incoming(deg);
        let kernel = solve::kernel_int(&out);
        // boundaries lie in the kernel; kernel is saturated so coordinates
        // are integral
        let k_snf = smith_normal_form(&kernel);
        let mut y = SparseMatrix::zero(kernel.cols(), inc.cols());
        for c in 0..inc.cols() {
            let col = inc.col_vec(c);
            let sol = solve::solve_int_with(&k_snf, kernel.cols(), &col)?.ok_or_else(|| {
                Error::bad_input(format!("boundary not a cycle at degree {deg} (d∘d != 0?)"))
            })?;
            for (r, v) in sol.into_iter().enumerate() {
                y.set(r, c, v);
            }
        }
        let q = smith_normal_form(&y);
        let k = kernel.cols();
        let mut invariants = q.diagonal();
        invariants.resize(k, Integer::zero());
        // quotient Z^k / im(Y): generator i is kernel · (column i of U_inv),
        // with order d_i (0 = free)
        let mut generators = Vec::new();
        let mut orders = Vec::new();
        let mut kept = Vec::new();
        let mut torsion = Vec::new();
        let mut free_rank = 0usize;
        for i in 0..k {
            let d = &invariants[i];
            if d.is_one() {
                continue;
            }
            let gen_coords = q.u_inv.col_vec(i);
            let gen = kernel.mul_vec(&gen_coords)?;
            if d.is_zero() {
                free_rank += 1;
                orders.push(None);
            } else {
                torsion.push(d.clone());
                orders.push(Some(d.clone()));
            }
            generators.push(gen);
            kept.push(i);
        }
        // reorder: torsion generators first (they already come first in SNF
        // order after the units), free after — SNF emits units, torsion,
        // zeros, so the natural order is already torsion-then-free
        let group = FgAbGroup::new(free_rank, torsion)?;
        Ok(DegreeHomology {
            group,
            generators,
            orders,
            cycle_basis: kernel,
            to_class: q.u,
            kept,
        })
    }
}

impl GradedComplex<Rational> {
    /// Rational homology: dimensions only (free groups).
    pub fn homology_ranks(&self) -> BTreeMap<isize, usize> {
        let mut out = BTreeMap::new();
        for deg in self.degrees() {
            if self.rank(deg) == 0 {
                continue;
            }
            let cycles = solve::kernel_rat(&self.differential(deg)).cols();
            let boundaries = solve::rank_rat(&self.incoming(deg));
            out.insert(deg, cycles - boundaries);
        }
        out
    }
}

/// Rationalize an integer complex.
pub fn rationalize(c: &GradedComplex<Integer>) -> GradedComplex<Rational> {
    let mut diffs = BTreeMap::new();
    for deg in c.degrees() {
        let d = c.differential(deg);
        if d.rows() * d.cols() > 0 {
            diffs.insert(deg, d.map(crate::scalar::to_rational));
        }
    }
    GradedComplex {
        lo: c.lo,
        ranks: c.ranks.clone(),
        diffs,
        direction: c.direction,
    }
}
