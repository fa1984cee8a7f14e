//! Small chain models for the spaces the bar construction produces.
//!
//! A simplicial abelian group splits, up to homotopy, into a product of
//! Eilenberg–MacLane pieces — one per homotopy group. Each piece has a
//! small differential graded algebra model, and applying the reduced bar
//! construction raises the degree by one:
//!
//! * `K(Z, 1)`: the exterior algebra on one degree-1 generator.
//! * `K(Z/m, 1)`: the divided-power model `Λ(u) ⊗ Γ(v)` with `dv = m·u`
//!   (one generator per degree, alternating `0, m` differential).
//! * `K(π, 0)` for finite `π`: the group ring.
//! * `K(c, n+1)` from `K(c, n)`: the reduced bar construction `B̄(−)` with
//!   the shuffle product.
//!
//! Tensoring the factor models gives a free complex whose homology is the
//! integral homology of the realization; `normalized_chains` wires this to
//! the degeneracy-quotient homotopy extraction.

use crate::bar::moore::homotopy_groups;
use crate::bar::simgroup::SimAbGroup;
use crate::error::Error;
use crate::exact::complex::{Direction, GradedComplex};
use crate::exact::group::FgAbGroup;
use crate::exact::matrix::SparseMatrix;
use crate::scalar::Integer;
use crate::IntMatrix;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Augmented graded-commutative DGA with unit split off: only the reduced
/// part (the augmentation ideal) is stored. Basis elements are indexed per
/// degree; the product table maps pairs of reduced basis elements to
/// reduced combinations (the augmentation ideal is closed under products).
#[derive(Clone, Debug)]
pub struct Dga {
    max_degree: usize,
    ranks: Vec<usize>,
    /// `diffs[n]` maps reduced degree `n` to reduced degree `n − 1`.
    diffs: Vec<IntMatrix>,
    /// `(deg_a, idx_a, deg_b, idx_b) → combination in degree deg_a + deg_b`.
    /// Missing key = zero product.
    products: BTreeMap<(usize, usize, usize, usize), Vec<(usize, Integer)>>,
    labels: Vec<Vec<String>>,
}

fn binomial(n: usize, k: usize) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let mut acc = Integer::one();
    for i in 0..k.min(n - k) {
        acc = acc * Integer::from(n - i) / Integer::from(i + 1);
    }
    acc
}

impl Dga {
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn rank(&self, degree: usize) -> usize {
        self.ranks.get(degree).copied().unwrap_or(0)
    }

    pub fn label(&self, degree: usize, idx: usize) -> &str {
        &self.labels[degree][idx]
    }

    fn diff(&self, degree: usize) -> IntMatrix {
        if degree == 0 || degree > self.max_degree {
            return SparseMatrix::zero(self.rank(degree.wrapping_sub(1)), self.rank(degree));
        }
        self.diffs[degree].clone()
    }

    pub fn product(&self, a: (usize, usize), b: (usize, usize)) -> Vec<(usize, Integer)> {
        self.products
            .get(&(a.0, a.1, b.0, b.1))
            .cloned()
            .unwrap_or_default()
    }

    /// The trivial model: unit only.
    pub fn unit(max_degree: usize) -> Dga {
        Dga {
            max_degree,
            ranks: vec![0; max_degree + 1],
            diffs: (0..=max_degree).map(|_| SparseMatrix::zero(0, 0)).collect(),
            products: BTreeMap::new(),
            labels: vec![Vec::new(); max_degree + 1],
        }
    }

    /// Exterior algebra on one degree-1 generator: the `K(Z, 1)` model.
    pub fn exterior(max_degree: usize) -> Dga {
        let mut d = Dga::unit(max_degree);
        if max_degree >= 1 {
            d.ranks[1] = 1;
            d.labels[1] = vec!["x".to_string()];
            d.diffs[1] = SparseMatrix::zero(0, 1);
            if max_degree >= 2 {
                d.diffs[2] = SparseMatrix::zero(1, 0);
            }
            // x·x = 0: absent key
        }
        d
    }

    /// `Λ(u) ⊗ Γ(v)` with `d γ_k(v) = m · u γ_{k−1}(v)`: the `K(Z/m, 1)`
    /// model. One basis element per degree; products via binomials.
    pub fn divided_power_cyclic(m: &Integer, max_degree: usize) -> Dga {
        let mut d = Dga::unit(max_degree);
        for n in 1..=max_degree {
            d.ranks[n] = 1;
            d.labels[n] = vec![if n % 2 == 0 {
                format!("g{}", n / 2)
            } else if n == 1 {
                "u".to_string()
            } else {
                format!("ug{}", n / 2)
            }];
        }
        for n in 1..=max_degree {
            let mut m_n = SparseMatrix::zero(d.rank(n - 1), d.rank(n));
            if n >= 2 && n % 2 == 0 {
                m_n.set(0, 0, m.clone());
            }
            d.diffs[n] = m_n;
        }
        for p in 1..=max_degree {
            for q in 1..=max_degree.saturating_sub(p) {
                if p % 2 == 1 && q % 2 == 1 {
                    continue; // u² = 0
                }
                let coeff = binomial(p / 2 + q / 2, p / 2);
                d.products.insert((p, 0, q, 0), vec![(0, coeff)]);
            }
        }
        d
    }

    /// Group ring of a finite group, concentrated in degree 0; the reduced
    /// basis is `[g] − [e]` over non-identity elements. This is the
    /// `K(π, 0)` model; one bar application gives the classical bar complex
    /// of the group.
    pub fn group_ring(group: &FgAbGroup) -> Result<Dga, Error> {
        let Some(order) = group.order() else {
            return Err(Error::bad_input("group ring model needs a finite group"));
        };
        let order: usize = order
            .try_into()
            .map_err(|_| Error::bad_input("group too large for the group-ring model"))?;
        let moduli: Vec<Integer> = group.torsion().to_vec();
        // enumerate elements as mixed-radix tuples; identity first
        let mut elements: Vec<Vec<Integer>> = vec![Vec::new()];
        for m in &moduli {
            let mut next = Vec::new();
            let mut digit = Integer::zero();
            while &digit < m {
                for e in &elements {
                    let mut e2 = e.clone();
                    e2.push(digit.clone());
                    next.push(e2);
                }
                digit += Integer::one();
            }
            elements = next;
        }
        elements.sort();
        let index: BTreeMap<Vec<Integer>, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        let identity = vec![Integer::zero(); moduli.len()];
        let id_pos = index[&identity];
        // reduced basis: non-identity elements in order
        let reduced: Vec<usize> = (0..order).filter(|&i| i != id_pos).collect();
        let red_index: BTreeMap<usize, usize> = reduced
            .iter()
            .copied()
            .enumerate()
            .map(|(r, i)| (i, r))
            .collect();
        let add = |a: &Vec<Integer>, b: &Vec<Integer>| -> Vec<Integer> {
            a.iter()
                .zip(b)
                .zip(&moduli)
                .map(|((x, y), m)| num_integer::Integer::mod_floor(&(x + y), m))
                .collect()
        };
        let mut d = Dga::unit(0);
        d.ranks[0] = order - 1;
        d.labels[0] = reduced
            .iter()
            .map(|&i| format!("[{:?}]", elements[i]))
            .collect();
        // products: ([g]−[e])([h]−[e]) = [gh]−[e] − ([g]−[e]) − ([h]−[e])
        for (i_r, &gi) in reduced.iter().enumerate() {
            for (j_r, &gj) in reduced.iter().enumerate() {
                let sum = add(&elements[gi], &elements[gj]);
                let mut combo: BTreeMap<usize, Integer> = BTreeMap::new();
                if sum != identity {
                    *combo
                        .entry(red_index[&index[&sum]])
                        .or_insert_with(Integer::zero) += Integer::one();
                }
                *combo.entry(i_r).or_insert_with(Integer::zero) -= Integer::one();
                *combo.entry(j_r).or_insert_with(Integer::zero) -= Integer::one();
                let entries: Vec<(usize, Integer)> =
                    combo.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                if !entries.is_empty() {
                    d.products.insert((0, i_r, 0, j_r), entries);
                }
            }
        }
        Ok(d)
    }

    /// Underlying chain complex including the unit summand in degree 0.
    pub fn complex(&self) -> Result<GradedComplex<Integer>, Error> {
        let mut ranks: Vec<usize> = self.ranks.clone();
        ranks[0] += 1; // the unit
        let mut diffs = BTreeMap::new();
        for n in 1..=self.max_degree {
            let d = self.diff(n);
            // pad the target with the unit row at degree 0 (nothing maps to it)
            let padded = if n == 1 {
                let mut m = SparseMatrix::zero(ranks[0], self.rank(1));
                for (r, c, v) in d.iter() {
                    m.set(r + 1, c, v.clone());
                }
                m
            } else {
                d
            };
            diffs.insert(n as isize, padded);
        }
        GradedComplex::new(0, ranks, diffs, Direction::Down)
    }

    /// `d ∘ d = 0` and the Leibniz rule on all stored basis pairs; cheap at
    /// these sizes, used by the constructors' tests.
    pub fn verify(&self) -> Result<(), Error> {
        for n in 2..=self.max_degree {
            let dd = self.diff(n - 1).mul(&self.diff(n))?;
            if !dd.is_zero_matrix() {
                return Err(Error::bad_input(format!("model d∘d != 0 at degree {n}")));
            }
        }
        // Leibniz: d(ab) = da·b + (−1)^{|a|} a·db
        for p in 0..=self.max_degree {
            for q in 0..=self.max_degree - p {
                if p + q > self.max_degree {
                    continue;
                }
                for ia in 0..self.rank(p) {
                    for ib in 0..self.rank(q) {
                        let mut lhs: BTreeMap<usize, Integer> = BTreeMap::new();
                        if p + q >= 1 {
                            let d = self.diff(p + q);
                            for (k, c) in self.product((p, ia), (q, ib)) {
                                for r in 0..d.rows() {
                                    let v = d.get(r, k);
                                    if !v.is_zero() {
                                        *lhs.entry(r).or_insert_with(Integer::zero) +=
                                            v * c.clone();
                                    }
                                }
                            }
                        }
                        let mut rhs: BTreeMap<usize, Integer> = BTreeMap::new();
                        if p >= 1 {
                            let da = self.diff(p);
                            for r in 0..da.rows() {
                                let v = da.get(r, ia);
                                if v.is_zero() {
                                    continue;
                                }
                                for (k, c) in self.product((p - 1, r), (q, ib)) {
                                    *rhs.entry(k).or_insert_with(Integer::zero) += c * v.clone();
                                }
                            }
                        }
                        if q >= 1 {
                            let sign = if p % 2 == 0 {
                                Integer::one()
                            } else {
                                -Integer::one()
                            };
                            let db = self.diff(q);
                            for r in 0..db.rows() {
                                let v = db.get(r, ib);
                                if v.is_zero() {
                                    continue;
                                }
                                for (k, c) in self.product((p, ia), (q - 1, r)) {
                                    *rhs.entry(k).or_insert_with(Integer::zero) +=
                                        c * v.clone() * sign.clone();
                                }
                            }
                        }
                        lhs.retain(|_, v| !v.is_zero());
                        rhs.retain(|_, v| !v.is_zero());
                        if lhs != rhs {
                            return Err(Error::bad_input(format!(
                                "Leibniz fails on ({p},{ia})·({q},{ib})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// A word in the reduced bar construction: letters are reduced basis
/// elements `(degree, index)` of the underlying model.
type Word = Vec<(usize, usize)>;

/// Reduced bar construction `B̄(A)` truncated at `max_degree`, as a DGA with
/// the shuffle product.
pub fn bar(a: &Dga, max_degree: usize) -> Result<Dga, Error> {
    // enumerate words per degree
    let mut words_by_degree: Vec<Vec<Word>> = vec![Vec::new(); max_degree + 1];
    // letters have suspended degree deg+1 >= 1
    let mut letters: Vec<(usize, usize)> = Vec::new();
    for d in 0..=a.max_degree().min(max_degree.saturating_sub(1)) {
        for i in 0..a.rank(d) {
            letters.push((d, i));
        }
    }
    // breadth-first word growth in lexicographic order
    fn grow(
        letters: &[(usize, usize)],
        max_degree: usize,
        prefix: &mut Word,
        deg: usize,
        out: &mut Vec<Vec<Word>>,
    ) {
        for &l in letters {
            let nd = deg + l.0 + 1;
            if nd > max_degree {
                continue;
            }
            prefix.push(l);
            out[nd].push(prefix.clone());
            grow(letters, max_degree, prefix, nd, out);
            prefix.pop();
        }
    }
    let mut prefix = Vec::new();
    grow(&letters, max_degree, &mut prefix, 0, &mut words_by_degree);
    for bucket in words_by_degree.iter_mut() {
        bucket.sort();
    }
    let mut index: BTreeMap<Word, (usize, usize)> = BTreeMap::new();
    for (d, bucket) in words_by_degree.iter().enumerate() {
        for (i, w) in bucket.iter().enumerate() {
            index.insert(w.clone(), (d, i));
        }
    }

    let mut out = Dga::unit(max_degree);
    for d in 1..=max_degree {
        out.ranks[d] = words_by_degree[d].len();
        out.labels[d] = words_by_degree[d]
            .iter()
            .map(|w| {
                let parts: Vec<String> = w
                    .iter()
                    .map(|&(dd, ii)| a.label(dd, ii).to_string())
                    .collect();
                format!("[{}]", parts.join("|"))
            })
            .collect();
    }

    // differential: internal + collapse
    for d in 1..=max_degree {
        let mut m = SparseMatrix::zero(out.rank(d - 1), out.rank(d));
        for (col, w) in words_by_degree[d].iter().enumerate() {
            let k = w.len();
            // internal: replace letter i by its differential
            let mut prefix_deg = 0usize;
            for i in 0..k {
                let (ld, li) = w[i];
                let sign = if prefix_deg.is_multiple_of(2) {
                    Integer::one()
                } else {
                    -Integer::one()
                };
                if ld >= 1 {
                    let da = a.diff(ld);
                    for r in 0..da.rows() {
                        let v = da.get(r, li);
                        if v.is_zero() {
                            continue;
                        }
                        let mut w2 = w.clone();
                        w2[i] = (ld - 1, r);
                        let (d2, row) = index[&w2];
                        debug_assert_eq!(d2, d - 1);
                        m.add_to(row, col, sign.clone() * v);
                    }
                }
                prefix_deg += ld + 1;
                // collapse: multiply letters i and i+1
                if i + 1 < k {
                    let sign = if prefix_deg.is_multiple_of(2) {
                        Integer::one()
                    } else {
                        -Integer::one()
                    };
                    let (ld2, li2) = w[i + 1];
                    for (prod_idx, coeff) in a.product((ld, li), (ld2, li2)) {
                        let mut w2: Word = Vec::with_capacity(k - 1);
                        w2.extend_from_slice(&w[..i]);
                        w2.push((ld + ld2, prod_idx));
                        w2.extend_from_slice(&w[i + 2..]);
                        let (d2, row) = index[&w2];
                        debug_assert_eq!(d2, d - 1);
                        m.add_to(row, col, sign.clone() * coeff);
                    }
                }
            }
        }
        out.diffs[d] = m;
    }

    // shuffle product
    fn shuffles(p: usize, q: usize) -> Vec<Vec<bool>> {
        // true = take from the left word
        fn rec(p: usize, q: usize, cur: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
            if p == 0 && q == 0 {
                out.push(cur.clone());
                return;
            }
            if p > 0 {
                cur.push(true);
                rec(p - 1, q, cur, out);
                cur.pop();
            }
            if q > 0 {
                cur.push(false);
                rec(p, q - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(p, q, &mut Vec::new(), &mut out);
        out
    }
    let all_degrees: Vec<(usize, usize)> = (1..=max_degree)
        .flat_map(|d| (0..words_by_degree[d].len()).map(move |i| (d, i)))
        .collect();
    for &(da_deg, ia) in &all_degrees {
        for &(db_deg, ib) in &all_degrees {
            if da_deg + db_deg > max_degree {
                continue;
            }
            let wa = &words_by_degree[da_deg][ia];
            let wb = &words_by_degree[db_deg][ib];
            let mut combo: BTreeMap<usize, Integer> = BTreeMap::new();
            for pattern in shuffles(wa.len(), wb.len()) {
                // Koszul sign over suspended degrees
                let mut sign = Integer::one();
                let mut merged: Word = Vec::with_capacity(wa.len() + wb.len());
                let (mut i, mut j) = (0usize, 0usize);
                // remaining right letters already placed have degrees summed
                let mut placed_right: usize = 0;
                for take_left in pattern {
                    if take_left {
                        let l = wa[i];
                        i += 1;
                        // moving l past the already-placed right letters
                        if (l.0 + 1) * placed_right % 2 == 1 {
                            sign = -sign;
                        }
                        merged.push(l);
                    } else {
                        let r = wb[j];
                        j += 1;
                        placed_right += r.0 + 1;
                        merged.push(r);
                    }
                }
                let (_d2, idx) = index[&merged];
                *combo.entry(idx).or_insert_with(Integer::zero) += sign;
            }
            let entries: Vec<(usize, Integer)> =
                combo.into_iter().filter(|(_, v)| !v.is_zero()).collect();
            if !entries.is_empty() {
                out.products.insert((da_deg, ia, db_deg, ib), entries);
            }
        }
    }
    // sanity: the bar differential must square to zero
    for n in 2..=max_degree {
        if !out.diff(n - 1).mul(&out.diff(n))?.is_zero_matrix() {
            return Err(Error::bad_input(format!("bar d∘d != 0 at degree {n}")));
        }
    }
    Ok(out)
}

/// Tensor product of two models (Koszul signs), truncated.
pub fn tensor(a: &Dga, b: &Dga, max_degree: usize) -> Result<Dga, Error> {
    // basis: Left(d, i), Right(d, i), Pair(da, ia, db, ib); unit implicit
    #[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
    enum TElt {
        Left(usize, usize),
        Right(usize, usize),
        Pair(usize, usize, usize, usize),
    }
    let mut basis: Vec<Vec<TElt>> = vec![Vec::new(); max_degree + 1];
    for d in 0..=max_degree {
        for i in 0..a.rank(d) {
            basis[d].push(TElt::Left(d, i));
        }
        for i in 0..b.rank(d) {
            basis[d].push(TElt::Right(d, i));
        }
        for da in 0..=d {
            let db = d - da;
            for ia in 0..a.rank(da) {
                for ib in 0..b.rank(db) {
                    basis[d].push(TElt::Pair(da, ia, db, ib));
                }
            }
        }
        basis[d].sort();
    }
    let mut index: BTreeMap<TElt, (usize, usize)> = BTreeMap::new();
    for (d, bucket) in basis.iter().enumerate() {
        for (i, e) in bucket.iter().enumerate() {
            index.insert(e.clone(), (d, i));
        }
    }
    let mut out = Dga::unit(max_degree);
    for d in 0..=max_degree {
        out.ranks[d] = basis[d].len();
        out.labels[d] = basis[d]
            .iter()
            .map(|e| match e {
                TElt::Left(dd, ii) => format!("{}⊗1", a.label(*dd, *ii)),
                TElt::Right(dd, ii) => format!("1⊗{}", b.label(*dd, *ii)),
                TElt::Pair(da, ia, db, ib) => {
                    format!("{}⊗{}", a.label(*da, *ia), b.label(*db, *ib))
                }
            })
            .collect();
    }
    // differential
    for d in 1..=max_degree {
        let mut m = SparseMatrix::zero(out.ranks[d - 1], out.ranks[d]);
        for (col, e) in basis[d].iter().enumerate() {
            let mut add = |elt: TElt, coeff: Integer| {
                if coeff.is_zero() {
                    return;
                }
                let (d2, row) = index[&elt];
                debug_assert_eq!(d2, d - 1);
                m.add_to(row, col, coeff);
            };
            match e {
                TElt::Left(dd, ii) => {
                    let da = a.diff(*dd);
                    for r in 0..da.rows() {
                        add(TElt::Left(dd - 1, r), da.get(r, *ii));
                    }
                }
                TElt::Right(dd, ii) => {
                    let db = b.diff(*dd);
                    for r in 0..db.rows() {
                        add(TElt::Right(dd - 1, r), db.get(r, *ii));
                    }
                }
                TElt::Pair(da_deg, ia, db_deg, ib) => {
                    if *da_deg >= 1 {
                        let da = a.diff(*da_deg);
                        for r in 0..da.rows() {
                            let v = da.get(r, *ia);
                            if !v.is_zero() {
                                add(TElt::Pair(da_deg - 1, r, *db_deg, *ib), v);
                            }
                        }
                    }
                    if *db_deg >= 1 {
                        let sign = if da_deg % 2 == 0 {
                            Integer::one()
                        } else {
                            -Integer::one()
                        };
                        let db = b.diff(*db_deg);
                        for r in 0..db.rows() {
                            let v = db.get(r, *ib);
                            if !v.is_zero() {
                                add(TElt::Pair(*da_deg, *ia, db_deg - 1, r), v * sign.clone());
                            }
                        }
                    }
                }
            }
        }
        out.diffs[d] = m;
    }
    // products
    let sign_of = |d1: usize, d2: usize| -> Integer {
        if d1 % 2 == 1 && d2 % 2 == 1 {
            -Integer::one()
        } else {
            Integer::one()
        }
    };
    // helper: multiply in A (None = unit)
    let mul_a = |x: Option<(usize, usize)>,
                 y: Option<(usize, usize)>|
     -> Option<Vec<(usize, usize, Integer)>> {
        match (x, y) {
            (None, None) => None, // unit·unit handled by caller
            (Some((d, i)), None) | (None, Some((d, i))) => Some(vec![(d, i, Integer::one())]),
            (Some(p), Some(q)) => Some(
                a.product(p, q)
                    .into_iter()
                    .map(|(k, c)| (p.0 + q.0, k, c))
                    .collect(),
            ),
        }
    };
    let mul_b = |x: Option<(usize, usize)>,
                 y: Option<(usize, usize)>|
     -> Option<Vec<(usize, usize, Integer)>> {
        match (x, y) {
            (None, None) => None,
            (Some((d, i)), None) | (None, Some((d, i))) => Some(vec![(d, i, Integer::one())]),
            (Some(p), Some(q)) => Some(
                b.product(p, q)
                    .into_iter()
                    .map(|(k, c)| (p.0 + q.0, k, c))
                    .collect(),
            ),
        }
    };
    let split = |e: &TElt| -> (Option<(usize, usize)>, Option<(usize, usize)>) {
        match e {
            TElt::Left(d, i) => (Some((*d, *i)), None),
            TElt::Right(d, i) => (None, Some((*d, *i))),
            TElt::Pair(da, ia, db, ib) => (Some((*da, *ia)), Some((*db, *ib))),
        }
    };
    for d1 in 0..=max_degree {
        for d2 in 0..=max_degree.saturating_sub(d1) {
            for (i1, e1) in basis[d1].iter().enumerate() {
                for (i2, e2) in basis[d2].iter().enumerate() {
                    let (x1, y1) = split(e1);
                    let (x2, y2) = split(e2);
                    // Koszul: (x1⊗y1)(x2⊗y2) = ±(x1x2 ⊗ y1y2)
                    let koszul = match (y1, x2) {
                        (Some((dy, _)), Some((dx, _))) => sign_of(dy, dx),
                        _ => Integer::one(),
                    };
                    let xs = mul_a(x1, x2);
                    let ys = mul_b(y1, y2);
                    let mut combo: BTreeMap<usize, Integer> = BTreeMap::new();
                    match (xs, ys) {
                        (None, None) => {} // unit·unit = unit, implicit
                        (Some(xv), None) => {
                            for (dx, ix, cx) in xv {
                                let (dd, idx) = index[&TElt::Left(dx, ix)];
                                debug_assert_eq!(dd, d1 + d2);
                                *combo.entry(idx).or_insert_with(Integer::zero) +=
                                    cx * koszul.clone();
                            }
                        }
                        (None, Some(yv)) => {
                            for (dy, iy, cy) in yv {
                                let (dd, idx) = index[&TElt::Right(dy, iy)];
                                debug_assert_eq!(dd, d1 + d2);
                                *combo.entry(idx).or_insert_with(Integer::zero) +=
                                    cy * koszul.clone();
                            }
                        }
                        (Some(xv), Some(yv)) => {
                            for (dx, ix, cx) in &xv {
                                for (dy, iy, cy) in &yv {
                                    let (dd, idx) = index[&TElt::Pair(*dx, *ix, *dy, *iy)];
                                    debug_assert_eq!(dd, d1 + d2);
                                    *combo.entry(idx).or_insert_with(Integer::zero) +=
                                        cx.clone() * cy.clone() * koszul.clone();
                                }
                            }
                        }
                    }
                    let entries: Vec<(usize, Integer)> =
                        combo.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                    if !entries.is_empty() {
                        out.products.insert((d1, i1, d2, i2), entries);
                    }
                }
            }
        }
    }
    for n in 2..=max_degree {
        if !out.diff(n - 1).mul(&out.diff(n))?.is_zero_matrix() {
            return Err(Error::bad_input(format!("tensor d∘d != 0 at degree {n}")));
        }
    }
    Ok(out)
}

/// Chain model of `K(π, n)` truncated at `max_degree`.
pub fn em_model(pi: &FgAbGroup, n: usize, max_degree: usize) -> Result<Dga, Error> {
    if n == 0 {
        return Dga::group_ring(pi);
    }
    let mut acc = Dga::unit(max_degree);
    for factor in pi.cyclic_factors() {
        let mut model = match factor {
            None => Dga::exterior(max_degree),
            Some(m) => Dga::divided_power_cyclic(&m, max_degree),
        };
        for _ in 1..n {
            model = bar(&model, max_degree)?;
        }
        acc = tensor(&acc, &model, max_degree)?;
    }
    Ok(acc)
}

/// Free chain complex computing the integral homology of the realization of
/// a simplicial abelian group: the degeneracy quotient yields the homotopy
/// groups, and the Eilenberg–MacLane models of the resulting product are
/// tensored together. Homology is reliable up to `max_degree(S) − 1`.
pub fn normalized_chains(s: &SimAbGroup, budget: usize) -> Result<GradedComplex<Integer>, Error> {
    let max_out = s.max_degree();
    let pi = homotopy_groups(s)?;
    let mut acc = Dga::unit(max_out);
    for (n, p) in pi.iter().enumerate() {
        if p.is_trivial() {
            continue;
        }
        if n == 0 {
            if !p.is_finite() {
                return Err(Error::bad_input(
                    "π_0 has a free summand: realization has infinitely many components",
                ));
            }
            acc = tensor(&acc, &em_model(p, 0, max_out)?, max_out)?;
        } else {
            acc = tensor(&acc, &em_model(p, n, max_out)?, max_out)?;
        }
        for (deg, r) in acc.ranks.iter().enumerate() {
            if *r > budget {
                return Err(Error::BudgetExceeded {
                    degree: deg,
                    size: *r,
                    budget,
                });
            }
        }
    }
    acc.complex()
}


#[cfg(test)]
mod chain_example_tests {
    use super::*;
    use crate::bar::simgroup::{b_of, SimAbGroup, DEFAULT_BUDGET};

    #[test]
    fn normalized_chains_of_bz_is_circle() {
        let b = b_of(
            &SimAbGroup::constant(&FgAbGroup::free(1), 3),
            DEFAULT_BUDGET,
        )
        .unwrap();
        let h = normalized_chains(&b, DEFAULT_BUDGET)
            .unwrap()
            .homology()
            .unwrap();
        let table: Vec<String> = (0..=3).map(|d| h.group(d).to_string()).collect();
        assert_eq!(table, vec!["Z", "Z", "0", "0"]);
    }
}
