//! Finitely generated abelian groups in invariant-factor form.

use crate::error::Error;
use crate::exact::matrix::SparseMatrix;
use crate::exact::snf::smith_normal_form;
use crate::scalar::Integer;
use num_traits::{One, Zero};
use std::fmt;

/// `Z^free_rank ⊕ Z/d_1 ⊕ … ⊕ Z/d_k` with `2 ≤ d_1 | d_2 | … | d_k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FgAbGroup {
    free_rank: usize,
    torsion: Vec<Integer>,
}

impl FgAbGroup {
    /// Normalizes an arbitrary list of torsion moduli into divisibility
    /// order (e.g. `[2, 3]` becomes `[6]`). Moduli must be nonzero; units
    /// are dropped.
    pub fn new(free_rank: usize, torsion: Vec<Integer>) -> Result<Self, Error> {
        if torsion.iter().any(Zero::is_zero) {
            return Err(Error::bad_input(
                "torsion modulus 0 (use free_rank for free summands)",
            ));
        }
        if torsion.is_empty() {
            return Ok(FgAbGroup { free_rank, torsion });
        }
        let n = torsion.len();
        let mut diag = SparseMatrix::zero(n, n);
        for (i, d) in torsion.iter().enumerate() {
            diag.set(i, i, d.clone());
        }
        let s = smith_normal_form(&diag);
        let moduli: Vec<Integer> = s
            .diagonal()
            .into_iter()
            .filter(|d| !d.is_one() && !d.is_zero())
            .collect();
        Ok(FgAbGroup {
            free_rank,
            torsion: moduli,
        })
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    pub fn cyclic(d: u64) -> Self {
        if d == 0 {
            Self::free(1)
        } else if d == 1 {
            Self::trivial()
        } else {
            FgAbGroup {
                free_rank: 0,
                torsion: vec![Integer::from(d)],
            }
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[Integer] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of the group when finite.
    pub fn order(&self) -> Option<Integer> {
        if self.is_finite() {
            Some(self.torsion.iter().fold(Integer::one(), |a, d| a * d))
        } else {
            None
        }
    }

    /// Number of generators in the canonical presentation.
    pub fn generator_count(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    /// Relation matrix of the canonical presentation: columns `d_i · e_{free_rank + i}`.
    pub fn relation_matrix(&self) -> SparseMatrix<Integer> {
        let g = self.generator_count();
        let mut m = SparseMatrix::zero(g, self.torsion.len());
        for (i, d) in self.torsion.iter().enumerate() {
            m.set(self.free_rank + i, i, d.clone());
        }
        m
    }

    /// Split into cyclic factors: `free_rank` copies of `Z` and one `Z/d`
    /// per torsion modulus.
    pub fn cyclic_factors(&self) -> Vec<Option<Integer>> {
        let mut out = vec![None; self.free_rank];
        out.extend(self.torsion.iter().cloned().map(Some));
        out
    }

    /// Exponent of the torsion part (1 when torsion-free).
    pub fn torsion_exponent(&self) -> Integer {
        self.torsion.last().cloned().unwrap_or_else(Integer::one)
    }

    /// Parse `"Z"`, `"Z/6"`, `"Z^2+Z/2"`, `"Z/2+Z/4"`, `"0"`.
    pub fn parse(spec: &str) -> Result<Self, Error> {
        let spec = spec.trim();
        if spec == "0" {
            return Ok(Self::trivial());
        }
        let mut free = 0usize;
        let mut torsion = Vec::new();
        for part in spec.split('+') {
            let part = part.trim();
            if let Some(rank) = part.strip_prefix("Z^") {
                free += rank
                    .parse::<usize>()
                    .map_err(|_| Error::bad_input(format!("bad group part `{part}`")))?;
            } else if let Some(d) = part.strip_prefix("Z/") {
                let d: u64 = d
                    .parse()
                    .map_err(|_| Error::bad_input(format!("bad group part `{part}`")))?;
                if d < 2 {
                    return Err(Error::bad_input(format!(
                        "torsion modulus {d} must be >= 2"
                    )));
                }
                torsion.push(Integer::from(d));
            } else if part == "Z" {
                free += 1;
            } else {
                return Err(Error::bad_input(format!("bad group part `{part}`")));
            }
        }
        Self::new(free, torsion)
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
