//! The closed-star cover and its nerve.
//!
//! The cover pieces are the closed vertex stars; the intersection oracle
//! over an index set `S` spanning a simplex is the closed star of the
//! simplex `S` itself, `St(S) = {σ : σ ∪ S ∈ X}`. With that convention the
//! nerve of the cover is the complex itself, and every nonempty
//! intersection is a cone (apex any vertex of `S`), hence acyclic — the
//! property the Čech machinery leans on.

use crate::error::Error;
use crate::simplicial::complex::{Complex, SimplexKey};

#[derive(Clone, Debug)]
pub struct Cover {
    complex: Complex,
}

impl Cover {
    pub fn star_cover(complex: &Complex) -> Cover {
        Cover {
            complex: complex.clone(),
        }
    }

    pub fn complex(&self) -> &Complex {
        &self.complex
    }

    /// The piece at vertex `v`: the closed star `St(v)`.
    pub fn piece(&self, v: usize) -> Result<Vec<SimplexKey>, Error> {
        if v >= self.complex.vertex_count() {
            return Err(Error::bad_input(format!("vertex {v} out of range")));
        }
        Ok(self.complex.star_of(&SimplexKey::new(vec![v])?))
    }

    /// Intersection oracle: simplices of `∩_{v ∈ S} pieces`, computed as the
    /// closed star of the simplex spanned by `S`. Empty when `S` spans no
    /// simplex.
    pub fn intersection(&self, index_set: &SimplexKey) -> Vec<SimplexKey> {
        if !self.complex.contains(index_set) {
            return Vec::new();
        }
        self.complex.star_of(index_set)
    }

    pub fn intersection_nonempty(&self, index_set: &SimplexKey) -> bool {
        self.complex.contains(index_set)
    }

    /// The nerve: index sets with nonempty intersection. Returned as a
    /// complex on the same vertices; isomorphic (identical, here) to the
    /// underlying complex.
    pub fn nerve(&self) -> Result<Complex, Error> {
        let facets: Vec<Vec<usize>> = self
            .complex
            .facets()
            .into_iter()
            .map(|s| s.vertices().to_vec())
            .collect();
        Complex::build(self.complex.vertex_count(), &facets)
    }

    /// Nerve invariant: nerve(star_cover(X)) has exactly the simplices of X.
    pub fn verify_nerve(&self) -> Result<(), Error> {
        let nerve = self.nerve()?;
        if nerve != self.complex {
            return Err(Error::bad_input(
                "nerve of the star cover differs from the complex",
            ));
        }
        // spot-check the definition directly: S in nerve iff intersection nonempty
        for d in 0..=self.complex.dim() {
            for s in self.complex.simplices(d) {
                if !self.intersection_nonempty(s) {
                    return Err(Error::bad_input(format!(
                        "empty intersection over simplex {s:?}"
                    )));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::spaces::{standard_space, SpaceName};

    #[test]
    fn circle_star_cover() {
        let x = standard_space(SpaceName::Circle);
        let cover = Cover::star_cover(&x);
        // each star: a path of 2 edges (3 vertices, 2 edges)
        for v in 0..3 {
            let star = cover.piece(v).unwrap();
            let edges = star.iter().filter(|s| s.dim() == 1).count();
            let verts = star.iter().filter(|s| s.dim() == 0).count();
            assert_eq!((verts, edges), (3, 2));
        }
        // pairwise intersections: single edges
        for (a, b) in [(0, 1), (1, 2), (0, 2)] {
            let inter = cover.intersection(&SimplexKey::new(vec![a, b]).unwrap());
            let labels: Vec<String> = inter.iter().map(SimplexKey::label).collect();
            assert_eq!(
                labels,
                vec![a.to_string(), b.to_string(), format!("{a},{b}")]
            );
        }
        // no triple intersection: {0,1,2} spans no simplex
        assert!(!cover.intersection_nonempty(&SimplexKey::new(vec![0, 1, 2]).unwrap()));
        cover.verify_nerve().unwrap();
    }

    #[test]
    fn sphere_nerve_is_sphere() {
        let x = standard_space(SpaceName::Sphere(2));
        let cover = Cover::star_cover(&x);
        cover.verify_nerve().unwrap();
        // every pairwise and triple star intersection nonempty
        for d in 1..=2 {
            for s in x.simplices(d) {
                assert!(!cover.intersection(s).is_empty());
            }
        }
    }

    #[test]
    fn single_edge_stars_are_whole_complex() {
        let x = crate::simplicial::complex::Complex::from_facets(&[vec![0, 1]]).unwrap();
        let cover = Cover::star_cover(&x);
        for v in 0..2 {
            assert_eq!(cover.piece(v).unwrap().len(), 3);
        }
    }

    #[test]
    fn nerve_on_corpus() {
        for name in SpaceName::all_corpus() {
            let cover = Cover::star_cover(&standard_space(name));
            cover.verify_nerve().unwrap();
        }
    }
}
