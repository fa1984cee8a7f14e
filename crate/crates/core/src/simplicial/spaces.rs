//! The corpus of standard test spaces.
//!
//! * `circle` — the 3-vertex circle.
//! * `sphere(n)` — the boundary of the (n+1)-simplex.
//! * `torus` — the 7-vertex torus with facets `(i, i+1, i+3)` and
//!   `(i, i+2, i+3)` mod 7.
//! * `rp2` — the 6-vertex projective plane (icosahedron quotient).
//! * `klein` — an 8-vertex Klein bottle, validated by its invariants
//!   (closed surface, χ = 0, `H_1 = Z + Z/2`).

use crate::error::Error;
use crate::simplicial::complex::Complex;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpaceName {
    Circle,
    Sphere(usize),
    Torus,
    Rp2,
    Klein,
}

impl SpaceName {
    pub fn parse(name: &str) -> Result<Self, Error> {
        let n = name.trim().to_ascii_lowercase();
        match n.as_str() {
            "circle" => return Ok(SpaceName::Circle),
            "torus" => return Ok(SpaceName::Torus),
            "rp2" => return Ok(SpaceName::Rp2),
            "klein" => return Ok(SpaceName::Klein),
            _ => {}
        }
        let digits = n
            .strip_prefix("sphere")
            .map(|rest| rest.trim_matches(|c| c == '(' || c == ')'));
        if let Some(d) = digits {
            if let Ok(k) = d.parse::<usize>() {
                return Ok(SpaceName::Sphere(k));
            }
        }
        Err(Error::UnknownSpace(name.to_string()))
    }

    pub fn all_corpus() -> Vec<SpaceName> {
        vec![
            SpaceName::Circle,
            SpaceName::Sphere(2),
            SpaceName::Sphere(3),
            SpaceName::Sphere(4),
            SpaceName::Torus,
            SpaceName::Rp2,
            SpaceName::Klein,
        ]
    }
}

impl fmt::Display for SpaceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceName::Circle => write!(f, "circle"),
            SpaceName::Sphere(n) => write!(f, "sphere({n})"),
            SpaceName::Torus => write!(f, "torus"),
            SpaceName::Rp2 => write!(f, "rp2"),
            SpaceName::Klein => write!(f, "klein"),
        }
    }
}

pub fn standard_space(name: SpaceName) -> Complex {
    match name {
        SpaceName::Circle => Complex::from_facets(&[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap(),
        SpaceName::Sphere(n) => {
            // boundary of the (n+1)-simplex: all (n+1)-subsets of 0..=n+1
            let verts: Vec<usize> = (0..n + 2).collect();
            let mut facets = Vec::new();
            for skip in 0..n + 2 {
                facets.push(verts.iter().copied().filter(|&v| v != skip).collect());
            }
            Complex::from_facets(&facets).unwrap()
        }
        SpaceName::Torus => {
            let mut facets = Vec::new();
            for i in 0..7usize {
                facets.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
                facets.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
            }
            Complex::from_facets(&facets).unwrap()
        }
        SpaceName::Rp2 => Complex::from_facets(&[
            vec![0, 1, 2],
            vec![0, 1, 5],
            vec![0, 2, 3],
            vec![0, 3, 4],
            vec![0, 4, 5],
            vec![1, 2, 4],
            vec![1, 3, 4],
            vec![1, 3, 5],
            vec![2, 3, 5],
            vec![2, 4, 5],
        ])
        .unwrap(),
        SpaceName::Klein => Complex::from_facets(&[
            vec![0, 1, 5],
            vec![0, 1, 7],
            vec![0, 2, 3],
            vec![0, 2, 7],
            vec![0, 3, 4],
            vec![0, 4, 6],
            vec![0, 5, 6],
            vec![1, 4, 5],
            vec![1, 4, 6],
            vec![1, 6, 7],
            vec![2, 3, 6],
            vec![2, 4, 5],
            vec![2, 4, 7],
            vec![2, 5, 6],
            vec![3, 4, 7],
            vec![3, 6, 7],
        ])
        .unwrap(),
    }
}
