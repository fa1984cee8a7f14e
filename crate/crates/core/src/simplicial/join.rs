//! Join of complexes: vertices the disjoint union, simplices `σ ⊔ τ` with
//! `σ ∈ X ∪ {∅}`, `τ ∈ Y ∪ {∅}`, not both empty.

use crate::error::Error;
use crate::simplicial::complex::Complex;

pub fn join_complex(x: &Complex, y: &Complex) -> Result<Complex, Error> {
    let offset = x.vertex_count();
    let mut facets = Vec::new();
    for fx in x.facets() {
        for fy in y.facets() {
            let mut verts = fx.vertices().to_vec();
            verts.extend(fy.vertices().iter().map(|v| v + offset));
            facets.push(verts);
        }
    }
    Complex::build(offset + y.vertex_count(), &facets)
}

/// The complex with `m` isolated points.
pub fn points(m: usize) -> Result<Complex, Error> {
    let facets: Vec<Vec<usize>> = (0..m).map(|v| vec![v]).collect();
    Complex::build(m, &facets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::group::FgAbGroup;
    use crate::scalar::Integer;
    use crate::simplicial::spaces::{standard_space, SpaceName};

    #[test]
    fn two_points_join_two_points_is_circle() {
        let s0 = points(2).unwrap();
        let j = join_complex(&s0, &s0).unwrap();
        assert_eq!(j.f_vector(), vec![4, 4]);
        let h = j.chain_complex::<Integer>().homology().unwrap();
        assert_eq!(h.group(0), FgAbGroup::free(1));
        assert_eq!(h.group(1), FgAbGroup::free(1));
    }

    #[test]
    fn three_points_join_three_points_is_k33() {
        let p3 = points(3).unwrap();
        let j = join_complex(&p3, &p3).unwrap();
        assert_eq!(j.euler_characteristic(), 6 - 9);
        let h = j.chain_complex::<Integer>().homology().unwrap();
        assert_eq!(h.group(1), FgAbGroup::free(4));
    }

    #[test]
    fn suspension_of_circle_is_sphere() {
        // sphere(0) * 4-cycle circle
        let s0 = points(2).unwrap();
        let square =
            Complex::from_facets(&[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).unwrap();
        let j = join_complex(&s0, &square).unwrap();
        let h = j.chain_complex::<Integer>().homology().unwrap();
        assert_eq!(h.group(0), FgAbGroup::free(1));
        assert_eq!(h.group(1), FgAbGroup::trivial());
        assert_eq!(h.group(2), FgAbGroup::free(1));
    }

    #[test]
    fn join_suspension_rule() {
        // reduced H_{k+1}(G * X) = (m-1) copies of reduced H_k(X)
        for m in [2usize, 3] {
            for name in [SpaceName::Circle, SpaceName::Sphere(2)] {
                let g = points(m).unwrap();
                let x = standard_space(name);
                let j = join_complex(&g, &x).unwrap();
                let hx = x.chain_complex::<Integer>().homology().unwrap();
                let hj = j.chain_complex::<Integer>().homology().unwrap();
                for k in 0..=x.dim() {
                    let reduced_rank = if k == 0 {
                        hx.group(0).free_rank() - 1
                    } else {
                        hx.group(k as isize).free_rank()
                    };
                    let expect = (m - 1) * reduced_rank;
                    let got = if k + 1 == 0 {
                        0
                    } else {
                        hj.group((k + 1) as isize).free_rank()
                    };
                    assert_eq!(got, expect, "m={m} {name} k={k}");
                    assert!(hj.group((k + 1) as isize).torsion().is_empty());
                }
            }
        }
    }
}
