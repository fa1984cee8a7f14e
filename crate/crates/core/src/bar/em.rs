//! Eilenberg–MacLane homology through the full pipeline: iterate the
//! classifying-space construction, extract homotopy through the degeneracy
//! quotient, assemble the chain model, take homology.

use crate::bar::models::normalized_chains;
use crate::bar::simgroup::iterate_b;
use crate::error::Error;
use crate::exact::group::FgAbGroup;

/// `H_i(K(A, s); Z)` for `i ≤ max_degree`.
pub fn em_homology(
    a: &FgAbGroup,
    s: usize,
    max_degree: usize,
    budget: usize,
) -> Result<Vec<FgAbGroup>, Error> {
    if s == 0 {
        return Err(Error::bad_input("em_homology needs s >= 1"));
    }
    // one extra simplicial degree so the top requested homology has its
    // incoming boundaries
    let sim = iterate_b(a, s, max_degree + 1, budget)?;
    let chains = normalized_chains(&sim, budget)?;
    let h = chains.homology()?;
    Ok((0..=max_degree as isize).map(|d| h.group(d)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bar::simgroup::DEFAULT_BUDGET;

    fn table(spec: &str, s: usize, n: usize) -> Vec<String> {
        em_homology(&FgAbGroup::parse(spec).unwrap(), s, n, DEFAULT_BUDGET)
            .unwrap()
            .iter()
            .map(|g| g.to_string())
            .collect()
    }

    #[test]
    fn rp_infinity_pattern() {
        assert_eq!(table("Z/2", 1, 5), vec!["Z", "Z/2", "0", "Z/2", "0", "Z/2"]);
    }

    #[test]
    fn cp_infinity_pattern() {
        assert_eq!(table("Z", 2, 4), vec!["Z", "0", "Z", "0", "Z"]);
    }

    #[test]
    fn circle_pattern() {
        assert_eq!(table("Z", 1, 3), vec!["Z", "Z", "0", "0"]);
    }

    #[test]
    fn em_axioms_s3() {
        // H_i = 0 for 0 < i < 3, H_3 = A
        let t = table("Z/3", 3, 3);
        assert_eq!(t, vec!["Z", "0", "0", "Z/3"]);
        let t = table("Z", 3, 3);
        assert_eq!(t, vec!["Z", "0", "0", "Z"]);
    }

    #[test]
    fn trivial_group() {
        assert_eq!(table("0", 2, 3), vec!["Z", "0", "0", "0"]);
    }

    #[test]
    fn budget_error_names_degree() {
        let g = FgAbGroup::parse("Z/2").unwrap();
        match em_homology(&g, 3, 6, 50) {
            Err(Error::BudgetExceeded { .. }) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
    }
}
