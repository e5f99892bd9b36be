//! Exact Davenport constants by exhaustive zero-sum-free search.

use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::group::AbelianGroupView;
use crate::search::{Budget, FreeSequenceSearch};
use crate::sequence::{product_set, Sequence};

/// Default largest group order the exact search accepts.
pub const DAVENPORT_SEARCH_CAP: usize = 64;

#[derive(Debug, Clone, Copy)]
pub struct DavenportOptions {
    pub cap: usize,
    pub budget: Budget,
    /// Allow the closed form `D(Z_n) = n` for cyclic groups instead of searching.
    pub trust_formulas: bool,
    pub parallel: bool,
}

impl Default for DavenportOptions {
    fn default() -> Self {
        DavenportOptions {
            cap: DAVENPORT_SEARCH_CAP,
            budget: Budget::default(),
            trust_formulas: false,
            parallel: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DavenportResult {
    pub value: usize,
    /// Zero-sum-free sequence of length `value - 1`, in local group indices.
    pub witness: Sequence,
    /// False when the value came from a closed form rather than the search.
    pub exhaustive: bool,
    pub nodes: u64,
}

impl DavenportResult {
    /// The witness re-expressed in carrier indices (ring elements for `U(R)`).
    pub fn witness_in_carrier(&self, group: &AbelianGroupView) -> Sequence {
        self.witness.map(|t| group.carrier_index(t))
    }
}

pub fn is_zero_sum_free(group: &AbelianGroupView, seq: &Sequence) -> bool {
    !product_set(group, seq).contains(group.identity())
}

/// `D(G)`: one more than the longest zero-sum-free sequence, with the
/// lexicographically least such sequence as witness.
pub fn davenport(group: &AbelianGroupView, options: &DavenportOptions) -> Result<DavenportResult> {
    if options.trust_formulas && group.is_cyclic() {
        let n = group.order();
        let generator = (0..n).find(|&a| group.element_order(a) == n).unwrap_or(group.identity());
        return Ok(DavenportResult {
            value: n,
            witness: Sequence::new(vec![generator; n - 1]),
            exhaustive: false,
            nodes: 0,
        });
    }
    if group.order() > options.cap {
        return Err(Error::CapExceeded {
            what: "group order for the Davenport search",
            size: group.order(),
            cap: options.cap,
            hint: "; cyclic groups can use the closed form D = n with trusted formulas",
        });
    }
    let forbidden = ElementSet::from_indices(group.order(), [group.identity()]);
    let outcome = FreeSequenceSearch::new(group, forbidden, options.budget).run(options.parallel)?;
    let witness = Sequence::new(outcome.witness);
    debug_assert!(is_zero_sum_free(group, &witness));
    Ok(DavenportResult {
        value: outcome.max_length + 1,
        witness,
        exhaustive: true,
        nodes: outcome.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{synthetic_group, unit_group_view};
    use crate::ring::FiniteRing;

    fn d(moduli: &[usize]) -> DavenportResult {
        davenport(&synthetic_group(moduli).unwrap(), &DavenportOptions::default()).unwrap()
    }

    #[test]
    fn trivial_group() {
        let r = d(&[]);
        assert_eq!(r.value, 1);
        assert!(r.witness.is_empty());
    }

    #[test]
    fn small_groups() {
        assert_eq!(d(&[2, 2]).value, 3);
        assert_eq!(d(&[2, 2]).witness.terms(), &[1, 2]);
        assert_eq!(d(&[3, 3]).value, 5);
        assert_eq!(d(&[2, 4]).value, 5);
        assert_eq!(d(&[2, 2, 2]).value, 4);
        let g = synthetic_group(&[6]).unwrap();
        let r = davenport(&g, &DavenportOptions::default()).unwrap();
        assert_eq!(r.value, 6);
        assert!(is_zero_sum_free(&g, &r.witness));
        assert_eq!(r.witness.len(), 5);
    }

    #[test]
    fn unit_group_of_z12_matches_synthetic_klein_group() {
        let u = unit_group_view(&FiniteRing::zmod(12).unwrap());
        let r = davenport(&u, &DavenportOptions::default()).unwrap();
        assert_eq!(r.value, d(&[2, 2]).value);
        assert_eq!(r.witness_in_carrier(&u).terms(), &[5, 7]);
    }

    #[test]
    fn cap_and_formula_path() {
        let g = synthetic_group(&[100]).unwrap();
        assert!(matches!(
            davenport(&g, &DavenportOptions::default()),
            Err(Error::CapExceeded { .. })
        ));
        let opts = DavenportOptions {
            trust_formulas: true,
            ..Default::default()
        };
        let r = davenport(&g, &opts).unwrap();
        assert_eq!(r.value, 100);
        assert!(!r.exhaustive);
        assert!(is_zero_sum_free(&g, &r.witness));
    }
}
