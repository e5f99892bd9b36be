use super::EbOptions;
use crate::error::{Error, Result};
use crate::ring::FiniteRing;
use crate::search::FreeSequenceSearch;
use crate::sequence::{is_idempotent_product_free, Sequence};

/// Default largest ring order for the exact search.
pub const EXACT_SEARCH_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactEb {
    pub value: usize,
    /// Lexicographically least idempotent-product-free sequence of length `value - 1`.
    pub witness: Sequence,
    pub nodes: u64,
}

/// Exact `I(S_R)`: one more than the length of the longest
/// idempotent-product-free sequence, found by exhaustive search.
pub fn exact_eb(ring: &FiniteRing, options: &EbOptions) -> Result<ExactEb> {
    if let Some(cap) = options.exact_cap {
        if ring.order() > cap {
            return Err(Error::CapExceeded {
                what: "ring order for the exact Erdős-Burgess search",
                size: ring.order(),
                cap,
                hint: "; give an explicit budget to search anyway",
            });
        }
    }
    let search = FreeSequenceSearch::new(ring, ring.idempotents(), options.budget);
    let outcome = search.run(options.parallel)?;
    let witness = Sequence::new(outcome.witness);
    if witness.len() != outcome.max_length || !is_idempotent_product_free(ring, &witness) {
        return Err(Error::InternalConsistency(format!(
            "search witness for {} is not idempotent-product free",
            ring.label()
        )));
    }
    Ok(ExactEb {
        value: outcome.max_length + 1,
        witness,
        nodes: outcome.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eb(ring: &FiniteRing) -> usize {
        exact_eb(ring, &EbOptions::default()).unwrap().value
    }

    #[test]
    fn small_values() {
        assert_eq!(eb(&FiniteRing::zmod(2).unwrap()), 1);
        assert_eq!(eb(&FiniteRing::zmod(4).unwrap()), 3);
        for q in [2, 3, 4, 5, 7, 8, 9] {
            assert_eq!(eb(&FiniteRing::gf(q).unwrap()), q - 1, "GF({q})");
        }
    }

    #[test]
    fn witness_is_free() {
        let r = FiniteRing::zmod(12).unwrap();
        let out = exact_eb(&r, &EbOptions::default()).unwrap();
        assert_eq!(out.witness.len(), out.value - 1);
        assert!(is_idempotent_product_free(&r, &out.witness));
    }

    #[test]
    fn cap_is_enforced() {
        let r = FiniteRing::zmod(25).unwrap();
        assert!(matches!(exact_eb(&r, &EbOptions::default()), Err(Error::CapExceeded { .. })));
        let lifted = EbOptions {
            exact_cap: None,
            ..Default::default()
        };
        assert_eq!(exact_eb(&r, &lifted).unwrap().value, 21);
    }
}
