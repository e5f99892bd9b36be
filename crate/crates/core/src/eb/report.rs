use std::fmt;

use super::{construct_extremal, exact_eb, EbOptions};
use crate::error::{Error, Result};
use crate::group::unit_group_view;
use crate::ring::FiniteRing;
use crate::sequence::Sequence;

/// Which hypothesis of the equality theorem the ring satisfies. This is a
/// statement about the ring's ideal structure, not about computed values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EqualityCase {
    Local,
    AllIndicesOne,
    Both,
    Unknown,
}

impl EqualityCase {
    pub fn as_str(self) -> &'static str {
        match self {
            EqualityCase::Local => "local",
            EqualityCase::AllIndicesOne => "all-indices-one",
            EqualityCase::Both => "both",
            EqualityCase::Unknown => "unknown",
        }
    }

    pub fn guarantees_equality(self) -> bool {
        self != EqualityCase::Unknown
    }
}

impl fmt::Display for EqualityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExactMode {
    /// Search when the ring is within the exact-search cap; fall back to the
    /// lower bound in the equality cases when the budget runs out.
    #[default]
    Auto,
    /// Always search; budget exhaustion is an error.
    Force,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalIdealSummary {
    pub generators: Vec<String>,
    pub size: usize,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub ring_label: String,
    pub ring_order: usize,
    pub units_order: usize,
    pub unit_group: Vec<usize>,
    pub davenport_of_units: usize,
    pub maximal_ideals: Vec<MaximalIdealSummary>,
    pub lower_bound: usize,
    pub exact_i: Option<usize>,
    pub exact_is_formula_derived: bool,
    pub upper_bound: usize,
    pub equality_case: EqualityCase,
    /// Longest idempotent-product-free sequence known: the search witness
    /// when the exact value was searched, otherwise the constructed one.
    pub witness_t: Option<Sequence>,
    pub witness_t_names: Option<Vec<String>>,
}

impl InvariantReport {
    /// Bound checks that must hold for every report.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(exact) = self.exact_i {
            if exact < self.lower_bound {
                out.push(format!("I = {exact} is below the lower bound {}", self.lower_bound));
            }
            if exact > self.upper_bound {
                out.push(format!("I = {exact} exceeds |R \\ E| + 1 = {}", self.upper_bound));
            }
            if self.equality_case.guarantees_equality() && exact != self.lower_bound {
                out.push(format!(
                    "equality case {} but I = {exact} != lower bound {}",
                    self.equality_case, self.lower_bound
                ));
            }
        }
        out
    }
}

pub fn report(ring: &FiniteRing, mode: ExactMode, options: &EbOptions) -> Result<InvariantReport> {
    let trace = construct_extremal(ring, options)?;
    let units = unit_group_view(ring);
    let maximal_ideals: Vec<MaximalIdealSummary> = trace
        .steps
        .iter()
        .map(|s| MaximalIdealSummary {
            generators: s.maximal_ideal.generator_names(),
            size: s.maximal_ideal.len(),
            index: s.index,
        })
        .collect();
    let r = maximal_ideals.len();
    let all_one = maximal_ideals.iter().all(|m| m.index == 1);
    let equality_case = match (r == 1, all_one) {
        (true, true) => EqualityCase::Both,
        (true, false) => EqualityCase::Local,
        (false, true) => EqualityCase::AllIndicesOne,
        (false, false) => EqualityCase::Unknown,
    };
    let lower_bound = trace.lower_bound();

    let searched = match mode {
        ExactMode::Force => {
            let opts = EbOptions {
                exact_cap: None,
                ..*options
            };
            Some(exact_eb(ring, &opts)?)
        }
        ExactMode::Auto => match exact_eb(ring, options) {
            Ok(found) => Some(found),
            Err(Error::CapExceeded { .. } | Error::BudgetExhausted { .. }) => None,
            Err(e) => return Err(e),
        },
    };
    let (exact_i, exact_is_formula_derived, witness) = match searched {
        Some(found) => (Some(found.value), false, found.witness),
        None if equality_case.guarantees_equality() => (Some(lower_bound), true, trace.sequence.clone()),
        None => (None, false, trace.sequence.clone()),
    };
    let names = witness.terms().iter().map(|&t| ring.element_name(t)).collect();

    Ok(InvariantReport {
        ring_label: ring.label().to_string(),
        ring_order: ring.order(),
        units_order: units.order(),
        unit_group: units.invariant_factors().to_vec(),
        davenport_of_units: trace.davenport_of_units,
        maximal_ideals,
        lower_bound,
        exact_i,
        exact_is_formula_derived,
        upper_bound: ring.order() - ring.idempotents().len() + 1,
        equality_case,
        witness_t: Some(witness),
        witness_t_names: Some(names),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z12_report() {
        let r = FiniteRing::zmod(12).unwrap();
        let rep = report(&r, ExactMode::Auto, &EbOptions::default()).unwrap();
        assert_eq!(rep.unit_group, vec![2, 2]);
        assert_eq!(rep.davenport_of_units, 3);
        assert_eq!(rep.lower_bound, 4);
        assert_eq!(rep.upper_bound, 9);
        assert_eq!(rep.equality_case, EqualityCase::Unknown);
        assert!(rep.exact_i.is_some());
        assert!(!rep.exact_is_formula_derived);
        assert!(rep.violations().is_empty());
    }

    #[test]
    fn classification() {
        let case = |r: &FiniteRing| report(r, ExactMode::Auto, &EbOptions::default()).unwrap().equality_case;
        assert_eq!(case(&FiniteRing::gf(7).unwrap()), EqualityCase::Both);
        assert_eq!(case(&FiniteRing::zmod(8).unwrap()), EqualityCase::Local);
        assert_eq!(case(&FiniteRing::zmod(30).unwrap()), EqualityCase::AllIndicesOne);
    }

    #[test]
    fn formula_fallback_above_cap() {
        let r = FiniteRing::zmod(27).unwrap();
        let rep = report(&r, ExactMode::Auto, &EbOptions::default()).unwrap();
        assert_eq!(rep.exact_i, Some(rep.lower_bound));
        assert!(rep.exact_is_formula_derived);
        let r = FiniteRing::zmod(36).unwrap();
        let rep = report(&r, ExactMode::Auto, &EbOptions::default()).unwrap();
        assert_eq!(rep.exact_i, None);
        assert_eq!(rep.witness_t.unwrap().len() + 1, rep.lower_bound);
    }
}
