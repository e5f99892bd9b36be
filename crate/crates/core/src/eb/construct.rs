use super::EbOptions;
use crate::davenport::davenport;
use crate::error::{Error, Result};
use crate::group::unit_group_view;
use crate::ideal::{crt_solve, maximal_ideals, Ideal};
use crate::ring::FiniteRing;
use crate::sequence::{is_idempotent_product_free, product_set, Sequence};

/// `π(y_1 ⋯ y_j) ∈ M^j \ M^(j+1)`, checked by membership.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthCertificate {
    pub depth: usize,
    pub product: usize,
    pub holds: bool,
}

/// The data contributed by one maximal ideal `M` of index `k`.
#[derive(Debug, Clone)]
pub struct IdealStep {
    pub maximal_ideal: Ideal,
    pub index: usize,
    /// `y_1, ..., y_(k-1)` in `M`.
    pub chosen: Vec<usize>,
    /// Lifts agreeing with `y_j` modulo `M^k` and with 1 modulo the other `M_t^(k_t)`.
    pub lifted: Vec<usize>,
    pub depth_certificates: Vec<DepthCertificate>,
}

#[derive(Debug, Clone)]
pub struct ConstructionTrace {
    pub ring_label: String,
    pub steps: Vec<IdealStep>,
    pub davenport_of_units: usize,
    /// Zero-sum-free sequence over `U(R)` of length `D(U(R)) - 1`, as ring elements.
    pub davenport_witness: Sequence,
    /// `V` followed by every lifted element.
    pub sequence: Sequence,
    pub verified: bool,
}

impl ConstructionTrace {
    /// `D(U(R)) + Σ (k_i - 1)`.
    pub fn lower_bound(&self) -> usize {
        self.davenport_of_units + self.steps.iter().map(|s| s.index - 1).sum::<usize>()
    }

    pub fn certificates_hold(&self) -> bool {
        self.steps.iter().all(|s| s.depth_certificates.iter().all(|c| c.holds))
    }
}

/// Depth-first search for `y_1, ..., y_(k-1) ∈ M` whose prefix products sit
/// exactly at depth `j` of the power chain `M^0 ⊋ M^1 ⊋ ... ⊋ M^k`.
fn descending_tuple(ring: &FiniteRing, chain: &[Ideal], maximal: &Ideal) -> Option<Vec<usize>> {
    let k = chain.len() - 1;
    let mut tuple = Vec::with_capacity(k.saturating_sub(1));
    fn go(
        ring: &FiniteRing,
        chain: &[Ideal],
        maximal: &Ideal,
        prefix: usize,
        tuple: &mut Vec<usize>,
    ) -> bool {
        let j = tuple.len() + 1;
        if j == chain.len() - 1 {
            return true;
        }
        for y in maximal.members().iter() {
            let p = ring.mul(prefix, y);
            if chain[j].contains(p) && !chain[j + 1].contains(p) {
                tuple.push(y);
                if go(ring, chain, maximal, p, tuple) {
                    return true;
                }
                tuple.pop();
            }
        }
        false
    }
    go(ring, chain, maximal, ring.one(), &mut tuple).then_some(tuple)
}

/// Builds the idempotent-product-free sequence of length
/// `D(U(R)) - 1 + Σ (Ind(M) - 1)` and verifies it.
pub fn construct_extremal(ring: &FiniteRing, options: &EbOptions) -> Result<ConstructionTrace> {
    let maximal = maximal_ideals(ring)?;
    let chains: Vec<Vec<Ideal>> = maximal.iter().map(Ideal::power_chain).collect();
    let tops: Vec<Ideal> = chains.iter().map(|c| c.last().unwrap().clone()).collect();

    let mut steps = Vec::with_capacity(maximal.len());
    for (i, (m, chain)) in maximal.iter().zip(&chains).enumerate() {
        let index = chain.len() - 1;
        let chosen = descending_tuple(ring, chain, m).ok_or_else(|| {
            Error::InternalConsistency(format!(
                "no descending tuple of length {} in {}",
                index.saturating_sub(1),
                m.render()
            ))
        })?;

        let mut lifted = Vec::with_capacity(chosen.len());
        for &y in &chosen {
            let constraints: Vec<(Ideal, usize)> = tops
                .iter()
                .enumerate()
                .map(|(t, top)| (top.clone(), if t == i { y } else { ring.one() }))
                .collect();
            lifted.push(crt_solve(ring, &constraints)?);
        }

        let mut depth_certificates = Vec::with_capacity(chosen.len());
        let mut product = ring.one();
        for (j, &y) in chosen.iter().enumerate() {
            product = ring.mul(product, y);
            let depth = j + 1;
            let holds = m.power(depth).contains(product) && !m.power(depth + 1).contains(product);
            depth_certificates.push(DepthCertificate {
                depth,
                product,
                holds,
            });
        }
        steps.push(IdealStep {
            maximal_ideal: m.clone(),
            index,
            chosen,
            lifted,
            depth_certificates,
        });
    }

    let units = unit_group_view(ring);
    let d = davenport(&units, &options.davenport)?;
    let davenport_witness = d.witness_in_carrier(&units);
    let mut terms = davenport_witness.terms().to_vec();
    for step in &steps {
        terms.extend_from_slice(&step.lifted);
    }
    let sequence = Sequence::new(terms);

    let mut trace = ConstructionTrace {
        ring_label: ring.label().to_string(),
        steps,
        davenport_of_units: d.value,
        davenport_witness,
        sequence,
        verified: false,
    };
    let free = is_idempotent_product_free(ring, &trace.sequence);
    let lengths_ok = trace.sequence.len() + 1 == trace.lower_bound();
    let units_ok = trace.davenport_witness.terms().iter().all(|&v| ring.inverse(v).is_some())
        && !product_set(ring, &trace.davenport_witness).contains(ring.one());
    trace.verified = free && lengths_ok && units_ok && trace.certificates_hold();
    if !trace.verified {
        return Err(Error::InternalConsistency(format!(
            "constructed sequence for {} failed verification (free: {free}, length: {lengths_ok}, V: {units_ok})",
            ring.label()
        )));
    }
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(ring: &FiniteRing) -> ConstructionTrace {
        construct_extremal(ring, &EbOptions::default()).unwrap()
    }

    #[test]
    fn field_gives_davenport_witness_only() {
        let f5 = FiniteRing::gf(5).unwrap();
        let t = build(&f5);
        assert_eq!(t.sequence.terms(), &[2, 2, 2]);
        assert_eq!(t.sequence, t.davenport_witness);
    }

    #[test]
    fn z4_and_z12() {
        let t = build(&FiniteRing::zmod(4).unwrap());
        assert_eq!(t.sequence.terms(), &[2, 3]);
        assert_eq!(t.lower_bound(), 3);
        let t = build(&FiniteRing::zmod(12).unwrap());
        assert_eq!(t.sequence.len(), 3);
        assert_eq!(t.steps.iter().map(|s| s.index).collect::<Vec<_>>(), vec![2, 1]);
        // the lift of y ∈ (2) must be 1 modulo (3)
        let lift = t.steps[0].lifted[0];
        assert_eq!(lift % 3, 1);
        assert_eq!(lift % 4, t.steps[0].chosen[0] % 4);
    }

    #[test]
    fn deep_local_ring() {
        let f2 = FiniteRing::gf(2).unwrap();
        let r = FiniteRing::poly_quotient(&f2, &[0, 0, 0, 0, 1]).unwrap();
        let t = build(&r);
        assert_eq!(t.steps[0].index, 4);
        assert_eq!(t.steps[0].depth_certificates.len(), 3);
        assert!(t.certificates_hold());
        assert_eq!(t.sequence.len() + 1, t.lower_bound());
    }
}
