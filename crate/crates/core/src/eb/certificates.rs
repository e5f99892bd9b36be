//! Direct certificates for the two equality cases: given a sequence of
//! length equal to the lower bound, exhibit a nonempty subsequence with an
//! idempotent product without running the exponential search.

use super::EbOptions;
use crate::davenport::davenport;
use crate::error::{Error, Result};
use crate::group::unit_group_view;
use crate::ideal::{crt_solve, maximal_ideals, Ideal};
use crate::ring::FiniteRing;
use crate::sequence::{pi, positions_with_product, Sequence};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocalBranch {
    /// At least `D(U(R))` unit terms: some of them multiply to 1.
    UnitZeroSum { subsequence: Sequence },
    /// At least `k` terms in the maximal ideal `M`: their product lies in `M^k = 0`.
    NilpotentProduct { subsequence: Sequence },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalCertificate {
    pub units_part: Sequence,
    pub maximal_part: Sequence,
    pub branch: LocalBranch,
    /// The idempotent reached (1 or 0).
    pub product: usize,
}

/// Pigeonhole certificate for a local ring: a sequence of length
/// `D(U(R)) + k - 1` has either `D(U(R))` units or `k` nonunits.
pub fn local_case_certificate(
    ring: &FiniteRing,
    seq: &Sequence,
    options: &EbOptions,
) -> Result<LocalCertificate> {
    let maximal = maximal_ideals(ring)?;
    if maximal.len() != 1 {
        return Err(Error::Precondition(format!(
            "{} is not local ({} maximal ideals)",
            ring.label(),
            maximal.len()
        )));
    }
    let m = &maximal[0];
    let k = m.index();
    let units = unit_group_view(ring);
    let d = davenport(&units, &options.davenport)?.value;
    if seq.len() + 1 < d + k {
        return Err(Error::Precondition(format!(
            "sequence has length {} but the bound needs {}",
            seq.len(),
            d + k - 1
        )));
    }
    let (maximal_part, units_part): (Vec<usize>, Vec<usize>) =
        seq.terms().iter().partition(|&&a| m.contains(a));
    let units_part = Sequence::new(units_part);
    let maximal_part = Sequence::new(maximal_part);

    if units_part.len() >= d {
        let local: Vec<usize> =
            units_part.terms().iter().map(|&u| units.local_index(u).expect("unit")).collect();
        let pos = positions_with_product(&units, &local, units.identity()).ok_or_else(|| {
            Error::InternalConsistency(format!("{} units without a product equal to 1", local.len()))
        })?;
        let subsequence: Sequence = pos.into_iter().map(|i| units_part.terms()[i]).collect();
        let product = pi(ring, &subsequence);
        return Ok(LocalCertificate {
            units_part,
            maximal_part,
            branch: LocalBranch::UnitZeroSum { subsequence },
            product,
        });
    }
    let subsequence = Sequence::new(maximal_part.terms()[..k].to_vec());
    let product = pi(ring, &subsequence);
    if product != ring.zero() {
        return Err(Error::InternalConsistency(format!(
            "{k} elements of {} multiply to a nonzero element",
            m.render()
        )));
    }
    Ok(LocalCertificate {
        units_part,
        maximal_part,
        branch: LocalBranch::NilpotentProduct { subsequence },
        product,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeCertificate {
    /// Each term `a` of the input with its unit replacement `a'`.
    pub lifts: Vec<(usize, usize)>,
    /// A subsequence whose replacements multiply to 1.
    pub subsequence: Sequence,
    /// `π(W)`, an idempotent.
    pub product: usize,
}

/// Certificate for rings whose maximal ideals all have index one. Each term
/// `a` is replaced by the unit `a'` with `a' ≡ 1 (mod M)` when `a ∈ M` and
/// `a' ≡ a (mod M)` otherwise; a zero-sum subsequence of the replacements
/// has an idempotent product in the original terms.
pub fn squarefree_case_certificate(
    ring: &FiniteRing,
    seq: &Sequence,
    options: &EbOptions,
) -> Result<SquarefreeCertificate> {
    let maximal = maximal_ideals(ring)?;
    if let Some(m) = maximal.iter().find(|m| m.index() != 1) {
        return Err(Error::Precondition(format!(
            "maximal ideal {} has index {}",
            m.render(),
            m.index()
        )));
    }
    let units = unit_group_view(ring);
    let d = davenport(&units, &options.davenport)?.value;
    if seq.len() < d {
        return Err(Error::Precondition(format!(
            "sequence has length {} but D(U(R)) = {d}",
            seq.len()
        )));
    }
    let mut lifts = Vec::with_capacity(seq.len());
    for &a in seq.terms() {
        let constraints: Vec<(Ideal, usize)> = maximal
            .iter()
            .map(|m| (m.clone(), if m.contains(a) { ring.one() } else { a }))
            .collect();
        let lifted = crt_solve(ring, &constraints)?;
        if units.local_index(lifted).is_none() {
            return Err(Error::InternalConsistency(format!(
                "replacement of {} is not a unit",
                ring.element_name(a)
            )));
        }
        lifts.push((a, lifted));
    }
    let local: Vec<usize> = lifts.iter().map(|&(_, l)| units.local_index(l).unwrap()).collect();
    let pos = positions_with_product(&units, &local, units.identity()).ok_or_else(|| {
        Error::InternalConsistency(format!("{} units without a product equal to 1", local.len()))
    })?;
    let subsequence: Sequence = pos.into_iter().map(|i| lifts[i].0).collect();
    let product = pi(ring, &subsequence);
    if ring.mul(product, product) != product {
        return Err(Error::InternalConsistency(format!(
            "product {} of the certificate is not idempotent",
            ring.element_name(product)
        )));
    }
    Ok(SquarefreeCertificate {
        lifts,
        subsequence,
        product,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> EbOptions {
        EbOptions::default()
    }

    #[test]
    fn local_branches() {
        let z4 = FiniteRing::zmod(4).unwrap();
        let c = local_case_certificate(&z4, &Sequence::new(vec![3, 3, 2]), &opts()).unwrap();
        assert_eq!(c.branch, LocalBranch::UnitZeroSum {
            subsequence: Sequence::new(vec![3, 3])
        });
        assert_eq!(c.product, 1);

        let c = local_case_certificate(&z4, &Sequence::new(vec![1, 2, 2]), &opts()).unwrap();
        assert_eq!(c.branch, LocalBranch::NilpotentProduct {
            subsequence: Sequence::new(vec![2, 2])
        });
        assert_eq!(c.product, 0);

        let z12 = FiniteRing::zmod(12).unwrap();
        assert!(matches!(
            local_case_certificate(&z12, &Sequence::new(vec![1, 2, 3, 4]), &opts()),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            local_case_certificate(&z4, &Sequence::new(vec![3, 2]), &opts()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn squarefree_certificates() {
        let z6 = FiniteRing::zmod(6).unwrap();
        let c = squarefree_case_certificate(&z6, &Sequence::new(vec![2, 3]), &opts()).unwrap();
        assert_eq!(c.lifts, vec![(2, 5), (3, 1)]);
        assert_eq!(c.subsequence.terms(), &[3]);
        assert_eq!(z6.mul(c.product, c.product), c.product);

        let f2 = FiniteRing::gf(2).unwrap();
        let r = FiniteRing::poly_quotient(&f2, &[0, 1, 1]).unwrap();
        assert_eq!(r.idempotents().len(), 4);
        for a in 0..4 {
            let c = squarefree_case_certificate(&r, &Sequence::new(vec![a]), &opts()).unwrap();
            assert_eq!(c.product, a);
        }

        let z4 = FiniteRing::zmod(4).unwrap();
        assert!(matches!(
            squarefree_case_certificate(&z4, &Sequence::new(vec![2, 3]), &opts()),
            Err(Error::Precondition(_))
        ));
    }
}
