//! For `Z/n` and `GF(q)[x]/(f)` the index excess `Σ_M (Ind(M) - 1)` equals
//! `Ω - ω` of the modulus, and each prime factor `P` of multiplicity `k`
//! maps to a maximal ideal of index exactly `k`. These routines compute both
//! sides independently and compare them.

use crate::error::{Error, Result};
use crate::ideal::{maximal_ideals, Ideal};
use crate::ring::{poly, FiniteRing, VALIDATION_CAP};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeComponent {
    pub factor: String,
    pub multiplicity: usize,
    /// Generators of the image ideal in the quotient ring.
    pub image_generators: Vec<String>,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoincidenceRecord {
    pub ring_label: String,
    pub components: Vec<PrimeComponent>,
    pub big_omega: usize,
    pub small_omega: usize,
    /// `Σ (Ind(M) - 1)` over all maximal ideals of the quotient.
    pub index_excess: usize,
    pub maximal_ideal_count: usize,
}

impl CoincidenceRecord {
    pub fn coincides(&self) -> bool {
        self.index_excess == self.big_omega - self.small_omega
            && self.maximal_ideal_count == self.small_omega
            && self.components.iter().all(|c| c.index == c.multiplicity)
    }
}

/// Prime factorization by trial division, primes ascending.
pub fn factor_integer(mut n: u64) -> Vec<(u64, usize)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut k = 0;
        while n.is_multiple_of(p) {
            n /= p;
            k += 1;
        }
        if k > 0 {
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn check(
    ring: &FiniteRing,
    factors: Vec<(String, usize, usize)>,
) -> Result<CoincidenceRecord> {
    let maximal = maximal_ideals(ring)?;
    let mut components = Vec::with_capacity(factors.len());
    for (factor, multiplicity, image) in factors {
        let ideal = Ideal::generated_by(ring, &[image]);
        if !maximal.contains(&ideal) {
            return Err(Error::InternalConsistency(format!(
                "image of the prime {factor} in {} is not maximal",
                ring.label()
            )));
        }
        components.push(PrimeComponent {
            factor,
            multiplicity,
            image_generators: ideal.generator_names(),
            index: ideal.index(),
        });
    }
    let record = CoincidenceRecord {
        ring_label: ring.label().to_string(),
        big_omega: components.iter().map(|c| c.multiplicity).sum(),
        small_omega: components.len(),
        index_excess: maximal.iter().map(|m| m.index() - 1).sum(),
        maximal_ideal_count: maximal.len(),
        components,
    };
    if !record.coincides() {
        return Err(Error::InternalConsistency(format!(
            "{}: Σ(Ind-1) = {} but Ω-ω = {}-{}; components {:?}",
            record.ring_label, record.index_excess, record.big_omega, record.small_omega, record.components
        )));
    }
    Ok(record)
}

pub fn dedekind_crosscheck_int(n: usize) -> Result<CoincidenceRecord> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("modulus {n} must be at least 2")));
    }
    let ring = FiniteRing::zmod(n)?;
    let factors = factor_integer(n as u64)
        .into_iter()
        .map(|(p, k)| (p.to_string(), k, p as usize % n))
        .collect();
    check(&ring, factors)
}

/// `f` lists coefficients over `GF(q)` as integers in the prime subfield,
/// constant term first; it must be monic of degree at least one.
pub fn dedekind_crosscheck_poly(q: usize, f: &[u64]) -> Result<CoincidenceRecord> {
    let field = FiniteRing::gf(q)?;
    let coeffs: Vec<usize> = f.iter().map(|&c| field.from_integer(c)).collect();
    let coeffs = poly::trim(&field, coeffs);
    if coeffs.len() < 2 || !poly::is_monic(&field, &coeffs) {
        return Err(Error::InvalidArgument("modulus must be monic of degree at least 1".into()));
    }
    let degree = coeffs.len() - 1;
    if (degree as u32) >= usize::BITS || q.checked_pow(degree as u32).is_none_or(|o| o > VALIDATION_CAP) {
        return Err(Error::InvalidArgument(format!("GF({q})[x]/(f) exceeds order {VALIDATION_CAP}")));
    }
    let ring = FiniteRing::poly_quotient(&field, &coeffs)?;
    let factors = poly::factor(&field, &coeffs)
        .into_iter()
        .map(|(p, k)| {
            let image = ring.poly_element(&p).expect("polynomial quotient");
            (poly::render(&field, &p, "x"), k, image)
        })
        .collect();
    check(&ring, factors)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_cases() {
        let r = dedekind_crosscheck_int(12).unwrap();
        assert_eq!((r.big_omega, r.small_omega, r.index_excess), (3, 2, 1));
        assert_eq!(r.components.iter().map(|c| c.index).collect::<Vec<_>>(), vec![2, 1]);
        let r = dedekind_crosscheck_int(13).unwrap();
        assert_eq!((r.big_omega - r.small_omega, r.index_excess), (0, 0));
        let r = dedekind_crosscheck_int(360).unwrap();
        assert_eq!(r.index_excess, 3);
        assert_eq!(r.big_omega - r.small_omega, 3);
    }

    #[test]
    fn polynomial_cases() {
        let r = dedekind_crosscheck_poly(2, &[0, 0, 1, 1]).unwrap();
        assert_eq!(r.index_excess, 1);
        let parts: Vec<(String, usize)> = r.components.iter().map(|c| (c.factor.clone(), c.index)).collect();
        assert_eq!(parts, vec![("x".to_string(), 2), ("x+1".to_string(), 1)]);
        let r = dedekind_crosscheck_poly(2, &[1, 1, 1]).unwrap();
        assert_eq!(r.index_excess, 0);
        assert_eq!(r.components[0].image_generators, vec!["0"]);
        let r = dedekind_crosscheck_poly(3, &[0, 0, 1]).unwrap();
        assert_eq!(r.index_excess, 1);
        assert!(dedekind_crosscheck_poly(3, &[0, 2]).is_err());
        assert!(dedekind_crosscheck_poly(2, &[1]).is_err());
    }

    #[test]
    fn trial_division() {
        assert_eq!(factor_integer(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factor_integer(97), vec![(97, 1)]);
    }
}
