use super::{FiniteRing, VALIDATION_CAP};
use crate::error::{Error, Result};

/// Exhaustive check of the commutative unitary ring axioms.
///
/// Rings above [`VALIDATION_CAP`] are only checked for the identities and
/// inverses; the cubic associativity and distributivity sweeps are skipped.
pub fn validate(ring: &FiniteRing) -> Result<()> {
    let n = ring.order();
    let (zero, one) = (ring.zero(), ring.one());
    let fail = |axiom, a, b, c| Err(Error::AxiomViolation { axiom, a, b, c });

    if zero == one {
        return fail("1 != 0", zero, one, 0);
    }
    for a in 0..n {
        if ring.add(a, zero) != a {
            return fail("additive identity", a, zero, 0);
        }
        if ring.mul(a, one) != a {
            return fail("multiplicative identity", a, one, 0);
        }
        if ring.add(a, ring.neg(a)) != zero {
            return fail("additive inverse", a, ring.neg(a), 0);
        }
    }
    if n > VALIDATION_CAP {
        return Ok(());
    }
    for a in 0..n {
        for b in 0..n {
            if ring.add(a, b) != ring.add(b, a) {
                return fail("additive commutativity", a, b, 0);
            }
            if ring.mul(a, b) != ring.mul(b, a) {
                return fail("multiplicative commutativity", a, b, 0);
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab_add = ring.add(a, b);
            let ab_mul = ring.mul(a, b);
            for c in 0..n {
                if ring.add(ab_add, c) != ring.add(a, ring.add(b, c)) {
                    return fail("additive associativity", a, b, c);
                }
                if ring.mul(ab_mul, c) != ring.mul(a, ring.mul(b, c)) {
                    return fail("multiplicative associativity", a, b, c);
                }
                if ring.mul(a, ring.add(b, c)) != ring.add(ab_mul, ring.mul(a, c)) {
                    return fail("distributivity", a, b, c);
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structured_rings_pass() {
        let f2 = FiniteRing::gf(2).unwrap();
        let rings = [
            FiniteRing::zmod(12).unwrap(),
            FiniteRing::gf(8).unwrap(),
            FiniteRing::gf(9).unwrap(),
            FiniteRing::poly_quotient(&f2, &[0, 0, 1, 1]).unwrap(),
            FiniteRing::product(&[FiniteRing::zmod(4).unwrap(), FiniteRing::gf(3).unwrap()]).unwrap(),
        ];
        for r in &rings {
            validate(r).unwrap_or_else(|e| panic!("{r}: {e}"));
        }
    }
}
