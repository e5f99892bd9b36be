//! Dense polynomials over a finite field given as a [`FiniteRing`].
//!
//! Coefficients are element indices of the field, lowest degree first. All
//! helpers keep polynomials trimmed (no trailing zero coefficients), so the
//! zero polynomial is the empty vector.

use super::FiniteRing;

pub type Poly = Vec<usize>;

pub fn trim(field: &FiniteRing, mut p: Poly) -> Poly {
    while p.last() == Some(&field.zero()) {
        p.pop();
    }
    p
}

pub fn degree(p: &[usize]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub fn is_monic(field: &FiniteRing, p: &[usize]) -> bool {
    p.last() == Some(&field.one())
}

pub fn add(field: &FiniteRing, a: &[usize], b: &[usize]) -> Poly {
    let len = a.len().max(b.len());
    let z = field.zero();
    let out = (0..len)
        .map(|i| field.add(*a.get(i).unwrap_or(&z), *b.get(i).unwrap_or(&z)))
        .collect();
    trim(field, out)
}

pub fn mul(field: &FiniteRing, a: &[usize], b: &[usize]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == field.zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = field.add(out[i + j], field.mul(x, y));
        }
    }
    trim(field, out)
}

/// Quotient and remainder of `a` by the monic polynomial `m`.
pub fn div_rem_monic(field: &FiniteRing, a: &[usize], m: &[usize]) -> (Poly, Poly) {
    debug_assert!(is_monic(field, m));
    let dm = m.len() - 1;
    let mut rem = trim(field, a.to_vec());
    if rem.len() <= dm {
        return (Vec::new(), rem);
    }
    let mut quot = vec![field.zero(); rem.len() - dm];
    while rem.len() > dm {
        let shift = rem.len() - 1 - dm;
        let lead = *rem.last().unwrap();
        quot[shift] = lead;
        for (j, &c) in m.iter().enumerate() {
            let t = field.mul(lead, c);
            rem[shift + j] = field.sub(rem[shift + j], t);
        }
        rem = trim(field, rem);
    }
    (trim(field, quot), rem)
}

pub fn rem_monic(field: &FiniteRing, a: &[usize], m: &[usize]) -> Poly {
    div_rem_monic(field, a, m).1
}

/// All monic polynomials of the given degree, in ascending order of the
/// coefficient tuple read from degree `degree - 1` down to the constant term.
pub fn monic_polys(field: &FiniteRing, degree: usize) -> impl Iterator<Item = Poly> + '_ {
    let q = field.order();
    let count = q.pow(degree as u32);
    (0..count).map(move |mut code| {
        let mut p = Vec::with_capacity(degree + 1);
        for _ in 0..degree {
            p.push(code % q);
            code /= q;
        }
        p.push(field.one());
        p
    })
}

pub fn is_irreducible(field: &FiniteRing, f: &[usize]) -> bool {
    let Some(d) = degree(f) else { return false };
    if d == 0 {
        return false;
    }
    (1..=d / 2).all(|dg| monic_polys(field, dg).all(|g| !rem_monic(field, f, &g).is_empty()))
}

/// Factors a monic polynomial into monic irreducibles with multiplicities by
/// trial division over monic candidates of ascending degree.
pub fn factor(field: &FiniteRing, f: &[usize]) -> Vec<(Poly, usize)> {
    assert!(is_monic(field, f), "factor expects a monic polynomial");
    let mut rest = f.to_vec();
    let mut out = Vec::new();
    let mut d = 1;
    while 2 * d < rest.len() {
        for g in monic_polys(field, d) {
            let mut mult = 0;
            loop {
                let (quot, rem) = div_rem_monic(field, &rest, &g);
                if !rem.is_empty() {
                    break;
                }
                rest = quot;
                mult += 1;
            }
            if mult > 0 {
                out.push((g, mult));
            }
        }
        d += 1;
    }
    if rest.len() > 1 {
        out.push((rest, 1));
    }
    out
}

/// Sparse rendering in descending degree, e.g. `x^3+x^2` or `2x+1`.
pub fn render(field: &FiniteRing, p: &[usize], var: &str) -> String {
    let mut terms = Vec::new();
    for (i, &c) in p.iter().enumerate().rev() {
        if c == field.zero() {
            continue;
        }
        let mut coef = field.element_name(c);
        if coef.contains(['+', 'x', ',']) {
            coef = format!("({coef})");
        }
        let term = match (i, c == field.one()) {
            (0, _) => coef,
            (1, true) => var.to_string(),
            (1, false) => format!("{coef}{var}"),
            (_, true) => format!("{var}^{i}"),
            (_, false) => format!("{coef}{var}^{i}"),
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2() -> FiniteRing {
        FiniteRing::zmod(2).unwrap()
    }

    #[test]
    fn division_and_factorization() {
        let f2 = gf2();
        // x^3 + x^2 = x^2 (x + 1)
        let f = vec![0, 0, 1, 1];
        assert_eq!(factor(&f2, &f), vec![(vec![0, 1], 2), (vec![1, 1], 1)]);
        let (q, r) = div_rem_monic(&f2, &f, &[1, 1]);
        assert_eq!(q, vec![0, 0, 1]);
        assert!(r.is_empty());
        assert!(is_irreducible(&f2, &[1, 1, 1]));
        assert!(!is_irreducible(&f2, &[1, 0, 1]));
        assert_eq!(factor(&f2, &[1, 0, 1]), vec![(vec![1, 1], 2)]);
    }

    #[test]
    fn irreducible_quartic_is_its_own_factor() {
        let f2 = gf2();
        let f = vec![1, 1, 0, 0, 1];
        assert!(is_irreducible(&f2, &f));
        assert_eq!(factor(&f2, &f), vec![(f, 1)]);
    }

    #[test]
    fn rendering() {
        let f3 = FiniteRing::zmod(3).unwrap();
        assert_eq!(render(&f3, &[1, 2, 0, 1], "x"), "x^3+2x+1");
        assert_eq!(render(&f3, &[], "x"), "0");
        assert_eq!(render(&f3, &[0, 1], "x"), "x");
    }
}
