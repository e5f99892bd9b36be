//! Brute-force oracles shared by the integration tests. None of these use
//! the product-set search engine: they enumerate index subsets directly.

#![allow(dead_code)]

use ebring::ring::FiniteRing;

/// Products of all nonempty index subsets of `terms`.
pub fn subset_products(terms: &[usize], op: impl Fn(usize, usize) -> usize) -> Vec<usize> {
    assert!(terms.len() <= 20);
    let mut out = Vec::new();
    for mask in 1u32..(1 << terms.len()) {
        let mut acc: Option<usize> = None;
        for (i, &t) in terms.iter().enumerate() {
            if mask >> i & 1 == 1 {
                acc = Some(match acc {
                    None => t,
                    Some(a) => op(a, t),
                });
            }
        }
        out.push(acc.unwrap());
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn longest_avoiding(
    elements: &[usize],
    op: &dyn Fn(usize, usize) -> usize,
    bad: &dyn Fn(usize) -> bool,
) -> usize {
    // Nondecreasing DFS; each new term is checked against every subset that
    // contains it, by explicit enumeration over the prefix.
    fn go(
        prefix: &mut Vec<usize>,
        start: usize,
        elements: &[usize],
        op: &dyn Fn(usize, usize) -> usize,
        bad: &dyn Fn(usize) -> bool,
    ) -> usize {
        let mut best = prefix.len();
        for (i, &a) in elements.iter().enumerate().skip(start) {
            if bad(a) {
                continue;
            }
            let ok = (0u32..(1 << prefix.len())).all(|mask| {
                let mut acc = a;
                for (j, &t) in prefix.iter().enumerate() {
                    if mask >> j & 1 == 1 {
                        acc = op(acc, t);
                    }
                }
                !bad(acc)
            });
            if ok {
                prefix.push(a);
                best = best.max(go(prefix, i, elements, op, bad));
                prefix.pop();
            }
        }
        best
    }
    go(&mut Vec::new(), 0, elements, op, bad)
}

/// `I(S_R)` by brute force over the ring's multiplication table.
pub fn brute_force_eb(ring: &FiniteRing) -> usize {
    let n = ring.order();
    let idempotent: Vec<bool> = (0..n).map(|e| ring.mul(e, e) == e).collect();
    let elements: Vec<usize> = (0..n).collect();
    1 + longest_avoiding(&elements, &|a, b| ring.mul(a, b), &|x| idempotent[x])
}

/// `D(Z_{d_1} x ... x Z_{d_k})` by brute force on tuples.
pub fn brute_force_davenport(moduli: &[usize]) -> usize {
    let order: usize = moduli.iter().product();
    let decode = |mut c: usize| {
        let mut v = vec![0; moduli.len()];
        for (slot, &d) in v.iter_mut().zip(moduli).rev() {
            *slot = c % d;
            c /= d;
        }
        v
    };
    let encode = |v: &[usize]| v.iter().zip(moduli).fold(0, |acc, (&x, &d)| acc * d + x);
    let add = |a: usize, b: usize| {
        let s: Vec<usize> = decode(a).iter().zip(decode(b)).zip(moduli).map(|((x, y), d)| (x + y) % d).collect();
        encode(&s)
    };
    let elements: Vec<usize> = (0..order).collect();
    1 + longest_avoiding(&elements, &add, &|x| x == 0)
}

/// `(Ω(n), ω(n))` by trial division.
pub fn omega_counts(mut n: u64) -> (usize, usize) {
    let (mut big, mut small) = (0, 0);
    let mut p = 2;
    while n > 1 {
        if n.is_multiple_of(p) {
            small += 1;
            while n.is_multiple_of(p) {
                n /= p;
                big += 1;
            }
        }
        p += 1;
    }
    (big, small)
}

/// The acceptance ring family.
pub fn family() -> Vec<FiniteRing> {
    let f3 = FiniteRing::gf(3).unwrap();
    let mut rings: Vec<FiniteRing> = (2..=16).map(|n| FiniteRing::zmod(n).unwrap()).collect();
    rings.extend([2, 3, 4, 5, 7, 8, 9].map(|q| FiniteRing::gf(q).unwrap()));
    rings.extend(polynomial_family());
    rings.push(FiniteRing::product(&[FiniteRing::zmod(4).unwrap(), f3]).unwrap());
    rings
}

pub fn polynomial_family() -> Vec<FiniteRing> {
    let f2 = FiniteRing::gf(2).unwrap();
    let f3 = FiniteRing::gf(3).unwrap();
    vec![
        FiniteRing::poly_quotient(&f2, &[0, 0, 1]).unwrap(),
        FiniteRing::poly_quotient(&f2, &[0, 0, 0, 1]).unwrap(),
        FiniteRing::poly_quotient(&f2, &[0, 1, 1]).unwrap(),
        FiniteRing::poly_quotient(&f2, &[0, 0, 1, 1]).unwrap(),
        FiniteRing::poly_quotient(&f3, &[0, 0, 1]).unwrap(),
    ]
}
