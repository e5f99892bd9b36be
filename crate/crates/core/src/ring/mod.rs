//! Finite commutative unitary rings under a uniform element-indexed interface.
//!
//! Every ring has elements `0..order`. Structured rings (`Z/n`, polynomial
//! quotients, products) compute their operations from compact encodings and
//! materialize full tables when small enough; table rings are validated
//! exhaustively at construction.

pub mod poly;
mod validate;

use std::fmt;
use std::sync::Arc;

use crate::elements::ElementSet;
use crate::error::{Error, Result};

pub use validate::validate;

/// Rings up to this order get exhaustive axiom checks; larger table rings
/// are rejected.
pub const VALIDATION_CAP: usize = 512;

/// Structured rings at or below this order keep materialized operation tables.
pub const TABLE_THRESHOLD: usize = 4096;

/// Hard upper bound on the order of any constructed ring.
pub const MAX_ORDER: usize = 1 << 20;

#[derive(Clone)]
pub struct FiniteRing(Arc<RingInner>);

struct RingInner {
    order: usize,
    zero: usize,
    one: usize,
    label: String,
    backend: Backend,
    tables: Option<Tables>,
    names: Option<Vec<String>>,
}

struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
}

enum Backend {
    ZMod {
        n: usize,
    },
    /// `base[x] / (modulus)`, elements are base-`q` digit strings of the
    /// residue coefficients, constant term least significant.
    Poly {
        base: FiniteRing,
        modulus: Vec<usize>,
    },
    /// Mixed radix over the factors, first factor most significant.
    Product {
        factors: Vec<FiniteRing>,
    },
    Table,
}

impl FiniteRing {
    /// The residue ring `Z/nZ`.
    pub fn zmod(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSpec(format!(
                "Z/{n} is not a nonzero unitary ring (need n >= 2)"
            )));
        }
        if n > MAX_ORDER {
            return Err(Error::InvalidSpec(format!("Z/{n} exceeds the order cap {MAX_ORDER}")));
        }
        Ok(Self::structured(n, 0, 1, format!("Z/{n}"), Backend::ZMod { n }, None))
    }

    /// The field with `q` elements. Prime fields are `Z/p`; for `q = p^k`
    /// with `k > 1` the field is `GF(p)[x]` modulo the first monic
    /// irreducible of degree `k` in [`poly::monic_polys`] order.
    pub fn gf(q: usize) -> Result<Self> {
        let Some((p, k)) = prime_power(q) else {
            return Err(Error::InvalidSpec(format!("{q} is not a prime power")));
        };
        if q > VALIDATION_CAP {
            return Err(Error::InvalidSpec(format!(
                "GF({q}) exceeds the field construction cap {VALIDATION_CAP}"
            )));
        }
        let prime = Self::zmod(p)?;
        if k == 1 {
            return Ok(prime.relabeled(format!("GF({q})")));
        }
        let modulus = poly::monic_polys(&prime, k)
            .find(|f| poly::is_irreducible(&prime, f))
            .expect("an irreducible polynomial of every degree exists");
        let ring = Self::poly_quotient(&prime, &modulus)?;
        Ok(ring.relabeled(format!("GF({q})")))
    }

    /// `base[x] / (f)` for a field `base` and a monic `f` of degree at least one.
    /// `f` lists coefficients as element indices of `base`, constant term first.
    pub fn poly_quotient(base: &FiniteRing, f: &[usize]) -> Result<Self> {
        if !base.is_field() {
            return Err(Error::InvalidSpec(format!("{} is not a field", base.label())));
        }
        if f.iter().any(|&c| c >= base.order()) {
            return Err(Error::InvalidSpec("coefficient outside the base ring".into()));
        }
        let f = poly::trim(base, f.to_vec());
        if !poly::is_monic(base, &f) {
            return Err(Error::InvalidSpec(format!(
                "modulus {} is not monic",
                poly::render(base, &f, "x")
            )));
        }
        let d = f.len() - 1;
        if d == 0 {
            return Err(Error::InvalidSpec("modulus must have degree at least 1".into()));
        }
        let order = checked_pow(base.order(), d)
            .filter(|&o| o <= MAX_ORDER)
            .ok_or_else(|| Error::InvalidSpec(format!("quotient order exceeds {MAX_ORDER}")))?;
        let label = format!("{}[x]/({})", base.label(), poly::render(base, &f, "x"));
        let mut digits = vec![base.zero(); d];
        let zero = encode_digits(&digits, base.order());
        digits[0] = base.one();
        let one = encode_digits(&digits, base.order());
        let backend = Backend::Poly {
            base: base.clone(),
            modulus: f,
        };
        Ok(Self::structured(order, zero, one, label, backend, None))
    }

    /// The componentwise product ring. A single factor yields a relabeled copy.
    pub fn product(factors: &[FiniteRing]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidSpec("product of zero rings".into()));
        }
        let order = factors
            .iter()
            .try_fold(1usize, |acc, r| acc.checked_mul(r.order()))
            .filter(|&o| o <= MAX_ORDER)
            .ok_or_else(|| Error::InvalidSpec(format!("product order exceeds {MAX_ORDER}")))?;
        let label = factors.iter().map(|r| r.label().to_string()).collect::<Vec<_>>().join(" x ");
        let encode = |pick: &dyn Fn(&FiniteRing) -> usize| {
            factors.iter().fold(0, |acc, r| acc * r.order() + pick(r))
        };
        let zero = encode(&|r| r.zero());
        let one = encode(&|r| r.one());
        let backend = Backend::Product {
            factors: factors.to_vec(),
        };
        Ok(Self::structured(order, zero, one, label, backend, None))
    }

    /// A ring given by explicit operation tables (row-major, `n * n` entries).
    /// The identities and negation are read off the tables and every axiom is
    /// checked exhaustively.
    pub fn from_tables(
        n: usize,
        add: &[usize],
        mul: &[usize],
        names: Option<Vec<String>>,
        label: impl Into<String>,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSpec("a table ring needs at least 2 elements".into()));
        }
        if n > VALIDATION_CAP {
            return Err(Error::InvalidSpec(format!(
                "table ring of order {n} exceeds the validation cap {VALIDATION_CAP}"
            )));
        }
        if add.len() != n * n || mul.len() != n * n {
            return Err(Error::InvalidSpec(format!("tables must have exactly {} entries", n * n)));
        }
        if let Some(bad) = add.iter().chain(mul).find(|&&v| v >= n) {
            return Err(Error::InvalidSpec(format!("table entry {bad} is out of range 0..{n}")));
        }
        if let Some(names) = &names {
            if names.len() != n {
                return Err(Error::InvalidSpec(format!("expected {n} names, got {}", names.len())));
            }
        }
        let zero = (0..n)
            .find(|&e| (0..n).all(|x| add[e * n + x] == x && add[x * n + e] == x))
            .ok_or(Error::AxiomViolation {
                axiom: "additive identity",
                a: 0,
                b: 0,
                c: 0,
            })?;
        let one = (0..n)
            .find(|&e| (0..n).all(|x| mul[e * n + x] == x && mul[x * n + e] == x))
            .ok_or(Error::AxiomViolation {
                axiom: "multiplicative identity",
                a: 0,
                b: 0,
                c: 0,
            })?;
        let mut neg = Vec::with_capacity(n);
        for x in 0..n {
            let y = (0..n).find(|&y| add[x * n + y] == zero).ok_or(Error::AxiomViolation {
                axiom: "additive inverse",
                a: x,
                b: 0,
                c: 0,
            })?;
            neg.push(y as u32);
        }
        let tables = Tables {
            add: add.iter().map(|&v| v as u32).collect(),
            mul: mul.iter().map(|&v| v as u32).collect(),
            neg,
        };
        let ring = FiniteRing(Arc::new(RingInner {
            order: n,
            zero,
            one,
            label: label.into(),
            backend: Backend::Table,
            tables: Some(tables),
            names,
        }));
        validate(&ring)?;
        Ok(ring)
    }

    /// Table ring built from trusted operations (e.g. a quotient of a valid ring).
    pub(crate) fn from_trusted_tables(
        n: usize,
        zero: usize,
        one: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        names: Vec<String>,
        label: String,
    ) -> Self {
        let mut neg = vec![0u32; n];
        for x in 0..n {
            for y in 0..n {
                if add[x * n + y] as usize == zero {
                    neg[x] = y as u32;
                    break;
                }
            }
        }
        FiniteRing(Arc::new(RingInner {
            order: n,
            zero,
            one,
            label,
            backend: Backend::Table,
            tables: Some(Tables { add, mul, neg }),
            names: Some(names),
        }))
    }

    fn structured(
        order: usize,
        zero: usize,
        one: usize,
        label: String,
        backend: Backend,
        names: Option<Vec<String>>,
    ) -> Self {
        let mut inner = RingInner {
            order,
            zero,
            one,
            label,
            backend,
            tables: None,
            names,
        };
        if order <= TABLE_THRESHOLD {
            let n = order;
            let mut add = Vec::with_capacity(n * n);
            let mut mul = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    add.push(inner.backend_add(a, b) as u32);
                    mul.push(inner.backend_mul(a, b) as u32);
                }
            }
            let neg = (0..n).map(|a| inner.backend_neg(a) as u32).collect();
            inner.tables = Some(Tables { add, mul, neg });
        }
        FiniteRing(Arc::new(inner))
    }

    fn relabeled(&self, label: String) -> Self {
        let inner = &self.0;
        let backend = match &inner.backend {
            Backend::ZMod { n } => Backend::ZMod { n: *n },
            Backend::Poly { base, modulus } => Backend::Poly {
                base: base.clone(),
                modulus: modulus.clone(),
            },
            Backend::Product { factors } => Backend::Product {
                factors: factors.clone(),
            },
            Backend::Table => {
                let t = inner.tables.as_ref().unwrap();
                return FiniteRing(Arc::new(RingInner {
                    order: inner.order,
                    zero: inner.zero,
                    one: inner.one,
                    label,
                    backend: Backend::Table,
                    tables: Some(Tables {
                        add: t.add.clone(),
                        mul: t.mul.clone(),
                        neg: t.neg.clone(),
                    }),
                    names: inner.names.clone(),
                }));
            }
        };
        Self::structured(inner.order, inner.zero, inner.one, label, backend, inner.names.clone())
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn zero(&self) -> usize {
        self.0.zero
    }

    pub fn one(&self) -> usize {
        self.0.one
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    /// True when both handles refer to the same constructed ring.
    pub fn same_ring(&self, other: &FiniteRing) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        match &self.0.tables {
            Some(t) => t.add[a * self.0.order + b] as usize,
            None => self.0.backend_add(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.0.tables {
            Some(t) => t.mul[a * self.0.order + b] as usize,
            None => self.0.backend_mul(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        match &self.0.tables {
            Some(t) => t.neg[a] as usize,
            None => self.0.backend_neg(a),
        }
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// The image of the integer `c` under `Z -> R`.
    pub fn from_integer(&self, c: u64) -> usize {
        // double-and-add on the additive group
        let mut acc = self.zero();
        let mut base = self.one();
        let mut c = c;
        while c > 0 {
            if c & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            c >>= 1;
        }
        acc
    }

    pub fn mul_power(&self, x: usize, mut k: u64) -> usize {
        let mut acc = self.one();
        let mut base = x;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn inverse(&self, x: usize) -> Option<usize> {
        (0..self.order()).find(|&y| self.mul(x, y) == self.one())
    }

    pub fn units(&self) -> ElementSet {
        let n = self.order();
        let one = self.one();
        let mut set = ElementSet::empty(n);
        for x in 0..n {
            if set.contains(x) {
                continue;
            }
            if let Some(y) = (0..n).find(|&y| self.mul(x, y) == one) {
                set.insert(x);
                set.insert(y);
            }
        }
        set
    }

    pub fn idempotents(&self) -> ElementSet {
        ElementSet::from_indices(self.order(), (0..self.order()).filter(|&e| self.mul(e, e) == e))
    }

    pub fn is_field(&self) -> bool {
        self.units().len() == self.order() - 1
    }

    pub fn element_name(&self, i: usize) -> String {
        if let Some(names) = &self.0.names {
            return names[i].clone();
        }
        match &self.0.backend {
            Backend::ZMod { .. } | Backend::Table => i.to_string(),
            Backend::Poly { base, modulus } => {
                let digits = decode_digits(i, base.order(), modulus.len() - 1);
                poly::render(base, &poly::trim(base, digits), "x")
            }
            Backend::Product { factors } => {
                let parts = decode_mixed(i, factors);
                let names: Vec<String> =
                    factors.iter().zip(parts).map(|(r, e)| r.element_name(e)).collect();
                format!("({})", names.join(","))
            }
        }
    }

    /// Looks up an element by its rendered name.
    pub fn element_by_name(&self, name: &str) -> Option<usize> {
        let wanted: String = name.chars().filter(|c| !c.is_whitespace()).collect();
        (0..self.order()).find(|&i| self.element_name(i) == wanted)
    }

    /// Row-major addition table.
    pub fn add_table(&self) -> Vec<usize> {
        let n = self.order();
        (0..n * n).map(|k| self.add(k / n, k % n)).collect()
    }

    /// Row-major multiplication table.
    pub fn mul_table(&self) -> Vec<usize> {
        let n = self.order();
        (0..n * n).map(|k| self.mul(k / n, k % n)).collect()
    }

    /// The residue class of a polynomial (base-ring coefficients, constant
    /// term first) in a polynomial quotient ring; `None` for other backends.
    pub fn poly_element(&self, coeffs: &[usize]) -> Option<usize> {
        match &self.0.backend {
            Backend::Poly { base, modulus } => {
                let p = poly::trim(base, coeffs.to_vec());
                let mut r = poly::rem_monic(base, &p, modulus);
                r.resize(modulus.len() - 1, base.zero());
                Some(encode_digits(&r, base.order()))
            }
            _ => None,
        }
    }

    /// Base field and modulus of a polynomial quotient ring.
    pub fn poly_parts(&self) -> Option<(&FiniteRing, &[usize])> {
        match &self.0.backend {
            Backend::Poly { base, modulus } => Some((base, modulus)),
            _ => None,
        }
    }

    /// Factors of a product ring, or `None` for other backends.
    pub fn product_factors(&self) -> Option<&[FiniteRing]> {
        match &self.0.backend {
            Backend::Product { factors } => Some(factors),
            _ => None,
        }
    }
}

impl RingInner {
    fn backend_add(&self, a: usize, b: usize) -> usize {
        match &self.backend {
            Backend::ZMod { n } => (a + b) % n,
            Backend::Poly { base, modulus } => {
                let (q, d) = (base.order(), modulus.len() - 1);
                let da = decode_digits(a, q, d);
                let db = decode_digits(b, q, d);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(&x, &y)| base.add(x, y)).collect();
                encode_digits(&sum, q)
            }
            Backend::Product { factors } => {
                let pa = decode_mixed(a, factors);
                let pb = decode_mixed(b, factors);
                encode_mixed(factors.iter().zip(pa.iter().zip(&pb)).map(|(r, (&x, &y))| r.add(x, y)), factors)
            }
            Backend::Table => unreachable!("table rings always carry tables"),
        }
    }

    fn backend_mul(&self, a: usize, b: usize) -> usize {
        match &self.backend {
            Backend::ZMod { n } => ((a as u64 * b as u64) % *n as u64) as usize,
            Backend::Poly { base, modulus } => {
                let (q, d) = (base.order(), modulus.len() - 1);
                let pa = poly::trim(base, decode_digits(a, q, d));
                let pb = poly::trim(base, decode_digits(b, q, d));
                let prod = poly::rem_monic(base, &poly::mul(base, &pa, &pb), modulus);
                encode_digits(&prod, q)
            }
            Backend::Product { factors } => {
                let pa = decode_mixed(a, factors);
                let pb = decode_mixed(b, factors);
                encode_mixed(factors.iter().zip(pa.iter().zip(&pb)).map(|(r, (&x, &y))| r.mul(x, y)), factors)
            }
            Backend::Table => unreachable!("table rings always carry tables"),
        }
    }

    fn backend_neg(&self, a: usize) -> usize {
        match &self.backend {
            Backend::ZMod { n } => (n - a) % n,
            Backend::Poly { base, modulus } => {
                let (q, d) = (base.order(), modulus.len() - 1);
                let digits: Vec<usize> = decode_digits(a, q, d).into_iter().map(|c| base.neg(c)).collect();
                encode_digits(&digits, q)
            }
            Backend::Product { factors } => {
                let parts = decode_mixed(a, factors);
                encode_mixed(factors.iter().zip(parts).map(|(r, x)| r.neg(x)), factors)
            }
            Backend::Table => unreachable!("table rings always carry tables"),
        }
    }
}

fn decode_digits(mut code: usize, q: usize, len: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(code % q);
        code /= q;
    }
    out
}

fn encode_digits(digits: &[usize], q: usize) -> usize {
    digits.iter().rev().fold(0, |acc, &c| acc * q + c)
}

fn decode_mixed(mut code: usize, factors: &[FiniteRing]) -> Vec<usize> {
    let mut out = vec![0; factors.len()];
    for (slot, r) in out.iter_mut().zip(factors).rev() {
        *slot = code % r.order();
        code /= r.order();
    }
    out
}

fn encode_mixed(parts: impl Iterator<Item = usize>, factors: &[FiniteRing]) -> usize {
    parts.zip(factors).fold(0, |acc, (x, r)| acc * r.order() + x)
}

fn checked_pow(base: usize, exp: usize) -> Option<usize> {
    (0..exp).try_fold(1usize, |acc, _| acc.checked_mul(base))
}

/// Splits `q = p^k` with `p` prime, `k >= 1`.
pub fn prime_power(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..).find(|d| q.is_multiple_of(*d) || d * d > q).map(|d| if q.is_multiple_of(d) { d } else { q })?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteRing({}, order {})", self.label(), self.order())
    }
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(r: &FiniteRing, set: &ElementSet) -> Vec<String> {
        set.iter().map(|i| r.element_name(i)).collect()
    }

    #[test]
    fn zmod_basics() {
        let z2 = FiniteRing::zmod(2).unwrap();
        assert_eq!(z2.add(1, 1), 0);
        let z12 = FiniteRing::zmod(12).unwrap();
        assert_eq!(z12.order(), 12);
        assert_eq!(z12.mul(4, 4), 4);
        assert_eq!(z12.mul(9, 9), 9);
        assert!(matches!(FiniteRing::zmod(1), Err(Error::InvalidSpec(_))));
        assert_eq!(z12.units().to_vec(), vec![1, 5, 7, 11]);
        assert_eq!(z12.idempotents().to_vec(), vec![0, 1, 4, 9]);
        assert_eq!(z12.inverse(5), Some(5));
        assert_eq!(z12.inverse(4), None);
        assert_eq!(z12.mul_power(5, 0), 1);
        assert_eq!(z12.from_integer(26), 2);
    }

    #[test]
    fn galois_fields() {
        let f5 = FiniteRing::gf(5).unwrap();
        assert!(f5.is_field());
        assert_eq!(f5.label(), "GF(5)");
        let f4 = FiniteRing::gf(4).unwrap();
        assert_eq!(f4.order(), 4);
        // every nonzero element has an inverse, found by table scan
        for x in 1..4 {
            let y = (0..4).find(|&y| f4.mul(x, y) == f4.one());
            assert!(y.is_some(), "{x} has no inverse");
        }
        let x = f4.element_by_name("x").unwrap();
        assert_eq!(f4.mul_power(x, 3), f4.one());
        assert_ne!(f4.mul(x, x), f4.one());
        assert!(matches!(FiniteRing::gf(6), Err(Error::InvalidSpec(_))));
        assert!(FiniteRing::gf(8).unwrap().is_field());
        assert!(FiniteRing::gf(9).unwrap().is_field());
        assert_eq!(FiniteRing::gf(4).unwrap().units().len(), 3);
    }

    #[test]
    fn polynomial_quotients() {
        let f2 = FiniteRing::gf(2).unwrap();
        let r = FiniteRing::poly_quotient(&f2, &[0, 0, 1]).unwrap();
        assert_eq!(r.order(), 4);
        assert_eq!(r.label(), "GF(2)[x]/(x^2)");
        let one_plus_x = r.element_by_name("x+1").unwrap();
        assert_eq!(r.mul(one_plus_x, one_plus_x), r.one());
        assert_eq!(names(&r, &r.units()), vec!["1", "x+1"]);

        let s = FiniteRing::poly_quotient(&f2, &[0, 1, 1]).unwrap();
        assert_eq!(names(&s, &s.idempotents()), vec!["0", "1", "x", "x+1"]);

        let f3 = FiniteRing::gf(3).unwrap();
        let t = FiniteRing::poly_quotient(&f3, &[0, 0, 0, 1]).unwrap();
        assert_eq!(t.order(), 27);
        // the nonunits are exactly the multiples of x
        let x = t.element_by_name("x").unwrap();
        let multiples = ElementSet::from_indices(27, (0..27).map(|a| t.mul(a, x)));
        assert_eq!(t.units().complement(), multiples);

        assert!(FiniteRing::poly_quotient(&FiniteRing::zmod(4).unwrap(), &[0, 1]).is_err());
        assert!(FiniteRing::poly_quotient(&f3, &[0, 0, 2]).is_err());
        assert!(FiniteRing::poly_quotient(&f3, &[1]).is_err());
    }

    #[test]
    fn products() {
        let z4 = FiniteRing::zmod(4).unwrap();
        let f3 = FiniteRing::gf(3).unwrap();
        let p = FiniteRing::product(&[z4.clone(), f3.clone()]).unwrap();
        assert_eq!(p.order(), 12);
        assert_eq!(p.label(), "Z/4 x GF(3)");
        assert_eq!(p.element_name(p.one()), "(1,1)");
        assert_eq!(p.units().len(), z4.units().len() * f3.units().len());
        let single = FiniteRing::product(std::slice::from_ref(&z4)).unwrap();
        assert_eq!(single.mul_table(), z4.mul_table());
        assert_eq!(single.element_name(3), "(3)");
        assert!(FiniteRing::product(&[]).is_err());
    }

    #[test]
    fn table_rings_are_validated() {
        let z3 = FiniteRing::zmod(3).unwrap();
        let r = FiniteRing::from_tables(3, &z3.add_table(), &z3.mul_table(), None, "t").unwrap();
        assert_eq!(r.units().len(), 2);
        // break associativity of multiplication
        let mut bad = z3.mul_table();
        bad[2 * 3 + 2] = 2;
        match FiniteRing::from_tables(3, &z3.add_table(), &bad, None, "bad") {
            Err(Error::AxiomViolation { .. }) => {}
            other => panic!("expected axiom violation, got {other:?}"),
        }
        assert!(FiniteRing::from_tables(3, &[0; 4], &[0; 9], None, "short").is_err());
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }
}
